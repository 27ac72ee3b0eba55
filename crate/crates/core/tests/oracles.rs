//! Counting formulas checked against explicit generation, plus structural
//! invariants of generated trees.

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tipcount::counting::TreeCounter;
use tipcount::treegen::{
    parse, parse_unrooted, serialize, Centroid, Enumerator, RootedTree, UnrootedTree,
};

fn shuffled_text(t: &RootedTree, rng: &mut impl Rng) -> String {
    if t.is_leaf() {
        return "*".into();
    }
    let mut kids: Vec<String> = t.children().iter().map(|c| shuffled_text(c, rng)).collect();
    kids.shuffle(rng);
    format!("({})", kids.concat())
}

fn shuffled_tree(t: &UnrootedTree, rng: &mut impl Rng) -> (UnrootedTree, Vec<usize>) {
    let mut perm: Vec<usize> = (0..t.vertex_count()).collect();
    perm.shuffle(rng);
    let mut order: Vec<usize> = (0..t.edges().len()).collect();
    order.shuffle(rng);
    (t.relabel(&perm, &order).unwrap(), perm)
}

#[test]
fn generation_matches_counts_up_to_ten() {
    let mut e = Enumerator::default();
    let mut c = TreeCounter::new();
    for n in 1..=10 {
        let rooted = e.rooted(n).unwrap().len();
        assert_eq!(
            BigUint::from(rooted),
            c.rooted(n).unwrap(),
            "rooted n = {n}"
        );
        let unrooted = e.unrooted(n).unwrap();
        assert_eq!(
            BigUint::from(unrooted.len()),
            c.unrooted_exact(n).unwrap(),
            "unrooted n = {n}"
        );
    }
}

#[test]
fn centroid_split_matches_counting_terms() {
    let mut e = Enumerator::default();
    let mut c = TreeCounter::new();
    for n in 2..=8 {
        let trees = e.unrooted(n).unwrap();
        let vertex = trees
            .iter()
            .filter(|t| matches!(t.leaf_centroid().unwrap(), Centroid::Vertex(_)))
            .count();
        let edge = trees.len() - vertex;
        assert_eq!(
            BigUint::from(vertex),
            c.vertex_centroid(n).unwrap(),
            "n = {n}"
        );
        assert_eq!(BigUint::from(edge), c.edge_centroid(n).unwrap(), "n = {n}");
    }
}

#[test]
fn generated_unrooted_trees_are_series_reduced() {
    let mut e = Enumerator::default();
    for n in 1..=9 {
        for t in e.unrooted(n).unwrap() {
            assert_eq!(t.tip_count(), n);
            assert!((0..t.vertex_count()).all(|v| t.degree(v) != 2));
            assert_eq!(t.edges().len() + 1, t.vertex_count());
            if n >= 2 {
                let cand = t.centroid_candidates();
                assert_eq!(cand.vertices.len() + cand.edges.len(), 1, "{cand:?}");
            }
        }
    }
}

#[test]
fn rooted_codes_survive_child_shuffles() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut e = Enumerator::default();
    for n in 1..=8 {
        let trees = e.rooted(n).unwrap().to_vec();
        for _ in 0..500 {
            let t = trees.choose(&mut rng).unwrap();
            let text = shuffled_text(t, &mut rng);
            assert_eq!(
                parse(&text).unwrap().canonical_code(),
                t.canonical_code(),
                "{text}"
            );
        }
    }
}

#[test]
fn unrooted_codes_and_centroids_survive_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut e = Enumerator::default();
    for n in 2..=8 {
        let trees = e.unrooted(n).unwrap();
        for _ in 0..500 {
            let t = trees.choose(&mut rng).unwrap();
            let (s, perm) = shuffled_tree(t, &mut rng);
            assert_eq!(s.canonical_code(), t.canonical_code());
            let expected = match t.leaf_centroid().unwrap() {
                Centroid::Vertex(v) => Centroid::Vertex(perm[v]),
                Centroid::Edge(u, v) => {
                    let (a, b) = (perm[u], perm[v]);
                    Centroid::Edge(a.min(b), a.max(b))
                }
            };
            assert_eq!(s.leaf_centroid().unwrap(), expected);
        }
    }
}

#[test]
fn text_round_trips_for_generated_trees() {
    let mut e = Enumerator::default();
    for n in 1..=8 {
        for t in e.rooted(n).unwrap() {
            let text = serialize(t);
            assert_eq!(serialize(&parse(&text).unwrap()), text);
        }
        for t in e.unrooted(n).unwrap() {
            let text = t.canonical_code().into_string();
            assert_eq!(
                parse_unrooted(&text).unwrap().canonical_code().as_str(),
                text
            );
        }
    }
}

fn arb_rooted() -> impl Strategy<Value = RootedTree> {
    let leaf = Just(RootedTree::leaf());
    leaf.prop_recursive(4, 40, 4, |inner| {
        prop::collection::vec(inner, 2..=4).prop_map(|kids| RootedTree::node(kids).unwrap())
    })
}

proptest! {
    #[test]
    fn code_length_counts_nodes(t in arb_rooted()) {
        prop_assert_eq!(t.canonical_code().len(), 2 * t.internal_count() + t.leaf_count());
    }

    #[test]
    fn parse_serialize_is_canonical(t in arb_rooted(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let text = shuffled_text(&t, &mut rng);
        let back = parse(&text).unwrap();
        prop_assert_eq!(serialize(&back), serialize(&t));
    }

    #[test]
    fn unrooted_view_keeps_tips(t in arb_rooted()) {
        let u = UnrootedTree::from_rooted(&t);
        prop_assert_eq!(u.tip_count(), t.leaf_count());
        prop_assert!((0..u.vertex_count()).all(|v| u.degree(v) != 2));
        if t.leaf_count() >= 2 {
            prop_assert!(u.leaf_centroid().is_ok());
        }
    }
}
