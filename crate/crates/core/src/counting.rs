//! Memoized counts of series-reduced trees by number of tips.
//!
//! Four tables are kept:
//!
//! * `T(n)`: rooted trees with `n` leaves where every internal vertex,
//!   the root included, has at least two children.
//! * `P(n)`: the vertex-pointed sum over partitions of `n` into at least three
//!   parts, with no restriction on the largest part.
//! * `Q(n) = C(T(n) + 1, 2)`: unordered pairs of rooted trees with `n` leaves
//!   each, joined by an edge.
//! * `u(n)`: the exact number of homeomorphism classes of trees with `n`
//!   tips. Each class is pointed at its leaf-centroid, so the vertex term
//!   only admits partitions whose parts are all below `n / 2` and balanced
//!   splits go to the edge term.
//!
//! `P` and `Q` summed up to `n = 17` (with `Q` up to 8) give 3901520. That
//! total counts some trees twice, e.g. the four-tip "H" tree appears both in
//! `P(4)` via `{2, 1, 1}` and in `Q(2)`; [`overcount_audit`] shows where.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::partitions::{conv_part, multiset_coefficient, partitions_of, Partition};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountKind {
    Rooted,
    VertexPointed,
    EdgePair,
    UnrootedExact,
}

impl CountKind {
    pub const ALL: [CountKind; 4] = [
        CountKind::Rooted,
        CountKind::VertexPointed,
        CountKind::EdgePair,
        CountKind::UnrootedExact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountKind::Rooted => "rooted",
            CountKind::VertexPointed => "vertex-pointed",
            CountKind::EdgePair => "edge-pair",
            CountKind::UnrootedExact => "unrooted-exact",
        }
    }
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CountKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CountKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                format!("unknown count kind {s:?}; expected rooted, vertex-pointed, edge-pair or unrooted-exact")
            })
    }
}

/// Append-only memo table from tip count to count.
#[derive(Debug, Clone)]
pub struct CountTable {
    kind: CountKind,
    values: BTreeMap<usize, BigUint>,
}

impl CountTable {
    pub fn new(kind: CountKind) -> Self {
        CountTable {
            kind,
            values: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> CountKind {
        self.kind
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.values.get(&n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.values.iter().map(|(&n, v)| (n, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn insert(&mut self, n: usize, value: BigUint) -> &BigUint {
        self.values.entry(n).or_insert(value)
    }
}

/// Holds the memo tables. All methods fill in missing entries on demand and
/// never modify an entry once stored.
#[derive(Debug, Clone)]
pub struct TreeCounter {
    rooted: CountTable,
    vertex_pointed: CountTable,
    edge_pair: CountTable,
    unrooted: CountTable,
}

impl Default for TreeCounter {
    fn default() -> Self {
        Self::new()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::domain("n", 1, 0))
    } else {
        Ok(())
    }
}

impl TreeCounter {
    pub fn new() -> Self {
        TreeCounter {
            rooted: CountTable::new(CountKind::Rooted),
            vertex_pointed: CountTable::new(CountKind::VertexPointed),
            edge_pair: CountTable::new(CountKind::EdgePair),
            unrooted: CountTable::new(CountKind::UnrootedExact),
        }
    }

    pub fn table(&self, kind: CountKind) -> &CountTable {
        match kind {
            CountKind::Rooted => &self.rooted,
            CountKind::VertexPointed => &self.vertex_pointed,
            CountKind::EdgePair => &self.edge_pair,
            CountKind::UnrootedExact => &self.unrooted,
        }
    }

    pub fn count(&mut self, kind: CountKind, n: usize) -> Result<BigUint> {
        match kind {
            CountKind::Rooted => self.rooted(n),
            CountKind::VertexPointed => self.vertex_pointed(n),
            CountKind::EdgePair => self.edge_pair(n),
            CountKind::UnrootedExact => self.unrooted_exact(n),
        }
    }

    /// `T(n)`.
    pub fn rooted(&mut self, n: usize) -> Result<BigUint> {
        check_n(n)?;
        self.fill_rooted(n);
        Ok(self.rooted.get(n).cloned().expect("filled"))
    }

    fn fill_rooted(&mut self, n: usize) {
        for k in 1..=n {
            if self.rooted.get(k).is_some() {
                continue;
            }
            let value = if k <= 2 {
                BigUint::one()
            } else {
                self.partition_sum(k, |p| p.len() >= 2)
            };
            self.rooted.insert(k, value);
        }
    }

    /// Sum over the partitions of `n` accepted by `keep` of the product of
    /// `C(T(part) + mult - 1, mult)`. Requires `T` filled below `n`.
    fn partition_sum(&self, n: usize, keep: impl Fn(&Partition) -> bool) -> BigUint {
        let mut total = BigUint::zero();
        for p in partitions_of(n).expect("n >= 1").filter(|p| keep(p)) {
            total += self.partition_weight(&p);
        }
        total
    }

    fn partition_weight(&self, p: &Partition) -> BigUint {
        conv_part(p)
            .entries()
            .iter()
            .map(|&(part, mult)| {
                let t = self
                    .rooted
                    .get(part)
                    .expect("T filled for every proper part");
                multiset_coefficient(t, mult)
            })
            .product()
    }

    /// `P(n)`: partitions into at least three parts, largest part unrestricted.
    pub fn vertex_pointed(&mut self, n: usize) -> Result<BigUint> {
        check_n(n)?;
        if let Some(v) = self.vertex_pointed.get(n) {
            return Ok(v.clone());
        }
        let value = if n == 1 {
            BigUint::one()
        } else {
            self.fill_rooted(n - 1);
            self.partition_sum(n, |p| p.len() >= 3)
        };
        Ok(self.vertex_pointed.insert(n, value).clone())
    }

    /// `Q(n) = C(T(n) + 1, 2)`.
    pub fn edge_pair(&mut self, n: usize) -> Result<BigUint> {
        check_n(n)?;
        if let Some(v) = self.edge_pair.get(n) {
            return Ok(v.clone());
        }
        let t = self.rooted(n)?;
        let value = multiset_coefficient(&t, 2);
        Ok(self.edge_pair.insert(n, value).clone())
    }

    /// Trees with `n` tips whose leaf-centroid is a vertex. For `n = 1` this is
    /// the one-vertex tree.
    pub fn vertex_centroid(&mut self, n: usize) -> Result<BigUint> {
        check_n(n)?;
        if n == 1 {
            return Ok(BigUint::one());
        }
        // every branch at the centroid carries fewer than n / 2 leaves
        let max_part = n.div_ceil(2) - 1;
        if max_part == 0 {
            return Ok(BigUint::zero());
        }
        self.fill_rooted(max_part);
        Ok(self.partition_sum(n, |p| p.len() >= 3 && p.largest_part() <= max_part))
    }

    /// Trees with `n` tips whose leaf-centroid is an edge.
    pub fn edge_centroid(&mut self, n: usize) -> Result<BigUint> {
        check_n(n)?;
        if n.is_multiple_of(2) {
            self.edge_pair(n / 2)
        } else {
            Ok(BigUint::zero())
        }
    }

    /// `u(n)`: homeomorphism classes of trees with `n` tips.
    pub fn unrooted_exact(&mut self, n: usize) -> Result<BigUint> {
        check_n(n)?;
        if let Some(v) = self.unrooted.get(n) {
            return Ok(v.clone());
        }
        let value = self.vertex_centroid(n)? + self.edge_centroid(n)?;
        Ok(self.unrooted.insert(n, value).clone())
    }

    pub fn paper_total(&mut self, max_tips: usize) -> Result<PaperTotal> {
        check_n(max_tips)?;
        let mut s = BigUint::zero();
        for i in 1..=max_tips {
            s += self.vertex_pointed(i)?;
        }
        let mut s1 = s.clone();
        for i in 1..=max_tips / 2 {
            s1 += self.edge_pair(i)?;
        }
        Ok(PaperTotal { s, s1 })
    }

    pub fn homeomorphism_classes_upto(&mut self, max_tips: usize) -> Result<BigUint> {
        check_n(max_tips)?;
        let mut total = BigUint::zero();
        for n in 1..=max_tips {
            total += self.unrooted_exact(n)?;
        }
        Ok(total)
    }
}

/// `S = P(1) + ... + P(max)` and `S1 = S + Q(1) + ... + Q(max / 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperTotal {
    pub s: BigUint,
    pub s1: BigUint,
}

/// One line of the comparison between the vertex-pointed sum and the exact count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OvercountRow {
    pub n: usize,
    pub vertex_pointed: BigUint,
    pub vertex_centroid: BigUint,
    pub edge_centroid: BigUint,
    pub unrooted_exact: BigUint,
    /// `P(n) - vertex_centroid(n)`: trees counted by `P(n)` whose centroid is
    /// not the pointed vertex.
    pub difference: BigUint,
}

pub fn overcount_audit(max_tips: usize) -> Result<Vec<OvercountRow>> {
    check_n(max_tips)?;
    let mut counter = TreeCounter::new();
    (1..=max_tips)
        .map(|n| {
            let vertex_pointed = counter.vertex_pointed(n)?;
            let vertex_centroid = counter.vertex_centroid(n)?;
            let edge_centroid = counter.edge_centroid(n)?;
            let unrooted_exact = counter.unrooted_exact(n)?;
            let difference = &vertex_pointed - &vertex_centroid;
            Ok(OvercountRow {
                n,
                vertex_pointed,
                vertex_centroid,
                edge_centroid,
                unrooted_exact,
                difference,
            })
        })
        .collect()
}

pub fn count_rooted(n: usize) -> Result<BigUint> {
    TreeCounter::new().rooted(n)
}

pub fn count_vertex_pointed_paper(n: usize) -> Result<BigUint> {
    TreeCounter::new().vertex_pointed(n)
}

pub fn count_edge_pair(n: usize) -> Result<BigUint> {
    TreeCounter::new().edge_pair(n)
}

pub fn count_unrooted_exact(n: usize) -> Result<BigUint> {
    TreeCounter::new().unrooted_exact(n)
}

pub fn paper_total(max_tips: usize) -> Result<PaperTotal> {
    TreeCounter::new().paper_total(max_tips)
}

pub fn homeomorphism_classes_upto(max_tips: usize) -> Result<BigUint> {
    TreeCounter::new().homeomorphism_classes_upto(max_tips)
}
