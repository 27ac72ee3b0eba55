use super::code::CanonicalCode;
use super::rooted::RootedTree;
use crate::{Error, Result};

/// A finite tree with no vertex of degree exactly 2.
///
/// Vertices are `0..vertex_count()`. Tips are the vertices of degree at most
/// one, so the one-vertex tree has a single tip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnrootedTree {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Leaf-centroid of a tree with at least two tips.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Centroid {
    /// Every component of the tree minus this vertex has fewer than n/2 tips.
    Vertex(usize),
    /// Removing this edge splits the tips n/2 to n/2.
    Edge(usize, usize),
}

/// All vertices and edges satisfying the leaf-centroid condition.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CentroidCandidates {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl UnrootedTree {
    pub fn single_vertex() -> Self {
        UnrootedTree {
            adjacency: vec![Vec::new()],
            edges: Vec::new(),
        }
    }

    /// Checks connectivity, acyclicity and the absence of degree-2 vertices.
    pub fn from_edges(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidTree("tree with no vertices".into()));
        }
        if edges.len() + 1 != vertex_count {
            return Err(Error::InvalidTree(format!(
                "{} edges on {vertex_count} vertices",
                edges.len()
            )));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidTree(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidTree(format!("loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut seen = vec![false; vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        if reached != vertex_count {
            return Err(Error::InvalidTree("graph is not connected".into()));
        }
        if let Some(v) = adjacency.iter().position(|a| a.len() == 2) {
            return Err(Error::InvalidTree(format!("vertex {v} has degree 2")));
        }
        Ok(UnrootedTree { adjacency, edges })
    }

    /// The underlying unrooted tree of `t`. A root with exactly two children
    /// is smoothed away so that its two children become adjacent.
    pub fn from_rooted(t: &RootedTree) -> Self {
        fn add(t: &RootedTree, edges: &mut Vec<(usize, usize)>, next: &mut usize) -> usize {
            let id = *next;
            *next += 1;
            for c in t.children() {
                let child = add(c, edges, next);
                edges.push((id, child));
            }
            id
        }

        let mut edges = Vec::new();
        let mut next = 0;
        if t.children().len() == 2 {
            let a = add(&t.children()[0], &mut edges, &mut next);
            let b = add(&t.children()[1], &mut edges, &mut next);
            edges.push((a, b));
        } else {
            add(t, &mut edges, &mut next);
        }
        UnrootedTree::from_edges(next, edges).expect("series-reduced input")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_tip(&self, v: usize) -> bool {
        self.degree(v) <= 1
    }

    pub fn tip_count(&self) -> usize {
        (0..self.vertex_count()).filter(|&v| self.is_tip(v)).count()
    }

    /// Relabels vertices by `perm` (old index -> new index) and reorders the
    /// edge list. The result is the same tree up to isomorphism.
    pub fn relabel(&self, perm: &[usize], edge_order: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        let mut check = perm.to_vec();
        check.sort_unstable();
        if check != (0..n).collect::<Vec<_>>() {
            return Err(Error::InvalidTree("relabeling is not a permutation".into()));
        }
        let edges = edge_order
            .iter()
            .map(|&i| {
                let (u, v) = self.edges[i];
                (perm[v], perm[u])
            })
            .collect();
        UnrootedTree::from_edges(n, edges)
    }

    /// Number of tips on the `v` side of each directed edge `parent -> v`,
    /// for the tree hung from vertex 0. Returns (parent, below).
    fn hang(&self) -> (Vec<Option<usize>>, Vec<usize>) {
        let n = self.vertex_count();
        let mut parent = vec![None; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![0];
        let mut seen = vec![false; n];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            order.push(u);
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    stack.push(v);
                }
            }
        }
        let mut below = vec![0usize; n];
        for &u in order.iter().rev() {
            if self.is_tip(u) {
                below[u] += 1;
            }
            if let Some(p) = parent[u] {
                below[p] += below[u];
            }
        }
        (parent, below)
    }

    /// Every vertex and edge meeting the leaf-centroid condition. A valid
    /// tree with at least two tips has exactly one in total.
    pub fn centroid_candidates(&self) -> CentroidCandidates {
        let n_tips = self.tip_count();
        let (parent, below) = self.hang();
        let mut out = CentroidCandidates::default();
        for v in 0..self.vertex_count() {
            let above = n_tips - below[v];
            let mut heaviest = if parent[v].is_some() { above } else { 0 };
            for &w in &self.adjacency[v] {
                if parent[w] == Some(v) {
                    heaviest = heaviest.max(below[w]);
                }
            }
            if 2 * heaviest < n_tips {
                out.vertices.push(v);
            }
            if let Some(p) = parent[v] {
                if 2 * below[v] == n_tips {
                    out.edges.push((p.min(v), p.max(v)));
                }
            }
        }
        out
    }

    pub fn leaf_centroid(&self) -> Result<Centroid> {
        if self.vertex_count() == 1 {
            return Err(Error::domain("tip count for a leaf-centroid", 2, 1));
        }
        let c = self.centroid_candidates();
        match (c.vertices.as_slice(), c.edges.as_slice()) {
            ([v], []) => Ok(Centroid::Vertex(*v)),
            ([], [(u, v)]) => Ok(Centroid::Edge(*u, *v)),
            _ => Err(Error::InvalidTree(format!(
                "leaf-centroid is not unique: {c:?}"
            ))),
        }
    }

    /// Code of the branch at `v` seen from `from`.
    fn branch_code(&self, v: usize, from: Option<usize>) -> CanonicalCode {
        let kids: Vec<CanonicalCode> = self.adjacency[v]
            .iter()
            .filter(|&&w| Some(w) != from)
            .map(|&w| self.branch_code(w, Some(v)))
            .collect();
        if kids.is_empty() {
            CanonicalCode::leaf()
        } else {
            CanonicalCode::join(kids.iter().map(|k| k.as_str()))
        }
    }

    /// The tree rooted at its leaf-centroid. An edge centroid becomes a
    /// virtual midpoint with the two halves as its children.
    pub fn canonical_code(&self) -> CanonicalCode {
        if self.vertex_count() == 1 {
            return CanonicalCode::leaf();
        }
        match self
            .leaf_centroid()
            .expect("valid tree has a unique leaf-centroid")
        {
            Centroid::Vertex(v) => self.branch_code(v, None),
            Centroid::Edge(u, v) => {
                let a = self.branch_code(u, Some(v));
                let b = self.branch_code(v, Some(u));
                CanonicalCode::join([a.as_str(), b.as_str()])
            }
        }
    }
}

pub fn unrooted_canonical_code(t: &UnrootedTree) -> CanonicalCode {
    t.canonical_code()
}

pub fn leaf_centroid(t: &UnrootedTree) -> Result<Centroid> {
    t.leaf_centroid()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(k: usize) -> UnrootedTree {
        UnrootedTree::from_edges(k + 1, (1..=k).map(|i| (0, i)).collect()).unwrap()
    }

    fn h_tree() -> UnrootedTree {
        UnrootedTree::from_edges(6, vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
    }

    #[test]
    fn k2() {
        let t = UnrootedTree::from_edges(2, vec![(0, 1)]).unwrap();
        assert_eq!(t.tip_count(), 2);
        assert_eq!(t.leaf_centroid().unwrap(), Centroid::Edge(0, 1));
        assert_eq!(t.canonical_code().as_str(), "(**)");
    }

    #[test]
    fn h_tree_centroid_is_middle_edge() {
        let t = h_tree();
        assert_eq!(t.tip_count(), 4);
        assert_eq!(t.leaf_centroid().unwrap(), Centroid::Edge(0, 1));
        assert_eq!(t.canonical_code().as_str(), "((**)(**))");
    }

    #[test]
    fn stars() {
        assert_eq!(star(4).canonical_code().as_str(), "(****)");
        assert_eq!(star(5).leaf_centroid().unwrap(), Centroid::Vertex(0));
    }

    #[test]
    fn single_vertex() {
        let t = UnrootedTree::single_vertex();
        assert_eq!(t.tip_count(), 1);
        assert!(matches!(t.leaf_centroid(), Err(Error::Domain { .. })));
        assert_eq!(t.canonical_code().as_str(), "*");
    }

    #[test]
    fn invalid_graphs() {
        // path on three vertices has a degree-2 vertex
        assert!(UnrootedTree::from_edges(3, vec![(0, 1), (1, 2)]).is_err());
        // cycle plus isolated vertex: right edge count, disconnected
        assert!(UnrootedTree::from_edges(4, vec![(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(UnrootedTree::from_edges(2, vec![(0, 0)]).is_err());
        assert!(UnrootedTree::from_edges(2, vec![(0, 5)]).is_err());
        assert!(UnrootedTree::from_edges(0, vec![]).is_err());
    }

    #[test]
    fn from_rooted_smooths_binary_root() {
        let leaf = RootedTree::leaf();
        let cherry = RootedTree::node(vec![leaf.clone(), leaf.clone()]).unwrap();
        let k2 = UnrootedTree::from_rooted(&cherry);
        assert_eq!(k2.vertex_count(), 2);
        let h = RootedTree::node(vec![cherry.clone(), cherry]).unwrap();
        assert_eq!(
            UnrootedTree::from_rooted(&h).canonical_code(),
            h_tree().canonical_code()
        );
        assert_eq!(UnrootedTree::from_rooted(&leaf).vertex_count(), 1);
    }
}
