use serde::Serialize;

use crate::{Error, Result};

/// Bipartite graph of a curve: one vertex per irreducible component, one per
/// singular point, and one edge per local branch at a singular point joining
/// the point to the component carrying that branch.
///
/// Vertices `0..components` are components and
/// `components..components + points` are singular points. Parallel edges are
/// allowed (a node of an irreducible curve gives two).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceGraph {
    components: usize,
    points: usize,
    /// (point index, component index), one per branch.
    branches: Vec<(usize, usize)>,
}

/// For each singular point, the component index of each local branch there.
pub fn build_incidence_graph(
    components: usize,
    branch_matrix: &[Vec<usize>],
) -> Result<IncidenceGraph> {
    if components == 0 {
        return Err(Error::InvalidCurve(
            "a curve has at least one component".into(),
        ));
    }
    let mut branches = Vec::new();
    for (point, row) in branch_matrix.iter().enumerate() {
        if row.is_empty() {
            return Err(Error::InvalidCurve(format!(
                "singular point {point} has no local branches"
            )));
        }
        for &comp in row {
            if comp >= components {
                return Err(Error::InvalidCurve(format!(
                    "singular point {point}: component index {comp} out of range (b2 = {components})"
                )));
            }
            branches.push((point, comp));
        }
    }
    Ok(IncidenceGraph {
        components,
        points: branch_matrix.len(),
        branches,
    })
}

impl IncidenceGraph {
    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn point_count(&self) -> usize {
        self.points
    }

    pub fn vertex_count(&self) -> usize {
        self.components + self.points
    }

    pub fn edge_count(&self) -> usize {
        self.branches.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.branches
    }

    /// Number of local branches `r_i` at each singular point.
    pub fn branch_counts(&self) -> Vec<u32> {
        let mut r = vec![0u32; self.points];
        for &(p, _) in &self.branches {
            r[p] += 1;
        }
        r
    }

    /// Points with a single branch.
    pub fn cusp_count(&self) -> usize {
        self.branch_counts().iter().filter(|&&r| r == 1).count()
    }

    /// `d`, the sum over singular points of `r_i - 1`.
    pub fn d(&self) -> usize {
        self.edge_count() - self.points
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64
    }

    pub fn connected_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut count = self.vertex_count();
        for &(p, c) in &self.branches {
            let a = find(&mut parent, self.components + p);
            let b = find(&mut parent, c);
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components() == 1
    }

    /// First Betti number of the graph, `E - V + components`.
    pub fn first_betti(&self) -> usize {
        (self.edge_count() + self.connected_components()) - self.vertex_count()
    }

    /// Combinatorial effect of blowing up the singular point at the end of
    /// branch `edge`: the edge point-component is replaced by the path
    /// point-E-q-component through a new component `E` and a new point `q`.
    /// The homotopy type of the graph is unchanged.
    pub fn expand_branch(&self, edge: usize) -> Result<IncidenceGraph> {
        let Some(&(point, comp)) = self.branches.get(edge) else {
            return Err(Error::InvalidCurve(format!("no branch with index {edge}")));
        };
        let new_comp = self.components;
        let new_point = self.points;
        let mut branches = self.branches.clone();
        branches[edge] = (point, new_comp);
        branches.push((new_point, new_comp));
        branches.push((new_point, comp));
        Ok(IncidenceGraph {
            components: self.components + 1,
            points: self.points + 1,
            branches,
        })
    }
}
