use serde::Serialize;

use super::BipartiteAssignment;
use crate::{Error, Result};

/// The projected graph `G(n, m, p)`.
///
/// Edges are unordered pairs stored once as `(min, max)` and kept sorted, so
/// two graphs are equal iff their edge sets are equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    degrees: Vec<usize>,
}

impl IntersectionGraph {
    /// Builds a graph from arbitrary pairs. Pairs are canonicalized and
    /// deduplicated; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canonical = Vec::new();
        for (i, j) in edges {
            if i == j {
                return Err(Error::argument(format!("self-loop at vertex {i}")));
            }
            if i >= n || j >= n {
                return Err(Error::argument(format!(
                    "edge ({i}, {j}) out of range for n = {n}"
                )));
            }
            canonical.push((i.min(j), i.max(j)));
        }
        Ok(Self::from_canonical(n, canonical))
    }

    fn from_canonical(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut degrees = vec![0; n];
        for &(i, j) in &edges {
            degrees[i] += 1;
            degrees[j] += 1;
        }
        IntersectionGraph { n, edges, degrees }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending lexicographic order, each with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }
}

/// Projects the bipartite model onto the vertex set.
///
/// Uses the inverted index: every object contributes a clique on its owners.
/// Expected cost is `Σ_w deg(w)²`.
pub fn project(assignment: &BipartiteAssignment) -> IntersectionGraph {
    let mut edges = Vec::new();
    for owners in assignment.inverted_index() {
        for (k, &i) in owners.iter().enumerate() {
            for &j in &owners[k + 1..] {
                edges.push((i, j));
            }
        }
    }
    IntersectionGraph::from_canonical(assignment.params().n(), edges)
}

/// Number of edges incident to `v`.
pub fn degree(graph: &IntersectionGraph, v: usize) -> Result<usize> {
    graph
        .degrees
        .get(v)
        .copied()
        .ok_or_else(|| Error::argument(format!("vertex {v} out of range for n = {}", graph.n)))
}

/// Union-find over `0..n` with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

/// Whether all vertices lie in one component. A single vertex is connected.
pub fn is_connected(graph: &IntersectionGraph) -> bool {
    let mut dsu = DisjointSet::new(graph.n);
    for &(i, j) in &graph.edges {
        dsu.union(i, j);
        if dsu.components() == 1 {
            return true;
        }
    }
    dsu.components() <= 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{pair_adjacent, sample_assignment, vertex_degree, ModelParams};

    fn pairwise_oracle(a: &BipartiteAssignment) -> IntersectionGraph {
        let n = a.params().n();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if pair_adjacent(a, i, j).unwrap() {
                    edges.push((i, j));
                }
            }
        }
        IntersectionGraph::from_edges(n, edges).unwrap()
    }

    /// Reachability closure by repeated relaxation of a boolean matrix.
    fn reachability_connected(g: &IntersectionGraph) -> bool {
        let n = g.vertex_count();
        let mut reach = vec![vec![false; n]; n];
        for (v, row) in reach.iter_mut().enumerate() {
            row[v] = true;
        }
        for &(i, j) in g.edges() {
            reach[i][j] = true;
            reach[j][i] = true;
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                for k in 0..n {
                    if !reach[i][k] {
                        continue;
                    }
                    let via = reach[k].clone();
                    for (j, &r) in via.iter().enumerate() {
                        if r && !reach[i][j] {
                            reach[i][j] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        reach[0].iter().all(|&r| r)
    }

    #[test]
    fn projection_of_empty_and_full() {
        let empty = sample_assignment(&ModelParams::new(7, 3, 0.0).unwrap(), 1);
        assert_eq!(project(&empty).edge_count(), 0);
        let full = sample_assignment(&ModelParams::new(7, 3, 1.0).unwrap(), 1);
        let g = project(&full);
        assert_eq!(g.edge_count(), 21);
        for v in 0..7 {
            assert_eq!(degree(&g, v).unwrap(), 6);
        }
    }

    #[test]
    fn inverted_index_matches_pairwise_oracle() {
        let params = ModelParams::new(6, 3, 0.5).unwrap();
        for seed in 0..200 {
            let a = sample_assignment(&params, seed);
            assert_eq!(project(&a), pairwise_oracle(&a), "seed {seed}");
        }
    }

    #[test]
    fn handshake_and_vertex_degree() {
        let params = ModelParams::new(25, 10, 0.15).unwrap();
        for seed in 0..50 {
            let a = sample_assignment(&params, seed);
            let g = project(&a);
            let total: usize = (0..25).map(|v| degree(&g, v).unwrap()).sum();
            assert_eq!(total, 2 * g.edge_count());
            for v in 0..25 {
                assert_eq!(vertex_degree(&a, v).unwrap(), degree(&g, v).unwrap());
            }
        }
    }

    #[test]
    fn degree_out_of_range() {
        let g = IntersectionGraph::from_edges(3, []).unwrap();
        assert_eq!(degree(&g, 2).unwrap(), 0);
        assert!(degree(&g, 3).is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&IntersectionGraph::from_edges(1, []).unwrap()));
        assert!(!is_connected(
            &IntersectionGraph::from_edges(3, [(0, 1)]).unwrap()
        ));
        assert!(is_connected(
            &IntersectionGraph::from_edges(3, [(0, 1), (2, 1)]).unwrap()
        ));
    }

    #[test]
    fn connectivity_matches_reachability_oracle() {
        for n in 1..=8 {
            for &p in &[0.15, 0.3, 0.5] {
                let params = ModelParams::new(n, 4, p).unwrap();
                for seed in 0..40 {
                    let g = project(&sample_assignment(&params, seed));
                    assert_eq!(is_connected(&g), reachability_connected(&g));
                }
            }
        }
    }

    #[test]
    fn from_edges_canonicalizes() {
        let g = IntersectionGraph::from_edges(4, [(3, 1), (1, 3), (0, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 3)]);
        assert!(g.has_edge(3, 1));
        assert!(IntersectionGraph::from_edges(4, [(2, 2)]).is_err());
        assert!(IntersectionGraph::from_edges(4, [(0, 4)]).is_err());
    }
}
