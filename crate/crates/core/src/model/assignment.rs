use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Geometric;
use serde::Serialize;

use super::ModelParams;
use crate::{Error, Result};

/// A sampled bipartite model: the object set `W_v` of every vertex.
///
/// Each set is a strictly increasing list of object indices in `[0, m)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BipartiteAssignment {
    params: ModelParams,
    sets: Vec<Vec<usize>>,
}

impl BipartiteAssignment {
    /// Builds an assignment from explicit object sets, checking that there is
    /// one set per vertex and that every set is strictly increasing and in range.
    pub fn from_sets(params: ModelParams, sets: Vec<Vec<usize>>) -> Result<Self> {
        if sets.len() != params.n() {
            return Err(Error::argument(format!(
                "expected {} object sets, got {}",
                params.n(),
                sets.len()
            )));
        }
        for (v, set) in sets.iter().enumerate() {
            if let Some(&w) = set.iter().find(|&&w| w >= params.m()) {
                return Err(Error::argument(format!(
                    "vertex {v}: object {w} out of range for m = {}",
                    params.m()
                )));
            }
            if set.windows(2).any(|pair| pair[0] >= pair[1]) {
                return Err(Error::argument(format!(
                    "vertex {v}: object set is not strictly increasing"
                )));
            }
        }
        Ok(BipartiteAssignment { params, sets })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    /// The object set `W_v`.
    ///
    /// Panics if `v >= n`.
    pub fn objects(&self, v: usize) -> &[usize] {
        &self.sets[v]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Owners of every object: `owners[w]` lists the vertices with `w` in
    /// their set, in increasing order.
    pub fn inverted_index(&self) -> Vec<Vec<usize>> {
        let mut owners = vec![Vec::new(); self.params.m()];
        for (v, set) in self.sets.iter().enumerate() {
            for &w in set {
                owners[w].push(v);
            }
        }
        owners
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.params.n() {
            return Err(Error::argument(format!(
                "vertex {v} out of range for n = {}",
                self.params.n()
            )));
        }
        Ok(())
    }
}

fn vertex_stream(seed: u64, v: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(v as u64);
    rng
}

/// Samples `G*(n, m, p)`.
///
/// Vertex `v` draws from ChaCha8 seeded with `seed` on stream `v`, and walks
/// the object indices with geometric skips, so the cost is proportional to the
/// number of attachments rather than to `n * m`. Identical `(params, seed)`
/// give identical output.
pub fn sample_assignment(params: &ModelParams, seed: u64) -> BipartiteAssignment {
    let (n, m, p) = (params.n(), params.m(), params.p());
    let sets = (0..n)
        .map(|v| {
            if p == 0.0 {
                return Vec::new();
            }
            if p == 1.0 {
                return (0..m).collect();
            }
            let mut rng = vertex_stream(seed, v);
            let skip = Geometric::new(p).expect("p in (0, 1)");
            let mut set = Vec::new();
            let mut next = 0u64;
            loop {
                next = next.saturating_add(rng.sample(skip));
                if next >= m as u64 {
                    break;
                }
                set.push(next as usize);
                next += 1;
            }
            set
        })
        .collect();
    BipartiteAssignment {
        params: *params,
        sets,
    }
}

/// Samples `G*(n, m, p)` by drawing one uniform per vertex-object pair.
///
/// The uniform for pair `(v, w)` is the `w`-th draw of vertex `v`'s stream, so
/// for a fixed seed the draws form a shared table across all `p`: the pair is
/// included iff its uniform is below `p`. Raising `p` therefore only adds
/// attachments, and with them only adds edges to the projection. Costs
/// `O(n * m)`.
pub fn sample_assignment_coupled(params: &ModelParams, seed: u64) -> BipartiteAssignment {
    let p = params.p();
    let sets = (0..params.n())
        .map(|v| {
            let mut rng = vertex_stream(seed, v);
            (0..params.m())
                .filter(|_| rng.random::<f64>() < p)
                .collect()
        })
        .collect();
    BipartiteAssignment {
        params: *params,
        sets,
    }
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Whether `W_i ∩ W_j` is nonempty.
pub fn pair_adjacent(assignment: &BipartiteAssignment, i: usize, j: usize) -> Result<bool> {
    assignment.check_vertex(i)?;
    assignment.check_vertex(j)?;
    if i == j {
        return Err(Error::argument(format!(
            "adjacency of vertex {i} with itself"
        )));
    }
    Ok(sorted_intersect(&assignment.sets[i], &assignment.sets[j]))
}

/// Degree of `v` in the projected graph, computed from the assignment without
/// building the edge set: mark the objects of `W_v`, then count the other
/// vertices owning at least one marked object.
pub fn vertex_degree(assignment: &BipartiteAssignment, v: usize) -> Result<usize> {
    assignment.check_vertex(v)?;
    let mut marked = vec![false; assignment.params.m()];
    for &w in &assignment.sets[v] {
        marked[w] = true;
    }
    Ok(assignment
        .sets
        .iter()
        .enumerate()
        .filter(|&(u, set)| u != v && set.iter().any(|&w| marked[w]))
        .count())
}
