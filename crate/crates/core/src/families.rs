//! Named graph families, random generators and exhaustive labeled trees.
//!
//! Random families draw from SplitMix64 seeded with a 64-bit seed,
//! so a `(family, sizes, seed)` triple names the same graph on every
//! platform.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// Attempts before [`Family::RandomConnected`] gives up on a sparse `p`.
pub const MAX_CONNECTED_ATTEMPTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("bad family spec: {0}")]
    BadSpec(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    /// One center and `n - 1` leaves.
    Star { n: usize },
    Complete { n: usize },
    /// `K_p` with one pendant vertex on each clique vertex.
    CoronaComplete { p: usize },
    /// `C_3` with one pendant vertex on each cycle vertex.
    TrianglePendants,
    RandomTree { n: usize, seed: u64 },
    /// `G(n, p)` resampled until connected.
    RandomConnected { n: usize, p: f64, seed: u64 },
}

fn bad(msg: impl Into<String>) -> FamilyError {
    FamilyError::BadSpec(msg.into())
}

fn at_least(n: usize, min: usize, what: &str) -> Result<(), FamilyError> {
    if n < min {
        Err(bad(format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("family generators produce simple graphs")
}

fn clique_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

impl Family {
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        match *self {
            Family::Path { n } => {
                at_least(n, 1, "PATH")?;
                let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                Ok(build(n, &edges))
            }
            Family::Cycle { n } => {
                at_least(n, 3, "CYCLE")?;
                let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
                Ok(build(n, &edges))
            }
            Family::Star { n } => {
                at_least(n, 1, "STAR")?;
                let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
                Ok(build(n, &edges))
            }
            Family::Complete { n } => {
                at_least(n, 1, "COMPLETE")?;
                Ok(build(n, &clique_edges(n)))
            }
            Family::CoronaComplete { p } => {
                at_least(p, 1, "CORONA_COMPLETE")?;
                let mut edges = clique_edges(p);
                edges.extend((0..p).map(|i| (i, p + i)));
                Ok(build(2 * p, &edges))
            }
            Family::TrianglePendants => {
                Ok(build(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]))
            }
            Family::RandomTree { n, seed } => {
                at_least(n, 1, "RANDOM_TREE")?;
                Ok(random_tree(n, &mut SplitMix64::seed_from_u64(seed)))
            }
            Family::RandomConnected { n, p, seed } => {
                at_least(n, 1, "RANDOM_CONNECTED")?;
                if !(p > 0.0 && p < 1.0) {
                    return Err(bad(format!("RANDOM_CONNECTED needs 0 < p < 1, got {p}")));
                }
                random_connected(n, p, &mut SplitMix64::seed_from_u64(seed))
            }
        }
    }
}

/// Tree on `0..n` coded by a Prüfer sequence of length `n - 2` over `0..n`.
///
/// Linear time: the smallest current leaf is tracked with a pointer that
/// only moves forward, except when the vertex just freed is smaller.
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("some leaf");
    let mut leaf = ptr;
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    build(n, &edges)
}

fn trivial_tree(n: usize) -> Graph {
    match n {
        1 => build(1, &[]),
        _ => build(2, &[(0, 1)]),
    }
}

pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return trivial_tree(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&seq)
}

pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, FamilyError> {
    for _ in 0..MAX_CONNECTED_ATTEMPTS {
        let edges: Vec<_> = clique_edges(n)
            .into_iter()
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = build(n, &edges);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(bad(format!(
        "no connected G({n}, {p}) sample in {MAX_CONNECTED_ATTEMPTS} attempts"
    )))
}

/// Every labeled tree on `0..n`, once each, in lexicographic Prüfer order.
pub fn labeled_trees(n: usize) -> LabeledTrees {
    LabeledTrees {
        n,
        seq: (n > 2).then(|| vec![0; n - 2]),
        small_pending: (1..=2).contains(&n),
    }
}

pub struct LabeledTrees {
    n: usize,
    seq: Option<Vec<usize>>,
    small_pending: bool,
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.small_pending {
            self.small_pending = false;
            return Some(trivial_tree(self.n));
        }
        let seq = self.seq.as_mut()?;
        let tree = prufer_decode(seq);
        // Odometer increment, last position fastest.
        let mut i = seq.len();
        loop {
            if i == 0 {
                self.seq = None;
                break;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < self.n {
                break;
            }
            seq[i] = 0;
        }
        Some(tree)
    }
}

/// Cayley's count `n^(n-2)` of labeled trees on `n >= 1` vertices.
pub fn labeled_tree_count(n: usize) -> u64 {
    match n {
        0 => 0,
        1 | 2 => 1,
        _ => (n as u64).pow(n as u32 - 2),
    }
}
