//! Linear-time recognition of trees whose paired domination number is
//! twice their domination number.
//!
//! With `S` the support vertices and `R` the vertices at distance at least
//! three from `S`, a tree of order at least three has γ_pr = 2γ exactly when
//! `S` is independent, `R` is a 3-packing and `S ∪ R` dominates. Every check
//! is a constant number of breadth-first sweeps.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::solvers::{min_dominating_set, min_paired_dominating_set, SearchBudget, SolveError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TreeError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("single-vertex tree: paired domination is undefined")]
    TrivialTree,
    #[error(transparent)]
    Solve(#[from] SolveError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SpecialCase {
    /// `P_2`: γ_pr = 2 = 2γ although both vertices are adjacent supports.
    TinyTree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeCertificate {
    /// Support vertices, ascending.
    pub supports: Vec<usize>,
    /// Vertices at distance at least three from every support, ascending.
    pub remote: Vec<usize>,
    pub s_independent: bool,
    pub r_is_3packing: bool,
    pub union_dominating: bool,
    pub accepted: bool,
    pub special_case: Option<SpecialCase>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub certificate: TreeCertificate,
    pub gamma: usize,
    pub gamma_pr: usize,
    pub exact_equal: bool,
    pub agree: bool,
}

fn check_tree(tree: &Graph) -> Result<(), TreeError> {
    match tree.order() {
        0 => Err(TreeError::NotATree),
        1 => Err(TreeError::TrivialTree),
        _ if tree.classify().tree => Ok(()),
        _ => Err(TreeError::NotATree),
    }
}

fn remote_from_supports(tree: &Graph, supports: &[usize]) -> Vec<usize> {
    tree.distances_from_set(supports)
        .into_iter()
        .enumerate()
        .filter(|(_, d)| d.is_none_or(|d| d >= 3))
        .map(|(v, _)| v)
        .collect()
}

/// `R(T)`: vertices at distance at least three from every support vertex.
pub fn remote_set(tree: &Graph) -> Result<Vec<usize>, TreeError> {
    check_tree(tree)?;
    let (supports, _) = tree.supports_and_leaves();
    Ok(remote_from_supports(tree, &supports))
}

/// Smallest distance between two distinct members of `set` (`None` if
/// fewer than two members share a component).
///
/// One multi-source sweep labels every vertex with its nearest member; the
/// closest pair is then realized across some edge joining two labels.
pub fn min_pairwise_distance(graph: &Graph, set: &[usize]) -> Option<u32> {
    let n = graph.order();
    let mut owner = vec![usize::MAX; n];
    let mut dist = vec![0u32; n];
    let mut queue = std::collections::VecDeque::with_capacity(n);
    for &s in set {
        if owner[s] == usize::MAX {
            owner[s] = s;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in graph.neighbors(u) {
            if owner[w] == usize::MAX {
                owner[w] = owner[u];
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    graph
        .edges()
        .filter(|&(u, v)| owner[u] != usize::MAX && owner[v] != usize::MAX && owner[u] != owner[v])
        .map(|(u, v)| dist[u] + dist[v] + 1)
        .min()
}

/// Computes `S(T)`, `R(T)` and the three flags of the characterization.
pub fn recognize(tree: &Graph) -> Result<TreeCertificate, TreeError> {
    check_tree(tree)?;
    let n = tree.order();
    let (supports, _) = tree.supports_and_leaves();
    let remote = remote_from_supports(tree, &supports);

    let mut in_s = vec![false; n];
    for &s in &supports {
        in_s[s] = true;
    }
    let s_independent = supports
        .iter()
        .all(|&s| tree.neighbors(s).iter().all(|&w| !in_s[w]));

    let r_is_3packing = min_pairwise_distance(tree, &remote).is_none_or(|d| d >= 4);

    let mut in_union = in_s;
    for &r in &remote {
        in_union[r] = true;
    }
    let union_dominating = tree.is_dominating(&in_union);

    let literal = s_independent && r_is_3packing && union_dominating;
    let (accepted, special_case) = if n == 2 {
        (true, Some(SpecialCase::TinyTree))
    } else {
        (literal, None)
    };
    Ok(TreeCertificate {
        supports,
        remote,
        s_independent,
        r_is_3packing,
        union_dominating,
        accepted,
        special_case,
    })
}

/// Runs [`recognize`] and compares its verdict with exact γ and γ_pr.
pub fn cross_validate(tree: &Graph, budget: SearchBudget) -> Result<CrossValidation, TreeError> {
    let certificate = recognize(tree)?;
    let gamma = min_dominating_set(tree, budget)?.value;
    let gamma_pr = min_paired_dominating_set(tree, budget)?.value;
    let exact_equal = gamma_pr == 2 * gamma;
    Ok(CrossValidation {
        agree: certificate.accepted == exact_equal,
        certificate,
        gamma,
        gamma_pr,
        exact_equal,
    })
}
