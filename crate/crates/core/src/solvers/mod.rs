//! Exact solvers for γ, γ_t, γ_pr, i and ρ_k with certifying witnesses.
//!
//! All solvers are depth-first branch-and-bound searches over word-parallel
//! vertex sets. Branching order is fixed (ties go to the lowest vertex id),
//! so equal inputs always produce equal witnesses.

mod cover;
mod packing;
mod paired;

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, SetKind};
use crate::vertex_set::{VertexSet, MAX_SET_ORDER};

pub use cover::{
    enumerate_min_dominating_sets, min_dominating_set, min_independent_dominating_set,
    min_total_dominating_set,
};
pub use packing::{max_independent_set, max_k_packing};
pub use paired::min_paired_dominating_set;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("search budget exceeded after {nodes} nodes ({seconds:.2}s)")]
    BudgetExceeded { nodes: u64, seconds: f64 },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph of order {0} exceeds the solver limit of {MAX_SET_ORDER} vertices")]
    TooLarge(usize),
    #[error("packing distance parameter must be at least 1")]
    ZeroPacking,
}

/// Wall-clock and node limits for one solve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_seconds: f64,
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_seconds: 60.0,
            max_nodes: 50_000_000,
        }
    }
}

impl SearchBudget {
    pub fn new(max_seconds: f64, max_nodes: u64) -> Self {
        SearchBudget {
            max_seconds,
            max_nodes,
        }
    }

    pub fn unlimited() -> Self {
        SearchBudget {
            max_seconds: f64::INFINITY,
            max_nodes: u64::MAX,
        }
    }
}

/// Counts search nodes and aborts once the budget is spent.
pub(crate) struct Meter {
    start: Instant,
    nodes: u64,
    max_nodes: u64,
    max_time: Option<Duration>,
}

impl Meter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Meter {
            start: Instant::now(),
            nodes: 0,
            max_nodes: budget.max_nodes,
            max_time: Duration::try_from_secs_f64(budget.max_seconds).ok(),
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes += 1;
        let out_of_time = self.nodes & 1023 == 0
            && self.max_time.is_some_and(|t| self.start.elapsed() > t);
        if self.nodes > self.max_nodes || out_of_time {
            return Err(SolveError::BudgetExceeded {
                nodes: self.nodes,
                seconds: self.start.elapsed().as_secs_f64(),
            });
        }
        Ok(())
    }
}

/// The parameter a witness certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parameter {
    Gamma,
    GammaT,
    GammaPr,
    IndependentDomination,
    /// ρ_k, the `k`-packing number.
    Packing(usize),
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Gamma => f.write_str("gamma"),
            Parameter::GammaT => f.write_str("gamma_t"),
            Parameter::GammaPr => f.write_str("gamma_pr"),
            Parameter::IndependentDomination => f.write_str("i"),
            Parameter::Packing(k) => write!(f, "rho{k}"),
        }
    }
}

impl Serialize for Parameter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An exact parameter value with a set proving it is attained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterWitness {
    pub kind: Parameter,
    pub value: usize,
    /// Ascending vertex ids.
    pub set: Vec<usize>,
    /// The perfect matching of a paired dominating set; `None` for every
    /// other parameter.
    pub pairing: Option<Vec<(usize, usize)>>,
}

impl ParameterWitness {
    fn from_set(kind: Parameter, set: VertexSet) -> Self {
        ParameterWitness {
            kind,
            value: set.len(),
            set: set.to_vec(),
            pairing: None,
        }
    }

    /// The definition the witness set must satisfy.
    pub fn set_kind(&self) -> SetKind {
        match self.kind {
            Parameter::Gamma => SetKind::Dominating,
            Parameter::GammaT => SetKind::TotalDominating,
            Parameter::GammaPr => SetKind::PairedDominating(self.pairing.clone().unwrap_or_default()),
            // Independence is checked separately in `validate`.
            Parameter::IndependentDomination => SetKind::Dominating,
            Parameter::Packing(k) => SetKind::KPacking(k),
        }
    }

    /// Re-checks the witness against the literal definitions.
    pub fn validate(&self, graph: &Graph) -> bool {
        if self.set.len() != self.value {
            return false;
        }
        if self.kind == Parameter::GammaPr
            && self.pairing.as_ref().map(Vec::len) != Some(self.value / 2)
        {
            return false;
        }
        let base = graph.validate_set(&self.set, &self.set_kind()).unwrap_or(false);
        match self.kind {
            Parameter::IndependentDomination => {
                base && graph
                    .validate_set(&self.set, &SetKind::Independent)
                    .unwrap_or(false)
            }
            _ => base,
        }
    }
}

/// Dispatches to the solver for `parameter`.
pub fn solve(
    graph: &Graph,
    parameter: Parameter,
    budget: SearchBudget,
) -> Result<ParameterWitness, SolveError> {
    match parameter {
        Parameter::Gamma => min_dominating_set(graph, budget),
        Parameter::GammaT => min_total_dominating_set(graph, budget),
        Parameter::GammaPr => min_paired_dominating_set(graph, budget),
        Parameter::IndependentDomination => min_independent_dominating_set(graph, budget),
        Parameter::Packing(k) => max_k_packing(graph, k, budget),
    }
}

/// Dense neighborhood rows for graphs of order at most [`MAX_SET_ORDER`].
pub(crate) struct Dense {
    pub(crate) all: VertexSet,
    pub(crate) open: Vec<VertexSet>,
    pub(crate) closed: Vec<VertexSet>,
}

impl Dense {
    pub(crate) fn new(graph: &Graph) -> Result<Self, SolveError> {
        let n = graph.order();
        if n > MAX_SET_ORDER {
            return Err(SolveError::TooLarge(n));
        }
        let open: Vec<VertexSet> = (0..n)
            .map(|v| graph.neighbors(v).iter().copied().collect())
            .collect();
        let closed = open.iter().enumerate().map(|(v, s)| s.with(v)).collect();
        Ok(Dense {
            all: VertexSet::full(n),
            open,
            closed,
        })
    }

    pub(crate) fn require_isolated_free(&self) -> Result<(), SolveError> {
        match self.open.iter().position(|s| s.is_empty()) {
            Some(v) => Err(SolveError::IsolatedVertex(v)),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_budget_is_enforced() {
        let mut meter = Meter::new(SearchBudget::new(60.0, 3));
        assert!(meter.tick().is_ok());
        assert!(meter.tick().is_ok());
        assert!(meter.tick().is_ok());
        assert!(matches!(meter.tick(), Err(SolveError::BudgetExceeded { nodes: 4, .. })));
    }

    #[test]
    fn parameter_names() {
        assert_eq!(Parameter::GammaPr.to_string(), "gamma_pr");
        assert_eq!(Parameter::Packing(3).to_string(), "rho3");
        assert_eq!(Parameter::IndependentDomination.to_string(), "i");
    }

    #[test]
    fn too_large_graphs_are_rejected() {
        let edges: Vec<_> = (1..130).map(|v| (v - 1, v)).collect();
        let g = Graph::new(130, &edges).unwrap();
        assert_eq!(
            min_dominating_set(&g, SearchBudget::default()),
            Err(SolveError::TooLarge(130))
        );
    }
}
