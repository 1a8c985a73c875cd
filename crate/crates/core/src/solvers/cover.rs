//! Covering-style searches: domination, total domination and independent
//! domination, plus enumeration of all minimum dominating sets.

use super::{Dense, Meter, Parameter, ParameterWitness, SearchBudget, SolveError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

enum Goal {
    /// Find a strictly smaller cover than the incumbent.
    Minimize { best: VertexSet },
    /// Collect every cover of exactly `target` vertices.
    Enumerate { target: usize, found: Vec<VertexSet> },
}

/// Choosing `u` dominates `reach[u]`; `reach` is symmetric, so `reach[v]` is
/// also the set of vertices able to dominate `v`.
struct CoverSearch<'a> {
    all: VertexSet,
    reach: &'a [VertexSet],
    open: &'a [VertexSet],
    independent: bool,
    meter: Meter,
    goal: Goal,
}

impl<'a> CoverSearch<'a> {
    /// Lower bound on the vertices still needed, and the undominated vertex
    /// with the fewest admissible dominators. `None` when some vertex can no
    /// longer be dominated.
    fn bound(&self, undominated: VertexSet, forbidden: VertexSet) -> Option<(usize, usize)> {
        let mut packed = VertexSet::EMPTY;
        let mut disjoint = 0;
        let mut useful = VertexSet::EMPTY;
        let mut pivot = (usize::MAX, 0);
        for v in undominated {
            let cands = self.reach[v] - forbidden;
            if cands.is_empty() {
                return None;
            }
            if !cands.intersects(packed) {
                packed |= cands;
                disjoint += 1;
            }
            useful |= cands;
            if cands.len() < pivot.0 {
                pivot = (cands.len(), v);
            }
        }
        let best_cover = useful
            .iter()
            .map(|u| (self.reach[u] & undominated).len())
            .max()
            .unwrap_or(1);
        let by_cover = undominated.len().div_ceil(best_cover);
        Some((disjoint.max(by_cover), pivot.1))
    }

    fn search(
        &mut self,
        chosen: VertexSet,
        dominated: VertexSet,
        forbidden: VertexSet,
    ) -> Result<(), SolveError> {
        self.meter.tick()?;
        let undominated = self.all - dominated;
        if undominated.is_empty() {
            match &mut self.goal {
                Goal::Minimize { best } => {
                    if chosen.len() < best.len() {
                        *best = chosen;
                    }
                }
                Goal::Enumerate { found, .. } => found.push(chosen),
            }
            return Ok(());
        }
        let Some((lb, pivot)) = self.bound(undominated, forbidden) else {
            return Ok(());
        };
        if chosen.len() + lb > self.limit() {
            return Ok(());
        }

        let mut cands: Vec<(usize, usize)> = (self.reach[pivot] - forbidden)
            .iter()
            .map(|u| ((self.reach[u] & undominated).len(), u))
            .collect();
        cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut excluded = forbidden;
        for (_, u) in cands {
            if chosen.len() + 1 > self.limit() {
                break;
            }
            let mut child_forbidden = excluded.with(u);
            if self.independent {
                child_forbidden |= self.open[u];
            }
            self.search(chosen.with(u), dominated | self.reach[u], child_forbidden)?;
            excluded.insert(u);
        }
        Ok(())
    }

    fn limit(&self) -> usize {
        match &self.goal {
            Goal::Minimize { best } => best.len().saturating_sub(1),
            Goal::Enumerate { target, .. } => *target,
        }
    }

    /// Greedy cover by largest new coverage; always completes when every
    /// vertex has a dominator.
    fn greedy(&self) -> VertexSet {
        let mut chosen = VertexSet::EMPTY;
        let mut dominated = VertexSet::EMPTY;
        let mut forbidden = VertexSet::EMPTY;
        while !(self.all - dominated).is_empty() {
            let undominated = self.all - dominated;
            let pick = (self.all - forbidden - chosen)
                .iter()
                .max_by(|&a, &b| {
                    let ca = (self.reach[a] & undominated).len();
                    let cb = (self.reach[b] & undominated).len();
                    ca.cmp(&cb).then(b.cmp(&a))
                })
                .expect("a dominator is always available");
            chosen.insert(pick);
            dominated |= self.reach[pick];
            if self.independent {
                forbidden |= self.open[pick];
            }
        }
        chosen
    }
}

fn minimize(
    dense: &Dense,
    reach: &[VertexSet],
    independent: bool,
    budget: SearchBudget,
) -> Result<VertexSet, SolveError> {
    let mut search = CoverSearch {
        all: dense.all,
        reach,
        open: &dense.open,
        independent,
        meter: Meter::new(budget),
        goal: Goal::Enumerate {
            target: 0,
            found: Vec::new(),
        },
    };
    let best = search.greedy();
    search.goal = Goal::Minimize { best };
    search.search(VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY)?;
    match search.goal {
        Goal::Minimize { best } => Ok(best),
        Goal::Enumerate { .. } => unreachable!(),
    }
}

/// γ(G) with a minimum dominating set.
pub fn min_dominating_set(
    graph: &Graph,
    budget: SearchBudget,
) -> Result<ParameterWitness, SolveError> {
    let dense = Dense::new(graph)?;
    let best = minimize(&dense, &dense.closed, false, budget)?;
    let witness = ParameterWitness::from_set(Parameter::Gamma, best);
    debug_assert!(witness.validate(graph));
    Ok(witness)
}

/// γ_t(G) with a minimum total dominating set.
///
/// Covering with open neighborhoods reaches members too, so every member
/// automatically has a neighbor inside the set.
pub fn min_total_dominating_set(
    graph: &Graph,
    budget: SearchBudget,
) -> Result<ParameterWitness, SolveError> {
    let dense = Dense::new(graph)?;
    dense.require_isolated_free()?;
    let best = minimize(&dense, &dense.open, false, budget)?;
    let witness = ParameterWitness::from_set(Parameter::GammaT, best);
    debug_assert!(witness.validate(graph));
    Ok(witness)
}

/// i(G) with a minimum independent dominating set.
pub fn min_independent_dominating_set(
    graph: &Graph,
    budget: SearchBudget,
) -> Result<ParameterWitness, SolveError> {
    let dense = Dense::new(graph)?;
    let best = minimize(&dense, &dense.closed, true, budget)?;
    let witness = ParameterWitness::from_set(Parameter::IndependentDomination, best);
    debug_assert!(witness.validate(graph));
    Ok(witness)
}

/// Every dominating set of size γ(G), each ascending, in lexicographic order.
///
/// Each set is produced exactly once: a branch that skips dominator `u`
/// forbids `u` for the rest of that subtree.
pub fn enumerate_min_dominating_sets(
    graph: &Graph,
    budget: SearchBudget,
) -> Result<Vec<Vec<usize>>, SolveError> {
    let dense = Dense::new(graph)?;
    let gamma = min_dominating_set(graph, budget)?.value;
    let mut search = CoverSearch {
        all: dense.all,
        reach: &dense.closed,
        open: &dense.open,
        independent: false,
        meter: Meter::new(budget),
        goal: Goal::Enumerate {
            target: gamma,
            found: Vec::new(),
        },
    };
    search.search(VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY)?;
    let Goal::Enumerate { found, .. } = search.goal else {
        unreachable!()
    };
    let mut sets: Vec<Vec<usize>> = found.into_iter().map(VertexSet::to_vec).collect();
    sets.sort();
    Ok(sets)
}
