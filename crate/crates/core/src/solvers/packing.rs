//! Maximum independent set, and ρ_k as independence in the k-th power.

use super::{Dense, Meter, Parameter, ParameterWitness, SearchBudget, SolveError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

struct MisSearch<'a> {
    open: &'a [VertexSet],
    closed: &'a [VertexSet],
    meter: Meter,
    best: VertexSet,
}

impl<'a> MisSearch<'a> {
    /// Number of cliques in a greedy clique cover of `cand`; any independent
    /// set takes at most one vertex from each.
    fn clique_cover(&self, mut cand: VertexSet) -> usize {
        let mut cliques = 0;
        while let Some(v) = cand.first() {
            let mut clique = VertexSet::singleton(v);
            let mut common = self.open[v] & cand;
            while let Some(u) = common.first() {
                clique.insert(u);
                common &= self.open[u];
            }
            cand = cand - clique;
            cliques += 1;
        }
        cliques
    }

    fn search(&mut self, mut cand: VertexSet, mut current: VertexSet) -> Result<(), SolveError> {
        loop {
            self.meter.tick()?;
            if cand.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current;
                }
                return Ok(());
            }
            if current.len() + self.clique_cover(cand) <= self.best.len() {
                return Ok(());
            }
            // A vertex of degree at most one is in some maximum independent
            // set of what remains.
            let mut pivot = (0, usize::MAX);
            let mut forced = None;
            for v in cand {
                let deg = (self.open[v] & cand).len();
                if deg <= 1 {
                    forced = Some(v);
                    break;
                }
                if deg > pivot.0 {
                    pivot = (deg, v);
                }
            }
            if let Some(v) = forced {
                current.insert(v);
                cand = cand - self.closed[v];
                continue;
            }
            let v = pivot.1;
            self.search(cand - self.closed[v], current.with(v))?;
            cand.remove(v);
        }
    }

    fn greedy(&self, all: VertexSet) -> VertexSet {
        let mut cand = all;
        let mut chosen = VertexSet::EMPTY;
        while !cand.is_empty() {
            let v = cand
                .iter()
                .min_by_key(|&v| ((self.open[v] & cand).len(), v))
                .expect("nonempty");
            chosen.insert(v);
            cand = cand - self.closed[v];
        }
        chosen
    }
}

fn maximum_independent(dense: &Dense, budget: SearchBudget) -> Result<VertexSet, SolveError> {
    let mut search = MisSearch {
        open: &dense.open,
        closed: &dense.closed,
        meter: Meter::new(budget),
        best: VertexSet::EMPTY,
    };
    search.best = search.greedy(dense.all);
    search.search(dense.all, VertexSet::EMPTY)?;
    Ok(search.best)
}

/// α(G) = ρ_1(G).
pub fn max_independent_set(
    graph: &Graph,
    budget: SearchBudget,
) -> Result<ParameterWitness, SolveError> {
    max_k_packing(graph, 1, budget)
}

/// ρ_k(G): a largest set with pairwise distance at least `k + 1`, found as a
/// maximum independent set of the `k`-th power.
pub fn max_k_packing(
    graph: &Graph,
    k: usize,
    budget: SearchBudget,
) -> Result<ParameterWitness, SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroPacking);
    }
    if graph.order() > crate::vertex_set::MAX_SET_ORDER {
        return Err(SolveError::TooLarge(graph.order()));
    }
    let power = graph.power_graph(k).map_err(|_| SolveError::ZeroPacking)?;
    let dense = Dense::new(&power)?;
    let best = maximum_independent(&dense, budget)?;
    let witness = ParameterWitness::from_set(Parameter::Packing(k), best);
    debug_assert!(witness.validate(graph));
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    const B: SearchBudget = SearchBudget {
        max_seconds: 10.0,
        max_nodes: 1_000_000,
    };

    #[test]
    fn path_six() {
        assert_eq!(max_k_packing(&path(6), 2, B).unwrap().value, 2);
        let w = max_k_packing(&path(6), 3, B).unwrap();
        assert_eq!(w.value, 2);
        assert!([vec![0, 4], vec![0, 5], vec![1, 5]].contains(&w.set));
        assert_eq!(max_independent_set(&path(6), B).unwrap().value, 3);
    }

    #[test]
    fn complete_graph() {
        let edges: Vec<_> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        let k5 = Graph::new(5, &edges).unwrap();
        for k in 1..4 {
            assert_eq!(max_k_packing(&k5, k, B).unwrap().value, 1);
        }
    }

    #[test]
    fn disconnected_components_pack_independently() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(max_k_packing(&g, 5, B).unwrap().value, 2);
    }

    #[test]
    fn zero_is_rejected() {
        assert_eq!(max_k_packing(&path(3), 0, B), Err(SolveError::ZeroPacking));
    }
}
