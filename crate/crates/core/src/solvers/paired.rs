//! Paired domination, searched directly over vertex-disjoint edges.
//!
//! A paired dominating set is exactly a set of vertex-disjoint edges whose
//! closed neighborhoods cover the graph, so the search state is a list of
//! chosen pairs and the perfect matching comes out with the answer.

use super::{Dense, Meter, Parameter, ParameterWitness, SearchBudget, SolveError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

struct PairSearch<'a> {
    dense: &'a Dense,
    edges: Vec<(usize, usize)>,
    meter: Meter,
    best: Vec<(usize, usize)>,
}

struct Bound {
    pairs: usize,
    pivot_cands: VertexSet,
}

impl<'a> PairSearch<'a> {
    fn best_size(&self) -> usize {
        2 * self.best.len()
    }

    /// Vertices of `available` with at least one neighbor in `available`.
    fn pairable(&self, set: VertexSet, available: VertexSet) -> VertexSet {
        set.iter()
            .filter(|&u| self.dense.open[u].intersects(available))
            .collect()
    }

    /// Lower bound on the number of further pairs, or `None` if some
    /// undominated vertex can no longer be reached by any available pair.
    ///
    /// Two bounds are combined. The packing bound collects undominated
    /// vertices no single pair can dominate together (no shared candidate
    /// and no edge between their candidate sets), each forcing its own pair.
    /// The coverage bound divides the undominated count by the best coverage
    /// of any available pair.
    fn bound(&self, undominated: VertexSet, available: VertexSet) -> Option<Bound> {
        let d = self.dense;
        let mut cands: Vec<(usize, usize, VertexSet)> = Vec::with_capacity(undominated.len());
        for w in undominated {
            let c = self.pairable(d.closed[w] & available, available);
            if c.is_empty() {
                return None;
            }
            cands.push((c.len(), w, c));
        }
        cands.sort_unstable_by_key(|&(len, w, _)| (len, w));

        let mut blocked = VertexSet::EMPTY;
        let mut packed = 0;
        for &(_, _, c) in &cands {
            if !c.intersects(blocked) {
                packed += 1;
                for u in c {
                    blocked |= d.closed[u];
                }
                blocked &= available;
            }
        }

        let best_cover = self
            .edges
            .iter()
            .filter(|&&(a, b)| available.contains(a) && available.contains(b))
            .map(|&(a, b)| ((d.closed[a] | d.closed[b]) & undominated).len())
            .max()?;
        let by_cover = undominated.len().div_ceil(best_cover);

        Some(Bound {
            pairs: packed.max(by_cover),
            pivot_cands: cands[0].2,
        })
    }

    fn search(
        &mut self,
        used: VertexSet,
        dominated: VertexSet,
        excluded: VertexSet,
        pairs: &mut Vec<(usize, usize)>,
    ) -> Result<(), SolveError> {
        self.meter.tick()?;
        let d = self.dense;
        let undominated = d.all - dominated;
        if undominated.is_empty() {
            if used.len() < self.best_size() {
                self.best = pairs.clone();
            }
            return Ok(());
        }
        let available = d.all - used - excluded;
        let Some(bound) = self.bound(undominated, available) else {
            return Ok(());
        };
        if used.len() + 2 * bound.pairs >= self.best_size() {
            return Ok(());
        }

        let mut order: Vec<(usize, usize)> = bound
            .pivot_cands
            .iter()
            .map(|u| ((d.closed[u] & undominated).len(), u))
            .collect();
        order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        // Branch on which vertex dominates the pivot. Once all pairings of
        // `u` are explored, `u` is kept out of the remaining branches.
        let mut local_excluded = excluded;
        for (_, u) in order {
            if used.len() + 2 >= self.best_size() {
                break;
            }
            let local_available = d.all - used - local_excluded;
            let after_u = undominated - d.closed[u];
            let mut partners: Vec<(usize, usize)> = (d.open[u] & local_available)
                .iter()
                .map(|p| ((d.closed[p] & after_u).len(), p))
                .collect();
            partners.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            for (_, p) in partners {
                pairs.push((u.min(p), u.max(p)));
                let covered = dominated | d.closed[u] | d.closed[p];
                let result = self.search(used.with(u).with(p), covered, local_excluded, pairs);
                pairs.pop();
                result?;
            }
            local_excluded.insert(u);
        }
        Ok(())
    }

    /// Repeatedly takes the disjoint edge with the largest new coverage.
    fn greedy(&self) -> Vec<(usize, usize)> {
        let d = self.dense;
        let mut used = VertexSet::EMPTY;
        let mut dominated = VertexSet::EMPTY;
        let mut pairs = Vec::new();
        while dominated != d.all {
            let undominated = d.all - dominated;
            let &(a, b) = self
                .edges
                .iter()
                .filter(|&&(a, b)| !used.contains(a) && !used.contains(b))
                .max_by(|&&(a1, b1), &&(a2, b2)| {
                    let c1 = ((d.closed[a1] | d.closed[b1]) & undominated).len();
                    let c2 = ((d.closed[a2] | d.closed[b2]) & undominated).len();
                    c1.cmp(&c2).then((a2, b2).cmp(&(a1, b1)))
                })
                .expect("an undominated vertex and its neighbor are always free");
            used = used.with(a).with(b);
            dominated |= d.closed[a] | d.closed[b];
            pairs.push((a, b));
        }
        pairs
    }
}

/// γ_pr(G) with a minimum paired dominating set and its perfect matching.
pub fn min_paired_dominating_set(
    graph: &Graph,
    budget: SearchBudget,
) -> Result<ParameterWitness, SolveError> {
    let dense = Dense::new(graph)?;
    dense.require_isolated_free()?;
    let mut search = PairSearch {
        dense: &dense,
        edges: graph.edges().collect(),
        meter: Meter::new(budget),
        best: Vec::new(),
    };
    search.best = search.greedy();
    let mut pairs = Vec::new();
    search.search(VertexSet::EMPTY, VertexSet::EMPTY, VertexSet::EMPTY, &mut pairs)?;

    let mut pairing = search.best;
    pairing.sort_unstable();
    let mut set: Vec<usize> = pairing.iter().flat_map(|&(a, b)| [a, b]).collect();
    set.sort_unstable();
    let witness = ParameterWitness {
        kind: Parameter::GammaPr,
        value: set.len(),
        set,
        pairing: Some(pairing),
    };
    debug_assert!(witness.validate(graph));
    Ok(witness)
}
