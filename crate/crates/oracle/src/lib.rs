//! Reference values for domination-type parameters by exhaustive subset
//! enumeration.
//!
//! Everything here is deliberately naive: every vertex subset is tried and
//! each definition is checked literally. It shares no code with the
//! branch-and-bound solvers it is used to check, and only accepts plain edge
//! lists so it does not depend on their graph type either.

/// Largest order accepted; 2^20 subsets is the practical ceiling.
pub const MAX_ORDER: usize = 20;

/// A small simple graph stored as neighborhood masks.
#[derive(Debug, Clone)]
pub struct SmallGraph {
    n: usize,
    open: Vec<u32>,
    dist: Vec<Vec<Option<usize>>>,
}

impl SmallGraph {
    /// Panics if `n > MAX_ORDER` or an edge is out of range or a loop.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        assert!(n <= MAX_ORDER, "oracle only handles up to {MAX_ORDER} vertices");
        let mut open = vec![0u32; n];
        for &(u, v) in edges {
            assert!(u < n && v < n && u != v, "bad edge ({u}, {v})");
            open[u] |= 1 << v;
            open[v] |= 1 << u;
        }
        // Floyd-Warshall over hop counts.
        let mut dist = vec![vec![None; n]; n];
        for u in 0..n {
            dist[u][u] = Some(0);
            for v in 0..n {
                if open[u] >> v & 1 == 1 {
                    dist[u][v] = Some(1);
                }
            }
        }
        for w in 0..n {
            for u in 0..n {
                for v in 0..n {
                    if let (Some(a), Some(b)) = (dist[u][w], dist[w][v]) {
                        if dist[u][v].is_none_or(|d| a + b < d) {
                            dist[u][v] = Some(a + b);
                        }
                    }
                }
            }
        }
        SmallGraph { n, open, dist }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn all(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    fn subsets(&self) -> impl Iterator<Item = u32> {
        0..=self.all()
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.dist[u][v]
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.open.contains(&0)
    }

    pub fn is_dominating(&self, set: u32) -> bool {
        (0..self.n).all(|v| set >> v & 1 == 1 || self.open[v] & set != 0)
    }

    pub fn is_total_dominating(&self, set: u32) -> bool {
        (0..self.n).all(|v| self.open[v] & set != 0)
    }

    pub fn is_independent(&self, set: u32) -> bool {
        (0..self.n).all(|v| set >> v & 1 == 0 || self.open[v] & set == 0)
    }

    /// True when the subgraph induced by `set` has a perfect matching.
    pub fn induced_perfect_matching(&self, set: u32) -> bool {
        if set == 0 {
            return true;
        }
        let v = set.trailing_zeros() as usize;
        let rest = set & !(1 << v);
        let mut partners = self.open[v] & rest;
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            if self.induced_perfect_matching(rest & !(1 << u)) {
                return true;
            }
        }
        false
    }

    pub fn is_paired_dominating(&self, set: u32) -> bool {
        self.is_dominating(set) && self.induced_perfect_matching(set)
    }

    pub fn is_k_packing(&self, set: u32, k: usize) -> bool {
        let members: Vec<usize> = (0..self.n).filter(|&v| set >> v & 1 == 1).collect();
        members.iter().enumerate().all(|(i, &u)| {
            members[i + 1..]
                .iter()
                .all(|&v| self.dist[u][v].is_none_or(|d| d > k))
        })
    }

    fn min_size(&self, pred: impl Fn(u32) -> bool) -> Option<usize> {
        self.subsets()
            .filter(|&s| pred(s))
            .map(|s| s.count_ones() as usize)
            .min()
    }

    pub fn domination_number(&self) -> usize {
        self.min_size(|s| self.is_dominating(s))
            .expect("V(G) always dominates")
    }

    /// `None` when some vertex is isolated.
    pub fn total_domination_number(&self) -> Option<usize> {
        self.min_size(|s| self.is_total_dominating(s))
    }

    /// `None` when some vertex is isolated.
    pub fn paired_domination_number(&self) -> Option<usize> {
        if self.has_isolated_vertex() {
            return None;
        }
        self.min_size(|s| self.is_paired_dominating(s))
    }

    pub fn independent_domination_number(&self) -> usize {
        self.min_size(|s| self.is_independent(s) && self.is_dominating(s))
            .expect("a maximal independent set dominates")
    }

    pub fn packing_number(&self, k: usize) -> usize {
        self.subsets()
            .filter(|&s| self.is_k_packing(s, k))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// All dominating sets of minimum size, each as an ascending vertex
    /// list, ordered by their bitmask.
    pub fn minimum_dominating_sets(&self) -> Vec<Vec<usize>> {
        let gamma = self.domination_number();
        self.subsets()
            .filter(|&s| s.count_ones() as usize == gamma && self.is_dominating(s))
            .map(|s| (0..self.n).filter(|&v| s >> v & 1 == 1).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> SmallGraph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        SmallGraph::new(n, &edges)
    }

    fn cycle(n: usize) -> SmallGraph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        SmallGraph::new(n, &edges)
    }

    #[test]
    fn path_six() {
        let g = path(6);
        assert_eq!(g.domination_number(), 2);
        assert_eq!(g.total_domination_number(), Some(4));
        assert_eq!(g.paired_domination_number(), Some(4));
        assert_eq!(g.independent_domination_number(), 2);
        assert_eq!(g.packing_number(2), 2);
        assert_eq!(g.packing_number(3), 2);
    }

    #[test]
    fn small_cycles_and_paths() {
        assert_eq!(cycle(6).domination_number(), 2);
        assert_eq!(cycle(6).independent_domination_number(), 2);
        assert_eq!(path(4).total_domination_number(), Some(2));
        assert_eq!(path(3).minimum_dominating_sets(), vec![vec![1]]);
        assert_eq!(path(2).minimum_dominating_sets(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn isolated_vertex() {
        let g = SmallGraph::new(3, &[(0, 1)]);
        assert_eq!(g.total_domination_number(), None);
        assert_eq!(g.paired_domination_number(), None);
    }
}
