//! Simple undirected graphs and the structural queries every solver and
//! checker builds on.

use std::collections::{BTreeMap, HashSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("graph power must be at least 1")]
    ZeroPower,
    #[error("packing distance parameter must be at least 1")]
    ZeroPacking,
    #[error("bad pairing: {0}")]
    BadPairing(String),
}

/// A simple undirected graph on vertices `0..n` with optional role labels.
///
/// Adjacency lists are sorted. Graphs are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: BTreeMap<usize, String>,
}

/// Hop distances from one source; `None` marks vertices in other components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<Option<u32>>,
}

impl DistanceRow {
    pub fn get(&self, v: usize) -> Option<u32> {
        self.dist[v]
    }

    pub fn is_reachable(&self, v: usize) -> bool {
        self.dist[v].is_some()
    }
}

/// Structural flags reported by [`Graph::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Structure {
    pub connected: bool,
    pub tree: bool,
    pub bipartite: bool,
    pub isolated_free: bool,
}

/// The definition a candidate vertex set is checked against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetKind {
    Dominating,
    TotalDominating,
    /// A dominating set together with the pairs of its perfect matching.
    PairedDominating(Vec<(usize, usize)>),
    /// Pairwise distance at least `k + 1`.
    KPacking(usize),
    Independent,
}

impl Graph {
    /// Builds a graph, rejecting loops, repeated edges and bad ids.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
            labels: BTreeMap::new(),
        })
    }

    /// Attaches role labels; every id must be a vertex.
    pub fn with_labels(
        mut self,
        labels: impl IntoIterator<Item = (usize, String)>,
    ) -> Result<Self, GraphError> {
        for (v, role) in labels {
            self.check_vertex(v)?;
            self.labels.insert(v, role);
        }
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Looks a vertex up by its role label.
    pub fn vertex_by_label(&self, role: &str) -> Option<usize> {
        self.labels.iter().find(|(_, r)| *r == role).map(|(&v, _)| v)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::OutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Breadth-first hop distances from `source`.
    pub fn shortest_distances(&self, source: usize) -> Result<DistanceRow, GraphError> {
        self.check_vertex(source)?;
        Ok(DistanceRow {
            source,
            dist: self.distances_from_set(&[source]),
        })
    }

    /// Multi-source breadth-first search: distance from each vertex to the
    /// nearest member of `sources`.
    pub fn distances_from_set(&self, sources: &[usize]) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::with_capacity(self.order());
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or_default() + 1;
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.distances_from_set(&[0]).iter().all(Option::is_some)
    }

    /// Connectivity, tree, bipartiteness and isolated-vertex flags.
    ///
    /// The empty graph is reported as disconnected (and hence not a tree).
    pub fn classify(&self) -> Structure {
        let n = self.order();
        let connected = self.is_connected();
        Structure {
            connected,
            tree: connected && self.edge_count + 1 == n,
            bipartite: self.two_coloring().is_some(),
            isolated_free: self.adj.iter().all(|l| !l.is_empty()),
        }
    }

    /// A proper two-coloring, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u]?;
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    /// Support vertices and leaves, each in ascending order.
    pub fn supports_and_leaves(&self) -> (Vec<usize>, Vec<usize>) {
        let leaves: Vec<usize> = (0..self.order()).filter(|&v| self.degree(v) == 1).collect();
        let mut is_support = vec![false; self.order()];
        for &l in &leaves {
            is_support[self.adj[l][0]] = true;
        }
        let supports = (0..self.order()).filter(|&v| is_support[v]).collect();
        (supports, leaves)
    }

    /// The `k`-th power: `u ~ v` whenever `1 <= dist(u, v) <= k`.
    pub fn power_graph(&self, k: usize) -> Result<Graph, GraphError> {
        if k == 0 {
            return Err(GraphError::ZeroPower);
        }
        let n = self.order();
        let mut adj = vec![Vec::new(); n];
        let mut dist = vec![usize::MAX; n];
        let mut touched = Vec::new();
        let mut queue = VecDeque::new();
        let mut edge_count = 0;
        for s in 0..n {
            dist[s] = 0;
            touched.push(s);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if dist[u] == k {
                    continue;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        touched.push(w);
                        queue.push_back(w);
                    }
                }
            }
            for &w in &touched {
                if w != s {
                    adj[s].push(w);
                    if s < w {
                        edge_count += 1;
                    }
                }
                dist[w] = usize::MAX;
            }
            touched.clear();
            adj[s].sort_unstable();
        }
        Ok(Graph {
            adj,
            edge_count,
            labels: self.labels.clone(),
        })
    }

    /// A perfect matching of the whole graph, found by backtracking.
    pub fn perfect_matching(&self) -> Option<Vec<(usize, usize)>> {
        let all: Vec<usize> = (0..self.order()).collect();
        self.perfect_matching_within(&all)
    }

    pub fn has_perfect_matching(&self) -> bool {
        self.perfect_matching().is_some()
    }

    /// A perfect matching of the subgraph induced by `set`.
    ///
    /// Always matches the lowest unmatched vertex next, so only intended for
    /// sets of a few dozen vertices.
    pub fn perfect_matching_within(&self, set: &[usize]) -> Option<Vec<(usize, usize)>> {
        if set.len() % 2 == 1 {
            return None;
        }
        let mut members: Vec<usize> = set.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut free = vec![false; self.order()];
        for &v in &members {
            free[v] = true;
        }
        let mut pairs = Vec::with_capacity(members.len() / 2);
        self.match_rest(&members, 0, &mut free, &mut pairs)
            .then_some(pairs)
    }

    fn match_rest(
        &self,
        members: &[usize],
        from: usize,
        free: &mut [bool],
        pairs: &mut Vec<(usize, usize)>,
    ) -> bool {
        let Some(pos) = (from..members.len()).find(|&i| free[members[i]]) else {
            return true;
        };
        let v = members[pos];
        free[v] = false;
        for &w in &self.adj[v] {
            if free[w] {
                free[w] = false;
                pairs.push((v, w));
                if self.match_rest(members, pos + 1, free, pairs) {
                    return true;
                }
                pairs.pop();
                free[w] = true;
            }
        }
        free[v] = true;
        false
    }

    pub fn is_dominating(&self, in_set: &[bool]) -> bool {
        (0..self.order()).all(|v| in_set[v] || self.adj[v].iter().any(|&w| in_set[w]))
    }

    /// Checks `set` against the literal definition selected by `kind`.
    pub fn validate_set(&self, set: &[usize], kind: &SetKind) -> Result<bool, GraphError> {
        let mut in_set = vec![false; self.order()];
        for &v in set {
            self.check_vertex(v)?;
            in_set[v] = true;
        }
        let valid = match kind {
            SetKind::Dominating => self.is_dominating(&in_set),
            SetKind::TotalDominating => {
                (0..self.order()).all(|v| self.adj[v].iter().any(|&w| in_set[w]))
            }
            SetKind::Independent => set
                .iter()
                .all(|&v| self.adj[v].iter().all(|&w| !in_set[w])),
            SetKind::KPacking(k) => {
                if *k == 0 {
                    return Err(GraphError::ZeroPacking);
                }
                self.is_packing(set, &in_set, *k)
            }
            SetKind::PairedDominating(pairing) => {
                let mut covered = vec![false; self.order()];
                let mut disjoint = true;
                for &(u, v) in pairing {
                    for w in [u, v] {
                        if w >= self.order() || !in_set[w] {
                            return Err(GraphError::BadPairing(format!(
                                "vertex {w} is not in the set"
                            )));
                        }
                    }
                    if !self.has_edge(u, v) {
                        return Err(GraphError::BadPairing(format!("{{{u}, {v}}} is not an edge")));
                    }
                    for w in [u, v] {
                        disjoint &= !covered[w];
                        covered[w] = true;
                    }
                }
                let covers = set.iter().all(|&v| covered[v]);
                disjoint && covers && self.is_dominating(&in_set)
            }
        };
        Ok(valid)
    }

    /// Pairwise distance at least `k + 1`: no member reaches another within
    /// `k` hops.
    fn is_packing(&self, set: &[usize], in_set: &[bool], k: usize) -> bool {
        let mut dist = vec![usize::MAX; self.order()];
        let mut queue = VecDeque::new();
        for &s in set {
            let mut touched = vec![s];
            dist[s] = 0;
            queue.push_back(s);
            let mut clash = false;
            while let Some(u) = queue.pop_front() {
                if dist[u] == k {
                    continue;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        touched.push(w);
                        queue.push_back(w);
                        clash |= in_set[w];
                    }
                }
            }
            queue.clear();
            for w in touched {
                dist[w] = usize::MAX;
            }
            if clash {
                return false;
            }
        }
        true
    }
}

/// Free-function form of [`Graph::new`].
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_rejects_bad_edges() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.neighbors(1), &[0, 2]);
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(4, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(4, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::OutOfRange { vertex: 2, order: 2 })
        );
    }

    #[test]
    fn labels_must_be_in_range() {
        let g = path(2);
        assert!(g.clone().with_labels([(1, "u_1".to_string())]).is_ok());
        assert!(g.with_labels([(2, "u_1".to_string())]).is_err());
    }

    #[test]
    fn distances() {
        let row = path(4).shortest_distances(0).unwrap();
        assert_eq!(row.dist, vec![Some(0), Some(1), Some(2), Some(3)]);

        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let row = two.shortest_distances(0).unwrap();
        assert_eq!(row.get(1), Some(1));
        assert!(!row.is_reachable(2));
        assert_eq!(row.get(3), None);

        let mut c6: Vec<u32> = cycle(6)
            .shortest_distances(4)
            .unwrap()
            .dist
            .into_iter()
            .map(Option::unwrap)
            .collect();
        c6.sort_unstable();
        assert_eq!(c6, vec![0, 1, 1, 2, 2, 3]);

        assert!(path(3).shortest_distances(3).is_err());
    }

    #[test]
    fn classify_examples() {
        let c6 = cycle(6).classify();
        assert!(c6.connected && !c6.tree && c6.bipartite && c6.isolated_free);
        let c3 = cycle(3).classify();
        assert!(c3.connected && !c3.tree && !c3.bipartite && c3.isolated_free);
        let p5 = path(5).classify();
        assert!(p5.connected && p5.tree && p5.bipartite && p5.isolated_free);
        let lone = Graph::new(3, &[(0, 1)]).unwrap().classify();
        assert!(!lone.connected && !lone.isolated_free);
    }

    #[test]
    fn supports_and_leaves_examples() {
        assert_eq!(path(4).supports_and_leaves(), (vec![1, 2], vec![0, 3]));
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.supports_and_leaves(), (vec![0], vec![1, 2, 3]));
        assert_eq!(cycle(6).supports_and_leaves(), (vec![], vec![]));
    }

    #[test]
    fn power_examples() {
        let p4 = path(4);
        assert_eq!(p4.power_graph(1).unwrap(), p4);
        let sq: Vec<_> = p4.power_graph(2).unwrap().edges().collect();
        assert_eq!(sq, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let cube = p4.power_graph(3).unwrap();
        assert_eq!(cube.size(), 6);
        assert_eq!(p4.power_graph(0), Err(GraphError::ZeroPower));
    }

    #[test]
    fn matching_examples() {
        assert_eq!(path(4).perfect_matching(), Some(vec![(0, 1), (2, 3)]));
        assert!(!path(3).has_perfect_matching());
        assert!(cycle(6).has_perfect_matching());
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!star.has_perfect_matching());
        assert_eq!(Graph::new(0, &[]).unwrap().perfect_matching(), Some(vec![]));
    }

    #[test]
    fn validate_examples() {
        let p6 = path(6);
        assert!(p6.validate_set(&[1, 4], &SetKind::Dominating).unwrap());
        assert!(!p6.validate_set(&[1, 3], &SetKind::Dominating).unwrap());
        assert!(p6
            .validate_set(&[1, 2, 4, 5], &SetKind::PairedDominating(vec![(1, 2), (4, 5)]))
            .unwrap());
        assert!(p6.validate_set(&[0, 4], &SetKind::KPacking(3)).unwrap());
        assert!(!p6.validate_set(&[0, 3], &SetKind::KPacking(3)).unwrap());
        assert!(p6.validate_set(&[1, 2, 3, 4], &SetKind::TotalDominating).unwrap());
        assert!(!p6.validate_set(&[1, 4], &SetKind::TotalDominating).unwrap());
        assert!(p6.validate_set(&[0, 2, 4], &SetKind::Independent).unwrap());
        assert!(!p6.validate_set(&[0, 1], &SetKind::Independent).unwrap());
    }

    #[test]
    fn validate_pairing_errors() {
        let p6 = path(6);
        let outside = SetKind::PairedDominating(vec![(1, 2), (3, 4)]);
        assert!(matches!(
            p6.validate_set(&[1, 2, 4, 5], &outside),
            Err(GraphError::BadPairing(_))
        ));
        let non_edge = SetKind::PairedDominating(vec![(1, 4), (2, 5)]);
        assert!(matches!(
            p6.validate_set(&[1, 2, 4, 5], &non_edge),
            Err(GraphError::BadPairing(_))
        ));
        // Pairing that leaves a member unmatched is simply invalid.
        let partial = SetKind::PairedDominating(vec![(1, 2)]);
        assert!(!p6.validate_set(&[1, 2, 4, 5], &partial).unwrap());
        let overlapping = SetKind::PairedDominating(vec![(1, 2), (2, 3), (4, 5)]);
        assert!(!p6.validate_set(&[1, 2, 3, 4, 5], &overlapping).unwrap());
        assert!(p6.validate_set(&[9], &SetKind::Dominating).is_err());
        assert_eq!(
            p6.validate_set(&[0], &SetKind::KPacking(0)),
            Err(GraphError::ZeroPacking)
        );
    }
}
