//! Formula-to-graph constructions relating satisfiability to equalities
//! between domination-type parameters, and a verifier that checks each
//! claimed equivalence on concrete formulas.
//!
//! Vertex ids follow a fixed layout: all literal gadgets in variable order,
//! then all clause gadgets in clause order, each gadget listing its
//! vertices in the order documented on its builder. Every vertex carries a
//! role label such as `u_2`, `u'_1`, `~u_3^2` or `c_1^5`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cnf::{CnfError, CnfFormula, Literal};
use crate::graph::Graph;
use crate::solvers::{solve, Parameter, SearchBudget, SolveError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReductionError {
    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),
    #[error("unknown gadget variant `{0}`")]
    UnknownVariant(String),
    #[error(transparent)]
    Oracle(#[from] CnfError),
    #[error(transparent)]
    Solve(SolveError),
}

/// Which right-hand clause gadget the 2ρ_4 construction uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rho4Variant {
    /// Five edges on `b^12..b^15`, without `b^12 b^14`.
    Tikz,
    /// A full `K_4` on `b^12..b^15`, mirroring the left gadget.
    Mirror,
}

impl FromStr for Rho4Variant {
    type Err = ReductionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tikz" => Ok(Rho4Variant::Tikz),
            "mirror" => Ok(Rho4Variant::Mirror),
            other => Err(ReductionError::UnknownVariant(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "construction", content = "variant")]
pub enum ConstructionKind {
    #[serde(rename = "total-vs-paired")]
    TotalVsPaired,
    #[serde(rename = "paired-vs-2gamma")]
    PairedVs2Gamma,
    #[serde(rename = "paired-vs-2rho4")]
    PairedVs2Rho4(Rho4Variant),
    #[serde(rename = "paired-vs-2rho3")]
    PairedVs2Rho3,
}

impl ConstructionKind {
    pub const NAMES: [&'static str; 4] = [
        "total-vs-paired",
        "paired-vs-2gamma",
        "paired-vs-2rho4",
        "paired-vs-2rho3",
    ];

    /// Parses a construction name; `variant` only applies to 2ρ_4.
    pub fn from_name(name: &str, variant: Rho4Variant) -> Result<Self, ReductionError> {
        match name {
            "total-vs-paired" => Ok(ConstructionKind::TotalVsPaired),
            "paired-vs-2gamma" => Ok(ConstructionKind::PairedVs2Gamma),
            "paired-vs-2rho4" => Ok(ConstructionKind::PairedVs2Rho4(variant)),
            "paired-vs-2rho3" => Ok(ConstructionKind::PairedVs2Rho3),
            other => Err(ReductionError::UnknownConstruction(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::TotalVsPaired => Self::NAMES[0],
            ConstructionKind::PairedVs2Gamma => Self::NAMES[1],
            ConstructionKind::PairedVs2Rho4(_) => Self::NAMES[2],
            ConstructionKind::PairedVs2Rho3 => Self::NAMES[3],
        }
    }

    /// True for the constructions reduced from NAE-3SAT rather than 3SAT.
    pub fn uses_nae(self) -> bool {
        matches!(
            self,
            ConstructionKind::PairedVs2Rho4(_) | ConstructionKind::PairedVs2Rho3
        )
    }

    /// The two parameters compared, `(left, right)`, where the claim is
    /// `left == factor * right` iff the formula is (NAE-)satisfiable.
    pub fn compared(self) -> (Parameter, Parameter, usize) {
        match self {
            ConstructionKind::TotalVsPaired => (Parameter::GammaPr, Parameter::GammaT, 1),
            ConstructionKind::PairedVs2Gamma => (Parameter::GammaPr, Parameter::Gamma, 2),
            ConstructionKind::PairedVs2Rho4(_) => (Parameter::GammaPr, Parameter::Packing(4), 2),
            ConstructionKind::PairedVs2Rho3 => (Parameter::GammaPr, Parameter::Packing(3), 2),
        }
    }

    pub fn build(self, formula: &CnfFormula) -> Graph {
        match self {
            ConstructionKind::TotalVsPaired => build_total_vs_paired(formula),
            ConstructionKind::PairedVs2Gamma => build_paired_vs_2gamma(formula),
            ConstructionKind::PairedVs2Rho4(v) => build_paired_vs_2rho4(formula, v),
            ConstructionKind::PairedVs2Rho3 => build_paired_vs_2rho3(formula),
        }
    }

    /// Closed-form values claimed for a formula with `n` variables and `m`
    /// clauses.
    pub fn predictions(self, n: usize, m: usize) -> BTreeMap<String, Prediction> {
        let entries: Vec<(Parameter, usize, Relation)> = match self {
            ConstructionKind::TotalVsPaired => vec![
                (Parameter::GammaT, 2 * m + 2 * n, Relation::EqualIffOracle),
                (Parameter::GammaPr, 2 * m + 2 * n, Relation::EqualIffOracle),
            ],
            ConstructionKind::PairedVs2Gamma => vec![
                (Parameter::Gamma, 2 * n, Relation::EqualIffOracle),
                (Parameter::GammaPr, 4 * n, Relation::Always),
            ],
            ConstructionKind::PairedVs2Rho4(_) => vec![
                (Parameter::Packing(4), n + 3 * m, Relation::Always),
                (Parameter::GammaPr, 2 * n + 6 * m, Relation::EqualIffOracle),
            ],
            ConstructionKind::PairedVs2Rho3 => vec![
                (Parameter::Packing(3), n, Relation::Always),
                (Parameter::GammaPr, 2 * n, Relation::EqualIffOracle),
            ],
        };
        entries
            .into_iter()
            .map(|(p, value, relation)| {
                (
                    p.to_string(),
                    Prediction {
                        value,
                        relation,
                        confirmed: None,
                    },
                )
            })
            .collect()
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionKind::PairedVs2Rho4(Rho4Variant::Tikz) => f.write_str("paired-vs-2rho4 (tikz)"),
            ConstructionKind::PairedVs2Rho4(Rho4Variant::Mirror) => {
                f.write_str("paired-vs-2rho4 (mirror)")
            }
            other => f.write_str(other.name()),
        }
    }
}

/// Collects labeled vertices and edges in layout order.
#[derive(Default)]
struct Layout {
    labels: Vec<(usize, String)>,
    edges: Vec<(usize, usize)>,
}

impl Layout {
    fn vertex(&mut self, role: String) -> usize {
        let id = self.labels.len();
        self.labels.push((id, role));
        id
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u, v));
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    fn finish(self) -> Graph {
        Graph::new(self.labels.len(), &self.edges)
            .and_then(|g| g.with_labels(self.labels))
            .expect("gadget layouts produce simple graphs")
    }
}

/// Per variable `i`: `u_i, a_i, b_i, u'_i` with `b_i` adjacent to the other
/// three. Per clause `j`: the path `c_j^1 .. c_j^5`, with `c_j^5` joined to
/// `u_i` for each positive occurrence of `u_i` and to `u'_i` for each
/// negated one.
pub fn build_total_vs_paired(formula: &CnfFormula) -> Graph {
    let mut g = Layout::default();
    let mut literal = Vec::with_capacity(formula.n_vars());
    for i in 1..=formula.n_vars() {
        let u = g.vertex(format!("u_{i}"));
        let a = g.vertex(format!("a_{i}"));
        let b = g.vertex(format!("b_{i}"));
        let u_neg = g.vertex(format!("u'_{i}"));
        g.edge(b, u);
        g.edge(b, u_neg);
        g.edge(b, a);
        literal.push((u, u_neg));
    }
    for (j, clause) in formula.clauses().iter().enumerate() {
        let c: Vec<usize> = (1..=5).map(|t| g.vertex(format!("c_{}^{t}", j + 1))).collect();
        for w in c.windows(2) {
            g.edge(w[0], w[1]);
        }
        for lit in clause {
            let (u, u_neg) = literal[lit.var - 1];
            g.edge(c[4], if lit.positive { u } else { u_neg });
        }
    }
    g.finish()
}

/// Per variable `i`: the 6-cycle `u_i, w_i, u'_i, z_i^1, z_i^2, z_i^3`. Per
/// clause `j`: one vertex `c_j` joined to the literal vertex of each of its
/// occurrences (`u_i` or `u'_i`).
pub fn build_paired_vs_2gamma(formula: &CnfFormula) -> Graph {
    let mut g = Layout::default();
    let mut literal = Vec::with_capacity(formula.n_vars());
    for i in 1..=formula.n_vars() {
        let cycle = [
            g.vertex(format!("u_{i}")),
            g.vertex(format!("w_{i}")),
            g.vertex(format!("u'_{i}")),
            g.vertex(format!("z_{i}^1")),
            g.vertex(format!("z_{i}^2")),
            g.vertex(format!("z_{i}^3")),
        ];
        for t in 0..6 {
            g.edge(cycle[t], cycle[(t + 1) % 6]);
        }
        literal.push((cycle[0], cycle[2]));
    }
    for (j, clause) in formula.clauses().iter().enumerate() {
        let c = g.vertex(format!("c_{}", j + 1));
        for lit in clause {
            let (u, u_neg) = literal[lit.var - 1];
            g.edge(c, if lit.positive { u } else { u_neg });
        }
    }
    g.finish()
}

/// Vertices of one variable gadget shared by both packing constructions.
#[derive(Clone, Copy)]
struct PackingLiteral {
    pos: [usize; 2],
    neg: [usize; 2],
}

impl PackingLiteral {
    fn same(self, lit: Literal) -> [usize; 2] {
        if lit.positive {
            self.pos
        } else {
            self.neg
        }
    }

    fn opposite(self, lit: Literal) -> [usize; 2] {
        if lit.positive {
            self.neg
        } else {
            self.pos
        }
    }
}

/// Per variable `i`: `a_i^1, a_i^2, ~u_i^1, ~u_i^2, u_i^1, u_i^2` forming the
/// 6-cycle `a^1 ~u^1 ~u^2 a^2 u^2 u^1` plus chords `~u^1 u^1`, `~u^2 u^2`.
fn packing_literals(g: &mut Layout, n: usize) -> Vec<PackingLiteral> {
    (1..=n)
        .map(|i| {
            let a1 = g.vertex(format!("a_{i}^1"));
            let a2 = g.vertex(format!("a_{i}^2"));
            let n1 = g.vertex(format!("~u_{i}^1"));
            let n2 = g.vertex(format!("~u_{i}^2"));
            let p1 = g.vertex(format!("u_{i}^1"));
            let p2 = g.vertex(format!("u_{i}^2"));
            for (x, y) in [(a1, n1), (n1, n2), (n2, a2), (a2, p2), (p2, p1), (p1, a1)] {
                g.edge(x, y);
            }
            g.edge(n1, p1);
            g.edge(n2, p2);
            PackingLiteral {
                pos: [p1, p2],
                neg: [n1, n2],
            }
        })
        .collect()
}

/// Literal gadgets as in [`packing_literals`]. Per clause `j`, 24 vertices in
/// the order `c^1..c^6, k^1..k^6, d^1, d^2, b^1..b^5, b^11..b^15`:
///
/// * `k^1..k^6` form a `K_6`, `k^t` adjacent to `c^t`; `d^2` is adjacent to
///   every `k^t` and `d^1` hangs from `d^2`;
/// * `b^2..b^5` form a `K_4`, `b^1` hangs from `b^2`, and `c^4 b^5`,
///   `c^5 b^4`, `c^6 b^3`;
/// * on `b^12..b^15` the edges `b^15 b^14, b^14 b^13, b^13 b^12, b^15 b^13,
///   b^15 b^12` (plus `b^14 b^12` under [`Rho4Variant::Mirror`]), `b^11`
///   hangs from `b^14`, and `c^1 b^15`, `c^2 b^12`, `c^3 b^13`;
/// * for the literals `x, y, z`: `c^1, c^2, c^3` join both same-polarity
///   vertices of `x, y, z` respectively, and `c^4, c^5, c^6` both
///   opposite-polarity vertices.
pub fn build_paired_vs_2rho4(formula: &CnfFormula, variant: Rho4Variant) -> Graph {
    let mut g = Layout::default();
    let literals = packing_literals(&mut g, formula.n_vars());
    for (j, clause) in formula.clauses().iter().enumerate() {
        let j = j + 1;
        let c: Vec<usize> = (1..=6).map(|t| g.vertex(format!("c_{j}^{t}"))).collect();
        let k: Vec<usize> = (1..=6).map(|t| g.vertex(format!("k_{j}^{t}"))).collect();
        let d1 = g.vertex(format!("d_{j}^1"));
        let d2 = g.vertex(format!("d_{j}^2"));
        let b: BTreeMap<usize, usize> = [1, 2, 3, 4, 5, 11, 12, 13, 14, 15]
            .into_iter()
            .map(|t| (t, g.vertex(format!("b_{j}^{t}"))))
            .collect();

        g.clique(&k);
        for t in 0..6 {
            g.edge(c[t], k[t]);
            g.edge(d2, k[t]);
        }
        g.edge(d1, d2);

        g.clique(&[b[&2], b[&3], b[&4], b[&5]]);
        g.edge(b[&1], b[&2]);
        g.edge(c[3], b[&5]);
        g.edge(c[4], b[&4]);
        g.edge(c[5], b[&3]);

        for (x, y) in [(15, 14), (14, 13), (13, 12), (15, 13), (15, 12)] {
            g.edge(b[&x], b[&y]);
        }
        if variant == Rho4Variant::Mirror {
            g.edge(b[&14], b[&12]);
        }
        g.edge(b[&11], b[&14]);
        g.edge(c[0], b[&15]);
        g.edge(c[1], b[&12]);
        g.edge(c[2], b[&13]);

        for (t, &lit) in clause.iter().enumerate() {
            let gadget = literals[lit.var - 1];
            for v in gadget.same(lit) {
                g.edge(c[t], v);
            }
            for v in gadget.opposite(lit) {
                g.edge(c[t + 3], v);
            }
        }
    }
    g.finish()
}

/// Literal gadgets as in [`packing_literals`]. Per clause `j`: `v_j` joined to
/// the six same-polarity vertices of its literals and `w_j` to the six
/// opposite-polarity ones.
pub fn build_paired_vs_2rho3(formula: &CnfFormula) -> Graph {
    let mut g = Layout::default();
    let literals = packing_literals(&mut g, formula.n_vars());
    for (j, clause) in formula.clauses().iter().enumerate() {
        let v = g.vertex(format!("v_{}", j + 1));
        let w = g.vertex(format!("w_{}", j + 1));
        for &lit in clause {
            let gadget = literals[lit.var - 1];
            for x in gadget.same(lit) {
                g.edge(v, x);
            }
            for x in gadget.opposite(lit) {
                g.edge(w, x);
            }
        }
    }
    g.finish()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// The parameter equals the value for every formula.
    Always,
    /// The parameter is at least the value, with equality exactly when the
    /// oracle accepts the formula.
    EqualIffOracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub value: usize,
    pub relation: Relation,
    /// `None` until the parameter has been computed.
    pub confirmed: Option<bool>,
}

/// A computed parameter, or the marker that its solve ran out of budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Computed {
    Value(usize),
    BudgetExceeded,
}

impl Computed {
    pub fn value(self) -> Option<usize> {
        match self {
            Computed::Value(v) => Some(v),
            Computed::BudgetExceeded => None,
        }
    }
}

impl Serialize for Computed {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Computed::Value(v) => s.serialize_u64(*v as u64),
            Computed::BudgetExceeded => s.serialize_str("BUDGET_EXCEEDED"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FormulaSummary {
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub bipartite: bool,
    /// Smallest distance between two support vertices.
    pub min_support_distance: Option<u32>,
}

impl GraphStats {
    pub fn of(graph: &Graph) -> Self {
        let (supports, _) = graph.supports_and_leaves();
        GraphStats {
            vertices: graph.order(),
            edges: graph.size(),
            bipartite: graph.classify().bipartite,
            min_support_distance: crate::tree::min_pairwise_distance(graph, &supports),
        }
    }
}

/// Wall-clock data, kept apart so the rest of a report is reproducible.
#[derive(Debug, Clone, PartialEq, Serialize, Default)]
pub struct Timing {
    pub solve_seconds: BTreeMap<String, f64>,
    pub total_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub kind: ConstructionKind,
    pub formula: FormulaSummary,
    pub oracle_verdict: bool,
    pub computed: BTreeMap<String, Computed>,
    pub predicted: BTreeMap<String, Prediction>,
    /// Absent when any required solve ran out of budget.
    pub equivalence_holds: Option<bool>,
    pub graph: GraphStats,
    pub timing: Timing,
}

/// Overall status of a verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Violated,
    BudgetExceeded,
}

impl VerificationReport {
    /// Every definite failure: the equivalence, a refuted prediction, a
    /// non-bipartite 3SAT construction, or supports closer than 4 in the
    /// total-vs-paired graph.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.equivalence_holds == Some(false) {
            out.push(format!("{}: equivalence does not hold", self.kind));
        }
        for (param, p) in &self.predicted {
            if p.confirmed == Some(false) {
                out.push(format!(
                    "{}: predicted {param} {} {} but computed {:?}",
                    self.kind,
                    match p.relation {
                        Relation::Always => "=",
                        Relation::EqualIffOracle => "= (iff oracle)",
                    },
                    p.value,
                    self.computed.get(param).and_then(|c| c.value())
                ));
            }
        }
        if !self.kind.uses_nae() && !self.graph.bipartite {
            out.push(format!("{}: graph is not bipartite", self.kind));
        }
        if self.kind == ConstructionKind::TotalVsPaired
            && self.graph.min_support_distance.is_some_and(|d| d < 4)
        {
            out.push(format!("{}: two supports are closer than 4", self.kind));
        }
        out
    }

    pub fn outcome(&self) -> Outcome {
        if !self.failures().is_empty() {
            Outcome::Violated
        } else if self.equivalence_holds.is_none() {
            Outcome::BudgetExceeded
        } else {
            Outcome::Pass
        }
    }
}

/// Builds the graph, runs the matching oracle, computes both compared
/// parameters exactly, and checks the claimed equivalence and side
/// predictions. Running out of budget is recorded per parameter.
pub fn verify_equivalence(
    kind: ConstructionKind,
    formula: &CnfFormula,
    budget: SearchBudget,
) -> Result<VerificationReport, ReductionError> {
    let started = Instant::now();
    let oracle_verdict = if kind.uses_nae() {
        formula.is_nae_satisfiable()?.is_some()
    } else {
        formula.is_satisfiable()?.is_some()
    };
    let graph = kind.build(formula);
    let (n, m) = (formula.n_vars(), formula.n_clauses());

    let (left, right, factor) = kind.compared();
    let mut computed = BTreeMap::new();
    let mut timing = Timing::default();
    // The cheaper side first; both are always attempted.
    for param in [right, left] {
        let t = Instant::now();
        let value = match solve(&graph, param, budget) {
            Ok(w) => Computed::Value(w.value),
            Err(SolveError::BudgetExceeded { .. }) => Computed::BudgetExceeded,
            Err(e) => return Err(ReductionError::Solve(e)),
        };
        timing
            .solve_seconds
            .insert(param.to_string(), t.elapsed().as_secs_f64());
        computed.insert(param.to_string(), value);
    }

    let mut predicted = kind.predictions(n, m);
    for (param, p) in predicted.iter_mut() {
        p.confirmed = computed[param].value().map(|v| match p.relation {
            Relation::Always => v == p.value,
            Relation::EqualIffOracle => {
                if oracle_verdict {
                    v == p.value
                } else {
                    v > p.value
                }
            }
        });
    }

    let equivalence_holds = match (
        computed[&left.to_string()].value(),
        computed[&right.to_string()].value(),
    ) {
        (Some(l), Some(r)) => Some(oracle_verdict == (l == factor * r)),
        _ => None,
    };
    timing.total_seconds = started.elapsed().as_secs_f64();

    Ok(VerificationReport {
        kind,
        formula: FormulaSummary { n, m },
        oracle_verdict,
        computed,
        predicted,
        equivalence_holds,
        graph: GraphStats::of(&graph),
        timing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cnf::Literal as L;

    fn single(clause: [Literal; 3]) -> CnfFormula {
        CnfFormula::new(3, vec![clause]).unwrap()
    }

    fn nae_unsat() -> CnfFormula {
        let c = |b: bool, c: bool| {
            [
                L::pos(1),
                if b { L::pos(2) } else { L::neg(2) },
                if c { L::pos(3) } else { L::neg(3) },
            ]
        };
        CnfFormula::new(3, vec![c(true, true), c(true, false), c(false, true), c(false, false)])
            .unwrap()
    }

    #[test]
    fn total_vs_paired_shape() {
        let f = single([L::neg(1), L::pos(2), L::pos(3)]);
        let g = build_total_vs_paired(&f);
        assert_eq!((g.order(), g.size()), (17, 16));
        assert!(g.classify().bipartite);
        let c5 = g.vertex_by_label("c_1^5").unwrap();
        let mut attached: Vec<&str> = g
            .neighbors(c5)
            .iter()
            .filter_map(|&v| g.label(v))
            .collect();
        attached.sort_unstable();
        assert_eq!(attached, vec!["c_1^4", "u'_1", "u_2", "u_3"]);
        let (supports, _) = g.supports_and_leaves();
        for role in ["b_1", "b_2", "b_3", "c_1^2"] {
            assert!(supports.contains(&g.vertex_by_label(role).unwrap()), "{role}");
        }
    }

    #[test]
    fn paired_vs_2gamma_shape() {
        let f = single([L::pos(1), L::pos(2), L::neg(3)]);
        let g = build_paired_vs_2gamma(&f);
        assert_eq!((g.order(), g.size()), (19, 21));
        assert!(g.classify().bipartite);
        let c = g.vertex_by_label("c_1").unwrap();
        let attached: Vec<&str> = g.neighbors(c).iter().filter_map(|&v| g.label(v)).collect();
        assert_eq!(attached, vec!["u_1", "u_2", "u'_3"]);
    }

    #[test]
    fn packing_constructions_shape() {
        let f = single([L::neg(1), L::pos(2), L::pos(3)]);
        let tikz = build_paired_vs_2rho4(&f, Rho4Variant::Tikz);
        let mirror = build_paired_vs_2rho4(&f, Rho4Variant::Mirror);
        assert_eq!((tikz.order(), tikz.size()), (42, 83));
        assert_eq!((mirror.order(), mirror.size()), (42, 84));
        let rho3 = build_paired_vs_2rho3(&f);
        assert_eq!((rho3.order(), rho3.size()), (20, 36));

        // Both right gadgets mirror the left one's pendant: b^11 hangs from
        // b^14, the member of b^12..b^15 without a c-neighbor.
        for g in [&tikz, &mirror] {
            let b11 = g.vertex_by_label("b_1^11").unwrap();
            assert_eq!(g.neighbors(b11), &[g.vertex_by_label("b_1^14").unwrap()]);
        }
        let (b12, b14) = (
            tikz.vertex_by_label("b_1^12").unwrap(),
            tikz.vertex_by_label("b_1^14").unwrap(),
        );
        assert!(!tikz.has_edge(b12, b14) && mirror.has_edge(b12, b14));

        // c_1^1 takes the negated vertices of u_1, c_1^4 the positive ones.
        let c11 = tikz.vertex_by_label("c_1^1").unwrap();
        let c14 = tikz.vertex_by_label("c_1^4").unwrap();
        let labels = |v: usize| -> Vec<&str> {
            tikz.neighbors(v).iter().filter_map(|&w| tikz.label(w)).collect()
        };
        assert!(labels(c11).contains(&"~u_1^1") && labels(c11).contains(&"~u_1^2"));
        assert!(labels(c14).contains(&"u_1^1") && labels(c14).contains(&"u_1^2"));
        let v1 = rho3.vertex_by_label("v_1").unwrap();
        let w1 = rho3.vertex_by_label("w_1").unwrap();
        assert!(rho3.neighbors(v1).contains(&rho3.vertex_by_label("~u_1^2").unwrap()));
        assert!(rho3.neighbors(w1).contains(&rho3.vertex_by_label("u_1^1").unwrap()));
    }

    #[test]
    fn vertex_counts_follow_closed_forms() {
        let f = nae_unsat();
        let (n, m) = (3, 4);
        assert_eq!(build_total_vs_paired(&f).order(), 4 * n + 5 * m);
        assert_eq!(build_paired_vs_2gamma(&f).order(), 6 * n + m);
        assert_eq!(build_paired_vs_2rho4(&f, Rho4Variant::Tikz).order(), 6 * n + 24 * m);
        assert_eq!(build_paired_vs_2rho3(&f).order(), 6 * n + 2 * m);
        assert_eq!(build_paired_vs_2rho3(&f).size(), 8 * n + 12 * m);
        assert_eq!(build_paired_vs_2rho4(&f, Rho4Variant::Tikz).size(), 8 * n + 59 * m);
        assert_eq!(build_paired_vs_2rho4(&f, Rho4Variant::Mirror).size(), 8 * n + 60 * m);
    }

    #[test]
    fn empty_formula_gives_empty_graph() {
        let f = CnfFormula::new(0, vec![]).unwrap();
        for kind in [
            ConstructionKind::TotalVsPaired,
            ConstructionKind::PairedVs2Gamma,
            ConstructionKind::PairedVs2Rho4(Rho4Variant::Tikz),
            ConstructionKind::PairedVs2Rho3,
        ] {
            assert_eq!(kind.build(&f).order(), 0);
        }
    }

    #[test]
    fn every_vertex_is_labeled_once() {
        let f = nae_unsat();
        for kind in [
            ConstructionKind::TotalVsPaired,
            ConstructionKind::PairedVs2Gamma,
            ConstructionKind::PairedVs2Rho4(Rho4Variant::Mirror),
            ConstructionKind::PairedVs2Rho3,
        ] {
            let g = kind.build(&f);
            assert_eq!(g.labels().len(), g.order());
            let mut roles: Vec<&String> = g.labels().values().collect();
            roles.sort();
            roles.dedup();
            assert_eq!(roles.len(), g.order(), "{kind}");
            assert_eq!(kind.build(&f), g);
        }
    }

    #[test]
    fn names_parse() {
        assert_eq!(
            ConstructionKind::from_name("paired-vs-2rho4", Rho4Variant::Mirror).unwrap(),
            ConstructionKind::PairedVs2Rho4(Rho4Variant::Mirror)
        );
        assert!(ConstructionKind::from_name("bogus", Rho4Variant::Tikz).is_err());
        assert!("diagonal".parse::<Rho4Variant>().is_err());
    }

    #[test]
    fn verify_small_cases() {
        let b = SearchBudget::default();
        let r = verify_equivalence(
            ConstructionKind::TotalVsPaired,
            &single([L::neg(1), L::pos(2), L::pos(3)]),
            b,
        )
        .unwrap();
        assert!(r.oracle_verdict);
        assert_eq!(r.computed["gamma_t"], Computed::Value(8));
        assert_eq!(r.computed["gamma_pr"], Computed::Value(8));
        assert_eq!(r.equivalence_holds, Some(true));
        assert_eq!(r.outcome(), Outcome::Pass);

        let r = verify_equivalence(ConstructionKind::PairedVs2Rho3, &nae_unsat(), b).unwrap();
        assert!(!r.oracle_verdict);
        assert_eq!(r.graph.vertices, 26);
        assert_eq!(r.computed["rho3"], Computed::Value(3));
        assert!(r.computed["gamma_pr"].value().unwrap() > 6);
        assert_eq!(r.equivalence_holds, Some(true));
        assert!(r.failures().is_empty());
    }

    #[test]
    fn budget_exhaustion_is_recorded() {
        let r = verify_equivalence(
            ConstructionKind::PairedVs2Rho4(Rho4Variant::Tikz),
            &nae_unsat(),
            SearchBudget::new(60.0, 10),
        )
        .unwrap();
        assert_eq!(r.computed["gamma_pr"], Computed::BudgetExceeded);
        assert_eq!(r.equivalence_holds, None);
        assert_eq!(r.predicted["gamma_pr"].confirmed, None);
        assert_eq!(r.outcome(), Outcome::BudgetExceeded);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"gamma_pr\":\"BUDGET_EXCEEDED\""));
        assert!(json.contains("\"construction\":\"paired-vs-2rho4\",\"variant\":\"tikz\""));
    }
}
