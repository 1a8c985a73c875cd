//! Property campaigns: seeded corpora run through every invariant, with
//! each check tallied per property and failures kept with a reproducer.

use std::collections::BTreeMap;
use std::time::Instant;

use pairdom::cnf::{CnfFormula, Literal};
use pairdom::families::{labeled_trees, Family};
use pairdom::reductions::{verify_equivalence, Computed, ConstructionKind, Rho4Variant};
use pairdom::solvers::{enumerate_min_dominating_sets, solve, Parameter, SearchBudget, SolveError};
use pairdom::tree::{cross_validate, recognize, TreeError};
use pairdom::{Graph, SetKind};
use pairdom_oracle::SmallGraph;
use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::Serialize;

/// Violations kept verbatim per property; the rest are only counted.
pub const KEPT_VIOLATIONS: usize = 20;
pub const MAX_SMALL_ORDER: usize = 7;
pub const MAX_TREE_ORDER: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Fast,
    Slow,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignConfig {
    pub suite: Suite,
    pub seed: u64,
    /// Every connected graph up to this order is checked.
    pub small_order: usize,
    pub random_graphs: usize,
    pub random_min_order: usize,
    pub random_max_order: usize,
    /// Every labeled tree up to this order is checked.
    pub tree_order: usize,
    pub random_trees: usize,
    pub random_tree_max_order: usize,
    pub big_tree_order: usize,
    pub budget: SearchBudget,
    /// Budget for each solve on the 2ρ_4 gadget graphs.
    pub gadget_budget: SearchBudget,
    /// Budget for the unsatisfiable 2ρ_4 instance in the slow suite.
    pub slow_budget: SearchBudget,
}

impl CampaignConfig {
    pub fn new(suite: Suite, seed: u64) -> Self {
        CampaignConfig {
            suite,
            seed,
            small_order: 6,
            random_graphs: 500,
            random_min_order: 7,
            random_max_order: 10,
            tree_order: 8,
            random_trees: 1000,
            random_tree_max_order: 18,
            big_tree_order: 100_000,
            budget: SearchBudget::default(),
            gadget_budget: SearchBudget::new(600.0, u64::MAX),
            slow_budget: SearchBudget::new(3600.0, u64::MAX),
        }
    }

    /// Rejects corpora beyond what the oracle and solvers support.
    pub fn validate(&self) -> Result<(), String> {
        let check = |ok: bool, msg: String| if ok { Ok(()) } else { Err(msg) };
        check(
            (1..=MAX_SMALL_ORDER).contains(&self.small_order),
            format!("small order must be in 1..={MAX_SMALL_ORDER}"),
        )?;
        check(
            1 <= self.random_min_order
                && self.random_min_order <= self.random_max_order
                && self.random_max_order <= pairdom_oracle::MAX_ORDER,
            format!(
                "random graph orders must satisfy 1 <= min <= max <= {}",
                pairdom_oracle::MAX_ORDER
            ),
        )?;
        check(
            (1..=MAX_TREE_ORDER).contains(&self.tree_order),
            format!("tree order must be in 1..={MAX_TREE_ORDER}"),
        )?;
        check(
            (2..=pairdom::vertex_set::MAX_SET_ORDER).contains(&self.random_tree_max_order),
            format!(
                "random tree order must be in 2..={}",
                pairdom::vertex_set::MAX_SET_ORDER
            ),
        )?;
        check(
            (2..=10_000_000).contains(&self.big_tree_order),
            "big tree order must be in 2..=10000000".to_string(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub reproducer: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub property: &'static str,
    pub criterion: u8,
    pub instances: u64,
    pub budget_exceeded: u64,
    /// Whether hitting the budget is an acceptable outcome for this check.
    pub budget_allowed: bool,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
}

impl PropertyReport {
    fn new(property: &'static str, criterion: u8) -> Self {
        PropertyReport {
            property,
            criterion,
            instances: 0,
            budget_exceeded: 0,
            budget_allowed: false,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0 && (self.budget_allowed || self.budget_exceeded == 0)
    }

    fn record(&mut self, reproducer: &str, check: Check) {
        match check {
            Check::Skip => return,
            Check::Pass => {}
            Check::Budget => self.budget_exceeded += 1,
            Check::Fail(detail) => {
                self.violation_count += 1;
                if self.violations.len() < KEPT_VIOLATIONS {
                    self.violations.push(Violation {
                        reproducer: reproducer.to_string(),
                        detail,
                    });
                }
            }
        }
        self.instances += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Pass,
    Fail(String),
    Budget,
    /// The property does not apply to this instance.
    Skip,
}

impl Check {
    fn from_bool(ok: bool, detail: impl FnOnce() -> String) -> Check {
        if ok {
            Check::Pass
        } else {
            Check::Fail(detail())
        }
    }
}

fn budget_or_fail(e: SolveError) -> Check {
    match e {
        SolveError::BudgetExceeded { .. } => Check::Budget,
        other => Check::Fail(other.to_string()),
    }
}

/// A graph together with enough information to rebuild it.
#[derive(Debug, Clone)]
pub struct Instance {
    pub reproducer: String,
    pub graph: Graph,
}

/// Per-property tallies, in first-seen order of property names.
struct Tally {
    reports: Vec<PropertyReport>,
}

impl Tally {
    fn new(criterion: u8, names: &[&'static str]) -> Self {
        Tally {
            reports: names.iter().map(|n| PropertyReport::new(n, criterion)).collect(),
        }
    }

    fn record(&mut self, reproducer: &str, checks: Vec<Check>) {
        debug_assert_eq!(checks.len(), self.reports.len());
        for (report, check) in self.reports.iter_mut().zip(checks) {
            report.record(reproducer, check);
        }
    }

    fn single(criterion: u8, name: &'static str, reproducer: &str, check: Check) -> PropertyReport {
        let mut t = Tally::new(criterion, &[name]);
        t.record(reproducer, vec![check]);
        t.finish()
    }

    fn finish(self) -> PropertyReport {
        self.reports.into_iter().next().expect("one property")
    }

    fn finish_all(self) -> Vec<PropertyReport> {
        self.reports
    }
}

fn run_checks<F>(tally: &mut Tally, instances: &[Instance], check: F)
where
    F: Fn(&Graph) -> Vec<Check> + Sync,
{
    let results: Vec<Vec<Check>> = instances.par_iter().map(|i| check(&i.graph)).collect();
    for (inst, checks) in instances.iter().zip(results) {
        tally.record(&inst.reproducer, checks);
    }
}

/// Feeds a lazily generated corpus through `check` in parallel batches.
fn run_checks_streamed<I, F>(tally: &mut Tally, instances: I, check: F)
where
    I: Iterator<Item = Instance>,
    F: Fn(&Graph) -> Vec<Check> + Sync,
{
    let mut iter = instances.peekable();
    while iter.peek().is_some() {
        let batch: Vec<Instance> = iter.by_ref().take(8192).collect();
        run_checks(tally, &batch, &check);
    }
}

fn seeds(seed: u64, stream: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn edge_list(g: &Graph) -> String {
    let e: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} edges=[{}]", g.order(), e.join(" "))
}

/// All connected graphs up to `small_order` vertices, by edge bitmask, then
/// the seeded random connected graphs.
pub fn connected_corpus(cfg: &CampaignConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=cfg.small_order {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges).expect("simple");
            if g.is_connected() {
                out.push(Instance {
                    reproducer: edge_list(&g),
                    graph: g,
                });
            }
        }
    }
    let mut rng = seeds(cfg.seed, 1);
    for _ in 0..cfg.random_graphs {
        let n = rng.gen_range(cfg.random_min_order..=cfg.random_max_order);
        let p = (rng.gen_range(20..=60) as f64) / 100.0;
        let spec = Family::RandomConnected {
            n,
            p,
            seed: rng.next_u64(),
        };
        out.push(Instance {
            reproducer: serde_json::to_string(&spec).expect("serializable"),
            graph: spec.generate().expect("valid spec"),
        });
    }
    out
}

/// All labeled trees up to `tree_order`, then the seeded random trees.
pub fn tree_corpus(cfg: &CampaignConfig) -> impl Iterator<Item = Instance> + '_ {
    let exhaustive = (1..=cfg.tree_order).flat_map(|n| {
        labeled_trees(n).enumerate().map(move |(i, t)| Instance {
            reproducer: format!("labeled tree n={n} index={i}"),
            graph: t,
        })
    });
    let mut rng = seeds(cfg.seed, 2);
    let random: Vec<Family> = (0..cfg.random_trees)
        .map(|_| Family::RandomTree {
            n: rng.gen_range(2..=cfg.random_tree_max_order),
            seed: rng.next_u64(),
        })
        .collect();
    exhaustive.chain(random.into_iter().map(|spec| Instance {
        reproducer: serde_json::to_string(&spec).expect("serializable"),
        graph: spec.generate().expect("valid spec"),
    }))
}

fn edges_of(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

fn value(g: &Graph, p: Parameter, b: SearchBudget) -> Result<usize, SolveError> {
    solve(g, p, b).map(|w| w.value)
}

/// Criterion 1: each solver against exhaustive enumeration, plus witness
/// validity.
fn check_oracle(g: &Graph, b: SearchBudget) -> Check {
    let oracle = SmallGraph::new(g.order(), &edges_of(g));
    let mut expected: Vec<(Parameter, Option<usize>)> = vec![
        (Parameter::Gamma, Some(oracle.domination_number())),
        (Parameter::GammaT, oracle.total_domination_number()),
        (Parameter::GammaPr, oracle.paired_domination_number()),
        (Parameter::IndependentDomination, Some(oracle.independent_domination_number())),
    ];
    expected.extend((1..=4).map(|k| (Parameter::Packing(k), Some(oracle.packing_number(k)))));

    let mut problems = Vec::new();
    for (p, want) in expected {
        match (solve(g, p, b), want) {
            (Ok(w), Some(v)) => {
                if w.value != v {
                    problems.push(format!("{p}: solver {} oracle {v}", w.value));
                } else if !w.validate(g) {
                    problems.push(format!("{p}: invalid witness {:?}", w.set));
                }
            }
            (Err(SolveError::IsolatedVertex(_)), None) => {}
            (Err(SolveError::BudgetExceeded { .. }), _) => return Check::Budget,
            (got, want) => problems.push(format!("{p}: solver {got:?} oracle {want:?}")),
        }
    }
    Check::from_bool(problems.is_empty(), || problems.join("; "))
}

pub const CRITERION_1: [&str; 1] = ["solvers_match_exhaustive_oracle"];

pub fn criterion_1(cfg: &CampaignConfig) -> Vec<PropertyReport> {
    let mut t = Tally::new(1, &CRITERION_1);
    let b = cfg.budget;
    run_checks(&mut t, &connected_corpus(cfg), |g| vec![check_oracle(g, b)]);
    t.finish_all()
}

pub const CRITERION_2: [&str; 3] = [
    "chain_gamma_le_gamma_t_le_gamma_pr_le_2gamma",
    "gamma_ge_rho2",
    "gamma_pr_ge_2rho3",
];

fn check_bounds(g: &Graph, b: SearchBudget) -> Vec<Check> {
    let all = || -> Result<(usize, Option<(usize, usize)>, usize, usize), SolveError> {
        let gamma = value(g, Parameter::Gamma, b)?;
        let isolated_free = (0..g.order()).all(|v| g.degree(v) > 0);
        let pair = if isolated_free {
            Some((value(g, Parameter::GammaT, b)?, value(g, Parameter::GammaPr, b)?))
        } else {
            None
        };
        Ok((
            gamma,
            pair,
            value(g, Parameter::Packing(2), b)?,
            value(g, Parameter::Packing(3), b)?,
        ))
    };
    match all() {
        Err(e) => vec![budget_or_fail(e); 3],
        Ok((gamma, pair, rho2, rho3)) => vec![
            match pair {
                None => Check::Skip,
                Some((gt, gpr)) => Check::from_bool(gamma <= gt && gt <= gpr && gpr <= 2 * gamma, || {
                    format!("gamma={gamma} gamma_t={gt} gamma_pr={gpr}")
                }),
            },
            Check::from_bool(gamma >= rho2, || format!("gamma={gamma} rho2={rho2}")),
            match pair {
                None => Check::Skip,
                Some((_, gpr)) => {
                    Check::from_bool(gpr >= 2 * rho3, || format!("gamma_pr={gpr} rho3={rho3}"))
                }
            },
        ],
    }
}

pub fn criterion_2(cfg: &CampaignConfig) -> Vec<PropertyReport> {
    let mut t = Tally::new(2, &CRITERION_2);
    let b = cfg.budget;
    run_checks(&mut t, &connected_corpus(cfg), |g| check_bounds(g, b));
    t.finish_all()
}

pub const CRITERION_3: [&str; 2] = ["tree_gamma_eq_rho2", "tree_gamma_pr_eq_2rho3"];

fn check_tree_identities(g: &Graph, b: SearchBudget) -> Vec<Check> {
    let first = match (value(g, Parameter::Gamma, b), value(g, Parameter::Packing(2), b)) {
        (Ok(gamma), Ok(rho2)) => {
            Check::from_bool(gamma == rho2, || format!("gamma={gamma} rho2={rho2}"))
        }
        (Err(e), _) | (_, Err(e)) => budget_or_fail(e),
    };
    let second = if g.order() < 2 {
        Check::Skip
    } else {
        match (value(g, Parameter::GammaPr, b), value(g, Parameter::Packing(3), b)) {
            (Ok(gpr), Ok(rho3)) => {
                Check::from_bool(gpr == 2 * rho3, || format!("gamma_pr={gpr} rho3={rho3}"))
            }
            (Err(e), _) | (_, Err(e)) => budget_or_fail(e),
        }
    };
    vec![first, second]
}

pub fn criterion_3(cfg: &CampaignConfig) -> Vec<PropertyReport> {
    let mut t = Tally::new(3, &CRITERION_3);
    let b = cfg.budget;
    run_checks_streamed(&mut t, tree_corpus(cfg), |g| check_tree_identities(g, b));
    t.finish_all()
}

pub const CRITERION_4: [&str; 2] = ["recognizer_agrees_with_exact", "certificate_sound"];

fn check_recognition(g: &Graph, b: SearchBudget) -> Vec<Check> {
    let cv = match cross_validate(g, b) {
        Err(TreeError::TrivialTree) => return vec![Check::Skip, Check::Skip],
        Err(TreeError::Solve(e)) => return vec![budget_or_fail(e), Check::Skip],
        Err(e) => return vec![Check::Fail(e.to_string()), Check::Skip],
        Ok(cv) => cv,
    };
    let agree = Check::from_bool(cv.agree, || {
        format!(
            "accepted={} gamma={} gamma_pr={}",
            cv.certificate.accepted, cv.gamma, cv.gamma_pr
        )
    });
    let cert = &cv.certificate;
    let sound = if !cert.accepted || cert.special_case.is_some() {
        Check::Skip
    } else {
        let mut union: Vec<usize> = cert.supports.iter().chain(&cert.remote).copied().collect();
        union.sort_unstable();
        let ok = g.validate_set(&union, &SetKind::Independent) == Ok(true)
            && g.validate_set(&union, &SetKind::Dominating) == Ok(true)
            && g.validate_set(&cert.remote, &SetKind::KPacking(3)) == Ok(true);
        Check::from_bool(ok, || format!("S={:?} R={:?}", cert.supports, cert.remote))
    };
    vec![agree, sound]
}

pub fn criterion_4(cfg: &CampaignConfig) -> Vec<PropertyReport> {
    let mut t = Tally::new(4, &CRITERION_4);
    let b = cfg.budget;
    run_checks_streamed(&mut t, tree_corpus(cfg), |g| check_recognition(g, b));
    t.finish_all()
}

/// Picks for each member of `d` a distinct neighbor outside `d`.
pub fn injective_neighbor_choice(g: &Graph, d: &[usize]) -> Option<Vec<(usize, usize)>> {
    fn go(
        g: &Graph,
        d: &[usize],
        blocked: &mut Vec<bool>,
        pairs: &mut Vec<(usize, usize)>,
    ) -> bool {
        let Some(&u) = d.get(pairs.len()) else {
            return true;
        };
        for &w in g.neighbors(u) {
            if !blocked[w] {
                blocked[w] = true;
                pairs.push((u, w));
                if go(g, d, blocked, pairs) {
                    return true;
                }
                pairs.pop();
                blocked[w] = false;
            }
        }
        false
    }
    let mut blocked = vec![false; g.order()];
    for &u in d {
        blocked[u] = true;
    }
    let mut pairs = Vec::with_capacity(d.len());
    go(g, d, &mut blocked, &mut pairs).then_some(pairs)
}

pub const CRITERION_5: [&str; 2] = [
    "min_dominating_sets_independent_when_gamma_pr_is_2gamma",
    "injective_neighbor_choice_when_gamma_pr_is_2gamma",
];

fn check_extremal(g: &Graph, b: SearchBudget) -> Vec<Check> {
    if g.order() < 2 || !g.is_connected() {
        return vec![Check::Skip, Check::Skip];
    }
    let facts = || -> Result<Option<(usize, usize, Vec<Vec<usize>>)>, SolveError> {
        let gamma = value(g, Parameter::Gamma, b)?;
        if value(g, Parameter::GammaPr, b)? != 2 * gamma {
            return Ok(None);
        }
        let i = value(g, Parameter::IndependentDomination, b)?;
        Ok(Some((gamma, i, enumerate_min_dominating_sets(g, b)?)))
    };
    let (gamma, i, sets) = match facts() {
        Err(e) => return vec![budget_or_fail(e); 2],
        Ok(None) => return vec![Check::Skip, Check::Skip],
        Ok(Some(f)) => f,
    };
    let bad_independent = sets.iter().find(|d| {
        d.len() != i || g.validate_set(d, &SetKind::Independent) != Ok(true)
    });
    let prop5 = Check::from_bool(bad_independent.is_none(), || {
        format!("i={i} gamma={gamma} offending set {:?}", bad_independent.unwrap())
    });
    let bad_choice = sets.iter().find(|d| match injective_neighbor_choice(g, d) {
        None => true,
        Some(pairs) => {
            let mut set: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
            set.sort_unstable();
            set.len() != 2 * gamma
                || g.validate_set(&set, &SetKind::PairedDominating(pairs)) != Ok(true)
        }
    });
    let observation = Check::from_bool(bad_choice.is_none(), || {
        format!("no valid neighbor choice for {:?}", bad_choice.unwrap())
    });
    vec![prop5, observation]
}

pub fn criterion_5(cfg: &CampaignConfig) -> Vec<PropertyReport> {
    let mut t = Tally::new(5, &CRITERION_5);
    let b = cfg.budget;
    run_checks(&mut t, &connected_corpus(cfg), |g| check_extremal(g, b));
    run_checks_streamed(&mut t, tree_corpus(cfg), |g| check_extremal(g, b));
    t.finish_all()
}

fn formula(n: usize, clauses: &[[i32; 3]]) -> CnfFormula {
    let lit = |x: i32| {
        if x > 0 {
            Literal::pos(x as usize)
        } else {
            Literal::neg((-x) as usize)
        }
    };
    CnfFormula::new(n, clauses.iter().map(|c| c.map(lit)).collect()).expect("valid formula")
}

/// `¬u_1 ∨ u_2 ∨ u_3`.
pub fn clause_neg_first() -> CnfFormula {
    formula(3, &[[-1, 2, 3]])
}

/// `u_1 ∨ u_2 ∨ ¬u_3`.
pub fn clause_neg_last() -> CnfFormula {
    formula(3, &[[1, 2, -3]])
}

/// The four clauses `u_1 ∨ ±u_2 ∨ ±u_3`: NAE-unsatisfiable, since `u_1`
/// alone cannot be the odd one out in all of them.
pub fn nae_unsatisfiable() -> CnfFormula {
    formula(3, &[[1, 2, 3], [1, 2, -3], [1, -2, 3], [1, -2, -3]])
}

/// Runs the verifier and checks exact expected values, bipartiteness where
/// required, and the equivalence itself.
fn check_construction(
    kind: ConstructionKind,
    f: &CnfFormula,
    vertices: usize,
    expected: &[(&str, usize)],
    budget: SearchBudget,
) -> Check {
    let report = match verify_equivalence(kind, f, budget) {
        Ok(r) => r,
        Err(e) => return Check::Fail(e.to_string()),
    };
    if report.computed.values().any(|c| *c == Computed::BudgetExceeded) {
        return Check::Budget;
    }
    let mut problems = report.failures();
    if report.graph.vertices != vertices {
        problems.push(format!("{} vertices, expected {vertices}", report.graph.vertices));
    }
    for &(param, want) in expected {
        let got = report.computed.get(param).and_then(|c| c.value());
        if got != Some(want) {
            problems.push(format!("{param}={got:?}, expected {want}"));
        }
    }
    if report.equivalence_holds != Some(true) {
        problems.push("equivalence not confirmed".into());
    }
    Check::from_bool(problems.is_empty(), || problems.join("; "))
}

pub fn criterion_6(cfg: &CampaignConfig) -> Vec<PropertyReport> {
    vec![
        Tally::single(
            6,
            "total_vs_paired_satisfiable_clause",
            "total-vs-paired on -1 2 3",
            check_construction(
                ConstructionKind::TotalVsPaired,
                &clause_neg_first(),
                17,
                &[("gamma_t", 8), ("gamma_pr", 8)],
                cfg.budget,
            ),
        ),
        Tally::single(
            6,
            "paired_vs_2gamma_satisfiable_clause",
            "paired-vs-2gamma on 1 2 -3",
            check_construction(
                ConstructionKind::PairedVs2Gamma,
                &clause_neg_last(),
                19,
                &[("gamma", 6), ("gamma_pr", 12)],
                cfg.budget,
            ),
        ),
    ]
}

pub fn criterion_7(cfg: &CampaignConfig) -> Vec<PropertyReport> {
    let unsat = match verify_equivalence(ConstructionKind::PairedVs2Rho3, &nae_unsatisfiable(), cfg.budget) {
        Err(e) => Check::Fail(e.to_string()),
        Ok(r) => match (r.computed["gamma_pr"], r.computed["rho3"]) {
            (Computed::Value(gpr), Computed::Value(rho3)) => {
                Check::from_bool(r.failures().is_empty() && r.graph.vertices == 26 && rho3 == 3 && gpr > 6, || {
                    format!("vertices={} gamma_pr={gpr} rho3={rho3} failures={:?}", r.graph.vertices, r.failures())
                })
            }
            _ => Check::Budget,
        },
    };
    vec![
        Tally::single(
            7,
            "paired_vs_2rho3_nae_satisfiable_clause",
            "paired-vs-2rho3 on -1 2 3",
            check_construction(
                ConstructionKind::PairedVs2Rho3,
                &clause_neg_first(),
                20,
                &[("rho3", 3), ("gamma_pr", 6)],
                cfg.budget,
            ),
        ),
        Tally::single(7, "paired_vs_2rho3_nae_unsatisfiable", "paired-vs-2rho3 on the 4-clause formula", unsat),
    ]
}

pub const RHO4_VARIANTS: [Rho4Variant; 2] = [Rho4Variant::Tikz, Rho4Variant::Mirror];

pub fn criterion_8(cfg: &CampaignConfig) -> Vec<PropertyReport> {
    let mut out = Vec::new();
    for variant in RHO4_VARIANTS {
        let kind = ConstructionKind::PairedVs2Rho4(variant);
        out.push(Tally::single(
            8,
            match variant {
                Rho4Variant::Tikz => "paired_vs_2rho4_tikz_nae_satisfiable_clause",
                Rho4Variant::Mirror => "paired_vs_2rho4_mirror_nae_satisfiable_clause",
            },
            &format!("{kind} on -1 2 3"),
            check_construction(
                kind,
                &clause_neg_first(),
                42,
                &[("rho4", 6), ("gamma_pr", 12)],
                cfg.gadget_budget,
            ),
        ));
        let g = kind.build(&nae_unsatisfiable());
        let rho4 = match value(&g, Parameter::Packing(4), cfg.gadget_budget) {
            Ok(v) => Check::from_bool(g.order() == 114 && v == 15, || {
                format!("vertices={} rho4={v}", g.order())
            }),
            Err(e) => budget_or_fail(e),
        };
        out.push(Tally::single(
            8,
            match variant {
                Rho4Variant::Tikz => "paired_vs_2rho4_tikz_unsatisfiable_rho4",
                Rho4Variant::Mirror => "paired_vs_2rho4_mirror_unsatisfiable_rho4",
            },
            &format!("{kind} on the 4-clause formula"),
            rho4,
        ));
    }
    out
}

/// The unsatisfiable direction of the 2ρ_4 construction; may legitimately
/// run out of budget.
pub fn slow_rho4_unsat(cfg: &CampaignConfig) -> Vec<PropertyReport> {
    RHO4_VARIANTS
        .iter()
        .map(|&variant| {
            let kind = ConstructionKind::PairedVs2Rho4(variant);
            let check = match verify_equivalence(kind, &nae_unsatisfiable(), cfg.slow_budget) {
                Err(e) => Check::Fail(e.to_string()),
                Ok(r) if r.equivalence_holds.is_none() => Check::Budget,
                Ok(r) => {
                    let failures = r.failures();
                    Check::from_bool(failures.is_empty(), || failures.join("; "))
                }
            };
            let mut report = Tally::single(
                8,
                match variant {
                    Rho4Variant::Tikz => "paired_vs_2rho4_tikz_nae_unsatisfiable_gamma_pr",
                    Rho4Variant::Mirror => "paired_vs_2rho4_mirror_nae_unsatisfiable_gamma_pr",
                },
                &format!("{kind} on the 4-clause formula"),
                check,
            );
            report.budget_allowed = true;
            report
        })
        .collect()
}

pub fn criterion_9(cfg: &CampaignConfig) -> Vec<PropertyReport> {
    let b = cfg.budget;
    let mut corona = Tally::new(9, &["corona_complete_ratio_is_p_over_2"]);
    for p in [4, 6, 8] {
        let g = Family::CoronaComplete { p }.generate().expect("valid");
        let check = match (value(&g, Parameter::GammaPr, b), value(&g, Parameter::Packing(3), b)) {
            (Ok(gpr), Ok(rho3)) => Check::from_bool(gpr == p && rho3 == 1, || {
                format!("gamma_pr={gpr} rho3={rho3}")
            }),
            (Err(e), _) | (_, Err(e)) => budget_or_fail(e),
        };
        corona.record(&format!("CORONA_COMPLETE p={p}"), vec![check]);
    }
    let g = Family::TrianglePendants.generate().expect("valid");
    let triangle = match (value(&g, Parameter::GammaPr, b), value(&g, Parameter::Packing(3), b)) {
        (Ok(gpr), Ok(rho3)) => {
            Check::from_bool(gpr > 2 * rho3, || format!("gamma_pr={gpr} rho3={rho3}"))
        }
        (Err(e), _) | (_, Err(e)) => budget_or_fail(e),
    };
    vec![
        corona.finish(),
        Tally::single(9, "triangle_pendants_gamma_pr_exceeds_2rho3", "TRIANGLE_PENDANTS", triangle),
    ]
}

/// The big tree and the wall-clock seconds its recognition took.
pub fn big_tree_recognition(cfg: &CampaignConfig) -> (Family, f64, Result<bool, TreeError>) {
    let spec = Family::RandomTree {
        n: cfg.big_tree_order,
        seed: seeds(cfg.seed, 3).next_u64(),
    };
    let tree = spec.generate().expect("valid spec");
    let started = Instant::now();
    let verdict = recognize(&tree).map(|c| c.accepted);
    (spec, started.elapsed().as_secs_f64(), verdict)
}

pub fn criterion_10(cfg: &CampaignConfig) -> Vec<PropertyReport> {
    let (spec, seconds, verdict) = big_tree_recognition(cfg);
    let check = match verdict {
        Err(e) => Check::Fail(e.to_string()),
        Ok(_) => Check::from_bool(seconds < 1.0, || format!("took {seconds:.3} s")),
    };
    vec![Tally::single(
        10,
        "large_tree_recognition_under_one_second",
        &serde_json::to_string(&spec).expect("serializable"),
        check,
    )]
}

pub fn criterion(k: u8, cfg: &CampaignConfig) -> Vec<PropertyReport> {
    match k {
        1 => criterion_1(cfg),
        2 => criterion_2(cfg),
        3 => criterion_3(cfg),
        4 => criterion_4(cfg),
        5 => criterion_5(cfg),
        6 => criterion_6(cfg),
        7 => criterion_7(cfg),
        8 => criterion_8(cfg),
        9 => criterion_9(cfg),
        10 => criterion_10(cfg),
        _ => Vec::new(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignTiming {
    pub criterion_seconds: BTreeMap<String, f64>,
    pub total_seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub properties: Vec<PropertyReport>,
    pub total_violations: u64,
    pub passed: bool,
    pub timing: CampaignTiming,
}

/// Runs every criterion (and the slow extras for [`Suite::Slow`]) on the
/// current rayon pool.
pub fn run(cfg: &CampaignConfig) -> CampaignReport {
    let started = Instant::now();
    let mut properties = Vec::new();
    let mut criterion_seconds = BTreeMap::new();
    for k in 1..=10 {
        let t = Instant::now();
        properties.extend(criterion(k, cfg));
        criterion_seconds.insert(format!("{k:02}"), t.elapsed().as_secs_f64());
    }
    if cfg.suite == Suite::Slow {
        let t = Instant::now();
        properties.extend(slow_rho4_unsat(cfg));
        criterion_seconds.insert("08-slow".to_string(), t.elapsed().as_secs_f64());
    }
    let total_violations = properties.iter().map(|p| p.violation_count).sum();
    let passed = properties.iter().all(PropertyReport::passed);
    CampaignReport {
        config: cfg.clone(),
        properties,
        total_violations,
        passed,
        timing: CampaignTiming {
            criterion_seconds,
            total_seconds: started.elapsed().as_secs_f64(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> CampaignConfig {
        CampaignConfig {
            small_order: 4,
            random_graphs: 10,
            random_max_order: 8,
            tree_order: 5,
            random_trees: 10,
            random_tree_max_order: 10,
            big_tree_order: 1000,
            ..CampaignConfig::new(Suite::Fast, 7)
        }
    }

    #[test]
    fn corpus_sizes() {
        let cfg = tiny();
        // Connected labeled graphs on 1..=4 vertices: 1 + 1 + 4 + 38.
        assert_eq!(connected_corpus(&cfg).len(), 44 + 10);
        // Labeled trees on 1..=5 vertices: 1 + 1 + 3 + 16 + 125.
        assert_eq!(tree_corpus(&cfg).count(), 146 + 10);
    }

    #[test]
    fn corpora_are_seeded() {
        let a: Vec<_> = connected_corpus(&tiny()).into_iter().map(|i| i.reproducer).collect();
        let b: Vec<_> = connected_corpus(&tiny()).into_iter().map(|i| i.reproducer).collect();
        assert_eq!(a, b);
        let other = CampaignConfig { seed: 8, ..tiny() };
        let c: Vec<_> = connected_corpus(&other).into_iter().map(|i| i.reproducer).collect();
        assert_ne!(a, c);
    }

    #[test]
    fn small_criteria_pass() {
        let cfg = tiny();
        for k in [1, 2, 3, 4, 5, 9, 10] {
            for p in criterion(k, &cfg) {
                assert!(p.passed(), "{p:?}");
                assert!(p.instances > 0, "{}", p.property);
            }
        }
    }

    #[test]
    fn failures_are_reported_with_reproducers() {
        let mut r = PropertyReport::new("demo", 0);
        for i in 0..30 {
            r.record(&format!("case {i}"), Check::Fail("bad".into()));
        }
        r.record("skip", Check::Skip);
        assert_eq!(r.instances, 30);
        assert_eq!(r.violation_count, 30);
        assert_eq!(r.violations.len(), KEPT_VIOLATIONS);
        assert!(!r.passed());
    }

    #[test]
    fn neighbor_choice() {
        // P_4 with D = {1, 2}: 1 must take 0, 2 must take 3.
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(injective_neighbor_choice(&p4, &[1, 2]), Some(vec![(1, 0), (2, 3)]));
        // Star centre with one leaf taken: no choice left.
        let star = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        assert_eq!(injective_neighbor_choice(&star, &[0, 1, 2]), None);
    }

    #[test]
    fn config_bounds() {
        assert!(CampaignConfig::new(Suite::Fast, 0).validate().is_ok());
        let bad = CampaignConfig { small_order: 8, ..tiny() };
        assert!(bad.validate().is_err());
        let bad = CampaignConfig { random_max_order: 21, ..tiny() };
        assert!(bad.validate().is_err());
        let bad = CampaignConfig { tree_order: 10, ..tiny() };
        assert!(bad.validate().is_err());
    }
}
