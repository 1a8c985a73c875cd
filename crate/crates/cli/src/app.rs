//! Command definitions and dispatch.
//!
//! Exit codes: 0 pass, 1 property violated, 2 input error, 3 budget
//! exceeded.

use std::fmt::Display;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pairdom::families::{labeled_trees, Family};
use pairdom::reductions::{verify_equivalence, ConstructionKind, Outcome, ReductionError, Rho4Variant};
use pairdom::solvers::{solve, Parameter, ParameterWitness, SearchBudget, SolveError};
use pairdom::tree::{cross_validate, recognize, TreeCertificate, TreeError};
use pairdom::{parse_cnf, parse_graph, write_graph, CnfFormula, Graph};

use crate::campaign::{self, CampaignConfig, Suite};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "pairdom", version, about = "Exact domination-type parameters, tree recognition and gadget verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
struct BudgetArgs {
    /// Wall-clock limit per solve.
    #[arg(long, default_value_t = 60.0)]
    budget_seconds: f64,
    /// Search-node limit per solve.
    #[arg(long, default_value_t = 50_000_000)]
    max_nodes: u64,
}

impl BudgetArgs {
    fn budget(self) -> SearchBudget {
        SearchBudget::new(self.budget_seconds, self.max_nodes)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute selected parameters of a graph file (all of them by default).
    Params {
        file: PathBuf,
        #[arg(long)]
        gamma: bool,
        #[arg(long)]
        gamma_t: bool,
        #[arg(long)]
        gamma_pr: bool,
        /// Independent domination number.
        #[arg(long = "i")]
        independent: bool,
        /// k-packing number; may be repeated.
        #[arg(long, value_name = "K")]
        rho: Vec<usize>,
        /// gamma, gamma_t, gamma_pr, i, rho2 and rho3.
        #[arg(long)]
        all: bool,
        /// Also print certifying sets (1-indexed) and pairings.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Decide whether a tree has gamma_pr = 2 gamma by its supports.
    TreeCheck {
        file: PathBuf,
        /// Compare the verdict against exact gamma and gamma_pr.
        #[arg(long)]
        cross_validate: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Build a gadget graph from a DIMACS 3-CNF file.
    Reduce {
        construction: String,
        cnf: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, default_value = "tikz")]
        rho4_variant: String,
    },
    /// Build a gadget graph, solve it exactly and check the equivalence.
    Verify {
        construction: String,
        cnf: PathBuf,
        #[arg(long, default_value = "tikz")]
        rho4_variant: String,
        /// Also write the JSON report here.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Write a graph from a named family.
    Generate {
        family: FamilyName,
        /// Order (clique order for corona-complete).
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability for random-connected.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the property suites on seeded corpora and write a JSON report.
    Campaign {
        #[arg(long, value_enum, default_value_t = Suite::Fast)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 6)]
        small_order: usize,
        #[arg(long, default_value_t = 500)]
        random_graphs: usize,
        #[arg(long, default_value_t = 7)]
        random_min_order: usize,
        #[arg(long, default_value_t = 10)]
        random_max_order: usize,
        #[arg(long, default_value_t = 8)]
        tree_order: usize,
        #[arg(long, default_value_t = 1000)]
        random_trees: usize,
        #[arg(long, default_value_t = 18)]
        random_tree_max_order: usize,
        #[arg(long, default_value_t = 100_000)]
        big_tree_order: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Wall-clock limit per solve on the 2rho4 gadget graphs.
        #[arg(long, default_value_t = 600.0)]
        gadget_budget_seconds: f64,
        /// Wall-clock limit for the slow-suite unsatisfiable 2rho4 instance.
        #[arg(long, default_value_t = 3600.0)]
        slow_budget_seconds: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Path,
    Cycle,
    Star,
    Complete,
    CoronaComplete,
    TrianglePendants,
    RandomTree,
    RandomConnected,
    AllLabeledTrees,
}

/// A command failure mapped to its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn input(e: impl Display) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: e.to_string(),
    }
}

fn solve_failure(e: SolveError) -> Failure {
    match e {
        SolveError::BudgetExceeded { nodes, seconds } => Failure {
            code: EXIT_BUDGET,
            message: format!("BUDGET_EXCEEDED after {nodes} nodes, {seconds:.2} s"),
        },
        other => input(other),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn read_formula(path: &Path) -> Result<CnfFormula, Failure> {
    parse_cnf(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn construction(name: &str, variant: &str) -> Result<ConstructionKind, Failure> {
    let variant: Rho4Variant = variant.parse().map_err(input)?;
    ConstructionKind::from_name(name, variant).map_err(|e| {
        input(format!("{e}; expected one of {}", ConstructionKind::NAMES.join(", ")))
    })
}

fn one_indexed(vs: &[usize]) -> String {
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

/// Runs the command line in `args` (program name first) and returns the
/// exit code.
pub fn run_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os())
}

fn dispatch(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Params {
            file,
            gamma,
            gamma_t,
            gamma_pr,
            independent,
            rho,
            all,
            witness,
            budget,
        } => {
            let mut selected = Vec::new();
            let any = gamma || gamma_t || gamma_pr || independent || !rho.is_empty();
            let all = all || !any;
            for (on, p) in [
                (gamma, Parameter::Gamma),
                (gamma_t, Parameter::GammaT),
                (gamma_pr, Parameter::GammaPr),
                (independent, Parameter::IndependentDomination),
            ] {
                if on || all {
                    selected.push(p);
                }
            }
            if all {
                selected.extend([Parameter::Packing(2), Parameter::Packing(3)]);
            }
            for k in rho {
                if k == 0 {
                    return Err(input("--rho needs k >= 1"));
                }
                if !selected.contains(&Parameter::Packing(k)) {
                    selected.push(Parameter::Packing(k));
                }
            }
            cmd_params(&read_graph(&file)?, &selected, witness, budget.budget())
        }
        Command::TreeCheck {
            file,
            cross_validate,
            budget,
        } => cmd_tree_check(&read_graph(&file)?, cross_validate, budget.budget()),
        Command::Reduce {
            construction: name,
            cnf,
            output,
            rho4_variant,
        } => {
            let kind = construction(&name, &rho4_variant)?;
            cmd_reduce(kind, &read_formula(&cnf)?, &output)
        }
        Command::Verify {
            construction: name,
            cnf,
            rho4_variant,
            output,
            budget,
        } => {
            let kind = construction(&name, &rho4_variant)?;
            cmd_verify(kind, &read_formula(&cnf)?, output.as_deref(), budget.budget())
        }
        Command::Generate {
            family,
            n,
            p,
            seed,
            output,
        } => cmd_generate(family, n, p, seed, output.as_deref()),
        Command::Campaign {
            suite,
            seed,
            jobs,
            small_order,
            random_graphs,
            random_min_order,
            random_max_order,
            tree_order,
            random_trees,
            random_tree_max_order,
            big_tree_order,
            budget,
            gadget_budget_seconds,
            slow_budget_seconds,
            output,
        } => {
            let cfg = CampaignConfig {
                small_order,
                random_graphs,
                random_min_order,
                random_max_order,
                tree_order,
                random_trees,
                random_tree_max_order,
                big_tree_order,
                budget: budget.budget(),
                gadget_budget: SearchBudget::new(gadget_budget_seconds, u64::MAX),
                slow_budget: SearchBudget::new(slow_budget_seconds, u64::MAX),
                ..CampaignConfig::new(suite, seed)
            };
            cmd_campaign(&cfg, jobs, output.as_deref())
        }
    }
}

fn describe_witness(w: &ParameterWitness) -> String {
    let mut s = format!("{}: {}", w.kind, one_indexed(&w.set));
    if let Some(pairs) = &w.pairing {
        let pairs: Vec<String> = pairs.iter().map(|&(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
        s += &format!(" pairs: {}", pairs.join(" "));
    }
    s
}

fn cmd_params(
    g: &Graph,
    selected: &[Parameter],
    witness: bool,
    budget: SearchBudget,
) -> Result<i32, Failure> {
    let mut witnesses = Vec::with_capacity(selected.len());
    for &p in selected {
        let w = solve(g, p, budget).map_err(|e| match e {
            SolveError::IsolatedVertex(v) => {
                input(format!("{p} is undefined: vertex {} is isolated", v + 1))
            }
            other => solve_failure(other),
        })?;
        witnesses.push(w);
    }
    let values: Vec<String> = witnesses.iter().map(|w| format!("{}={}", w.kind, w.value)).collect();
    println!("{}", values.join(" "));
    if witness {
        for w in &witnesses {
            println!("{}", describe_witness(w));
        }
    }
    Ok(EXIT_PASS)
}

fn print_certificate(c: &TreeCertificate) {
    println!("{}", format!("supports: {}", one_indexed(&c.supports)).trim_end());
    println!("{}", format!("remote: {}", one_indexed(&c.remote)).trim_end());
    println!("s_independent: {}", c.s_independent);
    println!("r_is_3packing: {}", c.r_is_3packing);
    println!("union_dominating: {}", c.union_dominating);
    if c.special_case.is_some() {
        println!("special_case: TINY_TREE");
    }
    println!("verdict: {}", if c.accepted { "accepted" } else { "rejected" });
}

fn tree_failure(e: TreeError) -> Failure {
    match e {
        TreeError::NotATree => input("NOT_A_TREE: the graph is not a tree"),
        TreeError::TrivialTree => input("TRIVIAL_TREE: a single vertex has no paired dominating set"),
        TreeError::Solve(e) => solve_failure(e),
    }
}

fn cmd_tree_check(g: &Graph, cross: bool, budget: SearchBudget) -> Result<i32, Failure> {
    if cross {
        let cv = cross_validate(g, budget).map_err(tree_failure)?;
        print_certificate(&cv.certificate);
        println!("gamma: {}", cv.gamma);
        println!("gamma_pr: {}", cv.gamma_pr);
        println!("exact_gamma_pr_eq_2gamma: {}", cv.exact_equal);
        println!("agree: {}", cv.agree);
        Ok(if cv.agree { EXIT_PASS } else { EXIT_VIOLATED })
    } else {
        let c = recognize(g).map_err(tree_failure)?;
        print_certificate(&c);
        Ok(if c.accepted { EXIT_PASS } else { EXIT_VIOLATED })
    }
}

fn warn_preconditions(f: &CnfFormula) {
    for d in f.check_reduction_preconditions() {
        eprintln!("warning: {d}");
    }
}

fn cmd_reduce(kind: ConstructionKind, f: &CnfFormula, output: &Path) -> Result<i32, Failure> {
    warn_preconditions(f);
    let g = kind.build(f);
    let predictions = kind.predictions(f.n_vars(), f.n_clauses());
    let mut comments = vec![
        format!("construction {kind}"),
        format!("formula n={} m={}", f.n_vars(), f.n_clauses()),
    ];
    let mut lines = Vec::new();
    for (param, p) in &predictions {
        let line = match p.relation {
            pairdom::reductions::Relation::Always => format!("predicted {param} = {}", p.value),
            pairdom::reductions::Relation::EqualIffOracle => format!(
                "predicted {param} = {} iff the formula is {}satisfiable, larger otherwise",
                p.value,
                if kind.uses_nae() { "NAE-" } else { "" }
            ),
        };
        lines.push(line);
    }
    comments.extend(lines.iter().cloned());
    let refs: Vec<&str> = comments.iter().map(String::as_str).collect();
    write(output, &write_graph(&g, &refs))?;

    let stats = pairdom::reductions::GraphStats::of(&g);
    println!(
        "wrote {}: {} vertices, {} edges, bipartite={}",
        output.display(),
        stats.vertices,
        stats.edges,
        stats.bipartite
    );
    for line in lines {
        println!("{line}");
    }
    Ok(EXIT_PASS)
}

fn cmd_verify(
    kind: ConstructionKind,
    f: &CnfFormula,
    output: Option<&Path>,
    budget: SearchBudget,
) -> Result<i32, Failure> {
    warn_preconditions(f);
    let report = verify_equivalence(kind, f, budget).map_err(|e| match e {
        ReductionError::Solve(e) => solve_failure(e),
        other => input(other),
    })?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    if let Some(path) = output {
        write(path, &format!("{json}\n"))?;
    }
    println!("{json}");
    for failure in report.failures() {
        eprintln!("violation: {failure}");
    }
    Ok(match report.outcome() {
        Outcome::Pass => EXIT_PASS,
        Outcome::Violated => EXIT_VIOLATED,
        Outcome::BudgetExceeded => EXIT_BUDGET,
    })
}

fn cmd_generate(
    family: FamilyName,
    n: Option<usize>,
    p: Option<f64>,
    seed: u64,
    output: Option<&Path>,
) -> Result<i32, Failure> {
    let need_n = || n.ok_or_else(|| input("this family needs --n"));
    let text = if family == FamilyName::AllLabeledTrees {
        let n = need_n()?;
        if n == 0 || n > campaign::MAX_TREE_ORDER {
            return Err(input(format!(
                "all-labeled-trees supports 1 <= n <= {}",
                campaign::MAX_TREE_ORDER
            )));
        }
        let mut out = String::new();
        for (i, t) in labeled_trees(n).enumerate() {
            out += &write_graph(&t, &[&format!("labeled tree n={n} index={i}")]);
        }
        out
    } else {
        let spec = match family {
            FamilyName::Path => Family::Path { n: need_n()? },
            FamilyName::Cycle => Family::Cycle { n: need_n()? },
            FamilyName::Star => Family::Star { n: need_n()? },
            FamilyName::Complete => Family::Complete { n: need_n()? },
            FamilyName::CoronaComplete => Family::CoronaComplete { p: need_n()? },
            FamilyName::TrianglePendants => Family::TrianglePendants,
            FamilyName::RandomTree => Family::RandomTree { n: need_n()?, seed },
            FamilyName::RandomConnected => Family::RandomConnected {
                n: need_n()?,
                p: p.ok_or_else(|| input("random-connected needs --p"))?,
                seed,
            },
            FamilyName::AllLabeledTrees => unreachable!("handled above"),
        };
        let g = spec.generate().map_err(input)?;
        let header = serde_json::to_string(&spec).expect("spec serializes");
        write_graph(&g, &[&header])
    };
    match output {
        Some(path) => write(path, &text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    Ok(EXIT_PASS)
}

fn cmd_campaign(cfg: &CampaignConfig, jobs: usize, output: Option<&Path>) -> Result<i32, Failure> {
    cfg.validate().map_err(input)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(input)?;
    let report = pool.install(|| campaign::run(cfg));
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    let summary: Vec<String> = report
        .properties
        .iter()
        .map(|p| {
            format!(
                "{} criterion {:>2} {} instances={} violations={} budget_exceeded={}",
                if p.passed() { "PASS" } else { "FAIL" },
                p.criterion,
                p.property,
                p.instances,
                p.violation_count,
                p.budget_exceeded
            )
        })
        .collect();
    match output {
        Some(path) => {
            write(path, &format!("{json}\n"))?;
            for line in &summary {
                println!("{line}");
            }
        }
        None => {
            println!("{json}");
            for line in &summary {
                eprintln!("{line}");
            }
        }
    }
    Ok(if report.passed { EXIT_PASS } else { EXIT_VIOLATED })
}
