//! Exact solvers for domination-type parameters on small graphs, a
//! linear-time recognizer for trees with γ_pr = 2γ, the satisfiability
//! gadgets relating these parameters, and test-corpus generators.
//!
//! Solvers handle up to [`vertex_set::MAX_SET_ORDER`] vertices; structural
//! routines (distances, classification, tree recognition) scale linearly.

pub mod cnf;
pub mod families;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod solvers;
pub mod tree;
pub mod vertex_set;

pub use cnf::{parse_cnf, CnfError, CnfFormula, Literal};
pub use families::{labeled_trees, Family, FamilyError};
pub use graph::{Graph, GraphError, SetKind, Structure};
pub use io::{parse_graph, write_graph, FormatError};
pub use reductions::{verify_equivalence, ConstructionKind, Rho4Variant, VerificationReport};
pub use solvers::{solve, Parameter, ParameterWitness, SearchBudget, SolveError};
pub use tree::{cross_validate, recognize, TreeCertificate, TreeError};
pub use vertex_set::VertexSet;
