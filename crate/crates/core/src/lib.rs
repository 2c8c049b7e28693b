//! Exact domination-type parameters of lexicographic products G ∘ H.

pub mod error;
pub mod formula;
pub mod graph;
pub mod io;
pub mod product;
pub mod solvers;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use formula::{predict, Prediction, TheoremId};
pub use graph::{Graph, RomanAssignment, VertexSet, Word, MAX_ORDER};
pub use product::{lex_product, ProductIndexMap};
pub use solvers::{solve, ParameterKind, SolveResult, SolverConfig, Witness};
