//! Johnson and Kneser graphs with exact metric, strong metric and doubly
//! metric dimension solvers, definitional checkers, and ILP model export.

pub mod bits;
pub mod error;
pub mod families;
pub mod graph;
pub mod ilp;
pub mod resolving;
pub mod solve;
pub mod strong;
pub mod subset;
pub mod symmetry;

pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use graph::{all_pairs_distances, DistanceMatrix, Graph};
pub use solve::{SolveResult, Status, DEFAULT_BUDGET};
pub use subset::KSubset;
