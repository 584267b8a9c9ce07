//! Distance energies of vertex subsets in graphs: exact evaluation,
//! exhaustive and local search for extremal sets, and the special structure
//! of cycles (maximal evenness, Wiener maximizers).

pub mod characterize;
pub mod cycle;
pub mod energy;
pub mod error;
pub mod graph;
pub mod majorization;
pub mod maxeven;
pub mod multiset;
pub mod search;
pub mod set;

pub use cycle::CyclicVertexSet;
pub use energy::{Kernel, Rational};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
pub use multiset::Multiset;
pub use search::{Direction, ObjectiveKind, ObjectiveSpec};
pub use set::VertexSet;
