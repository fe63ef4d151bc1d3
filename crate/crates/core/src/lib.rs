pub mod clifford;
pub mod density;
pub mod error;
pub mod exact_diag;
pub mod experiment;
pub mod graph;
pub mod ising;
pub mod limits;
pub mod rational;
pub mod subset;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use rational::Rational;
pub use ising::IsingInstance;
