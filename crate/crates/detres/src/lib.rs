//! File formats, a parallel determinant backend and the command layer behind
//! the `detres` binary.

pub mod backend;
pub mod commands;
pub mod format;

pub use backend::RayonBackend;
pub use commands::{Failure, Outcome, OutputFormat};
