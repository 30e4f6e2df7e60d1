//! File formats, commands and verification campaigns for the `upkernel` binary.

pub mod campaign;
pub mod commands;
pub mod document;
pub mod error;
pub mod recipe;

pub use document::{GraphDocument, NamedDigraph, VertexEntry};
pub use error::{CliError, CliResult};
pub use recipe::{load, Loaded, RecipeDocument, Resolved};
