//! Gallai colorings of complete graphs and tournaments: rainbow-triangle
//! detection and decomposition, exact chromatic numbers of color-restricted
//! subgraphs, the product bound over `s`-color subgraphs, and long
//! few-colored directed paths.

pub mod chromatic;
pub mod constructions;
pub mod error;
pub mod extractor;
pub mod gallai;
pub mod graph;
pub mod io;
pub mod model;
pub mod paths;
pub mod search;
pub mod suite;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use graph::SimpleGraph;
pub use model::{Color, ColorSet, ColoredCompleteGraph, ColoredTournament};
