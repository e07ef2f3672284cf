pub mod algset;
pub mod cli;
pub mod error;
pub mod eval;
pub mod lattice;
pub mod linalg;
pub mod metro;
pub mod parse;
pub mod qpoly;
pub mod ring;
pub mod skewpoly;
pub mod wedd;
pub mod worked_examples;

pub use error::{Error, Result};
