//! Finite-model search and decision procedures for Gentzen-regular
//! connectives over intersective mixed consequence relations.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod kernel;
pub mod order;
pub mod rules;
pub mod search;

pub use error::{Error, Result};
