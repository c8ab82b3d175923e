pub mod action;
pub mod algebra;
pub mod dimension;
pub mod error;
pub mod free;
pub mod frontend;
pub mod gb;
pub mod invariant;
pub mod linalg;
pub mod radical;
pub mod scalar;
pub mod skew;
pub mod table;

pub use error::{Error, Result};
