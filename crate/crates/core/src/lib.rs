pub mod arith;
pub mod cli;
pub mod dr;
pub mod endo;
pub mod error;
pub mod field;
pub mod ideal;
pub mod rayclass;
pub mod verify;
pub mod witt;

pub use error::{Error, Result};
