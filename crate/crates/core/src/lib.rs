pub mod catalog;
pub mod chartab;
pub mod cli;
pub mod cyclo;
pub mod error;
pub mod invariants;
pub mod numtheory;
pub mod permcore;
pub mod symchar;
pub mod verify;

pub use error::{Error, Result};
