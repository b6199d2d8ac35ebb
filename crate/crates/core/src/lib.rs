pub mod cli;
pub mod dimsub;
pub mod error;
pub mod exactlinalg;
pub mod freering;
pub mod functors;
pub mod nilpotent;

pub use error::{Error, Result};
