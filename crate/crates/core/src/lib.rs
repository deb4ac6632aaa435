pub mod anticodes;
pub mod bounds;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod oracles;
mod serde_util;
pub mod structures;
pub mod theta;

pub use error::{Error, Result};
