pub mod bisets;
pub mod characters;
pub mod context;
pub mod cyclotomic;
pub mod error;
pub mod fusion;
pub mod group;
pub mod intlin;
pub mod rational_reps;
pub mod realize;
pub mod rep_rings;
pub mod serde_num;
pub mod superclass;

pub use error::{Error, Result};
