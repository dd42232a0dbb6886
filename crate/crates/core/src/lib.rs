//! Abstract Young cells and representations of the symmetric group `S_n`
//! and the hyperoctahedral group `B_n`, in exact rational arithmetic.

pub mod cells;
pub mod error;
pub mod groups;
pub mod linalg;
pub mod reps;
pub mod sweep;
pub mod tops;
pub mod tableaux;

pub use error::{Error, Result};
