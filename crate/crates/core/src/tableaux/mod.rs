//! Skew shapes, standard fillings and content vectors.

mod content;
mod shape;
mod tableau;

pub use content::{content_violation, derived, is_content_vector, tableau_from_content};
pub use shape::{conjugate, hook_length_count, partitions, SkewShape};
pub use tableau::{enumerate_standard, HookCase, Tableau};
