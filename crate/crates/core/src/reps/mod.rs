//! Exact representations of finite groups and the fiber characters of
//! representations of a product `Π × G`.

mod character;
mod fiber;
mod parse;
mod rep;

pub use character::Character;
pub use fiber::{
    fiber_character, homogeneity_check, is_regular_multiple_pattern, HomogeneityReport, LevelFibers, ProductRep,
    RegularPattern,
};
pub use parse::{parse_product_rep_json, parse_rep};
pub use rep::Rep;

/// Representations with exact rational matrices.
pub type RationalMatrixRep = Rep<crate::Rational>;
