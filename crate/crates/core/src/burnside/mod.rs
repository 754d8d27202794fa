//! Burnside rings: marks, ring arithmetic, the restriction/transfer/norm
//! structure across subgroups, and unit groups.

mod functor;
mod marks;
mod ring;
mod units;

pub use functor::BurnsideFunctor;
pub use marks::TableOfMarks;
pub use ring::{BurnsideElement, BurnsideRing};
pub use units::{augmentation_sign, UnitGroup};
