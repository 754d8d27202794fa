//! Finite groups as permutation groups: closure, subgroups, conjugacy,
//! double cosets and homomorphisms.

pub mod builtin;
mod elemset;
mod finite;
mod hom;
mod perm;
mod subgroups;

pub use elemset::ElemSet;
pub use finite::{FiniteGroup, GroupSpec, DEFAULT_ORDER_CAP};
pub use hom::{classify, hom_classes, hom_enumerate, GroupHom, HomClass};
pub use perm::Perm;
pub use subgroups::{DoubleCoset, Subgroup, SubgroupTable, DEFAULT_SUBGROUP_CAP};
