//! Mackey functors on the subgroups of a finite group.

mod builtin;
mod formulas;
mod functor;
mod presentation;

pub use builtin::{
    burnside_mackey, by_name, constant_f2, constant_z, ghost_kernel_mackey, units_mackey, UnitsData,
    COEFFICIENT_NAMES,
};
pub use formulas::{cyclic_formulas, tn_formulas, FormulaEntry, FormulaTable};
pub use functor::{verify_mackey_axiom, MackeyFunctor, MackeyParts, ValueRing, Violation};
pub use presentation::AbelianGroupPresentation;
