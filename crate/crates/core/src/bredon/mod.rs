//! Bredon cohomology of finite G-CW complexes.

pub mod cohomology;
pub mod complex;
pub mod snf;

pub use cohomology::{bredon_cohomology, cochain_complex, CochainComplex, CohomologyResult};
pub use complex::{
    by_name, circle_trivial, free_orbit, point, s2sigma_circle, sigma_sphere, BoundaryEntry, BoundaryTerm, CellSpec,
    ComplexSpec, GCWComplex, COMPLEX_NAMES, MAX_DIMENSION,
};
pub use snf::{smith_normal_form, SmithForm};
