//! Thin families of functions into a prime field.
//!
//! A set of functions `A -> F` is thin when every coordinate is non-zero on
//! only finitely many of them; thin sums are then defined pointwise. A set is
//! thinly independent when no thin combination with a non-zero coefficient
//! vanishes. For a thin ground family the thinly independent subsets form a
//! matroid, which for graph incidence vectors over `F_2` is the matroid whose
//! circuits are the finite cycles and double rays.

mod demo;
mod field;
mod incidence;
mod independence;
mod vec;

pub use demo::{
    i3_counterexample_demo, random_thin_family, theorem8_sweep, thin_independents, thin_sums_matroid, verify_theorem8,
    I3Demo, Reading, ReadingReport, Theorem8Sweep,
};
pub use field::Field;
pub use incidence::{
    incidence_family, incidence_independent, is_even, mac_thin_equivalence, mac_thin_equivalence_all,
    mac_thin_equivalence_structured, structured_incidence, MacThinReport, StructuredIncidence,
};
pub use independence::{
    brute_force_independent, dependence_certificate, span_coefficients, span_membership, thin_basis_extend,
    thinly_independent,
};
pub use vec::{Domain, FnVec, IndexedFamily, ThinFamily};
