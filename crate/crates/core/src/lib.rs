//! Exact ideal theory of one-dimensional monomial curve rings `k[[t^S]]`.
//!
//! A numerical semigroup `S` stands for the ring, fractional monomial ideals
//! for its rank-one maximal Cohen-Macaulay modules, and every module-theoretic
//! construction (duals, traces, syzygies, stable annihilators, blowups) is
//! carried out as exact arithmetic on cofinite integer sets. The [`harness`]
//! module checks the resulting identities on every semigroup up to a genus
//! bound.

pub mod annihilator;
pub mod classes;
pub mod harness;
pub mod ideal;
pub mod ring;
pub mod semigroup;
pub mod tree;
mod window;

pub use annihilator::{
    category_annihilator, certify_cohomology_annihilator, duality_closure_shadow,
    stable_annihilator, CaCertificate, CaStatus, CaValue, DualityClosure, Justification,
};
pub use classes::{enumerate_ideal_classes, IdealClassList};
pub use ideal::{canonical_ideal, IdealError, RelativeIdeal, Syzygy};
pub use ring::{
    b_ideal, blowup, canonical_reduction_number, classify, conductor_ideal, is_ulrich,
    ClassificationRecord, RingError,
};
pub use semigroup::{InvariantRecord, NumericalSemigroup, SemigroupError};
pub use tree::{enumerate_by_genus, enumerate_subtree, enumerate_up_to_genus};
