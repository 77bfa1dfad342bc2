//! Exact computation of canonical bases for irreducible SL(n,ℂ)
//! representations from torus-equivariant degenerations of Bott-Samelson
//! manifolds.
//!
//! The pipeline realises a section space as the span of products of minors
//! of generic parabolic matrices (one product of minors per tableau), sweeps
//! each section by a one-parameter row scaling into a Laurent polynomial in
//! the degeneration parameters, reads off ℓ-vectors as minimal exponents,
//! and solves the resulting linear conditions exactly over the rationals to
//! produce the filtration `F_ℓ`, its leaves, and a deterministic basis
//! refining the weight decomposition. A companion module compares the
//! resulting lattice points against type-A string polytopes through
//! unimodular affine maps.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod bott_samelson;
pub mod filtration;
pub mod laurent;
pub mod lie;
pub mod polytopes;

pub use filtration::{CanonicalBasis, LVector, LeafRecord, SectionSpaceContext};
pub use laurent::{rat, ratio, LaurentPoly, Rat, VarTable};
pub use lie::{Weight, Word};
