//! Exact-arithmetic verification toolkit for the `PSL(2,19)`-invariant cubic
//! sevenfold and its period geometry.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals or
//! elements of cyclotomic fields in canonical basis form, so every claimed
//! identity is checked by literal equality, never by floating-point proximity.
//!
//! The main layers, bottom up:
//!
//! * [`cyclo`] — arithmetic in `Q(zeta_n)` with conjugation and Galois action;
//! * [`linalg`] — fraction-free exact linear algebra: rank/kernel, Hermite
//!   normal form, Pfaffians, sparse rank over prime fields;
//! * [`psl2`] — the group `PSL(2,19)`, its subgroup `H` of order 171, and the
//!   certified 9-dimensional projective matrix representation;
//! * [`chars`] — character tables, symmetric-cube and tensor characters,
//!   decomposition, branching to `H`, isotypic projectors;
//! * [`jacobian`] — the invariant cubic pencil, its graded Jacobian ring,
//!   Hodge numbers, group action on graded pieces, smoothness certificates;
//! * [`periods`] — the period-lattice tower, the invariant polarization form,
//!   Gram Pfaffians, and the principal-lattice computations.
//!
//! [`embed`] holds a high-precision numerical embedding used only as an
//! independent cross-check in tests; no verification path depends on it.

pub mod chars;
pub mod cyclo;
pub mod embed;
pub mod jacobian;
pub mod linalg;
pub mod periods;
pub mod psl2;

pub use cyclo::{Cyclotomic, Integer, Rational};
pub use linalg::{Matrix, SparseMatrixFp};
pub use psl2::{ConjugacyData, GroupElement, ProjectiveRep};
