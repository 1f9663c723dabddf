//! Exact invariants of braids and their closures.
//!
//! The crate computes, with exact arithmetic throughout:
//!
//! * braid words, Garside left-canonical forms and the word problem ([`braid`]),
//! * closure diagrams, Seifert matrices and the link signature ([`diagram`], [`seifert`]),
//! * the Rasmussen invariant via the filtered Lee complex over the rationals ([`lee`]),
//! * quasi-morphism defects, homogenizations and stable-length bounds ([`qm`]),
//! * asymptotic invariant series for orbit closures of the linear torus flow ([`flow`]).
//!
//! Scalar types are generic where the mathematics is (see [`linalg`]); the
//! concrete choices used by the high-level operations are the aliases below.

pub mod braid;
pub mod diagram;
pub mod error;
pub mod flow;
pub mod lee;
pub mod linalg;
pub mod qm;
pub mod seifert;

/// Arbitrary-precision integer used for Seifert matrix entries.
pub type Int = num_bigint::BigInt;
/// Exact rational scalar used by homology and signature computations.
pub type Rational = num_rational::BigRational;
/// Floating-point scalar used by the torus-flow sampling front end.
pub type Real = f64;

pub use braid::{
    braids_equal, delta_braid, equal_mod_center, parse_braid, torsion_generators, BraidWord,
    NormalForm,
};
pub use diagram::LinkDiagram;
pub use error::{Error, Result};
pub use lee::{
    build_lee_complex, canonical_lee_cycles, filtration_degrees, rasmussen_s, rasmussen_s_exact,
    CanonicalCycles, LeeComplex, SMethod, SOutcome, SConfig,
};
pub use seifert::{link_signature, seifert_matrix, symmetric_signature, SeifertMatrix};
