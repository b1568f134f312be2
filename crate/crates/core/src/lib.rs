//! Finite-geometry constructions of the tangent graph `NO⁺(2n,2)` and of the
//! graph `NM³₄` living off the secant variety of the Veronese surface in
//! `PG(5,2)`, together with the exact machinery needed to check them: prime
//! field arithmetic, projective subspaces, quadratic forms, the lifted
//! collineation group and a small strongly-regular-graph engine (parameters,
//! spectra, isomorphism and automorphism-group order).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command-line front end live in the `nm34` companion crate.

#![no_std]
#![forbid(unsafe_code)]
// Index loops read closer to the matrix formulas; a form's `len` is its
// number of variables and is never zero.
#![allow(clippy::needless_range_loop, clippy::len_without_is_empty)]

extern crate alloc;

pub mod constructions;
pub mod error;
pub mod field;
pub mod gf2;
pub mod graph;
mod linalg;
pub mod projgeom;
pub mod quadform;
pub mod unionfind;
pub mod veronese;

pub use error::{Error, Result};
pub use field::{Field, PrimeFieldElement};
pub use graph::{Graph, Spectrum, SrgParams};

pub use projgeom::{ProjPoint, ProjSubspace};
pub use quadform::QuadraticForm;
pub use veronese::{LiftedCollineation, OrbitLabel, SymMatrix3};
