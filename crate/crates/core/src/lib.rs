//! Dunwoody diagrams and the exact algebra needed to read them.
//!
//! A Dunwoody diagram `D(a,b,c,n,r,s)` is a planar trivalent diagram with `n`
//! upper and `n` lower cycles of `d = 2a+b+c` vertices each, glued in pairs to
//! form a genus-`n` Heegaard diagram. This crate builds those diagrams, traces
//! their relator curves, and checks the resulting presentations against
//! independent torus-knot invariants:
//!
//! - [`diagram`]: parameters, construction, curve tracing, admissibility and
//!   relator reading.
//! - [`freegroup`]: reduced words, cyclic normal forms, substitutions and
//!   certified free-basis changes.
//! - [`presentations`]: finite presentations, exact Smith normal form and
//!   first homology.
//! - [`oracle`]: torus-knot groups, Alexander polynomials, resultants and
//!   circulant homology of cyclic branched coverings.
//! - [`verify`]: end-to-end family verification reports.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact.

#![no_std]

extern crate alloc;

pub mod diagram;
pub mod freegroup;
pub mod oracle;
pub mod presentations;
pub mod verify;

pub use diagram::{
    family_params, validate_params, AdmissibilityReport, Arc, ArcKind, Curve, Diagram,
    DiagramError, DunwoodyParams, ExponentProfile, FamilySign, ParamError, SSolutions, Tier,
    TorusFamily, VertexId,
};
pub use freegroup::{FreeGroupError, FreeWord, Letter, Sign, Substitution};
pub use oracle::{IntPolynomial, OracleError, TorusKnot};
pub use presentations::{
    AbelianInvariants, Alphabet, IntegerMatrix, LensSpaceCheck, Presentation, PresentationError,
    SmithForm,
};
pub use verify::{
    torus_basis_change, verify_covering, verify_family, CoveringCheck, VerificationReport,
};
