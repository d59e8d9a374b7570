//! Dunwoody diagrams `D(a,b,c,n,r,s)`: construction, curve tracing,
//! admissibility and the presentations they carry.

mod build;
mod params;
mod relator;
mod trace;

pub use build::{build_diagram, Arc, ArcKind, Diagram, Tier, VertexId};
pub use params::{
    family_params, validate_params, DunwoodyParams, FamilySign, ParamError, TorusFamily,
};
pub use relator::{
    derive_s, exponent_profile, heegaard_presentation, relator_word, ExponentProfile,
    HeegaardPresentation, SSolutions, ALPHA, GAMMA,
};
pub use trace::{
    check_admissibility, trace_curves, AdmissibilityReport, Crossing, Curve, Direction, Traversal,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("relator words need a genus-one diagram (n = 1), got n = {0}")]
    NotGenusOne(u32),
    #[error("diagram is not admissible: {curve_count} curves for n = {n}")]
    Inadmissible { curve_count: usize, n: u32 },
    #[error("structural fault in diagram: {0}")]
    Structural(&'static str),
}
