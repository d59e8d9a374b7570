//! Versioned JSON documents. Every document carries `schema_version` and a
//! `kind` tag; the matching JSON Schemas live in `schemas/` at the
//! workspace root.

use dunwoody_core::diagram::{ArcKind, Diagram, DunwoodyParams, Tier, VertexId};
use dunwoody_core::oracle::IntPolynomial;
use dunwoody_core::presentations::{AbelianInvariants, Alphabet, Presentation};
use dunwoody_core::verify::{CoveringCheck, VerificationReport};
use dunwoody_core::{AdmissibilityReport, TorusFamily};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::text::format_presentation;
use crate::FormatError;

pub const SCHEMA_VERSION: u32 = 1;

/// Integers that fit in `i64` become JSON numbers, larger ones decimal strings.
pub fn bigint_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub n: u32,
    pub r: u32,
    pub s: u32,
    pub d: u32,
}

impl From<&DunwoodyParams> for ParamsDoc {
    fn from(p: &DunwoodyParams) -> Self {
        ParamsDoc {
            a: p.a(),
            b: p.b(),
            c: p.c(),
            n: p.n(),
            r: p.r(),
            s: p.s(),
            d: p.d(),
        }
    }
}

impl ParamsDoc {
    pub fn to_params(&self) -> Result<DunwoodyParams, FormatError> {
        let p = DunwoodyParams::new(
            self.a.into(),
            self.b.into(),
            self.c.into(),
            self.n.into(),
            self.r.into(),
            self.s.into(),
        )?;
        if p.d() != self.d || ParamsDoc::from(&p) != *self {
            return Err(FormatError::Inconsistent("params are not normalized"));
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TierDoc {
    Upper,
    Lower,
}

impl From<Tier> for TierDoc {
    fn from(t: Tier) -> Self {
        match t {
            Tier::Upper => TierDoc::Upper,
            Tier::Lower => TierDoc::Lower,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcKindDoc {
    UpperBelt,
    LowerBelt,
    Diagonal,
    Vertical,
}

impl From<ArcKind> for ArcKindDoc {
    fn from(k: ArcKind) -> Self {
        match k {
            ArcKind::UpperBelt => ArcKindDoc::UpperBelt,
            ArcKind::LowerBelt => ArcKindDoc::LowerBelt,
            ArcKind::Diagonal => ArcKindDoc::Diagonal,
            ArcKind::Vertical => ArcKindDoc::Vertical,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDoc {
    pub tier: TierDoc,
    pub index: u32,
    /// Vertex ids in clockwise order.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: usize,
    pub tier: TierDoc,
    pub cycle: u32,
    pub position: u32,
    pub label: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcDoc {
    pub id: usize,
    pub kind: ArcKindDoc,
    pub tail: usize,
    pub head: usize,
    pub bundle_index: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDocument {
    pub schema_version: u32,
    pub kind: String,
    pub params: ParamsDoc,
    pub cycles: Vec<CycleDoc>,
    pub vertices: Vec<VertexDoc>,
    pub arcs: Vec<ArcDoc>,
    /// `[upper vertex, lower vertex]` pairs glued by the handles.
    pub pairing: Vec<[usize; 2]>,
}

impl DiagramDocument {
    pub fn from_diagram(d: &Diagram) -> Self {
        let p = d.params();
        let id = |v: VertexId| d.vertex_index(v);
        let mut cycles = Vec::with_capacity(2 * p.n() as usize);
        for tier in [Tier::Upper, Tier::Lower] {
            for index in 0..p.n() {
                let vertices = (0..p.d())
                    .map(|pos| {
                        id(VertexId {
                            tier,
                            cycle: index,
                            position: pos,
                        })
                    })
                    .collect();
                cycles.push(CycleDoc {
                    tier: tier.into(),
                    index,
                    vertices,
                });
            }
        }
        let vertices = d
            .vertices()
            .map(|v| VertexDoc {
                id: id(v),
                tier: v.tier.into(),
                cycle: v.cycle,
                position: v.position,
                label: d.label(v),
            })
            .collect();
        let arcs = d
            .arcs()
            .iter()
            .enumerate()
            .map(|(i, a)| ArcDoc {
                id: i,
                kind: a.kind.into(),
                tail: id(a.tail),
                head: id(a.head),
                bundle_index: a.bundle_index,
            })
            .collect();
        let pairing = d
            .vertices()
            .filter(|v| v.tier == Tier::Upper)
            .map(|v| [id(v), id(d.identified(v))])
            .collect();
        DiagramDocument {
            schema_version: SCHEMA_VERSION,
            kind: "diagram".into(),
            params: p.into(),
            cycles,
            vertices,
            arcs,
            pairing,
        }
    }

    /// Rebuilds the diagram from its parameters and checks that the stored
    /// combinatorics agree with it.
    pub fn to_diagram(&self) -> Result<Diagram, FormatError> {
        check_header(self.schema_version, &self.kind, "diagram")?;
        let diagram = Diagram::new(self.params.to_params()?);
        if DiagramDocument::from_diagram(&diagram) != *self {
            return Err(FormatError::Inconsistent(
                "diagram body does not match its params",
            ));
        }
        Ok(diagram)
    }
}

fn check_header(version: u32, kind: &str, expected: &'static str) -> Result<(), FormatError> {
    if version != SCHEMA_VERSION {
        return Err(FormatError::Version(version));
    }
    if kind != expected {
        return Err(FormatError::Kind {
            expected,
            found: kind.to_string(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub schema_version: u32,
    pub kind: String,
    pub generators: u32,
    pub alphabet: String,
    pub relators: Vec<String>,
    pub text: String,
}

impl PresentationDoc {
    pub fn new(p: &Presentation) -> Self {
        let alphabet = p.alphabet();
        PresentationDoc {
            schema_version: SCHEMA_VERSION,
            kind: "presentation".into(),
            generators: p.generator_count(),
            alphabet: match alphabet {
                Alphabet::AlphaGamma => "alpha_gamma",
                Alphabet::Indexed => "indexed",
            }
            .into(),
            relators: p
                .relators()
                .iter()
                .map(|w| dunwoody_core::freegroup::syntax::format_word(w, alphabet))
                .collect(),
            text: format_presentation(p),
        }
    }

    pub fn to_presentation(&self) -> Result<Presentation, FormatError> {
        check_header(self.schema_version, &self.kind, "presentation")?;
        let alphabet = match self.alphabet.as_str() {
            "alpha_gamma" => Alphabet::AlphaGamma,
            "indexed" => Alphabet::Indexed,
            _ => return Err(FormatError::Inconsistent("unknown alphabet")),
        };
        let relators = self
            .relators
            .iter()
            .map(|r| dunwoody_core::freegroup::syntax::parse_word(r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation::new(self.generators, relators, alphabet)?)
    }
}

pub fn homology_value(h: &AbelianInvariants) -> Value {
    serde_json::json!({
        "free_rank": h.free_rank,
        "torsion": h.torsion.iter().map(bigint_value).collect::<Vec<_>>(),
        "text": h.to_string(),
    })
}

pub fn homology_document(h: &AbelianInvariants) -> Value {
    let mut doc = serde_json::json!({ "schema_version": SCHEMA_VERSION, "kind": "homology" });
    let obj = doc.as_object_mut().expect("object");
    if let Value::Object(body) = homology_value(h) {
        obj.extend(body);
    }
    doc
}

pub fn polynomial_value(f: &IntPolynomial) -> Value {
    Value::Array(f.coeffs().iter().map(bigint_value).collect())
}

fn family_value(f: &TorusFamily) -> Value {
    serde_json::json!({
        "p": f.p(),
        "m": f.m(),
        "sign": f.sign().to_string(),
        "q": f.q(),
        "r": f.r(),
        "s": f.s(),
    })
}

fn admissibility_value(a: &Option<AdmissibilityReport>) -> Value {
    match a {
        Some(a) => serde_json::json!({
            "curve_count": a.curve_count,
            "orbit_transitive": a.orbit_transitive,
            "admissible": a.admissible,
        }),
        None => Value::Null,
    }
}

fn covering_value(c: &CoveringCheck) -> Value {
    serde_json::json!({
        "n": c.n,
        "params": ParamsDoc::from(&c.params),
        "admissibility": admissibility_value(&c.admissibility),
        "cyclic": c.cyclic,
        "computed": c.computed.as_ref().map(homology_value),
        "oracle": c.oracle.as_ref().map(homology_value),
        "pass": c.pass,
    })
}

pub fn report_document(r: &VerificationReport) -> Value {
    serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "report",
        "family": family_value(&r.family),
        "params": ParamsDoc::from(&r.params),
        "admissibility": admissibility_value(&r.admissibility),
        "relator_word": r.relator_word.as_ref().map(|w| {
            dunwoody_core::freegroup::syntax::format_word(w, Alphabet::AlphaGamma)
        }),
        "calibrated": r.calibrated,
        "exponent_profile": r.exponent_profile.map(|p| serde_json::json!({
            "p_sigma": p.p_sigma,
            "q_sigma": p.q_sigma,
        })),
        "derived_s": r.derived_s,
        "s_consistent": r.s_consistent,
        "lens_check": r.lens_check.map(|l| serde_json::json!({
            "exponent": l.exponent,
            "h1_order": l.h1_order,
            "trivial_pi1": l.trivial_pi1,
        })),
        "knot_group": r.knot_group,
        "coverings": r.coverings.iter().map(covering_value).collect::<Vec<_>>(),
        "verdict": if r.verdict { "pass" } else { "fail" },
    })
}
