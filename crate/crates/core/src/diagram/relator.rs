//! Reading group presentations off a traced diagram.
//!
//! In the genus-one diagram each handle passage is a letter α (lower to
//! upper is α, upper to lower α⁻¹). Every non-vertical arc crosses the arc
//! joining the two branch points once, which contributes γ when the arc is
//! walked forward (cycle `i` to `i+1`) and γ⁻¹ backward. In the `n`-fold
//! diagram the handle passages alone give the cyclic presentation on
//! `x_0..x_{n-1}`.
//!
//! Relators are read walking each curve against its trace direction, i.e.
//! from the label-`d` lower vertex through its handle first.

use alloc::vec::Vec;

use super::trace::{Curve, Direction};
use super::{Diagram, DiagramError};
use crate::freegroup::{FreeWord, Letter};
use crate::presentations::{Alphabet, Presentation};

pub const ALPHA: u32 = 0;
pub const GAMMA: u32 = 1;

/// Presentations carried by an admissible diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeegaardPresentation {
    /// `n` generators, one relator per curve.
    pub cyclic: Presentation,
    /// `<α, γ | w>`, only for `n = 1`.
    pub knot_exterior: Option<Presentation>,
    /// `<α, γ | w, γ>`, only for `n = 1`.
    pub closed: Option<Presentation>,
}

fn alpha_gamma_word(diagram: &Diagram, curve: &Curve) -> FreeWord {
    forward_alpha_gamma_word(diagram, curve).inverse()
}

fn forward_alpha_gamma_word(diagram: &Diagram, curve: &Curve) -> FreeWord {
    let mut letters = Vec::with_capacity(2 * curve.len());
    for (t, c) in curve.traversals.iter().zip(&curve.crossings) {
        if diagram.arcs()[t.arc].kind.advances_cycle() {
            letters.push(match t.direction {
                Direction::Forward => Letter::pos(GAMMA),
                Direction::Backward => Letter::neg(GAMMA),
            });
        }
        letters.push(Letter::new(ALPHA, c.sign));
    }
    FreeWord::from_letters(letters)
}

impl Diagram {
    fn admissible_curves(&self) -> Result<Vec<Curve>, DiagramError> {
        let curves = self.trace_curves()?;
        let report = self.admissibility_of(&curves);
        if !report.admissible {
            return Err(DiagramError::Inadmissible {
                curve_count: report.curve_count,
                n: self.params().n(),
            });
        }
        Ok(curves)
    }

    /// The relator in α, γ of a genus-one diagram, read from the lower
    /// vertex labelled `d`.
    pub fn relator_word(&self) -> Result<FreeWord, DiagramError> {
        let n = self.params().n();
        if n != 1 {
            return Err(DiagramError::NotGenusOne(n));
        }
        let curves = self.admissible_curves()?;
        Ok(alpha_gamma_word(self, &curves[0]))
    }

    pub fn heegaard_presentation(&self) -> Result<HeegaardPresentation, DiagramError> {
        let n = self.params().n();
        let curves = self.admissible_curves()?;
        let relators = curves.iter().map(|c| c.crossing_word().inverse()).collect();
        let cyclic = Presentation::new(n, relators, Alphabet::Indexed)
            .expect("handles are numbered below n");
        let (knot_exterior, closed) = if n == 1 {
            let w = alpha_gamma_word(self, &curves[0]);
            let exterior = Presentation::new(2, alloc::vec![w.clone()], Alphabet::AlphaGamma)
                .expect("two generators");
            let closed = Presentation::new(
                2,
                alloc::vec![w, FreeWord::power_of(GAMMA, 1)],
                Alphabet::AlphaGamma,
            )
            .expect("two generators");
            (Some(exterior), Some(closed))
        } else {
            (None, None)
        };
        Ok(HeegaardPresentation {
            cyclic,
            knot_exterior,
            closed,
        })
    }
}

/// See [`Diagram::relator_word`].
pub fn relator_word(diagram: &Diagram) -> Result<FreeWord, DiagramError> {
    diagram.relator_word()
}

/// See [`Diagram::heegaard_presentation`].
pub fn heegaard_presentation(diagram: &Diagram) -> Result<HeegaardPresentation, DiagramError> {
    diagram.heegaard_presentation()
}

/// `(p_σ, q_σ)`: minus the exponent sums of α and γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentProfile {
    pub p_sigma: i64,
    pub q_sigma: i64,
}

pub fn exponent_profile(w: &FreeWord) -> ExponentProfile {
    ExponentProfile {
        p_sigma: -w.exponent_sum(ALPHA),
        q_sigma: -w.exponent_sum(GAMMA),
    }
}

/// Solutions of `q_σ + s·p_σ ≡ 0 (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SSolutions {
    pub n: u32,
    /// All residues in `0..n`, ascending.
    pub residues: Vec<u32>,
    /// `-q_σ / p_σ` when `p_σ = ±1`; it solves the congruence for every `n`.
    pub universal: Option<i64>,
}

impl SSolutions {
    pub fn contains(&self, s: i64) -> bool {
        let r = s.rem_euclid(self.n as i64) as u32;
        self.residues.binary_search(&r).is_ok()
    }
}

pub fn derive_s(profile: ExponentProfile, n: u32) -> SSolutions {
    assert!(n >= 1, "n must be positive");
    let modulus = n as i128;
    let (p, q) = (profile.p_sigma as i128, profile.q_sigma as i128);
    let residues = (0..n)
        .filter(|&s| (q + s as i128 * p).rem_euclid(modulus) == 0)
        .collect();
    let universal = match profile.p_sigma {
        1 => Some(-profile.q_sigma),
        -1 => Some(profile.q_sigma),
        _ => None,
    };
    SSolutions {
        n,
        residues,
        universal,
    }
}
