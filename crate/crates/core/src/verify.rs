//! End-to-end verification of one torus-knot family member.

use alloc::vec::Vec;

use crate::diagram::{
    derive_s, exponent_profile, AdmissibilityReport, Diagram, DunwoodyParams, ExponentProfile,
    FamilySign, TorusFamily,
};
use crate::freegroup::{FreeWord, Substitution};
use crate::oracle::words::{family_word, FamilyWords};
use crate::presentations::{AbelianInvariants, LensSpaceCheck};

/// The free-basis change carrying the family relator to `x^q y^-p`, with
/// its inverse attached as a witness.
///
/// `+`: `x -> α, y -> α^m γ`; `-`: `x -> α, y -> γ α^m`. Its inverse maps the
/// α, γ relator into `x, y`.
pub fn torus_basis_change(family: &TorusFamily) -> Substitution {
    let m = family.m();
    let (x, y) = (0u32, 1u32);
    let (alpha, gamma) = (0u32, 1u32);
    let w = FreeWord::from_powers;
    match family.sign() {
        FamilySign::Plus => {
            Substitution::new([(x, w(&[(alpha, 1)])), (y, w(&[(alpha, m), (gamma, 1)]))])
                .with_inverse([(alpha, w(&[(x, 1)])), (gamma, w(&[(x, -m), (y, 1)]))])
        }
        FamilySign::Minus => {
            Substitution::new([(x, w(&[(alpha, 1)])), (y, w(&[(gamma, 1), (alpha, m)]))])
                .with_inverse([(alpha, w(&[(x, 1)])), (gamma, w(&[(y, 1), (x, -m)]))])
        }
    }
}

/// Homology of one `n`-fold covering, read from the diagram and from the
/// Alexander-polynomial circulant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringCheck {
    pub n: u32,
    pub params: DunwoodyParams,
    pub admissibility: Option<AdmissibilityReport>,
    pub cyclic: bool,
    pub computed: Option<AbelianInvariants>,
    pub oracle: Option<AbelianInvariants>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub family: TorusFamily,
    /// The genus-one parameters.
    pub params: DunwoodyParams,
    pub admissibility: Option<AdmissibilityReport>,
    /// Cyclic normal form (up to inversion) of the traced relator.
    pub relator_word: Option<FreeWord>,
    /// The traced relator matches the closed-form family word.
    pub calibrated: bool,
    pub exponent_profile: Option<ExponentProfile>,
    /// Universal solution of `q_σ + s·p_σ ≡ 0`.
    pub derived_s: Option<i64>,
    /// The family's `s` solves the congruence for every `n <= n_max`.
    pub s_consistent: bool,
    pub lens_check: Option<LensSpaceCheck>,
    /// The basis change verifies and carries the relator to `x^q y^-p`.
    pub knot_group: bool,
    pub coverings: Vec<CoveringCheck>,
    pub verdict: bool,
}

pub fn verify_covering(family: &TorusFamily, n: u32) -> CoveringCheck {
    let params = family
        .params(n as i64)
        .expect("a valid family gives valid parameters for n >= 1");
    let diagram = Diagram::new(params);
    let admissibility = diagram.check_admissibility().ok();
    let presentation = diagram.heegaard_presentation().ok();
    let cyclic = presentation
        .as_ref()
        .is_some_and(|p| p.cyclic.cyclic_base().is_some());
    let computed = presentation.map(|p| p.cyclic.homology());
    let oracle = family.knot().branched_cover_homology(n as usize).ok();
    let pass = cyclic && computed.is_some() && computed == oracle;
    CoveringCheck {
        n,
        params,
        admissibility,
        cyclic,
        computed,
        oracle,
        pass,
    }
}

pub fn verify_family(family: TorusFamily, n_max: u32) -> VerificationReport {
    let params = family.params(1).expect("n = 1 is valid");
    let diagram = Diagram::new(params);
    let admissibility = diagram.check_admissibility().ok();
    let traced = diagram.relator_word().ok();
    let expected = family_word(&family);

    let calibrated = traced
        .as_ref()
        .is_some_and(|w| w.cyclically_equivalent(&expected, true));
    let profile = traced.as_ref().map(exponent_profile);
    let derived_s = profile.and_then(|p| derive_s(p, 1).universal);
    let s_consistent = profile.is_some_and(|p| {
        derived_s == Some(family.s())
            && (1..=n_max.max(1)).all(|n| derive_s(p, n).contains(family.s()))
    });

    let lens_check = diagram
        .heegaard_presentation()
        .ok()
        .and_then(|h| h.closed)
        .and_then(|closed| closed.lens_space_check().ok());

    let knot_group = traced
        .as_ref()
        .is_some_and(|w| knot_group_holds(&family, w));

    let coverings: Vec<CoveringCheck> = (2..=n_max).map(|n| verify_covering(&family, n)).collect();

    let verdict = admissibility.is_some_and(|a| a.admissible)
        && calibrated
        && s_consistent
        && lens_check.is_some_and(|l| l.trivial_pi1)
        && knot_group
        && coverings.iter().all(|c| c.pass);

    VerificationReport {
        family,
        params,
        admissibility,
        relator_word: traced.map(|w| w.cyclic_normal_form(true)),
        calibrated,
        exponent_profile: profile,
        derived_s,
        s_consistent,
        lens_check,
        knot_group,
        coverings,
        verdict,
    }
}

fn knot_group_holds(family: &TorusFamily, traced: &FreeWord) -> bool {
    let sigma = torus_basis_change(family);
    if sigma.verify_automorphism() != Ok(true) {
        return false;
    }
    let inverse = sigma.inverse().expect("witness attached");
    let (p, q) = (family.p(), family.q());
    let target = FreeWord::from_powers(&[(0, q), (1, -p)]);
    let exact = inverse
        .apply(&FamilyWords::new(family).normalized)
        .is_ok_and(|img| img == target);
    let traced_image = inverse
        .apply(traced)
        .is_ok_and(|img| img.cyclically_equivalent(&target, true));
    exact && traced_image
}
