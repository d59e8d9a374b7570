//! Closed-form relator words of the two Dunwoody torus-knot families, in the
//! generators α (`0`) and γ (`1`).
//!
//! The `+` family `D(1, p-2, 2mp-2m-p+1, 1, p, 0)` gives `t(p, mp+1)`; the
//! `-` family `D(1, p-2, 2mp-2m-p-1, 1, -3p+4, 0)` gives `t(p, mp-1)`.

use crate::diagram::{FamilySign, TorusFamily};
use crate::freegroup::FreeWord;

const ALPHA: u32 = 0;
const GAMMA: u32 = 1;

fn alpha(k: i64) -> FreeWord {
    FreeWord::power_of(ALPHA, k)
}

fn gamma(k: i64) -> FreeWord {
    FreeWord::power_of(GAMMA, k)
}

/// Every printed form of one family word, each as a reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyWords {
    /// The word as read letter by letter along the diagram.
    pub expanded: FreeWord,
    /// `α^{m(p-1)±1} (γ⁻¹α^{-m})^{p-1} γ⁻¹`.
    pub collected: FreeWord,
    /// A conjugate of `collected` that maps onto `x^{mp±1} y^{-p}`:
    /// `α^{mp+1}(γ⁻¹α^{-m})^p` for `+`, `α^{mp-1}(α^{-m}γ⁻¹)^p` for `-`.
    pub normalized: FreeWord,
    /// `c` with `collected = c⁻¹ · normalized · c`.
    pub conjugator: FreeWord,
}

impl FamilyWords {
    pub fn new(family: &TorusFamily) -> Self {
        let (p, m) = (family.p(), family.m());
        let gm = gamma(-1) * alpha(-m);
        match family.sign() {
            FamilySign::Plus => {
                let inner = alpha(-(m - 1)) * gamma(-1) * alpha(-1);
                let expanded = alpha(m * (p - 1))
                    * alpha(1)
                    * gamma(-1)
                    * alpha(-1)
                    * inner.pow(p - 2)
                    * alpha(-(m - 1))
                    * gamma(-1);
                FamilyWords {
                    expanded,
                    collected: alpha(m * (p - 1) + 1) * gm.pow(p - 1) * gamma(-1),
                    normalized: alpha(m * p + 1) * gm.pow(p),
                    conjugator: alpha(m),
                }
            }
            FamilySign::Minus => {
                // (α^m)^{p-3} is read as a group power, so p = 2 gives α^{-m}
                let inner = gamma(-1) * alpha(-1) * alpha(-(m - 1));
                let expanded = alpha(m - 1)
                    * alpha(m).pow(p - 3)
                    * alpha(m - 1)
                    * alpha(1)
                    * gamma(-1)
                    * alpha(-1)
                    * alpha(-(m - 1))
                    * inner.pow(p - 2)
                    * gamma(-1);
                FamilyWords {
                    expanded,
                    collected: alpha(m * (p - 1) - 1) * gm.pow(p - 1) * gamma(-1),
                    normalized: alpha(m * p - 1) * (alpha(-m) * gamma(-1)).pow(p),
                    conjugator: FreeWord::identity(),
                }
            }
        }
    }
}

/// The family relator: the expanded word for `+`, the collected form for `-`.
pub fn family_word(family: &TorusFamily) -> FreeWord {
    let words = FamilyWords::new(family);
    match family.sign() {
        FamilySign::Plus => words.expanded,
        FamilySign::Minus => words.collected,
    }
}

/// [`family_word`] from raw parameters.
pub fn closed_form_word(
    p: i64,
    m: i64,
    sign: FamilySign,
) -> Result<FreeWord, crate::diagram::ParamError> {
    Ok(family_word(&TorusFamily::new(p, m, sign)?))
}
