//! Reference computations for torus knots, independent of any diagram.
//!
//! Everything here is computed from closed formulas: the standard knot group
//! `<x, y | x^q y^-p>`, the Alexander polynomial
//! `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, and the homology of the
//! `n`-fold cyclic branched covering as the cokernel of the circulant with
//! symbol `Δ(t) mod t^n - 1`. The closed-form relator words of the two
//! Dunwoody families live in [`words`].

mod polynomial;
pub mod words;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::freegroup::FreeWord;
use crate::presentations::{smith_normal_form, AbelianInvariants, Alphabet, Presentation};

pub use polynomial::{resultant, IntPolynomial};
pub use words::closed_form_word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("torus knot needs p > 1 (got {0})")]
    InvalidP(i64),
    #[error("torus knot needs q >= 1 (got {0})")]
    InvalidQ(i64),
    #[error("torus knot parameters ({p}, {q}) are not coprime")]
    NotCoprime { p: i64, q: i64 },
    #[error("Alexander quotient for ({p}, {q}) is not exact")]
    InexactDivision { p: u32, q: u32 },
    #[error("covering degree must be at least 2 (got {0})")]
    CoveringDegree(usize),
    #[error("generator x{generator} is outside x0..x{}", .n.saturating_sub(1))]
    GeneratorOutOfRange { generator: u32, n: usize },
    #[error("circulant order {circulant} disagrees with resultant {resultant}")]
    ResultantMismatch {
        circulant: BigInt,
        resultant: BigInt,
    },
}

/// The torus knot `t(p, q)` with `p > 1`, `q >= 1`, `gcd(p, q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnot {
    p: u32,
    q: u32,
}

impl TorusKnot {
    pub fn new(p: i64, q: i64) -> Result<Self, OracleError> {
        if p <= 1 {
            return Err(OracleError::InvalidP(p));
        }
        if q < 1 {
            return Err(OracleError::InvalidQ(q));
        }
        if p.gcd(&q) != 1 {
            return Err(OracleError::NotCoprime { p, q });
        }
        let p = u32::try_from(p).map_err(|_| OracleError::InvalidP(p))?;
        let q = u32::try_from(q).map_err(|_| OracleError::InvalidQ(q))?;
        Ok(TorusKnot { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `t(p, 1)` is the unknot.
    pub fn is_degenerate(&self) -> bool {
        self.q == 1
    }

    /// `<x0, x1 | x0^q x1^-p>`.
    pub fn group(&self) -> Presentation {
        let relator = FreeWord::from_powers(&[(0, self.q as i64), (1, -(self.p as i64))]);
        Presentation::new(2, alloc::vec![relator], Alphabet::Indexed)
            .expect("two generators cover the relator")
    }

    pub fn alexander_polynomial(&self) -> IntPolynomial {
        torus_alexander(self.p, self.q).expect("coprime parameters divide exactly")
    }

    /// First homology of the `n`-fold cyclic branched covering.
    pub fn branched_cover_homology(&self, n: usize) -> Result<AbelianInvariants, OracleError> {
        if n < 2 {
            return Err(OracleError::CoveringDegree(n));
        }
        let delta = self.alexander_polynomial();
        let h = circulant_homology(&delta, n);
        let res = resultant(&delta, &IntPolynomial::cyclotomic_binomial(n)).abs();
        let consistent = match h.order() {
            Some(order) => order == res,
            None => res.is_zero(),
        };
        if !consistent {
            return Err(OracleError::ResultantMismatch {
                circulant: h.order().unwrap_or_default(),
                resultant: res,
            });
        }
        Ok(h)
    }
}

/// See [`TorusKnot::group`].
pub fn torus_knot_group(knot: &TorusKnot) -> Presentation {
    knot.group()
}

/// See [`TorusKnot::branched_cover_homology`].
pub fn branched_cover_homology(
    knot: &TorusKnot,
    n: usize,
) -> Result<AbelianInvariants, OracleError> {
    knot.branched_cover_homology(n)
}

/// `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))` for arbitrary positive `p, q`.
/// Fails when the quotient is not a polynomial, which happens exactly when
/// `gcd(p, q) > 1`.
pub fn torus_alexander(p: u32, q: u32) -> Result<IntPolynomial, OracleError> {
    let binom = |k: u32| IntPolynomial::cyclotomic_binomial(k as usize);
    let num = &binom(p * q) * &binom(1);
    let den = &binom(p) * &binom(q);
    num.div_exact(&den)
        .ok_or(OracleError::InexactDivision { p, q })
}

/// Alexander polynomial of `t(p, q)`.
pub fn alexander_polynomial(knot: &TorusKnot) -> IntPolynomial {
    knot.alexander_polynomial()
}

/// Cokernel of the `n x n` circulant with symbol `f mod t^n - 1`.
pub fn circulant_homology(f: &IntPolynomial, n: usize) -> AbelianInvariants {
    let snf = smith_normal_form(&f.circulant(n));
    AbelianInvariants::from_smith_diagonal(n, &snf.d.diagonal())
}

/// Abelianized base relator of a cyclic presentation on `x_0..x_{n-1}`:
/// the coefficient of `t^j` is the exponent sum of `x_j`.
pub fn relator_polynomial(base: &FreeWord, n: usize) -> Result<IntPolynomial, OracleError> {
    if let Some(g) = base.max_generator().filter(|&g| g as usize >= n) {
        return Err(OracleError::GeneratorOutOfRange { generator: g, n });
    }
    Ok(IntPolynomial::new(
        (0..n as u32)
            .map(|j| BigInt::from(base.exponent_sum(j)))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::syntax::parse_word;
    use alloc::vec;

    fn knot(p: i64, q: i64) -> TorusKnot {
        TorusKnot::new(p, q).unwrap()
    }

    fn big(xs: &[i64]) -> alloc::vec::Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn knot_validation() {
        assert_eq!(TorusKnot::new(1, 3), Err(OracleError::InvalidP(1)));
        assert_eq!(TorusKnot::new(2, 0), Err(OracleError::InvalidQ(0)));
        assert_eq!(
            TorusKnot::new(4, 6),
            Err(OracleError::NotCoprime { p: 4, q: 6 })
        );
        assert!(knot(5, 1).is_degenerate());
    }

    #[test]
    fn standard_groups() {
        assert_eq!(
            knot(2, 3).group().relators(),
            &[parse_word("x0^3 X1^2").unwrap()]
        );
        assert_eq!(
            knot(3, 4).group().relators(),
            &[parse_word("x0^4 X1^3").unwrap()]
        );
        let unknot = knot(3, 1).group();
        assert_eq!(unknot.relators(), &[parse_word("x0 X1^3").unwrap()]);
        assert_eq!(unknot.homology().free_rank, 1);
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(
            knot(2, 3).alexander_polynomial(),
            IntPolynomial::from_i64s(&[1, -1, 1])
        );
        assert_eq!(
            knot(2, 5).alexander_polynomial(),
            IntPolynomial::from_i64s(&[1, -1, 1, -1, 1])
        );
        let d34 = knot(3, 4).alexander_polynomial();
        assert_eq!(d34.degree(), Some(6));
        assert_eq!(d34.eval(&BigInt::from(1)), BigInt::from(1));
        assert_eq!(
            torus_alexander(2, 4),
            Err(OracleError::InexactDivision { p: 2, q: 4 })
        );
    }

    #[test]
    fn trefoil_coverings() {
        let k = knot(2, 3);
        let h = |n| k.branched_cover_homology(n).unwrap();
        assert_eq!(
            h(2),
            AbelianInvariants {
                free_rank: 0,
                torsion: big(&[3])
            }
        );
        assert_eq!(
            h(3),
            AbelianInvariants {
                free_rank: 0,
                torsion: big(&[2, 2])
            }
        );
        assert!(h(5).is_trivial());
        assert_eq!(
            h(6),
            AbelianInvariants {
                free_rank: 2,
                torsion: vec![]
            }
        );
        assert_eq!(
            k.branched_cover_homology(1),
            Err(OracleError::CoveringDegree(1))
        );
    }

    #[test]
    fn relator_polynomial_examples() {
        let f = relator_polynomial(&parse_word("x0 x1 X0").unwrap(), 2).unwrap();
        assert_eq!(f, IntPolynomial::from_i64s(&[0, 1]));
        let f = relator_polynomial(&FreeWord::power_of(0, 4), 3).unwrap();
        assert_eq!(f, IntPolynomial::from_i64s(&[4]));
        assert_eq!(
            relator_polynomial(&parse_word("x3").unwrap(), 3),
            Err(OracleError::GeneratorOutOfRange { generator: 3, n: 3 })
        );
    }
}
