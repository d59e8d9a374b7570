use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::presentations::IntegerMatrix;

/// Dense polynomial in `t` with integer coefficients; `coeffs[k]` is the
/// coefficient of `t^k`. Trailing zeros are trimmed, so the zero polynomial
/// has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::new(alloc::vec![c])
    }

    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    pub fn monomial(coeff: BigInt, degree: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff;
        IntPolynomial::new(coeffs)
    }

    /// `t^n - 1`.
    pub fn cyclotomic_binomial(n: usize) -> Self {
        IntPolynomial::monomial(BigInt::one(), n) - IntPolynomial::one()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Long division over the integers. Returns `None` unless `divisor`
    /// divides `self` exactly in `Z[t]`.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.is_zero().then(IntPolynomial::zero);
        }
        let mut quot = alloc::vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.iter()
            .all(Zero::is_zero)
            .then(|| IntPolynomial::new(quot))
    }

    /// Coefficients of `self mod (t^n - 1)`, i.e. the symbol of the
    /// associated `n x n` circulant.
    pub fn wrap_mod_binomial(&self, n: usize) -> Vec<BigInt> {
        let mut out = alloc::vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k % n] += c;
        }
        out
    }

    /// The `n x n` circulant whose row `i` holds the coefficients of
    /// `t^i * self mod (t^n - 1)`.
    pub fn circulant(&self, n: usize) -> IntegerMatrix {
        let symbol = self.wrap_mod_binomial(n);
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            for (j, c) in symbol.iter().enumerate() {
                m[(i, (i + j) % n)] = c.clone();
            }
        }
        m
    }
}

/// Resultant via the Sylvester determinant. Zero when either input is zero.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    let size = m + n;
    let mut s = IntegerMatrix::zeros(size, size);
    // coefficients from the leading term down
    for row in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            s[(row, row + k)] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            s[(n + row, row + k)] = c.clone();
        }
    }
    s.determinant()
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;

            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPolynomial {
    /// `c0 + c1*t + c2*t^2 ...`, zero terms omitted, negative terms written
    /// with ` - `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{magnitude}")?,
                1 => write!(f, "{magnitude}*t")?,
                _ => write!(f, "{magnitude}*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn trims_and_degrees() {
        assert_eq!(poly(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(poly(&[0, 0]).degree(), None);
        assert!(poly(&[]).is_zero());
    }

    #[test]
    fn exact_division() {
        let num = poly(&[-1, 0, 0, 0, 0, 0, 1]); // t^6 - 1
        let q = num.div_exact(&poly(&[1, -1, 1])).unwrap();
        assert_eq!(q, poly(&[-1, -1, 0, 1, 1]));
        assert_eq!(num.div_exact(&poly(&[1, 1, 1, 1])), None);
        assert_eq!(poly(&[2, 4]).div_exact(&poly(&[2])), Some(poly(&[1, 2])));
        assert_eq!(poly(&[1, 4]).div_exact(&poly(&[2])), None);
        assert_eq!(poly(&[3]).div_exact(&poly(&[0, 1])), None);
    }

    #[test]
    fn resultant_examples() {
        let delta = poly(&[1, -1, 1]);
        assert_eq!(resultant(&delta, &poly(&[-1, 0, 1])), BigInt::from(3));
        let t6 = IntPolynomial::cyclotomic_binomial(6);
        assert!(resultant(&delta, &t6).is_zero());
        assert_eq!(resultant(&delta, &IntPolynomial::one()), BigInt::one());
        assert_eq!(resultant(&IntPolynomial::one(), &t6), BigInt::one());
        // Res(t - a, g) = g(a)
        let g = poly(&[5, -3, 0, 2]);
        assert_eq!(resultant(&poly(&[-2, 1]), &g), g.eval(&BigInt::from(2)));
    }

    #[test]
    fn circulant_rows_are_shifts() {
        let m = poly(&[1, -1, 1]).circulant(2);
        assert_eq!(m.row(0), &[BigInt::from(2), BigInt::from(-1)]);
        assert_eq!(m.row(1), &[BigInt::from(-1), BigInt::from(2)]);
    }

    #[test]
    fn display_format() {
        assert_eq!(poly(&[1, -1, 1]).to_string(), "1 - 1*t + 1*t^2");
        assert_eq!(poly(&[0, -2, 0, 3]).to_string(), "-2*t + 3*t^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
