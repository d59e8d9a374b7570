use core::fmt;

use crate::oracle::TorusKnot;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("n must be positive (got {0})")]
    NonPositiveN(i64),
    #[error("{name} must be nonnegative (got {value})")]
    NegativeCount { name: &'static str, value: i64 },
    #[error("a+b+c must be positive")]
    EmptyDiagram,
    #[error("parameter {0} is too large")]
    TooLarge(&'static str),
    #[error("p must be greater than 1 (got {0})")]
    FamilyP(i64),
    #[error("m must be {} for sign {sign} (got {m})", .sign.min_m_text())]
    FamilyM { m: i64, sign: FamilySign },
}

/// The six Dunwoody parameters with `r` reduced mod `d = 2a+b+c` and `s`
/// reduced mod `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DunwoodyParams {
    a: u32,
    b: u32,
    c: u32,
    n: u32,
    r: u32,
    s: u32,
}

impl DunwoodyParams {
    pub fn new(a: i64, b: i64, c: i64, n: i64, r: i64, s: i64) -> Result<Self, ParamError> {
        if n <= 0 {
            return Err(ParamError::NonPositiveN(n));
        }
        for (name, value) in [("a", a), ("b", b), ("c", c)] {
            if value < 0 {
                return Err(ParamError::NegativeCount { name, value });
            }
        }
        if a + b + c == 0 {
            return Err(ParamError::EmptyDiagram);
        }
        let d = 2 * a + b + c;
        // vertex indices are u32 and there are 2nd of them
        if d > u32::MAX as i64 || n > u32::MAX as i64 || 2 * n * d > u32::MAX as i64 {
            return Err(ParamError::TooLarge("2nd"));
        }
        Ok(DunwoodyParams {
            a: a as u32,
            b: b as u32,
            c: c as u32,
            n: n as u32,
            r: r.rem_euclid(d) as u32,
            s: s.rem_euclid(n) as u32,
        })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// Vertices per cycle.
    pub fn d(&self) -> u32 {
        2 * self.a + self.b + self.c
    }

    pub fn as_tuple(&self) -> (u32, u32, u32, u32, u32, u32) {
        (self.a, self.b, self.c, self.n, self.r, self.s)
    }

    /// Same `a, b, c, r` with `n = 1`, `s = 0`: the base of the covering.
    pub fn base(&self) -> DunwoodyParams {
        DunwoodyParams {
            n: 1,
            s: 0,
            ..*self
        }
    }
}

/// See [`DunwoodyParams::new`].
pub fn validate_params(
    a: i64,
    b: i64,
    c: i64,
    n: i64,
    r: i64,
    s: i64,
) -> Result<DunwoodyParams, ParamError> {
    DunwoodyParams::new(a, b, c, n, r, s)
}

impl fmt::Display for DunwoodyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "D({},{},{},{},{},{})",
            self.a, self.b, self.c, self.n, self.r, self.s
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySign {
    /// `t(p, mp+1)`, `m >= 1`.
    Plus,
    /// `t(p, mp-1)`, `m >= 2`.
    Minus,
}

impl FamilySign {
    pub fn min_m(self) -> i64 {
        match self {
            FamilySign::Plus => 1,
            FamilySign::Minus => 2,
        }
    }

    fn min_m_text(self) -> &'static str {
        match self {
            FamilySign::Plus => "at least 1",
            FamilySign::Minus => "at least 2",
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            FamilySign::Plus => 1,
            FamilySign::Minus => -1,
        }
    }
}

impl fmt::Display for FamilySign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilySign::Plus => "+",
            FamilySign::Minus => "-",
        })
    }
}

impl core::str::FromStr for FamilySign {
    type Err = &'static str;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "+" | "plus" => Ok(FamilySign::Plus),
            "-" | "minus" => Ok(FamilySign::Minus),
            _ => Err("sign must be + or -"),
        }
    }
}

/// One member `(p, m, ±)` of the torus-knot families realized by Dunwoody
/// diagrams: `D(1, p-2, 2mp-2m-p+1, n, p, p)` for `t(p, mp+1)` and
/// `D(1, p-2, 2mp-2m-p-1, n, -3p+4, -p)` for `t(p, mp-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusFamily {
    p: i64,
    m: i64,
    sign: FamilySign,
}

impl TorusFamily {
    pub fn new(p: i64, m: i64, sign: FamilySign) -> Result<Self, ParamError> {
        if p <= 1 {
            return Err(ParamError::FamilyP(p));
        }
        if m < sign.min_m() {
            return Err(ParamError::FamilyM { m, sign });
        }
        if p > 1 << 15 || m > 1 << 15 {
            return Err(ParamError::TooLarge("p, m"));
        }
        Ok(TorusFamily { p, m, sign })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn sign(&self) -> FamilySign {
        self.sign
    }

    /// `mp ± 1`.
    pub fn q(&self) -> i64 {
        self.m * self.p + self.sign.as_i64()
    }

    pub fn knot(&self) -> TorusKnot {
        TorusKnot::new(self.p, self.q()).expect("p and mp±1 are coprime")
    }

    /// The unreduced shift parameter: `p` or `-p`.
    pub fn s(&self) -> i64 {
        self.sign.as_i64() * self.p
    }

    /// The unreduced label rotation: `p` or `-3p+4`.
    pub fn r(&self) -> i64 {
        match self.sign {
            FamilySign::Plus => self.p,
            FamilySign::Minus => -3 * self.p + 4,
        }
    }

    pub fn params(&self, n: i64) -> Result<DunwoodyParams, ParamError> {
        let (p, m) = (self.p, self.m);
        let c = 2 * m * p - 2 * m - p + self.sign.as_i64();
        DunwoodyParams::new(1, p - 2, c, n, self.r(), self.s())
    }
}

impl fmt::Display for TorusFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.m, self.sign)
    }
}

/// Parameters of the `n`-fold family member for `t(p, mp±1)`.
pub fn family_params(
    p: i64,
    m: i64,
    sign: FamilySign,
    n: i64,
) -> Result<DunwoodyParams, ParamError> {
    TorusFamily::new(p, m, sign)?.params(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn normalizes_r_and_s() {
        let p = DunwoodyParams::new(1, 0, 1, 1, 2, 0).unwrap();
        assert_eq!((p.d(), p.r(), p.s()), (3, 2, 0));
        let p = DunwoodyParams::new(1, 0, 1, 1, 5, 0).unwrap();
        assert_eq!((p.d(), p.r()), (3, 2));
        let p = DunwoodyParams::new(1, 0, 1, 4, -1, -3).unwrap();
        assert_eq!((p.r(), p.s()), (2, 1));
    }

    #[test]
    fn distinct_diagnostics() {
        assert_eq!(
            DunwoodyParams::new(1, 1, 1, 0, 0, 0),
            Err(ParamError::NonPositiveN(0))
        );
        assert!(ParamError::NonPositiveN(0)
            .to_string()
            .starts_with("n must be positive"));
        assert_eq!(
            DunwoodyParams::new(1, -1, 1, 1, 0, 0),
            Err(ParamError::NegativeCount {
                name: "b",
                value: -1
            })
        );
        assert_eq!(
            DunwoodyParams::new(0, 0, 0, 1, 0, 0),
            Err(ParamError::EmptyDiagram)
        );
    }

    #[test]
    fn family_examples() {
        let t = |p: &DunwoodyParams| p.as_tuple();
        assert_eq!(
            t(&family_params(3, 1, FamilySign::Plus, 5).unwrap()),
            (1, 1, 2, 5, 3, 3)
        );
        assert_eq!(
            t(&family_params(2, 1, FamilySign::Plus, 1).unwrap()),
            (1, 0, 1, 1, 2, 0)
        );
        // d = 7, r = -5 = 2 mod 7, s = -3 = 1 mod 4
        assert_eq!(
            t(&family_params(3, 2, FamilySign::Minus, 4).unwrap()),
            (1, 1, 4, 4, 2, 1)
        );
    }

    #[test]
    fn family_cycle_sizes() {
        for p in 2..9 {
            for m in 2..6 {
                let plus = family_params(p, m, FamilySign::Plus, 1).unwrap();
                assert_eq!(plus.d() as i64, 2 * m * (p - 1) + 1);
                let minus = family_params(p, m, FamilySign::Minus, 1).unwrap();
                assert_eq!(minus.d() as i64, 2 * m * (p - 1) - 1);
            }
        }
    }

    #[test]
    fn family_ranges() {
        assert_eq!(
            family_params(1, 1, FamilySign::Plus, 1),
            Err(ParamError::FamilyP(1))
        );
        assert_eq!(
            family_params(2, 1, FamilySign::Minus, 1),
            Err(ParamError::FamilyM {
                m: 1,
                sign: FamilySign::Minus
            })
        );
        assert_eq!(
            family_params(2, 0, FamilySign::Plus, 1),
            Err(ParamError::FamilyM {
                m: 0,
                sign: FamilySign::Plus
            })
        );
        assert_eq!(
            family_params(2, 1, FamilySign::Plus, 0),
            Err(ParamError::NonPositiveN(0))
        );
    }
}
