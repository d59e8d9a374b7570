//! Finite presentations and their abelian invariants.

mod matrix;
mod snf;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::freegroup::syntax::write_word;
use crate::freegroup::{FreeWord, Letter};

pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("presentation needs at least one generator")]
    NoGenerators,
    #[error("relator {relator} uses generator {generator} but only {count} generators exist")]
    GeneratorOutOfRange {
        relator: usize,
        generator: u32,
        count: u32,
    },
    #[error("expected a presentation <a, g | w, g> with a single-letter second relator")]
    NotLensShape,
}

/// How generator ids are named when a presentation is printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `0 = a (α)`, `1 = g (γ)`; anything above prints as `x_k`.
    AlphaGamma,
    /// `k = x_k`.
    Indexed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generator_count: u32,
    relators: Vec<FreeWord>,
    alphabet: Alphabet,
}

impl Presentation {
    pub fn new(
        generator_count: u32,
        relators: Vec<FreeWord>,
        alphabet: Alphabet,
    ) -> Result<Self, PresentationError> {
        if generator_count == 0 {
            return Err(PresentationError::NoGenerators);
        }
        for (i, r) in relators.iter().enumerate() {
            if let Some(g) = r.max_generator().filter(|&g| g >= generator_count) {
                return Err(PresentationError::GeneratorOutOfRange {
                    relator: i,
                    generator: g,
                    count: generator_count,
                });
            }
        }
        Ok(Presentation {
            generator_count,
            relators,
            alphabet,
        })
    }

    pub fn generator_count(&self) -> u32 {
        self.generator_count
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Entry `(i, j)` is the exponent sum of generator `j` in relator `i`.
    pub fn abelianization_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.relators.len(), self.generator_count as usize);
        for (i, r) in self.relators.iter().enumerate() {
            for l in r.letters() {
                m[(i, l.generator as usize)] += BigInt::from(l.sign.as_i64());
            }
        }
        m
    }

    /// First homology, i.e. the abelianized group.
    pub fn homology(&self) -> AbelianInvariants {
        let snf = smith_normal_form(&self.abelianization_matrix());
        AbelianInvariants::from_smith_diagonal(self.generator_count as usize, &snf.d.diagonal())
    }

    /// If relator `k` is (up to cyclic permutation) the image of relator 0
    /// under `x_i -> x_{i+k}` for every `k`, in some order, returns relator 0.
    pub fn cyclic_base(&self) -> Option<FreeWord> {
        let n = self.generator_count;
        if self.relators.len() != n as usize {
            return None;
        }
        let base = self.relators[0].clone();
        if n == 1 {
            return Some(base);
        }
        let mut expected: Vec<FreeWord> = (0..n)
            .map(|k| shift_generators(&base, k, n).cyclic_normal_form(false))
            .collect();
        let mut actual: Vec<FreeWord> = self
            .relators
            .iter()
            .map(|r| r.cyclic_normal_form(false))
            .collect();
        expected.sort();
        actual.sort();
        (expected == actual).then_some(base)
    }

    /// Kills the single-letter second relator in the first one. Returns the
    /// order of the resulting cyclic group (0 = infinite).
    pub fn lens_space_check(&self) -> Result<LensSpaceCheck, PresentationError> {
        if self.generator_count != 2 || self.relators.len() != 2 || self.relators[1].len() != 1 {
            return Err(PresentationError::NotLensShape);
        }
        let killed = self.relators[1].letters()[0].generator;
        let survivor = 1 - killed;
        let remaining: FreeWord = self.relators[0]
            .letters()
            .iter()
            .copied()
            .filter(|l: &Letter| l.generator != killed)
            .collect();
        let e = remaining.exponent_sum(survivor);
        debug_assert_eq!(remaining, FreeWord::power_of(survivor, e));
        let order = e.unsigned_abs();
        Ok(LensSpaceCheck {
            exponent: e,
            h1_order: order,
            trivial_pi1: order == 1,
        })
    }
}

/// Relabels `x_i` as `x_{(i+k) mod n}`.
pub fn shift_generators(w: &FreeWord, k: u32, n: u32) -> FreeWord {
    w.map_generators(|g| (g + k) % n)
}

/// See [`Presentation::abelianization_matrix`].
pub fn abelianization_matrix(pres: &Presentation) -> IntegerMatrix {
    pres.abelianization_matrix()
}

/// See [`Presentation::homology`].
pub fn homology(pres: &Presentation) -> AbelianInvariants {
    pres.homology()
}

/// See [`Presentation::cyclic_base`].
pub fn is_cyclic_presentation(pres: &Presentation) -> Option<FreeWord> {
    pres.cyclic_base()
}

/// See [`Presentation::lens_space_check`].
pub fn lens_space_check(pres: &Presentation) -> Result<LensSpaceCheck, PresentationError> {
    pres.lens_space_check()
}

impl fmt::Display for Presentation {
    /// `gens=n; rel=<word>; rel=<word>;`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens={};", self.generator_count)?;
        for r in &self.relators {
            f.write_str(" rel=")?;
            write_word(f, r, self.alphabet)?;
            f.write_str(";")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LensSpaceCheck {
    /// Exponent of the surviving generator after the kill.
    pub exponent: i64,
    pub h1_order: u64,
    pub trivial_pi1: bool,
}

/// `Z^free_rank + Z/t_1 + ... + Z/t_k` with `t_1 | t_2 | ... | t_k`, all `> 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants::default()
    }

    /// Invariants of the cokernel of a relation matrix with `generators`
    /// columns whose Smith diagonal is `diagonal`.
    pub fn from_smith_diagonal(generators: usize, diagonal: &[BigInt]) -> Self {
        let rank = diagonal.iter().filter(|x| !x.is_zero()).count();
        let torsion = diagonal
            .iter()
            .filter(|x| !x.is_zero() && !x.abs().is_one())
            .map(|x| x.abs())
            .collect();
        AbelianInvariants {
            free_rank: generators - rank,
            torsion,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Group order; `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianInvariants {
    /// `trivial`, or summands joined by ` + ` such as `Z^2 + Z/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("trivial");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            Ok(())
        };
        match self.free_rank {
            0 => {}
            1 => {
                sep(f)?;
                f.write_str("Z")?;
            }
            r => {
                sep(f)?;
                write!(f, "Z^{r}")?;
            }
        }
        for t in &self.torsion {
            sep(f)?;
            write!(f, "Z/{t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::syntax::parse_word;
    use alloc::string::ToString;
    use alloc::vec;

    fn pres(gens: u32, rels: &[&str], alphabet: Alphabet) -> Presentation {
        Presentation::new(
            gens,
            rels.iter().map(|r| parse_word(r).unwrap()).collect(),
            alphabet,
        )
        .unwrap()
    }

    fn bigs(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn closed_family_matrix_and_homology() {
        let p = pres(2, &["a^2 G A G", "g"], Alphabet::AlphaGamma);
        let m = p.abelianization_matrix();
        assert_eq!(
            m,
            IntegerMatrix::from_rows(2, &[vec![1i64, -2], vec![0, 1]])
        );
        assert!(p.homology().is_trivial());
    }

    #[test]
    fn relatorless_presentation() {
        let p = pres(1, &[], Alphabet::Indexed);
        let m = p.abelianization_matrix();
        assert_eq!((m.rows(), m.cols()), (0, 1));
        assert_eq!(p.homology().free_rank, 1);
    }

    #[test]
    fn torus_group_abelianizes_to_z() {
        let p = pres(2, &["x0^3 X1^2"], Alphabet::Indexed);
        assert_eq!(
            p.abelianization_matrix(),
            IntegerMatrix::from_rows(2, &[vec![3i64, -2]])
        );
        assert_eq!(
            p.homology(),
            AbelianInvariants {
                free_rank: 1,
                torsion: vec![]
            }
        );
    }

    #[test]
    fn rejects_out_of_range_generator() {
        let err = Presentation::new(2, vec![parse_word("x2").unwrap()], Alphabet::Indexed);
        assert!(matches!(
            err,
            Err(PresentationError::GeneratorOutOfRange { generator: 2, .. })
        ));
        assert_eq!(
            Presentation::new(0, vec![], Alphabet::Indexed),
            Err(PresentationError::NoGenerators)
        );
    }

    #[test]
    fn cyclic_detection() {
        let p = pres(3, &["x0 X1", "x2 X0", "X2 x1"], Alphabet::Indexed);
        assert_eq!(p.cyclic_base(), Some(parse_word("x0 X1").unwrap()));
        let p = pres(2, &["x0", "x0"], Alphabet::Indexed);
        assert_eq!(p.cyclic_base(), None);
        let p = pres(1, &["x0^5"], Alphabet::Indexed);
        assert_eq!(p.cyclic_base(), Some(FreeWord::power_of(0, 5)));
    }

    #[test]
    fn lens_check_counts_surviving_exponent() {
        let p = pres(2, &["a^5 g A g", "g"], Alphabet::AlphaGamma);
        let check = p.lens_space_check().unwrap();
        assert_eq!(
            (check.exponent, check.h1_order, check.trivial_pi1),
            (4, 4, false)
        );
        let p = pres(2, &["a^2 G A G", "g"], Alphabet::AlphaGamma);
        assert!(p.lens_space_check().unwrap().trivial_pi1);
        let p = pres(2, &["g a G", "g"], Alphabet::AlphaGamma);
        assert_eq!(p.lens_space_check().unwrap().h1_order, 1);
        let p = pres(2, &["g^3", "G"], Alphabet::AlphaGamma);
        assert_eq!(p.lens_space_check().unwrap().h1_order, 0);
        let bad = pres(2, &["a^2 G A G", "g a"], Alphabet::AlphaGamma);
        assert_eq!(bad.lens_space_check(), Err(PresentationError::NotLensShape));
    }

    #[test]
    fn invariants_display() {
        assert_eq!(AbelianInvariants::trivial().to_string(), "trivial");
        let h = AbelianInvariants {
            free_rank: 0,
            torsion: bigs(&[2, 2]),
        };
        assert_eq!(h.to_string(), "Z/2 + Z/2");
        let h = AbelianInvariants {
            free_rank: 2,
            torsion: bigs(&[3]),
        };
        assert_eq!(h.to_string(), "Z^2 + Z/3");
        assert_eq!(h.order(), None);
    }

    #[test]
    fn presentation_text() {
        let p = pres(2, &["a^2 G A G", "g"], Alphabet::AlphaGamma);
        assert_eq!(p.to_string(), "gens=2; rel=a^2 G A G; rel=g;");
    }
}
