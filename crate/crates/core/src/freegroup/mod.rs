//! Words in a free group over an integer-indexed alphabet.
//!
//! Generators are plain `u32` ids. In two-generator contexts `0` is α and `1`
//! is γ; cyclic presentations use `0..n` for `x_0..x_{n-1}`. Names only appear
//! when a word is printed (see [`crate::presentations::Alphabet`]).

mod substitution;
pub mod syntax;

use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

pub use substitution::{substitute, verify_automorphism, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeGroupError {
    #[error("substitution has no image for generator {0}")]
    UndefinedGenerator(u32),
    #[error("substitution carries no inverse witness")]
    MissingWitness,
}

/// Exponent sign of a letter. `Pos` orders before `Neg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn from_i64(e: i64) -> Option<Sign> {
        match e {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A generator raised to `±1`. Ordered by generator id, then sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: u32,
    pub sign: Sign,
}

impl Letter {
    pub fn new(generator: u32, sign: Sign) -> Self {
        Letter { generator, sign }
    }

    pub fn pos(generator: u32) -> Self {
        Letter::new(generator, Sign::Pos)
    }

    pub fn neg(generator: u32) -> Self {
        Letter::new(generator, Sign::Neg)
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.generator, self.sign.flip())
    }

    fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

/// Freely reduces a letter sequence.
pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> FreeWord {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        match out.last() {
            Some(&last) if last.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    FreeWord { letters: out }
}

/// True iff `u` and `v` are the same element of the free group.
pub fn free_equal(u: &FreeWord, v: &FreeWord) -> bool {
    // both sides are stored reduced, and reduced forms are unique
    u == v
}

/// See [`FreeWord::cyclic_normal_form`].
pub fn cyclic_normal_form(w: &FreeWord, include_inversion: bool) -> FreeWord {
    w.cyclic_normal_form(include_inversion)
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn letter(l: Letter) -> Self {
        FreeWord {
            letters: alloc::vec![l],
        }
    }

    /// `generator^exponent`.
    pub fn power_of(generator: u32, exponent: i64) -> Self {
        let sign = if exponent < 0 { Sign::Neg } else { Sign::Pos };
        let len = exponent.unsigned_abs() as usize;
        FreeWord {
            letters: alloc::vec![Letter::new(generator, sign); len],
        }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        reduce(letters)
    }

    /// Builds a word from `(generator, exponent)` pairs.
    pub fn from_powers(powers: &[(u32, i64)]) -> Self {
        reduce(
            powers
                .iter()
                .flat_map(|&(g, e)| FreeWord::power_of(g, e).letters),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// Group power; negative exponents use the inverse.
    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.concat(&base);
        }
        acc
    }

    pub fn exponent_sum(&self, generator: u32) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == generator)
            .map(|l| l.sign.as_i64())
            .sum()
    }

    /// Largest generator id occurring in the word.
    pub fn max_generator(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Applies `f` to every generator id and reduces.
    pub fn map_generators<F: Fn(u32) -> u32>(&self, f: F) -> FreeWord {
        reduce(
            self.letters
                .iter()
                .map(|l| Letter::new(f(l.generator), l.sign)),
        )
    }

    /// Strips matching inverse letters from both ends. The result is
    /// conjugate to `self`.
    pub fn cyclically_reduced(&self) -> FreeWord {
        let ls = &self.letters;
        let (mut lo, mut hi) = (0usize, ls.len());
        while hi - lo >= 2 && ls[lo].cancels(ls[hi - 1]) {
            lo += 1;
            hi -= 1;
        }
        FreeWord {
            letters: ls[lo..hi].to_vec(),
        }
    }

    /// Rotation starting at letter `k`. Only meaningful for cyclically
    /// reduced words, where the result is again reduced.
    pub fn rotated(&self, k: usize) -> FreeWord {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = Vec::with_capacity(self.letters.len());
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        reduce(letters)
    }

    /// Canonical representative of the conjugacy class (and of the class of
    /// the inverse too, if `include_inversion`): the lexicographically least
    /// rotation of the cyclic reduction.
    pub fn cyclic_normal_form(&self, include_inversion: bool) -> FreeWord {
        let core = self.cyclically_reduced();
        let mut best = least_rotation(&core.letters);
        if include_inversion {
            let inv = core.inverse();
            let other = least_rotation(&inv.letters);
            if other < best {
                best = other;
            }
        }
        FreeWord { letters: best }
    }

    /// Equality up to cyclic permutation (and inversion when asked).
    pub fn cyclically_equivalent(&self, other: &FreeWord, include_inversion: bool) -> bool {
        self.cyclic_normal_form(include_inversion) == other.cyclic_normal_form(include_inversion)
    }
}

fn least_rotation(letters: &[Letter]) -> Vec<Letter> {
    let n = letters.len();
    let mut best = 0usize;
    for k in 1..n {
        let ordering = (0..n)
            .map(|i| letters[(k + i) % n].cmp(&letters[(best + i) % n]))
            .find(|o| o.is_ne());
        if ordering == Some(core::cmp::Ordering::Less) {
            best = k;
        }
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&letters[best..]);
    out.extend_from_slice(&letters[..best]);
    out
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        self.concat(rhs)
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: FreeWord) -> FreeWord {
        self.concat(&rhs)
    }
}

impl FromIterator<Letter> for FreeWord {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        reduce(iter)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = match self.max_generator() {
            Some(g) if g > 1 => crate::presentations::Alphabet::Indexed,
            _ => crate::presentations::Alphabet::AlphaGamma,
        };
        syntax::write_word(f, self, alphabet)
    }
}
