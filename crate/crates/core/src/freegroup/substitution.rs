use alloc::collections::BTreeMap;

use super::{reduce, FreeGroupError, FreeWord};

/// A homomorphism of free groups given by generator images, optionally with
/// a claimed inverse. The inverse is only trusted after
/// [`Substitution::verify_automorphism`] has checked it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Substitution {
    images: BTreeMap<u32, FreeWord>,
    inverse_witness: Option<BTreeMap<u32, FreeWord>>,
}

impl Substitution {
    pub fn new<I: IntoIterator<Item = (u32, FreeWord)>>(images: I) -> Self {
        Substitution {
            images: images.into_iter().collect(),
            inverse_witness: None,
        }
    }

    pub fn identity(generators: u32) -> Self {
        Substitution::new((0..generators).map(|g| (g, FreeWord::power_of(g, 1))))
            .with_inverse((0..generators).map(|g| (g, FreeWord::power_of(g, 1))))
    }

    pub fn with_inverse<I: IntoIterator<Item = (u32, FreeWord)>>(mut self, witness: I) -> Self {
        self.inverse_witness = Some(witness.into_iter().collect());
        self
    }

    pub fn image(&self, generator: u32) -> Option<&FreeWord> {
        self.images.get(&generator)
    }

    pub fn images(&self) -> &BTreeMap<u32, FreeWord> {
        &self.images
    }

    pub fn inverse_witness(&self) -> Option<&BTreeMap<u32, FreeWord>> {
        self.inverse_witness.as_ref()
    }

    /// The witness as a substitution of its own, with `self` as its witness.
    pub fn inverse(&self) -> Option<Substitution> {
        self.inverse_witness.as_ref().map(|w| Substitution {
            images: w.clone(),
            inverse_witness: Some(self.images.clone()),
        })
    }

    /// Homomorphic image of `w`.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord, FreeGroupError> {
        apply_map(&self.images, w)
    }

    /// True iff both compositions with the witness fix every generator.
    pub fn verify_automorphism(&self) -> Result<bool, FreeGroupError> {
        let witness = self
            .inverse_witness
            .as_ref()
            .ok_or(FreeGroupError::MissingWitness)?;
        Ok(fixes_generators(&self.images, witness) && fixes_generators(witness, &self.images))
    }
}

/// See [`Substitution::apply`].
pub fn substitute(w: &FreeWord, sigma: &Substitution) -> Result<FreeWord, FreeGroupError> {
    sigma.apply(w)
}

/// See [`Substitution::verify_automorphism`].
pub fn verify_automorphism(sigma: &Substitution) -> Result<bool, FreeGroupError> {
    sigma.verify_automorphism()
}

fn apply_map(map: &BTreeMap<u32, FreeWord>, w: &FreeWord) -> Result<FreeWord, FreeGroupError> {
    let mut out = alloc::vec::Vec::new();
    for l in w.letters() {
        let img = map
            .get(&l.generator)
            .ok_or(FreeGroupError::UndefinedGenerator(l.generator))?;
        match l.sign {
            super::Sign::Pos => out.extend_from_slice(img.letters()),
            super::Sign::Neg => out.extend(img.inverse().letters().iter().copied()),
        }
    }
    Ok(reduce(out))
}

// outer(inner(g)) == g for every g in the domain of inner
fn fixes_generators(inner: &BTreeMap<u32, FreeWord>, outer: &BTreeMap<u32, FreeWord>) -> bool {
    inner.iter().all(|(&g, img)| match apply_map(outer, img) {
        Ok(back) => back == FreeWord::power_of(g, 1),
        Err(_) => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: u32 = 0;
    const G: u32 = 1;
    const X: u32 = 0;
    const Y: u32 = 1;

    fn w(powers: &[(u32, i64)]) -> FreeWord {
        FreeWord::from_powers(powers)
    }

    fn plus_basis_change(m: i64) -> Substitution {
        Substitution::new([(X, w(&[(A, 1)])), (Y, w(&[(A, m), (G, 1)]))])
            .with_inverse([(A, w(&[(X, 1)])), (G, w(&[(X, -m), (Y, 1)]))])
    }

    #[test]
    fn basis_change_is_verified() {
        for m in 1..6 {
            assert_eq!(plus_basis_change(m).verify_automorphism(), Ok(true));
        }
    }

    #[test]
    fn collapsing_map_fails_verification() {
        let sigma = Substitution::new([(X, w(&[(A, 1)])), (Y, w(&[(A, 1)]))]);
        assert_eq!(
            sigma.verify_automorphism(),
            Err(FreeGroupError::MissingWitness)
        );
        // no candidate witness can work; try the obvious one
        let sigma = sigma.with_inverse([(A, w(&[(X, 1)])), (G, w(&[(Y, 1)]))]);
        assert_eq!(sigma.verify_automorphism(), Ok(false));
    }

    #[test]
    fn identity_substitution() {
        let id = Substitution::identity(2);
        assert_eq!(id.verify_automorphism(), Ok(true));
        let u = w(&[(A, 3), (G, -2), (A, -1)]);
        assert_eq!(id.apply(&u).unwrap(), u);
    }

    #[test]
    fn w_prime_becomes_torus_relator() {
        for p in 2..6i64 {
            for m in 1..4i64 {
                let w_prime = w(&[(A, m * p + 1)]) * w(&[(G, -1), (A, -m)]).pow(p);
                let inv = plus_basis_change(m).inverse().unwrap();
                assert_eq!(inv.apply(&w_prime).unwrap(), w(&[(X, m * p + 1), (Y, -p)]));
            }
        }
    }

    #[test]
    fn case_two_word_becomes_torus_relator() {
        let (p, m) = (3i64, 2i64);
        let sigma = Substitution::new([(X, w(&[(A, 1)])), (Y, w(&[(G, 1), (A, m)]))])
            .with_inverse([(A, w(&[(X, 1)])), (G, w(&[(Y, 1), (X, -m)]))]);
        assert_eq!(sigma.verify_automorphism(), Ok(true));
        let word = w(&[(A, m * p - 1)]) * w(&[(A, -m), (G, -1)]).pow(p);
        let image = sigma.inverse().unwrap().apply(&word).unwrap();
        assert_eq!(image, w(&[(X, m * p - 1), (Y, -p)]));
    }

    #[test]
    fn undefined_generator_is_reported() {
        let sigma = Substitution::new([(A, w(&[(A, 1)]))]);
        assert_eq!(
            sigma.apply(&w(&[(G, 1)])),
            Err(FreeGroupError::UndefinedGenerator(G))
        );
    }
}
