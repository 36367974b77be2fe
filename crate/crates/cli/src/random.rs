//! Seeded sampling of spaces and maps.
//!
//! A finitely generated space is fixed by one profile per ordered pair of
//! elements: the sequence `λ ↦ c(x_λ)(y)`, nondecreasing in `λ` and above `λ`
//! on the diagonal. Profiles are independent, so drawing a uniform index into
//! [`FgEnumerator`] is the same as drawing every profile uniformly. The sampler
//! is therefore uniform over all finitely generated operators on the carrier.

use fuzzy_closure_core::enumerate::FgEnumerator;
use fuzzy_closure_core::{Error, FuzzyClosureSpace, SpaceMap};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub struct FgSampler {
    spaces: FgEnumerator,
}

impl FgSampler {
    pub fn new(n: usize, d: u16) -> Result<Self, Error> {
        Ok(FgSampler {
            spaces: FgEnumerator::new(n, d, u128::MAX)?,
        })
    }

    pub fn sample(&self, rng: &mut impl Rng) -> FuzzyClosureSpace {
        self.spaces.nth(rng.gen_range(0..self.spaces.count()))
    }
}

pub fn random_fg_space(n: usize, d: u16, seed: u64) -> Result<FuzzyClosureSpace, Error> {
    Ok(FgSampler::new(n, d)?.sample(&mut rng(seed)))
}

/// A uniformly random ground function between the two universes.
pub fn random_map(source: FuzzyClosureSpace, target: FuzzyClosureSpace, rng: &mut impl Rng) -> Result<SpaceMap, Error> {
    let m = target.carrier().len();
    let ground = (0..source.carrier().len()).map(|_| rng.gen_range(0..m)).collect();
    SpaceMap::new(source, target, ground)
}

/// A uniformly random bijection; the universes must have equal size.
pub fn random_bijection(source: FuzzyClosureSpace, target: FuzzyClosureSpace, rng: &mut impl Rng) -> Result<SpaceMap, Error> {
    let mut ground: Vec<usize> = (0..target.carrier().len()).collect();
    ground.shuffle(rng);
    SpaceMap::new(source, target, ground)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::serialize_space;

    #[test]
    fn same_seed_same_space() {
        let a = random_fg_space(3, 4, 7).unwrap();
        let b = random_fg_space(3, 4, 7).unwrap();
        assert_eq!(serialize_space(&a), serialize_space(&b));
    }

    #[test]
    fn samples_validate() {
        let sampler = FgSampler::new(3, 4).unwrap();
        let mut r = rng(1);
        for _ in 0..50 {
            let s = sampler.sample(&mut r);
            let checked = FuzzyClosureSpace::unvalidated(s.carrier().clone(), s.operator().clone()).unwrap();
            assert!(checked.validate().unwrap().passed());
        }
    }
}
