//! Exhaustive enumeration of finitely generated closure spaces.
//!
//! A space is fixed by one level profile per ordered pair of elements `(x, y)`:
//! the sequence `c(x_λ)(y)` for `λ = 1/D, ..., 1`. The axioms require each
//! profile to be nondecreasing, and the diagonal profile to satisfy
//! `c(x_λ)(x) ≥ λ`. Profiles are independent, so the spaces form a product
//! indexed in mixed radix with the pair `(0, 0)` most significant.

use alloc::vec;
use alloc::vec::Vec;

use crate::chain::Chain;
use crate::closure::{FuzzyClosureSpace, PointClosures};
use crate::error::Error;
use crate::lattice::{Carrier, Universe};

/// All nondecreasing sequences of length `d` over `0..=d`, in lexicographic order.
pub fn monotone_profiles(d: u16) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(d as usize);
    fn extend(d: u16, floor: u16, current: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if current.len() == d as usize {
            out.push(current.clone());
            return;
        }
        for v in floor..=d {
            current.push(v);
            extend(d, v, current, out);
            current.pop();
        }
    }
    extend(d, 0, &mut current, &mut out);
    out
}

/// Profiles allowed on the diagonal: `v_λ ≥ λ`.
pub fn diagonal_profiles(d: u16) -> Vec<Vec<u16>> {
    monotone_profiles(d)
        .into_iter()
        .filter(|p| p.iter().enumerate().all(|(i, v)| *v as usize > i))
        .collect()
}

#[derive(Debug, Clone)]
pub struct FgEnumerator {
    carrier: Carrier,
    off: Vec<Vec<u16>>,
    diag: Vec<Vec<u16>>,
    count: u128,
}

impl FgEnumerator {
    /// Fails when the number of spaces exceeds `limit`.
    pub fn new(n: usize, d: u16, limit: u128) -> Result<Self, Error> {
        let carrier = Carrier::new(Universe::numbered(n)?, Chain::new(d)?);
        let off = monotone_profiles(d);
        let diag = diagonal_profiles(d);
        let mut count: u128 = 1;
        for x in 0..n {
            for y in 0..n {
                let k = if x == y { diag.len() } else { off.len() } as u128;
                count = count.saturating_mul(k);
            }
        }
        if count > limit {
            return Err(Error::Budget {
                required: count,
                limit: usize::try_from(limit).unwrap_or(usize::MAX),
            });
        }
        Ok(FgEnumerator {
            carrier,
            off,
            diag,
            count,
        })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn count(&self) -> u128 {
        self.count
    }

    /// The profile indices of space `index`, one per pair `(x, y)`.
    pub fn profile_indices(&self, mut index: u128) -> Vec<usize> {
        let n = self.carrier.len();
        let mut out = vec![0; n * n];
        for slot in (0..n * n).rev() {
            let radix = if slot / n == slot % n {
                self.diag.len()
            } else {
                self.off.len()
            } as u128;
            out[slot] = (index % radix) as usize;
            index /= radix;
        }
        out
    }

    pub fn point_closures(&self, index: u128) -> PointClosures {
        let n = self.carrier.len();
        let d = self.carrier.denominator() as usize;
        let picks = self.profile_indices(index);
        let mut entries = vec![vec![0; n]; n * d];
        for x in 0..n {
            for y in 0..n {
                let pick = picks[x * n + y];
                let profile = if x == y { &self.diag[pick] } else { &self.off[pick] };
                for (l, v) in profile.iter().enumerate() {
                    entries[x * d + l][y] = *v;
                }
            }
        }
        PointClosures::new(&self.carrier, entries).expect("profiles fit the carrier")
    }

    /// Space number `index` in enumeration order.
    pub fn nth(&self, index: u128) -> FuzzyClosureSpace {
        assert!(index < self.count, "space index out of range");
        FuzzyClosureSpace::trusted(self.carrier.clone(), self.point_closures(index))
    }

    pub fn iter(&self) -> impl Iterator<Item = FuzzyClosureSpace> + '_ {
        (0..self.count).map(move |i| self.nth(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_counts() {
        assert_eq!(monotone_profiles(1).len(), 2);
        assert_eq!(monotone_profiles(2).len(), 6);
        assert_eq!(diagonal_profiles(2), [vec![1, 2], vec![2, 2]]);
        assert_eq!(monotone_profiles(4).len(), 70);
    }

    #[test]
    fn space_counts() {
        for ((n, d), expected) in [((1, 1), 1), ((1, 2), 2), ((2, 1), 4), ((2, 2), 144), ((3, 2), 373_248)] {
            assert_eq!(FgEnumerator::new(n, d, u128::MAX).unwrap().count(), expected);
        }
        assert!(matches!(FgEnumerator::new(3, 2, 1000), Err(Error::Budget { .. })));
    }

    #[test]
    fn spaces_are_valid_and_distinct() {
        let e = FgEnumerator::new(2, 2, 1000).unwrap();
        let mut seen = Vec::new();
        for s in e.iter() {
            assert!(s.validate().unwrap().passed());
            let pc = s.point_closures();
            assert!(!seen.contains(&pc));
            seen.push(pc);
        }
    }
}
