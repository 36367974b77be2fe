//! Ground maps between closure spaces: fuzzy images and preimages,
//! continuity in its global, pointwise and preimage forms, and homeomorphisms.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::closure::FuzzyClosureSpace;
use crate::error::Error;
use crate::grades;
use crate::lattice::{FuzzyPoint, FuzzySet};
use crate::verdict::{Property, Verdict, Witness};

#[derive(Debug, Clone)]
pub struct SpaceMap {
    source: FuzzyClosureSpace,
    target: FuzzyClosureSpace,
    ground: Vec<usize>,
}

impl SpaceMap {
    /// `ground[x]` is the index of `θ(x)` in the target universe.
    pub fn new(
        source: FuzzyClosureSpace,
        target: FuzzyClosureSpace,
        ground: Vec<usize>,
    ) -> Result<Self, Error> {
        if source.carrier().chain() != target.carrier().chain() {
            return Err(Error::CarrierMismatch);
        }
        if ground.len() != source.carrier().len() {
            return Err(Error::Construction(format!(
                "ground map covers {} of {} elements",
                ground.len(),
                source.carrier().len()
            )));
        }
        if let Some(bad) = ground.iter().find(|y| **y >= target.carrier().len()) {
            return Err(Error::Construction(format!("target index {bad} out of range")));
        }
        Ok(SpaceMap {
            source,
            target,
            ground,
        })
    }

    /// Ground map given by element names; every source element must appear.
    pub fn from_names(
        source: FuzzyClosureSpace,
        target: FuzzyClosureSpace,
        pairs: &[(&str, &str)],
    ) -> Result<Self, Error> {
        let mut ground = vec![usize::MAX; source.carrier().len()];
        for (from, to) in pairs {
            let x = source.carrier().universe().require(from)?;
            ground[x] = target.carrier().universe().require(to)?;
        }
        if let Some(x) = ground.iter().position(|y| *y == usize::MAX) {
            return Err(Error::Construction(format!(
                "no image for {}",
                source.carrier().universe().name(x)
            )));
        }
        SpaceMap::new(source, target, ground)
    }

    pub fn identity(space: FuzzyClosureSpace) -> Self {
        let ground = (0..space.carrier().len()).collect();
        SpaceMap {
            source: space.clone(),
            target: space,
            ground,
        }
    }

    pub fn source(&self) -> &FuzzyClosureSpace {
        &self.source
    }

    pub fn target(&self) -> &FuzzyClosureSpace {
        &self.target
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    /// `θ(g)(y) = max{g(x) : θ(x) = y}`, zero off the range.
    pub fn image(&self, g: &FuzzySet) -> FuzzySet {
        assert!(g.carrier() == self.source.carrier(), "set {g} is not on the source");
        self.target
            .carrier()
            .set(self.image_grades(g.grades()))
            .expect("image stays on the chain")
    }

    fn image_grades(&self, g: &[u16]) -> Vec<u16> {
        let mut out = vec![0; self.target.carrier().len()];
        for (x, y) in self.ground.iter().enumerate() {
            out[*y] = out[*y].max(g[x]);
        }
        out
    }

    /// `θ⁻¹(h)(x) = h(θ(x))`.
    pub fn preimage(&self, h: &FuzzySet) -> FuzzySet {
        assert!(h.carrier() == self.target.carrier(), "set {h} is not on the target");
        self.source
            .carrier()
            .set(self.preimage_grades(h.grades()))
            .expect("preimage stays on the chain")
    }

    fn preimage_grades(&self, h: &[u16]) -> Vec<u16> {
        self.ground.iter().map(|y| h[*y]).collect()
    }

    pub fn image_point(&self, p: FuzzyPoint) -> FuzzyPoint {
        FuzzyPoint {
            support: self.ground[p.support],
            level: p.level,
        }
    }

    fn require_validated(&self) -> Result<(), Error> {
        self.source.require_validated()?;
        self.target.require_validated()
    }

    /// `θ(c(f)) ≤ d(θ(f))` for every `f`; the witness is the smallest failing `f`.
    pub fn is_cf_continuous(&self) -> Result<Verdict, Error> {
        self.require_validated()?;
        let witness = self.source.carrier().enumerate_sets(self.source.budget())?.find(|f| {
            let lhs = self.image_grades(&self.source.closure_grades(f.grades()));
            let rhs = self.target.closure_grades(&self.image_grades(f.grades()));
            !grades::leq(&lhs, &rhs)
        });
        Ok(Verdict::from_witness(Property::Continuous, witness.map(Witness::Set)))
    }

    /// For every `f` with `p ≤ c(f)`: `θ(p) ≤ d(θ(f))`.
    pub fn is_cf_continuous_at(&self, p: FuzzyPoint) -> Result<Verdict, Error> {
        self.require_validated()?;
        let image = self.image_point(p);
        let witness = self.source.carrier().enumerate_sets(self.source.budget())?.find(|f| {
            let c = self.source.closure_grades(f.grades());
            p.level.0 <= c[p.support]
                && image.level.0 > self.target.closure_grades(&self.image_grades(f.grades()))[image.support]
        });
        Ok(Verdict::from_witness(
            Property::ContinuousAt,
            witness.map(|f| Witness::PointAt(p, f)),
        ))
    }

    /// Pointwise continuity at every fuzzy point of the source.
    pub fn is_continuous_at_every_point(&self) -> Result<Verdict, Error> {
        for p in self.source.carrier().points() {
            let v = self.is_cf_continuous_at(p)?;
            if !v.holds {
                return Ok(v);
            }
        }
        Ok(Verdict::holds(Property::ContinuousAt))
    }

    /// `c(θ⁻¹(g)) ≤ θ⁻¹(d(g))` for every `g` on the target.
    pub fn continuity_via_preimage(&self) -> Result<Verdict, Error> {
        self.require_validated()?;
        let witness = self.target.carrier().enumerate_sets(self.target.budget())?.find(|g| {
            let lhs = self.source.closure_grades(&self.preimage_grades(g.grades()));
            let rhs = self.preimage_grades(&self.target.closure_grades(g.grades()));
            !grades::leq(&lhs, &rhs)
        });
        Ok(Verdict::from_witness(
            Property::ContinuousByPreimage,
            witness.map(Witness::Set),
        ))
    }

    /// Preimages of open sets are open and preimages of closed sets are closed.
    pub fn preimage_preserves_open(&self) -> Result<bool, Error> {
        self.require_validated()?;
        for g in self.target.carrier().enumerate_sets(self.target.budget())? {
            if self.target.is_open(&g) && !self.source.is_open(&self.preimage(&g)) {
                return Ok(false);
            }
            if self.target.is_closed(&g) && !self.source.is_closed(&self.preimage(&g)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_bijective(&self) -> bool {
        let n = self.target.carrier().len();
        if self.ground.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        self.ground.iter().all(|y| !core::mem::replace(&mut seen[*y], true))
    }

    pub fn inverse(&self) -> Option<SpaceMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut ground = vec![0; self.ground.len()];
        for (x, y) in self.ground.iter().enumerate() {
            ground[*y] = x;
        }
        Some(SpaceMap {
            source: self.target.clone(),
            target: self.source.clone(),
            ground,
        })
    }

    /// Bijective with `θ(c(f)) = d(θ(f))` for every `f`.
    pub fn is_cf_homeomorphism(&self) -> Result<Verdict, Error> {
        self.require_validated()?;
        if !self.is_bijective() {
            return Ok(Verdict::fails(Property::Homeomorphism, Witness::NotBijective));
        }
        let witness = self.source.carrier().enumerate_sets(self.source.budget())?.find(|f| {
            self.image_grades(&self.source.closure_grades(f.grades()))
                != self.target.closure_grades(&self.image_grades(f.grades()))
        });
        Ok(Verdict::from_witness(Property::Homeomorphism, witness.map(Witness::Set)))
    }

    /// Bijective, continuous, with a continuous inverse.
    pub fn is_homeomorphism_by_inverse(&self) -> Result<bool, Error> {
        match self.inverse() {
            None => Ok(false),
            Some(inv) => Ok(self.is_cf_continuous()?.holds && inv.is_cf_continuous()?.holds),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SpaceMap) -> Result<SpaceMap, Error> {
        if self.target.carrier() != other.source.carrier() {
            return Err(Error::CarrierMismatch);
        }
        let ground = self.ground.iter().map(|y| other.ground[*y]).collect();
        SpaceMap::new(self.source.clone(), other.target.clone(), ground)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::lattice::Carrier;

    #[test]
    fn image_and_preimage_basics() {
        let s = corpus::shift_path(3, 2).unwrap();
        let id = SpaceMap::identity(s.clone());
        let c = s.carrier().clone();
        for f in c.enumerate_sets(1000).unwrap() {
            assert_eq!(id.image(&f), f);
            assert_eq!(id.preimage(&f), f);
        }
        let y = FuzzyClosureSpace::discrete(Carrier::from_names(["y"], 2).unwrap());
        let constant = SpaceMap::new(s.clone(), y.clone(), vec![0, 0, 0]).unwrap();
        let f = c.set_of(&[("0", 1), ("2", 2)]).unwrap();
        assert_eq!(constant.image(&f).grades(), &[2]);
        assert!(constant.preimage(&y.carrier().one()).is_one());
    }

    #[test]
    fn rotation_of_the_four_cycle_is_a_homeomorphism() {
        let (space, rotation) = corpus::cycle4_rotation(1).unwrap();
        let c = space.carrier().clone();
        let one_q = c.crisp(&["q"]).unwrap();
        assert_eq!(rotation.image(&one_q), c.crisp(&["r"]).unwrap());
        assert_eq!(space.closure(&one_q), c.crisp(&["q", "r"]).unwrap());
        assert_eq!(rotation.image(&space.closure(&one_q)), c.crisp(&["r", "s"]).unwrap());
        assert_eq!(space.closure(&rotation.image(&one_q)), c.crisp(&["r", "s"]).unwrap());
        assert!(rotation.is_cf_continuous().unwrap().holds);
        assert!(rotation.is_cf_homeomorphism().unwrap().holds);
        assert!(rotation.preimage_preserves_open().unwrap());
    }

    #[test]
    fn transposition_preserves_opens_but_is_not_continuous() {
        let (space, _) = corpus::cycle4_rotation(1).unwrap();
        let swap = SpaceMap::from_names(
            space.clone(),
            space.clone(),
            &[("p", "q"), ("q", "p"), ("r", "r"), ("s", "s")],
        )
        .unwrap();
        let v = swap.is_cf_continuous().unwrap();
        assert!(!v.holds);
        let Some(Witness::Set(f)) = &v.witness else { panic!() };
        assert!(!grades::leq(
            swap.image(&space.closure(f)).grades(),
            space.closure(&swap.image(f)).grades()
        ));
        assert!(swap.preimage_preserves_open().unwrap());
        assert!(!swap.continuity_via_preimage().unwrap().holds);
        assert!(!swap.is_continuous_at_every_point().unwrap().holds);
        assert!(!swap.is_cf_homeomorphism().unwrap().holds);
    }

    #[test]
    fn maps_into_indiscrete_are_continuous() {
        let s = corpus::shift_cycle(3, 2).unwrap();
        let t = FuzzyClosureSpace::indiscrete(Carrier::from_names(["a", "b"], 2).unwrap());
        let m = SpaceMap::new(s, t, vec![0, 1, 1]).unwrap();
        assert!(m.is_cf_continuous().unwrap().holds);
        assert!(m.continuity_via_preimage().unwrap().holds);
    }

    #[test]
    fn relabeled_cycle3_is_homeomorphic() {
        let s = corpus::cycle3(2).unwrap();
        let copy = corpus::relabel(&s, &["a", "b", "c"]).unwrap();
        let m = SpaceMap::from_names(s, copy, &[("x", "a"), ("y", "b"), ("z", "c")]).unwrap();
        assert!(m.is_cf_homeomorphism().unwrap().holds);
        assert!(m.is_homeomorphism_by_inverse().unwrap());
    }

    #[test]
    fn image_of_preimage_is_below() {
        let c = Carrier::from_names(["a", "b", "c"], 2).unwrap();
        let s = FuzzyClosureSpace::discrete(c.clone());
        for ground in [[0, 0, 1], [2, 2, 2], [1, 0, 2]] {
            let m = SpaceMap::new(s.clone(), s.clone(), ground.to_vec()).unwrap();
            for h in c.enumerate_sets(1000).unwrap() {
                assert!(m.image(&m.preimage(&h)).leq(&h).unwrap());
            }
        }
    }

    #[test]
    fn composition_of_continuous_maps() {
        let s = corpus::shift_cycle(3, 1).unwrap();
        let rot = SpaceMap::new(s.clone(), s.clone(), vec![1, 2, 0]).unwrap();
        assert!(rot.is_cf_continuous().unwrap().holds);
        let twice = rot.then(&rot).unwrap();
        assert_eq!(twice.ground(), &[2, 0, 1]);
        assert!(twice.is_cf_continuous().unwrap().holds);
    }

    #[test]
    fn unvalidated_spaces_are_refused() {
        let c = Carrier::from_names(["a"], 1).unwrap();
        let raw = FuzzyClosureSpace::tabulated(c.clone(), 10, |f| f.clone()).unwrap();
        let m = SpaceMap::identity(raw);
        assert_eq!(m.is_cf_continuous(), Err(Error::NotValidated));
    }
}
