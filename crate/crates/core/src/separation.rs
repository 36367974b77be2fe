//! Deciders for the Čech fuzzy separation axioms.
//!
//! Every decider quantifies over fuzzy points at the chain levels and over
//! the whole carrier. The existential searches are reduced using
//! monotonicity of closure and interior; the literal pair searches live in
//! [`naive`] and serve as oracles.

use alloc::vec::Vec;

use crate::closure::FuzzyClosureSpace;
use crate::error::Error;
use crate::grades;
use crate::lattice::{Carrier, FuzzyPoint, FuzzySet};
use crate::verdict::{Property, Verdict, Witness};

fn has(p: FuzzyPoint, h: &[u16]) -> bool {
    p.level.0 <= h[p.support]
}

/// `p ≤ Co(h)`.
fn has_co(p: FuzzyPoint, h: &[u16], top: u16) -> bool {
    p.level.0 + h[p.support] <= top
}

/// Closure and interior of every set of a space, precomputed.
pub struct Analyzer<'a> {
    space: &'a FuzzyClosureSpace,
    top: u16,
    sets: Vec<Vec<u16>>,
    closures: Vec<Vec<u16>>,
    interiors: Vec<Vec<u16>>,
    points: Vec<FuzzyPoint>,
}

impl<'a> Analyzer<'a> {
    pub fn new(space: &'a FuzzyClosureSpace) -> Result<Self, Error> {
        space.require_validated()?;
        let carrier = space.carrier();
        let top = carrier.denominator();
        let sets: Vec<Vec<u16>> = carrier
            .enumerate_sets(space.budget())?
            .map(|f| f.grades().to_vec())
            .collect();
        let closures: Vec<Vec<u16>> = sets.iter().map(|g| space.closure_grades(g)).collect();
        let radix = carrier.radix();
        let interiors = sets
            .iter()
            .map(|g| {
                let co = grades::complement(g, top);
                grades::complement(&closures[grades::encode(&co, radix)], top)
            })
            .collect();
        Ok(Analyzer {
            space,
            top,
            sets,
            closures,
            interiors,
            points: carrier.points().collect(),
        })
    }

    pub fn space(&self) -> &FuzzyClosureSpace {
        self.space
    }

    fn carrier(&self) -> &Carrier {
        self.space.carrier()
    }

    fn set(&self, code: usize) -> FuzzySet {
        self.carrier().decode(code)
    }

    fn code_of(&self, g: &[u16]) -> usize {
        grades::encode(g, self.carrier().radix())
    }

    fn point_code(&self, p: FuzzyPoint) -> usize {
        self.carrier().encode(&self.carrier().point_set(p))
    }

    fn point_closure(&self, p: FuzzyPoint) -> &[u16] {
        &self.closures[self.point_code(p)]
    }

    /// `int(Co(g)) = Co(c(g))`, by code.
    fn co_closure(&self, code: usize) -> Vec<u16> {
        grades::complement(&self.closures[code], self.top)
    }

    fn distinct_pairs(&self) -> impl Iterator<Item = (FuzzyPoint, FuzzyPoint)> + '_ {
        self.points.iter().flat_map(move |p| {
            self.points
                .iter()
                .filter(move |q| p.is_distinct_from(q))
                .map(move |q| (*p, *q))
        })
    }

    fn first_pair(&self, mut ok: impl FnMut(FuzzyPoint, FuzzyPoint) -> bool) -> Option<Witness> {
        self.distinct_pairs()
            .find(|(p, q)| !ok(*p, *q))
            .map(|(p, q)| Witness::Points(p, q))
    }

    /// Codes of the minimal sets `f` with `p ≤ int(f)`.
    fn minimal_neighborhoods(&self, p: FuzzyPoint) -> Vec<usize> {
        let nbhd: Vec<usize> = (0..self.sets.len())
            .filter(|c| has(p, &self.interiors[*c]))
            .collect();
        nbhd.iter()
            .copied()
            .filter(|f| {
                !nbhd
                    .iter()
                    .any(|g| g != f && grades::leq(&self.sets[*g], &self.sets[*f]))
            })
            .collect()
    }

    /// `x_λ ∈ Co(c(y_γ))` or `y_γ ∈ Co(c(x_λ))` for distinct points.
    pub fn cft0(&self) -> Verdict {
        let w = self.first_pair(|p, q| {
            has_co(p, self.point_closure(q), self.top) || has_co(q, self.point_closure(p), self.top)
        });
        Verdict::from_witness(Property::Cft0, w)
    }

    /// Some `f` with `x_λ ≤ int(f)`, `y_γ ≤ Co(f)`, or the same with the
    /// points exchanged.
    pub fn cft0_interior(&self) -> Verdict {
        let separates = |p: FuzzyPoint, q: FuzzyPoint| {
            (0..self.sets.len())
                .any(|f| has(p, &self.interiors[f]) && has_co(q, &self.sets[f], self.top))
        };
        let w = self.first_pair(|p, q| separates(p, q) || separates(q, p));
        Verdict::from_witness(Property::Cft0Interior, w)
    }

    fn cft1_pairwise(&self) -> Option<Witness> {
        self.first_pair(|p, q| {
            has_co(p, self.point_closure(q), self.top) && has_co(q, self.point_closure(p), self.top)
        })
    }

    /// Every fuzzy singleton `x_1` is closed.
    pub fn singletons_closed(&self) -> bool {
        let top = self.carrier().chain().top();
        (0..self.carrier().len()).all(|x| {
            let s = FuzzyPoint { support: x, level: top };
            self.point_closure(s) == self.carrier().point_set(s).grades()
        })
    }

    /// Every fuzzy point is well closed.
    pub fn points_well_closed(&self) -> bool {
        self.points
            .iter()
            .all(|p| self.point_closure(*p).iter().filter(|g| **g > 0).count() == 1)
    }

    /// Decided by closedness of singletons, cross-checked against the
    /// pairwise definition, which also supplies the witness.
    pub fn cft1(&self) -> Result<Verdict, Error> {
        let pairwise = self.cft1_pairwise();
        if pairwise.is_none() != self.singletons_closed() {
            return Err(Error::Inconsistent(
                "singleton characterization disagrees with the pairwise definition".into(),
            ));
        }
        Ok(Verdict::from_witness(Property::Cft1, pairwise))
    }

    pub fn cfts(&self) -> Verdict {
        let w = self
            .points
            .iter()
            .find(|p| self.point_closure(**p) != self.carrier().point_set(**p).grades())
            .map(|p| Witness::Point(*p));
        Verdict::from_witness(Property::Cfts, w)
    }

    /// Neighborhoods `f ∋ p`, `g ∋ q` with `f ≤ Co(g)`, `f ≤ Co(q)`,
    /// `g ≤ Co(p)`. Taking `f = Co(g)` loses nothing: it is the largest `f`
    /// allowed by the first two conjuncts once `q ≤ g`, and int is monotone.
    pub fn cft2_certificate(&self, p: FuzzyPoint, q: FuzzyPoint) -> Option<(FuzzySet, FuzzySet)> {
        (0..self.sets.len())
            .find(|g| {
                has_co(p, &self.sets[*g], self.top)
                    && has(q, &self.interiors[*g])
                    && has(p, &self.co_closure(*g))
            })
            .map(|g| (self.set(g).complement(), self.set(g)))
    }

    pub fn cft2(&self) -> Verdict {
        let w = self.first_pair(|p, q| self.cft2_certificate(p, q).is_some());
        Verdict::from_witness(Property::Cft2, w)
    }

    /// Searches minimal neighborhoods only: shrinking `f` or `g` keeps every
    /// conjunct true.
    pub fn urysohn_certificate(&self, p: FuzzyPoint, q: FuzzyPoint) -> Option<(FuzzySet, FuzzySet)> {
        let fs: Vec<usize> = self
            .minimal_neighborhoods(p)
            .into_iter()
            .filter(|f| has_co(q, &self.sets[*f], self.top))
            .collect();
        let gs: Vec<usize> = self
            .minimal_neighborhoods(q)
            .into_iter()
            .filter(|g| has_co(p, &self.sets[*g], self.top))
            .collect();
        for f in &fs {
            for g in &gs {
                if grades::leq_complement(&self.closures[*f], &self.closures[*g], self.top) {
                    return Some((self.set(*f), self.set(*g)));
                }
            }
        }
        None
    }

    pub fn urysohn(&self) -> Verdict {
        let w = self.first_pair(|p, q| self.urysohn_certificate(p, q).is_some());
        Verdict::from_witness(Property::Urysohn, w)
    }

    /// A neighborhood `g` of `k` whose complement is a neighborhood of `p`.
    pub fn regular_certificate(&self, p: FuzzyPoint, k: &FuzzySet) -> Option<(FuzzySet, FuzzySet)> {
        (0..self.sets.len())
            .find(|g| grades::leq(k.grades(), &self.interiors[*g]) && has(p, &self.co_closure(*g)))
            .map(|g| (self.set(g).complement(), self.set(g)))
    }

    /// Whether `p` and a non-empty `k` with `p ∈ Co(c(k))` can be separated.
    pub fn regular_pair_separated(&self, p: FuzzyPoint, k: &FuzzySet) -> bool {
        self.regular_certificate(p, k).is_some()
    }

    pub fn regular(&self) -> Verdict {
        // for each k, the best value of int(Co(g)) at each element over all
        // neighborhoods g of k
        let n = self.carrier().len();
        let best: Vec<Vec<u16>> = (0..self.sets.len())
            .map(|k| {
                let mut m = alloc::vec![0u16; n];
                for g in 0..self.sets.len() {
                    if grades::leq(&self.sets[k], &self.interiors[g]) {
                        grades::join_into(&mut m, &self.co_closure(g));
                    }
                }
                m
            })
            .collect();
        for p in &self.points {
            for k in 1..self.sets.len() {
                if has_co(*p, &self.closures[k], self.top) && !has(*p, &best[k]) {
                    return Verdict::fails(Property::Regular, Witness::PointSet(*p, self.set(k)));
                }
            }
        }
        Verdict::holds(Property::Regular)
    }

    /// For every point `p` the closures `c(f)` of its minimal neighborhoods.
    fn minimal_neighborhood_closures(&self) -> Vec<Vec<usize>> {
        self.points
            .iter()
            .map(|p| self.minimal_neighborhoods(*p))
            .collect()
    }

    /// `f` with `p ≤ int(f) ≤ c(f) ≤ int(k)`.
    pub fn mashhour_certificate(&self, p: FuzzyPoint, k: &FuzzySet) -> Option<FuzzySet> {
        let int_k = &self.interiors[self.code_of(k.grades())];
        self.minimal_neighborhoods(p)
            .into_iter()
            .find(|f| grades::leq(&self.closures[*f], int_k))
            .map(|f| self.set(f))
    }

    pub fn mashhour_regular(&self) -> Verdict {
        let minimal = self.minimal_neighborhood_closures();
        for (i, p) in self.points.iter().enumerate() {
            for k in 0..self.sets.len() {
                let int_k = &self.interiors[k];
                if has(*p, int_k) && !minimal[i].iter().any(|f| grades::leq(&self.closures[*f], int_k)) {
                    return Verdict::fails(Property::MashhourRegular, Witness::PointSet(*p, self.set(k)));
                }
            }
        }
        Verdict::holds(Property::MashhourRegular)
    }

    /// Neighborhoods `f1` of `k1` and `f2` of `k2` with `f1 ≤ Co(f2)`, taking
    /// `f1 = Co(f2)`.
    pub fn normal_certificate(&self, k1: &FuzzySet, k2: &FuzzySet) -> Option<(FuzzySet, FuzzySet)> {
        (0..self.sets.len())
            .find(|g| {
                grades::leq(k2.grades(), &self.interiors[*g])
                    && grades::leq(k1.grades(), &self.co_closure(*g))
            })
            .map(|g| (self.set(g).complement(), self.set(g)))
    }

    pub fn normal(&self) -> Verdict {
        let count = self.sets.len();
        for k2 in 1..count {
            // maximal values of int(Co(g)) over neighborhoods g of k2
            let mut candidates: Vec<Vec<u16>> = Vec::new();
            for g in 0..count {
                if grades::leq(&self.sets[k2], &self.interiors[g]) {
                    let b = self.co_closure(g);
                    if !candidates.iter().any(|c| grades::leq(&b, c)) {
                        candidates.retain(|c| !grades::leq(c, &b));
                        candidates.push(b);
                    }
                }
            }
            for k1 in 1..count {
                if grades::leq_complement(&self.closures[k1], &self.closures[k2], self.top)
                    && !candidates.iter().any(|b| grades::leq(&self.sets[k1], b))
                {
                    return Verdict::fails(
                        Property::Normal,
                        Witness::Sets(self.set(k1), self.set(k2)),
                    );
                }
            }
        }
        Verdict::holds(Property::Normal)
    }

    fn conjunction(property: Property, base: Verdict, ts: &Verdict) -> Verdict {
        if !base.holds {
            Verdict::fails(property, Witness::Component(base.property))
        } else if !ts.holds {
            Verdict::fails(property, Witness::Component(Property::Cfts))
        } else {
            Verdict::holds(property)
        }
    }

    pub fn cft3(&self) -> Verdict {
        Self::conjunction(Property::Cft3, self.regular(), &self.cfts())
    }

    pub fn cft4(&self) -> Verdict {
        Self::conjunction(Property::Cft4, self.normal(), &self.cfts())
    }

    pub fn decide(&self, property: Property) -> Result<Verdict, Error> {
        Ok(match property {
            Property::Cft0 => self.cft0(),
            Property::Cft0Interior => self.cft0_interior(),
            Property::Cft1 => self.cft1()?,
            Property::Cfts => self.cfts(),
            Property::Cft2 => self.cft2(),
            Property::Urysohn => self.urysohn(),
            Property::Regular => self.regular(),
            Property::MashhourRegular => self.mashhour_regular(),
            Property::Normal => self.normal(),
            Property::Cft3 => self.cft3(),
            Property::Cft4 => self.cft4(),
            other => {
                return Err(Error::Construction(alloc::format!(
                    "{} is not a separation axiom of a closure space",
                    other.id()
                )))
            }
        })
    }

    pub fn classify(&self) -> Result<SeparationReport, Error> {
        let ts = self.cfts();
        let regular = self.regular();
        let normal = self.normal();
        let report = SeparationReport {
            cft0: self.cft0(),
            cft1: self.cft1()?,
            cft2: self.cft2(),
            urysohn: self.urysohn(),
            mashhour_regular: self.mashhour_regular(),
            cft3: Self::conjunction(Property::Cft3, regular.clone(), &ts),
            cft4: Self::conjunction(Property::Cft4, normal.clone(), &ts),
            cfts: ts,
            regular,
            normal,
        };
        report.check_consistency()?;
        Ok(report)
    }
}

macro_rules! decider {
    ($($(#[$doc:meta])* $name:ident),*) => {
        $(
            $(#[$doc])*
            pub fn $name(s: &FuzzyClosureSpace) -> Result<Verdict, Error> {
                Ok(Analyzer::new(s)?.$name())
            }
        )*
    };
}

decider!(
    cft0,
    cft0_interior,
    cfts,
    cft2,
    cft3,
    cft4
);

pub fn cft1(s: &FuzzyClosureSpace) -> Result<Verdict, Error> {
    Analyzer::new(s)?.cft1()
}

pub fn cf_urysohn(s: &FuzzyClosureSpace) -> Result<Verdict, Error> {
    Ok(Analyzer::new(s)?.urysohn())
}

pub fn cf_regular(s: &FuzzyClosureSpace) -> Result<Verdict, Error> {
    Ok(Analyzer::new(s)?.regular())
}

pub fn cf_regular_mashhour(s: &FuzzyClosureSpace) -> Result<Verdict, Error> {
    Ok(Analyzer::new(s)?.mashhour_regular())
}

pub fn cf_normal(s: &FuzzyClosureSpace) -> Result<Verdict, Error> {
    Ok(Analyzer::new(s)?.normal())
}

pub fn classify(s: &FuzzyClosureSpace) -> Result<SeparationReport, Error> {
    Analyzer::new(s)?.classify()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub cft0: Verdict,
    pub cft1: Verdict,
    pub cfts: Verdict,
    pub cft2: Verdict,
    pub urysohn: Verdict,
    pub regular: Verdict,
    pub mashhour_regular: Verdict,
    pub normal: Verdict,
    pub cft3: Verdict,
    pub cft4: Verdict,
}

impl SeparationReport {
    pub fn verdicts(&self) -> [&Verdict; 10] {
        [
            &self.cft0,
            &self.cft1,
            &self.cfts,
            &self.cft2,
            &self.urysohn,
            &self.regular,
            &self.mashhour_regular,
            &self.normal,
            &self.cft3,
            &self.cft4,
        ]
    }

    pub fn get(&self, property: Property) -> Option<&Verdict> {
        self.verdicts().into_iter().find(|v| v.property == property)
    }

    pub fn holds(&self, property: Property) -> bool {
        self.get(property).is_some_and(|v| v.holds)
    }

    /// The proven implications between the axioms, as `(premise, conclusion)`.
    pub const IMPLICATIONS: [(Property, Property); 7] = [
        (Property::Cfts, Property::Cft1),
        (Property::Cft2, Property::Cft1),
        (Property::Cft1, Property::Cft0),
        (Property::Urysohn, Property::Cft2),
        (Property::Cft3, Property::Cft2),
        (Property::Cft4, Property::Cft3),
        (Property::MashhourRegular, Property::Regular),
    ];

    pub fn check_consistency(&self) -> Result<(), Error> {
        for (premise, conclusion) in Self::IMPLICATIONS {
            if self.holds(premise) && !self.holds(conclusion) {
                return Err(Error::Inconsistent(alloc::format!(
                    "{} holds but {} fails",
                    premise.id(),
                    conclusion.id()
                )));
            }
        }
        Ok(())
    }
}

/// Literal searches over pairs of fuzzy sets, one per existential axiom.
pub mod naive {
    use super::*;

    struct Tables {
        top: u16,
        sets: Vec<Vec<u16>>,
        closures: Vec<Vec<u16>>,
        interiors: Vec<Vec<u16>>,
    }

    fn tables(s: &FuzzyClosureSpace) -> Result<Tables, Error> {
        s.require_validated()?;
        let carrier = s.carrier();
        let top = carrier.denominator();
        let sets: Vec<Vec<u16>> = carrier
            .enumerate_sets(s.budget())?
            .map(|f| f.grades().to_vec())
            .collect();
        let closures = sets.iter().map(|g| s.closure_grades(g)).collect();
        let interiors = sets.iter().map(|g| s.interior_grades(g)).collect();
        Ok(Tables {
            top,
            sets,
            closures,
            interiors,
        })
    }

    fn pairs_fail(
        s: &FuzzyClosureSpace,
        property: Property,
        ok: impl Fn(&Tables, FuzzyPoint, FuzzyPoint, usize, usize) -> bool,
    ) -> Result<Verdict, Error> {
        let t = tables(s)?;
        let count = t.sets.len();
        for p in s.carrier().points() {
            for q in s.carrier().points() {
                if p.is_distinct_from(&q)
                    && !(0..count).any(|f| (0..count).any(|g| ok(&t, p, q, f, g)))
                {
                    return Ok(Verdict::fails(property, Witness::Points(p, q)));
                }
            }
        }
        Ok(Verdict::holds(property))
    }

    pub fn cft2(s: &FuzzyClosureSpace) -> Result<Verdict, Error> {
        pairs_fail(s, Property::Cft2, |t, p, q, f, g| {
            has(p, &t.interiors[f])
                && has(q, &t.interiors[g])
                && grades::leq_complement(&t.sets[f], &t.sets[g], t.top)
                && has_co(q, &t.sets[f], t.top)
                && has_co(p, &t.sets[g], t.top)
        })
    }

    pub fn urysohn(s: &FuzzyClosureSpace) -> Result<Verdict, Error> {
        pairs_fail(s, Property::Urysohn, |t, p, q, f, g| {
            has(p, &t.interiors[f])
                && has(q, &t.interiors[g])
                && grades::leq_complement(&t.closures[f], &t.closures[g], t.top)
                && has_co(q, &t.sets[f], t.top)
                && has_co(p, &t.sets[g], t.top)
        })
    }

    pub fn regular(s: &FuzzyClosureSpace) -> Result<Verdict, Error> {
        let t = tables(s)?;
        let count = t.sets.len();
        for p in s.carrier().points() {
            for k in 1..count {
                if !has_co(p, &t.closures[k], t.top) {
                    continue;
                }
                let separated = (0..count).any(|f| {
                    has(p, &t.interiors[f])
                        && (0..count).any(|g| {
                            grades::leq(&t.sets[k], &t.interiors[g])
                                && grades::leq_complement(&t.sets[f], &t.sets[g], t.top)
                        })
                });
                if !separated {
                    return Ok(Verdict::fails(
                        Property::Regular,
                        Witness::PointSet(p, s.carrier().decode(k)),
                    ));
                }
            }
        }
        Ok(Verdict::holds(Property::Regular))
    }

    pub fn mashhour_regular(s: &FuzzyClosureSpace) -> Result<Verdict, Error> {
        let t = tables(s)?;
        let count = t.sets.len();
        for p in s.carrier().points() {
            for k in 0..count {
                if has(p, &t.interiors[k])
                    && !(0..count).any(|f| {
                        has(p, &t.interiors[f])
                            && grades::leq(&t.interiors[f], &t.closures[f])
                            && grades::leq(&t.closures[f], &t.interiors[k])
                    })
                {
                    return Ok(Verdict::fails(
                        Property::MashhourRegular,
                        Witness::PointSet(p, s.carrier().decode(k)),
                    ));
                }
            }
        }
        Ok(Verdict::holds(Property::MashhourRegular))
    }

    pub fn normal(s: &FuzzyClosureSpace) -> Result<Verdict, Error> {
        let t = tables(s)?;
        let count = t.sets.len();
        for k2 in 1..count {
            for k1 in 1..count {
                if !grades::leq_complement(&t.closures[k1], &t.closures[k2], t.top) {
                    continue;
                }
                let separated = (0..count).any(|f1| {
                    grades::leq(&t.sets[k1], &t.interiors[f1])
                        && (0..count).any(|f2| {
                            grades::leq(&t.sets[k2], &t.interiors[f2])
                                && grades::leq_complement(&t.sets[f1], &t.sets[f2], t.top)
                        })
                });
                if !separated {
                    return Ok(Verdict::fails(
                        Property::Normal,
                        Witness::Sets(s.carrier().decode(k1), s.carrier().decode(k2)),
                    ));
                }
            }
        }
        Ok(Verdict::holds(Property::Normal))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::lattice::Carrier;

    fn both(n: usize, d: u16) -> [FuzzyClosureSpace; 2] {
        let c = Carrier::new(
            crate::lattice::Universe::numbered(n).unwrap(),
            crate::chain::Chain::new(d).unwrap(),
        );
        [
            FuzzyClosureSpace::discrete(c.clone()),
            FuzzyClosureSpace::indiscrete(c),
        ]
    }

    #[test]
    fn discrete_satisfies_everything() {
        let [dis, _] = both(2, 2);
        let report = classify(&dis).unwrap();
        assert!(report.verdicts().iter().all(|v| v.holds));
    }

    #[test]
    fn indiscrete() {
        let [_, ind] = both(2, 2);
        let r = classify(&ind).unwrap();
        assert!(!r.cft0.holds && !r.cft1.holds && !r.cft2.holds && !r.urysohn.holds);
        assert!(r.regular.holds && r.normal.holds);
        assert!(!r.cft3.holds && !r.cft4.holds);
        assert!(!cft0_interior(&ind).unwrap().holds);
    }

    #[test]
    fn cycle3_is_t0_only() {
        let s = corpus::cycle3(2).unwrap();
        let r = classify(&s).unwrap();
        assert!(r.cft0.holds);
        assert!(!r.cft1.holds && !r.cfts.holds && !r.cft2.holds);
        let a = Analyzer::new(&s).unwrap();
        let x = s.carrier().point("x", 2).unwrap();
        let y = s.carrier().point("y", 1).unwrap();
        // x_λ ∈ Co(c(y_γ)) = 1_x... the complement of 1_{y,z}
        assert!(has_co(x, a.point_closure(y), 2));
        assert!(cft0_interior(&s).unwrap().holds);
    }

    #[test]
    fn shift_spaces() {
        for s in [corpus::shift_path(3, 2).unwrap(), corpus::shift_cycle(3, 2).unwrap()] {
            assert!(cft0(&s).unwrap().holds);
            let v = cft1(&s).unwrap();
            assert!(!v.holds);
        }
        let cyc = corpus::shift_cycle(3, 2).unwrap();
        assert!(cf_normal(&cyc).unwrap().holds);
        assert!(!cf_regular(&cyc).unwrap().holds);
    }

    #[test]
    fn urysohn_not_regular() {
        let s = corpus::urysohn_not_regular(2, 20).unwrap();
        let a = Analyzer::new(&s).unwrap();
        let r = a.classify().unwrap();
        assert!(r.cft1.holds && r.cft2.holds && r.urysohn.holds);
        assert!(!r.regular.holds && !r.mashhour_regular.holds && !r.cfts.holds);
        let c = s.carrier();
        let x04 = c.point("0", 8).unwrap();
        let k = c.point_set(c.point("0", 1).unwrap());
        assert!(has_co(x04, a.point_closure(c.point("0", 1).unwrap()), 20));
        assert!(!a.regular_pair_separated(x04, &k));
        // the points y_1 and z_1 separate distinct points
        let y = c.point("0", 20).unwrap();
        let z = c.point("1", 20).unwrap();
        let (f, g) = a.urysohn_certificate(y, z).unwrap();
        assert!(a.space().is_point_neighborhood(&f, y));
        assert!(a.space().is_point_neighborhood(&g, z));
    }

    #[test]
    fn singleton_closure_is_regular_not_t3() {
        let s = corpus::singleton_closure(3, 2).unwrap();
        let r = classify(&s).unwrap();
        assert!(r.regular.holds && r.cft1.holds && !r.cfts.holds && !r.cft3.holds);
        assert_eq!(r.cft3.witness, Some(Witness::Component(Property::Cfts)));
    }

    #[test]
    fn two_block_normal() {
        let s = corpus::two_block_normal(3, 2).unwrap();
        assert!(cf_normal(&s).unwrap().holds);
    }

    #[test]
    fn reduced_deciders_match_naive() {
        let spaces = [
            corpus::cycle3(1).unwrap(),
            corpus::shift_path(3, 1).unwrap(),
            corpus::shift_cycle(3, 1).unwrap(),
            corpus::pqr_interior(1).unwrap(),
            corpus::two_block_normal(2, 2).unwrap(),
            corpus::singleton_closure(2, 2).unwrap(),
        ];
        for s in &spaces {
            let a = Analyzer::new(s).unwrap();
            assert_eq!(a.cft2(), naive::cft2(s).unwrap());
            assert_eq!(a.urysohn(), naive::urysohn(s).unwrap());
            assert_eq!(a.regular(), naive::regular(s).unwrap());
            assert_eq!(a.mashhour_regular(), naive::mashhour_regular(s).unwrap());
            assert_eq!(a.normal().holds, naive::normal(s).unwrap().holds);
        }
    }

    #[test]
    fn certificates_replay() {
        let s = corpus::two_block_normal(2, 2).unwrap();
        let a = Analyzer::new(&s).unwrap();
        let c = s.carrier();
        let k1 = c.crisp(&["0"]).unwrap();
        let k2 = c.crisp(&["1"]).unwrap();
        let (f1, f2) = a.normal_certificate(&k1, &k2).unwrap();
        assert!(s.is_neighborhood(&f1, &k1));
        assert!(s.is_neighborhood(&f2, &k2));
        assert!(f1.leq(&f2.complement()).unwrap());
    }

    #[test]
    fn unvalidated_space_is_refused() {
        let c = Carrier::from_names(["a"], 1).unwrap();
        let raw = FuzzyClosureSpace::tabulated(c, 10, |f| f.clone()).unwrap();
        assert_eq!(classify(&raw).unwrap_err(), Error::NotValidated);
    }
}
