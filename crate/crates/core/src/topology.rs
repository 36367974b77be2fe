//! Chang fuzzy topologies on a finite carrier, their closure, and the
//! separation axioms FT0 through FT4.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::closure::{Axiom, ClosureOperator, FuzzyClosureSpace, PointClosures, ValidationReport};
use crate::error::Error;
use crate::grades;
use crate::lattice::{Carrier, FuzzyPoint, FuzzySet};
use crate::verdict::{Property, Verdict, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FtAxiom {
    Ft0,
    Ft1,
    Fts,
    Ft2,
    /// Fuzzy Urysohn.
    Ft2Half,
    Regular,
    Ft3,
    Normal,
    Ft4,
}

impl FtAxiom {
    pub const ALL: [FtAxiom; 9] = [
        FtAxiom::Ft0,
        FtAxiom::Ft1,
        FtAxiom::Fts,
        FtAxiom::Ft2,
        FtAxiom::Ft2Half,
        FtAxiom::Regular,
        FtAxiom::Ft3,
        FtAxiom::Normal,
        FtAxiom::Ft4,
    ];

    pub fn id(self) -> &'static str {
        match self {
            FtAxiom::Ft0 => "ft0",
            FtAxiom::Ft1 => "ft1",
            FtAxiom::Fts => "fts",
            FtAxiom::Ft2 => "ft2",
            FtAxiom::Ft2Half => "ft2_half",
            FtAxiom::Regular => "ft_regular",
            FtAxiom::Ft3 => "ft3",
            FtAxiom::Normal => "ft_normal",
            FtAxiom::Ft4 => "ft4",
        }
    }
}

/// A family of open fuzzy sets, stored extensionally in enumeration order.
#[derive(Debug, Clone)]
pub struct FuzzyTopology {
    carrier: Carrier,
    opens: Vec<FuzzySet>,
    codes: BTreeSet<usize>,
}

impl FuzzyTopology {
    /// Builds the family and checks the Chang axioms.
    pub fn new(carrier: Carrier, family: Vec<FuzzySet>) -> Result<Self, Error> {
        let t = FuzzyTopology::family(carrier, family)?;
        let report = t.validate_chang();
        if report.passed() {
            Ok(t)
        } else {
            Err(Error::Invalid(report))
        }
    }

    /// Any family of sets on `carrier`, deduplicated and sorted, unchecked.
    pub fn family(carrier: Carrier, mut family: Vec<FuzzySet>) -> Result<Self, Error> {
        if family.iter().any(|f| f.carrier() != &carrier) {
            return Err(Error::CarrierMismatch);
        }
        family.sort_by_key(FuzzySet::code);
        family.dedup();
        Ok(FuzzyTopology::from_sorted_opens(carrier, family))
    }

    pub(crate) fn from_sorted_opens(carrier: Carrier, opens: Vec<FuzzySet>) -> Self {
        let codes = opens.iter().map(FuzzySet::code).collect();
        FuzzyTopology {
            carrier,
            opens,
            codes,
        }
    }

    pub fn discrete(carrier: Carrier, budget: usize) -> Result<Self, Error> {
        let opens = carrier.enumerate_sets(budget)?.collect();
        Ok(FuzzyTopology::from_sorted_opens(carrier, opens))
    }

    pub fn indiscrete(carrier: Carrier) -> Self {
        let opens = vec![carrier.zero(), carrier.one()];
        FuzzyTopology::from_sorted_opens(carrier, opens)
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn opens(&self) -> &[FuzzySet] {
        &self.opens
    }

    pub fn is_open(&self, f: &FuzzySet) -> bool {
        f.carrier() == &self.carrier && self.codes.contains(&f.code())
    }

    pub fn is_closed(&self, f: &FuzzySet) -> bool {
        self.is_open(&f.complement())
    }

    pub fn closed_sets(&self) -> impl Iterator<Item = FuzzySet> + '_ {
        self.opens.iter().map(FuzzySet::complement)
    }

    /// Contains `0̲` and `1̲`, closed under pairwise meets and joins. Failing
    /// pairs are the smallest in enumeration order.
    pub fn validate_chang(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let zero = self.carrier.zero();
        let one = self.carrier.one();
        if !self.is_open(&zero) {
            report.push(Axiom::ChangZero, vec![zero]);
        }
        if !self.is_open(&one) {
            report.push(Axiom::ChangOne, vec![one]);
        }
        let mut meet = None;
        let mut join = None;
        'pairs: for (i, g) in self.opens.iter().enumerate() {
            for h in &self.opens[i..] {
                if meet.is_none() && !self.is_open(&g.meet(h).expect("same carrier")) {
                    meet = Some((g.clone(), h.clone()));
                }
                if join.is_none() && !self.is_open(&g.join(h).expect("same carrier")) {
                    join = Some((g.clone(), h.clone()));
                }
                if meet.is_some() && join.is_some() {
                    break 'pairs;
                }
            }
        }
        if let Some((g, h)) = meet {
            report.push(Axiom::ChangMeet, vec![g, h]);
        }
        if let Some((g, h)) = join {
            report.push(Axiom::ChangJoin, vec![g, h]);
        }
        report
    }

    /// Meet of all closed supersets of `f`.
    pub fn fts_closure(&self, f: &FuzzySet) -> FuzzySet {
        let top = self.carrier.denominator();
        let mut acc = vec![top; self.carrier.len()];
        for g in &self.opens {
            if grades::leq_complement(f.grades(), g.grades(), top) {
                let closed = grades::complement(g.grades(), top);
                acc = grades::meet(&acc, &closed);
            }
        }
        self.carrier.set(acc).expect("grades stay on the chain")
    }

    /// Join of all opens below `f`.
    pub fn fts_interior(&self, f: &FuzzySet) -> FuzzySet {
        let mut acc = vec![0; self.carrier.len()];
        for g in &self.opens {
            if grades::leq(g.grades(), f.grades()) {
                grades::join_into(&mut acc, g.grades());
            }
        }
        self.carrier.set(acc).expect("grades stay on the chain")
    }

    /// Smallest open above `f` (meet of all opens above it). Requires a
    /// family closed under meets.
    pub fn smallest_open_above(&self, f: &FuzzySet) -> FuzzySet {
        let mut acc = vec![self.carrier.denominator(); self.carrier.len()];
        for g in &self.opens {
            if grades::leq(f.grades(), g.grades()) {
                acc = grades::meet(&acc, g.grades());
            }
        }
        self.carrier.set(acc).expect("grades stay on the chain")
    }

    /// The topology's closure wrapped as a Čech fuzzy closure space.
    pub fn closure_space(&self) -> Result<FuzzyClosureSpace, Error> {
        let points =
            PointClosures::from_fn(&self.carrier, |p| self.fts_closure(&self.carrier.point_set(p)))?;
        FuzzyClosureSpace::new(self.carrier.clone(), ClosureOperator::Generated(points))
    }

    /// Every fuzzy singleton `x_1` is closed.
    pub fn singletons_closed(&self) -> bool {
        let top = self.carrier.chain().top();
        (0..self.carrier.len()).all(|x| {
            let s = self.carrier.point_set(FuzzyPoint { support: x, level: top });
            self.is_closed(&s)
        })
    }

    pub fn ft_axiom(&self, axiom: FtAxiom) -> Verdict {
        let property = Property::Ft(axiom);
        let witness = match axiom {
            FtAxiom::Ft0 => self.pair_failure(|p, q| self.open_between(p, q) || self.open_between(q, p)),
            FtAxiom::Ft1 => self.pair_failure(|p, q| self.open_between(p, q) && self.open_between(q, p)),
            FtAxiom::Fts => self.carrier.points().find_map(|p| {
                let s = self.carrier.point_set(p);
                (self.fts_closure(&s) != s).then_some(Witness::Point(p))
            }),
            FtAxiom::Ft2 => self.pair_failure(|p, q| self.hausdorff_pair(p, q)),
            FtAxiom::Ft2Half => self.pair_failure(|p, q| self.urysohn_pair(p, q)),
            FtAxiom::Regular => self.regular_failure(),
            FtAxiom::Normal => self.normal_failure(),
            FtAxiom::Ft3 | FtAxiom::Ft4 => {
                let base = if axiom == FtAxiom::Ft3 {
                    FtAxiom::Regular
                } else {
                    FtAxiom::Normal
                };
                if !self.ft_axiom(base).holds {
                    Some(Witness::Component(Property::Ft(base)))
                } else if !self.ft_axiom(FtAxiom::Fts).holds {
                    Some(Witness::Component(Property::Ft(FtAxiom::Fts)))
                } else {
                    None
                }
            }
        };
        Verdict::from_witness(property, witness)
    }

    fn pair_failure(&self, mut ok: impl FnMut(FuzzyPoint, FuzzyPoint) -> bool) -> Option<Witness> {
        for p in self.carrier.points() {
            for q in self.carrier.points() {
                if p.is_distinct_from(&q) && !ok(p, q) {
                    return Some(Witness::Points(p, q));
                }
            }
        }
        None
    }

    fn point_grades(&self, p: FuzzyPoint) -> Vec<u16> {
        self.carrier.point_set(p).grades().to_vec()
    }

    /// Some open `f` with `p ∈ f ≤ Co(q)`.
    fn open_between(&self, p: FuzzyPoint, q: FuzzyPoint) -> bool {
        let u = self.smallest_open_above(&self.carrier.point_set(p));
        grades::leq_complement(u.grades(), &self.point_grades(q), self.carrier.denominator())
    }

    fn hausdorff_pair(&self, p: FuzzyPoint, q: FuzzyPoint) -> bool {
        let top = self.carrier.denominator();
        let pg = self.point_grades(p);
        let qg = self.point_grades(q);
        let co_q = grades::complement(&qg, top);
        // g ranges over opens with q ≤ g ≤ Co(p); f is then the largest open
        // below Co(g) ∧ Co(q)
        self.opens.iter().any(|g| {
            grades::leq(&qg, g.grades())
                && grades::leq_complement(g.grades(), &pg, top)
                && {
                    let bound = grades::meet(&grades::complement(g.grades(), top), &co_q);
                    let f = self.fts_interior(&self.carrier.set(bound).expect("on chain"));
                    grades::leq(&pg, f.grades())
                }
        })
    }

    fn urysohn_pair(&self, p: FuzzyPoint, q: FuzzyPoint) -> bool {
        if !self.open_between(p, q) || !self.open_between(q, p) {
            return false;
        }
        let f = self.smallest_open_above(&self.carrier.point_set(p));
        let g = self.smallest_open_above(&self.carrier.point_set(q));
        grades::leq_complement(
            self.fts_closure(&f).grades(),
            self.fts_closure(&g).grades(),
            self.carrier.denominator(),
        )
    }

    /// `p ≤ int(Co(cl(U(k))))`, i.e. the smallest open around `k` has a
    /// closure that misses `p`.
    fn separated_from(&self, p: &[u16], k: &FuzzySet) -> bool {
        let u = self.smallest_open_above(k);
        grades::leq_complement(p, self.fts_closure(&u).grades(), self.carrier.denominator())
    }

    fn regular_failure(&self) -> Option<Witness> {
        let top = self.carrier.denominator();
        for p in self.carrier.points() {
            let pg = self.point_grades(p);
            for k in self.closed_sets() {
                if grades::leq_complement(&pg, k.grades(), top) && !self.separated_from(&pg, &k) {
                    return Some(Witness::PointSet(p, k));
                }
            }
        }
        None
    }

    fn normal_failure(&self) -> Option<Witness> {
        let top = self.carrier.denominator();
        let closed: Vec<FuzzySet> = self.closed_sets().filter(|k| !k.is_zero()).collect();
        for k1 in &closed {
            for k2 in &closed {
                if grades::leq_complement(k1.grades(), k2.grades(), top)
                    && !self.separated_from(k1.grades(), k2)
                {
                    return Some(Witness::Sets(k1.clone(), k2.clone()));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn carrier(n: usize, d: u16) -> Carrier {
        Carrier::new(crate::lattice::Universe::numbered(n).unwrap(), crate::chain::Chain::new(d).unwrap())
    }

    #[test]
    fn chang_validation() {
        let c = carrier(3, 1);
        assert!(FuzzyTopology::indiscrete(c.clone()).validate_chang().passed());
        assert!(FuzzyTopology::discrete(c.clone(), 100).unwrap().validate_chang().passed());
        let missing_join = FuzzyTopology::family(
            c.clone(),
            vec![c.zero(), c.crisp(&["0"]).unwrap(), c.crisp(&["1"]).unwrap(), c.one()],
        )
        .unwrap();
        let report = missing_join.validate_chang();
        let v = report.violation(Axiom::ChangJoin).unwrap();
        assert_eq!(v.witnesses, [c.crisp(&["1"]).unwrap(), c.crisp(&["0"]).unwrap()]);
        assert!(report.violation(Axiom::ChangMeet).is_none());
        assert!(matches!(
            FuzzyTopology::new(c.clone(), missing_join.opens().to_vec()),
            Err(Error::Invalid(_))
        ));
    }

    #[test]
    fn closures_of_extreme_topologies() {
        let c = carrier(2, 2);
        let ind = FuzzyTopology::indiscrete(c.clone());
        let dis = FuzzyTopology::discrete(c.clone(), 100).unwrap();
        for f in c.enumerate_sets(100).unwrap() {
            assert_eq!(ind.fts_closure(&f).is_one(), !f.is_zero());
            assert_eq!(dis.fts_closure(&f), f);
        }
    }

    #[test]
    fn fts_closure_is_an_idempotent_closure_operator() {
        let c = carrier(2, 2);
        let t = FuzzyTopology::new(
            c.clone(),
            vec![c.zero(), c.constant(crate::chain::Level(1)).unwrap(), c.set(vec![1, 2]).unwrap(), c.one()],
        )
        .unwrap();
        let s = t.closure_space().unwrap();
        assert!(s.is_idempotent().unwrap());
        for f in c.enumerate_sets(100).unwrap() {
            assert_eq!(s.closure(&f), t.fts_closure(&f));
        }
    }

    #[test]
    fn discrete_satisfies_everything() {
        let t = FuzzyTopology::discrete(carrier(2, 2), 100).unwrap();
        for a in FtAxiom::ALL {
            assert!(t.ft_axiom(a).holds, "{a:?}");
        }
    }

    #[test]
    fn indiscrete_is_normal_not_ft0() {
        let t = FuzzyTopology::indiscrete(carrier(2, 2));
        assert!(!t.ft_axiom(FtAxiom::Ft0).holds);
        assert!(t.ft_axiom(FtAxiom::Normal).holds);
        assert!(t.ft_axiom(FtAxiom::Regular).holds);
        assert!(!t.ft_axiom(FtAxiom::Ft4).holds);
    }

    #[test]
    fn ft1_matches_singleton_closedness() {
        let c = carrier(2, 2);
        let all: Vec<FuzzySet> = c.enumerate_sets(100).unwrap().collect();
        // every topology generated by closing a pair of sets under the lattice
        for a in &all {
            for b in &all {
                let t = generated(&c, &[a.clone(), b.clone()]);
                assert_eq!(t.ft_axiom(FtAxiom::Ft1).holds, t.singletons_closed());
            }
        }
    }

    pub(crate) fn generated(c: &Carrier, seeds: &[FuzzySet]) -> FuzzyTopology {
        let mut family: Vec<FuzzySet> = vec![c.zero(), c.one()];
        family.extend(seeds.iter().cloned());
        loop {
            let mut next = family.clone();
            for g in &family {
                for h in &family {
                    next.push(g.meet(h).unwrap());
                    next.push(g.join(h).unwrap());
                }
            }
            next.sort_by_key(FuzzySet::code);
            next.dedup();
            if next.len() == family.len() {
                return FuzzyTopology::new(c.clone(), next).unwrap();
            }
            family = next;
        }
    }
}
