//! Čech fuzzy closure operators: representation, axiom validation, and the
//! interior / neighborhood calculus derived from them.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::chain::Level;
use crate::error::Error;
use crate::grades;
use crate::lattice::{Carrier, FuzzyPoint, FuzzySet};
use crate::topology::FuzzyTopology;

/// Default cap on `|I^X|` for anything that enumerates the carrier.
pub const DEFAULT_MAX_CARRIER: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedOperator {
    /// `d(f) = f`.
    Discrete,
    /// `i(0̲) = 0̲`, `i(f) = 1̲` otherwise.
    Indiscrete,
}

/// Closures of every fuzzy point `x_λ`, one grade vector per `(x, λ)` with
/// `λ` ranging over the positive chain levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointClosures {
    len: usize,
    denominator: u16,
    entries: Vec<Vec<u16>>,
}

impl PointClosures {
    /// `entries[x * D + (λ - 1)]` is `c(x_λ)`.
    pub fn new(carrier: &Carrier, entries: Vec<Vec<u16>>) -> Result<Self, Error> {
        let n = carrier.len();
        let d = carrier.denominator();
        if entries.len() != n * d as usize {
            return Err(Error::MalformedOperator(format!(
                "expected {} point closures, got {}",
                n * d as usize,
                entries.len()
            )));
        }
        if entries
            .iter()
            .any(|e| e.len() != n || e.iter().any(|g| *g > d))
        {
            return Err(Error::MalformedOperator(
                "point closure outside the carrier".into(),
            ));
        }
        Ok(PointClosures {
            len: n,
            denominator: d,
            entries,
        })
    }

    pub fn from_fn(
        carrier: &Carrier,
        mut closure: impl FnMut(FuzzyPoint) -> FuzzySet,
    ) -> Result<Self, Error> {
        let mut entries = Vec::with_capacity(carrier.len() * carrier.denominator() as usize);
        for p in carrier.points() {
            let c = closure(p);
            if c.carrier() != carrier {
                return Err(Error::CarrierMismatch);
            }
            entries.push(c.grades().to_vec());
        }
        PointClosures::new(carrier, entries)
    }

    fn slot(&self, support: usize, level: u16) -> usize {
        support * self.denominator as usize + (level as usize - 1)
    }

    pub fn entry(&self, p: FuzzyPoint) -> &[u16] {
        &self.entries[self.slot(p.support, p.level.0)]
    }

    /// All entries, element-major with ascending levels.
    pub fn entries(&self) -> &[Vec<u16>] {
        &self.entries
    }

    pub(crate) fn entry_raw(&self, support: usize, level: u16) -> &[u16] {
        &self.entries[self.slot(support, level)]
    }

    /// Join of the entries at the maximal points of `g`.
    pub(crate) fn close(&self, g: &[u16]) -> Vec<u16> {
        let mut acc = vec![0; self.len];
        for (x, level) in g.iter().enumerate() {
            if *level > 0 {
                grades::join_into(&mut acc, self.entry_raw(x, *level));
            }
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureOperator {
    Named(NamedOperator),
    /// Explicit closure for every set, indexed by enumeration code.
    Table(Vec<u32>),
    /// `c(f) = ⋁_{x_λ ≤ f} c(x_λ)`, stored through its point closures.
    Generated(PointClosures),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// `c(0̲) = 0̲`.
    ZeroPreserving,
    /// `f ≤ c(f)`.
    Expansive,
    /// `c(f ∨ g) = c(f) ∨ c(g)`.
    Additive,
    /// `λ ≤ μ ⇒ c(x_λ) ≤ c(x_μ)`.
    LevelMonotone,
    /// `c(f) = ⋁_{x_λ ≤ f} c(x_λ)`.
    Generation,
    ChangZero,
    ChangOne,
    ChangMeet,
    ChangJoin,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witnesses: Vec<FuzzySet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub(crate) fn push(&mut self, axiom: Axiom, witnesses: Vec<FuzzySet>) {
        self.violations.push(Violation { axiom, witnesses });
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }
}

/// A universe and chain with a closure operator on `I^X`.
#[derive(Debug, Clone)]
pub struct FuzzyClosureSpace {
    carrier: Carrier,
    operator: ClosureOperator,
    validated: bool,
    budget: usize,
}

impl FuzzyClosureSpace {
    /// Builds and validates; fails with the full report when an axiom breaks.
    pub fn new(carrier: Carrier, operator: ClosureOperator) -> Result<Self, Error> {
        let mut space = FuzzyClosureSpace::unvalidated(carrier, operator)?;
        let report = space.validate()?;
        if !report.passed() {
            return Err(Error::Invalid(report));
        }
        space.validated = true;
        Ok(space)
    }

    /// Checks only that the operator fits the carrier.
    pub fn unvalidated(carrier: Carrier, operator: ClosureOperator) -> Result<Self, Error> {
        match &operator {
            ClosureOperator::Named(_) => {}
            ClosureOperator::Table(table) => {
                let count = carrier.set_count();
                if table.len() as u128 != count || table.iter().any(|c| *c as u128 >= count) {
                    return Err(Error::MalformedOperator(
                        "table must map every set code to a set code".into(),
                    ));
                }
            }
            ClosureOperator::Generated(points) => {
                if points.len != carrier.len() || points.denominator != carrier.denominator() {
                    return Err(Error::MalformedOperator(
                        "point closures built for another carrier".into(),
                    ));
                }
            }
        }
        Ok(FuzzyClosureSpace {
            carrier,
            operator,
            validated: false,
            budget: DEFAULT_MAX_CARRIER,
        })
    }

    pub fn discrete(carrier: Carrier) -> Self {
        FuzzyClosureSpace {
            carrier,
            operator: ClosureOperator::Named(NamedOperator::Discrete),
            validated: true,
            budget: DEFAULT_MAX_CARRIER,
        }
    }

    pub fn indiscrete(carrier: Carrier) -> Self {
        FuzzyClosureSpace {
            carrier,
            operator: ClosureOperator::Named(NamedOperator::Indiscrete),
            validated: true,
            budget: DEFAULT_MAX_CARRIER,
        }
    }

    /// A finitely generated space from its point closures.
    pub fn generated(
        carrier: Carrier,
        closure: impl FnMut(FuzzyPoint) -> FuzzySet,
    ) -> Result<Self, Error> {
        let points = PointClosures::from_fn(&carrier, closure)?;
        FuzzyClosureSpace::new(carrier, ClosureOperator::Generated(points))
    }

    /// A table operator from an arbitrary set map, evaluated on every set.
    pub fn tabulated(
        carrier: Carrier,
        budget: usize,
        mut closure: impl FnMut(&FuzzySet) -> FuzzySet,
    ) -> Result<Self, Error> {
        let table = carrier
            .enumerate_sets(budget)?
            .map(|f| closure(&f).code() as u32)
            .collect();
        FuzzyClosureSpace::unvalidated(carrier, ClosureOperator::Table(table))
    }

    /// A space whose point closures are known to be level-monotone and
    /// expansive, skipping validation.
    pub(crate) fn trusted(carrier: Carrier, points: PointClosures) -> Self {
        FuzzyClosureSpace {
            carrier,
            operator: ClosureOperator::Generated(points),
            validated: true,
            budget: DEFAULT_MAX_CARRIER,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn operator(&self) -> &ClosureOperator {
        &self.operator
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    pub(crate) fn require_validated(&self) -> Result<(), Error> {
        if self.validated {
            Ok(())
        } else {
            Err(Error::NotValidated)
        }
    }

    pub(crate) fn set_count(&self) -> Result<usize, Error> {
        self.carrier.check_budget(self.budget)
    }

    fn own(&self, f: &FuzzySet) {
        assert!(
            f.carrier() == &self.carrier,
            "fuzzy set {f} belongs to another carrier"
        );
    }

    pub(crate) fn closure_grades(&self, g: &[u16]) -> Vec<u16> {
        match &self.operator {
            ClosureOperator::Named(NamedOperator::Discrete) => g.to_vec(),
            ClosureOperator::Named(NamedOperator::Indiscrete) => {
                if grades::is_zero(g) {
                    g.to_vec()
                } else {
                    vec![self.carrier.denominator(); g.len()]
                }
            }
            ClosureOperator::Table(table) => {
                let code = grades::encode(g, self.carrier.radix());
                let mut out = vec![0; g.len()];
                grades::decode_into(table[code] as usize, self.carrier.radix(), &mut out);
                out
            }
            ClosureOperator::Generated(points) => points.close(g),
        }
    }

    /// `c(f)`. Panics if `f` lives on another carrier.
    pub fn closure(&self, f: &FuzzySet) -> FuzzySet {
        self.own(f);
        self.wrap(self.closure_grades(f.grades()))
    }

    pub fn point_closure(&self, p: FuzzyPoint) -> FuzzySet {
        self.closure(&self.carrier.point_set(p))
    }

    /// `⋁_{x_λ ≤ f} c(x_λ)` over every point below `f`, not only the maximal
    /// ones.
    pub fn generated_closure(&self, f: &FuzzySet) -> FuzzySet {
        self.own(f);
        self.wrap(self.generated_grades(f.grades()))
    }

    fn generated_grades(&self, g: &[u16]) -> Vec<u16> {
        let mut acc = vec![0; g.len()];
        let mut point = vec![0; g.len()];
        for (x, top) in g.iter().enumerate() {
            for level in 1..=*top {
                point[x] = level;
                grades::join_into(&mut acc, &self.closure_grades(&point));
            }
            point[x] = 0;
        }
        acc
    }

    fn wrap(&self, g: Vec<u16>) -> FuzzySet {
        FuzzySet::raw(self.carrier.clone(), g)
    }

    /// `int(f) = Co(c(Co(f)))`.
    pub fn interior(&self, f: &FuzzySet) -> FuzzySet {
        self.own(f);
        self.wrap(self.interior_grades(f.grades()))
    }

    pub(crate) fn interior_grades(&self, g: &[u16]) -> Vec<u16> {
        let top = self.carrier.denominator();
        grades::complement(&self.closure_grades(&grades::complement(g, top)), top)
    }

    /// `f` is a neighborhood of `k` when `k ≤ int(f)`.
    pub fn is_neighborhood(&self, f: &FuzzySet, k: &FuzzySet) -> bool {
        self.own(k);
        grades::leq(k.grades(), &self.interior(f).grades())
    }

    pub fn is_point_neighborhood(&self, f: &FuzzySet, p: FuzzyPoint) -> bool {
        self.is_neighborhood(f, &self.carrier.point_set(p))
    }

    pub fn is_closed(&self, f: &FuzzySet) -> bool {
        self.closure(f) == *f
    }

    pub fn is_open(&self, f: &FuzzySet) -> bool {
        self.interior(f) == *f
    }

    /// `c(f) = Co(int(Co(f)))`.
    pub fn closure_from_interior(&self, f: &FuzzySet) -> FuzzySet {
        self.interior(&f.complement()).complement()
    }

    /// `c(x_λ)` is again a fuzzy point.
    pub fn is_well_closed(&self, p: FuzzyPoint) -> bool {
        self.point_closure(p).support().len() == 1
    }

    /// `τ(c) = {f : c(Co(f)) = Co(f)}`.
    pub fn associated_topology(&self) -> Result<FuzzyTopology, Error> {
        let opens = self
            .carrier
            .enumerate_sets(self.budget)?
            .filter(|f| self.is_closed(&f.complement()))
            .collect();
        Ok(FuzzyTopology::from_sorted_opens(self.carrier.clone(), opens))
    }

    pub fn is_idempotent(&self) -> Result<bool, Error> {
        self.set_count()?;
        Ok(self.carrier.enumerate_sets(self.budget)?.all(|f| {
            let c = self.closure(&f);
            self.closure(&c) == c
        }))
    }

    /// `self ≤ other` in the coarseness order: `other(f) ≤ self(f)` for every `f`.
    pub fn coarser_leq(&self, other: &FuzzyClosureSpace) -> Result<bool, Error> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        Ok(self
            .carrier
            .enumerate_sets(self.budget)?
            .all(|f| grades::leq(&other.closure_grades(f.grades()), &self.closure_grades(f.grades()))))
    }

    /// The generation identity over every set. Meaningful for unvalidated
    /// tables; every validated operator on a finite carrier satisfies it.
    pub fn is_finitely_generated(&self) -> Result<bool, Error> {
        Ok(self
            .carrier
            .enumerate_sets(self.budget)?
            .all(|f| self.closure_grades(f.grades()) == self.generated_grades(f.grades())))
    }

    /// The point closures of this operator.
    pub fn point_closures(&self) -> PointClosures {
        match &self.operator {
            ClosureOperator::Generated(points) => points.clone(),
            _ => {
                let entries = self
                    .carrier
                    .points()
                    .map(|p| self.closure_grades(self.carrier.point_set(p).grades()))
                    .collect();
                PointClosures {
                    len: self.carrier.len(),
                    denominator: self.carrier.denominator(),
                    entries,
                }
            }
        }
    }

    /// Same operator, re-expressed through its point closures.
    pub fn to_generated(&self) -> Result<FuzzyClosureSpace, Error> {
        self.require_validated()?;
        Ok(FuzzyClosureSpace {
            carrier: self.carrier.clone(),
            operator: ClosureOperator::Generated(self.point_closures()),
            validated: true,
            budget: self.budget,
        })
    }

    /// Same operator, re-expressed as an explicit table.
    pub fn to_table(&self) -> Result<FuzzyClosureSpace, Error> {
        let table = self
            .carrier
            .enumerate_sets(self.budget)?
            .map(|f| grades::encode(&self.closure_grades(f.grades()), self.carrier.radix()) as u32)
            .collect();
        Ok(FuzzyClosureSpace {
            carrier: self.carrier.clone(),
            operator: ClosureOperator::Table(table),
            validated: self.validated,
            budget: self.budget,
        })
    }

    /// Checks the three closure axioms, plus level-monotonicity of point
    /// closures and the generation identity. Each failing axiom carries its
    /// smallest witness in enumeration order.
    pub fn validate(&self) -> Result<ValidationReport, Error> {
        let count = self.set_count()?;
        let carrier = &self.carrier;
        let n = carrier.len();
        let top = carrier.denominator();
        let mut report = ValidationReport::default();

        let zero = vec![0; n];
        if !grades::is_zero(&self.closure_grades(&zero)) {
            report.push(Axiom::ZeroPreserving, vec![carrier.zero()]);
        }

        let mut expansive = None;
        let mut generation = None;
        let mut g = vec![0; n];
        for code in 0..count {
            grades::decode_into(code, carrier.radix(), &mut g);
            let c = self.closure_grades(&g);
            if expansive.is_none() && !grades::leq(&g, &c) {
                expansive = Some(code);
            }
            if generation.is_none() && c != self.generated_grades(&g) {
                generation = Some(code);
            }
            if expansive.is_some() && generation.is_some() {
                break;
            }
        }
        if let Some(code) = expansive {
            report.push(Axiom::Expansive, vec![carrier.decode(code)]);
        }

        let mut monotone = None;
        'outer: for x in 0..n {
            let mut point = vec![0; n];
            for low in 1..top {
                point[x] = low;
                let lower = self.closure_grades(&point);
                point[x] = low + 1;
                let upper = self.closure_grades(&point);
                if !grades::leq(&lower, &upper) {
                    monotone = Some((x, low));
                    break 'outer;
                }
            }
        }
        if let Some((x, low)) = monotone {
            let p = |l| carrier.point_set(FuzzyPoint { support: x, level: Level(l) });
            report.push(Axiom::LevelMonotone, vec![p(low), p(low + 1)]);
        }
        if let Some(code) = generation {
            report.push(Axiom::Generation, vec![carrier.decode(code)]);
        }

        // Additivity on a finite carrier is equivalent to level-monotone point
        // closures plus the generation identity; the pair scan only runs to
        // extract the smallest violating pair once one is known to exist.
        let additive_by_construction = matches!(self.operator, ClosureOperator::Generated(_));
        if !additive_by_construction && (monotone.is_some() || generation.is_some()) {
            if let Some((a, b)) = self.smallest_additivity_violation(count) {
                report.push(Axiom::Additive, vec![carrier.decode(a), carrier.decode(b)]);
            }
        }
        report.violations.sort_by_key(|v| v.axiom);
        Ok(report)
    }

    fn smallest_additivity_violation(&self, count: usize) -> Option<(usize, usize)> {
        let n = self.carrier.len();
        let radix = self.carrier.radix();
        let mut a = vec![0; n];
        let mut b = vec![0; n];
        let closures: Vec<Vec<u16>> = (0..count)
            .map(|code| {
                grades::decode_into(code, radix, &mut a);
                self.closure_grades(&a)
            })
            .collect();
        for i in 0..count {
            grades::decode_into(i, radix, &mut a);
            for j in i..count {
                grades::decode_into(j, radix, &mut b);
                let joined = grades::encode(&grades::join(&a, &b), radix);
                if closures[joined] != grades::join(&closures[i], &closures[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Whether a reported violation still fails its axiom on this space.
    pub fn replays(&self, violation: &Violation) -> bool {
        let w = &violation.witnesses;
        match violation.axiom {
            Axiom::ZeroPreserving => !self.closure(&w[0]).is_zero(),
            Axiom::Expansive => !grades::leq(w[0].grades(), self.closure(&w[0]).grades()),
            Axiom::Additive => {
                let joined = w[0].join(&w[1]).expect("witnesses share a carrier");
                self.closure(&joined)
                    != self.closure(&w[0]).join(&self.closure(&w[1])).expect("same carrier")
            }
            Axiom::LevelMonotone => {
                !grades::leq(self.closure(&w[0]).grades(), self.closure(&w[1]).grades())
            }
            Axiom::Generation => self.closure(&w[0]) != self.generated_closure(&w[0]),
            _ => false,
        }
    }
}
