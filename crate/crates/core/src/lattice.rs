//! Universes, fuzzy sets and fuzzy points over a rational chain, with the
//! complete-lattice operations everything else is built from.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chain::{Chain, Level};
use crate::error::Error;
use crate::grades;

/// A finite, ordered set of distinct element names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = BTreeMap::new();
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        Ok(Universe { names, index })
    }

    /// Elements named `"0"`, `"1"`, ..., `"n-1"`.
    pub fn numbered(n: usize) -> Result<Self, Error> {
        Universe::new((0..n).map(|i| alloc::format!("{i}")))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize, Error> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownElement(String::from(name)))
    }
}

#[derive(Debug)]
struct CarrierInner {
    universe: Universe,
    chain: Chain,
}

/// A universe together with a chain: the index set of `I^X`.
///
/// Cheap to clone; fuzzy sets keep a handle to the carrier they live on.
#[derive(Debug, Clone)]
pub struct Carrier {
    inner: Arc<CarrierInner>,
}

impl PartialEq for Carrier {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.chain == other.inner.chain
                && self.inner.universe == other.inner.universe)
    }
}

impl Eq for Carrier {}

impl Carrier {
    pub fn new(universe: Universe, chain: Chain) -> Self {
        Carrier {
            inner: Arc::new(CarrierInner { universe, chain }),
        }
    }

    /// Shorthand for tests and examples.
    pub fn from_names<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        denominator: u16,
    ) -> Result<Self, Error> {
        Ok(Carrier::new(Universe::new(names)?, Chain::new(denominator)?))
    }

    pub fn universe(&self) -> &Universe {
        &self.inner.universe
    }

    pub fn chain(&self) -> Chain {
        self.inner.chain
    }

    pub fn denominator(&self) -> u16 {
        self.inner.chain.denominator()
    }

    pub fn len(&self) -> usize {
        self.inner.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub(crate) fn radix(&self) -> usize {
        self.denominator() as usize + 1
    }

    /// `(D+1)^|X|`, the size of `I^X`.
    pub fn set_count(&self) -> u128 {
        (self.radix() as u128).saturating_pow(self.len() as u32)
    }

    /// Checks that `I^X` can be enumerated within `limit` sets.
    pub fn check_budget(&self, limit: usize) -> Result<usize, Error> {
        let required = self.set_count();
        if required > limit as u128 {
            return Err(Error::Budget { required, limit });
        }
        Ok(required as usize)
    }

    pub fn zero(&self) -> FuzzySet {
        FuzzySet::raw(self.clone(), vec![0; self.len()])
    }

    pub fn one(&self) -> FuzzySet {
        FuzzySet::raw(self.clone(), vec![self.denominator(); self.len()])
    }

    /// The constant fuzzy set with value `level`.
    pub fn constant(&self, level: Level) -> Result<FuzzySet, Error> {
        self.set(vec![level.0; self.len()])
    }

    pub fn set(&self, grades: Vec<u16>) -> Result<FuzzySet, Error> {
        if grades.len() != self.len() || grades.iter().any(|g| *g > self.denominator()) {
            return Err(Error::MalformedSet);
        }
        Ok(FuzzySet::raw(self.clone(), grades))
    }

    /// Sparse constructor: listed elements get the given level, the rest 0.
    pub fn set_of(&self, entries: &[(&str, u16)]) -> Result<FuzzySet, Error> {
        let mut grades = vec![0; self.len()];
        for (name, level) in entries {
            let i = self.universe().require(name)?;
            if *level > self.denominator() {
                return Err(Error::MalformedSet);
            }
            grades[i] = grades[i].max(*level);
        }
        Ok(FuzzySet::raw(self.clone(), grades))
    }

    /// The characteristic function `1_A`.
    pub fn crisp(&self, names: &[&str]) -> Result<FuzzySet, Error> {
        let top = self.denominator();
        let entries: Vec<(&str, u16)> = names.iter().map(|n| (*n, top)).collect();
        self.set_of(&entries)
    }

    pub fn crisp_indices(&self, indices: &[usize]) -> FuzzySet {
        let mut grades = vec![0; self.len()];
        for i in indices {
            grades[*i] = self.denominator();
        }
        FuzzySet::raw(self.clone(), grades)
    }

    pub fn point(&self, name: &str, level: u16) -> Result<FuzzyPoint, Error> {
        let support = self.universe().require(name)?;
        self.point_at(support, Level(level))
    }

    pub fn point_at(&self, support: usize, level: Level) -> Result<FuzzyPoint, Error> {
        if support >= self.len() || level.0 == 0 || level.0 > self.denominator() {
            return Err(Error::MalformedSet);
        }
        Ok(FuzzyPoint { support, level })
    }

    /// The fuzzy set induced by a point.
    pub fn point_set(&self, p: FuzzyPoint) -> FuzzySet {
        let mut grades = vec![0; self.len()];
        grades[p.support] = p.level.0;
        FuzzySet::raw(self.clone(), grades)
    }

    /// Every fuzzy point over chain levels, ordered by support then level.
    pub fn points(&self) -> impl Iterator<Item = FuzzyPoint> + '_ {
        let d = self.denominator();
        (0..self.len()).flat_map(move |support| {
            (1..=d).map(move |l| FuzzyPoint {
                support,
                level: Level(l),
            })
        })
    }

    pub fn encode(&self, f: &FuzzySet) -> usize {
        grades::encode(&f.grades, self.radix())
    }

    pub fn decode(&self, code: usize) -> FuzzySet {
        let mut grades = vec![0; self.len()];
        grades::decode_into(code, self.radix(), &mut grades);
        FuzzySet::raw(self.clone(), grades)
    }

    /// All `(D+1)^|X|` fuzzy sets exactly once, in lexicographic order of the
    /// grade vectors (first universe element most significant).
    pub fn enumerate_sets(&self, budget: usize) -> Result<SetIter, Error> {
        let count = self.check_budget(budget)?;
        Ok(SetIter {
            carrier: self.clone(),
            next: 0,
            count,
        })
    }

    pub fn format_point(&self, p: FuzzyPoint) -> String {
        alloc::format!(
            "{}_{}",
            self.universe().name(p.support),
            self.chain().ratio(p.level)
        )
    }
}

pub struct SetIter {
    carrier: Carrier,
    next: usize,
    count: usize,
}

impl Iterator for SetIter {
    type Item = FuzzySet;

    fn next(&mut self) -> Option<FuzzySet> {
        if self.next >= self.count {
            return None;
        }
        let f = self.carrier.decode(self.next);
        self.next += 1;
        Some(f)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = self.count - self.next;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for SetIter {}

/// A total map from the universe to chain levels.
#[derive(Clone, PartialEq, Eq)]
pub struct FuzzySet {
    carrier: Carrier,
    grades: Vec<u16>,
}

impl FuzzySet {
    pub(crate) fn raw(carrier: Carrier, grades: Vec<u16>) -> Self {
        debug_assert_eq!(grades.len(), carrier.len());
        FuzzySet { carrier, grades }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn grades(&self) -> &[u16] {
        &self.grades
    }

    pub fn grade(&self, index: usize) -> Level {
        Level(self.grades[index])
    }

    pub fn grade_of(&self, name: &str) -> Result<Level, Error> {
        Ok(self.grade(self.carrier.universe().require(name)?))
    }

    fn same_carrier(&self, other: &FuzzySet) -> Result<(), Error> {
        if self.carrier == other.carrier {
            Ok(())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    pub fn join(&self, other: &FuzzySet) -> Result<FuzzySet, Error> {
        self.same_carrier(other)?;
        Ok(FuzzySet::raw(
            self.carrier.clone(),
            grades::join(&self.grades, &other.grades),
        ))
    }

    pub fn meet(&self, other: &FuzzySet) -> Result<FuzzySet, Error> {
        self.same_carrier(other)?;
        Ok(FuzzySet::raw(
            self.carrier.clone(),
            grades::meet(&self.grades, &other.grades),
        ))
    }

    /// `Co(f)(x) = 1 - f(x)`.
    pub fn complement(&self) -> FuzzySet {
        FuzzySet::raw(
            self.carrier.clone(),
            grades::complement(&self.grades, self.carrier.denominator()),
        )
    }

    /// Pointwise order.
    pub fn leq(&self, other: &FuzzySet) -> Result<bool, Error> {
        self.same_carrier(other)?;
        Ok(grades::leq(&self.grades, &other.grades))
    }

    /// `x_λ ∈ f`, read as `λ ≤ f(x)`.
    pub fn contains(&self, p: FuzzyPoint) -> Result<bool, Error> {
        if p.support >= self.grades.len() {
            return Err(Error::MalformedSet);
        }
        Ok(p.level.0 <= self.grades[p.support])
    }

    /// Elements with positive membership, as universe indices.
    pub fn support(&self) -> Vec<usize> {
        self.grades
            .iter()
            .enumerate()
            .filter(|(_, g)| **g > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_names(&self) -> Vec<&str> {
        self.support()
            .into_iter()
            .map(|i| self.carrier.universe().name(i))
            .collect()
    }

    /// `{x_{f(x)} : x ∈ supp(f)}`; their join is `f`.
    pub fn maximal_points(&self) -> Vec<FuzzyPoint> {
        self.grades
            .iter()
            .enumerate()
            .filter(|(_, g)| **g > 0)
            .map(|(support, g)| FuzzyPoint {
                support,
                level: Level(*g),
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        grades::is_zero(&self.grades)
    }

    pub fn is_one(&self) -> bool {
        let top = self.carrier.denominator();
        self.grades.iter().all(|g| *g == top)
    }

    /// Returns the single support point if `f` is a fuzzy point.
    pub fn as_point(&self) -> Option<FuzzyPoint> {
        match self.maximal_points().as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }

    /// Join of a family; the empty family joins to `0̲`.
    pub fn join_all<'a>(
        carrier: &Carrier,
        sets: impl IntoIterator<Item = &'a FuzzySet>,
    ) -> Result<FuzzySet, Error> {
        let mut acc = carrier.zero();
        for s in sets {
            if s.carrier != *carrier {
                return Err(Error::CarrierMismatch);
            }
            grades::join_into(&mut acc.grades, &s.grades);
        }
        Ok(acc)
    }

    pub fn code(&self) -> usize {
        self.carrier.encode(self)
    }
}

impl fmt::Display for FuzzySet {
    /// `{p, q=1/2}`: elements at 1 are bare, others carry their level.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top = self.carrier.denominator();
        let chain = self.carrier.chain();
        write!(f, "{{")?;
        let mut first = true;
        for (i, g) in self.grades.iter().enumerate() {
            if *g == 0 {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            let name = self.carrier.universe().name(i);
            if *g == top {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}={}", chain.ratio(Level(*g)))?;
            }
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for FuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `x_λ`: value `λ > 0` at `support`, zero elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FuzzyPoint {
    pub support: usize,
    pub level: Level,
}

impl FuzzyPoint {
    pub fn is_singleton(&self, chain: Chain) -> bool {
        self.level == chain.top()
    }

    /// Distinct means different supports; value alone never distinguishes.
    pub fn is_distinct_from(&self, other: &FuzzyPoint) -> bool {
        self.support != other.support
    }
}
