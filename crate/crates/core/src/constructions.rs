//! Subspaces, disjoint sums and finite products.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::closure::{ClosureOperator, FuzzyClosureSpace, PointClosures};
use crate::error::Error;
use crate::grades;
use crate::lattice::{Carrier, FuzzyPoint, FuzzySet, Universe};
use crate::maps::SpaceMap;

/// The subspace on `elements`, re-rooted on those elements:
/// `c_A(f) = 1_A ∧ c(f)` with `f` extended by zero.
pub fn subspace(s: &FuzzyClosureSpace, elements: &[&str]) -> Result<FuzzyClosureSpace, Error> {
    let mut indices = Vec::with_capacity(elements.len());
    for name in elements {
        indices.push(s.carrier().universe().require(name)?);
    }
    subspace_at(s, &indices)
}

/// [`subspace`] by element index; the subspace keeps the parent's order.
pub fn subspace_at(s: &FuzzyClosureSpace, indices: &[usize]) -> Result<FuzzyClosureSpace, Error> {
    let mut indices = indices.to_vec();
    indices.sort_unstable();
    indices.dedup();
    if indices.is_empty() {
        return Err(Error::Construction("a subspace needs at least one element".into()));
    }
    let parent = s.carrier();
    if indices.iter().any(|i| *i >= parent.len()) {
        return Err(Error::Construction("subspace element out of range".into()));
    }
    let names = indices.iter().map(|i| String::from(parent.universe().name(*i)));
    let carrier = Carrier::new(Universe::new(names)?, parent.chain());
    let points = PointClosures::from_fn(&carrier, |p| {
        let lifted = FuzzyPoint {
            support: indices[p.support],
            level: p.level,
        };
        let closure = s.point_closure(lifted);
        carrier
            .set(indices.iter().map(|i| closure.grades()[*i]).collect())
            .expect("restriction stays on the chain")
    })?;
    FuzzyClosureSpace::new(carrier, ClosureOperator::Generated(points))
        .map(|t| t.with_budget(s.budget()))
}

/// Disjoint sum: `⊕c(f) = ⋁_t c_t(1_{X_t} ∧ f)`. Blocks occupy consecutive
/// indices in the order given.
pub fn sum(spaces: &[FuzzyClosureSpace]) -> Result<FuzzyClosureSpace, Error> {
    let first = spaces
        .first()
        .ok_or_else(|| Error::Construction("a sum needs at least one space".into()))?;
    let chain = first.carrier().chain();
    if spaces.iter().any(|s| s.carrier().chain() != chain) {
        return Err(Error::CarrierMismatch);
    }
    let names: Vec<String> = spaces
        .iter()
        .flat_map(|s| s.carrier().universe().names().iter().cloned())
        .collect();
    let universe = Universe::new(names).map_err(|e| match e {
        Error::DuplicateElement(name) => {
            Error::Construction(format!("summands overlap in {name}"))
        }
        other => other,
    })?;
    let carrier = Carrier::new(universe, chain);
    let mut entries = Vec::with_capacity(carrier.len() * chain.denominator() as usize);
    let mut offset = 0;
    for s in spaces {
        let block = s.point_closures();
        for p in s.carrier().points() {
            let mut g = vec![0; carrier.len()];
            g[offset..offset + s.carrier().len()].copy_from_slice(block.entry(p));
            entries.push(g);
        }
        offset += s.carrier().len();
    }
    let points = PointClosures::new(&carrier, entries)?;
    FuzzyClosureSpace::new(carrier, ClosureOperator::Generated(points))
        .map(|t| t.with_budget(first.budget()))
}

/// A finite product with its tuple universe. Element `i` of the product is
/// the tuple of coordinates read in mixed radix, first factor most significant.
#[derive(Debug, Clone)]
pub struct ProductSpace {
    space: FuzzyClosureSpace,
    factors: Vec<FuzzyClosureSpace>,
}

/// The product closure space, built from the closed form
/// `⊗c(f) = ⋁_{y ∈ supp f} ∏_t c_t(y^t_{f(y)})`.
pub fn product(spaces: &[FuzzyClosureSpace]) -> Result<ProductSpace, Error> {
    let first = spaces
        .first()
        .ok_or_else(|| Error::Construction("a product needs at least one factor".into()))?;
    let chain = first.carrier().chain();
    if spaces.iter().any(|s| s.carrier().chain() != chain) {
        return Err(Error::CarrierMismatch);
    }
    let size = spaces
        .iter()
        .try_fold(1usize, |acc, s| acc.checked_mul(s.carrier().len()))
        .filter(|n| *n <= first.budget())
        .ok_or(Error::Budget {
            required: spaces.iter().map(|s| s.carrier().len() as u128).product(),
            limit: first.budget(),
        })?;
    let mut names = Vec::with_capacity(size);
    let mut coords = vec![0; spaces.len()];
    for i in 0..size {
        decode_tuple(spaces, i, &mut coords);
        let parts: Vec<&str> = spaces
            .iter()
            .zip(&coords)
            .map(|(s, x)| s.carrier().universe().name(*x))
            .collect();
        names.push(format!("({})", parts.join(",")));
    }
    let carrier = Carrier::new(Universe::new(names)?, chain);
    let closures: Vec<PointClosures> = spaces.iter().map(FuzzyClosureSpace::point_closures).collect();
    let mut entries = Vec::with_capacity(size * chain.denominator() as usize);
    let mut other = vec![0; spaces.len()];
    for y in 0..size {
        decode_tuple(spaces, y, &mut coords);
        for level in 1..=chain.denominator() {
            let g = (0..size)
                .map(|z| {
                    decode_tuple(spaces, z, &mut other);
                    (0..spaces.len())
                        .map(|t| closures[t].entry_raw(coords[t], level)[other[t]])
                        .min()
                        .unwrap_or(0)
                })
                .collect();
            entries.push(g);
        }
    }
    let points = PointClosures::new(&carrier, entries)?;
    let space = FuzzyClosureSpace::new(carrier, ClosureOperator::Generated(points))?
        .with_budget(first.budget());
    Ok(ProductSpace {
        space,
        factors: spaces.to_vec(),
    })
}

fn decode_tuple(spaces: &[FuzzyClosureSpace], mut index: usize, out: &mut [usize]) {
    for (t, s) in spaces.iter().enumerate().rev() {
        let n = s.carrier().len();
        out[t] = index % n;
        index /= n;
    }
}

impl ProductSpace {
    pub fn space(&self) -> &FuzzyClosureSpace {
        &self.space
    }

    pub fn factors(&self) -> &[FuzzyClosureSpace] {
        &self.factors
    }

    pub fn coordinates(&self, element: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        decode_tuple(&self.factors, element, &mut out);
        out
    }

    pub fn element(&self, coordinates: &[usize]) -> usize {
        self.factors
            .iter()
            .zip(coordinates)
            .fold(0, |acc, (s, x)| acc * s.carrier().len() + x)
    }

    /// `∏_t S_t`: membership `min_t S_t(coordinate_t)`.
    pub fn product_set(&self, sets: &[FuzzySet]) -> Result<FuzzySet, Error> {
        if sets.len() != self.factors.len()
            || sets.iter().zip(&self.factors).any(|(f, s)| f.carrier() != s.carrier())
        {
            return Err(Error::CarrierMismatch);
        }
        let grades = (0..self.space.carrier().len())
            .map(|z| {
                self.coordinates(z)
                    .iter()
                    .zip(sets)
                    .map(|(x, f)| f.grades()[*x])
                    .min()
                    .unwrap_or(0)
            })
            .collect();
        self.space.carrier().set(grades)
    }

    pub fn projection_map(&self, t: usize) -> Result<SpaceMap, Error> {
        self.projection_from(self.space.clone(), t)
    }

    /// The projection onto factor `t`, with any closure space on the product
    /// universe as its source.
    pub fn projection_from(&self, source: FuzzyClosureSpace, t: usize) -> Result<SpaceMap, Error> {
        let factor = self
            .factors
            .get(t)
            .ok_or_else(|| Error::Construction(format!("no factor {t}")))?;
        if source.carrier() != self.space.carrier() {
            return Err(Error::CarrierMismatch);
        }
        let ground = (0..self.space.carrier().len())
            .map(|z| self.coordinates(z)[t])
            .collect();
        SpaceMap::new(source, factor.clone(), ground)
    }

    fn project_point(&self, p: FuzzyPoint, t: usize) -> FuzzyPoint {
        FuzzyPoint {
            support: self.coordinates(p.support)[t],
            level: p.level,
        }
    }

    /// Decides `p ≤ ⊗c(f)` from the definition through its reduction to
    /// maximal points: `p` is in the closure iff some maximal point
    /// `y_{f(y)}` of `f` has `P_t(p) ≤ c_t(y^t_{f(y)})` for every `t`.
    pub fn product_closure_oracle(&self, f: &FuzzySet, p: FuzzyPoint) -> bool {
        f.maximal_points().into_iter().any(|y| {
            (0..self.factors.len()).all(|t| {
                let target = self.project_point(p, t);
                let closure = self.factors[t].point_closure(self.project_point(y, t));
                p.level.0 <= closure.grades()[target.support]
            })
        })
    }

    /// Decides `p ≤ ⊗c(f)` literally: every decomposition
    /// `f = f_1 ∨ ... ∨ f_n` into `parts` pieces below `f` (zero and repeated
    /// pieces allowed) has a piece with `P_t(p) ≤ c_t(P_t(f_i))` for all `t`.
    pub fn product_closure_by_decompositions(&self, f: &FuzzySet, p: FuzzyPoint, parts: usize) -> bool {
        let below: Vec<Vec<u16>> = sets_below(f);
        let good: Vec<bool> = below
            .iter()
            .map(|g| {
                (0..self.factors.len()).all(|t| {
                    let projection = self.projection_map(t).expect("valid factor");
                    let image = projection.image(&self.space.carrier().set(g.clone()).expect("on chain"));
                    let target = self.project_point(p, t);
                    p.level.0 <= self.factors[t].closure(&image).grades()[target.support]
                })
            })
            .collect();
        // nondecreasing index sequences enumerate multisets of parts
        let mut chosen = vec![0usize; parts];
        loop {
            let mut joined = vec![0; f.grades().len()];
            for i in &chosen {
                grades::join_into(&mut joined, &below[*i]);
            }
            if joined == f.grades() && !chosen.iter().any(|i| good[*i]) {
                return false;
            }
            let Some(pos) = (0..parts).rev().find(|k| chosen[*k] + 1 < below.len()) else {
                return true;
            };
            let next = chosen[pos] + 1;
            for slot in &mut chosen[pos..] {
                *slot = next;
            }
        }
    }
}

fn sets_below(f: &FuzzySet) -> Vec<Vec<u16>> {
    let mut out = vec![vec![0; f.grades().len()]];
    for (x, top) in f.grades().iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * (*top as usize + 1));
        for g in &out {
            for level in 0..=*top {
                let mut h = g.clone();
                h[x] = level;
                next.push(h);
            }
        }
        out = next;
    }
    out
}

/// Zero-extension of a set on a subspace back to the parent carrier.
pub fn extend_by_zero(f: &FuzzySet, parent: &Carrier) -> Result<FuzzySet, Error> {
    let mut grades = vec![0; parent.len()];
    for (i, g) in f.grades().iter().enumerate() {
        grades[parent.universe().require(f.carrier().universe().name(i))?] = *g;
    }
    parent.set(grades)
}

/// `1_A ∧ f`, read as a set on the sub-carrier.
pub fn restrict(f: &FuzzySet, sub: &Carrier) -> Result<FuzzySet, Error> {
    let parent = f.carrier();
    let grades = sub
        .universe()
        .names()
        .iter()
        .map(|name| parent.universe().require(name).map(|i| f.grades()[i]))
        .collect::<Result<Vec<_>, _>>()?;
    sub.set(grades)
}
