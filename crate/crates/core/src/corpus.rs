//! Named example spaces. Infinite index sets are replaced by paths (the
//! successor of the last element is itself) and cycles (successor mod n).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::chain::{Chain, Level};
use crate::closure::{ClosureOperator, FuzzyClosureSpace, PointClosures};
use crate::error::Error;
use crate::lattice::{Carrier, FuzzyPoint, Universe};
use crate::maps::SpaceMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExampleId {
    Discrete,
    Indiscrete,
    PqrInterior,
    Cycle3,
    Cycle4Rotation,
    ShiftPath,
    ShiftCycle,
    CrispShiftCycle,
    UrysohnNotRegular,
    SingletonClosure,
    TwoBlockNormal,
}

impl ExampleId {
    pub const ALL: [ExampleId; 11] = [
        ExampleId::Discrete,
        ExampleId::Indiscrete,
        ExampleId::PqrInterior,
        ExampleId::Cycle3,
        ExampleId::Cycle4Rotation,
        ExampleId::ShiftPath,
        ExampleId::ShiftCycle,
        ExampleId::CrispShiftCycle,
        ExampleId::UrysohnNotRegular,
        ExampleId::SingletonClosure,
        ExampleId::TwoBlockNormal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExampleId::Discrete => "discrete",
            ExampleId::Indiscrete => "indiscrete",
            ExampleId::PqrInterior => "pqr_interior",
            ExampleId::Cycle3 => "cycle3_xyz",
            ExampleId::Cycle4Rotation => "cycle4_pqrs",
            ExampleId::ShiftPath => "shift_path",
            ExampleId::ShiftCycle => "shift_cycle",
            ExampleId::CrispShiftCycle => "crisp_shift_cycle",
            ExampleId::UrysohnNotRegular => "urysohn_not_regular",
            ExampleId::SingletonClosure => "singleton_closure",
            ExampleId::TwoBlockNormal => "two_block_normal",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        ExampleId::ALL.into_iter().find(|id| id.name() == name)
    }

    /// Whether the universe size is a parameter.
    pub fn sized(self) -> bool {
        !matches!(
            self,
            ExampleId::PqrInterior | ExampleId::Cycle3 | ExampleId::Cycle4Rotation
        )
    }

    /// Smallest chain denominator the example accepts.
    pub fn default_denominator(self) -> u16 {
        match self {
            ExampleId::UrysohnNotRegular => 20,
            _ => 2,
        }
    }
}

pub enum Example {
    Space(FuzzyClosureSpace),
    Map(SpaceMap),
}

/// `n` is ignored by examples with a fixed universe.
pub fn build_example(id: ExampleId, n: usize, d: u16) -> Result<Example, Error> {
    let space = match id {
        ExampleId::Discrete => discrete(n, d)?,
        ExampleId::Indiscrete => indiscrete(n, d)?,
        ExampleId::PqrInterior => pqr_interior(d)?,
        ExampleId::Cycle3 => cycle3(d)?,
        ExampleId::Cycle4Rotation => return cycle4_rotation(d).map(|(_, m)| Example::Map(m)),
        ExampleId::ShiftPath => shift_path(n, d)?,
        ExampleId::ShiftCycle => shift_cycle(n, d)?,
        ExampleId::CrispShiftCycle => crisp_shift_cycle(n, d)?,
        ExampleId::UrysohnNotRegular => urysohn_not_regular(n, d)?,
        ExampleId::SingletonClosure => singleton_closure(n, d)?,
        ExampleId::TwoBlockNormal => two_block_normal(n, d)?,
    };
    Ok(Example::Space(space))
}

fn numbered(n: usize, d: u16) -> Result<Carrier, Error> {
    Ok(Carrier::new(Universe::numbered(n)?, Chain::new(d)?))
}

fn named(names: &[&str], d: u16) -> Result<Carrier, Error> {
    Carrier::from_names(names.iter().copied(), d)
}

/// A space whose point closures are crisp sets given by element indices.
fn crisp_points(carrier: Carrier, mut closure: impl FnMut(usize) -> Vec<usize>) -> Result<FuzzyClosureSpace, Error> {
    let c = carrier.clone();
    FuzzyClosureSpace::generated(carrier, move |p| c.crisp_indices(&closure(p.support)))
}

/// `x_λ ↦ x_λ ∨ succ(x)_λ`.
fn shift(carrier: Carrier, succ: impl Fn(usize) -> usize) -> Result<FuzzyClosureSpace, Error> {
    let c = carrier.clone();
    FuzzyClosureSpace::generated(carrier, move |p| {
        let mut g = vec![0; c.len()];
        g[p.support] = p.level.0;
        g[succ(p.support)] = p.level.0;
        c.set(g).expect("levels on the chain")
    })
}

pub fn discrete(n: usize, d: u16) -> Result<FuzzyClosureSpace, Error> {
    Ok(FuzzyClosureSpace::discrete(numbered(n, d)?))
}

pub fn indiscrete(n: usize, d: u16) -> Result<FuzzyClosureSpace, Error> {
    Ok(FuzzyClosureSpace::indiscrete(numbered(n, d)?))
}

/// On `{p, q, r}`: `c(p_λ) = 1_{p,q}`, `c(q_λ) = c(r_λ) = 1̲`.
pub fn pqr_interior(d: u16) -> Result<FuzzyClosureSpace, Error> {
    crisp_points(named(&["p", "q", "r"], d)?, |x| {
        if x == 0 {
            vec![0, 1]
        } else {
            vec![0, 1, 2]
        }
    })
}

/// On `{x, y, z}`: `c(x_λ) = 1_{x,y}`, `c(y_λ) = 1_{y,z}`, `c(z_λ) = 1_{z,x}`.
pub fn cycle3(d: u16) -> Result<FuzzyClosureSpace, Error> {
    crisp_points(named(&["x", "y", "z"], d)?, |x| vec![x, (x + 1) % 3])
}

/// On `{p, q, r, s}` with `c(x_λ) = 1_{x, next(x)}`, and the rotation
/// `p → q → r → s → p`.
pub fn cycle4_rotation(d: u16) -> Result<(FuzzyClosureSpace, SpaceMap), Error> {
    let space = crisp_points(named(&["p", "q", "r", "s"], d)?, |x| vec![x, (x + 1) % 4])?;
    let rotation = SpaceMap::new(space.clone(), space.clone(), vec![1, 2, 3, 0])?;
    Ok((space, rotation))
}

/// `c(x_λ) = x_λ ∨ (x+1)_λ` on `0..n`, the last element closing to itself.
pub fn shift_path(n: usize, d: u16) -> Result<FuzzyClosureSpace, Error> {
    shift(numbered(n, d)?, move |x| (x + 1).min(n - 1))
}

/// `c(x_λ) = x_λ ∨ (x+1 mod n)_λ`.
pub fn shift_cycle(n: usize, d: u16) -> Result<FuzzyClosureSpace, Error> {
    shift(numbered(n, d)?, move |x| (x + 1) % n)
}

/// `c(x_λ) = 1_{x, x+1 mod n}`.
pub fn crisp_shift_cycle(n: usize, d: u16) -> Result<FuzzyClosureSpace, Error> {
    crisp_points(numbered(n, d)?, move |x| vec![x, (x + 1) % n])
}

/// Element `0` has `c(0_λ) = 0_{λ+1/2}` for `λ < 1/2` and `0_1` otherwise;
/// every other element is discrete. Needs `D` divisible by 20 so that the
/// levels 0.05, 0.4, 0.45, 0.55 and 0.9 exist.
pub fn urysohn_not_regular(n: usize, d: u16) -> Result<FuzzyClosureSpace, Error> {
    if d % 20 != 0 {
        return Err(Error::Unrepresentable(format!(
            "denominator {d} is not a multiple of 20"
        )));
    }
    if n < 2 {
        return Err(Error::Unrepresentable("needs at least two elements".into()));
    }
    let carrier = numbered(n, d)?;
    let c = carrier.clone();
    let half = d / 2;
    FuzzyClosureSpace::generated(carrier, move |p| {
        let level = if p.support == 0 && p.level.0 < half {
            p.level.0 + half
        } else if p.support == 0 {
            d
        } else {
            p.level.0
        };
        c.point_set(FuzzyPoint {
            support: p.support,
            level: Level(level),
        })
    })
}

/// `c(f) = ⋁_{x_λ ≤ f} x_1`.
pub fn singleton_closure(n: usize, d: u16) -> Result<FuzzyClosureSpace, Error> {
    crisp_points(numbered(n, d)?, |x| vec![x])
}

/// `c(0_λ) = 0_1` and `c(y_λ) = Co(0_1)` for every other `y`.
pub fn two_block_normal(n: usize, d: u16) -> Result<FuzzyClosureSpace, Error> {
    if n < 2 {
        return Err(Error::Unrepresentable("needs at least two elements".into()));
    }
    crisp_points(numbered(n, d)?, move |x| {
        if x == 0 {
            vec![0]
        } else {
            (1..n).collect()
        }
    })
}

/// The same operator on a renamed universe.
pub fn relabel(s: &FuzzyClosureSpace, names: &[&str]) -> Result<FuzzyClosureSpace, Error> {
    if names.len() != s.carrier().len() {
        return Err(Error::Construction("one new name per element".into()));
    }
    let carrier = Carrier::new(
        Universe::new(names.iter().map(|n| String::from(*n)))?,
        s.carrier().chain(),
    );
    let entries = s
        .carrier()
        .points()
        .map(|p| s.point_closure(p).grades().to_vec())
        .collect();
    let points = PointClosures::new(&carrier, entries)?;
    FuzzyClosureSpace::new(carrier, ClosureOperator::Generated(points))
}
