//! Decisions with replayable evidence.

use alloc::format;
use alloc::string::String;

use crate::lattice::{Carrier, FuzzyPoint, FuzzySet};
use crate::topology::FtAxiom;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Cft0,
    Cft0Interior,
    Cft1,
    Cfts,
    Cft2,
    Urysohn,
    Regular,
    MashhourRegular,
    Normal,
    Cft3,
    Cft4,
    Continuous,
    ContinuousAt,
    ContinuousByPreimage,
    Homeomorphism,
    Ft(FtAxiom),
}

impl Property {
    pub fn id(self) -> &'static str {
        match self {
            Property::Cft0 => "cft0",
            Property::Cft0Interior => "cft0_interior",
            Property::Cft1 => "cft1",
            Property::Cfts => "cfts",
            Property::Cft2 => "cft2",
            Property::Urysohn => "urysohn",
            Property::Regular => "regular",
            Property::MashhourRegular => "mashhour_regular",
            Property::Normal => "normal",
            Property::Cft3 => "cft3",
            Property::Cft4 => "cft4",
            Property::Continuous => "continuous",
            Property::ContinuousAt => "continuous_at",
            Property::ContinuousByPreimage => "continuous_by_preimage",
            Property::Homeomorphism => "homeomorphism",
            Property::Ft(axiom) => axiom.id(),
        }
    }
}

/// Evidence that a property fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A point alone breaks the property (e.g. a point that is not closed).
    Point(FuzzyPoint),
    /// Two points that cannot be separated.
    Points(FuzzyPoint, FuzzyPoint),
    /// A point and a set that cannot be separated.
    PointSet(FuzzyPoint, FuzzySet),
    /// A single set on which an inequality fails.
    Set(FuzzySet),
    /// Two sets that cannot be separated.
    Sets(FuzzySet, FuzzySet),
    /// A point and a set at which pointwise continuity fails.
    PointAt(FuzzyPoint, FuzzySet),
    /// The ground map is not a bijection.
    NotBijective,
    /// A conjunction failed through one of its parts.
    Component(Property),
}

impl Witness {
    /// Human-readable form; points and sets are named against `carrier`.
    pub fn describe(&self, carrier: &Carrier) -> String {
        let pt = |p: &FuzzyPoint| carrier.format_point(*p);
        match self {
            Witness::Point(p) => pt(p),
            Witness::Points(p, q) => format!("{}, {}", pt(p), pt(q)),
            Witness::PointSet(p, k) | Witness::PointAt(p, k) => format!("{}, {k}", pt(p)),
            Witness::Set(f) => format!("{f}"),
            Witness::Sets(a, b) => format!("{a}, {b}"),
            Witness::NotBijective => "ground map is not bijective".into(),
            Witness::Component(p) => format!("fails {}", p.id()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds(property: Property) -> Self {
        Verdict {
            property,
            holds: true,
            witness: None,
        }
    }

    pub fn fails(property: Property, witness: Witness) -> Self {
        Verdict {
            property,
            holds: false,
            witness: Some(witness),
        }
    }

    pub(crate) fn from_witness(property: Property, witness: Option<Witness>) -> Self {
        match witness {
            None => Verdict::holds(property),
            Some(w) => Verdict::fails(property, w),
        }
    }
}
