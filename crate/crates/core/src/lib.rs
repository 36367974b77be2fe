//! Čech fuzzy closure spaces on finite universes.
//!
//! Membership degrees live on a finite rational chain `{0, 1/D, ..., 1}`, which
//! makes the carrier `I^X` finite and every closure axiom, continuity notion and
//! separation axiom decidable by enumeration. The crate is `no_std` and only
//! needs `alloc`.

#![no_std]

extern crate alloc;

pub mod chain;
pub mod closure;
pub mod constructions;
pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod lattice;
pub mod maps;
pub mod separation;
pub mod topology;
pub mod verdict;

mod grades;

pub use chain::{Chain, Level, Ratio};
pub use closure::{
    Axiom, ClosureOperator, FuzzyClosureSpace, NamedOperator, PointClosures, ValidationReport,
    Violation, DEFAULT_MAX_CARRIER,
};
pub use constructions::{product, subspace, sum, ProductSpace};
pub use error::Error;
pub use lattice::{Carrier, FuzzyPoint, FuzzySet, Universe};
pub use maps::SpaceMap;
pub use separation::{classify, SeparationReport};
pub use topology::{FtAxiom, FuzzyTopology};
pub use verdict::{Property, Verdict, Witness};
