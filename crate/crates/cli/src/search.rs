//! Counterexample search over finitely generated spaces.
//!
//! Sizes are visited in order of `n` then `D`, spaces in enumeration order
//! within a size, and the first witness in that order is returned whether or
//! not the scan runs in parallel.

use fuzzy_closure_core::enumerate::FgEnumerator;
use fuzzy_closure_core::separation::Analyzer;
use fuzzy_closure_core::{Error, FtAxiom, FuzzyClosureSpace};
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchProperty {
    /// T0 but not T1.
    T0NotT1,
    /// T1 but not T2; finite T1 spaces are T2, so the search should exhaust.
    T1NotT2,
    NormalNotRegular,
    RegularNotTs,
    /// The associated topology is fuzzy normal but the space is not normal.
    TauNormalNotNormal,
}

impl SearchProperty {
    pub const ALL: [SearchProperty; 5] = [
        SearchProperty::T0NotT1,
        SearchProperty::T1NotT2,
        SearchProperty::NormalNotRegular,
        SearchProperty::RegularNotTs,
        SearchProperty::TauNormalNotNormal,
    ];

    pub fn id(self) -> &'static str {
        match self {
            SearchProperty::T0NotT1 => "t0_not_t1",
            SearchProperty::T1NotT2 => "t1_not_t2",
            SearchProperty::NormalNotRegular => "normal_not_regular",
            SearchProperty::RegularNotTs => "regular_not_ts",
            SearchProperty::TauNormalNotNormal => "tau_normal_not_normal",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.id() == id)
    }

    pub fn test(self, s: &FuzzyClosureSpace) -> Result<bool, Error> {
        let a = Analyzer::new(s)?;
        Ok(match self {
            SearchProperty::T0NotT1 => a.cft0().holds && !a.cft1()?.holds,
            SearchProperty::T1NotT2 => a.cft1()?.holds && !a.cft2().holds,
            SearchProperty::NormalNotRegular => a.normal().holds && !a.regular().holds,
            SearchProperty::RegularNotTs => a.regular().holds && !a.cfts().holds,
            SearchProperty::TauNormalNotNormal => {
                !a.normal().holds && s.associated_topology()?.ft_axiom(FtAxiom::Normal).holds
            }
        })
    }
}

#[derive(Debug, Clone)]
pub struct SearchBounds {
    pub max_n: usize,
    pub max_d: u16,
    /// Largest number of spaces enumerated at one size.
    pub limit: u128,
    pub parallel: bool,
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found {
        n: usize,
        d: u16,
        index: u128,
        space: FuzzyClosureSpace,
        examined: u128,
    },
    Exhausted {
        examined: u128,
    },
}

pub fn search_counterexample(property: SearchProperty, bounds: &SearchBounds) -> Result<SearchOutcome, Error> {
    let mut examined = 0;
    for n in 1..=bounds.max_n {
        for d in 1..=bounds.max_d {
            let spaces = FgEnumerator::new(n, d, bounds.limit)?;
            let check = |i: u128| match property.test(&spaces.nth(i)) {
                Ok(true) => Some(Ok(i)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            };
            let hit = if bounds.parallel {
                let count = u64::try_from(spaces.count()).expect("bounded by the limit");
                (0..count).into_par_iter().find_map_first(|i| check(i as u128))
            } else {
                (0..spaces.count()).find_map(check)
            };
            match hit.transpose()? {
                Some(index) => {
                    return Ok(SearchOutcome::Found {
                        n,
                        d,
                        index,
                        space: spaces.nth(index),
                        examined: examined + index + 1,
                    })
                }
                None => examined += spaces.count(),
            }
        }
    }
    Ok(SearchOutcome::Exhausted { examined })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds(n: usize, d: u16) -> SearchBounds {
        SearchBounds {
            max_n: n,
            max_d: d,
            limit: 1 << 20,
            parallel: true,
        }
    }

    #[test]
    fn t0_not_t1_found_on_three_points() {
        let SearchOutcome::Found { space, .. } = search_counterexample(SearchProperty::T0NotT1, &bounds(3, 1)).unwrap()
        else {
            panic!("expected a witness");
        };
        assert!(SearchProperty::T0NotT1.test(&space).unwrap());
    }

    #[test]
    fn serial_and_parallel_agree() {
        let a = search_counterexample(SearchProperty::RegularNotTs, &bounds(2, 2)).unwrap();
        let b = search_counterexample(SearchProperty::RegularNotTs, &SearchBounds { parallel: false, ..bounds(2, 2) })
            .unwrap();
        match (a, b) {
            (SearchOutcome::Found { index: i, n: n1, d: d1, .. }, SearchOutcome::Found { index: j, n: n2, d: d2, .. }) => {
                assert_eq!((i, n1, d1), (j, n2, d2))
            }
            (SearchOutcome::Exhausted { examined: x }, SearchOutcome::Exhausted { examined: y }) => assert_eq!(x, y),
            _ => panic!("parallel and serial searches differ"),
        }
    }
}
