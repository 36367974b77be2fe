use fuzzy_closure_core::enumerate::FgEnumerator;
use fuzzy_closure_core::{Carrier, ClosureOperator, FuzzyClosureSpace, FuzzySet};

fn fg_spaces(n: usize, d: u16) -> Vec<FuzzyClosureSpace> {
    FgEnumerator::new(n, d, 10_000).unwrap().iter().collect()
}

fn small_spaces() -> Vec<FuzzyClosureSpace> {
    let mut out = Vec::new();
    for (n, d) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        out.extend(fg_spaces(n, d));
    }
    out
}

/// Every table operator on the carrier, kept when it validates.
fn table_filter(n: usize, d: u16) -> usize {
    let c = Carrier::from_names((0..n).map(|i| i.to_string()), d).unwrap();
    let count = c.set_count() as u32;
    let mut valid = 0;
    let mut table = vec![0u32; count as usize];
    loop {
        let s = FuzzyClosureSpace::unvalidated(c.clone(), ClosureOperator::Table(table.clone())).unwrap();
        if s.validate().unwrap().passed() {
            valid += 1;
        }
        let Some(pos) = table.iter().position(|v| *v + 1 < count) else {
            return valid;
        };
        table[pos] += 1;
        for v in &mut table[..pos] {
            *v = 0;
        }
    }
}

#[test]
fn enumeration_counts_match_table_filter() {
    for (n, d) in [(1, 1), (1, 2), (2, 1)] {
        let e = FgEnumerator::new(n, d, 10_000).unwrap();
        assert_eq!(e.count(), table_filter(n, d) as u128, "n={n} d={d}");
    }
}

#[test]
fn interior_theorem_on_all_small_spaces() {
    for s in small_spaces() {
        let c = s.carrier().clone();
        let all: Vec<FuzzySet> = c.enumerate_sets(100).unwrap().collect();
        assert!(s.interior(&c.one()).is_one());
        for f in &all {
            let int_f = s.interior(f);
            assert!(int_f.leq(f).unwrap());
            assert_eq!(s.is_open(f), int_f == *f);
            // open iff a neighborhood of each of its points
            let nbhd_of_points = c
                .points()
                .filter(|p| f.contains(*p).unwrap())
                .all(|p| s.is_point_neighborhood(f, p));
            assert_eq!(s.is_open(f), nbhd_of_points);
            for g in &all {
                assert_eq!(s.interior(&f.meet(g).unwrap()), int_f.meet(&s.interior(g)).unwrap());
                if f.leq(g).unwrap() {
                    assert!(int_f.leq(&s.interior(g)).unwrap());
                    assert!(s.closure(f).leq(&s.closure(g)).unwrap());
                }
            }
            assert_eq!(s.closure_from_interior(f), s.closure(f));
        }
    }
}

#[test]
fn associated_topology_is_chang_and_matches_fixed_points() {
    for s in small_spaces() {
        let t = s.associated_topology().unwrap();
        assert!(t.validate_chang().passed());
        for f in s.carrier().enumerate_sets(100).unwrap() {
            assert_eq!(t.is_closed(&f), s.is_closed(&f));
        }
        if s.is_idempotent().unwrap() {
            for f in s.carrier().enumerate_sets(100).unwrap() {
                assert_eq!(t.fts_closure(&f), s.closure(&f));
            }
        }
    }
}

#[test]
fn coarseness_is_a_partial_order() {
    let spaces = fg_spaces(2, 1);
    let c = spaces[0].carrier().clone();
    let bottom = FuzzyClosureSpace::indiscrete(c.clone());
    let top = FuzzyClosureSpace::discrete(c);
    for a in &spaces {
        assert!(bottom.coarser_leq(a).unwrap());
        assert!(a.coarser_leq(&top).unwrap());
        assert!(a.coarser_leq(a).unwrap());
        for b in &spaces {
            if a.coarser_leq(b).unwrap() && b.coarser_leq(a).unwrap() {
                assert_eq!(a.point_closures(), b.point_closures());
            }
            for m in &spaces {
                if a.coarser_leq(b).unwrap() && b.coarser_leq(m).unwrap() {
                    assert!(a.coarser_leq(m).unwrap());
                }
            }
        }
    }
}

#[test]
fn chain_embeds_into_its_double() {
    // lifting point closures by doubling levels agrees with the original on
    // every set of the coarser chain
    for s in fg_spaces(2, 1).into_iter().chain(fg_spaces(1, 2)) {
        let c = s.carrier();
        let d = c.denominator();
        let fine = Carrier::from_names(c.universe().names().iter().cloned(), 2 * d).unwrap();
        let lifted = FuzzyClosureSpace::generated(fine.clone(), |p| {
            let coarse = fuzzy_closure_core::FuzzyPoint {
                support: p.support,
                level: fuzzy_closure_core::Level(p.level.0.div_ceil(2)),
            };
            let g: Vec<u16> = s.point_closure(coarse).grades().iter().map(|v| v * 2).collect();
            fine.set(g).unwrap()
        })
        .unwrap();
        for f in c.enumerate_sets(100).unwrap() {
            let up = fine.set(f.grades().iter().map(|v| v * 2).collect()).unwrap();
            let expected: Vec<u16> = s.closure(&f).grades().iter().map(|v| v * 2).collect();
            assert_eq!(lifted.closure(&up).grades(), expected.as_slice());
        }
    }
}
