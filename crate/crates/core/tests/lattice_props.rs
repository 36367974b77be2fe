use fuzzy_closure_core::{Carrier, FuzzySet};
use proptest::prelude::*;

fn carrier(n: usize, d: u16) -> Carrier {
    Carrier::from_names((0..n).map(|i| format!("e{i}")), d).unwrap()
}

fn arb_pair() -> impl Strategy<Value = (Carrier, FuzzySet, FuzzySet)> {
    (1usize..=4, 1u16..=6).prop_flat_map(|(n, d)| {
        let g = proptest::collection::vec(0..=d, n);
        (g.clone(), g).prop_map(move |(a, b)| {
            let c = carrier(n, d);
            let f = c.set(a).unwrap();
            let g = c.set(b).unwrap();
            (c, f, g)
        })
    })
}

proptest! {
    #[test]
    fn de_morgan((_c, f, g) in arb_pair()) {
        prop_assert_eq!(f.join(&g).unwrap().complement(), f.complement().meet(&g.complement()).unwrap());
        prop_assert_eq!(f.meet(&g).unwrap().complement(), f.complement().join(&g.complement()).unwrap());
    }

    #[test]
    fn complement_is_an_involution((_c, f, _g) in arb_pair()) {
        prop_assert_eq!(f.complement().complement(), f);
    }

    #[test]
    fn leq_is_antisymmetric((_c, f, g) in arb_pair()) {
        let both = f.leq(&g).unwrap() && g.leq(&f).unwrap();
        prop_assert_eq!(both, f == g);
    }

    #[test]
    fn join_and_meet_laws((_c, f, g) in arb_pair()) {
        prop_assert_eq!(f.join(&g).unwrap(), g.join(&f).unwrap());
        prop_assert_eq!(f.join(&f).unwrap(), f.clone());
        prop_assert_eq!(f.meet(&f.join(&g).unwrap()).unwrap(), f.clone());
        prop_assert!(f.leq(&f.join(&g).unwrap()).unwrap());
        prop_assert!(f.meet(&g).unwrap().leq(&f).unwrap());
    }

    #[test]
    fn maximal_points_rebuild_the_set((c, f, _g) in arb_pair()) {
        let points: Vec<FuzzySet> = f.maximal_points().into_iter().map(|p| c.point_set(p)).collect();
        prop_assert_eq!(FuzzySet::join_all(&c, &points).unwrap(), f.clone());
        prop_assert_eq!(points.len(), f.support().len());
    }

    #[test]
    fn codes_round_trip((c, f, _g) in arb_pair()) {
        prop_assert_eq!(c.decode(f.code()), f);
    }
}

#[test]
fn complement_involution_exhaustive() {
    let c = carrier(2, 2);
    let all: Vec<FuzzySet> = c.enumerate_sets(100).unwrap().collect();
    assert_eq!(all.len(), 9);
    for f in &all {
        assert_eq!(f.complement().complement(), *f);
        let points: Vec<FuzzySet> = f.maximal_points().into_iter().map(|p| c.point_set(p)).collect();
        assert_eq!(FuzzySet::join_all(&c, &points).unwrap(), *f);
    }
}

#[test]
fn enumeration_is_lexicographic_and_complete() {
    for (n, d, len) in [(1, 1, 2), (2, 2, 9), (3, 4, 125)] {
        let c = carrier(n, d);
        let all: Vec<FuzzySet> = c.enumerate_sets(1000).unwrap().collect();
        assert_eq!(all.len(), len);
        for w in all.windows(2) {
            assert!(w[0].grades() < w[1].grades());
        }
    }
}
