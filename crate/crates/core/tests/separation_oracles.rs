use fuzzy_closure_core::enumerate::FgEnumerator;
use fuzzy_closure_core::separation::{self, naive, Analyzer};
use fuzzy_closure_core::topology::FtAxiom;
use fuzzy_closure_core::{corpus, FuzzyClosureSpace};

fn spaces_2_2() -> Vec<FuzzyClosureSpace> {
    FgEnumerator::new(2, 2, 1000).unwrap().iter().collect()
}

#[test]
fn reduced_deciders_match_pair_enumeration() {
    for s in spaces_2_2() {
        let a = Analyzer::new(&s).unwrap();
        assert_eq!(a.cft2(), naive::cft2(&s).unwrap());
        assert_eq!(a.urysohn(), naive::urysohn(&s).unwrap());
        assert_eq!(a.regular(), naive::regular(&s).unwrap());
        assert_eq!(a.mashhour_regular(), naive::mashhour_regular(&s).unwrap());
        assert_eq!(a.normal(), naive::normal(&s).unwrap());
    }
}

#[test]
fn interior_characterization_of_t0() {
    for s in spaces_2_2() {
        let a = Analyzer::new(&s).unwrap();
        assert_eq!(a.cft0().holds, a.cft0_interior().holds);
    }
}

#[test]
fn t1_characterizations_agree() {
    for s in spaces_2_2() {
        let a = Analyzer::new(&s).unwrap();
        let t1 = a.cft1().unwrap().holds;
        assert_eq!(t1, a.singletons_closed());
        assert_eq!(t1, a.points_well_closed());
        let tau = s.associated_topology().unwrap();
        assert_eq!(t1, tau.ft_axiom(FtAxiom::Ft1).holds);
    }
}

#[test]
fn finite_theorems() {
    for s in spaces_2_2() {
        let r = separation::classify(&s).unwrap();
        if r.cfts.holds {
            let c = s.carrier();
            assert!(c.enumerate_sets(100).unwrap().all(|f| s.closure(&f) == f));
        }
        if r.cft1.holds {
            assert!(r.cft2.holds && r.urysohn.holds);
        }
        if r.regular.holds {
            assert!(r.normal.holds);
        }
    }
}

#[test]
fn certificates_replay_against_the_definitions() {
    for s in spaces_2_2() {
        let a = Analyzer::new(&s).unwrap();
        let c = s.carrier();
        for p in c.points() {
            for q in c.points().filter(|q| q.support != p.support) {
                if let Some((f, g)) = a.cft2_certificate(p, q) {
                    assert!(s.is_point_neighborhood(&f, p) && s.is_point_neighborhood(&g, q));
                    assert!(f.leq(&g.complement()).unwrap());
                    assert!(f.leq(&c.point_set(q).complement()).unwrap());
                    assert!(g.leq(&c.point_set(p).complement()).unwrap());
                }
                if let Some((f, g)) = a.urysohn_certificate(p, q) {
                    assert!(s.closure(&f).leq(&s.closure(&g).complement()).unwrap());
                }
            }
            for k in c.enumerate_sets(100).unwrap().skip(1) {
                if let Some(f) = a.mashhour_certificate(p, &k) {
                    assert!(s.is_point_neighborhood(&f, p));
                    assert!(s.closure(&f).leq(&s.interior(&k)).unwrap());
                }
            }
        }
    }
}

#[test]
fn failing_witnesses_replay() {
    let s = corpus::shift_cycle(3, 2).unwrap();
    let a = Analyzer::new(&s).unwrap();
    let v = a.regular();
    let Some(fuzzy_closure_core::Witness::PointSet(p, k)) = v.witness else {
        panic!("regular should fail with a point and a set");
    };
    assert!(p.level.0 + s.closure(&k).grades()[p.support] <= 2);
    assert!(!a.regular_pair_separated(p, &k));
}

#[test]
fn tau_bridges() {
    for s in spaces_2_2() {
        let r = separation::classify(&s).unwrap();
        let tau = s.associated_topology().unwrap();
        if tau.ft_axiom(FtAxiom::Ft0).holds {
            assert!(r.cft0.holds);
        }
        if tau.ft_axiom(FtAxiom::Ft2).holds {
            assert!(r.cft2.holds);
        }
        if tau.ft_axiom(FtAxiom::Ft2Half).holds {
            assert!(r.urysohn.holds);
        }
        if s.is_idempotent().unwrap() {
            assert_eq!(r.cft0.holds, tau.ft_axiom(FtAxiom::Ft0).holds);
            assert_eq!(r.regular.holds, tau.ft_axiom(FtAxiom::Regular).holds);
            assert_eq!(r.normal.holds, tau.ft_axiom(FtAxiom::Normal).holds);
        }
    }
}

#[test]
fn normality_is_not_hereditary() {
    let carrier = fuzzy_closure_core::Carrier::new(
        fuzzy_closure_core::Universe::numbered(2).unwrap(),
        fuzzy_closure_core::Chain::new(3).unwrap(),
    );
    let s = FuzzyClosureSpace::generated(carrier.clone(), |p| match (p.support, p.level.0) {
        (0, _) => carrier.point_set(p),
        (_, 1) => carrier.set(vec![2, 1]).unwrap(),
        _ => carrier.set(vec![2, 3]).unwrap(),
    })
    .unwrap();
    let a = Analyzer::new(&s).unwrap();
    assert!(a.normal().holds);
    assert!(naive::normal(&s).unwrap().holds);

    let sub = fuzzy_closure_core::subspace(&s, &["1"]).unwrap();
    let v = Analyzer::new(&sub).unwrap().normal();
    assert!(!v.holds);
    assert_eq!(v, naive::normal(&sub).unwrap());
}
