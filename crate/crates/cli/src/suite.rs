//! The theorem suite: every proven property of the deciders, run as a
//! universally quantified check over an exhaustive tier (all finitely
//! generated spaces up to a size bound) and a seeded random tier.
//!
//! Work is spread with rayon but every check reports the first failure in
//! case order, so parallel and serial runs produce the same report.

use std::time::{Duration, Instant};

use fuzzy_closure_core::constructions::{product, subspace_at, sum};
use fuzzy_closure_core::enumerate::FgEnumerator;
use fuzzy_closure_core::separation::{self, naive, Analyzer};
use fuzzy_closure_core::{
    corpus, Carrier, ClosureOperator, Error, FtAxiom, FuzzyClosureSpace, FuzzyPoint, FuzzySet,
    PointClosures, Property, SeparationReport, SpaceMap, Verdict,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::document::{MapDocument, SpaceDocument};
use crate::random::{self, FgSampler};

/// Deliberately broken deciders, for checking that the suite notices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mutation {
    /// The T1 verdict is replaced by `holds` on every space.
    Cft1AlwaysHolds,
    /// The regular verdict is replaced by the normal verdict.
    RegularFromNormal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub exhaustive_n: usize,
    pub exhaustive_d: u16,
    pub random_n: usize,
    pub random_d: u16,
    pub samples: usize,
    pub seed: u64,
    /// Theorem ids to run; all when `None`.
    pub theorems: Option<Vec<String>>,
    pub mutation: Option<Mutation>,
    #[serde(skip)]
    pub parallel: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            exhaustive_n: 2,
            exhaustive_d: 2,
            random_n: 3,
            random_d: 4,
            samples: 500,
            seed: 0,
            theorems: None,
            mutation: None,
            parallel: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Document {
    Space(SpaceDocument),
    Map(MapDocument),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub tier: String,
    pub case: usize,
    pub detail: String,
    pub documents: Vec<Document>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremResult {
    pub id: String,
    pub statement: String,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub passed: bool,
    pub theorems: Vec<TheoremResult>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports serialize");
        text.push('\n');
        text
    }

    pub fn get(&self, id: &str) -> Option<&TheoremResult> {
        self.theorems.iter().find(|t| t.id == id)
    }
}

type SpaceCheck = fn(&Case, &Ctx) -> Result<(), String>;

enum Kind {
    /// Checked on every space of both tiers.
    Space(SpaceCheck),
    /// Checked on the exhaustive tier only.
    ExhaustiveSpace(SpaceCheck),
    /// Quantifies over its own family of cases.
    Custom(fn(&Ctx) -> Outcome),
}

pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    kind: Kind,
}

pub const THEOREMS: &[Theorem] = &[
    Theorem {
        id: "interior_properties",
        statement: "int(1)=1, int f ≤ f, int(f∧g)=int f∧int g, monotone, open iff int f=f, open iff neighborhood of its points",
        kind: Kind::Space(interior_properties),
    },
    Theorem {
        id: "closure_from_interior",
        statement: "c(f) = Co(int(Co f))",
        kind: Kind::Space(closure_from_interior),
    },
    Theorem {
        id: "tau_chang",
        statement: "the associated family is a Chang fuzzy topology whose closed sets are the fixed points of c",
        kind: Kind::Space(tau_chang),
    },
    Theorem {
        id: "t1_equivalences",
        statement: "T1 iff singletons closed iff every point well closed iff the associated topology is FT1",
        kind: Kind::Space(t1_equivalences),
    },
    Theorem {
        id: "t0_interior",
        statement: "T0 by neighborhoods iff T0 by interiors",
        kind: Kind::Space(t0_interior),
    },
    Theorem {
        id: "implication_lattice",
        statement: "Ts⇒T1, T2⇒T1⇒T0, Urysohn⇒T2, T3⇒T2, T4⇒T3, Mashhour-regular⇒regular",
        kind: Kind::Space(implication_lattice),
    },
    Theorem {
        id: "finite_theorems",
        statement: "finite Ts spaces are discrete; finite T1 spaces are T2 and Urysohn",
        kind: Kind::Space(finite_theorems),
    },
    Theorem {
        id: "fg_regular_normal",
        statement: "finitely generated regular spaces are normal",
        kind: Kind::Space(fg_regular_normal),
    },
    Theorem {
        id: "hereditary",
        statement: "T0, T1, T2, Urysohn and regular pass to every subspace",
        kind: Kind::Space(hereditary),
    },
    Theorem {
        id: "hereditary_normal",
        statement: "normal passes to every subspace",
        kind: Kind::Space(hereditary_normal),
    },
    Theorem {
        id: "tau_bridges",
        statement: "FT0⇒T0, FT2⇒T2, FT2½⇒Urysohn for the associated topology; T0, regular, normal agree with it for idempotent c",
        kind: Kind::Space(tau_bridges),
    },
    Theorem {
        id: "homeomorphism_invariance",
        statement: "relabeling is a homeomorphism that preserves every axiom and commutes with interiors",
        kind: Kind::Space(homeomorphism_invariance),
    },
    Theorem {
        id: "reduced_deciders",
        statement: "the reduced T2, Urysohn, regular, Mashhour-regular and normal deciders agree with pair enumeration",
        kind: Kind::ExhaustiveSpace(reduced_deciders),
    },
    Theorem {
        id: "coarseness_monotonicity",
        statement: "c1 ≤ c2 and c1 is T0 / T1 / T2 implies c2 is",
        kind: Kind::Custom(coarseness_monotonicity),
    },
    Theorem {
        id: "sum_theorems",
        statement: "a sum is T0 / T1 / T2 / Urysohn / regular / normal iff every summand is",
        kind: Kind::Custom(sum_theorems),
    },
    Theorem {
        id: "sum_interior",
        statement: "the interior in a sum is the join of the summand interiors",
        kind: Kind::Custom(sum_interior),
    },
    Theorem {
        id: "product_points",
        statement: "product point closures are products of factor point closures; T0 factors give a T0 product; the product is T1 iff every factor is",
        kind: Kind::Custom(product_points),
    },
    Theorem {
        id: "product_decompositions",
        statement: "the closed-form product closure agrees with the decomposition definition",
        kind: Kind::Custom(product_decompositions),
    },
    Theorem {
        id: "coarsest_product",
        statement: "every operator on the product set with continuous projections is finer than the product",
        kind: Kind::Custom(coarsest_product),
    },
    Theorem {
        id: "continuity_equivalences",
        statement: "continuity iff the preimage characterization iff continuity at every point",
        kind: Kind::Custom(continuity_equivalences),
    },
    Theorem {
        id: "homeomorphism_equivalence",
        statement: "a homeomorphism is exactly a continuous bijection with continuous inverse",
        kind: Kind::Custom(homeomorphism_equivalence),
    },
];

/// One space in the quantifier domain of a space theorem.
pub struct Case {
    pub tier: &'static str,
    pub index: usize,
    pub space: FuzzyClosureSpace,
    report: Result<SeparationReport, String>,
}

impl Case {
    fn report(&self) -> Result<&SeparationReport, String> {
        self.report.as_ref().map_err(Clone::clone)
    }
}

pub struct Ctx {
    config: SuiteConfig,
    exhaustive: Vec<Case>,
    random: Vec<Case>,
}

#[derive(Debug, Clone)]
struct Outcome {
    cases: usize,
    failure: Option<Counterexample>,
}

/// Verdicts under the configured mutation.
pub fn classify_with(s: &FuzzyClosureSpace, mutation: Option<Mutation>) -> Result<SeparationReport, Error> {
    let mut report = separation::classify(s)?;
    match mutation {
        Some(Mutation::Cft1AlwaysHolds) => report.cft1 = Verdict::holds(Property::Cft1),
        Some(Mutation::RegularFromNormal) => {
            report.regular = Verdict {
                property: Property::Regular,
                ..report.normal.clone()
            }
        }
        None => {}
    }
    Ok(report)
}

impl Ctx {
    fn classify(&self, s: &FuzzyClosureSpace) -> Result<SeparationReport, String> {
        classify_with(s, self.config.mutation).map_err(|e| e.to_string())
    }

    fn case(&self, tier: &'static str, index: usize, space: FuzzyClosureSpace) -> Case {
        let report = self.classify(&space);
        Case {
            tier,
            index,
            space,
            report,
        }
    }

    fn stream(&self, label: u64) -> ChaCha8Rng {
        let mut r = random::rng(self.config.seed);
        r.set_stream(label);
        r
    }

    /// The first failure in case order.
    fn first_failure<T: Sync>(
        &self,
        items: &[T],
        check: impl Fn(usize, &T) -> Option<Counterexample> + Sync,
    ) -> Outcome {
        let failure = if self.config.parallel {
            items
                .par_iter()
                .enumerate()
                .find_map_first(|(i, t)| check(i, t))
        } else {
            items.iter().enumerate().find_map(|(i, t)| check(i, t))
        };
        Outcome {
            cases: items.len(),
            failure,
        }
    }

    fn spaces_outcome(&self, check: SpaceCheck, include_random: bool) -> Outcome {
        let cases: Vec<&Case> = if include_random {
            self.exhaustive.iter().chain(&self.random).collect()
        } else {
            self.exhaustive.iter().collect()
        };
        self.first_failure(&cases, |_, case| {
            check(case, self).err().map(|detail| Counterexample {
                tier: case.tier.into(),
                case: case.index,
                detail,
                documents: vec![Document::Space(SpaceDocument::from_space(&case.space))],
            })
        })
    }
}

pub fn theorem_ids() -> impl Iterator<Item = &'static str> {
    THEOREMS.iter().map(|t| t.id)
}

/// Runs one space theorem on a single space, as when replaying a
/// counterexample document.
pub fn check_space(id: &str, space: &FuzzyClosureSpace, mutation: Option<Mutation>) -> Option<Result<(), String>> {
    let theorem = THEOREMS.iter().find(|t| t.id == id)?;
    let check = match theorem.kind {
        Kind::Space(f) | Kind::ExhaustiveSpace(f) => f,
        Kind::Custom(_) => return None,
    };
    let ctx = Ctx {
        config: SuiteConfig {
            mutation,
            ..SuiteConfig::default()
        },
        exhaustive: Vec::new(),
        random: Vec::new(),
    };
    let case = ctx.case("replay", 0, space.clone());
    Some(check(&case, &ctx))
}

pub fn run_theorem_suite(config: &SuiteConfig) -> Result<SuiteReport, Error> {
    if let Some(ids) = &config.theorems {
        if let Some(bad) = ids.iter().find(|id| !theorem_ids().any(|t| t == id.as_str())) {
            return Err(Error::Construction(format!("unknown theorem `{bad}`")));
        }
    }
    let mut ctx = Ctx {
        config: config.clone(),
        exhaustive: Vec::new(),
        random: Vec::new(),
    };
    let mut exhaustive = Vec::new();
    for n in 1..=config.exhaustive_n {
        for d in 1..=config.exhaustive_d {
            exhaustive.extend(FgEnumerator::new(n, d, 1 << 20)?.iter());
        }
    }
    let sampler = FgSampler::new(config.random_n, config.random_d)?;
    let mut r = ctx.stream(0);
    let random: Vec<FuzzyClosureSpace> = (0..config.samples).map(|_| sampler.sample(&mut r)).collect();
    ctx.exhaustive = build_cases(&ctx, "exhaustive", exhaustive);
    ctx.random = build_cases(&ctx, "random", random);

    let selected = THEOREMS.iter().filter(|t| {
        config
            .theorems
            .as_ref()
            .map_or(true, |ids| ids.iter().any(|id| id == t.id))
    });
    let mut results = Vec::new();
    for theorem in selected {
        let start = Instant::now();
        let outcome = match theorem.kind {
            Kind::Space(check) => ctx.spaces_outcome(check, true),
            Kind::ExhaustiveSpace(check) => ctx.spaces_outcome(check, false),
            Kind::Custom(run) => run(&ctx),
        };
        results.push(TheoremResult {
            id: theorem.id.into(),
            statement: theorem.statement.into(),
            cases: outcome.cases,
            passed: outcome.failure.is_none(),
            counterexample: outcome.failure,
            elapsed: start.elapsed(),
        });
    }
    Ok(SuiteReport {
        config: config.clone(),
        passed: results.iter().all(|t| t.passed),
        theorems: results,
    })
}

fn build_cases(ctx: &Ctx, tier: &'static str, spaces: Vec<FuzzyClosureSpace>) -> Vec<Case> {
    let indexed: Vec<(usize, FuzzyClosureSpace)> = spaces.into_iter().enumerate().collect();
    if ctx.config.parallel {
        indexed.into_par_iter().map(|(i, s)| ctx.case(tier, i, s)).collect()
    } else {
        indexed.into_iter().map(|(i, s)| ctx.case(tier, i, s)).collect()
    }
}

fn all_sets(s: &FuzzyClosureSpace) -> Result<Vec<FuzzySet>, String> {
    Ok(s.carrier().enumerate_sets(s.budget()).map_err(|e| e.to_string())?.collect())
}

fn err(e: Error) -> String {
    e.to_string()
}

fn leq(f: &FuzzySet, g: &FuzzySet) -> bool {
    f.leq(g).expect("same carrier")
}

fn meet(f: &FuzzySet, g: &FuzzySet) -> FuzzySet {
    f.meet(g).expect("same carrier")
}

fn interior_properties(case: &Case, _: &Ctx) -> Result<(), String> {
    let s = &case.space;
    let c = s.carrier();
    if !s.interior(&c.one()).is_one() {
        return Err("int(1) ≠ 1".into());
    }
    let sets = all_sets(s)?;
    let interiors: Vec<FuzzySet> = sets.iter().map(|f| s.interior(f)).collect();
    for (f, int_f) in sets.iter().zip(&interiors) {
        if !leq(int_f, f) {
            return Err(format!("int {f} = {int_f} is not below {f}"));
        }
        let open = s.is_open(f);
        if open != (int_f == f) {
            return Err(format!("{f}: open is {open} but int f = {int_f}"));
        }
        let neighborhood = c
            .points()
            .filter(|p| f.contains(*p).expect("same carrier"))
            .all(|p| s.is_point_neighborhood(f, p));
        if open != neighborhood {
            return Err(format!("{f}: open is {open} but neighborhood of its points is {neighborhood}"));
        }
        for (g, int_g) in sets.iter().zip(&interiors) {
            let both = s.interior(&meet(f, g));
            if both != meet(int_f, int_g) {
                return Err(format!("int({f} ∧ {g}) = {both} ≠ {}", meet(int_f, int_g)));
            }
            if leq(f, g) && !leq(int_f, int_g) {
                return Err(format!("{f} ≤ {g} but int {f} = {int_f} ≰ int {g} = {int_g}"));
            }
        }
    }
    Ok(())
}

fn closure_from_interior(case: &Case, _: &Ctx) -> Result<(), String> {
    let s = &case.space;
    for f in all_sets(s)? {
        if s.closure_from_interior(&f) != s.closure(&f) {
            return Err(format!("Co(int(Co {f})) = {} ≠ c({f}) = {}", s.closure_from_interior(&f), s.closure(&f)));
        }
    }
    Ok(())
}

fn tau_chang(case: &Case, _: &Ctx) -> Result<(), String> {
    let s = &case.space;
    let tau = s.associated_topology().map_err(err)?;
    if let Some(v) = tau.validate_chang().violations().first() {
        return Err(format!("associated family violates {:?}", v.axiom));
    }
    for f in all_sets(s)? {
        if tau.is_closed(&f) != s.is_closed(&f) {
            return Err(format!("{f} closed in the associated topology disagrees with c"));
        }
    }
    Ok(())
}

fn t1_equivalences(case: &Case, _: &Ctx) -> Result<(), String> {
    let s = &case.space;
    let r = case.report()?;
    let a = Analyzer::new(s).map_err(err)?;
    let tau = s.associated_topology().map_err(err)?;
    let t1 = r.cft1.holds;
    let forms = [
        ("singletons closed", a.singletons_closed()),
        ("points well closed", a.points_well_closed()),
        ("associated topology FT1", tau.ft_axiom(FtAxiom::Ft1).holds),
    ];
    for (name, value) in forms {
        if value != t1 {
            return Err(format!("T1 is {t1} but {name} is {value}"));
        }
    }
    Ok(())
}

fn t0_interior(case: &Case, _: &Ctx) -> Result<(), String> {
    let a = Analyzer::new(&case.space).map_err(err)?;
    let (by_nbhd, by_int) = (a.cft0().holds, a.cft0_interior().holds);
    if by_nbhd != by_int {
        return Err(format!("T0 by neighborhoods is {by_nbhd}, by interiors {by_int}"));
    }
    Ok(())
}

fn implication_lattice(case: &Case, _: &Ctx) -> Result<(), String> {
    case.report()?.check_consistency().map_err(err)
}

fn finite_theorems(case: &Case, _: &Ctx) -> Result<(), String> {
    let s = &case.space;
    let r = case.report()?;
    if r.cfts.holds {
        if let Some(f) = all_sets(s)?.into_iter().find(|f| s.closure(f) != *f) {
            return Err(format!("Ts but c({f}) = {} ≠ {f}", s.closure(&f)));
        }
    }
    if r.cft1.holds && !(r.cft2.holds && r.urysohn.holds) {
        return Err(format!("T1 but T2 is {} and Urysohn is {}", r.cft2.holds, r.urysohn.holds));
    }
    Ok(())
}

fn fg_regular_normal(case: &Case, _: &Ctx) -> Result<(), String> {
    let r = case.report()?;
    if r.regular.holds && !r.normal.holds {
        return Err("regular but not normal".into());
    }
    Ok(())
}

/// The axioms covered by the sum theorems.
const ADDITIVE: [Property; 6] = [
    Property::Cft0,
    Property::Cft1,
    Property::Cft2,
    Property::Urysohn,
    Property::Regular,
    Property::Normal,
];

fn hereditary_for(case: &Case, ctx: &Ctx, axioms: &[Property]) -> Result<(), String> {
    let s = &case.space;
    let r = case.report()?;
    let n = s.carrier().len();
    for mask in 1..(1usize << n) - 1 {
        let indices: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub = subspace_at(s, &indices).map_err(err)?;
        let sr = ctx.classify(&sub)?;
        for p in axioms {
            if r.holds(*p) && !sr.holds(*p) {
                return Err(format!(
                    "{} holds but fails on the subspace {:?}",
                    p.id(),
                    sub.carrier().universe().names()
                ));
            }
        }
    }
    Ok(())
}

fn hereditary(case: &Case, ctx: &Ctx) -> Result<(), String> {
    hereditary_for(
        case,
        ctx,
        &[Property::Cft0, Property::Cft1, Property::Cft2, Property::Urysohn, Property::Regular],
    )
}

/// Fails from `n = 2, D = 3` on: shrinking the space shrinks closures, which
/// adds pairs `k1, k2` that the subspace must separate.
fn hereditary_normal(case: &Case, ctx: &Ctx) -> Result<(), String> {
    hereditary_for(case, ctx, &[Property::Normal])
}

fn tau_bridges(case: &Case, _: &Ctx) -> Result<(), String> {
    let s = &case.space;
    let r = case.report()?;
    let tau = s.associated_topology().map_err(err)?;
    let ft = |a| tau.ft_axiom(a).holds;
    let one_way = [
        (FtAxiom::Ft0, Property::Cft0),
        (FtAxiom::Ft2, Property::Cft2),
        (FtAxiom::Ft2Half, Property::Urysohn),
    ];
    for (a, p) in one_way {
        if ft(a) && !r.holds(p) {
            return Err(format!("{} holds for the associated topology but {} fails", a.id(), p.id()));
        }
    }
    if s.is_idempotent().map_err(err)? {
        let both = [
            (FtAxiom::Ft0, Property::Cft0),
            (FtAxiom::Regular, Property::Regular),
            (FtAxiom::Normal, Property::Normal),
        ];
        for (a, p) in both {
            if ft(a) != r.holds(p) {
                return Err(format!("idempotent, but {} is {} and {} is {}", a.id(), ft(a), p.id(), r.holds(p)));
            }
        }
    }
    Ok(())
}

/// The space transported along `perm` (element `x` becomes `perm[x]`),
/// with the relabeling map.
pub fn permuted(s: &FuzzyClosureSpace, perm: &[usize]) -> Result<SpaceMap, Error> {
    let c = s.carrier().clone();
    let mut inverse = vec![0; perm.len()];
    for (x, y) in perm.iter().enumerate() {
        inverse[*y] = x;
    }
    let move_set = |g: &[u16]| {
        let mut out = vec![0; g.len()];
        for (x, v) in g.iter().enumerate() {
            out[perm[x]] = *v;
        }
        out
    };
    let points = PointClosures::from_fn(&c, |p| {
        let source = FuzzyPoint {
            support: inverse[p.support],
            level: p.level,
        };
        c.set(move_set(s.point_closure(source).grades())).expect("levels on the chain")
    })?;
    let target = FuzzyClosureSpace::new(c, ClosureOperator::Generated(points))?;
    SpaceMap::new(s.clone(), target, perm.to_vec())
}

fn homeomorphism_invariance(case: &Case, ctx: &Ctx) -> Result<(), String> {
    let s = &case.space;
    let n = s.carrier().len();
    let rotation: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
    let m = permuted(s, &rotation).map_err(err)?;
    if !m.is_cf_homeomorphism().map_err(err)?.holds {
        return Err("relabeling is not a homeomorphism".into());
    }
    for f in all_sets(s)? {
        if m.image(&s.interior(&f)) != m.target().interior(&m.image(&f)) {
            return Err(format!("relabeling does not commute with int at {f}"));
        }
    }
    let (r, t) = (case.report()?, ctx.classify(m.target())?);
    for (a, b) in r.verdicts().into_iter().zip(t.verdicts()) {
        if a.holds != b.holds {
            return Err(format!("{} changes under relabeling", a.property.id()));
        }
    }
    Ok(())
}

fn reduced_deciders(case: &Case, _: &Ctx) -> Result<(), String> {
    let s = &case.space;
    let a = Analyzer::new(s).map_err(err)?;
    let pairs = [
        (a.cft2(), naive::cft2(s)),
        (a.urysohn(), naive::urysohn(s)),
        (a.regular(), naive::regular(s)),
        (a.mashhour_regular(), naive::mashhour_regular(s)),
        (a.normal(), naive::normal(s)),
    ];
    for (reduced, literal) in pairs {
        let literal = literal.map_err(err)?;
        if reduced != literal {
            return Err(format!(
                "{}: reduced {:?} vs enumeration {:?}",
                reduced.property.id(),
                reduced.witness.map(|w| w.describe(s.carrier())),
                literal.witness.map(|w| w.describe(s.carrier()))
            ));
        }
    }
    Ok(())
}

/// The largest tier of the exhaustive enumeration, where pairwise theorems run.
fn top_tier(ctx: &Ctx) -> Vec<&Case> {
    let (n, d) = (ctx.config.exhaustive_n, ctx.config.exhaustive_d);
    ctx.exhaustive
        .iter()
        .filter(|c| c.space.carrier().len() == n && c.space.carrier().denominator() == d)
        .collect()
}

fn coarseness_monotonicity(ctx: &Ctx) -> Outcome {
    let tier = top_tier(ctx);
    let pairs: Vec<(&Case, &Case)> = tier.iter().flat_map(|a| tier.iter().map(move |b| (*a, *b))).collect();
    ctx.first_failure(&pairs, |i, (a, b)| {
        let detail = (|| {
            if !a.space.coarser_leq(&b.space).map_err(err)? {
                return Ok(());
            }
            let (ra, rb) = (a.report()?, b.report()?);
            for p in [Property::Cft0, Property::Cft1, Property::Cft2] {
                if ra.holds(p) && !rb.holds(p) {
                    return Err(format!("{} holds on the coarser space only", p.id()));
                }
            }
            Ok(())
        })()
        .err()?;
        Some(Counterexample {
            tier: "exhaustive".into(),
            case: i,
            detail,
            documents: vec![
                Document::Space(SpaceDocument::from_space(&a.space)),
                Document::Space(SpaceDocument::from_space(&b.space)),
            ],
        })
    })
}

/// Thirty spaces drawn from the exhaustive tier, renamed apart for sums.
fn sum_sample(ctx: &Ctx) -> Vec<(FuzzyClosureSpace, FuzzyClosureSpace)> {
    let tier = top_tier(ctx);
    if tier.is_empty() {
        return Vec::new();
    }
    let mut r = ctx.stream(1);
    let picks: Vec<&FuzzyClosureSpace> = (0..30).map(|_| &tier[r.gen_range(0..tier.len())].space).collect();
    let rename = |s: &FuzzyClosureSpace, prefix: &str| {
        let names: Vec<String> = s.carrier().universe().names().iter().map(|x| format!("{prefix}{x}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        corpus::relabel(s, &refs).expect("fresh names")
    };
    let mut out = Vec::new();
    for (i, a) in picks.iter().enumerate() {
        for b in &picks[i..] {
            out.push((rename(a, "a"), rename(b, "b")));
        }
    }
    out
}

fn pair_failure(i: usize, a: &FuzzyClosureSpace, b: &FuzzyClosureSpace, detail: String) -> Counterexample {
    Counterexample {
        tier: "sample".into(),
        case: i,
        detail,
        documents: vec![
            Document::Space(SpaceDocument::from_space(a)),
            Document::Space(SpaceDocument::from_space(b)),
        ],
    }
}

fn sum_theorems(ctx: &Ctx) -> Outcome {
    let pairs = sum_sample(ctx);
    ctx.first_failure(&pairs, |i, (a, b)| {
        let detail = (|| {
            let total = sum(&[a.clone(), b.clone()]).map_err(err)?;
            let (ra, rb, rt) = (ctx.classify(a)?, ctx.classify(b)?, ctx.classify(&total)?);
            for p in ADDITIVE {
                let parts = ra.holds(p) && rb.holds(p);
                if parts != rt.holds(p) {
                    return Err(format!("{}: summands {parts}, sum {}", p.id(), rt.holds(p)));
                }
            }
            Ok(())
        })()
        .err()?;
        Some(pair_failure(i, a, b, detail))
    })
}

fn sum_interior(ctx: &Ctx) -> Outcome {
    let pairs = sum_sample(ctx);
    ctx.first_failure(&pairs, |i, (a, b)| {
        let detail = (|| {
            let total = sum(&[a.clone(), b.clone()]).map_err(err)?;
            let split = a.carrier().len();
            for f in all_sets(&total)? {
                let left = a.carrier().set(f.grades()[..split].to_vec()).map_err(err)?;
                let right = b.carrier().set(f.grades()[split..].to_vec()).map_err(err)?;
                let mut joined = a.interior(&left).grades().to_vec();
                joined.extend_from_slice(b.interior(&right).grades());
                if total.interior(&f).grades() != joined.as_slice() {
                    return Err(format!("int {f} = {} in the sum", total.interior(&f)));
                }
            }
            Ok(())
        })()
        .err()?;
        Some(pair_failure(i, a, b, detail))
    })
}

fn product_points(ctx: &Ctx) -> Outcome {
    let mut r = ctx.stream(2);
    let pairs: Vec<(FuzzyClosureSpace, FuzzyClosureSpace)> = (0..50)
        .map(|_| {
            let d = r.gen_range(1..=2u16);
            let draw = |r: &mut ChaCha8Rng| {
                let n = r.gen_range(1..=2usize);
                FgSampler::new(n, d).expect("small").sample(r)
            };
            let a = draw(&mut r);
            let b = draw(&mut r);
            (a, b)
        })
        .collect();
    ctx.first_failure(&pairs, |i, (a, b)| {
        let detail = (|| {
            let prod = product(&[a.clone(), b.clone()]).map_err(err)?;
            let ps = prod.space();
            let c = ps.carrier();
            for p in c.points() {
                let xy = prod.coordinates(p.support);
                let factors = [
                    a.point_closure(FuzzyPoint { support: xy[0], level: p.level }),
                    b.point_closure(FuzzyPoint { support: xy[1], level: p.level }),
                ];
                let expected = prod.product_set(&factors).map_err(err)?;
                if ps.point_closure(p) != expected {
                    return Err(format!("c({}) = {} ≠ {expected}", c.format_point(p), ps.point_closure(p)));
                }
                for f in all_sets(ps)? {
                    if prod.product_closure_oracle(&f, p) != ps.closure(&f).contains(p).expect("same carrier") {
                        return Err(format!("maximal-point oracle disagrees at {}, {f}", c.format_point(p)));
                    }
                }
            }
            for t in 0..2 {
                if !prod.projection_map(t).map_err(err)?.is_cf_continuous().map_err(err)?.holds {
                    return Err(format!("projection {t} is not continuous"));
                }
            }
            let (ra, rb, rp) = (ctx.classify(a)?, ctx.classify(b)?, ctx.classify(ps)?);
            if ra.cft0.holds && rb.cft0.holds && !rp.cft0.holds {
                return Err("T0 factors but the product is not T0".into());
            }
            if (ra.cft1.holds && rb.cft1.holds) != rp.cft1.holds {
                return Err(format!("factors T1 {}, {}; product T1 {}", ra.cft1.holds, rb.cft1.holds, rp.cft1.holds));
            }
            Ok(())
        })()
        .err()?;
        Some(pair_failure(i, a, b, detail))
    })
}

fn factor_pairs_2x1() -> Vec<(FuzzyClosureSpace, FuzzyClosureSpace)> {
    let spaces: Vec<FuzzyClosureSpace> = FgEnumerator::new(2, 1, 16).expect("small").iter().collect();
    let named = |s: &FuzzyClosureSpace, names: [&str; 2]| corpus::relabel(s, &names).expect("two names");
    spaces
        .iter()
        .flat_map(|a| spaces.iter().map(move |b| (named(a, ["a", "b"]), named(b, ["u", "v"]))))
        .collect()
}

fn product_decompositions(ctx: &Ctx) -> Outcome {
    let pairs = factor_pairs_2x1();
    ctx.first_failure(&pairs, |i, (a, b)| {
        let detail = (|| {
            let prod = product(&[a.clone(), b.clone()]).map_err(err)?;
            let ps = prod.space();
            for f in all_sets(ps)? {
                let parts = f.support().len().max(3);
                for p in ps.carrier().points() {
                    let closed_form = ps.closure(&f).contains(p).expect("same carrier");
                    if closed_form != prod.product_closure_by_decompositions(&f, p, parts) {
                        return Err(format!("decompositions disagree at {}, {f}", ps.carrier().format_point(p)));
                    }
                }
            }
            Ok(())
        })()
        .err()?;
        Some(pair_failure(i, a, b, detail))
    })
}

fn coarsest_product(ctx: &Ctx) -> Outcome {
    let pairs = factor_pairs_2x1();
    let operators = FgEnumerator::new(4, 1, 1 << 12).expect("4096 operators");
    ctx.first_failure(&pairs, |i, (a, b)| {
        let detail = (|| {
            let prod = product(&[a.clone(), b.clone()]).map_err(err)?;
            let carrier: Carrier = prod.space().carrier().clone();
            for k in 0..operators.count() {
                let entries = operators.point_closures(k).entries().to_vec();
                let points = PointClosures::new(&carrier, entries).map_err(err)?;
                let s = FuzzyClosureSpace::new(carrier.clone(), ClosureOperator::Generated(points)).map_err(err)?;
                let mut continuous = true;
                for t in 0..2 {
                    let m = prod.projection_from(s.clone(), t).map_err(err)?;
                    continuous &= m.is_cf_continuous().map_err(err)?.holds;
                }
                if continuous && !prod.space().coarser_leq(&s).map_err(err)? {
                    return Err(format!("operator {k} has continuous projections but is not finer than the product"));
                }
            }
            Ok(())
        })()
        .err()?;
        Some(pair_failure(i, a, b, detail))
    })
}

fn map_failure(i: usize, m: &SpaceMap, detail: String) -> Counterexample {
    Counterexample {
        tier: "sample".into(),
        case: i,
        detail,
        documents: vec![Document::Map(MapDocument::from_map(m))],
    }
}

/// Random maps at n=3, D=2. A quarter go into an indiscrete target and a
/// quarter leave a discrete source, so both verdicts occur.
fn continuity_equivalences(ctx: &Ctx) -> Outcome {
    let mut r = ctx.stream(3);
    let sampler = FgSampler::new(3, 2).expect("small");
    let maps: Vec<SpaceMap> = (0..100)
        .map(|i| {
            let mut source = sampler.sample(&mut r);
            let mut target = sampler.sample(&mut r);
            match i % 4 {
                1 => target = FuzzyClosureSpace::indiscrete(target.carrier().clone()),
                2 => source = FuzzyClosureSpace::discrete(source.carrier().clone()),
                _ => {}
            }
            random::random_map(source, target, &mut r).expect("same chain")
        })
        .collect();
    ctx.first_failure(&maps, |i, m| {
        let detail = (|| {
            let direct = m.is_cf_continuous().map_err(err)?.holds;
            let preimage = m.continuity_via_preimage().map_err(err)?.holds;
            let pointwise = m.is_continuous_at_every_point().map_err(err)?.holds;
            if direct != preimage || direct != pointwise {
                return Err(format!("continuous {direct}, by preimage {preimage}, pointwise {pointwise}"));
            }
            Ok(())
        })()
        .err()?;
        Some(map_failure(i, m, detail))
    })
}

/// Random bijections at n=3, D=2; every other target is the source
/// transported along the bijection, so homeomorphisms occur.
fn homeomorphism_equivalence(ctx: &Ctx) -> Outcome {
    let mut r = ctx.stream(4);
    let sampler = FgSampler::new(3, 2).expect("small");
    let maps: Vec<SpaceMap> = (0..50)
        .map(|i| {
            let source = sampler.sample(&mut r);
            let target = sampler.sample(&mut r);
            let m = random::random_bijection(source.clone(), target, &mut r).expect("same size");
            if i % 2 == 0 {
                permuted(&source, m.ground()).expect("a permutation")
            } else {
                m
            }
        })
        .collect();
    ctx.first_failure(&maps, |i, m| {
        let detail = (|| {
            let homeo = m.is_cf_homeomorphism().map_err(err)?.holds;
            let by_inverse = m.is_homeomorphism_by_inverse().map_err(err)?;
            if homeo != by_inverse {
                return Err(format!("homeomorphism {homeo}, continuous both ways {by_inverse}"));
            }
            Ok(())
        })()
        .err()?;
        Some(map_failure(i, m, detail))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(theorems: &[&str]) -> SuiteConfig {
        SuiteConfig {
            exhaustive_n: 2,
            exhaustive_d: 1,
            random_n: 2,
            random_d: 2,
            samples: 10,
            seed: 3,
            theorems: Some(theorems.iter().map(|t| t.to_string()).collect()),
            mutation: None,
            parallel: true,
        }
    }

    #[test]
    fn theorem_ids_are_unique() {
        let mut ids: Vec<&str> = theorem_ids().collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), THEOREMS.len());
    }

    #[test]
    fn space_theorems_pass_on_a_small_run() {
        let report = run_theorem_suite(&small(&["interior_properties", "t1_equivalences", "hereditary"])).unwrap();
        assert!(report.passed, "{}", report.to_json());
        assert_eq!(report.theorems[0].cases, 1 + 4 + 10);
    }

    #[test]
    fn mutation_is_caught_and_replays() {
        let config = SuiteConfig {
            mutation: Some(Mutation::Cft1AlwaysHolds),
            ..small(&["t1_equivalences"])
        };
        let report = run_theorem_suite(&config).unwrap();
        let t = &report.theorems[0];
        assert!(!t.passed);
        let cx = t.counterexample.as_ref().unwrap();
        let Document::Space(doc) = &cx.documents[0] else {
            panic!("space theorem emits a space");
        };
        let space = doc.to_space(1 << 20).unwrap();
        assert!(check_space("t1_equivalences", &space, config.mutation).unwrap().is_err());
        assert!(check_space("t1_equivalences", &space, None).unwrap().is_ok());
    }

    #[test]
    fn unknown_theorem_is_rejected() {
        assert!(run_theorem_suite(&small(&["nope"])).is_err());
    }
}
