use std::sync::Arc;

use proptest::prelude::*;

use hsdepth_core::analysis::{analyze, AnalysisOptions};
use hsdepth_core::graded::{GradedIdeal, GradedRing};
use hsdepth_core::groebner::{buchberger, normal_form};
use hsdepth_core::hilbert::Powers;
use hsdepth_core::ideal::LocalIdeal;
use hsdepth_core::linalg::rank;
use hsdepth_core::poly::{Monomial, MonomialOrder, PolyRing, SparsePolynomial};
use hsdepth_core::reduction::{self, is_reduction};
use hsdepth_core::semigroup::{NumericalSemigroup, SemigroupElement, SemigroupIdeal, SemigroupRing};
use hsdepth_core::{Field, PrimeField};

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn semigroup_gens() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(2u32..=15, 2..=4)
        .prop_map(|mut g| {
            g.sort_unstable();
            g.dedup();
            g
        })
        .prop_filter("gcd 1", |g| g.len() >= 2 && g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
}

/// A semigroup together with 1-3 positive members used as monomial exponents.
fn semigroup_instance() -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
    semigroup_gens().prop_flat_map(|gens| {
        let sg = NumericalSemigroup::new(&gens).unwrap();
        let top = 2 * gens[gens.len() - 1] + 2;
        let members: Vec<u32> = (1..=top).filter(|&s| sg.contains(s)).collect();
        (Just(gens), prop::sample::subsequence(members.clone(), 1..=3.min(members.len())))
    })
}

fn sg_ring(gens: &[u32]) -> Arc<SemigroupRing<PrimeField>> {
    SemigroupRing::new(NumericalSemigroup::new(gens).unwrap(), PrimeField::default())
}

/// `t^e (1 + t^g)`: a non-monomial generator of the ideal `(t^e)`.
fn twisted(ring: &SemigroupRing<PrimeField>, e: u32, g: u32) -> SemigroupElement<PrimeField> {
    let one = ring.field().one();
    ring.element(vec![(e, one), (e + g, ring.field().from_i64(5))]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn colength_counts_missing_members((gens, exps) in semigroup_instance()) {
        let ring = sg_ring(&gens);
        let k = SemigroupIdeal::monomial(&ring, &exps).unwrap();
        let sg = ring.semigroup();
        let b = k.conductor() + 10;
        let members = (0..=b).filter(|&s| sg.contains(s)).count() as u64;
        let values = (0..=b).filter(|&s| k.is_value(s)).count() as u64;
        prop_assert_eq!(k.sg_colength() + values, members);
    }

    #[test]
    fn principal_colength_is_the_exponent((gens, exps) in semigroup_instance()) {
        let ring = sg_ring(&gens);
        let s = exps[0];
        let sg = ring.semigroup();
        // #(S \ (s + S)), counted directly
        let apery = (0..s + sg.conductor() + 1).filter(|&x| sg.contains(x) && !(x >= s && sg.contains(x - s))).count() as u64;
        let monomial = SemigroupIdeal::monomial(&ring, &[s]).unwrap();
        let generic = SemigroupIdeal::new(&ring, vec![twisted(&ring, s, gens[0])]).unwrap();
        prop_assert!(!generic.is_monomial());
        prop_assert_eq!(monomial.sg_colength(), s as u64);
        prop_assert_eq!(generic.sg_colength(), s as u64);
        prop_assert_eq!(apery, s as u64);
    }

    #[test]
    fn generic_path_matches_monomial_path((gens, exps) in semigroup_instance()) {
        let ring = sg_ring(&gens);
        let monomial = SemigroupIdeal::monomial(&ring, &exps).unwrap();
        let twisted_gens = exps.iter().map(|&e| twisted(&ring, e, gens[0])).collect();
        let generic = SemigroupIdeal::new(&ring, twisted_gens).unwrap();
        prop_assert_eq!(generic.sg_colength(), monomial.sg_colength());
        let m = SemigroupIdeal::maximal(&ring);
        prop_assert_eq!(generic.sg_product(&m).unwrap().sg_colength(), monomial.sg_product(&m).unwrap().sg_colength());
        prop_assert_eq!(generic.sg_power(2).unwrap().sg_colength(), monomial.sg_power(2).unwrap().sg_colength());
        prop_assert!(generic.equals(&monomial).unwrap());
    }

    #[test]
    fn semigroup_ideal_operations((gens, exps) in semigroup_instance(), extra in 1u32..12) {
        let ring = sg_ring(&gens);
        let sg = ring.semigroup();
        let k = SemigroupIdeal::monomial(&ring, &exps).unwrap();
        let e = (extra..).find(|&s| sg.contains(s)).unwrap();
        let l = SemigroupIdeal::new(&ring, vec![twisted(&ring, e, gens[1])]).unwrap();
        let kl = k.product(&l).unwrap();
        prop_assert!(kl.colength().unwrap() >= k.colength().unwrap() + l.colength().unwrap());
        let inter = k.intersect(&l).unwrap();
        prop_assert!(k.contains(&inter).unwrap() && l.contains(&inter).unwrap());
        prop_assert!(inter.contains(&kl).unwrap());
        let colon = k.colon(&l).unwrap();
        prop_assert!(k.contains(&colon.product(&l).unwrap()).unwrap());
        prop_assert!(colon.contains(&k).unwrap());
    }

    #[test]
    fn dimension_one_analysis((gens, exps) in semigroup_instance()) {
        let ring = sg_ring(&gens);
        let i = SemigroupIdeal::monomial(&ring, &exps).unwrap();
        let a = analyze(i.clone(), &AnalysisOptions::default()).unwrap();
        prop_assert!(a.diagnostics.is_empty(), "{:?}", a.diagnostics);
        for c in &a.checks {
            prop_assert!(c.passed(), "{}: {:?}", c.name, c.violations);
            prop_assert!(!c.conclusion || c.hypothesis);
        }
        let p = a.profile.as_ref().unwrap();
        let s = a.sums.as_ref().unwrap();
        prop_assert!(s.lower as i64 <= p.e[1] && p.e[1] == s.upper as i64);
        for w in p.table.windows(2).skip(1) {
            prop_assert!(w[0] < w[1]);
        }
        let cert = a.reduction.as_ref().unwrap();
        prop_assert_eq!(cert.generators.len(), 1);
        // another reduction gives the same verdict
        let b = analyze(i, &AnalysisOptions { seed: 1000, ..AnalysisOptions::default() }).unwrap();
        prop_assert_eq!(a.verdict.unwrap().kind, b.verdict.unwrap().kind);
    }

    #[test]
    fn reductions_are_stable_under_nakayama((gens, exps) in semigroup_instance()) {
        let ring = sg_ring(&gens);
        let i = SemigroupIdeal::monomial(&ring, &exps).unwrap();
        let mut powers = Powers::new(i.clone());
        let cert = reduction::minimal_reduction(&mut powers, 3, 8, 40).unwrap();
        let m = i.maximal_ideal();
        let widened = cert.ideal.sum(&m.product(&i).unwrap()).unwrap();
        prop_assert!(is_reduction(&widened, &i, 40).unwrap().is_some());
        // J ⊆ K ⊆ I with J a reduction of I: J reduces K and K reduces I
        prop_assert!(is_reduction(&cert.ideal, &widened, 40).unwrap().is_some());
        // a superficial element generates a reduction in dimension one
        let sup = reduction::find_superficial_element(&mut powers, 9, 8, cert.reduction_number, 2).unwrap();
        let principal = i.with_generators(vec![sup.element]).unwrap();
        prop_assert!(is_reduction(&principal, &i, 40).unwrap().is_some());
    }
}

fn plane() -> Arc<GradedRing<PrimeField>> {
    GradedRing::new(PrimeField::default(), vec!["x".into(), "y".into()]).unwrap()
}

fn monomial_ideal(ring: &Arc<GradedRing<PrimeField>>, exps: &[(u32, u32)]) -> GradedIdeal<PrimeField> {
    let gens = exps.iter().map(|&(a, b)| ring.poly().monomial(Monomial::new(vec![a, b]))).collect();
    GradedIdeal::new(ring, gens).unwrap()
}

/// `x^δ`, `y^δ` and a random subset of the mixed degree-δ monomials.
fn equigenerated() -> impl Strategy<Value = Vec<(u32, u32)>> {
    (1u32..=4).prop_flat_map(|d| {
        let mixed: Vec<(u32, u32)> = (1..d).map(|a| (a, d - a)).collect();
        let n = mixed.len();
        prop::sample::subsequence(mixed, 0..=n).prop_map(move |mut s| {
            s.push((d, 0));
            s.push((0, d));
            s
        })
    })
}

fn small_poly(ring: &PolyRing<PrimeField>, terms: &[(u32, u32, i64)]) -> SparsePolynomial<PrimeField> {
    let field = *ring.field();
    ring.from_terms(terms.iter().map(|&(a, b, c)| (Monomial::new(vec![a, b, 0]), field.from_i64(c))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn groebner_basis_properties(
        gens in prop::collection::vec(prop::collection::vec((0u32..4, 0u32..4, -5i64..5), 1..4), 1..4),
        probe in prop::collection::vec((0u32..5, 0u32..5, -5i64..5), 1..5),
    ) {
        let ring = PolyRing::new(PrimeField::default(), vec!["x".into(), "y".into(), "z".into()], MonomialOrder::DegRevLex);
        let polys: Vec<_> = gens.iter().map(|t| small_poly(&ring, t)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!polys.is_empty());
        let gb = buchberger(&ring, &polys);
        for p in &polys {
            prop_assert!(normal_form(&ring, p, gb.polys()).is_zero());
        }
        let again = buchberger(&ring, gb.polys());
        prop_assert_eq!(again.polys(), gb.polys());
        // f - NF(f) lies in the ideal, and NF is idempotent
        let f = small_poly(&ring, &probe);
        let r = normal_form(&ring, &f, gb.polys());
        prop_assert!(normal_form(&ring, &ring.sub(&f, &r), gb.polys()).is_zero());
        prop_assert_eq!(normal_form(&ring, &r, gb.polys()), r);
    }

    #[test]
    fn rank_is_permutation_invariant(
        rows in prop::collection::vec(prop::collection::vec(-3i64..3, 6), 1..8),
        perm_seed in any::<u64>(),
    ) {
        let field = PrimeField::default();
        let m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        let mut shuffled = m.clone();
        let n = shuffled.len();
        for i in (1..n).rev() {
            shuffled.swap(i, (perm_seed.rotate_left(i as u32) as usize) % (i + 1));
        }
        prop_assert_eq!(rank(&field, &m, 6), rank(&field, &shuffled, 6));
    }

    #[test]
    fn graded_ideal_operations(a in equigenerated(), b in equigenerated()) {
        let ring = plane();
        let k = monomial_ideal(&ring, &a);
        let l = monomial_ideal(&ring, &b);
        let kl = k.product(&l).unwrap();
        prop_assert!(kl.colength().unwrap() >= k.colength().unwrap() + l.colength().unwrap());
        let inter = k.intersect(&l).unwrap();
        prop_assert!(k.contains(&inter).unwrap() && l.contains(&inter).unwrap());
        let colon = k.colon(&l).unwrap();
        prop_assert!(k.contains(&colon.product(&l).unwrap()).unwrap());
    }

    #[test]
    fn plane_analysis(exps in equigenerated()) {
        let ring = plane();
        let i = monomial_ideal(&ring, &exps);
        let a = analyze(i, &AnalysisOptions::default()).unwrap();
        prop_assert!(a.diagnostics.is_empty(), "{:?}", a.diagnostics);
        for c in &a.checks {
            prop_assert!(c.passed(), "{}: {:?}", c.name, c.violations);
        }
        let p = a.profile.as_ref().unwrap();
        let s = a.sums.as_ref().unwrap();
        prop_assert!(s.lower as i64 <= p.e[1] && p.e[1] <= s.upper as i64);
        prop_assert_eq!(a.analytic_spread, Some(2));
        prop_assert_eq!(a.reduction.as_ref().unwrap().generators.len(), 2);
    }
}
