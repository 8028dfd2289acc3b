use std::collections::BTreeSet;
use std::sync::Arc;

use hsdepth_core::analysis::{analyze, Analysis, AnalysisOptions};
use hsdepth_core::criteria::{DepthKind, Witness};
use hsdepth_core::graded::{GradedIdeal, GradedRing};
use hsdepth_core::ideal::LocalIdeal;
use hsdepth_core::poly::Monomial;
use hsdepth_core::semigroup::{NumericalSemigroup, SemigroupIdeal, SemigroupRing};
use hsdepth_core::{Field, PrimeField};

/// Value sets of monomial ideals in a numerical semigroup ring, enumerated
/// directly up to `bound`.
struct OrderSets {
    members: BTreeSet<u32>,
    bound: u32,
}

impl OrderSets {
    fn new(gens: &[u32], bound: u32) -> Self {
        let mut members = BTreeSet::from([0]);
        for s in 1..bound {
            if gens.iter().any(|&g| g <= s && members.contains(&(s - g))) {
                members.insert(s);
            }
        }
        OrderSets { members, bound }
    }

    fn ideal(&self, exps: &[u32]) -> BTreeSet<u32> {
        self.members
            .iter()
            .filter(|&&s| exps.iter().any(|&e| e <= s && self.members.contains(&(s - e))))
            .copied()
            .collect()
    }

    fn product(&self, a: &BTreeSet<u32>, b: &BTreeSet<u32>) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        for &x in a {
            for &y in b {
                if x + y < self.bound {
                    out.insert(x + y);
                }
            }
        }
        out
    }

    fn colength(&self, v: &BTreeSet<u32>) -> u64 {
        self.members.iter().filter(|s| !v.contains(s)).count() as u64
    }

    fn power(&self, exps: &[u32], n: u32) -> BTreeSet<u32> {
        let base = self.ideal(exps);
        let mut acc = self.ideal(&[0]);
        for _ in 0..n {
            acc = self.product(&acc, &base);
        }
        acc
    }
}

fn semigroup(gens: &[u32]) -> Arc<SemigroupRing<PrimeField>> {
    SemigroupRing::new(NumericalSemigroup::new(gens).unwrap(), PrimeField::default())
}

fn run_semigroup(gens: &[u32], exps: &[u32]) -> Analysis<SemigroupIdeal<PrimeField>> {
    let ring = semigroup(gens);
    let ideal = SemigroupIdeal::monomial(&ring, exps).unwrap();
    analyze(ideal, &AnalysisOptions::default()).unwrap()
}

fn graded_monomial_ideal(vars: usize, exps: &[&[u32]]) -> GradedIdeal<PrimeField> {
    let names = ["x", "y", "z", "w"][..vars].iter().map(|s| s.to_string()).collect();
    let ring = GradedRing::new(PrimeField::default(), names).unwrap();
    let gens = exps.iter().map(|e| ring.poly().monomial(Monomial::new(e.to_vec()))).collect();
    GradedIdeal::new(&ring, gens).unwrap()
}

/// Standard monomials of a monomial ideal, counted up to `degree_bound`.
fn standard_monomial_count(gens: &[Vec<u32>], degree_bound: u32) -> u64 {
    let mut count = 0;
    for a in 0..=degree_bound {
        for b in 0..=degree_bound - a {
            let inside = gens.iter().any(|g| g[0] <= a && g[1] <= b);
            if !inside {
                count += 1;
            }
        }
    }
    count
}

fn monomial_power(gens: &[Vec<u32>], n: u32) -> Vec<Vec<u32>> {
    let mut acc = vec![vec![0, 0]];
    for _ in 0..n {
        let mut next = Vec::new();
        for a in &acc {
            for g in gens {
                next.push(vec![a[0] + g[0], a[1] + g[1]]);
            }
        }
        next.sort();
        next.dedup();
        acc = next;
    }
    acc
}

fn assert_clean<I: LocalIdeal>(a: &Analysis<I>) {
    assert!(a.diagnostics.is_empty(), "{:?}", a.diagnostics);
    for c in &a.checks {
        assert!(c.passed(), "{}: {:?}", c.name, c.violations);
        assert!(!c.conclusion || c.hypothesis, "{} concluded without its hypothesis", c.name);
    }
}

#[test]
fn maximal_ideal_of_345_reproduces_the_worked_example() {
    let a = run_semigroup(&[3, 4, 5], &[3, 4, 5]);
    assert_clean(&a);
    let p = a.profile.as_ref().unwrap();
    assert_eq!(p.e, vec![3, 2]);
    for n in 1..p.table.len() {
        assert_eq!(p.table[n] as i128, 3 * n as i128 - 2);
    }
    assert_eq!(p.render_expanded(), "3n - 2");
    assert_eq!(a.reduction.as_ref().unwrap().reduction_number, 1);
    let s = a.sums.as_ref().unwrap();
    assert_eq!((s.lower, s.upper), (2, 2));
    assert_eq!(a.verdict.as_ref().unwrap().kind, DepthKind::CohenMacaulay);
    let ho = a.check("huneke_ooishi").unwrap();
    assert!(ho.hypothesis && ho.conclusion);
    let ab = a.check("abhyankar").unwrap();
    assert!(ab.hypothesis && ab.conclusion);
    assert!(a.sally.as_ref().unwrap().vanishes);
    assert!(!a.check("rees_cm").unwrap().hypothesis);
}

#[test]
fn t3_t4_in_345_is_not_cohen_macaulay() {
    let a = run_semigroup(&[3, 4, 5], &[3, 4]);
    assert_clean(&a);
    let p = a.profile.as_ref().unwrap();
    assert_eq!(p.e, vec![3, 2]);
    assert_eq!(p.postulation, 1);
    assert_eq!(a.reduction.as_ref().unwrap().reduction_number, 2);
    let s = a.sums.as_ref().unwrap();
    assert_eq!((s.lower, s.upper), (1, 2));
    assert_eq!(s.guerriere_sum(), 1);
    assert_eq!(a.verdict.as_ref().unwrap().kind, DepthKind::AtLeastDMinus1);
    assert!(a.check("guerriere").unwrap().conclusion);
    assert_eq!(a.vv[0].first_failure, Some(2));
    assert!(!a.check("huneke_ooishi").unwrap().hypothesis);
    let sally = a.sally.as_ref().unwrap();
    assert_eq!(&sally.table[..4], &[0, 1, 1, 1]);
    assert_eq!(sally.s, vec![1]);
    assert!(a.check("vaz_pinto").unwrap().conclusion);
}

#[test]
fn semigroup_tables_match_the_order_set_oracle() {
    for (gens, exps) in [
        (vec![3, 4, 5], vec![3, 4]),
        (vec![3, 5, 7], vec![3, 5, 7]),
        (vec![4, 5, 11], vec![4, 5, 11]),
        (vec![5, 7], vec![10, 14]),
        (vec![4, 6, 9], vec![6, 9]),
    ] {
        let a = run_semigroup(&gens, &exps);
        assert_clean(&a);
        let p = a.profile.as_ref().unwrap();
        let n_max = p.table.len() as u32 - 1;
        let oracle = OrderSets::new(&gens, (n_max + 2) * 30 + 60);
        for n in 0..=n_max {
            assert_eq!(p.table[n as usize], oracle.colength(&oracle.power(&exps, n)), "{gens:?} {exps:?} n = {n}");
        }
        let s = a.sums.as_ref().unwrap();
        assert_eq!(s.upper as i64, p.e[1], "dimension one exactness for {gens:?} {exps:?}");
    }
}

#[test]
fn minimal_multiplicity_of_357() {
    let a = run_semigroup(&[3, 5, 7], &[3, 5, 7]);
    assert_clean(&a);
    let p = a.profile.as_ref().unwrap();
    assert_eq!(&p.assoc_graded_h_function()[..4], &[1, 3, 3, 3]);
    assert_eq!(a.reduction.as_ref().unwrap().reduction_number, 1);
    assert_eq!(a.check("abhyankar").unwrap().witnesses["class"], Witness::Text("minimal_multiplicity".into()));
}

#[test]
fn almost_minimal_multiplicity_shape() {
    let a = run_semigroup(&[4, 5, 11], &[4, 5, 11]);
    assert_clean(&a);
    let ab = a.check("abhyankar").unwrap();
    assert_eq!(ab.witnesses["class"], Witness::Text("almost_minimal_multiplicity".into()));
    assert!(ab.conclusion);
}

#[test]
fn maximal_ideal_of_the_plane() {
    let a = analyze(graded_monomial_ideal(2, &[&[1, 0], &[0, 1]]), &AnalysisOptions::default()).unwrap();
    assert_clean(&a);
    assert_eq!(a.profile.as_ref().unwrap().e, vec![1, 0, 0]);
    let s = a.sums.as_ref().unwrap();
    assert_eq!((s.lower, s.upper), (0, 0));
    assert_eq!(a.verdict.as_ref().unwrap().kind, DepthKind::CohenMacaulay);
    assert!(a.check("northcott").unwrap().conclusion);
    assert!(a.check("rees_cm").unwrap().conclusion);
    assert!(a.check("sally_machine").unwrap().conclusion);
    assert!(a.sally.as_ref().unwrap().vanishes);
}

#[test]
fn square_of_the_maximal_ideal_in_the_plane() {
    let gens: Vec<Vec<u32>> = vec![vec![2, 0], vec![1, 1], vec![0, 2]];
    let refs: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
    let a = analyze(graded_monomial_ideal(2, &refs), &AnalysisOptions::default()).unwrap();
    assert_clean(&a);
    let p = a.profile.as_ref().unwrap();
    assert_eq!(p.e, vec![4, 1, 0]);
    for (n, &h) in p.table.iter().enumerate() {
        let power = monomial_power(&gens, n as u32);
        assert_eq!(h, standard_monomial_count(&power, 2 * n as u32 + 2), "n = {n}");
    }
    let cert = a.reduction.as_ref().unwrap();
    assert_eq!(cert.reduction_number, 1);
    assert!(cert.generators.iter().all(|g| g.degree() == Some(2)));
    let s = a.sums.as_ref().unwrap();
    assert_eq!((s.lower, s.upper), (1, 1));
    assert_eq!(a.verdict.as_ref().unwrap().kind, DepthKind::CohenMacaulay);
    assert!(a.check("huneke_ooishi").unwrap().conclusion);
    assert!(a.check("rees_cm").unwrap().conclusion);
    assert!(a.check("elias").unwrap().conclusion);
    assert!(a.check("sally_machine").unwrap().conclusion);
    assert!(a.check("coefficient_transfer").unwrap().conclusion);
}

#[test]
fn depth_zero_graded_ideal() {
    // x^2 y^2 I ⊆ I^2 with x^2 y^2 outside I, so G(I) has depth 0
    let gens: Vec<Vec<u32>> = vec![vec![4, 0], vec![3, 1], vec![1, 3], vec![0, 4]];
    let refs: Vec<&[u32]> = gens.iter().map(|g| g.as_slice()).collect();
    let a = analyze(graded_monomial_ideal(2, &refs), &AnalysisOptions::default()).unwrap();
    assert_clean(&a);
    let p = a.profile.as_ref().unwrap();
    for (n, &h) in p.table.iter().enumerate() {
        assert_eq!(h, standard_monomial_count(&monomial_power(&gens, n as u32), 4 * n as u32 + 2), "n = {n}");
    }
    assert_eq!(p.e, vec![16, 6, 0]);
    let v = a.verdict.as_ref().unwrap();
    assert_eq!((v.lower, v.upper), (5, 7));
    assert_eq!(v.kind, DepthKind::LowerBound(0));
    assert_eq!(a.reduction.as_ref().unwrap().reduction_number, 2);
}

#[test]
fn lower_sum_depends_on_the_reduction() {
    use hsdepth_core::criteria::hm_sums;
    use hsdepth_core::hilbert::Powers;
    use hsdepth_core::reduction::{reduction_number, ReductionCertificate};

    let ring = semigroup(&[5, 6, 13]);
    let i = SemigroupIdeal::monomial(&ring, &[5, 6]).unwrap();
    let mut powers = Powers::new(i.clone());
    let mut sums = |gen| {
        let j = i.with_generators(vec![gen]).unwrap();
        let (r, j_products) = reduction_number(&j, &mut powers, 10).unwrap().unwrap();
        let cert = ReductionCertificate {
            generators: j.generators().to_vec(),
            ideal: j,
            coefficients: vec![],
            basis: vec![],
            reduction_number: r,
            minimal: true,
            seed: 0,
            attempt: 0,
            j_products,
        };
        hm_sums(&mut powers, &cert).unwrap()
    };
    let one = PrimeField::default().one();
    let monomial = sums(ring.monomial(5).unwrap());
    let twisted = sums(ring.element(vec![(5, one), (6, one)]).unwrap());
    // value sets: (t^5) + I^2 misses 0, 6, 13, 19; a t^13 - t^18 = t^19
    // puts 19 into (a) + I^2 for a = t^5 + t^6
    assert_eq!(monomial.lower_term(2), 1);
    assert_eq!(twisted.lower_term(2), 2);
    assert_eq!((monomial.lower, monomial.upper), (4, 8));
    assert_eq!((twisted.lower, twisted.upper), (6, 8));
}
