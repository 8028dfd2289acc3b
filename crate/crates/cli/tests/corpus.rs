mod common;

use hsdepth_cli::corpus::{curated_instances, random_instances, run_corpus, Expectation};
use hsdepth_cli::parse_request;
use hsdepth_cli::request::RingSpec;
use serde_json::{json, Value};

use common::*;

fn semigroup_exponents(gens: &[String]) -> Option<Vec<u32>> {
    gens.iter().map(|g| g.strip_prefix("t^").and_then(|e| e.parse().ok())).collect()
}

/// Every expectation attributed to a brute-force oracle is recomputed here.
#[test]
fn sidecars_agree_with_the_oracles() {
    for inst in curated_instances() {
        let exp: Expectation = inst.expectation.clone().unwrap().unwrap();
        let req = parse_request(&inst.request).unwrap();
        let table_prefix = exp.prefixes.get("/hilbert/table");
        let n_max = 24;
        let (table, e): (Vec<u64>, Vec<i64>) = match (&req.ring, exp.oracle.as_str()) {
            (RingSpec::NumericalSemigroup { generators, .. }, o) if o.starts_with("order-sets") => {
                let exps = semigroup_exponents(&req.ideal.gens).unwrap();
                let table = semigroup_table(generators, &exps, n_max);
                let (e0, e1) = dim1_coefficients(&table);
                let (r, lower, upper) = semigroup_sums(generators, &exps);
                let v = &exp.values;
                assert_eq!(v["/reduction/reduction_number"], json!(r), "{}", inst.name);
                assert_eq!(v["/sums/upper"], json!(upper), "{}", inst.name);
                if let Some(l) = v.get("/sums/lower") {
                    assert_eq!(*l, json!(lower), "{}", inst.name);
                }
                let cm = if lower as i64 == e1 { "cohen-macaulay" } else { "at-least-d-minus1" };
                assert_eq!(v["/verdict/kind/kind"], json!(cm), "{}", inst.name);
                (table, vec![e0, e1])
            }
            (RingSpec::NumericalSemigroup { .. }, "principal-value") => {
                // λ(R/(a)^n) = n v(a) for a nonzerodivisor a of value v(a)
                let v = semigroup_exponents(&req.ideal.gens[..1].iter().map(|g| g.split(' ').next().unwrap().to_string()).collect::<Vec<_>>()).unwrap()[0];
                ((0..=n_max as u64).map(|n| n * v as u64).collect(), vec![v as i64, 0])
            }
            (RingSpec::GradedPolynomial { .. }, o) if o.starts_with("standard-monomials") => {
                let exps = monomial_exponents(&req.ideal.gens).unwrap();
                let table = plane_table(&exps, 12);
                let (e0, e1, e2) = dim2_coefficients(&table);
                (table, vec![e0, e1, e2])
            }
            (RingSpec::GradedPolynomial { .. }, o) if o.starts_with("complete-intersection") => {
                // G(I) = (R/I)[T_1, T_2] with λ(R/I) = product of the degrees
                let len = 4u64;
                ((0..=12u64).map(|n| len * n * (n + 1) / 2).collect(), vec![4, 0, 0])
            }
            (_, "no pure power of y") => {
                assert_eq!(exp.error.as_deref(), Some("not-primary"));
                continue;
            }
            (_, o) => panic!("{}: unknown oracle {o}", inst.name),
        };
        let prefix: Vec<u64> = table_prefix.unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        assert_eq!(&table[..prefix.len()], &prefix[..], "{}", inst.name);
        assert_eq!(exp.values["/hilbert/e"], json!(e), "{}", inst.name);
        if let Some(Value::Number(p)) = exp.values.get("/hilbert/postulation") {
            let e = e.clone();
            let poly = |n: i64| match e.len() {
                2 => e[0] * n - e[1],
                _ => e[0] * n * (n + 1) / 2 - e[1] * n + e[2],
            };
            let post = (0..table.len()).filter(|&n| table[n] as i64 != poly(n as i64)).max().map_or(-1, |n| n as i64);
            assert_eq!(p.as_i64(), Some(post), "{}", inst.name);
        }
    }
}

#[test]
fn curated_corpus_is_green() {
    let outcomes = run_corpus(&curated_instances(), 4);
    assert!(outcomes.len() >= 12);
    for o in &outcomes {
        assert!(o.passed(), "{}: {:?}", o.name, o.failures);
    }
    let dims: Vec<usize> = outcomes.iter().filter_map(|o| o.report.as_ref().map(|r| r.dim)).collect();
    assert!(dims.contains(&1) && dims.contains(&2));
}

#[test]
fn random_tables_agree_with_the_oracles() {
    let instances = random_instances();
    let outcomes = run_corpus(&instances, 4);
    let mut checked = 0;
    for (inst, o) in instances.iter().zip(&outcomes) {
        assert!(o.passed(), "{}: {:?}", o.name, o.failures);
        let req = parse_request(&inst.request).unwrap();
        let table = &o.report.as_ref().unwrap().hilbert.as_ref().unwrap().table;
        let oracle = match &req.ring {
            RingSpec::NumericalSemigroup { generators, .. } => {
                let Some(exps) = semigroup_exponents(&req.ideal.gens) else { continue };
                semigroup_table(generators, &exps, table.len() as u32 - 1)
            }
            RingSpec::GradedPolynomial { .. } => {
                let Some(exps) = monomial_exponents(&req.ideal.gens) else { continue };
                plane_table(&exps, table.len() as u32 - 1)
            }
        };
        assert_eq!(table, &oracle, "{}", inst.name);
        checked += 1;
    }
    assert!(checked >= 80, "{checked}");
}
