//! Corpus runs: request files with optional `*.expect.json` sidecars,
//! checked against their expectations and the invariants every report must
//! satisfy.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::Value;

use hsdepth_core::criteria::DepthKind;
use hsdepth_core::semigroup::NumericalSemigroup;

use crate::request::{AnalysisRequest, IdealSpec, RequestBounds, RingSpec, SCHEMA};
use crate::{analyze_text, AnalysisReport, CliError};

/// Seed of the bundled randomized instances.
pub const RANDOM_SEED: u64 = 20_240_601;
pub const RANDOM_DIM1_MONOMIAL: usize = 60;
pub const RANDOM_DIM1_GENERIC: usize = 10;
pub const RANDOM_DIM2: usize = 30;

/// Expected values of one instance, addressed by JSON pointers into the
/// serialized report.
#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    /// Where the expected values come from.
    #[serde(default)]
    pub oracle: String,
    #[serde(default)]
    pub values: BTreeMap<String, Value>,
    /// Arrays in the report that must start with these elements.
    #[serde(default)]
    pub prefixes: BTreeMap<String, Vec<Value>>,
    /// The request must be rejected with this error tag.
    #[serde(default)]
    pub error: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub request: String,
    pub expectation: Option<Result<Expectation, String>>,
}

impl Instance {
    pub fn new(name: impl Into<String>, request: impl Into<String>, expectation: Option<&str>) -> Self {
        Instance {
            name: name.into(),
            request: request.into(),
            expectation: expectation.map(|t| serde_json::from_str(t).map_err(|e| format!("bad sidecar: {e}"))),
        }
    }
}

macro_rules! curated {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $name, ".json")), include_str!(concat!("../corpus/", $name, ".expect.json")))),*]
    };
}

const CURATED: &[(&str, &str, &str)] = curated!(
    "01-sg345-maximal",
    "02-sg345-t3-t4",
    "03-sg357-maximal",
    "04-sg4511-maximal",
    "05-sg57-t10-t14",
    "06-sg469-t6-t9",
    "07-sg34-maximal",
    "08-sg5613-t5-t6",
    "09-sg345-maximal-rationals",
    "10-sg345-principal",
    "11-plane-maximal",
    "12-plane-maximal-square",
    "13-plane-depth-zero",
    "14-plane-parameter-rationals",
    "15-plane-complete-intersection",
    "16-plane-not-primary",
);

pub fn curated_instances() -> Vec<Instance> {
    CURATED.iter().map(|(n, r, e)| Instance::new(*n, *r, Some(e))).collect()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn random_semigroup(rng: &mut ChaCha8Rng) -> Vec<u32> {
    loop {
        let k = rng.gen_range(2..=4);
        let mut g: Vec<u32> = (0..k).map(|_| rng.gen_range(2..=15)).collect();
        g.sort_unstable();
        g.dedup();
        if g.len() >= 2 && g.iter().fold(0, |a, &b| gcd(a, b)) == 1 {
            return g;
        }
    }
}

/// Up to three distinct positive members of `S` below `2 * max + 3`.
fn random_members(rng: &mut ChaCha8Rng, gens: &[u32]) -> Vec<u32> {
    let sg = NumericalSemigroup::new(gens).expect("valid semigroup");
    let top = 2 * gens[gens.len() - 1] + 2;
    let members: Vec<u32> = (1..=top).filter(|&s| sg.contains(s)).collect();
    let k = rng.gen_range(1..=3.min(members.len()));
    let mut pick: Vec<u32> = members.choose_multiple(rng, k).copied().collect();
    pick.sort_unstable();
    pick
}

fn request(name: String, ring: RingSpec, gens: Vec<String>) -> String {
    AnalysisRequest {
        schema: SCHEMA,
        name: Some(name),
        ring,
        ideal: IdealSpec { gens },
        seed: None,
        bounds: RequestBounds::default(),
        checks: None,
        output: None,
    }
    .to_json()
}

/// Deterministic randomized instances: monomial and non-monomial ideals in
/// numerical semigroup rings, and equigenerated ideals of `k[x,y]`.
pub fn random_instances() -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut out = Vec::new();
    for i in 0..RANDOM_DIM1_MONOMIAL {
        let g = random_semigroup(&mut rng);
        let gens = random_members(&mut rng, &g).iter().map(|e| format!("t^{e}")).collect();
        let ring = RingSpec::NumericalSemigroup { generators: g, field: None };
        out.push(Instance::new(format!("random-d1-{i:03}"), request(format!("random-d1-{i:03}"), ring, gens), None));
    }
    for i in 0..RANDOM_DIM1_GENERIC {
        let g = random_semigroup(&mut rng);
        let sg = NumericalSemigroup::new(&g).expect("valid semigroup");
        let gens = random_members(&mut rng, &g)
            .iter()
            .map(|&e| {
                let tail = (e + 1..).find(|&s| sg.contains(s)).expect("members are unbounded");
                format!("t^{e} + {}*t^{tail}", rng.gen_range(1..=9))
            })
            .collect();
        let ring = RingSpec::NumericalSemigroup { generators: g, field: None };
        let name = format!("random-d1-generic-{i:03}");
        out.push(Instance::new(name.clone(), request(name, ring, gens), None));
    }
    for i in 0..RANDOM_DIM2 {
        let delta: u32 = rng.gen_range(1..=4);
        let mut gens = vec![format!("x^{delta}"), format!("y^{delta}")];
        for a in 1..delta {
            if rng.gen_bool(0.5) {
                gens.push(format!("x^{a}*y^{}", delta - a));
            }
        }
        if delta >= 2 && rng.gen_bool(0.3) {
            let a = rng.gen_range(1..delta);
            gens.push(format!("x^{a}*y^{} + {}*x^{}*y^{}", delta - a, rng.gen_range(1..=9), a - 1, delta - a + 1));
        }
        let ring = RingSpec::GradedPolynomial { vars: vec!["x".into(), "y".into()], field: None };
        let name = format!("random-d2-{i:03}");
        out.push(Instance::new(name.clone(), request(name, ring, gens), None));
    }
    out
}

/// Curated instances followed by the randomized ones.
pub fn bundled_instances() -> Vec<Instance> {
    let mut v = curated_instances();
    v.extend(random_instances());
    v
}

/// Reads `*.json` request files from `dir` (sorted by name), each with an
/// optional `<stem>.expect.json` sidecar.
pub fn load_dir(dir: &Path) -> Result<Vec<Instance>, CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", dir.display()));
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("");
            name.ends_with(".json") && !name.ends_with(".expect.json")
        })
        .collect();
    paths.sort();
    let mut out = Vec::with_capacity(paths.len());
    for p in paths {
        let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or("").to_string();
        let request = std::fs::read_to_string(&p).map_err(io)?;
        let sidecar = p.with_file_name(format!("{stem}.expect.json"));
        let expectation = match std::fs::read_to_string(&sidecar) {
            Ok(t) => Some(t),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => None,
            Err(e) => return Err(io(e)),
        };
        out.push(Instance::new(stem, request, expectation.as_deref()));
    }
    Ok(out)
}

/// Everything a correct report must satisfy, whatever the instance.
pub fn invariant_violations(r: &AnalysisReport) -> Vec<String> {
    let mut v = Vec::new();
    if !r.clean {
        for c in r.checks.iter().filter(|c| !c.passed()) {
            v.push(format!("check {} failed: {}", c.name, c.violations.join("; ")));
        }
        for d in &r.diagnostics {
            v.push(format!("stage {} failed: {}", d.stage, d.error));
        }
    }
    let (Some(h), Some(s), Some(verdict), Some(red)) = (&r.hilbert, &r.sums, &r.verdict, &r.reduction) else {
        v.push("report is missing the profile, the sums, the verdict or the reduction".into());
        return v;
    };
    let d = r.dim;
    let e = |i: usize| h.e.get(i).copied().unwrap_or(0);
    let (e0, e1, len) = (e(0), e(1), r.colength as i64);
    if s.lower_terms.iter().sum::<u64>() != s.lower || s.upper_terms.iter().sum::<u64>() != s.upper {
        v.push("sums differ from their per-n breakdown".into());
    }
    if verdict.lower != s.lower || verdict.upper != s.upper || verdict.e1 != e1 {
        v.push("verdict evidence differs from the sums".into());
    }
    if !(s.lower as i64 <= e1 && e1 <= s.upper as i64) {
        v.push(format!("sandwich fails: {} <= {e1} <= {}", s.lower, s.upper));
    }
    if d == 1 && s.upper as i64 != e1 {
        v.push(format!("dimension one: upper sum {} differs from e1 = {e1}", s.upper));
    }
    if let Some(full) = r.vv.get(d - 1) {
        if (s.lower as i64 == e1) != full.holds() {
            v.push("lower = e1 disagrees with the VV conditions for the full sequence".into());
        }
    }
    if d == 2 {
        if let Some(first) = r.vv.first() {
            if (s.upper as i64 == e1) != first.holds() {
                v.push("upper = e1 disagrees with the VV conditions for d - 1 elements".into());
            }
        }
    }
    match verdict.kind {
        DepthKind::CohenMacaulay if s.lower as i64 != e1 => v.push("CM verdict without lower = e1".into()),
        DepthKind::AtLeastDMinus1 if s.upper as i64 != e1 => v.push("depth d - 1 verdict without upper = e1".into()),
        _ => {}
    }
    for (k, step) in r.superficial.iter().enumerate() {
        for i in 0..d - k {
            if step.quotient_e.get(i).copied().unwrap_or(0) != e(i) {
                v.push(format!("e{i} of the quotient by {} superficial elements differs", k + 1));
            }
        }
    }
    if d >= 2 && r.superficial.len() != d {
        v.push(format!("{} superficial elements certified, expected {d}", r.superficial.len()));
    }
    if let Some(sally) = &r.sally {
        let sc = |i: usize| sally.s.get(i).copied().unwrap_or(0);
        if e1 != e0 - len + sc(0) {
            v.push(format!("e1 = {e1} but e0 - colength + s0 = {}", e0 - len + sc(0)));
        }
        for i in 1..d {
            if e(i + 1) != sc(i) {
                v.push(format!("e{} = {} but s{i} = {}", i + 1, e(i + 1), sc(i)));
            }
        }
        let sum = (s.upper - s.upper_terms.first().copied().unwrap_or(0)) as i64;
        if (sc(0) == sum) != (s.upper as i64 == e1) {
            v.push("s0 = sum of the upper terms past n = 1 disagrees with depth >= d - 1".into());
        }
    } else {
        v.push("no Sally profile".into());
    }
    if e1 < 0 || e0 - e1 > len {
        v.push(format!("e1 = {e1} violates 0 <= e1 and e0 - e1 <= colength"));
    }
    if (e1 == 0) != (r.generator_count == d as u64) {
        v.push(format!("e1 = {e1} but the ideal has {} minimal generators", r.generator_count));
    }
    if r.is_maximal {
        let bound = r.generator_count as i64 - d as i64 + 1;
        if e0 < bound {
            v.push(format!("multiplicity {e0} below embedding dimension bound {bound}"));
        }
        let expected_r = if e0 == 1 { 0 } else { 1 };
        if e0 == bound && red.reduction_number != expected_r {
            v.push(format!("minimal multiplicity with r = {}", red.reduction_number));
        }
    }
    v
}

/// Differences between a report and its expectation.
pub fn expectation_violations(report: &Value, exp: &Expectation) -> Vec<String> {
    let mut v = Vec::new();
    if let Some(tag) = &exp.error {
        v.push(format!("expected error {tag}, got a report"));
    }
    for (ptr, want) in &exp.values {
        match report.pointer(ptr) {
            Some(got) if got == want => {}
            got => v.push(format!("{ptr}: expected {want}, got {}", got.map_or("nothing".into(), Value::to_string))),
        }
    }
    for (ptr, want) in &exp.prefixes {
        let got = report.pointer(ptr).and_then(Value::as_array);
        match got {
            Some(a) if a.len() >= want.len() && a[..want.len()] == want[..] => {}
            _ => v.push(format!("{ptr}: expected prefix {}", Value::Array(want.clone()))),
        }
    }
    v
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub name: String,
    pub report: Option<AnalysisReport>,
    pub error: Option<String>,
    pub failures: Vec<String>,
    pub millis: u128,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_instance(inst: &Instance) -> Outcome {
    let start = Instant::now();
    let result = analyze_text(&inst.request, false);
    let millis = start.elapsed().as_millis();
    let mut failures = Vec::new();
    let expectation = match &inst.expectation {
        Some(Ok(e)) => Some(e),
        Some(Err(msg)) => {
            failures.push(msg.clone());
            None
        }
        None => None,
    };
    let (report, error) = match result {
        Ok(report) => {
            failures.extend(invariant_violations(&report));
            if let Some(exp) = expectation {
                let value = serde_json::to_value(&report).expect("reports serialize");
                failures.extend(expectation_violations(&value, exp));
            }
            (Some(report), None)
        }
        Err(e) => {
            match expectation.and_then(|x| x.error.as_deref()) {
                Some(tag) if tag == e.tag() => {}
                Some(tag) => failures.push(format!("expected error {tag}, got {}: {e}", e.tag())),
                None => failures.push(format!("{}: {e}", e.tag())),
            }
            (None, Some(e.to_string()))
        }
    };
    Outcome { name: inst.name.clone(), report, error, failures, millis }
}

/// Runs every instance; `jobs > 1` analyzes instances in parallel. Results
/// come back in input order.
pub fn run_corpus(instances: &[Instance], jobs: usize) -> Vec<Outcome> {
    if jobs <= 1 {
        return instances.iter().map(run_instance).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| instances.par_iter().map(run_instance).collect())
}

pub fn render_summary(outcomes: &[Outcome]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<34} {:>3} {:>14} {:>3} {:>9} {:<22} {:>8}", "instance", "d", "e", "r", "sums", "verdict", "ms");
    for o in outcomes {
        let status = if o.passed() { "" } else { "  FAILED" };
        match &o.report {
            Some(r) => {
                let e = r.hilbert.as_ref().map_or("-".into(), |h| format!("{:?}", h.e));
                let red = r.reduction.as_ref().map_or("-".into(), |c| c.reduction_number.to_string());
                let sums = r.sums.as_ref().map_or("-".into(), |s| format!("{}/{}", s.lower, s.upper));
                let verdict = r.verdict.as_ref().map_or("-".into(), |v| match v.kind {
                    DepthKind::CohenMacaulay => "cohen-macaulay".to_string(),
                    DepthKind::AtLeastDMinus1 => "depth >= d-1".to_string(),
                    DepthKind::LowerBound(k) => format!("depth >= {k}"),
                });
                let _ = writeln!(
                    out,
                    "{:<34} {:>3} {:>14} {:>3} {:>9} {:<22} {:>8}{status}",
                    o.name, r.dim, e, red, sums, verdict, o.millis
                );
            }
            None => {
                let err = o.error.as_deref().unwrap_or("");
                let _ = writeln!(out, "{:<34} rejected: {err}{status}", o.name);
            }
        }
    }
    let failed: Vec<&Outcome> = outcomes.iter().filter(|o| !o.passed()).collect();
    let _ = writeln!(out, "{} instances, {} failed", outcomes.len(), failed.len());
    for o in failed {
        let _ = writeln!(out, "FAILED {}", o.name);
        for f in &o.failures {
            let _ = writeln!(out, "  {f}");
        }
    }
    out
}
