//! The two length sums bracketing `e_1`, the depth verdict they certify, and
//! the named consistency checks built on them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{HilbertProfile, Powers};
use crate::ideal::LocalIdeal;
use crate::reduction::ReductionCertificate;

/// A value recorded as evidence by a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Bool(bool),
    Int(i64),
    Ints(Vec<i64>),
    Text(String),
}

impl From<bool> for Witness {
    fn from(v: bool) -> Self {
        Witness::Bool(v)
    }
}

impl From<i64> for Witness {
    fn from(v: i64) -> Self {
        Witness::Int(v)
    }
}

impl From<u64> for Witness {
    fn from(v: u64) -> Self {
        Witness::Int(v as i64)
    }
}

impl From<u32> for Witness {
    fn from(v: u32) -> Self {
        Witness::Int(v as i64)
    }
}

impl From<usize> for Witness {
    fn from(v: usize) -> Self {
        Witness::Int(v as i64)
    }
}

impl From<Vec<i64>> for Witness {
    fn from(v: Vec<i64>) -> Self {
        Witness::Ints(v)
    }
}

impl From<&str> for Witness {
    fn from(v: &str) -> Self {
        Witness::Text(v.to_string())
    }
}

impl From<String> for Witness {
    fn from(v: String) -> Self {
        Witness::Text(v)
    }
}

/// Result of one named check: whether its hypothesis holds, whether the
/// conclusion was verified, and every inconsistency found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub applicable: bool,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub violations: Vec<String>,
    pub witnesses: BTreeMap<String, Witness>,
}

impl CheckOutcome {
    pub fn new(name: &str) -> Self {
        CheckOutcome {
            name: name.to_string(),
            applicable: true,
            hypothesis: false,
            conclusion: false,
            violations: Vec::new(),
            witnesses: BTreeMap::new(),
        }
    }

    pub fn not_applicable(name: &str, reason: &str) -> Self {
        let mut c = CheckOutcome::new(name);
        c.applicable = false;
        c.witness("reason", reason);
        c
    }

    pub fn witness(&mut self, key: &str, value: impl Into<Witness>) -> &mut Self {
        self.witnesses.insert(key.to_string(), value.into());
        self
    }

    /// Records a violation unless `ok`.
    pub fn require(&mut self, ok: bool, message: impl FnOnce() -> String) -> bool {
        if !ok {
            self.violations.push(message());
        }
        ok
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `λ(I^n/J∩I^n)` and `λ(I^n/JI^{n-1})` for `n = 1..=r+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HmSums {
    pub lower_terms: Vec<u64>,
    pub upper_terms: Vec<u64>,
    pub lower: u64,
    pub upper: u64,
}

impl HmSums {
    /// `λ(I^n/J∩I^n)`, zero past the computed range.
    pub fn lower_term(&self, n: u32) -> u64 {
        n.checked_sub(1).and_then(|k| self.lower_terms.get(k as usize)).copied().unwrap_or(0)
    }

    /// `λ(I^n/JI^{n-1})`, zero past the computed range.
    pub fn upper_term(&self, n: u32) -> u64 {
        n.checked_sub(1).and_then(|k| self.upper_terms.get(k as usize)).copied().unwrap_or(0)
    }

    /// `Σ_{n≥2} λ(J∩I^n/JI^{n-1})`
    pub fn guerriere_sum(&self) -> u64 {
        self.upper - self.lower
    }
}

/// Both sums for a verified reduction. Terms past `r` vanish because
/// `I^n = JI^{n-1} ⊆ J` there; the `n = r+1` term is computed anyway and
/// kept as evidence.
pub fn hm_sums<I: LocalIdeal>(powers: &mut Powers<I>, cert: &ReductionCertificate<I>) -> Result<HmSums> {
    let r = cert.reduction_number;
    let j = &cert.ideal;
    let cj = j.colength()?;
    let mut lower_terms = Vec::with_capacity(r as usize + 1);
    let mut upper_terms = Vec::with_capacity(r as usize + 1);
    for n in 1..=r + 1 {
        let i_n = powers.get(n)?.clone();
        // λ(I^n/J∩I^n) = λ((J+I^n)/J)
        lower_terms.push(cj - j.sum(&i_n)?.colength()?);
        let prod = cert.j_product(n - 1, powers)?;
        upper_terms.push(prod.colength()? - powers.colength(n)?);
    }
    Ok(HmSums {
        lower: lower_terms.iter().sum(),
        upper: upper_terms.iter().sum(),
        lower_terms,
        upper_terms,
    })
}

/// `λ(I^n/J∩I^n)` computed through the intersection itself.
pub fn lower_term_by_intersection<I: LocalIdeal>(
    powers: &mut Powers<I>,
    cert: &ReductionCertificate<I>,
    n: u32,
) -> Result<u64> {
    let i_n = powers.get(n)?.clone();
    Ok(cert.ideal.intersect(&i_n)?.colength()? - powers.colength(n)?)
}

/// Outcome of checking `(x_1..x_s) ∩ I^n = (x_1..x_s) I^{n-1}` for
/// `n = 1..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VvResult {
    pub elements: usize,
    pub n_max: u32,
    /// First `n` where the condition fails.
    pub first_failure: Option<u32>,
}

impl VvResult {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks the Valabrega–Valla conditions for the ideal `K` generated by
/// `elements ⊆ I`. Uses lengths when `K` is primary to the maximal ideal or
/// principal, and ideal equality otherwise.
pub fn valabrega_valla<I: LocalIdeal>(
    powers: &mut Powers<I>,
    elements: &[I::Element],
    n_max: u32,
) -> Result<VvResult> {
    let s = elements.len();
    let mut out = VvResult { elements: s, n_max, first_failure: None };
    if s == 0 {
        return Ok(out);
    }
    let k = powers.base().with_generators(elements.to_vec())?;
    let primary = match k.colength() {
        Ok(c) => Some(c),
        Err(Error::NotPrimary(_)) => None,
        Err(e) => return Err(e),
    };
    let mut k_prod = k.clone();
    for n in 1..=n_max {
        if n >= 2 {
            k_prod = k_prod.product(powers.base())?;
        }
        let i_n = powers.get(n)?.clone();
        let holds = match primary {
            // K I^{n-1} ⊆ K ∩ I^n ⊆ I^n, compare λ(I^n/K∩I^n) with
            // λ(I^n/KI^{n-1})
            Some(ck) => ck - k.sum(&i_n)?.colength()? == k_prod.colength()? - powers.colength(n)?,
            // (x) ∩ I^n = x (I^n : x) and λ(R/(I^n : x)) = λ(R/I^n) - λ(R/(I^n + (x)))
            None if s == 1 => powers.colength(n)? - i_n.sum(&k)?.colength()? == powers.colength(n - 1)?,
            None => k.intersect(&i_n)?.equals(&k_prod)?,
        };
        if !holds {
            out.first_failure = Some(n);
            break;
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "depth")]
pub enum DepthKind {
    CohenMacaulay,
    AtLeastDMinus1,
    /// `depth G(I) >= k` from regular initial forms.
    LowerBound(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthVerdict {
    pub kind: DepthKind,
    pub dim: usize,
    pub e1: i64,
    pub lower: u64,
    pub upper: u64,
    /// Longest initial part of the superficial sequence with the
    /// Valabrega–Valla conditions verified up to `vv_n_max`.
    pub vv_depth: usize,
    pub vv_n_max: u32,
}

impl DepthVerdict {
    pub fn is_cohen_macaulay(&self) -> bool {
        self.kind == DepthKind::CohenMacaulay
    }

    /// `depth G(I) >= d - 1` certified.
    pub fn at_least_d_minus_1(&self) -> bool {
        matches!(self.kind, DepthKind::CohenMacaulay | DepthKind::AtLeastDMinus1)
    }

    /// The certified lower bound on `depth G(I)`.
    pub fn depth_lower_bound(&self) -> usize {
        match self.kind {
            DepthKind::CohenMacaulay => self.dim,
            DepthKind::AtLeastDMinus1 => (self.dim - 1).max(self.vv_depth),
            DepthKind::LowerBound(k) => k,
        }
    }
}

/// Synthesizes the verdict from the sums; fails if the sums do not bracket
/// `e_1`.
pub fn depth_verdict(sums: &HmSums, e1: i64, dim: usize, vv: &[VvResult]) -> Result<DepthVerdict> {
    let (lower, upper) = (sums.lower as i64, sums.upper as i64);
    if !(lower <= e1 && e1 <= upper) {
        return Err(Error::SandwichViolated { lower, e1, upper });
    }
    let vv_depth = vv.iter().take_while(|v| v.holds()).count();
    let vv_n_max = vv.first().map_or(0, |v| v.n_max);
    let kind = if lower == e1 {
        DepthKind::CohenMacaulay
    } else if upper == e1 {
        DepthKind::AtLeastDMinus1
    } else {
        DepthKind::LowerBound(vv_depth)
    };
    Ok(DepthVerdict { kind, dim, e1, lower: sums.lower, upper: sums.upper, vv_depth, vv_n_max })
}

/// Everything the named checks read.
pub struct CheckInputs<'a> {
    pub dim: usize,
    pub profile: &'a HilbertProfile,
    /// `λ(R/I)`
    pub colength: u64,
    /// `μ(I)`
    pub generator_count: u64,
    pub reduction_number: u32,
    pub sums: &'a HmSums,
    pub verdict: &'a DepthVerdict,
    /// VV results for the initial parts `x_1..x_k`, `k = 1..=d`.
    pub vv: &'a [VvResult],
    /// Whether `I` is the maximal ideal.
    pub is_maximal: bool,
}

impl CheckInputs<'_> {
    fn e(&self, i: usize) -> i64 {
        self.profile.coefficient(i)
    }
}

pub fn northcott_check(profile: &HilbertProfile, colength: u64, generator_count: u64) -> CheckOutcome {
    let mut c = CheckOutcome::new("northcott");
    let (e0, e1, len) = (profile.coefficient(0), profile.coefficient(1), colength as i64);
    let parameter = generator_count == profile.dim as u64;
    c.witness("e0", e0).witness("e1", e1).witness("colength", len).witness("mu", generator_count);
    c.require(e1 >= 0, || format!("e1 = {e1} < 0"));
    c.require(e0 - e1 <= len, || format!("e0 - e1 = {} exceeds colength {len}", e0 - e1));
    c.hypothesis = e1 == 0;
    c.require(c.hypothesis == parameter, || {
        format!("e1 = {e1} but the ideal {} a parameter ideal", if parameter { "is" } else { "is not" })
    });
    if c.hypothesis {
        let higher_zero = profile.e.iter().skip(1).all(|&v| v == 0);
        c.require(higher_zero, || format!("e1 = 0 but e = {:?}", profile.e));
        c.conclusion = parameter && higher_zero;
    }
    c
}

pub fn huneke_ooishi_check(inp: &CheckInputs) -> CheckOutcome {
    let mut c = CheckOutcome::new("huneke_ooishi");
    let (e0, e1, len) = (inp.e(0), inp.e(1), inp.colength as i64);
    let r = inp.reduction_number;
    c.witness("e0_minus_e1", e0 - e1).witness("colength", len).witness("r", r);
    c.hypothesis = e0 - e1 == len;
    c.require(c.hypothesis == (r <= 1), || {
        format!("e0 - e1 = {} vs colength {len} disagrees with reduction number {r}", e0 - e1)
    });
    if c.hypothesis {
        let higher_zero = inp.profile.e.iter().skip(2).all(|&v| v == 0);
        c.require(higher_zero, || format!("higher coefficients nonzero: {:?}", inp.profile.e));
        c.require(inp.verdict.is_cohen_macaulay(), || "G(I) not certified Cohen-Macaulay".into());
        // H(n) = P(n) from n = 1 on
        c.require(inp.profile.postulation <= 0, || format!("postulation {} > 0", inp.profile.postulation));
        c.conclusion = c.passed();
    }
    if inp.is_maximal && r <= 2 {
        c.witness("maximal_ideal_r_at_most_2", true);
        c.require(inp.verdict.is_cohen_macaulay(), || {
            format!("maximal ideal with reduction number {r} <= 2 but G not certified Cohen-Macaulay")
        });
    }
    c
}

pub fn valabrega_valla_check(inp: &CheckInputs) -> CheckOutcome {
    let mut c = CheckOutcome::new("valabrega_valla");
    c.hypothesis = true;
    let full = inp.vv.last();
    if let Some(v) = full {
        c.witness("elements", v.elements).witness("n_max", v.n_max);
        if let Some(n) = v.first_failure {
            c.witness("first_failure", n);
        }
        c.conclusion = v.holds();
    }
    c.witness("regular_prefix", inp.verdict.vv_depth);
    c
}

/// The biconditionals linking the verdict to the sums and to the
/// Valabrega–Valla conditions.
pub fn verdict_consistency_check(inp: &CheckInputs) -> CheckOutcome {
    let mut c = CheckOutcome::new("verdict_consistency");
    let s = inp.sums;
    let e1 = inp.e(1);
    c.hypothesis = true;
    c.witness("lower", s.lower).witness("e1", e1).witness("upper", s.upper);
    c.require(s.lower as i64 <= e1 && e1 <= s.upper as i64, || "lower <= e1 <= upper fails".into());
    let r = inp.reduction_number;
    c.require(s.upper_term(r + 1) == 0 && s.lower_term(r + 1) == 0, || {
        format!("terms at n = r + 1 = {} do not vanish", r + 1)
    });
    if let Some(full) = inp.vv.get(inp.dim.wrapping_sub(1)) {
        c.require((s.lower as i64 == e1) == full.holds(), || {
            format!("lower = e1 is {} but the full VV check {}", s.lower as i64 == e1, vv_word(full))
        });
    }
    if inp.dim >= 2 {
        let partial = &inp.vv[inp.dim - 2];
        c.require((s.upper as i64 == e1) == partial.holds(), || {
            format!("upper = e1 is {} but the VV check for d-1 elements {}", s.upper as i64 == e1, vv_word(partial))
        });
    }
    if inp.verdict.is_cohen_macaulay() {
        c.require(s.lower == s.upper, || "Cohen-Macaulay verdict with lower != upper".into());
    }
    c.conclusion = c.passed();
    c
}

fn vv_word(v: &VvResult) -> String {
    match v.first_failure {
        None => format!("passes up to n = {}", v.n_max),
        Some(n) => format!("fails at n = {n}"),
    }
}

pub fn guerriere_check(inp: &CheckInputs) -> CheckOutcome {
    let mut c = CheckOutcome::new("guerriere");
    let sum = inp.sums.guerriere_sum();
    c.witness("sum", sum);
    c.hypothesis = sum == 1;
    if c.hypothesis {
        let e1 = inp.e(1);
        let ok = inp.sums.upper as i64 == e1 && (inp.sums.lower as i64) < e1;
        c.require(ok, || "sum is 1 but the verdict is not depth = d - 1".into());
        c.require(inp.verdict.kind == DepthKind::AtLeastDMinus1, || {
            format!("verdict {:?}", inp.verdict.kind)
        });
        c.conclusion = c.passed();
    }
    c
}

pub fn rees_cm_check(inp: &CheckInputs) -> CheckOutcome {
    let mut c = CheckOutcome::new("rees_cm");
    let d = inp.dim as u32;
    let truncated: u64 = (1..d).map(|n| inp.sums.lower_term(n)).sum();
    let e1 = inp.e(1);
    c.witness("truncated_sum", truncated).witness("e1", e1);
    let equal = truncated as i64 == e1;
    c.hypothesis = equal;
    let goto_shimoda = inp.verdict.is_cohen_macaulay() && inp.reduction_number < d;
    c.witness("g_cm_and_r_at_most_d_minus_1", goto_shimoda);
    c.require(equal == goto_shimoda, || {
        format!(
            "truncated sum {} e1 but G CM with r <= d-1 is {goto_shimoda}",
            if equal { "equals" } else { "differs from" }
        )
    });
    c.conclusion = c.hypothesis && goto_shimoda;
    c
}

/// Elias's criterion for every `t = 0..=r+1`.
pub fn elias_check(inp: &CheckInputs) -> CheckOutcome {
    let mut c = CheckOutcome::new("elias");
    let d = inp.dim;
    let e0 = inp.e(0);
    let s = inp.sums;
    let mut applied = Vec::new();
    for t in 0..=inp.reduction_number + 1 {
        // VV_n ⇔ λ(I^n/J∩I^n) = λ(I^n/JI^{n-1}); VV_0 and VV_1 always hold
        let vv = (2..=t).all(|n| s.lower_term(n) == s.upper_term(n));
        let delta = s.upper_term(t + 1);
        if !vv || delta > (d as u64 - 1).min(1) {
            continue;
        }
        applied.push(t as i64);
        let depth_ok = if delta == 0 { inp.verdict.is_cohen_macaulay() } else { inp.verdict.at_least_d_minus_1() };
        c.require(depth_ok, || format!("t = {t}, delta = {delta}: verdict {:?} below d - delta", inp.verdict.kind));
        if t as i64 >= e0 - 1 {
            c.require(inp.verdict.is_cohen_macaulay(), || format!("t = {t} >= e0 - 1 but G not Cohen-Macaulay"));
        }
    }
    c.hypothesis = !applied.is_empty();
    c.witness("t_values", applied);
    c.conclusion = c.hypothesis && c.passed();
    c
}

/// Abhyankar's inequality and the minimal / almost minimal multiplicity
/// branches, for the maximal ideal only.
pub fn abhyankar_check(inp: &CheckInputs) -> CheckOutcome {
    if !inp.is_maximal {
        return CheckOutcome::not_applicable("abhyankar", "ideal is not the maximal ideal");
    }
    let mut c = CheckOutcome::new("abhyankar");
    let d = inp.dim as i64;
    let e0 = inp.e(0);
    let mu = inp.generator_count as i64;
    c.witness("e0", e0).witness("mu", mu).witness("d", d);
    c.require(e0 > mu - d, || format!("e0 = {e0} < mu - d + 1 = {}", mu - d + 1));
    if e0 == mu - d + 1 {
        c.hypothesis = true;
        c.witness("class", "minimal_multiplicity");
        c.require(inp.reduction_number <= 1, || format!("minimal multiplicity but r = {}", inp.reduction_number));
        c.require(inp.verdict.is_cohen_macaulay(), || "minimal multiplicity but G not Cohen-Macaulay".into());
        c.require(inp.profile.e.iter().skip(2).all(|&v| v == 0), || "higher coefficients nonzero".into());
        c.require(inp.profile.postulation <= 0, || format!("postulation {} > 0", inp.profile.postulation));
        c.conclusion = c.passed();
    } else if e0 == mu - d + 2 {
        c.hypothesis = true;
        c.witness("class", "almost_minimal_multiplicity");
        let h = h_polynomial(&inp.profile.assoc_graded_h_function(), inp.dim);
        c.witness("h_vector", h.clone());
        match rossi_valla_shape(&h, mu - d) {
            Some(s) => {
                c.witness("s", s);
                c.require(2 <= s && s <= mu - d + 1, || format!("s = {s} outside [2, mu - d + 1]"));
                c.require(inp.verdict.at_least_d_minus_1(), || "depth below d - 1".into());
                c.require(inp.verdict.is_cohen_macaulay() == (s == 2), || {
                    format!("s = {s} but Cohen-Macaulay verdict is {}", inp.verdict.is_cohen_macaulay())
                });
            }
            None => {
                c.require(false, || format!("h-vector {h:?} is not 1 + {}z + z^s", mu - d));
            }
        }
        c.conclusion = c.passed();
    } else {
        c.witness("class", "neither");
    }
    c
}

/// Coefficients of `(1 - z)^d Σ H_G(n) z^n` that are determined by the
/// table.
pub fn h_polynomial(h_function: &[u64], d: usize) -> Vec<i64> {
    let mut coeffs: Vec<i64> = h_function.iter().map(|&v| v as i64).collect();
    for _ in 0..d {
        let mut next = coeffs.clone();
        for k in 1..coeffs.len() {
            next[k] = coeffs[k] - coeffs[k - 1];
        }
        coeffs = next;
    }
    coeffs
}

/// `Some(s)` when `h = 1 + a z + z^s` (trailing zeros allowed).
fn rossi_valla_shape(h: &[i64], a: i64) -> Option<i64> {
    if h.len() < 2 || h[0] != 1 || h[1] != a {
        return None;
    }
    let mut s = None;
    for (k, &v) in h.iter().enumerate().skip(2) {
        match v {
            0 => {}
            1 if s.is_none() => s = Some(k as i64),
            _ => return None,
        }
    }
    s
}

/// The dimension-one identities: `upper = e_1`, `r = n(I) + 1`,
/// `e_0 - e_1 = λ(A/I) ⇔ aI = I^2`, the step identity
/// `P(n+1) - H(n+1) = P(n) - H(n) + λ(I^{n+1}/aI^n)` and `H ≥ P`.
pub fn dimension_one_check(inp: &CheckInputs) -> CheckOutcome {
    if inp.dim != 1 {
        return CheckOutcome::not_applicable("dimension_one", "dimension is not 1");
    }
    let mut c = CheckOutcome::new("dimension_one");
    c.hypothesis = true;
    let p = inp.profile;
    let (e0, e1) = (inp.e(0), inp.e(1));
    let r = inp.reduction_number as i64;
    c.witness("upper", inp.sums.upper).witness("e1", e1).witness("r", r).witness("postulation", p.postulation);
    c.require(inp.sums.upper as i64 == e1, || format!("upper {} != e1 {e1}", inp.sums.upper));
    c.require(r == p.postulation + 1, || format!("r = {r} but postulation + 1 = {}", p.postulation + 1));
    c.require((e0 - e1 == inp.colength as i64) == (r <= 1), || {
        format!("e0 - e1 = {} vs colength {} disagrees with r = {r}", e0 - e1, inp.colength)
    });
    let gap = |n: usize| p.polynomial_value(n as i64) - p.table[n] as i128;
    for n in 0..p.table.len() {
        c.require(gap(n) <= 0, || format!("H({n}) < P({n})"));
        if n + 1 < p.table.len() {
            let step = inp.sums.upper_term(n as u32 + 1) as i128;
            c.require(gap(n + 1) == gap(n) + step, || format!("step identity fails at n = {n}"));
        }
    }
    c.conclusion = c.passed();
    c
}

/// `e_i` of `I/(x_1..x_k)` against `e_i` of `I`: equal for `i < d - k + 1`
/// in a domain.
pub fn coefficient_transfer_check(profile: &HilbertProfile, quotients: &[&HilbertProfile]) -> CheckOutcome {
    if quotients.is_empty() {
        return CheckOutcome::not_applicable("coefficient_transfer", "no certified superficial element");
    }
    let mut c = CheckOutcome::new("coefficient_transfer");
    c.hypothesis = true;
    for (k, q) in quotients.iter().enumerate() {
        c.witness(&format!("quotient_{}_e", k + 1), q.e.clone());
        for i in 0..=q.dim {
            c.require(q.coefficient(i) == profile.coefficient(i), || {
                format!("e{i} of the quotient by {} elements is {} but e{i}(I) = {}", k + 1, q.coefficient(i), profile.coefficient(i))
            });
        }
    }
    c.conclusion = c.passed();
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_polynomial_of_345() {
        // H_G = 1, 3, 3, 3, ...
        assert_eq!(h_polynomial(&[1, 3, 3, 3, 3], 1), vec![1, 2, 0, 0, 0]);
    }

    #[test]
    fn rossi_valla_shapes() {
        assert_eq!(rossi_valla_shape(&[1, 2, 1, 0, 0], 2), Some(2));
        assert_eq!(rossi_valla_shape(&[1, 2, 0, 1, 0], 2), Some(3));
        assert_eq!(rossi_valla_shape(&[1, 2, 0, 0], 2), None);
        assert_eq!(rossi_valla_shape(&[1, 2, 1, 1], 2), None);
    }

    #[test]
    fn verdict_kinds() {
        let sums = HmSums { lower_terms: vec![1, 0], upper_terms: vec![1, 1], lower: 1, upper: 2 };
        let v = depth_verdict(&sums, 2, 1, &[]).unwrap();
        assert_eq!(v.kind, DepthKind::AtLeastDMinus1);
        assert_eq!(sums.guerriere_sum(), 1);
        let v = depth_verdict(&sums, 1, 1, &[]).unwrap();
        assert_eq!(v.kind, DepthKind::CohenMacaulay);
        assert!(matches!(depth_verdict(&sums, 3, 1, &[]), Err(Error::SandwichViolated { .. })));
    }
}
