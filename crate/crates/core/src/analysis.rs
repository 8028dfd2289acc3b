//! The full analysis of one ideal: Hilbert profile, minimal reduction,
//! superficial sequence, both sums, verdict, named checks and Sally module.

use serde::Serialize;

use crate::criteria::{self, CheckInputs, CheckOutcome, DepthVerdict, HmSums, VvResult};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_profile, HilbertProfile, Powers};
use crate::ideal::LocalIdeal;
use crate::quotient::QuotientIdeal;
use crate::reduction::{self, ReductionCertificate, SuperficialStep, DEFAULT_ATTEMPTS};
use crate::sally::{self, SallyProfile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub seed: u64,
    pub attempts: u32,
    /// Initial Hilbert table length; derived from the dimension when unset.
    pub max_power: Option<u32>,
    /// Table lengths never grow past this.
    pub power_cap: u32,
    /// Reduction numbers are searched up to this; `λ(R/I) + d + 4` when
    /// unset.
    pub r_max: Option<u32>,
    /// Superficiality is checked on degrees `r..=r + superficial_window`.
    pub superficial_window: u32,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            seed: 0,
            attempts: DEFAULT_ATTEMPTS,
            max_power: None,
            power_cap: 64,
            r_max: None,
            superficial_window: 2,
        }
    }
}

/// A stage that failed; later stages depending on it are skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub stage: String,
    pub error: String,
}

/// The bounds every finite certificate in the analysis was checked against.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub table_length: u32,
    pub power_cap: u32,
    pub r_max: u32,
    pub vv_n_max: u32,
    pub superficial_from: u32,
    pub superficial_to: u32,
}

/// Analysis of `I/(a)` for the first element `a` of the reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientSummary {
    pub dim: usize,
    pub e: Vec<i64>,
    pub reduction_number: u32,
    pub sums: HmSums,
    pub verdict: DepthVerdict,
}

#[derive(Clone, Debug)]
pub struct Analysis<I: LocalIdeal> {
    pub ideal: I,
    pub dim: usize,
    /// `λ(R/I)`
    pub colength: u64,
    /// `μ(I)`
    pub generator_count: u64,
    pub is_maximal: bool,
    pub profile: Option<HilbertProfile>,
    pub reduction: Option<ReductionCertificate<I>>,
    pub analytic_spread: Option<usize>,
    pub sums: Option<HmSums>,
    /// VV results for `x_1..x_k`, `k = 1..=d`.
    pub vv: Vec<VvResult>,
    pub verdict: Option<DepthVerdict>,
    pub superficial: Vec<SuperficialStep<I::Element>>,
    pub quotient: Option<QuotientSummary>,
    pub sally: Option<SallyProfile>,
    pub checks: Vec<CheckOutcome>,
    pub diagnostics: Vec<Diagnostic>,
    pub bounds: Bounds,
}

impl<I: LocalIdeal> Analysis<I> {
    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Every check passed and no stage failed.
    pub fn is_clean(&self) -> bool {
        self.diagnostics.is_empty() && self.checks.iter().all(CheckOutcome::passed)
    }

    fn diagnose(&mut self, stage: &str, e: &Error) {
        self.diagnostics.push(Diagnostic { stage: stage.to_string(), error: e.to_string() });
    }
}

/// Runs every stage on `ideal`. Fails only when `I` is not primary to the
/// maximal ideal or its basic invariants cannot be computed; later failures
/// are recorded as diagnostics.
pub fn analyze<I: LocalIdeal>(ideal: I, opts: &AnalysisOptions) -> Result<Analysis<I>> {
    let dim = ideal.dim();
    let colength = ideal.colength()?;
    let generator_count = ideal.minimal_generator_count()?;
    let is_maximal = ideal.equals(&ideal.maximal_ideal())?;
    let r_max = opts.r_max.unwrap_or(colength as u32 + dim as u32 + 4);
    let mut a = Analysis {
        ideal: ideal.clone(),
        dim,
        colength,
        generator_count,
        is_maximal,
        profile: None,
        reduction: None,
        analytic_spread: None,
        sums: None,
        vv: Vec::new(),
        verdict: None,
        superficial: Vec::new(),
        quotient: None,
        sally: None,
        checks: Vec::new(),
        diagnostics: Vec::new(),
        bounds: Bounds { power_cap: opts.power_cap, r_max, ..Bounds::default() },
    };
    let mut powers = Powers::new(ideal);

    match reduction::minimal_reduction(&mut powers, opts.seed, opts.attempts, r_max) {
        Ok(c) => a.reduction = Some(c),
        Err(e) => a.diagnose("reduction", &e),
    }
    let exhausted = a.reduction.is_none();
    let r = a.reduction.as_ref().map(|c| c.reduction_number);
    let n_start = opts.max_power.unwrap_or(match (dim, r) {
        // in dimension one the postulation number is r - 1, so this table
        // is long enough to pin the polynomial down
        (1, Some(r)) => 2 * r + 6,
        _ => 2 * dim as u32 + 6,
    });
    match hilbert_profile(&mut powers, n_start, opts.power_cap) {
        Ok(p) => a.profile = Some(p),
        Err(e) => {
            a.diagnose("hilbert", &e);
            return Ok(a);
        }
    }
    let profile = a.profile.clone().expect("profile");
    let table_length = profile.table.len() as u32 - 1;
    a.bounds.table_length = table_length;
    match reduction::analytic_spread(&mut powers, table_length) {
        Ok(l) => a.analytic_spread = Some(l),
        Err(e) => a.diagnose("analytic_spread", &e),
    }
    if exhausted && opts.r_max.is_none() {
        // the default bound was too small: retry with one derived from the
        // profile (exact in dimension one, where r = n(I) + 1)
        let retry = if dim == 1 { (profile.postulation + 1).max(0) as u32 } else { opts.power_cap };
        if retry > r_max {
            a.bounds.r_max = retry;
            if let Ok(c) = reduction::minimal_reduction(&mut powers, opts.seed, opts.attempts, retry) {
                a.diagnostics.retain(|d| d.stage != "reduction");
                a.reduction = Some(c);
            }
        }
    }
    let Some(cert) = a.reduction.clone() else {
        a.checks.push(criteria::northcott_check(&profile, colength, generator_count));
        return Ok(a);
    };
    let r = cert.reduction_number;

    let sums = match criteria::hm_sums(&mut powers, &cert) {
        Ok(s) => s,
        Err(e) => {
            a.diagnose("sums", &e);
            return Ok(a);
        }
    };
    a.sums = Some(sums.clone());

    let vv_n_max = r + dim as u32 + 2;
    a.bounds.vv_n_max = vv_n_max;
    for k in 1..=dim {
        match criteria::valabrega_valla(&mut powers, &cert.generators[..k], vv_n_max) {
            Ok(v) => a.vv.push(v),
            Err(e) => {
                a.diagnose("valabrega_valla", &e);
                break;
            }
        }
    }

    let e1 = profile.coefficient(1);
    let verdict = match criteria::depth_verdict(&sums, e1, dim, &a.vv) {
        Ok(v) => v,
        Err(e) => {
            a.diagnose("verdict", &e);
            let mut c = CheckOutcome::new("sandwich");
            c.hypothesis = true;
            c.violations.push(e.to_string());
            a.checks.push(c);
            return Ok(a);
        }
    };
    a.verdict = Some(verdict.clone());

    a.bounds.superficial_from = r;
    a.bounds.superficial_to = r + opts.superficial_window;
    match reduction::superficial_sequence(
        &mut powers,
        &cert.generators,
        r,
        opts.superficial_window,
        n_start,
        opts.power_cap,
    ) {
        Ok(steps) => a.superficial = steps,
        Err(e) => a.diagnose("superficial", &e),
    }

    if dim >= 2 {
        match quotient_summary(&powers, &cert, r_max, n_start, opts.power_cap) {
            Ok(q) => a.quotient = Some(q),
            Err(e) => a.diagnose("quotient", &e),
        }
    }

    match sally::sally_table(&mut powers, &cert, table_length, opts.power_cap) {
        Ok(s) => a.sally = Some(s),
        Err(e) => a.diagnose("sally", &e),
    }

    let inputs = CheckInputs {
        dim,
        profile: &profile,
        colength,
        generator_count,
        reduction_number: r,
        sums: &sums,
        verdict: &verdict,
        vv: &a.vv,
        is_maximal,
    };
    let mut checks = vec![
        criteria::northcott_check(&profile, colength, generator_count),
        criteria::huneke_ooishi_check(&inputs),
        criteria::valabrega_valla_check(&inputs),
        criteria::verdict_consistency_check(&inputs),
        criteria::guerriere_check(&inputs),
        criteria::rees_cm_check(&inputs),
        criteria::elias_check(&inputs),
        criteria::abhyankar_check(&inputs),
        criteria::dimension_one_check(&inputs),
    ];
    let quotients: Vec<&HilbertProfile> = a.superficial.iter().map(|s| &s.quotient_profile).collect();
    checks.push(criteria::coefficient_transfer_check(&profile, &quotients));
    checks.push(sally_machine_check(dim, a.quotient.as_ref(), a.vv.first()));
    if let Some(s) = &a.sally {
        checks.push(sally::vasconcelos_check(&profile, s, colength, r));
        checks.push(sally::vaz_pinto_check(s, &sums, &verdict));
    }
    a.checks = checks;
    Ok(a)
}

/// Analyzes `I/(a)` with the reduction `(a_2..a_d)`.
fn quotient_summary<I: LocalIdeal>(
    powers: &Powers<I>,
    cert: &ReductionCertificate<I>,
    r_max: u32,
    n_start: u32,
    cap: u32,
) -> Result<QuotientSummary> {
    let ideal = powers.base();
    let dim = ideal.dim() - 1;
    let modulus = ideal.with_generators(cert.generators[..1].to_vec())?;
    let q = QuotientIdeal::new(ideal, &modulus, dim)?;
    let mut qpowers = Powers::new(q.clone());
    let profile = hilbert_profile(&mut qpowers, n_start, cap)?;
    let rest = cert.generators[1..].to_vec();
    let j = q.with_generators(rest.clone())?;
    let (r, j_products) = reduction::reduction_number(&j, &mut qpowers, r_max)?
        .ok_or(Error::NotAReduction { r_max })?;
    let qcert = ReductionCertificate {
        ideal: j,
        generators: rest,
        coefficients: Vec::new(),
        basis: Vec::new(),
        reduction_number: r,
        minimal: true,
        seed: cert.seed,
        attempt: cert.attempt,
        j_products,
    };
    let sums = criteria::hm_sums(&mut qpowers, &qcert)?;
    let verdict = criteria::depth_verdict(&sums, profile.coefficient(1), dim, &[])?;
    Ok(QuotientSummary { dim, e: profile.e, reduction_number: r, sums, verdict })
}

/// When `depth G(I/(a)) > 0` is certified, the initial form of `a` must be
/// regular on `G(I)`, i.e. the VV conditions for `a` alone hold.
pub fn sally_machine_check(dim: usize, quotient: Option<&QuotientSummary>, vv_first: Option<&VvResult>) -> CheckOutcome {
    if dim < 2 {
        return CheckOutcome::not_applicable("sally_machine", "dimension one has no proper quotient to compare");
    }
    let (Some(q), Some(vv)) = (quotient, vv_first) else {
        return CheckOutcome::not_applicable("sally_machine", "quotient analysis unavailable");
    };
    let mut c = CheckOutcome::new("sally_machine");
    let depth_positive = q.verdict.is_cohen_macaulay() || (q.dim >= 2 && q.verdict.at_least_d_minus_1());
    c.witness("quotient_depth_positive", depth_positive).witness("vv_n_max", vv.n_max);
    c.hypothesis = depth_positive;
    if depth_positive {
        c.require(vv.holds(), || {
            format!("depth of the quotient is positive but VV for a fails at n = {}", vv.first_failure.unwrap_or(0))
        });
        c.conclusion = vv.holds();
    }
    c
}
