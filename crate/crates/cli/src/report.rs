//! The analysis report: a serializable snapshot of an [`Analysis`] with
//! every element rendered as a string.

use std::fmt::Write as _;

use serde::Serialize;

use hsdepth_core::analysis::{Analysis, Bounds, Diagnostic, QuotientSummary};
use hsdepth_core::criteria::{CheckOutcome, DepthKind, DepthVerdict, HmSums, VvResult};
use hsdepth_core::hilbert::HilbertProfile;
use hsdepth_core::ideal::LocalIdeal;
use hsdepth_core::sally::SallyProfile;
use hsdepth_core::{Field, FieldSpec};

use crate::request::{AnalysisRequest, SCHEMA};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSection {
    /// `λ(R/I^n)` for `n = 0..`
    pub table: Vec<u64>,
    pub e: Vec<i64>,
    pub postulation: i64,
    pub polynomial: String,
    pub expanded: String,
    /// `λ(I^n/I^{n+1})`
    pub h_function: Vec<u64>,
    pub verification_window: usize,
}

impl HilbertSection {
    fn new(p: &HilbertProfile) -> Self {
        HilbertSection {
            table: p.table.clone(),
            e: p.e.clone(),
            postulation: p.postulation,
            polynomial: p.render_binomial(),
            expanded: p.render_expanded(),
            h_function: p.assoc_graded_h_function(),
            verification_window: p.verification_window,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionSection {
    pub generators: Vec<String>,
    /// `generators[k] = Σ coefficients[k][j] * basis[j]`
    pub coefficients: Vec<Vec<String>>,
    pub basis: Vec<String>,
    pub reduction_number: u32,
    pub seed: u64,
    pub attempt: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumsSection {
    /// `λ(R/J) - λ(R/(J + I^n))` for `n = 1..`
    pub lower_terms: Vec<u64>,
    /// `λ(R/JI^{n-1}) - λ(R/I^n)` for `n = 1..`
    pub upper_terms: Vec<u64>,
    pub lower: u64,
    pub upper: u64,
    pub guerriere_sum: u64,
}

impl SumsSection {
    fn new(s: &HmSums) -> Self {
        SumsSection {
            lower_terms: s.lower_terms.clone(),
            upper_terms: s.upper_terms.clone(),
            lower: s.lower,
            upper: s.upper,
            guerriere_sum: s.guerriere_sum(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperficialSection {
    pub element: String,
    pub checked_from: u32,
    pub checked_to: u32,
    /// Coefficients of `I` modulo the elements so far.
    pub quotient_e: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ring: String,
    pub field: FieldSpec,
    pub ideal: Vec<String>,
    pub seed: u64,
    pub dim: usize,
    pub colength: u64,
    pub generator_count: u64,
    pub is_maximal: bool,
    pub hilbert: Option<HilbertSection>,
    pub reduction: Option<ReductionSection>,
    pub analytic_spread: Option<usize>,
    pub sums: Option<SumsSection>,
    pub vv: Vec<VvResult>,
    pub verdict: Option<DepthVerdict>,
    pub superficial: Vec<SuperficialSection>,
    pub quotient: Option<QuotientSummary>,
    pub sally: Option<SallyProfile>,
    pub checks: Vec<CheckOutcome>,
    pub diagnostics: Vec<Diagnostic>,
    pub bounds: Bounds,
    pub clean: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl AnalysisReport {
    pub fn from_analysis<I: LocalIdeal>(req: &AnalysisRequest, a: &Analysis<I>) -> Self {
        let ideal = &a.ideal;
        let field = ideal.field();
        let render = |e: &I::Element| ideal.render_element(e);
        let reduction = a.reduction.as_ref().map(|c| ReductionSection {
            generators: c.generators.iter().map(render).collect(),
            coefficients: c.coefficients.iter().map(|row| row.iter().map(|x| field.render(x)).collect()).collect(),
            basis: c.basis.iter().map(render).collect(),
            reduction_number: c.reduction_number,
            seed: c.seed,
            attempt: c.attempt,
        });
        let superficial = a
            .superficial
            .iter()
            .map(|s| SuperficialSection {
                element: render(&s.certificate.element),
                checked_from: s.certificate.checked_from,
                checked_to: s.certificate.checked_to,
                quotient_e: s.quotient_profile.e.clone(),
            })
            .collect();
        let checks = a
            .checks
            .iter()
            .filter(|c| req.checks.as_ref().is_none_or(|names| names.contains(&c.name)))
            .cloned()
            .collect();
        AnalysisReport {
            schema: SCHEMA,
            name: req.name.clone(),
            ring: req.ring.describe(),
            field: field.spec(),
            ideal: ideal.generators().iter().map(render).collect(),
            seed: req.options().seed,
            dim: a.dim,
            colength: a.colength,
            generator_count: a.generator_count,
            is_maximal: a.is_maximal,
            hilbert: a.profile.as_ref().map(HilbertSection::new),
            reduction,
            analytic_spread: a.analytic_spread,
            sums: a.sums.as_ref().map(SumsSection::new),
            vv: a.vv.clone(),
            verdict: a.verdict.clone(),
            superficial,
            quotient: a.quotient.clone(),
            sally: a.sally.clone(),
            checks,
            diagnostics: a.diagnostics.clone(),
            bounds: a.bounds.clone(),
            clean: a.is_clean(),
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn e(&self, i: usize) -> Option<i64> {
        self.hilbert.as_ref().map(|h| h.e.get(i).copied().unwrap_or(0))
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        if let Some(n) = &self.name {
            let _ = writeln!(w, "instance   {n}");
        }
        let _ = writeln!(w, "ring       {} over {}", self.ring, self.field);
        let _ = writeln!(w, "ideal      ({})", self.ideal.join(", "));
        let _ = writeln!(
            w,
            "invariants dim {}, colength {}, {} minimal generators{}",
            self.dim,
            self.colength,
            self.generator_count,
            if self.is_maximal { ", maximal ideal" } else { "" }
        );
        if let Some(h) = &self.hilbert {
            let table: Vec<String> = h.table.iter().map(u64::to_string).collect();
            let _ = writeln!(w, "H(n)       {} (n = 0..{})", table.join(" "), h.table.len() - 1);
            let _ = writeln!(w, "P(n)       {}", h.polynomial);
            let _ = writeln!(w, "           = {}", h.expanded);
            let e: Vec<String> = h.e.iter().map(i64::to_string).collect();
            let _ = writeln!(w, "e          ({}), postulation number {}", e.join(", "), h.postulation);
        }
        if let Some(r) = &self.reduction {
            let _ = writeln!(
                w,
                "reduction  J = ({}), r = {} (seed {}, attempt {})",
                r.generators.join(", "),
                r.reduction_number,
                r.seed,
                r.attempt
            );
        }
        if let Some(s) = &self.sums {
            let lt: Vec<String> = s.lower_terms.iter().map(u64::to_string).collect();
            let ut: Vec<String> = s.upper_terms.iter().map(u64::to_string).collect();
            let _ = writeln!(w, "lower sum  {} = {}", s.lower, lt.join(" + "));
            let _ = writeln!(w, "upper sum  {} = {}", s.upper, ut.join(" + "));
        }
        if let Some(v) = &self.verdict {
            let kind = match v.kind {
                DepthKind::CohenMacaulay => "G(I) is Cohen-Macaulay".to_string(),
                DepthKind::AtLeastDMinus1 => format!("depth G(I) >= {}", v.dim.saturating_sub(1)),
                DepthKind::LowerBound(k) => format!("depth G(I) >= {k}"),
            };
            let _ = writeln!(w, "verdict    {kind}");
        }
        if let Some(s) = &self.sally {
            let s_coeffs: Vec<String> = s.s.iter().map(i64::to_string).collect();
            let _ = writeln!(
                w,
                "sally      {}s = ({})",
                if s.vanishes { "vanishes, " } else { "" },
                s_coeffs.join(", ")
            );
        }
        for c in &self.checks {
            let status = if !c.passed() {
                "FAIL"
            } else if !c.applicable {
                "n/a"
            } else if c.conclusion {
                "holds"
            } else if c.hypothesis {
                "hypothesis only"
            } else {
                "not triggered"
            };
            let _ = writeln!(w, "check      {:<22} {status}", c.name);
            for v in &c.violations {
                let _ = writeln!(w, "             {v}");
            }
        }
        for d in &self.diagnostics {
            let _ = writeln!(w, "diagnostic {}: {}", d.stage, d.error);
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(w, "time       {ms} ms");
        }
        out
    }
}
