pub mod corpus;
pub mod grammar;
pub mod report;
pub mod request;

use std::time::Instant;

use hsdepth_core::analysis::analyze;
use hsdepth_core::ideal::LocalIdeal;
use hsdepth_core::{Field, FieldSpec, PrimeField, Rationals};

pub use report::AnalysisReport;
pub use request::{parse_request, AnalysisRequest, ParseError};

use request::{build_graded_ideal, build_semigroup_ideal, RingSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] hsdepth_core::Error),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    /// Every error that stops an analysis before it starts is a usage or
    /// input error.
    pub fn exit_code(&self) -> i32 {
        2
    }

    /// Short kebab-case tag used in corpus expectations.
    pub fn tag(&self) -> &'static str {
        use hsdepth_core::Error as E;
        match self {
            CliError::Parse(_) => "parse",
            CliError::Core(E::NotPrimary(_)) => "not-primary",
            CliError::Core(E::UnsupportedRing(_)) => "unsupported-ring",
            CliError::Core(E::Inhomogeneous(_)) => "inhomogeneous",
            CliError::Core(E::InvalidField(_)) => "invalid-field",
            CliError::Core(_) => "analysis",
            CliError::Invalid(_) => "invalid",
            CliError::Io(_) => "io",
        }
    }
}

fn run<I: LocalIdeal>(req: &AnalysisRequest, ideal: I) -> Result<AnalysisReport, CliError> {
    // primary to the maximal ideal before anything else runs
    ideal.colength()?;
    let a = analyze(ideal, &req.options())?;
    Ok(AnalysisReport::from_analysis(req, &a))
}

fn run_in<F: Field>(req: &AnalysisRequest, field: F) -> Result<AnalysisReport, CliError> {
    match &req.ring {
        RingSpec::NumericalSemigroup { generators, .. } => {
            run(req, build_semigroup_ideal(field, generators, &req.ideal.gens)?)
        }
        RingSpec::GradedPolynomial { vars, .. } => run(req, build_graded_ideal(field, vars, &req.ideal.gens)?),
    }
}

/// Runs the full pipeline on a validated request. Timing is recorded only
/// when asked for, so that reports stay byte-identical across runs.
pub fn analyze_request(req: &AnalysisRequest, timing: bool) -> Result<AnalysisReport, CliError> {
    let start = Instant::now();
    let mut report = match req.ring.field() {
        FieldSpec::Rationals => run_in(req, Rationals)?,
        FieldSpec::Prime { p } => run_in(req, PrimeField::new(p)?)?,
    };
    if timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// Parses `text` and analyzes it.
pub fn analyze_text(text: &str, timing: bool) -> Result<AnalysisReport, CliError> {
    analyze_request(&parse_request(text)?, timing)
}
