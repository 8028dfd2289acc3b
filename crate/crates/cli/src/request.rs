//! Analysis requests: the versioned JSON schema and its validation.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use hsdepth_core::analysis::AnalysisOptions;
use hsdepth_core::graded::{GradedIdeal, GradedRing};
use hsdepth_core::poly::Monomial;
use hsdepth_core::semigroup::{NumericalSemigroup, SemigroupIdeal, SemigroupRing};
use hsdepth_core::{Field, FieldSpec};

use crate::grammar::parse_polynomial;
use crate::CliError;

pub const SCHEMA: u32 = 1;

fn schema_default() -> u32 {
    SCHEMA
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisRequest {
    #[serde(default = "schema_default")]
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ring: RingSpec,
    pub ideal: IdealSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "RequestBounds::is_empty")]
    pub bounds: RequestBounds,
    /// Names of the checks to report; all of them when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<OutputFormat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    NumericalSemigroup {
        generators: Vec<u32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        field: Option<FieldSpec>,
    },
    GradedPolynomial {
        vars: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        field: Option<FieldSpec>,
    },
}

impl RingSpec {
    pub fn field(&self) -> FieldSpec {
        match self {
            RingSpec::NumericalSemigroup { field, .. } | RingSpec::GradedPolynomial { field, .. } => {
                field.unwrap_or_default()
            }
        }
    }

    pub fn set_field(&mut self, spec: FieldSpec) {
        match self {
            RingSpec::NumericalSemigroup { field, .. } | RingSpec::GradedPolynomial { field, .. } => *field = Some(spec),
        }
    }

    pub fn vars(&self) -> Vec<String> {
        match self {
            RingSpec::NumericalSemigroup { .. } => vec!["t".into()],
            RingSpec::GradedPolynomial { vars, .. } => vars.clone(),
        }
    }

    /// `k[[t^3,t^4,t^5]]` or `k[x,y]`.
    pub fn describe(&self) -> String {
        match self {
            RingSpec::NumericalSemigroup { generators, .. } => {
                let g: Vec<String> = generators.iter().map(|a| format!("t^{a}")).collect();
                format!("k[[{}]]", g.join(","))
            }
            RingSpec::GradedPolynomial { vars, .. } => format!("k[{}]", vars.join(",")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealSpec {
    pub gens: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RequestBounds {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_power: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power_cap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attempts: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_max: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub superficial_window: Option<u32>,
}

impl RequestBounds {
    fn is_empty(&self) -> bool {
        *self == RequestBounds::default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Json,
    Text,
}

/// A parse failure located in the request text (1-based).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn line_column(text: &str, char_offset: usize) -> (usize, usize) {
    let mut line = 1;
    let mut column = 1;
    for c in text.chars().take(char_offset) {
        if c == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    (line, column)
}

impl AnalysisRequest {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("requests serialize")
    }

    pub fn options(&self) -> AnalysisOptions {
        let d = AnalysisOptions::default();
        AnalysisOptions {
            seed: self.seed.unwrap_or(d.seed),
            attempts: self.bounds.attempts.unwrap_or(d.attempts),
            max_power: self.bounds.max_power,
            power_cap: self.bounds.power_cap.unwrap_or(d.power_cap),
            r_max: self.bounds.r_max,
            superficial_window: self.bounds.superficial_window.unwrap_or(d.superficial_window),
        }
    }
}

/// Parses and validates a request. Generator strings are checked against
/// the grammar here; errors point at the offending character in `text`.
pub fn parse_request(text: &str) -> Result<AnalysisRequest, ParseError> {
    let req: AnalysisRequest = serde_json::from_str(text).map_err(|e| ParseError {
        line: e.line().max(1),
        column: e.column().max(1),
        message: e.to_string(),
    })?;
    let whole = |message: String| ParseError { line: 1, column: 1, message };
    if req.schema != SCHEMA {
        return Err(whole(format!("unsupported schema {}; expected {SCHEMA}", req.schema)));
    }
    match &req.ring {
        RingSpec::NumericalSemigroup { generators, .. } => {
            NumericalSemigroup::new(generators).map_err(|e| whole(e.to_string()))?;
        }
        RingSpec::GradedPolynomial { vars, .. } => {
            if vars.is_empty() {
                return Err(whole("a polynomial ring needs at least one variable".into()));
            }
            for (k, v) in vars.iter().enumerate() {
                let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                    && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                if !ok || vars[..k].contains(v) {
                    return Err(whole(format!("invalid or repeated variable name '{v}'")));
                }
            }
        }
    }
    if req.ideal.gens.is_empty() {
        return Err(whole("the ideal has no generators".into()));
    }
    let vars = req.ring.vars();
    // generator strings are located in the source to report positions
    let mut search_from = text.find("\"gens\"").unwrap_or(0);
    for g in &req.ideal.gens {
        let quoted = serde_json::to_string(g).expect("string");
        let found = text[search_from..].find(&quoted).map(|i| i + search_from);
        if let Some(i) = found {
            search_from = i + quoted.len();
        }
        if let Err(e) = parse_polynomial(g, &vars) {
            let (line, column) = match found {
                Some(i) => line_column(text, text[..i].chars().count() + 1 + e.offset),
                None => (1, 1),
            };
            return Err(ParseError { line, column, message: format!("in generator {g:?}: {}", e.message) });
        }
    }
    Ok(req)
}

pub fn parse_field(flag: &str) -> Result<FieldSpec, String> {
    let lower = flag.to_ascii_lowercase();
    if lower == "q" {
        return Ok(FieldSpec::Rationals);
    }
    let p = lower
        .strip_prefix("fp:")
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| format!("expected 'q' or 'fp:<p>', got '{flag}'"))?;
    Ok(FieldSpec::Prime { p })
}

fn invalid_generator(g: &str, message: impl std::fmt::Display) -> CliError {
    CliError::Invalid(format!("generator {g:?}: {message}"))
}

pub fn build_semigroup_ideal<F: Field>(
    field: F,
    generators: &[u32],
    gens: &[String],
) -> Result<SemigroupIdeal<F>, CliError> {
    let sg = NumericalSemigroup::new(generators)?;
    let ring = SemigroupRing::new(sg, field);
    let vars = vec!["t".to_string()];
    let mut elems = Vec::with_capacity(gens.len());
    for g in gens {
        let terms = parse_polynomial(g, &vars).map_err(|e| invalid_generator(g, e.message))?;
        let f = ring.field();
        let terms = terms.into_iter().map(|t| (t.exps[0], f.from_i64(t.coeff))).collect();
        elems.push(ring.element(terms).map_err(|e| invalid_generator(g, e))?);
    }
    Ok(SemigroupIdeal::new(&ring, elems)?)
}

pub fn build_graded_ideal<F: Field>(field: F, vars: &[String], gens: &[String]) -> Result<GradedIdeal<F>, CliError> {
    let ring: Arc<GradedRing<F>> = GradedRing::new(field, vars.to_vec())?;
    let mut polys = Vec::with_capacity(gens.len());
    for g in gens {
        let terms = parse_polynomial(g, vars).map_err(|e| invalid_generator(g, e.message))?;
        let f = ring.field();
        let terms = terms.into_iter().map(|t| (Monomial::new(t.exps), f.from_i64(t.coeff))).collect();
        polys.push(ring.poly().from_terms(terms));
    }
    Ok(GradedIdeal::new(&ring, polys)?)
}
