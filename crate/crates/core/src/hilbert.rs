//! Hilbert–Samuel tables and their binomial-basis polynomial fits.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::LocalIdeal;

/// Generalized binomial coefficient `C(x, k) = x (x-1) ... (x-k+1) / k!`,
/// defined for negative `x` as well.
pub fn binomial(x: i64, k: u32) -> i128 {
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        // the running product over i+1 consecutive integers is divisible
        // by (i+1)!
        acc = acc * (x as i128 - i) / (i + 1);
    }
    acc
}

/// `Σ (-1)^i e_i C(n + d - 1 - i, d - i)`
pub fn binomial_polynomial_value(e: &[i64], d: usize, n: i64) -> i128 {
    e.iter()
        .enumerate()
        .map(|(i, &ei)| {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            sign * ei as i128 * binomial(n + d as i64 - 1 - i as i64, (d - i) as u32)
        })
        .sum()
}

/// A polynomial fitted to the tail of a table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialFit {
    /// Coefficients `e_0, ..., e_d` in the binomial basis.
    pub e: Vec<i64>,
    /// Largest index where the table differs from the polynomial, or `-1`.
    pub postulation: i64,
    /// Number of trailing table entries checked against the polynomial.
    pub verification_window: usize,
}

/// Fits `values[k] ≈ Σ (-1)^i e_i C(n + d - 1 - i, d - i)` at
/// `n = start + k`. The polynomial is determined by the last `d + 1`
/// entries and must reproduce the last `2d + 3`; otherwise the table is too
/// short and [`Error::WindowUnstable`] asks for more terms.
pub fn fit_binomial_polynomial(values: &[i64], d: usize, start: i64) -> Result<PolynomialFit> {
    let window = 2 * d + 3;
    if values.len() < window {
        return Err(Error::WindowUnstable { len: values.len() });
    }
    let base = values.len() - (d + 1);
    let pts: Vec<i128> = values[base..].iter().map(|&v| v as i128).collect();
    let n0 = start + base as i64;
    let mut residual = pts.clone();
    let mut e = Vec::with_capacity(d + 1);
    for i in 0..=d {
        // the (d - i)-th forward difference of the residual isolates e_i
        let k = d - i;
        let diff: i128 = (0..=k)
            .map(|j| {
                let sign = if (k - j).is_multiple_of(2) { 1 } else { -1 };
                sign * binomial(k as i64, j as u32) * residual[j]
            })
            .sum();
        let ei = if i % 2 == 0 { diff } else { -diff };
        let ei = i64::try_from(ei).map_err(|_| Error::Invalid("Hilbert coefficient overflow".into()))?;
        e.push(ei);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for (j, r) in residual.iter_mut().enumerate() {
            *r -= sign * ei as i128 * binomial(n0 + j as i64 + d as i64 - 1 - i as i64, (d - i) as u32);
        }
    }
    let value = |k: usize| binomial_polynomial_value(&e, d, start + k as i64);
    let tail_start = values.len() - window;
    if (tail_start..values.len()).any(|k| value(k) != values[k] as i128) {
        return Err(Error::WindowUnstable { len: values.len() });
    }
    let postulation = (0..values.len())
        .rev()
        .find(|&k| value(k) != values[k] as i128)
        .map_or(-1, |k| start + k as i64);
    Ok(PolynomialFit { e, postulation, verification_window: window })
}

/// `n ↦ λ(R/I^n)` together with its fitted polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertProfile {
    pub dim: usize,
    pub table: Vec<u64>,
    pub e: Vec<i64>,
    pub postulation: i64,
    pub verification_window: usize,
}

impl HilbertProfile {
    /// Fits a table `table[n] = λ(R/I^n)`, `n = 0, 1, ...`.
    pub fn from_table(table: Vec<u64>, dim: usize) -> Result<Self> {
        let values: Vec<i64> = table.iter().map(|&v| v as i64).collect();
        let fit = fit_binomial_polynomial(&values, dim, 0)?;
        Ok(HilbertProfile {
            dim,
            table,
            e: fit.e,
            postulation: fit.postulation,
            verification_window: fit.verification_window,
        })
    }

    pub fn polynomial_value(&self, n: i64) -> i128 {
        binomial_polynomial_value(&self.e, self.dim, n)
    }

    /// `λ(I^n / I^{n+1})` for the computed range.
    pub fn assoc_graded_h_function(&self) -> Vec<u64> {
        assoc_graded_h_function(&self.table)
    }

    /// `e_i`, zero past the last coefficient.
    pub fn coefficient(&self, i: usize) -> i64 {
        self.e.get(i).copied().unwrap_or(0)
    }

    pub fn render_binomial(&self) -> String {
        render_binomial(&self.e, self.dim, "n")
    }

    pub fn render_expanded(&self) -> String {
        render_expanded(&self.e, self.dim, "n")
    }
}

/// First differences of a Hilbert–Samuel table.
pub fn assoc_graded_h_function(table: &[u64]) -> Vec<u64> {
    table.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Lazily extended list of powers `I^0, I^1, ...` and their colengths.
#[derive(Clone, Debug)]
pub struct Powers<I: LocalIdeal> {
    base: I,
    list: Vec<I>,
    colengths: Vec<u64>,
}

impl<I: LocalIdeal> Powers<I> {
    pub fn new(base: I) -> Self {
        let unit = base.unit_ideal();
        Powers { list: vec![unit], colengths: vec![0], base }
    }

    pub fn base(&self) -> &I {
        &self.base
    }

    fn extend_to(&mut self, n: u32) -> Result<()> {
        while self.list.len() <= n as usize {
            let k = self.list.len();
            let next = if k == 1 { self.base.clone() } else { self.list[k - 1].product(&self.base)? };
            let c = next.colength()?;
            self.list.push(next);
            self.colengths.push(c);
        }
        Ok(())
    }

    /// `I^n`
    pub fn get(&mut self, n: u32) -> Result<&I> {
        self.extend_to(n)?;
        Ok(&self.list[n as usize])
    }

    /// `λ(R/I^n)`
    pub fn colength(&mut self, n: u32) -> Result<u64> {
        self.extend_to(n)?;
        Ok(self.colengths[n as usize])
    }

    /// `λ(R/I^n)` for `n = 0..=n_max`.
    pub fn table(&mut self, n_max: u32) -> Result<Vec<u64>> {
        self.extend_to(n_max)?;
        Ok(self.colengths[..=n_max as usize].to_vec())
    }

    pub fn computed(&self) -> u32 {
        self.list.len() as u32 - 1
    }
}

/// `λ(R/I^n)` for `n = 0..=n_max`.
pub fn hilbert_table<I: LocalIdeal>(ideal: &I, n_max: u32) -> Result<Vec<u64>> {
    Powers::new(ideal.clone()).table(n_max)
}

/// Fits the Hilbert polynomial of `I`, starting from `n_max` table entries
/// and doubling on an unstable window up to `cap`.
pub fn hilbert_profile<I: LocalIdeal>(powers: &mut Powers<I>, n_max: u32, cap: u32) -> Result<HilbertProfile> {
    let dim = powers.base().dim();
    let mut n = n_max.max(2 * dim as u32 + 2);
    loop {
        match HilbertProfile::from_table(powers.table(n)?, dim) {
            Err(Error::WindowUnstable { .. }) if n < cap => n = (2 * n).min(cap),
            other => return other,
        }
    }
}

/// `e_0 C(n+d-1, d) - e_1 C(n+d-2, d-1) + ...` with explicit signs; zero
/// coefficients are dropped.
pub fn render_binomial(e: &[i64], d: usize, var: &str) -> String {
    let mut out = String::new();
    for (i, &ei) in e.iter().enumerate() {
        let signed = if i % 2 == 0 { ei } else { -ei };
        if signed == 0 {
            continue;
        }
        let shift = d as i64 - 1 - i as i64;
        let top = match shift {
            0 => var.to_string(),
            s if s > 0 => format!("{var}+{s}"),
            s => format!("{var}-{}", -s),
        };
        let term = format!("C({top},{})", d - i);
        push_signed(&mut out, signed, &term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// The same polynomial in the monomial basis, e.g. `3n - 2`.
pub fn render_expanded(e: &[i64], d: usize, var: &str) -> String {
    let coeffs = expanded_coefficients(e, d);
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let abs = c.abs();
        let mon = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let coeff = if abs.is_one() && k > 0 {
            String::new()
        } else if abs.denom().is_one() {
            abs.numer().to_string()
        } else {
            format!("({}/{})", abs.numer(), abs.denom())
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&coeff);
        out.push_str(&mon);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Monomial-basis coefficients (constant first) of the binomial-basis
/// polynomial.
pub fn expanded_coefficients(e: &[i64], d: usize) -> Vec<BigRational> {
    let mut total = vec![BigRational::zero(); d + 1];
    for (i, &ei) in e.iter().enumerate() {
        let k = d - i;
        let shift = d as i64 - 1 - i as i64;
        // C(n + shift, k) = Π_{j<k} (n + shift - j) / k!
        let mut poly = vec![BigRational::one()];
        for j in 0..k as i64 {
            let c = BigRational::from_integer(BigInt::from(shift - j));
            let mut next = vec![BigRational::zero(); poly.len() + 1];
            for (p, a) in poly.iter().enumerate() {
                next[p] += a * &c;
                next[p + 1] += a.clone();
            }
            poly = next;
        }
        let fact: BigInt = (1..=k as i64).map(BigInt::from).product();
        let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
        let scale = BigRational::new(BigInt::from(sign * ei), fact);
        for (p, a) in poly.into_iter().enumerate() {
            total[p] += a * &scale;
        }
    }
    total
}

fn push_signed(out: &mut String, value: i64, term: &str) {
    let abs = value.unsigned_abs();
    if out.is_empty() {
        if value < 0 {
            out.push('-');
        }
    } else {
        out.push_str(if value < 0 { " - " } else { " + " });
    }
    if abs != 1 {
        out.push_str(&abs.to_string());
        out.push('*');
    }
    out.push_str(term);
}
