//! Lengths of the Sally module `⊕ I^{n+1}/IJ^n` and the identities tying
//! its Hilbert coefficients to those of `I`.

use serde::Serialize;

use crate::criteria::{CheckOutcome, DepthVerdict, HmSums};
use crate::error::{Error, Result};
use crate::hilbert::{binomial, fit_binomial_polynomial, HilbertProfile, Powers};
use crate::ideal::LocalIdeal;
use crate::reduction::ReductionCertificate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SallyProfile {
    /// `λ(I^{n+1}/IJ^n)` for `n = 0..`.
    pub table: Vec<u64>,
    /// `s_0, ..., s_{d-1}`
    pub s: Vec<i64>,
    pub vanishes: bool,
    /// Largest `n` where the table differs from its polynomial, or `-1`.
    pub postulation: i64,
}

impl SallyProfile {
    /// `λ(S_n)`, `None` past the table.
    pub fn length(&self, n: usize) -> Option<u64> {
        self.table.get(n).copied()
    }

    pub fn coefficient(&self, i: usize) -> i64 {
        self.s.get(i).copied().unwrap_or(0)
    }
}

/// Computes `λ(I^{n+1}/IJ^n) = λ(R/IJ^n) - λ(R/I^{n+1})` for
/// `n = 0..=n_max` and fits its polynomial of degree `d - 1`, doubling the
/// table up to `cap` when the window is unstable.
pub fn sally_table<I: LocalIdeal>(
    powers: &mut Powers<I>,
    cert: &ReductionCertificate<I>,
    n_max: u32,
    cap: u32,
) -> Result<SallyProfile> {
    let d = powers.base().dim();
    let i = powers.base().clone();
    let mut j_powers = Powers::new(cert.ideal.clone());
    let mut table: Vec<u64> = Vec::new();
    let mut n = n_max.max(2 * d as u32 + 2);
    loop {
        for m in table.len() as u32..=n {
            let ij = j_powers.get(m)?.product(&i)?;
            let outer = powers.colength(m + 1)?;
            let c = ij.colength()?;
            if c < outer {
                return Err(Error::ContainmentViolated(format!("I J^{m} is not inside I^{}", m + 1)));
            }
            table.push(c - outer);
        }
        if table.iter().all(|&v| v == 0) {
            return Ok(SallyProfile { table, s: vec![0; d], vanishes: true, postulation: -1 });
        }
        let values: Vec<i64> = table.iter().map(|&v| v as i64).collect();
        // λ(S_{m}) is read as a polynomial in m + 1
        match fit_binomial_polynomial(&values, d - 1, 1) {
            Ok(fit) => {
                return Ok(SallyProfile { table, s: fit.e, vanishes: false, postulation: fit.postulation - 1 })
            }
            Err(Error::WindowUnstable { .. }) if n < cap => n = (2 * n).min(cap),
            Err(e) => return Err(e),
        }
    }
}

/// `e_1 = e_0 - λ(R/I) + s_0`, `e_{i+1} = s_i`, the length formula
/// `H(n) = e_0 C(n+d-1,d) + (λ(R/I) - e_0) C(n+d-2,d-1) - λ(S_{n-1})`, and
/// `S = 0 ⇔ r ≤ 1`.
pub fn vasconcelos_check(
    profile: &HilbertProfile,
    sally: &SallyProfile,
    colength: u64,
    reduction_number: u32,
) -> CheckOutcome {
    let mut c = CheckOutcome::new("vasconcelos");
    c.hypothesis = true;
    let d = profile.dim;
    let len = colength as i64;
    let (e0, e1) = (profile.coefficient(0), profile.coefficient(1));
    let s0 = sally.coefficient(0);
    c.witness("s", sally.s.clone()).witness("vanishes", sally.vanishes);
    c.require(e1 == e0 - len + s0, || format!("e1 = {e1} but e0 - colength + s0 = {}", e0 - len + s0));
    for i in 1..d {
        let (e, s) = (profile.coefficient(i + 1), sally.coefficient(i));
        c.require(e == s, || format!("e{} = {e} but s{i} = {s}", i + 1));
    }
    c.require(sally.vanishes == (reduction_number <= 1), || {
        format!("Sally module vanishing is {} with r = {reduction_number}", sally.vanishes)
    });
    c.require(s0 >= 0, || format!("s0 = {s0} < 0"));
    if !sally.vanishes {
        // degree exactly d - 1
        c.require(s0 > 0, || "nonzero Sally module with s0 = 0".into());
    }
    c.require((s0 == 0) == (e1 == e0 - len), || "s0 = 0 disagrees with e1 = e0 - colength".into());
    let d64 = d as i64;
    let checked = profile.table.len().min(sally.table.len() + 1);
    for n in 1..checked {
        let n64 = n as i64;
        let rhs = e0 as i128 * binomial(n64 + d64 - 1, d as u32) + (len - e0) as i128 * binomial(n64 + d64 - 2, d as u32 - 1)
            - sally.table[n - 1] as i128;
        c.require(profile.table[n] as i128 == rhs, || format!("length formula fails at n = {n}"));
    }
    c.witness("formula_checked_up_to", checked.saturating_sub(1));
    c.conclusion = c.passed();
    c
}

/// `s_0 = Σ_{n=1}^{r} λ(I^{n+1}/JI^n)` against `depth G(I) ≥ d - 1`.
pub fn vaz_pinto_check(sally: &SallyProfile, sums: &HmSums, verdict: &DepthVerdict) -> CheckOutcome {
    let mut c = CheckOutcome::new("vaz_pinto");
    let s0 = sally.coefficient(0);
    let sum = (sums.upper - sums.upper_term(1)) as i64;
    c.witness("s0", s0).witness("sum", sum);
    c.hypothesis = s0 == sum;
    let depth = verdict.upper as i64 == verdict.e1;
    c.witness("depth_at_least_d_minus_1", depth);
    c.require(c.hypothesis == depth, || {
        format!("s0 = sum is {} but depth >= d - 1 is {depth}", s0 == sum)
    });
    c.conclusion = c.hypothesis && depth;
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::reduction::reduction_number;
    use crate::semigroup::{NumericalSemigroup, SemigroupIdeal, SemigroupRing};

    fn cert<I: LocalIdeal>(j: I, powers: &mut Powers<I>) -> ReductionCertificate<I> {
        let (r, j_products) = reduction_number(&j, powers, 10).unwrap().unwrap();
        ReductionCertificate {
            generators: j.generators().to_vec(),
            ideal: j,
            coefficients: vec![],
            basis: vec![],
            reduction_number: r,
            minimal: true,
            seed: 0,
            attempt: 0,
            j_products,
        }
    }

    #[test]
    fn sally_module_of_t3_t4() {
        let ring = SemigroupRing::new(NumericalSemigroup::new(&[3, 4, 5]).unwrap(), PrimeField::default());
        let i = SemigroupIdeal::monomial(&ring, &[3, 4]).unwrap();
        let j = SemigroupIdeal::monomial(&ring, &[3]).unwrap();
        let mut powers = Powers::new(i);
        let c = cert(j, &mut powers);
        let s = sally_table(&mut powers, &c, 6, 32).unwrap();
        assert_eq!(&s.table[..4], &[0, 1, 1, 1]);
        assert_eq!(s.s, vec![1]);
        assert!(!s.vanishes);
    }

    #[test]
    fn sally_module_of_maximal_ideal_vanishes() {
        let ring = SemigroupRing::new(NumericalSemigroup::new(&[3, 4, 5]).unwrap(), PrimeField::default());
        let m = SemigroupIdeal::monomial(&ring, &[3, 4, 5]).unwrap();
        let j = SemigroupIdeal::monomial(&ring, &[3]).unwrap();
        let mut powers = Powers::new(m);
        let c = cert(j, &mut powers);
        let s = sally_table(&mut powers, &c, 6, 32).unwrap();
        assert!(s.vanishes);
        assert_eq!(s.s, vec![0]);
    }
}
