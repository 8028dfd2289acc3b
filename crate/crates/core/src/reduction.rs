//! Reductions, reduction numbers, superficial elements and sequences.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::{hilbert_profile, HilbertProfile, Powers};
use crate::ideal::LocalIdeal;
use crate::quotient::QuotientIdeal;

type Coeff<I> = <<I as LocalIdeal>::Field as Field>::Elem;

/// Default number of seeds tried by randomized searches.
pub const DEFAULT_ATTEMPTS: u32 = 8;

/// A verified reduction `J ⊆ I` with `J I^r = I^{r+1}`.
#[derive(Clone, Debug)]
pub struct ReductionCertificate<I: LocalIdeal> {
    pub ideal: I,
    pub generators: Vec<I::Element>,
    /// `generators[k] = Σ coefficients[k][j] * basis[j]`
    pub coefficients: Vec<Vec<Coeff<I>>>,
    pub basis: Vec<I::Element>,
    pub reduction_number: u32,
    /// Generated by `dim R` elements.
    pub minimal: bool,
    pub seed: u64,
    pub attempt: u32,
    /// `J I^n` for `n = 0..=r`.
    pub j_products: Vec<I>,
}

impl<I: LocalIdeal> ReductionCertificate<I> {
    /// `J I^{n}`, for `n <= r`; beyond `r` this is `I^{n+1}`.
    pub fn j_product(&self, n: u32, powers: &mut Powers<I>) -> Result<I> {
        match self.j_products.get(n as usize) {
            Some(p) => Ok(p.clone()),
            None => Ok(powers.get(n + 1)?.clone()),
        }
    }
}

/// Least `r <= r_max` with `J I^r = I^{r+1}`, with the products `J I^n`
/// for `n = 0..=r`. `None` when no such `r` exists up to `r_max`.
pub fn reduction_number<I: LocalIdeal>(
    j: &I,
    powers: &mut Powers<I>,
    r_max: u32,
) -> Result<Option<(u32, Vec<I>)>> {
    if !powers.base().contains(j)? {
        return Err(Error::ContainmentViolated("J is not contained in I".into()));
    }
    let cj = match j.colength() {
        Ok(c) => c,
        // a reduction has the same radical as I
        Err(Error::NotPrimary(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut products = vec![j.clone()];
    let mut colength = cj;
    for r in 0..=r_max {
        // J I^r ⊆ I^{r+1}, so equal colengths mean equal ideals
        if colength == powers.colength(r + 1)? {
            return Ok(Some((r, products)));
        }
        if r == r_max {
            break;
        }
        let next = products[r as usize].product(powers.base())?;
        colength = next.colength()?;
        products.push(next);
    }
    Ok(None)
}

/// Whether `J` is a reduction of `I`, with its reduction number.
pub fn is_reduction<I: LocalIdeal>(j: &I, i: &I, r_max: u32) -> Result<Option<u32>> {
    let mut powers = Powers::new(i.clone());
    Ok(reduction_number(j, &mut powers, r_max)?.map(|(r, _)| r))
}

/// Searches for a reduction generated by `dim R` random combinations of
/// the generators of `I`. Seeds `seed, seed+1, ...` are tried in turn.
pub fn minimal_reduction<I: LocalIdeal>(
    powers: &mut Powers<I>,
    seed: u64,
    attempts: u32,
    r_max: u32,
) -> Result<ReductionCertificate<I>> {
    let ideal = powers.base().clone();
    let d = ideal.dim();
    let basis = ideal.combination_basis()?;
    for attempt in 0..attempts {
        let attempt_seed = seed.wrapping_add(attempt as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(attempt_seed);
        let (coefficients, generators) = ideal.random_combinations(d, &mut rng)?;
        let j = ideal.with_generators(generators.clone())?;
        if let Some((r, j_products)) = reduction_number(&j, powers, r_max)? {
            return Ok(ReductionCertificate {
                ideal: j,
                generators,
                coefficients,
                basis,
                reduction_number: r,
                minimal: true,
                seed: attempt_seed,
                attempt,
                j_products,
            });
        }
    }
    Err(Error::SearchExhausted { attempts })
}

/// Injectivity of multiplication by the initial form of `a` on
/// `I^n/I^{n+1}`, checked for `n` in `[from, to]`.
#[derive(Clone, Debug)]
pub struct SuperficialCertificate<E> {
    pub element: E,
    pub checked_from: u32,
    pub checked_to: u32,
}

/// Whether `a*: I^n/I^{n+1} → I^{n+1}/I^{n+2}` is injective, via
/// `λ((aI^n + I^{n+2})/I^{n+2}) = λ(I^n/I^{n+1})`.
pub fn multiplication_injective<I: LocalIdeal>(a: &I, powers: &mut Powers<I>, n: u32) -> Result<bool> {
    let image = a.product(powers.get(n)?)?.sum(powers.get(n + 2)?)?;
    let lhs = powers.colength(n + 2)? - image.colength()?;
    let rhs = powers.colength(n + 1)? - powers.colength(n)?;
    Ok(lhs == rhs)
}

/// Certifies `a` superficial for `I` on the window `[from, to]`.
pub fn is_superficial<I: LocalIdeal>(
    a: &I::Element,
    powers: &mut Powers<I>,
    from: u32,
    to: u32,
) -> Result<SuperficialCertificate<I::Element>> {
    let ideal = powers.base().clone();
    if !ideal.contains_element(a)? {
        return Err(Error::NotInIdeal);
    }
    if powers.get(2)?.contains_element(a)? {
        return Err(Error::InIdealSquare);
    }
    let principal = ideal.with_generators(vec![a.clone()])?;
    for n in from..=to {
        if !multiplication_injective(&principal, powers, n)? {
            return Err(Error::NotSuperficial { degree: n });
        }
    }
    Ok(SuperficialCertificate { element: a.clone(), checked_from: from, checked_to: to })
}

/// One element of a superficial sequence together with the Hilbert profile
/// of `I` modulo the elements so far.
#[derive(Clone, Debug)]
pub struct SuperficialStep<E> {
    pub certificate: SuperficialCertificate<E>,
    pub quotient_profile: HilbertProfile,
}

/// Certifies `elements` as a superficial sequence for `I`: each one is
/// checked in `R/(previous elements)` on `[from, from + window]`.
pub fn superficial_sequence<I: LocalIdeal>(
    powers: &mut Powers<I>,
    elements: &[I::Element],
    from: u32,
    window: u32,
    profile_start: u32,
    profile_cap: u32,
) -> Result<Vec<SuperficialStep<I::Element>>> {
    let ideal = powers.base().clone();
    let d = ideal.dim();
    if elements.len() > d {
        return Err(Error::Invalid(format!("a superficial sequence has at most {d} elements")));
    }
    let mut steps = Vec::with_capacity(elements.len());
    for (i, x) in elements.iter().enumerate() {
        let certificate = if i == 0 {
            is_superficial(x, powers, from, from + window)?
        } else {
            let modulus = ideal.with_generators(elements[..i].to_vec())?;
            let q = QuotientIdeal::new(&ideal, &modulus, d - i)?;
            is_superficial(x, &mut Powers::new(q), from, from + window)?
        };
        let modulus = ideal.with_generators(elements[..=i].to_vec())?;
        let q = QuotientIdeal::new(&ideal, &modulus, d - i - 1)?;
        let quotient_profile = hilbert_profile(&mut Powers::new(q), profile_start, profile_cap)?;
        steps.push(SuperficialStep { certificate, quotient_profile });
    }
    Ok(steps)
}

/// Tries random elements of `I` until one is certified superficial.
pub fn find_superficial_element<I: LocalIdeal>(
    powers: &mut Powers<I>,
    seed: u64,
    attempts: u32,
    from: u32,
    window: u32,
) -> Result<SuperficialCertificate<I::Element>> {
    let ideal = powers.base().clone();
    for attempt in 0..attempts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
        let (_, mut elems) = ideal.random_combinations(1, &mut rng)?;
        let a = elems.pop().expect("one element");
        match is_superficial(&a, powers, from, from + window) {
            Ok(c) => return Ok(c),
            Err(Error::NotSuperficial { .. }) | Err(Error::InIdealSquare) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SearchExhausted { attempts })
}

/// `λ(I^n / m I^n)` for `n = 0..=n_max`.
pub fn fiber_lengths<I: LocalIdeal>(powers: &mut Powers<I>, n_max: u32) -> Result<Vec<u64>> {
    let m = powers.base().maximal_ideal();
    (0..=n_max)
        .map(|n| {
            let p = powers.get(n)?.clone();
            Ok(m.product(&p)?.colength()? - powers.colength(n)?)
        })
        .collect()
}

/// One more than the degree of `n ↦ λ(I^n/mI^n)`, read off the last
/// `2d + 3` entries of the table.
pub fn analytic_spread<I: LocalIdeal>(powers: &mut Powers<I>, n_max: u32) -> Result<usize> {
    let d = powers.base().dim();
    let table = fiber_lengths(powers, n_max)?;
    let window = 2 * d + 3;
    if table.len() < window {
        return Err(Error::WindowUnstable { len: table.len() });
    }
    let mut diffs: Vec<i64> = table[table.len() - window..].iter().map(|&v| v as i64).collect();
    for degree in 0..d {
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        if diffs.iter().all(|&v| v == 0) {
            return Ok(degree + 1);
        }
    }
    Err(Error::WindowUnstable { len: table.len() })
}
