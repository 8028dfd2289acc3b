//! Ideals of a quotient ring `R/K`, represented by ideals of `R` that
//! contain `K`.
//!
//! Lengths over `R/K` are lengths over `R` of the corresponding quotients,
//! so every length-based engine runs unchanged on the quotient.

use std::fmt;

use crate::error::Result;
use crate::field::Field;
use crate::ideal::LocalIdeal;

#[derive(Clone)]
pub struct QuotientIdeal<I: LocalIdeal> {
    /// Always contains `modulus`.
    lifted: I,
    modulus: I,
    dim: usize,
    gens: Vec<I::Element>,
}

impl<I: LocalIdeal> fmt::Debug for QuotientIdeal<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuotientIdeal")
            .field("ideal", &self.lifted)
            .field("modulus", &self.modulus)
            .field("dim", &self.dim)
            .finish()
    }
}

impl<I: LocalIdeal> QuotientIdeal<I> {
    /// The image of `ideal` in `R/modulus`; `dim` is the Krull dimension of
    /// the quotient ring, which the caller certifies.
    pub fn new(ideal: &I, modulus: &I, dim: usize) -> Result<Self> {
        let lifted = ideal.sum(modulus)?;
        Ok(QuotientIdeal { lifted, modulus: modulus.clone(), dim, gens: ideal.generators().to_vec() })
    }

    /// Ideal of `R` corresponding to this one.
    pub fn lifted(&self) -> &I {
        &self.lifted
    }

    pub fn modulus(&self) -> &I {
        &self.modulus
    }

    fn wrap(&self, lifted: I) -> Self {
        let gens = lifted.generators().to_vec();
        QuotientIdeal { lifted, modulus: self.modulus.clone(), dim: self.dim, gens }
    }

    fn lift_sum(&self, ideal: I) -> Result<Self> {
        Ok(self.wrap(ideal.sum(&self.modulus)?))
    }
}

impl<I: LocalIdeal> LocalIdeal for QuotientIdeal<I> {
    type Field = I::Field;
    type Element = I::Element;

    fn dim(&self) -> usize {
        self.dim
    }

    fn field(&self) -> &I::Field {
        self.lifted.field()
    }

    fn generators(&self) -> &[I::Element] {
        &self.gens
    }

    fn render_element(&self, e: &I::Element) -> String {
        self.lifted.render_element(e)
    }

    fn is_zero_element(&self, e: &I::Element) -> bool {
        self.modulus.contains_element(e).unwrap_or(false)
    }

    fn with_generators(&self, gens: Vec<I::Element>) -> Result<Self> {
        let base = self.lifted.with_generators(gens.clone())?;
        let mut out = self.lift_sum(base)?;
        out.gens = gens;
        Ok(out)
    }

    fn maximal_ideal(&self) -> Self {
        self.lift_sum(self.lifted.maximal_ideal()).expect("sum with the maximal ideal")
    }

    fn unit_ideal(&self) -> Self {
        self.wrap(self.lifted.unit_ideal())
    }

    fn colength(&self) -> Result<u64> {
        self.lifted.colength()
    }

    fn product(&self, other: &Self) -> Result<Self> {
        self.lift_sum(self.lifted.product(&other.lifted)?)
    }

    fn sum(&self, other: &Self) -> Result<Self> {
        Ok(self.wrap(self.lifted.sum(&other.lifted)?))
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        Ok(self.wrap(self.lifted.intersect(&other.lifted)?))
    }

    fn colon(&self, other: &Self) -> Result<Self> {
        Ok(self.wrap(self.lifted.colon(&other.lifted)?))
    }

    fn contains_element(&self, f: &I::Element) -> Result<bool> {
        self.lifted.contains_element(f)
    }

    fn contains(&self, other: &Self) -> Result<bool> {
        self.lifted.contains(&other.lifted)
    }

    fn equals(&self, other: &Self) -> Result<bool> {
        self.lifted.equals(&other.lifted)
    }

    fn combination_basis(&self) -> Result<Vec<I::Element>> {
        self.lifted_generators_basis()
    }

    fn combine(&self, coeffs: &[<I::Field as Field>::Elem], basis: &[I::Element]) -> I::Element {
        self.lifted.combine(coeffs, basis)
    }
}

impl<I: LocalIdeal> QuotientIdeal<I> {
    /// Combination basis of the original ideal (before adding the modulus),
    /// so random elements stay inside it.
    fn lifted_generators_basis(&self) -> Result<Vec<I::Element>> {
        self.lifted.with_generators(self.gens.clone())?.combination_basis()
    }
}
