//! The backend-independent view of an ideal in a computable local ring.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;

/// An ideal of a Cohen-Macaulay local ring with exact length computations.
///
/// Both backends implement this; every engine in the crate is generic over
/// it. All operands of a binary operation must come from the same ring.
pub trait LocalIdeal: Clone + fmt::Debug + Send + Sync + Sized {
    type Field: Field;
    type Element: Clone + fmt::Debug + PartialEq + Send + Sync;

    /// Krull dimension of the ambient ring.
    fn dim(&self) -> usize;
    fn field(&self) -> &Self::Field;
    /// The generators this ideal was built from.
    fn generators(&self) -> &[Self::Element];
    fn render_element(&self, e: &Self::Element) -> String;
    fn is_zero_element(&self, e: &Self::Element) -> bool;

    /// An ideal of the same ring.
    fn with_generators(&self, gens: Vec<Self::Element>) -> Result<Self>;
    fn maximal_ideal(&self) -> Self;
    fn unit_ideal(&self) -> Self;

    /// `λ(R/I)`. Fails with [`Error::NotPrimary`] when the quotient has
    /// infinite length.
    fn colength(&self) -> Result<u64>;
    fn product(&self, other: &Self) -> Result<Self>;
    fn sum(&self, other: &Self) -> Result<Self>;
    fn intersect(&self, other: &Self) -> Result<Self>;
    /// `(self : other)`
    fn colon(&self, other: &Self) -> Result<Self>;
    fn contains_element(&self, f: &Self::Element) -> Result<bool>;

    /// Elements that random reduction candidates are combined from, with
    /// their multiplication by field coefficients.
    fn combination_basis(&self) -> Result<Vec<Self::Element>>;
    fn combine(&self, coeffs: &[<Self::Field as Field>::Elem], basis: &[Self::Element]) -> Self::Element;

    fn contains(&self, other: &Self) -> Result<bool> {
        for g in other.generators() {
            if !self.contains_element(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    /// `I^n`, with `I^0` the unit ideal.
    fn power(&self, n: u32) -> Result<Self> {
        let mut acc = self.unit_ideal();
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I^0, I^1, ..., I^n_max`.
    fn powers(&self, n_max: u32) -> Result<Vec<Self>> {
        let mut out = vec![self.unit_ideal()];
        for n in 1..=n_max {
            let next = if n == 1 { self.clone() } else { out[n as usize - 1].product(self)? };
            out.push(next);
        }
        Ok(out)
    }

    /// Minimal number of generators, `λ(I/mI)`.
    fn minimal_generator_count(&self) -> Result<u64> {
        let mi = self.maximal_ideal().product(self)?;
        Ok(mi.colength()? - self.colength()?)
    }

    /// `count` random combinations of [`combination_basis`] with nonzero
    /// coefficients; returns the coefficient rows alongside the elements.
    ///
    /// [`combination_basis`]: LocalIdeal::combination_basis
    #[allow(clippy::type_complexity)]
    fn random_combinations<R: Rng + ?Sized>(
        &self,
        count: usize,
        rng: &mut R,
    ) -> Result<(Vec<Vec<<Self::Field as Field>::Elem>>, Vec<Self::Element>)> {
        let basis = self.combination_basis()?;
        if basis.is_empty() && count > 0 {
            return Err(Error::Invalid("cannot combine generators of the zero ideal".into()));
        }
        let mut coeffs = Vec::with_capacity(count);
        let mut elems = Vec::with_capacity(count);
        for _ in 0..count {
            let row: Vec<_> = basis.iter().map(|_| self.field().random_nonzero(rng)).collect();
            elems.push(self.combine(&row, &basis));
            coeffs.push(row);
        }
        Ok((coeffs, elems))
    }
}
