//! Homogeneous ideals of `k[x_1, ..., x_d]` localized at the origin.
//!
//! For a homogeneous ideal every associated prime sits inside the
//! irrelevant ideal, so membership, equality and (for primary ideals) length
//! agree between the polynomial ring and its localization. Inhomogeneous
//! generators are refused.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, colon_element, intersect, standard_monomial_count, GroebnerBasis};
use crate::ideal::LocalIdeal;
use crate::poly::{MonomialOrder, PolyRing, SparsePolynomial};

/// `k[x_1, ..., x_d]` with the degrevlex order.
#[derive(Clone, Debug)]
pub struct GradedRing<F: Field> {
    poly: PolyRing<F>,
}

impl<F: Field> GradedRing<F> {
    pub fn new(field: F, names: Vec<String>) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::UnsupportedRing("a graded ring needs at least one variable".into()));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
            return Err(Error::UnsupportedRing(format!("variable {dup} appears twice")));
        }
        Ok(Arc::new(GradedRing { poly: PolyRing::new(field, names, MonomialOrder::DegRevLex) }))
    }

    pub fn poly(&self) -> &PolyRing<F> {
        &self.poly
    }

    pub fn dim(&self) -> usize {
        self.poly.nvars()
    }

    pub fn field(&self) -> &F {
        self.poly.field()
    }

    fn same_as(&self, other: &Self) -> bool {
        self.poly.names() == other.poly.names() && self.field() == other.field()
    }
}

/// A homogeneous ideal with its reduced degrevlex Gröbner basis.
#[derive(Clone)]
pub struct GradedIdeal<F: Field> {
    ring: Arc<GradedRing<F>>,
    gens: Vec<SparsePolynomial<F>>,
    gb: GroebnerBasis<F>,
    minimal: OnceLock<Vec<SparsePolynomial<F>>>,
}

impl<F: Field> fmt::Debug for GradedIdeal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.ring.poly.render(g)).collect();
        f.debug_struct("GradedIdeal").field("gens", &gens).finish()
    }
}

impl<F: Field> GradedIdeal<F> {
    pub fn new(ring: &Arc<GradedRing<F>>, gens: Vec<SparsePolynomial<F>>) -> Result<Self> {
        let gens: Vec<SparsePolynomial<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::Inhomogeneous(ring.poly.render(g)));
        }
        let gb = buchberger(&ring.poly, &gens);
        Ok(GradedIdeal { ring: ring.clone(), gens, gb, minimal: OnceLock::new() })
    }

    /// `(x_1, ..., x_d)`
    pub fn maximal(ring: &Arc<GradedRing<F>>) -> Self {
        let gens = (0..ring.dim()).map(|i| ring.poly.var(i)).collect();
        GradedIdeal::new(ring, gens).expect("variables are homogeneous")
    }

    fn from_basis(&self, gb: GroebnerBasis<F>) -> Self {
        GradedIdeal { ring: self.ring.clone(), gens: gb.polys().to_vec(), gb, minimal: OnceLock::new() }
    }

    pub fn ring(&self) -> &Arc<GradedRing<F>> {
        &self.ring
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<F> {
        &self.gb
    }

    /// A minimal homogeneous generating set, by increasing degree.
    pub fn minimal_generators(&self) -> &[SparsePolynomial<F>] {
        self.minimal.get_or_init(|| {
            let mut sorted = self.gens.clone();
            sorted.sort_by_key(|g| g.degree());
            let mut kept: Vec<SparsePolynomial<F>> = Vec::new();
            for g in sorted {
                let partial = buchberger(&self.ring.poly, &kept);
                if !partial.contains(&self.ring.poly, &g) {
                    kept.push(g);
                }
            }
            kept
        })
    }

    /// Degrees of the minimal generators.
    pub fn generation_degrees(&self) -> Vec<u32> {
        self.minimal_generators().iter().filter_map(|g| g.degree()).collect()
    }

    /// `Some(δ)` when all minimal generators have degree `δ`.
    pub fn equigenerated_degree(&self) -> Option<u32> {
        let degs = self.generation_degrees();
        let first = *degs.first()?;
        degs.iter().all(|&d| d == first).then_some(first)
    }

    pub fn gr_colength(&self) -> Result<u64> {
        standard_monomial_count(&self.gb, self.ring.dim())
    }

    pub fn gr_power(&self, n: u32) -> Result<Self> {
        LocalIdeal::power(self, n)
    }

    pub fn gr_product(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let poly = &self.ring.poly;
        let left = if self.gb.polys().len() <= self.gens.len() { self.gb.polys() } else { &self.gens };
        let right = other.minimal_generators();
        let gens: Vec<SparsePolynomial<F>> =
            left.iter().flat_map(|a| right.iter().map(move |b| poly.mul(a, b))).collect();
        Ok(self.from_basis(buchberger(poly, &gens)))
    }

    pub fn gr_sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens = self.gb.polys().to_vec();
        gens.extend(other.gb.polys().iter().cloned());
        let mut out = self.from_basis(buchberger(&self.ring.poly, &gens));
        let mut all = self.gens.clone();
        all.extend(other.gens.iter().cloned());
        out.gens = all;
        Ok(out)
    }

    pub fn gr_intersect(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.from_basis(intersect(&self.ring.poly, self.gb.polys(), other.gb.polys())))
    }

    /// `(self : other)`, intersected over the generators of `other`.
    pub fn gr_colon(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let poly = &self.ring.poly;
        let mut acc: Option<GroebnerBasis<F>> = None;
        for l in other.minimal_generators() {
            let c = colon_element(poly, self.gb.polys(), l)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => intersect(poly, prev.polys(), c.polys()),
            });
        }
        Ok(match acc {
            Some(gb) => self.from_basis(gb),
            None => self.unit_ideal(),
        })
    }

    pub fn gr_contains(&self, f: &SparsePolynomial<F>) -> bool {
        self.gb.contains(&self.ring.poly, f)
    }

    /// Equality of ideals by comparing reduced Gröbner bases.
    pub fn gr_equals(&self, other: &Self) -> bool {
        self.gb == other.gb
    }

    /// `count` random combinations of the minimal generators, reproducible
    /// from `seed`. Only equigenerated ideals are accepted, so the results
    /// are homogeneous.
    pub fn gr_random_combination(&self, count: usize, seed: u64) -> Result<Vec<SparsePolynomial<F>>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(self.random_combinations(count, &mut rng)?.1)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

impl<F: Field> LocalIdeal for GradedIdeal<F> {
    type Field = F;
    type Element = SparsePolynomial<F>;

    fn dim(&self) -> usize {
        self.ring.dim()
    }

    fn field(&self) -> &F {
        self.ring.field()
    }

    fn generators(&self) -> &[SparsePolynomial<F>] {
        &self.gens
    }

    fn render_element(&self, e: &SparsePolynomial<F>) -> String {
        self.ring.poly.render(e)
    }

    fn is_zero_element(&self, e: &SparsePolynomial<F>) -> bool {
        e.is_zero()
    }

    fn with_generators(&self, gens: Vec<SparsePolynomial<F>>) -> Result<Self> {
        GradedIdeal::new(&self.ring, gens)
    }

    fn maximal_ideal(&self) -> Self {
        GradedIdeal::maximal(&self.ring)
    }

    fn unit_ideal(&self) -> Self {
        GradedIdeal::new(&self.ring, vec![self.ring.poly.one()]).expect("constants are homogeneous")
    }

    fn colength(&self) -> Result<u64> {
        self.gr_colength()
    }

    fn product(&self, other: &Self) -> Result<Self> {
        self.gr_product(other)
    }

    fn sum(&self, other: &Self) -> Result<Self> {
        self.gr_sum(other)
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        self.gr_intersect(other)
    }

    fn colon(&self, other: &Self) -> Result<Self> {
        self.gr_colon(other)
    }

    fn contains_element(&self, f: &SparsePolynomial<F>) -> Result<bool> {
        Ok(self.gr_contains(f))
    }

    fn equals(&self, other: &Self) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.gr_equals(other))
    }

    fn combination_basis(&self) -> Result<Vec<SparsePolynomial<F>>> {
        if self.equigenerated_degree().is_none() {
            return Err(Error::NotEquigenerated);
        }
        Ok(self.minimal_generators().to_vec())
    }

    fn combine(&self, coeffs: &[F::Elem], basis: &[SparsePolynomial<F>]) -> SparsePolynomial<F> {
        self.ring.poly.combination(coeffs, basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::Monomial;

    fn ring(n: usize) -> Arc<GradedRing<PrimeField>> {
        let names = ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect();
        GradedRing::new(PrimeField::default(), names).unwrap()
    }

    fn mono(r: &GradedRing<PrimeField>, exps: &[u32]) -> SparsePolynomial<PrimeField> {
        r.poly().monomial(Monomial::new(exps.to_vec()))
    }

    fn ideal(r: &Arc<GradedRing<PrimeField>>, gens: &[&[u32]]) -> GradedIdeal<PrimeField> {
        GradedIdeal::new(r, gens.iter().map(|e| mono(r, e)).collect()).unwrap()
    }

    #[test]
    fn colengths() {
        let r = ring(2);
        assert_eq!(GradedIdeal::maximal(&r).gr_colength().unwrap(), 1);
        assert_eq!(ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]).gr_colength().unwrap(), 3);
        assert_eq!(ideal(&r, &[&[2, 0], &[1, 1], &[0, 3]]).gr_colength().unwrap(), 4);
        assert!(matches!(ideal(&r, &[&[2, 0], &[1, 1]]).gr_colength(), Err(Error::NotPrimary(_))));
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = ring(2);
        let f = r.poly().add(&mono(&r, &[2, 0]), &mono(&r, &[0, 1]));
        assert!(matches!(GradedIdeal::new(&r, vec![f]), Err(Error::Inhomogeneous(_))));
    }

    #[test]
    fn products_and_powers() {
        let r = ring(2);
        let m = GradedIdeal::maximal(&r);
        let m2 = ideal(&r, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert!(m.gr_power(2).unwrap().gr_equals(&m2));
        let q = ideal(&r, &[&[2, 0], &[0, 2]]);
        let m4 = ideal(&r, &[&[4, 0], &[3, 1], &[2, 2], &[1, 3], &[0, 4]]);
        assert!(q.gr_product(&m2).unwrap().gr_equals(&m4));
        assert!(m.gr_power(0).unwrap().gr_equals(&m.unit_ideal()));
    }

    #[test]
    fn intersection_contains_product() {
        let r = ring(2);
        let q = ideal(&r, &[&[2, 0], &[0, 2]]);
        let m = GradedIdeal::maximal(&r);
        let inter = q.gr_intersect(&m.gr_power(3).unwrap()).unwrap();
        assert!(inter.contains(&q.gr_product(&m).unwrap()).unwrap());
        assert!(q.contains(&inter).unwrap());
    }

    #[test]
    fn colon_of_powers() {
        let r = ring(2);
        let m = GradedIdeal::maximal(&r);
        let m3 = m.gr_power(3).unwrap();
        let c = m3.gr_colon(&m).unwrap();
        assert!(c.gr_equals(&m.gr_power(2).unwrap()));
        assert!(m3.contains(&c.gr_product(&m).unwrap()).unwrap());
    }

    #[test]
    fn maximal_power_colength_closed_form() {
        for d in 1..=3usize {
            let r = ring(d);
            let m = GradedIdeal::maximal(&r);
            for (n, p) in m.powers(5).unwrap().iter().enumerate() {
                // C(n + d - 1, d)
                let mut expect = 1u64;
                for i in 0..d as u64 {
                    expect = expect * (n as u64 + i) / (i + 1);
                }
                assert_eq!(p.gr_colength().unwrap(), expect, "d={d} n={n}");
            }
        }
    }

    #[test]
    fn minimal_generators_and_equigeneration() {
        let r = ring(2);
        let i = ideal(&r, &[&[2, 0], &[3, 0], &[1, 1], &[0, 2]]);
        assert_eq!(i.minimal_generators().len(), 3);
        assert_eq!(i.equigenerated_degree(), Some(2));
        let j = ideal(&r, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(j.equigenerated_degree(), None);
        assert!(matches!(j.gr_random_combination(2, 1), Err(Error::NotEquigenerated)));
    }

    #[test]
    fn random_combinations() {
        let r = ring(2);
        let m = GradedIdeal::maximal(&r);
        let forms = m.gr_random_combination(2, 7).unwrap();
        assert_eq!(forms, m.gr_random_combination(2, 7).unwrap());
        assert!(forms.iter().all(|f| f.degree() == Some(1) && f.len() == 2));
        let j = GradedIdeal::new(&r, forms).unwrap();
        assert_eq!(j.gr_colength().unwrap(), 1);
        assert!(m.gr_random_combination(0, 7).unwrap().is_empty());
    }

    #[test]
    fn minimal_generator_count() {
        let r = ring(2);
        let m2 = GradedIdeal::maximal(&r).gr_power(2).unwrap();
        assert_eq!(m2.minimal_generator_count().unwrap(), 3);
    }
}
