//! Buchberger's algorithm and the ideal operations built on it.
//!
//! Pairs are selected by the normal strategy (smallest lcm first) and pruned
//! with Buchberger's product and chain criteria. Instances here are small
//! (a handful of variables, degrees in the tens), so no F4-style linear
//! algebra is used.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, PolyRing, SparsePolynomial};

/// A reduced Gröbner basis: monic, inter-reduced, sorted by increasing
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    polys: Vec<SparsePolynomial<F>>,
    order: MonomialOrder,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn polys(&self) -> &[SparsePolynomial<F>] {
        &self.polys
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.polys.iter().filter_map(|p| p.leading_monomial())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].leading_monomial().is_some_and(|m| m.is_one())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.polys.iter().all(|p| p.is_homogeneous())
    }

    pub fn contains(&self, ring: &PolyRing<F>, f: &SparsePolynomial<F>) -> bool {
        normal_form(ring, f, &self.polys).is_zero()
    }
}

/// Fully reduces `f` modulo `basis`; no term of the result is divisible by a
/// leading monomial of `basis`.
pub fn normal_form<F: Field>(
    ring: &PolyRing<F>,
    f: &SparsePolynomial<F>,
    basis: &[SparsePolynomial<F>],
) -> SparsePolynomial<F> {
    let field = ring.field();
    let mut p = f.clone();
    let mut rem = Vec::new();
    while let Some((m, c)) = p.leading_monomial().cloned().zip(p.leading_coefficient().cloned()) {
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let lm = g.leading_monomial().expect("nonzero divisor");
                let lc = g.leading_coefficient().expect("nonzero divisor");
                let q = m.div(lm).expect("divisibility checked");
                let coef = field.mul(&c, &field.inv(lc).expect("nonzero leading coefficient"));
                p = ring.sub_mul_term(&p, &coef, &q, g);
            }
            None => {
                rem.push(p.pop_leading().expect("nonzero"));
            }
        }
    }
    SparsePolynomial::from_sorted_terms(rem)
}

fn s_polynomial<F: Field>(
    ring: &PolyRing<F>,
    f: &SparsePolynomial<F>,
    g: &SparsePolynomial<F>,
) -> SparsePolynomial<F> {
    // both inputs are monic
    let lf = f.leading_monomial().expect("nonzero");
    let lg = g.leading_monomial().expect("nonzero");
    let l = lf.lcm(lg);
    let one = ring.field().one();
    let a = ring.mul_term(f, &l.div(lf).expect("lcm"), &one);
    ring.sub_mul_term(&a, &one, &l.div(lg).expect("lcm"), g)
}

/// Reduced Gröbner basis of the ideal generated by `gens` for the order of
/// `ring`.
pub fn buchberger<F: Field>(ring: &PolyRing<F>, gens: &[SparsePolynomial<F>]) -> GroebnerBasis<F> {
    let order = ring.order();
    let mut basis: Vec<SparsePolynomial<F>> = Vec::new();
    let mut pairs: HashSet<(usize, usize)> = HashSet::new();

    let push = |basis: &mut Vec<SparsePolynomial<F>>, pairs: &mut HashSet<(usize, usize)>, p| {
        let k = basis.len();
        basis.push(p);
        for i in 0..k {
            pairs.insert((i, k));
        }
    };

    for g in gens {
        let r = normal_form(ring, g, &basis);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, ring.monic(&r));
        }
    }

    while !pairs.is_empty() {
        let &(i, j) = pairs
            .iter()
            .min_by(|a, b| {
                let la = lcm_of(&basis, **a);
                let lb = lcm_of(&basis, **b);
                order.cmp(&la, &lb).then(a.cmp(b))
            })
            .expect("nonempty");
        pairs.remove(&(i, j));

        let li = basis[i].leading_monomial().expect("nonzero");
        let lj = basis[j].leading_monomial().expect("nonzero");
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().is_some_and(|lk| lk.divides(&l))
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(ring, &basis[i], &basis[j]);
        let r = normal_form(ring, &s, &basis);
        if !r.is_zero() {
            push(&mut basis, &mut pairs, ring.monic(&r));
        }
    }

    reduce_basis(ring, basis)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn lcm_of<F: Field>(basis: &[SparsePolynomial<F>], (i, j): (usize, usize)) -> Monomial {
    basis[i]
        .leading_monomial()
        .expect("nonzero")
        .lcm(basis[j].leading_monomial().expect("nonzero"))
}

/// Minimalizes and inter-reduces a Gröbner basis.
fn reduce_basis<F: Field>(ring: &PolyRing<F>, mut basis: Vec<SparsePolynomial<F>>) -> GroebnerBasis<F> {
    let order = ring.order();
    basis.sort_by(|a, b| {
        order.cmp(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero"))
    });
    let mut minimal: Vec<SparsePolynomial<F>> = Vec::new();
    for p in basis {
        let lm = p.leading_monomial().expect("nonzero");
        if !minimal.iter().any(|q| q.leading_monomial().expect("nonzero").divides(lm)) {
            minimal.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<SparsePolynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p.clone())
            .collect();
        let mut p = minimal[k].clone();
        let lead = p.pop_leading().expect("nonzero");
        let tail = normal_form(ring, &p, &others);
        let mut terms = vec![lead];
        terms.extend(tail.into_terms());
        reduced.push(ring.monic(&SparsePolynomial::from_sorted_terms(terms)));
    }
    GroebnerBasis { polys: reduced, order }
}

/// Number of monomials of degree `j` outside the leading-term ideal. For a
/// homogeneous ideal this is the dimension of the degree-`j` piece of the
/// quotient.
pub fn graded_piece_dimension<F: Field>(basis: &GroebnerBasis<F>, nvars: usize, j: u32) -> Result<u64> {
    if let Some(p) = basis.polys.iter().find(|p| !p.is_homogeneous()) {
        return Err(Error::Inhomogeneous(format!("{} terms, degree {:?}", p.len(), p.degree())));
    }
    if basis.order != MonomialOrder::DegRevLex {
        return Err(Error::Invalid("graded piece dimensions need a degrevlex basis".into()));
    }
    let lms: Vec<&Monomial> = basis.leading_monomials().filter(|m| m.degree() <= j).collect();
    Ok(monomials_of_degree(nvars, j)
        .iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .count() as u64)
}

/// Total number of standard monomials; finite iff every variable has a pure
/// power among the leading monomials.
pub fn standard_monomial_count<F: Field>(basis: &GroebnerBasis<F>, nvars: usize) -> Result<u64> {
    let mut has_power = vec![false; nvars];
    for m in basis.leading_monomials() {
        if m.is_one() {
            return Ok(0);
        }
        if let Some(v) = m.pure_power_var() {
            has_power[v] = true;
        }
    }
    if let Some(v) = has_power.iter().position(|h| !h) {
        return Err(Error::NotPrimary(format!("no pure power of variable {} in the leading ideal", v + 1)));
    }
    let mut total = 0;
    let mut j = 0;
    loop {
        let d = graded_piece_dimension(basis, nvars, j)?;
        if d == 0 {
            // the standard set is closed under division, so it ends here
            return Ok(total);
        }
        total += d;
        j += 1;
    }
}

/// Exact quotient `f / g`; fails when `g` does not divide `f`.
pub fn divide_exact<F: Field>(
    ring: &PolyRing<F>,
    f: &SparsePolynomial<F>,
    g: &SparsePolynomial<F>,
) -> Result<SparsePolynomial<F>> {
    let field = ring.field();
    let lg = g.leading_monomial().ok_or(Error::InexactDivision)?;
    let inv = field.inv(g.leading_coefficient().expect("nonzero")).expect("nonzero");
    let mut p = f.clone();
    let mut quotient = Vec::new();
    while let Some(m) = p.leading_monomial().cloned() {
        let q = m.div(lg).ok_or(Error::InexactDivision)?;
        let c = field.mul(p.leading_coefficient().expect("nonzero"), &inv);
        p = ring.sub_mul_term(&p, &c, &q, g);
        quotient.push((q, c));
    }
    Ok(SparsePolynomial::from_sorted_terms(quotient))
}

/// Intersection of two ideals by eliminating an auxiliary variable from
/// `t*A + (1-t)*B`.
pub fn intersect<F: Field>(
    ring: &PolyRing<F>,
    a: &[SparsePolynomial<F>],
    b: &[SparsePolynomial<F>],
) -> GroebnerBasis<F> {
    let n = ring.nvars();
    let mut names = vec!["_t".to_string()];
    names.extend(ring.names().iter().cloned());
    let big = PolyRing::new(ring.field().clone(), names, MonomialOrder::BlockElimination { first: 1 });
    let shift: Vec<usize> = (1..=n).collect();
    let t = big.var(0);
    let one_minus_t = big.sub(&big.one(), &t);
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for f in a {
        gens.push(big.mul(&t, &big.embed(f, &shift)));
    }
    for g in b {
        gens.push(big.mul(&one_minus_t, &big.embed(g, &shift)));
    }
    let gb = buchberger(&big, &gens);
    let back: Vec<usize> = std::iter::once(0).chain(0..n).collect();
    let eliminated: Vec<SparsePolynomial<F>> = gb
        .polys
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
        .map(|p| ring.embed(p, &back))
        .collect();
    buchberger(ring, &eliminated)
}

/// `(A : f)` computed as `(A ∩ (f)) / f`.
pub fn colon_element<F: Field>(
    ring: &PolyRing<F>,
    a: &[SparsePolynomial<F>],
    f: &SparsePolynomial<F>,
) -> Result<GroebnerBasis<F>> {
    if f.is_zero() {
        return Ok(buchberger(ring, &[ring.one()]));
    }
    let inter = intersect(ring, a, std::slice::from_ref(f));
    let quotients = inter
        .polys
        .iter()
        .map(|p| divide_exact(ring, p, f))
        .collect::<Result<Vec<_>>>()?;
    Ok(buchberger(ring, &quotients))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring() -> PolyRing<PrimeField> {
        PolyRing::new(PrimeField::new(32003).unwrap(), vec!["x".into(), "y".into()], MonomialOrder::DegRevLex)
    }

    fn p(r: &PolyRing<PrimeField>, terms: &[(i64, u32, u32)]) -> SparsePolynomial<PrimeField> {
        r.from_terms(
            terms
                .iter()
                .map(|&(c, a, b)| (Monomial::new(vec![a, b]), r.field().from_i64(c)))
                .collect(),
        )
    }

    #[test]
    fn single_variable_is_reduced() {
        let r = ring();
        let gb = buchberger(&r, &[r.var(0)]);
        assert_eq!(gb.polys(), &[r.var(0)]);
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring();
        let gens = vec![p(&r, &[(1, 2, 0)]), p(&r, &[(1, 1, 1)]), p(&r, &[(1, 0, 2)])];
        let gb = buchberger(&r, &gens);
        assert_eq!(gb.polys().len(), 3);
        for g in &gens {
            assert!(gb.polys().contains(g));
        }
    }

    #[test]
    fn normal_form_trivial_cases() {
        let r = ring();
        let x = r.var(0);
        let y = r.var(1);
        assert!(normal_form(&r, &r.mul(&x, &x), std::slice::from_ref(&x)).is_zero());
        assert_eq!(normal_form(&r, &y, &[x]), y);
    }

    #[test]
    fn normal_form_hand_trace() {
        // basis {x^2 - y, y^2 - x} is a Gröbner basis for degrevlex (the
        // leading monomials x^2 and y^2 are coprime). Dividing x^3*y + y^2:
        //   x^3*y -> x*y^2      (subtract x*y*(x^2 - y))
        //   x*y^2 -> x^2        (subtract x*(y^2 - x))
        //   x^2   -> y
        //   y^2   -> x
        // so the remainder is x + y.
        let r = ring();
        let g1 = p(&r, &[(1, 2, 0), (-1, 0, 1)]);
        let g2 = p(&r, &[(1, 0, 2), (-1, 1, 0)]);
        let f = p(&r, &[(1, 3, 1), (1, 0, 2)]);
        let nf = normal_form(&r, &f, &[g1, g2]);
        assert_eq!(nf, p(&r, &[(1, 1, 0), (1, 0, 1)]));
    }

    #[test]
    fn graded_piece_dimensions() {
        let r = ring();
        let m = buchberger(&r, &[r.var(0), r.var(1)]);
        assert_eq!(graded_piece_dimension(&m, 2, 0).unwrap(), 1);
        for j in 1..5 {
            assert_eq!(graded_piece_dimension(&m, 2, j).unwrap(), 0);
        }
        let sq = buchberger(&r, &[p(&r, &[(1, 2, 0)]), p(&r, &[(1, 1, 1)]), p(&r, &[(1, 0, 2)])]);
        assert_eq!(graded_piece_dimension(&sq, 2, 1).unwrap(), 2);
        // (x^2, y^3): the degree-3 monomials are x^3, x^2y, xy^2, y^3 and
        // only xy^2 avoids both generators.
        let i = buchberger(&r, &[p(&r, &[(1, 2, 0)]), p(&r, &[(1, 0, 3)])]);
        assert_eq!(graded_piece_dimension(&i, 2, 3).unwrap(), 1);
    }

    #[test]
    fn graded_piece_rejects_inhomogeneous() {
        let r = ring();
        let gb = buchberger(&r, &[p(&r, &[(1, 2, 0), (-1, 0, 1)])]);
        assert!(matches!(graded_piece_dimension(&gb, 2, 1), Err(Error::Inhomogeneous(_))));
    }

    #[test]
    fn standard_monomials_and_primary_test() {
        let r = ring();
        let i = buchberger(&r, &[p(&r, &[(1, 2, 0)]), p(&r, &[(1, 1, 1)]), p(&r, &[(1, 0, 3)])]);
        assert_eq!(standard_monomial_count(&i, 2).unwrap(), 4);
        let not_primary = buchberger(&r, &[p(&r, &[(1, 2, 0)]), p(&r, &[(1, 1, 1)])]);
        assert!(matches!(standard_monomial_count(&not_primary, 2), Err(Error::NotPrimary(_))));
    }

    #[test]
    fn intersection_of_principal_monomial_ideals() {
        let r = ring();
        let x = r.var(0);
        let y = r.var(1);
        let gb = intersect(&r, std::slice::from_ref(&x), std::slice::from_ref(&y));
        assert_eq!(gb.polys(), &[r.mul(&x, &y)]);
    }

    #[test]
    fn colon_of_principal() {
        let r = ring();
        let x = r.var(0);
        let y = r.var(1);
        // ((x^2 y) : x) = (x y)
        let gb = colon_element(&r, &[r.mul(&r.mul(&x, &x), &y)], &x).unwrap();
        assert_eq!(gb.polys(), &[r.mul(&x, &y)]);
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let x = r.var(0);
        let y = r.var(1);
        let f = r.mul(&r.add(&x, &y), &r.sub(&x, &y));
        assert_eq!(divide_exact(&r, &f, &r.add(&x, &y)).unwrap(), r.sub(&x, &y));
        assert!(divide_exact(&r, &r.add(&f, &y), &r.add(&x, &y)).is_err());
    }
}
