//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::fmt;

use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    /// `x_var^exp` in `nvars` variables.
    pub fn var_power(nvars: usize, var: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = exp;
        Monomial { exps, degree: exp }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Is this a pure power `x_i^e` with `e > 0`? Returns the variable index.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }
}

/// Monomial orders used by the Gröbner kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    /// Eliminates the first `first` variables: compares the degree-reverse
    /// lexicographic order on that block first, then on the remaining block.
    BlockElimination { first: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => grevlex(&a.exps, a.degree, &b.exps, b.degree),
            MonomialOrder::BlockElimination { first } => {
                let (a1, a2) = a.exps.split_at(first);
                let (b1, b2) = b.exps.split_at(first);
                let da1: u32 = a1.iter().sum();
                let db1: u32 = b1.iter().sum();
                grevlex(a1, da1, b1, db1)
                    .then_with(|| grevlex(a2, a.degree - da1, b2, b.degree - db1))
            }
        }
    }
}

fn grevlex(a: &[u32], da: u32, b: &[u32], db: u32) -> Ordering {
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().rev().zip(b.iter().rev()) {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// A polynomial as a list of `(monomial, coefficient)` pairs, strictly
/// decreasing in the order of the ring that built it. No zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePolynomial<F: Field> {
    terms: Vec<(Monomial, F::Elem)>,
}

impl<F: Field> SparsePolynomial<F> {
    pub fn terms(&self) -> &[(Monomial, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// Smallest total degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).min()
    }

    /// True when all terms share one total degree (the zero polynomial counts).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn into_terms(self) -> Vec<(Monomial, F::Elem)> {
        self.terms
    }

    /// Caller guarantees the terms are sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, F::Elem)>) -> Self {
        SparsePolynomial { terms }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, F::Elem)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }
}

/// Polynomial ring `k[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    names: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Self {
        PolyRing { field, names, order }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        PolyRing { field: self.field.clone(), names: self.names.clone(), order }
    }

    pub fn zero(&self) -> SparsePolynomial<F> {
        SparsePolynomial { terms: Vec::new() }
    }

    pub fn one(&self) -> SparsePolynomial<F> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> SparsePolynomial<F> {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn var(&self, i: usize) -> SparsePolynomial<F> {
        self.term(Monomial::var_power(self.nvars(), i, 1), self.field.one())
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> SparsePolynomial<F> {
        if self.field.is_zero(&c) {
            self.zero()
        } else {
            SparsePolynomial { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(&self, m: Monomial) -> SparsePolynomial<F> {
        self.term(m, self.field.one())
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, F::Elem)>) -> SparsePolynomial<F> {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = self.field.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if self.field.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if self.field.is_zero(&last.1) {
                out.pop();
            }
        }
        SparsePolynomial { terms: out }
    }

    /// Re-sorts a polynomial built by a ring with a different order.
    pub fn adopt(&self, f: &SparsePolynomial<F>) -> SparsePolynomial<F> {
        self.from_terms(f.terms.clone())
    }

    pub fn add(&self, f: &SparsePolynomial<F>, g: &SparsePolynomial<F>) -> SparsePolynomial<F> {
        self.merge(f, g, |c| c.clone())
    }

    pub fn sub(&self, f: &SparsePolynomial<F>, g: &SparsePolynomial<F>) -> SparsePolynomial<F> {
        self.merge(f, g, |c| self.field.neg(c))
    }

    fn merge(
        &self,
        f: &SparsePolynomial<F>,
        g: &SparsePolynomial<F>,
        map_g: impl Fn(&F::Elem) -> F::Elem,
    ) -> SparsePolynomial<F> {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < f.terms.len() && j < g.terms.len() {
            match self.order.cmp(&f.terms[i].0, &g.terms[j].0) {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((g.terms[j].0.clone(), map_g(&g.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(&f.terms[i].1, &map_g(&g.terms[j].1));
                    if !self.field.is_zero(&c) {
                        out.push((f.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(f.terms[i..].iter().cloned());
        out.extend(g.terms[j..].iter().map(|(m, c)| (m.clone(), map_g(c))));
        SparsePolynomial { terms: out }
    }

    pub fn neg(&self, f: &SparsePolynomial<F>) -> SparsePolynomial<F> {
        SparsePolynomial {
            terms: f.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, f: &SparsePolynomial<F>, c: &F::Elem) -> SparsePolynomial<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        SparsePolynomial {
            terms: f.terms.iter().map(|(m, a)| (m.clone(), self.field.mul(a, c))).collect(),
        }
    }

    /// `c * m * f`; order is preserved because monomial orders are multiplicative.
    pub fn mul_term(&self, f: &SparsePolynomial<F>, m: &Monomial, c: &F::Elem) -> SparsePolynomial<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        SparsePolynomial {
            terms: f.terms.iter().map(|(n, a)| (n.mul(m), self.field.mul(a, c))).collect(),
        }
    }

    /// `f - c * m * g`, the elementary reduction step.
    pub fn sub_mul_term(
        &self,
        f: &SparsePolynomial<F>,
        c: &F::Elem,
        m: &Monomial,
        g: &SparsePolynomial<F>,
    ) -> SparsePolynomial<F> {
        let field = &self.field;
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|(n, a)| (n.mul(m), a)).peekable();
        while i < f.terms.len() {
            let Some((gm, ga)) = gi.peek() else { break };
            match self.order.cmp(&f.terms[i].0, gm) {
                Ordering::Greater => {
                    out.push(f.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm.clone(), field.neg(&field.mul(c, ga))));
                    gi.next();
                }
                Ordering::Equal => {
                    let v = field.sub_mul(&f.terms[i].1, c, ga);
                    if !field.is_zero(&v) {
                        out.push((f.terms[i].0.clone(), v));
                    }
                    i += 1;
                    gi.next();
                }
            }
        }
        out.extend(f.terms[i..].iter().cloned());
        for (gm, ga) in gi {
            out.push((gm, field.neg(&field.mul(c, ga))));
        }
        SparsePolynomial { terms: out }
    }

    pub fn mul(&self, f: &SparsePolynomial<F>, g: &SparsePolynomial<F>) -> SparsePolynomial<F> {
        if f.is_zero() || g.is_zero() {
            return self.zero();
        }
        let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = self.zero();
        for (m, c) in &small.terms {
            let part = self.mul_term(big, m, c);
            acc = self.add(&acc, &part);
        }
        acc
    }

    pub fn pow(&self, f: &SparsePolynomial<F>, n: u32) -> SparsePolynomial<F> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self, f: &SparsePolynomial<F>) -> SparsePolynomial<F> {
        match f.leading_coefficient() {
            None => self.zero(),
            Some(lc) if self.field.is_one(lc) => f.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(f, &inv)
            }
        }
    }

    /// Linear combination `sum c_i * f_i`.
    pub fn combination(&self, coeffs: &[F::Elem], polys: &[SparsePolynomial<F>]) -> SparsePolynomial<F> {
        let mut acc = self.zero();
        for (c, f) in coeffs.iter().zip(polys) {
            acc = self.add(&acc, &self.scale(f, c));
        }
        acc
    }

    /// Maps each variable `i` of `f` (from a ring with `src_nvars` variables)
    /// to variable `map[i]` of this ring.
    pub fn embed(&self, f: &SparsePolynomial<F>, map: &[usize]) -> SparsePolynomial<F> {
        let n = self.nvars();
        let terms = f
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0; n];
                for (i, &e) in m.exponents().iter().enumerate() {
                    exps[map[i]] += e;
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        self.from_terms(terms)
    }

    pub fn render(&self, f: &SparsePolynomial<F>) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in f.terms.iter().enumerate() {
            let mut coeff = self.field.render(c);
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mon = render_monomial(m, &self.names);
            match (coeff.as_str(), mon.is_empty()) {
                ("1", false) => out.push_str(&mon),
                (_, true) => out.push_str(&coeff),
                (_, false) => {
                    out.push_str(&coeff);
                    out.push('*');
                    out.push_str(&mon);
                }
            }
        }
        out
    }
}

pub fn render_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars()).map(|i| format!("x{}", i + 1)).collect();
        let s = render_monomial(self, &names);
        if s.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{s}")
        }
    }
}

/// All monomials of total degree `deg` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill_monomials(&mut exps, 0, deg, &mut out);
    out
}

fn fill_monomials(exps: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill_monomials(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}
