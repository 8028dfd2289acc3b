//! Numerical semigroup rings `k[[t^a1, ..., t^ak]]`.
//!
//! Every nonzero ideal `K` of such a ring is determined up to length by its
//! value set `v(K) = {ord(f) : f in K}`, and `λ(A/K) = #(S \ v(K))`. Ideals
//! generated by monomials get their value set combinatorially. Ideals with
//! non-monomial generators are computed by exact linear algebra in
//! `A / t^N`, where `N` is chosen so that `t^N k[[t]]` provably lies in the
//! ideal, and the result is certified by checking that every semigroup
//! member in the top window `[N - w, N)` is a value (`w` = Frobenius number
//! plus largest generator).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::LocalIdeal;
use crate::linalg::{intersect_row_spaces, left_kernel, IncrementalEchelon};

/// Hard cap on the truncation level of the linear-algebra path.
pub const MAX_TRUNCATION: u32 = 1 << 13;

/// A numerical semigroup, stored by its minimal generators and membership
/// table below the conductor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u32>,
    member: Vec<bool>,
    conductor: u32,
}

impl NumericalSemigroup {
    pub fn new(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() || gens.contains(&0) {
            return Err(Error::UnsupportedRing("semigroup generators must be positive".into()));
        }
        let g = gens.iter().fold(0u32, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::UnsupportedRing(format!("semigroup generators have gcd {g}, not 1")));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let smallest = sorted[0] as usize;

        let mut member = vec![true];
        let mut run = 1;
        while run < smallest {
            let s = member.len();
            let m = sorted.iter().any(|&a| (a as usize) <= s && member[s - a as usize]);
            member.push(m);
            run = if m { run + 1 } else { 0 };
        }
        // the last `smallest` entries are all members, so everything past
        // them is too
        let conductor = (member.len() - smallest) as u32;
        member.truncate(conductor as usize);

        let mut sg = NumericalSemigroup { generators: Vec::new(), member, conductor };
        sg.generators = sorted
            .iter()
            .copied()
            .filter(|&a| !(1..a).any(|x| sg.contains(x) && sg.contains(a - x)))
            .collect();
        Ok(sg)
    }

    /// Minimal generators, increasing.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn contains(&self, s: u32) -> bool {
        s >= self.conductor || self.member[s as usize]
    }

    /// Largest gap, `-1` for the full semigroup `N`.
    pub fn frobenius(&self) -> i64 {
        self.conductor as i64 - 1
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn gaps(&self) -> Vec<u32> {
        (0..self.conductor).filter(|&s| !self.contains(s)).collect()
    }

    /// Smallest nonzero element; equals `e0(m)`.
    pub fn multiplicity(&self) -> u32 {
        self.generators[0]
    }

    /// Number of minimal generators; equals `μ(m)`.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn max_generator(&self) -> u32 {
        *self.generators.last().expect("nonempty")
    }

    /// Members in `[0, n)`.
    pub fn members_below(&self, n: u32) -> impl Iterator<Item = u32> + '_ {
        (0..n).filter(move |&s| self.contains(s))
    }

    /// Width of the certification window.
    pub fn certificate_window(&self) -> u32 {
        self.conductor.saturating_sub(1) + self.max_generator()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.generators.iter().map(|a| a.to_string()).collect();
        write!(f, "<{}>", g.join(","))
    }
}

/// A polynomial in `t` whose support lies in the semigroup. Terms are sorted
/// by increasing degree and have nonzero coefficients.
pub struct SemigroupElement<F: Field> {
    terms: Vec<(u32, F::Elem)>,
}

impl<F: Field> Clone for SemigroupElement<F> {
    fn clone(&self) -> Self {
        SemigroupElement { terms: self.terms.clone() }
    }
}

impl<F: Field> fmt::Debug for SemigroupElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

impl<F: Field> PartialEq for SemigroupElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> SemigroupElement<F> {
    pub fn terms(&self) -> &[(u32, F::Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `t`-adic order; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|t| t.0)
    }
}

/// The ring `k[[S]]` over a concrete field.
#[derive(Clone, Debug)]
pub struct SemigroupRing<F: Field> {
    semigroup: NumericalSemigroup,
    field: F,
}

impl<F: Field> SemigroupRing<F> {
    pub fn new(semigroup: NumericalSemigroup, field: F) -> Arc<Self> {
        Arc::new(SemigroupRing { semigroup, field })
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn zero(&self) -> SemigroupElement<F> {
        SemigroupElement { terms: Vec::new() }
    }

    /// Builds an element from `(degree, coefficient)` pairs, rejecting
    /// degrees outside the semigroup.
    pub fn element(&self, terms: Vec<(u32, F::Elem)>) -> Result<SemigroupElement<F>> {
        let mut acc: BTreeMap<u32, F::Elem> = BTreeMap::new();
        for (d, c) in terms {
            let e = acc.entry(d).or_insert_with(|| self.field.zero());
            *e = self.field.add(e, &c);
        }
        let terms: Vec<(u32, F::Elem)> = acc.into_iter().filter(|(_, c)| !self.field.is_zero(c)).collect();
        if let Some((d, _)) = terms.iter().find(|(d, _)| !self.semigroup.contains(*d)) {
            return Err(Error::Invalid(format!("t^{d} is not in the ring {}", self.semigroup)));
        }
        Ok(SemigroupElement { terms })
    }

    pub fn monomial(&self, s: u32) -> Result<SemigroupElement<F>> {
        self.element(vec![(s, self.field.one())])
    }

    fn monomial_unchecked(&self, s: u32) -> SemigroupElement<F> {
        SemigroupElement { terms: vec![(s, self.field.one())] }
    }

    pub fn add(&self, a: &SemigroupElement<F>, b: &SemigroupElement<F>) -> SemigroupElement<F> {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < a.terms.len() && j < b.terms.len() {
            let (da, db) = (a.terms[i].0, b.terms[j].0);
            if da < db {
                out.push(a.terms[i].clone());
                i += 1;
            } else if db < da {
                out.push(b.terms[j].clone());
                j += 1;
            } else {
                let c = self.field.add(&a.terms[i].1, &b.terms[j].1);
                if !self.field.is_zero(&c) {
                    out.push((da, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend_from_slice(&b.terms[j..]);
        SemigroupElement { terms: out }
    }

    pub fn scale(&self, a: &SemigroupElement<F>, c: &F::Elem) -> SemigroupElement<F> {
        if self.field.is_zero(c) {
            return self.zero();
        }
        SemigroupElement { terms: a.terms.iter().map(|(d, x)| (*d, self.field.mul(x, c))).collect() }
    }

    pub fn mul(&self, a: &SemigroupElement<F>, b: &SemigroupElement<F>) -> SemigroupElement<F> {
        let mut acc: BTreeMap<u32, F::Elem> = BTreeMap::new();
        for (da, ca) in &a.terms {
            for (db, cb) in &b.terms {
                let e = acc.entry(da + db).or_insert_with(|| self.field.zero());
                *e = self.field.add(e, &self.field.mul(ca, cb));
            }
        }
        SemigroupElement { terms: acc.into_iter().filter(|(_, c)| !self.field.is_zero(c)).collect() }
    }

    /// `t^s * a` for a semigroup member `s`.
    pub fn shift(&self, a: &SemigroupElement<F>, s: u32) -> SemigroupElement<F> {
        SemigroupElement { terms: a.terms.iter().map(|(d, c)| (d + s, c.clone())).collect() }
    }

    /// Drops all terms of degree `>= n`.
    pub fn truncate(&self, a: &SemigroupElement<F>, n: u32) -> SemigroupElement<F> {
        SemigroupElement { terms: a.terms.iter().filter(|t| t.0 < n).cloned().collect() }
    }

    pub fn render(&self, a: &SemigroupElement<F>) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (d, c)) in a.terms.iter().enumerate() {
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
            let mon = match d {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{d}"),
            };
            match (coeff.as_str(), mon.is_empty()) {
                ("1", false) => out.push_str(&mon),
                (_, true) => out.push_str(&coeff),
                _ => out.push_str(&format!("{coeff}*{mon}")),
            }
        }
        out
    }
}

/// Column layout for `A / t^n`: one column per semigroup member below `n`.
struct Columns {
    degrees: Vec<u32>,
    index: Vec<Option<usize>>,
}

impl Columns {
    fn new(sg: &NumericalSemigroup, n: u32) -> Self {
        let degrees: Vec<u32> = sg.members_below(n).collect();
        let mut index = vec![None; n as usize];
        for (i, &d) in degrees.iter().enumerate() {
            index[d as usize] = Some(i);
        }
        Columns { degrees, index }
    }

    fn len(&self) -> usize {
        self.degrees.len()
    }

    fn dense<F: Field>(&self, field: &F, a: &SemigroupElement<F>) -> Vec<F::Elem> {
        let mut v = vec![field.zero(); self.len()];
        for (d, c) in &a.terms {
            if let Some(Some(i)) = self.index.get(*d as usize) {
                v[*i] = c.clone();
            }
        }
        v
    }

    fn sparse<F: Field>(&self, field: &F, v: &[F::Elem]) -> SemigroupElement<F> {
        SemigroupElement {
            terms: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !field.is_zero(c))
                .map(|(i, c)| (self.degrees[i], c.clone()))
                .collect(),
        }
    }
}

/// Value set of an ideal with an echelon basis of the ideal modulo
/// everything at or above its conductor.
#[derive(Clone, Debug)]
struct ValueData<F: Field> {
    conductor: u32,
    /// `rows[s]` for `s < conductor`: an element of the ideal of order `s`
    /// with leading coefficient one, truncated below the conductor.
    rows: Vec<Option<SemigroupElement<F>>>,
    truncation: u32,
}

impl<F: Field> ValueData<F> {
    fn is_value(&self, s: u32) -> bool {
        s >= self.conductor || self.rows[s as usize].is_some()
    }

    fn row(&self, ring: &SemigroupRing<F>, s: u32) -> SemigroupElement<F> {
        if s >= self.conductor {
            ring.monomial_unchecked(s)
        } else {
            self.rows[s as usize].clone().expect("value")
        }
    }
}

/// An ideal of a numerical semigroup ring.
#[derive(Clone)]
pub struct SemigroupIdeal<F: Field> {
    ring: Arc<SemigroupRing<F>>,
    gens: Vec<SemigroupElement<F>>,
    monomial: bool,
    data: ValueData<F>,
}

impl<F: Field> fmt::Debug for SemigroupIdeal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.ring.render(g)).collect();
        f.debug_struct("SemigroupIdeal")
            .field("ring", &self.ring.semigroup.to_string())
            .field("gens", &gens)
            .field("conductor", &self.data.conductor)
            .finish()
    }
}

impl<F: Field> SemigroupIdeal<F> {
    /// The ideal generated by `gens`. Zero generators are dropped; the zero
    /// ideal is rejected since it is not primary to the maximal ideal.
    pub fn new(ring: &Arc<SemigroupRing<F>>, gens: Vec<SemigroupElement<F>>) -> Result<Self> {
        let gens: Vec<SemigroupElement<F>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Err(Error::NotPrimary("the zero ideal".into()));
        }
        let monomial = gens.iter().all(|g| g.is_monomial());
        let data = if monomial {
            let exps: Vec<u32> = gens.iter().map(|g| g.terms[0].0).collect();
            monomial_data(ring, &exps)
        } else {
            let v_min = gens.iter().filter_map(|g| g.order()).min().expect("nonzero");
            let bound = v_min + ring.semigroup.conductor();
            certified_span(ring, gens.clone(), bound, false)?
        };
        Ok(SemigroupIdeal { ring: ring.clone(), gens, monomial, data })
    }

    /// The monomial ideal `(t^e : e in exps)`.
    pub fn monomial(ring: &Arc<SemigroupRing<F>>, exps: &[u32]) -> Result<Self> {
        let gens = exps.iter().map(|&e| ring.monomial(e)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn maximal(ring: &Arc<SemigroupRing<F>>) -> Self {
        Self::monomial(ring, ring.semigroup.generators()).expect("generators are members")
    }

    pub fn ring(&self) -> &Arc<SemigroupRing<F>> {
        &self.ring
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.ring.semigroup
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial
    }

    /// Smallest `c` with every integer `>= c` a value.
    pub fn conductor(&self) -> u32 {
        self.data.conductor
    }

    /// Truncation level at which the value set was certified.
    pub fn truncation(&self) -> u32 {
        self.data.truncation
    }

    /// Values below the conductor (the order set, cut at its conductor).
    pub fn values_below_conductor(&self) -> Vec<u32> {
        (0..self.data.conductor).filter(|&s| self.data.is_value(s)).collect()
    }

    pub fn is_value(&self, s: u32) -> bool {
        self.semigroup().contains(s) && self.data.is_value(s)
    }

    /// Smallest order of an element of the ideal.
    pub fn min_value(&self) -> u32 {
        (0..=self.data.conductor).find(|&s| self.data.is_value(s)).expect("conductor is a value")
    }

    /// Elements whose orders minimally generate the value set; they generate
    /// the ideal.
    pub fn standard_basis(&self) -> Vec<SemigroupElement<F>> {
        let sg = self.semigroup();
        let top = self.data.conductor + sg.multiplicity();
        let values: Vec<u32> = (0..top).filter(|&s| self.is_value(s)).collect();
        values
            .iter()
            .filter(|&&s| !values.iter().any(|&u| u < s && sg.contains(s - u) && s - u > 0))
            .map(|&s| self.data.row(&self.ring, s))
            .collect()
    }

    /// `λ(A/K)`: semigroup members that are not values.
    pub fn sg_colength(&self) -> u64 {
        (0..self.data.conductor).filter(|&s| self.semigroup().contains(s) && !self.data.is_value(s)).count() as u64
    }

    /// A random combination `sum c_i g_i` of the generators with nonzero
    /// coefficients, reproducible from `seed`.
    pub fn sg_random_element(&self, seed: u64) -> SemigroupElement<F> {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let coeffs: Vec<F::Elem> = self.gens.iter().map(|_| self.ring.field.random_nonzero(&mut rng)).collect();
        self.combine(&coeffs, &self.gens)
    }

    fn from_data(&self, gens: Vec<SemigroupElement<F>>, monomial: bool, data: ValueData<F>) -> Self {
        SemigroupIdeal { ring: self.ring.clone(), gens, monomial, data }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.semigroup == other.ring.semigroup {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Basis of `K + t^n A` modulo `t^n` (rows below the conductor plus
    /// monomials from the conductor up to `n`).
    fn span_rows(&self, n: u32) -> Vec<SemigroupElement<F>> {
        let mut rows: Vec<SemigroupElement<F>> = (0..self.data.conductor.min(n))
            .filter_map(|s| self.data.rows[s as usize].as_ref())
            .map(|r| self.ring.truncate(r, n))
            .collect();
        rows.extend((self.data.conductor..n).map(|s| self.ring.monomial_unchecked(s)));
        rows
    }

    pub fn sg_power(&self, n: u32) -> Result<Self> {
        LocalIdeal::power(self, n)
    }

    pub fn sg_product(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.monomial && other.monomial {
            let exps: Vec<u32> = self
                .monomial_exponents()
                .iter()
                .flat_map(|a| other.monomial_exponents().into_iter().map(move |b| a + b))
                .collect();
            let exps = minimal_exponents(&self.ring.semigroup, exps);
            let gens = exps.iter().map(|&e| self.ring.monomial_unchecked(e)).collect();
            return Ok(self.from_data(gens, true, monomial_data(&self.ring, &exps)));
        }
        if other.gens.len() == 1 || self.gens.len() == 1 {
            let gens = products(&self.ring, &self.gens, &other.gens);
            let (a, k) = if other.gens.len() == 1 { (&other.gens[0], &self.data) } else { (&self.gens[0], &other.data) };
            return Ok(self.from_data(gens, false, principal_product(&self.ring, a, k)));
        }
        // K * L as the sum of the principal products g * L over a standard
        // basis of K
        let mut parts = self
            .standard_basis()
            .into_iter()
            .map(|g| principal_product(&self.ring, &g, &other.data))
            .map(|d| self.from_data(Vec::new(), false, d));
        let first = parts.next().expect("nonzero ideal");
        let mut acc = parts.try_fold(first, |acc, p| acc.sg_sum(&p))?;
        acc.gens = acc.standard_basis();
        Ok(acc)
    }

    pub fn sg_sum(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        if self.monomial && other.monomial {
            let exps: Vec<u32> = gens.iter().map(|g| g.terms[0].0).collect();
            let exps = minimal_exponents(&self.ring.semigroup, exps);
            let gens = exps.iter().map(|&e| self.ring.monomial_unchecked(e)).collect();
            return Ok(self.from_data(gens, true, monomial_data(&self.ring, &exps)));
        }
        let bound = self.data.conductor.min(other.data.conductor);
        let data = certified_with(&self.ring, bound, |n| {
            let mut rows = self.span_rows(n);
            rows.extend(other.span_rows(n));
            Ok(rows)
        })?;
        let mut out = self.from_data(gens, false, data);
        let basis = out.standard_basis();
        if basis.len() < out.gens.len() {
            out.gens = basis;
        }
        Ok(out)
    }

    pub fn sg_intersect(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.monomial && other.monomial {
            let data = filtered_data(&self.ring, |s| self.data.is_value(s) && other.data.is_value(s));
            return Ok(self.monomial_from_values(data));
        }
        let field = self.ring.field.clone();
        let bound = self.data.conductor.max(other.data.conductor);
        let data = certified_with(&self.ring, bound, |n| {
            let cols = Columns::new(&self.ring.semigroup, n);
            let a: Vec<_> = self.span_rows(n).iter().map(|r| cols.dense(&field, r)).collect();
            let b: Vec<_> = other.span_rows(n).iter().map(|r| cols.dense(&field, r)).collect();
            let inter = intersect_row_spaces(&field, &a, &b, cols.len());
            Ok(inter.iter().map(|v| cols.sparse(&field, v)).collect())
        })?;
        let mut out = self.from_data(Vec::new(), false, data);
        out.gens = out.standard_basis();
        Ok(out)
    }

    /// `(K : L)`
    pub fn sg_colon(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.monomial && other.monomial {
            let lv = other.monomial_exponents();
            let data = filtered_data(&self.ring, |s| lv.iter().all(|&l| self.data.is_value(s + l)));
            return Ok(self.monomial_from_values(data));
        }
        let field = self.ring.field.clone();
        let divisors = other.standard_basis();
        let bound = self.data.conductor;
        let data = certified_with(&self.ring, bound, |n| {
            let cols = Columns::new(&self.ring.semigroup, n);
            let mut acc: Option<Vec<Vec<F::Elem>>> = None;
            for l in &divisors {
                let kernel = self.colon_element_rows(l, &cols);
                acc = Some(match acc {
                    None => kernel,
                    Some(prev) => intersect_row_spaces(&field, &prev, &kernel, cols.len()),
                });
            }
            Ok(acc.unwrap_or_default().iter().map(|v| cols.sparse(&field, v)).collect())
        })?;
        let mut out = self.from_data(Vec::new(), false, data);
        out.gens = out.standard_basis();
        Ok(out)
    }

    /// Basis (mod `t^n`) of `{x : x*l in K}`.
    fn colon_element_rows(&self, l: &SemigroupElement<F>, cols: &Columns) -> Vec<Vec<F::Elem>> {
        let field = &self.ring.field;
        let c = self.data.conductor;
        // residues live in the complement of the value set below c
        let complement: Vec<u32> = (0..c).filter(|&s| self.semigroup().contains(s) && !self.data.is_value(s)).collect();
        let images: Vec<Vec<F::Elem>> = cols
            .degrees
            .iter()
            .map(|&s| {
                let prod = self.ring.shift(l, s);
                let residue = self.reduce(&prod);
                complement
                    .iter()
                    .map(|d| {
                        residue
                            .terms
                            .iter()
                            .find(|t| t.0 == *d)
                            .map(|t| t.1.clone())
                            .unwrap_or_else(|| field.zero())
                    })
                    .collect()
            })
            .collect();
        left_kernel(field, &images, complement.len())
    }

    /// Remainder of `f` modulo the ideal: only non-value degrees below the
    /// conductor survive.
    fn reduce(&self, f: &SemigroupElement<F>) -> SemigroupElement<F> {
        let field = &self.ring.field;
        let c = self.data.conductor;
        let mut acc: BTreeMap<u32, F::Elem> =
            f.terms.iter().filter(|t| t.0 < c).map(|(d, x)| (*d, x.clone())).collect();
        let mut rem = Vec::new();
        while let Some((d, x)) = acc.pop_first() {
            match &self.data.rows[d as usize] {
                None => rem.push((d, x)),
                Some(row) => {
                    for (e, y) in row.terms.iter().skip(1) {
                        if *e >= c {
                            break;
                        }
                        let entry = acc.entry(*e).or_insert_with(|| field.zero());
                        *entry = field.sub_mul(entry, &x, y);
                        if field.is_zero(entry) {
                            acc.remove(e);
                        }
                    }
                }
            }
        }
        SemigroupElement { terms: rem }
    }

    pub fn sg_contains(&self, f: &SemigroupElement<F>) -> bool {
        self.reduce(f).is_zero()
    }

    fn monomial_exponents(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.terms[0].0).collect()
    }

    fn monomial_from_values(&self, data: ValueData<F>) -> Self {
        let mut out = self.from_data(Vec::new(), true, data);
        out.gens = out.standard_basis();
        out
    }
}

/// Exponents not reachable from a smaller one by adding a semigroup member.
fn minimal_exponents(sg: &NumericalSemigroup, mut exps: Vec<u32>) -> Vec<u32> {
    exps.sort_unstable();
    exps.dedup();
    let all = exps.clone();
    exps.retain(|&e| !all.iter().any(|&f| f < e && sg.contains(e - f)));
    exps
}

fn products<F: Field>(
    ring: &SemigroupRing<F>,
    a: &[SemigroupElement<F>],
    b: &[SemigroupElement<F>],
) -> Vec<SemigroupElement<F>> {
    a.iter().flat_map(|x| b.iter().map(move |y| ring.mul(x, y))).collect()
}

fn monomial_data<F: Field>(ring: &SemigroupRing<F>, exps: &[u32]) -> ValueData<F> {
    let sg = &ring.semigroup;
    filtered_data(ring, |s| exps.iter().any(|&e| s >= e && sg.contains(s - e)))
}

/// Monomial value data for the value predicate `is_value` (which must
/// describe a monomial ideal that is nonzero).
fn filtered_data<F: Field>(ring: &SemigroupRing<F>, is_value: impl Fn(u32) -> bool) -> ValueData<F> {
    let sg = &ring.semigroup;
    // scan until a run of `multiplicity` consecutive values past the
    // semigroup conductor
    let m = sg.multiplicity();
    let mut run = 0;
    let mut s = 0;
    let mut marks = Vec::new();
    loop {
        let v = sg.contains(s) && is_value(s);
        marks.push(v);
        if v && s >= sg.conductor() {
            run += 1;
            if run == m {
                break;
            }
        } else {
            run = 0;
        }
        s += 1;
    }
    let mut conductor = marks.len() as u32;
    while conductor > sg.conductor() && marks[conductor as usize - 1] {
        conductor -= 1;
    }
    let rows = (0..conductor)
        .map(|s| if marks[s as usize] { Some(ring.monomial_unchecked(s)) } else { None })
        .collect();
    ValueData { conductor, rows, truncation: conductor }
}

/// `(a) * K` from the value data of `K`: values shift by `ord(a)`.
fn principal_product<F: Field>(ring: &SemigroupRing<F>, a: &SemigroupElement<F>, k: &ValueData<F>) -> ValueData<F> {
    let sg = &ring.semigroup;
    let va = a.order().expect("nonzero");
    let field = &ring.field;
    let inv = field.inv(&a.terms[0].1).expect("nonzero");
    let is_value = |u: u32| u >= va && sg.contains(u) && k.is_value(u - va);
    let top = va + k.conductor;
    let mut conductor = top;
    while conductor > sg.conductor() && is_value(conductor - 1) {
        conductor -= 1;
    }
    let rows = (0..conductor)
        .map(|u| {
            if is_value(u) {
                let r = ring.mul(a, &k.row(ring, u - va));
                Some(ring.scale(&ring.truncate(&r, conductor), &inv))
            } else {
                None
            }
        })
        .collect();
    ValueData { conductor, rows, truncation: top }
}

/// Value data of the ideal spanned modulo `t^n` by `rows(n)`, where the
/// caller guarantees `t^n k[[t]]` lies in the ideal for every `n >= bound`
/// and that `rows(n)` is closed under multiplication by the ring.
fn certified_with<F: Field>(
    ring: &SemigroupRing<F>,
    bound: u32,
    rows: impl Fn(u32) -> Result<Vec<SemigroupElement<F>>>,
) -> Result<ValueData<F>> {
    let w = ring.semigroup.certificate_window();
    let mut n = bound.max(ring.semigroup.conductor() + w);
    loop {
        if n > MAX_TRUNCATION {
            return Err(Error::TruncationOverflow { required: n });
        }
        match echelon_data(ring, rows(n)?, n, true) {
            Ok(d) => return Ok(d),
            Err(needed) => n = needed.max(n + 1),
        }
    }
}

fn certified_span<F: Field>(
    ring: &SemigroupRing<F>,
    seeds: Vec<SemigroupElement<F>>,
    bound: u32,
    closed: bool,
) -> Result<ValueData<F>> {
    let w = ring.semigroup.certificate_window();
    let mut n = bound.max(ring.semigroup.conductor() + w);
    loop {
        if n > MAX_TRUNCATION {
            return Err(Error::TruncationOverflow { required: n });
        }
        match echelon_data(ring, seeds.clone(), n, closed) {
            Ok(d) => return Ok(d),
            Err(needed) => n = needed.max(n + 1),
        }
    }
}

/// Echelon form of the span of `seeds` modulo `t^n`, closed under
/// multiplication by the semigroup generators unless `closed` says it
/// already is. Returns the truncation level to retry with when the top
/// window is not fully covered by values.
fn echelon_data<F: Field>(
    ring: &SemigroupRing<F>,
    seeds: Vec<SemigroupElement<F>>,
    n: u32,
    closed: bool,
) -> Result<ValueData<F>, u32> {
    let sg = &ring.semigroup;
    let field = &ring.field;
    let cols = Columns::new(sg, n);
    let mut ech = IncrementalEchelon::new(field.clone(), cols.len());
    let mut queue: Vec<Vec<F::Elem>> = seeds.iter().map(|s| cols.dense(field, s)).collect();
    while let Some(v) = queue.pop() {
        if let Some(p) = ech.insert(v) {
            if !closed {
                let row = cols.sparse(field, ech.pivot_row(p).expect("just inserted"));
                for &g in sg.generators() {
                    let shifted = ring.truncate(&ring.shift(&row, g), n);
                    if !shifted.is_zero() {
                        queue.push(cols.dense(field, &shifted));
                    }
                }
            }
        }
    }
    let is_pivot = |s: u32| cols.index[s as usize].is_some_and(|i| ech.has_pivot(i));
    let w = sg.certificate_window();
    let window_start = n.saturating_sub(w);
    let mut conductor = n;
    while conductor > 0 && sg.contains(conductor - 1) && is_pivot(conductor - 1) {
        conductor -= 1;
    }
    conductor = conductor.max(sg.conductor());
    if conductor > window_start {
        return Err(conductor + w);
    }
    let rows = (0..conductor)
        .map(|s| {
            if sg.contains(s) && is_pivot(s) {
                let r = cols.sparse(field, ech.pivot_row(cols.index[s as usize].expect("member")).expect("pivot"));
                Some(ring.truncate(&r, conductor))
            } else {
                None
            }
        })
        .collect();
    Ok(ValueData { conductor, rows, truncation: n })
}

impl<F: Field> LocalIdeal for SemigroupIdeal<F> {
    type Field = F;
    type Element = SemigroupElement<F>;

    fn dim(&self) -> usize {
        1
    }

    fn field(&self) -> &F {
        &self.ring.field
    }

    fn generators(&self) -> &[SemigroupElement<F>] {
        &self.gens
    }

    fn render_element(&self, e: &SemigroupElement<F>) -> String {
        self.ring.render(e)
    }

    fn is_zero_element(&self, e: &SemigroupElement<F>) -> bool {
        e.is_zero()
    }

    fn with_generators(&self, gens: Vec<SemigroupElement<F>>) -> Result<Self> {
        SemigroupIdeal::new(&self.ring, gens)
    }

    fn maximal_ideal(&self) -> Self {
        SemigroupIdeal::maximal(&self.ring)
    }

    fn unit_ideal(&self) -> Self {
        SemigroupIdeal::monomial(&self.ring, &[0]).expect("0 is a member")
    }

    fn colength(&self) -> Result<u64> {
        Ok(self.sg_colength())
    }

    fn product(&self, other: &Self) -> Result<Self> {
        self.sg_product(other)
    }

    fn sum(&self, other: &Self) -> Result<Self> {
        self.sg_sum(other)
    }

    fn intersect(&self, other: &Self) -> Result<Self> {
        self.sg_intersect(other)
    }

    fn colon(&self, other: &Self) -> Result<Self> {
        self.sg_colon(other)
    }

    fn contains_element(&self, f: &SemigroupElement<F>) -> Result<bool> {
        Ok(self.sg_contains(f))
    }

    fn combination_basis(&self) -> Result<Vec<SemigroupElement<F>>> {
        Ok(self.gens.clone())
    }

    fn combine(&self, coeffs: &[F::Elem], basis: &[SemigroupElement<F>]) -> SemigroupElement<F> {
        coeffs
            .iter()
            .zip(basis)
            .fold(self.ring.zero(), |acc, (c, g)| self.ring.add(&acc, &self.ring.scale(g, c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn ring(gens: &[u32]) -> Arc<SemigroupRing<PrimeField>> {
        SemigroupRing::new(NumericalSemigroup::new(gens).unwrap(), PrimeField::default())
    }

    fn el(r: &SemigroupRing<PrimeField>, terms: &[(u32, i64)]) -> SemigroupElement<PrimeField> {
        r.element(terms.iter().map(|&(d, c)| (d, r.field().from_i64(c))).collect()).unwrap()
    }

    #[test]
    fn semigroup_345() {
        let s = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert_eq!(s.frobenius(), 2);
        assert_eq!(s.gaps(), vec![1, 2]);
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.embedding_dimension(), 3);
    }

    #[test]
    fn semigroup_minimal_generators_and_frobenius() {
        let s = NumericalSemigroup::new(&[6, 3, 4, 5, 8]).unwrap();
        assert_eq!(s.generators(), &[3, 4, 5]);
        let s = NumericalSemigroup::new(&[5, 7]).unwrap();
        assert_eq!(s.frobenius(), 5 * 7 - 5 - 7);
        assert_eq!(s.gaps().len(), (4 * 6) / 2);
        let n = NumericalSemigroup::new(&[1]).unwrap();
        assert_eq!(n.frobenius(), -1);
        assert!(n.gaps().is_empty());
    }

    #[test]
    fn semigroup_rejects_bad_generators() {
        assert!(NumericalSemigroup::new(&[4, 6]).is_err());
        assert!(NumericalSemigroup::new(&[]).is_err());
        assert!(NumericalSemigroup::new(&[0, 1]).is_err());
    }

    #[test]
    fn element_support_must_lie_in_semigroup() {
        let r = ring(&[3, 4, 5]);
        assert!(r.monomial(2).is_err());
        assert!(r.monomial(7).is_ok());
    }

    #[test]
    fn colength_examples() {
        let r = ring(&[3, 4, 5]);
        assert_eq!(SemigroupIdeal::maximal(&r).sg_colength(), 1);
        let i = SemigroupIdeal::monomial(&r, &[3, 4]).unwrap();
        // members 0 and 5 are missing from {3,4} + S
        assert_eq!(i.sg_colength(), 2);
        let dvr = ring(&[1]);
        assert_eq!(SemigroupIdeal::monomial(&dvr, &[1]).unwrap().sg_colength(), 1);
    }

    #[test]
    fn powers_of_maximal_ideal() {
        let r = ring(&[3, 4, 5]);
        let m2 = SemigroupIdeal::maximal(&r).sg_power(2).unwrap();
        assert_eq!(m2.conductor(), 6);
        assert!(m2.values_below_conductor().is_empty());
        let i2 = SemigroupIdeal::monomial(&r, &[3, 4]).unwrap().sg_power(2).unwrap();
        assert_eq!(i2.conductor(), 6);
        let i = SemigroupIdeal::monomial(&r, &[3, 4]).unwrap();
        assert_eq!(i.sg_power(1).unwrap().sg_colength(), i.sg_colength());
    }

    #[test]
    fn intersection_and_colon() {
        let r = ring(&[3, 4, 5]);
        let t3 = SemigroupIdeal::monomial(&r, &[3]).unwrap();
        let m2 = SemigroupIdeal::maximal(&r).sg_power(2).unwrap();
        let inter = t3.sg_intersect(&m2).unwrap();
        assert_eq!(inter.conductor(), 6);
        assert!(inter.values_below_conductor().is_empty());
        assert!(t3.sg_intersect(&t3).unwrap().equals(&t3).unwrap());
        let t6 = SemigroupIdeal::monomial(&r, &[6]).unwrap();
        assert!(t6.sg_colon(&t3).unwrap().equals(&t3).unwrap());
    }

    #[test]
    fn generic_path_agrees_with_monomial_path() {
        let r = ring(&[3, 4, 5]);
        let m = SemigroupIdeal::maximal(&r);
        // (t^3 + t^4) generates an ideal with the same values as (t^3)
        let a = el(&r, &[(3, 1), (4, 1)]);
        let j = SemigroupIdeal::new(&r, vec![a.clone()]).unwrap();
        assert!(!j.is_monomial());
        assert_eq!(j.sg_colength(), 3);
        let jm = j.sg_product(&m).unwrap();
        let m2 = m.sg_power(2).unwrap();
        assert_eq!(jm.sg_colength(), m2.sg_colength());
        assert!(m2.contains(&jm).unwrap());
        // sum with a monomial ideal through the linear-algebra path
        let s = j.sg_sum(&SemigroupIdeal::monomial(&r, &[5]).unwrap()).unwrap();
        assert_eq!(s.sg_colength(), 2);
    }

    #[test]
    fn random_element_is_reproducible() {
        let r = ring(&[3, 4, 5]);
        let i = SemigroupIdeal::monomial(&r, &[3, 4]).unwrap();
        let a = i.sg_random_element(11);
        assert_eq!(a, i.sg_random_element(11));
        assert_eq!(a.order(), Some(3));
        assert_eq!(a.terms().len(), 2);
        let p = SemigroupIdeal::monomial(&r, &[4]).unwrap();
        let b = p.sg_random_element(5);
        assert!(b.is_monomial());
        assert_eq!(b.order(), Some(4));
    }

    #[test]
    fn non_monomial_sum_can_gain_values() {
        // (t^3 + t^4, t^3) contains t^4
        let r = ring(&[3, 4, 5]);
        let a = SemigroupIdeal::new(&r, vec![el(&r, &[(3, 1), (4, 1)]), el(&r, &[(3, 1)])]).unwrap();
        assert!(a.sg_contains(&el(&r, &[(4, 1)])));
        assert_eq!(a.sg_colength(), 2);
    }
}
