//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the engine.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Value-set arithmetic for monomial ideals of a numerical semigroup ring.
pub struct OrderSets {
    member: Vec<bool>,
}

impl OrderSets {
    pub fn new(gens: &[u32], bound: u32) -> Self {
        let mut member = vec![false; bound as usize];
        member[0] = true;
        for s in 1..bound as usize {
            member[s] = gens.iter().any(|&g| g as usize <= s && member[s - g as usize]);
        }
        OrderSets { member }
    }

    fn bound(&self) -> usize {
        self.member.len()
    }

    /// Values of the ideal generated by `t^e`, `e ∈ exps`, below the bound.
    pub fn values(&self, exps: &BTreeSet<u32>) -> Vec<bool> {
        (0..self.bound())
            .map(|s| self.member[s] && exps.iter().any(|&e| e as usize <= s && self.member[s - e as usize]))
            .collect()
    }

    pub fn colength(&self, values: &[bool]) -> u64 {
        (0..self.bound()).filter(|&s| self.member[s] && !values[s]).count() as u64
    }

    pub fn union(a: &[bool], b: &[bool]) -> Vec<bool> {
        a.iter().zip(b).map(|(x, y)| *x || *y).collect()
    }
}

/// Exponents of the monomial generators of `(exps)^n`.
pub fn sumset_power(exps: &[u32], n: u32) -> BTreeSet<u32> {
    let mut acc = BTreeSet::from([0]);
    for _ in 0..n {
        acc = acc.iter().flat_map(|a| exps.iter().map(move |e| a + e)).collect();
    }
    acc
}

/// `λ(R/I^n)` for `n = 0..=n_max`, where `I = (t^e : e ∈ exps)`.
pub fn semigroup_table(gens: &[u32], exps: &[u32], n_max: u32) -> Vec<u64> {
    let top = exps.iter().max().copied().unwrap_or(1);
    let sets = OrderSets::new(gens, top * (n_max + 1) + 2 * gens.iter().max().unwrap() * gens.iter().min().unwrap() + 16);
    (0..=n_max).map(|n| sets.colength(&sets.values(&sumset_power(exps, n)))).collect()
}

/// Lower and upper sums for the monomial reduction `J = (t^v)`, `v` the
/// least exponent, with `r_J(I)` found by comparing value sets.
pub fn semigroup_sums(gens: &[u32], exps: &[u32]) -> (u32, u64, u64) {
    let v = *exps.iter().min().unwrap();
    let top = *exps.iter().max().unwrap();
    let sets = OrderSets::new(gens, top * 40 + 2 * gens.iter().max().unwrap() * gens.iter().min().unwrap() + 16);
    let shifted = |n: u32| sumset_power(exps, n).iter().map(|x| x + v).collect::<BTreeSet<u32>>();
    let r = (0..30).find(|&r| sets.values(&shifted(r)) == sets.values(&sumset_power(exps, r + 1))).expect("reduction");
    let j = sets.values(&BTreeSet::from([v]));
    let lj = sets.colength(&j);
    let mut lower = 0;
    let mut upper = 0;
    for n in 1..=r + 1 {
        let pn = sets.values(&sumset_power(exps, n));
        lower += lj - sets.colength(&OrderSets::union(&j, &pn));
        upper += sets.colength(&sets.values(&shifted(n - 1))) - sets.colength(&pn);
    }
    (r, lower, upper)
}

/// Exponent pairs of a monomial ideal of `k[x,y]` written as `x^a*y^b`
/// products; `None` for anything else.
pub fn monomial_exponents(gens: &[String]) -> Option<Vec<(u32, u32)>> {
    gens.iter()
        .map(|g| {
            let mut e = (0, 0);
            for f in g.split('*') {
                let (var, pow) = match f.trim().split_once('^') {
                    Some((v, p)) => (v.trim(), p.trim().parse().ok()?),
                    None => (f.trim(), 1),
                };
                match var {
                    "x" => e.0 += pow,
                    "y" => e.1 += pow,
                    _ => return None,
                }
            }
            Some(e)
        })
        .collect()
}

/// `λ(k[x,y]/I^n)` for a monomial ideal, by counting standard monomials.
pub fn plane_table(exps: &[(u32, u32)], n_max: u32) -> Vec<u64> {
    let mut power: BTreeSet<(u32, u32)> = BTreeSet::from([(0, 0)]);
    let mut out = Vec::new();
    for n in 0..=n_max {
        if n > 0 {
            power = power.iter().flat_map(|&(a, b)| exps.iter().map(move |&(c, d)| (a + c, b + d))).collect();
        }
        let bound = power.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        let mut count = 0;
        for a in 0..=bound {
            for b in 0..=bound {
                if !power.iter().any(|&(c, d)| c <= a && d <= b) {
                    count += 1;
                }
            }
        }
        out.push(count);
    }
    out
}

/// `e_0, e_1` of a dimension-one table from its last two entries.
pub fn dim1_coefficients(table: &[u64]) -> (i64, i64) {
    let n = table.len() - 1;
    let e0 = table[n] as i64 - table[n - 1] as i64;
    (e0, e0 * n as i64 - table[n] as i64)
}

/// `e_0, e_1, e_2` of a dimension-two table from its last three entries.
pub fn dim2_coefficients(table: &[u64]) -> (i64, i64, i64) {
    let n = table.len() - 1;
    let t = |k: usize| table[k] as i64;
    let e0 = t(n) - 2 * t(n - 1) + t(n - 2);
    let nn = n as i64;
    // H(n) - H(n-1) = e0 n - e1
    let e1 = e0 * nn - (t(n) - t(n - 1));
    let e2 = t(n) - e0 * nn * (nn + 1) / 2 + e1 * nn;
    (e0, e1, e2)
}
