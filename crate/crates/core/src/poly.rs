//! Multivariate polynomials over ℕ in a fixed number of variables.
//!
//! This is the brute-force ground truth behind the monomial-basis
//! computations: a symmetric function is expanded into explicit monomials,
//! manipulated there, and read back by peeling off leading monomials.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfunc::{SymFunc, TensorSymFunc};

/// Exponent vector of length `nvars`.
pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, BigUint>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(vec![0; nvars], BigUint::from(1u32));
        p
    }

    /// The monomial `x^exponent` with coefficient `coeff`.
    pub fn monomial(exponent: Exponent, coeff: impl Into<BigUint>) -> Self {
        let mut p = Polynomial::zero(exponent.len());
        p.add_term(exponent, coeff.into());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, BigUint> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: &[u32]) -> BigUint {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponent: Exponent, coeff: BigUint) {
        assert_eq!(exponent.len(), self.nvars, "exponent length mismatch");
        if coeff.is_zero() {
            return;
        }
        *self.terms.entry(exponent).or_default() += coeff;
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Evaluates at a point of ℕ^nvars.
    pub fn eval(&self, point: &[u64]) -> BigUint {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = c.clone();
                for (&x, &k) in point.iter().zip(e) {
                    v *= BigUint::from(x).pow(k);
                }
                v
            })
            .sum()
    }
}

/// Calls `visit` once for every distinct way of placing the parts of `shape`
/// into `slots` positions, at most one part per position. The callback gets
/// `(position, part)` pairs.
pub fn for_each_arrangement(shape: &Partition, slots: usize, mut visit: impl FnMut(&[(usize, u32)])) {
    if shape.len() > slots {
        return;
    }
    let groups = shape.multiplicities();
    let mut used = vec![false; slots];
    let mut placed = Vec::with_capacity(shape.len());
    arrange(&groups, 0, 0, 0, &mut used, &mut placed, &mut visit);
}

fn arrange(
    groups: &[(u32, usize)],
    group: usize,
    placed_in_group: usize,
    start: usize,
    used: &mut Vec<bool>,
    placed: &mut Vec<(usize, u32)>,
    visit: &mut impl FnMut(&[(usize, u32)]),
) {
    if group == groups.len() {
        visit(placed);
        return;
    }
    let (value, count) = groups[group];
    if placed_in_group == count {
        arrange(groups, group + 1, 0, 0, used, placed, visit);
        return;
    }
    // positions within a group are chosen in increasing order so each
    // subset is produced once
    for pos in start..used.len() {
        if used[pos] {
            continue;
        }
        used[pos] = true;
        placed.push((pos, value));
        arrange(groups, group, placed_in_group + 1, pos + 1, used, placed, visit);
        placed.pop();
        used[pos] = false;
    }
}

/// Expands `f` in `k` variables, setting all further variables to zero.
pub fn expand_in_vars(f: &SymFunc, k: usize) -> Polynomial {
    let mut out = Polynomial::zero(k);
    for (shape, coeff) in f.terms() {
        for_each_arrangement(shape, k, |placed| {
            let mut e = vec![0; k];
            for &(pos, part) in placed {
                e[pos] = part;
            }
            out.add_term(e, coeff.clone());
        });
    }
    out
}

/// Recovers the monomial-basis expansion of a symmetric polynomial by
/// repeatedly peeling off the leading monomial.
pub fn from_polynomial(p: &Polynomial, degree_bound: usize) -> Result<SymFunc> {
    let k = p.nvars();
    let mut residual = p.terms.clone();
    let mut out = SymFunc::zero(degree_bound);
    while let Some((lead, coeff)) = residual.last_key_value() {
        let lead = lead.clone();
        let coeff = coeff.clone();
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric(lead));
        }
        let shape = Partition::new(lead.iter().copied());
        if shape.size() > degree_bound {
            return Err(Error::overflow(&shape, degree_bound));
        }
        let mut failure = None;
        for_each_arrangement(&shape, k, |placed| {
            if failure.is_some() {
                return;
            }
            let mut e = vec![0; k];
            for &(pos, part) in placed {
                e[pos] = part;
            }
            match residual.get_mut(&e) {
                Some(c) if *c >= coeff => {
                    *c -= &coeff;
                    if c.is_zero() {
                        residual.remove(&e);
                    }
                }
                _ => failure = Some(e),
            }
        });
        if let Some(e) = failure {
            return Err(Error::NotSymmetric(e));
        }
        out.add_term(shape, coeff);
    }
    Ok(out)
}

/// Co-addition by brute force: expands `f` in two alphabets of `k`
/// variables each and reads off the coefficient of `x^μ y^ν`.
pub fn coproduct_add_oracle(f: &SymFunc, k: usize) -> Result<TensorSymFunc> {
    let expanded = expand_in_vars(f, 2 * k);
    let mut terms = Vec::new();
    for (e, c) in expanded.terms() {
        let (x, y) = e.split_at(k);
        if is_weakly_decreasing(x) && is_weakly_decreasing(y) {
            terms.push(((Partition::new(x.to_vec()), Partition::new(y.to_vec())), c.clone()));
        }
    }
    TensorSymFunc::from_terms(terms, f.degree_bound())
}

/// Co-multiplication by brute force: expands `f` in the `k²` variables
/// `z_ij = x_i y_j` and reads off the coefficient of `x^μ y^ν`. Only
/// feasible for small degrees.
pub fn coproduct_mult_oracle(f: &SymFunc, k: usize) -> Result<TensorSymFunc> {
    let expanded = expand_in_vars(f, k * k);
    let mut doubled = Polynomial::zero(2 * k);
    for (e, c) in expanded.terms() {
        let mut xy = vec![0u32; 2 * k];
        for (idx, &power) in e.iter().enumerate() {
            xy[idx / k] += power;
            xy[k + idx % k] += power;
        }
        doubled.add_term(xy, c.clone());
    }
    let mut terms = Vec::new();
    for (e, c) in doubled.terms() {
        let (x, y) = e.split_at(k);
        if is_weakly_decreasing(x) && is_weakly_decreasing(y) {
            terms.push(((Partition::new(x.to_vec()), Partition::new(y.to_vec())), c.clone()));
        }
    }
    TensorSymFunc::from_terms(terms, f.degree_bound())
}

fn is_weakly_decreasing(e: &[u32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn arrangement_counts() {
        // number of distinct arrangements is k! / ((k - l)! * prod mult!)
        let mut count = 0;
        for_each_arrangement(&Partition::from([2, 1, 1]), 4, |_| count += 1);
        assert_eq!(count, 4 * 3);
        count = 0;
        for_each_arrangement(&Partition::from([1, 1]), 5, |_| count += 1);
        assert_eq!(count, 10);
        count = 0;
        for_each_arrangement(&Partition::from([1, 1, 1]), 2, |_| count += 1);
        assert_eq!(count, 0);
        count = 0;
        for_each_arrangement(&Partition::empty(), 3, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn expand_examples() {
        let m11 = SymFunc::monomial(Partition::from([1, 1]), 4).unwrap();
        assert_eq!(expand_in_vars(&m11, 2), Polynomial::monomial(vec![1, 1], 1u32));
        let m2 = SymFunc::monomial(Partition::from([2]), 4).unwrap();
        let expected = Polynomial::monomial(vec![2, 0], 1u32).add(&Polynomial::monomial(vec![0, 2], 1u32));
        assert_eq!(expand_in_vars(&m2, 2), expected);
    }

    #[test]
    fn peel_example() {
        let p = Polynomial::monomial(vec![2, 0], 1u32)
            .add(&Polynomial::monomial(vec![0, 2], 1u32))
            .add(&Polynomial::monomial(vec![1, 1], 2u32));
        let f = from_polynomial(&p, 4).unwrap();
        let mut expected = SymFunc::monomial(Partition::from([2]), 4).unwrap();
        expected.add_term(Partition::from([1, 1]), big(2));
        assert_eq!(f, expected);
    }

    #[test]
    fn peel_rejects_asymmetric() {
        let p = Polynomial::monomial(vec![2, 0], 1u32);
        assert!(matches!(from_polynomial(&p, 4), Err(Error::NotSymmetric(_))));
        let p = Polynomial::monomial(vec![0, 1], 1u32);
        assert!(matches!(from_polynomial(&p, 4), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn round_trip_all_monomials() {
        for n in 0..=6 {
            for shape in enumerate(n) {
                let f = SymFunc::monomial(shape.clone(), 6).unwrap();
                for k in n.max(1)..=6 {
                    assert_eq!(from_polynomial(&expand_in_vars(&f, k), 6).unwrap(), f, "{shape:?} in {k}");
                }
            }
        }
    }

    #[test]
    fn coproduct_oracles_small_cases() {
        let m21 = SymFunc::monomial(Partition::from([2, 1]), 4).unwrap();
        assert_eq!(coproduct_add_oracle(&m21, 3).unwrap(), m21.coproduct_add());
        let m11 = SymFunc::monomial(Partition::from([1, 1]), 4).unwrap();
        let t = coproduct_mult_oracle(&m11, 2).unwrap();
        assert_eq!(t.coeff(&Partition::from([1, 1]), &Partition::from([1, 1])), big(2));
        assert_eq!(t.coeff(&Partition::from([2]), &Partition::from([1, 1])), big(1));
        assert_eq!(t.coeff(&Partition::from([2]), &Partition::from([2])), big(0));
    }

    #[test]
    fn eval_counts_monomials() {
        let h2 = SymFunc::complete(2, 4).unwrap();
        // h_2(1,1,1) = number of degree-2 monomials in 3 variables
        assert_eq!(expand_in_vars(&h2, 3).eval(&[1, 1, 1]), big(6));
    }
}
