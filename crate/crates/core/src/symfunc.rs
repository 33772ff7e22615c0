//! Symmetric functions with natural-number coefficients in the monomial
//! basis, truncated at a degree bound.
//!
//! Besides the rig operations this module provides the two coproducts
//! (co-addition from splitting the alphabet, co-multiplication from the
//! doubled alphabet `x_i y_j`), their counits, and plethysm.
//!
//! Structure constants are cached process-wide; they depend only on the
//! partitions involved.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use parking_lot::Mutex;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{enumerate, Partition};
use crate::poly::{expand_in_vars, for_each_arrangement, from_polynomial, Polynomial};

pub const DEFAULT_DEGREE_BOUND: usize = 8;

/// An element of Λ truncated at `degree_bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree_bound: usize,
    coeffs: BTreeMap<Partition, BigUint>,
}

/// An element of Λ ⊗ Λ, each factor truncated at `degree_bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorSymFunc {
    degree_bound: usize,
    coeffs: BTreeMap<(Partition, Partition), BigUint>,
}

type Expansion = Arc<BTreeMap<Partition, BigUint>>;
type TensorExpansion = Arc<BTreeMap<(Partition, Partition), BigUint>>;

static PRODUCTS: Lazy<Mutex<HashMap<(Partition, Partition), Expansion>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));
static MULT_COPRODUCTS: Lazy<Mutex<HashMap<Partition, TensorExpansion>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

impl SymFunc {
    pub fn zero(degree_bound: usize) -> Self {
        SymFunc {
            degree_bound,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(degree_bound: usize) -> Self {
        let mut f = SymFunc::zero(degree_bound);
        f.add_term(Partition::empty(), BigUint::one());
        f
    }

    /// The basis element `m_λ`.
    pub fn monomial(shape: Partition, degree_bound: usize) -> Result<Self> {
        if shape.size() > degree_bound {
            return Err(Error::overflow(&shape, degree_bound));
        }
        let mut f = SymFunc::zero(degree_bound);
        f.add_term(shape, BigUint::one());
        Ok(f)
    }

    /// `e_n = m_(1,…,1)`.
    pub fn elementary(n: usize, degree_bound: usize) -> Result<Self> {
        SymFunc::monomial(Partition::column(n as u32), degree_bound)
    }

    /// `h_n`, the sum of all `m_λ` with `|λ| = n`.
    pub fn complete(n: usize, degree_bound: usize) -> Result<Self> {
        if n > degree_bound {
            return Err(Error::DegreeOverflow {
                degree: n,
                bound: degree_bound,
            });
        }
        SymFunc::from_terms(enumerate(n).into_iter().map(|l| (l, BigUint::one())), degree_bound)
    }

    pub fn from_terms(
        terms: impl IntoIterator<Item = (Partition, BigUint)>,
        degree_bound: usize,
    ) -> Result<Self> {
        let mut f = SymFunc::zero(degree_bound);
        for (shape, c) in terms {
            if shape.size() > degree_bound {
                return Err(Error::overflow(&shape, degree_bound));
            }
            f.add_term(shape, c);
        }
        Ok(f)
    }

    pub(crate) fn add_term(&mut self, shape: Partition, coeff: BigUint) {
        debug_assert!(shape.size() <= self.degree_bound);
        if coeff.is_zero() {
            return;
        }
        *self.coeffs.entry(shape).or_default() += coeff;
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigUint> {
        &self.coeffs
    }

    /// Partitions with a nonzero coefficient, in ascending order.
    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn coeff(&self, shape: &Partition) -> BigUint {
        self.coeffs.get(shape).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest size in the support; `0` for the zero function.
    pub fn degree(&self) -> usize {
        self.coeffs.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> BigUint {
        self.coeff(&Partition::empty())
    }

    /// Same terms with a new bound; fails if a term would not fit.
    pub fn with_degree_bound(&self, degree_bound: usize) -> Result<Self> {
        SymFunc::from_terms(self.coeffs.clone(), degree_bound)
    }

    fn check_bound(&self, other: &SymFunc) -> Result<()> {
        if self.degree_bound != other.degree_bound {
            return Err(Error::DegreeBoundMismatch {
                left: self.degree_bound,
                right: other.degree_bound,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_bound(other)?;
        let mut out = self.clone();
        for (shape, c) in &other.coeffs {
            out.add_term(shape.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, c: &BigUint) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.degree_bound);
        }
        SymFunc {
            degree_bound: self.degree_bound,
            coeffs: self.coeffs.iter().map(|(l, a)| (l.clone(), a * c)).collect(),
        }
    }

    /// Product in Λ. Terms above the degree bound are dropped.
    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        self.product(other, false)
    }

    /// Product in Λ that fails instead of truncating.
    pub fn multiply_strict(&self, other: &SymFunc) -> Result<SymFunc> {
        self.product(other, true)
    }

    fn product(&self, other: &SymFunc, strict: bool) -> Result<SymFunc> {
        self.check_bound(other)?;
        let bound = self.degree_bound;
        let mut out = SymFunc::zero(bound);
        for (mu, a) in &self.coeffs {
            for (nu, b) in &other.coeffs {
                if mu.size() + nu.size() > bound {
                    if strict {
                        return Err(Error::DegreeOverflow {
                            degree: mu.size() + nu.size(),
                            bound,
                        });
                    }
                    continue;
                }
                let ab = a * b;
                for (lambda, c) in monomial_product(mu, nu).iter() {
                    out.add_term(lambda.clone(), &ab * c);
                }
            }
        }
        Ok(out)
    }

    /// Co-addition: `f(x ⊗ 1, 1 ⊗ x)`.
    pub fn coproduct_add(&self) -> TensorSymFunc {
        let mut out = TensorSymFunc::zero(self.degree_bound);
        for (shape, c) in &self.coeffs {
            for (mu, nu) in splittings(shape) {
                out.add_term(mu, nu, c.clone());
            }
        }
        out
    }

    /// Co-multiplication: `f(x_i ⊗ x_j)`.
    pub fn coproduct_mult(&self) -> TensorSymFunc {
        let mut out = TensorSymFunc::zero(self.degree_bound);
        for (shape, c) in &self.coeffs {
            for ((mu, nu), k) in mult_coproduct_of(shape).iter() {
                out.add_term(mu.clone(), nu.clone(), c * k);
            }
        }
        out
    }

    /// `f(0, 0, …)`.
    pub fn counit_add(&self) -> BigUint {
        self.constant_term()
    }

    /// `f(1, 0, 0, …)`.
    pub fn counit_mult(&self) -> BigUint {
        self.coeffs
            .iter()
            .filter(|(l, _)| l.len() <= 1)
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// Plethysm `self ∘ inner`: the monomials of `inner` are substituted for
    /// the variables of `self`.
    pub fn plethysm(&self, inner: &SymFunc) -> Result<SymFunc> {
        self.check_bound(inner)?;
        if !inner.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let bound = self.degree_bound;
        let degree = self.degree() * inner.degree();
        if degree > bound {
            return Err(Error::DegreeOverflow { degree, bound });
        }
        let nvars = degree.max(1);
        let mut alphabet: Vec<&Vec<u32>> = Vec::new();
        let expanded = expand_in_vars(inner, nvars);
        for (e, c) in expanded.terms() {
            let copies = c.to_usize().expect("coefficient too large to substitute");
            alphabet.extend(std::iter::repeat_n(e, copies));
        }
        let mut result = Polynomial::zero(nvars);
        for (shape, c) in &self.coeffs {
            for_each_arrangement(shape, alphabet.len(), |placed| {
                let mut e = vec![0u32; nvars];
                for &(pos, part) in placed {
                    for (slot, &x) in e.iter_mut().zip(alphabet[pos]) {
                        *slot += part * x;
                    }
                }
                result.add_term(e, c.clone());
            });
        }
        from_polynomial(&result, bound)
    }
}

impl TensorSymFunc {
    pub fn zero(degree_bound: usize) -> Self {
        TensorSymFunc {
            degree_bound,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        terms: impl IntoIterator<Item = ((Partition, Partition), BigUint)>,
        degree_bound: usize,
    ) -> Result<Self> {
        let mut t = TensorSymFunc::zero(degree_bound);
        for ((mu, nu), c) in terms {
            for l in [&mu, &nu] {
                if l.size() > degree_bound {
                    return Err(Error::overflow(l, degree_bound));
                }
            }
            t.add_term(mu, nu, c);
        }
        Ok(t)
    }

    pub(crate) fn add_term(&mut self, left: Partition, right: Partition, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.coeffs.entry((left, right)).or_default() += coeff;
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), BigUint> {
        &self.coeffs
    }

    pub fn coeff(&self, left: &Partition, right: &Partition) -> BigUint {
        self.coeffs
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// Applies a linear functional to the left factor.
    pub fn contract_left(&self, functional: impl Fn(&SymFunc) -> BigUint) -> SymFunc {
        let mut out = SymFunc::zero(self.degree_bound);
        for ((mu, nu), c) in &self.coeffs {
            let m = SymFunc::monomial(mu.clone(), self.degree_bound).expect("within bound");
            out.add_term(nu.clone(), c * functional(&m));
        }
        out
    }

    /// Applies a linear functional to the right factor.
    pub fn contract_right(&self, functional: impl Fn(&SymFunc) -> BigUint) -> SymFunc {
        let mut out = SymFunc::zero(self.degree_bound);
        for ((mu, nu), c) in &self.coeffs {
            let m = SymFunc::monomial(nu.clone(), self.degree_bound).expect("within bound");
            out.add_term(mu.clone(), c * functional(&m));
        }
        out
    }
}

/// All ordered pairs `(μ, ν)` of sub-multisets with `μ ⊎ ν = λ`.
pub fn splittings(shape: &Partition) -> Vec<(Partition, Partition)> {
    let groups = shape.multiplicities();
    let mut out = vec![(Vec::new(), Vec::new())];
    for (value, mult) in groups {
        let mut next = Vec::with_capacity(out.len() * (mult + 1));
        for (left, right) in &out {
            for k in 0..=mult {
                let mut l: Vec<u32> = left.clone();
                let mut r: Vec<u32> = right.clone();
                l.extend(std::iter::repeat_n(value, k));
                r.extend(std::iter::repeat_n(value, mult - k));
                next.push((l, r));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(l, r)| (Partition::new(l), Partition::new(r)))
        .collect()
}

/// Expansion of `m_μ m_ν` in the monomial basis (untruncated).
pub fn monomial_product(mu: &Partition, nu: &Partition) -> Expansion {
    let key = if mu <= nu {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    };
    if let Some(hit) = PRODUCTS.lock().get(&key) {
        return hit.clone();
    }
    let computed = Arc::new(compute_product(&key.0, &key.1));
    PRODUCTS.lock().insert(key, computed.clone());
    computed
}

// The coefficient of m_λ counts the rearrangements α of μ inside the first
// ℓ(λ) variables with λ − α a rearrangement of ν.
fn compute_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, BigUint> {
    let n = mu.size() + nu.size();
    let min_len = mu.len().max(nu.len());
    let max_len = mu.len() + nu.len();
    let mut out = BTreeMap::new();
    for lambda in enumerate(n) {
        if lambda.len() < min_len || lambda.len() > max_len {
            continue;
        }
        let target = lambda.parts();
        let mut count = 0u64;
        for_each_arrangement(mu, lambda.len(), |placed| {
            let mut rest = target.to_vec();
            for &(pos, part) in placed {
                if rest[pos] < part {
                    return;
                }
                rest[pos] -= part;
            }
            if Partition::new(rest) == *nu {
                count += 1;
            }
        });
        if count > 0 {
            out.insert(lambda, BigUint::from(count));
        }
    }
    out
}

/// Expansion of `Δ×(m_λ)`.
pub fn mult_coproduct_of(shape: &Partition) -> TensorExpansion {
    if let Some(hit) = MULT_COPRODUCTS.lock().get(shape) {
        return hit.clone();
    }
    let n = shape.size();
    let mut map = BTreeMap::new();
    let shapes = enumerate(n);
    for mu in &shapes {
        for nu in &shapes {
            let c = count_tables(shape, mu, nu);
            if c > 0 {
                map.insert((mu.clone(), nu.clone()), BigUint::from(c));
            }
        }
    }
    let computed = Arc::new(map);
    MULT_COPRODUCTS.lock().insert(shape.clone(), computed.clone());
    computed
}

/// Number of nonnegative integer matrices with row sums `rows`, column sums
/// `cols`, and multiset of nonzero entries equal to `entries`. This is the
/// coefficient of `x^rows y^cols` in `m_entries(x_i y_j)`.
pub fn count_tables(entries: &Partition, rows: &Partition, cols: &Partition) -> u64 {
    if rows.size() != entries.size() || cols.size() != entries.size() {
        return 0;
    }
    if rows.is_empty() {
        return 1;
    }
    if entries.len() < rows.len().max(cols.len()) || entries.len() > rows.len() * cols.len() {
        return 0;
    }
    let mut state = TableSearch {
        row_rem: rows.parts().to_vec(),
        col_rem: cols.parts().to_vec(),
        pool: entries.multiplicities(),
        count: 0,
    };
    state.fill(0, 0);
    state.count
}

struct TableSearch {
    row_rem: Vec<u32>,
    col_rem: Vec<u32>,
    pool: Vec<(u32, usize)>,
    count: u64,
}

impl TableSearch {
    fn fill(&mut self, i: usize, j: usize) {
        let nrows = self.row_rem.len();
        let ncols = self.col_rem.len();
        if i == nrows {
            if self.col_rem.iter().all(|&c| c == 0) {
                self.count += 1;
            }
            return;
        }
        let (ni, nj) = if j + 1 == ncols { (i + 1, 0) } else { (i, j + 1) };
        let last_col = j + 1 == ncols;
        let last_row = i + 1 == nrows;
        let cap = self.row_rem[i].min(self.col_rem[j]);
        let forced = match (last_col, last_row) {
            (true, true) => {
                if self.row_rem[i] != self.col_rem[j] {
                    return;
                }
                Some(self.row_rem[i])
            }
            (true, false) => Some(self.row_rem[i]),
            (false, true) => Some(self.col_rem[j]),
            (false, false) => None,
        };
        match forced {
            Some(v) => {
                if v > cap {
                    return;
                }
                self.place(v, i, j, ni, nj);
            }
            None => {
                self.fill(ni, nj);
                for k in 0..self.pool.len() {
                    let v = self.pool[k].0;
                    if v <= cap && self.pool[k].1 > 0 {
                        self.place(v, i, j, ni, nj);
                    }
                }
            }
        }
    }

    fn place(&mut self, v: u32, i: usize, j: usize, ni: usize, nj: usize) {
        if v == 0 {
            self.fill(ni, nj);
            return;
        }
        let Some(k) = self.pool.iter().position(|&(val, m)| val == v && m > 0) else {
            return;
        };
        self.pool[k].1 -= 1;
        self.row_rem[i] -= v;
        self.col_rem[j] -= v;
        self.fill(ni, nj);
        self.col_rem[j] += v;
        self.row_rem[i] += v;
        self.pool[k].1 += 1;
    }
}

fn fmt_coeff(c: &BigUint, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.is_one() {
        Ok(())
    } else {
        write!(f, "{c}·")
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            fmt_coeff(c, f)?;
            write!(f, "m{l:?}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, ((l, r), c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            fmt_coeff(c, f)?;
            write!(f, "m{l:?}⊗m{r:?}")?;
        }
        Ok(())
    }
}

// JSON: coefficients are numbers when they fit in u64, decimal strings
// otherwise.

fn coeff_to_json(c: &BigUint) -> serde_json::Value {
    match c.to_u64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

fn coeff_from_json(v: &serde_json::Value) -> std::result::Result<BigUint, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_u64()
            .map(BigUint::from)
            .ok_or_else(|| format!("coefficient {n} is not a natural number")),
        serde_json::Value::String(s) => s
            .parse::<BigUint>()
            .map_err(|_| format!("coefficient {s:?} is not a natural number")),
        other => Err(format!("coefficient {other} is not a natural number")),
    }
}

struct CoeffMap<'a, K>(&'a BTreeMap<K, BigUint>, fn(&K) -> String);

impl<K> Serialize for CoeffMap<'_, K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, c) in self.0 {
            map.serialize_entry(&(self.1)(k), &coeff_to_json(c))?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct Encoded<'a, K> {
    degree_bound: usize,
    coeffs: CoeffMap<'a, K>,
}

#[derive(Deserialize)]
struct Decoded {
    degree_bound: usize,
    coeffs: BTreeMap<String, serde_json::Value>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Encoded {
            degree_bound: self.degree_bound,
            coeffs: CoeffMap(&self.coeffs, Partition::key),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Decoded::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.coeffs.len());
        for (k, v) in &raw.coeffs {
            let shape: Partition = k.parse().map_err(D::Error::custom)?;
            terms.push((shape, coeff_from_json(v).map_err(D::Error::custom)?));
        }
        SymFunc::from_terms(terms, raw.degree_bound).map_err(D::Error::custom)
    }
}

fn tensor_key(pair: &(Partition, Partition)) -> String {
    format!("{}|{}", pair.0, pair.1)
}

impl Serialize for TensorSymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Encoded {
            degree_bound: self.degree_bound,
            coeffs: CoeffMap(&self.coeffs, tensor_key),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TensorSymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Decoded::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.coeffs.len());
        for (k, v) in &raw.coeffs {
            let (l, r) = k
                .split_once('|')
                .ok_or_else(|| D::Error::custom(format!("tensor key {k:?} lacks '|'")))?;
            let l: Partition = l.parse().map_err(D::Error::custom)?;
            let r: Partition = r.parse().map_err(D::Error::custom)?;
            terms.push(((l, r), coeff_from_json(v).map_err(D::Error::custom)?));
        }
        TensorSymFunc::from_terms(terms, raw.degree_bound).map_err(D::Error::custom)
    }
}
