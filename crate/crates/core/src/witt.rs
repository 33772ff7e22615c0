//! The Witt rig 𝕎(𝕃): rig homomorphisms `Λ → 𝕃`, stored by their values on
//! the monomial basis up to a degree bound.
//!
//! A homomorphism is determined by its values on `m_λ` because 𝕃-addition is
//! the minimum and Λ has no cancellation: `f(Σ a_λ m_λ) = min f(m_λ)` over
//! the support. Co-addition and co-multiplication of Λ never raise degree, so
//! `⊕`, `⊗` and the order are exact on the stored range. Multiplicativity can
//! only be checked for pairs whose product stays inside the bound, so
//! "valid" always means "valid up to degree N".

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{enumerate_up_to, Partition};
use crate::quantale::{min_all, LValue};
use crate::symfunc::{monomial_product, mult_coproduct_of, splittings, SymFunc};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WittElem {
    degree_bound: usize,
    values: BTreeMap<Partition, LValue>,
}

/// A failure of `f(m_μ m_ν) = f(m_μ) + f(m_ν)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomViolation {
    pub left: Partition,
    pub right: Partition,
    /// `f(m_μ m_ν)`, the minimum over the support of the product.
    pub on_product: LValue,
    /// `f(m_μ) + f(m_ν)`.
    pub expected: LValue,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomReport {
    pub checked_pairs: usize,
    pub empty_value: Option<LValue>,
    pub violations: Vec<HomViolation>,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.empty_value.is_none() && self.violations.is_empty()
    }
}

impl WittElem {
    /// Builds an element from a value function on partitions. The value on
    /// `∅` is forced to `0`. No homomorphism check is made.
    pub fn from_fn(degree_bound: usize, mut value: impl FnMut(&Partition) -> LValue) -> Self {
        let values = enumerate_up_to(degree_bound)
            .into_iter()
            .map(|l| {
                let v = if l.is_empty() { LValue::zero() } else { value(&l) };
                (l, v)
            })
            .collect();
        WittElem { degree_bound, values }
    }

    /// Builds an element from explicit values; missing partitions read as
    /// `∞`. Rejects entries beyond the bound and a nonzero value on `∅`.
    pub fn from_values(degree_bound: usize, values: BTreeMap<Partition, LValue>) -> Result<Self> {
        if let Some(l) = values.keys().find(|l| l.size() > degree_bound) {
            return Err(Error::overflow(l, degree_bound));
        }
        if let Some(v) = values.get(&Partition::empty()) {
            if !v.is_zero() {
                return Err(Error::NotHomomorphism(format!("value {v} on the empty partition")));
            }
        }
        Ok(WittElem::from_fn(degree_bound, |l| {
            values.get(l).cloned().unwrap_or(LValue::Infinite)
        }))
    }

    /// Like [`WittElem::from_values`] but also requires the homomorphism
    /// check to pass.
    pub fn checked(degree_bound: usize, values: BTreeMap<Partition, LValue>) -> Result<Self> {
        let f = WittElem::from_values(degree_bound, values)?;
        let report = f.validate_hom();
        if let Some(v) = report.violations.first() {
            return Err(Error::NotHomomorphism(format!(
                "f(m{:?} m{:?}) = {} but f(m{:?}) + f(m{:?}) = {}",
                v.left, v.right, v.on_product, v.left, v.right, v.expected
            )));
        }
        Ok(f)
    }

    /// Additive unit, induced by the co-addition counit: `∞` on every
    /// nonempty partition.
    pub fn additive_unit(degree_bound: usize) -> Self {
        WittElem::from_fn(degree_bound, |_| LValue::Infinite)
    }

    /// Multiplicative unit `0̄`: `0` on rows `(n)`, `∞` elsewhere.
    pub fn multiplicative_unit(degree_bound: usize) -> Self {
        WittElem::from_fn(degree_bound, |l| {
            if l.is_row() {
                LValue::zero()
            } else {
                LValue::Infinite
            }
        })
    }

    /// `θ(r)`: `n·r` on `(n)`, `∞` on every other nonempty partition.
    pub fn theta(r: &LValue, degree_bound: usize) -> Self {
        WittElem::from_fn(degree_bound, |l| {
            if l.is_row() {
                r.scale(l.size() as u64)
            } else {
                LValue::Infinite
            }
        })
    }

    /// Tropical evaluation at the multiset `roots`: the value on `m_λ` is
    /// the least `Σ λ_i a_σ(i)` over injective assignments `σ` of the parts
    /// to the roots, and `∞` when there are fewer roots than parts.
    pub fn eval_witt(roots: &[LValue], degree_bound: usize) -> Self {
        let mut sorted = roots.to_vec();
        sorted.sort();
        // rearrangement: the largest part goes with the smallest root
        WittElem::from_fn(degree_bound, |l| {
            if l.len() > sorted.len() {
                return LValue::Infinite;
            }
            l.parts()
                .iter()
                .zip(&sorted)
                .fold(LValue::zero(), |acc, (&part, a)| acc.otimes(&a.scale(part as u64)))
        })
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn values(&self) -> &BTreeMap<Partition, LValue> {
        &self.values
    }

    /// `f(m_λ)`; `None` beyond the degree bound.
    pub fn get(&self, shape: &Partition) -> Option<&LValue> {
        self.values.get(shape)
    }

    pub fn value(&self, shape: &Partition) -> Result<&LValue> {
        self.values
            .get(shape)
            .ok_or_else(|| Error::overflow(shape, self.degree_bound))
    }

    /// `f(φ)` for a general symmetric function: the minimum over the support,
    /// `∞` for `φ = 0`.
    pub fn eval_sym(&self, phi: &SymFunc) -> Result<LValue> {
        let mut values = Vec::with_capacity(phi.terms().len());
        for shape in phi.support() {
            values.push(self.value(shape)?);
        }
        Ok(min_all(values))
    }

    /// Checks `f(∅) = 0` and `f(m_μ m_ν) = f(m_μ) + f(m_ν)` for every pair
    /// of nonempty partitions with `|μ| + |ν| ≤ N`.
    pub fn validate_hom(&self) -> HomReport {
        let mut report = HomReport::default();
        let empty = &self.values[&Partition::empty()];
        if !empty.is_zero() {
            report.empty_value = Some(empty.clone());
        }
        let shapes: Vec<&Partition> = self.values.keys().filter(|l| !l.is_empty()).collect();
        for (i, mu) in shapes.iter().enumerate() {
            for nu in &shapes[i..] {
                if mu.size() + nu.size() > self.degree_bound {
                    continue;
                }
                report.checked_pairs += 1;
                let product = monomial_product(mu, nu);
                let on_product = min_all(product.keys().map(|l| &self.values[l]));
                let expected = self.values[*mu].otimes(&self.values[*nu]);
                if on_product != expected {
                    report.violations.push(HomViolation {
                        left: (*mu).clone(),
                        right: (*nu).clone(),
                        on_product,
                        expected,
                    });
                }
            }
        }
        report
    }

    fn check_bound(&self, other: &WittElem) -> Result<()> {
        if self.degree_bound != other.degree_bound {
            return Err(Error::DegreeBoundMismatch {
                left: self.degree_bound,
                right: other.degree_bound,
            });
        }
        Ok(())
    }

    /// Witt addition: `(f ⊕ g)(m_λ) = min_{μ ⊎ ν = λ} f(m_μ) + g(m_ν)`.
    pub fn add(&self, other: &WittElem) -> Result<WittElem> {
        self.check_bound(other)?;
        Ok(WittElem::from_fn(self.degree_bound, |l| {
            splittings(l)
                .iter()
                .map(|(mu, nu)| self.values[mu].otimes(&other.values[nu]))
                .min()
                .unwrap_or(LValue::Infinite)
        }))
    }

    /// Witt multiplication: minimum of `f(m_μ) + g(m_ν)` over the terms
    /// `m_μ ⊗ m_ν` of the co-multiplication of `m_λ`.
    pub fn mul(&self, other: &WittElem) -> Result<WittElem> {
        self.check_bound(other)?;
        Ok(WittElem::from_fn(self.degree_bound, |l| {
            mult_coproduct_of(l)
                .keys()
                .map(|(mu, nu)| self.values[mu].otimes(&other.values[nu]))
                .min()
                .unwrap_or(LValue::Infinite)
        }))
    }

    /// Pointwise quantale order on every stored partition.
    pub fn leq_w(&self, other: &WittElem) -> Result<bool> {
        self.check_bound(other)?;
        Ok(self
            .values
            .iter()
            .all(|(l, v)| v.leq_l(&other.values[l])))
    }

    /// `τ(f) = f(m_(1))`.
    pub fn tau(&self) -> Result<LValue> {
        self.value(&Partition::row(1)).cloned()
    }

    /// Membership in the sub-poset where `f(m_(n)) ≤ n·f(m_(1))` for every
    /// `1 ≤ n ≤ N`.
    pub fn in_wl_l(&self) -> bool {
        let Some(first) = self.values.get(&Partition::row(1)) else {
            return true;
        };
        (1..=self.degree_bound as u32).all(|n| {
            first
                .scale(n as u64)
                .leq_l(&self.values[&Partition::row(n)])
        })
    }

    /// The comonad structure map evaluated in curried form:
    /// `f̃(φ)(ψ) = f(ψ ∘ φ)`.
    pub fn comonad_map(&self, phi: &SymFunc, psi: &SymFunc) -> Result<LValue> {
        self.eval_sym(&psi.plethysm(phi)?)
    }
}

impl fmt::Debug for WittElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("W{")?;
        let mut first = true;
        for (l, v) in &self.values {
            if l.is_empty() || v.is_infinite() {
                continue;
            }
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{l:?}: {v:?}")?;
        }
        write!(f, "; N={}}}", self.degree_bound)
    }
}

struct ValueMap<'a>(&'a BTreeMap<Partition, LValue>);

impl Serialize for ValueMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len().saturating_sub(1)))?;
        for (l, v) in self.0.iter().filter(|(l, _)| !l.is_empty()) {
            map.serialize_entry(&l.key(), v)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct Encoded<'a> {
    degree_bound: usize,
    values: ValueMap<'a>,
}

#[derive(Deserialize)]
struct Decoded {
    degree_bound: usize,
    values: BTreeMap<String, LValue>,
}

impl Serialize for WittElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Encoded {
            degree_bound: self.degree_bound,
            values: ValueMap(&self.values),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WittElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Decoded::deserialize(deserializer)?;
        let mut values = BTreeMap::new();
        for (k, v) in raw.values {
            values.insert(k.parse::<Partition>().map_err(D::Error::custom)?, v);
        }
        WittElem::from_values(raw.degree_bound, values).map_err(D::Error::custom)
    }
}
