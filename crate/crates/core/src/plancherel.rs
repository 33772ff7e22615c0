//! Plancherel measure on partitions of `n` and the Plancherel growth process
//! on the Young lattice, with exact rational probabilities.
//!
//! Sampling draws a uniform `u / 2^64` from a seeded ChaCha generator and
//! compares it exactly against cumulative transition probabilities, so a
//! path is a pure function of its seed.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::enriched::{LCategory, WCategory};
use crate::error::{Error, Result};
use crate::partition::{enumerate, Partition};

pub type Distribution = BTreeMap<Partition, BigRational>;

/// A run of the growth process `λ_1 ⋖ λ_2 ⋖ …` with `|λ_t| = t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthPath {
    pub steps: Vec<Partition>,
    pub seed: u64,
}

/// One step of [`observe`]: the slice at `λ_t` and whether it is an honest
/// 𝕃-category or only a partial metric.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Observation {
    pub partition: Partition,
    pub table: LCategory,
    pub is_l_category: bool,
}

fn ratio(numer: BigUint, denom: BigUint) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `λ ↦ (dim λ)² / n!` on partitions of `n`.
pub fn plancherel_measure(n: usize) -> Distribution {
    let factorial: BigUint = (1..=n as u64).map(BigUint::from).product();
    enumerate(n)
        .into_iter()
        .map(|l| {
            let d = l.hook_dimension();
            (l, ratio(&d * &d, factorial.clone()))
        })
        .collect()
}

/// Transition law out of `λ`: `μ ↦ dim μ / ((|λ| + 1) · dim λ)` on the
/// covers of `λ`.
pub fn growth_step(shape: &Partition) -> Distribution {
    let denom = BigUint::from(shape.size() as u64 + 1) * shape.hook_dimension();
    shape
        .covers()
        .into_iter()
        .map(|mu| {
            let d = mu.hook_dimension();
            (mu, ratio(d, denom.clone()))
        })
        .collect()
}

/// Pushes a distribution on partitions of `n` forward one growth step.
pub fn push_forward(dist: &Distribution) -> Distribution {
    let mut out = Distribution::new();
    for (l, p) in dist {
        for (mu, q) in growth_step(l) {
            *out.entry(mu).or_insert_with(|| BigRational::from_integer(0.into())) += p * q;
        }
    }
    out
}

/// Draws `steps` partitions starting at `(1)`.
pub fn sample_path(steps: usize, seed: u64) -> GrowthPath {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scale = BigRational::from_integer(BigInt::from(1u8) << 64);
    let mut path = Vec::with_capacity(steps);
    let mut current = Partition::empty();
    for _ in 0..steps {
        let u = BigRational::from_integer(BigInt::from(rng.next_u64()));
        let law = growth_step(&current);
        let mut cumulative = BigRational::from_integer(0.into());
        let mut chosen = None;
        for (mu, p) in &law {
            cumulative += p;
            if u < &cumulative * &scale {
                chosen = Some(mu.clone());
                break;
            }
        }
        // cumulative reaches exactly 1 and u < 2^64, so a cover is always chosen
        current = chosen.expect("transition probabilities sum to one");
        path.push(current.clone());
    }
    GrowthPath { steps: path, seed }
}

/// The slices of `category` along `path`.
pub fn observe(category: &WCategory, path: &GrowthPath) -> Result<Vec<Observation>> {
    path.steps
        .iter()
        .map(|l| {
            if l.size() > category.degree_bound() {
                return Err(Error::overflow(l, category.degree_bound()));
            }
            let table = category.slice_lambda(l)?;
            let is_l_category = table.validate().passed();
            Ok(Observation {
                partition: l.clone(),
                table,
                is_l_category,
            })
        })
        .collect()
}
