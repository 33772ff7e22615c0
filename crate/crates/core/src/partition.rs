//! Integer partitions and the Young-lattice combinatorics used elsewhere in
//! the crate.
//!
//! A [`Partition`] is stored with weakly decreasing positive parts; the empty
//! partition is allowed and stands for the constant symmetric function `1`.
//!
//! The total order on partitions compares sizes first and then part lists
//! lexicographically, read left to right, so that `(1,1) < (2)` and
//! `(1,1,1) < (2,1) < (3)`. Every ordered map keyed by partitions in this
//! crate iterates in that order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from arbitrary parts: zeros are dropped and the rest
    /// sorted into weakly decreasing order.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Like [`Partition::new`] but rejects input that is not already in
    /// canonical form.
    pub fn from_canonical(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// The single-row partition `(n)`; `row(0)` is the empty partition.
    pub fn row(n: u32) -> Self {
        Partition::new([n])
    }

    /// The single-column partition `(1,…,1)` with `n` ones.
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True for `(n)` with `n ≥ 1`.
    pub fn is_row(&self) -> bool {
        self.parts.len() == 1
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::new(self.parts.iter().chain(other.parts.iter()).copied())
    }

    /// String key form: comma-joined parts, `""` for the empty partition.
    pub fn key(&self) -> String {
        self.to_string()
    }

    /// Multiplicities of each distinct part value, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Every partition obtained by adding one box to the Young diagram.
    pub fn covers(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i == 0 || self.parts[i - 1] > self.parts[i] {
                let mut parts = self.parts.clone();
                parts[i] += 1;
                out.push(Partition { parts });
            }
        }
        let mut parts = self.parts.clone();
        parts.push(1);
        out.push(Partition { parts });
        out
    }

    /// Hook lengths of every box, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate_parts();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj[j as usize] - i as u32 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Number of standard Young tableaux of this shape, by the hook length
    /// formula.
    pub fn hook_dimension(&self) -> BigUint {
        let n = self.size() as u32;
        let numerator: BigUint = (1..=n).map(BigUint::from).product();
        let denominator: BigUint = self.hook_lengths().into_iter().map(BigUint::from).product();
        debug_assert!((&numerator % &denominator) == BigUint::from(0u32));
        if denominator.is_one() {
            numerator
        } else {
            numerator / denominator
        }
    }

    fn conjugate_parts(&self) -> Vec<u32> {
        let width = self.parts.first().copied().unwrap_or(0);
        (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect()
    }
}

/// All partitions of `n`, in descending order.
pub fn enumerate(n: usize) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, in ascending order.
pub fn enumerate_up_to(n: usize) -> Vec<Partition> {
    (0..=n)
        .flat_map(|k| enumerate(k).into_iter().rev())
        .collect()
}

/// The total order used for tie-breaking: size first, then lexicographic on
/// the part lists.
pub fn graded_lex_order(a: &Partition, b: &Partition) -> Ordering {
    a.cmp(b)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "({self})")
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_canonical(parts)
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.iter().copied())
    }
}

impl<const K: usize> From<[u32; K]> for Partition {
    fn from(parts: [u32; K]) -> Self {
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::from_canonical(parts).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from(parts)
    }

    /// Independent count: p(n) via the "largest part at most k" recurrence.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0u64; n + 1];
        table[0] = 1;
        for k in 1..=n {
            for m in k..=n {
                table[m] += table[m - k];
            }
        }
        table[n]
    }

    /// Counts standard tableaux by removing corners recursively.
    fn count_tableaux(shape: &Partition) -> u64 {
        if shape.is_empty() {
            return 1;
        }
        let parts = shape.parts();
        let mut total = 0;
        for i in 0..parts.len() {
            let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
            if is_corner {
                let mut smaller = parts.to_vec();
                smaller[i] -= 1;
                total += count_tableaux(&Partition::new(smaller));
            }
        }
        total
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate(0), vec![Partition::empty()]);
        assert_eq!(enumerate(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate(6).len(), 11);
    }

    #[test]
    fn enumerate_matches_counting_recurrence() {
        for n in 0..=12 {
            let all = enumerate(n);
            assert_eq!(all.len() as u64, partition_count(n), "n = {n}");
            let mut sorted = all.clone();
            sorted.sort_by(|a, b| b.cmp(a));
            sorted.dedup();
            assert_eq!(sorted, all);
            assert!(all.iter().all(|l| l.size() == n));
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(graded_lex_order(&p(&[1, 1]), &p(&[2])), Ordering::Less);
        assert_eq!(graded_lex_order(&p(&[3]), &p(&[2, 1])), Ordering::Greater);
        assert_eq!(graded_lex_order(&p(&[5]), &p(&[1, 1])), Ordering::Greater);
    }

    #[test]
    fn order_is_total_on_small_partitions() {
        let all = enumerate_up_to(8);
        for a in &all {
            for b in &all {
                let ab = graded_lex_order(a, b);
                assert_eq!(ab, graded_lex_order(b, a).reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
                for c in &all {
                    if ab != Ordering::Greater && graded_lex_order(b, c) != Ordering::Greater {
                        assert_ne!(graded_lex_order(a, c), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn covers_examples() {
        assert_eq!(Partition::empty().covers(), vec![p(&[1])]);
        assert_eq!(p(&[1]).covers(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(p(&[2, 1]).covers(), vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
    }

    #[test]
    fn covers_match_containment_filter() {
        for l in enumerate_up_to(7) {
            let contains = |mu: &Partition| {
                (0..l.len()).all(|i| mu.parts().get(i).copied().unwrap_or(0) >= l.parts()[i])
            };
            let mut brute: Vec<Partition> = enumerate(l.size() + 1)
                .into_iter()
                .filter(|mu| contains(mu))
                .collect();
            let mut got = l.covers();
            brute.sort();
            got.sort();
            assert_eq!(got, brute, "covers of {l:?}");
        }
    }

    #[test]
    fn hook_dimension_examples() {
        assert_eq!(Partition::empty().hook_dimension(), BigUint::from(1u32));
        assert_eq!(p(&[2, 1]).hook_lengths(), vec![3, 1, 1]);
        assert_eq!(p(&[2, 1]).hook_dimension(), BigUint::from(2u32));
        for n in 1..10 {
            assert_eq!(Partition::row(n).hook_dimension(), BigUint::from(1u32));
        }
    }

    #[test]
    fn hook_dimension_counts_tableaux() {
        for l in enumerate_up_to(8) {
            assert_eq!(l.hook_dimension(), BigUint::from(count_tableaux(&l)), "{l:?}");
        }
    }

    #[test]
    fn branching_identity() {
        for l in enumerate_up_to(8) {
            let sum: BigUint = l.covers().iter().map(|m| m.hook_dimension()).sum();
            assert_eq!(sum, BigUint::from(l.size() as u64 + 1) * l.hook_dimension());
        }
    }

    #[test]
    fn string_and_json_forms() {
        assert_eq!(p(&[2, 1]).key(), "2,1");
        assert_eq!(Partition::empty().key(), "");
        assert_eq!("2,1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p(&[2, 1])).unwrap(), "[2,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn constructors_normalize() {
        assert_eq!(Partition::new([1, 0, 3, 2]).parts(), &[3, 2, 1]);
        assert_eq!(Partition::row(0), Partition::empty());
        assert_eq!(Partition::column(3), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 1]).union(&p(&[2])), p(&[2, 2, 1]));
        assert_eq!(p(&[3, 3, 1]).multiplicities(), vec![(3, 2), (1, 1)]);
    }
}
