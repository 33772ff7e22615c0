//! Categories enriched in 𝕃 (Lawvere metric spaces) and in 𝕎(𝕃).
//!
//! Both kinds are finite point sets with a total, not necessarily symmetric,
//! distance table. Construction does not enforce the axioms; use
//! [`LCategory::validate`] and [`WCategory::validate`].

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{enumerate_up_to, Partition};
use crate::quantale::LValue;
use crate::symfunc::{mult_coproduct_of, SymFunc};
use crate::witt::{HomReport, WittElem};

/// An 𝕃-valued distance table. Slices of a [`WCategory`] have this type even
/// when they are only partial metrics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LCategory {
    points: Vec<String>,
    dist: Vec<Vec<LValue>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WCategory {
    degree_bound: usize,
    points: Vec<String>,
    dist: Vec<Vec<WittElem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LViolation {
    SelfDistance {
        point: String,
        value: LValue,
    },
    Triangle {
        x: String,
        y: String,
        z: String,
        direct: LValue,
        via: LValue,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LReport {
    pub violations: Vec<LViolation>,
}

impl LReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn triangle_holds(&self) -> bool {
        !self
            .violations
            .iter()
            .any(|v| matches!(v, LViolation::Triangle { .. }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WViolation {
    NotHomomorphism {
        x: String,
        y: String,
        report: HomReport,
    },
    Identity {
        point: String,
        partition: Partition,
        value: LValue,
    },
    Composition {
        x: String,
        y: String,
        z: String,
        partition: Partition,
        direct: LValue,
        composite: LValue,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WReport {
    pub violations: Vec<WViolation>,
}

impl WReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn check_square<T>(points: &[String], dist: &[Vec<T>]) -> Result<()> {
    let n = points.len();
    if dist.len() != n || dist.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidCategory(format!(
            "distance table must be {n}×{n}"
        )));
    }
    let mut seen = std::collections::HashSet::new();
    if let Some(dup) = points.iter().find(|p| !seen.insert(*p)) {
        return Err(Error::InvalidCategory(format!("duplicate point {dup:?}")));
    }
    Ok(())
}

impl LCategory {
    pub fn new(points: Vec<String>, dist: Vec<Vec<LValue>>) -> Result<Self> {
        check_square(&points, &dist)?;
        Ok(LCategory { points, dist })
    }

    pub fn from_fn(points: Vec<String>, mut d: impl FnMut(usize, usize) -> LValue) -> Self {
        let n = points.len();
        let dist = (0..n).map(|i| (0..n).map(|j| d(i, j)).collect()).collect();
        LCategory { points, dist }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dist(&self, i: usize, j: usize) -> &LValue {
        &self.dist[i][j]
    }

    pub fn rows(&self) -> &[Vec<LValue>] {
        &self.dist
    }

    pub fn index_of(&self, point: &str) -> Result<usize> {
        index_of(&self.points, point)
    }

    /// Checks zero self-distances and the triangle inequality on all triples.
    pub fn validate(&self) -> LReport {
        let mut report = LReport::default();
        for (i, p) in self.points.iter().enumerate() {
            if !self.dist[i][i].is_zero() {
                report.violations.push(LViolation::SelfDistance {
                    point: p.clone(),
                    value: self.dist[i][i].clone(),
                });
            }
        }
        report.violations.extend(self.triangle_violations());
        report
    }

    /// Triangle inequality only; self-distances may be nonzero.
    pub fn triangle_violations(&self) -> Vec<LViolation> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let via = self.dist[x][y].otimes(&self.dist[y][z]);
                    if self.dist[x][z] > via {
                        out.push(LViolation::Triangle {
                            x: self.points[x].clone(),
                            y: self.points[y].clone(),
                            z: self.points[z].clone(),
                            direct: self.dist[x][z].clone(),
                            via,
                        });
                    }
                }
            }
        }
        out
    }

    /// Scales every distance by `n`.
    pub fn scale(&self, n: u64) -> LCategory {
        LCategory::from_fn(self.points.clone(), |i, j| self.dist[i][j].scale(n))
    }

    /// Pointwise minimum of two tables on the same points.
    pub fn pointwise_min(&self, other: &LCategory) -> Result<LCategory> {
        if self.points != other.points {
            return Err(Error::InvalidCategory("tables have different points".into()));
        }
        Ok(LCategory::from_fn(self.points.clone(), |i, j| {
            self.dist[i][j].oplus(&other.dist[i][j])
        }))
    }

    /// The induced 𝕎(𝕃)-category, with `θ` applied entrywise.
    pub fn theta_cat(&self, degree_bound: usize) -> Result<WCategory> {
        let report = self.validate();
        if !report.passed() {
            return Err(Error::InvalidCategory(format!(
                "not an 𝕃-category: {:?}",
                report.violations[0]
            )));
        }
        Ok(WCategory {
            degree_bound,
            points: self.points.clone(),
            dist: self
                .dist
                .iter()
                .map(|row| row.iter().map(|r| WittElem::theta(r, degree_bound)).collect())
                .collect(),
        })
    }
}

fn index_of(points: &[String], point: &str) -> Result<usize> {
    points
        .iter()
        .position(|p| p == point)
        .ok_or_else(|| Error::UnknownPoint(point.to_string()))
}

impl WCategory {
    pub fn new(points: Vec<String>, dist: Vec<Vec<WittElem>>) -> Result<Self> {
        check_square(&points, &dist)?;
        let degree_bound = dist
            .first()
            .and_then(|row| row.first())
            .map(WittElem::degree_bound)
            .unwrap_or(0);
        if let Some(other) = dist
            .iter()
            .flatten()
            .find(|f| f.degree_bound() != degree_bound)
        {
            return Err(Error::DegreeBoundMismatch {
                left: degree_bound,
                right: other.degree_bound(),
            });
        }
        Ok(WCategory {
            degree_bound,
            points,
            dist,
        })
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dist(&self, i: usize, j: usize) -> &WittElem {
        &self.dist[i][j]
    }

    pub fn index_of(&self, point: &str) -> Result<usize> {
        index_of(&self.points, point)
    }

    /// Checks that every entry is a homomorphism (up to the degree bound),
    /// the identity axiom `0̄ ≤ d(x, x)`, and the composition axiom
    /// `d(x, y) ⊗ d(y, z) ≤ d(x, z)`.
    pub fn validate(&self) -> WReport {
        let mut report = WReport::default();
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let hom = self.dist[x][y].validate_hom();
                if !hom.passed() {
                    report.violations.push(WViolation::NotHomomorphism {
                        x: self.points[x].clone(),
                        y: self.points[y].clone(),
                        report: hom,
                    });
                }
            }
        }
        for x in 0..n {
            for k in 1..=self.degree_bound as u32 {
                let row = Partition::row(k);
                let value = &self.dist[x][x].values()[&row];
                if !value.is_zero() {
                    report.violations.push(WViolation::Identity {
                        point: self.points[x].clone(),
                        partition: row,
                        value: value.clone(),
                    });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let composite = self.dist[x][y]
                        .mul(&self.dist[y][z])
                        .expect("common degree bound");
                    for (l, direct) in self.dist[x][z].values() {
                        let c = &composite.values()[l];
                        if !c.leq_l(direct) {
                            report.violations.push(WViolation::Composition {
                                x: self.points[x].clone(),
                                y: self.points[y].clone(),
                                z: self.points[z].clone(),
                                partition: l.clone(),
                                direct: direct.clone(),
                                composite: c.clone(),
                            });
                        }
                    }
                }
            }
        }
        report
    }

    /// The table `d_λ(x, y) = d(x, y)(m_λ)`.
    pub fn slice_lambda(&self, shape: &Partition) -> Result<LCategory> {
        if shape.size() > self.degree_bound {
            return Err(Error::overflow(shape, self.degree_bound));
        }
        Ok(LCategory::from_fn(self.points.clone(), |i, j| {
            self.dist[i][j].values()[shape].clone()
        }))
    }

    /// The table `d_n(x, y) = d(x, y)(h_n)`.
    pub fn slice_h(&self, n: usize) -> Result<LCategory> {
        self.eval_slice(&SymFunc::complete(n, self.degree_bound)?)
    }

    /// The table `d_f(x, y) = d(x, y)(f)`.
    pub fn eval_slice(&self, f: &SymFunc) -> Result<LCategory> {
        if let Some(l) = f.support().find(|l| l.size() > self.degree_bound) {
            return Err(Error::overflow(l, self.degree_bound));
        }
        Ok(LCategory::from_fn(self.points.clone(), |i, j| {
            self.dist[i][j].eval_sym(f).expect("degree checked above")
        }))
    }

    /// The least partition, in the size-then-lexicographic order, among those
    /// in the support of `f` that attain `d_f(x, y)`.
    pub fn argmin_partition(&self, x: &str, y: &str, f: &SymFunc) -> Result<Partition> {
        let (i, j) = (self.index_of(x)?, self.index_of(y)?);
        let entry = &self.dist[i][j];
        let mut best: Option<(&LValue, &Partition)> = None;
        for l in f.support() {
            let v = entry.value(l)?;
            // support iterates in ascending order, so only a strict
            // improvement replaces the incumbent
            if best.is_none_or(|(b, _)| v < b) {
                best = Some((v, l));
            }
        }
        best.map(|(_, l)| l.clone()).ok_or(Error::EmptySupport)
    }

    /// The initial-state 𝕃-category: `τ` applied entrywise.
    pub fn tau_cat(&self) -> Result<LCategory> {
        let dist = self
            .dist
            .iter()
            .map(|row| row.iter().map(WittElem::tau).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(LCategory {
            points: self.points.clone(),
            dist,
        })
    }

    /// The action of `g ∈ Λ` on the slice `d_f`: returns `d_{g ∘ f}`.
    pub fn lambda_action(&self, g: &SymFunc, f: &SymFunc) -> Result<LCategory> {
        self.eval_slice(&g.plethysm(f)?)
    }

    /// Whether every entry lies in the sub-poset `𝕎(𝕃)ₗ`.
    pub fn is_wl_l_enriched(&self) -> bool {
        self.dist.iter().flatten().all(WittElem::in_wl_l)
    }

    /// `min` over the co-multiplication terms of `m_λ` of
    /// `d_μ(x, y) + d_ν(y, z)`: the bound the composition axiom places on
    /// `d_λ(x, z)`.
    pub fn composition_bound(&self, shape: &Partition, x: usize, y: usize, z: usize) -> LValue {
        mult_coproduct_of(shape)
            .keys()
            .map(|(mu, nu)| self.dist[x][y].values()[mu].otimes(&self.dist[y][z].values()[nu]))
            .min()
            .unwrap_or(LValue::Infinite)
    }

    /// All partitions `λ` within the bound with `d_λ(x, x) > 0` for some
    /// point `x`.
    pub fn nonzero_self_distances(&self) -> Vec<(String, Partition, LValue)> {
        let mut out = Vec::new();
        for l in enumerate_up_to(self.degree_bound) {
            for (i, p) in self.points.iter().enumerate() {
                let v = &self.dist[i][i].values()[&l];
                if !v.is_zero() {
                    out.push((p.clone(), l.clone(), v.clone()));
                }
            }
        }
        out
    }
}

fn pair_key(a: &str, b: &str) -> String {
    format!("{a}|{b}")
}

struct PairMap<'a, T>(&'a [String], &'a [Vec<T>]);

impl<T: Serialize> Serialize for PairMap<'_, T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.0.len();
        let mut map = serializer.serialize_map(Some(n * n))?;
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in self.0.iter().enumerate() {
                map.serialize_entry(&pair_key(a, b), &self.1[i][j])?;
            }
        }
        map.end()
    }
}

#[derive(Serialize)]
struct Encoded<'a, T> {
    points: &'a [String],
    dist: PairMap<'a, T>,
}

#[derive(Deserialize)]
#[serde(bound = "T: Deserialize<'de>")]
struct Decoded<T> {
    points: Vec<String>,
    dist: BTreeMap<String, T>,
}

fn decode_table<T>(raw: Decoded<T>) -> std::result::Result<(Vec<String>, Vec<Vec<T>>), String> {
    let Decoded { points, mut dist } = raw;
    if points.iter().any(|p| p.contains('|')) {
        return Err("point identifiers may not contain '|'".into());
    }
    let mut rows = Vec::with_capacity(points.len());
    for a in &points {
        let mut row = Vec::with_capacity(points.len());
        for b in &points {
            let key = pair_key(a, b);
            row.push(
                dist.remove(&key)
                    .ok_or_else(|| format!("missing distance {key:?}"))?,
            );
        }
        rows.push(row);
    }
    if let Some(extra) = dist.keys().next() {
        return Err(format!("unexpected distance key {extra:?}"));
    }
    Ok((points, rows))
}

impl Serialize for LCategory {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Encoded {
            points: &self.points,
            dist: PairMap(&self.points, &self.dist),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LCategory {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (points, dist) = decode_table(Decoded::<LValue>::deserialize(deserializer)?)
            .map_err(D::Error::custom)?;
        LCategory::new(points, dist).map_err(D::Error::custom)
    }
}

impl Serialize for WCategory {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Encoded {
            points: &self.points,
            dist: PairMap(&self.points, &self.dist),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WCategory {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (points, dist) = decode_table(Decoded::<WittElem>::deserialize(deserializer)?)
            .map_err(D::Error::custom)?;
        WCategory::new(points, dist).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: usize = 6;

    fn v(s: &str) -> LValue {
        s.parse().unwrap()
    }

    fn names(n: usize) -> Vec<String> {
        ["a", "b", "c", "d", "e"][..n].iter().map(|s| s.to_string()).collect()
    }

    fn table(rows: &[&[&str]]) -> LCategory {
        let dist = rows
            .iter()
            .map(|r| r.iter().map(|s| v(s)).collect())
            .collect();
        LCategory::new(names(rows.len()), dist).unwrap()
    }

    fn asym() -> LCategory {
        table(&[&["0", "1", "5/2"], &["3", "0", "2"], &["1", "1/2", "0"]])
    }

    #[test]
    fn validate_l_examples() {
        assert!(table(&[&["0", "1"], &["1", "0"]]).validate().passed());
        let bad = table(&[&["0", "1", "3"], &["1", "0", "1"], &["3", "1", "0"]]);
        let report = bad.validate();
        assert!(report.violations.contains(&LViolation::Triangle {
            x: "a".into(),
            y: "b".into(),
            z: "c".into(),
            direct: v("3"),
            via: v("2"),
        }));
        let selfd = table(&[&["1", "1"], &["1", "0"]]);
        assert!(!selfd.validate().passed());
        assert!(selfd.validate().triangle_holds());
        assert!(asym().validate().passed());
    }

    #[test]
    fn shape_errors() {
        assert!(LCategory::new(names(2), vec![vec![v("0")]]).is_err());
        assert!(LCategory::new(vec!["a".into(), "a".into()], vec![vec![v("0"); 2]; 2]).is_err());
        let w = asym().theta_cat(N).unwrap();
        assert!(w.index_of("zz").is_err());
    }

    #[test]
    fn theta_slices() {
        let x = asym();
        let w = x.theta_cat(N).unwrap();
        assert!(w.validate().passed());
        for n in 1..=N as u32 {
            assert_eq!(w.slice_lambda(&Partition::row(n)).unwrap(), x.scale(n as u64));
            assert_eq!(w.slice_h(n as usize).unwrap(), x.scale(n as u64));
        }
        let s = w.slice_lambda(&Partition::from([2, 1])).unwrap();
        assert!(s.rows().iter().flatten().all(LValue::is_infinite));
        assert_eq!(w.slice_lambda(&Partition::row(1)).unwrap(), w.tau_cat().unwrap());
        assert_eq!(w.tau_cat().unwrap(), x);
        assert!(w.slice_lambda(&Partition::row(7)).is_err());
        assert!(w.is_wl_l_enriched());
    }

    #[test]
    fn theta_of_invalid_is_rejected() {
        let bad = table(&[&["0", "1", "3"], &["1", "0", "1"], &["3", "1", "0"]]);
        assert!(matches!(bad.theta_cat(N), Err(Error::InvalidCategory(_))));
    }

    #[test]
    fn one_point() {
        let x = table(&[&["0"]]);
        let w = x.theta_cat(N).unwrap();
        assert_eq!(w.dist(0, 0), &WittElem::multiplicative_unit(N));
        assert!(w.validate().passed());
    }

    fn roots_category() -> WCategory {
        // {0,1,1,1,1,1} is the closure of {0,1} under pairwise sums, first N kept
        let r = |items: &[&str]| WittElem::eval_witt(&items.iter().map(|s| v(s)).collect::<Vec<_>>(), N);
        let near = r(&["0", "1", "1", "1", "1", "1"]);
        let far = r(&["1", "2", "2", "2", "2", "2"]);
        let dist = vec![vec![near.clone(), far.clone()], vec![far, near]];
        WCategory::new(names(2), dist).unwrap()
    }

    #[test]
    fn eval_witt_category() {
        let w = roots_category();
        let report = w.validate();
        assert!(report.passed(), "{report:?}");
        let selfd = w.slice_lambda(&Partition::from([1, 1])).unwrap();
        assert_eq!(selfd.dist(0, 0), &v("1"));
        assert!(selfd.triangle_violations().is_empty());
        assert!(!w.nonzero_self_distances().is_empty());
        for n in 1..=N {
            assert!(w.slice_h(n).unwrap().validate().passed());
            assert!(w.slice_lambda(&Partition::row(n as u32)).unwrap().validate().passed());
        }
    }

    #[test]
    fn axiom_failures_are_reported() {
        let r = |items: &[&str]| WittElem::eval_witt(&items.iter().map(|s| v(s)).collect::<Vec<_>>(), N);
        let dist = vec![vec![r(&["1"]), r(&["1"])], vec![r(&["1"]), r(&["0"])]];
        let report = WCategory::new(names(2), dist).unwrap().validate();
        assert!(report
            .violations
            .iter()
            .any(|x| matches!(x, WViolation::Identity { point, .. } if point == "a")));

        let t = |s: &str| WittElem::theta(&v(s), N);
        let dist = vec![
            vec![t("0"), t("1"), t("3")],
            vec![t("1"), t("0"), t("1")],
            vec![t("3"), t("1"), t("0")],
        ];
        let report = WCategory::new(names(3), dist).unwrap().validate();
        assert!(report.violations.iter().any(|x| matches!(
            x,
            WViolation::Composition { x, y, z, partition, .. }
                if x == "a" && y == "b" && z == "c" && *partition == Partition::row(1)
        )));

        let mut values = BTreeMap::new();
        values.insert(Partition::row(1), v("1"));
        values.insert(Partition::row(2), v("5"));
        let bad = WittElem::from_values(N, values).unwrap();
        let report = WCategory::new(names(1), vec![vec![bad]]).unwrap().validate();
        assert!(report
            .violations
            .iter()
            .any(|x| matches!(x, WViolation::NotHomomorphism { .. })));
    }

    #[test]
    fn eval_slice_and_argmin() {
        let w = roots_category();
        let m = |parts: &[u32]| SymFunc::monomial(Partition::from(parts), N).unwrap();
        assert_eq!(w.eval_slice(&m(&[2, 1])).unwrap(), w.slice_lambda(&Partition::from([2, 1])).unwrap());
        assert_eq!(w.eval_slice(&SymFunc::complete(3, N).unwrap()).unwrap(), w.slice_h(3).unwrap());
        let f = m(&[2]).add(&m(&[1, 1])).unwrap();
        assert_eq!(
            w.eval_slice(&f).unwrap(),
            w.slice_lambda(&Partition::row(2))
                .unwrap()
                .pointwise_min(&w.slice_lambda(&Partition::from([1, 1])).unwrap())
                .unwrap()
        );
        assert_eq!(w.slice_h(1).unwrap(), w.slice_lambda(&Partition::row(1)).unwrap());

        assert_eq!(w.argmin_partition("a", "b", &m(&[2, 1])).unwrap(), Partition::from([2, 1]));
        let theta = asym().theta_cat(N).unwrap();
        let h2 = SymFunc::complete(2, N).unwrap();
        assert_eq!(theta.argmin_partition("a", "b", &h2).unwrap(), Partition::row(2));
        // a tie: d(a,a)(m_2) = 0 = d(a,a)(m_(1,1)) when both roots are 0
        let z = |items: &[&str]| WittElem::eval_witt(&items.iter().map(|s| v(s)).collect::<Vec<_>>(), N);
        let tie = WCategory::new(names(1), vec![vec![z(&["0", "0"])]]).unwrap();
        assert_eq!(tie.argmin_partition("a", "a", &h2).unwrap(), Partition::from([1, 1]));
        assert_eq!(tie.argmin_partition("a", "a", &SymFunc::zero(N)), Err(Error::EmptySupport));
    }

    #[test]
    fn lambda_action_examples() {
        let w = roots_category();
        let m = |parts: &[u32]| SymFunc::monomial(Partition::from(parts), N).unwrap();
        assert_eq!(w.lambda_action(&m(&[3]), &m(&[2])).unwrap(), w.slice_lambda(&Partition::row(6)).unwrap());
        let f = m(&[2, 1]).add(&m(&[1])).unwrap();
        assert_eq!(w.lambda_action(&m(&[1]), &f).unwrap(), w.eval_slice(&f).unwrap());
        let (g1, g2) = (m(&[2]), m(&[1, 1]));
        let f = m(&[1]).add(&m(&[2])).unwrap();
        assert_eq!(
            w.lambda_action(&g1.add(&g2).unwrap(), &f).unwrap(),
            w.lambda_action(&g1, &f).unwrap().pointwise_min(&w.lambda_action(&g2, &f).unwrap()).unwrap()
        );
    }

    #[test]
    fn json_round_trip() {
        let x = asym();
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.starts_with(r#"{"points":["a","b","c"],"dist":{"a|a":"0","a|b":"1","a|c":"5/2""#));
        assert_eq!(serde_json::from_str::<LCategory>(&s).unwrap(), x);
        let w = roots_category();
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(serde_json::from_str::<WCategory>(&s).unwrap(), w);
        let missing = r#"{"points":["a","b"],"dist":{"a|a":0,"a|b":1,"b|b":0}}"#;
        assert!(serde_json::from_str::<LCategory>(missing).is_err());
    }
}
