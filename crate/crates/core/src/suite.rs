//! Named property suites run by `wittl suite run`.
//!
//! Each suite is a pure function of its [`SuiteConfig`]; suites run on
//! separate threads and results are reported in registration order.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{enumerate, enumerate_up_to, graded_lex_order, Partition};
use crate::plancherel::{growth_step, plancherel_measure, push_forward, sample_path};
use crate::poly::{
    coproduct_add_oracle, coproduct_mult_oracle, expand_in_vars, from_polynomial,
};
use crate::quantale::LValue;
use crate::sample;
use crate::symfunc::{SymFunc, TensorSymFunc};
use crate::witt::WittElem;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub degree_bound: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            degree_bound: crate::DEFAULT_DEGREE_BOUND,
            seed: 2024,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteOutcome {
    pub module: &'static str,
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub struct Suite {
    pub module: &'static str,
    pub name: &'static str,
    run: fn(&SuiteConfig, &mut Tally),
}

/// Case counter handed to each suite; keeps the first few failure messages.
#[derive(Default)]
pub struct Tally {
    cases: usize,
    failures: Vec<String>,
    failed: usize,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 10 {
                self.failures.push(msg());
            }
        }
    }

    fn check_eq<T: PartialEq + std::fmt::Debug>(&mut self, left: T, right: T, what: impl FnOnce() -> String) {
        let ok = left == right;
        self.check(ok, || format!("{}: {left:?} != {right:?}", what()));
    }
}

pub const MODULES: [&str; 6] = ["partitions", "symfunc", "quantale", "witt", "enriched", "plancherel"];

pub fn suites() -> Vec<Suite> {
    macro_rules! suite {
        ($module:literal, $name:literal, $f:expr) => {
            Suite {
                module: $module,
                name: $name,
                run: $f,
            }
        };
    }
    vec![
        suite!("partitions", "partition-counts", partition_counts),
        suite!("partitions", "branching-identity", branching_identity),
        suite!("partitions", "order-is-total", order_is_total),
        suite!("symfunc", "identities", lambda_identities),
        suite!("symfunc", "rig-laws", lambda_rig_laws),
        suite!("symfunc", "coassociativity", coassociativity),
        suite!("symfunc", "oracle-coherence", oracle_coherence),
        suite!("symfunc", "e-products-not-surjective", e_products_not_surjective),
        suite!("quantale", "rig-laws", quantale_rig_laws),
        suite!("quantale", "residuation", residuation),
        suite!("witt", "rig-laws", witt_rig_laws),
        suite!("witt", "monoidal-poset", monoidal_poset),
        suite!("witt", "theta-monoidal", theta_monoidal),
        suite!("witt", "negative-results", negative_results),
        suite!("witt", "root-calculus", root_calculus),
        suite!("witt", "adjunction", adjunction),
        suite!("witt", "wl-l-closure", wl_l_closure),
        suite!("enriched", "slices", enriched_slices),
        suite!("enriched", "functors", enriched_functors),
        suite!("enriched", "lambda-action", lambda_action),
        suite!("plancherel", "exact-measures", plancherel_exact),
        suite!("plancherel", "sampled-marginals", plancherel_marginals),
    ]
}

/// Runs every suite, or only those of `module`.
pub fn run(module: Option<&str>, config: &SuiteConfig) -> Result<Vec<SuiteOutcome>> {
    if let Some(m) = module {
        if !MODULES.contains(&m) {
            return Err(Error::Parse(format!(
                "unknown module {m:?}; expected one of {}",
                MODULES.join(", ")
            )));
        }
    }
    let selected: Vec<Suite> = suites()
        .into_iter()
        .filter(|s| module.is_none_or(|m| s.module == m))
        .collect();
    let outcomes = std::thread::scope(|scope| {
        let handles: Vec<_> = selected
            .iter()
            .map(|s| {
                scope.spawn(move || {
                    let mut tally = Tally::default();
                    (s.run)(config, &mut tally);
                    let mut failures = tally.failures;
                    if tally.failed > failures.len() {
                        failures.push(format!("… {} failures in total", tally.failed));
                    }
                    SuiteOutcome {
                        module: s.module,
                        name: s.name,
                        cases: tally.cases,
                        failures,
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite panicked"))
            .collect()
    });
    Ok(outcomes)
}

fn rng(config: &SuiteConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(config.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn small(config: &SuiteConfig, cap: usize) -> usize {
    config.degree_bound.min(cap)
}

fn m(parts: &[u32], bound: usize) -> SymFunc {
    SymFunc::monomial(Partition::from(parts), bound).expect("within bound")
}

// ---- partitions ----

fn partition_counts(_: &SuiteConfig, t: &mut Tally) {
    let mut table = [0u64; 13];
    table[0] = 1;
    for k in 1..=12 {
        for n in k..=12 {
            table[n] += table[n - k];
        }
    }
    for (n, &expected) in table.iter().enumerate() {
        t.check_eq(enumerate(n).len() as u64, expected, || format!("p({n})"));
    }
}

fn branching_identity(_: &SuiteConfig, t: &mut Tally) {
    for l in enumerate_up_to(8) {
        let sum: BigUint = l.covers().iter().map(Partition::hook_dimension).sum();
        t.check_eq(sum, BigUint::from(l.size() + 1) * l.hook_dimension(), || format!("{l:?}"));
    }
}

fn order_is_total(_: &SuiteConfig, t: &mut Tally) {
    let all = enumerate_up_to(8);
    for a in &all {
        for b in &all {
            let ab = graded_lex_order(a, b);
            t.check(ab == graded_lex_order(b, a).reverse() && (ab.is_eq() == (a == b)), || {
                format!("antisymmetry/totality at {a:?}, {b:?}")
            });
        }
    }
    for w in all.windows(3) {
        t.check(graded_lex_order(&w[0], &w[1]).is_lt() && graded_lex_order(&w[0], &w[2]).is_lt(), || {
            format!("transitivity at {w:?}")
        });
    }
}

// ---- symfunc ----

fn lambda_identities(config: &SuiteConfig, t: &mut Tally) {
    let n = config.degree_bound;
    for k in 1..=n as u32 {
        let row = Partition::row(k);
        let f = SymFunc::monomial(row.clone(), n).unwrap();
        let add = TensorSymFunc::from_terms(
            [
                ((row.clone(), Partition::empty()), BigUint::one()),
                ((Partition::empty(), row.clone()), BigUint::one()),
            ],
            n,
        )
        .unwrap();
        t.check_eq(f.coproduct_add(), add, || format!("co-addition of m({k})"));
        let mult = TensorSymFunc::from_terms([((row.clone(), row.clone()), BigUint::one())], n).unwrap();
        t.check_eq(f.coproduct_mult(), mult, || format!("co-multiplication of m({k})"));
        let h: SymFunc = enumerate(k as usize)
            .into_iter()
            .map(|l| SymFunc::monomial(l, n).unwrap())
            .fold(SymFunc::zero(n), |acc, x| acc.add(&x).unwrap());
        t.check_eq(SymFunc::complete(k as usize, n).unwrap(), h, || format!("h_{k}"));
    }
    if n >= 3 {
        let expected = TensorSymFunc::from_terms(
            [
                ((Partition::from([2, 1]), Partition::empty()), BigUint::one()),
                ((Partition::row(2), Partition::row(1)), BigUint::one()),
                ((Partition::row(1), Partition::row(2)), BigUint::one()),
                ((Partition::empty(), Partition::from([2, 1])), BigUint::one()),
            ],
            n,
        )
        .unwrap();
        t.check_eq(m(&[2, 1], n).coproduct_add(), expected, || "co-addition of m(2,1)".into());
    }
    for l in enumerate_up_to(small(config, 6)) {
        let f = SymFunc::monomial(l.clone(), n).unwrap();
        t.check_eq(f.counit_add(), BigUint::from(u8::from(l.is_empty())), || format!("ε⁺ {l:?}"));
        t.check_eq(f.counit_mult(), BigUint::from(u8::from(l.len() <= 1)), || format!("ε× {l:?}"));
    }
    for a in 1..=n as u32 {
        for b in 1..=n as u32 {
            if (a * b) as usize <= n {
                let got = m(&[a], n).plethysm(&m(&[b], n)).unwrap();
                t.check_eq(got, m(&[a * b], n), || format!("m({a}) ∘ m({b})"));
            }
        }
    }
}

fn lambda_rig_laws(config: &SuiteConfig, t: &mut Tally) {
    let bound = small(config, 6);
    let mut rng = rng(config, 1);
    let shapes = enumerate_up_to(bound);
    let random_sym = |rng: &mut ChaCha8Rng, max_deg: usize| {
        let pool: Vec<&Partition> = shapes.iter().filter(|l| l.size() <= max_deg).collect();
        let mut f = SymFunc::zero(bound);
        for _ in 0..rng.gen_range(1..=2) {
            let l = pool[rng.gen_range(0..pool.len())].clone();
            f = f.add(&SymFunc::from_terms([(l, BigUint::from(rng.gen_range(1..=3u32)))], bound).unwrap()).unwrap();
        }
        f
    };
    for _ in 0..60 {
        let a = random_sym(&mut rng, 2);
        let b = random_sym(&mut rng, 2);
        let c = random_sym(&mut rng, 2);
        let ab = a.multiply(&b).unwrap();
        let k = bound;
        let oracle = from_polynomial(&expand_in_vars(&a, k).mul(&expand_in_vars(&b, k)), bound).unwrap();
        t.check_eq(ab.clone(), oracle, || format!("{a:?} · {b:?} vs oracle"));
        t.check_eq(ab.clone(), b.multiply(&a).unwrap(), || "commutativity".into());
        t.check_eq(ab.multiply(&c).unwrap(), a.multiply(&b.multiply(&c).unwrap()).unwrap(), || "associativity".into());
        t.check_eq(
            a.multiply(&b.add(&c).unwrap()).unwrap(),
            ab.add(&a.multiply(&c).unwrap()).unwrap(),
            || "distributivity".into(),
        );
        t.check_eq(a.add(&b).unwrap(), b.add(&a).unwrap(), || "additive commutativity".into());
        t.check_eq(a.multiply(&SymFunc::one(bound)).unwrap(), a.clone(), || "unit".into());
        t.check(a.multiply(&SymFunc::zero(bound)).unwrap().is_zero(), || "zero annihilates".into());
    }
}

fn triple_add(f: &SymFunc, first: bool) -> BTreeMap<(Partition, Partition, Partition), BigUint> {
    let mut out = BTreeMap::new();
    let outer = f.coproduct_add();
    for ((l, r), c) in outer.terms() {
        let (split, other) = if first { (l, r) } else { (r, l) };
        let inner = SymFunc::monomial(split.clone(), f.degree_bound()).unwrap().coproduct_add();
        for ((a, b), d) in inner.terms() {
            let key = if first {
                (a.clone(), b.clone(), other.clone())
            } else {
                (other.clone(), a.clone(), b.clone())
            };
            *out.entry(key).or_default() += c * d;
        }
    }
    out
}

fn triple_mult(f: &SymFunc, first: bool) -> BTreeMap<(Partition, Partition, Partition), BigUint> {
    let mut out = BTreeMap::new();
    let outer = f.coproduct_mult();
    for ((l, r), c) in outer.terms() {
        let (split, other) = if first { (l, r) } else { (r, l) };
        let inner = SymFunc::monomial(split.clone(), f.degree_bound()).unwrap().coproduct_mult();
        for ((a, b), d) in inner.terms() {
            let key = if first {
                (a.clone(), b.clone(), other.clone())
            } else {
                (other.clone(), a.clone(), b.clone())
            };
            *out.entry(key).or_default() += c * d;
        }
    }
    out
}

fn coassociativity(config: &SuiteConfig, t: &mut Tally) {
    let bound = small(config, 5);
    for l in enumerate_up_to(bound) {
        let f = SymFunc::monomial(l.clone(), bound).unwrap();
        t.check_eq(triple_add(&f, true), triple_add(&f, false), || format!("Δ⁺ at {l:?}"));
        t.check_eq(triple_mult(&f, true), triple_mult(&f, false), || format!("Δ× at {l:?}"));
        for (a, b) in f.coproduct_mult().terms().keys() {
            t.check(a.size() == l.size() && b.size() == l.size(), || format!("Δ× bidegree at {l:?}"));
        }
        for (a, b) in f.coproduct_add().terms().keys() {
            t.check(a.size() + b.size() == l.size(), || format!("Δ⁺ bidegree at {l:?}"));
        }
    }
}

fn oracle_coherence(config: &SuiteConfig, t: &mut Tally) {
    let bound = small(config, 6);
    let shapes = enumerate_up_to(bound);
    for l in &shapes {
        let f = SymFunc::monomial(l.clone(), bound).unwrap();
        let k = l.size().max(1);
        t.check_eq(f.coproduct_add(), coproduct_add_oracle(&f, k).unwrap(), || format!("Δ⁺ oracle at {l:?}"));
        if l.size() <= 4 {
            t.check_eq(f.coproduct_mult(), coproduct_mult_oracle(&f, k).unwrap(), || {
                format!("Δ× oracle at {l:?}")
            });
        }
    }
    for a in &shapes {
        for b in &shapes {
            if a.size() + b.size() > bound {
                continue;
            }
            let (fa, fb) = (SymFunc::monomial(a.clone(), bound).unwrap(), SymFunc::monomial(b.clone(), bound).unwrap());
            let k = (a.size() + b.size()).max(1);
            let oracle = from_polynomial(&expand_in_vars(&fa, k).mul(&expand_in_vars(&fb, k)), bound).unwrap();
            t.check_eq(fa.multiply(&fb).unwrap(), oracle, || format!("m{a:?} · m{b:?}"));
        }
    }
}

/// Whether `target` is an ℕ-combination of the e-products of its degree.
/// Every coefficient of the target is 0 or 1 and every e-product is a
/// nonzero ℕ-combination of monomials, so multipliers are 0 or 1.
pub fn is_e_combination(target: &SymFunc) -> bool {
    let bound = target.degree_bound();
    let degree = target.degree();
    let products: Vec<SymFunc> = enumerate(degree)
        .into_iter()
        .map(|mu| {
            mu.parts().iter().fold(SymFunc::one(bound), |acc, &p| {
                acc.multiply(&SymFunc::elementary(p as usize, bound).unwrap()).unwrap()
            })
        })
        .collect();
    (0u32..(1 << products.len())).any(|mask| {
        let sum = products
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .fold(SymFunc::zero(bound), |acc, (_, p)| acc.add(p).unwrap());
        sum == *target
    })
}

fn e_products_not_surjective(config: &SuiteConfig, t: &mut Tally) {
    let bound = config.degree_bound.max(4);
    let witnesses: Vec<Partition> = enumerate_up_to(4)
        .into_iter()
        .filter(|l| !is_e_combination(&SymFunc::monomial(l.clone(), bound).unwrap()))
        .collect();
    t.check(witnesses.contains(&Partition::row(2)), || format!("expected m(2) among witnesses {witnesses:?}"));
    for n in 0..=4 {
        t.check(is_e_combination(&SymFunc::elementary(n, bound).unwrap()), || format!("e_{n} itself"));
    }
}

// ---- quantale ----

fn grid() -> Vec<LValue> {
    let mut g: Vec<LValue> = (0..=12u64)
        .flat_map(|p| (1..=3u64).map(move |q| LValue::ratio(p, q)))
        .collect();
    g.sort();
    g.dedup();
    g.push(LValue::Infinite);
    g
}

fn quantale_rig_laws(config: &SuiteConfig, t: &mut Tally) {
    let mut rng = rng(config, 2);
    let zero = LValue::Infinite;
    let one = LValue::zero();
    for _ in 0..500 {
        let (a, b, c) = (sample::lvalue(&mut rng), sample::lvalue(&mut rng), sample::lvalue(&mut rng));
        t.check_eq(a.oplus(&b.oplus(&c)), a.oplus(&b).oplus(&c), || "⊕ associative".into());
        t.check_eq(a.otimes(&b.otimes(&c)), a.otimes(&b).otimes(&c), || "⊗ associative".into());
        t.check_eq(a.oplus(&b), b.oplus(&a), || "⊕ commutative".into());
        t.check_eq(a.otimes(&b), b.otimes(&a), || "⊗ commutative".into());
        t.check_eq(a.otimes(&b.oplus(&c)), a.otimes(&b).oplus(&a.otimes(&c)), || "distributive".into());
        t.check_eq(a.oplus(&zero), a.clone(), || "⊕ unit".into());
        t.check_eq(a.otimes(&one), a.clone(), || "⊗ unit".into());
        t.check_eq(a.otimes(&zero), zero.clone(), || "absorbing".into());
        t.check_eq(a.oplus(&a), a.clone(), || "idempotent".into());
    }
    let g = grid();
    for x in &g {
        for y in &g {
            let exists = g.iter().any(|z| x.oplus(z) == *y);
            t.check_eq(x.leq_l(y), exists, || format!("order from addition at {x:?}, {y:?}"));
        }
    }
    // 𝕃 as an 𝕃-category under d(x, y) = y ⊖ x
    for x in &g {
        t.check(x.trunc_sub(x).is_zero(), || format!("d({x:?}, {x:?})"));
    }
    for x in g.iter().step_by(3) {
        for y in g.iter().step_by(2) {
            for z in g.iter().step_by(3) {
                let direct = z.trunc_sub(x);
                let via = y.trunc_sub(x).otimes(&z.trunc_sub(y));
                t.check(direct <= via, || format!("triangle at {x:?}, {y:?}, {z:?}"));
            }
        }
    }
}

fn residuation(_: &SuiteConfig, t: &mut Tally) {
    let g = grid();
    for x in &g {
        for y in &g {
            for z in &g {
                t.check_eq(x.otimes(z).leq_l(y), z.leq_l(&y.trunc_sub(x)), || format!("x={x:?} y={y:?} z={z:?}"));
            }
        }
    }
}

// ---- witt ----

fn witt_rig_laws(config: &SuiteConfig, t: &mut Tally) {
    let n = small(config, 6);
    let mut rng = rng(config, 3);
    let zero = WittElem::additive_unit(n);
    let one = WittElem::multiplicative_unit(n);
    for _ in 0..200 {
        let f = sample::eval_witt(&mut rng, 3, n);
        let g = sample::eval_witt(&mut rng, 3, n);
        let h = sample::eval_witt(&mut rng, 3, n);
        let fg = f.mul(&g).unwrap();
        let f_plus_g = f.add(&g).unwrap();
        t.check_eq(f.add(&g.add(&h).unwrap()).unwrap(), f_plus_g.add(&h).unwrap(), || "⊕ associative".into());
        t.check_eq(f.mul(&g.mul(&h).unwrap()).unwrap(), fg.mul(&h).unwrap(), || "⊗ associative".into());
        t.check_eq(f_plus_g.clone(), g.add(&f).unwrap(), || "⊕ commutative".into());
        t.check_eq(fg.clone(), g.mul(&f).unwrap(), || "⊗ commutative".into());
        t.check_eq(
            f.mul(&g.add(&h).unwrap()).unwrap(),
            fg.add(&f.mul(&h).unwrap()).unwrap(),
            || "distributive".into(),
        );
        t.check_eq(f.add(&zero).unwrap(), f.clone(), || "⊕ unit".into());
        t.check_eq(f.mul(&one).unwrap(), f.clone(), || "⊗ unit".into());
        t.check_eq(f.mul(&zero).unwrap(), zero.clone(), || "zero annihilates".into());
        t.check(fg.validate_hom().passed() && f_plus_g.validate_hom().passed(), || "closure".into());
    }
}

fn monoidal_poset(config: &SuiteConfig, t: &mut Tally) {
    let n = small(config, 6);
    let mut rng = rng(config, 4);
    for _ in 0..150 {
        let f = sample::eval_witt(&mut rng, 3, n);
        let g = sample::eval_witt(&mut rng, 3, n);
        let h = sample::eval_witt(&mut rng, 3, n);
        let (small_, large) = if f.leq_w(&g).unwrap() { (f.clone(), g.clone()) } else { (g.clone(), f.clone()) };
        if small_.leq_w(&large).unwrap() {
            t.check(
                small_.mul(&h).unwrap().leq_w(&large.mul(&h).unwrap()).unwrap()
                    && h.mul(&small_).unwrap().leq_w(&h.mul(&large).unwrap()).unwrap(),
                || format!("⊗ monotone for {small_:?} ≤ {large:?}"),
            );
        }
        t.check(f.leq_w(&f).unwrap(), || "reflexive".into());
        if f.leq_w(&g).unwrap() && g.leq_w(&f).unwrap() {
            t.check_eq(f.clone(), g.clone(), || "antisymmetric".into());
        }
        if f.leq_w(&g).unwrap() && g.leq_w(&h).unwrap() {
            t.check(f.leq_w(&h).unwrap(), || "transitive".into());
        }
    }
}

fn theta_monoidal(config: &SuiteConfig, t: &mut Tally) {
    let n = config.degree_bound;
    let mut rng = rng(config, 5);
    let mut pairs = vec![
        (LValue::zero(), LValue::zero()),
        (LValue::zero(), LValue::Infinite),
        (LValue::Infinite, LValue::Infinite),
    ];
    pairs.extend((0..200).map(|_| (sample::lvalue(&mut rng), sample::lvalue(&mut rng))));
    t.check_eq(WittElem::theta(&LValue::zero(), n), WittElem::multiplicative_unit(n), || "θ(0) = 0̄".into());
    for (r, s) in pairs {
        let (tr, ts) = (WittElem::theta(&r, n), WittElem::theta(&s, n));
        t.check(tr.validate_hom().passed(), || format!("θ({r:?}) is a homomorphism"));
        t.check_eq(tr.mul(&ts).unwrap(), WittElem::theta(&r.otimes(&s), n), || format!("θ({r:?})⊗θ({s:?})"));
        if r.leq_l(&s) {
            t.check(tr.leq_w(&ts).unwrap(), || format!("θ monotone at {r:?} ≤ {s:?}"));
        }
        t.check_eq(tr.tau().unwrap(), r.clone(), || "τθ = id".into());
    }
}

fn negative_results(config: &SuiteConfig, t: &mut Tally) {
    let n = config.degree_bound.max(3);
    let m21 = Partition::from([2, 1]);
    let one = WittElem::multiplicative_unit(n);
    let two = one.add(&one).unwrap();
    t.check_eq(two.get(&m21).cloned(), Some(LValue::zero()), || "(0̄⊕0̄)(m21)".into());
    t.check_eq(one.get(&m21).cloned(), Some(LValue::Infinite), || "0̄(m21)".into());
    t.check(two != one, || "0̄ ⊕ 0̄ = 0̄".into());
    let mut rng = rng(config, 6);
    for _ in 0..100 {
        let (r, s) = (sample::rational(&mut rng), sample::rational(&mut rng));
        let sum = WittElem::theta(&r, n).add(&WittElem::theta(&s, n)).unwrap();
        let expected = r.scale(2).otimes(&s).oplus(&r.otimes(&s.scale(2)));
        t.check_eq(sum.get(&m21).cloned(), Some(expected), || format!("(θ({r:?})⊕θ({s:?}))(m21)"));
        t.check_eq(
            WittElem::theta(&r.oplus(&s), n).get(&m21).cloned(),
            Some(LValue::Infinite),
            || "θ(min)(m21)".into(),
        );
    }
}

fn root_calculus(config: &SuiteConfig, t: &mut Tally) {
    let n = small(config, 6);
    let mut rng = rng(config, 7);
    for _ in 0..100 {
        let a = sample::roots(&mut rng, 3);
        let b = sample::roots(&mut rng, 3);
        let (fa, fb) = (WittElem::eval_witt(&a, n), WittElem::eval_witt(&b, n));
        let union: Vec<LValue> = a.iter().chain(&b).cloned().collect();
        let sums: Vec<LValue> = a.iter().flat_map(|x| b.iter().map(move |y| x.otimes(y))).collect();
        t.check_eq(fa.add(&fb).unwrap(), WittElem::eval_witt(&union, n), || format!("{a:?} ⊎ {b:?}"));
        t.check_eq(fa.mul(&fb).unwrap(), WittElem::eval_witt(&sums, n), || format!("{a:?} + {b:?}"));
    }
}

fn adjunction(config: &SuiteConfig, t: &mut Tally) {
    let n = small(config, 6);
    let mut rng = rng(config, 8);
    for i in 0..500 {
        let f = sample::wl_l_member(&mut rng, n);
        let tau = f.tau().unwrap();
        let r = match i % 3 {
            0 => tau.clone(),
            _ => sample::lvalue(&mut rng),
        };
        t.check(f.in_wl_l(), || format!("{f:?} in 𝕎(𝕃)ₗ"));
        t.check_eq(
            WittElem::theta(&r, n).leq_w(&f).unwrap(),
            r.leq_l(&tau),
            || format!("θ({r:?}) ≤ {f:?} vs {r:?} ≤ τ"),
        );
    }
}

fn wl_l_closure(config: &SuiteConfig, t: &mut Tally) {
    let n = small(config, 6);
    let mut rng = rng(config, 9);
    t.check(WittElem::multiplicative_unit(n).in_wl_l(), || "0̄".into());
    for _ in 0..200 {
        let f = sample::wl_l_member(&mut rng, n);
        let g = sample::wl_l_member(&mut rng, n);
        let fg = f.mul(&g).unwrap();
        t.check(fg.in_wl_l(), || format!("{f:?} ⊗ {g:?}"));
        t.check_eq(fg.tau().unwrap(), f.tau().unwrap().otimes(&g.tau().unwrap()), || "τ monoidal".into());
        if f.leq_w(&g).unwrap() {
            t.check(f.tau().unwrap().leq_l(&g.tau().unwrap()), || "τ monotone".into());
        }
    }
}

// ---- enriched ----

fn enriched_slices(config: &SuiteConfig, t: &mut Tally) {
    let n = small(config, 6);
    let mut rng = rng(config, 10);
    let shapes = enumerate_up_to(n);
    let mut partial_witness = false;
    for _ in 0..50 {
        let x = sample::w_category(&mut rng, 4, n);
        t.check(x.validate().passed(), || "generated category is valid".into());
        for k in 1..=n {
            t.check(x.slice_lambda(&Partition::row(k as u32)).unwrap().validate().passed(), || {
                format!("d_({k}) is an 𝕃-category")
            });
            t.check(x.slice_h(k).unwrap().validate().passed(), || format!("d_{k} is an 𝕃-category"));
        }
        for l in &shapes {
            let s = x.slice_lambda(l).unwrap();
            t.check(s.triangle_violations().is_empty(), || format!("d{l:?} triangle"));
            for a in 0..x.len() {
                for b in 0..x.len() {
                    for c in 0..x.len() {
                        t.check(s.dist(a, c) <= &x.composition_bound(l, a, b, c), || {
                            format!("composition bound at {l:?}")
                        });
                    }
                }
            }
        }
        partial_witness |= x.nonzero_self_distances().iter().any(|(_, l, _)| !l.is_row());
        if x.is_wl_l_enriched() {
            let d1 = x.slice_lambda(&Partition::row(1)).unwrap();
            for k in 1..=n as u32 {
                let dk = x.slice_lambda(&Partition::row(k)).unwrap();
                for a in 0..x.len() {
                    for b in 0..x.len() {
                        t.check(dk.dist(a, b) <= &d1.dist(a, b).scale(k as u64), || format!("{k}-Lipschitz"));
                    }
                }
            }
        }
    }
    t.check(partial_witness, || "no generated category had a nonzero self-distance".into());
}

fn enriched_functors(config: &SuiteConfig, t: &mut Tally) {
    let n = config.degree_bound;
    let mut rng = rng(config, 11);
    for _ in 0..30 {
        let x = sample::metric(&mut rng, 4);
        let w = x.theta_cat(n).unwrap();
        t.check(w.validate().passed(), || "θ(X) is a 𝕎(𝕃)-category".into());
        t.check_eq(w.tau_cat().unwrap(), x.clone(), || "τθ(X) = X".into());
        for k in 1..=n as u32 {
            t.check_eq(w.slice_lambda(&Partition::row(k)).unwrap(), x.scale(k as u64), || format!("d̃_({k})"));
            t.check_eq(w.slice_h(k as usize).unwrap(), x.scale(k as u64), || format!("d̃_{k}"));
        }
        for l in enumerate_up_to(n).into_iter().filter(|l| l.len() > 1) {
            let s = w.slice_lambda(&l).unwrap();
            t.check(s.rows().iter().flatten().all(LValue::is_infinite), || format!("d̃{l:?} = ∞"));
        }
        let y = sample::w_category(&mut rng, 3, small(config, 6));
        t.check(y.tau_cat().unwrap().validate().passed(), || "τ(Y) is an 𝕃-category".into());
    }
}

fn lambda_action(config: &SuiteConfig, t: &mut Tally) {
    let n = small(config, 6);
    let mut rng = rng(config, 12);
    for _ in 0..10 {
        let x = sample::w_category(&mut rng, 3, n);
        for a in 1..=n as u32 {
            for b in 1..=n as u32 {
                if (a * b) as usize <= n {
                    t.check_eq(
                        x.lambda_action(&m(&[a], n), &m(&[b], n)).unwrap(),
                        x.slice_lambda(&Partition::row(a * b)).unwrap(),
                        || format!("m({a}) acting on d_({b})"),
                    );
                }
            }
        }
        let f = m(&[1], n).add(&m(&[2], n)).unwrap();
        let (g1, g2) = (m(&[2], n), m(&[1, 1], n));
        t.check_eq(x.lambda_action(&m(&[1], n), &f).unwrap(), x.eval_slice(&f).unwrap(), || "unit".into());
        let sum = x.lambda_action(&g1.add(&g2).unwrap(), &f).unwrap();
        let mins = x.lambda_action(&g1, &f).unwrap().pointwise_min(&x.lambda_action(&g2, &f).unwrap()).unwrap();
        t.check_eq(sum, mins, || "additive in g".into());
        // (g1 g2) ∘ f = (g1 ∘ f)(g2 ∘ f), so d_{(g1 g2)∘f} = d_{(g1∘f)·(g2∘f)}
        let h = m(&[1], n);
        let (p1, p2) = (m(&[1], n), m(&[2], n));
        let lhs = x.lambda_action(&p1.multiply(&p2).unwrap(), &h).unwrap();
        let rhs = x
            .eval_slice(&p1.plethysm(&h).unwrap().multiply(&p2.plethysm(&h).unwrap()).unwrap())
            .unwrap();
        t.check_eq(lhs, rhs, || "multiplicative in g".into());
        let g = m(&[1, 1], n);
        let lhs = x.lambda_action(&g1.multiply(&g).unwrap(), &m(&[1], n)).unwrap();
        let rhs = x
            .eval_slice(&g1.plethysm(&m(&[1], n)).unwrap().multiply(&g.plethysm(&m(&[1], n)).unwrap()).unwrap())
            .unwrap();
        t.check_eq(lhs, rhs, || "multiplicative in g (degree 4)".into());
    }
}

// ---- plancherel ----

fn plancherel_exact(_: &SuiteConfig, t: &mut Tally) {
    for n in 1..=12 {
        let total: BigRational = plancherel_measure(n).values().sum();
        t.check(total.is_one(), || format!("Σ plancherel({n}) = {total}"));
    }
    for n in 0..=10 {
        for l in enumerate(n) {
            let total: BigRational = growth_step(&l).values().sum();
            t.check(total.is_one(), || format!("Σ growth_step({l:?})"));
        }
    }
    for n in 1..=8 {
        t.check_eq(push_forward(&plancherel_measure(n)), plancherel_measure(n + 1), || format!("push forward {n}"));
    }
    let a = sample_path(8, 42);
    t.check_eq(a.clone(), sample_path(8, 42), || "reproducible".into());
}

fn plancherel_marginals(config: &SuiteConfig, t: &mut Tally) {
    const PATHS: u64 = 10_000;
    let mut counts: Vec<BTreeMap<Partition, u64>> = vec![BTreeMap::new(); 5];
    for i in 0..PATHS {
        let path = sample_path(5, config.seed.wrapping_add(i));
        for (step, l) in path.steps.iter().enumerate() {
            *counts[step].entry(l.clone()).or_default() += 1;
        }
    }
    for (step, observed) in counts.iter().enumerate() {
        for (l, p) in plancherel_measure(step + 1) {
            let p = p.numer().to_string().parse::<f64>().unwrap() / p.denom().to_string().parse::<f64>().unwrap();
            let got = observed.get(&l).copied().unwrap_or(0) as f64 / PATHS as f64;
            let sigma = (p * (1.0 - p) / PATHS as f64).sqrt();
            t.check((got - p).abs() <= 3.0 * sigma + f64::EPSILON, || {
                format!("{l:?}: observed {got:.4}, expected {p:.4} ± {:.4}", 3.0 * sigma)
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        let outcomes = run(None, &SuiteConfig::default()).unwrap();
        assert_eq!(outcomes.len(), suites().len());
        for o in &outcomes {
            assert!(o.cases > 0, "{}/{} ran no cases", o.module, o.name);
            assert!(o.passed(), "{}/{}: {:?}", o.module, o.name, o.failures);
        }
    }

    #[test]
    fn unknown_module_is_rejected() {
        assert!(run(Some("nope"), &SuiteConfig::default()).is_err());
        let only = run(Some("quantale"), &SuiteConfig::default()).unwrap();
        assert!(only.iter().all(|o| o.module == "quantale"));
    }
}
