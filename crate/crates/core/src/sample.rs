//! Seeded generators of test inputs: rationals, multisets of roots, valid
//! Witt elements, metric spaces and 𝕎(𝕃)-categories.
//!
//! Valid Witt elements always come from [`WittElem::eval_witt`] or from rig
//! operations on such elements; random value maps are almost never
//! homomorphisms.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::enriched::{LCategory, WCategory};
use crate::quantale::LValue;
use crate::witt::WittElem;

/// A rational `p/q` with `0 ≤ p ≤ 12`, `1 ≤ q ≤ 4`.
pub fn rational<R: Rng>(rng: &mut R) -> LValue {
    LValue::Finite(BigRational::new(
        BigInt::from(rng.gen_range(0..=12u32)),
        BigInt::from(rng.gen_range(1..=4u32)),
    ))
}

/// Like [`rational`] but `0` and `∞` each appear with probability 1/10.
pub fn lvalue<R: Rng>(rng: &mut R) -> LValue {
    match rng.gen_range(0..10) {
        0 => LValue::zero(),
        1 => LValue::Infinite,
        _ => rational(rng),
    }
}

/// A multiset of between `1` and `max_len` roots.
pub fn roots<R: Rng>(rng: &mut R, max_len: usize) -> Vec<LValue> {
    let len = rng.gen_range(1..=max_len.max(1));
    (0..len).map(|_| lvalue(rng)).collect()
}

pub fn eval_witt<R: Rng>(rng: &mut R, max_len: usize, degree_bound: usize) -> WittElem {
    WittElem::eval_witt(&roots(rng, max_len), degree_bound)
}

/// A random member of `𝕎(𝕃)ₗ`: an `eval_witt` element, a θ image, or a
/// Witt sum or product of two such.
pub fn wl_l_member<R: Rng>(rng: &mut R, degree_bound: usize) -> WittElem {
    let base = |rng: &mut R| match rng.gen_range(0..3) {
        0 => WittElem::theta(&lvalue(rng), degree_bound),
        _ => eval_witt(rng, 3, degree_bound),
    };
    match rng.gen_range(0..4) {
        0 => base(rng).add(&base(rng)).expect("same bound"),
        1 => base(rng).mul(&base(rng)).expect("same bound"),
        _ => base(rng),
    }
}

fn point_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

/// A random finite Lawvere metric space: random asymmetric weights closed
/// under shortest paths.
pub fn metric<R: Rng>(rng: &mut R, n: usize) -> LCategory {
    let mut d: Vec<Vec<LValue>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        LValue::zero()
                    } else if rng.gen_range(0..8) == 0 {
                        LValue::Infinite
                    } else {
                        rational(rng)
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k].otimes(&d[k][j]);
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    LCategory::from_fn(point_names(n), |i, j| d[i][j].clone())
}

// Sorted root profiles of length `bound` (padded with ∞). If the profile of
// A is pointwise ≤ that of B then eval_witt(B) ≤ eval_witt(A) in the Witt
// order, and the product of eval_witt(A) and eval_witt(B) is eval_witt of
// all pairwise sums, so the composition axiom can be enforced by relaxing
// profiles.

fn profile(roots: &[LValue], bound: usize) -> Vec<LValue> {
    let mut p = roots.to_vec();
    p.sort();
    p.resize(bound.max(p.len()), LValue::Infinite);
    p.truncate(bound);
    p
}

fn compose_profiles(a: &[LValue], b: &[LValue], bound: usize) -> Vec<LValue> {
    let sums: Vec<LValue> = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| x.otimes(y)))
        .collect();
    profile(&sums, bound)
}

/// A random `n`-point 𝕎(𝕃)-category whose distances are `eval_witt`
/// elements. Random root multisets are relaxed until the composition axiom
/// holds; self-distances always contain the root `0`.
pub fn w_category<R: Rng>(rng: &mut R, n: usize, degree_bound: usize) -> WCategory {
    let bound = degree_bound.max(1);
    let mut prof: Vec<Vec<Vec<LValue>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut r = roots(rng, 3);
                    if i == j {
                        r[0] = LValue::zero();
                    }
                    profile(&r, bound)
                })
                .collect()
        })
        .collect();
    // relaxation terminates: entries only decrease, and each is drawn from
    // finitely many sums of the initial roots below its starting value
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let via = compose_profiles(&prof[x][y], &prof[y][z], bound);
                    for (slot, cand) in prof[x][z].iter_mut().zip(via) {
                        if cand < *slot {
                            *slot = cand;
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let dist = prof
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| WittElem::eval_witt(p, degree_bound))
                .collect()
        })
        .collect();
    WCategory::new(point_names(n), dist).expect("square table with a common bound")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_categories_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let x = metric(&mut rng, 4);
            assert!(x.validate().passed());
            let w = w_category(&mut rng, 3, 5);
            let report = w.validate();
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn wl_l_members_are_members() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let f = wl_l_member(&mut rng, 6);
            assert!(f.in_wl_l());
            assert!(f.validate_hom().passed());
        }
    }
}
