//! Exact even-index Bernoulli numbers and their converted scalar tables.

use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cache;
use crate::scalar::Real;

fn exact_store() -> &'static RwLock<Vec<BigRational>> {
    static STORE: OnceLock<RwLock<Vec<BigRational>>> = OnceLock::new();
    STORE.get_or_init(|| RwLock::new(Vec::new()))
}

/// `B_2, B_4, …, B_{2n}` via tangent numbers (Brent–Harvey, integer only).
fn compute_even(n: usize) -> Vec<BigRational> {
    let mut t: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    if n == 0 {
        return Vec::new();
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * BigInt::from(k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * BigInt::from(j - k) + &t[j] * BigInt::from(j - k + 2);
        }
    }
    (1..=n)
        .map(|k| {
            let four_k = BigInt::one() << (2 * k);
            let den = &four_k * (&four_k - BigInt::one());
            let mut num = &t[k] * BigInt::from(2 * k);
            if k % 2 == 0 {
                num = -num;
            }
            BigRational::new(num, den)
        })
        .collect()
}

/// Exact `B_{2k}` for `k = 1..=count`, index 0 holding `B_2`.
fn even_exact(count: usize) -> Vec<BigRational> {
    {
        let guard = exact_store().read().expect("bernoulli lock");
        if guard.len() >= count {
            return guard[..count].to_vec();
        }
    }
    let want = count.next_multiple_of(64);
    let fresh = compute_even(want);
    let mut guard = exact_store().write().expect("bernoulli lock");
    if guard.len() < fresh.len() {
        *guard = fresh;
    }
    guard[..count].to_vec()
}

/// Exact Bernoulli number `B_n` with the convention `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> BigRational {
    match n {
        0 => BigRational::one(),
        1 => BigRational::new(BigInt::from(-1), BigInt::from(2)),
        _ if n % 2 == 1 => BigRational::zero(),
        _ => even_exact(n / 2)[n / 2 - 1].clone(),
    }
}

/// Scalar coefficient tables derived from the even Bernoulli numbers.
#[derive(Debug)]
pub struct BernoulliTable<T> {
    /// `B_{2k} / (2k)!` at index `k - 1`.
    pub over_factorial: Vec<T>,
    /// `B_{2k} / (2k)` at index `k - 1`.
    pub over_index: Vec<T>,
}

/// At least `count` entries of the scaled tables at precision `bits`.
pub fn bernoulli_table<T: Real>(count: usize, bits: u32) -> Arc<BernoulliTable<T>> {
    let rounded = count.max(1).next_multiple_of(32);
    cache::shared("bernoulli", bits, rounded as u64, || {
        let exact = even_exact(rounded);
        let mut fact = BigInt::one();
        let mut over_factorial = Vec::with_capacity(rounded);
        let mut over_index = Vec::with_capacity(rounded);
        for (i, b) in exact.iter().enumerate() {
            let k = 2 * (i + 1);
            fact *= BigInt::from(k - 1) * BigInt::from(k);
            over_factorial.push(T::from_big_rational(
                &(b / BigRational::from_integer(fact.clone())),
                bits,
            ));
            over_index.push(T::from_big_rational(
                &(b / BigRational::from_integer(BigInt::from(k))),
                bits,
            ));
        }
        BernoulliTable {
            over_factorial,
            over_index,
        }
    })
}
