//! Exact harmonic numbers, unsigned Stirling numbers of the first kind and
//! the rational identities that connect them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;
use crate::scalar::Real;

/// Reduced fraction with a positive denominator.
pub type ExactRational = BigRational;

type PrefixStore = RwLock<HashMap<(u32, bool), Arc<Vec<BigRational>>>>;

fn prefix_store() -> &'static PrefixStore {
    static STORE: OnceLock<PrefixStore> = OnceLock::new();
    STORE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Prefix sums `Σ_{j≤i} (±1)^(j−1)/j^k` for `i = 0..=n`, grown on demand.
fn prefixes(n: usize, k: u32, alternating: bool) -> Arc<Vec<BigRational>> {
    let key = (k, alternating);
    if let Some(v) = prefix_store().read().expect("harmonic lock").get(&key) {
        if v.len() > n {
            return v.clone();
        }
    }
    let mut guard = prefix_store().write().expect("harmonic lock");
    let entry = guard
        .entry(key)
        .or_insert_with(|| Arc::new(vec![BigRational::zero()]));
    if entry.len() <= n {
        let mut v = (**entry).clone();
        let target = (n + 1).next_power_of_two().max(64);
        while v.len() < target {
            let j = v.len();
            let mut term = BigRational::new(BigInt::one(), BigInt::from(j).pow(k));
            if alternating && j % 2 == 0 {
                term = -term;
            }
            let next = v[j - 1].clone() + term;
            v.push(next);
        }
        *entry = Arc::new(v);
    }
    entry.clone()
}

/// `ζ_n(k) = Σ_{j=1}^n 1/j^k`, with `ζ_0(k) = 0`.
pub fn harmonic(n: u64, k: u32) -> Result<ExactRational> {
    if k == 0 {
        return Err(Error::domain("harmonic", "order k must be at least 1"));
    }
    Ok(prefixes(n as usize, k, false)[n as usize].clone())
}

/// `L_n(k) = Σ_{j=1}^n (−1)^(j−1)/j^k`, with `L_0(k) = 0`.
pub fn alt_harmonic(n: u64, k: u32) -> Result<ExactRational> {
    if k == 0 {
        return Err(Error::domain("alt_harmonic", "order k must be at least 1"));
    }
    Ok(prefixes(n as usize, k, true)[n as usize].clone())
}

/// Triangle of unsigned first-kind Stirling numbers `s(n, k)`, `0 ≤ k ≤ n ≤ max_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct StirlingTable {
    max_n: usize,
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    /// Builds rows `0..=max_n` with `s(n+1, k) = s(n, k−1) + n·s(n, k)`.
    pub fn build(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigUint::one()]);
        for n in 0..max_n {
            let prev = &rows[n];
            let mut row = vec![BigUint::zero(); n + 2];
            for k in 1..=n + 1 {
                let left = &prev[k - 1];
                let stay = prev.get(k).map(|v| v * BigUint::from(n)).unwrap_or_default();
                row[k] = left + stay;
            }
            rows.push(row);
        }
        Self { max_n, rows }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// `s(n, k)`; zero outside the triangle.
    ///
    /// # Panics
    /// When `n` exceeds `max_n`.
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        assert!(n <= self.max_n, "row {n} beyond table size {}", self.max_n);
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    /// Row `n` as `[s(n,0), …, s(n,n)]`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    /// Re-checks the defining recurrence for every stored entry.
    pub fn check_recurrence(&self) -> bool {
        (1..=self.max_n).all(|n| {
            (0..=n).all(|k| {
                let expect = if k == 0 {
                    BigUint::zero()
                } else {
                    self.get(n - 1, k - 1) + self.get(n - 1, k) * BigUint::from(n - 1)
                };
                self.get(n, k) == expect
            })
        })
    }
}

fn shared_table(n: usize) -> Arc<StirlingTable> {
    static TABLE: OnceLock<RwLock<Arc<StirlingTable>>> = OnceLock::new();
    let lock = TABLE.get_or_init(|| RwLock::new(Arc::new(StirlingTable::build(64))));
    {
        let t = lock.read().expect("stirling lock");
        if t.max_n >= n {
            return t.clone();
        }
    }
    let mut guard = lock.write().expect("stirling lock");
    if guard.max_n < n {
        *guard = Arc::new(StirlingTable::build(n.next_power_of_two()));
    }
    guard.clone()
}

/// Unsigned Stirling number of the first kind `s(n, k)` from a memoized table.
pub fn stirling1(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    shared_table(n).get(n, k)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

fn frac(num: BigUint, den: BigInt) -> BigRational {
    BigRational::new(BigInt::from(num), den)
}

/// Checks `Σ_{j=1}^n s(j,p)/j! = s(n+1,p+1)/n!` and, for `p ≥ 2`,
/// `Σ_{j=1}^{n−1} H_j s(n−j,p−1)/(n−j)! = p·s(n+1,p+1)/n!` exactly.
pub fn verify_stirling_sums(n: usize, p: usize) -> Result<bool> {
    if n == 0 || p == 0 {
        return Err(Error::domain("verify_stirling_sums", "n and p must be at least 1"));
    }
    let table = shared_table(n + 1);
    let rhs = frac(table.get(n + 1, p + 1), factorial(n));
    let lhs: BigRational = (1..=n)
        .map(|j| frac(table.get(j, p), factorial(j)))
        .sum();
    if lhs != rhs {
        return Ok(false);
    }
    if p < 2 {
        return Ok(true);
    }
    let mut lhs = BigRational::zero();
    for j in 1..n {
        let h = harmonic(j as u64, 1)?;
        lhs += h * frac(table.get(n - j, p - 1), factorial(n - j));
    }
    Ok(lhs == rhs * BigRational::from_integer(BigInt::from(p)))
}

/// Checks the expressions of `s(n, 1..=5)` through `H_{n−1}` and
/// `ζ_{n−1}(2..=4)` exactly.
pub fn verify_stirling_closed_forms(n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::domain("verify_stirling_closed_forms", "n must be at least 1"));
    }
    let m = (n - 1) as u64;
    let h = harmonic(m, 1)?;
    let z2 = harmonic(m, 2)?;
    let z3 = harmonic(m, 3)?;
    let z4 = harmonic(m, 4)?;
    let f = BigRational::from_integer(factorial(n - 1));
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let h2 = &h * &h;
    let h3 = &h2 * &h;
    let h4 = &h3 * &h;
    let forms = [
        f.clone(),
        &f * &h,
        &f / int(2) * (&h2 - &z2),
        &f / int(6) * (&h3 - int(3) * &h * &z2 + int(2) * &z3),
        &f / int(24)
            * (&h4 - int(6) * &z4 - int(6) * &h2 * &z2 + int(3) * &z2 * &z2 + int(8) * &h * &z3),
    ];
    Ok(forms
        .iter()
        .enumerate()
        .all(|(i, v)| *v == BigRational::from_integer(BigInt::from(stirling1(n, i + 1)))))
}

/// Checks `Σ_{j=1}^{n−1} H_j/(n−j) = H_n² − ζ_n(2)` and
/// `Σ_{k=1}^n H_k/k = (H_n² + ζ_n(2))/2` exactly.
pub fn verify_harmonic_convolutions(n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::domain("verify_harmonic_convolutions", "n must be at least 1"));
    }
    let hn = harmonic(n as u64, 1)?;
    let zn = harmonic(n as u64, 2)?;
    let hn2 = &hn * &hn;
    let mut first = BigRational::zero();
    for j in 1..n {
        first += harmonic(j as u64, 1)? / BigRational::from_integer(BigInt::from(n - j));
    }
    let mut second = BigRational::zero();
    for k in 1..=n {
        second += harmonic(k as u64, 1)? / BigRational::from_integer(BigInt::from(k));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    Ok(first == &hn2 - &zn && second == (&hn2 + &zn) / two)
}

/// `ζ_n(p, a+1) = Σ_{k=1}^n 1/(k+a)^p` by direct summation.
pub fn partial_hurwitz<T: Real>(n: u64, p: u32, a: &T, ctx: &PrecisionContext) -> Result<T> {
    let bits = ctx.bits();
    if !(a.clone() > -T::one(bits)) {
        return Err(Error::domain("partial_hurwitz", format!("a = {a} must exceed −1")));
    }
    if p == 0 {
        return Err(Error::domain("partial_hurwitz", "p must be at least 1"));
    }
    let mut acc = T::zero(bits);
    for k in 1..=n {
        acc += (T::from_i64(k as i64, bits) + a).powi(-(p as i32));
    }
    Ok(acc)
}
