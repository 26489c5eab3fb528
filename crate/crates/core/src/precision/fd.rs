//! Central finite-difference weights on the integer stencil `-M..=M`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cache;
use crate::scalar::Real;

/// Fornberg's recursion in exact rationals; result indexed `[order][node]`.
fn exact_weights(half_width: usize, max_order: usize) -> Vec<Vec<BigRational>> {
    let xs: Vec<BigRational> = (-(half_width as i64)..=half_width as i64)
        .map(|v| BigRational::from_integer(BigInt::from(v)))
        .collect();
    let n = xs.len();
    let m = max_order;
    let mut c = vec![vec![BigRational::zero(); m + 1]; n];
    c[0][0] = BigRational::one();
    let mut c1 = BigRational::one();
    let mut c4 = xs[0].clone();
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = BigRational::one();
        let c5 = c4.clone();
        c4 = xs[i].clone();
        for j in 0..i {
            let c3 = &xs[i] - &xs[j];
            c2 = &c2 * &c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    let kq = BigRational::from_integer(BigInt::from(k));
                    c[i][k] = &c1 * (kq * &c[i - 1][k - 1] - &c5 * &c[i - 1][k]) / &c2;
                }
                c[i][0] = -(&c1 * &c5 * &c[i - 1][0]) / &c2;
            }
            for k in (1..=mn).rev() {
                let kq = BigRational::from_integer(BigInt::from(k));
                c[j][k] = (&c4 * &c[j][k] - kq * &c[j][k - 1]) / &c3;
            }
            c[j][0] = &c4 * &c[j][0] / &c3;
        }
        c1 = c2;
    }
    (0..=m)
        .map(|k| (0..n).map(|j| c[j][k].clone()).collect())
        .collect()
}

/// Weights `w[k][j]` such that `f^(k)(x) ≈ Σ_j w[k][j] f(x + j - M)`.
pub fn fd_weights<T: Real>(half_width: usize, max_order: usize, bits: u32) -> Arc<Vec<Vec<T>>> {
    let key = (half_width as u64) << 32 | max_order as u64;
    cache::shared("fd-weights", bits, key, || {
        let exact = cache::shared::<Vec<Vec<BigRational>>, _>("fd-exact", 0, key, || {
            exact_weights(half_width, max_order)
        });
        exact
            .iter()
            .map(|row| row.iter().map(|w| T::from_big_rational(w, bits)).collect())
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_point_stencil() {
        let w = exact_weights(1, 2);
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(w[0], vec![q(0, 1), q(1, 1), q(0, 1)]);
        assert_eq!(w[1], vec![q(-1, 2), q(0, 1), q(1, 2)]);
        assert_eq!(w[2], vec![q(1, 1), q(-2, 1), q(1, 1)]);
    }

    #[test]
    fn differentiates_polynomials_exactly() {
        // Weights of order k applied to x^k must give k!, and vanish on x^j, j<k.
        let w = exact_weights(4, 6);
        for k in 0..=6usize {
            for p in 0..=8usize {
                let acc: BigRational = (-4i64..=4)
                    .zip(&w[k])
                    .map(|(x, c)| c * BigRational::from_integer(BigInt::from(x).pow(p as u32)))
                    .sum();
                let expect = if p == k {
                    BigRational::from_integer((1..=k).map(BigInt::from).product())
                } else if p < k {
                    BigRational::zero()
                } else {
                    continue;
                };
                assert_eq!(acc, expect, "order {k} on x^{p}");
            }
        }
    }

    #[test]
    fn derivative_of_reciprocal() {
        let w = fd_weights::<f64>(12, 3, 53);
        let f = |t: f64| 1.0 / (t * t);
        let x = 200.0;
        let d1: f64 = (0..25).map(|j| w[1][j] * f(x + j as f64 - 12.0)).sum();
        assert!((d1 - (-2.0 / (x * x * x))).abs() < 1e-12 * 2.0 / (x * x * x));
    }
}
