use proptest::prelude::*;

use super::*;
use crate::precision::make_context;
use crate::Mp;

fn ctx40() -> PrecisionContext {
    make_context(40).unwrap()
}

fn close(a: &Mp, b: &Mp, tol: i32) -> bool {
    let d = (a.clone() - b).abs();
    d < Mp::pow10(-tol, a.prec())
}

fn m(ctx: &PrecisionContext, n: i64, d: i64) -> Mp {
    ctx.ratio(n, d)
}

#[test]
fn zeta_anchors() {
    let ctx = ctx40();
    let b = ctx.bits();
    let pi = Mp::pi(b);
    let z2: Mp = riemann_zeta(2, &ctx, false).unwrap();
    assert!(close(&z2, &(pi.clone() * &pi / m(&ctx, 6, 1)), 42));
    let z4: Mp = riemann_zeta(4, &ctx, false).unwrap();
    assert!(close(&z4, &(pi.clone().powi(4) / m(&ctx, 90, 1)), 42));
    let z0: Mp = riemann_zeta(0, &ctx, true).unwrap();
    assert_eq!(z0, m(&ctx, -1, 2));
    let z1: Mp = riemann_zeta(1, &ctx, true).unwrap();
    assert!(z1.is_zero());
    assert!(riemann_zeta::<Mp>(1, &ctx, false).is_err());
    assert!(riemann_zeta::<Mp>(-2, &ctx, true).is_err());
    let z3: Mp = riemann_zeta(3, &ctx, false).unwrap();
    assert!(z3.to_sci_string(30).starts_with("1.20205690315959428539973816"));
}

#[test]
fn hurwitz_anchors() {
    let ctx = ctx40();
    let pi = Mp::pi(ctx.bits());
    let v: Mp = hurwitz_zeta_int(2, &m(&ctx, 3, 2), &ctx).unwrap();
    let expect = pi.clone() * &pi / m(&ctx, 2, 1) - m(&ctx, 4, 1);
    assert!(close(&v, &expect, 42));
    let q = m(&ctx, 1, 4);
    let v: Mp = hurwitz_zeta_int(2, &q, &ctx).unwrap();
    // ζ(2,1/4) = π² + 8G with Catalan's constant G.
    let catalan = Mp::parse_decimal("0.91596559417721901505460351493238411077414937428167", ctx.bits()).unwrap();
    assert!(close(&v, &(pi.clone() * &pi + catalan * m(&ctx, 8, 1)), 42));
    assert!(hurwitz_zeta_int::<Mp>(1, &q, &ctx).is_err());
    assert!(hurwitz_zeta_int::<Mp>(2, &m(&ctx, 0, 1), &ctx).is_err());
}

#[test]
fn hurwitz_real_s_matches_direct_sum() {
    let ctx = make_context(20).unwrap();
    let s = m(&ctx, 7, 2);
    let q = m(&ctx, 2, 3);
    let v: Mp = hurwitz_zeta(&s, &q, &ctx).unwrap();
    // Σ_{n<N} (n+q)^-s + ∫_N^∞ (t+q)^-s dt + (N+q)^-s/2 + s(N+q)^-s-1/12
    let n = 2000;
    let mut acc = Mp::zero(ctx.bits());
    for k in 0..n {
        acc += (q.clone() + m(&ctx, k, 1)).powf(&-s.clone());
    }
    let w = q.clone() + m(&ctx, n, 1);
    let sm1 = s.clone() - m(&ctx, 1, 1);
    acc += w.clone().powf(&-sm1.clone()) / sm1;
    acc += w.clone().powf(&-s.clone()) / m(&ctx, 2, 1);
    acc += s.clone() * w.clone().powf(&-(s.clone() + m(&ctx, 1, 1))) / m(&ctx, 12, 1);
    assert!(close(&v, &acc, 20), "{v} vs {acc}");
}

#[test]
fn alt_zeta_values() {
    let ctx = ctx40();
    let b = ctx.bits();
    let pi = Mp::pi(b);
    let v: Mp = alt_zeta(1, &ctx).unwrap();
    assert!(close(&v, &Mp::ln2(b), 45));
    let v: Mp = alt_zeta(2, &ctx).unwrap();
    assert!(close(&v, &(pi.clone() * &pi / m(&ctx, 12, 1)), 42));
    let z3: Mp = riemann_zeta(3, &ctx, false).unwrap();
    let v: Mp = alt_zeta(3, &ctx).unwrap();
    assert!(close(&v, &(z3 * m(&ctx, 3, 4)), 42));
    assert!(alt_zeta::<Mp>(0, &ctx).is_err());
}

#[test]
fn alt_hurwitz_values() {
    let ctx = ctx40();
    let b = ctx.bits();
    let pi = Mp::pi(b);
    let one = m(&ctx, 1, 1);
    let v: Mp = alt_hurwitz_zeta(1, &one, &ctx).unwrap();
    assert!(close(&v, &Mp::ln2(b), 42));
    let v: Mp = alt_hurwitz_zeta(2, &one, &ctx).unwrap();
    assert!(close(&v, &(pi.clone() * &pi / m(&ctx, 12, 1)), 42));
    // Σ (−1)^(n−1)/(n+1/2) = 2 − π/2
    let v: Mp = alt_hurwitz_zeta(1, &m(&ctx, 3, 2), &ctx).unwrap();
    assert!(close(&v, &(m(&ctx, 2, 1) - pi.clone() / m(&ctx, 2, 1)), 42));
    // Σ (−1)^(n−1)/(n−1/2)^2 = 4G
    let catalan = Mp::parse_decimal("0.91596559417721901505460351493238411077414937428167", b).unwrap();
    let v: Mp = alt_hurwitz_zeta(2, &m(&ctx, 1, 2), &ctx).unwrap();
    assert!(close(&v, &(catalan * m(&ctx, 4, 1)), 42));
}

#[test]
fn alt_hurwitz_matches_paired_brute_sum() {
    let ctx = make_context(30).unwrap();
    let q = m(&ctx, 7, 3);
    let v: Mp = alt_hurwitz_zeta(3, &q, &ctx).unwrap();
    // Paired terms decay like n^-4; add an Euler-transform style half-term tail.
    let mut acc = Mp::zero(ctx.bits());
    let n = 20000i64;
    for k in 0..n {
        let t = (q.clone() + m(&ctx, k, 1)).powi(-3);
        if k % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    // Remaining alternating tail starts with a + sign: ≈ f(N)/2 − f'(N)/4.
    let w = q.clone() + m(&ctx, n, 1);
    acc += w.clone().powi(-3) / m(&ctx, 2, 1) + m(&ctx, 3, 4) * w.powi(-4);
    assert!(close(&v, &acc, 18), "{v} vs {acc}");
}

#[test]
fn digamma_anchors() {
    let ctx = ctx40();
    let b = ctx.bits();
    let g = Mp::euler_gamma(b);
    let v: Mp = digamma(&m(&ctx, 1, 1), &ctx).unwrap();
    assert!(close(&v, &-g.clone(), 42));
    let v: Mp = digamma(&m(&ctx, 2, 1), &ctx).unwrap();
    assert!(close(&v, &(m(&ctx, 1, 1) - &g), 42));
    let v: Mp = digamma(&m(&ctx, 1, 2), &ctx).unwrap();
    let expect = -g.clone() - Mp::ln2(b) * m(&ctx, 2, 1);
    assert!(close(&v, &expect, 42));
    // ψ(1/3) = −γ − π/(2√3) − (3/2) ln 3
    let v: Mp = digamma(&m(&ctx, 1, 3), &ctx).unwrap();
    let three = m(&ctx, 3, 1);
    let expect = -g - Mp::pi(b) / (three.clone().sqrt() * m(&ctx, 2, 1)) - Real::ln(&three) * m(&ctx, 3, 2);
    assert!(close(&v, &expect, 42));
    assert!(digamma::<Mp>(&m(&ctx, 0, 1), &ctx).is_err());
    assert!(digamma::<Mp>(&m(&ctx, -1, 2), &ctx).is_err());
}

#[test]
fn polygamma_anchors() {
    let ctx = ctx40();
    let pi = Mp::pi(ctx.bits());
    let v: Mp = polygamma(1, &m(&ctx, 1, 1), &ctx).unwrap();
    assert!(close(&v, &(pi.clone() * &pi / m(&ctx, 6, 1)), 42));
    let z3: Mp = riemann_zeta(3, &ctx, false).unwrap();
    let v: Mp = polygamma(2, &m(&ctx, 1, 1), &ctx).unwrap();
    assert!(close(&v, &(z3 * m(&ctx, -2, 1)), 42));
}

#[test]
fn cot_values() {
    let ctx = ctx40();
    let pi = Mp::pi(ctx.bits());
    let v: Mp = pi_cot_pi(&m(&ctx, 1, 2), &ctx).unwrap();
    assert!(v.abs() < Mp::pow10(-45, ctx.bits()));
    let v: Mp = pi_cot_pi(&m(&ctx, 1, 4), &ctx).unwrap();
    assert!(close(&v, &pi, 42));
    let v: Mp = pi_cot_pi(&m(&ctx, -7, 4), &ctx).unwrap();
    assert!(close(&v, &pi, 42));
    let a = m(&ctx, 3, 10);
    let v: Mp = pi_cot_pi(&a, &ctx).unwrap();
    let refl: Mp = digamma(&m(&ctx, 7, 10), &ctx).unwrap() - digamma(&a, &ctx).unwrap();
    assert!(close(&v, &refl, 42));
    assert!(pi_cot_pi::<Mp>(&m(&ctx, 2, 1), &ctx).is_err());
}

#[test]
fn polylog_values() {
    let ctx = ctx40();
    let b = ctx.bits();
    let pi = Mp::pi(b);
    let zero = m(&ctx, 0, 1);
    let half = m(&ctx, 1, 2);
    let v: Mp = param_polylog(1, &zero, &half, &ctx).unwrap();
    assert!(close(&v, &Mp::ln2(b), 42));
    let ln2 = Mp::ln2(b);
    let v: Mp = param_polylog(2, &zero, &half, &ctx).unwrap();
    let expect = pi.clone() * &pi / m(&ctx, 12, 1) - ln2.clone() * &ln2 / m(&ctx, 2, 1);
    assert!(close(&v, &expect, 42));
    let one = m(&ctx, 1, 1);
    let v: Mp = param_polylog(2, &zero, &one, &ctx).unwrap();
    assert!(close(&v, &(pi.clone() * &pi / m(&ctx, 6, 1)), 42));
    let v: Mp = param_polylog(2, &half, &-one.clone(), &ctx).unwrap();
    let expect: Mp = -alt_hurwitz_zeta(2, &m(&ctx, 3, 2), &ctx).unwrap();
    assert!(close(&v, &expect, 42));
    // Σ xⁿ/(n+1) = (−ln(1−x) − x)/x
    let x = m(&ctx, 9, 10);
    let v: Mp = param_polylog(1, &one, &x, &ctx).unwrap();
    let expect = (-Real::ln(&(one.clone() - &x)) - &x) / &x;
    assert!(close(&v, &expect, 42));
    assert!(param_polylog::<Mp>(1, &zero, &one, &ctx).is_err());
    assert!(param_polylog::<Mp>(2, &m(&ctx, -1, 1), &half, &ctx).is_err());
}

#[test]
fn h_cap_values() {
    let ctx = ctx40();
    let one = m(&ctx, 1, 1);
    let zero = m(&ctx, 0, 1);
    let z2: Mp = riemann_zeta(2, &ctx, false).unwrap();
    let v: Mp = h_cap(2, &one, &zero, &ctx).unwrap();
    assert!(close(&v, &z2, 42));
    let v: Mp = h_cap(1, &m(&ctx, 1, 2), &zero, &ctx).unwrap();
    assert!(close(&v, &Mp::ln2(ctx.bits()), 42));
    let a = m(&ctx, 1, 4);
    let v: Mp = h_cap(2, &one, &a, &ctx).unwrap();
    let expect: Mp = hurwitz_zeta_int(2, &m(&ctx, 5, 4), &ctx).unwrap();
    assert!(close(&v, &expect, 42));
    assert!(h_cap::<Mp>(2, &m(&ctx, -1, 2), &a, &ctx).is_err());
    assert!(h_cap::<Mp>(1, &one, &zero, &ctx).is_err());
}

#[test]
fn aux_sum_values() {
    let ctx = ctx40();
    let b = ctx.bits();
    let v: Mp = aux_sum_reciprocal(&m(&ctx, 1, 1), &ctx).unwrap();
    assert!(close(&v, &m(&ctx, 1, 1), 42));
    let v: Mp = aux_sum_reciprocal(&m(&ctx, 1, 2), &ctx).unwrap();
    assert!(close(&v, &(m(&ctx, 4, 1) - Mp::ln2(b) * m(&ctx, 4, 1)), 42));
    let v: Mp = aux_sum_reciprocal(&m(&ctx, -1, 2), &ctx).unwrap();
    assert!(close(&v, &(Mp::ln2(b) * m(&ctx, 4, 1)), 42));
    assert!(aux_sum_reciprocal::<Mp>(&m(&ctx, 0, 1), &ctx).is_err());
    assert!(aux_sum_reciprocal::<Mp>(&m(&ctx, -1, 1), &ctx).is_err());
}

#[test]
fn f64_instantiation() {
    let ctx = make_context(10).unwrap();
    let v: f64 = hurwitz_zeta_int(2, &1.0, &ctx).unwrap();
    assert!((v - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
    let v: f64 = digamma(&1.0, &ctx).unwrap();
    assert!((v + 0.577_215_664_901_532_9).abs() < 1e-14);
}

fn ctx30() -> PrecisionContext {
    make_context(30).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hurwitz_shift(s in 2u32..7, qn in 1i64..400) {
        let ctx = ctx30();
        let q = m(&ctx, qn, 37);
        let a: Mp = hurwitz_zeta_int(s, &q, &ctx).unwrap();
        let b: Mp = hurwitz_zeta_int(s, &(q.clone() + m(&ctx, 1, 1)), &ctx).unwrap();
        let expect = q.powi(-(s as i32));
        prop_assert!(close(&(a - b), &expect, 33));
    }

    #[test]
    fn digamma_reflection(xn in 1i64..99) {
        prop_assume!(xn != 50);
        let ctx = ctx30();
        let x = m(&ctx, xn, 100);
        let one = m(&ctx, 1, 1);
        let lhs: Mp = digamma(&(one - &x), &ctx).unwrap() - digamma(&x, &ctx).unwrap();
        let rhs: Mp = pi_cot_pi(&x, &ctx).unwrap();
        prop_assert!(close(&lhs, &rhs, 32));
    }

    #[test]
    fn digamma_recurrence(xn in 1i64..500) {
        let ctx = ctx30();
        let x = m(&ctx, xn, 23);
        let a: Mp = digamma(&(x.clone() + m(&ctx, 1, 1)), &ctx).unwrap();
        let b: Mp = digamma(&x, &ctx).unwrap();
        prop_assert!(close(&(a - b), &(m(&ctx, 1, 1) / &x), 32));
    }

    #[test]
    fn polygamma_derivative_of_digamma(xn in 5i64..200) {
        let ctx = ctx30();
        let x = m(&ctx, xn, 17);
        let h = Mp::pow10(-8, ctx.bits());
        let up: Mp = digamma(&(x.clone() + &h), &ctx).unwrap();
        let down: Mp = digamma(&(x.clone() - &h), &ctx).unwrap();
        let fd = (up - down) / (h * m(&ctx, 2, 1));
        let p1: Mp = polygamma(1, &x, &ctx).unwrap();
        prop_assert!(close(&fd, &p1, 12));
    }

    #[test]
    fn alt_zeta_relation(s in 2i64..12) {
        let ctx = ctx30();
        let z: Mp = riemann_zeta(s, &ctx, false).unwrap();
        let az: Mp = alt_zeta(s, &ctx).unwrap();
        let factor = m(&ctx, 1, 1) - m(&ctx, 2, 1).powi(1 - s as i32);
        prop_assert!(close(&az, &(factor * z), 33));
    }

    #[test]
    fn polylog_derivative_recurrence(s in 2u32..5, xn in 5i64..90) {
        let ctx = ctx30();
        let zero = m(&ctx, 0, 1);
        let x = m(&ctx, xn, 100);
        let h = Mp::pow10(-10, ctx.bits());
        let up: Mp = param_polylog(s, &zero, &(x.clone() + &h), &ctx).unwrap();
        let down: Mp = param_polylog(s, &zero, &(x.clone() - &h), &ctx).unwrap();
        let lhs = x.clone() * (up - down) / (h * m(&ctx, 2, 1));
        let rhs: Mp = param_polylog(s - 1, &zero, &x, &ctx).unwrap();
        prop_assert!(close(&lhs, &rhs, 14));
    }
}
