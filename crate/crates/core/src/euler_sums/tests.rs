use proptest::prelude::*;

use super::*;
use crate::precision::{make_context, sum_series, SmoothTerm};
use crate::{Mp, PrecisionContext};

const ZETA3: &str = "1.2020569031595942853997381615114499907649862923404988817922715553";

fn pt(text: &str) -> ParamPoint {
    text.parse().unwrap()
}

fn lhs(id: &str, at: &str, ctx: &PrecisionContext) -> SeriesValue<Mp> {
    brute_lhs::<Mp>(id, &pt(at), ctx).unwrap()
}

fn rhs(id: &str, at: &str, ctx: &PrecisionContext) -> SeriesValue<Mp> {
    closed_rhs::<Mp>(id, &pt(at), ctx).unwrap()
}

fn passes(id: &str, at: &str, ctx: &PrecisionContext) -> VerificationResult<Mp> {
    let entry = find::<Mp>(id).unwrap();
    verify_identity(&entry, &pt(at), ctx).unwrap()
}

fn pi4(ctx: &PrecisionContext) -> Mp {
    Mp::pi(ctx.bits()).powi(4)
}

#[test]
fn registry_ids_are_unique_and_complete() {
    let ids = identity_ids();
    assert_eq!(ids.len(), 31);
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    assert_eq!(ids.first(), Some(&"E2.13"));
    assert_eq!(ids.last(), Some(&"EL.s"));
    let e = find::<f64>("E4.13").unwrap();
    assert_eq!(format!("{} — {}", e.id, e.equation), "E4.13 — Eq. (4.13)");
}

#[test]
fn harmonic_over_shifted_square_is_zeta3() {
    let ctx = make_context(50).unwrap();
    let z3 = Mp::parse_decimal(ZETA3, ctx.bits()).unwrap();
    let tol = Mp::pow10(-45, ctx.bits());
    assert!((lhs("E2.24", "a=1,s=2", &ctx).value - &z3).abs() < tol);
    assert!((rhs("E2.24", "a=1,s=2", &ctx).value - &z3).abs() < tol);
}

#[test]
fn harmonic_over_shifted_square_crude_f64() {
    // Partial sum plus the leading asymptotic tail (ln N + γ + 1)/N.
    let n_max = 200_000u32;
    let mut h = 0.0f64;
    let mut sum = 0.0f64;
    for n in 1..=n_max {
        h += 1.0 / f64::from(n);
        sum += h / (f64::from(n) + 1.0).powi(2);
    }
    let n = f64::from(n_max);
    sum += (n.ln() + 0.577_215_664_901_532_9 + 1.0) / n;
    let z3 = ZETA3.parse::<f64>().unwrap();
    assert!((sum - z3).abs() < 1e-8, "{sum} vs {z3}");
}

#[test]
fn harmonic_cube_weight_is_pi4_over_72() {
    let ctx = make_context(40).unwrap();
    let want = pi4(&ctx) / Mp::from_i64(72, ctx.bits());
    let tol = Mp::pow10(-40, ctx.bits());
    assert!((lhs("EH.s", "s=3", &ctx).value - &want).abs() < tol);
    assert!((rhs("EH.s", "s=3", &ctx).value - &want).abs() < tol);
}

#[test]
fn quadratic_sum_at_zero_is_pi4_over_24() {
    // (3/2)(17/4 − 7/4) ζ(4) with ζ(4) = π⁴/90.
    let ctx = make_context(40).unwrap();
    let want = pi4(&ctx) / Mp::from_i64(24, ctx.bits());
    let tol = Mp::pow10(-38, ctx.bits());
    assert!((lhs("E3.12", "s=2", &ctx).value - &want).abs() < tol);
    assert!((rhs("E3.12", "s=2", &ctx).value - &want).abs() < tol);
}

#[test]
fn quartic_relation_degenerates_at_zero() {
    let ctx = make_context(40).unwrap();
    let tol = Mp::pow10(-38, ctx.bits());
    assert!(lhs("E4.13", "a=0", &ctx).value.abs() < tol);
    assert!(rhs("E4.13", "a=0", &ctx).value.abs() < tol);
}

#[test]
fn reference_points_pass() {
    let ctx = make_context(40).unwrap();
    for (id, at) in [("E2.16", "a=1/4,m=1"), ("E4.15", "a=1/2,m=2"), ("E2.22", "a=0,s=3")] {
        let r = passes(id, at, &ctx);
        assert!(r.pass, "{id} {at}: residual {}", r.residual.to_f64());
    }
}

#[test]
fn alternating_prefix_at_zero_matches_closed_form() {
    let ctx = make_context(40).unwrap();
    let tol = Mp::pow10(-38, ctx.bits());
    let shifted = rhs("E2.22", "a=0,s=3", &ctx).value;
    assert!((shifted.clone() - lhs("EL.s", "s=3", &ctx).value).abs() < tol);
    assert!((shifted - rhs("EL.s", "s=3", &ctx).value).abs() < tol);
}

#[test]
fn swapping_pairs_negates_both_sides() {
    let ctx = make_context(30).unwrap();
    let tol = Mp::pow10(-28, ctx.bits());
    let fwd = "a=1/4,b=1/3,x=1/2,m=1,p=2";
    let rev = "a=1/3,b=1/4,x=1/2,m=2,p=1";
    let l = lhs("E4.7", fwd, &ctx).value + lhs("E4.7", rev, &ctx).value;
    let r = rhs("E4.7", fwd, &ctx).value + rhs("E4.7", rev, &ctx).value;
    assert!(l.abs() < tol && r.abs() < tol);
    assert!(lhs("E4.7", fwd, &ctx).value.abs() > Mp::pow10(-3, ctx.bits()));
}

/// Direct partial sum to `N` plus the smooth tail from `N+1`, against the
/// accelerated left side.
fn check_split(id: &str, at: &str, decay: f64, f: impl Fn(&Mp, &PrecisionContext) -> Mp + Send + Sync) {
    let ctx = make_context(30).unwrap();
    let n_max = 10_000i64;
    let mut head = Mp::zero(ctx.bits());
    for n in 1..=n_max {
        head += f(&ctx.num(n), &ctx);
    }
    let shift: Mp = ctx.num(n_max);
    let tail = sum_series(SmoothTerm::new(decay, |t: &Mp| f(&(t.clone() + &shift), &ctx)), &ctx).unwrap();
    let fast = lhs(id, at, &ctx);
    let slack = Mp::pow10(-28, ctx.bits()) + &tail.tail_bound + &fast.tail_bound;
    assert!((head + tail.value - fast.value).abs() < slack, "{id} {at}");
}

#[test]
fn direct_and_accelerated_sums_agree() {
    let h = |t: &Mp, ctx: &PrecisionContext| harmonic_ext(t, ctx).unwrap();
    let z = |p: u32, a: &Mp, t: &Mp, ctx: &PrecisionContext| partial_hurwitz_ext(p, a, t, ctx).unwrap();
    check_split("E2.24", "a=1/3,s=2", 1.5, |t, ctx| {
        h(t, ctx) / (t.clone() + ctx.ratio::<Mp>(1, 3)).powi(2)
    });
    check_split("E3.1", "a=1/2,s=3", 2.5, |t, ctx| {
        let hv = h(t, ctx);
        let z2 = z(2, &Mp::zero(ctx.bits()), t, ctx);
        (hv.square() - z2) * (t.clone() + ctx.ratio::<Mp>(1, 2)).powi(-3) * ctx.ratio::<Mp>(3, 2)
    });
    check_split("E4.15", "a=1/4,m=1", 2.5, |t, ctx| {
        let a: Mp = ctx.ratio(1, 4);
        z(1, &(a.clone() * ctx.num::<Mp>(2)), t, ctx) * (t.clone() + &a).powi(-3)
    });
}

#[test]
fn partial_log_sum_approaches_unit_limit() {
    // Σ xⁿ c_n(x)/(n+a)^s → Σ H_(n−1)/(n+a)^s as x → 1.
    let ctx = make_context(20).unwrap();
    let correction = sum_series(
        SmoothTerm::new(3.0, |t: &Mp| (t.clone() + ctx.ratio::<Mp>(1, 2)).powi(-2) / t),
        &ctx,
    )
    .unwrap()
    .value;
    let limit = lhs("E2.24", "a=1/2,s=2", &ctx).value - correction;
    let mut last = f64::INFINITY;
    for x in ["9/10", "99/100", "999/1000"] {
        let v = lhs("E2.21", &format!("a=1/2,x={x},s=2"), &ctx).value;
        let gap = (v - &limit).abs().to_f64();
        assert!(gap < last, "x={x}: {gap} !< {last}");
        last = gap;
    }
    assert!(last < 0.05);
    assert!(passes("E2.21", "a=1/2,x=99/100,s=2", &ctx).pass);
}

#[test]
fn default_grids_follow_domains() {
    let a_values = |id: &str| {
        let mut v: Vec<_> = default_grid(id).unwrap().iter().filter_map(|p| p.a).collect();
        v.sort();
        v.dedup();
        v
    };
    let r = |n, d| Rational64::new(n, d);
    assert_eq!(a_values("E2.13"), vec![r(-2, 5), r(1, 4), r(1, 3), r(1, 2)]);
    assert!(a_values("E3.1").contains(&r(3, 2)));
    assert!(a_values("E4.10").iter().all(|a| a.abs() < r(1, 1) && !a.is_integer()));
    assert!(a_values("E4.13").contains(&r(0, 1)));
    assert!(default_grid("E4.4").unwrap().iter().all(|p| p.x.unwrap() > r(0, 1)));
    assert!(default_grid("E2.17").unwrap().iter().all(|p| p.x <= p.y));
}

#[test]
fn invalid_points_are_rejected() {
    let ctx = make_context(20).unwrap();
    assert!(matches!(find::<Mp>("E9.99"), Err(Error::Config(_))));
    let e = brute_lhs::<Mp>("E2.13", &pt("a=1,m=1"), &ctx).unwrap_err();
    assert!(matches!(e, Error::Identity { ref id, .. } if id == "E2.13"));
    assert!(brute_lhs::<Mp>("E2.13", &pt("a=1/4"), &ctx).is_err());
    assert!(brute_lhs::<Mp>("E2.13", &pt("a=1/4,m=1,s=2"), &ctx).is_err());
    assert!(brute_lhs::<Mp>("E4.15", &pt("a=-3/5,m=1"), &ctx).is_err());
    let near = format!("a={},m=1", 1.0 + 1e-12);
    assert!(brute_lhs::<Mp>("E2.13", &pt(&near), &ctx).is_err());
}

#[test]
fn amended_forms_repair_printed_failures() {
    let ctx = make_context(30).unwrap();
    let r = passes("E2.14", "a=1/4,m=1,s=2", &ctx);
    assert!(!r.pass);
    assert!(r.corrected.as_ref().unwrap().pass);
    let r = passes("E2.30", "a=1/3", &ctx);
    assert!(!r.pass);
    assert!(r.corrected.unwrap().pass);
    assert!(passes("E2.14", "a=1/4,m=0,s=2", &ctx).pass);
}

#[test]
fn f64_backend_agrees_roughly() {
    let ctx = make_context(10).unwrap();
    let entry = find::<f64>("E2.24").unwrap();
    let r = verify_identity(&entry, &pt("a=1/4,s=3"), &ctx).unwrap();
    assert!(r.pass && r.residual < 1e-10, "{}", r.residual);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn shifted_harmonic_identity_holds(num in -8i64..30, s in 2u32..5) {
        let ctx = make_context(20).unwrap();
        let at = format!("a={num}/10,s={s}");
        prop_assert!(passes("E2.24", &at, &ctx).pass);
    }

    #[test]
    fn digamma_weighted_identity_holds(an in -2i64..8, bn in -3i64..8, m in 1u32..3, p in 1u32..3) {
        let ctx = make_context(20).unwrap();
        let at = format!("a={an}/5,b={bn}/7,m={m},p={p}");
        prop_assert!(passes("E4.9", &at, &ctx).pass);
    }

    #[test]
    fn point_text_round_trips(an in -9i64..30, x in -9i64..9, s in 0u32..6) {
        let p = ParamPoint::new().with_ratio(Param::A, an, 10).with_ratio(Param::X, x, 10).with_int(Param::S, s);
        prop_assert_eq!(p.to_string().parse::<ParamPoint>().unwrap(), p);
    }
}
