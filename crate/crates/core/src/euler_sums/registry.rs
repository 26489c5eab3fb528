use super::point::{Param, ParamPoint};
use super::{integrals as i4, linear as l2, nonlinear as n3};
use super::{Constraint, Evaluator, IdentityEntry, GRID_AB, GRID_SP};
use crate::scalar::Real;

use Constraint::{Above, AtLeast, GridOnly, InsideUnit, NonInteger, SumAboveMinusOne};
use Param::{NSmall, A, B, M, P, S, X, Y};

const UNIT_A: Constraint = InsideUnit(A);

fn none() -> Vec<ParamPoint> {
    Vec::new()
}

fn all(_: &ParamPoint) -> bool {
    true
}

fn entry<T: Real>(
    id: &'static str,
    equation: &'static str,
    quote: &'static str,
    params: &'static [Param],
    constraints: &'static [Constraint],
    lhs: Evaluator<T>,
    rhs: Evaluator<T>,
) -> IdentityEntry<T> {
    IdentityEntry {
        id,
        equation,
        quote,
        params,
        constraints,
        lhs,
        rhs,
        corrected: None,
        extra_points: none,
        grid_filter: all,
    }
}

fn ordered_xy(pt: &ParamPoint) -> bool {
    pt.x <= pt.y
}

fn a_zero_points() -> Vec<ParamPoint> {
    GRID_SP
        .iter()
        .map(|&s| ParamPoint::new().with_ratio(A, 0, 1).with_int(S, s))
        .collect()
}

fn e4_13_points() -> Vec<ParamPoint> {
    vec![ParamPoint::new().with_ratio(A, 0, 1)]
}

fn e4_21_points() -> Vec<ParamPoint> {
    let mut out = Vec::new();
    for (n, d) in GRID_AB {
        for p in [2, 3] {
            out.push(ParamPoint::new().with_ratio(A, n, d).with_int(M, 3).with_int(P, p));
        }
    }
    out
}

/// Every registered identity, in display order.
pub fn registry<T: Real>() -> Vec<IdentityEntry<T>> {
    let mut e2_14 = entry(
        "E2.14",
        "Eq. (2.14)",
        "zeta_n(2m+1)/(n^(2s)(n^2-a^2)) via residues at 0 and ±a",
        &[A, M, S],
        &[NonInteger(A), GridOnly(&UNIT_A)],
        l2::e2_14_lhs,
        l2::e2_14_rhs,
    );
    e2_14.corrected = Some((l2::e2_14_rhs_corrected, "binomial C(2m+2k-2, 2k-2) in the double zeta sum"));
    let mut e2_17 = entry(
        "E2.17",
        "Eq. (2.17)",
        "symmetric sum of y^n c_n(x) + x^n c_n(y) over (n+a)^s",
        &[A, X, Y, S],
        &[AtLeast(S, 1)],
        l2::e2_17_lhs,
        l2::e2_17_rhs,
    );
    e2_17.grid_filter = ordered_xy;
    let mut e2_24 = entry(
        "E2.24",
        "Eq. (2.24)",
        "H_n/(n+a)^s through Hurwitz zeta values",
        &[A, S],
        &[AtLeast(S, 2)],
        l2::e2_24_lhs,
        l2::e2_24_rhs,
    );
    e2_24.extra_points = a_zero_points;
    let mut e2_30 = entry(
        "E2.30",
        "Eq. (2.30)",
        "H_n/(n(n^2-a^2)) from the squared rational sums",
        &[A],
        &[NonInteger(A), GridOnly(&UNIT_A)],
        l2::e2_30_lhs,
        l2::e2_30_rhs,
    );
    e2_30.corrected = Some((l2::e2_30_rhs_corrected, "last term squares sum 1/(n(n^2-a^2))"));
    let mut e4_13 = entry(
        "E4.13",
        "Eq. (4.13)",
        "quadratic relation among sums of 1/(n^2-a^2)^k",
        &[A],
        &[InsideUnit(A)],
        i4::e4_13_lhs,
        i4::e4_13_rhs,
    );
    e4_13.extra_points = e4_13_points;
    let mut e4_21 = entry(
        "E4.21",
        "Eq. (4.21)",
        "antisymmetric prefix sums over (n+a)",
        &[A, M, P],
        &[AtLeast(M, 2), AtLeast(P, 2)],
        i4::e4_21_lhs,
        i4::e4_21_rhs,
    );
    e4_21.extra_points = e4_21_points;

    vec![
        entry(
            "E2.13",
            "Eq. (2.13)",
            "zeta_n(2m)/(n(n^2-a^2)) as zeta values and rational sums",
            &[A, M],
            &[AtLeast(M, 1), NonInteger(A), GridOnly(&UNIT_A)],
            l2::e2_13_lhs,
            l2::e2_13_rhs,
        ),
        e2_14,
        entry(
            "E2.16",
            "Eq. (2.16)",
            "zeta_n(2m+1)/(n^2-a^2), the s = 0 case",
            &[A, M],
            &[NonInteger(A), GridOnly(&UNIT_A)],
            l2::e2_16_lhs,
            l2::e2_16_rhs,
        ),
        e2_17,
        entry(
            "E2.21",
            "Eq. (2.21)",
            "x^n c_n(x)/(n+a)^s via parametric polylogarithms",
            &[A, X, S],
            &[AtLeast(S, 2)],
            l2::e2_21_lhs,
            l2::e2_21_rhs,
        ),
        entry(
            "E2.22",
            "Eq. (2.22)",
            "alternating harmonic prefix L_n(1) over (n+a)^s",
            &[A, S],
            &[AtLeast(S, 2)],
            l2::e2_22_lhs,
            l2::e2_22_rhs,
        ),
        e2_24,
        entry(
            "E2.28",
            "Eq. (2.28)",
            "H_n/(n^2-a^2) through digamma-type sums",
            &[A],
            &[NonInteger(A), GridOnly(&UNIT_A)],
            l2::e2_28_lhs,
            l2::e2_28_rhs,
        ),
        e2_30,
        entry(
            "E3.1",
            "Eq. (3.1)",
            "quadratic sum (H_n^2 - zeta_n(2))/(n+a)^s reduced to linear sums",
            &[A, S],
            &[AtLeast(S, 2)],
            n3::e3_1_lhs,
            n3::e3_1_rhs,
        ),
        entry(
            "E3.12",
            "Eq. (3.12)",
            "quadratic sum at a = 0",
            &[S],
            &[AtLeast(S, 2)],
            n3::e3_12_lhs,
            n3::e3_12_rhs,
        ),
        entry(
            "E3.13",
            "Eq. (3.13)",
            "cubic sum (H_n^3 - 3 H_n zeta_n(2))/(n+a)^s reduced to lower weights",
            &[A, S],
            &[AtLeast(S, 2)],
            n3::e3_13_lhs,
            n3::e3_13_rhs,
        ),
        entry(
            "E3.23",
            "Eq. (3.23)",
            "cubic sum at a = 0",
            &[S],
            &[AtLeast(S, 2)],
            n3::e3_23_lhs,
            n3::e3_23_rhs,
        ),
        entry(
            "E4.4",
            "Eq. (4.4)",
            "integral of H_m(t, a) t^(n+b-1) over [0, x]",
            &[A, B, X, M, NSmall],
            &[AtLeast(M, 1), AtLeast(NSmall, 1), Above(X, 0, 1), SumAboveMinusOne(A, B)],
            i4::e4_4_lhs,
            i4::e4_4_rhs,
        ),
        entry(
            "E4.7",
            "Eq. (4.7)",
            "power-weighted partial logarithms against a difference of powers",
            &[A, B, X, M, P],
            &[AtLeast(M, 1), AtLeast(P, 1), Above(X, 0, 1), SumAboveMinusOne(A, B)],
            i4::e4_7_lhs,
            i4::e4_7_rhs,
        ),
        entry(
            "E4.9",
            "Eq. (4.9)",
            "digamma-weighted difference of powers, the x = 1 limit",
            &[A, B, M, P],
            &[AtLeast(M, 1), AtLeast(P, 1), SumAboveMinusOne(A, B)],
            i4::e4_9_lhs,
            i4::e4_9_rhs,
        ),
        entry(
            "E4.10",
            "Eq. (4.10)",
            "n H_n/(n^2-a^2)^2 from Hurwitz values",
            &[A],
            &[NonInteger(A), InsideUnit(A)],
            i4::e4_10_lhs,
            i4::e4_10_rhs,
        ),
        entry(
            "E4.11",
            "Eq. (4.11)",
            "n x^n c_n(x)/(n^2-a^2)^2 via parametric polylogarithms",
            &[A, X],
            &[NonInteger(A), InsideUnit(A), Above(X, 0, 1)],
            i4::e4_11_lhs,
            i4::e4_11_rhs,
        ),
        entry(
            "E4.12",
            "Eq. (4.12)",
            "n H_n/(n^2-a^2)^2 through rational sums",
            &[A],
            &[NonInteger(A), InsideUnit(A)],
            i4::e4_10_lhs,
            i4::e4_12_rhs,
        ),
        e4_13,
        entry(
            "E4.14",
            "Eq. (4.14)",
            "odd powers of (n+a) against partial sums of x^k/(k+2a)",
            &[A, X, M],
            &[AtLeast(M, 1), Above(A, -1, 2), Above(X, 0, 1)],
            i4::e4_14_lhs,
            i4::e4_14_rhs,
        ),
        entry(
            "E4.15",
            "Eq. (4.15)",
            "odd powers of (n+a) against zeta_n(1, 2a+1)",
            &[A, M],
            &[AtLeast(M, 1), Above(A, -1, 2)],
            i4::e4_15_lhs,
            i4::e4_15_rhs,
        ),
        entry(
            "E4.16",
            "Eq. (4.16)",
            "difference of Hurwitz prefixes against partial logarithms, even gap",
            &[A, B, X, M, P],
            &[AtLeast(P, 2), Above(X, 0, 1), SumAboveMinusOne(A, B)],
            i4::e4_16_lhs,
            i4::e4_16_rhs,
        ),
        entry(
            "E4.17",
            "Eq. (4.17)",
            "sum of Hurwitz prefixes against partial logarithms, odd gap",
            &[A, B, X, M, P],
            &[AtLeast(P, 2), Above(X, 0, 1), SumAboveMinusOne(A, B)],
            i4::e4_17_lhs,
            i4::e4_17_rhs,
        ),
        e4_21,
        entry(
            "E4.22",
            "Eq. (4.22)",
            "quadratic Hurwitz prefixes against zeta_n(1, 2a+1), even gap",
            &[A, M, P],
            &[AtLeast(P, 2), Above(A, -1, 2)],
            i4::e4_22_lhs,
            i4::e4_22_rhs,
        ),
        entry(
            "E4.23",
            "Eq. (4.23)",
            "quadratic Hurwitz prefixes against zeta_n(1, 2a+1), odd gap",
            &[A, M, P],
            &[AtLeast(P, 2), Above(A, -1, 2)],
            i4::e4_23_lhs,
            i4::e4_23_rhs,
        ),
        entry(
            "E4.24",
            "Eq. (4.24)",
            "quadratic prefixes against H_n at a = 0, even gap",
            &[M, P],
            &[AtLeast(P, 2)],
            i4::e4_24_lhs,
            i4::e4_24_rhs,
        ),
        entry(
            "E4.25",
            "Eq. (4.25)",
            "quadratic prefixes against H_n at a = 0, odd gap",
            &[M, P],
            &[AtLeast(P, 2)],
            i4::e4_25_lhs,
            i4::e4_25_rhs,
        ),
        entry(
            "EH.s",
            "unnumbered (after 2.24)",
            "H_n/n^s in zeta values",
            &[S],
            &[AtLeast(S, 2)],
            l2::eh_lhs,
            l2::eh_rhs,
        ),
        entry(
            "EL.s",
            "unnumbered (after 2.24)",
            "L_n(1)/n^s in zeta and alternating zeta values",
            &[S],
            &[AtLeast(S, 2)],
            l2::el_lhs,
            l2::el_rhs,
        ),
    ]
}

