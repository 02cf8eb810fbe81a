//! Poisson-weighted exponential partial sums.
//!
//! The central object is `P_N(t, phi) = sum_{n<=N} p_n(t) e^{i n phi}` with
//! `p_n(t) = e^{-t} t^n / n!` the Poisson(t) probabilities, i.e. the
//! partial sums of `exp(t e^{i phi})` normalized to modulus at most one.
//! This module computes the weights stably, the angular L¹ norm of `P_N`,
//! two-sided envelopes for that norm, and the second-difference identities
//! used to control it.

use crate::error::{Error, Result};
use crate::numerics::{integrate_periodic_with, log_gamma, QuadratureSpec};
use crate::report::BoundReport;
use std::f64::consts::{E, PI};

pub const MAX_WEIGHT_RATE: f64 = 1e6;
pub const MAX_WEIGHT_ORDER: usize = 100_000;
pub const MAX_PARTIAL_SUM_ORDER: usize = 2000;
pub const MAX_CHECK_ORDER: usize = 200;

/// Poisson(t) probabilities `p_0, ..., p_{n_max}`.
#[derive(Debug, Clone)]
pub struct PoissonWeights {
    pub t: f64,
    pub p: Vec<f64>,
}

/// Computes Poisson(t) probabilities by the upward ratio recurrence,
/// carried as mantissa times a power of two so that no intermediate
/// under- or overflows for any admitted `t`.
///
/// Entries whose true value is below the smallest positive double come out
/// as zero.
pub fn poisson_weights(t: f64, n_max: usize) -> Result<PoissonWeights> {
    if !(t.is_finite() && (0.0..=MAX_WEIGHT_RATE).contains(&t)) {
        return Err(Error::domain(format!(
            "poisson_weights rate must lie in [0, {MAX_WEIGHT_RATE:e}], got {t}"
        )));
    }
    if n_max > MAX_WEIGHT_ORDER {
        return Err(Error::domain(format!(
            "poisson_weights order must be <= {MAX_WEIGHT_ORDER}, got {n_max}"
        )));
    }
    let mut p = vec![0.0; n_max + 1];
    // Renormalization by exact powers of two keeps the mantissa normal
    // (never subnormal, never overflowing) no matter how extreme the true
    // magnitude gets, so each stored weight costs one rounding beyond the
    // recurrence itself.
    let up = 830.0f64.exp2();
    let down = (-830.0f64).exp2();
    // Seed e^{-t} as mantissa * 2^exp; the mantissa starts in [1, 2).
    let y = -t / std::f64::consts::LN_2;
    let e0 = y.floor();
    let mut mant = (y - e0).exp2();
    let mut exp2 = e0 as i64;
    p[0] = apply_exp2(mant, exp2);
    for n in 0..n_max {
        mant *= t / (n as f64 + 1.0);
        if mant > 1e250 {
            mant *= down;
            exp2 += 830;
        } else if mant > 0.0 && mant < 1e-250 {
            mant *= up;
            exp2 -= 830;
        }
        p[n + 1] = apply_exp2(mant, exp2);
        if mant == 0.0 {
            break; // t == 0: every later weight is exactly zero
        }
    }
    Ok(PoissonWeights { t, p })
}

/// `m * 2^e` without spurious under- or overflow for mantissas in
/// `(1e-300, 1e300)`.
fn apply_exp2(m: f64, e: i64) -> f64 {
    if e == 0 {
        return m;
    }
    if (-1022..=1023).contains(&e) {
        return m * (e as f64).exp2();
    }
    // |m| >= 2^-997 here, so the result is a true zero/infinity once the
    // exponent leaves this window.
    if e < -2072 {
        return 0.0;
    }
    if e > 2021 {
        return f64::INFINITY;
    }
    let h = e / 2;
    m * (h as f64).exp2() * ((e - h) as f64).exp2()
}

/// Single Poisson probability `e^{-s} s^n / n!` through the log domain,
/// accurate enough for the bound checks that sample it at scattered points.
pub(crate) fn poisson_pmf(n: usize, s: f64) -> f64 {
    if s == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    if n == 0 {
        return (-s).exp();
    }
    (n as f64 * s.ln() - s - log_gamma(n as f64 + 1.0)).exp()
}

/// Evaluates `P_N(t, phi) = sum_{n<=N} p_n(t) e^{i n phi}`.
pub fn eval_pn_normalized(t: f64, n: usize, phi: f64) -> Result<(f64, f64)> {
    if !phi.is_finite() {
        return Err(Error::domain(format!("phase must be finite, got {phi}")));
    }
    let w = poisson_weights(t, n)?;
    let (s, c) = phi.sin_cos();
    let (mut ar, mut ai) = (0.0f64, 0.0f64);
    for &q in w.p.iter().rev() {
        let nr = ar * c - ai * s + q;
        let ni = ar * s + ai * c;
        ar = nr;
        ai = ni;
    }
    Ok((ar, ai))
}

/// Horner evaluation of `|sum_k coeffs[k] e^{i k phi}|` (a leading phase
/// shift common to every term is dropped; it has modulus one).
#[inline]
fn trig_modulus(coeffs: &[f64], phi: f64) -> f64 {
    let (s, c) = phi.sin_cos();
    let (mut ar, mut ai) = (0.0f64, 0.0f64);
    for &q in coeffs.iter().rev() {
        let nr = ar * c - ai * s + q;
        let ni = ar * s + ai * c;
        ar = nr;
        ai = ni;
    }
    (ar * ar + ai * ai).sqrt()
}

/// Contiguous index window holding every entry within a factor `1e-19` of
/// the peak; the discarded mass is below `2e-16` of the peak, hence far
/// below quadrature tolerance relative to the integral it feeds.
fn trimmed_window(p: &[f64]) -> Option<(usize, usize)> {
    let peak = p.iter().cloned().fold(0.0f64, f64::max);
    if peak <= 0.0 {
        return None;
    }
    let cut = peak * 1e-19;
    let lo = p.iter().position(|&v| v >= cut)?;
    let hi = p.iter().rposition(|&v| v >= cut)?;
    Some((lo, hi))
}

/// Angular L¹ norm of the normalized partial sum at any rate `s >= 0`.
///
/// The integrand `|P_N(s, .)|` is even around phi = pi (real coefficients)
/// and its modulus only oscillates on the scale set by the populated
/// coefficient window, so the first trapezoid pass resolves sixteen nodes
/// per unit of that window's width.
pub(crate) fn l1_normalized_any(s: f64, n: usize, spec: &QuadratureSpec) -> Result<f64> {
    let w = poisson_weights(s, n)?;
    let Some((lo, hi)) = trimmed_window(&w.p) else {
        return Ok(0.0); // every weight underflowed
    };
    let coeffs = &w.p[lo..=hi];
    let initial = 16 * (hi - lo + 1);
    integrate_periodic_with(&|phi| trig_modulus(coeffs, phi), spec, initial, true)
}

/// Angular L¹ norm `integral of e^{-t} |P_N(t, phi)| d phi` over `[0, 2 pi]`
/// for `t >= 1`, `N <= 2000`.
pub fn l1_norm_pn(t: f64, n: usize, spec: &QuadratureSpec) -> Result<f64> {
    if !(t.is_finite() && t >= 1.0) {
        return Err(Error::domain(format!(
            "l1_norm_pn requires t >= 1, got {t}"
        )));
    }
    if n > MAX_PARTIAL_SUM_ORDER {
        return Err(Error::domain(format!(
            "l1_norm_pn order must be <= {MAX_PARTIAL_SUM_ORDER}, got {n}"
        )));
    }
    l1_normalized_any(t, n, spec)
}

/// Two-sided envelope for the angular L¹ norm:
/// `ln(t) p_N(t) - 30/sqrt(t)` from below and
/// `(pi/2) ln(pi^2 t) p_N(t) + 30/sqrt(t)` from above, both for `t >= 1`.
pub fn sandwich_bounds(t: f64, n: usize) -> Result<(f64, f64)> {
    if !(t.is_finite() && t >= 1.0) {
        return Err(Error::domain(format!(
            "sandwich_bounds requires t >= 1, got {t}"
        )));
    }
    if n > MAX_PARTIAL_SUM_ORDER {
        return Err(Error::domain(format!(
            "sandwich_bounds order must be <= {MAX_PARTIAL_SUM_ORDER}, got {n}"
        )));
    }
    let p = poisson_pmf(n, t);
    let tail = 30.0 / t.sqrt();
    let lower = t.ln() * p - tail;
    let upper = PI / 2.0 * (PI * PI * t).ln() * p + tail;
    Ok((lower, upper))
}

/// Measures the angular L¹ norm by quadrature and checks it against
/// [`sandwich_bounds`].
pub fn check_sandwich(t: f64, n: usize, spec: &QuadratureSpec) -> Result<BoundReport> {
    let (lower, upper) = sandwich_bounds(t, n)?;
    let measured = l1_norm_pn(t, n, spec)?;
    Ok(BoundReport::evaluate(
        lower,
        measured,
        upper,
        spec.relative_tolerance,
    ))
}

/// Coefficients of `(1 - z)^2 sum_{n<=N} q_n z^n`, a sequence of length
/// `N + 3` formed by second differences with zero padding at both ends.
pub fn second_diff_coeffs(q: &[f64]) -> Result<Vec<f64>> {
    if q.len() < 2 {
        return Err(Error::domain(
            "second_diff_coeffs needs at least two coefficients",
        ));
    }
    if q.len() > MAX_WEIGHT_ORDER + 1 {
        return Err(Error::domain(format!(
            "second_diff_coeffs input length must be <= {}, got {}",
            MAX_WEIGHT_ORDER + 1,
            q.len()
        )));
    }
    let at = |i: isize| -> f64 {
        if i < 0 || i as usize >= q.len() {
            0.0
        } else {
            q[i as usize]
        }
    };
    let out = (0..q.len() + 2)
        .map(|m| {
            let m = m as isize;
            at(m) - 2.0 * at(m - 1) + at(m - 2)
        })
        .collect();
    Ok(out)
}

/// Checks that the second differences of the Poisson weights match their
/// closed form `p_n(t) ((n - t)^2 - n)/t^2` on `2 <= n <= N` and that their
/// total mass there is at most `2/t`.
///
/// The report's `measured` is the mass `sum |r_n|`, its `upper` is `2/t`.
pub fn second_diff_remainder_check(t: f64, n: usize) -> Result<BoundReport> {
    if !(t.is_finite() && t >= 1.0) {
        return Err(Error::domain(format!(
            "second_diff_remainder_check requires t >= 1, got {t}"
        )));
    }
    if n < 2 || n > MAX_PARTIAL_SUM_ORDER {
        return Err(Error::domain(format!(
            "second_diff_remainder_check requires 2 <= N <= {MAX_PARTIAL_SUM_ORDER}, got {n}"
        )));
    }
    let w = poisson_weights(t, n)?;
    let r = second_diff_coeffs(&w.p)?;
    let mut mass = 0.0;
    for k in 2..=n {
        let closed = w.p[k] * (((k as f64 - t).powi(2) - k as f64) / (t * t));
        if (r[k] - closed).abs() > 1e-12 * closed.abs().max(1e-15) {
            return Err(Error::numerical(format!(
                "second difference at n = {k} deviates from its closed form: {} vs {closed}",
                r[k]
            )));
        }
        mass += r[k].abs();
    }
    Ok(BoundReport::evaluate(0.0, mass, 2.0 / t, 1e-12))
}

/// Checks `sup_{x>0} p_N(x) |N - x| <= 1` by evaluating at the two interior
/// critical points `N + 1/2 +- sqrt(N + 1/4)` and on a ten-thousand-point
/// grid over `(0, 3N + 10]`.
pub fn pointwise_bound_check(n: usize) -> Result<BoundReport> {
    if n < 1 || n > MAX_CHECK_ORDER {
        return Err(Error::domain(format!(
            "pointwise_bound_check requires 1 <= N <= {MAX_CHECK_ORDER}, got {n}"
        )));
    }
    let nf = n as f64;
    let f = |x: f64| poisson_pmf(n, x) * (nf - x).abs();
    let root = (nf + 0.25).sqrt();
    let mut best = f(nf + 0.5 + root);
    let x_minus = nf + 0.5 - root;
    if x_minus > 0.0 {
        best = best.max(f(x_minus));
    }
    let hi = 3.0 * nf + 10.0;
    let steps = 10_000;
    for j in 1..=steps {
        best = best.max(f(hi * j as f64 / steps as f64));
    }
    Ok(BoundReport::evaluate(0.0, best, 1.0, 1e-12))
}

/// Checks `e^{-t} t^{N + 1/2} / N! >= 1/(4e)` on `|t - N| <= sqrt(N)` for
/// `N >= 3`, evaluating at both endpoints, the interior maximum `N + 1/2`,
/// and a thousand-point grid.
///
/// The report's `measured` is the minimum found; `upper` is unbounded.
pub fn aux_inequality_check(n: usize) -> Result<BoundReport> {
    if n < 3 || n > MAX_CHECK_ORDER {
        return Err(Error::domain(format!(
            "aux_inequality_check requires 3 <= N <= {MAX_CHECK_ORDER}, got {n}"
        )));
    }
    let nf = n as f64;
    let lg = log_gamma(nf + 1.0);
    let f = |t: f64| (-t + (nf + 0.5) * t.ln() - lg).exp();
    let (lo, hi) = (nf - nf.sqrt(), nf + nf.sqrt());
    let mut worst = f(lo).min(f(hi)).min(f(nf + 0.5));
    let steps = 1000;
    for j in 1..steps {
        worst = worst.min(f(lo + (hi - lo) * j as f64 / steps as f64));
    }
    Ok(BoundReport::evaluate(
        1.0 / (4.0 * E),
        worst,
        f64::INFINITY,
        1e-12,
    ))
}

/// Checks `(2/pi) phi <= |1 - e^{i phi}| <= phi` for `phi` in `(0, pi]`.
pub fn geometric_bound_check(phi: f64) -> Result<BoundReport> {
    if !(phi.is_finite() && phi > 0.0 && phi <= PI) {
        return Err(Error::domain(format!(
            "geometric_bound_check requires 0 < phi <= pi, got {phi}"
        )));
    }
    let measured = 2.0 * (phi / 2.0).sin();
    Ok(BoundReport::evaluate(2.0 / PI * phi, measured, phi, 1e-12))
}
