//! Short-time Fourier transforms against the Gaussian window and
//! modulation-space norms of Hermite expansions.
//!
//! A point `z = (x, omega)` of the time-frequency plane acts on a signal by
//! translation to `x` and modulation to frequency `omega`. For finite
//! Hermite expansions the Gaussian-window transform collapses to a closed
//! form in the polar coordinates of `z`, and the `M^p` norm becomes a
//! two-dimensional integral with a radially concentrated integrand; both
//! routes are implemented here and tested against each other.

use crate::error::{Error, Result};
use crate::hermite::{decay_radius, hermite_batch, MAX_ORDER, MAX_TENSOR_DIM};
use crate::numerics::{
    integrate_panels_try, integrate_periodic_with, log_gamma, LineRule, QuadratureSpec,
};
use num_complex::Complex64;
use std::f64::consts::PI;

pub const MAX_RADIAL_ARGUMENT: f64 = 1e3;

/// A point of the time-frequency plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub x: f64,
    pub omega: f64,
}

impl PhasePoint {
    pub fn new(x: f64, omega: f64) -> Result<Self> {
        if !(x.is_finite() && omega.is_finite()) {
            return Err(Error::domain(format!(
                "phase-space coordinates must be finite, got ({x}, {omega})"
            )));
        }
        Ok(PhasePoint { x, omega })
    }

    /// Euclidean distance from the origin.
    pub fn abs(&self) -> f64 {
        self.x.hypot(self.omega)
    }

    /// The point as the complex number `x + i omega`.
    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.x, self.omega)
    }
}

/// A finite Hermite expansion `f = sum_n c_n h_n`, indexed from zero.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteCoeffs {
    c: Vec<Complex64>,
}

impl HermiteCoeffs {
    pub fn new(c: Vec<Complex64>) -> Result<Self> {
        if c.is_empty() || c.len() > MAX_ORDER + 1 {
            return Err(Error::domain(format!(
                "coefficient count must lie in [1, {}], got {}",
                MAX_ORDER + 1,
                c.len()
            )));
        }
        if let Some(bad) = c.iter().find(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::domain(format!(
                "coefficients must be finite, found {bad}"
            )));
        }
        Ok(HermiteCoeffs { c })
    }

    pub fn from_real(c: &[f64]) -> Result<Self> {
        Self::new(c.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// The standard basis vector `e_n` (all mass on order `n`).
    pub fn unit(n: usize) -> Result<Self> {
        let mut c = vec![Complex64::ZERO; n + 1];
        *c.last_mut().expect("n + 1 >= 1") = Complex64::ONE;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.c
    }

    /// Highest represented order (coefficients above it are zero).
    pub fn n_max(&self) -> usize {
        self.c.len() - 1
    }

    pub fn l2_norm(&self) -> f64 {
        self.c.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_real(&self) -> bool {
        self.c.iter().all(|v| v.im == 0.0)
    }
}

/// Radial profile weights `w_n(t) = e^{-pi t^2/2} (sqrt(pi) t)^n / sqrt(n!)`
/// for fixed `t >= 0`, all orders up to `n_max`.
#[derive(Debug, Clone)]
pub struct RadialWeights {
    pub t: f64,
    pub w: Vec<f64>,
}

/// Computes the radial weights by the upward ratio recurrence with exact
/// power-of-two renormalization, as in the Poisson-weight kernel; their
/// squares are the Poisson(pi t^2) probabilities.
pub fn radial_weights(t: f64, n_max: usize) -> Result<RadialWeights> {
    if !(t.is_finite() && (0.0..=MAX_RADIAL_ARGUMENT).contains(&t)) {
        return Err(Error::domain(format!(
            "radial argument must lie in [0, {MAX_RADIAL_ARGUMENT:e}], got {t}"
        )));
    }
    if n_max > MAX_ORDER {
        return Err(Error::domain(format!(
            "radial weight order must be <= {MAX_ORDER}, got {n_max}"
        )));
    }
    let mut w = vec![0.0; n_max + 1];
    let up = 830.0f64.exp2();
    let down = (-830.0f64).exp2();
    let y = -PI * t * t / 2.0 / std::f64::consts::LN_2;
    let e0 = y.floor();
    let mut mant = (y - e0).exp2();
    let mut exp2 = e0 as i64;
    w[0] = apply_exp2(mant, exp2);
    let s = PI.sqrt() * t;
    for n in 0..n_max {
        mant *= s / (n as f64 + 1.0).sqrt();
        if mant > 1e250 {
            mant *= down;
            exp2 += 830;
        } else if mant > 0.0 && mant < 1e-250 {
            mant *= up;
            exp2 -= 830;
        }
        w[n + 1] = apply_exp2(mant, exp2);
        if mant == 0.0 {
            break;
        }
    }
    Ok(RadialWeights { t, w })
}

/// Shared with the Poisson kernel: `m * 2^e` without spurious under- or
/// overflow for mantissas kept normal by the renormalization above.
fn apply_exp2(m: f64, e: i64) -> f64 {
    if e == 0 {
        return m;
    }
    if (-1022..=1023).contains(&e) {
        return m * (e as f64).exp2();
    }
    if e < -2072 {
        return 0.0;
    }
    if e > 2021 {
        return f64::INFINITY;
    }
    let h = e / 2;
    m * (h as f64).exp2() * ((e - h) as f64).exp2()
}

/// Gaussian-window transform of the Hermite function `h_n`, evaluated in
/// closed form: writing `z = r e^{i theta}` as a complex number,
/// the value is `e^{i pi x omega} w_n(r) e^{i n theta}`.
pub fn stft_hermite_gauss(z: &PhasePoint, n: usize) -> Result<Complex64> {
    if n > MAX_ORDER {
        return Err(Error::domain(format!(
            "order must be <= {MAX_ORDER}, got {n}"
        )));
    }
    let r = z.abs();
    if r > MAX_RADIAL_ARGUMENT {
        return Err(Error::domain(format!(
            "phase point must satisfy |z| <= {MAX_RADIAL_ARGUMENT:e}, got {r}"
        )));
    }
    let phase = Complex64::from_polar(1.0, PI * z.x * z.omega);
    if r == 0.0 {
        return Ok(if n == 0 { phase } else { Complex64::ZERO });
    }
    let mag = (-PI * r * r / 2.0 + n as f64 * (PI.sqrt() * r).ln()
        - 0.5 * log_gamma(n as f64 + 1.0))
    .exp();
    let theta = z.omega.atan2(z.x);
    Ok(phase * Complex64::from_polar(mag, n as f64 * theta))
}

/// Gaussian-window transform of an arbitrary expansion by direct quadrature:
/// `integral of f(t) e^{-2 pi i omega t} g(t - x) dt` with `g` the unit
/// Gaussian. For basis vectors this is the complex conjugate of
/// [`stft_hermite_gauss`].
///
/// # Errors
/// The rule must cover the expansion's decay radius.
pub fn stft_quadrature(f: &HermiteCoeffs, z: &PhasePoint, rule: &LineRule) -> Result<Complex64> {
    let radius = decay_radius(f.n_max());
    if rule.lo() > -radius || rule.hi() < radius {
        return Err(Error::domain(format!(
            "integration rule [{}, {}] does not cover the decay radius {radius}",
            rule.lo(),
            rule.hi()
        )));
    }
    let window_amp = 2.0f64.powf(0.25);
    let mut sum = Complex64::ZERO;
    for (&t, &wt) in rule.nodes.iter().zip(&rule.weights) {
        let batch = hermite_batch(f.n_max(), t)?;
        let fv: Complex64 = f
            .coeffs()
            .iter()
            .zip(&batch.values)
            .map(|(c, h)| c * h)
            .sum();
        let window = window_amp * (-PI * (t - z.x) * (t - z.x)).exp();
        let twist = Complex64::from_polar(1.0, -2.0 * PI * z.omega * t);
        sum += wt * fv * twist * window;
    }
    Ok(sum)
}

/// Hermite expansion of the time-frequency shifted Gaussian at `z`,
/// truncated at `n_max`.
pub fn shifted_gaussian_coeffs(z: &PhasePoint, n_max: usize) -> Result<HermiteCoeffs> {
    let c = (0..=n_max)
        .map(|n| stft_hermite_gauss(z, n))
        .collect::<Result<Vec<_>>>()?;
    HermiteCoeffs::new(c)
}

/// Suggested truncation order so that the shifted Gaussian at `z` keeps all
/// but about `1e-14` of its coefficient mass.
pub fn shifted_gaussian_order(z: &PhasePoint) -> usize {
    let mean = PI * z.abs() * z.abs();
    (mean + 12.0 * mean.sqrt() + 40.0).ceil() as usize
}

const SUPPORT_CUT: f64 = 1e-18;

/// Modulation-space norm `M^p` of a Hermite expansion, computed in polar
/// coordinates: an adaptive trapezoid sweep in angle nested inside a
/// panel-doubling radial integral over the interval where the populated
/// orders carry mass.
///
/// The zero expansion has norm zero; otherwise `p` must be a finite value
/// at least one.
pub fn mp_norm(f: &HermiteCoeffs, p: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(p.is_finite() && (1.0..=64.0).contains(&p)) {
        return Err(Error::domain(format!(
            "integrability exponent must lie in [1, 64], got {p}"
        )));
    }
    let mags: Vec<f64> = f.coeffs().iter().map(|v| v.norm()).collect();
    let peak = mags.iter().cloned().fold(0.0f64, f64::max);
    if peak == 0.0 {
        return Ok(0.0);
    }
    let cut = peak * SUPPORT_CUT;
    let n_lo = mags.iter().position(|&v| v >= cut).expect("peak > 0");
    let n_hi = mags.iter().rposition(|&v| v >= cut).expect("peak > 0");

    // The order-n radial profile is a Gaussian bump centered at
    // sqrt(n / pi) with unit-scale width; reach far enough past the
    // outermost populated bumps that the discarded mass is far below
    // tolerance.
    let half = (2.0 * (1e16f64).ln() / PI).sqrt() + spec.radial_margin / PI.sqrt();
    let lo = ((n_lo as f64 / PI).sqrt() - half).max(0.0);
    let hi = (n_hi as f64 / PI).sqrt() + half;

    let even = f.is_real();
    let width = n_hi - n_lo + 1;
    let coeffs = &f.coeffs()[n_lo..=n_hi];

    let shell = |t: f64| -> Result<f64> {
        let rw = radial_weights(t, n_hi)?;
        let mut row = vec![Complex64::ZERO; width];
        let mut row_peak = 0.0f64;
        for (k, slot) in row.iter_mut().enumerate() {
            *slot = coeffs[k] * rw.w[n_lo + k];
            row_peak = row_peak.max(slot.norm_sqr());
        }
        if row_peak == 0.0 {
            return Ok(0.0);
        }
        let row_cut = row_peak * SUPPORT_CUT * SUPPORT_CUT;
        let a = row
            .iter()
            .position(|v| v.norm_sqr() >= row_cut)
            .expect("row peak > 0");
        let b = row
            .iter()
            .rposition(|v| v.norm_sqr() >= row_cut)
            .expect("row peak > 0");
        let live = &row[a..=b];
        // The modulus is invariant under the common modulation by the
        // leading live order, so the oscillation scale is the live window's
        // width, not the absolute order. For even integer exponents the
        // integrand is itself a trigonometric polynomial of degree
        // (p/2)(width - 1), which the uniform rule integrates exactly once
        // the node count clears that degree; otherwise start half a dyadic
        // level below the former 16x floor and let the doubling comparison
        // decide.
        let even_exponent = p.fract() == 0.0 && (p as u64) % 2 == 0;
        let initial = if even_exponent {
            (p as usize / 2) * (b - a) + 2
        } else {
            8 * (b - a + 1)
        }
        .max(spec.periodic_nodes_initial);
        let angular = integrate_periodic_with(
            &|theta: f64| {
                let (s, c) = theta.sin_cos();
                // Horner in e^{-i theta}; the common leading phase has
                // modulus one and is dropped.
                let (mut ar, mut ai) = (0.0f64, 0.0f64);
                for v in live.iter().rev() {
                    let nr = ar * c + ai * s + v.re;
                    let ni = -ar * s + ai * c + v.im;
                    ar = nr;
                    ai = ni;
                }
                let sq = ar * ar + ai * ai;
                if p == 1.0 {
                    sq.sqrt()
                } else if p == 2.0 {
                    sq
                } else {
                    sq.powf(0.5 * p)
                }
            },
            spec,
            initial,
            even,
        )?;
        Ok(t * angular)
    };

    let initial_panels = (((hi - lo) * (2.0 * PI).sqrt()).ceil() as usize).clamp(8, 4096);
    let total = integrate_panels_try(&shell, lo, hi, initial_panels, spec)?;
    Ok(total.powf(1.0 / p))
}

/// `M^p` norm of the basis vector `e_n` in closed form:
/// `((2/p) (2/p)^{n p/2} Gamma(n p/2 + 1) / (n!)^{p/2})^{1/p}`.
pub fn mp_hermite_closed_form(n: usize, p: f64) -> Result<f64> {
    if !(p.is_finite() && p >= 1.0) {
        return Err(Error::domain(format!(
            "integrability exponent must be finite and >= 1, got {p}"
        )));
    }
    let nf = n as f64;
    let ln_2p = (2.0 / p).ln();
    let log_pth_power = ln_2p + nf * p / 2.0 * ln_2p + log_gamma(nf * p / 2.0 + 1.0)
        - p / 2.0 * log_gamma(nf + 1.0);
    Ok((log_pth_power / p).exp())
}

/// `M^1` norm of `e_n` in closed form: `2 * 2^{n/2} Gamma(n/2 + 1) / sqrt(n!)`.
pub fn m1_hermite_closed_form(n: usize) -> f64 {
    mp_hermite_closed_form(n, 1.0).expect("p = 1 is always admissible")
}

/// Leading-order growth `(8 pi)^{1/4} n^{1/4}` of the `M^1` norms.
pub fn m1_hermite_asymptote(n: usize) -> f64 {
    (8.0 * PI).powf(0.25) * (n as f64).powf(0.25)
}

/// Modulus of the order-`n` Gaussian-window transform at `|z| = 1` after
/// stripping the Gaussian factor: `pi^{n/2} / sqrt(n!)`.
pub fn bargmann_coeff(n: usize) -> f64 {
    (0.5 * n as f64 * PI.ln() - 0.5 * log_gamma(n as f64 + 1.0)).exp()
}

/// `M^p` norm of an elementary tensor `f_1 (x) ... (x) f_d`: the product of
/// the factor norms.
pub fn tensor_mp_norm(factors: &[HermiteCoeffs], p: f64, spec: &QuadratureSpec) -> Result<f64> {
    if factors.is_empty() || factors.len() > MAX_TENSOR_DIM {
        return Err(Error::domain(format!(
            "tensor dimension must lie in [1, {MAX_TENSOR_DIM}], got {}",
            factors.len()
        )));
    }
    let mut product = 1.0;
    for f in factors {
        product *= mp_norm(f, p, spec)?;
    }
    Ok(product)
}
