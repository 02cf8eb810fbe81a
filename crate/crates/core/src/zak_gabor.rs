//! Zak transforms of Hermite functions, lattice density, and Gabor-system
//! Bessel and synthesis bounds.
//!
//! The Zak transform folds a function into the unit square of the
//! time-frequency plane; its sup over that square controls how strongly a
//! lattice of time-frequency shifts can correlate with any unit vector.
//! The functions here compute the transform by certified truncation of the
//! defining series, estimate lattice packing counts, and measure the
//! resulting Bessel and synthesis constants against the `(n + 1)^{1/2}`
//! scaling they are bounded by.

use crate::error::{Error, Result};
use crate::hermite::{decay_radius, hermite_batch};
use crate::numerics::LineRule;
use crate::phase_space::PhasePoint;
use crate::poisson_poly::poisson_pmf;
use crate::report::BoundReport;
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

pub const MAX_ZAK_ORDER: usize = 500;
pub const MIN_RESOLUTION: usize = 64;
pub const MAX_RESOLUTION: usize = 4096;
pub const MAX_LATTICE_RADIUS: f64 = 1e3;

/// The geometric tail factor `1/(1 - e^{-2 pi})`: beyond one unit past the
/// classical turning point, consecutive Hermite samples shrink at least
/// this fast per unit step.
const TAIL_GEOMETRIC: f64 = 1.001_873_591_746_655_7;

/// A planar lattice `A Z^2`, columns of `A` the generators.
#[derive(Debug, Clone, PartialEq)]
pub struct Lattice2D {
    columns: [[f64; 2]; 2],
}

impl Lattice2D {
    pub fn new(columns: [[f64; 2]; 2]) -> Result<Self> {
        if columns.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::domain("lattice generators must be finite"));
        }
        let lat = Lattice2D { columns };
        if lat.det().abs() <= 1e-9 {
            return Err(Error::domain(format!(
                "lattice generators are degenerate (det = {})",
                lat.det()
            )));
        }
        Ok(lat)
    }

    pub fn integer() -> Self {
        Lattice2D {
            columns: [[1.0, 0.0], [0.0, 1.0]],
        }
    }

    /// `a Z x b Z`.
    pub fn rectangular(a: f64, b: f64) -> Result<Self> {
        Self::new([[a, 0.0], [0.0, b]])
    }

    /// Unit-spacing triangular lattice: generators `(1, 0)` and
    /// `(1/2, sqrt(3)/2)`.
    pub fn hexagonal() -> Self {
        Lattice2D {
            columns: [[1.0, 0.0], [0.5, 3.0f64.sqrt() / 2.0]],
        }
    }

    pub fn det(&self) -> f64 {
        self.columns[0][0] * self.columns[1][1] - self.columns[1][0] * self.columns[0][1]
    }

    pub fn generators(&self) -> [[f64; 2]; 2] {
        self.columns
    }

    pub fn is_rectangular(&self) -> bool {
        self.columns[0][1] == 0.0 && self.columns[1][0] == 0.0
    }

    /// The lattice point `i a_1 + j a_2`.
    pub fn point(&self, i: i64, j: i64) -> PhasePoint {
        let x = i as f64 * self.columns[0][0] + j as f64 * self.columns[1][0];
        let omega = i as f64 * self.columns[0][1] + j as f64 * self.columns[1][1];
        PhasePoint::new(x, omega).expect("finite generators give finite points")
    }

    /// All lattice points within `radius` of `center`, enumerated in
    /// lexicographic index order (deterministic).
    pub fn points_in_disk(&self, center: &PhasePoint, radius: f64) -> Result<Vec<PhasePoint>> {
        if !(radius.is_finite() && (0.0..=MAX_LATTICE_RADIUS).contains(&radius)) {
            return Err(Error::domain(format!(
                "enumeration radius must lie in [0, {MAX_LATTICE_RADIUS:e}], got {radius}"
            )));
        }
        let det = self.det();
        let inv = [
            [self.columns[1][1] / det, -self.columns[1][0] / det],
            [-self.columns[0][1] / det, self.columns[0][0] / det],
        ];
        let mut ranges = [(0i64, 0i64); 2];
        for (r, row) in inv.iter().enumerate() {
            let center_k = row[0] * center.x + row[1] * center.omega;
            let reach = row[0].hypot(row[1]) * radius + 1.0;
            ranges[r] = (
                (center_k - reach).floor() as i64,
                (center_k + reach).ceil() as i64,
            );
        }
        let r_sq = radius * radius;
        let mut out = Vec::new();
        for i in ranges[0].0..=ranges[0].1 {
            for j in ranges[1].0..=ranges[1].1 {
                let p = self.point(i, j);
                let dx = p.x - center.x;
                let dw = p.omega - center.omega;
                if dx * dx + dw * dw <= r_sq {
                    out.push(p);
                }
            }
        }
        Ok(out)
    }
}

fn validate_order(n: usize) -> Result<()> {
    if n > MAX_ZAK_ORDER {
        return Err(Error::domain(format!(
            "Zak order must be <= {MAX_ZAK_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// Series window: covers the classical support plus ten units of certified
/// decay.
fn zak_window(n: usize) -> i64 {
    (((2 * n + 1) as f64 / TAU).sqrt()).ceil() as i64 + 10
}

/// Hermite samples `h_n(x + k)` for `k` in `[-K-1, K+1]`; the two extreme
/// entries exist only to certify the truncation tail.
fn window_samples(n: usize, x: f64, k_max: i64) -> Result<Vec<f64>> {
    (-k_max - 1..=k_max + 1)
        .map(|k| Ok(hermite_batch(n, x + k as f64)?.values[n]))
        .collect()
}

fn tail_bound(samples: &[f64]) -> f64 {
    let first = samples.first().copied().unwrap_or(0.0);
    let last = samples.last().copied().unwrap_or(0.0);
    (first.abs() + last.abs()) * TAIL_GEOMETRIC
}

/// `sum_k h[k] e^{2 pi i k omega}` over `k` in `[-K, K]`, phases generated
/// by rotation from a single trigonometric evaluation.
fn phased_sum(samples_inner: &[f64], omega: f64) -> Complex64 {
    let k_max = (samples_inner.len() - 1) / 2;
    let step = Complex64::from_polar(1.0, TAU * omega);
    let mut z = Complex64::from_polar(1.0, -TAU * omega * k_max as f64);
    let mut acc = Complex64::ZERO;
    for &h in samples_inner {
        acc += h * z;
        z *= step;
    }
    acc
}

/// Zak transform of `h_n` at `(x, omega)` in `[0, 1)^2`:
/// `sum_k h_n(x + k) e^{2 pi i k omega}`, truncated to the certified window
/// with tail at most `tail_tol`.
pub fn zak_hermite(n: usize, x: f64, omega: f64, tail_tol: f64) -> Result<Complex64> {
    validate_order(n)?;
    if !((0.0..1.0).contains(&x) && (0.0..1.0).contains(&omega)) {
        return Err(Error::domain(format!(
            "Zak arguments must lie in [0, 1)^2, got ({x}, {omega})"
        )));
    }
    if !(tail_tol.is_finite() && (1e-12..=1.0).contains(&tail_tol)) {
        return Err(Error::domain(format!(
            "tail tolerance must lie in [1e-12, 1], got {tail_tol}"
        )));
    }
    let samples = window_samples(n, x, zak_window(n))?;
    let bound = tail_bound(&samples);
    if bound > tail_tol {
        return Err(Error::numerical(format!(
            "truncation tail certificate {bound:e} exceeds the tolerance {tail_tol:e}"
        )));
    }
    Ok(phased_sum(&samples[1..samples.len() - 1], omega))
}

/// Zak transform values of `h_n` on the uniform `resolution x resolution`
/// grid over `[0, 1)^2`, each entry carrying a `1e-10` tail certificate.
#[derive(Debug, Clone)]
pub struct ZakGrid {
    pub n: usize,
    resolution: usize,
    values: Vec<Complex64>,
}

impl ZakGrid {
    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// Value at `(x, omega) = (i, j)/resolution`.
    pub fn value(&self, i: usize, j: usize) -> Complex64 {
        self.values[i * self.resolution + j]
    }

    pub fn sup_abs(&self) -> f64 {
        self.values
            .iter()
            .map(|v| v.norm())
            .fold(0.0f64, f64::max)
    }

    /// Grid average of the squared modulus; close to one by unitarity.
    pub fn mean_square(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() / (self.values.len() as f64)
    }
}

pub fn zak_grid(n: usize, resolution: usize) -> Result<ZakGrid> {
    validate_order(n)?;
    if !(MIN_RESOLUTION..=MAX_RESOLUTION).contains(&resolution) {
        return Err(Error::domain(format!(
            "grid resolution must lie in [{MIN_RESOLUTION}, {MAX_RESOLUTION}], got {resolution}"
        )));
    }
    let k_max = zak_window(n);
    let mut values = Vec::with_capacity(resolution * resolution);
    for i in 0..resolution {
        let x = i as f64 / resolution as f64;
        let samples = window_samples(n, x, k_max)?;
        let bound = tail_bound(&samples);
        if bound > 1e-10 {
            return Err(Error::numerical(format!(
                "truncation tail certificate {bound:e} exceeds 1e-10 at x = {x}"
            )));
        }
        let inner = &samples[1..samples.len() - 1];
        for j in 0..resolution {
            let omega = j as f64 / resolution as f64;
            values.push(phased_sum(inner, omega));
        }
    }
    Ok(ZakGrid {
        n,
        resolution,
        values,
    })
}

/// Grid sup of `|Z h_n|` over `[0, 1)^2` and its ratio to `(n + 1)^{1/4}`.
pub fn zak_sup(n: usize, resolution: usize) -> Result<(f64, f64)> {
    let grid = zak_grid(n, resolution)?;
    let sup = grid.sup_abs();
    Ok((sup, sup / (n as f64 + 1.0).powf(0.25)))
}

/// How the packing count `max_x |lattice points in x + [0,1)^2|` is
/// computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelMode {
    /// Closed form `ceil(1/a) * ceil(1/b)` for diagonal generators.
    ExactRectangular,
    /// Enumerate and slide a unit square over a 256 x 256 offset grid;
    /// a certified lower bound for general lattices.
    SlidingEstimate,
}

/// Points within `1e-9` of a square's far edge count as outside, so
/// generator entries that are reciprocals of integers up to rounding give
/// the intended count on both paths.
const EDGE_SNAP: f64 = 1e-9;

pub fn rel_lattice(lat: &Lattice2D, mode: RelMode) -> Result<usize> {
    match mode {
        RelMode::ExactRectangular => {
            if !lat.is_rectangular() {
                return Err(Error::domain(
                    "exact packing count requires diagonal generators",
                ));
            }
            let a = lat.columns[0][0].abs();
            let b = lat.columns[1][1].abs();
            Ok(((1.0 / a - EDGE_SNAP).ceil().max(1.0) as usize)
                * ((1.0 / b - EDGE_SNAP).ceil().max(1.0) as usize))
        }
        RelMode::SlidingEstimate => {
            let corners = [
                lat.point(1, 0),
                lat.point(0, 1),
                lat.point(1, 1),
                lat.point(1, -1),
            ];
            let diam = corners
                .iter()
                .map(|p| p.abs())
                .fold(0.0f64, f64::max);
            let points = lat.points_in_disk(
                &PhasePoint::new(0.0, 0.0).expect("origin"),
                3.0 + diam,
            )?;
            let offsets = 256;
            let mut best = 0usize;
            for u in 0..offsets {
                for v in 0..offsets {
                    let fu = u as f64 / offsets as f64;
                    let fv = v as f64 / offsets as f64;
                    let x = fu * lat.columns[0][0] + fv * lat.columns[1][0];
                    let y = fu * lat.columns[0][1] + fv * lat.columns[1][1];
                    let count = points
                        .iter()
                        .filter(|p| {
                            p.x >= x
                                && p.x < x + 1.0 - EDGE_SNAP
                                && p.omega >= y
                                && p.omega < y + 1.0 - EDGE_SNAP
                        })
                        .count();
                    best = best.max(count);
                }
            }
            Ok(best)
        }
    }
}

/// Gabor Bessel sum for the unit-norm probe `pi(w) h_0` against the system
/// `{pi(lambda) h_n}`: `sum over |lambda| <= radius of
/// e^{-pi |w - lambda|^2} (pi |w - lambda|^2)^n / n!`.
///
/// The radius must reach five units past both the probe and the order's
/// spread `sqrt((n+1)/pi)` so that the discarded terms are negligible.
pub fn bessel_sum(n: usize, lat: &Lattice2D, w: &PhasePoint, radius: f64) -> Result<f64> {
    validate_order(n)?;
    let needed = w.abs() + 5.0 + ((n as f64 + 1.0) / PI).sqrt();
    if !(radius.is_finite() && radius >= needed) {
        return Err(Error::domain(format!(
            "enumeration radius {radius} is below the required {needed}"
        )));
    }
    let origin = PhasePoint::new(0.0, 0.0).expect("origin");
    let points = lat.points_in_disk(&origin, radius)?;
    let mut sum = 0.0;
    for p in &points {
        let dx = p.x - w.x;
        let dw = p.omega - w.omega;
        sum += poisson_pmf(n, PI * (dx * dx + dw * dw));
    }
    Ok(sum)
}

/// Quadrature L² norm of the finite Gabor synthesis
/// `g = sum_k a_k e^{2 pi i lambda_omega t} h_n(t - lambda_x)`, together
/// with the squared ratio to the coefficient norm `|a|_2^2`.
///
/// # Errors
/// The rule must cover every shifted copy's decay radius.
pub fn synthesis_norm(
    n: usize,
    points: &[PhasePoint],
    a: &[Complex64],
    rule: &LineRule,
) -> Result<(f64, f64)> {
    validate_order(n)?;
    if points.is_empty() || points.len() != a.len() {
        return Err(Error::domain(format!(
            "need matching nonempty points and coefficients, got {} and {}",
            points.len(),
            a.len()
        )));
    }
    if a.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
        return Err(Error::domain("synthesis coefficients must be finite"));
    }
    let radius = decay_radius(n);
    for p in points {
        if rule.lo() > p.x - radius || rule.hi() < p.x + radius {
            return Err(Error::domain(format!(
                "integration rule [{}, {}] misses the support around x = {}",
                rule.lo(),
                rule.hi(),
                p.x
            )));
        }
    }
    let mut norm_sq = 0.0;
    for (&t, &wt) in rule.nodes.iter().zip(&rule.weights) {
        let mut g = Complex64::ZERO;
        for (p, &coeff) in points.iter().zip(a) {
            let h = hermite_batch(n, t - p.x)?.values[n];
            g += coeff * h * Complex64::from_polar(1.0, TAU * p.omega * t);
        }
        norm_sq += wt * g.norm_sqr();
    }
    let coeff_sq: f64 = a.iter().map(|v| v.norm_sqr()).sum();
    Ok((norm_sq.sqrt(), norm_sq / coeff_sq))
}

/// Checks the frame-bound link between the two sides of the square-lattice
/// Gabor system: every probe's Bessel sum must stay below the squared Zak
/// sup of `h_n` (up to `tol`, which also absorbs grid resolution).
pub fn frame_identity_check(
    n: usize,
    probes: &[PhasePoint],
    radius: f64,
    resolution: usize,
    tol: f64,
) -> Result<BoundReport> {
    if probes.is_empty() {
        return Err(Error::domain("need at least one probe"));
    }
    if !(tol.is_finite() && tol > 0.0 && tol <= 1.0) {
        return Err(Error::domain(format!(
            "tolerance must lie in (0, 1], got {tol}"
        )));
    }
    let (sup, _) = zak_sup(n, resolution)?;
    let lat = Lattice2D::integer();
    let mut worst = 0.0f64;
    for w in probes {
        worst = worst.max(bessel_sum(n, &lat, w, radius)?);
    }
    Ok(BoundReport::evaluate(0.0, worst, sup * sup, tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct Zak sum with an explicit window, no shared machinery, valid
    /// for any real `x`.
    fn direct_zak(n: usize, x: f64, omega: f64, k_max: i64) -> Complex64 {
        let mut acc = Complex64::ZERO;
        for k in -k_max..=k_max {
            let h = hermite_batch(n, x + k as f64).unwrap().values[n];
            acc += h * Complex64::from_polar(1.0, TAU * k as f64 * omega);
        }
        acc
    }

    #[test]
    fn lattice_constructors_and_points() {
        let lat = Lattice2D::integer();
        assert_eq!(lat.det(), 1.0);
        assert!(lat.is_rectangular());
        let p = lat.point(2, -3);
        assert_eq!((p.x, p.omega), (2.0, -3.0));

        let hex = Lattice2D::hexagonal();
        assert!((hex.det() - 3.0f64.sqrt() / 2.0).abs() < 1e-15);
        assert!(!hex.is_rectangular());

        assert!(Lattice2D::new([[1.0, 2.0], [0.5, 1.0]]).is_err());
        assert!(Lattice2D::new([[f64::NAN, 0.0], [0.0, 1.0]]).is_err());
    }

    #[test]
    fn disk_enumeration_counts() {
        let lat = Lattice2D::integer();
        let origin = PhasePoint::new(0.0, 0.0).unwrap();
        let pts = lat.points_in_disk(&origin, 2.5).unwrap();
        assert_eq!(pts.len(), 21);

        let shifted = PhasePoint::new(0.5, 0.5).unwrap();
        let pts = lat.points_in_disk(&shifted, 0.8).unwrap();
        assert_eq!(pts.len(), 4);

        assert!(lat.points_in_disk(&origin, -1.0).is_err());
        assert!(lat.points_in_disk(&origin, 1e9).is_err());
    }

    #[test]
    fn zak_gaussian_reference_values() {
        // Theta-series oracle at the origin.
        let mut theta = 1.0f64;
        for k in 1..=30 {
            theta += 2.0 * (-PI * (k * k) as f64).exp();
        }
        let oracle = 2.0f64.powf(0.25) * theta;
        let got = zak_hermite(0, 0.0, 0.0, 1e-10).unwrap();
        assert!((got.re - oracle).abs() < 1e-12, "{got} vs {oracle}");
        assert!(got.im.abs() < 1e-12);
        assert!((oracle - 1.2920).abs() < 1e-4);

        // The classical zero at the square's center.
        let zero = zak_hermite(0, 0.5, 0.5, 1e-10).unwrap();
        assert!(zero.norm() <= 1e-10, "{zero}");
    }

    #[test]
    fn zak_odd_order_vanishes_at_origin() {
        let got = zak_hermite(1, 0.0, 0.0, 1e-10).unwrap();
        assert!(got.norm() <= 1e-14);
    }

    #[test]
    fn zak_rejects_bad_arguments() {
        assert!(zak_hermite(0, 1.0, 0.0, 1e-10).is_err());
        assert!(zak_hermite(0, 0.0, -0.1, 1e-10).is_err());
        assert!(zak_hermite(MAX_ZAK_ORDER + 1, 0.0, 0.0, 1e-10).is_err());
        assert!(zak_hermite(0, 0.0, 0.0, 1e-13).is_err());
        assert!(zak_hermite(0, 0.0, 0.0, f64::NAN).is_err());
    }

    #[test]
    fn zak_matches_direct_window_sum() {
        for &(n, x, omega) in &[(0usize, 0.3, 0.7), (3, 0.9, 0.1), (10, 0.5, 0.25)] {
            let got = zak_hermite(n, x, omega, 1e-10).unwrap();
            let oracle = direct_zak(n, x, omega, zak_window(n) + 5);
            assert!(
                (got - oracle).norm() < 1e-12,
                "n = {n}: {got} vs {oracle}"
            );
        }
    }

    #[test]
    fn zak_shift_preserves_modulus() {
        for &(n, x, omega) in &[(0usize, 0.2, 0.6), (3, 0.7, 0.3), (10, 0.1, 0.9)] {
            let here = direct_zak(n, x, omega, zak_window(n) + 6);
            let there = direct_zak(n, x + 1.0, omega, zak_window(n) + 6);
            assert!(
                (here.norm() - there.norm()).abs() < 1e-9,
                "n = {n}: {} vs {}",
                here.norm(),
                there.norm()
            );
        }
    }

    #[test]
    fn zak_grid_agrees_with_pointwise_values() {
        let grid = zak_grid(7, 64).unwrap();
        for &(i, j) in &[(0usize, 0usize), (5, 40), (63, 63), (32, 1)] {
            let x = i as f64 / 64.0;
            let omega = j as f64 / 64.0;
            let direct = zak_hermite(7, x, omega, 1e-10).unwrap();
            assert_eq!(grid.value(i, j), direct);
        }
    }

    #[test]
    fn zak_sup_and_mean_square_reference() {
        let (sup, ratio) = zak_sup(0, 64).unwrap();
        assert!((sup - 1.2920).abs() < 1e-3, "{sup}");
        assert_eq!(sup, ratio);

        let grid = zak_grid(40, 256).unwrap();
        assert!((grid.mean_square() - 1.0).abs() < 1e-3, "{}", grid.mean_square());
    }

    #[test]
    fn rel_exact_and_sliding_agree_on_rectangles() {
        assert_eq!(
            rel_lattice(&Lattice2D::integer(), RelMode::ExactRectangular).unwrap(),
            1
        );
        assert_eq!(
            rel_lattice(&Lattice2D::integer(), RelMode::SlidingEstimate).unwrap(),
            1
        );
        let spacings = [1.0 / 3.0, 0.5, 0.7, 1.0, 2.0];
        for &a in &spacings {
            for &b in &[a, 1.0] {
                let lat = Lattice2D::rectangular(a, b).unwrap();
                let exact = rel_lattice(&lat, RelMode::ExactRectangular).unwrap();
                let sliding = rel_lattice(&lat, RelMode::SlidingEstimate).unwrap();
                assert_eq!(exact, sliding, "a = {a}, b = {b}");
            }
        }
        let half = Lattice2D::rectangular(0.5, 1.0).unwrap();
        assert_eq!(rel_lattice(&half, RelMode::ExactRectangular).unwrap(), 2);
        let coarse = Lattice2D::rectangular(2.0, 2.0).unwrap();
        assert_eq!(rel_lattice(&coarse, RelMode::ExactRectangular).unwrap(), 1);
    }

    #[test]
    fn rel_hexagonal_needs_sliding() {
        let hex = Lattice2D::hexagonal();
        assert!(rel_lattice(&hex, RelMode::ExactRectangular).is_err());
        assert_eq!(rel_lattice(&hex, RelMode::SlidingEstimate).unwrap(), 2);
    }

    #[test]
    fn bessel_sum_matches_theta_oracle() {
        // Independent double loop, no lattice machinery.
        let mut oracle = 0.0;
        for i in -15i64..=15 {
            for j in -15i64..=15 {
                oracle += (-PI * ((i * i + j * j) as f64)).exp();
            }
        }
        let lat = Lattice2D::integer();
        let w = PhasePoint::new(0.0, 0.0).unwrap();
        let got = bessel_sum(0, &lat, &w, 6.0).unwrap();
        assert!((got - oracle).abs() < 1e-12, "{got} vs {oracle}");
        // The square of the one-dimensional theta value.
        assert!((got - 1.1803405990160983).abs() < 1e-10, "{got}");
    }

    #[test]
    fn bessel_sum_single_point_and_translation() {
        // A lattice so sparse that only the origin falls in range.
        let sparse = Lattice2D::rectangular(50.0, 50.0).unwrap();
        let w = PhasePoint::new(0.0, 0.0).unwrap();
        assert!((bessel_sum(0, &sparse, &w, 6.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(bessel_sum(3, &sparse, &w, 7.0).unwrap(), 0.0);

        // Probe at a lattice point: same sum as at the origin.
        let lat = Lattice2D::integer();
        let at_origin = bessel_sum(5, &lat, &w, 12.0).unwrap();
        let shifted = PhasePoint::new(2.0, -1.0).unwrap();
        let at_point = bessel_sum(5, &lat, &shifted, 12.0).unwrap();
        assert!((at_origin - at_point).abs() < 1e-12);

        assert!(bessel_sum(0, &lat, &w, 4.0).is_err());
    }

    #[test]
    fn synthesis_norm_reference_cases() {
        let base = crate::numerics::gauss_legendre(12).unwrap();
        let rule = crate::numerics::composite_rule(&base, -40.0, 40.0, 320).unwrap();

        let single = [PhasePoint::new(3.0, 0.7).unwrap()];
        let (norm, ratio_sq) =
            synthesis_norm(2, &single, &[Complex64::ONE], &rule).unwrap();
        assert!((norm - 1.0).abs() < 1e-8, "{norm}");
        assert!((ratio_sq - 1.0).abs() < 1e-8);

        let far = [
            PhasePoint::new(-12.0, 0.0).unwrap(),
            PhasePoint::new(12.0, 0.3).unwrap(),
        ];
        let (norm, _) =
            synthesis_norm(4, &far, &[Complex64::ONE, Complex64::ONE], &rule).unwrap();
        assert!((norm - 2.0f64.sqrt()).abs() < 1e-6, "{norm}");
    }

    #[test]
    fn synthesis_norm_validates_input() {
        let base = crate::numerics::gauss_legendre(12).unwrap();
        let rule = crate::numerics::composite_rule(&base, -8.0, 8.0, 64).unwrap();
        let points = [PhasePoint::new(4.0, 0.0).unwrap()];
        // Decay radius of order 2 exceeds the 4 units of margin on the right.
        assert!(synthesis_norm(2, &points, &[Complex64::ONE], &rule).is_err());
        let origin = [PhasePoint::new(0.0, 0.0).unwrap()];
        assert!(synthesis_norm(2, &origin, &[], &rule).is_err());
    }

    #[test]
    fn frame_identity_reference() {
        let probes = [
            PhasePoint::new(0.0, 0.0).unwrap(),
            PhasePoint::new(0.5, 0.5).unwrap(),
        ];
        let report = frame_identity_check(0, &probes, 7.0, 64, 1e-3).unwrap();
        assert!(report.pass, "{report}");
        assert!((report.measured - 1.1803).abs() < 1e-3);
        assert!((report.upper - 1.2920f64 * 1.2920).abs() < 1e-2);
        assert!(frame_identity_check(0, &[], 7.0, 64, 1e-3).is_err());
    }
}
