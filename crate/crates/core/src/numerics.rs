//! Quadrature engines and special-function plumbing.
//!
//! Everything downstream integrates through the three engines here: an
//! adaptive trapezoid rule for periodic integrands, a composite
//! Gauss-Legendre rule for finite intervals, and a Gaussian-tail-truncated
//! wrapper for radial integrals on `[0, inf)`. All engines are deterministic;
//! the panel-parallel paths reduce in index order so results do not depend on
//! thread count.

use crate::error::{Error, Result};
use crate::report::BoundReport;
use rayon::prelude::*;
use std::f64::consts::{PI, TAU};

pub const LN_2PI: f64 = 1.837_877_066_409_345_5;

// Lanczos approximation, g = 607/128, 15 terms. Good for about 1e-14
// relative error in log-gamma on the positive axis.
const LANCZOS_G: f64 = 4.742_187_5;
const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_87e-4,
    0.465_236_289_270_485_76e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_49e-3,
    -0.210_264_441_724_104_88e-3,
    0.217_439_618_115_212_64e-3,
    -0.164_318_106_536_763_89e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_09e-4,
    0.368_991_826_595_316_27e-5,
];

/// Natural log of the gamma function for `x > 0`.
///
/// Returns NaN for `x <= 0` or non-finite input. Relative accuracy is well
/// below 1e-12 across `[1, 1e6]`, which is what the factorial-ratio
/// computations in this crate rely on.
pub fn log_gamma(x: f64) -> f64 {
    if !x.is_finite() || x <= 0.0 {
        return f64::NAN;
    }
    if x < 0.5 {
        // Reflection keeps the Lanczos sum on its accurate half-line.
        return (PI / (PI * x).sin()).ln() - log_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * LN_2PI + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Checks the factorial sandwich
/// `sqrt(2 pi n) (n/e)^n <= n! <= e sqrt(n) (n/e)^n` for `1 <= n <= 170`.
///
/// The comparison runs in the log domain with 1e-12 relative slack; the
/// report carries the linear-scale values, which stay finite over the
/// admitted range.
pub fn stirling_check(n: u64) -> Result<BoundReport> {
    if n < 1 || n > 170 {
        return Err(Error::domain(format!(
            "stirling_check requires 1 <= n <= 170, got {n}"
        )));
    }
    let nf = n as f64;
    let base = nf * (nf.ln() - 1.0);
    let log_lower = 0.5 * (LN_2PI + nf.ln()) + base;
    let log_upper = 1.0 + 0.5 * nf.ln() + base;
    let log_measured = log_gamma(nf + 1.0);
    let slack = 1e-12 * log_measured.abs().max(1.0);
    let pass = log_lower - slack <= log_measured && log_measured <= log_upper + slack;
    Ok(BoundReport {
        lower: log_lower.exp(),
        measured: log_measured.exp(),
        upper: log_upper.exp(),
        quad_tolerance: 1e-12,
        pass,
    })
}

/// Tuning knobs shared by the adaptive quadrature engines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Stop once successive refinements agree to this relative tolerance.
    pub relative_tolerance: f64,
    /// Refinement budget; exceeding it is a hard error, not a warning.
    pub max_doublings: u32,
    /// Node count for the first periodic trapezoid pass.
    pub periodic_nodes_initial: usize,
    /// Radial truncation half-width, in units of the declared Gaussian decay.
    pub radial_margin: f64,
}

impl QuadratureSpec {
    pub fn new(
        relative_tolerance: f64,
        max_doublings: u32,
        periodic_nodes_initial: usize,
        radial_margin: f64,
    ) -> Result<Self> {
        if !(relative_tolerance > 0.0 && relative_tolerance <= 1e-2) {
            return Err(Error::domain(format!(
                "relative_tolerance must lie in (0, 1e-2], got {relative_tolerance}"
            )));
        }
        if max_doublings < 1 || max_doublings > 24 {
            return Err(Error::domain(format!(
                "max_doublings must lie in [1, 24], got {max_doublings}"
            )));
        }
        if periodic_nodes_initial < 16 || periodic_nodes_initial > 1 << 20 {
            return Err(Error::domain(format!(
                "periodic_nodes_initial must lie in [16, 2^20], got {periodic_nodes_initial}"
            )));
        }
        if !(radial_margin >= 4.0 && radial_margin.is_finite()) {
            return Err(Error::domain(format!(
                "radial_margin must be finite and >= 4, got {radial_margin}"
            )));
        }
        Ok(QuadratureSpec {
            relative_tolerance,
            max_doublings,
            periodic_nodes_initial,
            radial_margin,
        })
    }

    /// Default knobs with a caller-chosen tolerance.
    pub fn with_tolerance(relative_tolerance: f64) -> Result<Self> {
        Self::new(relative_tolerance, 20, 256, 10.0)
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            relative_tolerance: 1e-8,
            max_doublings: 20,
            periodic_nodes_initial: 256,
            radial_margin: 10.0,
        }
    }
}

/// Gauss-Legendre rule on `(-1, 1)`.
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// Applies the rule to `f` on `[a, b]`.
    pub fn integrate_on<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        half * acc
    }
}

/// Builds the `count`-node Gauss-Legendre rule by Newton iteration on the
/// Legendre polynomial; nodes come out in ascending order.
pub fn gauss_legendre(count: usize) -> Result<GaussRule> {
    if count < 1 || count > 4096 {
        return Err(Error::domain(format!(
            "gauss_legendre node count must lie in [1, 4096], got {count}"
        )));
    }
    let n = count;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        // Tricomi-style initial guess for the i-th root from above.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut converged = false;
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-15 {
                converged = true;
                // One clean-up step after crossing the tolerance.
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                x -= p / d;
                break;
            }
        }
        if !converged {
            return Err(Error::numerical(format!(
                "Gauss-Legendre Newton iteration stalled for count {n}, root {i}"
            )));
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        weights[i] = w;
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        // Middle node is exactly zero by symmetry.
        nodes[n / 2] = 0.0;
    }
    Ok(GaussRule { nodes, weights })
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 1..n {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = p_next;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, d)
}

/// A fixed quadrature rule on a finite interval, usually a composite
/// Gauss-Legendre rule produced by [`composite_rule`].
#[derive(Debug, Clone)]
pub struct LineRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    lo: f64,
    hi: f64,
}

impl LineRule {
    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(*x);
        }
        acc
    }
}

/// Tiles `[lo, hi]` with `panels` copies of a base Gauss-Legendre rule.
pub fn composite_rule(base: &GaussRule, lo: f64, hi: f64, panels: usize) -> Result<LineRule> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::domain(format!(
            "composite_rule needs finite lo < hi, got [{lo}, {hi}]"
        )));
    }
    if panels < 1 || panels > 1 << 16 {
        return Err(Error::domain(format!(
            "composite_rule panel count must lie in [1, 65536], got {panels}"
        )));
    }
    let width = (hi - lo) / panels as f64;
    let mut nodes = Vec::with_capacity(panels * base.nodes.len());
    let mut weights = Vec::with_capacity(panels * base.nodes.len());
    for p in 0..panels {
        let a = lo + p as f64 * width;
        let mid = a + 0.5 * width;
        let half = 0.5 * width;
        for (x, w) in base.nodes.iter().zip(&base.weights) {
            nodes.push(mid + half * x);
            weights.push(half * w);
        }
    }
    Ok(LineRule {
        nodes,
        weights,
        lo,
        hi,
    })
}

/// Plain periodic trapezoid sum with `m` uniform nodes on `[0, 2 pi)`.
#[cfg(test)]
pub(crate) fn trapezoid_periodic<F: Fn(f64) -> f64>(f: &F, m: usize) -> f64 {
    let h = TAU / m as f64;
    let mut acc = 0.0;
    for j in 0..m {
        acc += f(h * j as f64);
    }
    h * acc
}

/// Adaptive periodic trapezoid on `[0, 2 pi]`: node doubling until two
/// successive estimates agree to the spec's relative tolerance.
///
/// # Errors
/// [`Error::QuadratureNonConvergence`] with the last two estimates once the
/// doubling budget is exhausted.
pub fn integrate_periodic<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<f64> {
    integrate_periodic_with(&f, spec, spec.periodic_nodes_initial, false)
}

/// Engine behind [`integrate_periodic`]. `initial_nodes` lets callers raise
/// the first pass above the spec baseline; `even` declares that
/// `f(2 pi - x) = f(x)`, in which case only `[0, pi]` is sampled (the
/// trapezoid value is identical, at half the evaluations).
pub(crate) fn integrate_periodic_with<F: Fn(f64) -> f64>(
    f: &F,
    spec: &QuadratureSpec,
    initial_nodes: usize,
    even: bool,
) -> Result<f64> {
    let mut m = initial_nodes.max(spec.periodic_nodes_initial).max(16);
    if m % 2 == 1 {
        m += 1;
    }
    let mut raw_sum = if even {
        folded_base_sum(f, m)
    } else {
        full_base_sum(f, m)
    };
    let mut prev = TAU / m as f64 * raw_sum;
    for d in 1..=spec.max_doublings {
        raw_sum += if even {
            folded_refinement_sum(f, m)
        } else {
            full_refinement_sum(f, m)
        };
        m *= 2;
        let last = TAU / m as f64 * raw_sum;
        let scale = last.abs().max(prev.abs());
        if scale == 0.0 || (last - prev).abs() <= spec.relative_tolerance * scale {
            return Ok(last);
        }
        if d == spec.max_doublings {
            return Err(Error::QuadratureNonConvergence {
                doublings: d,
                previous: prev,
                last,
            });
        }
        prev = last;
    }
    unreachable!("doubling loop always returns")
}

fn full_base_sum<F: Fn(f64) -> f64>(f: &F, m: usize) -> f64 {
    let h = TAU / m as f64;
    (0..m).map(|j| f(h * j as f64)).sum()
}

/// Sum over the nodes the next doubling adds: odd multiples of `pi / m`.
fn full_refinement_sum<F: Fn(f64) -> f64>(f: &F, m: usize) -> f64 {
    let h = PI / m as f64;
    (0..m).map(|j| f(h * (2 * j + 1) as f64)).sum()
}

/// As [`full_base_sum`] for even `f`, sampling only `[0, pi]`. Requires even
/// `m`; mirror nodes are counted by weight.
fn folded_base_sum<F: Fn(f64) -> f64>(f: &F, m: usize) -> f64 {
    debug_assert_eq!(m % 2, 0);
    let h = TAU / m as f64;
    let mut acc = f(0.0) + f(PI);
    for j in 1..m / 2 {
        acc += 2.0 * f(h * j as f64);
    }
    acc
}

fn folded_refinement_sum<F: Fn(f64) -> f64>(f: &F, m: usize) -> f64 {
    debug_assert_eq!(m % 2, 0);
    let h = PI / m as f64;
    // New nodes pair up as (k, 2m - k) with k odd < m; m even means no
    // self-paired midpoint.
    (0..m / 2).map(|j| 2.0 * f(h * (2 * j + 1) as f64)).sum()
}

/// Composite Gauss-Legendre integration of a fallible integrand on
/// `[lo, hi]`, doubling the panel count until two successive estimates agree.
///
/// Panels evaluate in parallel but reduce in index order, so the result is
/// reproducible at any thread count.
pub(crate) fn integrate_panels_try<F>(
    g: &F,
    lo: f64,
    hi: f64,
    initial_panels: usize,
    spec: &QuadratureSpec,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::domain(format!(
            "integration interval must be finite with lo <= hi, got [{lo}, {hi}]"
        )));
    }
    if lo == hi {
        return Ok(0.0);
    }
    let base = gauss_legendre(12)?;
    let mut panels = initial_panels.clamp(1, 1 << 14);
    let mut prev = panel_pass(g, lo, hi, panels, &base)?;
    for d in 1..=spec.max_doublings {
        panels *= 2;
        let last = panel_pass(g, lo, hi, panels, &base)?;
        let scale = last.abs().max(prev.abs());
        if scale == 0.0 || (last - prev).abs() <= spec.relative_tolerance * scale {
            return Ok(last);
        }
        if d == spec.max_doublings {
            return Err(Error::QuadratureNonConvergence {
                doublings: d,
                previous: prev,
                last,
            });
        }
        prev = last;
    }
    unreachable!("doubling loop always returns")
}

fn panel_pass<F>(g: &F, lo: f64, hi: f64, panels: usize, base: &GaussRule) -> Result<f64>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    let width = (hi - lo) / panels as f64;
    let values: Result<Vec<f64>> = (0..panels)
        .into_par_iter()
        .map(|p| {
            let a = lo + p as f64 * width;
            let mid = a + 0.5 * width;
            let half = 0.5 * width;
            let mut acc = 0.0;
            for (x, w) in base.nodes.iter().zip(&base.weights) {
                let t = mid + half * x;
                let v = g(t)?;
                if !v.is_finite() {
                    return Err(Error::numerical(format!(
                        "integrand returned {v} at t = {t}"
                    )));
                }
                acc += w * v;
            }
            Ok(half * acc)
        })
        .collect();
    // Index-ordered reduction keeps the sum independent of thread count.
    Ok(values?.iter().sum())
}

/// Integrates `g` over `[0, inf)` assuming `|g(t)|` decays at least like
/// `exp(-decay (t - center)^2)` with `decay >= pi/2`, as declared by the
/// caller. The domain is truncated to
/// `[max(0, center - m / sqrt(decay)), center + m / sqrt(decay)]` with `m`
/// the spec's radial margin, then handled by panel-doubling Gauss-Legendre.
///
/// # Errors
/// Domain errors for a negative center or understated decay; numerical
/// errors for non-finite samples; non-convergence past the doubling budget.
pub fn integrate_radial_gaussian<F>(
    g: F,
    center: f64,
    decay: f64,
    spec: &QuadratureSpec,
) -> Result<f64>
where
    F: Fn(f64) -> f64 + Sync,
{
    integrate_radial_gaussian_try(&|t| Ok(g(t)), center, decay, spec)
}

/// Fallible-integrand version of [`integrate_radial_gaussian`]; inner errors
/// propagate unchanged.
pub(crate) fn integrate_radial_gaussian_try<F>(
    g: &F,
    center: f64,
    decay: f64,
    spec: &QuadratureSpec,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    if !(center.is_finite() && center >= 0.0) {
        return Err(Error::domain(format!(
            "radial center must be finite and >= 0, got {center}"
        )));
    }
    if !(decay.is_finite() && decay >= PI / 2.0 - 1e-12) {
        return Err(Error::domain(format!(
            "declared Gaussian decay must be >= pi/2, got {decay}"
        )));
    }
    let reach = spec.radial_margin / decay.sqrt();
    let lo = (center - reach).max(0.0);
    let hi = center + reach;
    // Aim the first pass at roughly one panel per Gaussian standard
    // deviation; the doubling loop takes it from there.
    let sigma = 1.0 / (2.0 * decay).sqrt();
    let initial_panels = (((hi - lo) / sigma).ceil() as usize).clamp(8, 4096);
    integrate_panels_try(g, lo, hi, initial_panels, spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kahan_ln_factorial(n: u64) -> f64 {
        let mut sum = 0.0f64;
        let mut c = 0.0f64;
        for k in 1..=n {
            let y = (k as f64).ln() - c;
            let t = sum + y;
            c = (t - sum) - y;
            sum = t;
        }
        sum
    }

    #[test]
    fn log_gamma_small_integers() {
        assert!(log_gamma(1.0).abs() < 1e-14);
        assert!(log_gamma(2.0).abs() < 1e-14);
        let expected = 3628800f64.ln();
        assert!((log_gamma(11.0) - expected).abs() <= 1e-12 * expected);
    }

    #[test]
    fn log_gamma_half() {
        let expected = 0.5 * PI.ln();
        assert!((log_gamma(0.5) - expected).abs() < 1e-13);
    }

    #[test]
    fn log_gamma_matches_factorials_to_170() {
        for n in 1..=170u64 {
            let reference = kahan_ln_factorial(n);
            let got = log_gamma(n as f64 + 1.0);
            let tol = 1e-12 * reference.abs().max(1.0);
            assert!(
                (got - reference).abs() <= tol,
                "n = {n}: {got} vs {reference}"
            );
        }
    }

    #[test]
    fn log_gamma_recurrence_across_range() {
        // ln Gamma(x+1) = ln Gamma(x) + ln x, sampled log-uniformly on [1, 1e6].
        for i in 0..=60 {
            let x = 10f64.powf(i as f64 / 10.0);
            let lhs = log_gamma(x + 1.0);
            let rhs = log_gamma(x) + x.ln();
            let tol = 1e-12 * lhs.abs().max(1.0);
            assert!((lhs - rhs).abs() <= tol, "x = {x}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn log_gamma_rejects_nonpositive() {
        assert!(log_gamma(0.0).is_nan());
        assert!(log_gamma(-3.5).is_nan());
        assert!(log_gamma(f64::NAN).is_nan());
    }

    #[test]
    fn stirling_n1_touches_upper_bound() {
        let r = stirling_check(1).unwrap();
        assert!(r.pass);
        assert!((r.lower - (2.0 * PI).sqrt() / std::f64::consts::E).abs() < 1e-12);
        assert!((r.measured - 1.0).abs() < 1e-12);
        assert!((r.upper - 1.0).abs() < 1e-12);
    }

    #[test]
    fn stirling_whole_admitted_range_passes() {
        for n in 1..=170 {
            let r = stirling_check(n).unwrap();
            assert!(r.pass, "n = {n}: {r}");
            assert!(r.lower.is_finite() && r.measured.is_finite() && r.upper.is_finite());
            assert!(r.lower <= r.measured * (1.0 + 1e-9));
        }
    }

    #[test]
    fn stirling_rejects_out_of_range() {
        assert!(matches!(stirling_check(0), Err(Error::Domain(_))));
        assert!(matches!(stirling_check(171), Err(Error::Domain(_))));
    }

    #[test]
    fn gauss_rule_one_and_two_nodes() {
        let r1 = gauss_legendre(1).unwrap();
        assert!(r1.nodes[0].abs() < 1e-15);
        assert!((r1.weights[0] - 2.0).abs() < 1e-15);

        let r2 = gauss_legendre(2).unwrap();
        let x = 0.577_350_269_189_625_7;
        assert!((r2.nodes[0] + x).abs() < 1e-15);
        assert!((r2.nodes[1] - x).abs() < 1e-15);
    }

    #[test]
    fn gauss_rule_weight_sums_and_ordering() {
        for count in [3usize, 8, 64, 333, 1024] {
            let r = gauss_legendre(count).unwrap();
            let total: f64 = r.weights.iter().sum();
            assert!((total - 2.0).abs() <= 1e-12, "count {count}: sum {total}");
            for w in &r.weights {
                assert!(*w > 0.0);
            }
            for pair in r.nodes.windows(2) {
                assert!(pair[0] < pair[1]);
            }
        }
    }

    #[test]
    fn gauss_rule_polynomial_exactness() {
        // count-node rule is exact through degree 2*count - 1.
        for count in 1..=12usize {
            let r = gauss_legendre(count).unwrap();
            for degree in 0..=(2 * count - 1) {
                let got = r.integrate_on(-1.0, 1.0, |x| x.powi(degree as i32));
                let expect = if degree % 2 == 1 {
                    0.0
                } else {
                    2.0 / (degree as f64 + 1.0)
                };
                assert!(
                    (got - expect).abs() <= 1e-12,
                    "count {count} degree {degree}: {got} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn gauss_rule_rejects_bad_counts() {
        assert!(matches!(gauss_legendre(0), Err(Error::Domain(_))));
        assert!(matches!(gauss_legendre(4097), Err(Error::Domain(_))));
    }

    #[test]
    fn composite_rule_integrates_sine() {
        let base = gauss_legendre(8).unwrap();
        let rule = composite_rule(&base, 0.0, PI, 8).unwrap();
        let got = rule.integrate(|x| x.sin());
        assert!((got - 2.0).abs() < 1e-13, "{got}");
        assert_eq!(rule.lo(), 0.0);
        assert_eq!(rule.hi(), PI);
    }

    #[test]
    fn periodic_constant_is_immediate() {
        let spec = QuadratureSpec::default();
        let got = integrate_periodic(|_| 1.0, &spec).unwrap();
        assert!((got - TAU).abs() < 1e-14);
    }

    #[test]
    fn periodic_abs_cosine() {
        let spec = QuadratureSpec::with_tolerance(1e-9).unwrap();
        let got = integrate_periodic(|phi| phi.cos().abs(), &spec).unwrap();
        assert!((got - 4.0).abs() <= 1e-8, "{got}");
    }

    #[test]
    fn periodic_abs_one_plus_phase() {
        // |1 + e^{i phi}| = 2 |cos(phi/2)| integrates to 8.
        let spec = QuadratureSpec::with_tolerance(1e-9).unwrap();
        let got = integrate_periodic(
            |phi| ((1.0 + phi.cos()).powi(2) + phi.sin().powi(2)).sqrt(),
            &spec,
        )
        .unwrap();
        assert!((got - 8.0).abs() <= 1e-8, "{got}");
    }

    #[test]
    fn trapezoid_exact_for_trig_polynomials_before_doubling() {
        // Degree 12 with any node count above 2*12 + 1.
        let f = |phi: f64| {
            1.0 + (7.0 * phi).cos() + (12.0 * phi).sin() - 0.5 * (12.0 * phi).cos()
        };
        let got = trapezoid_periodic(&f, 26);
        assert!((got - TAU).abs() <= 1e-12 * TAU, "{got}");
    }

    #[test]
    fn folded_sampling_matches_full_sampling_for_even_integrands() {
        let f = |phi: f64| (1.0 + phi.cos()).abs().sqrt() + (3.0 * phi).cos();
        for m in [16usize, 64, 250] {
            let m = m + m % 2;
            let full = full_base_sum(&f, m);
            let folded = folded_base_sum(&f, m);
            assert!(
                (full - folded).abs() <= 1e-12 * full.abs().max(1.0),
                "m = {m}"
            );
            let full_r = full_refinement_sum(&f, m);
            let folded_r = folded_refinement_sum(&f, m);
            assert!(
                (full_r - folded_r).abs() <= 1e-12 * full_r.abs().max(1.0),
                "m = {m}"
            );
        }
    }

    #[test]
    fn periodic_nonconvergence_reports_last_two_values() {
        let spec = QuadratureSpec::new(1e-12, 2, 16, 10.0).unwrap();
        // Kinks force O(h^2) convergence, far slower than the budget allows.
        let f = |phi: f64| phi.cos().abs();
        match integrate_periodic(f, &spec) {
            Err(Error::QuadratureNonConvergence {
                doublings,
                previous,
                last,
            }) => {
                assert_eq!(doublings, 2);
                assert!(previous.is_finite() && last.is_finite());
                assert_ne!(previous, last);
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn radial_moment_of_gaussian() {
        let spec = QuadratureSpec::with_tolerance(1e-10).unwrap();
        let got =
            integrate_radial_gaussian(|t| t * (-PI * t * t / 2.0).exp(), 0.0, PI / 2.0, &spec)
                .unwrap();
        let expect = 1.0 / PI;
        assert!((got - expect).abs() <= 1e-9 * expect, "{got}");
    }

    #[test]
    fn radial_zero_function() {
        let spec = QuadratureSpec::default();
        let got = integrate_radial_gaussian(|_| 0.0, 2.0, PI, &spec).unwrap();
        assert_eq!(got, 0.0);
    }

    #[test]
    fn radial_shifted_gaussian_matches_dense_trapezoid_oracle() {
        let spec = QuadratureSpec::with_tolerance(1e-10).unwrap();
        let g = |t: f64| (-PI * (t - 3.0) * (t - 3.0) / 2.0).exp();
        let got = integrate_radial_gaussian(g, 3.0, PI / 2.0, &spec).unwrap();

        // Dense fixed-step trapezoid over the same truncated interval.
        let reach = spec.radial_margin / (PI / 2.0f64).sqrt();
        let (lo, hi) = (0.0f64.max(3.0 - reach), 3.0 + reach);
        let n = 1_000_000usize;
        let h = (hi - lo) / n as f64;
        let mut oracle = 0.5 * (g(lo) + g(hi));
        for j in 1..n {
            oracle += g(lo + h * j as f64);
        }
        oracle *= h;

        assert!(
            (got - oracle).abs() <= 1e-9 * oracle.abs(),
            "{got} vs {oracle}"
        );
    }

    #[test]
    fn radial_rejects_bad_arguments() {
        let spec = QuadratureSpec::default();
        assert!(matches!(
            integrate_radial_gaussian(|_| 0.0, -1.0, PI, &spec),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            integrate_radial_gaussian(|_| 0.0, 1.0, 1.0, &spec),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn radial_flags_non_finite_samples() {
        let spec = QuadratureSpec::default();
        let got = integrate_radial_gaussian(|t| (t - 1.0).ln(), 1.0, PI, &spec);
        assert!(matches!(got, Err(Error::Numerical(_))));
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(0.0, 20, 256, 10.0).is_err());
        assert!(QuadratureSpec::new(2e-2, 20, 256, 10.0).is_err());
        assert!(QuadratureSpec::new(1e-6, 25, 256, 10.0).is_err());
        assert!(QuadratureSpec::new(1e-6, 0, 256, 10.0).is_err());
        assert!(QuadratureSpec::new(1e-6, 20, 8, 10.0).is_err());
        assert!(QuadratureSpec::new(1e-6, 20, 256, 3.0).is_err());
        assert!(QuadratureSpec::new(1e-6, 20, 256, 10.0).is_ok());
    }
}
