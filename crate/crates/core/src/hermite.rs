//! L²-normalized Hermite functions.
//!
//! The family is generated by the stable upward recurrence
//! `h_{n+1}(t) = 2 sqrt(pi/(n+1)) t h_n(t) - sqrt(n/(n+1)) h_{n-1}(t)`
//! seeded with the unit-norm Gaussian `h_0(t) = 2^{1/4} exp(-pi t^2)`.
//! Each `h_n` has unit L² norm, `h_n` is even/odd with the parity of `n`,
//! and the classically allowed region ends at `sqrt((2n+1)/(2 pi))`.

use crate::error::{Error, Result};
use crate::numerics::LineRule;
use std::f64::consts::PI;

pub const MAX_ORDER: usize = 10_000;
pub const MAX_ARGUMENT: f64 = 100.0;
pub const MAX_TENSOR_DIM: usize = 4;

/// Values `h_0(t), ..., h_{n_max}(t)` at a single point.
#[derive(Debug, Clone)]
pub struct HermiteBatch {
    pub n_max: usize,
    pub t: f64,
    pub values: Vec<f64>,
}

/// Evaluates `h_0..h_{n_max}` at `t` by the three-term recurrence.
///
/// For `|t|` large enough that the seed Gaussian underflows, the returned
/// values are zero; over the admitted domain those entries are below the
/// smallest positive double anyway.
pub fn hermite_batch(n_max: usize, t: f64) -> Result<HermiteBatch> {
    if n_max > MAX_ORDER {
        return Err(Error::domain(format!(
            "hermite_batch order must be <= {MAX_ORDER}, got {n_max}"
        )));
    }
    if !(t.is_finite() && t.abs() <= MAX_ARGUMENT) {
        return Err(Error::domain(format!(
            "hermite_batch argument must satisfy |t| <= {MAX_ARGUMENT}, got {t}"
        )));
    }
    let mut values = vec![0.0; n_max + 1];
    values[0] = 2f64.powf(0.25) * (-PI * t * t).exp();
    if n_max >= 1 {
        values[1] = 2.0 * PI.sqrt() * t * values[0];
    }
    for n in 1..n_max {
        let nf = n as f64;
        values[n + 1] = 2.0 * (PI / (nf + 1.0)).sqrt() * t * values[n]
            - (nf / (nf + 1.0)).sqrt() * values[n - 1];
    }
    Ok(HermiteBatch { n_max, t, values })
}

/// Separable product `h_{n_1}(t_1) ... h_{n_d}(t_d)` for dimension `d <= 4`.
pub fn hermite_tensor(orders: &[usize], points: &[f64]) -> Result<f64> {
    if orders.is_empty() || orders.len() > MAX_TENSOR_DIM {
        return Err(Error::domain(format!(
            "tensor dimension must lie in [1, {MAX_TENSOR_DIM}], got {}",
            orders.len()
        )));
    }
    if orders.len() != points.len() {
        return Err(Error::domain(format!(
            "tensor orders and points disagree in length: {} vs {}",
            orders.len(),
            points.len()
        )));
    }
    let mut product = 1.0;
    for (&n, &t) in orders.iter().zip(points) {
        product *= hermite_batch(n, t)?.values[n];
    }
    Ok(product)
}

/// Largest absolute entry of the Gram matrix defect
/// `|<h_m, h_n> - delta_{mn}|` for `m, n <= n_max`, with the inner products
/// taken by the supplied line rule.
///
/// The rule must cover `[-T, T]` with
/// `T = sqrt((2 n_max + 1)/(2 pi)) + 6`, past which every `|h_n|` involved is
/// below 1e-10.
pub fn orthonormality_defect(n_max: usize, rule: &LineRule) -> Result<f64> {
    if n_max > MAX_ORDER {
        return Err(Error::domain(format!(
            "orthonormality_defect order must be <= {MAX_ORDER}, got {n_max}"
        )));
    }
    let needed = decay_radius(n_max);
    if rule.lo() > -needed || rule.hi() < needed {
        return Err(Error::domain(format!(
            "rule covers [{}, {}] but orders up to {} need [-{needed:.3}, {needed:.3}]",
            rule.lo(),
            rule.hi(),
            n_max
        )));
    }
    let dim = n_max + 1;
    let mut gram = vec![0.0; dim * dim];
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        let batch = hermite_batch(n_max, *x)?;
        for m in 0..dim {
            let wm = w * batch.values[m];
            for n in m..dim {
                gram[m * dim + n] += wm * batch.values[n];
            }
        }
    }
    let mut defect = 0.0f64;
    for m in 0..dim {
        for n in m..dim {
            let target = if m == n { 1.0 } else { 0.0 };
            defect = defect.max((gram[m * dim + n] - target).abs());
        }
    }
    Ok(defect)
}

/// Radius past which `|h_n| <= 1e-10` for every order up to `n_max`: the
/// classical turning point plus a six-unit guard.
pub fn decay_radius(n_max: usize) -> f64 {
    ((2.0 * n_max as f64 + 1.0) / (2.0 * PI)).sqrt() + 6.0
}
