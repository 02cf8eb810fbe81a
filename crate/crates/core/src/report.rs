//! Two-sided bound check results.

use std::fmt;

/// Result of checking `lower <= measured <= upper` with a tolerance-scaled
/// slack.
///
/// The slack is `quad_tolerance * max(1, |measured|)`, so the check is
/// relative for large measured values and absolute near zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub lower: f64,
    pub measured: f64,
    pub upper: f64,
    pub quad_tolerance: f64,
    pub pass: bool,
}

impl BoundReport {
    /// Builds a report, deciding `pass` from the stored values.
    pub fn evaluate(lower: f64, measured: f64, upper: f64, quad_tolerance: f64) -> Self {
        let slack = Self::slack_for(measured, quad_tolerance);
        let pass = lower - slack <= measured && measured <= upper + slack;
        BoundReport {
            lower,
            measured,
            upper,
            quad_tolerance,
            pass,
        }
    }

    /// The slack actually applied on each side of the comparison.
    pub fn slack(&self) -> f64 {
        Self::slack_for(self.measured, self.quad_tolerance)
    }

    fn slack_for(measured: f64, quad_tolerance: f64) -> f64 {
        quad_tolerance * measured.abs().max(1.0)
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:.12e} <= {:.12e} <= {:.12e} (slack {:.3e}): {}",
            self.lower,
            self.measured,
            self.upper,
            self.slack(),
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_inside_bounds() {
        let r = BoundReport::evaluate(0.0, 0.5, 1.0, 1e-9);
        assert!(r.pass);
    }

    #[test]
    fn slack_rescues_boundary_touch() {
        let r = BoundReport::evaluate(0.0, 1.0 + 5e-10, 1.0, 1e-9);
        assert!(r.pass);
        let r = BoundReport::evaluate(0.0, 1.0 + 5e-9, 1.0, 1e-9);
        assert!(!r.pass);
    }

    #[test]
    fn slack_is_absolute_for_small_values() {
        let r = BoundReport::evaluate(1e-3, 1e-3 - 5e-10, 1.0, 1e-9);
        assert!(r.pass);
        assert_eq!(r.slack(), 1e-9);
    }
}
