//! Sweep-range and list parsing for the command line.

use std::str::FromStr;

/// Integer sweep: `a`, `a..b` (inclusive, step one), or `a..b:logK`
/// (K log-spaced values from a to b, deduplicated after rounding).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntRange(pub Vec<usize>);

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (span, log_points) = match s.split_once(':') {
            None => (s, None),
            Some((span, tag)) => {
                let k: usize = tag
                    .strip_prefix("log")
                    .ok_or_else(|| format!("unknown range modifier {tag:?}, expected logK"))?
                    .parse()
                    .map_err(|_| format!("bad log point count in {tag:?}"))?;
                if k < 2 {
                    return Err("log ranges need at least 2 points".into());
                }
                (span, Some(k))
            }
        };
        let (lo, hi) = match span.split_once("..") {
            None => {
                let v = span
                    .parse()
                    .map_err(|_| format!("bad integer {span:?}"))?;
                (v, v)
            }
            Some((a, b)) => (
                a.parse().map_err(|_| format!("bad integer {a:?}"))?,
                b.parse().map_err(|_| format!("bad integer {b:?}"))?,
            ),
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        let values = match log_points {
            None => (lo..=hi).collect(),
            Some(k) => {
                if lo == 0 {
                    return Err("log ranges need a positive lower endpoint".into());
                }
                let step = ((hi as f64) / (lo as f64)).ln() / (k - 1) as f64;
                let mut out: Vec<usize> = (0..k)
                    .map(|i| (lo as f64 * (step * i as f64).exp()).round() as usize)
                    .collect();
                out.dedup();
                out
            }
        };
        Ok(IntRange(values))
    }
}

/// Parses `a/b` fractions as well as plain floats, so exponents like `4/3`
/// keep their exact double value on every invocation.
fn parse_ratio(s: &str) -> Result<f64, String> {
    let v = match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num
                .trim()
                .parse()
                .map_err(|_| format!("bad number {num:?}"))?;
            let den: f64 = den
                .trim()
                .parse()
                .map_err(|_| format!("bad number {den:?}"))?;
            num / den
        }
        None => s
            .trim()
            .parse()
            .map_err(|_| format!("bad number {s:?}"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("non-finite value {s:?}"))
    }
}

/// Comma-separated list of floats (fractions allowed).
#[derive(Debug, Clone, PartialEq)]
pub struct FloatList(pub Vec<f64>);

impl FromStr for FloatList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values: Vec<f64> = s
            .split(',')
            .map(parse_ratio)
            .collect::<Result<_, _>>()?;
        if values.is_empty() {
            return Err("empty list".into());
        }
        Ok(FloatList(values))
    }
}

/// A phase-plane point given as `x,omega`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointArg(pub f64, pub f64);

impl FromStr for PointArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (x, omega) = s
            .split_once(',')
            .ok_or_else(|| format!("expected x,omega, got {s:?}"))?;
        Ok(PointArg(parse_ratio(x)?, parse_ratio(omega)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_ranges() {
        assert_eq!("0..4".parse::<IntRange>().unwrap().0, vec![0, 1, 2, 3, 4]);
        assert_eq!("7".parse::<IntRange>().unwrap().0, vec![7]);
        assert!("5..2".parse::<IntRange>().is_err());
        assert!("a..b".parse::<IntRange>().is_err());
    }

    #[test]
    fn log_ranges() {
        assert_eq!(
            "4..512:log8".parse::<IntRange>().unwrap().0,
            vec![4, 8, 16, 32, 64, 128, 256, 512]
        );
        let grid = "3..2000:log24".parse::<IntRange>().unwrap().0;
        assert_eq!(grid.len(), 24);
        assert_eq!((grid[0], grid[23]), (3, 2000));
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
        assert!("0..5:log3".parse::<IntRange>().is_err());
        assert!("1..5:geo3".parse::<IntRange>().is_err());
        assert!("1..5:log1".parse::<IntRange>().is_err());
    }

    #[test]
    fn float_lists_and_fractions() {
        assert_eq!(
            "1,2.5,10".parse::<FloatList>().unwrap().0,
            vec![1.0, 2.5, 10.0]
        );
        assert_eq!("4/3".parse::<FloatList>().unwrap().0, vec![4.0 / 3.0]);
        assert!("1,,2".parse::<FloatList>().is_err());
        assert!("1/0".parse::<FloatList>().is_err());
    }

    #[test]
    fn point_arguments() {
        assert_eq!("0.3,0.7".parse::<PointArg>().unwrap(), PointArg(0.3, 0.7));
        assert!("0.3".parse::<PointArg>().is_err());
    }
}
