//! Experiment driver: every subcommand runs one sweep from the library,
//! writes one CSV, prints a one-line summary, and encodes the outcome in
//! the exit code (0 all checks pass, 1 a bound check failed, 2 invalid
//! arguments, 3 quadrature non-convergence).

mod output;
mod ranges;

use clap::{Parser, Subcommand};
use hermspace::numerics::QuadratureSpec;
use hermspace::operators::{
    apply_multiplier, bochner_riesz_error, c_gamma_norm, dirichlet_l1, probe_phase_point,
    sn_growth_lower_bound, sn_probe_m1, torus_partial_sum_lp_ratio, truncation_error,
    MultiplierSymbol,
};
use hermspace::phase_space::{
    m1_hermite_asymptote, m1_hermite_closed_form, mp_norm, shifted_gaussian_coeffs,
    shifted_gaussian_order, tensor_mp_norm, HermiteCoeffs, PhasePoint,
};
use hermspace::poisson_poly::{check_sandwich, second_diff_coeffs};
use hermspace::zak_gabor::{bessel_sum, rel_lattice, zak_sup, Lattice2D, RelMode};
use num_complex::Complex64;
use output::{sig12, write_csv};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use ranges::{FloatList, IntRange, PointArg};
use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "hermspace", version, about = "Hermite expansion and time-frequency sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower/upper envelope check for the angular L1 of the weighted
    /// partial sums, over a (t, N) grid.
    PnBounds {
        #[arg(long, default_value = "1,2,5,10,50,100,400")]
        t: FloatList,
        #[arg(long, default_value = "0..60")]
        n: IntRange,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Random second-difference re-summation identities on the unit circle.
    PnIdentities {
        #[arg(long, default_value_t = 1000)]
        instances: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Feichtinger-norm growth probe for partial sums against its
    /// logarithmic lower bound.
    SnGrowth {
        #[arg(long, default_value = "3..2000:log24")]
        n: IntRange,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Truncation error decay of a power-law expansion in M^p.
    MpConvergence {
        #[arg(long, default_value = "4/3,2,4")]
        p: FloatList,
        #[arg(long, default_value = "4..512:log8")]
        n: IntRange,
        #[arg(long, default_value_t = 1024)]
        n_max: usize,
        #[arg(long, default_value_t = 2.0)]
        decay: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Bochner-Riesz approximation error decay for the same vector family.
    BochnerRiesz {
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value = "1,2")]
        p: FloatList,
        #[arg(long, default_value = "4..512:log8")]
        n: IntRange,
        #[arg(long, default_value_t = 1024)]
        n_max: usize,
        #[arg(long, default_value_t = 2.0)]
        decay: f64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Closed-form M1 norms of the basis functions against the fourth-root
    /// asymptote.
    M1Hermite {
        #[arg(long, default_value = "1..500")]
        n: IntRange,
        #[arg(long)]
        out: PathBuf,
    },
    /// Weighted coefficient norms across a ladder of weight exponents.
    CgammaCompare {
        #[arg(long, default_value = "0,0.5,1,2")]
        gammas: FloatList,
        #[arg(long, default_value_t = 5)]
        instances: usize,
        #[arg(long, default_value_t = 40)]
        n_max: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Dirichlet Lebesgue constants and random partial-sum ratios on the
    /// torus.
    TorusRiesz {
        #[arg(long, default_value = "2,4")]
        p: FloatList,
        #[arg(long, default_value = "8..512:log7")]
        n: IntRange,
        #[arg(long, default_value_t = 8)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Grid sup of the folded basis functions on the unit square.
    ZakSup {
        #[arg(long, default_value = "0..150")]
        n: IntRange,
        #[arg(long, default_value_t = 256)]
        grid: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Lattice Bessel sums scaled by packing count and order.
    BesselBounds {
        #[arg(long, default_value = "square,half,hex")]
        lattice: LatticeList,
        #[arg(long, default_value = "1..100:log8")]
        n: IntRange,
        #[arg(long, default_value = "0.3,0.7")]
        probe: PointArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Product-structure check: the planar probe norm against the squared
    /// line value.
    TensorCheck {
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[arg(long, default_value = "1")]
        p: FloatList,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LatticeKind {
    Square,
    Half,
    Hex,
}

impl LatticeKind {
    fn name(self) -> &'static str {
        match self {
            LatticeKind::Square => "square",
            LatticeKind::Half => "half",
            LatticeKind::Hex => "hex",
        }
    }

    fn build(self) -> (Lattice2D, RelMode) {
        match self {
            LatticeKind::Square => (Lattice2D::integer(), RelMode::ExactRectangular),
            LatticeKind::Half => (
                Lattice2D::rectangular(0.5, 1.0).expect("valid spacing"),
                RelMode::ExactRectangular,
            ),
            LatticeKind::Hex => (Lattice2D::hexagonal(), RelMode::SlidingEstimate),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct LatticeList(Vec<LatticeKind>);

impl FromStr for LatticeList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let kinds = s
            .split(',')
            .map(|name| match name.trim() {
                "square" => Ok(LatticeKind::Square),
                "half" => Ok(LatticeKind::Half),
                "hex" => Ok(LatticeKind::Hex),
                other => Err(format!(
                    "unknown lattice {other:?}, expected square, half, or hex"
                )),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if kinds.is_empty() {
            return Err("empty lattice list".into());
        }
        Ok(LatticeList(kinds))
    }
}

struct Summary {
    label: &'static str,
    rows: usize,
    checks: usize,
    failures: usize,
    out: PathBuf,
}

enum RunError {
    Lib(hermspace::Error),
    Io(std::io::Error),
}

impl From<hermspace::Error> for RunError {
    fn from(e: hermspace::Error) -> Self {
        RunError::Lib(e)
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e)
    }
}

fn uniform(rng: &mut ChaCha8Rng) -> f64 {
    ((rng.next_u64() >> 11) + 1) as f64 * (-53.0f64).exp2()
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u = uniform(rng);
    let v = uniform(rng);
    (-2.0 * u.ln()).sqrt() * (2.0 * PI * v).cos()
}

fn run(command: Command) -> Result<Summary, RunError> {
    match command {
        Command::PnBounds { t, n, tol, out } => {
            let spec = QuadratureSpec::with_tolerance(tol)?;
            let mut rows = Vec::new();
            let mut failures = 0;
            for &t in &t.0 {
                for &n in &n.0 {
                    let report = check_sandwich(t, n, &spec)?;
                    if !report.pass {
                        failures += 1;
                    }
                    rows.push(format!(
                        "{},{n},{},{},{},{}",
                        sig12(t),
                        sig12(report.lower),
                        sig12(report.measured),
                        sig12(report.upper),
                        report.pass
                    ));
                }
            }
            write_csv(&out, "t,N,lower,measured,upper,pass", 0, &rows)?;
            Ok(Summary {
                label: "pn-bounds",
                rows: rows.len(),
                checks: rows.len(),
                failures,
                out,
            })
        }
        Command::PnIdentities {
            instances,
            seed,
            tol,
            out,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut rows = Vec::new();
            let mut failures = 0;
            for instance in 0..instances {
                let len = 2 + (rng.next_u64() % 39) as usize;
                let q: Vec<f64> = (0..len).map(|_| standard_normal(&mut rng)).collect();
                let r = second_diff_coeffs(&q)?;
                let mass: f64 = q.iter().map(|v| v.abs()).sum();
                let mut residual = 0.0f64;
                for &phi in &[0.3f64, 1.1, 2.7] {
                    let z = Complex64::from_polar(1.0, phi);
                    let horner =
                        |c: &[f64]| c.iter().rev().fold(Complex64::ZERO, |acc, &v| acc * z + v);
                    let gap =
                        (horner(&r) - (Complex64::ONE - z) * (Complex64::ONE - z) * horner(&q))
                            .norm();
                    residual = residual.max(gap);
                }
                let pass = residual <= tol * mass;
                if !pass {
                    failures += 1;
                }
                rows.push(format!(
                    "{instance},{len},{},{},{pass}",
                    sig12(residual),
                    sig12(mass)
                ));
            }
            write_csv(&out, "instance,len,residual,mass,pass", seed, &rows)?;
            Ok(Summary {
                label: "pn-identities",
                rows: instances,
                checks: instances,
                failures,
                out,
            })
        }
        Command::SnGrowth { n, tol, out } => {
            let spec = QuadratureSpec::with_tolerance(tol)?;
            let mut rows = Vec::new();
            let mut failures = 0;
            for &n in &n.0 {
                let probe = sn_probe_m1(n, &spec)?;
                let bound = sn_growth_lower_bound(n);
                if probe / 2.0 < bound {
                    failures += 1;
                }
                rows.push(format!(
                    "{n},{},{},{}",
                    sig12(probe),
                    sig12(bound),
                    sig12(probe / (n as f64).ln())
                ));
            }
            write_csv(&out, "N,probe_m1,lower_bound,ratio_to_logN", 0, &rows)?;
            Ok(Summary {
                label: "sn-growth",
                rows: rows.len(),
                checks: rows.len(),
                failures,
                out,
            })
        }
        Command::MpConvergence {
            p,
            n,
            n_max,
            decay,
            tol,
            out,
        } => {
            let spec = QuadratureSpec::with_tolerance(tol)?;
            let f = power_law_vector(n_max, decay)?;
            let mut rows = Vec::new();
            let mut failures = 0;
            for &p in &p.0 {
                let mut previous = f64::INFINITY;
                for &cutoff in &n.0 {
                    let err = truncation_error(&f, cutoff, p, &spec)?;
                    if err >= previous {
                        failures += 1;
                    }
                    previous = err;
                    rows.push(format!("{},{cutoff},{}", sig12(p), sig12(err)));
                }
            }
            write_csv(&out, "p,cutoff,error", 0, &rows)?;
            Ok(Summary {
                label: "mp-convergence",
                rows: rows.len(),
                checks: rows.len(),
                failures,
                out,
            })
        }
        Command::BochnerRiesz {
            alpha,
            p,
            n,
            n_max,
            decay,
            tol,
            out,
        } => {
            let spec = QuadratureSpec::with_tolerance(tol)?;
            let f = power_law_vector(n_max, decay)?;
            let mut rows = Vec::new();
            let mut failures = 0;
            for &p in &p.0 {
                let mut previous = f64::INFINITY;
                for &cutoff in &n.0 {
                    let err = bochner_riesz_error(&f, cutoff, alpha, p, &spec)?;
                    if err >= previous {
                        failures += 1;
                    }
                    previous = err;
                    rows.push(format!("{},{cutoff},{}", sig12(p), sig12(err)));
                }
            }
            write_csv(&out, "p,cutoff,error", 0, &rows)?;
            Ok(Summary {
                label: "bochner-riesz",
                rows: rows.len(),
                checks: rows.len(),
                failures,
                out,
            })
        }
        Command::M1Hermite { n, out } => {
            let mut rows = Vec::new();
            let mut failures = 0;
            for &n in &n.0 {
                let closed = m1_hermite_closed_form(n);
                let asymptote = m1_hermite_asymptote(n);
                let ratio = closed / asymptote;
                let pass = n < 8 || (ratio - 1.0).abs() <= 2.0 / n as f64;
                if !pass {
                    failures += 1;
                }
                rows.push(format!(
                    "{n},{},{},{},{pass}",
                    sig12(closed),
                    sig12(asymptote),
                    sig12(ratio)
                ));
            }
            write_csv(&out, "n,closed_form,asymptote,ratio,pass", 0, &rows)?;
            Ok(Summary {
                label: "m1-hermite",
                rows: rows.len(),
                checks: rows.len(),
                failures,
                out,
            })
        }
        Command::CgammaCompare {
            gammas,
            instances,
            n_max,
            seed,
            out,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut rows = Vec::new();
            let mut checks = 0;
            let mut failures = 0;
            for instance in 0..instances {
                let c: Vec<Complex64> = (0..=n_max)
                    .map(|_| {
                        Complex64::new(standard_normal(&mut rng), standard_normal(&mut rng))
                    })
                    .collect();
                let f = HermiteCoeffs::new(c)?;
                let norms: Vec<(f64, f64)> = gammas
                    .0
                    .iter()
                    .map(|&g| Ok((g, c_gamma_norm(&f, g)?)))
                    .collect::<Result<_, hermspace::Error>>()?;
                let mut sorted = norms.clone();
                sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
                for pair in sorted.windows(2) {
                    checks += 1;
                    if pair[0].1 > pair[1].1 * (1.0 + 1e-12) {
                        failures += 1;
                    }
                }
                for (g, norm) in &norms {
                    rows.push(format!("{instance},{},{}", sig12(*g), sig12(*norm)));
                }
            }
            write_csv(&out, "instance,gamma,cgamma_norm", seed, &rows)?;
            Ok(Summary {
                label: "cgamma-compare",
                rows: rows.len(),
                checks,
                failures,
                out,
            })
        }
        Command::TorusRiesz {
            p,
            n,
            trials,
            seed,
            tol,
            out,
        } => {
            let spec = QuadratureSpec::with_tolerance(tol)?;
            let mut rows = Vec::new();
            let mut checks = 0;
            let mut failures = 0;
            for &n in &n.0 {
                let lebesgue = dirichlet_l1(n, &spec)?;
                for &p in &p.0 {
                    let ratio = torus_partial_sum_lp_ratio(n, p, trials, seed)?;
                    if p == 2.0 {
                        checks += 1;
                        if (ratio - 1.0).abs() > 1e-9 {
                            failures += 1;
                        }
                    }
                    rows.push(format!(
                        "{n},{},{},{}",
                        sig12(p),
                        sig12(ratio),
                        sig12(lebesgue)
                    ));
                }
            }
            write_csv(&out, "N,p,max_ratio,dirichlet_l1", seed, &rows)?;
            Ok(Summary {
                label: "torus-riesz",
                rows: rows.len(),
                checks,
                failures,
                out,
            })
        }
        Command::ZakSup { n, grid, out } => {
            let mut rows = Vec::new();
            for &n in &n.0 {
                let (sup, ratio) = zak_sup(n, grid)?;
                rows.push(format!("{n},{},{}", sig12(sup), sig12(ratio)));
            }
            write_csv(&out, "n,sup,ratio", 0, &rows)?;
            Ok(Summary {
                label: "zak-sup",
                rows: rows.len(),
                checks: 0,
                failures: 0,
                out,
            })
        }
        Command::BesselBounds {
            lattice,
            n,
            probe,
            out,
        } => {
            let w = PhasePoint::new(probe.0, probe.1)?;
            let mut rows = Vec::new();
            for kind in &lattice.0 {
                let (lat, mode) = kind.build();
                let rel = rel_lattice(&lat, mode)?;
                for &n in &n.0 {
                    let radius = w.abs() + 5.0 + ((n as f64 + 1.0) / PI).sqrt() + 0.5;
                    let sum = bessel_sum(n, &lat, &w, radius)?;
                    let scaled = sum / (rel as f64 * (n as f64 + 1.0).sqrt());
                    rows.push(format!(
                        "{},{n},{rel},{},{}",
                        kind.name(),
                        sig12(sum),
                        sig12(scaled)
                    ));
                }
            }
            write_csv(&out, "lattice,n,rel,bessel,scaled_ratio", 0, &rows)?;
            Ok(Summary {
                label: "bessel-bounds",
                rows: rows.len(),
                checks: 0,
                failures: 0,
                out,
            })
        }
        Command::TensorCheck { n, p, tol, out } => {
            let spec = QuadratureSpec::with_tolerance(tol)?;
            let z = probe_phase_point(n);
            let full = shifted_gaussian_coeffs(&z, shifted_gaussian_order(&z))?;
            let cut = apply_multiplier(&MultiplierSymbol::PartialSum(n), &full)?;
            let mut rows = Vec::new();
            let mut failures = 0;
            for &p in &p.0 {
                let line = mp_norm(&cut, p, &spec)?;
                let plane = tensor_mp_norm(&[cut.clone(), cut.clone()], p, &spec)?;
                let gap = (plane - line * line).abs() / (line * line);
                let pass = gap <= 1e-9;
                if !pass {
                    failures += 1;
                }
                rows.push(format!(
                    "{n},{},{},{},{},{pass}",
                    sig12(p),
                    sig12(line),
                    sig12(plane),
                    sig12(gap)
                ));
            }
            write_csv(
                &out,
                "n,p,line_norm,plane_norm,relative_gap,pass",
                0,
                &rows,
            )?;
            Ok(Summary {
                label: "tensor-check",
                rows: rows.len(),
                checks: rows.len(),
                failures,
                out,
            })
        }
    }
}

fn power_law_vector(n_max: usize, decay: f64) -> Result<HermiteCoeffs, hermspace::Error> {
    let c: Vec<Complex64> = (0..=n_max)
        .map(|n| Complex64::new((1.0 + n as f64).powf(-decay), 0.0))
        .collect();
    HermiteCoeffs::new(c)
}

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("HERMSPACE_THREADS") {
        match v.parse::<usize>() {
            Ok(k) if k >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global();
            }
            _ => {
                eprintln!("HERMSPACE_THREADS must be a positive integer, got {v:?}");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(summary) => {
            println!(
                "{}: {} rows, {} checks, {} failed -> {}",
                summary.label,
                summary.rows,
                summary.checks,
                summary.failures,
                summary.out.display()
            );
            if summary.failures > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(RunError::Lib(err)) => {
            eprintln!("error: {err}");
            match err {
                hermspace::Error::Domain(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
        Err(RunError::Io(err)) => {
            eprintln!("output error: {err}");
            ExitCode::from(2)
        }
    }
}
