// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line arguments and the run configuration built from them.

use std::path::PathBuf;

use cartan_core::bertrand::{BertrandOptions, CONDITION_TOL};
use cartan_core::curve::{Curve, Interval, DEFAULT_ORDER, PSEUDO_ARC_TOL};
use cartan_core::frame::{FrameOptions, DEGENERACY_TOL};
use clap::{Args, Parser, Subcommand};

use crate::error::{CliError, CliResult};
use crate::output::Format;

pub const DEFAULT_SAMPLES: usize = 64;
pub const DEFAULT_TOL_GRAM: f64 = 1e-8;
pub const DEFAULT_TOL_FRENET: f64 = 1e-8;
pub const DEFAULT_TOL_MATE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "cartan",
    version,
    about = "Cartan frames, Bertrand classification and mates of null curves in Minkowski 4-space",
    after_help = "Exit codes: 0 ok, 1 validation or condition failure, 2 degenerate curve, 3 parse or I/O error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cartan frame and curvatures on a grid.
    Frame {
        /// Curve spec file (JSON).
        spec: PathBuf,
    },
    /// Bertrand case of given or fitted constants, plus the classical obstruction.
    Classify {
        spec: PathBuf,
        #[command(flatten)]
        constants: ConstantArgs,
    },
    /// Construct the (1,2)-Bertrand mate and check it point by point.
    Mate {
        spec: PathBuf,
        #[command(flatten)]
        constants: ConstantArgs,
        /// Also write the mate as CSV samples `s_bar,x0,x1,x2,x3`.
        #[arg(long, value_name = "PATH")]
        plot: Option<PathBuf>,
    },
    /// Residual suite over every `*.json` spec in a directory.
    Verify { dir: PathBuf },
    /// Write the built-in example specs into the `--output` directory
    /// (default `corpus`).
    Corpus,
    /// Quick built-in checks against closed forms.
    Selftest,
}

#[derive(Debug, Clone, Args)]
pub struct ConstantArgs {
    /// Coefficient of W1 in the mate offset.
    #[arg(long, allow_negative_numbers = true, requires = "beta")]
    pub alpha: Option<f64>,
    /// Coefficient of W2 in the mate offset.
    #[arg(long, allow_negative_numbers = true, requires = "alpha")]
    pub beta: Option<f64>,
    /// Fit α·k1 + β·k2 = 1 by least squares instead of giving constants.
    #[arg(long, conflicts_with_all = ["alpha", "beta"])]
    pub fit: bool,
}

impl ConstantArgs {
    pub fn given(&self) -> Option<(f64, f64)> {
        self.alpha.zip(self.beta)
    }
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Number of grid points.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    /// Grid range `lo:hi` inside the curve domain (pseudo-arc parameter).
    #[arg(long, global = true, value_name = "LO:HI", allow_hyphen_values = true, value_parser = parse_range)]
    pub range: Option<(f64, f64)>,
    /// Jet order used to evaluate curves; mates need at least 9.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    /// Gram-matrix residual tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL_GRAM)]
    pub tol_gram: f64,
    /// Frenet-system residual tolerance.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL_FRENET)]
    pub tol_frenet: f64,
    /// Tolerance on the Bertrand condition, the case I margin and ℓ0 constancy.
    #[arg(long, global = true, default_value_t = CONDITION_TOL)]
    pub tol_cond: f64,
    /// Tolerance on |<c',c'>| and |<c'',c''> - 1|.
    #[arg(long, global = true, default_value_t = PSEUDO_ARC_TOL)]
    pub tol_arc: f64,
    /// Tolerance on mate prediction residuals.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL_MATE)]
    pub tol_mate: f64,
    /// Below this |k2| a curve is degenerate.
    #[arg(long, global = true, default_value_t = DEGENERACY_TOL)]
    pub tol_degenerate: f64,
    /// Output file; standard output when absent.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Worker threads; does not change the output.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
}

fn parse_range(text: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = text.split_once(':').ok_or("expected LO:HI")?;
    let lo: f64 = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad upper bound: {e}"))?;
    Ok((lo, hi))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub gram: f64,
    pub frenet: f64,
    pub cond: f64,
    pub arc: f64,
    pub mate: f64,
    pub degenerate: f64,
}

/// Validated settings shared by all commands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub samples: usize,
    pub range: Option<(f64, f64)>,
    pub order: usize,
    pub tol: Tolerances,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub jobs: Option<usize>,
}

impl RunConfig {
    pub fn from_args(args: &CommonArgs) -> CliResult<Self> {
        if args.samples < 2 {
            return Err(CliError::Config(format!(
                "--samples must be at least 2, got {}",
                args.samples
            )));
        }
        if args.order < 5 {
            return Err(CliError::Config(format!(
                "--order must be at least 5, got {}",
                args.order
            )));
        }
        let tol = Tolerances {
            gram: args.tol_gram,
            frenet: args.tol_frenet,
            cond: args.tol_cond,
            arc: args.tol_arc,
            mate: args.tol_mate,
            degenerate: args.tol_degenerate,
        };
        for (name, v) in [
            ("--tol-gram", tol.gram),
            ("--tol-frenet", tol.frenet),
            ("--tol-cond", tol.cond),
            ("--tol-arc", tol.arc),
            ("--tol-mate", tol.mate),
            ("--tol-degenerate", tol.degenerate),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Config(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        if let Some((lo, hi)) = args.range {
            if !(lo < hi) {
                return Err(CliError::Config(format!(
                    "--range needs lo < hi, got {lo}:{hi}"
                )));
            }
        }
        if args.jobs == Some(0) {
            return Err(CliError::Config("--jobs must be at least 1".into()));
        }
        Ok(RunConfig {
            samples: args.samples,
            range: args.range,
            order: args.order,
            tol,
            output: args.output.clone(),
            format: args.format,
            jobs: args.jobs,
        })
    }

    pub fn frame_options(&self) -> FrameOptions {
        FrameOptions {
            order: self.order,
            pseudo_arc_tol: self.tol.arc,
            degeneracy_tol: self.tol.degenerate,
        }
    }

    pub fn bertrand_options(&self) -> BertrandOptions {
        BertrandOptions {
            frame: self.frame_options(),
            cond_tol: self.tol.cond,
            ell0_tol: self.tol.cond,
        }
    }

    /// `samples` evenly spaced points over the curve domain or `--range`.
    pub fn grid(&self, curve: &impl Curve) -> CliResult<Vec<f64>> {
        let domain = curve.domain();
        let interval = match self.range {
            None => domain,
            Some((lo, hi)) => {
                if !(domain.contains(lo) && domain.contains(hi)) {
                    return Err(CliError::Config(format!(
                        "--range {lo}:{hi} is outside the curve domain [{}, {}]",
                        domain.lo, domain.hi
                    )));
                }
                Interval::new(lo, hi)?
            }
        };
        Ok(interval.grid(self.samples))
    }
}
