use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use indroot::survey::Ceilings;
use indroot::{GraphClass, RootConfig, SurveyOptions};

use crate::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "indroot",
    version,
    about = "Independence polynomials, their roots, and exhaustive surveys of root moduli"
)]
pub struct Cli {
    /// Worker threads for the exhaustive folds.
    #[arg(long, global = true, env = "INDROOT_WORKERS")]
    pub workers: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Largest accepted scaled root residual.
    #[arg(long, global = true, default_value_t = 1e-6, value_name = "TOL")]
    pub tol_residual: f64,

    /// Relative slack when comparing moduli against bounds.
    #[arg(long, global = true, default_value_t = 1e-6, value_name = "TOL")]
    pub tol_modulus: f64,

    /// Enumeration ceiling for one class, e.g. `trees=17`. For
    /// `well-covered` the value is the order of the base tree. Repeatable.
    #[arg(long = "max-n", global = true, value_name = "CLASS=N")]
    pub max_n: Vec<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Polynomial, invariants, annulus and roots of one graph, or of every
    /// graph6 line on stdin when no input flag is given.
    Poly(PolyArgs),
    /// Largest root modulus over every member of a class, per order.
    Survey(SurveyArgs),
    /// Run a suite of exhaustive and exact checks.
    Check(CheckArgs),
    /// Evaluate the closed-form bounds at each order.
    Bounds(BoundsArgs),
}

#[derive(Args, Debug)]
#[group(multiple = false)]
pub struct PolyInput {
    /// graph6 string.
    #[arg(long)]
    pub g6: Option<String>,
    /// Edge list: vertex count, then `u v` per line. A literal `\n` counts
    /// as a newline; `@path` reads a file and `-` reads stdin.
    #[arg(long)]
    pub edges: Option<String>,
    /// Named family: G0, G1, G2, Tk, TkPrime, Path, Star, Complete, Empty,
    /// or a full spec such as `Tk(3)`.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    #[command(flatten)]
    pub input: PolyInput,
    /// Family parameter, used with `--family`.
    #[arg(long, requires = "family")]
    pub k: Option<usize>,
}

#[derive(Args, Debug)]
pub struct SurveyArgs {
    /// graphs, trees, forests or well-covered-trees.
    pub class: String,
    /// Orders to survey: `n` or `a..b` (inclusive). Defaults to every order
    /// up to the class ceiling.
    pub range: Option<String>,
    /// Keep only odd orders of this range.
    #[arg(long, value_name = "RANGE", conflicts_with_all = ["range", "even"])]
    pub odd: Option<String>,
    /// Keep only even orders of this range.
    #[arg(long, value_name = "RANGE", conflicts_with = "range")]
    pub even: Option<String>,
    /// Print the tree comparison tables (n, lower bound, maxmodt, upper bound).
    #[arg(long)]
    pub reproduce_tables: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Ek,
    Ratios,
    Lemmas,
    LowerBounds,
    Wellcovered,
    Conjectures,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Largest family parameter for the lower-bound certificates.
    #[arg(long, default_value_t = 8)]
    pub kmax: usize,
    /// Largest base-tree order in the well-covered scan.
    #[arg(long)]
    pub m: Option<usize>,
    /// Largest graph order.
    #[arg(long)]
    pub graphs: Option<usize>,
    /// Largest tree order.
    #[arg(long)]
    pub trees: Option<usize>,
    /// Largest forest order.
    #[arg(long)]
    pub forests: Option<usize>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    /// `n` or `a..b`.
    pub range: String,
}

/// Everything a command needs besides its own arguments.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub format: Format,
    pub out: Option<PathBuf>,
    pub ceilings: Ceilings,
    pub options: SurveyOptions,
    pub workers: Option<usize>,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        for (name, tol) in [("--tol-residual", cli.tol_residual), ("--tol-modulus", cli.tol_modulus)] {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(CliError::usage(format!("{name} must be positive, got {tol}")));
            }
        }
        if cli.workers == Some(0) {
            return Err(CliError::usage("--workers must be at least 1"));
        }
        let mut ceilings = Ceilings::default();
        for spec in &cli.max_n {
            let (class, n) = spec
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("--max-n expects CLASS=N, got {spec:?}")))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| CliError::usage(format!("bad order in --max-n {spec:?}")))?;
            let class: GraphClass = class.trim().parse().map_err(|e| CliError::usage(format!("{e}")))?;
            set_ceiling(&mut ceilings, class, n);
        }
        ceilings.validate().map_err(|e| CliError::usage(format!("ceiling: {e}")))?;
        let options = SurveyOptions {
            roots: RootConfig {
                residual_threshold: cli.tol_residual,
                ..RootConfig::default()
            },
            modulus_tol: cli.tol_modulus,
            ..SurveyOptions::default()
        };
        Ok(RunConfig {
            format: cli.format,
            out: cli.out.clone(),
            ceilings,
            options,
            workers: cli.workers,
        })
    }
}

pub fn set_ceiling(c: &mut Ceilings, class: GraphClass, n: usize) {
    match class {
        GraphClass::Graphs => c.graphs = n,
        GraphClass::Trees => c.trees = n,
        GraphClass::Forests => c.forests = n,
        GraphClass::WellCoveredTrees => c.well_covered = n,
    }
}

/// Parses `n` or `a..b` (inclusive; `a..=b` also accepted).
pub fn parse_range(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::usage(format!("bad range {s:?}; expected `n` or `a..b`"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let s = s.trim();
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_range("3..=4").unwrap(), vec![3, 4]);
        assert_eq!(parse_range("7").unwrap(), vec![7]);
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("x").is_err());
    }
}
