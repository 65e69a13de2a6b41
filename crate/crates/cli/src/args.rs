use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "polymix", version, about = "Exact volumes, mixed volumes and Brunn-Minkowski checks for rational polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Digits after the point in decimal renderings.
    #[arg(long, global = true, default_value_t = 50)]
    pub digits: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    BaseHeight,
    Interp,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Bm,
    Mmv,
    Mmv1,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact volume of a body.
    Volume { body: PathBuf },
    /// Mixed volume V_{n-1,1}(A, B).
    Mixedvol {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Check one of the inequalities on a pair of bodies.
    Check {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum)]
        form: FormArg,
        /// Interpolation parameter p/q in [0, 1]; required for bm.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Decide the equality case: homothety witness or a refuting sweep entry.
    Diagnose {
        a: PathBuf,
        b: PathBuf,
        /// "k/N" for k = 0..N, or a comma list of rationals.
        #[arg(long, default_value = "k/8")]
        lambda_grid: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Seeded random full-dimensional body.
    RandomBody {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=4))]
        dim: u8,
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Orthogonal projection onto a subspace or onto w^perp.
    #[command(group(ArgGroup::new("target").required(true).args(["direction", "basis"])))]
    Project {
        body: PathBuf,
        /// Project onto the hyperplane orthogonal to this vector, e.g. "1,0,1/2".
        #[arg(long)]
        direction: Option<String>,
        /// Basis vectors separated by ';', e.g. "1,0,0;0,1,0".
        #[arg(long)]
        basis: Option<String>,
    },
    /// Steiner symmetral along a direction, or a rounding iteration.
    #[command(group(ArgGroup::new("mode").required(true).args(["direction", "steps"])))]
    Steiner {
        body: PathBuf,
        #[arg(long)]
        direction: Option<String>,
        /// Number of rounding steps (planar bodies).
        #[arg(long)]
        steps: Option<usize>,
        /// Rounding schedule: directions separated by ';' (default: Farey cycle of order 4).
        #[arg(long, requires = "steps")]
        schedule: Option<String>,
        /// Spatial symmetral with projected vertices as the only breakpoints.
        #[arg(long)]
        triangulated: bool,
    },
    /// Recover a planar support function from mixed areas; optionally test translates.
    Reconstruct {
        body: PathBuf,
        #[arg(long)]
        other: Option<PathBuf>,
    },
    /// Homothety witness for a pair, optionally via hyperplane shadows.
    Homothety {
        a: PathBuf,
        b: PathBuf,
        /// Decide through shadows and normalization (dimension 3 and 4).
        #[arg(long)]
        projections: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
}
