//! `chopcone`: lattice-point counts of chopped and sliced cones, vector
//! partition functions and representation-theoretic multiplicities from the
//! command line.

mod args;
mod cmd_csc;
mod cmd_lattice;
mod cmd_rep;
mod cmd_vpf;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use chopcone::liealg::{Caps, DEFAULT_MODULE_CAP, DEFAULT_TENSOR_CAP};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "chopcone", version, about = "Exact counting in chopped and sliced cones")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Largest module dimension for character computations.
    #[arg(long, global = true, env = "CHOPCONE_MODULE_CAP", default_value_t = DEFAULT_MODULE_CAP)]
    module_cap: u128,
    /// Largest tensor product dimension for decompositions.
    #[arg(long, global = true, env = "CHOPCONE_TENSOR_CAP", default_value_t = DEFAULT_TENSOR_CAP)]
    tensor_cap: u128,
}

impl GlobalOpts {
    pub fn caps(&self) -> Caps {
        Caps {
            module: self.module_cap,
            tensor: self.tensor_cap,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Chopped and sliced cones given as JSON cone files.
    #[command(subcommand)]
    Csc(CscCmd),
    /// Vector partition functions.
    #[command(subcommand)]
    Vpf(VpfCmd),
    /// Weight, Demazure and tensor product multiplicities.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Unimodular embeddings of pointed cones.
    #[command(subcommand)]
    Lattice(LatticeCmd),
}

#[derive(Subcommand, Debug)]
pub enum CscCmd {
    /// Checks that every chop is bounded.
    Validate { file: PathBuf },
    /// Lattice points of the chop, or of one slice with --beta.
    Count {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// The slice count table of one chop.
    Measure {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Exact pairings of scaled measures next to a Monte Carlo limit.
    Converge {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Test function: const, proj<k>, sq<k> or bump(c1,...;radius).
        #[arg(long = "f", default_value = "const")]
        f: String,
        /// Dilation factors.
        #[arg(long, default_value = "1,2,4,8,16")]
        n: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum VpfCmd {
    /// Writes E, B and the embedding A for a cone file as JSON.
    Build {
        file: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Evaluates a vector partition function.
    Eval {
        /// Matrix E inline ("1 1; 0 1") or as a JSON file of rows.
        #[arg(long = "E", conflicts_with = "pair", required_unless_present = "pair")]
        e: Option<String>,
        #[arg(long, requires = "e", allow_hyphen_values = true)]
        y: Option<String>,
        /// Output of `vpf build`; evaluates at B·(lambda, beta).
        #[arg(long)]
        pair: Option<PathBuf>,
        #[arg(long, requires = "pair", allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, requires = "pair", allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// Fits a quasi-polynomial to slice counts along a ray.
    Fit {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        base_lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        dir_lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        base_beta: String,
        #[arg(long, allow_hyphen_values = true)]
        dir_beta: String,
        #[arg(long, default_value_t = 24)]
        tmax: usize,
        #[arg(long, default_value_t = 6)]
        period_max: usize,
        /// Degree bound; defaults to rank K minus rank Q.
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct AlgebraOpts {
    /// Cartan type such as A2, B2, C2, G2, D4 or A1xA1.
    #[arg(long = "type", conflicts_with = "cartan")]
    pub type_name: Option<String>,
    /// JSON file {"cartan": rows, "type": optional tag}.
    #[arg(long)]
    pub cartan: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum RepCmd {
    /// Weight multiplicities from the string cone of a longest word.
    Mult {
        #[command(flatten)]
        alg: AlgebraOpts,
        #[arg(long)]
        word: Option<String>,
        /// User string cone file {"type", "word", "rows"}.
        #[arg(long)]
        cone: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(
            long,
            conflicts_with = "table",
            required_unless_present = "table",
            allow_hyphen_values = true
        )]
        beta: Option<String>,
        #[arg(long)]
        table: bool,
        /// Compare with Freudenthal's formula.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Demazure multiplicities from prefixes of the word.
    Demazure {
        #[command(flatten)]
        alg: AlgebraOpts,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        cone: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Prefix length; all prefixes when omitted.
        #[arg(long)]
        prefix: Option<usize>,
        /// Compare with Demazure operators.
        #[arg(long)]
        check: bool,
    },
    /// Tensor product multiplicities from trail inequalities.
    Lr {
        #[command(flatten)]
        alg: AlgebraOpts,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(
            long,
            conflicts_with = "table",
            required_unless_present = "table",
            allow_hyphen_values = true
        )]
        beta: Option<String>,
        #[arg(long)]
        table: bool,
        /// Compare with the character-theoretic decomposition.
        #[arg(long)]
        check: bool,
    },
    /// Weyl dimension of an irreducible module.
    Dim {
        #[command(flatten)]
        alg: AlgebraOpts,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum LatticeCmd {
    /// Finds unimodular A with A·C inside the nonnegative orthant.
    Embed {
        /// Facet normals inline ("1 -1; 1 1") or as a JSON file of rows.
        #[arg(long, allow_hyphen_values = true)]
        normals: String,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Csc(c) => cmd_csc::run(c),
        Command::Vpf(c) => cmd_vpf::run(c),
        Command::Rep(c) => cmd_rep::run(c, &cli.global),
        Command::Lattice(c) => cmd_lattice::run(c),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
