//! `infcone`: cones at infinity and projection-theorem checks from JSON
//! input files.
//!
//! Exit codes: 0 verified or computed, 1 input error, 2 hypothesis not
//! satisfied (or not certified), 3 resource limit, 4 a check failed,
//! 5 internal invariant violated.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "infcone",
    version,
    about = "Tangent cones at infinity of affine complex algebraic sets"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Gröbner step budget; exceeding it exits with code 3.
    #[arg(long, global = true, default_value_t = infcone::ideal::DEFAULT_STEP_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Monomial order for reported Gröbner bases.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Progress messages on standard error (repeat for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    /// Include wall-clock timings in the report (not reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    C3,
    C4,
    C5,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute one cone at infinity.
    Cone {
        #[arg(long)]
        which: Which,
        #[arg(long)]
        input: PathBuf,
    },
    /// Compute all three cones and check c3 ⊆ c4 ⊆ c5 with the dimension bounds.
    Inclusions {
        #[arg(long)]
        input: PathBuf,
    },
    /// Dimension and reduced Gröbner basis.
    Dim {
        #[arg(long)]
        input: PathBuf,
    },
    /// Degree of the projective closure.
    Degree {
        #[arg(long)]
        input: PathBuf,
    },
    /// Singular locus by the Jacobian criterion.
    Singular {
        #[arg(long)]
        input: PathBuf,
    },
    /// Find a random subspace of dimension m − k meeting c3 only at 0.
    Transverse {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = infcone::projections::DEFAULT_RETRIES)]
        retries: u32,
    },
    /// Count the sheets of the projection along W (random W if omitted).
    Sheets {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        subspace: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        samples: u32,
        #[arg(long, default_value_t = infcone::projections::DEFAULT_RETRIES)]
        retries: u32,
    },
    /// Singular locus against critical locus of the projection along W.
    CheckThm12 {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        subspace: PathBuf,
    },
    /// Hypersurface projection π_i for a splitting V ⊕ W.
    CheckThm13 {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        splitting: PathBuf,
        /// 1-based column of W kept by the projection.
        #[arg(long)]
        index: usize,
    },
    /// Pure k-dimensional c5 forces an affine subspace.
    CheckLinear {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        splitting: Option<PathBuf>,
    },
    /// Sample directions along arcs and test them against a cone.
    Witness {
        #[arg(long)]
        kind: Which,
        #[arg(long)]
        input: PathBuf,
        /// One arc, or two for secants (c5).
        #[arg(long = "arc", required = true, num_args = 1)]
        arcs: Vec<PathBuf>,
        /// Pairing of secant parameters: `same`, `shift:<delta>` or `reflect:<center>`.
        #[arg(long, default_value = "same")]
        pairing: String,
        /// Cone to test against; computed from the input when omitted.
        #[arg(long)]
        cone: Option<PathBuf>,
    },
    /// Test ‖z″‖ ≤ A(1 + ‖z′‖)^B along arcs for a splitting V₁ ⊕ V₂.
    RegionCheck {
        #[arg(long)]
        input: PathBuf,
        #[arg(long = "arc", required = true, num_args = 1)]
        arcs: Vec<PathBuf>,
        #[arg(long)]
        v1: PathBuf,
        #[arg(long)]
        v2: PathBuf,
        #[arg(long, short = 'A', default_value_t = 2.0)]
        a: f64,
        #[arg(long, short = 'B', default_value_t = 0.5)]
        b: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
