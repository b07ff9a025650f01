//! Command-line front end: argument model, execution and rendering.

pub mod exec;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use exactcat::engine::{ProbeConfig, Suite};

#[derive(Parser, Debug)]
#[command(name = "exactcat", version, about = "Kernels, cokernels, semi-stability and exact structures")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,

    /// Instance to work in; file inputs carry their own tag, which must agree.
    #[arg(long, global = true, value_enum)]
    pub category: Option<CategoryName>,

    /// Number of sampled cases (suites) or probe draws (semi-stability).
    #[arg(long, global = true, default_value_t = 100)]
    pub samples: usize,

    #[arg(long, global = true, env = "EXACTCAT_SEED", default_value_t = exactcat::DEFAULT_SEED)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = 3)]
    pub max_dim: usize,

    #[arg(long, global = true, default_value_t = 3)]
    pub max_entry: i64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Decide semi-stability from structural rules and probes only.
    #[arg(long, global = true)]
    pub no_instance_rules: bool,

    /// Skip every rule and answer semi-stability questions by probing alone.
    #[arg(long, global = true)]
    pub probe_only: bool,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Kernel of a morphism.
    Kernel {
        file: PathBuf,
    },
    /// Cokernel of a morphism.
    Cokernel {
        file: PathBuf,
    },
    /// Pullback of `{"g", "t"}`.
    Pullback {
        file: PathBuf,
    },
    /// Pushout of `{"f", "t"}`.
    Pushout {
        file: PathBuf,
    },
    /// Mono, epi, iso, kernel, cokernel and strictness of a morphism.
    Classify {
        file: PathBuf,
    },
    /// The induced map from coimage to image, and whether it is an isomorphism.
    Strict {
        file: PathBuf,
    },
    SemistableKernel {
        file: PathBuf,
    },
    SemistableCokernel {
        file: PathBuf,
    },
    /// Membership of `{"f", "g"}` in the maximal exact structure.
    PairCheck {
        file: PathBuf,
    },
    /// Whether `{"f", "g"}` is split exact.
    SplitCheck {
        file: PathBuf,
    },
    /// Run a randomized property suite.
    Suite {
        #[arg(value_parser = parse_suite)]
        name: Suite,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CategoryName {
    #[value(name = "FinVectQ")]
    FinVectQ,
    #[value(name = "LatticeZ")]
    LatticeZ,
    #[value(name = "MonoPairsQ")]
    MonoPairsQ,
}

impl CategoryName {
    pub fn parse_tag(tag: &str) -> Option<Self> {
        <Self as ValueEnum>::from_str(tag, false).ok()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CategoryName::FinVectQ => "FinVectQ",
            CategoryName::LatticeZ => "LatticeZ",
            CategoryName::MonoPairsQ => "MonoPairsQ",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

impl Cli {
    pub fn probe_config(&self) -> ProbeConfig {
        ProbeConfig { seed: self.seed, samples: self.samples, max_dim: self.max_dim, max_entry: self.max_entry }
    }
}

/// Exit status contract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    No = 1,
    InputError = 2,
    Unknown = 3,
}
