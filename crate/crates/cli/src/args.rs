use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "selfloop", version, about = "Closed walks, moments and energy of self-loop graphs")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-walk counts by formula (k <= 4) and by trace of A^k.
    Walks {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
    },
    /// Spectrum, spectral and twisted moments, energy.
    Moments {
        file: PathBuf,
        /// Comma-separated exponents q >= 0.
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.0, 1.0, 2.0, 3.0, 4.0])]
        q: Vec<f64>,
    },
    /// Full substructure census.
    Census { file: PathBuf },
    /// Evaluate the moment and energy inequalities on a file or on sampled graphs.
    Verify(VerifyArgs),
    /// Write a family graph as a graph file.
    Generate(GenerateArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Graph file; omit to use the random sampler.
    pub file: Option<PathBuf>,
    /// Number of random connected graphs to sample.
    #[arg(long, conflicts_with = "file")]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    #[arg(long, default_value_t = 0.3)]
    pub edge_prob: f64,
    #[arg(long, default_value_t = 0.5)]
    pub loop_prob: f64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Check the ratio chain up to 𝓜_d / 𝓜_{d-1}.
    #[arg(long, default_value_t = 8)]
    pub chain_depth: usize,
    /// Check 𝓜_i > 1e-12 for i up to this order.
    #[arg(long, default_value_t = 10)]
    pub positivity_depth: usize,
    /// (r, s, t) with 4r = s + t + 2; repeatable. Defaults to 1,0,2 1.5,2,2 2,3,3.
    #[arg(long = "rst", value_parser = parse_triple)]
    pub rst: Vec<(f64, f64, f64)>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Comma-separated looped vertices.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["sigma_a", "sigma_b", "center_loop", "rim_loops"])]
    pub loops: Vec<usize>,
    /// Loops on the first vertices of part A (complete-bipartite, star).
    #[arg(long)]
    pub sigma_a: Option<usize>,
    /// Loops on the first vertices of part B (complete-bipartite, star).
    #[arg(long)]
    pub sigma_b: Option<usize>,
    /// Loop the wheel centre.
    #[arg(long)]
    pub center_loop: bool,
    /// Loops on rim vertices 1..=R of a wheel.
    #[arg(long)]
    pub rim_loops: Option<usize>,
    /// Output path; stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
    Wheel,
    Star,
    Kneser,
    Petersen,
}

fn parse_triple(s: &str) -> Result<(f64, f64, f64), String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<_, _>>()?;
    match parts[..] {
        [r, s, t] => Ok((r, s, t)),
        _ => Err(format!("expected r,s,t, got `{s}`")),
    }
}
