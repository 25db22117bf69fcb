use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use essig::roots::{NUM_POSITIVE, RANK};

#[derive(Parser, Debug, Clone)]
#[command(name = "essig", version, about = "Essential signatures, cone facets and lattice-point checks for so(8) modules")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output to FILE instead of stdout.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,

    /// Cache directory; the ESSIG_CACHE environment variable takes precedence.
    #[arg(long, value_name = "DIR", default_value = ".essig-cache", global = true)]
    pub cache: PathBuf,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// The twelve positive roots in their fixed numbering.
    Roots,
    /// Essential signatures of highest weight k1,k2,k3,k4.
    Essential {
        #[arg(value_parser = parse_weight)]
        weight: [u32; RANK],
        /// Diff against the transcribed table (fundamental weights only).
        #[arg(long)]
        check_tables: bool,
        /// Largest ambient tensor dimension to attempt.
        #[arg(long, default_value_t = essig::signatures::DEFAULT_AMBIENT_LIMIT)]
        ambient_limit: u128,
    },
    /// Facets of the cone spanned by the fundamental essential signatures.
    Cone {
        /// Compare with the transcribed inequalities and certify every facet.
        #[arg(long)]
        compare: bool,
    },
    /// Number of lattice points of the cone over a highest weight.
    Count {
        #[arg(value_parser = parse_weight)]
        weight: [u32; RANK],
        /// Refuse weights whose dimension exceeds this many points.
        #[arg(long, default_value_t = 1_000_000)]
        point_budget: u64,
    },
    /// Weyl dimension of V(k1,k2,k3,k4).
    Dim {
        #[arg(value_parser = parse_weight)]
        weight: [u32; RANK],
    },
    /// Write a signature as a sum of fundamental essential signatures.
    Decompose {
        #[arg(value_parser = parse_weight)]
        weight: [u32; RANK],
        #[arg(value_parser = parse_exponents)]
        p: [u32; NUM_POSITIVE],
        /// Drop generators (global table position, 1-based) before decomposing.
        #[arg(long = "exclude-generator", value_name = "N", hide = true)]
        exclude: Vec<usize>,
    },
    /// Count-versus-dimension sweep over all weights with k1+k2+k3+k4 <= max-total.
    Verify {
        #[arg(long, default_value_t = 3)]
        max_total: u32,
        /// Weights whose dimension exceeds this are reported as skipped.
        #[arg(long, default_value_t = 1_000_000)]
        point_budget: u64,
        #[arg(long, default_value_t = 4)]
        jobs: usize,
        /// Report elapsed_ms as 0 so the output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
}

fn parse_ints<const N: usize>(s: &str) -> Result<[u32; N], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != N {
        return Err(format!("expected {N} comma-separated integers, got {}", parts.len()));
    }
    let mut out = [0; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse().map_err(|e| format!("{p:?}: {e}"))?;
    }
    Ok(out)
}

pub fn parse_weight(s: &str) -> Result<[u32; RANK], String> {
    parse_ints::<RANK>(s)
}

pub fn parse_exponents(s: &str) -> Result<[u32; NUM_POSITIVE], String> {
    parse_ints::<NUM_POSITIVE>(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_syntax() {
        assert_eq!(parse_weight("1,0, 2,0"), Ok([1, 0, 2, 0]));
        assert!(parse_weight("1,0,0").is_err());
        assert!(parse_weight("1,0,0,-1").is_err());
        assert_eq!(parse_exponents("1,0,0,0,0,0,0,0,0,0,1,0").unwrap()[10], 1);
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
