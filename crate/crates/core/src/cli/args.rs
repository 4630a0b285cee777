use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use super::parse::PolyExpr;

#[derive(Debug, Parser)]
#[command(
    name = "logpoisson",
    version,
    about = "Exact classical and logarithmic Poisson cohomology of {x, y} = y^n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cohomology dimensions per (variant, n, k, w) against the closed form
    Dims(CommonArgs),
    /// Run every verification suite
    Verify(CommonArgs),
    /// Print a basis of H^k at one weight
    Reps(CommonArgs),
    /// Time the per-weight computations
    Bench(CommonArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dims(_) => "dims",
            Command::Verify(_) => "verify",
            Command::Reps(_) => "reps",
            Command::Bench(_) => "bench",
        }
    }

    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::Dims(a) | Command::Verify(a) | Command::Reps(a) | Command::Bench(a) => a,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum)]
    pub variant: Option<VariantSelection>,
    /// A single n or an inclusive range a..b (each ≥ 2)
    #[arg(long)]
    pub n: Option<NRange>,
    /// Inclusive weight range a..b; negative values allowed
    #[arg(long, allow_hyphen_values = true, default_value = "-2..25")]
    pub weights: Range,
    /// Cohomological degree
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<usize>,
    /// Weight
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<i64>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads (0 uses all cores)
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Extra bracket φ for the classical complex check (repeatable)
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Vec<PolyExpr>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantSelection {
    Log,
    Classical,
    Both,
}

impl VariantSelection {
    pub fn names(self) -> &'static [&'static str] {
        match self {
            VariantSelection::Log => &["log"],
            VariantSelection::Classical => &["classical"],
            VariantSelection::Both => &["log", "classical"],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// Inclusive integer range written `a..b`, or a single integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Range {
    pub min: i64,
    pub max: i64,
}

impl Range {
    pub fn is_empty(&self) -> bool {
        self.min > self.max
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("expected an integer or a range a..b, got '{s}'"))
        };
        match s.split_once("..") {
            Some((a, b)) => Ok(Range {
                min: parse(a)?,
                max: parse(b)?,
            }),
            None => {
                let v = parse(s)?;
                Ok(Range { min: v, max: v })
            }
        }
    }
}

impl fmt::Display for Range {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.min, self.max)
    }
}

/// Values of `n`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NRange(pub Vec<u32>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let r: Range = s.parse()?;
        if r.is_empty() {
            return Err(format!("empty range '{s}'"));
        }
        if let Some(bad) = [r.min, r.max].into_iter().find(|&v| v < 2) {
            return Err(format!("n must be ≥ 2 (got {bad})"));
        }
        let max = u32::try_from(r.max).map_err(|_| format!("n out of range: {}", r.max))?;
        Ok(NRange((r.min as u32..=max).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("-2..5".parse::<Range>(), Ok(Range { min: -2, max: 5 }));
        assert_eq!("3".parse::<Range>(), Ok(Range { min: 3, max: 3 }));
        assert!("5..0".parse::<Range>().unwrap().is_empty());
        assert!("a..b".parse::<Range>().is_err());
    }

    #[test]
    fn n_ranges() {
        assert_eq!("2..5".parse::<NRange>(), Ok(NRange(vec![2, 3, 4, 5])));
        assert_eq!("3".parse::<NRange>(), Ok(NRange(vec![3])));
        assert_eq!("1".parse::<NRange>(), Err("n must be ≥ 2 (got 1)".into()));
        assert!("0..3"
            .parse::<NRange>()
            .unwrap_err()
            .contains("n must be ≥ 2"));
        assert!("4..3".parse::<NRange>().is_err());
    }
}
