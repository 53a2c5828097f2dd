use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tca_lab::poset::{EdgeReading, PosetOrder, DEFAULT_BUDGET};
use tca_lab::Flavor;

/// Seed used by every randomized suite unless `--seed` is given.
pub const DEFAULT_SEED: u64 = 1729;

pub const BUDGET_ENV: &str = "TCA_LAB_BUDGET";

#[derive(Parser, Debug, Clone)]
#[command(name = "tca-lab", version, about = "Exact checks for twisted commutative algebras at finite rank")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// symmetric, antisymmetric or generic
    #[arg(long, global = true)]
    pub flavor: Option<Flavor>,
    /// Rank n of the truncation (vertex bound for poset tasks)
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// Degree bound
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Largest homological degree p
    #[arg(long, global = true)]
    pub pmax: Option<usize>,
    /// Ranks to compare, e.g. 2..4 or 3
    #[arg(long, global = true)]
    pub nrange: Option<NRange>,
    /// Search budget in visited states (default: $TCA_LAB_BUDGET or 1000000)
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Ideal input file
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Decompose each algebra degree by degree and compare with the closed form
    Decompose,
    /// Matching poset tasks
    Poset {
        #[command(subcommand)]
        task: PosetTask,
    },
    /// Checks on equivariant ideals
    Ideal {
        check: IdealCheck,
        /// Edge reading used for initial terms
        #[arg(long, value_enum, default_value_t = Reading::LargestFirst)]
        reading: Reading,
    },
    /// Tor tables of determinantal ideals (or of --input) and their stabilization
    Tor {
        /// Forms of rank at most r
        #[arg(long, default_value_t = 1)]
        rank_bound: usize,
    },
    /// Run the acceptance suite
    Accept,
}

#[derive(Subcommand, Debug, Clone)]
pub enum PosetTask {
    /// Γ_n pairwise incomparable under ≤ and a chain under ⊑
    VerifyExample,
    /// Compare two matchings, e.g. "{(1,2)}" "{(2,3)}"
    Compare {
        a: String,
        b: String,
        #[arg(long, default_value = "type1")]
        order: PosetOrder,
    },
    /// Greedy antichain among matchings with a fixed number of edges
    Antichain {
        #[arg(long, default_value_t = 2)]
        edges: usize,
        #[arg(long, default_value = "full")]
        order: PosetOrder,
    },
    /// The degree-one control case
    Sandbox,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealCheck {
    Lattice,
    InitialSet,
    MoveClosure,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    LargestFirst,
    SmallestFirst,
}

impl From<Reading> for EdgeReading {
    fn from(r: Reading) -> Self {
        match r {
            Reading::LargestFirst => EdgeReading::LargestFirst,
            Reading::SmallestFirst => EdgeReading::SmallestFirst,
        }
    }
}

/// An inclusive range of ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn ranks(&self) -> Vec<usize> {
        (self.lo..=self.hi).collect()
    }
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("invalid range '{s}' (expected e.g. 2..4)");
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (a, b.trim_start_matches('=')),
            None => (s, s),
        };
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo == 0 || lo > hi {
            return Err(bad());
        }
        Ok(NRange { lo, hi })
    }
}

impl std::fmt::Display for NRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Flags with defaults and the environment applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub flavor: Option<Flavor>,
    pub rank: Option<usize>,
    pub degree: Option<usize>,
    pub pmax: Option<usize>,
    pub nrange: Option<NRange>,
    pub budget: usize,
    pub seed: u64,
    pub input: Option<PathBuf>,
}

impl RunConfig {
    pub fn resolve(common: &Common) -> Result<Self, String> {
        let budget = match common.budget {
            Some(b) => b,
            None => match std::env::var(BUDGET_ENV) {
                Ok(v) => v.trim().parse().map_err(|_| format!("{BUDGET_ENV} must be a positive integer, got '{v}'"))?,
                Err(_) => DEFAULT_BUDGET,
            },
        };
        for (name, v) in [("rank", common.rank), ("budget", Some(budget))] {
            if v == Some(0) {
                return Err(format!("--{name} must be positive"));
            }
        }
        Ok(RunConfig {
            flavor: common.flavor,
            rank: common.rank,
            degree: common.degree,
            pmax: common.pmax,
            nrange: common.nrange,
            budget,
            seed: common.seed.unwrap_or(DEFAULT_SEED),
            input: common.input.clone(),
        })
    }

    /// Configuration echo for report headers; unset flags are omitted.
    pub fn echo(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        let mut push = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                out.push((k.to_string(), v));
            }
        };
        push("flavor", self.flavor.map(|f| f.to_string()));
        push("rank", self.rank.map(|v| v.to_string()));
        push("degree", self.degree.map(|v| v.to_string()));
        push("pmax", self.pmax.map(|v| v.to_string()));
        push("nrange", self.nrange.map(|v| v.to_string()));
        push("budget", Some(self.budget.to_string()));
        push("seed", Some(self.seed.to_string()));
        push("input", self.input.as_ref().map(|p| p.display().to_string()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("2..4".parse::<NRange>().unwrap().ranks(), vec![2, 3, 4]);
        assert_eq!("2..=3".parse::<NRange>().unwrap().ranks(), vec![2, 3]);
        assert_eq!("3".parse::<NRange>().unwrap().ranks(), vec![3]);
        assert!("4..2".parse::<NRange>().is_err());
        assert!("0..2".parse::<NRange>().is_err());
    }

    #[test]
    fn flags_parse() {
        let cli = Cli::try_parse_from(["tca-lab", "decompose", "--flavor", "sym", "--degree", "2", "--rank", "4"]).unwrap();
        assert!(matches!(cli.command, Command::Decompose));
        let cfg = RunConfig::resolve(&cli.common).unwrap();
        assert_eq!(cfg.flavor, Some(Flavor::Symmetric));
        assert_eq!(cfg.seed, DEFAULT_SEED);
        let cli = Cli::try_parse_from(["tca-lab", "poset", "compare", "{(1,2)}", "{(2,3)}", "--order", "full"]).unwrap();
        assert!(matches!(cli.command, Command::Poset { task: PosetTask::Compare { order: PosetOrder::Full, .. } }));
        assert!(Cli::try_parse_from(["tca-lab", "decompose", "--flavor", "hermitian"]).is_err());
        let cli = Cli::try_parse_from(["tca-lab", "ideal", "move-closure", "--reading", "smallest-first"]).unwrap();
        assert!(matches!(cli.command, Command::Ideal { check: IdealCheck::MoveClosure, reading: Reading::SmallestFirst }));
    }
}
