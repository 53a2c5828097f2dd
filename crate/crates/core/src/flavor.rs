use std::fmt;
use std::str::FromStr;

/// Which of the three algebras a computation lives in.
///
/// * `Symmetric`: `Sym(Sym²ℂⁿ)`, variables `x[i,j]` with `i ≤ j`.
/// * `Antisymmetric`: `Sym(Λ²ℂⁿ)`, variables `x[i,j]` with `i < j`.
/// * `Generic`: `Sym(ℂⁿ ⊗ ℂⁿ)`, variables `x[i,j]` for all `i, j`, acted on
///   by `GL_n × GL_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Symmetric,
    Antisymmetric,
    Generic,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Symmetric, Flavor::Antisymmetric, Flavor::Generic];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Symmetric => "symmetric",
            Flavor::Antisymmetric => "antisymmetric",
            Flavor::Generic => "generic",
        }
    }

    /// Number of degree-one variables at rank `n`.
    pub fn variable_count(self, n: usize) -> usize {
        match self {
            Flavor::Symmetric => n * (n + 1) / 2,
            Flavor::Antisymmetric => n * n.saturating_sub(1) / 2,
            Flavor::Generic => n * n,
        }
    }

    pub fn is_bivariate(self) -> bool {
        self == Flavor::Generic
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "symmetric" | "sym" => Ok(Flavor::Symmetric),
            "antisymmetric" | "alt" | "skew" => Ok(Flavor::Antisymmetric),
            "generic" | "bivariate" => Ok(Flavor::Generic),
            other => Err(format!("unknown flavor '{other}'")),
        }
    }
}
