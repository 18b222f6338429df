use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not hyperbolic: trace {0} has magnitude at most 2")]
    NotHyperbolic(BigInt),

    #[error("determinant must be 1, got {0}")]
    Determinant(BigInt),

    #[error("intersection number must be positive, got {0}")]
    NonPositiveIntersection(i64),

    #[error("excluded: Λ₂ never arises from a filling pair")]
    ExcludedTwo,

    #[error("no dilatation: not pseudo-Anosov ({0})")]
    NotPseudoAnosov(String),

    #[error("not in Λ_{n} congruence shape")]
    NotCongruence { n: u64 },

    #[error(
        "no intersecting filling pair on Σ_{{0,{punctures}}}: the filling pair does not intersect"
    )]
    NoIntersectingPair { punctures: u64 },

    #[error("Thurston minimal-trace theorem inapplicable: i = {intersection}")]
    TheoremInapplicable { intersection: u64 },

    #[error("search budget of {limit} nodes exceeded after {explored} elements (complete through length {depth})")]
    BudgetExceeded {
        limit: usize,
        explored: usize,
        depth: usize,
    },

    #[error("not a permutation: {0}")]
    NotPermutation(String),

    #[error("not a filling permutation: {0}")]
    NotFilling(String),

    #[error("no bigon site: no crossing admits the double bigon push")]
    NoBigonSite,

    #[error("not simple closed curves: ({0}, {1}) is not primitive")]
    NotSimple(i64, i64),

    #[error("cannot fill: {0}")]
    CannotFill(String),

    #[error("power iteration did not converge (residual {residual:e})")]
    NoConvergence { residual: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Stable kebab-case tag, used in tabular output and by the CLI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotHyperbolic(_) => "not-hyperbolic",
            Error::Determinant(_) => "determinant",
            Error::NonPositiveIntersection(_) => "non-positive-intersection",
            Error::ExcludedTwo => "excluded-two",
            Error::NotPseudoAnosov(_) => "not-pseudo-anosov",
            Error::NotCongruence { .. } => "not-congruence",
            Error::NoIntersectingPair { .. } => "no-intersecting-pair",
            Error::TheoremInapplicable { .. } => "theorem-inapplicable",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::NotPermutation(_) => "not-a-permutation",
            Error::NotFilling(_) => "not-filling",
            Error::NoBigonSite => "no-bigon-site",
            Error::NotSimple(..) => "not-simple",
            Error::CannotFill(_) => "cannot-fill",
            Error::NoConvergence { .. } => "no-convergence",
            Error::Parse(_) => "parse",
            Error::InvalidArgument(_) => "invalid-argument",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
            Error::Csv(_) => "csv",
        }
    }
}
