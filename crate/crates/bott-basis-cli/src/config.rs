//! Command-line surface and config validation. Validation failures are
//! usage errors (exit code 2) and name the failing precondition.

use bott_basis::filtration::SectionSpaceContext;
use bott_basis::lie::{is_reduced_w0, mu_from_lambda, Weight, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "bott-basis",
    version,
    about = "Exact canonical bases for SL(n) representations from degenerations of Bott-Samelson manifolds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the canonical basis (leaves of the filtration).
    Basis(RunArgs),
    /// Per-tableau ℓ-vectors only.
    Lvectors(RunArgs),
    /// Filtration dimensions on every candidate grid point.
    Leaves(RunArgs),
    /// Compare the leaf weight multiset against the character oracle.
    CharacterCheck(RunArgs),
    /// Convex hull of the leaf ℓ-vectors.
    Polytope(RunArgs),
    /// Compare the ℓ-vectors against the string polytope.
    StringCompare(RunArgs),
    /// Run the bundled verification suite.
    Selftest,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Md,
    Csv,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// Rank parameter: the group is SL(n).
    #[arg(long)]
    pub n: usize,
    /// Word in the simple reflections, comma separated (e.g. 1,2,1).
    #[arg(long, value_delimiter = ',', required = true)]
    pub word: Vec<usize>,
    /// Coefficients of λ over the fundamental weights (length n-1).
    #[arg(long, value_delimiter = ',', conflicts_with = "mu")]
    pub lambda: Option<Vec<i64>>,
    /// Explicit per-position multiplicities (length of the word).
    #[arg(long, value_delimiter = ',')]
    pub mu: Option<Vec<i64>>,
    #[arg(long, value_enum, default_value_t = Format::Md)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Content-addressed report cache (also BOTT_BASIS_CACHE_DIR).
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Append a character check to the report.
    #[arg(long)]
    pub check_character: bool,
    /// Append a string-polytope comparison to the report.
    #[arg(long)]
    pub check_string: bool,
    /// Append a prevaluation check over all representative pairs.
    #[arg(long)]
    pub check_prevaluation: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 4,
        }
    }
}

/// A validated run configuration.
pub struct RunConfig {
    pub n: usize,
    pub word: Word,
    pub lambda: Option<Weight>,
    pub mu: Vec<i64>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub check_character: bool,
    pub check_string: bool,
    pub check_prevaluation: bool,
}

pub fn validate(args: &RunArgs) -> Result<RunConfig, CliError> {
    if args.n < 2 {
        return Err(CliError::Usage("n must be at least 2".into()));
    }
    let word = Word(args.word.clone());
    word.validate(args.n)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let (lambda, mu) = match (&args.lambda, &args.mu) {
        (Some(coeffs), None) => {
            if coeffs.len() != args.n - 1 {
                return Err(CliError::Usage(format!(
                    "lambda needs {} fundamental coefficients, got {}",
                    args.n - 1,
                    coeffs.len()
                )));
            }
            if coeffs.iter().any(|&c| c < 0) {
                return Err(CliError::Usage(
                    "lambda must be dominant: all coefficients non-negative".into(),
                ));
            }
            let lambda = Weight::from_fundamental(args.n, coeffs);
            match is_reduced_w0(&word, args.n) {
                Ok(true) => {}
                Ok(false) => {
                    return Err(CliError::Usage(
                        "word is not a reduced expression of w0".into(),
                    ))
                }
                Err(e) => return Err(CliError::Usage(e.to_string())),
            }
            let mu = mu_from_lambda(&word, &lambda)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            (Some(lambda), mu)
        }
        (None, Some(mu)) => {
            if mu.len() != word.len() {
                return Err(CliError::Usage(format!(
                    "mu needs one entry per word letter ({}), got {}",
                    word.len(),
                    mu.len()
                )));
            }
            if mu.iter().any(|&m| m < 0) {
                return Err(CliError::Usage("mu entries must be non-negative".into()));
            }
            (None, mu.clone())
        }
        (None, None) => {
            return Err(CliError::Usage(
                "exactly one of --lambda or --mu is required".into(),
            ))
        }
        (Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "exactly one of --lambda or --mu may be given".into(),
            ))
        }
    };
    let cache_dir = args
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("BOTT_BASIS_CACHE_DIR").map(PathBuf::from));
    Ok(RunConfig {
        n: args.n,
        word,
        lambda,
        mu,
        format: args.format,
        out: args.out.clone(),
        cache_dir,
        check_character: args.check_character,
        check_string: args.check_string,
        check_prevaluation: args.check_prevaluation,
    })
}

impl RunConfig {
    pub fn build_context(&self) -> Result<SectionSpaceContext, CliError> {
        match &self.lambda {
            Some(lambda) => SectionSpaceContext::for_lambda(self.n, &self.word, lambda),
            None => SectionSpaceContext::for_m(self.n, &self.word, &self.mu),
        }
        .map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn require_lambda(&self) -> Result<&Weight, CliError> {
        self.lambda.as_ref().ok_or_else(|| {
            CliError::Usage("this command requires --lambda (the V_λ model)".into())
        })
    }
}
