use rbar_core::{ArrangementError, OracleError};
use thiserror::Error;

/// Process exit codes.
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Malformed(String),
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("form {form}, entry {entry}: floating-point values are not accepted, use an integer or \"a/b\"")]
    FloatEntry { form: usize, entry: usize },
    #[error("form {form}, entry {entry}: cannot parse {text:?} as a rational")]
    BadRational { form: usize, entry: usize, text: String },
    #[error("form {form} has {found} coefficients, expected {expected}")]
    WrongLength { form: usize, expected: usize, found: usize },
    #[error("form {form} is identically zero")]
    ZeroForm { form: usize },
    #[error("forms {first} and {second} are proportional")]
    ProportionalPair { first: usize, second: usize },
    #[error("expected {expected} exponents, got {found}")]
    ExponentsLength { expected: usize, found: usize },
    #[error("unknown family {0:?} (known: braid, boolean)")]
    UnknownFamily(String),
    #[error("family {family} needs --ell ≥ 1")]
    InvalidEll { family: String },
    #[error("pass either --file or --family with --ell")]
    NoSource,
    #[error("{0}")]
    Expression(String),
    #[error("denominator does not factor into forms of the arrangement")]
    FactorOverDelta,
    #[error("the class of the fraction is not in the span of the given basis in Rbar^{p}_{q}")]
    NotInSpan { p: usize, q: usize },
    #[error("{0}")]
    Oracle(OracleError),
}

impl CliError {
    /// Stable machine-readable code printed after `error:`.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Malformed(_) => "malformed-input",
            CliError::Io { .. } => "io",
            CliError::FloatEntry { .. } => "float-entry",
            CliError::BadRational { .. } => "bad-rational",
            CliError::WrongLength { .. } => "wrong-length",
            CliError::ZeroForm { .. } => "zero-form",
            CliError::ProportionalPair { .. } => "proportional-pair",
            CliError::ExponentsLength { .. } => "exponents-length",
            CliError::UnknownFamily(_) => "unknown-family",
            CliError::InvalidEll { .. } => "invalid-ell",
            CliError::NoSource => "no-source",
            CliError::Expression(_) => "expression",
            CliError::FactorOverDelta => "factor-over-delta",
            CliError::NotInSpan { .. } => "not-in-span",
            CliError::Oracle(OracleError::NotInCell { .. }) => "not-in-cell",
            CliError::Oracle(OracleError::BasisNotIndependent { .. }) => "basis-not-independent",
            CliError::Oracle(OracleError::OutsideCellBounds { .. }) => "outside-cell",
            CliError::Oracle(OracleError::FactorOverDelta) => "factor-over-delta",
            CliError::Oracle(OracleError::Arity { .. }) => "arity",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            // the input was validated, so this is a bug
            CliError::Oracle(OracleError::NotInCell { .. }) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        }
    }
}

impl From<ArrangementError> for CliError {
    fn from(e: ArrangementError) -> Self {
        match e {
            ArrangementError::WrongLength { index, expected, found } => CliError::WrongLength {
                form: index + 1,
                expected,
                found,
            },
            ArrangementError::ZeroForm { index } => CliError::ZeroForm { form: index + 1 },
            ArrangementError::ProportionalPair { first, second } => CliError::ProportionalPair {
                first: first + 1,
                second: second + 1,
            },
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::FactorOverDelta => CliError::FactorOverDelta,
            other => CliError::Oracle(other),
        }
    }
}
