use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("column {col} is outside the covered domain of the map (covers up to {covered})")]
    DomainTooShort { col: u32, covered: u32 },
    #[error("bad arguments: {0}")]
    BadArguments(String),
    #[error("width mismatch: {0} vs {1}")]
    WidthMismatch(u32, u32),
    #[error("generator uses column {col} beyond width {width}")]
    WidthViolation { col: u32, width: u32 },
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("chain is not invariant at width {width}: image of generator {generator} under {map} is not in the next ideal")]
    InvarianceViolation {
        width: u32,
        generator: String,
        map: String,
    },
    #[error("denominator factor violates f(1) > 0: {0}")]
    FactorPositivity(String),
    #[error("duplicate denominator factors must be merged before decomposition")]
    DuplicateFactor,
    #[error("window {0}..{1} exhausted without certification")]
    WindowExhausted(u32, u32),
    #[error("cross-check mismatch: {0}")]
    CrossCheckMismatch(String),
    #[error("series coefficient is not of the expected (1-t)-pole form: {0}")]
    SeriesForm(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
