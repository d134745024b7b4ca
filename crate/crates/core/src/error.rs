use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported rank: only {supported} parts are supported, got {requested}")]
    UnsupportedRank { requested: usize, supported: usize },

    #[error("{what} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("problem too large for dense exact elimination: {size} > {limit}")]
    SizeGuard { size: usize, limit: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: i64, min: i64, max: i64) -> Result<()> {
    if value < min || value > max {
        return Err(Error::OutOfRange {
            what,
            value,
            min,
            max,
        });
    }
    Ok(())
}
