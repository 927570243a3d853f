use thiserror::Error;

/// Errors produced by the stratification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The pair (d, d0) does not describe a simple fibration.
    #[error("type (d, d0) = ({d}, {d0}) is out of range: violates {violated}")]
    OutOfRange {
        d: i64,
        d0: i64,
        violated: &'static str,
    },

    /// Checked 64-bit arithmetic overflowed.
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("p_g = {p_g} is below the supported minimum {min}")]
    PgTooSmall { p_g: i64, min: i64 },

    #[error("the moduli space is empty for p_g = {0}: p_g is not 1 mod 3")]
    EmptyModuli(i64),

    #[error("d = {0} is below the supported minimum 5")]
    DTooSmall(i64),

    #[error("invalid verification range [{from}, {to}]: {reason}")]
    RangeInvalid {
        from: i64,
        to: i64,
        reason: &'static str,
    },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn add(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn sub(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow(ctx))
}

pub(crate) fn mul(a: i64, b: i64, ctx: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(ctx))
}
