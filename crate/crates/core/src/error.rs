use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("base must be at least {min}, got {base}")]
    BaseTooSmall { base: u32, min: u32 },
    #[error("digit {digit} out of range for base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },
    #[error("digit string must not be empty")]
    EmptyDigits,
    #[error("leading zero in a multi-digit string")]
    LeadingZero,
    #[error("invalid character {ch:?} at position {pos}")]
    InvalidChar { ch: char, pos: usize },
    #[error("alphanumeric rendering supports bases up to 36, got {0}")]
    AlphabetTooSmall(u32),
    #[error("value does not fit in the chosen integer type")]
    Overflow,
    #[error("argument must be positive")]
    ZeroArgument,
    #[error("{value} exceeds the trial-division budget of {limit}")]
    OutsideBudget { value: u64, limit: u64 },
    #[error("{family} is not defined in base {base}")]
    FamilyUndefined { family: &'static str, base: u32 },
    #[error("{family} needs at least {min} digits, got {k}")]
    DigitCountTooSmall { family: &'static str, min: usize, k: usize },
    #[error("scan of {estimated} candidates exceeds the budget of {budget}")]
    ScanBudgetExceeded { estimated: u128, budget: u128 },
    #[error("search state does not match base {base} / {family}")]
    StateMismatch { base: u32, family: &'static str },
    #[error("malformed search state: {0}")]
    BadState(String),
}

pub type Result<T> = std::result::Result<T, Error>;
