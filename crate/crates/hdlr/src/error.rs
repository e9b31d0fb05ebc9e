use hdlr_core::fan::ValidationReport;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] hdlr_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("fan validation failed: {}", .0.failures.join("; "))]
    InvalidFan(ValidationReport),
    #[error("{0}")]
    Format(String),
}

impl Error {
    /// Process exit code of the command-line driver.
    pub fn exit_code(&self) -> i32 {
        use hdlr_core::Error as C;
        match self {
            Error::InvalidFan(_) | Error::Core(C::InvalidFan(_)) => 2,
            Error::Core(C::BudgetExceeded(_)) => 3,
            Error::Core(C::NotPolynomial(_) | C::NotPolynomialAfterRestriction(_) | C::NonPolynomialResult(_)) => 4,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
