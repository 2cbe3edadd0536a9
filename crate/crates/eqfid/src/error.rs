use std::fmt;

/// Failures surfaced by the command-line front end.
#[derive(Debug)]
pub enum CliError {
    /// Bad flag, config key or value.
    Usage(String),
    Core(eqfid_core::Error),
    Io(std::io::Error),
    Json(serde_json::Error),
    Csv(csv::Error),
}

impl CliError {
    /// 2 for anything the caller could have avoided by passing valid input,
    /// 1 for failures during the run itself.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(eqfid_core::Error::InvalidParameter { .. })
            | CliError::Core(eqfid_core::Error::Domain { .. }) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o: {e}"),
            CliError::Json(e) => write!(f, "json: {e}"),
            CliError::Csv(e) => write!(f, "csv: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<eqfid_core::Error> for CliError {
    fn from(e: eqfid_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Csv(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
