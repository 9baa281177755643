use rainbow_core::gen::GenError;
use rainbow_core::verify::VerifyError;
use rainbow_core::{ColorError, Vertex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("rejected: {0}")]
    Structure(String),
    #[error("colouring failed: {0}")]
    CompletionFailed(String),
    #[error("NOT-RAINBOW-CONNECTED: no rainbow path between {} and {}", .0 .0, .0 .1)]
    NotRainbow((Vertex, Vertex)),
    #[error("{0}")]
    TooLarge(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Structure(_) => 2,
            CliError::CompletionFailed(_) => 3,
            CliError::NotRainbow(_) => 4,
            CliError::TooLarge(_) => 5,
        }
    }
}

impl From<ColorError> for CliError {
    fn from(e: ColorError) -> Self {
        match e {
            e if e.is_structural() => CliError::Structure(e.to_string()),
            ColorError::Verify(v) => v.into(),
            e => CliError::CompletionFailed(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::PaletteTooLarge { .. } | VerifyError::InstanceTooLarge(_) => CliError::TooLarge(e.to_string()),
            VerifyError::Disconnected => CliError::Structure(e.to_string()),
            VerifyError::InvalidColoring(_) | VerifyError::InvalidQuery(_) => CliError::Parse(e.to_string()),
        }
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rainbow_core::ColoringTrace;

    #[test]
    fn exit_code_mapping() {
        let failed = ColorError::CompletionFailed { failing: (0, 1), trace: Box::new(ColoringTrace::default()) };
        assert_eq!(CliError::from(failed).exit_code(), 3);
        assert_eq!(CliError::from(ColorError::NotRc2Structure(String::new())).exit_code(), 2);
        assert_eq!(CliError::from(ColorError::Disconnected).exit_code(), 2);
        assert_eq!(CliError::from(VerifyError::InstanceTooLarge(String::new())).exit_code(), 5);
        assert_eq!(CliError::from(VerifyError::PaletteTooLarge { palette: 20, cap: 16 }).exit_code(), 5);
        assert_eq!(CliError::from(VerifyError::InvalidColoring(String::new())).exit_code(), 1);
        assert_eq!(CliError::from(GenError::UnknownName(String::new())).exit_code(), 1);
        assert_eq!(CliError::NotRainbow((0, 2)).exit_code(), 4);
    }
}
