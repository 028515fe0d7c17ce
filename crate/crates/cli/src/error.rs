use std::fmt;

/// Everything that can stop a command, mapped onto the documented exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input.
    Parse(String),
    Core(metric_gh::Error),
    /// Failure writing a report or fixture.
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use metric_gh::Error as E;
        match self {
            CliError::Parse(_) => 2,
            CliError::Core(E::GuardExceeded { .. }) => 4,
            CliError::Core(E::ConstructionVerificationFailed(_)) => 5,
            CliError::Core(_) => 3,
            CliError::Output(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Output(msg) => write!(f, "output error: {msg}"),
        }
    }
}

impl From<metric_gh::Error> for CliError {
    fn from(e: metric_gh::Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;
    use metric_gh::Error as E;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Parse("x".into()).exit_code(), 2);
        assert_eq!(CliError::Core(E::NotATree).exit_code(), 3);
        assert_eq!(
            CliError::Core(E::EpsilonOutOfRange {
                value: 1.0,
                lo: 0.0,
                hi: 0.5
            })
            .exit_code(),
            3
        );
        assert_eq!(
            CliError::Core(E::GuardExceeded {
                required: 10.0,
                guard: 1.0
            })
            .exit_code(),
            4
        );
        assert_eq!(
            CliError::Core(E::ConstructionVerificationFailed("x".into())).exit_code(),
            5
        );
    }
}
