use thiserror::Error;

/// Everything that makes a command exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown law {0:?}")]
    UnknownLaw(String),
    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("parameter {0:?} has no value; pass --param {0}=p/q")]
    UnboundParameter(String),
    #[error("{what} expects a {expected} manifest, got {got}")]
    WrongKind { what: String, expected: String, got: String },
    #[error("{name}: {source}")]
    Construction {
        name: String,
        #[source]
        source: ncpoisson::error::Error,
    },
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn construction(e: ncpoisson::error::Error) -> Self {
        let debug = format!("{e:?}");
        let name = debug.split(['(', ' ', '{']).next().unwrap_or_default().to_string();
        CliError::Construction { name, source: e }
    }
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
