//! Session scripts: parsing, validation, task execution and reports.
//!
//! ```
//! let report = pertinax::frontend::run_source(
//!     "algebra R = commutative(2);\ntask hilbert(R) maxdeg=4;",
//!     &Default::default(),
//! )
//! .unwrap();
//! assert_eq!(report.exit_code(), 0);
//! ```

pub mod ast;
mod parser;
mod report;
mod runner;
mod session;

use thiserror::Error;

pub use ast::{Script, Span};
pub use parser::{parse, parse_expr};
pub use report::{Report, TaskFailure, TaskReport, SCHEMA_VERSION};
pub use session::{validate, Session};

use crate::error::Error;

/// Problems found before any task runs. All of them map to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrontendError {
    #[error("{span}: syntax error: {msg}")]
    Syntax { span: Span, msg: String },
    #[error("{span}: undeclared identifier '{name}'")]
    Undeclared { span: Span, name: String },
    #[error("{span}: {msg}")]
    Invalid { span: Span, msg: String },
    #[error("{span}: {error}")]
    Math { span: Span, error: Error },
}

impl FrontendError {
    pub fn span(&self) -> Span {
        match self {
            FrontendError::Syntax { span, .. }
            | FrontendError::Undeclared { span, .. }
            | FrontendError::Invalid { span, .. }
            | FrontendError::Math { span, .. } => *span,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Truncation degree for tasks that do not set `maxdeg` themselves.
    pub maxdeg: Option<u32>,
    /// Seed for randomized task modes.
    pub seed: u64,
}

/// Parse and validate.
pub fn check_source(src: &str) -> Result<Script, FrontendError> {
    let script = parse(src)?;
    validate(&script)?;
    Ok(script)
}

/// Parse, validate and run every task in order.
pub fn run_source(src: &str, opts: &RunOptions) -> Result<Report, FrontendError> {
    let script = check_source(src)?;
    let mut session = Session::new(&script)?;
    Ok(session.run(opts))
}
