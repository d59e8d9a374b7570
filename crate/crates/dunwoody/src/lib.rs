//! File formats and command-line front end for `dunwoody-core`.

pub mod cli;
pub mod dot;
pub mod json;
pub mod text;

use dunwoody_core::freegroup::syntax::WordSyntaxError;
use dunwoody_core::{ParamError, PresentationError};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("unsupported schema_version {0}")]
    Version(u32),
    #[error("expected a {expected} document, found {found:?}")]
    Kind {
        expected: &'static str,
        found: String,
    },
    #[error("{0}")]
    Inconsistent(&'static str),
    #[error("{0}")]
    Syntax(&'static str),
    #[error(transparent)]
    Word(#[from] WordSyntaxError),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}
