use thiserror::Error;

use crate::code::CodeError;
use crate::construct::ConstructError;
use crate::field::FieldError;
use crate::linalg::LinalgError;
use crate::mds::MdsError;
use crate::schur::SchurError;
use crate::specfile::SpecFileError;

/// Any failure raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Mds(#[from] MdsError),
    #[error(transparent)]
    Schur(#[from] SchurError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    SpecFile(#[from] SpecFileError),
}
