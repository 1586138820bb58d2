//! Error type of the command-line driver and its exit-code contract:
//! 0 ok, 1 internal, 2 parse, 3 validation, 4 pointedness, 5 fit failure,
//! 6 oracle check mismatch.

use chopcone::bz::BzError;
use chopcone::csc::CscError;
use chopcone::exact::ExactError;
use chopcone::liealg::LieError;
use chopcone::littelmann::LittelmannError;
use chopcone::vpf::VpfError;

#[derive(thiserror::Error, Debug)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("{0}")]
    NotPointed(String),
    #[error("{0}")]
    Fit(String),
    #[error("check failed: {0}")]
    CheckMismatch(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::NotPointed(_) => 4,
            CliError::Fit(_) => 5,
            CliError::CheckMismatch(_) => 6,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<ExactError> for CliError {
    fn from(e: ExactError) -> Self {
        let msg = e.to_string();
        match e {
            ExactError::NotPointed { .. } => CliError::NotPointed(msg),
            ExactError::DimensionMismatch(_) | ExactError::NotSquare { .. } => CliError::Parse(msg),
            _ => CliError::Internal(msg),
        }
    }
}

impl From<CscError> for CliError {
    fn from(e: CscError) -> Self {
        let msg = e.to_string();
        match e {
            CscError::DimensionMismatch(_)
            | CscError::UnknownTestFunction(_)
            | CscError::TestFunctionOutOfRange { .. } => CliError::Parse(msg),
            CscError::NotBounded { .. } | CscError::RankDeficientQ { .. } => CliError::Validation(msg),
            CscError::Polyhedra(_) => CliError::Internal(msg),
        }
    }
}

impl From<VpfError> for CliError {
    fn from(e: VpfError) -> Self {
        let msg = e.to_string();
        match e {
            VpfError::NotPointed { .. } => CliError::NotPointed(msg),
            VpfError::KernelConditionViolated { .. } => CliError::Validation(msg),
            VpfError::NoFit { .. } | VpfError::WindowTooShort { .. } => CliError::Fit(msg),
            VpfError::DimensionMismatch(_) => CliError::Parse(msg),
            VpfError::Csc(e) => e.into(),
            VpfError::Exact(e) => e.into(),
            VpfError::Polyhedra(_) => CliError::Internal(msg),
        }
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        let msg = e.to_string();
        match e {
            LieError::InvalidCartan(_)
            | LieError::UnknownType(_)
            | LieError::BadLetter { .. }
            | LieError::DimensionMismatch(_) => CliError::Parse(msg),
            _ => CliError::Validation(msg),
        }
    }
}

impl From<LittelmannError> for CliError {
    fn from(e: LittelmannError) -> Self {
        let msg = e.to_string();
        match e {
            LittelmannError::Lie(e) => e.into(),
            LittelmannError::Csc(e) => e.into(),
            LittelmannError::NotPointed { .. } => CliError::NotPointed(msg),
            LittelmannError::Parse(_) | LittelmannError::DimensionMismatch(_) => CliError::Parse(msg),
            LittelmannError::UnsupportedTypeWord { .. } | LittelmannError::ValidationFailed { .. } => {
                CliError::Validation(msg)
            }
            LittelmannError::Polyhedra(_) => CliError::Internal(msg),
        }
    }
}

impl From<BzError> for CliError {
    fn from(e: BzError) -> Self {
        let msg = e.to_string();
        match e {
            BzError::Lie(e) => e.into(),
            BzError::Csc(e) => e.into(),
            BzError::Littelmann(e) => e.into(),
            BzError::DimensionMismatch(_) => CliError::Parse(msg),
            BzError::UnsupportedType(_) | BzError::NotLongestWord(_) | BzError::WeightNotInRep(_) => {
                CliError::Validation(msg)
            }
            BzError::RepresentationCheck(_) => CliError::Internal(msg),
        }
    }
}
