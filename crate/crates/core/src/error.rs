use thiserror::Error;

use crate::cartan::RootVec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must satisfy ell >= 1, got {0}")]
    InvalidRank(i64),

    #[error("rank mismatch: expected ell = {expected}, got ell = {found}")]
    RankMismatch { expected: u32, found: u32 },

    #[error("{what} index out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("shapes do not differ by a single node of residue {residue}")]
    NotSingleNode { residue: usize },

    #[error("tableau is not standard: {0}")]
    NotStandard(String),

    #[error("residue sequence has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("idempotent {index} has content {found:?}, expected {expected:?}")]
    ContentMismatch {
        index: usize,
        expected: Vec<i64>,
        found: Vec<i64>,
    },

    #[error("dimension matrix does not have the shape required for quiver bounds: {0}")]
    QuiverShape(String),

    #[error("Lambda - beta is not a weight of the highest weight module (beta = {0})")]
    NotAWeight(RootVec),

    #[error("dominant reduction exceeded {cap} reflections")]
    IterationCap { cap: usize },

    #[error("no orbit representative matches dominant weight drop {0}")]
    NoRepresentative(RootVec),

    #[error("invalid classifier configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid Hecke parameters: {0}")]
    InvalidParameters(String),

    #[error("type D blocks require odd characteristic")]
    CharacteristicTwoTypeD,

    #[error("{0} is not of finite representation type")]
    NotFinite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
