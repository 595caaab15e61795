use thiserror::Error;

use crate::var::VarId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("invalid variable name `{0}`")]
    Variable(String),
    #[error("invalid monomial `{0}`")]
    Monomial(String),
    #[error("invalid binomial `{0}`")]
    Binomial(String),
    #[error("invalid term order: {0}")]
    Order(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is disconnected; apply the construction per component")]
    Disconnected,
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("clique sum: {0}")]
    CliqueSum(String),
    #[error("component with vertices {0:?} has more than one cycle: no graph H exists")]
    NoWitnessGraph(Vec<u32>),
    #[error("variable {0} is not part of the configuration")]
    UnknownVariable(VarId),
    #[error("variable {0} is not ranked by the term order")]
    UnrankedVariable(VarId),
    #[error("binomial is not homogeneous with respect to the configuration")]
    NotHomogeneous,
    #[error("edge names missing for variables {0:?}")]
    MissingEdgeNames(Vec<VarId>),
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
