use thiserror::Error;

use crate::bitset::MAX_ELEMENTS;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element list is empty")]
    EmptyCarrier,
    #[error("element name is empty")]
    EmptyName,
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown element name `{0}`")]
    UnknownName(String),
    #[error("order is not antisymmetric: `{0}` <= `{1}` <= `{0}`")]
    NotAntisymmetric(String, String),
    #[error("carrier has {0} elements, at most {MAX_ELEMENTS} are supported")]
    TooLarge(usize),
    #[error("`{0}` and `{1}` have no least upper bound")]
    NoJoin(String, String),
    #[error("`{0}` and `{1}` have no greatest lower bound")]
    NoMeet(String, String),
    #[error("no bottom element")]
    NoBottom,
    #[error("no top element")]
    NoTop,
    #[error("search exceeded the size guard of {0} candidates")]
    SizeGuard(u64),
    #[error("morphism kind mismatch: {0}")]
    KindMismatch(String),
    #[error("space is not T0: points `{0}` and `{1}` are topologically indistinguishable")]
    NotT0(String, String),
    #[error("map is not continuous: preimage of open set {0} is not open")]
    NotContinuous(String),
    #[error("invalid support datum: {0}")]
    InvalidDatum(String),
    #[error("not a frame: {0}")]
    NotAFrame(String),
    #[error("lattice is not distributive: {0}")]
    NotDistributive(String),
    #[error("tensor does not distribute over joins: {0}")]
    NotDistributiveOverJoin(String),
    #[error("unit law fails: {0}")]
    UnitLawFails(String),
    #[error("zero law fails: {0}")]
    ZeroLawFails(String),
    #[error("tensor is not associative: {0}")]
    NotAssociative(String),
    #[error("corpus generation supports at most {max} elements, got {0}", max = crate::corpus::MAX_CORPUS_SIZE)]
    CorpusBound(usize),
    #[error("malformed input: {0}")]
    Malformed(String),
}
