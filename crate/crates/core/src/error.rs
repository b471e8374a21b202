use thiserror::Error;

use crate::rootsystem::GroupId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse {0:?} as an element of Z[tau]")]
    Parse(String),

    #[error("point count {count} exceeds the configured cap of {cap}")]
    ResourceLimit { count: usize, cap: usize },

    #[error("operation not available for group {group}: {reason}")]
    UnsupportedGroup { group: GroupId, reason: &'static str },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point is not in the root lattice Z[tau] Delta2")]
    NotInRootLattice,

    #[error("root-sum witness {witness:?} does not represent the point or exceeds n = {n}")]
    InvalidWitness { witness: [i64; 5], n: u32 },

    #[error("decomposition exceeds the cut-off: f = {f}, g = {g}, n = {n}")]
    DecompositionBound { f: u64, g: u64, n: u32 },
}
