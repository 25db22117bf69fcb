use thiserror::Error;

use crate::roots::DomWeight;
use crate::signatures::Signature;

#[derive(Debug, Error)]
pub enum Error {
    #[error("representation model inconsistent: {0}")]
    Model(String),

    #[error("signatures have different highest weights ({0} vs {1})")]
    HighestWeightMismatch(DomWeight, DomWeight),

    #[error("ambient tensor space for λ = ({lambda}) has dimension {dim}, above the limit {limit}")]
    AmbientTooLarge { lambda: DomWeight, dim: u128, limit: u128 },

    #[error("found {found} essential signatures for λ = ({lambda}), Weyl dimension is {expected}")]
    DimensionMismatch { lambda: DomWeight, found: usize, expected: String },

    #[error("computed fundamental table differs from the transcribed one:\n{0}")]
    TableMismatch(String),

    #[error("no decomposition into fundamental essential signatures for {0}")]
    Decomposition(Signature),

    #[error("signature {0} is not a lattice point of the cone")]
    NotMember(Signature),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
