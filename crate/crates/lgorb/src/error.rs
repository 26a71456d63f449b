//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polynomial or group text did not match the grammar.
    Parse(String),
    /// The monomials do not form an invertible polynomial.
    NotInvertible(String),
    /// The exponent matrix is singular, so weights are not determined.
    DegenerateWeights,
    /// A permutation or group element that is not a symmetry of the polynomial.
    NotASymmetry,
    /// An element was used with a group it does not belong to.
    NotInGroup,
    /// dual_group requires a subgroup of the diagonal symmetry group.
    NotDiagonalSubgroup,
    /// The permutation (or group) does not normalize the diagonal subgroup.
    NotNormalized,
    /// A closure or enumeration exceeded the configured cap.
    SizeLimitExceeded(&'static str),
    /// The equivariant-Φ search exceeded the configured cap.
    SearchLimitExceeded,
    /// Krawitz pairing hit the two-dimensional even-loop block; use
    /// `krawitz_partners` to retrieve both members.
    LoopEvenAmbiguity,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::NotInvertible(m) => write!(f, "not an invertible polynomial: {m}"),
            Error::DegenerateWeights => write!(f, "exponent matrix is singular"),
            Error::NotASymmetry => write!(f, "not a symmetry of the polynomial"),
            Error::NotInGroup => write!(f, "element does not belong to the group"),
            Error::NotDiagonalSubgroup => write!(f, "not a subgroup of the diagonal symmetries"),
            Error::NotNormalized => write!(f, "group is not normalized by the permutation part"),
            Error::SizeLimitExceeded(what) => write!(f, "size limit exceeded: {what}"),
            Error::SearchLimitExceeded => write!(f, "equivariant bijection search limit exceeded"),
            Error::LoopEvenAmbiguity => {
                write!(
                    f,
                    "Krawitz map is two-valued here (even loop); no unique partner"
                )
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
