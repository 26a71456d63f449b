//! Landau-Ginzburg orbifold state spaces for invertible polynomials with
//! nonabelian symmetry groups, and verification of the BHK mirror map
//! `A(W, S⋉H) ≅ B(W^T, S⋉H^T)`.
//!
//! All arithmetic is exact over the rationals; group elements, sector bases,
//! bidegrees and orbit structures are computed with no floating point anywhere.
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `lgorb-cli` crate.
//!
//! Module layout:
//! - [`rat`]: exact rationals and the circle group Q/Z
//! - [`linalg`]: rational matrices, integer Hermite forms, lattices between Z^n and Q^n
//! - [`poly`]: invertible polynomials, exponent matrices, Milnor bases, `W^σ`
//! - [`groups`]: diagonal/permutation/semidirect symmetry groups and their duals
//! - [`sectors`]: fixed loci, ages, `β`/`γ`, sector Milnor bases, bidegrees
//! - [`orbits`]: the dot and ⋆ actions, the preferred basis, E/R split, orbit counting
//! - [`mirror`]: the Krawitz map, DSC and equivariant-Φ checks, the mirror verdict

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod groups;
pub mod linalg;
pub mod mirror;
pub mod orbits;
pub mod poly;
pub mod rat;
pub mod sectors;

pub use error::Error;
pub use groups::{
    DiagGroup, Diagonal, GroupElement, LgModel, PermGroup, Permutation, SymmetryGroup,
};
pub use orbits::GradedDimensions;
pub use poly::InvertiblePolynomial;
pub use rat::{QmodZ, Rational};
pub use sectors::{Bidegree, Model, SectorBasisElement};

/// Size limits for the potentially explosive computations.
///
/// `group_cap` bounds closure enumeration, `sigma_cap` bounds the brute-force
/// search for permutation symmetries, and `phi_cap` bounds the number of
/// orbits per fiber for which an equivariant bijection is searched
/// exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub group_cap: usize,
    pub sigma_cap: usize,
    pub phi_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            group_cap: 1_000_000,
            sigma_cap: 10,
            phi_cap: 8,
        }
    }
}
