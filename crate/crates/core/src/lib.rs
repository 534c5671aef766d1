//! Finite duality toolkit for meet-semilattices with top and monotone
//! semilattices: dual S-spaces, canonical extensions, σ/π extensions of
//! monotone maps, multirelational duals and the congruence correspondence with
//! lower-Vietoris-type families.
//!
//! Everything is computed exhaustively on small carriers (at most 64 elements
//! or points), with subsets packed into [`Mask`].

pub mod algebra;
pub mod bits;
pub mod canonical;
pub mod congruence;
pub mod dot;
pub mod enumerate;
pub mod fixtures;
pub mod maps;
pub mod monotone;
pub mod order;
pub mod report;
pub mod space;
pub mod verify;

use thiserror::Error;

pub use algebra::{AlgebraError, Congruence, Homomorphism, MonotoneSemilattice, Semilattice};
pub use bits::Mask;
pub use canonical::{CanonicalExtension, ExtensionError};
pub use congruence::{CongruenceError, VietorisFamily};
pub use maps::{MapError, OrderMap};
pub use monotone::{DualityError, MSSpace, MeetRelation};
pub use order::OrderError;
pub use report::{Check, Report};
pub use space::{dual_space, CheckConfig, DualSpace, SSpace, SpaceError};

/// Any error raised by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Duality(#[from] DualityError),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
}
