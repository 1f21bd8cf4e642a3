//! Exact computation of the Gerstenhaber bracket on the Hochschild cohomology
//! of `A = F_p[Z_m]`, where `p` is an odd prime dividing `m`.
//!
//! The bracket is available through three independent routes:
//!
//! * [`gerstenhaber::closed_bracket`], the closed formula
//!   `[β^n ⊗ x, β^k ⊗ y] = (φ(β^n, y) - φ(β^k, x)) β^{n+k-1} ⊗ xy`;
//! * [`gerstenhaber::transferred_bracket`], the cochain-level formula on
//!   `C ⊗ A` built from the γ-maps, followed by class extraction;
//! * [`gerstenhaber::oracle_bracket`], the definition itself: move to the
//!   Hochschild complex, take Gerstenhaber's bracket there and come back.
//!
//! Module map:
//!
//! * [`modp`]: F_p scalars, matrices, and a linear solver.
//! * [`group_algebra`]: the cyclic group, its Q-sets, and the algebra `A`.
//! * [`complexes`]: cochains, the bar and minimal resolutions, Hochschild cochains.
//! * [`comparison`]: the comparison maps between the two resolutions and the
//!   basis `β^n` of `H^*(Z_m, F_p)`.
//! * [`gerstenhaber`]: brackets of basis classes and the Lie-theoretic checks.
//! * [`suite`]: the full battery of verification sweeps.

pub mod comparison;
pub mod complexes;
pub mod error;
pub mod gerstenhaber;
pub mod group_algebra;
pub mod modp;
pub mod report;
pub mod suite;

pub use error::{Error, Result};

pub use gerstenhaber::{BasisClass, GradedElt};
pub use group_algebra::{AlgElt, GroupCtx, GroupElt};
pub use modp::{PrimeField, Scalar};
pub use report::Report;
