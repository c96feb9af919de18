//! Jet groups of gauge transformations in local coordinates.
//!
//! The crate works on a single trivialized coordinate patch `U ⊂ ℝⁿ` with a
//! compact matrix structure group `G`. Gauge transformations are `G`-valued
//! functions on the patch, stored together with their right-trivialized
//! derivatives as first and second order jets. The jets form groups under
//! the product obtained by multiplying sections pointwise and differentiating,
//! and these groups act on
//!
//! * matter fields with values in a linear representation and their first jets,
//! * connection forms `A_μ` and their first jets `(A, ∂A)`,
//! * curvature forms `F_μν`.
//!
//! On top of these actions sit lagrangian densities, minimal coupling through
//! the covariant derivative, factorization of invariant gauge lagrangians
//! through the curvature map, and a verification harness that checks every
//! invariance, transitivity and functoriality property numerically.
//!
//! Module map:
//!
//! | module | contents |
//! |---|---|
//! | [`lie`] | matrix groups, algebras, representations |
//! | [`patch`] | grids, fields, finite differences, quadrature, analytic families, JGF1 files |
//! | [`jets`] | gauge, matter and connection jets, jet products, curvature |
//! | [`actions`] | jet-group actions and gauge-to-zero witnesses |
//! | [`lagrangians`] | densities, minimal coupling, curvature factorization, action functionals |
//! | [`harness`] | config-driven verification suites and reports |

pub mod actions;
pub mod error;
pub mod harness;
pub mod jets;
pub mod lagrangians;
pub mod lie;
pub mod patch;

pub use error::{GaugeError, Result};
pub use lie::{
    AlgebraElement, CMat, CVec, GroupElement, GroupFamily, GroupSpec, Rep, RepTangent, RepVector,
    Representation,
};
pub use nalgebra::Complex;
pub type C64 = Complex<f64>;
