//! Landau-type univalence radii and schlicht-disc radii for bounded
//! poly-analytic functions `F(z) = Σ z̄^k f_k(z)` on the unit disc.
//!
//! The crate is split along the objects it works with:
//!
//! * [`analytic`] holds the holomorphic building blocks (closed-form extremal
//!   functions and truncated power series) together with Taylor-coefficient
//!   extraction by the discrete Cauchy integral.
//! * [`polyanalytic`] combines them into `F`, evaluates Wirtinger derivatives
//!   and the dilatation quantities `Λ_F`, `λ_F`, and builds the sharp
//!   extremal function for the class `F3`.
//! * [`radii`] solves the radius equations of the classes `F1`, `F2`, `F3`
//!   by certified bisection and evaluates the classical reference radii.
//! * [`verify`] checks the resulting claims on concrete functions by sampling.

pub mod analytic;
pub mod error;
pub mod polyanalytic;
pub mod radii;
pub mod roots;
pub mod sampling;
pub mod verify;

pub use analytic::{AnalyticFunction, AnalyticKind, PowerSeries, TaylorConfig};
pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use polyanalytic::{PolyAnalyticFunction, WirtingerPair};
pub use radii::{
    ClassParams, F1Params, F2Params, F3Params, LipschitzBounds, RadiusResult, RootFindConfig,
};
pub use verify::{BoundarySampler, PairSampler, VerificationReport};
