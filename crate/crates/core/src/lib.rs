//! Operator-valued positive definite kernels on Euclidean space.
//!
//! Kernels are assembled as finite mixtures `P(x, y) = Σ_j p_{ω_j}(x, y) G_j` of a
//! scalar base family `p_ω` (Gaussian, Askey truncated power, spherical average
//! `Ω_m`, or plane waves) against an atomic measure with positive semidefinite
//! matrix weights `G_j`. On top of that the crate provides
//!
//! * small dense Hermitian linear algebra ([`hermitian`]),
//! * scalar base families, derivative jets and monotonicity checks ([`profiles`]),
//! * operator measures and the exact radial classification criterion ([`measures`]),
//! * kernel evaluation, derivative kernels and block Gram matrices ([`kernel`]),
//! * vector measures, RKHS embeddings, quadratic forms and interpolation ([`rkhs`]),
//! * strict positive definiteness probes and two worked counterexamples ([`certify`]).
//!
//! The crate is `no_std` compatible (it needs `alloc`); disable the default `std`
//! feature to build without the standard library.
#![cfg_attr(not(feature = "std"), no_std)]
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod certify;
mod error;
pub mod hermitian;
pub mod kernel;
pub mod measures;
pub mod profiles;
mod quadrature;
pub mod rkhs;

pub use error::{Error, Result};
pub use hermitian::{CMatrix, EigenDecomposition, HermitianMatrix};
pub use kernel::{MatrixKernel, OperatorKernel};
pub use measures::{OperatorMeasure, PlaneWaveMeasure, ScalarMeasure};
pub use profiles::{MultiIndex, RadialProfile};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// Relative tolerance used by positive semidefiniteness tests.
pub const DEFAULT_PSD_TOL: f64 = 1e-10;
