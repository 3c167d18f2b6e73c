//! Tempered distributions, Schwartz families and transpose-form linear
//! operators, represented in a truncated orthonormal Hermite-function basis.
//!
//! A test function `φ ∈ S_n` is stored by its Hermite coefficients, a tempered
//! distribution `u ∈ S′_n` by its dual coefficients `u(h_α)`. A family
//! `v = (v_p)` of distributions indexed by `p ∈ R^k` is stored as the matrix of
//! its associated operator `v̂ : S_n → S_k`, and a linear operator
//! `L : S′_n → S′_m` is stored through the matrix of `B : S_m → S_n` with
//! `L = tB`. Every identity of the calculus then reduces to a matrix identity,
//! and the [`verify`] module checks them numerically.
//!
//! All numerical types are generic over the real scalar `T: Real` (`f32` or
//! `f64`); coefficients are complex. The `*64` / `*32` aliases below fix the
//! scalar.

pub mod distribution;
pub mod error;
pub mod family;
pub mod hermite;
pub mod matrix;
pub mod operator;
pub mod scalar;
pub mod verify;
pub mod wire;

pub use distribution::{TemperedDistribution, TestFunction};
pub use error::{Error, Result};
pub use family::SFamily;
pub use hermite::{Basis, BasisConfig, QuadratureRule};
pub use matrix::CMatrix;
pub use operator::SLinearOperator;
pub use scalar::Real;
pub use verify::{CheckResult, VerificationReport};

pub use num_complex::Complex;

pub type Basis64 = Basis<f64>;
pub type QuadratureRule64 = QuadratureRule<f64>;
pub type CMatrix64 = CMatrix<f64>;
pub type TestFunction64 = TestFunction<f64>;
pub type Distribution64 = TemperedDistribution<f64>;
pub type SFamily64 = SFamily<f64>;
pub type SLinearOperator64 = SLinearOperator<f64>;

pub type Basis32 = Basis<f32>;
pub type QuadratureRule32 = QuadratureRule<f32>;
pub type CMatrix32 = CMatrix<f32>;
pub type TestFunction32 = TestFunction<f32>;
pub type Distribution32 = TemperedDistribution<f32>;
pub type SFamily32 = SFamily<f32>;
pub type SLinearOperator32 = SLinearOperator<f32>;
