//! Linear operators `L : S′_n → S′_m` in transpose form `L = tB`.
//!
//! `B : S_m → S_n` is stored by its coefficient matrix (`size_n × size_m`,
//! column `β` = coefficients of `B h_β`), and `L u = u ∘ B`, i.e. the dual
//! coefficients of `L u` are `Bᵀ d`.

use std::sync::Arc;

use num_complex::Complex;

use crate::distribution::{ensure_same, TemperedDistribution};
use crate::error::{Error, Result};
use crate::family::SFamily;
use crate::hermite::Basis;
use crate::matrix::CMatrix;
use crate::scalar::{cplx, Real};

#[derive(Debug, Clone)]
pub struct SLinearOperator<T> {
    pub(crate) src: Arc<Basis<T>>,
    pub(crate) dst: Arc<Basis<T>>,
    pub(crate) b: CMatrix<T>,
}

impl<T: Real> SLinearOperator<T> {
    /// `tB` for `B : S_m → S_n` given by its `size_n × size_m` matrix, as an
    /// operator from `S′_n` (`src`) to `S′_m` (`dst`).
    pub fn transpose_of(src: Arc<Basis<T>>, dst: Arc<Basis<T>>, b: CMatrix<T>) -> Result<Self> {
        if b.shape() != (src.size(), dst.size()) {
            return Err(Error::DimensionMismatch(format!(
                "b_matrix is {}x{}, expected {}x{}",
                b.rows(),
                b.cols(),
                src.size(),
                dst.size()
            )));
        }
        if src.order() != dst.order() {
            return Err(Error::BasisMismatch(format!(
                "source order {} differs from target order {}",
                src.order(),
                dst.order()
            )));
        }
        if !b.is_finite() {
            return Err(Error::Input("non-finite b_matrix".into()));
        }
        Ok(Self { src, dst, b })
    }

    pub fn identity(basis: Arc<Basis<T>>) -> Self {
        let b = CMatrix::identity(basis.size());
        Self {
            src: basis.clone(),
            dst: basis,
            b,
        }
    }

    /// Distributional `∂/∂x_axis`, the transpose of `−∂/∂x_axis` on test
    /// functions.
    pub fn derivative(basis: Arc<Basis<T>>, axis: usize) -> Result<Self> {
        let b = basis.derivative_matrix_axis(axis)?.scale(cplx(-T::one()));
        Ok(Self {
            src: basis.clone(),
            dst: basis,
            b,
        })
    }

    /// Unitary Fourier transform `Fφ(p) = (2π)^{-n/2} ∫ φ(x) e^{-i p·x} dx`,
    /// diagonal in the Hermite basis with eigenvalue `(−i)^{|α|}`.
    pub fn fourier(basis: Arc<Basis<T>>) -> Self {
        let eig = [
            Complex::new(T::one(), T::zero()),
            Complex::new(T::zero(), -T::one()),
            Complex::new(-T::one(), T::zero()),
            Complex::new(T::zero(), T::one()),
        ];
        let diag: Vec<Complex<T>> = basis
            .multi_indices()
            .iter()
            .map(|alpha| eig[alpha.iter().sum::<usize>() % 4])
            .collect();
        Self {
            src: basis.clone(),
            dst: basis,
            b: CMatrix::diagonal(&diag),
        }
    }

    /// The superposition operator `a ↦ ∫ a w` of `w ∈ S(R^m, S′_n)`, equal to
    /// `t(ŵ)`.
    pub fn superposition(w: &SFamily<T>) -> Self {
        Self {
            src: w.index_basis.clone(),
            dst: w.value_basis.clone(),
            b: w.matrix.clone(),
        }
    }

    pub fn src_dim(&self) -> usize {
        self.src.dim()
    }

    pub fn dst_dim(&self) -> usize {
        self.dst.dim()
    }

    pub fn src_basis(&self) -> &Arc<Basis<T>> {
        &self.src
    }

    pub fn dst_basis(&self) -> &Arc<Basis<T>> {
        &self.dst
    }

    pub fn b_matrix(&self) -> &CMatrix<T> {
        &self.b
    }

    /// `L u = u ∘ B`.
    pub fn apply(&self, u: &TemperedDistribution<T>) -> Result<TemperedDistribution<T>> {
        ensure_same(u.basis(), &self.src, "apply")?;
        let duals = self.b.tr_mul_vec(u.duals())?;
        Ok(TemperedDistribution::from_parts(self.dst.clone(), duals))
    }

    /// Image family `L(v) = (L v_p)_p`, whose associated operator is `v̂ ∘ B`.
    pub fn image_family(&self, v: &SFamily<T>) -> Result<SFamily<T>> {
        ensure_same(&v.value_basis, &self.src, "image_family")?;
        Ok(SFamily {
            index_basis: v.index_basis.clone(),
            value_basis: self.dst.clone(),
            matrix: v.matrix.matmul(&self.b)?,
        })
    }

    /// `L(δ)^∧`: the matrix of the family obtained by applying `L` to the Dirac
    /// family of the source space. Equal to `b_matrix` since `δ̂ = I`.
    pub fn dirac_image_matrix(&self) -> CMatrix<T> {
        let dirac = SFamily::dirac(self.src.clone());
        self.image_family(&dirac)
            .expect("Dirac family is built on the source basis")
            .matrix
    }

    /// `L2 ∘ L1` (`L1` first); the `B` matrices multiply in reverse,
    /// `B1 · B2`.
    pub fn compose(l2: &Self, l1: &Self) -> Result<Self> {
        ensure_same(&l1.dst, &l2.src, "compose")?;
        Ok(Self {
            src: l1.src.clone(),
            dst: l2.dst.clone(),
            b: l1.b.matmul(&l2.b)?,
        })
    }
}

/// The family `B^∨ ∈ S(R^m, S′_n)` generated by `B : S_n → S_m`
/// (`size_m × size_n` matrix); `(B^∨)^∧ = B`.
pub fn generated_family<T: Real>(index: Arc<Basis<T>>, value: Arc<Basis<T>>, b: CMatrix<T>) -> Result<SFamily<T>> {
    SFamily::new(index, value, b)
}

/// Recovers `B` from `L` through the Dirac family, `L = t(L(δ)^∧)`.
pub fn operator_from_dirac_image<T: Real>(l: &SLinearOperator<T>) -> CMatrix<T> {
    l.dirac_image_matrix()
}
