//! Schwartz families `v = (v_p)_{p ∈ R^k}` in `S′_n`.
//!
//! A family is stored as the matrix of its associated operator
//! `v̂ : S_n → S_k, φ ↦ (p ↦ v_p(φ))`: column `α` holds the Hermite
//! coefficients in `S_k` of `p ↦ v_p(h_α)`. Superposition against a
//! coefficient distribution `a ∈ S′_k` is then `a ∘ v̂`, i.e. `Mᵀ a`.

use std::sync::Arc;

use num_complex::Complex;
use rayon::prelude::*;

use crate::distribution::{ensure_same, TemperedDistribution, TestFunction};
use crate::error::{Error, Result};
use crate::hermite::Basis;
use crate::matrix::CMatrix;
use crate::scalar::{cplx, Real};

#[derive(Debug, Clone)]
pub struct SFamily<T> {
    pub(crate) index_basis: Arc<Basis<T>>,
    pub(crate) value_basis: Arc<Basis<T>>,
    pub(crate) matrix: CMatrix<T>,
}

impl<T: Real> SFamily<T> {
    /// Wraps the matrix of `v̂` (`size_k × size_n`). Both bases must share the
    /// same order.
    pub fn new(index_basis: Arc<Basis<T>>, value_basis: Arc<Basis<T>>, matrix: CMatrix<T>) -> Result<Self> {
        if matrix.shape() != (index_basis.size(), value_basis.size()) {
            return Err(Error::DimensionMismatch(format!(
                "family matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                index_basis.size(),
                value_basis.size()
            )));
        }
        if index_basis.order() != value_basis.order() {
            return Err(Error::BasisMismatch(format!(
                "index order {} differs from value order {}",
                index_basis.order(),
                value_basis.order()
            )));
        }
        if !matrix.is_finite() {
            return Err(Error::Input("non-finite family matrix".into()));
        }
        Ok(Self {
            index_basis,
            value_basis,
            matrix,
        })
    }

    /// The Dirac family `(δ_x)_{x ∈ R^n}`; `δ̂` is the identity.
    pub fn dirac(basis: Arc<Basis<T>>) -> Self {
        let matrix = CMatrix::identity(basis.size());
        Self {
            index_basis: basis.clone(),
            value_basis: basis,
            matrix,
        }
    }

    /// `(δ_x^{(i)})_{x ∈ R^n}` with `δ_x^{(i)}(φ) = (−1)^{|i|} φ^{(i)}(x)`; the
    /// matrix is the product of `−D_axis` taken `i_axis` times per axis.
    pub fn dirac_derivative(basis: Arc<Basis<T>>, multi_index: &[usize]) -> Result<Self> {
        if multi_index.len() != basis.dim() {
            return Err(Error::DimensionMismatch(format!(
                "derivative multi-index has {} entries, dimension is {}",
                multi_index.len(),
                basis.dim()
            )));
        }
        let mut matrix = CMatrix::identity(basis.size());
        for (axis, &count) in multi_index.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let neg_d = basis.derivative_matrix_axis(axis)?.scale(cplx(-T::one()));
            for _ in 0..count {
                matrix = neg_d.matmul(&matrix)?;
            }
        }
        Ok(Self {
            index_basis: basis.clone(),
            value_basis: basis,
            matrix,
        })
    }

    /// Builds a family from pointwise samples `p ↦ v_p`, evaluated at the
    /// tensor Gauss-Hermite nodes of the index space.
    ///
    /// For every column `α`, the scalar function `p ↦ v_p(h_α)` is projected
    /// onto the index basis and its tail-energy residual measured. Columns whose
    /// own degree lies in the resolved band (`max α ≤ ⌈0.8 N⌉`) must have
    /// residual at most `tail_fraction`, otherwise the family is rejected with
    /// [`Error::NotSchwartzAtResolution`]. Returns the family and the largest
    /// residual over the tested columns.
    pub fn from_samples<F>(index_basis: Arc<Basis<T>>, value_basis: Arc<Basis<T>>, sampler: F) -> Result<(Self, T)>
    where
        F: Fn(&[T]) -> Result<TemperedDistribution<T>> + Sync,
    {
        let nodes = index_basis.tensor_nodes();
        let samples: Vec<TemperedDistribution<T>> = nodes.par_iter().map(|p| sampler(p)).collect::<Result<_>>()?;
        for s in &samples {
            ensure_same(s.basis(), &value_basis, "sampled member")?;
        }
        let threshold = T::of(index_basis.config().tail_fraction);
        let cutoff = value_basis.config().tail_cutoff();
        let columns: Vec<(Vec<Complex<T>>, T)> = (0..value_basis.size())
            .into_par_iter()
            .map(|alpha| {
                let column: Vec<Complex<T>> = samples.iter().map(|s| s.duals()[alpha]).collect();
                let coeffs = index_basis.project(&column)?;
                let residual = index_basis.tail_residual(&coeffs);
                Ok((coeffs, residual))
            })
            .collect::<Result<_>>()?;

        let mut worst = T::zero();
        for (alpha, (_, residual)) in columns.iter().enumerate() {
            if value_basis.max_degree(alpha) > cutoff {
                continue;
            }
            if residual.is_nan() || *residual > threshold {
                return Err(Error::NotSchwartzAtResolution {
                    order: index_basis.order(),
                    column: alpha,
                    residual: residual.as_f64(),
                    threshold: threshold.as_f64(),
                });
            }
            worst = worst.max(*residual);
        }
        let matrix = CMatrix::from_fn(index_basis.size(), value_basis.size(), |i, j| columns[j].0[i]);
        Ok((Self::new(index_basis, value_basis, matrix)?, worst))
    }

    /// Index-space dimension `k`.
    pub fn index_dim(&self) -> usize {
        self.index_basis.dim()
    }

    /// Value-space dimension `n`.
    pub fn value_dim(&self) -> usize {
        self.value_basis.dim()
    }

    pub fn index_basis(&self) -> &Arc<Basis<T>> {
        &self.index_basis
    }

    pub fn value_basis(&self) -> &Arc<Basis<T>> {
        &self.value_basis
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    /// `v̂(φ)`: the function `p ↦ v_p(φ)` in `S_k`.
    pub fn apply(&self, phi: &TestFunction<T>) -> Result<TestFunction<T>> {
        ensure_same(phi.basis(), &self.value_basis, "family_apply")?;
        let coeffs = self.matrix.mul_vec(phi.coeffs())?;
        Ok(TestFunction::from_parts(self.index_basis.clone(), coeffs))
    }

    /// The member `v_p`, with `v_p(h_α) = (v̂ h_α)(p)`.
    pub fn member(&self, p: &[T]) -> Result<TemperedDistribution<T>> {
        let h: Vec<Complex<T>> = self.index_basis.eval_basis(p)?.into_iter().map(cplx).collect();
        let duals = self.matrix.tr_mul_vec(&h)?;
        Ok(TemperedDistribution::from_parts(self.value_basis.clone(), duals))
    }
}

/// Superposition `∫ a v = a ∘ v̂` of the family against the coefficient
/// distribution `a ∈ S′_k`.
pub fn superpose<T: Real>(a: &TemperedDistribution<T>, v: &SFamily<T>) -> Result<TemperedDistribution<T>> {
    ensure_same(a.basis(), &v.index_basis, "superpose")?;
    let duals = v.matrix.tr_mul_vec(a.duals())?;
    Ok(TemperedDistribution::from_parts(v.value_basis.clone(), duals))
}

/// Product `v.w = ∫_{R^m} v w` of `v ∈ S(R^k, S′_m)` and `w ∈ S(R^m, S′_n)`;
/// its associated operator is `v̂ ∘ ŵ`.
pub fn family_product<T: Real>(v: &SFamily<T>, w: &SFamily<T>) -> Result<SFamily<T>> {
    ensure_same(&v.value_basis, &w.index_basis, "family_product")?;
    Ok(SFamily {
        index_basis: v.index_basis.clone(),
        value_basis: w.value_basis.clone(),
        matrix: v.matrix.matmul(&w.matrix)?,
    })
}
