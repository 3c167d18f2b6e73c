//! Test functions (elements of `S_n`) and tempered distributions (elements of
//! `S′_n`) over a shared truncated Hermite basis.
//!
//! A test function is stored by its coefficients `c_α`, a distribution by its
//! dual coefficients `d_α = u(h_α)`. The pairing is the bilinear
//! `⟨u, φ⟩ = Σ d_α c_α`, no conjugation.

use std::sync::Arc;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hermite::Basis;
use crate::scalar::{cplx, is_finite, Real};

pub(crate) fn ensure_same<T: Real>(a: &Arc<Basis<T>>, b: &Arc<Basis<T>>, what: &str) -> Result<()> {
    if Arc::ptr_eq(a, b) || a.same_as(b) {
        Ok(())
    } else {
        Err(Error::BasisMismatch(format!(
            "{what}: (dim {}, order {}, quad {}) vs (dim {}, order {}, quad {})",
            a.dim(),
            a.order(),
            a.config().quad_order,
            b.dim(),
            b.order(),
            b.config().quad_order
        )))
    }
}

fn checked_coeffs<T: Real>(basis: &Basis<T>, coeffs: Vec<Complex<T>>) -> Result<Vec<Complex<T>>> {
    if coeffs.len() != basis.size() {
        return Err(Error::DimensionMismatch(format!(
            "{} coefficients for a basis of size {}",
            coeffs.len(),
            basis.size()
        )));
    }
    if coeffs.iter().any(|&z| !is_finite(z)) {
        return Err(Error::Input("non-finite coefficient".into()));
    }
    Ok(coeffs)
}

/// Element of `S_n`: Hermite coefficients `c_α`.
#[derive(Debug, Clone)]
pub struct TestFunction<T> {
    basis: Arc<Basis<T>>,
    coeffs: Vec<Complex<T>>,
}

impl<T: Real> TestFunction<T> {
    pub fn new(basis: Arc<Basis<T>>, coeffs: Vec<Complex<T>>) -> Result<Self> {
        let coeffs = checked_coeffs(&basis, coeffs)?;
        Ok(Self { basis, coeffs })
    }

    pub fn zero(basis: Arc<Basis<T>>) -> Self {
        let coeffs = vec![Complex::zero(); basis.size()];
        Self { basis, coeffs }
    }

    /// The basis function `h_α` at position `pos`.
    pub fn basis_function(basis: Arc<Basis<T>>, pos: usize) -> Result<Self> {
        if pos >= basis.size() {
            return Err(Error::Domain(format!("basis position {pos} out of range")));
        }
        let mut f = Self::zero(basis);
        f.coeffs[pos] = cplx(T::one());
        Ok(f)
    }

    /// Fits a callable by quadrature; the residual is the tail-energy fraction.
    pub fn fit(basis: Arc<Basis<T>>, f: impl Fn(&[T]) -> Complex<T>) -> Result<(Self, T)> {
        let (coeffs, residual) = basis.fit_function(f)?;
        Ok((Self { basis, coeffs }, residual))
    }

    pub(crate) fn from_parts(basis: Arc<Basis<T>>, coeffs: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(coeffs.len(), basis.size());
        Self { basis, coeffs }
    }

    pub fn basis(&self) -> &Arc<Basis<T>> {
        &self.basis
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    /// Pointwise value `Σ c_α h_α(x)`.
    pub fn eval(&self, x: &[T]) -> Result<Complex<T>> {
        let h = self.basis.eval_basis(x)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&h)
            .fold(Complex::zero(), |acc, (&c, &hv)| acc + c * hv))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.basis, &other.basis, "fn_add")?;
        Ok(Self::from_parts(
            self.basis.clone(),
            self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| a + b).collect(),
        ))
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self::from_parts(self.basis.clone(), self.coeffs.iter().map(|&z| c * z).collect())
    }
}

/// Element of `S′_n`: dual coefficients `d_α = u(h_α)`.
#[derive(Debug, Clone)]
pub struct TemperedDistribution<T> {
    basis: Arc<Basis<T>>,
    duals: Vec<Complex<T>>,
}

impl<T: Real> TemperedDistribution<T> {
    pub fn new(basis: Arc<Basis<T>>, duals: Vec<Complex<T>>) -> Result<Self> {
        let duals = checked_coeffs(&basis, duals)?;
        Ok(Self { basis, duals })
    }

    pub fn zero(basis: Arc<Basis<T>>) -> Self {
        let duals = vec![Complex::zero(); basis.size()];
        Self { basis, duals }
    }

    pub(crate) fn from_parts(basis: Arc<Basis<T>>, duals: Vec<Complex<T>>) -> Self {
        debug_assert_eq!(duals.len(), basis.size());
        Self { basis, duals }
    }

    /// Point evaluation `δ_x`, with `d_α = h_α(x)`.
    pub fn dirac_at(basis: Arc<Basis<T>>, x: &[T]) -> Result<Self> {
        let duals = basis.eval_basis(x)?.into_iter().map(cplx).collect();
        Ok(Self { basis, duals })
    }

    /// Regular distribution `φ ↦ ∫ f φ`, with `d_α ≈ ∫ f h_α` by quadrature.
    pub fn embed_function(basis: Arc<Basis<T>>, f: impl Fn(&[T]) -> Complex<T>) -> Result<Self> {
        let (duals, _) = basis.fit_function(f)?;
        Ok(Self { basis, duals })
    }

    /// Regular distribution of a test function; orthonormality makes the
    /// dual coefficients equal to its Hermite coefficients.
    pub fn embed(phi: &TestFunction<T>) -> Self {
        Self::from_parts(phi.basis.clone(), phi.coeffs.clone())
    }

    pub fn basis(&self) -> &Arc<Basis<T>> {
        &self.basis
    }

    pub fn duals(&self) -> &[Complex<T>] {
        &self.duals
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.basis, &other.basis, "dist_add")?;
        Ok(Self::from_parts(
            self.basis.clone(),
            self.duals.iter().zip(&other.duals).map(|(&a, &b)| a + b).collect(),
        ))
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self::from_parts(self.basis.clone(), self.duals.iter().map(|&z| c * z).collect())
    }

    /// `⟨self, φ⟩`.
    pub fn pair(&self, phi: &TestFunction<T>) -> Result<Complex<T>> {
        pair(self, phi)
    }
}

/// Canonical bilinear pairing `⟨u, φ⟩ = Σ_α d_α c_α`.
pub fn pair<T: Real>(u: &TemperedDistribution<T>, phi: &TestFunction<T>) -> Result<Complex<T>> {
    ensure_same(&u.basis, &phi.basis, "pair")?;
    Ok(u.duals
        .iter()
        .zip(&phi.coeffs)
        .fold(Complex::zero(), |acc, (&d, &c)| acc + d * c))
}
