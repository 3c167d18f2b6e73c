//! Orthonormal Hermite functions, Gauss-Hermite quadrature and the
//! coefficient-space matrices of `d/dx` and `x·`.
//!
//! The 1-D basis is `h_j(x) = (2^j j! √π)^{-1/2} H_j(x) e^{-x²/2}`,
//! `j = 0..=N`. Multi-dimensional bases are tensor products over multi-indices
//! with every component `≤ N`, enumerated in graded lexicographic order.

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{cplx, is_finite, Real};

/// Discretization parameters shared by every object built on a basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BasisConfig {
    /// Spatial dimension.
    pub dim: usize,
    /// Maximum 1-D Hermite degree (inclusive).
    pub order: usize,
    /// Gauss-Hermite nodes per axis.
    pub quad_order: usize,
    /// Default comparison tolerance.
    pub tol: f64,
    /// Tail-energy threshold of the Schwartz-membership test.
    pub tail_fraction: f64,
}

impl Default for BasisConfig {
    fn default() -> Self {
        Self {
            dim: 1,
            order: 32,
            quad_order: 80,
            tol: 1e-10,
            tail_fraction: 1e-8,
        }
    }
}

impl BasisConfig {
    /// Config with the given dimension and order and the smallest admissible
    /// quadrature order that is at least the default.
    pub fn new(dim: usize, order: usize) -> Self {
        Self {
            dim,
            order,
            quad_order: Self::default().quad_order.max(2 * order + 2),
            ..Self::default()
        }
    }

    pub fn with_quad_order(mut self, quad_order: usize) -> Self {
        self.quad_order = quad_order;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::Config("dim must be positive".into()));
        }
        if self.order == 0 {
            return Err(Error::Config("order must be positive".into()));
        }
        if self.quad_order < 2 * self.order + 2 {
            return Err(Error::Config(format!(
                "quad_order {} must be at least 2*order+2 = {}",
                self.quad_order,
                2 * self.order + 2
            )));
        }
        if !(self.tol >= 0.0 && self.tol.is_finite()) {
            return Err(Error::Config(format!(
                "tol must be finite and nonnegative, got {}",
                self.tol
            )));
        }
        if !(self.tail_fraction > 0.0 && self.tail_fraction < 1.0) {
            return Err(Error::Config(format!(
                "tail_fraction must lie in (0,1), got {}",
                self.tail_fraction
            )));
        }
        let size = (self.order + 1).checked_pow(self.dim as u32);
        if size.is_none_or(|s| s > 1 << 20) {
            return Err(Error::Config("basis too large".into()));
        }
        Ok(())
    }

    /// Number of 1-D basis functions, `N + 1`.
    pub fn axis_size(&self) -> usize {
        self.order + 1
    }

    /// Total number of multi-indices, `(N + 1)^dim`.
    pub fn size(&self) -> usize {
        self.axis_size().pow(self.dim as u32)
    }

    /// Degrees strictly above this cutoff count as spectral tail.
    pub fn tail_cutoff(&self) -> usize {
        (4 * self.order).div_ceil(5)
    }
}

/// Gauss-Hermite rule for the weight `e^{-x²}`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Real> QuadratureRule<T> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ wᵢ F(xᵢ) ≈ ∫ F(x) e^{-x²} dx`.
    pub fn integrate(&self, f: impl Fn(T) -> T) -> T {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(T::zero(), |s, (&x, &w)| s + w * f(x))
    }
}

/// Nodes and weights of the `q`-point Gauss-Hermite rule, by Newton iteration
/// on the normalized Hermite recurrence. Nodes are returned in increasing
/// order.
pub fn gauss_hermite<T: Real>(q: usize) -> Result<QuadratureRule<T>> {
    if q == 0 {
        return Err(Error::Domain("quadrature needs at least one node".into()));
    }
    let pim4 = T::PI().powf(T::of(-0.25));
    let two = T::of(2.0);
    // (p_q(z), p_{q-1}(z)) for the Gaussian-free orthonormal polynomials
    let recur = |z: T| {
        let (mut p1, mut p2) = (pim4, T::zero());
        for j in 0..q {
            let p3 = p2;
            p2 = p1;
            let jf = T::of_usize(j);
            p1 = z * (two / (jf + T::one())).sqrt() * p2 - (jf / (jf + T::one())).sqrt() * p3;
        }
        (p1, p2)
    };
    let scale = (two * T::of_usize(q)).sqrt();
    let qf = T::of_usize(q);
    let half = q.div_ceil(2);
    let mut pos = vec![T::zero(); half];
    let mut wts = vec![T::zero(); half];
    let mut z = T::zero();
    for i in 0..half {
        // initial guesses for the largest roots first
        z = match i {
            0 => (two * qf + T::one()).sqrt() - T::of(1.85575) * (two * qf + T::one()).powf(T::of(-0.16667)),
            1 => z - T::of(1.14) * qf.powf(T::of(0.426)) / z,
            2 => T::of(1.86) * z - T::of(0.86) * pos[0],
            3 => T::of(1.91) * z - T::of(0.91) * pos[1],
            _ => two * z - pos[i - 2],
        };
        if 2 * i + 1 == q {
            z = T::zero();
        } else {
            for _ in 0..200 {
                let (p1, p2) = recur(z);
                let step = p1 / (scale * p2);
                z -= step;
                if step.abs() <= T::epsilon() * T::of(4.0) * z.abs().max(T::one()) {
                    break;
                }
            }
        }
        let (_, p2) = recur(z);
        let pp = scale * p2;
        pos[i] = z;
        wts[i] = two / (pp * pp);
    }
    let mut nodes = Vec::with_capacity(q);
    let mut weights = Vec::with_capacity(q);
    for i in 0..q / 2 {
        nodes.push(-pos[i]);
        weights.push(wts[i]);
    }
    if q % 2 == 1 {
        nodes.push(T::zero());
        weights.push(wts[half - 1]);
    }
    for i in (0..q / 2).rev() {
        nodes.push(pos[i]);
        weights.push(wts[i]);
    }
    Ok(QuadratureRule { nodes, weights })
}

/// Values `h_0(x), …, h_max(x)` of the normalized Hermite functions.
pub fn hermite_functions<T: Real>(max_degree: usize, x: T) -> Vec<T> {
    let g = (-x * x / T::of(2.0)).exp();
    let mut out = hermite_polys(max_degree, x);
    for h in &mut out {
        *h *= g;
    }
    out
}

/// Same recurrence without the Gaussian factor: `h_j(x) e^{x²/2}`.
fn hermite_polys<T: Real>(max_degree: usize, x: T) -> Vec<T> {
    let mut out = Vec::with_capacity(max_degree + 1);
    out.push(T::PI().powf(T::of(-0.25)));
    if max_degree >= 1 {
        out.push(T::of(2.0).sqrt() * x * out[0]);
    }
    for j in 1..max_degree {
        let jf = T::of_usize(j);
        let next = (T::of(2.0) / (jf + T::one())).sqrt() * x * out[j] - (jf / (jf + T::one())).sqrt() * out[j - 1];
        out.push(next);
    }
    out
}

/// Basis data: the configuration, multi-index enumeration and the quadrature
/// tables used to project functions onto the basis.
#[derive(Debug, Clone)]
pub struct Basis<T> {
    config: BasisConfig,
    multi_indices: Vec<Vec<usize>>,
    // mixed-radix code of a multi-index -> position in `multi_indices`
    lookup: Vec<usize>,
    rule: QuadratureRule<T>,
    // w_i e^{x_i²/2}
    scaled_weights: Vec<T>,
    // polys[i][j] = h_j(x_i) e^{x_i²/2}
    polys: Vec<Vec<T>>,
}

impl<T: Real> Basis<T> {
    pub fn new(config: BasisConfig) -> Result<Self> {
        config.validate()?;
        let axis = config.axis_size();
        let size = config.size();
        let mut multi_indices: Vec<Vec<usize>> = (0..size)
            .map(|mut code| {
                let mut alpha = vec![0; config.dim];
                for a in alpha.iter_mut().rev() {
                    *a = code % axis;
                    code /= axis;
                }
                alpha
            })
            .collect();
        multi_indices.sort_by(|a, b| {
            let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
            sa.cmp(&sb).then_with(|| a.cmp(b))
        });
        let mut lookup = vec![0; size];
        for (pos, alpha) in multi_indices.iter().enumerate() {
            lookup[encode(alpha, axis)] = pos;
        }
        let rule = gauss_hermite::<T>(config.quad_order)?;
        let half = T::of(0.5);
        let scaled_weights = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&x, &w)| w * (half * x * x).exp())
            .collect();
        let polys = rule.nodes.iter().map(|&x| hermite_polys(config.order, x)).collect();
        Ok(Self {
            config,
            multi_indices,
            lookup,
            rule,
            scaled_weights,
            polys,
        })
    }

    pub fn config(&self) -> &BasisConfig {
        &self.config
    }

    pub fn dim(&self) -> usize {
        self.config.dim
    }

    pub fn order(&self) -> usize {
        self.config.order
    }

    pub fn size(&self) -> usize {
        self.multi_indices.len()
    }

    pub fn quadrature(&self) -> &QuadratureRule<T> {
        &self.rule
    }

    pub fn multi_indices(&self) -> &[Vec<usize>] {
        &self.multi_indices
    }

    pub fn multi_index(&self, pos: usize) -> &[usize] {
        &self.multi_indices[pos]
    }

    /// Position of a multi-index, `None` if some component exceeds the order
    /// or the length is wrong.
    pub fn position(&self, alpha: &[usize]) -> Option<usize> {
        if alpha.len() != self.dim() || alpha.iter().any(|&a| a > self.order()) {
            return None;
        }
        Some(self.lookup[encode(alpha, self.config.axis_size())])
    }

    /// Two bases describe the same discretization.
    pub fn same_as(&self, other: &Self) -> bool {
        self.config.dim == other.config.dim
            && self.config.order == other.config.order
            && self.config.quad_order == other.config.quad_order
    }

    /// `h_j(x)` for a single degree `j ≤ N`.
    pub fn eval_hermite(&self, j: usize, x: T) -> Result<T> {
        if j > self.order() {
            return Err(Error::Domain(format!("degree {j} exceeds order {}", self.order())));
        }
        Ok(hermite_functions(j, x)[j])
    }

    /// `h_α(x)` for every multi-index, in basis order.
    pub fn eval_basis(&self, x: &[T]) -> Result<Vec<T>> {
        self.check_point(x)?;
        let per_axis: Vec<Vec<T>> = x.iter().map(|&xi| hermite_functions(self.order(), xi)).collect();
        Ok(self
            .multi_indices
            .iter()
            .map(|alpha| alpha.iter().zip(&per_axis).fold(T::one(), |p, (&a, vals)| p * vals[a]))
            .collect())
    }

    pub(crate) fn check_point(&self, x: &[T]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, basis dimension is {}",
                x.len(),
                self.dim()
            )));
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::Input("non-finite coordinate".into()));
        }
        Ok(())
    }

    /// 1-D matrix of `d/dx` on Hermite coefficients,
    /// `(Dc)_m = √((m+1)/2) c_{m+1} − √(m/2) c_{m−1}`, truncated at degree N.
    pub fn derivative_matrix(&self) -> CMatrix<T> {
        band_matrix(self.config.axis_size(), -T::one())
    }

    /// 1-D matrix of `φ ↦ x·φ`,
    /// `(Xc)_m = √((m+1)/2) c_{m+1} + √(m/2) c_{m−1}`, truncated at degree N.
    pub fn position_matrix(&self) -> CMatrix<T> {
        band_matrix(self.config.axis_size(), T::one())
    }

    /// `∂/∂x_axis` acting on the full multi-index coefficient vector.
    pub fn derivative_matrix_axis(&self, axis: usize) -> Result<CMatrix<T>> {
        self.lift(&self.derivative_matrix(), axis)
    }

    /// `x_axis ·` acting on the full multi-index coefficient vector.
    pub fn position_matrix_axis(&self, axis: usize) -> Result<CMatrix<T>> {
        self.lift(&self.position_matrix(), axis)
    }

    /// Tensor-product extension of a 1-D coefficient matrix acting on `axis`.
    pub fn lift(&self, one_d: &CMatrix<T>, axis: usize) -> Result<CMatrix<T>> {
        if axis >= self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "axis {axis} out of range for dimension {}",
                self.dim()
            )));
        }
        let n = self.config.axis_size();
        if one_d.shape() != (n, n) {
            return Err(Error::DimensionMismatch("1-D matrix does not match axis size".into()));
        }
        let mut out = CMatrix::zeros(self.size(), self.size());
        let mut target = vec![0; self.dim()];
        for (col, beta) in self.multi_indices.iter().enumerate() {
            target.copy_from_slice(beta);
            for r in 0..n {
                let entry = one_d[(r, beta[axis])];
                if entry.is_zero() {
                    continue;
                }
                target[axis] = r;
                let row = self.lookup[encode(&target, n)];
                out[(row, col)] = entry;
            }
        }
        Ok(out)
    }

    /// Tensor Gauss-Hermite nodes of `R^dim`, last axis fastest.
    pub fn tensor_nodes(&self) -> Vec<Vec<T>> {
        self.tensor_node_indices()
            .into_iter()
            .map(|idx| idx.iter().map(|&i| self.rule.nodes[i]).collect())
            .collect()
    }

    fn tensor_node_indices(&self) -> Vec<Vec<usize>> {
        let q = self.rule.len();
        let count = q.pow(self.dim() as u32);
        (0..count)
            .map(|mut code| {
                let mut idx = vec![0; self.dim()];
                for i in idx.iter_mut().rev() {
                    *i = code % q;
                    code /= q;
                }
                idx
            })
            .collect()
    }

    /// Projects samples taken at [`Self::tensor_nodes`] (same order) onto the
    /// basis: `c_α ≈ ∫ f h_α`.
    pub fn project(&self, samples: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        let idx = self.tensor_node_indices();
        if samples.len() != idx.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} samples for {} quadrature nodes",
                samples.len(),
                idx.len()
            )));
        }
        if let Some(bad) = samples.iter().position(|&s| !is_finite(s)) {
            return Err(Error::Input(format!("non-finite sample at node {bad}")));
        }
        let mut coeffs = vec![Complex::zero(); self.size()];
        for (node, &value) in idx.iter().zip(samples) {
            if value.is_zero() {
                continue;
            }
            let g = node.iter().fold(value, |acc, &i| acc * self.scaled_weights[i]);
            for (c, alpha) in coeffs.iter_mut().zip(&self.multi_indices) {
                let p = alpha
                    .iter()
                    .zip(node)
                    .fold(T::one(), |p, (&a, &i)| p * self.polys[i][a]);
                *c += g * p;
            }
        }
        Ok(coeffs)
    }

    /// Fits `f` into the basis by quadrature. Returns the coefficients and the
    /// tail-energy residual (see [`Self::tail_residual`]).
    pub fn fit_function(&self, f: impl Fn(&[T]) -> Complex<T>) -> Result<(Vec<Complex<T>>, T)> {
        let samples: Vec<Complex<T>> = self.tensor_nodes().iter().map(|x| f(x)).collect();
        let coeffs = self.project(&samples)?;
        let residual = self.tail_residual(&coeffs);
        Ok((coeffs, residual))
    }

    /// Fraction of `Σ|c_α|²` carried by multi-indices whose largest component
    /// exceeds `⌈0.8 N⌉`; zero when the total energy is below `tol`.
    pub fn tail_residual(&self, coeffs: &[Complex<T>]) -> T {
        let cutoff = self.config.tail_cutoff();
        let (mut total, mut tail) = (T::zero(), T::zero());
        for (c, alpha) in coeffs.iter().zip(&self.multi_indices) {
            let e = c.norm_sqr();
            total += e;
            if alpha.iter().any(|&a| a > cutoff) {
                tail += e;
            }
        }
        if total < T::of(self.config.tol) {
            T::zero()
        } else {
            tail / total
        }
    }

    /// Largest component of the multi-index at `pos`.
    pub fn max_degree(&self, pos: usize) -> usize {
        self.multi_indices[pos].iter().copied().max().unwrap_or(0)
    }
}

fn encode(alpha: &[usize], radix: usize) -> usize {
    alpha.iter().fold(0, |code, &a| code * radix + a)
}

fn band_matrix<T: Real>(n: usize, lower_sign: T) -> CMatrix<T> {
    let mut m = CMatrix::zeros(n, n);
    let half = T::of(0.5);
    for row in 0..n {
        if row + 1 < n {
            m[(row, row + 1)] = cplx((T::of_usize(row + 1) * half).sqrt());
        }
        if row >= 1 {
            m[(row, row - 1)] = cplx(lower_sign * (T::of_usize(row) * half).sqrt());
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn basis(order: usize) -> Basis<f64> {
        Basis::new(BasisConfig::new(1, order)).unwrap()
    }

    fn re(v: &[Complex<f64>]) -> Vec<f64> {
        v.iter().map(|z| z.re).collect()
    }

    #[test]
    fn hermite_values_at_origin() {
        let b = basis(8);
        assert_relative_eq!(b.eval_hermite(0, 0.0).unwrap(), 0.7511255444649425, epsilon = 1e-15);
        assert_eq!(b.eval_hermite(1, 0.0).unwrap(), 0.0);
        assert_relative_eq!(b.eval_hermite(2, 0.0).unwrap(), -0.5311259660135985, epsilon = 1e-15);
        assert!(matches!(b.eval_hermite(9, 0.0), Err(Error::Domain(_))));
    }

    #[test]
    fn hermite_matches_explicit_polynomials() {
        // H_3 = 8x³ − 12x, norm (2³ 3! √π)^{-1/2}
        let x = 0.83_f64;
        let norm = (8.0 * 6.0 * std::f64::consts::PI.sqrt()).powf(-0.5);
        let expect = norm * (8.0 * x.powi(3) - 12.0 * x) * (-x * x / 2.0).exp();
        assert_relative_eq!(hermite_functions(3, x)[3], expect, epsilon = 1e-14);
    }

    #[test]
    fn single_and_two_node_rules() {
        let r1 = gauss_hermite::<f64>(1).unwrap();
        assert_eq!(r1.nodes, vec![0.0]);
        assert_relative_eq!(r1.weights[0], std::f64::consts::PI.sqrt(), epsilon = 1e-15);
        let r2 = gauss_hermite::<f64>(2).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_relative_eq!(r2.nodes[0], -s, epsilon = 1e-15);
        assert_relative_eq!(r2.nodes[1], s, epsilon = 1e-15);
        for w in r2.weights {
            assert_relative_eq!(w, std::f64::consts::PI.sqrt() / 2.0, epsilon = 1e-15);
        }
        assert!(gauss_hermite::<f64>(0).is_err());
    }

    #[test]
    fn rule_invariants() {
        for q in [3, 7, 20, 64, 80, 81] {
            let r = gauss_hermite::<f64>(q).unwrap();
            assert!(r.nodes.windows(2).all(|w| w[0] < w[1]), "q={q} not increasing");
            for i in 0..q {
                assert_eq!(r.nodes[i], -r.nodes[q - 1 - i]);
            }
            assert!(r.weights.iter().all(|&w| w > 0.0));
            let sum: f64 = r.weights.iter().sum();
            assert_relative_eq!(sum, std::f64::consts::PI.sqrt(), max_relative = 1e-12);
        }
    }

    #[test]
    fn moment_x38_with_20_nodes() {
        // Γ(19.5) = 37!! / 2^19 · √π
        let mut gamma = std::f64::consts::PI.sqrt();
        for k in 0..19 {
            gamma *= (2 * k + 1) as f64 / 2.0;
        }
        let r = gauss_hermite::<f64>(20).unwrap();
        let m = r.integrate(|x| x.powi(38));
        assert_relative_eq!(m, gamma, max_relative = 1e-10);
    }

    #[test]
    fn orthonormality_by_quadrature() {
        let b = basis(32);
        let r = b.quadrature();
        for i in 0..=32 {
            for j in 0..=32 {
                let g: f64 = r
                    .nodes
                    .iter()
                    .zip(&r.weights)
                    .map(|(&x, &w)| {
                        let h = hermite_functions(32, x);
                        w * (x * x).exp() * h[i] * h[j]
                    })
                    .sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((g - expect).abs() < 1e-10, "({i},{j}) -> {g}");
            }
        }
    }

    #[test]
    fn derivative_of_ground_state() {
        let b = basis(6);
        let d = b.derivative_matrix();
        let mut e0 = vec![Complex::zero(); 7];
        e0[0] = Complex::new(1.0, 0.0);
        let de = d.mul_vec(&e0).unwrap();
        assert_relative_eq!(de[1].re, -std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
        assert!(de.iter().enumerate().all(|(i, z)| i == 1 || z.norm() == 0.0));
        let zero = vec![Complex::zero(); 7];
        assert!(d.mul_vec(&zero).unwrap().iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn derivative_matches_central_difference() {
        let b = basis(10);
        let d = b.derivative_matrix();
        let mut c = vec![Complex::zero(); 11];
        c[3] = Complex::new(1.0, 0.0);
        let dc = re(&d.mul_vec(&c).unwrap());
        let eps = 1e-5;
        for x in [-1.0, 0.0, 1.0] {
            let fd = (hermite_functions(3, x + eps)[3] - hermite_functions(3, x - eps)[3]) / (2.0 * eps);
            let h = hermite_functions(10, x);
            let spectral: f64 = dc.iter().zip(&h).map(|(a, b)| a * b).sum();
            assert!((fd - spectral).abs() < 1e-6, "x={x}: {fd} vs {spectral}");
        }
    }

    #[test]
    fn position_matrix_properties() {
        let b = basis(12);
        let x = b.position_matrix();
        assert_eq!(x, x.transpose());
        let mut e0 = vec![Complex::zero(); 13];
        e0[0] = Complex::new(1.0, 0.0);
        let xe = x.mul_vec(&e0).unwrap();
        assert_relative_eq!(xe[1].re, std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);

        // [X, D] = −1 away from the truncation band
        let d = b.derivative_matrix();
        let comm = x
            .matmul(&d)
            .unwrap()
            .add(&d.matmul(&x).unwrap().scale(Complex::new(-1.0, 0.0)))
            .unwrap();
        let c: Vec<Complex<f64>> = (0..13)
            .map(|m| {
                if m < 11 {
                    Complex::new(0.3 * m as f64 - 1.0, 0.1 * m as f64)
                } else {
                    Complex::zero()
                }
            })
            .collect();
        let out = comm.mul_vec(&c).unwrap();
        for m in 0..11 {
            assert!((out[m] + c[m]).norm() < 1e-13, "m={m}");
        }
    }

    #[test]
    fn fit_examples() {
        let b = basis(32);
        let (c, res) = b
            .fit_function(|x| Complex::new(hermite_functions(2, x[0])[2], 0.0))
            .unwrap();
        for (j, z) in c.iter().enumerate() {
            let expect = if j == 2 { 1.0 } else { 0.0 };
            assert!((z - expect).norm() < 1e-10, "j={j} {z}");
        }
        assert!(res < 1e-10);

        let (c, res) = b.fit_function(|_| Complex::zero()).unwrap();
        assert!(c.iter().all(|z| z.norm() == 0.0));
        assert_eq!(res, 0.0);

        let pim4 = std::f64::consts::PI.powf(-0.25);
        let (c, _) = b
            .fit_function(|x| Complex::new(x[0] * (-x[0] * x[0] / 2.0).exp() * pim4, 0.0))
            .unwrap();
        assert!((c[1].re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-10);
        assert!(c.iter().enumerate().all(|(j, z)| j == 1 || z.norm() < 1e-10));

        assert!(matches!(
            b.fit_function(|_| Complex::new(f64::NAN, 0.0)),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn fit_round_trip_every_degree() {
        let b = basis(32);
        for j in 0..=32 {
            let (c, _) = b
                .fit_function(|x| Complex::new(hermite_functions(32, x[0])[j], 0.0))
                .unwrap();
            for (i, z) in c.iter().enumerate() {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((z - expect).norm() < 1e-10, "j={j} i={i}");
            }
        }
    }

    #[test]
    fn graded_lex_enumeration() {
        let b = Basis::<f64>::new(BasisConfig::new(2, 2)).unwrap();
        let got: Vec<Vec<usize>> = b.multi_indices().to_vec();
        let expect = vec![
            vec![0, 0],
            vec![0, 1],
            vec![1, 0],
            vec![0, 2],
            vec![1, 1],
            vec![2, 0],
            vec![1, 2],
            vec![2, 1],
            vec![2, 2],
        ];
        assert_eq!(got, expect);
        for (pos, alpha) in expect.iter().enumerate() {
            assert_eq!(b.position(alpha), Some(pos));
        }
        assert_eq!(b.position(&[3, 0]), None);
    }

    #[test]
    fn lifted_derivative_acts_on_one_axis() {
        let b = Basis::<f64>::new(BasisConfig::new(2, 6)).unwrap();
        let d1 = b.derivative_matrix_axis(1).unwrap();
        // φ = h_1(x) h_0(y): ∂_y φ = −√½ h_1(x) h_1(y)
        let mut c = vec![Complex::zero(); b.size()];
        c[b.position(&[1, 0]).unwrap()] = Complex::new(1.0, 0.0);
        let out = d1.mul_vec(&c).unwrap();
        let at = b.position(&[1, 1]).unwrap();
        assert_relative_eq!(out[at].re, -std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
        assert_eq!(out.iter().filter(|z| z.norm() > 0.0).count(), 1);
        assert!(b.derivative_matrix_axis(2).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(BasisConfig::new(1, 0).validate().is_err());
        assert!(BasisConfig::new(0, 4).validate().is_err());
        assert!(BasisConfig::new(1, 40).with_quad_order(80).validate().is_err());
        assert!(BasisConfig::default().validate().is_ok());
        assert_eq!(BasisConfig::new(1, 32).tail_cutoff(), 26);
    }

    #[test]
    fn single_precision_basis() {
        let b = Basis::<f32>::new(BasisConfig::new(1, 8).with_quad_order(20)).unwrap();
        let (c, _) = b
            .fit_function(|x| Complex::new(hermite_functions(8, x[0])[4], 0.0))
            .unwrap();
        assert!((c[4].re - 1.0).abs() < 1e-4);
    }
}
