//! Numerical checks of the calculus identities and the report that collects
//! them.
//!
//! Tolerance tiers: identities that evaluate the same floating-point
//! expression on both sides are held to `0`; identities that reassociate
//! matrix products are held to `1e-12` relative to `max(1, |operand|)`;
//! identities that cross quadrature or a linear solve are held to `1e-8`.

use std::sync::Arc;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distribution::{pair, TemperedDistribution, TestFunction};
use crate::error::{Error, Result};
use crate::family::{family_product, superpose, SFamily};
use crate::hermite::{Basis, BasisConfig};
use crate::matrix::CMatrix;
use crate::operator::{generated_family, operator_from_dirac_image, SLinearOperator};
use crate::scalar::{cplx, Real};

pub const EXACT: f64 = 0.0;
pub const REASSOCIATION: f64 = 1e-12;
pub const POINTWISE: f64 = 1e-10;
pub const QUADRATURE: f64 = 1e-8;
/// Largest condition number accepted for a family used as a basis.
pub const MAX_BASIS_CONDITION: f64 = 1e8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    /// The identity under test.
    #[serde(rename = "paper_anchor")]
    pub anchor: String,
    pub max_abs_error: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub trials: usize,
    pub seed: u64,
}

impl CheckResult {
    fn new(name: &str, anchor: &str, error: f64, tolerance: f64, trials: usize, seed: u64) -> Self {
        // NaN never passes, and is reported as the largest finite error
        let error = if error.is_nan() { f64::MAX } else { error.min(f64::MAX) };
        Self {
            name: name.into(),
            anchor: anchor.into(),
            max_abs_error: error,
            tolerance,
            passed: error <= tolerance,
            trials,
            seed,
        }
    }

    fn errored(name: &str, anchor: &str, tolerance: f64, seed: u64) -> Self {
        Self::new(name, anchor, f64::MAX, tolerance, 0, seed)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub config: BasisConfig,
    pub results: Vec<CheckResult>,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(config: BasisConfig, results: Vec<CheckResult>) -> Self {
        let overall = results.iter().all(|r| r.passed);
        Self {
            config,
            results,
            overall,
        }
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// One row per check: `name,anchor,error,tol,passed`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,anchor,error,tol,passed\n");
        for r in &self.results {
            out.push_str(&format!(
                "{},{},{:.16e},{:.16e},{}\n",
                r.name,
                csv_field(&r.anchor),
                r.max_abs_error,
                r.tolerance,
                r.passed
            ));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub mod names {
    pub const S_LINEARITY: &str = "s_linearity";
    pub const ADDITIVITY: &str = "additivity";
    pub const DIRAC_EXPANSION: &str = "dirac_expansion";
    pub const DERIVATIVE_FORMULA: &str = "derivative_formula";
    pub const TRANSPOSE_LEMMA: &str = "transpose_lemma";
    pub const CHARACTERIZATION: &str = "characterization_roundtrip";
    pub const COMPOSITION: &str = "superposition_composition";
    pub const COMPOSITION_POINTWISE: &str = "superposition_composition_pointwise";
    pub const HULL_DUALITY: &str = "hull_duality";
}

pub mod anchors {
    pub const S_LINEARITY: &str = "L(∫ a v) = ∫ a L(v)";
    pub const ADDITIVITY: &str = "L(a u + b w) = a L(u) + b L(w)";
    pub const DIRAC_EXPANSION: &str = "u = ∫ u δ";
    pub const DERIVATIVE_FORMULA: &str = "u′ = ∫ u δ′";
    pub const TRANSPOSE_LEMMA: &str = "tB(v) = ∫ v B^∨";
    pub const CHARACTERIZATION: &str =
        "L = t(L(δ)^∧); weak, strong continuity and transposability represented by transpose form";
    pub const COMPOSITION: &str = "(∫ v w)^∧ = v̂ ∘ ŵ";
    pub const HULL_DUALITY: &str = "⟨u, T(h)⟩ = ⟨L(u), h⟩, T(h) = v⁻(L(v)(h))";
}

/// `max_i |a_i − b_i| / max(1, max_i |a_i|, max_i |b_i|)`.
pub fn relative_error<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> f64 {
    let scale = a.iter().chain(b).fold(1.0f64, |m, z| m.max(z.norm().as_f64()));
    absolute_error(a, b) / scale
}

/// `max_i |a_i − b_i|`, with a length mismatch counted as infinite.
pub fn absolute_error<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).fold(0.0f64, |m, (x, y)| {
        let d = (x - y).norm().as_f64();
        if d.is_nan() {
            f64::INFINITY
        } else {
            m.max(d)
        }
    })
}

fn matrix_error<T: Real>(a: &CMatrix<T>, b: &CMatrix<T>) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    absolute_error(a.as_slice(), b.as_slice())
}

/// Checks `L(∫ a v) = ∫ a L(v)` for each `(L, v, a)`.
pub fn check_s_linearity<T: Real>(
    cases: &[(SLinearOperator<T>, SFamily<T>, TemperedDistribution<T>)],
    tol: f64,
    seed: u64,
) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for (l, v, a) in cases {
        let lhs = l.apply(&superpose(a, v)?)?;
        let rhs = superpose(a, &l.image_family(v)?)?;
        worst = worst.max(relative_error(lhs.duals(), rhs.duals()));
    }
    Ok(CheckResult::new(
        names::S_LINEARITY,
        anchors::S_LINEARITY,
        worst,
        tol,
        cases.len(),
        seed,
    ))
}

/// Checks `L(a u + b w) = a L(u) + b L(w)`.
#[allow(clippy::type_complexity)]
pub fn check_additivity<T: Real>(
    l: &SLinearOperator<T>,
    cases: &[(Complex<T>, Complex<T>, TemperedDistribution<T>, TemperedDistribution<T>)],
    tol: f64,
    seed: u64,
) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for (a, b, u, w) in cases {
        let lhs = l.apply(&u.scale(*a).add(&w.scale(*b))?)?;
        let rhs = l.apply(u)?.scale(*a).add(&l.apply(w)?.scale(*b))?;
        worst = worst.max(relative_error(lhs.duals(), rhs.duals()));
    }
    Ok(CheckResult::new(
        names::ADDITIVITY,
        anchors::ADDITIVITY,
        worst,
        tol,
        cases.len(),
        seed,
    ))
}

/// Checks `∫ u δ = u` exactly.
pub fn check_dirac_expansion<T: Real>(us: &[TemperedDistribution<T>], seed: u64) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for u in us {
        let expanded = superpose(u, &SFamily::dirac(u.basis().clone()))?;
        worst = worst.max(absolute_error(expanded.duals(), u.duals()));
    }
    Ok(CheckResult::new(
        names::DIRAC_EXPANSION,
        anchors::DIRAC_EXPANSION,
        worst,
        EXACT,
        us.len(),
        seed,
    ))
}

/// Dual coefficients of `∂_axis u` by superposition against `δ′` and by the
/// derivative operator.
pub fn derivative_paths<T: Real>(
    u: &TemperedDistribution<T>,
    axis: usize,
) -> Result<(TemperedDistribution<T>, TemperedDistribution<T>)> {
    let basis = u.basis().clone();
    let mut multi = vec![0; basis.dim()];
    if axis >= multi.len() {
        return Err(Error::DimensionMismatch(format!("axis {axis} out of range")));
    }
    multi[axis] = 1;
    let via_family = superpose(u, &SFamily::dirac_derivative(basis.clone(), &multi)?)?;
    let via_operator = SLinearOperator::derivative(basis, axis)?.apply(u)?;
    Ok((via_family, via_operator))
}

/// Checks `u′ = ∫ u δ′` along `axis`, restricted to dual indices whose
/// degrees are all `≤ N − 2`.
pub fn check_derivative_formula<T: Real>(
    us: &[TemperedDistribution<T>],
    axis: usize,
    tol: f64,
    seed: u64,
) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for u in us {
        let (a, b) = derivative_paths(u, axis)?;
        let basis = u.basis();
        let limit = basis.order().saturating_sub(2);
        let keep: Vec<usize> = (0..basis.size()).filter(|&i| basis.max_degree(i) <= limit).collect();
        let pick = |d: &[Complex<T>]| keep.iter().map(|&i| d[i]).collect::<Vec<_>>();
        worst = worst.max(relative_error(&pick(a.duals()), &pick(b.duals())));
    }
    Ok(CheckResult::new(
        names::DERIVATIVE_FORMULA,
        anchors::DERIVATIVE_FORMULA,
        worst,
        tol,
        us.len(),
        seed,
    ))
}

/// Matrix of `B`, its target basis, and the family `v`.
pub type TransposeCase<T> = (CMatrix<T>, Arc<Basis<T>>, SFamily<T>);

/// Checks `tB(v) = ∫ v B^∨` exactly. `B : S_n → S_m` is given by its
/// `size_m × size_n` matrix and `v` is valued in `S′_m`.
pub fn check_transpose_lemma<T: Real>(cases: &[TransposeCase<T>], seed: u64) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for (b, target, v) in cases {
        let m_basis = v.value_basis().clone();
        let t_b = SLinearOperator::transpose_of(m_basis.clone(), target.clone(), b.clone())?;
        let lhs = t_b.image_family(v)?;
        let rhs = family_product(v, &generated_family(m_basis, target.clone(), b.clone())?)?;
        worst = worst.max(matrix_error(lhs.matrix(), rhs.matrix()));
    }
    Ok(CheckResult::new(
        names::TRANSPOSE_LEMMA,
        anchors::TRANSPOSE_LEMMA,
        worst,
        EXACT,
        cases.len(),
        seed,
    ))
}

/// Checks `L = t(L(δ)^∧)` exactly: the matrix recovered through the Dirac
/// family must equal both the operator's own `B` and the matrix it was
/// constructed from.
pub fn check_characterization_roundtrip<T: Real>(
    cases: &[(SLinearOperator<T>, CMatrix<T>)],
    seed: u64,
) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for (l, constructed_from) in cases {
        let rebuilt = SLinearOperator::transpose_of(
            l.src_basis().clone(),
            l.dst_basis().clone(),
            operator_from_dirac_image(l),
        )?;
        worst = worst
            .max(matrix_error(rebuilt.b_matrix(), l.b_matrix()))
            .max(matrix_error(rebuilt.b_matrix(), constructed_from));
    }
    Ok(CheckResult::new(
        names::CHARACTERIZATION,
        anchors::CHARACTERIZATION,
        worst,
        EXACT,
        cases.len(),
        seed,
    ))
}

/// Checks `(∫ v w)^∧ = v̂ ∘ ŵ` as a matrix identity (exact) and pointwise,
/// `(v.w)_p = ∫ v_p w`, at `points` (within `POINTWISE`).
pub fn check_superposition_composition<T: Real>(
    cases: &[(SFamily<T>, SFamily<T>)],
    points: &[Vec<T>],
    seed: u64,
) -> Result<[CheckResult; 2]> {
    let (mut exact, mut pointwise) = (0.0f64, 0.0f64);
    for (v, w) in cases {
        let product = family_product(v, w)?;
        exact = exact.max(matrix_error(product.matrix(), &v.matrix().matmul(w.matrix())?));
        for p in points {
            let lhs = product.member(p)?;
            let rhs = superpose(&v.member(p)?, w)?;
            pointwise = pointwise.max(relative_error(lhs.duals(), rhs.duals()));
        }
    }
    Ok([
        CheckResult::new(
            names::COMPOSITION,
            anchors::COMPOSITION,
            exact,
            EXACT,
            cases.len(),
            seed,
        ),
        CheckResult::new(
            names::COMPOSITION_POINTWISE,
            anchors::COMPOSITION,
            pointwise,
            POINTWISE,
            cases.len() * points.len(),
            seed,
        ),
    ])
}

/// 1-norm condition number, infinite for singular matrices.
pub fn condition_number<T: Real>(m: &CMatrix<T>) -> f64 {
    match m.inverse() {
        Some(inv) => (m.norm_one() * inv.norm_one()).as_f64(),
        None => f64::INFINITY,
    }
}

/// The weak transpose `T(h) = v⁻(L(v)(h))` of `L` restricted to the hull of
/// the basis `v`, as a coefficient matrix `S_m → S_n`.
pub fn hull_transpose<T: Real>(l: &SLinearOperator<T>, v: &SFamily<T>) -> Result<CMatrix<T>> {
    let condition = condition_number(v.matrix());
    if condition.is_nan() || condition > MAX_BASIS_CONDITION {
        return Err(Error::IllConditionedBasis {
            condition: condition.min(f64::MAX),
            bound: MAX_BASIS_CONDITION,
        });
    }
    let inv = v.matrix().inverse().ok_or(Error::IllConditionedBasis {
        condition: f64::MAX,
        bound: MAX_BASIS_CONDITION,
    })?;
    inv.matmul(l.image_family(v)?.matrix())
}

/// Checks `⟨v_q, T(h)⟩ = ⟨L(v_q), h⟩` at the given index points.
pub fn check_hull_duality<T: Real>(
    l: &SLinearOperator<T>,
    v: &SFamily<T>,
    hs: &[TestFunction<T>],
    points: &[Vec<T>],
    seed: u64,
) -> Result<CheckResult> {
    let t = hull_transpose(l, v)?;
    let mut worst = 0.0f64;
    for h in hs {
        let th = TestFunction::new(v.value_basis().clone(), t.mul_vec(h.coeffs())?)?;
        for q in points {
            let member = v.member(q)?;
            let lhs = pair(&member, &th)?;
            let rhs = pair(&l.apply(&member)?, h)?;
            worst = worst.max(relative_error(&[lhs], &[rhs]));
        }
    }
    Ok(CheckResult::new(
        names::HULL_DUALITY,
        anchors::HULL_DUALITY,
        worst,
        QUADRATURE,
        hs.len() * points.len(),
        seed,
    ))
}

/// Seeded generator of random instances with standard complex Gaussian
/// entries (`E|z|² = 1`).
pub struct InstanceGen {
    rng: ChaCha8Rng,
}

impl InstanceGen {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn scalar<T: Real>(&mut self) -> Complex<T> {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let re: f64 = self.rng.sample(StandardNormal);
        let im: f64 = self.rng.sample(StandardNormal);
        Complex::new(T::of(re * s), T::of(im * s))
    }

    pub fn vector<T: Real>(&mut self, n: usize) -> Vec<Complex<T>> {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn matrix<T: Real>(&mut self, rows: usize, cols: usize) -> CMatrix<T> {
        CMatrix::from_fn(rows, cols, |_, _| self.scalar())
    }

    pub fn distribution<T: Real>(&mut self, basis: &Arc<Basis<T>>) -> TemperedDistribution<T> {
        TemperedDistribution::new(basis.clone(), self.vector(basis.size())).expect("sized to basis")
    }

    pub fn test_function<T: Real>(&mut self, basis: &Arc<Basis<T>>) -> TestFunction<T> {
        TestFunction::new(basis.clone(), self.vector(basis.size())).expect("sized to basis")
    }

    pub fn operator<T: Real>(&mut self, src: &Arc<Basis<T>>, dst: &Arc<Basis<T>>) -> SLinearOperator<T> {
        SLinearOperator::transpose_of(src.clone(), dst.clone(), self.matrix(src.size(), dst.size()))
            .expect("sized to bases")
    }

    pub fn family<T: Real>(&mut self, index: &Arc<Basis<T>>, value: &Arc<Basis<T>>) -> SFamily<T> {
        SFamily::new(index.clone(), value.clone(), self.matrix(index.size(), value.size())).expect("sized to bases")
    }

    /// `I + ε G` with `ε = 0.2/√size`, a well-conditioned random basis.
    pub fn perturbed_identity<T: Real>(&mut self, basis: &Arc<Basis<T>>) -> SFamily<T> {
        let n = basis.size();
        let eps = cplx(T::of(0.2 / (n as f64).sqrt()));
        let m = CMatrix::identity(n)
            .add(&self.matrix::<T>(n, n).scale(eps))
            .expect("square");
        SFamily::new(basis.clone(), basis.clone(), m).expect("sized to basis")
    }
}

/// `count` tensor quadrature nodes of `basis`, evenly strided.
pub fn sample_points<T: Real>(basis: &Basis<T>, count: usize) -> Vec<Vec<T>> {
    let nodes = basis.tensor_nodes();
    let total = nodes.len();
    (0..count.min(total))
        .map(|i| nodes[((2 * i + 1) * total) / (2 * count.min(total))].clone())
        .collect()
}

pub const S_LINEARITY_TRIALS: usize = 50;
pub const RANDOM_TRIALS: usize = 20;
pub const POINTWISE_SAMPLES: usize = 10;

type CheckFn<'a> = Box<dyn Fn(u64) -> Result<Vec<CheckResult>> + Send + Sync + 'a>;

/// Runs every check on canonical and seeded random instances. Check `i` draws
/// its instances from `seed + i`, so results do not depend on scheduling.
/// Errors inside a check are reported as a failed result, not propagated.
pub fn run_suite<T: Real>(config: BasisConfig, seed: u64) -> Result<VerificationReport> {
    let basis = Arc::new(Basis::<T>::new(config)?);
    let b = &basis;
    let size = basis.size();

    let checks: Vec<(&str, &str, f64, CheckFn)> = vec![
        (
            names::S_LINEARITY,
            anchors::S_LINEARITY,
            REASSOCIATION,
            Box::new(move |s| {
                let mut g = InstanceGen::new(s);
                let mut cases = vec![(SLinearOperator::identity(b.clone()), g.family(b, b), g.distribution(b))];
                cases.push((g.operator(b, b), g.family(b, b), TemperedDistribution::zero(b.clone())));
                for _ in 0..S_LINEARITY_TRIALS {
                    cases.push((g.operator(b, b), g.family(b, b), g.distribution(b)));
                }
                Ok(vec![check_s_linearity(&cases, REASSOCIATION, s)?])
            }),
        ),
        (
            names::ADDITIVITY,
            anchors::ADDITIVITY,
            REASSOCIATION,
            Box::new(move |s| {
                let mut g = InstanceGen::new(s);
                let operators = [
                    g.operator(b, b),
                    SLinearOperator::fourier(b.clone()),
                    SLinearOperator::derivative(b.clone(), 0)?,
                ];
                let mut worst: Option<CheckResult> = None;
                let mut trials = 0;
                for l in &operators {
                    let mut cases = vec![(cplx(T::one()), Complex::default(), g.distribution(b), g.distribution(b))];
                    for _ in 0..RANDOM_TRIALS {
                        cases.push((g.scalar(), g.scalar(), g.distribution(b), g.distribution(b)));
                    }
                    let r = check_additivity(l, &cases, REASSOCIATION, s)?;
                    trials += r.trials;
                    if worst.as_ref().is_none_or(|w| r.max_abs_error > w.max_abs_error) {
                        worst = Some(r);
                    }
                }
                let mut r = worst.expect("three operators");
                r.trials = trials;
                Ok(vec![r])
            }),
        ),
        (
            names::DIRAC_EXPANSION,
            anchors::DIRAC_EXPANSION,
            EXACT,
            Box::new(move |s| {
                let mut g = InstanceGen::new(s);
                let origin = vec![T::zero(); b.dim()];
                let mut us = vec![
                    TemperedDistribution::dirac_at(b.clone(), &origin)?,
                    TemperedDistribution::embed(&TestFunction::basis_function(b.clone(), 3.min(size - 1))?),
                ];
                us.extend((0..RANDOM_TRIALS).map(|_| g.distribution(b)));
                Ok(vec![check_dirac_expansion(&us, s)?])
            }),
        ),
        (
            names::DERIVATIVE_FORMULA,
            anchors::DERIVATIVE_FORMULA,
            REASSOCIATION,
            Box::new(move |s| {
                let mut g = InstanceGen::new(s);
                let origin = vec![T::zero(); b.dim()];
                let mut us = vec![
                    TemperedDistribution::embed(&TestFunction::basis_function(b.clone(), 0)?),
                    TemperedDistribution::embed(&TestFunction::basis_function(b.clone(), 3.min(size - 1))?),
                    TemperedDistribution::dirac_at(b.clone(), &origin)?,
                    TemperedDistribution::zero(b.clone()),
                ];
                us.extend((0..RANDOM_TRIALS).map(|_| g.distribution(b)));
                let mut out = check_derivative_formula(&us, 0, REASSOCIATION, s)?;
                for axis in 1..b.dim() {
                    let r = check_derivative_formula(&us, axis, REASSOCIATION, s)?;
                    if r.max_abs_error > out.max_abs_error {
                        out = r;
                    }
                }
                out.trials = us.len() * b.dim();
                Ok(vec![out])
            }),
        ),
        (
            names::TRANSPOSE_LEMMA,
            anchors::TRANSPOSE_LEMMA,
            EXACT,
            Box::new(move |s| {
                let mut g = InstanceGen::new(s);
                let minus_d = b.derivative_matrix_axis(0)?.scale(cplx(-T::one()));
                let mut cases = vec![
                    (CMatrix::identity(size), b.clone(), g.family(b, b)),
                    (minus_d, b.clone(), SFamily::dirac(b.clone())),
                ];
                for _ in 0..RANDOM_TRIALS {
                    cases.push((g.matrix(size, size), b.clone(), g.family(b, b)));
                }
                Ok(vec![check_transpose_lemma(&cases, s)?])
            }),
        ),
        (
            names::CHARACTERIZATION,
            anchors::CHARACTERIZATION,
            EXACT,
            Box::new(move |s| {
                let mut g = InstanceGen::new(s);
                let mut cases: Vec<(SLinearOperator<T>, CMatrix<T>)> = Vec::new();
                let canonical = [
                    SLinearOperator::identity(b.clone()),
                    SLinearOperator::derivative(b.clone(), 0)?,
                    SLinearOperator::fourier(b.clone()),
                ];
                for l in canonical {
                    let m = l.b_matrix().clone();
                    cases.push((l, m));
                }
                for _ in 0..RANDOM_TRIALS {
                    let m = g.matrix(size, size);
                    cases.push((SLinearOperator::transpose_of(b.clone(), b.clone(), m.clone())?, m));
                }
                Ok(vec![check_characterization_roundtrip(&cases, s)?])
            }),
        ),
        (
            names::COMPOSITION,
            anchors::COMPOSITION,
            EXACT,
            Box::new(move |s| {
                let mut g = InstanceGen::new(s);
                let zero = SFamily::new(b.clone(), b.clone(), CMatrix::zeros(size, size))?;
                let mut cases = vec![(g.family(b, b), SFamily::dirac(b.clone())), (zero, g.family(b, b))];
                for _ in 0..RANDOM_TRIALS {
                    cases.push((g.family(b, b), g.family(b, b)));
                }
                let points = sample_points(b, POINTWISE_SAMPLES);
                Ok(check_superposition_composition(&cases, &points, s)?.to_vec())
            }),
        ),
        (
            names::HULL_DUALITY,
            anchors::HULL_DUALITY,
            QUADRATURE,
            Box::new(move |s| {
                let mut g = InstanceGen::new(s);
                let points = sample_points(b, POINTWISE_SAMPLES);
                let hs: Vec<TestFunction<T>> = (0..3).map(|_| g.test_function(b)).collect();
                let instances = [
                    (g.operator(b, b), SFamily::dirac(b.clone())),
                    (SLinearOperator::identity(b.clone()), g.perturbed_identity(b)),
                    (SLinearOperator::derivative(b.clone(), 0)?, g.perturbed_identity(b)),
                ];
                let mut out: Option<CheckResult> = None;
                let mut trials = 0;
                for (l, v) in &instances {
                    let r = check_hull_duality(l, v, &hs, &points, s)?;
                    trials += r.trials;
                    if out.as_ref().is_none_or(|o| r.max_abs_error > o.max_abs_error) {
                        out = Some(r);
                    }
                }
                let mut r = out.expect("three instances");
                r.trials = trials;
                Ok(vec![r])
            }),
        ),
    ];

    let results: Vec<Vec<CheckResult>> = checks
        .par_iter()
        .enumerate()
        .map(|(i, (name, anchor, tol, check))| {
            let s = seed.wrapping_add(i as u64);
            check(s).unwrap_or_else(|_| vec![CheckResult::errored(name, anchor, *tol, s)])
        })
        .collect();
    Ok(VerificationReport::new(config, results.into_iter().flatten().collect()))
}
