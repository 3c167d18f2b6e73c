use std::fs;
use std::sync::Arc;

use anyhow::{anyhow, Context, Result};
use num_complex::Complex;
use serde::Serialize;
use tempered::verify::{absolute_error, derivative_paths, run_suite};
use tempered::wire::CoeffsWire;
use tempered::{Basis64, BasisConfig, Distribution64, SLinearOperator64};

use crate::builtins;
use crate::{CliConfig, Format};

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;

impl CliConfig {
    pub fn basis_config(&self) -> BasisConfig {
        BasisConfig {
            dim: self.dim,
            order: self.order,
            quad_order: self
                .quad_order
                .unwrap_or_else(|| BasisConfig::default().quad_order.max(2 * self.order + 2)),
            tol: self.tol,
            ..BasisConfig::default()
        }
    }

    fn basis(&self) -> Result<Arc<Basis64>> {
        Ok(Arc::new(Basis64::new(self.basis_config())?))
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.output_path {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn index_label(alpha: &[usize]) -> String {
    alpha.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(";")
}

fn to_json<S: Serialize>(value: &S) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

pub fn verify(config: &CliConfig) -> Result<u8> {
    let report = run_suite::<f64>(config.basis_config(), config.seed)?;
    let text = match config.format {
        Format::Json => report.to_json()? + "\n",
        Format::Csv => report.to_csv(),
    };
    config.emit(&text)?;
    for r in report.results.iter().filter(|r| !r.passed) {
        eprintln!(
            "FAILED {}: error {:e} > tolerance {:e}",
            r.name, r.max_abs_error, r.tolerance
        );
    }
    Ok(if report.overall { EXIT_OK } else { EXIT_CHECK_FAILED })
}

#[derive(Serialize)]
struct Expansion<'a> {
    name: &'a str,
    indices: &'a [Vec<usize>],
    distribution: CoeffsWire,
}

pub fn expand(config: &CliConfig, name: &str) -> Result<u8> {
    let basis = config.basis()?;
    let u = builtins::distribution(name, &basis).map_err(|e| anyhow!(e.0))?;
    let text = match config.format {
        Format::Json => to_json(&Expansion {
            name,
            indices: basis.multi_indices(),
            distribution: u.to_wire(),
        })?,
        Format::Csv => {
            let mut out = String::from("index,re,im\n");
            for (alpha, d) in basis.multi_indices().iter().zip(u.duals()) {
                out.push_str(&format!("{},{},{}\n", index_label(alpha), num(d.re), num(d.im)));
            }
            out
        }
    };
    config.emit(&text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Derivative<'a> {
    name: &'a str,
    derivative_order: usize,
    axis: usize,
    indices: &'a [Vec<usize>],
    via_family: CoeffsWire,
    via_operator: CoeffsWire,
    max_abs_difference: f64,
}

/// `k`-th derivative along `axis` by both routes.
pub fn derivative_both_ways(u: &Distribution64, k: usize, axis: usize) -> Result<(Distribution64, Distribution64)> {
    let basis = u.basis().clone();
    if axis >= basis.dim() {
        return Err(anyhow!("axis {axis} out of range for dimension {}", basis.dim()));
    }
    if k == 0 {
        return Ok((u.clone(), u.clone()));
    }
    if k == 1 {
        return Ok(derivative_paths(u, axis)?);
    }
    let mut multi = vec![0; basis.dim()];
    multi[axis] = k;
    let family = tempered::SFamily64::dirac_derivative(basis.clone(), &multi)?;
    let via_family = tempered::family::superpose(u, &family)?;
    let d = SLinearOperator64::derivative(basis, axis)?;
    let mut op = d.clone();
    for _ in 1..k {
        op = SLinearOperator64::compose(&d, &op)?;
    }
    Ok((via_family, op.apply(u)?))
}

pub fn deriv(config: &CliConfig, name: &str, k: usize, axis: usize) -> Result<u8> {
    let basis = config.basis()?;
    let u = builtins::distribution(name, &basis).map_err(|e| anyhow!(e.0))?;
    let (via_family, via_operator) = derivative_both_ways(&u, k, axis)?;
    let diff = absolute_error(via_family.duals(), via_operator.duals());
    let text = match config.format {
        Format::Json => to_json(&Derivative {
            name,
            derivative_order: k,
            axis,
            indices: basis.multi_indices(),
            via_family: via_family.to_wire(),
            via_operator: via_operator.to_wire(),
            max_abs_difference: diff,
        })?,
        Format::Csv => {
            let mut out = String::from("index,family_re,family_im,operator_re,operator_im\n");
            for ((alpha, a), b) in basis
                .multi_indices()
                .iter()
                .zip(via_family.duals())
                .zip(via_operator.duals())
            {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    index_label(alpha),
                    num(a.re),
                    num(a.im),
                    num(b.re),
                    num(b.im)
                ));
            }
            out
        }
    };
    config.emit(&text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct FamilyEval<'a> {
    family: &'a str,
    point: &'a [f64],
    test_function: &'a str,
    pairing: [f64; 2],
    pointwise: [f64; 2],
    abs_difference: f64,
}

pub fn family_eval(config: &CliConfig, family: &str, point: &str, phi: &str) -> Result<u8> {
    let basis = config.basis()?;
    let v = builtins::family(family, &basis).map_err(|e| anyhow!(e.0))?;
    let p = builtins::parse_point(point, basis.dim()).map_err(|e| anyhow!(e.0))?;
    let phi_fn = builtins::test_function(phi, &basis).map_err(|e| anyhow!(e.0))?;
    let pairing: Complex<f64> = v.member(&p)?.pair(&phi_fn)?;
    let pointwise = v.apply(&phi_fn)?.eval(&p)?;
    let text = match config.format {
        Format::Json => to_json(&FamilyEval {
            family,
            point: &p,
            test_function: phi,
            pairing: [pairing.re, pairing.im],
            pointwise: [pointwise.re, pointwise.im],
            abs_difference: (pairing - pointwise).norm(),
        })?,
        Format::Csv => format!(
            "family,point,test_function,pairing_re,pairing_im,pointwise_re,pointwise_im\n{},{},{},{},{},{},{}\n",
            family,
            p.iter().map(|x| num(*x)).collect::<Vec<_>>().join(";"),
            phi,
            num(pairing.re),
            num(pairing.im),
            num(pointwise.re),
            num(pointwise.im)
        ),
    };
    config.emit(&text)?;
    Ok(EXIT_OK)
}
