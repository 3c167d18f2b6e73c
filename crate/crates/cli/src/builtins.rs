//! Builtin object ids of the form `kind` or `kind@param`.

use std::sync::Arc;

use num_complex::Complex;
use tempered::{Basis64, Distribution64, SFamily64, TestFunction64};

#[derive(Debug)]
pub struct UnknownId(pub String);

impl std::fmt::Display for UnknownId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn split(id: &str) -> (&str, Option<&str>) {
    match id.split_once('@') {
        Some((kind, param)) => (kind, Some(param)),
        None => (id, None),
    }
}

fn parse_list<V: std::str::FromStr>(text: &str, dim: usize, what: &str) -> Result<Vec<V>, UnknownId> {
    let parts: Result<Vec<V>, _> = text.split(',').map(|s| s.trim().parse::<V>()).collect();
    let parts = parts.map_err(|_| UnknownId(format!("cannot parse {what} \"{text}\"")))?;
    if parts.len() != dim {
        return Err(UnknownId(format!(
            "{what} \"{text}\" has {} components, dimension is {dim}",
            parts.len()
        )));
    }
    Ok(parts)
}

pub fn parse_point(text: &str, dim: usize) -> Result<Vec<f64>, UnknownId> {
    let p: Vec<f64> = parse_list(text, dim, "point")?;
    if p.iter().any(|x| !x.is_finite()) {
        return Err(UnknownId(format!("point \"{text}\" is not finite")));
    }
    Ok(p)
}

fn hermite_position(basis: &Basis64, param: Option<&str>, id: &str) -> Result<usize, UnknownId> {
    let param = param.ok_or_else(|| UnknownId(format!("\"{id}\" needs a degree, e.g. hermite@2")))?;
    let alpha: Vec<usize> = parse_list(param, basis.dim(), "multi-index")?;
    basis
        .position(&alpha)
        .ok_or_else(|| UnknownId(format!("degree {param} exceeds order {}", basis.order())))
}

fn gaussian(x: &[f64]) -> Complex<f64> {
    Complex::new((-0.5 * x.iter().map(|v| v * v).sum::<f64>()).exp(), 0.0)
}

/// `dirac@<x>`, `hermite@<j>`, `gaussian`, `constant`.
pub fn distribution(id: &str, basis: &Arc<Basis64>) -> Result<Distribution64, UnknownId> {
    let fail = |e: tempered::Error| UnknownId(format!("{id}: {e}"));
    match split(id) {
        ("dirac", Some(p)) => Distribution64::dirac_at(basis.clone(), &parse_point(p, basis.dim())?).map_err(fail),
        ("hermite", param) => {
            let pos = hermite_position(basis, param, id)?;
            Ok(Distribution64::embed(
                &TestFunction64::basis_function(basis.clone(), pos).map_err(fail)?,
            ))
        }
        ("gaussian", None) => Distribution64::embed_function(basis.clone(), gaussian).map_err(fail),
        ("constant", None) => Distribution64::embed_function(basis.clone(), |_| Complex::new(1.0, 0.0)).map_err(fail),
        _ => Err(UnknownId(format!("unknown distribution \"{id}\""))),
    }
}

/// `hermite@<j>`, `gaussian`, `zero`.
pub fn test_function(id: &str, basis: &Arc<Basis64>) -> Result<TestFunction64, UnknownId> {
    let fail = |e: tempered::Error| UnknownId(format!("{id}: {e}"));
    match split(id) {
        ("hermite", param) => {
            TestFunction64::basis_function(basis.clone(), hermite_position(basis, param, id)?).map_err(fail)
        }
        ("gaussian", None) => Ok(TestFunction64::fit(basis.clone(), gaussian).map_err(fail)?.0),
        ("zero", None) | ("0", None) => Ok(TestFunction64::zero(basis.clone())),
        _ => Err(UnknownId(format!("unknown test function \"{id}\""))),
    }
}

/// `dirac`, `dirac'`, `dirac''`, … (derivatives along the first axis) and
/// `dirac-deriv@<multi-index>`.
pub fn family(id: &str, basis: &Arc<Basis64>) -> Result<SFamily64, UnknownId> {
    let fail = |e: tempered::Error| UnknownId(format!("{id}: {e}"));
    let multi = match split(id) {
        ("dirac-deriv", Some(p)) => parse_list(p, basis.dim(), "multi-index")?,
        (name, None) if name.starts_with("dirac") && name[5..].chars().all(|c| c == '\'') => {
            let mut m = vec![0; basis.dim()];
            m[0] = name.len() - 5;
            m
        }
        _ => return Err(UnknownId(format!("unknown family \"{id}\""))),
    };
    SFamily64::dirac_derivative(basis.clone(), &multi).map_err(fail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempered::BasisConfig;

    fn basis() -> Arc<Basis64> {
        Arc::new(Basis64::new(BasisConfig::new(1, 8)).unwrap())
    }

    #[test]
    fn distribution_ids() {
        let b = basis();
        assert!(distribution("dirac@0", &b).is_ok());
        assert!(distribution("dirac@0.5,1", &b).is_err());
        assert!(distribution("hermite@2", &b).is_ok());
        assert!(distribution("hermite@9", &b).is_err());
        assert!(distribution("gaussian", &b).is_ok());
        assert!(distribution("constant", &b).is_ok());
        assert!(distribution("nosuch", &b).is_err());
        assert!(distribution("dirac", &b).is_err());
    }

    #[test]
    fn family_ids() {
        let b = basis();
        assert_eq!(
            family("dirac", &b).unwrap().matrix(),
            SFamily64::dirac(b.clone()).matrix()
        );
        let d1 = family("dirac'", &b).unwrap();
        assert_eq!(d1.matrix(), family("dirac-deriv@1", &b).unwrap().matrix());
        assert!(family("dirac''", &b).is_ok());
        assert!(family("diracx", &b).is_err());
        assert!(family("delta", &b).is_err());
    }

    #[test]
    fn test_function_ids() {
        let b = basis();
        assert!(test_function("hermite@1", &b).is_ok());
        assert!(test_function("zero", &b)
            .unwrap()
            .coeffs()
            .iter()
            .all(|z| z.norm() == 0.0));
        assert!(test_function("constant", &b).is_err());
    }
}
