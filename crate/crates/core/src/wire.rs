//! JSON wire formats.
//!
//! ```text
//! {"kind":"test_function"|"distribution","dim":n,"order":N,"coeffs":[[re,im],...]}
//! {"kind":"s_family","index_dim":k,"value_dim":n,"order":N,"matrix":[[[re,im],...],...]}
//! {"kind":"s_linear_operator","src_dim":n,"dst_dim":m,"order":N,"b_matrix":[[[re,im],...],...]}
//! ```
//! Matrices are row-major. Decoding needs the bases to attach to; their
//! dimension and order must match the document.

use std::sync::Arc;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::distribution::{TemperedDistribution, TestFunction};
use crate::error::{Error, Result};
use crate::family::SFamily;
use crate::hermite::Basis;
use crate::matrix::CMatrix;
use crate::operator::SLinearOperator;
use crate::scalar::Real;

pub const KIND_TEST_FUNCTION: &str = "test_function";
pub const KIND_DISTRIBUTION: &str = "distribution";
pub const KIND_FAMILY: &str = "s_family";
pub const KIND_OPERATOR: &str = "s_linear_operator";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffsWire {
    pub kind: String,
    pub dim: usize,
    pub order: usize,
    pub coeffs: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyWire {
    pub kind: String,
    pub index_dim: usize,
    pub value_dim: usize,
    pub order: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OperatorWire {
    pub kind: String,
    pub src_dim: usize,
    pub dst_dim: usize,
    pub order: usize,
    pub b_matrix: Vec<Vec<[f64; 2]>>,
}

fn encode<T: Real>(z: &Complex<T>) -> [f64; 2] {
    [z.re.as_f64(), z.im.as_f64()]
}

fn decode<T: Real>(z: &[f64; 2]) -> Complex<T> {
    Complex::new(T::of(z[0]), T::of(z[1]))
}

fn encode_matrix<T: Real>(m: &CMatrix<T>) -> Vec<Vec<[f64; 2]>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(encode).collect()).collect()
}

fn decode_matrix<T: Real>(rows: &[Vec<[f64; 2]>], expect: (usize, usize)) -> Result<CMatrix<T>> {
    if rows.len() != expect.0 || rows.iter().any(|r| r.len() != expect.1) {
        return Err(Error::Format(format!("matrix must be {}x{}", expect.0, expect.1)));
    }
    let data = rows.iter().flatten().map(decode).collect();
    CMatrix::from_row_major(expect.0, expect.1, data)
}

fn expect_kind(found: &str, want: &str) -> Result<()> {
    if found == want {
        Ok(())
    } else {
        Err(Error::Format(format!("expected kind \"{want}\", found \"{found}\"")))
    }
}

fn expect_basis<T: Real>(basis: &Basis<T>, dim: usize, order: usize) -> Result<()> {
    if basis.dim() != dim || basis.order() != order {
        return Err(Error::BasisMismatch(format!(
            "document has dim {dim}, order {order}; basis has dim {}, order {}",
            basis.dim(),
            basis.order()
        )));
    }
    Ok(())
}

impl<T: Real> TestFunction<T> {
    pub fn to_wire(&self) -> CoeffsWire {
        CoeffsWire {
            kind: KIND_TEST_FUNCTION.into(),
            dim: self.basis().dim(),
            order: self.basis().order(),
            coeffs: self.coeffs().iter().map(encode).collect(),
        }
    }

    pub fn from_wire(wire: &CoeffsWire, basis: Arc<Basis<T>>) -> Result<Self> {
        expect_kind(&wire.kind, KIND_TEST_FUNCTION)?;
        expect_basis(&basis, wire.dim, wire.order)?;
        Self::new(basis, wire.coeffs.iter().map(decode).collect())
    }
}

impl<T: Real> TemperedDistribution<T> {
    pub fn to_wire(&self) -> CoeffsWire {
        CoeffsWire {
            kind: KIND_DISTRIBUTION.into(),
            dim: self.basis().dim(),
            order: self.basis().order(),
            coeffs: self.duals().iter().map(encode).collect(),
        }
    }

    pub fn from_wire(wire: &CoeffsWire, basis: Arc<Basis<T>>) -> Result<Self> {
        expect_kind(&wire.kind, KIND_DISTRIBUTION)?;
        expect_basis(&basis, wire.dim, wire.order)?;
        Self::new(basis, wire.coeffs.iter().map(decode).collect())
    }
}

impl<T: Real> SFamily<T> {
    pub fn to_wire(&self) -> FamilyWire {
        FamilyWire {
            kind: KIND_FAMILY.into(),
            index_dim: self.index_dim(),
            value_dim: self.value_dim(),
            order: self.value_basis().order(),
            matrix: encode_matrix(self.matrix()),
        }
    }

    pub fn from_wire(wire: &FamilyWire, index: Arc<Basis<T>>, value: Arc<Basis<T>>) -> Result<Self> {
        expect_kind(&wire.kind, KIND_FAMILY)?;
        expect_basis(&index, wire.index_dim, wire.order)?;
        expect_basis(&value, wire.value_dim, wire.order)?;
        let m = decode_matrix(&wire.matrix, (index.size(), value.size()))?;
        Self::new(index, value, m)
    }
}

impl<T: Real> SLinearOperator<T> {
    pub fn to_wire(&self) -> OperatorWire {
        OperatorWire {
            kind: KIND_OPERATOR.into(),
            src_dim: self.src_dim(),
            dst_dim: self.dst_dim(),
            order: self.src_basis().order(),
            b_matrix: encode_matrix(self.b_matrix()),
        }
    }

    pub fn from_wire(wire: &OperatorWire, src: Arc<Basis<T>>, dst: Arc<Basis<T>>) -> Result<Self> {
        expect_kind(&wire.kind, KIND_OPERATOR)?;
        expect_basis(&src, wire.src_dim, wire.order)?;
        expect_basis(&dst, wire.dst_dim, wire.order)?;
        let b = decode_matrix(&wire.b_matrix, (src.size(), dst.size()))?;
        Self::transpose_of(src, dst, b)
    }
}
