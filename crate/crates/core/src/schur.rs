//! Schur (componentwise) products, Schur-square dimension and the
//! distinguishers built on it.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldElement, FieldError};
use crate::linalg::Matrix;
use crate::mds::MdsVerdict;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchurError {
    #[error("vectors of length {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("isometry acts on {iso} coordinates, matrix has {cols} columns")]
    SizeMismatch { iso: usize, cols: usize },
    #[error("invalid isometry: {0}")]
    InvalidIsometry(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Componentwise product.
pub fn schur_vec(x: &[FieldElement], y: &[FieldElement]) -> Result<Vec<FieldElement>, SchurError> {
    if x.len() != y.len() {
        return Err(SchurError::LengthMismatch(x.len(), y.len()));
    }
    x.iter().zip(y).map(|(a, b)| a.try_mul(b).map_err(SchurError::from)).collect()
}

/// The `k(k+1)/2` rows `g_i * g_j`, `i <= j`, in row-major pair order.
pub fn schur_square_matrix(g: &Matrix) -> Matrix {
    let field = g.field();
    let (k, n) = (g.rows(), g.cols());
    let mut data = Vec::with_capacity(k * (k + 1) / 2 * n);
    for i in 0..k {
        for j in i..k {
            let (a, b) = (g.row_indices(i), g.row_indices(j));
            data.extend(a.iter().zip(b).map(|(&x, &y)| field.mul_raw(x, y)));
        }
    }
    Matrix::from_indices(field, k * (k + 1) / 2, n, data).expect("entries come from the field")
}

/// Dimension of the span of all pairwise products of codewords.
pub fn schur_square_dim(g: &Matrix) -> usize {
    schur_square_matrix(g).rank()
}

/// Three-valued answer of a distinguisher whose hypotheses may fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Determination {
    Yes,
    No,
    Undetermined,
}

impl Determination {
    fn from_bool(b: bool) -> Self {
        if b {
            Determination::Yes
        } else {
            Determination::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Determination::Yes
    }
}

impl fmt::Display for Determination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Determination::Yes => "true",
            Determination::No => "false",
            Determination::Undetermined => "undetermined",
        })
    }
}

/// Whether the code is inequivalent to every GRS and extended GRS code.
/// Decided only for MDS codes with `2k <= N`.
pub fn is_non_rs(g: &Matrix, mds: &MdsVerdict) -> Determination {
    non_rs_from_dim(schur_square_dim(g), g.rows(), g.cols(), mds.is_mds)
}

/// Whether the code is inequivalent to every CTRS and extended CTRS code:
/// those have Schur-square dimension `2k`, GRS codes `2k - 1`, so any
/// dimension above `2k` separates. Decided only for MDS codes with
/// `2k + 1 <= N`.
pub fn ctrs_distinguisher(g: &Matrix, mds: &MdsVerdict) -> Determination {
    ctrs_from_dim(schur_square_dim(g), g.rows(), g.cols(), mds.is_mds)
}

fn non_rs_from_dim(dim: usize, k: usize, n: usize, mds: bool) -> Determination {
    if !mds || 2 * k > n {
        return Determination::Undetermined;
    }
    Determination::from_bool(dim + 1 != 2 * k)
}

fn ctrs_from_dim(dim: usize, k: usize, n: usize, mds: bool) -> Determination {
    if !mds || 2 * k + 1 > n {
        return Determination::Undetermined;
    }
    Determination::from_bool(dim > 2 * k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurReport {
    pub dim: usize,
    pub non_rs: Determination,
    pub ctrs_incompatible: Determination,
}

impl SchurReport {
    pub fn new(g: &Matrix, mds: &MdsVerdict) -> Self {
        let dim = schur_square_dim(g);
        let (k, n) = (g.rows(), g.cols());
        Self {
            dim,
            non_rs: non_rs_from_dim(dim, k, n, mds.is_mds),
            ctrs_incompatible: ctrs_from_dim(dim, k, n, mds.is_mds),
        }
    }
}

impl fmt::Display for SchurReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "schur_dim={} non_rs={} ctrs_incompatible={}",
            self.dim, self.non_rs, self.ctrs_incompatible
        )
    }
}

/// `x -> (v_1 x_{perm[0]}, ..., v_N x_{perm[N-1]})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isometry {
    perm: Vec<usize>,
    scale: Vec<FieldElement>,
}

impl Isometry {
    pub fn new(perm: Vec<usize>, scale: Vec<FieldElement>) -> Result<Self, SchurError> {
        let n = perm.len();
        if scale.len() != n {
            return Err(SchurError::InvalidIsometry(format!("{} scales for {n} coordinates", scale.len())));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(SchurError::InvalidIsometry("not a permutation".into()));
            }
        }
        if scale.iter().any(|s| s.is_zero()) {
            return Err(SchurError::InvalidIsometry("zero scale".into()));
        }
        Ok(Self { perm, scale })
    }

    pub fn identity(field: &crate::field::GaloisField, n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            scale: vec![field.one(); n],
        }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn scale(&self) -> &[FieldElement] {
        &self.scale
    }

    pub fn apply(&self, x: &[FieldElement]) -> Result<Vec<FieldElement>, SchurError> {
        if x.len() != self.perm.len() {
            return Err(SchurError::SizeMismatch {
                iso: self.perm.len(),
                cols: x.len(),
            });
        }
        self.perm
            .iter()
            .zip(&self.scale)
            .map(|(&p, s)| s.try_mul(&x[p]).map_err(SchurError::from))
            .collect()
    }
}

/// Maps every row of `g` through the isometry.
pub fn apply_isometry(g: &Matrix, iso: &Isometry) -> Result<Matrix, SchurError> {
    if iso.perm.len() != g.cols() {
        return Err(SchurError::SizeMismatch {
            iso: iso.perm.len(),
            cols: g.cols(),
        });
    }
    let rows = (0..g.rows()).map(|i| iso.apply(&g.row(i))).collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(g.field(), &rows).map_err(|e| SchurError::InvalidIsometry(e.to_string()))
}
