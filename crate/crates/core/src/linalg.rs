//! Dense exact linear algebra over a [`GaloisField`], plus closed forms for
//! Vandermonde-type determinants.

use std::fmt::Write as _;

use thiserror::Error;

use crate::field::{FieldElement, FieldError, GaloisField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("row index {h} outside 1..={max}")]
    HookOutOfRange { h: usize, max: usize },
    #[error("matrix text, line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
    field: GaloisField,
}

impl Matrix {
    pub fn zeros(field: &GaloisField, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
            field: field.clone(),
        }
    }

    pub fn identity(field: &GaloisField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: &GaloisField, rows: &[Vec<FieldElement>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for x in row {
                if x.field() != field {
                    return Err(FieldError::FieldMismatch.into());
                }
                data.push(x.index());
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
            field: field.clone(),
        })
    }

    /// Entries given as element indices, row-major.
    pub fn from_indices(field: &GaloisField, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&index) = data.iter().find(|&&x| x >= field.order()) {
            return Err(FieldError::IndexOutOfRange { index, q: field.order() }.into());
        }
        Ok(Self {
            rows,
            cols,
            data,
            field: field.clone(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.field.wrap(self.data[i * self.cols + j])
    }

    pub fn set(&mut self, i: usize, j: usize, x: &FieldElement) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        assert!(x.field() == &self.field, "{}", FieldError::FieldMismatch);
        self.data[i * self.cols + j] = x.index();
    }

    pub fn row(&self, i: usize) -> Vec<FieldElement> {
        self.row_indices(i).iter().map(|&v| self.field.wrap(v)).collect()
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub(crate) fn row_indices(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.data[i * cols.len() + jj] = self.data[i * self.cols + j];
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.field != other.field {
            return Err(FieldError::FieldMismatch.into());
        }
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.data[i * self.cols + l];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = f.mul_raw(a, other.data[l * other.cols + j]);
                    let slot = &mut out.data[i * other.cols + j];
                    *slot = f.add_raw(*slot, prod);
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.field != other.field {
            return Err(FieldError::FieldMismatch.into());
        }
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch(format!("{} vs {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
            field: self.field.clone(),
        })
    }

    /// Forward elimination on a copy, first nonzero pivot in column order.
    /// Returns the echelon form, pivot columns and the parity of row swaps.
    fn echelon(&self) -> (Vec<u64>, Vec<usize>, bool) {
        let f = &self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut pivots = Vec::new();
        let mut odd = false;
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    a.swap(p * cols + j, r * cols + j);
                }
                odd = !odd;
            }
            let inv = f.inv_raw(a[r * cols + c]).expect("pivot is nonzero");
            for i in r + 1..rows {
                let x = a[i * cols + c];
                if x == 0 {
                    continue;
                }
                let factor = f.mul_raw(x, inv);
                for j in c..cols {
                    let sub = f.mul_raw(factor, a[r * cols + j]);
                    a[i * cols + j] = f.sub_raw(a[i * cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots, odd)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn det(&self) -> Result<FieldElement, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let f = &self.field;
        let (a, pivots, odd) = self.echelon();
        if pivots.len() < n {
            return Ok(f.zero());
        }
        let mut d = 1u64;
        for i in 0..n {
            d = f.mul_raw(d, a[i * n + i]);
        }
        Ok(if odd { f.wrap(f.neg_raw(d)) } else { f.wrap(d) })
    }

    /// Reduced row echelon form and its pivot columns. Zero rows are dropped.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = &self.field;
        let cols = self.cols;
        let (mut a, pivots, _) = self.echelon();
        let r = pivots.len();
        for (i, &c) in pivots.iter().enumerate().rev() {
            let inv = f.inv_raw(a[i * cols + c]).expect("pivot is nonzero");
            for j in c..cols {
                a[i * cols + j] = f.mul_raw(a[i * cols + j], inv);
            }
            for k in 0..i {
                let x = a[k * cols + c];
                if x == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = f.mul_raw(x, a[i * cols + j]);
                    a[k * cols + j] = f.sub_raw(a[k * cols + j], sub);
                }
            }
        }
        a.truncate(r * cols);
        (
            Matrix {
                rows: r,
                cols,
                data: a,
                field: f.clone(),
            },
            pivots,
        )
    }

    /// Basis (as rows) of `{x : M x^T = 0}`; has `cols - rank` rows.
    pub fn null_space(&self) -> Matrix {
        let f = &self.field;
        let cols = self.cols;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.data[b * cols + fc] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                basis.data[b * cols + pc] = f.neg_raw(r.data[i * cols + fc]);
            }
        }
        basis
    }

    /// True when both matrices have the same row space.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        if self.field != other.field || self.cols != other.cols {
            return false;
        }
        let r = self.rank();
        r == other.rank() && self.vstack(other).map(|s| s.rank() == r).unwrap_or(false)
    }

    /// `p m rows cols` header, then one line of element indices per row.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} {} {} {}\n",
            self.field.characteristic(),
            self.field.degree(),
            self.rows,
            self.cols
        );
        for i in 0..self.rows {
            let line: Vec<String> = self.row_indices(i).iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    /// Parses [`Matrix::to_text`] output. The header's `p m` must match `field`.
    pub fn from_text(field: &GaloisField, text: &str) -> Result<Matrix, LinalgError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (ln, header) = lines.next().ok_or(LinalgError::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let parse = |line: usize, tok: &str| {
            tok.parse::<u64>().map_err(|_| LinalgError::Parse {
                line,
                message: format!("not an integer: {tok:?}"),
            })
        };
        let head: Vec<u64> = header.split_whitespace().map(|t| parse(ln + 1, t)).collect::<Result<_, _>>()?;
        if head.len() != 4 {
            return Err(LinalgError::Parse {
                line: ln + 1,
                message: "header must be `p m rows cols`".into(),
            });
        }
        if head[0] != field.characteristic() || head[1] as usize != field.degree() {
            return Err(LinalgError::Parse {
                line: ln + 1,
                message: format!("matrix is over {}^{}, expected {}", head[0], head[1], field.descriptor()),
            });
        }
        let (rows, cols) = (head[2] as usize, head[3] as usize);
        let mut data = Vec::with_capacity(rows * cols);
        let mut seen = 0;
        for (ln, line) in lines {
            let row: Vec<u64> = line.split_whitespace().map(|t| parse(ln + 1, t)).collect::<Result<_, _>>()?;
            if row.len() != cols {
                return Err(LinalgError::Parse {
                    line: ln + 1,
                    message: format!("expected {cols} entries, found {}", row.len()),
                });
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= field.order()) {
                return Err(LinalgError::Parse {
                    line: ln + 1,
                    message: format!("index {bad} out of range"),
                });
            }
            data.extend(row);
            seen += 1;
        }
        if seen != rows {
            return Err(LinalgError::Parse {
                line: 0,
                message: format!("expected {rows} rows, found {seen}"),
            });
        }
        Matrix::from_indices(field, rows, cols, data)
    }
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row_indices(i))?;
        }
        Ok(())
    }
}

/// Elementary symmetric polynomial `e_r` of `vals`: 1 for `r = 0`, 0 for
/// `r > vals.len()`.
pub fn elementary_symmetric(field: &GaloisField, vals: &[FieldElement], r: usize) -> FieldElement {
    if r > vals.len() {
        return field.zero();
    }
    // e[j] holds e_j of the prefix processed so far
    let mut e = vec![0u64; r + 1];
    e[0] = 1;
    for (n, x) in vals.iter().enumerate() {
        let top = r.min(n + 1);
        for j in (1..=top).rev() {
            let t = field.mul_raw(x.index(), e[j - 1]);
            e[j] = field.add_raw(e[j], t);
        }
    }
    field.wrap(e[r])
}

/// Square matrix with rows `x^0 .. x^(n-1)` evaluated at `alphas`.
pub fn vandermonde_matrix(field: &GaloisField, alphas: &[FieldElement]) -> Matrix {
    let exps: Vec<u64> = (0..alphas.len() as u64).collect();
    power_rows(field, alphas, &exps)
}

/// The `n x n` matrix with rows `x^0 .. x^n` except `x^h`.
pub fn deleted_row_vandermonde_matrix(field: &GaloisField, alphas: &[FieldElement], h: usize) -> Result<Matrix, LinalgError> {
    let n = alphas.len();
    if h == 0 || h >= n {
        return Err(LinalgError::HookOutOfRange {
            h,
            max: n.saturating_sub(1),
        });
    }
    let exps: Vec<u64> = (0..=n as u64).filter(|&e| e != h as u64).collect();
    Ok(power_rows(field, alphas, &exps))
}

fn power_rows(field: &GaloisField, alphas: &[FieldElement], exps: &[u64]) -> Matrix {
    let mut m = Matrix::zeros(field, exps.len(), alphas.len());
    for (i, &e) in exps.iter().enumerate() {
        for (j, a) in alphas.iter().enumerate() {
            m.data[i * alphas.len() + j] = field.pow_raw(a.index(), e);
        }
    }
    m
}

/// `prod_{i<j} (a_j - a_i)`
pub fn vandermonde_det(field: &GaloisField, alphas: &[FieldElement]) -> FieldElement {
    let mut d = 1u64;
    for j in 0..alphas.len() {
        for i in 0..j {
            d = field.mul_raw(d, field.sub_raw(alphas[j].index(), alphas[i].index()));
        }
    }
    field.wrap(d)
}

/// Determinant of [`deleted_row_vandermonde_matrix`], via
/// `e_{n-h}(alphas) * vandermonde_det(alphas)`.
pub fn deleted_row_vandermonde_det(field: &GaloisField, alphas: &[FieldElement], h: usize) -> Result<FieldElement, LinalgError> {
    let n = alphas.len();
    if h == 0 || h >= n {
        return Err(LinalgError::HookOutOfRange {
            h,
            max: n.saturating_sub(1),
        });
    }
    Ok(elementary_symmetric(field, alphas, n - h) * vandermonde_det(field, alphas))
}
