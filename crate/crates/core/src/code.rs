//! Evaluation codes built on (twisted) polynomial spaces: GRS, TRS, CTRS and
//! RCTRS, each with an optional extension column carrying `f_{k-1}`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::field::{FieldElement, FieldError, GaloisField};
use crate::linalg::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("invalid code spec: {0}")]
    InvalidSpec(String),
    #[error("hook {h} must be below the dimension {k}")]
    HookOutOfRange { h: usize, k: usize },
    #[error("expected {expected} symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Generalized Reed-Solomon.
    Grs,
    /// Row-twisted Reed-Solomon.
    Trs,
    /// Column-twisted Reed-Solomon.
    Ctrs,
    /// Row and column twisted Reed-Solomon.
    Rctrs,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Grs => "GRS",
            Family::Trs => "TRS",
            Family::Ctrs => "CTRS",
            Family::Rctrs => "RCTRS",
        }
    }

    /// Has the `f(b) - lambda f(c)` column.
    pub fn has_twist_column(self) -> bool {
        matches!(self, Family::Ctrs | Family::Rctrs)
    }

    /// Evaluates over the twisted space `V_{k,t,h,eta}`.
    pub fn has_row_twist(self) -> bool {
        matches!(self, Family::Trs | Family::Rctrs)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, CodeError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "GRS" | "RS" => Ok(Family::Grs),
            "TRS" => Ok(Family::Trs),
            "CTRS" => Ok(Family::Ctrs),
            "RCTRS" => Ok(Family::Rctrs),
            _ => Err(CodeError::InvalidSpec(format!("unknown family {s:?}"))),
        }
    }
}

/// Full description of a code. Parameters a family does not use are held at
/// their neutral values (`h = 0`, `t = 1`, zero field elements).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    pub family: Family,
    pub field: GaloisField,
    /// Length before extension. For CTRS/RCTRS this counts the twist column.
    pub n: usize,
    pub k: usize,
    pub alphas: Vec<FieldElement>,
    /// Column multipliers, GRS only.
    pub v: Option<Vec<FieldElement>>,
    pub h: usize,
    pub t: usize,
    pub b: FieldElement,
    pub c: FieldElement,
    pub lambda: FieldElement,
    pub eta: FieldElement,
    pub extended: bool,
}

impl CodeSpec {
    pub fn grs(field: &GaloisField, alphas: Vec<FieldElement>, v: Option<Vec<FieldElement>>, k: usize) -> Result<Self, CodeError> {
        let spec = Self {
            family: Family::Grs,
            n: alphas.len(),
            k,
            alphas,
            v,
            ..Self::blank(field)
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn trs(field: &GaloisField, alphas: Vec<FieldElement>, k: usize, t: usize, h: usize, eta: FieldElement) -> Result<Self, CodeError> {
        let spec = Self {
            family: Family::Trs,
            n: alphas.len(),
            k,
            alphas,
            h,
            t,
            eta,
            ..Self::blank(field)
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn ctrs(
        field: &GaloisField,
        alphas: Vec<FieldElement>,
        k: usize,
        b: FieldElement,
        c: FieldElement,
        lambda: FieldElement,
    ) -> Result<Self, CodeError> {
        let spec = Self {
            family: Family::Ctrs,
            n: alphas.len() + 1,
            k,
            alphas,
            b,
            c,
            lambda,
            ..Self::blank(field)
        };
        spec.validate()?;
        Ok(spec)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn rctrs(
        field: &GaloisField,
        alphas: Vec<FieldElement>,
        k: usize,
        h: usize,
        t: usize,
        b: FieldElement,
        c: FieldElement,
        lambda: FieldElement,
        eta: FieldElement,
    ) -> Result<Self, CodeError> {
        let spec = Self {
            family: Family::Rctrs,
            n: alphas.len() + 1,
            k,
            alphas,
            h,
            t,
            b,
            c,
            lambda,
            eta,
            ..Self::blank(field)
        };
        spec.validate()?;
        Ok(spec)
    }

    fn blank(field: &GaloisField) -> Self {
        Self {
            family: Family::Grs,
            field: field.clone(),
            n: 0,
            k: 0,
            alphas: Vec::new(),
            v: None,
            h: 0,
            t: 1,
            b: field.zero(),
            c: field.zero(),
            lambda: field.zero(),
            eta: field.zero(),
            extended: false,
        }
    }

    /// The same code with the `f_{k-1}` column appended.
    pub fn with_extension(mut self, extended: bool) -> Self {
        self.extended = extended;
        self
    }

    /// Number of columns of the generator matrix.
    pub fn length(&self) -> usize {
        self.n + usize::from(self.extended)
    }

    pub fn validate(&self) -> Result<(), CodeError> {
        let invalid = |msg: String| Err(CodeError::InvalidSpec(msg));
        let field = &self.field;
        let q = field.order();
        let mut elements: Vec<(&str, &FieldElement)> = vec![("b", &self.b), ("c", &self.c), ("lambda", &self.lambda), ("eta", &self.eta)];
        elements.extend(self.alphas.iter().map(|a| ("alphas", a)));
        if let Some(v) = &self.v {
            elements.extend(v.iter().map(|x| ("v", x)));
        }
        if let Some((name, _)) = elements.iter().find(|(_, x)| x.field() != field) {
            return invalid(format!("{name} is not an element of {}", field.descriptor()));
        }

        let points = if self.family.has_twist_column() {
            self.n.checked_sub(1)
        } else {
            Some(self.n)
        };
        if points != Some(self.alphas.len()) {
            return invalid(format!(
                "{} of length {} needs {} evaluation points, got {}",
                self.family,
                self.n,
                points.map_or("a positive number of".to_string(), |p| p.to_string()),
                self.alphas.len()
            ));
        }
        let bound = if self.family.has_twist_column() { q.saturating_add(1) } else { q };
        if self.n as u64 > bound {
            return invalid(format!("length {} exceeds {bound} for {}", self.n, self.family));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = self.alphas.iter().find(|a| !seen.insert(a.index())) {
            return invalid(format!("duplicate evaluation point {dup}"));
        }
        if self.k == 0 || self.k > self.n {
            return invalid(format!("dimension {} must lie in 1..={}", self.k, self.n));
        }
        if self.t == 0 {
            return invalid("twist must be at least 1".into());
        }
        if self.h >= self.k {
            return Err(CodeError::HookOutOfRange { h: self.h, k: self.k });
        }
        match (&self.v, self.family) {
            (Some(v), Family::Grs) => {
                if v.len() != self.n {
                    return invalid(format!("{} column multipliers for length {}", v.len(), self.n));
                }
                if v.iter().any(|x| x.is_zero()) {
                    return invalid("column multipliers must be nonzero".into());
                }
            }
            (Some(_), _) => return invalid("column multipliers are only used by GRS".into()),
            (None, _) => {}
        }
        if !self.family.has_row_twist() && (!self.eta.is_zero() || self.h != 0 || self.t != 1) {
            return invalid(format!("{} has no row twist: eta must be 0, h 0 and t 1", self.family));
        }
        if !self.family.has_twist_column() && !(self.b.is_zero() && self.c.is_zero() && self.lambda.is_zero()) {
            return invalid(format!("{} has no twist column: b, c and lambda must be 0", self.family));
        }
        Ok(())
    }

    /// Legal but suspicious parameter choices.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.family.has_twist_column() {
            if self.alphas.contains(&self.b) {
                out.push(format!("b = {} is also an evaluation point", self.b));
            }
            if self.b == self.c {
                out.push("b = c".to_string());
            }
        }
        out
    }

    /// The ordered basis of the polynomial space this code evaluates.
    pub fn basis(&self) -> Vec<Polynomial> {
        twist_space_basis(&self.field, self.k, self.t, self.h, &self.eta).expect("validated spec")
    }
}

/// Dense polynomial over a field, coefficients low to high.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<FieldElement>) -> Self {
        Self { coeffs }
    }

    pub fn monomial(field: &GaloisField, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = field.one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; `None` past the stored length.
    pub fn coeff(&self, i: usize) -> Option<&FieldElement> {
        self.coeffs.get(i)
    }

    /// Index of the highest nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        eval_poly(&self.coeffs, x)
    }
}

/// Horner evaluation; the empty polynomial evaluates to zero.
pub fn eval_poly(coeffs: &[FieldElement], x: &FieldElement) -> FieldElement {
    let field = x.field();
    let mut acc = 0u64;
    for c in coeffs.iter().rev() {
        acc = field.add_raw(field.mul_raw(acc, x.index()), c.index());
    }
    field.wrap(acc)
}

/// `1, x, ..., x^h + eta x^(k-1+t), ..., x^(k-1)`.
pub fn twist_space_basis(field: &GaloisField, k: usize, t: usize, h: usize, eta: &FieldElement) -> Result<Vec<Polynomial>, CodeError> {
    if h >= k {
        return Err(CodeError::HookOutOfRange { h, k });
    }
    if t == 0 {
        return Err(CodeError::InvalidSpec("twist must be at least 1".into()));
    }
    let mut basis: Vec<Polynomial> = (0..k).map(|i| Polynomial::monomial(field, i)).collect();
    if !eta.is_zero() {
        let top = k - 1 + t;
        let mut coeffs = vec![field.zero(); top + 1];
        coeffs[h] = field.one();
        coeffs[top] = eta.clone();
        basis[h] = Polynomial::new(coeffs);
    }
    Ok(basis)
}

/// A `k x N` generator matrix together with the spec it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    pub matrix: Matrix,
    pub spec: CodeSpec,
}

impl GeneratorMatrix {
    pub fn length(&self) -> usize {
        self.matrix.cols()
    }

    pub fn dimension(&self) -> usize {
        self.matrix.rows()
    }

    /// `message * G`.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
        encode(&self.matrix, message)
    }
}

/// `message * G` for any matrix.
pub fn encode(g: &Matrix, message: &[FieldElement]) -> Result<Vec<FieldElement>, CodeError> {
    if message.len() != g.rows() {
        return Err(CodeError::LengthMismatch {
            expected: g.rows(),
            got: message.len(),
        });
    }
    let field = g.field();
    if message.iter().any(|m| m.field() != field) {
        return Err(FieldError::FieldMismatch.into());
    }
    let mut out = vec![0u64; g.cols()];
    for (i, m) in message.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(g.row_indices(i)) {
            *o = field.add_raw(*o, field.mul_raw(m.index(), x));
        }
    }
    Ok(out.into_iter().map(|v| field.wrap(v)).collect())
}

/// Builds the generator matrix whose rows are the encodings of the basis
/// polynomials, in basis order.
pub fn generator_matrix(spec: &CodeSpec) -> Result<GeneratorMatrix, CodeError> {
    spec.validate()?;
    let field = &spec.field;
    let basis = spec.basis();
    let cols = spec.length();
    let mut m = Matrix::zeros(field, spec.k, cols);
    for (i, f) in basis.iter().enumerate() {
        let mut j = 0;
        for (idx, a) in spec.alphas.iter().enumerate() {
            let mut x = f.eval(a);
            if let Some(v) = &spec.v {
                x = x * &v[idx];
            }
            m.set(i, j, &x);
            j += 1;
        }
        if spec.family.has_twist_column() {
            let x = f.eval(&spec.b) - &spec.lambda * f.eval(&spec.c);
            m.set(i, j, &x);
            j += 1;
        }
        if spec.extended {
            let top = f.coeff(spec.k - 1).cloned().unwrap_or_else(|| field.zero());
            m.set(i, j, &top);
        }
    }
    Ok(GeneratorMatrix {
        matrix: m,
        spec: spec.clone(),
    })
}
