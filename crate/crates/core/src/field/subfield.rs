use std::collections::HashSet;

use super::{FieldElement, FieldError, GaloisField};

/// The subfield of order `p^d` inside an ambient GF(p^m), identified as the
/// fixed points of `x -> x^(p^d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldView {
    ambient: GaloisField,
    degree: usize,
    order: u64,
}

impl SubfieldView {
    pub fn new(ambient: GaloisField, d: usize) -> Result<Self, FieldError> {
        let m = ambient.degree();
        if d == 0 || !m.is_multiple_of(d) {
            return Err(FieldError::NotADivisor { d, m });
        }
        let order = ambient.characteristic().pow(d as u32);
        Ok(Self { ambient, degree: d, order })
    }

    pub fn ambient(&self) -> &GaloisField {
        &self.ambient
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        x.field() == &self.ambient && x.pow(self.order) == *x
    }

    /// Membership in the multiplicative group of the subfield.
    pub fn contains_nonzero(&self, x: &FieldElement) -> bool {
        !x.is_zero() && self.contains(x)
    }

    /// `g^((q-1)/(p^d-1))` for the ambient primitive element `g`.
    pub fn primitive_element(&self) -> FieldElement {
        let q = self.ambient.order();
        self.ambient.primitive_element().pow((q - 1) / (self.order - 1))
    }

    /// Subfield elements sorted by index.
    pub fn elements(&self) -> Vec<FieldElement> {
        let s = self.primitive_element();
        let mut out = Vec::with_capacity(self.order as usize);
        out.push(self.ambient.zero());
        let mut x = self.ambient.one();
        for _ in 0..self.order - 1 {
            out.push(x.clone());
            x = &x * &s;
        }
        out.sort_by_key(|e| e.index());
        out
    }

    /// The unique subgroup of order `n` of the subfield's multiplicative group,
    /// listed as consecutive powers of its generator starting at 1.
    pub fn subgroup_of_order(&self, n: u64) -> Result<MultiplicativeSubgroup, FieldError> {
        let group_order = self.order - 1;
        if n == 0 || !group_order.is_multiple_of(n) {
            return Err(FieldError::OrderDoesNotDivide { n, group_order });
        }
        let generator = self.primitive_element().pow(group_order / n);
        let mut elements = Vec::with_capacity(n as usize);
        let mut x = self.ambient.one();
        for _ in 0..n {
            elements.push(x.clone());
            x = &x * &generator;
        }
        Ok(MultiplicativeSubgroup { elements })
    }
}

/// A finite subgroup of a field's multiplicative group, in a fixed order whose
/// first entry is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativeSubgroup {
    elements: Vec<FieldElement>,
}

impl MultiplicativeSubgroup {
    /// Validates an explicit listing. The list must start with 1, have no
    /// repeats and be closed under multiplication.
    pub fn from_elements(elements: Vec<FieldElement>) -> Result<Self, FieldError> {
        let first = elements.first().ok_or_else(|| FieldError::NotASubgroup("empty".into()))?;
        if !first.is_one() {
            return Err(FieldError::NotASubgroup("first element must be 1".into()));
        }
        let field = first.field().clone();
        if elements.iter().any(|e| e.field() != &field) {
            return Err(FieldError::FieldMismatch);
        }
        let set: HashSet<u64> = elements.iter().map(|e| e.index()).collect();
        if set.len() != elements.len() {
            return Err(FieldError::NotASubgroup("repeated element".into()));
        }
        for a in &elements {
            if a.is_zero() {
                return Err(FieldError::NotASubgroup("contains zero".into()));
            }
            for b in &elements {
                if !set.contains(&(a * b).index()) {
                    return Err(FieldError::NotASubgroup(format!("{a}*{b} escapes the set")));
                }
            }
        }
        Ok(Self { elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    /// Everything except the leading 1.
    pub fn non_identity(&self) -> &[FieldElement] {
        &self.elements[1..]
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        self.elements.contains(x)
    }

    pub fn sorted_indices(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.elements.iter().map(|e| e.index()).collect();
        v.sort_unstable();
        v
    }
}
