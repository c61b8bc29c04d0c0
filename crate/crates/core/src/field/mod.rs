//! Exact arithmetic in GF(p^m).
//!
//! A field is a cheap-to-clone handle ([`GaloisField`]) around an irreducible
//! modulus over GF(p). Elements are stored as their integer index
//! `sum(coeffs[i] * p^i)`, which is also their serialized form. Subfields are
//! never materialized separately: a subfield of order `p^d` is the set of
//! Frobenius fixed points `x^(p^d) = x` inside the ambient field (see
//! [`SubfieldView`]).

mod numtheory;
mod subfield;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

pub use numtheory::{is_prime, prime_divisors};
pub use subfield::{MultiplicativeSubgroup, SubfieldView};

/// Fields up to this order get log/exp tables.
const TABLE_LIMIT: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("coefficient {value} is not reduced modulo {p}")]
    CoefficientOutOfRange { value: u64, p: u64 },
    #[error("modulus is reducible over GF({0})")]
    Reducible(u64),
    #[error("field order {p}^{m} does not fit in 64 bits")]
    TooLarge { p: u64, m: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{d} does not divide the extension degree {m}")]
    NotADivisor { d: usize, m: usize },
    #[error("subgroup order {n} does not divide {group_order}")]
    OrderDoesNotDivide { n: u64, group_order: u64 },
    #[error("index {index} is out of range for a field of order {q}")]
    IndexOutOfRange { index: u64, q: u64 },
    #[error("invalid field descriptor {0:?}")]
    BadDescriptor(String),
    #[error("invalid element literal {0:?}")]
    BadElement(String),
    #[error("not a multiplicative subgroup: {0}")]
    NotASubgroup(String),
}

struct LogTables {
    exp: Vec<u64>,
    log: Vec<u64>,
}

struct Inner {
    p: u64,
    m: usize,
    q: u64,
    /// Low to high, length m + 1, leading coefficient 1.
    modulus: Vec<u64>,
    /// p^0 .. p^(m-1)
    place: Vec<u64>,
    primitive: u64,
    tables: Option<LogTables>,
}

/// Handle to GF(p^m) with a fixed irreducible modulus.
#[derive(Clone)]
pub struct GaloisField(Arc<Inner>);

impl GaloisField {
    /// GF(p^m) with the lexicographically first monic irreducible modulus
    /// (constant term varying fastest).
    pub fn new(p: u64, m: usize) -> Result<Self, FieldError> {
        check_params(p, m)?;
        let count = p.checked_pow(m as u32).ok_or(FieldError::TooLarge { p, m })?;
        let mut modulus = vec![0u64; m + 1];
        modulus[m] = 1;
        for idx in 0..count {
            let mut t = idx;
            for c in modulus.iter_mut().take(m) {
                *c = t % p;
                t /= p;
            }
            if numtheory::is_irreducible(&modulus, p) {
                return Ok(Self::build(p, m, modulus));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// GF(p^m) with a caller-supplied modulus, coefficients low to high.
    pub fn with_modulus(p: u64, m: usize, modulus: &[u64]) -> Result<Self, FieldError> {
        check_params(p, m)?;
        if modulus.len() != m + 1 {
            return Err(FieldError::DegreeMismatch {
                expected: m,
                got: modulus.len().saturating_sub(1),
            });
        }
        if let Some(&value) = modulus.iter().find(|&&c| c >= p) {
            return Err(FieldError::CoefficientOutOfRange { value, p });
        }
        if modulus[m] != 1 {
            return Err(FieldError::NotMonic);
        }
        if !numtheory::is_irreducible(modulus, p) {
            return Err(FieldError::Reducible(p));
        }
        Ok(Self::build(p, m, modulus.to_vec()))
    }

    fn build(p: u64, m: usize, modulus: Vec<u64>) -> Self {
        let mut place = Vec::with_capacity(m);
        let mut acc = 1u64;
        for i in 0..m {
            place.push(acc);
            if i + 1 < m {
                acc *= p;
            }
        }
        let q = place[m - 1].checked_mul(p).expect("order checked by caller");
        let mut inner = Inner {
            p,
            m,
            q,
            modulus,
            place,
            primitive: 1,
            tables: None,
        };
        inner.primitive = inner.find_primitive();
        if q <= TABLE_LIMIT {
            inner.tables = Some(inner.build_tables());
        }
        GaloisField(Arc::new(inner))
    }

    /// Parses `p^m/c_m,...,c_0`, or `p^m` / `p` for the default modulus.
    pub fn parse(descriptor: &str) -> Result<Self, FieldError> {
        let bad = || FieldError::BadDescriptor(descriptor.to_string());
        let (head, modulus) = match descriptor.trim().split_once('/') {
            Some((h, m)) => (h, Some(m)),
            None => (descriptor.trim(), None),
        };
        let (p, m) = match head.split_once('^') {
            Some((p, m)) => (
                p.trim().parse::<u64>().map_err(|_| bad())?,
                m.trim().parse::<usize>().map_err(|_| bad())?,
            ),
            None => (head.trim().parse::<u64>().map_err(|_| bad())?, 1),
        };
        match modulus {
            None => Self::new(p, m),
            Some(list) => {
                let mut coeffs = list
                    .split(',')
                    .map(|c| c.trim().parse::<u64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                coeffs.reverse();
                Self::with_modulus(p, m, &coeffs)
            }
        }
    }

    /// `p^m/c_m,...,c_0`
    pub fn descriptor(&self) -> String {
        let coeffs: Vec<String> = self.0.modulus.iter().rev().map(|c| c.to_string()).collect();
        format!("{}^{}/{}", self.0.p, self.0.m, coeffs.join(","))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.m
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Modulus coefficients, low to high.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(0)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(1)
    }

    pub fn element(&self, index: u64) -> Result<FieldElement, FieldError> {
        if index >= self.0.q {
            return Err(FieldError::IndexOutOfRange { index, q: self.0.q });
        }
        Ok(self.wrap(index))
    }

    /// Element from `m` (or fewer) coefficients, low to high.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.0.m {
            return Err(FieldError::DegreeMismatch {
                expected: self.0.m - 1,
                got: coeffs.len() - 1,
            });
        }
        let mut index = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            if c >= self.0.p {
                return Err(FieldError::CoefficientOutOfRange { value: c, p: self.0.p });
            }
            index += c * self.0.place[i];
        }
        Ok(self.wrap(index))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, value: i64) -> FieldElement {
        self.wrap(value.rem_euclid(self.0.p as i64) as u64)
    }

    /// Deterministically-first element of multiplicative order q - 1.
    pub fn primitive_element(&self) -> FieldElement {
        self.wrap(self.0.primitive)
    }

    /// All q elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |i| self.wrap(i))
    }

    /// Subfield of order p^d, `d | m`.
    pub fn subfield_view(&self, d: usize) -> Result<SubfieldView, FieldError> {
        SubfieldView::new(self.clone(), d)
    }

    /// Parses an element literal: an integer index, `prim` (primitive element of
    /// the field) or `prim@d` (primitive element of the order-p^d subfield).
    pub fn parse_element(&self, literal: &str) -> Result<FieldElement, FieldError> {
        let s = literal.trim();
        if s == "prim" {
            return Ok(self.primitive_element());
        }
        if let Some(d) = s.strip_prefix("prim@") {
            let d: usize = d.parse().map_err(|_| FieldError::BadElement(s.to_string()))?;
            return Ok(self.subfield_view(d)?.primitive_element());
        }
        let index: u64 = s.parse().map_err(|_| FieldError::BadElement(s.to_string()))?;
        self.element(index)
    }

    pub(crate) fn wrap(&self, value: u64) -> FieldElement {
        debug_assert!(value < self.0.q);
        FieldElement {
            field: self.clone(),
            value,
        }
    }

    pub(crate) fn same(&self, other: &GaloisField) -> bool {
        self == other
    }

    // Index-level arithmetic. Callers guarantee operands are in range.

    pub(crate) fn add_raw(&self, a: u64, b: u64) -> u64 {
        self.0.add(a, b)
    }

    pub(crate) fn sub_raw(&self, a: u64, b: u64) -> u64 {
        self.0.add(a, self.0.neg(b))
    }

    pub(crate) fn neg_raw(&self, a: u64) -> u64 {
        self.0.neg(a)
    }

    pub(crate) fn mul_raw(&self, a: u64, b: u64) -> u64 {
        self.0.mul(a, b)
    }

    pub(crate) fn inv_raw(&self, a: u64) -> Option<u64> {
        self.0.inv(a)
    }

    pub(crate) fn pow_raw(&self, a: u64, e: u64) -> u64 {
        self.0.pow(a, e)
    }
}

fn check_params(p: u64, m: usize) -> Result<(), FieldError> {
    if !numtheory::is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if m == 0 {
        return Err(FieldError::ZeroDegree);
    }
    if p.checked_pow(m as u32).is_none() {
        return Err(FieldError::TooLarge { p, m });
    }
    Ok(())
}

impl Inner {
    fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    fn undigits(&self, d: &[u64]) -> u64 {
        d.iter().zip(&self.place).map(|(c, pl)| c * pl).sum()
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        if self.m == 1 {
            return ((a as u128 + b as u128) % p as u128) as u64;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for pl in &self.place {
            let s = ((a % p) as u128 + (b % p) as u128) % p as u128;
            out += s as u64 * pl;
            a /= p;
            b /= p;
        }
        out
    }

    fn neg(&self, a: u64) -> u64 {
        let p = self.p;
        let mut a = a;
        let mut out = 0;
        for pl in &self.place {
            let d = a % p;
            out += ((p - d) % p) * pl;
            a /= p;
        }
        out
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let s = t.log[a as usize] + t.log[b as usize];
                let n = self.q - 1;
                t.exp[(if s >= n { s - n } else { s }) as usize]
            }
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let p = self.p as u128;
        if self.m == 1 {
            return ((a as u128 * b as u128) % p) as u64;
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u128; 2 * self.m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % p;
            }
        }
        let prod: Vec<u64> = prod.into_iter().map(|c| c as u64).collect();
        let r = numtheory::poly_rem(&prod, &self.modulus, self.p);
        let mut d = vec![0u64; self.m];
        d[..r.len().min(self.m)].copy_from_slice(&r[..r.len().min(self.m)]);
        self.undigits(&d)
    }

    fn pow_slow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn pow(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let n = (self.q - 1) as u128;
                let s = (t.log[a as usize] as u128 * (e as u128 % n)) % n;
                t.exp[s as usize]
            }
            None => self.pow_slow(a, e),
        }
    }

    fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        Some(match &self.tables {
            Some(t) => {
                let n = self.q - 1;
                t.exp[((n - t.log[a as usize]) % n) as usize]
            }
            None => self.pow_slow(a, self.q - 2),
        })
    }

    fn find_primitive(&self) -> u64 {
        let n = self.q - 1;
        let factors = numtheory::prime_divisors(n);
        (1..self.q)
            .find(|&g| factors.iter().all(|&r| self.pow_slow(g, n / r) != 1))
            .expect("multiplicative group is cyclic")
    }

    fn build_tables(&self) -> LogTables {
        let n = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![0u64; self.q as usize];
        let mut x = 1u64;
        for i in 0..n {
            exp.push(x);
            log[x as usize] = i as u64;
            x = self.mul_slow(x, self.primitive);
        }
        LogTables { exp, log }
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for GaloisField {}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.descriptor())
    }
}

impl fmt::Display for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

impl FromStr for GaloisField {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// An element of a [`GaloisField`].
///
/// Binary operators panic when the operands come from different fields and
/// `/` panics on a zero divisor; the `try_*` methods report these as errors.
#[derive(Clone)]
pub struct FieldElement {
    field: GaloisField,
    value: u64,
}

impl FieldElement {
    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    /// Serialized form, `sum(coeffs[i] * p^i)`.
    pub fn index(&self) -> u64 {
        self.value
    }

    /// Coefficients in GF(p)[x]/(modulus), low to high.
    pub fn coeffs(&self) -> Vec<u64> {
        self.field.0.digits(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn check(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.add_raw(self.value, other.value)))
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.sub_raw(self.value, other.value)))
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.mul_raw(self.value, other.value)))
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.check(other)?;
        let inv = other.inv()?;
        Ok(self.field.wrap(self.field.mul_raw(self.value, inv.value)))
    }

    pub fn inv(&self) -> Result<FieldElement, FieldError> {
        self.field
            .inv_raw(self.value)
            .map(|v| self.field.wrap(v))
            .ok_or(FieldError::DivisionByZero)
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.field.wrap(self.field.pow_raw(self.value, e))
    }

    /// x -> x^p
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.field.characteristic())
    }

    /// Smallest `e > 0` with `self^e = 1`; `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut order = self.field.order() - 1;
        for r in prime_divisors(order) {
            while order.is_multiple_of(r) && self.pow(order / r).is_one() {
                order /= r;
            }
        }
        Some(order)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.0.p.hash(state);
        self.value.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$try(rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.field.wrap(self.field.neg_raw(self.value))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
