//! MDS decisions: exhaustive `k x k` minors, closed-form conditions for
//! `t = 1` RCTRS codes, and minimum distance at small scale.
//!
//! Column layout of an RCTRS generator matrix: `0..n-1` are evaluation
//! columns, `n-1` is the twist column `f(b) - lambda f(c)`, and `n` (extended
//! codes only) is the `f_{k-1}` column. Every checker walks column subsets in
//! colex order, so a failing closed-form condition reports the same witness
//! as the minor enumeration.

use std::fmt;

use thiserror::Error;

use crate::code::{CodeError, CodeSpec, Family, GeneratorMatrix};
use crate::field::{FieldElement, GaloisField};
use crate::linalg::{elementary_symmetric, Matrix};
use crate::subsets::{binomial, Colex};

/// Default limit on the number of codewords enumerated by [`min_distance`].
pub const DEFAULT_BUDGET: u128 = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MdsError {
    #[error("closed form needs h = {expected_h} and t = 1, spec has h = {h}, t = {t}")]
    WrongHookTwist { expected_h: String, h: usize, t: usize },
    #[error("closed forms cover CTRS/RCTRS codes, not {0}")]
    WrongFamily(Family),
    #[error("no closed form for extended codes with hook {h} outside {{0, k-1}}")]
    ExtendedUnsupported { h: usize },
    #[error("closed form ({closed}) disagrees with minors ({minors})")]
    Disagreement { minors: MdsVerdict, closed: MdsVerdict },
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdsMethod {
    Minors,
    ClosedFormH0,
    ClosedFormHk1,
    ClosedFormGeneral,
    Both,
}

impl fmt::Display for MdsMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MdsMethod::Minors => "minors",
            MdsMethod::ClosedFormH0 => "closed_form_h0",
            MdsMethod::ClosedFormHk1 => "closed_form_hk1",
            MdsMethod::ClosedFormGeneral => "closed_form_general",
            MdsMethod::Both => "both",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdsVerdict {
    pub is_mds: bool,
    /// First column subset (colex order) whose minor vanishes.
    pub witness: Option<Vec<usize>>,
    pub method: MdsMethod,
}

impl MdsVerdict {
    fn from_witness(witness: Option<Vec<usize>>, method: MdsMethod) -> Self {
        Self {
            is_mds: witness.is_none(),
            witness,
            method,
        }
    }
}

impl fmt::Display for MdsVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "mds=true method={}", self.method),
            Some(w) => {
                let list: Vec<String> = w.iter().map(|i| i.to_string()).collect();
                write!(f, "mds=false witness=[{}]", list.join(","))
            }
        }
    }
}

/// Any `k` columns independent. A matrix with more rows than columns is
/// never MDS; its witness is empty.
pub fn mds_by_minors(g: &Matrix) -> MdsVerdict {
    let k = g.rows();
    if k > g.cols() {
        return MdsVerdict::from_witness(Some(Vec::new()), MdsMethod::Minors);
    }
    let witness = Colex::new(g.cols(), k).find(|cols| minor_vanishes(g, cols));
    MdsVerdict::from_witness(witness, MdsMethod::Minors)
}

fn minor_vanishes(g: &Matrix, cols: &[usize]) -> bool {
    g.select_columns(cols).rank() < cols.len()
}

/// `(-1)^e`
fn sign(field: &GaloisField, e: usize) -> FieldElement {
    if e.is_multiple_of(2) {
        field.one()
    } else {
        -field.one()
    }
}

fn product(field: &GaloisField, vals: &[FieldElement]) -> FieldElement {
    vals.iter().fold(field.one(), |acc, v| acc * v)
}

fn sum(field: &GaloisField, vals: &[FieldElement]) -> FieldElement {
    vals.iter().fold(field.zero(), |acc, v| acc + v)
}

/// `prod (x - a)` over `alphas`.
pub fn omega_l(x: &FieldElement, alphas: &[FieldElement]) -> FieldElement {
    alphas.iter().fold(x.field().one(), |acc, a| acc * (x - a))
}

/// `prod (x - a) * (1 + (-1)^(k-1) eta x prod a)`, the twist-column factor
/// for hook 0.
pub fn phi_j(x: &FieldElement, alphas: &[FieldElement], eta: &FieldElement, k: usize) -> FieldElement {
    let field = x.field();
    let twist = sign(field, k + 1) * eta * x * product(field, alphas);
    omega_l(x, alphas) * (field.one() + twist)
}

/// `prod (x - a) * (1 + eta x + eta sum a)`, the twist-column factor for
/// hook `k-1`.
pub fn psi_j(x: &FieldElement, alphas: &[FieldElement], eta: &FieldElement) -> FieldElement {
    let field = x.field();
    omega_l(x, alphas) * (field.one() + eta * x + eta * sum(field, alphas))
}

/// `prod (x - a) * (1 + (-1)^(k-1-h) eta e_{k-h}(alphas, x))` with `k - 1`
/// entries in `alphas`.
pub fn phi_jh(x: &FieldElement, alphas: &[FieldElement], eta: &FieldElement, k: usize, h: usize) -> FieldElement {
    let field = x.field();
    let mut vars = alphas.to_vec();
    vars.push(x.clone());
    let e = elementary_symmetric(field, &vars, k - h);
    omega_l(x, alphas) * (field.one() + sign(field, k - 1 - h) * eta * e)
}

/// Hook-0 factor for a subset of `k - 2` evaluation columns taken together
/// with the twist and `f_{k-1}` columns:
/// `prod (x - a) * (1 + (-1)^k eta x prod a (x + sum a))`.
pub fn phi_ext_l(x: &FieldElement, alphas: &[FieldElement], eta: &FieldElement, k: usize) -> FieldElement {
    let field = x.field();
    let twist = sign(field, k) * eta * x * product(field, alphas) * (x + sum(field, alphas));
    omega_l(x, alphas) * (field.one() + twist)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    H0,
    Hk1,
    General,
}

/// Checks that `spec` is a `t = 1` CTRS/RCTRS spec with a supported hook.
fn require(spec: &CodeSpec, shape: Shape) -> Result<(), MdsError> {
    spec.validate()?;
    if !spec.family.has_twist_column() {
        return Err(MdsError::WrongFamily(spec.family));
    }
    let ok_h = match shape {
        Shape::H0 => spec.h == 0,
        Shape::Hk1 => spec.h + 1 == spec.k,
        Shape::General => true,
    };
    if !ok_h || spec.t != 1 {
        let expected_h = match shape {
            Shape::H0 => "0".to_string(),
            Shape::Hk1 => format!("{}", spec.k - 1),
            Shape::General => "any".to_string(),
        };
        return Err(MdsError::WrongHookTwist {
            expected_h,
            h: spec.h,
            t: spec.t,
        });
    }
    if shape == Shape::General && spec.extended {
        return Err(MdsError::ExtendedUnsupported { h: spec.h });
    }
    Ok(())
}

/// True when the minor on the given evaluation columns, plus optionally the
/// twist and `f_{k-1}` columns, is nonzero.
fn minor_nonzero(spec: &CodeSpec, shape: Shape, eval: &[FieldElement], twist: bool, inf: bool) -> bool {
    let field = &spec.field;
    let (k, h) = (spec.k, spec.h);
    let eta = if spec.family.has_row_twist() {
        spec.eta.clone()
    } else {
        field.zero()
    };
    let (b, c, lambda) = (&spec.b, &spec.c, &spec.lambda);
    let differs = |f: &dyn Fn(&FieldElement) -> FieldElement| f(b) != lambda * f(c);
    match (twist, inf) {
        (false, false) => {
            let s = match shape {
                Shape::H0 => sign(field, k) * &eta * product(field, eval),
                Shape::Hk1 => -(&eta * sum(field, eval)),
                Shape::General => sign(field, k - h) * &eta * elementary_symmetric(field, eval, k - h),
            };
            !s.is_one()
        }
        (true, false) => match shape {
            Shape::H0 => differs(&|x| phi_j(x, eval, &eta, k)),
            Shape::Hk1 => differs(&|x| psi_j(x, eval, &eta)),
            Shape::General => differs(&|x| phi_jh(x, eval, &eta, k, h)),
        },
        (false, true) => match shape {
            Shape::H0 => !(sign(field, k + 1) * &eta * product(field, eval) * sum(field, eval)).is_one(),
            Shape::Hk1 => true,
            Shape::General => unreachable!("extended general hook rejected earlier"),
        },
        (true, true) => match shape {
            Shape::H0 => differs(&|x| phi_ext_l(x, eval, &eta, k)),
            Shape::Hk1 => differs(&|x| omega_l(x, eval)),
            Shape::General => unreachable!("extended general hook rejected earlier"),
        },
    }
}

fn closed_form(spec: &CodeSpec, shape: Shape, method: MdsMethod) -> Result<MdsVerdict, MdsError> {
    require(spec, shape)?;
    let points = spec.alphas.len();
    let total = spec.length();
    let witness = Colex::new(total, spec.k).find(|cols| {
        let eval: Vec<FieldElement> = cols.iter().filter(|&&j| j < points).map(|&j| spec.alphas[j].clone()).collect();
        let twist = cols.contains(&points);
        let inf = spec.extended && cols.contains(&(points + 1));
        !minor_nonzero(spec, shape, &eval, twist, inf)
    });
    Ok(MdsVerdict::from_witness(witness, method))
}

/// Closed-form check for hook 0, twist 1 (plain and extended).
pub fn mds_closed_form_h0(spec: &CodeSpec) -> Result<MdsVerdict, MdsError> {
    closed_form(spec, Shape::H0, MdsMethod::ClosedFormH0)
}

/// Closed-form check for hook `k-1`, twist 1 (plain and extended).
pub fn mds_closed_form_hk1(spec: &CodeSpec) -> Result<MdsVerdict, MdsError> {
    closed_form(spec, Shape::Hk1, MdsMethod::ClosedFormHk1)
}

/// Closed-form check for any hook, twist 1, non-extended codes only.
pub fn mds_closed_form_general(spec: &CodeSpec) -> Result<MdsVerdict, MdsError> {
    closed_form(spec, Shape::General, MdsMethod::ClosedFormGeneral)
}

/// Picks the specialized closed form when the hook allows it.
pub fn mds_closed_form(spec: &CodeSpec) -> Result<MdsVerdict, MdsError> {
    if spec.h == 0 {
        mds_closed_form_h0(spec)
    } else if spec.h + 1 == spec.k {
        mds_closed_form_hk1(spec)
    } else {
        mds_closed_form_general(spec)
    }
}

/// True when [`mds_closed_form`] accepts the spec.
pub fn closed_form_available(spec: &CodeSpec) -> bool {
    spec.family.has_twist_column() && spec.t == 1 && (!spec.extended || spec.h == 0 || spec.h + 1 == spec.k)
}

/// Runs minors and the closed form and insists they agree, witness included.
pub fn mds_both(g: &GeneratorMatrix) -> Result<MdsVerdict, MdsError> {
    let minors = mds_by_minors(&g.matrix);
    let closed = mds_closed_form(&g.spec)?;
    if minors.witness != closed.witness {
        return Err(MdsError::Disagreement { minors, closed });
    }
    Ok(MdsVerdict {
        method: MdsMethod::Both,
        ..minors
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceMethod {
    /// Every nonzero codeword was weighed.
    Enumeration,
    /// All minors nonzero, so `d = N - k + 1`.
    Minors,
}

impl fmt::Display for DistanceMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DistanceMethod::Enumeration => "enumeration",
            DistanceMethod::Minors => "minors",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distance {
    Exact {
        d: usize,
        method: DistanceMethod,
    },
    /// Enumeration would exceed the budget and the code is not MDS. The
    /// Singleton bound still holds.
    BudgetExceeded {
        codewords: u128,
        budget: u128,
        singleton_bound: usize,
    },
}

impl Distance {
    pub fn value(&self) -> Option<usize> {
        match self {
            Distance::Exact { d, .. } => Some(*d),
            Distance::BudgetExceeded { .. } => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact { d, method } => write!(f, "d={d} method={method}"),
            Distance::BudgetExceeded {
                codewords,
                budget,
                singleton_bound,
            } => {
                write!(f, "d<={singleton_bound} method=singleton budget_exceeded={codewords}>{budget}")
            }
        }
    }
}

/// `q^k`, saturating.
fn codeword_count(q: u64, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, _| acc.saturating_mul(q as u128))
}

/// Minimum Hamming distance of the row space of `g`, which must have full
/// row rank.
pub fn min_distance(g: &Matrix, budget: u128) -> Distance {
    distance_inner(g, budget, || mds_by_minors(g).is_mds)
}

/// [`min_distance`] reusing an MDS verdict already computed for `g`.
pub fn min_distance_given(g: &Matrix, budget: u128, verdict: &MdsVerdict) -> Distance {
    distance_inner(g, budget, || verdict.is_mds)
}

fn distance_inner(g: &Matrix, budget: u128, is_mds: impl FnOnce() -> bool) -> Distance {
    let (k, n) = (g.rows(), g.cols());
    let q = g.field().order();
    let count = codeword_count(q, k);
    if count <= budget {
        return Distance::Exact {
            d: enumerate_min_weight(g),
            method: DistanceMethod::Enumeration,
        };
    }
    if is_mds() {
        return Distance::Exact {
            d: n + 1 - k,
            method: DistanceMethod::Minors,
        };
    }
    Distance::BudgetExceeded {
        codewords: count,
        budget,
        singleton_bound: (n + 1).saturating_sub(k),
    }
}

/// Walks all messages with an odometer, updating the codeword by one scaled
/// row per step.
fn enumerate_min_weight(g: &Matrix) -> usize {
    let field = g.field();
    let (k, n) = (g.rows(), g.cols());
    let q = field.order();
    let mut digits = vec![0u64; k];
    let mut word = vec![0u64; n];
    let mut best = n;
    loop {
        let mut i = 0;
        while i < k {
            let old = digits[i];
            let new = if old + 1 == q { 0 } else { old + 1 };
            digits[i] = new;
            let delta = field.sub_raw(new, old);
            for (w, &x) in word.iter_mut().zip(g.row_indices(i)) {
                *w = field.add_raw(*w, field.mul_raw(delta, x));
            }
            if new != 0 {
                break;
            }
            i += 1;
        }
        if i == k {
            return best;
        }
        let weight = word.iter().filter(|&&w| w != 0).count();
        best = best.min(weight);
    }
}

/// Number of `k x k` minors the exhaustive check evaluates.
pub fn minor_count(g: &Matrix) -> u128 {
    binomial(g.cols(), g.rows())
}
