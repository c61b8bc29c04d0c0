//! Parameter builders for RCTRS codes that come with MDS and non-RS
//! guarantees: the subfield-chain family (hook 0) and the subgroup families
//! (any hook, evaluation points `(b - mu c) / (1 - mu)` over a multiplicative
//! subgroup).

use thiserror::Error;

use crate::code::{CodeError, CodeSpec};
use crate::field::{is_prime, FieldElement, FieldError, GaloisField, MultiplicativeSubgroup, SubfieldView};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("membership violated: {0}")]
    MembershipViolation(String),
    #[error("b and c must differ")]
    DegenerateBC,
    #[error("no guarantee for extended codes with hook {h} outside {{0, k-1}}")]
    UnsupportedExtendedGeneralH { h: usize },
    #[error("{p} is not a prime divisor of {q_minus_1}")]
    NotADivisor { p: u64, q_minus_1: u64 },
    #[error("invalid subfield chain: {0}")]
    InvalidChain(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// `alpha_i = (b - mu_i c) / (1 - mu_i)` for the non-identity subgroup
/// elements, in listing order.
pub fn subgroup_eval_points(g: &MultiplicativeSubgroup, b: &FieldElement, c: &FieldElement) -> Result<Vec<FieldElement>, ConstructError> {
    if b == c {
        return Err(ConstructError::DegenerateBC);
    }
    g.non_identity()
        .iter()
        .map(|mu| {
            let num = b.try_sub(&mu.try_mul(c)?)?;
            let den = mu.field().one() - mu;
            Ok(num.try_div(&den)?)
        })
        .collect()
}

/// Which construction backs each guarantee flag. `None` means the flag is
/// unset and the analyzers decide.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Guarantees {
    pub mds: Option<&'static str>,
    pub non_rs: Option<&'static str>,
    pub ctrs_incompatible: Option<&'static str>,
}

impl Guarantees {
    /// `flag=source` pairs for the flags that are set.
    pub fn provenance(&self) -> Vec<String> {
        [
            ("mds", self.mds),
            ("non_rs", self.non_rs),
            ("ctrs_incompatible", self.ctrs_incompatible),
        ]
        .into_iter()
        .filter_map(|(name, src)| src.map(|s| format!("{name}={s}")))
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructedCode {
    pub spec: CodeSpec,
    pub guarantees: Guarantees,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SubgroupConstructionParams {
    pub ambient: GaloisField,
    /// Degree `d` of the base subfield `F_{q0}`, `q0 = p^d`.
    pub base_subfield_degree: usize,
    pub group_order: u64,
    /// Explicit listing of the subgroup; defaults to consecutive powers of
    /// its generator.
    pub subgroup: Option<MultiplicativeSubgroup>,
    pub b: FieldElement,
    pub c: FieldElement,
    pub lambda: FieldElement,
    pub eta: FieldElement,
    pub h: usize,
    pub k: usize,
    pub extended: bool,
    /// Accept `eta` in the base subfield's multiplicative group. No flags
    /// are set in this mode.
    pub unguaranteed: bool,
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), ConstructError> {
    if cond {
        Ok(())
    } else {
        Err(ConstructError::MembershipViolation(msg()))
    }
}

pub fn build_subgroup_code(params: &SubgroupConstructionParams) -> Result<ConstructedCode, ConstructError> {
    let f = &params.ambient;
    let base = f.subfield_view(params.base_subfield_degree)?;
    let q0 = base.order();
    let group = match &params.subgroup {
        Some(g) => {
            require(g.order() as u64 == params.group_order, || {
                format!("subgroup has {} elements, expected {}", g.order(), params.group_order)
            })?;
            require(g.elements().iter().all(|x| base.contains(x)), || {
                format!("subgroup is not inside F_{q0}")
            })?;
            g.clone()
        }
        None => base.subgroup_of_order(params.group_order)?,
    };
    let (b, c, lambda, eta) = (&params.b, &params.c, &params.lambda, &params.eta);
    for (name, x) in [("b", b), ("c", c), ("lambda", lambda)] {
        require(base.contains(x), || format!("{name} = {x} is not in F_{q0}"))?;
    }
    if b == c {
        return Err(ConstructError::DegenerateBC);
    }
    require(!group.contains(lambda), || format!("lambda = {lambda} lies in the subgroup"))?;
    let eta_in_base = base.contains_nonzero(eta);
    if !params.unguaranteed {
        require(!eta_in_base, || format!("eta = {eta} lies in F_{q0}^*"))?;
    }
    let (h, k) = (params.h, params.k);
    if params.extended && h != 0 && h + 1 != k {
        return Err(ConstructError::UnsupportedExtendedGeneralH { h });
    }

    let alphas = subgroup_eval_points(&group, b, c)?;
    let spec = CodeSpec::rctrs(f, alphas, k, h, 1, b.clone(), c.clone(), lambda.clone(), eta.clone())?.with_extension(params.extended);
    let mut warnings = spec.warnings();
    let mut guarantees = Guarantees::default();
    if params.unguaranteed {
        if eta_in_base {
            warnings.push(format!("eta = {eta} lies in F_{q0}^*; no guarantees apply"));
        }
        return Ok(ConstructedCode {
            spec,
            guarantees,
            warnings,
        });
    }

    let n = params.group_order as usize;
    let size_ok = 3 <= k && 2 * k <= n;
    let bc_nonzero = !b.is_zero() && !c.is_zero();
    let (mds_src, non_rs, ctrs_src) = if h == 0 {
        ("subgroup(h=0)", bc_nonzero && !lambda.is_zero() && size_ok, "subgroup-schur(h=0)")
    } else if h + 1 == k {
        (
            "subgroup(h=k-1)",
            !lambda.is_zero() && !eta.is_zero() && size_ok,
            "subgroup-schur(h=k-1)",
        )
    } else {
        let ok = !lambda.is_zero() && !eta.is_zero() && size_ok && (h != 1 || bc_nonzero);
        ("subgroup(general h)", ok, "subgroup-schur(general h)")
    };
    guarantees.mds = Some(mds_src);
    if non_rs {
        guarantees.non_rs = Some(mds_src);
    }
    let proper = params.base_subfield_degree < f.degree();
    let bc_ok = if h == 0 || (h == 1 && h + 1 != k) { bc_nonzero } else { true };
    let ctrs = proper && !lambda.is_zero() && !eta.is_zero() && !base.contains(eta) && 4 <= k && 2 * k < n && bc_ok;
    if ctrs {
        guarantees.ctrs_incompatible = Some(ctrs_src);
    }
    Ok(ConstructedCode {
        spec,
        guarantees,
        warnings,
    })
}

#[derive(Debug, Clone)]
pub struct SubfieldChainParams {
    pub ambient: GaloisField,
    /// `F_{q0}` has degree `q0_degree` over the prime field.
    pub q0_degree: usize,
    pub q1_degree: usize,
    pub alphas: Vec<FieldElement>,
    pub b: FieldElement,
    pub c: FieldElement,
    pub lambda: FieldElement,
    pub eta: FieldElement,
    pub k: usize,
    pub extended: bool,
}

/// Hook-0 RCTRS code over a chain `F_{q0} < F_{q1} <= F_q`.
pub fn build_subfield_chain_code(params: &SubfieldChainParams) -> Result<ConstructedCode, ConstructError> {
    let f = &params.ambient;
    let (d0, d1) = (params.q0_degree, params.q1_degree);
    if d0 == 0 || d1 % d0 != 0 || d0 == d1 {
        return Err(ConstructError::InvalidChain(format!("degree {d0} must properly divide {d1}")));
    }
    let v0 = f.subfield_view(d0)?;
    let v1: SubfieldView = f.subfield_view(d1)?;
    let q0 = v0.order();
    for (i, a) in params.alphas.iter().enumerate() {
        require(v0.contains(a), || format!("alpha_{} = {a} is not in F_{q0}", i + 1))?;
    }
    for (name, x) in [("b", &params.b), ("c", &params.c)] {
        require(v0.contains(x), || format!("{name} = {x} is not in F_{q0}"))?;
    }
    let (lambda, eta) = (&params.lambda, &params.eta);
    require(v1.contains_nonzero(lambda) && !v0.contains(lambda), || {
        format!("lambda = {lambda} must lie in F_{}^* but not in F_{q0}", v1.order())
    })?;
    require(!v1.contains_nonzero(eta), || format!("eta = {eta} lies in F_{}^*", v1.order()))?;

    let spec = CodeSpec::rctrs(
        f,
        params.alphas.clone(),
        params.k,
        0,
        1,
        params.b.clone(),
        params.c.clone(),
        lambda.clone(),
        eta.clone(),
    )?
    .with_extension(params.extended);
    let mut warnings = spec.warnings();
    let mut guarantees = Guarantees::default();
    let n = spec.n;
    if n as u64 > q0 {
        warnings.push(format!("length {n} exceeds q0 = {q0}; no guarantee applies"));
        return Ok(ConstructedCode {
            spec,
            guarantees,
            warnings,
        });
    }
    guarantees.mds = Some("subfield-chain");
    let (b, c, k) = (&params.b, &params.c, params.k);
    if !b.is_zero() && !c.is_zero() && b != c && 3 <= k && 2 * k <= n {
        guarantees.non_rs = Some("subfield-chain");
    }
    Ok(ConstructedCode {
        spec,
        guarantees,
        warnings,
    })
}

/// Lengths `(q-1)/p` and `(q-1)/p + 1` reachable over `F_{q^2}`.
pub fn corollary_lengths(q: u64, p: u64) -> Result<(u64, u64), ConstructError> {
    if q < 2 || !is_prime(p) || !(q - 1).is_multiple_of(p) {
        return Err(ConstructError::NotADivisor {
            p,
            q_minus_1: q.saturating_sub(1),
        });
    }
    let n = (q - 1) / p;
    Ok((n, n + 1))
}

/// A hook-0 subgroup code of length `(q-1)/p` over `F_{q^2}`, where `base`
/// is `F_q`. Uses the first two nonzero base elements for `b, c`, the first
/// nonzero base element outside the subgroup for `lambda`, and the ambient
/// primitive element for `eta`. The dimension is 3 when the length allows a
/// non-RS guarantee, otherwise at most 2.
pub fn corollary_witness(base: &GaloisField, p: u64, extended: bool) -> Result<ConstructedCode, ConstructError> {
    let q = base.order();
    let (n, _) = corollary_lengths(q, p)?;
    let ambient = GaloisField::new(base.characteristic(), 2 * base.degree())?;
    let view = ambient.subfield_view(base.degree())?;
    let group = view.subgroup_of_order(n)?;
    let nonzero: Vec<FieldElement> = view.elements().into_iter().filter(|x| !x.is_zero()).collect();
    let lambda = nonzero
        .iter()
        .find(|x| !group.contains(x))
        .cloned()
        .ok_or_else(|| ConstructError::MembershipViolation("subgroup covers F_q^*".into()))?;
    let k = if n >= 6 { 3 } else { (n as usize).min(2) };
    build_subgroup_code(&SubgroupConstructionParams {
        eta: ambient.primitive_element(),
        ambient,
        base_subfield_degree: base.degree(),
        group_order: n,
        subgroup: Some(group),
        b: nonzero[0].clone(),
        c: nonzero[1].clone(),
        lambda,
        h: 0,
        k,
        extended,
        unguaranteed: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(v: &[FieldElement]) -> Vec<u64> {
        let mut out: Vec<u64> = v.iter().map(|x| x.index()).collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn evaluation_points_of_listed_examples() {
        let f = GaloisField::new(23, 2).unwrap();
        let g = f.subfield_view(1).unwrap().subgroup_of_order(11).unwrap();
        let pts = subgroup_eval_points(&g, &f.from_int(12), &f.from_int(7)).unwrap();
        assert_eq!(idx(&pts), vec![2, 3, 4, 6, 13, 15, 16, 17, 20, 22]);

        let f = GaloisField::new(17, 1).unwrap();
        let g = f.subfield_view(1).unwrap().subgroup_of_order(8).unwrap();
        let pts = subgroup_eval_points(&g, &f.from_int(1), &f.from_int(2)).unwrap();
        assert_eq!(idx(&pts), vec![0, 3, 7, 8, 10, 12, 13]);

        let f = GaloisField::new(29, 2).unwrap();
        let listing = [1, 20, 4, 5, 22, 6, 23, 24, 7, 25, 9, 28, 13, 16]
            .iter()
            .map(|&x| f.from_int(x))
            .collect();
        let g = MultiplicativeSubgroup::from_elements(listing).unwrap();
        let pts = subgroup_eval_points(&g, &f.from_int(12), &f.from_int(7)).unwrap();
        let got: Vec<u64> = pts.iter().map(|x| x.index()).collect();
        assert_eq!(got, vec![22, 15, 13, 4, 6, 16, 3, 11, 8, 10, 24, 9, 26]);

        assert_eq!(subgroup_eval_points(&g, &f.one(), &f.one()), Err(ConstructError::DegenerateBC));
    }

    fn params_23() -> SubgroupConstructionParams {
        let f = GaloisField::new(23, 2).unwrap();
        SubgroupConstructionParams {
            eta: f.primitive_element(),
            b: f.from_int(12),
            c: f.from_int(7),
            lambda: f.from_int(5),
            ambient: f,
            base_subfield_degree: 1,
            group_order: 11,
            subgroup: None,
            h: 0,
            k: 4,
            extended: false,
            unguaranteed: false,
        }
    }

    #[test]
    fn subgroup_flags_and_gates() {
        let built = build_subgroup_code(&params_23()).unwrap();
        assert_eq!(built.spec.n, 11);
        assert_eq!(built.guarantees.mds, Some("subgroup(h=0)"));
        assert!(built.guarantees.non_rs.is_some());
        // 2k + 1 = 9 <= 11 and k = 4
        assert!(built.guarantees.ctrs_incompatible.is_some());

        let mut p = params_23();
        p.lambda = p.ambient.from_int(2);
        assert!(matches!(build_subgroup_code(&p), Err(ConstructError::MembershipViolation(_))));
        let mut p = params_23();
        p.eta = p.ambient.from_int(3);
        assert!(matches!(build_subgroup_code(&p), Err(ConstructError::MembershipViolation(_))));
        p.unguaranteed = true;
        let loose = build_subgroup_code(&p).unwrap();
        assert_eq!(loose.guarantees, Guarantees::default());
        let mut p = params_23();
        p.h = 1;
        p.extended = true;
        assert_eq!(
            build_subgroup_code(&p).unwrap_err(),
            ConstructError::UnsupportedExtendedGeneralH { h: 1 }
        );
        let mut p = params_23();
        p.k = 2;
        let small = build_subgroup_code(&p).unwrap();
        assert!(small.guarantees.mds.is_some() && small.guarantees.non_rs.is_none());
        let mut p = params_23();
        p.eta = p.ambient.zero();
        assert!(build_subgroup_code(&p).unwrap().guarantees.ctrs_incompatible.is_none());
    }

    #[test]
    fn subfield_chain_gates() {
        let f = GaloisField::new(7, 4).unwrap();
        let v1 = f.subfield_view(2).unwrap();
        let base = |f: &GaloisField| SubfieldChainParams {
            ambient: f.clone(),
            q0_degree: 1,
            q1_degree: 2,
            alphas: (0..6).map(|i| f.from_int(i)).collect(),
            b: f.from_int(6),
            c: f.from_int(5),
            lambda: v1.primitive_element(),
            eta: f.primitive_element(),
            k: 3,
            extended: false,
        };
        let ok = build_subfield_chain_code(&base(&f)).unwrap();
        assert_eq!(ok.guarantees.mds, Some("subfield-chain"));
        assert_eq!(ok.guarantees.non_rs, Some("subfield-chain"));
        let mut p = base(&f);
        p.lambda = f.from_int(3);
        assert!(matches!(build_subfield_chain_code(&p), Err(ConstructError::MembershipViolation(_))));
        let mut p = base(&f);
        p.eta = v1.primitive_element();
        assert!(matches!(build_subfield_chain_code(&p), Err(ConstructError::MembershipViolation(_))));
        let mut p = base(&f);
        p.eta = f.zero();
        assert!(build_subfield_chain_code(&p).is_ok());
        let mut p = base(&f);
        p.q1_degree = 1;
        assert!(matches!(build_subfield_chain_code(&p), Err(ConstructError::InvalidChain(_))));
    }

    #[test]
    fn corollary_arithmetic() {
        assert_eq!(corollary_lengths(23, 2).unwrap(), (11, 12));
        assert_eq!(corollary_lengths(29, 2).unwrap(), (14, 15));
        assert_eq!(corollary_lengths(7, 3).unwrap(), (2, 3));
        assert!(corollary_lengths(7, 5).is_err());
        assert!(corollary_lengths(13, 4).is_err());
    }
}
