mod common;

use proptest::prelude::*;
use rand::Rng;
use rctrs::code::{generator_matrix, CodeSpec};
use rctrs::construct::{
    build_subfield_chain_code, build_subgroup_code, corollary_lengths, corollary_witness, subgroup_eval_points, ConstructError,
    SubfieldChainParams, SubgroupConstructionParams,
};
use rctrs::field::{FieldElement, GaloisField};
use rctrs::mds::mds_by_minors;
use rctrs::schur::{ctrs_distinguisher, is_non_rs, schur_square_dim, Determination};

use common::{random_element, rng};

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Random valid subgroup parameters over `F_{q0^2}` with base `F_{q0}`.
fn random_params(q0: u64, r: &mut impl Rng) -> SubgroupConstructionParams {
    let f = GaloisField::new(q0, 2).unwrap();
    let base = f.subfield_view(1).unwrap();
    let orders: Vec<u64> = divisors(q0 - 1).into_iter().filter(|&d| d >= 3 && d < q0 - 1).collect();
    let n = orders[r.gen_range(0..orders.len())];
    let group = base.subgroup_of_order(n).unwrap();
    let base_els = base.elements();
    let pick = |r: &mut _, pred: &dyn Fn(&FieldElement) -> bool| loop {
        let x = base_els[Rng::gen_range(r, 0..base_els.len())].clone();
        if pred(&x) {
            break x;
        }
    };
    let b = pick(r, &|_| true);
    let c = pick(r, &|x| x != &b);
    let lambda = pick(r, &|x| !group.contains(x));
    let eta = loop {
        let x = random_element(&f, r);
        if !base.contains_nonzero(&x) {
            break x;
        }
    };
    let k = r.gen_range(1..=(n as usize).min(6));
    let h = r.gen_range(0..k);
    let extended = (h == 0 || h + 1 == k) && r.gen_bool(0.5);
    SubgroupConstructionParams {
        ambient: f,
        base_subfield_degree: 1,
        group_order: n,
        subgroup: None,
        b,
        c,
        lambda,
        eta,
        h,
        k,
        extended,
        unguaranteed: false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn subgroup_guarantees_hold(seed in any::<u64>(), big in any::<bool>()) {
        let params = random_params(if big { 17 } else { 13 }, &mut rng(seed));
        let built = build_subgroup_code(&params).unwrap();
        let g = generator_matrix(&built.spec).unwrap().matrix;
        let mds = mds_by_minors(&g);
        prop_assert!(built.guarantees.mds.is_some());
        prop_assert!(mds.is_mds, "{:?}", built.spec);
        let dim = schur_square_dim(&g);
        let k = params.k;
        if built.guarantees.non_rs.is_some() {
            prop_assert_eq!(is_non_rs(&g, &mds), Determination::Yes);
            if k == 3 && !params.extended {
                prop_assert_eq!(dim, 2 * k);
            }
        }
        if built.guarantees.ctrs_incompatible.is_some() {
            prop_assert_eq!(ctrs_distinguisher(&g, &mds), Determination::Yes);
            if !params.extended {
                prop_assert_eq!(dim, 2 * k + 1);
            }
        }
    }

    #[test]
    fn eta_zero_gives_mds_ctrs_codes(seed in any::<u64>()) {
        let mut params = random_params(13, &mut rng(seed));
        params.eta = params.ambient.zero();
        let built = build_subgroup_code(&params).unwrap();
        let g = generator_matrix(&built.spec).unwrap().matrix;
        prop_assert!(mds_by_minors(&g).is_mds);
        let s = &built.spec;
        let ctrs = CodeSpec::ctrs(&s.field, s.alphas.clone(), s.k, s.b.clone(), s.c.clone(), s.lambda.clone()).unwrap();
        prop_assert_eq!(generator_matrix(&ctrs.with_extension(s.extended)).unwrap().matrix, g);
    }

    #[test]
    fn eval_points_distinct_and_avoid_b_large(seed in any::<u64>()) {
        let f = GaloisField::new(31, 2).unwrap();
        let mut r = rng(seed);
        let view = f.subfield_view(2).unwrap();
        let orders = divisors(f.order() - 1);
        let g = view.subgroup_of_order(orders[r.gen_range(0..orders.len())]).unwrap();
        let (b, c) = (random_element(&f, &mut r), random_element(&f, &mut r));
        prop_assume!(b != c);
        let pts = subgroup_eval_points(&g, &b, &c).unwrap();
        let mut idx: Vec<u64> = pts.iter().map(|x| x.index()).collect();
        prop_assert!(!idx.contains(&b.index()));
        idx.sort_unstable();
        idx.dedup();
        prop_assert_eq!(idx.len(), g.order() - 1);
    }
}

#[test]
fn eval_points_distinct_and_avoid_b_exhaustive() {
    for (p, m) in [(2, 2), (3, 2), (5, 1), (7, 1), (2, 3), (7, 2)] {
        let f = GaloisField::new(p, m).unwrap();
        let view = f.subfield_view(m).unwrap();
        let all: Vec<_> = f.elements().collect();
        for n in divisors(f.order() - 1) {
            let g = view.subgroup_of_order(n).unwrap();
            for b in &all {
                for c in all.iter().filter(|c| *c != b) {
                    let pts = subgroup_eval_points(&g, b, c).unwrap();
                    let mut idx: Vec<u64> = pts.iter().map(|x| x.index()).collect();
                    assert!(!idx.contains(&b.index()));
                    idx.sort_unstable();
                    idx.dedup();
                    assert_eq!(idx.len() as u64, n - 1);
                }
            }
        }
    }
}

#[test]
fn builder_rejects_membership_violations() {
    let f = GaloisField::new(13, 2).unwrap();
    let base = f.subfield_view(1).unwrap();
    let g = base.subgroup_of_order(4).unwrap();
    let params = SubgroupConstructionParams {
        ambient: f.clone(),
        base_subfield_degree: 1,
        group_order: 4,
        subgroup: None,
        b: f.from_int(2),
        c: f.from_int(3),
        lambda: f.from_int(2),
        eta: f.primitive_element(),
        h: 0,
        k: 2,
        extended: false,
        unguaranteed: false,
    };
    assert!(!g.contains(&params.lambda));
    assert!(build_subgroup_code(&params).is_ok());
    let bad = |edit: &dyn Fn(&mut SubgroupConstructionParams)| {
        let mut p = params.clone();
        edit(&mut p);
        build_subgroup_code(&p)
    };
    assert!(matches!(bad(&|p| p.lambda = f.one()), Err(ConstructError::MembershipViolation(_))));
    assert!(matches!(
        bad(&|p| p.eta = f.from_int(5)),
        Err(ConstructError::MembershipViolation(_))
    ));
    assert!(matches!(
        bad(&|p| p.b = f.primitive_element()),
        Err(ConstructError::MembershipViolation(_))
    ));
    assert!(matches!(bad(&|p| p.c = f.from_int(2)), Err(ConstructError::DegenerateBC)));
    assert!(matches!(
        bad(&|p| {
            p.k = 4;
            p.h = 1;
            p.extended = true;
        }),
        Err(ConstructError::UnsupportedExtendedGeneralH { h: 1 })
    ));
    let loose = bad(&|p| {
        p.eta = f.from_int(5);
        p.unguaranteed = true;
    })
    .unwrap();
    assert_eq!(loose.guarantees.provenance(), Vec::<String>::new());
    assert_eq!(loose.warnings.len(), 1);
}

#[test]
fn small_dimension_leaves_non_rs_unset() {
    let f = GaloisField::new(13, 2).unwrap();
    let params = SubgroupConstructionParams {
        ambient: f.clone(),
        base_subfield_degree: 1,
        group_order: 6,
        subgroup: None,
        b: f.from_int(2),
        c: f.from_int(3),
        lambda: f.from_int(2),
        eta: f.primitive_element(),
        h: 0,
        k: 2,
        extended: false,
        unguaranteed: false,
    };
    let built = build_subgroup_code(&params).unwrap();
    assert!(built.guarantees.mds.is_some());
    assert!(built.guarantees.non_rs.is_none());
    assert!(built.guarantees.ctrs_incompatible.is_none());
}

#[test]
fn subfield_chain_checks() {
    let f = GaloisField::new(7, 4).unwrap();
    let gamma = f.subfield_view(2).unwrap().primitive_element();
    let params = SubfieldChainParams {
        ambient: f.clone(),
        q0_degree: 1,
        q1_degree: 2,
        alphas: (0..6).map(|i| f.from_int(i)).collect(),
        b: f.from_int(6),
        c: f.from_int(5),
        lambda: gamma.clone(),
        eta: f.primitive_element(),
        k: 3,
        extended: false,
    };
    let built = build_subfield_chain_code(&params).unwrap();
    assert_eq!(built.guarantees.provenance(), vec!["mds=subfield-chain", "non_rs=subfield-chain"]);
    let mut p = params.clone();
    p.lambda = f.from_int(3);
    assert!(build_subfield_chain_code(&p).is_err());
    let mut p = params.clone();
    p.eta = gamma;
    assert!(build_subfield_chain_code(&p).is_err());
    let mut p = params.clone();
    p.q1_degree = 3;
    assert!(build_subfield_chain_code(&p).is_err());
    let mut p = params;
    p.alphas = (0..7).map(|i| f.from_int(i)).collect();
    let over = build_subfield_chain_code(&p).unwrap();
    assert!(over.guarantees.mds.is_none());
    assert_eq!(over.warnings.len(), 2);
}

#[test]
fn corollary_lengths_and_witnesses() {
    assert_eq!(corollary_lengths(17, 2).unwrap(), (8, 9));
    assert_eq!(corollary_lengths(23, 11).unwrap(), (2, 3));
    assert!(corollary_lengths(23, 3).is_err());
    assert!(corollary_lengths(17, 4).is_err());
    let base = GaloisField::new(23, 1).unwrap();
    for ext in [false, true] {
        let built = corollary_witness(&base, 2, ext).unwrap();
        assert_eq!(built.spec.length(), 11 + usize::from(ext));
        assert!(mds_by_minors(&generator_matrix(&built.spec).unwrap().matrix).is_mds);
    }
}
