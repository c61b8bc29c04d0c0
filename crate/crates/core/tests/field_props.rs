mod common;

use proptest::prelude::*;
use rctrs::field::GaloisField;

use common::{random_element, rng};

/// Schoolbook product of coefficient vectors reduced by the monic modulus.
fn poly_mul_mod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let m = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for d in (m..prod.len()).rev() {
        let lead = prod[d];
        if lead == 0 {
            continue;
        }
        for (i, &c) in modulus.iter().enumerate() {
            let idx = d - m + i;
            prod[idx] = (prod[idx] + p * p - lead * c % p) % p;
        }
    }
    prod.truncate(m);
    prod
}

const SMALL: [(u64, usize); 6] = [(2, 3), (3, 2), (5, 2), (7, 1), (7, 2), (13, 1)];

#[test]
fn axioms_exhaustive_for_small_fields() {
    for (p, m) in SMALL {
        let f = GaloisField::new(p, m).unwrap();
        let all: Vec<_> = f.elements().collect();
        for a in &all {
            for b in &all {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                for c in all.iter().step_by(3) {
                    assert_eq!(&(a + b) + c, a + &(b + c));
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                }
            }
        }
    }
}

#[test]
fn multiplication_matches_polynomial_oracle() {
    for (p, m) in [(2, 4), (3, 3), (7, 4), (23, 2), (29, 2)] {
        let f = GaloisField::new(p, m).unwrap();
        let mut r = rng(p * 100 + m as u64);
        for _ in 0..500 {
            let (a, b) = (random_element(&f, &mut r), random_element(&f, &mut r));
            let mut got = (&a * &b).coeffs();
            got.resize(m, 0);
            let mut want = poly_mul_mod(&a.coeffs(), &b.coeffs(), f.modulus(), p);
            want.resize(m, 0);
            assert_eq!(got, want, "{a} * {b} in {}", f.descriptor());
        }
    }
}

#[test]
fn inverses_and_fermat() {
    for (p, m) in SMALL.into_iter().chain([(7, 4)]) {
        let f = GaloisField::new(p, m).unwrap();
        let q = f.order();
        for a in f.elements().filter(|a| !a.is_zero()) {
            assert!((&a * &a.inv().unwrap()).is_one());
            assert!(a.pow(q - 1).is_one());
            assert_eq!((q - 1) % a.multiplicative_order().unwrap(), 0);
        }
        assert!(f.zero().inv().is_err());
        assert_eq!(f.primitive_element().multiplicative_order(), Some(q - 1));
    }
}

#[test]
fn frobenius_is_a_ring_map_with_prime_fixed_field() {
    for (p, m) in [(2, 4), (3, 2), (5, 2), (7, 2)] {
        let f = GaloisField::new(p, m).unwrap();
        let all: Vec<_> = f.elements().collect();
        for a in &all {
            for b in &all {
                assert_eq!((a + b).frobenius(), &a.frobenius() + &b.frobenius());
                assert_eq!((a * b).frobenius(), &a.frobenius() * &b.frobenius());
            }
        }
        assert_eq!(all.iter().filter(|a| a.frobenius() == **a).count() as u64, p);
    }
}

#[test]
fn subfield_views_are_closed_subfields() {
    for (p, m) in [(2, 4), (3, 4), (7, 2), (2, 6)] {
        let f = GaloisField::new(p, m).unwrap();
        for d in (1..=m).filter(|d| m % d == 0) {
            let view = f.subfield_view(d).unwrap();
            let els = view.elements();
            assert_eq!(els.len() as u64, p.pow(d as u32));
            for a in &els {
                for b in &els {
                    assert!(view.contains(&(a + b)));
                    assert!(view.contains(&(a * b)));
                }
            }
            assert_eq!(view.primitive_element().multiplicative_order(), Some(view.order() - 1));
        }
        assert!(f.subfield_view(m + 1).is_err());
    }
}

#[test]
fn subgroups_of_every_order() {
    let f = GaloisField::new(7, 2).unwrap();
    let view = f.subfield_view(2).unwrap();
    for n in [1, 2, 3, 4, 6, 8, 12, 16, 24, 48] {
        let g = view.subgroup_of_order(n).unwrap();
        let els = g.elements();
        assert_eq!(els.len() as u64, n);
        assert!(els[0].is_one());
        let mut idx = g.sorted_indices();
        idx.dedup();
        assert_eq!(idx.len() as u64, n);
        for a in els {
            for b in els {
                assert!(g.contains(&(a * b)));
            }
        }
    }
    assert!(view.subgroup_of_order(5).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn index_round_trip(idx in 0u64..2401) {
        let f = GaloisField::new(7, 4).unwrap();
        let x = f.element(idx).unwrap();
        prop_assert_eq!(x.index(), idx);
        prop_assert_eq!(f.from_coeffs(&x.coeffs()).unwrap(), x);
    }

    #[test]
    fn random_triples_in_a_large_field(seed in any::<u64>()) {
        let f = GaloisField::new(1031, 2).unwrap();
        let mut r = rng(seed);
        for _ in 0..200 {
            let (a, b, c) = (random_element(&f, &mut r), random_element(&f, &mut r), random_element(&f, &mut r));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !a.is_zero() {
                prop_assert_eq!(&(&b / &a) * &a, b.clone());
            }
        }
    }

    #[test]
    fn descriptor_round_trip(pm in prop::sample::select(vec![(2u64, 5usize), (3, 3), (5, 3), (11, 2), (17, 1)])) {
        let f = GaloisField::new(pm.0, pm.1).unwrap();
        let g = GaloisField::parse(&f.descriptor()).unwrap();
        prop_assert_eq!(g.descriptor(), f.descriptor());
        prop_assert_eq!(g.primitive_element().index(), f.primitive_element().index());
    }
}
