mod common;

use proptest::prelude::*;
use rand::Rng;
use rctrs::code::{CodeSpec, Family};
use rctrs::field::GaloisField;
use rctrs::repro::GoldenExample;
use rctrs::specfile::{read_spec, write_spec, SpecFileError};

use common::{random_distinct, random_element, random_nonzero, rng};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn random_specs_round_trip(seed in any::<u64>(), fam in 0usize..4, pick in 0usize..3) {
        let f = match pick {
            0 => GaloisField::new(13, 1).unwrap(),
            1 => GaloisField::new(2, 4).unwrap(),
            _ => GaloisField::new(7, 2).unwrap(),
        };
        let mut r = rng(seed);
        let n = r.gen_range(2..=10);
        let k = r.gen_range(1..n);
        let h = r.gen_range(0..k);
        let t = r.gen_range(1..=3);
        let e = |r: &mut _| random_element(&f, r);
        let spec = match fam {
            0 => {
                let v = r.gen_bool(0.5).then(|| (0..n).map(|_| random_nonzero(&f, &mut r)).collect());
                CodeSpec::grs(&f, random_distinct(&f, n, &mut r), v, k)
            }
            1 => CodeSpec::trs(&f, random_distinct(&f, n, &mut r), k, t, h, e(&mut r)),
            2 => CodeSpec::ctrs(&f, random_distinct(&f, n - 1, &mut r), k, e(&mut r), e(&mut r), e(&mut r)),
            _ => CodeSpec::rctrs(&f, random_distinct(&f, n - 1, &mut r), k, h, t, e(&mut r), e(&mut r), e(&mut r), e(&mut r)),
        }
        .unwrap()
        .with_extension(r.gen_bool(0.5));
        let text = write_spec(&spec).unwrap();
        prop_assert_eq!(read_spec(&text).unwrap(), spec);
    }
}

#[test]
fn golden_specs_round_trip() {
    for ex in GoldenExample::ALL {
        for case in ex.cases().unwrap() {
            let text = write_spec(&case.built.spec).unwrap();
            assert_eq!(read_spec(&text).unwrap(), case.built.spec, "{}", case.label);
        }
    }
}

#[test]
fn reads_the_documented_layout() {
    let text = "\
# F_17 example
field 17^1/1,0
family RCTRS
n 8
k 4
h 0
t 1
extended 0
alphas 0,3,7,8,10,12,13

b 1
c 2
lambda 10
eta 4
";
    let spec = read_spec(text).unwrap();
    assert_eq!(spec.family, Family::Rctrs);
    assert_eq!(
        spec.alphas.iter().map(|a| a.index()).collect::<Vec<_>>(),
        vec![0, 3, 7, 8, 10, 12, 13]
    );
    assert_eq!(spec.eta.index(), 4);
}

#[test]
fn errors_name_line_and_key() {
    let good = "field 7^1/1,0\nfamily GRS\nn 3\nk 2\nh 0\nt 1\nextended 0\nalphas 1,2,3\nb 0\nc 0\nlambda 0\neta 0\n";
    assert!(read_spec(good).is_ok());
    let bad = good.replace("k 2", "k two");
    assert!(matches!(read_spec(&bad), Err(SpecFileError::Parse { line: 4, ref key, .. }) if key == "k"));
    let bad = good.replace("alphas 1,2,3", "alphas 1,2,9");
    assert!(matches!(read_spec(&bad), Err(SpecFileError::Parse { line: 8, ref key, .. }) if key == "alphas"));
    let bad = good.replace("eta 0\n", "");
    assert!(matches!(read_spec(&bad), Err(SpecFileError::MissingKey("eta"))));
    let bad = good.replace("b 0", "b 1");
    assert!(matches!(read_spec(&bad), Err(SpecFileError::Validation(_))));
    let bad = format!("{good}n 4\n");
    assert!(matches!(read_spec(&bad), Err(SpecFileError::Parse { line: 13, .. })));
    assert!(read_spec(&good.replace("extended 0", "extended yes")).is_err());
    assert!(read_spec(&good.replace("7^1/1,0", "7^2/1,0,0")).is_err());
}
