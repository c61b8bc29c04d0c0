//! MDS decisions by exhaustive minors and by closed-form conditions.

use rctrs::code::{generator_matrix, CodeSpec};
use rctrs::field::GaloisField;
use rctrs::mds::{mds_both, mds_by_minors, mds_closed_form, min_distance, minor_count, DEFAULT_BUDGET};

fn main() -> Result<(), rctrs::Error> {
    let f = GaloisField::new(13, 1)?;
    let alphas: Vec<_> = [1, 3, 9, 5, 6].iter().map(|&x| f.from_int(x)).collect();
    let (b, c, lambda) = (f.from_int(2), f.from_int(4), f.from_int(7));

    for h in 0..3 {
        let mut mds_etas = Vec::new();
        for eta in f.elements() {
            let spec = CodeSpec::rctrs(&f, alphas.clone(), 3, h, 1, b.clone(), c.clone(), lambda.clone(), eta.clone())?;
            let g = generator_matrix(&spec)?;
            let minors = mds_by_minors(&g.matrix);
            assert_eq!(minors.witness, mds_closed_form(&spec)?.witness);
            if minors.is_mds {
                mds_etas.push(eta.to_string());
            }
        }
        println!("h={h}: MDS exactly for eta in {{{}}}", mds_etas.join(","));
    }

    let spec = CodeSpec::rctrs(&f, alphas, 3, 0, 1, b, c, lambda, f.from_int(7))?;
    let g = generator_matrix(&spec)?;
    println!("eta=7, h=0 over {} minors: {}", minor_count(&g.matrix), mds_both(&g)?);
    println!("{}", min_distance(&g.matrix, DEFAULT_BUDGET));
    Ok(())
}
