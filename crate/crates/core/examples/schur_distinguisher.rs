//! Schur squares separate GRS, CTRS and RCTRS codes of the same length.

use rctrs::code::{generator_matrix, CodeSpec};
use rctrs::field::GaloisField;
use rctrs::mds::mds_by_minors;
use rctrs::schur::{apply_isometry, schur_square_dim, Isometry, SchurReport};

fn main() -> Result<(), rctrs::Error> {
    let f = GaloisField::new(23, 2)?;
    let group = f.subfield_view(1)?.subgroup_of_order(11)?;
    let (b, c) = (f.from_int(12), f.from_int(7));
    let alphas = rctrs::construct::subgroup_eval_points(&group, &b, &c)?;
    let (lambda, eta) = (f.from_int(5), f.primitive_element());

    let mut grs_points = alphas.clone();
    grs_points.push(f.from_int(1));
    let codes = [
        ("GRS", CodeSpec::grs(&f, grs_points, None, 4)?),
        ("CTRS", CodeSpec::ctrs(&f, alphas.clone(), 4, b.clone(), c.clone(), lambda.clone())?),
        ("RCTRS", CodeSpec::rctrs(&f, alphas, 4, 0, 1, b, c, lambda, eta)?),
    ];
    for (name, spec) in &codes {
        let g = generator_matrix(spec)?.matrix;
        let mds = mds_by_minors(&g);
        println!("{name:>5}: {mds} {}", SchurReport::new(&g, &mds));
    }

    // the dimension is a code-equivalence invariant
    let g = generator_matrix(&codes[2].1)?.matrix;
    let perm: Vec<usize> = (0..g.cols()).rev().collect();
    let scale = (0..g.cols()).map(|i| f.from_int(i as i64 + 1)).collect();
    let moved = apply_isometry(&g, &Isometry::new(perm, scale)?)?;
    println!("after an isometry: schur_dim={}", schur_square_dim(&moved));
    Ok(())
}
