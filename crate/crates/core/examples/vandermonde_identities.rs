//! Vandermonde and deleted-row Vandermonde determinants against elimination.

use rctrs::field::GaloisField;
use rctrs::linalg::{
    deleted_row_vandermonde_det, deleted_row_vandermonde_matrix, elementary_symmetric, vandermonde_det, vandermonde_matrix,
};

fn main() -> Result<(), rctrs::Error> {
    let f = GaloisField::new(13, 1)?;
    let alphas: Vec<_> = [2, 5, 7, 11].iter().map(|&a| f.from_int(a)).collect();

    let v = vandermonde_matrix(&f, &alphas);
    println!("V =\n{}", v.to_text());
    println!("det by elimination {} / product formula {}", v.det()?, vandermonde_det(&f, &alphas));

    for h in 1..alphas.len() {
        let m = deleted_row_vandermonde_matrix(&f, &alphas, h)?;
        let sigma = elementary_symmetric(&f, &alphas, alphas.len() - h);
        println!(
            "h={h}: sigma={sigma} det={} closed form={}",
            m.det()?,
            deleted_row_vandermonde_det(&f, &alphas, h)?
        );
    }
    Ok(())
}
