//! Generator matrices for each code family, and the degenerations between them.

use rctrs::code::{generator_matrix, CodeSpec};
use rctrs::field::GaloisField;

fn main() -> Result<(), rctrs::Error> {
    let f = GaloisField::new(11, 1)?;
    let el = |v: &[i64]| v.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>();
    let (b, c, lambda, eta) = (f.from_int(6), f.from_int(7), f.from_int(3), f.from_int(2));

    let specs = [
        CodeSpec::grs(&f, el(&[1, 2, 3, 4, 5, 6]), Some(el(&[1, 1, 2, 2, 3, 3])), 3)?,
        CodeSpec::trs(&f, el(&[1, 2, 3, 4, 5, 6]), 3, 1, 1, eta.clone())?,
        CodeSpec::ctrs(&f, el(&[1, 2, 3, 4, 5]), 3, b.clone(), c.clone(), lambda.clone())?,
        CodeSpec::rctrs(&f, el(&[1, 2, 3, 4, 5]), 3, 0, 1, b.clone(), c.clone(), lambda, eta.clone())?,
        CodeSpec::rctrs(&f, el(&[1, 2, 3, 4, 5]), 3, 2, 1, b.clone(), c.clone(), f.zero(), eta.clone())?.with_extension(true),
    ];
    for spec in &specs {
        let g = generator_matrix(spec)?;
        println!(
            "{} h={} extended={} [{}x{}]",
            spec.family,
            spec.h,
            spec.extended,
            g.dimension(),
            g.length()
        );
        for i in 0..g.dimension() {
            let row: Vec<String> = g.matrix.row(i).iter().map(|x| format!("{:>2}", x.to_string())).collect();
            println!("  {}", row.join(" "));
        }
        let word = g.encode(&el(&[1, 0, 1]))?;
        let word: Vec<String> = word.iter().map(|x| x.to_string()).collect();
        println!("  encode(1,0,1) = [{}]", word.join(","));
    }

    // lambda = 0 turns the twist column into one more evaluation at b
    let a = generator_matrix(&CodeSpec::rctrs(&f, el(&[1, 2, 3, 4, 5]), 3, 2, 1, b, c, f.zero(), eta.clone())?)?;
    let t = generator_matrix(&CodeSpec::trs(&f, el(&[1, 2, 3, 4, 5, 6]), 3, 1, 2, eta)?)?;
    println!("RCTRS with lambda=0 equals TRS on the extra point: {}", a.matrix == t.matrix);
    Ok(())
}
