//! Field construction, element arithmetic, subfields and subgroups.
//!
//! ```text
//! cargo run --example field_arithmetic
//! ```

use rctrs::field::GaloisField;

fn main() -> Result<(), rctrs::Error> {
    let f = GaloisField::new(7, 4)?;
    println!("{} has {} elements", f.descriptor(), f.order());

    let g = f.primitive_element();
    let x = f.parse_element("100")?;
    let y = &x * &g;
    println!("x = {x} (coefficients {:?}), x * g = {y}", x.coeffs());
    println!("x^-1 = {}, x^2400 = {}", x.inv()?, x.pow(2400));
    println!("order of x is {:?}", x.multiplicative_order());

    for d in [1, 2, 4] {
        let sub = f.subfield_view(d)?;
        println!(
            "subfield of degree {d}: {} elements, primitive {}",
            sub.order(),
            sub.primitive_element()
        );
    }

    let base = f.subfield_view(1)?;
    let group = base.subgroup_of_order(3)?;
    let listing: Vec<String> = group.elements().iter().map(|e| e.to_string()).collect();
    println!("order-3 subgroup of F_7^*: [{}]", listing.join(", "));

    // an explicit modulus
    let h = GaloisField::parse("3^2/1,0,1")?;
    println!("{} primitive element {}", h.descriptor(), h.primitive_element());
    Ok(())
}
