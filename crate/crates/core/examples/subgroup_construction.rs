//! Guaranteed MDS codes from subgroup and subfield-chain constructions.

use rctrs::construct::{
    build_subfield_chain_code, build_subgroup_code, corollary_lengths, corollary_witness, SubfieldChainParams, SubgroupConstructionParams,
};
use rctrs::field::{prime_divisors, GaloisField};
use rctrs::report::{analyze_with, AnalyzeOptions};
use rctrs::specfile::write_spec;

fn main() -> Result<(), rctrs::Error> {
    let f = GaloisField::new(13, 2)?;
    for h in [0, 1, 2] {
        let built = build_subgroup_code(&SubgroupConstructionParams {
            ambient: f.clone(),
            base_subfield_degree: 1,
            group_order: 6,
            subgroup: None,
            b: f.from_int(2),
            c: f.from_int(5),
            lambda: f.from_int(2),
            eta: f.primitive_element(),
            h,
            k: 3,
            extended: false,
            unguaranteed: false,
        });
        match built {
            Ok(code) => {
                let report = analyze_with(&code.spec, &AnalyzeOptions::default(), code.guarantees.provenance(), code.warnings)?;
                println!("h={h}:\n{}", report.render(false));
            }
            Err(e) => println!("h={h}: rejected: {e}"),
        }
    }

    let f = GaloisField::new(3, 4)?;
    let f9 = f.subfield_view(2)?;
    let (b, c) = (f9.primitive_element(), f.one());
    let chain = build_subfield_chain_code(&SubfieldChainParams {
        ambient: f.clone(),
        q0_degree: 2,
        q1_degree: 4,
        alphas: f9.elements().into_iter().filter(|x| x != &b && x != &c).take(6).collect(),
        b,
        c,
        lambda: f.primitive_element(),
        eta: f.zero(),
        k: 3,
        extended: true,
    })?;
    println!("subfield chain codespec:\n{}", write_spec(&chain.spec)?);

    for q in [17u64, 23, 29] {
        let base = GaloisField::new(q, 1)?;
        for p in prime_divisors(q - 1) {
            let (n, n1) = corollary_lengths(q, p)?;
            let plain = corollary_witness(&base, p, false)?;
            println!(
                "q={q} p={p}: lengths {n} and {n1}, k={}, {:?}",
                plain.spec.k,
                plain.guarantees.provenance()
            );
        }
    }
    Ok(())
}
