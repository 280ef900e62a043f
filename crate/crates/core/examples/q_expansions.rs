//! Exact q-expansions of the basic forms and a few composites.

use qmf::forms::catalog::{build, FormLabel};
use qmf::forms::{delta, e2, e4, e6, tau};

fn main() -> qmf::error::Result<()> {
    println!("E2    = {}", e2(6));
    println!("E4    = {}", e4(6));
    println!("E6    = {}", e6(6));
    println!("Delta = {}", delta(6));
    let eis = e4(30).pow(3).sub(&e6(30).square()).scale_frac(1, 1728);
    println!("eta product = (E4^3 - E6^2)/1728 to q^30: {}", eis == delta(30));
    println!("tau(1..10) = {:?}", (1..=10).map(|n| tau(n).to_string()).collect::<Vec<_>>());

    for label in ["H2", "X4_2", "Y4_2", "Y16_2", "X42Delta", "P2", "E2combo", "X12_1'"] {
        let d = FormLabel::parse(label)?.descriptor();
        println!("{label:<9} weight {:>2} depth {} {}: {}", d.weight, d.depth, d.level, build(label, 6)?);
    }
    Ok(())
}
