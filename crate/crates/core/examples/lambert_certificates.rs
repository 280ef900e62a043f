//! Monotonicity certificates for Lambert-series blocks, with their JSON form.

use qmf::lambert::{certify_lemma, recheck, spot_value, LEMMAS, NON_EXAMPLES};

fn main() -> qmf::error::Result<()> {
    for name in LEMMAS.iter().chain(NON_EXAMPLES) {
        let cert = certify_lemma(name)?;
        let json = cert.to_json();
        let spots: Vec<String> =
            [0.1, 1.0, 5.0].iter().map(|&t| format!("{:.3e}", spot_value(&cert, t, 128).to_f64())).collect();
        println!(
            "{name:<5} m = {:>2} {:?} valid {:<5} recheck {} n* {:?} f(t) at 0.1, 1, 5: {}",
            cert.m,
            cert.method,
            cert.is_valid(),
            recheck(&json)?,
            cert.n_star,
            spots.join(", ")
        );
    }
    let x101 = certify_lemma("X101")?;
    println!("{}", serde_json::to_string_pretty(&x101.to_json()).expect("serialize"));
    Ok(())
}
