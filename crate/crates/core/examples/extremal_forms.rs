//! Extremal quasimodular forms: the depth-one family, its A/B components,
//! constant-term laws and depth-two forms.

use qmf::extremal::{
    alpha_w0_closed, alpha_w0_recurrence, components_family, ratio_laws_observed, ratio_laws_predicted, x_w1_family,
    x_w1_family_lee, x_w2,
};

fn main() -> qmf::error::Result<()> {
    let grabner = x_w1_family(30, 12);
    let lee = x_w1_family_lee(30, 12);
    for (w, f) in &grabner {
        let v = f.valuation().unwrap_or(0);
        println!("X{w}_1 = {} + ...  (Lee route agrees: {})", f.truncate(v + 2), lee.get(w) == Some(f));
    }

    let fam = components_family(66, 3);
    for w in (6..=36).step_by(6) {
        let c = &fam[&{ w }];
        println!(
            "w = {w:>2}: alpha_w0 = {} closed {} recurrence {}  beta = {}",
            c.alpha(0),
            alpha_w0_closed(w)?,
            alpha_w0_recurrence(w)?,
            c.beta(0)
        );
    }
    for w in (12..=60).step_by(6) {
        println!("ratio laws at w = {w}: {}", ratio_laws_observed(&fam, w).as_ref() == Some(&ratio_laws_predicted(w)));
    }

    for w in [4, 8, 10, 12, 14, 16] {
        println!("X{w}_2 = {}", x_w2(w, 5)?);
    }
    Ok(())
}
