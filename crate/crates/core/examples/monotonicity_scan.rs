//! Monotonicity scans of t^m F(it), the limit at t = 0 and the tangent
//! conditions for the forms where they apply.

use qmf::numeric::{
    a_w_family_scan, limit_t0, monotonicity_scan, small_t_positivity_check, tangent_conditions, values_at_i,
    EvalConfig, GridSpec, DECREASING_PAIRS, SIGN_CHANGE_PAIRS,
};

fn main() -> qmf::error::Result<()> {
    let cfg = EvalConfig::default();
    let grid = GridSpec::default();
    for &(label, m) in DECREASING_PAIRS.iter().chain(SIGN_CHANGE_PAIRS) {
        let r = monotonicity_scan(label, m, &grid, &cfg)?;
        println!("t^{m:<2} {label:<6} {:?} {:?}", r.verdict, r.sign_changes);
    }
    for r in a_w_family_scan(24, &grid, &cfg)? {
        println!("t^{:<2} {:<6} {:?}", r.m, r.label, r.verdict);
    }
    for (label, m) in [("X6_1", 5), ("X12_1", 11), ("X14_1", 13)] {
        let r = tangent_conditions(label, m, &cfg)?;
        println!("{label} m = {m}: {} limit {} -> {}; {}", r.verdict, r.limit_extrapolated, r.limit_target, r.bracket);
    }
    for w in [6, 12, 14, 16] {
        let l = limit_t0(w, &cfg)?;
        println!("lim t^{} X{w}_1(it) = {} (predicted {}, beta0 = {})", w - 1, l.measured, l.predicted, l.beta0);
    }
    for w in [12, 16, 20] {
        let s = small_t_positivity_check(w, &cfg)?;
        println!("small-t condition w = {w}: beta1 = {} ok {}", s.beta1, s.ok);
    }
    let v = values_at_i(&cfg)?;
    println!("E2(i) = {}  E6(i) = {}", v.e2.to_f64(), v.e6.to_f64());
    println!("X10_1(i) = {} closed form {}", v.x101.to_f64(), v.x101_closed.to_f64());
    println!("7 X8_1(i) - 2 pi X8_1'(i) = {}", v.x81_critical.to_f64());
    Ok(())
}
