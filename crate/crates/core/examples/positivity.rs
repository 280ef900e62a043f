//! Complete positivity, sign densities and dilation-ratio infima.

use qmf::positivity::{check_label, density_label, ratio_label, x122_doubling_check, y_w2_report};

fn main() -> qmf::error::Result<()> {
    for w in [4, 8, 10, 12, 14, 16] {
        let r = y_w2_report(w, 1000)?;
        println!("Y{w}_2 completely positive to 1000: {}", r.completely_positive_up_to_order);
    }
    for label in ["P1", "P3", "X42Delta", "P1shift", "P3shift", "E2odd", "E2combo"] {
        let r = check_label(label, 1000)?;
        println!("{label:<9} first negative {:?}", r.first_negative.map(|n| (n.exponent, n.value)));
    }
    for label in ["P1", "P2", "P3", "P4", "X42Delta"] {
        let d = density_label(label, 2000)?;
        println!("{label:<9} density {:.4} stated {:?}", d.density, d.predicted);
    }
    for (label, bound) in [("X4_2", 4096), ("X8_2", 2048), ("X10_2", 2048)] {
        let r = ratio_label(label, 2, bound)?;
        println!("{label}: min a_2n/a_n = {} at n = {:?}", r.min_ratio_approx.unwrap_or_default(), r.argmin);
    }
    let d = x122_doubling_check(200)?;
    println!("X12_2 c_2n >= 2^10 c_n to 200: {} (appendix inequalities {} {})", d.ok, d.ineq1.ok, d.ineq2.ok);
    Ok(())
}
