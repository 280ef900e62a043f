use qmf::forms::{catalog, delta, e2, e4, e6, r4, sigma, tau, theta3_fourth};
use qmf::lambert::{certify_lemma, spot_value, LEMMAS};
use qmf::qseries::FourierSeries;
use rug::Rational;

#[test]
fn tau_table() {
    let known = [1i64, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920, 534612, -370944];
    for (n, t) in known.iter().enumerate() {
        assert_eq!(tau(n as u64 + 1), *t, "tau({})", n + 1);
    }
    let d = delta(12);
    for (n, t) in known.iter().enumerate() {
        assert_eq!(d.coeff(n + 1), *t);
    }
}

#[test]
fn eisenstein_heads() {
    assert_eq!(e2(5), FourierSeries::from_integers(1, [1i64, -24, -72, -96, -168, -144]));
    assert_eq!(e4(4), FourierSeries::from_integers(1, [1i64, 240, 2160, 6720, 17520]));
    assert_eq!(e6(4), FourierSeries::from_integers(1, [1i64, -504, -16632, -122976, -532728]));
    assert_eq!(sigma(3, 12), 2044);
}

#[test]
fn delta_two_ways() {
    let n = 200;
    let eis = e4(n).pow(3).sub(&e6(n).square()).scale(&Rational::from((1, 1728)));
    assert_eq!(eis, delta(n));
    assert_eq!(delta(n).derivative(), e2(n).mul(&delta(n)));
}

#[test]
fn jacobi_four_squares() {
    let th = theta3_fourth(60);
    for n in 1..=60u64 {
        let brute = (-8i64..=8)
            .flat_map(|a| {
                (-8i64..=8).flat_map(move |b| {
                    (-8i64..=8).flat_map(move |c| (-8i64..=8).map(move |d| a * a + b * b + c * c + d * d))
                })
            })
            .filter(|&s| s == n as i64)
            .count();
        assert_eq!(r4(n), brute as u64, "r4({n})");
        assert_eq!(th.coeff(n as usize), brute as u64);
    }
}

#[test]
fn x61_closed_form() {
    // X_{6,1} = E_4'/240 = Σ n σ_3(n) q^n
    let x = catalog::build("X6_1", 30).unwrap();
    for n in 1..=30u64 {
        assert_eq!(x.coeff(n as usize), Rational::from(sigma(3, n) * n));
    }
}

#[test]
fn lemma_spot_values() {
    for name in LEMMAS {
        let c = certify_lemma(name).unwrap();
        for t in [0.1, 1.0, 5.0, 20.0] {
            assert!(spot_value(&c, t, 256) > 0, "{name} at {t}");
        }
    }
}
