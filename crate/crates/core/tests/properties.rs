use proptest::prelude::*;
use qmf::extremal::x_w1_components;
use qmf::forms::catalog;
use qmf::identities;
use qmf::lambert::{self, certify, Method, MethodChoice, LEMMAS, NON_EXAMPLES};
use qmf::numeric::{eval_depth1_transformed, EvalConfig, LevelOneForm};
use qmf::qseries::FourierSeries;
use rug::{Float, Rational};

fn series(max_len: usize) -> impl Strategy<Value = FourierSeries> {
    prop::collection::vec((-50i64..50, 1i64..6), 1..max_len)
        .prop_map(|v| FourierSeries::new(1, v.into_iter().map(|(n, d)| Rational::from((n, d))).collect()))
}

fn upto(a: &FourierSeries, b: &FourierSeries) -> usize {
    a.order().min(b.order())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in series(12), b in series(12), c in series(12)) {
        let n = upto(&a, &b).min(c.order());
        prop_assert!(a.add(&b).equal_up_to(&b.add(&a), n));
        prop_assert!(a.mul(&b).equal_up_to(&b.mul(&a), n));
        prop_assert!(a.mul(&b).mul(&c).equal_up_to(&a.mul(&b.mul(&c)), n));
        prop_assert!(a.add(&b).add(&c).equal_up_to(&a.add(&b.add(&c)), n));
        prop_assert!(a.mul(&b.add(&c)).equal_up_to(&a.mul(&b).add(&a.mul(&c)), n));
    }

    #[test]
    fn leibniz(a in series(12), b in series(12)) {
        let n = upto(&a, &b);
        let lhs = a.mul(&b).derivative();
        let rhs = a.derivative().mul(&b).add(&a.mul(&b.derivative()));
        prop_assert!(lhs.equal_up_to(&rhs, n));
    }

    #[test]
    fn dilation_laws(a in series(10), p in 1u32..4, q in 1u32..4) {
        prop_assert_eq!(a.dilate(p).dilate(q), a.dilate(p * q));
        let lhs = a.dilate(p).derivative();
        let rhs = a.derivative().dilate(p).scale_int(p as i64);
        prop_assert!(lhs.equal_up_to(&rhs, lhs.order()));
        prop_assert_eq!(a.half_shift().unwrap().half_shift().unwrap(), a.clone());
    }

    #[test]
    fn json_round_trip(a in series(10), g in 1u32..4) {
        let s = FourierSeries::new(g, a.coeffs().to_vec());
        prop_assert_eq!(FourierSeries::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn identity_checks_are_monotone_in_order(k in 0usize..200, n in 4usize..30) {
        let ids = identities::ids();
        let id = ids[k % ids.len()];
        if identities::verify(id, 40).unwrap().passed() {
            prop_assert!(identities::verify(id, n).unwrap().passed(), "{} at {}", id, n);
        }
    }

    #[test]
    fn two_routes_agree(w in prop::sample::select(vec![6u32, 8, 10, 12, 14, 16, 18]), t in 0.3f64..1.0) {
        let cfg = EvalConfig::default();
        let f = LevelOneForm::from_label(&format!("X{w}_1"), &cfg).unwrap();
        let direct = f.eval_direct(t, &cfg).unwrap();
        let other = f.eval_transformed(t, &cfg).unwrap();
        let gap = Float::with_val(128, &direct.value - &other.value).abs();
        let allowed = Float::with_val(128, &direct.tail_estimate + &other.tail_estimate)
            + Float::with_val(128, direct.value.abs_ref()) * 1e-30;
        prop_assert!(gap <= allowed, "w = {} t = {}", w, t);
        let comp = x_w1_components(w, 200).unwrap();
        let (v, _) = eval_depth1_transformed(&comp, t, &cfg).unwrap();
        let gap = Float::with_val(128, &direct.value - &v).abs();
        prop_assert!(gap <= allowed, "components route, w = {} t = {}", w, t);
    }
}

#[test]
fn methods_agree_where_both_complete() {
    for name in LEMMAS.iter().chain(NON_EXAMPLES) {
        let sh = lambert::shape(name).unwrap();
        let (p, q) = sh.derivative_numerator().unwrap();
        let a = certify(sh.m, &p, &q, MethodChoice::Only(Method::RShift)).unwrap();
        let b = certify(sh.m, &p, &q, MethodChoice::Only(Method::Taylor)).unwrap();
        if a.is_valid() {
            assert!(b.is_valid(), "{name}: R-shift certifies, Taylor does not");
        }
        if !b.is_valid() {
            assert!(!a.is_valid(), "{name}: Taylor refutes, R-shift certifies");
        }
    }
}

#[test]
fn lemma_blocks_match_divisor_sums() {
    for name in LEMMAS {
        let sh = lambert::shape(name).unwrap();
        assert_eq!(sh.block_series(100), sh.closed_form_series(100), "{name}");
    }
}

#[test]
fn leading_coefficient_of_depth_one_forms() {
    let mut last = 0;
    for w in (6..=48).step_by(6) {
        let f = catalog::build(&format!("X{w}_1"), 12).unwrap();
        let v = f.valuation().unwrap();
        assert_eq!(f.coeff(v), 1, "w = {w}");
        assert!(v > last, "w = {w}");
        last = v;
    }
}
