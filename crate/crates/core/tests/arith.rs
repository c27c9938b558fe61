use proptest::prelude::*;
use voa_forge::arith::cyclo::Cyclo;
use voa_forge::arith::rat::{self, int, rat, Rat};
use voa_forge::arith::series::{BiSeries, Exps};
use voa_forge::characters::{eta_inv, pochhammer, pochhammer_inv, PochArg};

fn q_poly(coeffs: &[i64], order: i64) -> BiSeries {
    BiSeries::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| (Exps::new(int(k as i64), int(0), 0), int(c))),
        int(order),
    )
    .unwrap()
}

fn q_coeffs(s: &BiSeries, upto: i64) -> Vec<Rat> {
    (0..upto).map(|k| s.coeff(&int(k), &int(0), 0)).collect()
}

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| int(x)).collect()
}

#[test]
fn fractions_add_exactly() {
    assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
    assert_eq!(rat::to_text(&(rat(1, 2) + rat(1, 3))), "5/6");
}

#[test]
fn level_at_p_two() {
    assert_eq!(int(-2) + rat(1, 2), rat(-3, 2));
}

#[test]
fn canonical_form_reduces_by_gcd() {
    assert_eq!(rat(4, 8), rat(1, 2));
    assert_eq!(rat::parse("4/8").unwrap(), rat(1, 2));
}

#[test]
fn division_by_zero_is_an_error_value() {
    assert!(rat::checked_div(&int(1), &int(0)).is_err());
    assert!(rat::pow(&int(0), -1).is_err());
}

#[test]
fn root_of_unity_identities() {
    let q4 = Cyclo::root_pow(4, 1);
    assert_eq!(q4.pow(2).unwrap(), Cyclo::from_int(4, -1));
    assert!((&q4 + &q4.inverse().unwrap()).is_zero());
    let q6 = Cyclo::root_pow(6, 1);
    assert_eq!(q6.pow(3).unwrap(), Cyclo::from_int(6, -1));
}

#[test]
fn cyclo_order_mismatch_and_zero_inverse_fail() {
    assert!(Cyclo::one(4).try_add(&Cyclo::one(6)).is_err());
    assert!(Cyclo::one(4).try_mul(&Cyclo::one(6)).is_err());
    assert!(Cyclo::zero(4).inverse().is_err());
}

#[test]
fn truncated_product() {
    let product = q_poly(&[1, -1], 3).mul(&q_poly(&[1, 1, 1], 3)).unwrap();
    assert_eq!(product, q_poly(&[1], 3));
}

#[test]
fn z_times_inverse_z_is_one() {
    let z = BiSeries::monomial(int(1), int(0), int(1), 0, int(2));
    let z_inv = BiSeries::monomial(int(1), int(0), int(-1), 0, int(2));
    assert_eq!(z.mul(&z_inv).unwrap(), BiSeries::one(int(2)));
}

#[test]
fn geometric_series_inverse() {
    let inv = q_poly(&[1, -1], 4).inv(None).unwrap();
    assert_eq!(q_coeffs(&inv, 4), ints(&[1, 1, 1, 1]));
}

#[test]
fn geometric_series_in_z_squared_q() {
    let one_minus = BiSeries::from_terms(
        [
            (Exps::new(int(0), int(0), 0), int(1)),
            (Exps::new(int(1), int(2), 0), int(-1)),
        ],
        int(4),
    )
    .unwrap();
    let inv = one_minus.inv(None).unwrap();
    for k in 0..4 {
        assert_eq!(inv.coeff(&int(k), &int(2 * k), 0), int(1));
    }
    assert_eq!(inv.len(), 4);
}

#[test]
fn partition_numbers() {
    assert_eq!(q_coeffs(&eta_inv(&int(5)).unwrap(), 5), ints(&[1, 1, 2, 3, 5]));
}

#[test]
fn euler_pentagonal_product() {
    let euler = pochhammer(&[PochArg::new(0, 1)], &int(8)).unwrap();
    assert_eq!(q_coeffs(&euler, 8), ints(&[1, -1, -1, 0, 0, 1, 0, 1]));
}

#[test]
fn non_unit_leading_term_is_refused() {
    let one_minus_z = BiSeries::from_terms(
        [
            (Exps::new(int(0), int(0), 0), int(1)),
            (Exps::new(int(0), int(-2), 0), int(-1)),
        ],
        int(3),
    )
    .unwrap();
    assert!(one_minus_z.inv(None).is_err());
}

#[test]
fn constant_term_extraction() {
    let w = |k: i64, c: i64| (Exps::new(int(0), int(0), k), int(c));
    let s = BiSeries::from_terms([w(1, 1), w(0, 3), w(-1, 1)], int(1)).unwrap();
    assert_eq!(s.ct_w(), BiSeries::monomial(int(3), int(0), int(0), 0, int(1)));

    let diff = BiSeries::from_terms([w(1, 1), w(-1, -1)], int(1)).unwrap();
    let w_inv = BiSeries::from_terms([w(-1, 1)], int(1)).unwrap();
    let ct = diff.mul(&w_inv).unwrap().ct_w();
    assert_eq!(ct, BiSeries::one(int(1)));
}

#[test]
fn incongruent_q_exponents_cannot_be_added() {
    let a = BiSeries::monomial(int(1), rat(1, 2), int(0), 0, int(3));
    let b = BiSeries::monomial(int(1), int(0), int(0), 0, int(3));
    assert!(a.add(&b).is_err());
}

#[test]
fn pochhammer_shift_identity() {
    let order = int(6);
    let floor = int(-12);
    let one_minus = BiSeries::from_terms(
        [
            (Exps::new(int(0), int(0), 0), int(1)),
            (Exps::new(int(0), int(-2), 0), int(-1)),
        ],
        order.clone(),
    )
    .unwrap();
    let left = one_minus
        .mul(&pochhammer_inv(&[PochArg::new(-2, 0)], &order, &floor).unwrap())
        .unwrap();
    let right = pochhammer_inv(&[PochArg::new(-2, 1)], &order, &floor).unwrap();
    assert_eq!(left.first_difference(&right, -12, 12).unwrap(), None);
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..40, 1i64..20).prop_map(|(n, d)| rat(n, d))
}

fn small_series() -> impl Strategy<Value = BiSeries> {
    proptest::collection::vec((0i64..5, -3i64..4, -5i64..6), 1..6).prop_map(|terms| {
        let mut s = BiSeries::one(int(5));
        for (q, z, c) in terms {
            s.add_term(Exps::new(int(q + 1), int(z), 0), int(c)).unwrap();
        }
        s
    })
}

fn cyclo_element(order: u32) -> impl Strategy<Value = Cyclo> {
    proptest::collection::vec((-5i64..6, 0i64..8), 1..4).prop_map(move |parts| {
        parts.into_iter().fold(Cyclo::zero(order), |acc, (c, k)| {
            &acc + &Cyclo::root_pow(order, k).scale(&int(c))
        })
    })
}

proptest! {
    #[test]
    fn rat_field_laws(a in small_rat(), b in small_rat(), c in small_rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        let text = rat::to_text(&a);
        prop_assert_eq!(rat::parse(&text).unwrap(), a.clone());
        prop_assert_eq!(rat::to_text(&rat::parse(&text).unwrap()), text);
    }

    #[test]
    fn roots_have_order_two_p(p in 1u32..=4, k in -8i64..8) {
        let n = 2 * p;
        let q = Cyclo::root_pow(n, 1);
        prop_assert!(q.pow(n as i64).unwrap().is_one());
        prop_assert_eq!(q.pow(p as i64).unwrap(), Cyclo::from_int(n, -1));
        let x = Cyclo::root_pow(n, k);
        prop_assert!((&x * &x.inverse().unwrap()).is_one());
    }

    #[test]
    fn nonzero_cyclo_elements_invert(x in cyclo_element(6)) {
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inverse().unwrap()).is_one());
    }

    #[test]
    fn series_product_commutes_and_associates(
        a in small_series(), b in small_series(), c in small_series()
    ) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn series_inverse_is_two_sided(a in small_series()) {
        let inv = a.inv(None).unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), BiSeries::one(int(5)));
        prop_assert_eq!(inv.mul(&a).unwrap(), BiSeries::one(int(5)));
    }
}
