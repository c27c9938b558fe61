use std::sync::Arc;

use proptest::prelude::*;
use voa_forge::arith::rat::int;
use voa_forge::c2::groebner::{groebner, ideal_member, is_groebner, normal_form, s_polynomial};
use voa_forge::c2::poly::{Mono, Poly, PolyRing};
use voa_forge::c2::{
    c2_map, casimir, casimir_check, derivation_nilpotency, f_adjoint, free_field_ring, ideal_equality,
    nilpotency_suite, nilpotent_family, sl2_ring, target_ideal, x_i1, Derivation,
};

fn var(ring: &Arc<PolyRing>, name: &str) -> Poly {
    Poly::var(ring, name).unwrap()
}

fn mono(ring: &Arc<PolyRing>, exps: &[u32]) -> Poly {
    Poly::term(ring, int(1), Mono(exps.to_vec()))
}

#[test]
fn e_maps_to_beta() {
    let e = var(&sl2_ring(), "e");
    assert_eq!(c2_map(&e), var(&free_field_ring(), "beta"));
    assert!(c2_map(&Poly::zero(&sl2_ring())).is_zero());
}

#[test]
fn casimir_image_is_alpha_squared() {
    let alpha = var(&free_field_ring(), "alpha");
    assert_eq!(c2_map(&casimir()), alpha.pow(2));
    for p in 1..=3 {
        let report = casimir_check(p);
        assert!(report.alpha_squared, "p={p}");
        assert!(report.casimir_outside, "p={p}");
        assert!(report.pass, "p={p}: {report:?}");
    }
}

#[test]
fn least_casimir_power_in_the_family_ideal() {
    for p in 1..=2 {
        assert_eq!(casimir_check(p).least_power, Some(2 * p));
    }
}

#[test]
fn monomial_ideal_is_its_own_basis() {
    let r = PolyRing::new(&["x", "y"]);
    let gens = vec![mono(&r, &[2, 0]), mono(&r, &[1, 1])];
    let basis = groebner(&gens);
    assert_eq!(basis, vec![gens[1].clone(), gens[0].clone()]);
    assert!(is_groebner(&basis));
}

#[test]
fn buchberger_adds_the_missing_element() {
    let r = PolyRing::new(&["x", "y"]);
    let (x, y) = (var(&r, "x"), var(&r, "y"));
    let gens = vec![x.mul(&x).sub(&y), x.mul(&y).sub(&Poly::one(&r))];
    assert!(!is_groebner(&gens));
    let basis = groebner(&gens);
    assert!(is_groebner(&basis));
    for g in &gens {
        assert!(ideal_member(g, &basis));
    }
    assert!(ideal_member(&y.mul(&y).sub(&x), &basis));
    assert!(!ideal_member(&x, &basis));
}

#[test]
fn s_polynomial_cancels_leading_terms() {
    let r = PolyRing::new(&["x", "y"]);
    let (x, y) = (var(&r, "x"), var(&r, "y"));
    let f = x.mul(&x).add(&y);
    let g = x.mul(&y).scale(&int(3));
    assert_eq!(s_polynomial(&f, &g), y.mul(&y));
}

#[test]
fn unit_ideal_contains_one() {
    let r = free_field_ring();
    let basis = groebner(&[Poly::one(&r)]);
    assert!(ideal_member(&Poly::one(&r), &basis));
    assert!(ideal_member(&var(&r, "gamma").pow(5), &basis));
}

fn conformal_degrees(f: &Poly) -> Vec<u32> {
    let mut degrees: Vec<u32> = f.terms().map(|(m, _)| m.0[0] + m.0[1]).collect();
    degrees.sort();
    degrees.dedup();
    degrees
}

#[test]
fn family_elements() {
    let r = free_field_ring();
    let alpha = var(&r, "alpha");
    let beta = var(&r, "beta");
    let family = nilpotent_family(1);
    assert_eq!(family[0], beta.mul(&beta).mul(&alpha.pow(2)));
    for p in 1..=3 {
        let family = nilpotent_family(p);
        assert_eq!(family.len(), 5);
        for f in &family {
            assert_eq!(conformal_degrees(f), vec![4 * p], "p={p}: {f}");
        }
        let sl = sl2_ring();
        let (h, e, f) = (var(&sl, "h"), var(&sl, "e"), var(&sl, "f"));
        let combo = c2_map(&h.mul(&h).sub(&e.mul(&f).scale(&int(2))));
        assert_eq!(family[2], combo.mul(&alpha.pow(4 * p - 2)), "p={p}");
    }
}

#[test]
fn x_i1_are_alpha_multiples() {
    let r = free_field_ring();
    let alpha = var(&r, "alpha");
    for p in 1..=3 {
        for x in x_i1(p) {
            let basis = groebner(&[alpha.pow(2 * p - 1)]);
            assert!(ideal_member(&x, &basis));
        }
    }
}

#[test]
fn family_generates_the_target_ideal() {
    for p in 1..=2 {
        let report = ideal_equality(p);
        assert!(report.family_in_target, "p={p}");
        assert!(report.target_in_family, "p={p}");
        assert!(report.criterion_holds, "p={p}");
        assert!(report.pass, "p={p}: {report:?}");
    }
}

#[test]
fn target_ideal_membership() {
    for p in 1..=2 {
        let r = free_field_ring();
        let basis = groebner(&nilpotent_family(p));
        assert!(ideal_member(&var(&r, "alpha").pow(4 * p), &basis));
        assert!(!ideal_member(&var(&r, "alpha").pow(4 * p - 1), &basis));
        for g in target_ideal(p) {
            assert!(ideal_member(&g, &basis));
        }
    }
}

#[test]
fn euler_derivation_on_a_line() {
    let r = PolyRing::new(&["t"]);
    let t = var(&r, "t");
    let d = Derivation::new(vec![t.clone()]);
    let report = derivation_nilpotency(&[t.pow(2)], &d, &t, 2).unwrap();
    assert!(report.pass);
    assert_eq!(report.exponent, 2);
}

#[test]
fn element_outside_the_ideal_is_refused() {
    let r = PolyRing::new(&["t"]);
    let t = var(&r, "t");
    let d = Derivation::new(vec![t.clone()]);
    assert!(derivation_nilpotency(&[t.pow(2)], &d, &t, 1).is_err());
}

#[test]
fn non_preserving_derivation_is_refused() {
    let r = PolyRing::new(&["t"]);
    let t = var(&r, "t");
    let d = Derivation::new(vec![Poly::one(&r)]);
    let err = derivation_nilpotency(&[t.pow(2)], &d, &t, 2).unwrap_err();
    assert!(err.to_string().contains("preserve"), "{err}");
}

#[test]
fn f_adjoint_nilpotency() {
    for p in 1..=2 {
        let reports = nilpotency_suite(p).unwrap();
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(|r| r.pass), "p={p}");
    }
    let d = f_adjoint();
    let r = free_field_ring();
    let (alpha, beta, gamma) = (var(&r, "alpha"), var(&r, "beta"), var(&r, "gamma"));
    assert_eq!(d.apply(&beta), beta.mul(&gamma).scale(&int(2)).add(&alpha));
    assert!(d.apply(&alpha).is_zero());
}

fn poly_in_xy() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((0u32..4, 0u32..4, -5i64..6), 1..5).prop_map(|terms| {
        let r = PolyRing::new(&["x", "y"]);
        terms.into_iter().fold(Poly::zero(&r), |acc, (i, j, c)| {
            acc.add(&Poly::term(&r, int(c), Mono(vec![i, j])))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn computed_bases_satisfy_the_criterion(gens in proptest::collection::vec(poly_in_xy(), 1..4)) {
        let basis = groebner(&gens);
        prop_assert!(is_groebner(&basis));
        for g in &gens {
            prop_assert!(ideal_member(g, &basis));
        }
        prop_assert_eq!(groebner(&basis), basis);
    }

    #[test]
    fn normal_forms_are_canonical(gens in proptest::collection::vec(poly_in_xy(), 1..3), f in poly_in_xy(), k in poly_in_xy()) {
        let basis = groebner(&gens);
        let nf = normal_form(&f, &basis);
        prop_assert_eq!(normal_form(&nf, &basis), nf.clone());
        let shifted = f.add(&k.mul(&gens[0]));
        prop_assert_eq!(normal_form(&shifted, &basis), nf);
    }
}
