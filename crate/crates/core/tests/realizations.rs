use proptest::prelude::*;
use voa_forge::arith::rat::{int, rat, Rat};
use voa_forge::fock::{conf_weight, nth_product, FockState};
use voa_forge::lattice::QuadSpace;
use voa_forge::realizations::{
    apply_g, bold_uv, build, diagram_check, g_vector, normal, omega, p1_generators, q_plus, strong_generator,
    verify_embedding, wakimoto, Direction, Realization, REALIZATION_NAMES,
};

fn v3(u: i64, v: i64, a: i64) -> Vec<Rat> {
    vec![int(u), int(v), int(a)]
}

fn with_ope_table(name: &str) -> bool {
    !matches!(name, "strong-generators" | "p1-generators")
}

#[test]
fn every_realization_verifies() {
    for name in REALIZATION_NAMES.iter().filter(|n| with_ope_table(n)) {
        for p in 1..=3 {
            let r = build(name, p).unwrap();
            let report = verify_embedding(&r).unwrap();
            let failed: Vec<_> = report.entries.iter().filter(|e| !e.ok).collect();
            assert!(report.pass, "{name} at p={p}: {failed:?}");
        }
    }
}

#[test]
fn unknown_label_is_refused() {
    assert!(build("virasoro-2", 2).is_err());
}

#[test]
fn wakimoto_level_at_p_two() {
    let report = verify_embedding(&wakimoto(2).unwrap()).unwrap();
    assert!(report.pass);
    assert_eq!(report.level.as_deref(), Some("-3/2"));
    assert_eq!(report.central_charge.as_deref(), Some("-9/1"));
}

#[test]
fn wakimoto_e_is_beta() {
    let w = wakimoto(2).unwrap();
    assert_eq!(w.image("e").unwrap(), &FockState::exp(w.space.clone(), v3(1, 1, 0)));
}

#[test]
fn phi_verifies_and_closes_the_diagram() {
    let report = verify_embedding(&build("phi", 2).unwrap()).unwrap();
    assert!(report.pass);
    for entry in diagram_check(2).unwrap() {
        assert!(entry.ok, "{entry:?}");
    }
}

#[test]
fn omega_at_p_three() {
    let report = verify_embedding(&omega(3).unwrap()).unwrap();
    assert!(report.pass);
    assert_eq!(report.central_charge.as_deref(), Some("-7/1"));
}

#[test]
fn singlet_w_generator() {
    let m = build("m2", 1).unwrap();
    let sp = m.space.clone();
    let u = FockState::generator(sp, "u", 1).unwrap();
    let du = u.translate();
    let expected = normal(&u, &normal(&u, &u).unwrap())
        .unwrap()
        .scale(&rat(1, 3))
        .add(&normal(&u, &du).unwrap().scale(&rat(1, 2)))
        .unwrap()
        .add(&du.translate().scale(&rat(1, 12)))
        .unwrap();
    assert_eq!(m.image("W").unwrap(), &expected);
}

#[test]
fn x00_is_the_negative_root_exponential() {
    for p in 1..=3u32 {
        let x00 = strong_generator(0, 0, p).unwrap();
        let sp = QuadSpace::main(p);
        assert_eq!(x00, FockState::exp(sp, v3(0, 0, -(p as i64))));
        let l = wakimoto(p).unwrap().image("L").unwrap().clone();
        assert_eq!(conf_weight(&x00, &l).unwrap(), int(2 * p as i64));
    }
    assert!(strong_generator(3, 0, 2).is_err());
}

#[test]
fn screening_raises_three_times_to_zero() {
    for p in 1..=3u32 {
        let mut s = strong_generator(0, 0, p).unwrap();
        for j in 0..3 {
            assert!(!s.is_zero(), "Q+^{j} vanished early at p={p}");
            s = q_plus(&s, p).unwrap();
        }
        assert!(s.is_zero(), "p={p}");
    }
}

#[test]
fn g_on_lattice_states() {
    for p in 1..=3u32 {
        let pr = p as i64;
        let sp = QuadSpace::main(p);
        let root = FockState::exp(sp.clone(), v3(0, 0, pr));
        let image = apply_g(&root, p, Direction::Forward).unwrap();
        assert_eq!(image, FockState::exp(sp.clone(), v3(-1, -1, pr)));
        let beta = FockState::exp(sp.clone(), v3(1, 1, 0));
        assert_eq!(apply_g(&beta, p, Direction::Forward).unwrap(), beta);
    }
}

#[test]
fn g_refuses_momenta_outside_the_domain() {
    let sp = QuadSpace::main(2);
    assert!(apply_g(&FockState::exp(sp.clone(), v3(1, 0, 0)), 2, Direction::Forward).is_err());
    assert!(apply_g(&FockState::exp(sp, v3(0, 0, 1)), 2, Direction::Forward).is_err());
}

#[test]
fn g_moves_the_screening_charges() {
    for p in 1..=3u32 {
        let pr = p as i64;
        assert_eq!(g_vector(&v3(1, 1, pr), p, Direction::Forward), v3(0, 0, pr));
        let (bold_u, _) = bold_uv(p);
        let expected = vec![bold_u[0].clone(), bold_u[1].clone(), rat(1, 2)];
        assert_eq!(g_vector(&v3(1, 0, 0), p, Direction::Forward), expected);
    }
}

#[test]
fn g_is_compatible_with_products() {
    for p in 1..=3u32 {
        let w = wakimoto(p).unwrap();
        for (_, a) in &w.images {
            for (_, b) in &w.images {
                for n in 0..3 {
                    let direct = apply_g(&nth_product(a, n, b).unwrap(), p, Direction::Forward).unwrap();
                    let ga = apply_g(a, p, Direction::Forward).unwrap();
                    let gb = apply_g(b, p, Direction::Forward).unwrap();
                    assert_eq!(nth_product(&ga, n, &gb).unwrap(), direct, "p={p} n={n}");
                }
            }
        }
    }
}

#[test]
fn corrupted_image_fails_verification() {
    let mut w = wakimoto(2).unwrap();
    let slot = w.images.iter_mut().find(|(l, _)| l == "h").unwrap();
    slot.1 = slot.1.scale(&int(-1));
    let report = verify_embedding(&w).unwrap();
    assert!(!report.pass);
    assert!(report
        .entries
        .iter()
        .any(|e| !e.ok && (e.left == "h" || e.right == "h")));
}

fn image<'a>(r: &'a Realization, label: &str) -> &'a FockState {
    r.image(label).unwrap()
}

#[test]
fn p_one_generator_identities() {
    let r = p1_generators().unwrap();
    let w = wakimoto(1).unwrap();
    let (e, h, f) = (image(&w, "e"), image(&w, "h"), image(&w, "f"));
    let hh = normal(h, h).unwrap();
    let sum = hh
        .scale(&rat(1, 2))
        .add(&normal(e, f).unwrap())
        .unwrap()
        .sub(&h.translate().scale(&rat(1, 2)))
        .unwrap();
    assert_eq!(image(&r, "L1").add(image(&r, "L2")).unwrap(), sum);
    assert_eq!(
        image(&r, "L2").sub(image(&r, "L1")).unwrap(),
        image(&r, "x11").scale(&rat(1, 2))
    );
    assert_eq!(
        image(&r, "W2").sub(image(&r, "W1")).unwrap(),
        image(&r, "B").scale(&rat(1, 12))
    );

    let hhh = normal(h, &hh).unwrap();
    let hdh = normal(h, &h.translate()).unwrap();
    let residual = image(&r, "W1")
        .add(image(&r, "W2"))
        .unwrap()
        .sub(&image(&r, "A").scale(&rat(1, 6)))
        .unwrap();
    let expected = hhh.scale(&rat(-2, 3)).add(&hdh.scale(&rat(1, 3))).unwrap();
    assert_eq!(residual, expected);
}

fn lattice_term(p: u32) -> impl Strategy<Value = FockState> {
    let pr = p as i64;
    (
        -2i64..3,
        -2i64..3,
        (-5i64..6, 1i64..4),
        proptest::collection::vec((0usize..3, 1u32..4), 0..3),
    )
        .prop_map(move |(n, k, (c, d), modes)| {
            let sp = QuadSpace::main(p);
            let mut s = FockState::exp(sp, v3(n, n, k * pr)).scale(&rat(c, d));
            for (g, m) in modes {
                s = s.mode(g, -(m as i64));
            }
            s
        })
}

proptest! {
    #[test]
    fn g_inverse_round_trip((p, terms) in (1u32..=3).prop_flat_map(|p| {
        (Just(p), proptest::collection::vec(lattice_term(p), 10))
    })) {
        let s = terms.iter().skip(1).fold(terms[0].clone(), |acc, t| acc.add(t).unwrap());
        let there = apply_g(&s, p, Direction::Forward).unwrap();
        prop_assert_eq!(apply_g(&there, p, Direction::Inverse).unwrap(), s);
    }
}
