use std::sync::Arc;

use proptest::prelude::*;
use voa_forge::arith::rat::{factorial, int, rat, Rat};
use voa_forge::fock::{
    conf_weight, enumerate_graded, nth_product, ope_singular, spectral_flow_weight, vertex_coeff, ConformalVector,
    FockState, ModuleSpec,
};
use voa_forge::lattice::QuadSpace;
use voa_forge::realizations::{bold_uv, m2, omega, phi, proportionality, wakimoto};
use voa_forge::screening::{affine_conformal, affine_module};

fn v3(u: i64, v: i64, a: i64) -> Vec<Rat> {
    vec![int(u), int(v), int(a)]
}

fn alpha_line() -> Arc<QuadSpace> {
    Arc::new(QuadSpace::diagonal(&[("alpha", int(2))]).unwrap())
}

fn x00(n: i64, p: u32) -> FockState {
    FockState::exp(QuadSpace::main(p), v3(0, 0, -n * p as i64))
}

#[test]
fn heisenberg_annihilation_returns_pairing() {
    let sp = alpha_line();
    let a = FockState::generator(sp.clone(), "alpha", 1).unwrap();
    assert_eq!(a.mode(0, 1), FockState::vacuum(sp).scale(&int(2)));
}

#[test]
fn zero_mode_measures_momentum() {
    let sp = QuadSpace::main(2);
    let root = FockState::exp(sp, v3(0, 0, 2));
    assert_eq!(root.mode_vec(&v3(0, 0, 2), 0), root.scale(&int(4)));
}

#[test]
fn annihilators_kill_the_vacuum() {
    let vac = FockState::vacuum(QuadSpace::main(3));
    for g in 0..3 {
        for n in 1..4 {
            assert!(vac.mode(g, n).is_zero());
        }
    }
}

#[test]
fn null_exponential_returns_vacuum() {
    let sp = QuadSpace::main(2);
    let e = FockState::exp(sp.clone(), v3(1, 1, 0));
    let inverse = FockState::exp(sp.clone(), v3(-1, -1, 0));
    let out = vertex_coeff(&e, &int(0), &inverse).unwrap();
    let vac = FockState::vacuum(sp);
    assert!(out == vac || out == vac.scale(&int(-1)), "{}", out.pretty());
}

#[test]
fn fundamental_nilpotency() {
    for p in 1..=4 {
        let x1 = x00(1, p);
        assert!(nth_product(&x1, -1, &x1).unwrap().is_zero(), "p={p}");
    }
}

#[test]
fn exponential_on_vacuum() {
    let sp = QuadSpace::main(2);
    let root = FockState::exp(sp.clone(), v3(0, 0, 2));
    let out = nth_product(&root, -1, &FockState::vacuum(sp)).unwrap();
    assert_eq!(out, root);
}

#[test]
fn non_integral_power_is_an_error() {
    let sp = QuadSpace::main(2);
    let a = FockState::exp(sp.clone(), vec![int(0), int(0), rat(1, 2)]);
    let b = FockState::exp(sp, vec![int(0), int(0), int(1)]);
    assert!(vertex_coeff(&a, &int(0), &b).is_err());
}

#[test]
fn vacuum_axiom() {
    let sp = QuadSpace::main(2);
    let vac = FockState::vacuum(sp.clone());
    let b = FockState::generator(sp.clone(), "a", 2)
        .unwrap()
        .with_momentum(&v3(1, 1, 2))
        .unwrap();
    for n in -3..4 {
        let out = nth_product(&vac, n, &b).unwrap();
        if n == -1 {
            assert_eq!(out, b);
        } else {
            assert!(out.is_zero(), "n={n}");
        }
    }
}

#[test]
fn heisenberg_double_pole() {
    let sp = alpha_line();
    let a = FockState::generator(sp.clone(), "alpha", 1).unwrap();
    assert_eq!(nth_product(&a, 1, &a).unwrap(), FockState::vacuum(sp).scale(&int(2)));
}

#[test]
fn inductive_construction_of_x00() {
    let p = 2;
    let x1 = x00(1, p);
    let out = nth_product(&x1, -2 * p as i64 - 1, &x1).unwrap();
    let ratio = proportionality(&out, &x00(2, p)).expect("proportional to x_(2,00)");
    assert_ne!(ratio, int(0));
}

fn virasoro_shape(l: &FockState, c: &Rat) {
    let poles = ope_singular(l, l, 5).unwrap();
    let vac = FockState::vacuum(l.space().clone());
    assert_eq!(poles[3], vac.scale(&(c / int(2))));
    assert!(poles[2].is_zero());
    assert_eq!(poles[1], l.scale(&int(2)));
    assert_eq!(poles[0], l.translate());
    assert!(poles[4].is_zero());
}

#[test]
fn sugawara_central_charge_at_p_two() {
    let w = wakimoto(2).unwrap();
    virasoro_shape(w.image("L").unwrap(), &int(-9));
}

#[test]
fn minimal_series_central_charge_at_p_two() {
    let o = omega(2).unwrap();
    virasoro_shape(o.image("L").unwrap(), &int(-2));
}

#[test]
fn virasoro_closure_of_every_conformal_vector() {
    for p in 1..=3u32 {
        let pr = p as i64;
        virasoro_shape(wakimoto(p).unwrap().image("L").unwrap(), &int(3 - 6 * pr));
        let c = int(1) - rat(6 * (pr - 1) * (pr - 1), pr);
        virasoro_shape(omega(p).unwrap().image("L").unwrap(), &c);
    }
    virasoro_shape(m2().unwrap().image("L").unwrap(), &int(-2));
}

#[test]
fn singlet_generator_sixth_pole() {
    let m = m2().unwrap();
    let w = m.image("W").unwrap();
    let poles = ope_singular(w, w, 6).unwrap();
    assert_eq!(poles[5], FockState::vacuum(m.space.clone()).scale(&int(-1)));
}

#[test]
fn conformal_weights_under_sugawara() {
    let sp = QuadSpace::main(2);
    let w = wakimoto(2).unwrap();
    let l = w.image("L").unwrap();
    assert_eq!(
        conf_weight(&FockState::exp(sp.clone(), v3(1, 1, 0)), l).unwrap(),
        int(1)
    );
    assert_eq!(conf_weight(&x00(1, 2), l).unwrap(), int(4));
    assert_eq!(conf_weight(&FockState::vacuum(sp.clone()), l).unwrap(), int(0));
    let mixed = FockState::vacuum(sp.clone())
        .add(&FockState::exp(sp, v3(1, 1, 0)))
        .unwrap();
    assert!(conf_weight(&mixed, l).is_err());
}

#[test]
fn spectral_flow_weights() {
    for p in 1..=3u32 {
        let l = ConformalVector::from_state(phi(p).unwrap().image("L").unwrap()).unwrap();
        let sp = QuadSpace::main(p);
        let vac = FockState::vacuum(sp.clone());
        let k = int(-2) + rat(1, p as i64);
        assert_eq!(
            spectral_flow_weight(&[int(0), int(0), int(0)], &vac, &l).unwrap(),
            int(0)
        );
        let (_, bold_v) = bold_uv(p);
        for a in 0..=2i64 {
            for b in -2..=2i64 {
                let x: Vec<Rat> = bold_v
                    .iter()
                    .zip([1, 1, 0])
                    .map(|(v, t)| v * int(a) + int(b * t))
                    .collect();
                let expected = int((1 - a) * b) + &k * int(a * a) / int(4);
                assert_eq!(
                    spectral_flow_weight(&x, &vac, &l).unwrap(),
                    expected,
                    "p={p} a={a} b={b}"
                );
            }
        }
    }
}

#[test]
fn graded_dimensions() {
    let module = affine_module(2);
    let l = affine_conformal(2).unwrap();
    let ground = enumerate_graded(&module, &int(0), &int(0), &l).unwrap();
    assert_eq!(ground.basis.len(), 1);
    let first = enumerate_graded(&module, &int(0), &int(1), &l).unwrap();
    assert!(first.basis.len() >= 2);

    let sp = alpha_line();
    let a = FockState::generator(sp.clone(), "alpha", 1).unwrap();
    let heis = ConformalVector::from_state(&nth_product(&a, -1, &a).unwrap().scale(&rat(1, 4))).unwrap();
    let fock = ModuleSpec {
        space: sp,
        offset: vec![int(0)],
        generators: vec![],
        cartan: vec![int(0)],
        label: "pi alpha".into(),
    };
    assert_eq!(enumerate_graded(&fock, &int(0), &int(2), &heis).unwrap().basis.len(), 2);
}

#[test]
fn unbounded_component_is_detected() {
    let sp = QuadSpace::main(2);
    let l = affine_conformal(2).unwrap();
    let null_line = ModuleSpec {
        space: sp,
        offset: vec![int(0); 3],
        generators: vec![v3(1, 1, 0)],
        cartan: vec![int(0); 3],
        label: "null line".into(),
    };
    assert!(enumerate_graded(&null_line, &int(0), &int(1), &l).is_err());
}

fn even_momentum(p: u32) -> impl Strategy<Value = Vec<Rat>> {
    let p = p as i64;
    (-1i64..2, -1i64..2, -1i64..2).prop_map(move |(i, j, k)| v3(i + 2 * j, i, k * p))
}

fn small_state(p: u32) -> impl Strategy<Value = FockState> {
    (even_momentum(p), proptest::collection::vec((0usize..3, 1u32..3), 0..3)).prop_map(move |(mu, modes)| {
        let sp = QuadSpace::main(p);
        let mut s = FockState::exp(sp, mu);
        for (g, m) in modes {
            s = s.mode(g, -(m as i64));
        }
        s
    })
}

fn tiny_state() -> impl Strategy<Value = FockState> {
    let momenta = prop_oneof![
        Just(v3(0, 0, 0)),
        Just(v3(1, 1, 0)),
        Just(v3(-1, -1, 0)),
        Just(v3(0, 0, 1)),
        Just(v3(0, 0, -1)),
        Just(v3(1, 0, 0)),
    ];
    (momenta, proptest::collection::vec((0usize..3, 1u32..3), 0..2)).prop_map(|(mu, modes)| {
        let mut s = FockState::exp(QuadSpace::main(1), mu);
        for (g, m) in modes {
            s = s.mode(g, -(m as i64));
        }
        s
    })
}

fn parity(s: &FockState) -> i64 {
    let sp = s.space();
    let mu = &s.momenta()[0];
    let norm = sp.pair_coeffs(mu, mu);
    if (norm.to_integer() % 2u8) == 0.into() {
        1
    } else {
        -1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn heisenberg_commutator(
        s in small_state(2), g in 0usize..3, h in 0usize..3, m in -3i64..4, n in -3i64..4
    ) {
        let sp = s.space().clone();
        let left = s.mode(h, n).mode(g, m).sub(&s.mode(g, m).mode(h, n)).unwrap();
        let expected = if m + n == 0 { s.scale(&(sp.gram(g, h) * int(m))) } else { FockState::zero(sp) };
        prop_assert_eq!(left, expected);
    }

    #[test]
    fn skew_symmetry(a in tiny_state(), b in tiny_state(), n in 0i64..3) {
        let left = nth_product(&a, n, &b).unwrap();
        let mut right = FockState::zero(a.space().clone());
        for j in 0..10i64 {
            let term = nth_product(&b, n + j, &a).unwrap();
            let sign = if (n + j + 1) % 2 == 0 { 1 } else { -1 };
            right = right
                .add(&term.translate_n(j as u32).scale(&(int(sign) / factorial(j as u64))))
                .unwrap();
        }
        let swap = if parity(&a) == -1 && parity(&b) == -1 { -1 } else { 1 };
        prop_assert_eq!(left, right.scale(&int(swap)));
    }

    #[test]
    fn borcherds_commutator(
        a in tiny_state(), b in tiny_state(), c in tiny_state(), m in 0i64..2, n in -2i64..2
    ) {
        let swap = if parity(&a) == -1 && parity(&b) == -1 { -1 } else { 1 };
        let ab_c = nth_product(&a, m, &nth_product(&b, n, &c).unwrap()).unwrap();
        let ba_c = nth_product(&b, n, &nth_product(&a, m, &c).unwrap()).unwrap();
        let left = ab_c.sub(&ba_c.scale(&int(swap))).unwrap();
        let mut right = FockState::zero(a.space().clone());
        for j in 0..=m {
            let inner = nth_product(&a, j, &b).unwrap();
            let binom = voa_forge::arith::rat::binomial(m, j);
            right = right.add(&nth_product(&inner, m + n - j, &c).unwrap().scale(&binom)).unwrap();
        }
        prop_assert_eq!(left, right);
    }
}
