use proptest::prelude::*;
use voa_forge::arith::rat::{int, rat, Rat};
use voa_forge::fock::{enumerate_graded, FockState};
use voa_forge::lattice::QuadSpace;
use voa_forge::linalg::rank;
use voa_forge::realizations::{fms, wakimoto};
use voa_forge::screening::{
    affine_conformal, affine_module, format_table, kernel_basis, kernel_dim_table, named_screening, Screening,
    SCREENING_NAMES,
};
use voa_forge::suite::kernel_character_comparison;

fn screenings(labels: &[&str], p: u32) -> Vec<Screening> {
    labels.iter().map(|l| named_screening(l, p).unwrap()).collect()
}

fn kernel_dim(labels: &[&str], p: u32, h: i64, conf: i64) -> usize {
    let l = affine_conformal(p).unwrap();
    kernel_basis(&screenings(labels, p), &affine_module(p), &int(h), &int(conf), &l)
        .unwrap()
        .dim()
}

#[test]
fn long_screening_kills_the_affine_generators() {
    for p in 1..=3 {
        let q = named_screening("Qplus", p).unwrap();
        let w = wakimoto(p).unwrap();
        for g in ["e", "h", "f"] {
            assert!(q.apply(w.image(g).unwrap()).unwrap().is_zero(), "{g} at p={p}");
        }
    }
}

#[test]
fn fms_screening_kills_beta_and_gamma() {
    for p in 1..=3 {
        let q = named_screening("QFMS", p).unwrap();
        let bg = fms(p).unwrap();
        for g in ["beta", "gamma"] {
            assert!(q.apply(bg.image(g).unwrap()).unwrap().is_zero(), "{g} at p={p}");
        }
    }
}

#[test]
fn multivalued_screening_is_refused() {
    let q = named_screening("Qplus", 2).unwrap();
    let s = FockState::exp(QuadSpace::main(2), vec![rat(1, 2), int(0), int(0)]);
    let err = q.apply(&s).unwrap_err();
    assert!(err.to_string().contains("momentum"), "{err}");
}

#[test]
fn kernel_dimensions_at_p_two() {
    assert_eq!(kernel_dim(&["Qminus", "QFMS"], 2, 0, 0), 1);
    assert_eq!(kernel_dim(&["Qminus", "QFMS"], 2, 0, 1), 1);
}

#[test]
fn kernel_at_p_one_contains_e() {
    assert_eq!(kernel_dim(&["S1", "S2"], 1, 2, 1), 1);
}

#[test]
fn kernel_tables_match_characters() {
    let p2 = kernel_character_comparison(2, &["Qminus", "QFMS"], 4, (-4, 4)).unwrap();
    assert!(p2.pass, "{:?}", p2.mismatches);
    let p1 = kernel_character_comparison(1, &["S1", "S2"], 4, (-4, 4)).unwrap();
    assert!(p1.pass, "{:?}", p1.mismatches);
}

#[test]
fn empty_window_gives_empty_table() {
    let l = affine_conformal(2).unwrap();
    let table = kernel_dim_table(
        &screenings(&["Qminus", "QFMS"], 2),
        &affine_module(2),
        &int(3),
        (1, 0),
        &l,
    )
    .unwrap();
    assert!(table.is_empty());
    assert_eq!(format_table(&table).lines().count(), 1);
}

#[test]
fn screening_names_and_preconditions() {
    assert!(named_screening("Qminus", 1).is_err());
    assert!(named_screening("S1", 2).is_err());
    assert!(named_screening("Qsideways", 2).is_err());
    for name in SCREENING_NAMES {
        let p = if name.starts_with('S') && name.len() == 2 { 1 } else { 2 };
        assert!(named_screening(name, p).is_ok(), "{name}");
    }
}

#[test]
fn kernel_dimension_does_not_depend_on_basis_order() {
    let p = 2;
    let l = affine_conformal(p).unwrap();
    let module = affine_module(p);
    let ops = screenings(&["Qminus", "QFMS"], p);
    for (h, conf) in [(0, 1), (0, 2), (2, 2), (-2, 3)] {
        let (h, conf) = (int(h), int(conf));
        let expected = kernel_basis(&ops, &module, &h, &conf, &l).unwrap().dim();
        let mut basis = enumerate_graded(&module, &h, &conf, &l).unwrap().basis;
        basis.reverse();
        let images: Vec<FockState> = basis
            .iter()
            .flat_map(|m| {
                let state = FockState::from_terms(module.space.clone(), [(m.clone(), int(1))]);
                ops.iter().map(move |s| s.apply(&state).unwrap())
            })
            .collect();
        let mut targets: Vec<_> = images.iter().flat_map(|s| s.terms().map(|(m, _)| m.clone())).collect();
        targets.sort();
        targets.dedup();
        let cols = basis.len();
        let mut matrix = Vec::new();
        for (k, _) in ops.iter().enumerate() {
            for t in &targets {
                let row: Vec<Rat> = (0..cols).map(|j| images[j * ops.len() + k].coeff(t)).collect();
                matrix.push(row);
            }
        }
        assert_eq!(cols - rank(&matrix), expected);
    }
}

#[test]
fn kernel_vectors_are_annihilated() {
    let p = 2;
    let l = affine_conformal(p).unwrap();
    let ops = screenings(&["Qminus", "QFMS"], p);
    let k = kernel_basis(&ops, &affine_module(p), &int(0), &int(2), &l).unwrap();
    assert!(k.dim() > 0);
    for v in &k.vectors {
        for s in &ops {
            assert!(s.apply(v).unwrap().is_zero());
        }
    }
}

fn affine_state(p: u32) -> impl Strategy<Value = FockState> {
    let pr = p as i64;
    (
        -2i64..3,
        -1i64..2,
        proptest::collection::vec((0usize..3, 1u32..3), 0..3),
    )
        .prop_map(move |(n, m, modes)| {
            let mut s = FockState::exp(QuadSpace::main(p), vec![int(n), int(n), int(m * pr)]);
            for (g, l) in modes {
                s = s.mode(g, -(l as i64));
            }
            s
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn long_and_fms_screenings_commute((p, s) in (1u32..=2).prop_flat_map(|p| (Just(p), affine_state(p)))) {
        let q = named_screening("Qplus", p).unwrap();
        let fms = named_screening("QFMS", p).unwrap();
        let one = q.apply(&fms.apply(&s).unwrap()).unwrap();
        let other = fms.apply(&q.apply(&s).unwrap()).unwrap();
        prop_assert_eq!(one, other);
    }

    #[test]
    fn screenings_commute_with_orthogonal_modes(
        (p, s) in (1u32..=2).prop_flat_map(|p| (Just(p), affine_state(p))),
        n in -3i64..4,
        x in -3i64..4,
        y in -3i64..4
    ) {
        let q = named_screening("Qplus", p).unwrap();
        let orthogonal = vec![int(x), int(y), rat(y - x, 2)];
        let charge = q.charge().coeffs().to_vec();
        prop_assert_eq!(s.space().pair_coeffs(&orthogonal, &charge), int(0));
        let left = q.apply(&s.mode_vec(&orthogonal, n)).unwrap();
        let right = q.apply(&s).unwrap().mode_vec(&orthogonal, n);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn screenings_shift_the_bigrading(
        label in prop_oneof![Just("Qplus"), Just("QFMS"), Just("Qminus")],
        h in -2i64..3,
        conf in 0i64..3
    ) {
        let p = 2;
        let l = affine_conformal(p).unwrap();
        let module = affine_module(p);
        let q = named_screening(label, p).unwrap();
        let (dh, dc) = q.bidegree(&module, &l);
        let basis = enumerate_graded(&module, &int(h), &int(conf), &l).unwrap().basis;
        for m in basis {
            let state = FockState::from_terms(module.space.clone(), [(m, int(1))]);
            for (tm, _) in q.apply(&state).unwrap().terms() {
                prop_assert_eq!(module.h_weight(&tm.momentum), int(h) + &dh);
                prop_assert_eq!(l.monomial_weight(tm), int(conf) + &dc);
            }
        }
    }
}
