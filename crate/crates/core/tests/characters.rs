use std::collections::BTreeMap;

use voa_forge::arith::rat::{int, rat, Rat};
use voa_forge::arith::series::{BiSeries, Exps};
use voa_forge::characters::{
    atiyah_bott_character, character, ct_pipeline_check, decomposition_check, p1_decomposition_check,
    p1_decomposition_with, pochhammer, singlet, weyl_denominator, weyl_simple_check, CharKind, PochArg,
};
use voa_forge::lattice::delta_rs;

const WINDOW: (i64, i64) = (-6, 6);

#[test]
fn pochhammer_in_z_squared_q() {
    let s = pochhammer(&[PochArg::new(2, 1)], &int(3)).unwrap();
    let expected = BiSeries::from_terms(
        [
            (Exps::new(int(0), int(0), 0), int(1)),
            (Exps::new(int(1), int(2), 0), int(-1)),
            (Exps::new(int(2), int(2), 0), int(-1)),
        ],
        int(3),
    )
    .unwrap();
    assert_eq!(s, expected);
    let longer = pochhammer(&[PochArg::new(2, 1)], &int(4)).unwrap();
    assert_eq!(longer.coeff(&int(3), &int(4), 0), int(1));
    assert_eq!(longer.coeff(&int(3), &int(2), 0), int(-1));
}

#[test]
fn empty_pochhammer_is_one() {
    assert_eq!(pochhammer(&[], &int(5)).unwrap(), BiSeries::one(int(5)));
}

#[test]
fn non_convergent_argument_is_refused() {
    assert!(pochhammer(&[PochArg::new(2, 0)], &int(3)).is_err());
    assert!(pochhammer(&[PochArg::new(0, 0)], &int(3)).is_err());
}

#[test]
fn vacuum_simple_character_cancels() {
    let simple = character(&CharKind::SimpleAffine { p: 2, r: 1, s: 1 }, &int(5), WINDOW).unwrap();
    let denominator = weyl_denominator(&int(5)).unwrap().clip(WINDOW.0, WINDOW.1).unwrap();
    assert_eq!(simple.first_difference(&denominator, WINDOW.0, WINDOW.1).unwrap(), None);
}

#[test]
fn leading_exponents() {
    let simple = character(&CharKind::SimpleAffine { p: 2, r: 1, s: 2 }, &int(4), WINDOW).unwrap();
    assert_eq!(simple.valuation(), rat(3, 2));
    assert_eq!(delta_rs(2, 1, 2), rat(3, 2));
    let fock = character(&CharKind::Fock { p: 2, r: 1, s: 1 }, &int(3), WINDOW).unwrap();
    assert_eq!(fock.valuation(), int(0));
    assert_eq!(fock.coeff(&int(0), &int(0), 0), int(1));
}

#[test]
fn invalid_parameters_are_refused() {
    assert!(character(&CharKind::SimpleAffine { p: 2, r: 0, s: 0 }, &int(3), WINDOW).is_err());
    assert!(character(&CharKind::Weyl { p: 2, n: -1 }, &int(3), WINDOW).is_err());
    assert!(CharKind::from_cli("triplet", 2, 1, 1, 0).is_err());
}

#[test]
fn weyl_modules_are_simple() {
    for p in 1..=3 {
        for n in 0..=2 {
            let report = weyl_simple_check(p, n, &int(5), WINDOW).unwrap();
            assert!(report.pass, "p={p} n={n}: {:?}", report.first_difference);
        }
    }
}

#[test]
fn lattice_module_decompositions() {
    for (p, r, s) in [(2, 1, 1), (2, 2, 1), (1, 1, 2)] {
        let report = decomposition_check(p, r, s, &int(4), WINDOW).unwrap();
        assert!(report.pass, "p={p} r={r} s={s}: {:?}", report.first_difference);
    }
}

#[test]
fn p_one_decomposition() {
    let report = p1_decomposition_check(&int(4), (-8, 8)).unwrap();
    assert!(report.pass, "{:?}", report.first_difference);
    assert!(report.terms_compared > 0);
}

#[test]
fn p_one_decomposition_at_order_zero_is_trivial() {
    let report = p1_decomposition_check(&int(0), (-8, 8)).unwrap();
    assert!(report.pass);
}

#[test]
fn perturbed_singlet_character_is_caught() {
    let perturbed = |n: i64, order: &Rat| {
        let ch = singlet(n, order)?;
        if n != 1 {
            return Ok(ch);
        }
        let mut bumped = ch.clone();
        bumped.add_term(Exps::new(int(2), int(0), 0), int(1))?;
        Ok(bumped)
    };
    let report = p1_decomposition_with(&int(4), (-8, 8), perturbed).unwrap();
    assert!(!report.pass);
    let diff = report.first_difference.expect("a discrepancy");
    assert_ne!(diff.left, diff.right);
}

#[test]
fn constant_term_pipeline() {
    let report = ct_pipeline_check(2, 1, 0, 1, &int(4), WINDOW).unwrap();
    assert!(report.pass, "{:?}", report.first_difference);
}

#[test]
fn atiyah_bott_vacuum_sector() {
    let order = int(3);
    let vacuum = character(&CharKind::Weyl { p: 2, n: 0 }, &order, WINDOW).unwrap();
    let sectors = BTreeMap::from([(0, vacuum.clone())]);
    let assembled = atiyah_bott_character(&sectors, &order).unwrap();
    assert_eq!(assembled.ct_w(), vacuum);
}

#[test]
fn atiyah_bott_reproduces_the_ft_algebra() {
    let order = int(3);
    let mut sectors = BTreeMap::new();
    let mut n = 0;
    while delta_rs(2, 1, n + 1) < order {
        sectors.insert(n, character(&CharKind::Weyl { p: 2, n }, &order, WINDOW).unwrap());
        n += 2;
    }
    let assembled = atiyah_bott_character(&sectors, &order).unwrap();
    let ft = character(&CharKind::FtAlgebra { p: 2 }, &order, WINDOW).unwrap();
    assert_eq!(
        assembled.at_w_one().first_difference(&ft, WINDOW.0, WINDOW.1).unwrap(),
        None
    );
    for (&n, ch) in &sectors {
        let coefficient = assembled
            .terms()
            .filter(|(e, _)| e.w == n)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect::<Vec<_>>();
        for (e, c) in coefficient {
            assert_eq!(c, ch.coeff(&e.q, &e.z, 0));
        }
    }
}
