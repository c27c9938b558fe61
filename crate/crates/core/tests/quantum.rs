use std::sync::Arc;

use proptest::prelude::*;
use voa_forge::arith::cyclo::Cyclo;
use voa_forge::quantum::checks::all_words;
use voa_forge::quantum::morphism::uqh_to_target;
use voa_forge::quantum::relations_report;
use voa_forge::quantum::{
    braiding_check, braiding_suite, check_morphism, expand_super_serre, f_map, fg_report, g_map, replacement_check,
    strategy_agreement, twisted_coproduct_check, uqh_to_a, NCExpr, Presentation, Strategy as Rewriting, Variant,
    Verdict, DEFAULT_MAX_STEPS,
};

const BUDGET: usize = DEFAULT_MAX_STEPS;

fn pres(variant: Variant, p: u32) -> Presentation {
    Presentation::build(variant, p).unwrap()
}

fn normal(pres: &Presentation, e: &NCExpr) -> NCExpr {
    let r = pres.reduce(e, BUDGET);
    assert!(r.complete, "budget exhausted on {}", pres.render(e));
    r.normal
}

fn named(pres: &Presentation, names: &[&str]) -> NCExpr {
    pres.named(names).unwrap()
}

#[test]
fn linking_relation_on_the_diagonal() {
    for (variant, p) in [
        (Variant::A, 2),
        (Variant::A, 3),
        (Variant::S, 1),
        (Variant::S, 2),
        (Variant::S, 3),
    ] {
        let pr = pres(variant, p);
        let lhs = normal(&pr, &named(&pr, &["x1*", "x1"]));
        let expected = named(&pr, &["x1", "x1*"])
            .scale(&pr.braiding()[0][0])
            .add(&NCExpr::one(pr.order()))
            .sub(&named(&pr, &["K1", "K1"]));
        assert_eq!(lhs, expected, "{variant} p={p}: {}", pr.render(&lhs));
    }
}

#[test]
fn linking_rendering_at_p_three() {
    let pr = pres(Variant::A, 3);
    let lhs = normal(&pr, &named(&pr, &["x1*", "x1"]));
    assert_eq!(pr.render(&lhs), "(-1 + q)*x1*x1* + (-1)*K1*K1 + 1");
}

#[test]
fn off_diagonal_linking_has_no_cartan_term() {
    let pr = pres(Variant::A, 3);
    let lhs = normal(&pr, &named(&pr, &["x2*", "x1"]));
    let expected = named(&pr, &["x1", "x2*"]).scale(&pr.linking()[1][0]);
    assert_eq!(lhs, expected);
}

#[test]
fn weight_conjugation() {
    let pr = pres(Variant::A, 3);
    let conj = normal(&pr, &named(&pr, &["K1", "x1", "K1^-1"]));
    assert_eq!(conj, named(&pr, &["x1"]).scale(&pr.q(2)));
    let conj = normal(&pr, &named(&pr, &["K1", "x2", "K1^-1"]));
    assert_eq!(conj, named(&pr, &["x2"]).scale(&pr.q(-1)));
    let parity = normal(&pr, &named(&pr, &["K0", "x2", "K0"]));
    assert_eq!(parity, named(&pr, &["x2"]).scale(&Cyclo::from_int(pr.order(), -1)));
}

#[test]
fn odd_generators_square_to_zero() {
    for (variant, p) in [(Variant::A, 2), (Variant::A, 3), (Variant::S, 1), (Variant::S, 3)] {
        let pr = pres(variant, p);
        assert!(normal(&pr, &named(&pr, &["x2", "x2"])).is_zero());
        assert!(normal(&pr, &named(&pr, &["x2*", "x2*"])).is_zero());
    }
}

#[test]
fn variant_s_at_p_one() {
    let pr = pres(Variant::S, 1);
    let labels: Vec<&str> = pr.relations().iter().map(|r| r.label.as_str()).collect();
    for wanted in ["raising x1^2", "raising x2^2", "raising (x1 x2 + q^-1 x2 x1)^1"] {
        assert!(labels.contains(&wanted), "{wanted} missing from {labels:?}");
    }
    assert_eq!(pr.q(-1), Cyclo::from_int(2, -1));
    let sum = named(&pr, &["x1", "x2"]).add(&named(&pr, &["x2", "x1"]).scale(&pr.q(-1)));
    assert!(normal(&pr, &sum).is_zero());
}

#[test]
fn variant_a_at_p_three() {
    let pr = pres(Variant::A, 3);
    assert!(normal(&pr, &named(&pr, &["x1", "x1", "x1"])).is_zero());
    let qq = &pr.q(1) + &pr.q(-1);
    let serre = named(&pr, &["x1", "x1", "x2"])
        .sub(&named(&pr, &["x1", "x2", "x1"]).scale(&qq))
        .add(&named(&pr, &["x2", "x1", "x1"]));
    assert!(normal(&pr, &serre).is_zero());
    assert!(!normal(&pr, &named(&pr, &["x1", "x1"])).is_zero());
}

#[test]
fn presentation_preconditions() {
    assert!(Presentation::build(Variant::A, 1).is_err());
    assert!(Presentation::build(Variant::S, 0).is_err());
    assert_eq!(pres(Variant::Uqh, 1).variant(), Variant::S);
    assert!(Variant::parse("b").is_err());
    assert!(pres(Variant::A, 2).letter("E1").is_err());
}

#[test]
fn braiding_at_p_two() {
    let pr = pres(Variant::A, 2);
    let q = |k| pr.q(k);
    assert_eq!(q(2), Cyclo::from_int(4, -1));
    let b = pr.braiding();
    assert_eq!(b[0][0], q(2));
    assert_eq!(b[1][1], Cyclo::from_int(4, -1));
    assert_eq!(b[0][1], q(-1));
    assert_eq!(&b[0][1] * &b[1][0], q(-2));
}

#[test]
fn braiding_matches_cartan_data() {
    for p in 1..=3 {
        for check in braiding_suite(p).unwrap() {
            assert!(check.pass, "{check:?}");
        }
    }
    assert!(braiding_check(Variant::A, 1).is_err());
}

#[test]
fn super_serre_expansion() {
    for p in 1..=4 {
        let report = expand_super_serre(p);
        assert!(report.pass, "{report:?}");
        assert_eq!(report.lhs, report.rhs);
    }
}

#[test]
fn degenerate_replacement_at_p_two() {
    let report = replacement_check(BUDGET).unwrap();
    assert!(report.cubic_trivial);
    assert!(report.squares_alone_infinite);
    assert_eq!(report.nichols_dimension, 8);
    assert!(report.pass, "{report:?}");
}

#[test]
fn presentations_are_confluent() {
    for (variant, p) in [
        (Variant::A, 2),
        (Variant::A, 3),
        (Variant::S, 1),
        (Variant::S, 2),
        (Variant::Uqh, 3),
    ] {
        let report = relations_report(variant, p, BUDGET).unwrap();
        assert_eq!(
            report.verdict,
            Verdict::Pass,
            "{variant} p={p}: {:?}",
            report.unresolved
        );
    }
}

#[test]
fn f_and_g_are_inverse_isomorphisms() {
    let report = fg_report(3, BUDGET).unwrap();
    assert_eq!(report.f.verdict, Verdict::Pass);
    assert_eq!(report.g.verdict, Verdict::Pass);
    assert_eq!(report.inverse.verdict, Verdict::Pass);
    assert!(report
        .inverse
        .round_trips
        .iter()
        .any(|t| t.generator == "K1" && t.image == "K1"));
    assert!(report
        .inverse
        .round_trips
        .iter()
        .any(|t| t.generator == "H1" && t.image == "H1"));
}

#[test]
fn f_and_g_need_p_three() {
    assert!(f_map(2).is_err());
    assert!(g_map(1).is_err());
}

#[test]
fn uqh_maps_onto_variant_a() {
    let map = uqh_to_a(3).unwrap();
    let report = check_morphism(&map, BUDGET);
    assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.relations);
}

#[test]
fn corrupted_linking_constant_is_detected() {
    let honest = pres(Variant::A, 3);
    let wrong = &honest.linking()[0][0] + &Cyclo::one(honest.order());
    let target = Presentation::with_linking_constant(Variant::A, 3, 0, 0, wrong).unwrap();
    let map = uqh_to_target(3, Arc::new(target)).unwrap();
    let report = check_morphism(&map, BUDGET);
    assert_eq!(report.verdict, Verdict::Fail);
    let failed: Vec<_> = report.relations.iter().filter(|r| r.verdict == Verdict::Fail).collect();
    assert!(
        failed
            .iter()
            .any(|r| r.relation.contains("F1") && r.relation.contains("E1")),
        "{failed:?}"
    );
}

#[test]
fn twisted_coproduct_is_compatible() {
    let report = twisted_coproduct_check(&f_map(3).unwrap(), BUDGET).unwrap();
    assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.generators);
}

#[test]
fn exhausted_budget_is_reported() {
    let pr = pres(Variant::A, 3);
    let e = named(&pr, &["x1*", "x1*", "x1", "x1", "K1"]);
    let r = pr.reduce(&e, 1);
    assert!(!r.complete);
    assert_eq!(r.steps, 1);
    let words = vec![vec![2u8, 2, 0, 0]];
    assert_eq!(strategy_agreement(&pr, &words, 1).verdict, Verdict::Inconclusive);
}

#[test]
fn short_words_agree_under_both_strategies() {
    let pr = pres(Variant::S, 2);
    let report = strategy_agreement(&pr, &all_words(&pr, 3), BUDGET);
    assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.disagreements);
}

fn presentation() -> impl Strategy<Value = (Variant, u32)> {
    prop_oneof![
        Just((Variant::A, 2)),
        Just((Variant::A, 3)),
        Just((Variant::S, 1)),
        Just((Variant::S, 3)),
        Just((Variant::Uqh, 3)),
    ]
}

fn word_in(letters: usize) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0u8..letters as u8, 0..=6)
}

fn root_weight(pr: &Presentation, w: &[u8], i: usize) -> i64 {
    w.iter()
        .map(|&l| match l {
            0 | 1 => pr.cartan()[i][l as usize],
            2 | 3 => -pr.cartan()[i][(l - 2) as usize],
            _ => 0,
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn strategies_agree_on_random_words(((variant, p), w) in presentation().prop_flat_map(|vp| {
        let n = Presentation::build(vp.0, vp.1).unwrap().names().len();
        (Just(vp), word_in(n))
    })) {
        let pr = pres(variant, p);
        let e = pr.word(&w);
        let left = pr.reduce_with(&e, BUDGET, Rewriting::Leftmost);
        let right = pr.reduce_with(&e, BUDGET, Rewriting::Rightmost);
        prop_assert!(left.complete && right.complete);
        prop_assert_eq!(left.normal, right.normal);
    }

    #[test]
    fn conjugation_respects_the_grading(((variant, p), w) in presentation().prop_flat_map(|vp| {
        let n = Presentation::build(vp.0, vp.1).unwrap().names().len();
        (Just(vp), word_in(n))
    }), i in 0usize..2) {
        let pr = pres(variant, p);
        let e = pr.word(&w);
        let base = normal(&pr, &e);
        let k = pr.word(&[pr.k()[i]]);
        let kinv = pr.word(&[pr.k_inv()[i]]);
        let conj = normal(&pr, &k.mul(&e).mul(&kinv));
        prop_assert_eq!(conj, base.scale(&pr.q(root_weight(&pr, &w, i))));
        let h = pr.word(&[4 + i as u8]);
        let bracket = normal(&pr, &h.mul(&e).sub(&e.mul(&h)));
        let degree = Cyclo::from_int(pr.order(), root_weight(&pr, &w, i));
        prop_assert_eq!(bracket, base.scale(&degree));
    }
}
