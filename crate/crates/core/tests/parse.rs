use proptest::prelude::*;
use voa_forge::arith::rat::{int, rat, Rat};
use voa_forge::error::Error;
use voa_forge::fock::FockState;
use voa_forge::lattice::QuadSpace;
use voa_forge::parse::{parse_expr, parse_vector};
use voa_forge::realizations::fms;

#[test]
fn beta_state() {
    let sp = QuadSpace::main(2);
    let parsed = parse_expr("e^{u+v}", &sp).unwrap();
    assert_eq!(&parsed, fms(2).unwrap().image("beta").unwrap());
}

#[test]
fn squared_heisenberg_mode() {
    let sp = QuadSpace::super_side_unscaled();
    let parsed = parse_expr("alpha[-1] alpha[-1] e^{0}", &sp).unwrap();
    let a = sp.index_of("alpha").unwrap();
    let expected = FockState::vacuum(sp.clone()).mode(a, -1).mode(a, -1);
    assert_eq!(parsed, expected);
}

#[test]
fn unknown_generator_is_named() {
    let sp = QuadSpace::main(2);
    let err = parse_expr("e^{u+w}", &sp).unwrap_err();
    assert!(
        matches!(err, Error::UnknownGenerator(_) | Error::Parse { .. }),
        "{err:?}"
    );
    assert!(err.to_string().contains("unknown generator w"), "{err}");
}

#[test]
fn syntax_errors_carry_positions() {
    let sp = QuadSpace::main(2);
    match parse_expr("u[-1]\n  v[-1 e^{u}", &sp) {
        Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 8)),
        other => panic!("unexpected {other:?}"),
    }
    assert!(parse_expr("e^{u", &sp).is_err());
    assert!(parse_expr("u[-1] )", &sp).is_err());
}

#[test]
fn vectors_use_sqrtp() {
    let sp = QuadSpace::main(3);
    assert_eq!(parse_vector("sqrtp*alpha", &sp).unwrap(), vec![int(0), int(0), int(3)]);
    assert_eq!(parse_vector("u - v", &sp).unwrap(), vec![int(1), int(-1), int(0)]);
    assert_eq!(
        parse_vector("-alpha/sqrtp", &sp).unwrap(),
        vec![int(0), int(0), int(-1)]
    );
}

#[test]
fn linear_combinations_and_translation() {
    let sp = QuadSpace::main(2);
    let parsed = parse_expr("2*u[-1] - 1/3*T(e^{u+v})", &sp).unwrap();
    let u = FockState::generator(sp.clone(), "u", 1).unwrap().scale(&int(2));
    let t = FockState::exp(sp, vec![int(1), int(1), int(0)])
        .translate()
        .scale(&rat(-1, 3));
    assert_eq!(parsed, u.add(&t).unwrap());
}

fn coefficient() -> impl Strategy<Value = Rat> {
    (-9i64..10, 1i64..5).prop_filter_map("nonzero", |(n, d)| (n != 0).then(|| rat(n, d)))
}

fn term(p: u32) -> impl Strategy<Value = FockState> {
    (
        coefficient(),
        proptest::collection::vec((-3i64..4, 1i64..3), 3),
        proptest::collection::vec((0usize..3, 1u32..4), 0..4),
    )
        .prop_map(move |(c, mu, modes)| {
            let sp = QuadSpace::main(p);
            let momentum: Vec<Rat> = mu.into_iter().map(|(n, d)| rat(n, d)).collect();
            let mut s = FockState::exp(sp, momentum).scale(&c);
            for (g, m) in modes {
                s = s.mode(g, -(m as i64));
            }
            s
        })
}

fn state() -> impl Strategy<Value = FockState> {
    (1u32..=4).prop_flat_map(|p| {
        proptest::collection::vec(term(p), 1..4).prop_map(|terms| {
            terms
                .iter()
                .skip(1)
                .fold(terms[0].clone(), |acc, t| acc.add(t).unwrap())
        })
    })
}

proptest! {
    #[test]
    fn printing_round_trips(s in state()) {
        let text = s.pretty();
        let back = parse_expr(&text, s.space()).unwrap();
        prop_assert_eq!(&back, &s, "{}", text);
        prop_assert_eq!(back.pretty(), text);
    }
}
