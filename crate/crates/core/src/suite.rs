//! The acceptance suite: ten exact criteria, each a list of named checks.
//!
//! Every check is an exact comparison. Errors raised by the engine while a
//! check runs are reported as failures of that check, never skipped.

use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::rat::{int, rat, to_text, Rat};
use crate::c2;
use crate::characters::{character, decomposition_check, p1_decomposition_check, weyl_simple_check, CharKind};
use crate::error::{Error, Result};
use crate::fock::{nth_product, FockState};
use crate::lattice::{a_rs, QuadSpace};
use crate::quantum::{self, Variant};
use crate::realizations::{self, bold_uv, g_vector, proportionality, q_plus, verify_embedding, Direction};
use crate::report::Verdict;
use crate::screening::{affine_conformal, affine_module, kernel_dim_table, named_screening, KernelCell};
use crate::window::{DecompositionClass, OmegaWindow};

/// How much of each criterion to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// `p ≤ 2` and q-order at most 3.
    Quick,
    /// Every parameter named by the criteria.
    Full,
}

impl Profile {
    /// Parses `quick` or `full`.
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }

    fn ps(self, wanted: &[u32]) -> Vec<u32> {
        wanted
            .iter()
            .copied()
            .filter(|&p| self == Profile::Full || p <= 2)
            .collect()
    }

    fn order(self, wanted: i64) -> i64 {
        match self {
            Profile::Full => wanted,
            Profile::Quick => wanted.min(3),
        }
    }
}

/// One named exact check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    /// What was compared.
    pub label: String,
    /// Outcome.
    pub verdict: Verdict,
    /// Computed values or the first disagreement.
    pub detail: String,
}

impl Check {
    fn new(label: impl Into<String>, verdict: Verdict, detail: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            verdict,
            detail: detail.into(),
        }
    }

    fn of(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self::new(label, Verdict::of(pass), detail)
    }
}

/// Outcome of one criterion.
#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    /// Criterion number, 1 to 10.
    pub id: u8,
    /// Short title.
    pub title: &'static str,
    /// Runtime bound in seconds.
    pub limit_seconds: u64,
    /// Measured runtime in milliseconds.
    pub elapsed_ms: u128,
    /// The individual checks in a fixed order.
    pub checks: Vec<Check>,
    /// Combined verdict.
    pub verdict: Verdict,
}

impl CriterionReport {
    /// `true` when the measured runtime stayed under the bound.
    pub fn within_limit(&self) -> bool {
        self.elapsed_ms < u128::from(self.limit_seconds) * 1000
    }

    /// Labels of the checks that did not pass.
    pub fn failures(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.verdict != Verdict::Pass)
            .map(|c| c.label.as_str())
            .collect()
    }
}

/// Outcome of the whole suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    /// Profile used.
    pub profile: Profile,
    /// Criteria in numeric order.
    pub criteria: Vec<CriterionReport>,
    /// Combined verdict.
    pub verdict: Verdict,
}

/// Number, title and runtime bound of every criterion.
pub const CRITERIA: [(u8, &str, u64); 10] = [
    (1, "Wakimoto closure", 10),
    (2, "central charges", 10),
    (3, "inverse reduction diagram", 10),
    (4, "nilpotency identities", 5),
    (5, "kernel equals character", 60),
    (6, "character identities", 30),
    (7, "M(2) structure", 10),
    (8, "C2 algebra and associated variety", 30),
    (9, "quantum checks", 60),
    (10, "weight window", 5),
];

fn guarded(label: String, f: impl FnOnce() -> Result<Check>) -> Check {
    f().unwrap_or_else(|e| Check::new(label, Verdict::Fail, format!("error: {e}")))
}

fn wakimoto_closure(profile: Profile) -> Vec<Check> {
    let mut out = Vec::new();
    for p in profile.ps(&[1, 2, 3]) {
        out.push(guarded(format!("p={p} affine OPE table"), || {
            let rep = verify_embedding(&realizations::wakimoto(p)?)?;
            let expected = to_text(&(int(-2) + rat(1, p as i64)));
            let level = rep.level.clone().unwrap_or_default();
            let bad = rep.entries.iter().filter(|e| !e.ok).count();
            Ok(Check::of(
                format!("p={p} affine OPE table"),
                rep.pass && level == expected,
                format!(
                    "level {level} (expected {expected}), {} products, {bad} mismatches",
                    rep.entries.len()
                ),
            ))
        }));
        for g in ["e", "h", "f", "L"] {
            let label = format!("p={p} Q+ annihilates {g}");
            out.push(guarded(label.clone(), || {
                let w = realizations::wakimoto(p)?;
                let image = q_plus(w.image(g)?, p)?;
                Ok(Check::of(label, image.is_zero(), image.pretty()))
            }));
        }
    }
    out
}

fn central_charges(profile: Profile) -> Vec<Check> {
    let mut out = Vec::new();
    for p in profile.ps(&[1, 2, 3]) {
        let pr = p as i64;
        let cases = [
            ("wakimoto", int(3 - 6 * pr)),
            ("omega", int(1) - rat(6 * (pr - 1) * (pr - 1), pr)),
        ];
        for (name, expected) in cases {
            let label = format!("p={p} {name} central charge");
            out.push(guarded(label.clone(), || {
                let rep = verify_embedding(&realizations::build(name, p)?)?;
                let c = rep.central_charge.clone().unwrap_or_default();
                Ok(Check::of(
                    label,
                    rep.pass && c == to_text(&expected),
                    format!("c = {c}, expected {}", to_text(&expected)),
                ))
            }));
        }
    }
    out
}

fn inverse_diagram(profile: Profile) -> Vec<Check> {
    let mut out = Vec::new();
    for p in profile.ps(&[2, 3]) {
        let label = format!("p={p} g∘wakimoto = phi on e, h, f, L");
        out.push(guarded(label.clone(), || {
            let entries = realizations::diagram_check(p)?;
            let bad: Vec<String> = entries.iter().filter(|e| !e.ok).map(|e| e.generator.clone()).collect();
            Ok(Check::of(label, bad.is_empty(), format!("mismatched: {bad:?}")))
        }));
        let pr = int(p as i64);
        let q_plus_image = g_vector(&[int(1), int(1), pr.clone()], p, Direction::Forward);
        let expected = vec![int(0), int(0), pr];
        out.push(Check::of(
            format!("p={p} g maps the Q+ charge to p·a"),
            q_plus_image == expected,
            format!("{:?}", q_plus_image.iter().map(to_text).collect::<Vec<_>>()),
        ));
        let fms_image = g_vector(&[int(1), int(0), int(0)], p, Direction::Forward);
        let mut expected = bold_uv(p).0;
        expected[2] += rat(1, 2);
        out.push(Check::of(
            format!("p={p} g maps the FMS charge to bold u + a/2"),
            fms_image == expected,
            format!("{:?}", fms_image.iter().map(to_text).collect::<Vec<_>>()),
        ));
    }
    out
}

fn nilpotency_identities() -> Vec<Check> {
    let mut out = Vec::new();
    for p in [1u32, 2] {
        let space = QuadSpace::main(p);
        let pr = int(p as i64);
        let x = |n: i64| FockState::exp(space.clone(), vec![int(0), int(0), -&pr * int(n)]);
        let label = format!("p={p} x00_(-1) x00 = 0");
        out.push(guarded(label.clone(), || {
            let s = nth_product(&x(1), -1, &x(1))?;
            Ok(Check::of(label, s.is_zero(), s.pretty()))
        }));
        let n = 1i64;
        let label = format!("p={p} x_(1,00)_(-2pn-1) x_(n,00) ∝ x_(n+1,00), n={n}");
        out.push(guarded(label.clone(), || {
            let s = nth_product(&x(1), -2 * p as i64 * n - 1, &x(n))?;
            let c = proportionality(&s, &x(n + 1));
            let pass = c.as_ref().is_some_and(|c| !c.is_zero());
            let detail = match c {
                Some(c) => format!("scalar {}", to_text(&c)),
                None => format!("not proportional: {}", s.pretty()),
            };
            Ok(Check::of(label, pass, detail))
        }));
    }
    out
}

/// Kernel dimensions of a pair of screenings against the `FT_p` character.
#[derive(Clone, Debug, Serialize)]
pub struct KernelComparison {
    /// Parameter `p`.
    pub p: u32,
    /// Screenings whose joint kernel was computed.
    pub screenings: Vec<String>,
    /// The kernel dimension table.
    pub cells: Vec<KernelCell>,
    /// Cells whose dimension differs from the character coefficient.
    pub mismatches: Vec<String>,
    /// `true` iff every coefficient agrees.
    pub pass: bool,
}

/// Compares the joint kernel of `screenings` on `Π[0] ⊗ V_{√p A₁}` with the
/// coefficients of `ch FT_p` below `q^order` on the z-window.
pub fn kernel_character_comparison(
    p: u32,
    screenings: &[&str],
    order: i64,
    window: (i64, i64),
) -> Result<KernelComparison> {
    let max_conf = int(order - 1);
    let built = screenings
        .iter()
        .map(|n| named_screening(n, p))
        .collect::<Result<Vec<_>>>()?;
    let module = affine_module(p);
    let l = affine_conformal(p)?;
    let cells = kernel_dim_table(&built, &module, &max_conf, window, &l)?;
    let ft = character(&CharKind::FtAlgebra { p: p as i64 }, &int(order), window)?;
    let mut mismatches = Vec::new();
    for cell in &cells {
        let expected = ft.coeff(&cell.conf_weight, &cell.h_weight, 0);
        if Rat::from_integer(cell.kernel_dim.into()) != expected {
            mismatches.push(format!(
                "(h {}, conf {}) kernel {} character {}",
                to_text(&cell.h_weight),
                to_text(&cell.conf_weight),
                cell.kernel_dim,
                to_text(&expected)
            ));
        }
    }
    for (e, c) in ft.terms() {
        let covered = cells.iter().any(|cell| cell.h_weight == e.z && cell.conf_weight == e.q);
        if e.q <= max_conf && !covered && !c.is_zero() {
            mismatches.push(format!(
                "(h {}, conf {}) missing from the kernel table",
                to_text(&e.z),
                to_text(&e.q)
            ));
        }
    }
    Ok(KernelComparison {
        p,
        screenings: screenings.iter().map(|s| s.to_string()).collect(),
        pass: mismatches.is_empty(),
        cells,
        mismatches,
    })
}

fn kernel_character(profile: Profile) -> Vec<Check> {
    let order = profile.order(4);
    let cases: [(u32, [&str; 2]); 2] = [(2, ["Qminus", "QFMS"]), (1, ["S1", "S2"])];
    cases
        .par_iter()
        .map(|&(p, names)| {
            let label = format!("p={p} Ker {} ∩ Ker {} vs FT_{p} character", names[0], names[1]);
            guarded(label.clone(), || {
                let cmp = kernel_character_comparison(p, &names, order, (-6, 6))?;
                Ok(Check::of(
                    label,
                    cmp.pass,
                    format!("{} cells compared; {}", cmp.cells.len(), cmp.mismatches.join("; ")),
                ))
            })
        })
        .collect()
}

type IdentityJob = Box<dyn Fn() -> Result<crate::characters::IdentityReport> + Send + Sync>;

fn character_identities(profile: Profile) -> Vec<Check> {
    let mut jobs: Vec<(String, IdentityJob)> = Vec::new();
    let window = (-6, 6);
    let weyl_order = int(profile.order(5));
    for p in profile.ps(&[1, 2, 3]) {
        for n in 0..=2 {
            let order = weyl_order.clone();
            jobs.push((
                format!("weyl = simple p={p} n={n}"),
                Box::new(move || weyl_simple_check(p as i64, n, &order, window)),
            ));
        }
    }
    let order = int(profile.order(4));
    for (r, s) in [(1, 1), (2, 1), (1, 2)] {
        let order = order.clone();
        jobs.push((
            format!("x-decomposition p=2 r={r} s={s}"),
            Box::new(move || decomposition_check(2, r, s, &order, window)),
        ));
    }
    jobs.push((
        "p1-decomposition".into(),
        Box::new(move || p1_decomposition_check(&order, window)),
    ));
    jobs.par_iter()
        .map(|(label, job)| {
            guarded(label.clone(), || {
                let rep = job()?;
                let detail = match &rep.first_difference {
                    None => format!("{} terms agree", rep.terms_compared),
                    Some(d) => format!(
                        "first difference at q^{} z^{} w^{}: {} vs {}",
                        d.q, d.z, d.w, d.left, d.right
                    ),
                };
                Ok(Check::of(label.clone(), rep.pass, detail))
            })
        })
        .collect()
}

fn m2_structure() -> Vec<Check> {
    vec![guarded("W·W and Virasoro table of M(2)".into(), || {
        let rep = verify_embedding(&realizations::m2()?)?;
        let bad: Vec<String> = rep
            .entries
            .iter()
            .filter(|e| !e.ok)
            .map(|e| format!("{}_({}){}", e.left, e.n, e.right))
            .collect();
        Ok(Check::of(
            "W·W and Virasoro table of M(2)",
            rep.pass,
            format!("{} products, mismatched: {bad:?}", rep.entries.len()),
        ))
    })]
}

fn c2_checks(profile: Profile) -> Vec<Check> {
    let mut out = Vec::new();
    for p in [1u32, 2] {
        let rep = c2::ideal_equality(p);
        out.push(Check::of(
            format!("p={p} ideal equality"),
            rep.pass,
            format!("basis {:?}", rep.family_basis),
        ));
    }
    for p in profile.ps(&[1, 2, 3]) {
        let rep = c2::casimir_check(p);
        out.push(Check::of(
            format!("p={p} p·Ω = alpha²"),
            rep.alpha_squared,
            rep.image.clone(),
        ));
        out.push(Check::of(
            format!("p={p} Ω nilpotent modulo the ideal"),
            rep.pass,
            format!("least power {:?}", rep.least_power),
        ));
    }
    for p in [1u32, 2] {
        let label = format!("p={p} derivation nilpotency");
        out.push(guarded(label.clone(), || {
            let reps = c2::nilpotency_suite(p)?;
            let bad: Vec<String> = reps.iter().filter(|r| !r.pass).map(|r| r.element.clone()).collect();
            Ok(Check::of(
                label,
                bad.is_empty(),
                format!("{} instances, failing: {bad:?}", reps.len()),
            ))
        }));
    }
    out
}

fn quantum_checks(profile: Profile, max_steps: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for p in profile.ps(&[1, 2, 3]) {
        let label = format!("p={p} braiding and Cartan data");
        out.push(guarded(label.clone(), || {
            let reps = quantum::braiding_suite(p)?;
            let bad: Vec<String> = reps.iter().filter(|r| !r.pass).map(|r| r.variant.to_string()).collect();
            Ok(Check::of(
                label,
                bad.is_empty(),
                format!("variants checked {}, failing {bad:?}", reps.len()),
            ))
        }));
        let rep = quantum::expand_super_serre(p);
        out.push(Check::of(
            format!("p={p} super Serre expansion"),
            rep.pass,
            format!("{} = {}", rep.lhs, rep.rhs),
        ));
    }
    for p in profile.ps(&[3]) {
        let label = format!("p={p} F, G relations and inversion");
        out.push(guarded(label.clone(), || {
            let rep = quantum::fg_report(p, max_steps)?;
            let failing: Vec<String> = rep
                .f
                .relations
                .iter()
                .chain(&rep.g.relations)
                .filter(|r| r.verdict != Verdict::Pass)
                .map(|r| r.relation.clone())
                .chain(
                    rep.inverse
                        .round_trips
                        .iter()
                        .filter(|t| t.verdict != Verdict::Pass)
                        .map(|t| format!("{} on {}", t.composite, t.generator)),
                )
                .collect();
            Ok(Check::new(label, rep.verdict, format!("not passing: {failing:?}")))
        }));
    }
    let label = "p=2 replacement relation active and checked".to_string();
    out.push(guarded(label.clone(), || {
        let rep = quantum::replacement_check(max_steps)?;
        Ok(Check::of(
            label,
            rep.pass,
            format!(
                "cubic trivial {}, replacement active {}, squares alone infinite {}, Nichols dimension {:?}, confluent {}",
                rep.cubic_trivial, rep.replacement_active, rep.squares_alone_infinite, rep.nichols_dimension, rep.confluent
            ),
        ))
    }));
    for (variant, p) in profile
        .ps(&[2, 3])
        .into_iter()
        .map(|p| (Variant::A, p))
        .chain([(Variant::S, 1)])
    {
        let label = format!("{variant} p={p} critical pairs resolve");
        out.push(guarded(label.clone(), || {
            let rep = quantum::relations_report(variant, p, max_steps)?;
            Ok(Check::new(
                label,
                rep.verdict,
                format!("{} pairs, unresolved {:?}", rep.critical_pairs, rep.unresolved),
            ))
        }));
    }
    out
}

fn expected_class(p: i64, r: i64, s: i64, b: &Rat) -> DecompositionClass {
    let hits = |a: Rat| (b + a).is_integer();
    let (x, y) = (hits(a_rs(p, r, s)), hits(a_rs(p, -r, -s)));
    match (r < p, x || y) {
        (true, false) => DecompositionClass::GenericSimple,
        (true, true) => DecompositionClass::GenericReducible,
        (false, false) => DecompositionClass::BoundarySimple,
        (false, true) if s == 1 => DecompositionClass::BoundaryTwoStep,
        (false, true) => DecompositionClass::BoundaryThreeStep,
    }
}

fn weight_window() -> Vec<Check> {
    let mut out = Vec::new();
    for p in 1..=3i64 {
        for r in 1..=p {
            for s in 1..=3i64 {
                let bs = [Rat::zero(), rat(1, 7), -a_rs(p, r, s), -a_rs(p, -r, -s)];
                for b in bs {
                    let label = format!("p={p} r={r} s={s} b={}", to_text(&b));
                    out.push(guarded(label.clone(), || {
                        let w = OmegaWindow::new(p, r, s, b.clone(), -5, 5)?;
                        let brackets = w.bracket_check();
                        let split = w.split_points();
                        let expected = expected_class(p, r, s, &b);
                        let roots_in_window = {
                            let (x, y) = w.roots();
                            w.indices().any(|i| w.b_prime(i) == x || w.b_prime(i) == y)
                        };
                        let splits_consistent = split.splits.is_empty() != roots_in_window;
                        Ok(Check::of(
                            label,
                            brackets.pass && split.class == expected && splits_consistent,
                            format!(
                                "class {} (expected {}), splits {:?}, {}",
                                split.class,
                                expected,
                                split.splits.iter().map(to_text).collect::<Vec<_>>(),
                                split.structure
                            ),
                        ))
                    }));
                }
            }
        }
    }
    out
}

/// Runs criterion `id` (1 to 10).
pub fn run_criterion(id: u8, profile: Profile, max_steps: usize) -> Result<CriterionReport> {
    let &(_, title, limit_seconds) = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .ok_or_else(|| Error::Domain(format!("criteria are numbered 1 to 10, got {id}")))?;
    let start = Instant::now();
    let checks = match id {
        1 => wakimoto_closure(profile),
        2 => central_charges(profile),
        3 => inverse_diagram(profile),
        4 => nilpotency_identities(),
        5 => kernel_character(profile),
        6 => character_identities(profile),
        7 => m2_structure(),
        8 => c2_checks(profile),
        9 => quantum_checks(profile, max_steps),
        _ => weight_window(),
    };
    Ok(CriterionReport {
        id,
        title,
        limit_seconds,
        elapsed_ms: start.elapsed().as_millis(),
        verdict: Verdict::combine(checks.iter().map(|c| c.verdict)),
        checks,
    })
}

/// Runs all ten criteria; the report lists them in numeric order.
pub fn run_suite(profile: Profile, max_steps: usize) -> SuiteReport {
    let criteria: Vec<CriterionReport> = CRITERIA
        .iter()
        .map(|c| run_criterion(c.0, profile, max_steps).expect("criterion ids are valid"))
        .collect();
    SuiteReport {
        profile,
        verdict: Verdict::combine(criteria.iter().map(|c| c.verdict)),
        criteria,
    }
}
