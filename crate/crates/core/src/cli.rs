//! Batch front end: argument parsing, dispatch and JSON or text output.
//!
//! Exit codes: 0 pass, 1 check failure, 2 usage error, 3 inconclusive.

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::rat::{self, int, to_text};
use crate::c2;
use crate::characters::{self, CharKind};
use crate::error::{Error, Result};
use crate::fock::ope_singular;
use crate::lattice::QuadSpace;
use crate::parse::parse_expr;
use crate::quantum::{self, hopf, Presentation, Variant, DEFAULT_MAX_STEPS};
use crate::realizations::{self, verify_embedding};
use crate::report::Verdict;
use crate::screening::{self, affine_conformal, affine_module, kernel_dim_table, named_screening};
use crate::suite::{self, Profile};
use crate::window::{Generator, OmegaWindow};

/// Environment variable overriding the default rewrite budget.
pub const MAX_STEPS_ENV: &str = "VOA_FORGE_MAX_STEPS";

/// Exit status for malformed invocations and rejected inputs.
pub const USAGE_EXIT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "voa-forge",
    version,
    about = "Exact free-field and quantum-group computations"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    out: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a realization and optionally verify its OPE table.
    Realization(RealizationArgs),
    /// Singular OPE of two states of a Fock space.
    Ope(OpeArgs),
    /// Apply a screening operator to a state.
    Screen(ScreenArgs),
    /// Joint kernel dimensions of screenings on bigraded components.
    Kernel(KernelArgs),
    /// The window model of the lowest-weight space Ω.
    Omega(OmegaArgs),
    /// Truncated characters.
    Char(CharArgs),
    /// Character identities.
    Check(CheckArgs),
    /// C2 algebra checks.
    C2(C2Args),
    /// Quantum-group presentations and maps.
    Qgroup(QgroupArgs),
    /// Run every acceptance criterion.
    Suite(SuiteArgs),
}

#[derive(Args, Debug)]
struct RealizationArgs {
    /// One of wakimoto, fms, phi, g-wakimoto, omega, m2, strong-generators, p1-generators.
    #[arg(long)]
    name: String,
    #[arg(long, default_value_t = 2)]
    p: u32,
    /// Compute the OPE table and compare it with the source algebra.
    #[arg(long)]
    verify: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpaceName {
    Main,
    Super,
    SuperUnscaled,
}

#[derive(Args, Debug)]
struct OpeArgs {
    /// Left state.
    #[arg(allow_hyphen_values = true)]
    left: String,
    /// Right state.
    #[arg(allow_hyphen_values = true)]
    right: String,
    #[arg(long, default_value_t = 2)]
    p: u32,
    #[arg(long, value_enum, default_value_t = SpaceName::Main)]
    space: SpaceName,
    /// Highest pole order computed.
    #[arg(long, default_value_t = 6)]
    max_pole: u32,
}

#[derive(Args, Debug)]
struct ScreenArgs {
    /// Screening name, e.g. Qplus, QFMS, Qminus, S1, S2, Shat1, Shat2.
    #[arg(long)]
    name: String,
    #[arg(long, default_value_t = 2)]
    p: u32,
    /// State in the space of the screening.
    #[arg(long, allow_hyphen_values = true)]
    state: String,
}

#[derive(Args, Debug)]
struct KernelArgs {
    #[arg(long, default_value_t = 2)]
    p: u32,
    /// Module label; `Pi0 x V(sqrt<p> A1)` or `affine`.
    #[arg(long, default_value = "affine")]
    module: String,
    /// Comma-separated screening names.
    #[arg(long, value_delimiter = ',')]
    screenings: Vec<String>,
    #[arg(long, default_value_t = 3)]
    max_conf: i64,
    /// h-weight window `lo:hi`.
    #[arg(long, allow_hyphen_values = true, default_value = "-4:4")]
    window: String,
    /// Compare every cell with the FT_p character coefficient.
    #[arg(long)]
    compare: bool,
}

#[derive(Args, Debug)]
struct OmegaArgs {
    #[arg(long)]
    p: i64,
    #[arg(long)]
    r: i64,
    #[arg(long)]
    s: i64,
    /// Representative of the class [b], as `n` or `n/d`.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    b: String,
    /// Index window `lo:hi` around b.
    #[arg(long, allow_hyphen_values = true, default_value = "-5:5")]
    window: String,
    /// Report split points and the decomposition class.
    #[arg(long)]
    classify: bool,
}

#[derive(Args, Debug)]
struct CharArgs {
    /// fock, betagamma, lattice, simple, weyl, x, singlet, ft or pi-h.
    #[arg(long)]
    kind: String,
    #[arg(long, default_value_t = 2)]
    p: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    r: i64,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    s: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    n: i64,
    #[arg(long, default_value_t = 5)]
    order: i64,
    #[arg(long, allow_hyphen_values = true, default_value = "-6:6")]
    window: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Identity {
    WeylSimple,
    XDecomposition,
    P1Decomposition,
    CtPipeline,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long, value_enum)]
    identity: Identity,
    #[arg(long, default_value_t = 2)]
    p: i64,
    #[arg(long, default_value_t = 1)]
    r: i64,
    #[arg(long, default_value_t = 1)]
    s: i64,
    #[arg(long, default_value_t = 0)]
    n: i64,
    #[arg(long, default_value_t = 4)]
    order: i64,
    #[arg(long, allow_hyphen_values = true, default_value = "-6:6")]
    window: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum C2Check {
    IdealEquality,
    Casimir,
    Nilpotency,
}

#[derive(Args, Debug)]
struct C2Args {
    #[arg(long, default_value_t = 2)]
    p: u32,
    #[arg(long, value_enum)]
    check: C2Check,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum QgroupCheck {
    Presentation,
    Relations,
    FgInverse,
    SuperSerre,
    Replacement,
    Coproduct,
    Braiding,
    UqhMap,
}

#[derive(Args, Debug)]
struct QgroupArgs {
    /// a, s or uqh.
    #[arg(long, default_value = "a")]
    variant: String,
    #[arg(long, default_value_t = 3)]
    p: u32,
    #[arg(long, value_enum, default_value_t = QgroupCheck::Relations)]
    check: QgroupCheck,
    /// Rewrite budget per reduction.
    #[arg(long)]
    max_steps: Option<usize>,
    /// Reduce a word given as space-separated generator names instead of
    /// running a check.
    #[arg(long)]
    reduce: Option<String>,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[arg(long, value_enum, default_value_t = SuiteProfile::Quick)]
    profile: SuiteProfile,
    #[arg(long)]
    max_steps: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteProfile {
    Quick,
    Full,
}

/// A finished command: a payload plus the verdict it carries, if any.
struct Outcome {
    verdict: Option<Verdict>,
    json: Value,
    text: String,
}

impl Outcome {
    fn report<T: Serialize>(verdict: Option<Verdict>, value: &T) -> Result<Self> {
        let json = serde_json::to_value(value).map_err(|e| Error::Domain(e.to_string()))?;
        let text = serde_json::to_string_pretty(&json).map_err(|e| Error::Domain(e.to_string()))?;
        Ok(Outcome { verdict, json, text })
    }
}

/// Rewrite budget: the explicit flag, else the environment, else the default.
pub fn max_steps(flag: Option<usize>) -> Result<usize> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(MAX_STEPS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Domain(format!("{MAX_STEPS_ENV} must be a positive integer, got '{v}'"))),
        Err(_) => Ok(DEFAULT_MAX_STEPS),
    }
}

/// Parses a window `lo:hi`.
pub fn parse_window(text: &str) -> Result<(i64, i64)> {
    let bad = || Error::Domain(format!("window must read lo:hi with integers, got '{text}'"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn space_of(name: SpaceName, p: u32) -> Arc<QuadSpace> {
    match name {
        SpaceName::Main => QuadSpace::main(p),
        SpaceName::Super => QuadSpace::super_side(p),
        SpaceName::SuperUnscaled => QuadSpace::super_side_unscaled(),
    }
}

fn realization(a: RealizationArgs) -> Result<Outcome> {
    let r = realizations::build(&a.name, a.p)?;
    if a.verify {
        let rep = verify_embedding(&r)?;
        return Outcome::report(Some(Verdict::of(rep.pass)), &rep);
    }
    let images: Vec<Value> = r
        .images
        .iter()
        .map(|(l, s)| json!({ "generator": l, "state": s.to_json() }))
        .collect();
    let text = r
        .images
        .iter()
        .map(|(l, s)| format!("{l} = {}", s.pretty()))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome {
        verdict: None,
        json: json!({ "name": r.name, "p": r.p, "source": r.source, "space": r.space.names(), "images": images }),
        text,
    })
}

fn ope(a: OpeArgs) -> Result<Outcome> {
    let space = space_of(a.space, a.p);
    let left = parse_expr(&a.left, &space)?;
    let right = parse_expr(&a.right, &space)?;
    let poles = ope_singular(&left, &right, a.max_pole)?;
    let nonzero: Vec<(usize, _)> = poles
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, s)| !s.is_zero())
        .map(|(j, s)| (j + 1, s))
        .collect();
    let json = json!({
        "left": left.to_json(),
        "right": right.to_json(),
        "poles": nonzero.iter().map(|(j, s)| json!({ "order": j, "state": s.to_json() })).collect::<Vec<_>>(),
    });
    let text = if nonzero.is_empty() {
        "regular".to_string()
    } else {
        nonzero
            .iter()
            .map(|(j, s)| format!("(z-w)^-{j}: {}", s.pretty()))
            .collect::<Vec<_>>()
            .join("\n")
    };
    Ok(Outcome {
        verdict: None,
        json,
        text,
    })
}

fn screen(a: ScreenArgs) -> Result<Outcome> {
    let s = named_screening(&a.name, a.p)?;
    let state = parse_expr(&a.state, s.charge().space())?;
    let image = s.apply(&state)?;
    Ok(Outcome {
        verdict: None,
        json: json!({ "screening": a.name, "state": state.to_json(), "image": image.to_json() }),
        text: image.pretty(),
    })
}

fn kernel(a: KernelArgs) -> Result<Outcome> {
    let module = affine_module(a.p);
    if a.module != "affine" && a.module.replace(' ', "") != module.label.replace(' ', "") {
        return Err(Error::UnknownName(format!(
            "module '{}'; available: affine, {}",
            a.module, module.label
        )));
    }
    let window = parse_window(&a.window)?;
    let names: Vec<&str> = a.screenings.iter().map(String::as_str).collect();
    if names.is_empty() {
        return Err(Error::Domain("at least one screening is needed".into()));
    }
    if a.compare {
        let cmp = suite::kernel_character_comparison(a.p, &names, a.max_conf + 1, window)?;
        let mut out = Outcome::report(Some(Verdict::of(cmp.pass)), &cmp)?;
        if !cmp.mismatches.is_empty() {
            out.text = format!("{}\n{}", screening::format_table(&cmp.cells), cmp.mismatches.join("\n"));
        } else {
            out.text = screening::format_table(&cmp.cells);
        }
        return Ok(out);
    }
    let built = names
        .iter()
        .map(|n| named_screening(n, a.p))
        .collect::<Result<Vec<_>>>()?;
    let l = affine_conformal(a.p)?;
    let cells = kernel_dim_table(&built, &module, &int(a.max_conf), window, &l)?;
    let mut out = Outcome::report(
        None,
        &json!({ "module": module.label, "screenings": names, "cells": cells }),
    )?;
    out.text = screening::format_table(&cells);
    Ok(out)
}

fn omega(a: OmegaArgs) -> Result<Outcome> {
    let (lo, hi) = parse_window(&a.window)?;
    let w = OmegaWindow::new(a.p, a.r, a.s, rat::parse(&a.b)?, lo, hi)?;
    let states: Vec<Value> = w
        .indices()
        .map(|i| {
            json!({
                "b_prime": to_text(&w.b_prime(i)),
                "e": w.act(Generator::E, i),
                "h": w.act(Generator::H, i),
                "f": w.act(Generator::F, i),
            })
        })
        .collect();
    let brackets = w.bracket_check();
    let mut json = json!({ "level": to_text(&w.level()), "states": states, "brackets": brackets });
    let mut text = format!("brackets {}", if brackets.pass { "hold" } else { "fail" });
    if a.classify {
        let split = w.split_points();
        text.push_str(&format!(
            "\nclass {}: {}\nsplits {}",
            split.class,
            split.structure,
            split.splits.iter().map(to_text).collect::<Vec<_>>().join(", ")
        ));
        json["classification"] = json!({ "label": split.class.label(), "report": split });
    }
    Ok(Outcome {
        verdict: Some(Verdict::of(brackets.pass)),
        json,
        text,
    })
}

fn char_cmd(a: CharArgs) -> Result<Outcome> {
    let kind = CharKind::from_cli(&a.kind, a.p, a.r, a.s, a.n)?;
    let window = parse_window(&a.window)?;
    let series = characters::character(&kind, &int(a.order), window)?;
    Ok(Outcome {
        verdict: None,
        json: json!({ "kind": a.kind, "character": series.to_json() }),
        text: series.pretty(),
    })
}

fn check(a: CheckArgs) -> Result<Outcome> {
    let window = parse_window(&a.window)?;
    let order = int(a.order);
    let rep = match a.identity {
        Identity::WeylSimple => characters::weyl_simple_check(a.p, a.n, &order, window)?,
        Identity::XDecomposition => characters::decomposition_check(a.p, a.r, a.s, &order, window)?,
        Identity::P1Decomposition => characters::p1_decomposition_check(&order, window)?,
        Identity::CtPipeline => characters::ct_pipeline_check(a.p, a.r, a.n, a.s, &order, window)?,
    };
    Outcome::report(Some(Verdict::of(rep.pass)), &rep)
}

fn c2_cmd(a: C2Args) -> Result<Outcome> {
    match a.check {
        C2Check::IdealEquality => {
            let rep = c2::ideal_equality(a.p);
            Outcome::report(Some(Verdict::of(rep.pass)), &rep)
        }
        C2Check::Casimir => {
            let rep = c2::casimir_check(a.p);
            Outcome::report(Some(Verdict::of(rep.pass)), &rep)
        }
        C2Check::Nilpotency => {
            let reps = c2::nilpotency_suite(a.p)?;
            Outcome::report(Some(Verdict::of(reps.iter().all(|r| r.pass))), &reps)
        }
    }
}

fn qgroup(a: QgroupArgs) -> Result<Outcome> {
    let variant = Variant::parse(&a.variant)?;
    let steps = max_steps(a.max_steps)?;
    if let Some(word) = &a.reduce {
        let pres = Presentation::build(variant, a.p)?;
        let names: Vec<&str> = word.split_whitespace().collect();
        let red = pres.reduce(&pres.named(&names)?, steps);
        let verdict = if red.complete {
            Verdict::Pass
        } else {
            Verdict::Inconclusive
        };
        let normal = pres.render(&red.normal);
        return Ok(Outcome {
            verdict: Some(verdict),
            json: json!({ "input": word, "normal": normal, "complete": red.complete, "steps": red.steps }),
            text: normal,
        });
    }
    match a.check {
        QgroupCheck::Presentation => {
            let pres = Presentation::build(variant, a.p)?;
            Outcome::report(None, &pres.summary())
        }
        QgroupCheck::Relations => {
            let rep = quantum::relations_report(variant, a.p, steps)?;
            Outcome::report(Some(rep.verdict), &rep)
        }
        QgroupCheck::FgInverse => {
            let rep = quantum::fg_report(a.p, steps)?;
            Outcome::report(Some(rep.verdict), &rep)
        }
        QgroupCheck::SuperSerre => {
            let rep = quantum::expand_super_serre(a.p);
            Outcome::report(Some(Verdict::of(rep.pass)), &rep)
        }
        QgroupCheck::Replacement => {
            let rep = quantum::replacement_check(steps)?;
            Outcome::report(Some(Verdict::of(rep.pass)), &rep)
        }
        QgroupCheck::Coproduct => {
            let rep = hopf::twisted_coproduct_check(&quantum::f_map(a.p)?, steps)?;
            Outcome::report(Some(rep.verdict), &rep)
        }
        QgroupCheck::Braiding => {
            let rep = quantum::braiding_check(variant, a.p)?;
            Outcome::report(Some(Verdict::of(rep.pass)), &rep)
        }
        QgroupCheck::UqhMap => {
            let rep = quantum::check_morphism(&quantum::uqh_to_a(a.p)?, steps);
            Outcome::report(Some(rep.verdict), &rep)
        }
    }
}

fn suite_cmd(a: SuiteArgs) -> Result<Outcome> {
    let profile = match a.profile {
        SuiteProfile::Quick => Profile::Quick,
        SuiteProfile::Full => Profile::Full,
    };
    let rep = suite::run_suite(profile, max_steps(a.max_steps)?);
    let mut out = Outcome::report(Some(rep.verdict), &rep)?;
    out.text = rep
        .criteria
        .iter()
        .map(|c| {
            let mut line = format!(
                "{} {:>2} {} ({} ms)",
                if c.verdict == Verdict::Pass { "PASS" } else { "FAIL" },
                c.id,
                c.title,
                c.elapsed_ms
            );
            for label in c.failures() {
                line.push_str(&format!("\n     {label}"));
            }
            line
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(out)
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Realization(a) => realization(a),
        Command::Ope(a) => ope(a),
        Command::Screen(a) => screen(a),
        Command::Kernel(a) => kernel(a),
        Command::Omega(a) => omega(a),
        Command::Char(a) => char_cmd(a),
        Command::Check(a) => check(a),
        Command::C2(a) => c2_cmd(a),
        Command::Qgroup(a) => qgroup(a),
        Command::Suite(a) => suite_cmd(a),
    }
}

/// Runs the command line `args` (program name first), writing the result to
/// stdout and diagnostics to stderr, and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE_EXIT } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(outcome) => {
            let body = match cli.out {
                Format::Json => serde_json::to_string_pretty(&outcome.json).expect("JSON values serialize"),
                Format::Text => outcome.text,
            };
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            outcome.verdict.map_or(0, Verdict::exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            USAGE_EXIT
        }
    }
}
