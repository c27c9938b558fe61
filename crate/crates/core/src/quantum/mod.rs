//! Quantum supergroups at `q = e^{πi/p}`: presentations over cyclotomic
//! fields, bounded rewriting and homomorphism checks.

pub mod checks;
pub mod expr;
pub mod hopf;
pub mod morphism;
pub mod nichols;
pub mod presentation;
pub mod rewrite;

use serde::Serialize;

use crate::error::Result;

pub use checks::{braiding_check, braiding_suite, expand_super_serre, replacement_check, strategy_agreement};
pub use expr::{NCExpr, Word};
pub use hopf::twisted_coproduct_check;
pub use morphism::{check_inverse, check_morphism, f_map, g_map, uqh_to_a, Morphism, Verdict};
pub use presentation::{Presentation, PresentationSummary, Relation, Variant};
pub use rewrite::{Reduction, RewriteSystem, Strategy, DEFAULT_MAX_STEPS};

/// Consistency of one presentation: its data, critical pairs, braiding and
/// agreement of the two rewriting strategies on short words.
#[derive(Clone, Debug, Serialize)]
pub struct RelationsReport {
    /// The presentation.
    pub presentation: PresentationSummary,
    /// Critical pairs examined.
    pub critical_pairs: usize,
    /// Critical pairs that fail to resolve, rendered.
    pub unresolved: Vec<String>,
    /// Braiding and Cartan data, for variants `a` and `s`.
    pub braiding: Option<checks::BraidingCheck>,
    /// Leftmost versus rightmost rewriting on all words of length ≤ 3.
    pub strategies: checks::AgreementReport,
    /// Combined verdict.
    pub verdict: Verdict,
}

/// Builds the presentation of `variant` at `p` and audits it.
pub fn relations_report(variant: Variant, p: u32, max_steps: usize) -> Result<RelationsReport> {
    let pres = Presentation::build(variant, p)?;
    let cp = pres.system().critical_pairs(max_steps);
    let braiding = match pres.variant() {
        Variant::Uqh => None,
        v => Some(braiding_check(v, p)?),
    };
    let words = checks::all_words(&pres, 3);
    let strategies = strategy_agreement(&pres, &words, max_steps);
    let cp_verdict = if !cp.unresolved.is_empty() {
        Verdict::Fail
    } else if cp.inconclusive > 0 {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    let braid_verdict = match &braiding {
        Some(b) if !b.pass => Verdict::Fail,
        _ => Verdict::Pass,
    };
    Ok(RelationsReport {
        presentation: pres.summary(),
        critical_pairs: cp.checked,
        unresolved: cp.unresolved.iter().map(|w| pres.render(&pres.word(&w.0))).collect(),
        braiding,
        verdict: Verdict::combine([cp_verdict, braid_verdict, strategies.verdict]),
        strategies,
    })
}

/// `F`, `G` relation preservation and two-sided inversion.
#[derive(Clone, Debug, Serialize)]
pub struct FgReport {
    /// Relations of `𝒰^a` under `F`.
    pub f: morphism::MorphismReport,
    /// Relations of `𝒰^s` under `G`.
    pub g: morphism::MorphismReport,
    /// Round trips on generators.
    pub inverse: morphism::InverseReport,
    /// Combined verdict.
    pub verdict: Verdict,
}

/// Runs the `F`/`G` checks at `p ≥ 3`.
pub fn fg_report(p: u32, max_steps: usize) -> Result<FgReport> {
    let f = f_map(p)?;
    let g = g_map(p)?;
    let fr = check_morphism(&f, max_steps);
    let gr = check_morphism(&g, max_steps);
    let inv = check_inverse(&f, &g, max_steps)?;
    Ok(FgReport {
        verdict: Verdict::combine([fr.verdict, gr.verdict, inv.verdict]),
        f: fr,
        g: gr,
        inverse: inv,
    })
}
