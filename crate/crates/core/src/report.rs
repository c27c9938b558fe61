//! JSON helpers shared by every report: rationals travel as `"num/den"`.

use serde::{Serialize, Serializer};

use crate::arith::cyclo::Cyclo;
use crate::arith::rat::{to_text, Rat};

/// Serializes a rational as `"num/den"`.
pub fn rat_text<S: Serializer>(value: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_text(value))
}

/// Serializes a list of rationals as `"num/den"` strings.
pub fn rat_list<S: Serializer>(values: &[Rat], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(values.iter().map(to_text))
}

/// Serializes an optional rational as `"num/den"` or `null`.
pub fn rat_option<S: Serializer>(value: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
    match value {
        Some(v) => s.serialize_str(&to_text(v)),
        None => s.serialize_none(),
    }
}

/// Serializes a cyclotomic number as its power-basis coefficients in
/// `q = ζ`, each as `"num/den"`, together with a readable form.
pub fn cyclo_value<S: Serializer>(value: &Cyclo, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeStruct;
    let mut st = s.serialize_struct("Cyclo", 3)?;
    st.serialize_field("order", &value.order())?;
    st.serialize_field("coeffs", &value.coeffs().iter().map(to_text).collect::<Vec<_>>())?;
    st.serialize_field("text", &value.display_with("q"))?;
    st.end()
}

/// Serializes a matrix of cyclotomic numbers entry by entry.
pub fn cyclo_matrix<S: Serializer>(value: &[[Cyclo; 2]; 2], s: S) -> Result<S::Ok, S::Error> {
    #[derive(serde::Serialize)]
    struct Entry(#[serde(serialize_with = "cyclo_value")] Cyclo);
    s.collect_seq(
        value
            .iter()
            .map(|row| row.iter().cloned().map(Entry).collect::<Vec<_>>()),
    )
}

/// Outcome of one exact check under a step budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    /// The expected identity holds.
    Pass,
    /// A fully reduced residual is nonzero.
    Fail,
    /// The step budget ran out before a normal form was reached.
    Inconclusive,
}

impl Verdict {
    /// Combines verdicts: any failure fails, else any budget exhaustion is
    /// inconclusive.
    pub fn combine(items: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut out = Verdict::Pass;
        for v in items {
            match v {
                Verdict::Fail => return Verdict::Fail,
                Verdict::Inconclusive => out = Verdict::Inconclusive,
                Verdict::Pass => {}
            }
        }
        out
    }

    /// Pass or fail from a boolean outcome.
    pub fn of(pass: bool) -> Verdict {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Process exit status: 0 pass, 1 fail, 3 inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 3,
        }
    }

    /// Verdict of a reduction expected to vanish.
    pub fn of_residual(zero: bool, complete: bool) -> Verdict {
        match (zero, complete) {
            (true, true) => Verdict::Pass,
            (false, true) => Verdict::Fail,
            (_, false) => Verdict::Inconclusive,
        }
    }
}
