//! Finite-window model of the lowest-weight space `Ω_{r,s}^{1,[b]}`: the
//! states `θ_{b'}` for `b' ∈ b + ℤ` with `sl₂` acting by
//! `e₀θ_{b'} = θ_{b'+1}`, `h₀θ_{b'} = (2b' − k)θ_{b'}` and
//! `f₀θ_{b'} = −(b' + a_{r,s})(b' + a_{−r,−s})θ_{b'−1}`.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::rat::{congruent_mod_one, int, rat, to_pretty, Rat};
use crate::error::{Error, Result};
use crate::lattice::a_rs;

/// One of the Chevalley generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Generator {
    /// `e₀`.
    E,
    /// `h₀`.
    H,
    /// `f₀`.
    F,
}

impl Generator {
    /// Parses `e`, `h` or `f`.
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "e" => Ok(Generator::E),
            "h" => Ok(Generator::H),
            "f" => Ok(Generator::F),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

/// The window `{θ_{b+j} : lo ≤ j ≤ hi}` of `Ω_{r,s}^{1,[b]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaWindow {
    p: i64,
    r: i64,
    s: i64,
    b: Rat,
    lo: i64,
    hi: i64,
}

/// Result of applying a generator to a window state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Action {
    /// Coefficient, as `"num/den"`.
    #[serde(serialize_with = "crate::report::rat_text")]
    pub coeff: Rat,
    /// Index of the target state.
    pub target: i64,
    /// `true` if the target lies outside the window.
    pub leaves_window: bool,
}

impl OmegaWindow {
    /// The window `lo ≤ j ≤ hi` around the representative `b`.
    pub fn new(p: i64, r: i64, s: i64, b: Rat, lo: i64, hi: i64) -> Result<Self> {
        if p < 1 || r < 1 || r > p {
            return Err(Error::Domain(format!("need 1 ≤ r ≤ p, got p = {p}, r = {r}")));
        }
        if lo > hi {
            return Err(Error::Domain(format!("empty window {lo}..{hi}")));
        }
        Ok(OmegaWindow { p, r, s, b, lo, hi })
    }

    /// The level `k = −2 + 1/p`.
    pub fn level(&self) -> Rat {
        int(-2) + rat(1, self.p)
    }

    /// `b' = b + idx`.
    pub fn b_prime(&self, idx: i64) -> Rat {
        &self.b + int(idx)
    }

    /// Window indices.
    pub fn indices(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    fn contains(&self, idx: i64) -> bool {
        idx >= self.lo && idx <= self.hi
    }

    /// The two roots `−a_{r,s}` and `−a_{−r,−s}` of the `f₀` coefficient.
    pub fn roots(&self) -> (Rat, Rat) {
        (-a_rs(self.p, self.r, self.s), -a_rs(self.p, -self.r, -self.s))
    }

    /// `−(b' + a_{r,s})(b' + a_{−r,−s})`.
    pub fn f_coeff(&self, idx: i64) -> Rat {
        let bp = self.b_prime(idx);
        let (x, y) = self.roots();
        -((&bp - x) * (&bp - y))
    }

    /// Applies `gen` to `θ_{b+idx}`.
    pub fn act(&self, gen: Generator, idx: i64) -> Action {
        let (coeff, target) = match gen {
            Generator::E => (int(1), idx + 1),
            Generator::H => (int(2) * self.b_prime(idx) - self.level(), idx),
            Generator::F => (self.f_coeff(idx), idx - 1),
        };
        Action {
            coeff,
            target,
            leaves_window: !self.contains(target),
        }
    }

    fn h_coeff(&self, idx: i64) -> Rat {
        self.act(Generator::H, idx).coeff
    }

    /// Verifies `[e₀, f₀] = h₀`, `[h₀, e₀] = 2e₀`, `[h₀, f₀] = −2f₀` on
    /// every state whose neighbours lie in the window.
    pub fn bracket_check(&self) -> BracketReport {
        let mut states = Vec::new();
        for idx in self.lo + 1..self.hi {
            let ef = self.f_coeff(idx) - self.f_coeff(idx + 1);
            let he = self.h_coeff(idx + 1) - self.h_coeff(idx);
            let hf = self.f_coeff(idx) * (self.h_coeff(idx - 1) - self.h_coeff(idx));
            let pass = ef == self.h_coeff(idx) && he == int(2) && hf == int(-2) * self.f_coeff(idx);
            states.push(BracketState {
                b_prime: self.b_prime(idx),
                pass,
            });
        }
        BracketReport {
            pass: states.iter().all(|s| s.pass),
            states,
        }
    }

    /// Points `b'` of the window where the `f₀` coefficient vanishes, with
    /// the decomposition class of `Ω_{r,s}^{1,[b]}`.
    pub fn split_points(&self) -> SplitReport {
        let (x, y) = self.roots();
        let splits: Vec<Rat> = self
            .indices()
            .map(|i| self.b_prime(i))
            .filter(|bp| self.f_coeff_at(bp).is_zero())
            .collect();
        let k = self.level();
        let in_x = congruent_mod_one(&self.b, &x);
        let in_y = congruent_mod_one(&self.b, &y);
        let (class, structure) = if self.r < self.p {
            match (in_x, in_y) {
                (false, false) => (DecompositionClass::GenericSimple, "simple".to_string()),
                (true, _) | (_, true) => {
                    let a = if in_x { -x } else { -y };
                    let low = int(-2) * &a - &k;
                    let high = int(-2) * &a - int(2) - &k;
                    (
                        DecompositionClass::GenericReducible,
                        format!("L^-({}) --> L^+({})", to_pretty(&low), to_pretty(&high)),
                    )
                }
            }
        } else if !in_x {
            (DecompositionClass::BoundarySimple, "simple".to_string())
        } else if self.s == 1 {
            (DecompositionClass::BoundaryTwoStep, "L^-(1) --> L^+(-1)".to_string())
        } else {
            (
                DecompositionClass::BoundaryThreeStep,
                format!("L^-({}) --> L^+({}) --> L^+({})", self.s, self.s - 2, -self.s),
            )
        };
        SplitReport {
            splits,
            class,
            structure,
        }
    }

    fn f_coeff_at(&self, bp: &Rat) -> Rat {
        let (x, y) = self.roots();
        -((bp - x) * (bp - y))
    }
}

/// Outcome of the bracket relations on one state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketState {
    /// The label `b'`, as `"num/den"`.
    #[serde(serialize_with = "crate::report::rat_text")]
    pub b_prime: Rat,
    /// `true` iff all three relations hold.
    pub pass: bool,
}

/// Outcome of [`OmegaWindow::bracket_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketReport {
    /// Per-state results.
    pub states: Vec<BracketState>,
    /// `true` iff every state passes.
    pub pass: bool,
}

/// Decomposition classes of `Ω_{r,s}^{1,[b]}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DecompositionClass {
    /// `r < p`, `[b]` avoids both roots: simple.
    GenericSimple,
    /// `r < p`, `[b]` contains a root: a two-step extension.
    GenericReducible,
    /// `r = p`, `[b]` avoids the root: simple.
    BoundarySimple,
    /// `r = p`, `s = 1`, `[b]` contains the double root.
    BoundaryTwoStep,
    /// `r = p`, `s ≠ 1`, `[b]` contains both roots.
    BoundaryThreeStep,
}

impl DecompositionClass {
    /// Case label `(1)(i)`, `(1)(ii)`, `(2)(i)`, `(2)(ii)` or `(2)(iii)`.
    pub fn label(self) -> &'static str {
        match self {
            DecompositionClass::GenericSimple => "(1)(i)",
            DecompositionClass::GenericReducible => "(1)(ii)",
            DecompositionClass::BoundarySimple => "(2)(i)",
            DecompositionClass::BoundaryTwoStep => "(2)(ii)",
            DecompositionClass::BoundaryThreeStep => "(2)(iii)",
        }
    }
}

impl fmt::Display for DecompositionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of [`OmegaWindow::split_points`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    /// Values `b'` in the window where `f₀` vanishes.
    #[serde(serialize_with = "crate::report::rat_list")]
    pub splits: Vec<Rat>,
    /// Decomposition class.
    pub class: DecompositionClass,
    /// Composition series, bottom first.
    pub structure: String,
}
