//! Presentations of `𝒰^a`, `𝒰^s` and `u_q^H(sl(2|1))` at `q = e^{πi/p}`.
//!
//! Letters `0, 1` are the raising root vectors (`x₁, x₂` or `E₁, E₂`),
//! letters `2, 3` the lowering ones (`x₁*, x₂*` or `F₁, F₂`), letters `4, 5`
//! are `H₁, H₂` and the group-likes follow. Normal words read
//! (raising)(lowering)(H)(K) from left to right.

use std::fmt;

use serde::Serialize;

use super::expr::{NCExpr, Word};
use super::nichols::{complete, CompletionSummary};
use super::rewrite::{Reduction, RewriteSystem, Strategy};
use crate::arith::cyclo::Cyclo;
use crate::error::{Error, Result};

/// The three algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    /// `𝒰^a`, the double built on the Cartan matrix `[[2,−1],[−1,0]]`.
    A,
    /// `𝒰^s`, the double built on `[[0,−1],[−1,0]]`.
    S,
    /// `u_q^H(sl(2|1))` with Chevalley generators `E, F`.
    Uqh,
}

impl Variant {
    /// Parses `a`, `s` or `uqh`.
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "a" => Ok(Variant::A),
            "s" => Ok(Variant::S),
            "uqh" => Ok(Variant::Uqh),
            other => Err(Error::UnknownName(format!("quantum variant {other}"))),
        }
    }

    /// Short label.
    pub fn label(self) -> &'static str {
        match self {
            Variant::A => "a",
            Variant::S => "s",
            Variant::Uqh => "uqh",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A named defining relation, stored as `lhs − rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    /// Human-readable name.
    pub label: String,
    /// The relator.
    pub expr: NCExpr,
}

/// Raising letters.
pub const RAISING: [u8; 2] = [0, 1];
/// Lowering letters.
pub const LOWERING: [u8; 2] = [2, 3];
/// Primitive Cartan letters `H₁, H₂`.
pub const CARTAN_H: [u8; 2] = [4, 5];

/// A presentation by generators, defining relations and a rewriting system
/// whose normal words span the algebra.
#[derive(Clone, Debug)]
pub struct Presentation {
    variant: Variant,
    p: u32,
    order: u32,
    names: Vec<String>,
    parity: [u8; 2],
    cartan: [[i64; 2]; 2],
    braiding: [[Cyclo; 2]; 2],
    linking: [[Cyclo; 2]; 2],
    k0: Option<u8>,
    k: [u8; 2],
    k_inv: [u8; 2],
    relations: Vec<Relation>,
    system: RewriteSystem,
    nichols: CompletionSummary,
}

impl Presentation {
    /// Builds the presentation of `variant` at `p`.
    ///
    /// Variant `a` needs `p ≥ 2`; `uqh` at `p = 1` is `𝒰^s`.
    pub fn build(variant: Variant, p: u32) -> Result<Self> {
        Self::assemble(variant, p, None)
    }

    /// The same presentation with the linking constant of
    /// `lowering_i · raising_j` replaced by `value`.
    pub fn with_linking_constant(variant: Variant, p: u32, i: usize, j: usize, value: Cyclo) -> Result<Self> {
        Self::assemble(variant, p, Some((i, j, value)))
    }

    fn assemble(variant: Variant, p: u32, linking_override: Option<(usize, usize, Cyclo)>) -> Result<Self> {
        if p == 0 {
            return Err(Error::Precondition("p must be positive".into()));
        }
        if variant == Variant::A && p == 1 {
            return Err(Error::Precondition("variant a requires p ≥ 2".into()));
        }
        let variant = if variant == Variant::Uqh && p == 1 {
            Variant::S
        } else {
            variant
        };
        let order = 2 * p;
        let q = |k: i64| Cyclo::root_pow(order, k);
        let (cartan, parity) = match variant {
            Variant::S => ([[0, -1], [-1, 0]], [1, 1]),
            _ => ([[2, -1], [-1, 0]], [0, 1]),
        };
        let sign = |i: usize, j: usize| if parity[i] * parity[j] == 1 { -1 } else { 1 };
        let braiding: [[Cyclo; 2]; 2] = std::array::from_fn(|i| {
            std::array::from_fn(|j| q(cartan[i][j]).scale(&crate::arith::rat::int(sign(i, j))))
        });
        let mut linking = match variant {
            Variant::Uqh => std::array::from_fn(|i| std::array::from_fn(|j| Cyclo::from_int(order, sign(i, j)))),
            _ => braiding.clone(),
        };
        if let Some((i, j, value)) = linking_override {
            linking[i][j] = value;
        }
        let (names, k0, k, k_inv): (Vec<&str>, Option<u8>, [u8; 2], [u8; 2]) = match variant {
            Variant::Uqh => (
                vec!["E1", "E2", "F1", "F2", "H1", "H2", "K1", "K1^-1", "K2", "K2^-1"],
                None,
                [6, 8],
                [7, 9],
            ),
            _ => (
                vec!["x1", "x2", "x1*", "x2*", "H1", "H2", "K0", "K1", "K1^-1", "K2", "K2^-1"],
                Some(6),
                [7, 9],
                [8, 10],
            ),
        };
        let mut pres = Presentation {
            variant,
            p,
            order,
            names: names.into_iter().map(String::from).collect(),
            parity,
            cartan,
            braiding,
            linking,
            k0,
            k,
            k_inv,
            relations: Vec::new(),
            system: RewriteSystem::new(order),
            nichols: CompletionSummary {
                hilbert: Vec::new(),
                dimension: 0,
                rules: 0,
            },
        };
        pres.add_cartan_relations();
        pres.add_weight_relations();
        pres.add_linking_relations();
        pres.add_nichols_relations()?;
        Ok(pres)
    }

    fn cartan_letters(&self) -> Vec<u8> {
        (CARTAN_H[0]..self.names.len() as u8).collect()
    }

    fn inverse_of(&self, l: u8) -> Option<u8> {
        (0..2).find_map(|i| {
            if self.k[i] == l {
                Some(self.k_inv[i])
            } else if self.k_inv[i] == l {
                Some(self.k[i])
            } else {
                None
            }
        })
    }

    fn add_cartan_relations(&mut self) {
        let one = NCExpr::one(self.order);
        let letters = self.cartan_letters();
        for (ai, &a) in letters.iter().enumerate() {
            for &b in &letters[ai + 1..] {
                let ab = self.word(&[a, b]);
                let ba = self.word(&[b, a]);
                if self.inverse_of(a) == Some(b) {
                    self.relations.push(Relation {
                        label: format!("{}*{} = 1", self.names[a as usize], self.names[b as usize]),
                        expr: ab.sub(&one),
                    });
                    self.relations.push(Relation {
                        label: format!("{}*{} = 1", self.names[b as usize], self.names[a as usize]),
                        expr: ba.sub(&one),
                    });
                    self.system.insert(vec![a, b], one.clone());
                    self.system.insert(vec![b, a], one.clone());
                } else {
                    self.relations.push(Relation {
                        label: format!("[{}, {}] = 0", self.names[a as usize], self.names[b as usize]),
                        expr: ab.sub(&ba),
                    });
                    self.system.insert(vec![b, a], ab);
                }
            }
        }
        if let Some(k0) = self.k0 {
            self.relations.push(Relation {
                label: "K0^2 = 1".into(),
                expr: self.word(&[k0, k0]).sub(&one),
            });
            self.system.insert(vec![k0, k0], one);
        }
    }

    /// Coefficient and additive shift of moving Cartan letter `c` past root
    /// letter `y`: `c·y = coeff·y·c + shift·y`.
    fn commutation(&self, c: u8, y: u8) -> (Cyclo, Cyclo) {
        let j = (y % 2) as usize;
        let s: i64 = if RAISING.contains(&y) { 1 } else { -1 };
        let one = Cyclo::one(self.order);
        let zero = Cyclo::zero(self.order);
        if let Some(i) = CARTAN_H.iter().position(|&h| h == c) {
            return (one, Cyclo::from_int(self.order, s * self.cartan[i][j]));
        }
        if Some(c) == self.k0 {
            let sign = if self.parity[j] == 1 { -1 } else { 1 };
            return (Cyclo::from_int(self.order, sign), zero);
        }
        if let Some(i) = self.k.iter().position(|&k| k == c) {
            return (self.q(s * self.cartan[i][j]), zero);
        }
        let i = self.k_inv.iter().position(|&k| k == c).expect("Cartan letter");
        (self.q(-s * self.cartan[i][j]), zero)
    }

    fn add_weight_relations(&mut self) {
        for c in self.cartan_letters() {
            for y in RAISING.into_iter().chain(LOWERING) {
                let (coeff, shift) = self.commutation(c, y);
                let rhs = self.word(&[y, c]).scale(&coeff).add(&self.word(&[y]).scale(&shift));
                self.relations.push(Relation {
                    label: format!("weight {}*{}", self.names[c as usize], self.names[y as usize]),
                    expr: self.word(&[c, y]).sub(&rhs),
                });
                self.system.insert(vec![c, y], rhs);
            }
        }
    }

    /// The Cartan part of the linking relation for index `i`.
    fn linking_term(&self, i: usize) -> NCExpr {
        let k = self.word(&[self.k[i]]);
        match self.variant {
            Variant::Uqh => {
                let kinv = self.word(&[self.k_inv[i]]);
                let denom = (&self.q(1) - &self.q(-1)).inverse().expect("q² ≠ 1 for p ≥ 2");
                let sign = if self.parity[i] == 1 { 1 } else { -1 };
                k.sub(&kinv).scale(&denom.scale(&crate::arith::rat::int(sign)))
            }
            _ => NCExpr::one(self.order).sub(&k.mul(&k)),
        }
    }

    fn add_linking_relations(&mut self) {
        for i in 0..2 {
            for j in 0..2 {
                let (lo, hi) = (LOWERING[i], RAISING[j]);
                let mut rhs = self.word(&[hi, lo]).scale(&self.linking[i][j]);
                if i == j {
                    rhs = rhs.add(&self.linking_term(i));
                }
                let rhs = self.system.reduce(&rhs, usize::MAX, Strategy::Leftmost).normal;
                self.relations.push(Relation {
                    label: format!("linking {}*{}", self.names[lo as usize], self.names[hi as usize]),
                    expr: self.word(&[lo, hi]).sub(&rhs),
                });
                self.system.insert(vec![lo, hi], rhs);
            }
        }
    }

    /// Defining relations of the Nichols algebra in letters `0`, `1`.
    fn nichols_relators(&self) -> Vec<(String, NCExpr)> {
        let o = self.order;
        let w = |v: &[u8]| NCExpr::word(o, Word(v.to_vec()), Cyclo::one(o));
        let p = self.p;
        let mut out = Vec::new();
        match self.variant {
            Variant::S => {
                out.push(("e1^2".to_string(), w(&[0, 0])));
                out.push(("e2^2".to_string(), w(&[1, 1])));
                let root = w(&[0, 1]).add(&w(&[1, 0]).scale(&self.q(-1)));
                out.push((format!("(e1 e2 + q^-1 e2 e1)^{p}"), root.pow(p)));
            }
            _ => {
                out.push((format!("e1^{p}"), w(&vec![0; p as usize])));
                out.push(("e2^2".to_string(), w(&[1, 1])));
                if p == 2 {
                    let root = w(&[0, 1]).sub(&w(&[1, 0]).scale(&self.q(-1)));
                    out.push(("(e1 e2 - q^-1 e2 e1)^2".to_string(), root.pow(2)));
                } else {
                    let qq = &self.q(1) + &self.q(-1);
                    let serre = w(&[0, 0, 1]).sub(&w(&[0, 1, 0]).scale(&qq)).add(&w(&[1, 0, 0]));
                    out.push(("e1^2 e2 - (q+q^-1) e1 e2 e1 + e2 e1^2".to_string(), serre));
                }
            }
        }
        out
    }

    fn add_nichols_relations(&mut self) -> Result<()> {
        let relators = self.nichols_relators();
        let exprs: Vec<NCExpr> = relators.iter().map(|(_, e)| e.clone()).collect();
        let completion = complete(self.order, &exprs, 4 * self.p as usize + 4)?;
        for (letters, side) in [(RAISING, "raising"), (LOWERING, "lowering")] {
            let relabel = |e: &NCExpr| {
                let images: Vec<NCExpr> = letters.iter().map(|&l| NCExpr::letter(self.order, l)).collect();
                e.substitute(&images, self.order)
            };
            for (label, e) in &relators {
                let names: Vec<&str> = letters.iter().map(|&l| self.names[l as usize].as_str()).collect();
                let label = label.replace("e1", names[0]).replace("e2", names[1]);
                self.relations.push(Relation {
                    label: format!("{side} {label}"),
                    expr: relabel(e),
                });
            }
            for (lhs, rhs) in &completion.rules {
                let lhs: Vec<u8> = lhs.iter().map(|&l| letters[l as usize]).collect();
                self.system.insert(lhs, relabel(rhs));
            }
        }
        self.nichols = CompletionSummary::from(&completion);
        Ok(())
    }

    /// `q^k`.
    pub fn q(&self, k: i64) -> Cyclo {
        Cyclo::root_pow(self.order, k)
    }

    /// The variant actually presented.
    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The parameter `p`.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Cyclotomic order `2p` of the coefficient field.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Generator names, indexed by letter.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The Cartan matrix.
    pub fn cartan(&self) -> [[i64; 2]; 2] {
        self.cartan
    }

    /// Parities of the two simple root vectors.
    pub fn parity(&self) -> [u8; 2] {
        self.parity
    }

    /// The braiding matrix `ℬᵢⱼ = (−1)^{p(i)p(j)} q^{cᵢⱼ}`.
    pub fn braiding(&self) -> &[[Cyclo; 2]; 2] {
        &self.braiding
    }

    /// Constants `λᵢⱼ` of the rules `lowering_i · raising_j → λᵢⱼ raising_j · lowering_i + …`.
    pub fn linking(&self) -> &[[Cyclo; 2]; 2] {
        &self.linking
    }

    /// The parity group-like `K₀`, if present.
    pub fn k0(&self) -> Option<u8> {
        self.k0
    }

    /// Letters of `K₁, K₂`.
    pub fn k(&self) -> [u8; 2] {
        self.k
    }

    /// Letters of `K₁⁻¹, K₂⁻¹`.
    pub fn k_inv(&self) -> [u8; 2] {
        self.k_inv
    }

    /// Defining relations.
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// The rewriting system.
    pub fn system(&self) -> &RewriteSystem {
        &self.system
    }

    /// Hilbert series data of the Nichols part.
    pub fn nichols(&self) -> &CompletionSummary {
        &self.nichols
    }

    /// The letter called `name`.
    pub fn letter(&self, name: &str) -> Result<u8> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| i as u8)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// The word on the given letters with coefficient one.
    pub fn word(&self, letters: &[u8]) -> NCExpr {
        NCExpr::word(self.order, Word(letters.to_vec()), Cyclo::one(self.order))
    }

    /// The word on the named generators with coefficient one.
    pub fn named(&self, names: &[&str]) -> Result<NCExpr> {
        let letters = names.iter().map(|n| self.letter(n)).collect::<Result<Vec<_>>>()?;
        Ok(self.word(&letters))
    }

    /// Reduces `e` leftmost-first.
    pub fn reduce(&self, e: &NCExpr, max_steps: usize) -> Reduction {
        self.system.reduce(e, max_steps, Strategy::Leftmost)
    }

    /// Reduces `e` with the given strategy.
    pub fn reduce_with(&self, e: &NCExpr, max_steps: usize, strategy: Strategy) -> Reduction {
        self.system.reduce(e, max_steps, strategy)
    }

    /// Renders `e` with this presentation's generator names.
    pub fn render(&self, e: &NCExpr) -> String {
        e.render(&self.names)
    }

    /// A summary for reports.
    pub fn summary(&self) -> PresentationSummary {
        PresentationSummary {
            variant: self.variant,
            p: self.p,
            generators: self.names.clone(),
            cartan: self.cartan,
            parity: self.parity,
            braiding: self.braiding.clone(),
            relations: self.relations.iter().map(|r| r.label.clone()).collect(),
            rules: self.system.len(),
            nichols: self.nichols.clone(),
        }
    }
}

/// Serializable description of a presentation.
#[derive(Clone, Debug, Serialize)]
pub struct PresentationSummary {
    /// Variant presented.
    pub variant: Variant,
    /// Parameter `p`.
    pub p: u32,
    /// Generator names.
    pub generators: Vec<String>,
    /// Cartan matrix.
    pub cartan: [[i64; 2]; 2],
    /// Parities of the simple root vectors.
    pub parity: [u8; 2],
    /// Braiding matrix.
    #[serde(serialize_with = "crate::report::cyclo_matrix")]
    pub braiding: [[Cyclo; 2]; 2],
    /// Labels of the defining relations.
    pub relations: Vec<String>,
    /// Number of rewrite rules.
    pub rules: usize,
    /// Hilbert data of the Nichols part.
    pub nichols: CompletionSummary,
}
