//! Noncommutative polynomials over a cyclotomic field.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::arith::cyclo::Cyclo;

/// Letters below this index are root vectors; the rest are Cartan letters.
pub const ROOT_LETTERS: u8 = 4;

/// A word in the generator alphabet.
///
/// Words are ordered by the number of root letters, then by length, then
/// lexicographically. The order is multiplicative, so every rewrite rule
/// that lowers its left-hand side in this order terminates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Number of root letters.
    pub fn root_degree(&self) -> usize {
        self.0.iter().filter(|&&l| l < ROOT_LETTERS).count()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Length.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// `true` for the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.root_degree()
            .cmp(&other.root_degree())
            .then(self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite sum of words with nonzero coefficients in `ℚ(ζ_order)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCExpr {
    order: u32,
    terms: BTreeMap<Word, Cyclo>,
}

impl NCExpr {
    /// The zero expression.
    pub fn zero(order: u32) -> Self {
        NCExpr {
            order,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1`.
    pub fn one(order: u32) -> Self {
        Self::word(order, Word::empty(), Cyclo::one(order))
    }

    /// The single term `c · w`.
    pub fn word(order: u32, w: Word, c: Cyclo) -> Self {
        let mut e = Self::zero(order);
        e.add_term(w, c);
        e
    }

    /// The single letter `l` with coefficient one.
    pub fn letter(order: u32, l: u8) -> Self {
        Self::word(order, Word(vec![l]), Cyclo::one(order))
    }

    /// A scalar multiple of the unit.
    pub fn scalar(c: Cyclo) -> Self {
        Self::word(c.order(), Word::empty(), c)
    }

    /// Cyclotomic order of the coefficient field.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Cyclo)> {
        self.terms.iter()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// `true` when there are no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `true` for the zero expression.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The largest word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Cyclo)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of `w`.
    pub fn coeff(&self, w: &Word) -> Cyclo {
        self.terms.get(w).cloned().unwrap_or_else(|| Cyclo::zero(self.order))
    }

    /// Adds `c · w` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Removes and returns the largest term.
    pub fn pop_leading(&mut self) -> Option<(Word, Cyclo)> {
        self.terms.pop_last()
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Cyclo) -> Self {
        let mut out = Self::zero(self.order);
        for (w, x) in self.terms() {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.order);
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// `u · self · v` for words `u`, `v`.
    pub fn sandwich(&self, u: &Word, v: &Word) -> Self {
        let mut out = Self::zero(self.order);
        for (w, c) in self.terms() {
            out.add_term(u.concat(w).concat(v), c.clone());
        }
        out
    }

    /// Non-negative power.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `images[l]` for every letter `l` and expands.
    pub fn substitute(&self, images: &[NCExpr], target_order: u32) -> Self {
        let mut out = Self::zero(target_order);
        for (w, c) in self.terms() {
            let mut acc = NCExpr::scalar(c.clone());
            for &l in &w.0 {
                acc = acc.mul(&images[l as usize]);
            }
            out = out.add(&acc);
        }
        out
    }

    /// Renders the expression with the given letter names and `q` for `ζ`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, c) in self.terms.iter().rev() {
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.0.iter()
                    .map(|&l| names[l as usize].as_str())
                    .collect::<Vec<_>>()
                    .join("*")
            };
            let coeff = c.display_with("q");
            let body = if c.is_one() {
                word
            } else if w.is_empty() {
                format!("({coeff})")
            } else {
                format!("({coeff})*{word}")
            };
            parts.push(body);
        }
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_order_prefers_fewer_roots() {
        assert!(Word(vec![9, 9, 9]) < Word(vec![0]));
        assert!(Word(vec![0, 2]) < Word(vec![2, 0]));
        assert!(Word(vec![0]) < Word(vec![0, 9]));
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = NCExpr::letter(6, 0);
        assert!(x.sub(&x).is_zero());
        let y = NCExpr::letter(6, 1);
        assert_eq!(x.mul(&y).len(), 1);
        assert_ne!(x.mul(&y), y.mul(&x));
    }
}
