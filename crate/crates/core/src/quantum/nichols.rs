//! Completion of homogeneous relations in two letters to a finite
//! rewriting system, degree by degree.
//!
//! The degree-`d` part of the two-sided ideal is spanned by the relations
//! of degree `d` and by `xₐ·g`, `g·xₐ` for a basis `g` of the degree-`d−1`
//! part. A reduced echelon form of that span gives the leading words; the
//! rows whose leading words avoid every lower leading word become rules.
//! Completion stops at the first degree in which every word is a leading
//! word, which happens exactly when the quotient is finite-dimensional.

use std::collections::BTreeMap;

use serde::Serialize;

use super::expr::{NCExpr, Word};
use crate::arith::cyclo::Cyclo;
use crate::error::{Error, Result};

/// A reduced rewriting basis of a finite-dimensional quotient of the free
/// algebra on letters `0` and `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    /// Rules `word → normal expression`.
    pub rules: Vec<(Vec<u8>, NCExpr)>,
    /// Dimension of the quotient in each degree, starting at degree 0.
    pub hilbert: Vec<usize>,
}

impl Completion {
    /// Total dimension of the quotient.
    pub fn dimension(&self) -> usize {
        self.hilbert.iter().sum()
    }

    /// Highest degree with a nonzero component.
    pub fn top_degree(&self) -> usize {
        self.hilbert.iter().rposition(|&h| h > 0).unwrap_or(0)
    }
}

/// Summary of a completion for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionSummary {
    /// Dimension per degree.
    pub hilbert: Vec<usize>,
    /// Total dimension.
    pub dimension: usize,
    /// Number of rewrite rules.
    pub rules: usize,
}

impl From<&Completion> for CompletionSummary {
    fn from(c: &Completion) -> Self {
        CompletionSummary {
            hilbert: c.hilbert.clone(),
            dimension: c.dimension(),
            rules: c.rules.len(),
        }
    }
}

/// Incremental reduced echelon form over a cyclotomic field.
struct Echelon {
    rows: BTreeMap<Word, NCExpr>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    fn insert(&mut self, mut row: NCExpr) -> Result<()> {
        loop {
            let hit = row
                .terms()
                .find(|(w, _)| self.rows.contains_key(*w))
                .map(|(w, c)| (w.clone(), c.clone()));
            match hit {
                Some((w, c)) => row = row.sub(&self.rows[&w].scale(&c)),
                None => break,
            }
        }
        let Some((lead, c)) = row.leading().map(|(w, c)| (w.clone(), c.clone())) else {
            return Ok(());
        };
        let row = row.scale(&c.inverse()?);
        for other in self.rows.values_mut() {
            let k = other.coeff(&lead);
            if !k.is_zero() {
                *other = other.sub(&row.scale(&k));
            }
        }
        self.rows.insert(lead, row);
        Ok(())
    }
}

fn is_homogeneous(e: &NCExpr) -> Option<usize> {
    let mut lens = e.terms().map(|(w, _)| w.len());
    let first = lens.next()?;
    lens.all(|l| l == first).then_some(first)
}

fn contains_subword(w: &[u8], lead: &[u8]) -> bool {
    lead.len() <= w.len() && w.windows(lead.len()).any(|s| s == lead)
}

/// Completes homogeneous relations in the letters `0`, `1`, giving up past
/// degree `max_degree`.
pub fn complete(order: u32, relations: &[NCExpr], max_degree: usize) -> Result<Completion> {
    let mut by_degree: BTreeMap<usize, Vec<NCExpr>> = BTreeMap::new();
    for r in relations {
        if r.is_zero() {
            continue;
        }
        let d = is_homogeneous(r).ok_or_else(|| Error::Domain("relation is not homogeneous".into()))?;
        by_degree.entry(d).or_default().push(r.clone());
    }
    let letters = [NCExpr::letter(order, 0), NCExpr::letter(order, 1)];
    let mut rules: Vec<(Vec<u8>, NCExpr)> = Vec::new();
    let mut hilbert = vec![1];
    let mut previous: Vec<NCExpr> = Vec::new();
    for d in 1..=max_degree {
        let mut ech = Echelon::new();
        for r in by_degree.get(&d).into_iter().flatten() {
            ech.insert(r.clone())?;
        }
        for g in &previous {
            for x in &letters {
                ech.insert(x.mul(g))?;
                ech.insert(g.mul(x))?;
            }
        }
        for (lead, row) in &ech.rows {
            if rules.iter().any(|(l, _)| contains_subword(&lead.0, l)) {
                continue;
            }
            let mut tail = row.clone();
            tail.add_term(lead.clone(), -&Cyclo::one(order));
            rules.push((lead.0.clone(), tail.scale(&Cyclo::from_int(order, -1))));
        }
        let total = 1usize << d;
        hilbert.push(total - ech.rows.len());
        if ech.rows.len() == total {
            while hilbert.len() > 1 && hilbert.last() == Some(&0) {
                hilbert.pop();
            }
            return Ok(Completion { rules, hilbert });
        }
        previous = ech.rows.into_values().collect();
    }
    Err(Error::InfiniteComponent(format!(
        "relations leave words of degree {max_degree} independent"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_algebra_in_two_letters() {
        let one = Cyclo::one(2);
        let w = |v: Vec<u8>| NCExpr::word(2, Word(v), one.clone());
        let rels = vec![w(vec![0, 0]), w(vec![1, 1]), w(vec![0, 1]).add(&w(vec![1, 0]))];
        let c = complete(2, &rels, 6).unwrap();
        assert_eq!(c.hilbert, vec![1, 2, 1]);
        assert_eq!(c.dimension(), 4);
    }

    #[test]
    fn free_algebra_is_rejected() {
        assert!(complete(2, &[], 4).is_err());
    }
}
