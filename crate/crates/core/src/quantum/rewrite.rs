//! Bounded rewriting toward normal words, with a critical-pair audit.

use std::collections::BTreeMap;

use serde::Serialize;

use super::expr::{NCExpr, Word};

/// Default budget of rule applications per reduction.
pub const DEFAULT_MAX_STEPS: usize = 100_000;

/// An overlap word with the spans of the two rules that match inside it.
type Overlap = (Vec<u8>, (usize, usize), (usize, usize));

/// Where the next rule is applied inside a reducible word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// The match that starts furthest to the left.
    Leftmost,
    /// The match that ends furthest to the right.
    Rightmost,
}

/// A set of rules `word → expression`, every right-hand side smaller than
/// its left-hand side in the word order.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    order: u32,
    rules: BTreeMap<Vec<u8>, NCExpr>,
    max_len: usize,
}

/// Outcome of a bounded reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// The reduced expression; fully normal iff `complete`.
    pub normal: NCExpr,
    /// `false` if the step budget ran out first.
    pub complete: bool,
    /// Rule applications used.
    pub steps: usize,
}

impl RewriteSystem {
    /// An empty system over `ℚ(ζ_order)`.
    pub fn new(order: u32) -> Self {
        RewriteSystem {
            order,
            rules: BTreeMap::new(),
            max_len: 0,
        }
    }

    /// Adds the rule `lhs → rhs`. Panics if the rule does not lower the word
    /// order, since such a rule could loop.
    pub fn insert(&mut self, lhs: Vec<u8>, rhs: NCExpr) {
        let w = Word(lhs.clone());
        if let Some((top, _)) = rhs.leading() {
            assert!(top < &w, "rule must lower the word order");
        }
        self.max_len = self.max_len.max(lhs.len());
        self.rules.insert(lhs, rhs);
    }

    /// Number of rules.
    pub fn len(&self) -> usize {
        self.rules.len()
    }

    /// `true` if no rules are present.
    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// The rules in word order of their left-hand sides.
    pub fn rules(&self) -> impl Iterator<Item = (&Vec<u8>, &NCExpr)> {
        self.rules.iter()
    }

    /// Right-hand side of the rule with left-hand side `lhs`.
    pub fn rule(&self, lhs: &[u8]) -> Option<&NCExpr> {
        self.rules.get(lhs)
    }

    /// The match `(start, len)` chosen by `strategy`, if any.
    pub fn find(&self, w: &[u8], strategy: Strategy) -> Option<(usize, usize)> {
        let n = w.len();
        match strategy {
            Strategy::Leftmost => {
                for i in 0..n {
                    for len in 1..=self.max_len.min(n - i) {
                        if self.rules.contains_key(&w[i..i + len]) {
                            return Some((i, len));
                        }
                    }
                }
            }
            Strategy::Rightmost => {
                for end in (1..=n).rev() {
                    for len in 1..=self.max_len.min(end) {
                        if self.rules.contains_key(&w[end - len..end]) {
                            return Some((end - len, len));
                        }
                    }
                }
            }
        }
        None
    }

    /// `true` if no rule applies anywhere in `w`.
    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.find(w, Strategy::Leftmost).is_none()
    }

    /// Rewrites the occurrence `(start, len)` of a rule in `w`.
    fn rewrite_at(&self, w: &[u8], start: usize, len: usize) -> NCExpr {
        let rhs = &self.rules[&w[start..start + len]];
        rhs.sandwich(&Word(w[..start].to_vec()), &Word(w[start + len..].to_vec()))
    }

    /// Reduces `e` with at most `max_steps` rule applications.
    ///
    /// The largest pending word is rewritten first, so equal words produced
    /// along different paths merge before they are rewritten again.
    pub fn reduce(&self, e: &NCExpr, max_steps: usize, strategy: Strategy) -> Reduction {
        let mut pending = e.clone();
        let mut normal = NCExpr::zero(self.order);
        let mut steps = 0;
        while let Some((w, c)) = pending.pop_leading() {
            match self.find(&w.0, strategy) {
                None => normal.add_term(w, c),
                Some((start, len)) => {
                    if steps >= max_steps {
                        pending.add_term(w, c);
                        return Reduction {
                            normal: normal.add(&pending),
                            complete: false,
                            steps,
                        };
                    }
                    steps += 1;
                    let image = self.rewrite_at(&w.0, start, len).scale(&c);
                    pending = pending.add(&image);
                }
            }
        }
        Reduction {
            normal,
            complete: true,
            steps,
        }
    }

    /// Every critical pair of the rule set: overlaps `ab·c` of rules `ab`,
    /// `bc` and inclusions of one left-hand side in another. Each pair is
    /// rewritten both ways and reduced; the unresolved ones are returned.
    pub fn critical_pairs(&self, max_steps: usize) -> CriticalPairReport {
        let lhs: Vec<&Vec<u8>> = self.rules.keys().collect();
        let mut checked = 0;
        let mut unresolved = Vec::new();
        let mut inconclusive = 0;
        for l1 in &lhs {
            for l2 in &lhs {
                let mut cases: Vec<Overlap> = Vec::new();
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let mut w = l1.to_vec();
                        w.extend_from_slice(&l2[k..]);
                        cases.push((w, (0, l1.len()), (l1.len() - k, l2.len())));
                    }
                }
                if l2.len() < l1.len() {
                    for i in 0..=l1.len() - l2.len() {
                        if l1[i..i + l2.len()] == l2[..] {
                            cases.push((l1.to_vec(), (0, l1.len()), (i, l2.len())));
                        }
                    }
                }
                for (w, (s1, n1), (s2, n2)) in cases {
                    checked += 1;
                    let a = self.reduce(&self.rewrite_at(&w, s1, n1), max_steps, Strategy::Leftmost);
                    let b = self.reduce(&self.rewrite_at(&w, s2, n2), max_steps, Strategy::Leftmost);
                    if !(a.complete && b.complete) {
                        inconclusive += 1;
                    } else if a.normal != b.normal {
                        unresolved.push(Word(w));
                    }
                }
            }
        }
        CriticalPairReport {
            checked,
            unresolved,
            inconclusive,
        }
    }
}

/// Outcome of [`RewriteSystem::critical_pairs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPairReport {
    /// Number of overlap words examined.
    pub checked: usize,
    /// Overlap words whose two reductions differ.
    pub unresolved: Vec<Word>,
    /// Overlaps whose reduction exhausted the budget.
    pub inconclusive: usize,
}

impl CriticalPairReport {
    /// `true` iff every critical pair resolves within budget.
    pub fn confluent(&self) -> bool {
        self.unresolved.is_empty() && self.inconclusive == 0
    }
}
