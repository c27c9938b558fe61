//! Exact linear algebra on sparse rows: fraction-free elimination with
//! content removal, ranks and canonical null spaces.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::rat::{denominator_lcm, Rat};

/// A sparse integer row: `(column, entry)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Clears denominators of a sparse rational row and drops zeros.
pub fn integer_row(row: &[(usize, Rat)]) -> SparseRow {
    let l = denominator_lcm(row.iter().map(|(_, x)| x));
    let mut out: SparseRow = row
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (*j, (x * Rat::from_integer(l.clone())).to_integer()))
        .collect();
    out.sort_by_key(|(j, _)| *j);
    primitive(&mut out);
    out
}

/// Divides a row by the gcd of its entries and makes the leading entry
/// positive.
fn primitive(row: &mut SparseRow) {
    let Some((_, lead)) = row.first() else {
        return;
    };
    let sign_negative = lead.is_negative();
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if g.is_one() && !sign_negative {
        return;
    }
    let g = if sign_negative { -g } else { g };
    for (_, x) in row.iter_mut() {
        *x = &*x / &g;
    }
}

/// `ca·a − cb·b`, made primitive.
fn combine(a: &SparseRow, ca: &BigInt, b: &SparseRow, cb: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some((ca_col, x)), Some((cb_col, y))) if ca_col == cb_col => {
                i += 1;
                j += 1;
                (*ca_col, ca * x - cb * y)
            }
            (Some((ca_col, x)), Some((cb_col, _))) if ca_col < cb_col => {
                i += 1;
                (*ca_col, ca * x)
            }
            (Some((ca_col, x)), None) => {
                i += 1;
                (*ca_col, ca * x)
            }
            (_, Some((cb_col, y))) => {
                j += 1;
                (*cb_col, -(cb * y))
            }
            (None, None) => unreachable!("loop condition"),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    primitive(&mut out);
    out
}

/// Eliminates `column` from `row` using `pivot`, whose leading column it is.
fn eliminate(row: &SparseRow, pivot: &SparseRow, column: usize) -> SparseRow {
    let Ok(k) = row.binary_search_by_key(&column, |(j, _)| *j) else {
        return row.clone();
    };
    let x = &row[k].1;
    let p = &pivot[0].1;
    let g = x.gcd(p);
    combine(row, &(p / &g), pivot, &(x / &g))
}

/// Row echelon form keyed by pivot column. Every stored row is primitive
/// with a positive leading entry at its key.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    /// Empty echelon form.
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `row` against the stored pivots and stores the remainder if
    /// it is nonzero. Returns `true` if the rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        while let Some(&(lead, _)) = row.first() {
            match self.pivots.get(&lead) {
                Some(p) => row = eliminate(&row, p, lead),
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.keys().copied().collect()
    }

    /// Clears every pivot column from all other rows.
    pub fn reduce(&mut self) {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &c in &cols {
            let pivot = self.pivots[&c].clone();
            let above: Vec<usize> = self.pivots.range(..c).map(|(k, _)| *k).collect();
            for k in above {
                let row = &self.pivots[&k];
                if row.binary_search_by_key(&c, |(j, _)| *j).is_ok() {
                    let reduced = eliminate(row, &pivot, c);
                    self.pivots.insert(k, reduced);
                }
            }
        }
    }

    /// Canonical basis of the null space in `cols` unknowns: one vector per
    /// non-pivot column `f`, with `x_f = 1` and zeros at the other free
    /// columns.
    pub fn null_space(mut self, cols: usize) -> Vec<Vec<Rat>> {
        self.reduce();
        let free: Vec<usize> = (0..cols).filter(|c| !self.pivots.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rat::zero(); cols];
                x[f] = Rat::one();
                for (&pc, row) in &self.pivots {
                    if let Ok(k) = row.binary_search_by_key(&f, |(j, _)| *j) {
                        x[pc] = -Rat::new(row[k].1.clone(), row[0].1.clone());
                    }
                }
                x
            })
            .collect()
    }
}

/// Echelon form of sparse rational rows.
pub fn echelon(rows: impl IntoIterator<Item = Vec<(usize, Rat)>>) -> Echelon {
    let mut rows: Vec<SparseRow> = rows.into_iter().map(|r| integer_row(&r)).collect();
    rows.sort_by_key(|r| r.len());
    let mut e = Echelon::new();
    for row in rows {
        e.insert(row);
    }
    e
}

fn dense_rows(m: &[Vec<Rat>]) -> impl Iterator<Item = Vec<(usize, Rat)>> + '_ {
    m.iter().map(|row| {
        row.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect()
    })
}

/// Rank of a dense rational matrix.
pub fn rank(m: &[Vec<Rat>]) -> usize {
    echelon(dense_rows(m)).rank()
}

/// Canonical null space `{x : M x = 0}` of a dense rational matrix with
/// `cols` columns.
pub fn null_space(m: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    echelon(dense_rows(m)).null_space(cols)
}
