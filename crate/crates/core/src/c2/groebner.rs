//! Buchberger's algorithm with the coprime-leading-monomial criterion, and
//! reduced Gröbner bases.

use std::collections::VecDeque;

use super::poly::Poly;

/// Full reduction of `f` modulo `basis`: no term of the result is divisible
/// by a leading monomial of `basis`.
pub fn normal_form(f: &Poly, basis: &[Poly]) -> Poly {
    let divisors: Vec<&Poly> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut rest = f.clone();
    let mut out = Poly::zero(f.ring());
    while let Some((m, c)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
        match divisors.iter().find(|g| g.leading().expect("nonzero").0.divides(&m)) {
            Some(g) => {
                let (lm, lc) = g.leading().expect("nonzero");
                rest = rest.sub(&g.mul_term(&(&c / lc), &lm.quotient(&m)));
            }
            None => {
                out.add_term(m.clone(), c.clone());
                rest.add_term(m, -c);
            }
        }
    }
    out
}

/// The S-polynomial of `f` and `g`.
pub fn s_polynomial(f: &Poly, g: &Poly) -> Poly {
    let (mf, cf) = f.leading().expect("nonzero");
    let (mg, cg) = g.leading().expect("nonzero");
    let l = mf.lcm(mg);
    f.mul_term(&cf.recip(), &mf.quotient(&l))
        .sub(&g.mul_term(&cg.recip(), &mg.quotient(&l)))
}

/// The reduced Gröbner basis of the ideal generated by `gens`, monic and
/// sorted by leading monomial.
pub fn groebner(gens: &[Poly]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).map(Poly::monic).collect();
    let mut pairs: VecDeque<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop_front() {
        let (mi, _) = basis[i].leading().expect("nonzero");
        let (mj, _) = basis[j].leading().expect("nonzero");
        if mi.coprime(mj) {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    reduce_basis(basis)
}

/// Turns a Gröbner basis into the reduced one.
fn reduce_basis(mut basis: Vec<Poly>) -> Vec<Poly> {
    basis.sort_by(|a, b| a.leading().map(|l| l.0).cmp(&b.leading().map(|l| l.0)));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        let (m, _) = g.leading().expect("nonzero");
        if !minimal.iter().any(|h| h.leading().expect("nonzero").0.divides(m)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (lm, lc) = minimal[i]
            .leading()
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero");
        let mut tail = minimal[i].clone();
        tail.add_term(lm.clone(), -lc.clone());
        let mut g = normal_form(&tail, &others);
        g.add_term(lm, lc);
        reduced.push(g.monic());
    }
    reduced
}

/// `true` if every S-polynomial of `basis` reduces to zero.
pub fn is_groebner(basis: &[Poly]) -> bool {
    (0..basis.len()).all(|j| (0..j).all(|i| normal_form(&s_polynomial(&basis[i], &basis[j]), basis).is_zero()))
}

/// Ideal membership by normal form against a Gröbner basis.
pub fn ideal_member(f: &Poly, basis: &[Poly]) -> bool {
    normal_form(f, basis).is_zero()
}
