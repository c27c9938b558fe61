//! Quadratic spaces with named generators, rational weight vectors and the
//! sign cocycles of integral lattices.
//!
//! Every space stores a rational Gram matrix. Generators that would carry a
//! factor `√p` are rescaled so all coefficients stay rational: the main
//! space uses `a = α/√p` with `(a, a) = 2/p`, so `√p·α = p·a` and
//! `ϖ = ½α = (p/2)·a` when multiplied through by `√p`.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::arith::rat::{floor_i64, int, rat, to_pretty, Rat};
use crate::error::{Error, Result};

/// Bimultiplicative sign cocycle `ε(x, y) = (−1)^{Σ c_ij ⌊x_i⌋⌊y_j⌋}` on an
/// integral lattice, where `x_i` are lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Cocycle {
    /// Rows map space coordinates to lattice coordinates.
    to_lattice: Vec<Vec<Rat>>,
    /// `odd[i][j]` is the parity of `c_ij` (nonzero only for `i > j`).
    odd: Vec<Vec<bool>>,
}

/// Named basis with a symmetric rational Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSpace {
    names: Vec<String>,
    gram: Vec<Vec<Rat>>,
    cocycle: Option<Cocycle>,
}

/// Inverse of a square rational matrix by Gauss–Jordan elimination.
pub fn invert_matrix(m: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or_else(|| Error::Domain("lattice basis is degenerate".into()))?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..2 * n {
                    let d = &aug[col][c] * &f;
                    aug[r][c] -= d;
                }
            }
        }
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

impl QuadSpace {
    /// Builds a space from generator names and a symmetric Gram matrix.
    pub fn new(names: Vec<String>, gram: Vec<Vec<Rat>>) -> Result<Self> {
        let n = names.len();
        if gram.len() != n || gram.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("Gram matrix shape does not match names".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Domain("Gram matrix is not symmetric".into()));
                }
            }
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::Domain(format!("duplicate generator name {a}")));
            }
        }
        Ok(QuadSpace {
            names,
            gram,
            cocycle: None,
        })
    }

    /// Diagonal space from `(name, norm)` pairs.
    pub fn diagonal(entries: &[(&str, Rat)]) -> Result<Self> {
        let n = entries.len();
        let mut gram = vec![vec![Rat::zero(); n]; n];
        for (i, (_, g)) in entries.iter().enumerate() {
            gram[i][i] = g.clone();
        }
        Self::new(entries.iter().map(|(s, _)| s.to_string()).collect(), gram)
    }

    /// Declares an integral lattice by a basis (rows of space coordinates)
    /// and installs its sign cocycle.
    pub fn with_lattice(mut self, basis: Vec<Vec<Rat>>) -> Result<Self> {
        let n = self.dim();
        if basis.len() != n || basis.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("lattice basis must be square".into()));
        }
        let g = |i: usize, j: usize| -> Rat {
            let mut acc = Rat::zero();
            for a in 0..n {
                for b in 0..n {
                    acc += &basis[i][a] * &self.gram[a][b] * &basis[j][b];
                }
            }
            acc
        };
        let mut odd = vec![vec![false; n]; n];
        for i in 0..n {
            let gii = g(i, i);
            for j in 0..i {
                let c = g(i, j) + &gii * g(j, j);
                if !c.is_integer() {
                    return Err(Error::Domain("lattice is not integral".into()));
                }
                odd[i][j] = c.numer() % 2 != num_bigint::BigInt::zero();
            }
        }
        // Columns of the transposed basis; inverse maps coordinates back.
        let columns: Vec<Vec<Rat>> = (0..n).map(|a| (0..n).map(|i| basis[i][a].clone()).collect()).collect();
        let to_lattice = invert_matrix(&columns)?;
        self.cocycle = Some(Cocycle { to_lattice, odd });
        Ok(self)
    }

    /// Block-diagonal sum of the given spaces; lattice data is not carried.
    pub fn tensor(spaces: &[&QuadSpace]) -> Result<Self> {
        let n: usize = spaces.iter().map(|s| s.dim()).sum();
        let mut names = Vec::with_capacity(n);
        let mut gram = vec![vec![Rat::zero(); n]; n];
        let mut off = 0;
        for s in spaces {
            for i in 0..s.dim() {
                names.push(s.names[i].clone());
                for j in 0..s.dim() {
                    gram[off + i][off + j] = s.gram[i][j].clone();
                }
            }
            off += s.dim();
        }
        Self::new(names, gram)
    }

    /// `Π[0] ⊗ V_{√p A₁}` with generators `u, v, a` (`a = α/√p`) and the
    /// lattice spanned by `u+v`, `u` and `p·a`.
    pub fn main(p: u32) -> Arc<Self> {
        let p = p as i64;
        let space = Self::diagonal(&[("u", int(1)), ("v", int(-1)), ("a", rat(2, p))])
            .expect("valid space")
            .with_lattice(vec![
                vec![int(1), int(1), int(0)],
                vec![int(1), int(0), int(0)],
                vec![int(0), int(0), int(p)],
            ])
            .expect("integral lattice");
        Arc::new(space)
    }

    /// The super side `V_ℤ ⊗ π^{α,α†}` with generators `x, a, ad`
    /// (`a = α/√p`, `ad = α†/√p`).
    pub fn super_side(p: u32) -> Arc<Self> {
        let p = p as i64;
        let space = Self::diagonal(&[("x", int(1)), ("a", rat(2, p)), ("ad", rat(-2, p))])
            .expect("valid space")
            .with_lattice(vec![
                vec![int(1), int(0), int(0)],
                vec![int(0), int(p), int(0)],
                vec![int(0), int(0), int(p)],
            ])
            .expect("integral lattice");
        Arc::new(space)
    }

    /// The unscaled super side with generators `x, alpha, alphad`,
    /// Gram `diag(1, 2, −2)`.
    pub fn super_side_unscaled() -> Arc<Self> {
        let space = Self::diagonal(&[("x", int(1)), ("alpha", int(2)), ("alphad", int(-2))])
            .expect("valid space")
            .with_lattice(vec![
                vec![int(1), int(0), int(0)],
                vec![int(0), int(1), int(0)],
                vec![int(0), int(0), int(1)],
            ])
            .expect("integral lattice");
        Arc::new(space)
    }

    /// A rank-one Heisenberg space `{u}` with `(u, u) = 1` and lattice `ℤu`.
    pub fn rank_one(name: &str) -> Arc<Self> {
        let space = Self::diagonal(&[(name, int(1))])
            .expect("valid space")
            .with_lattice(vec![vec![int(1)]])
            .expect("integral lattice");
        Arc::new(space)
    }

    /// The sl₂ weight line `{varpi}` with `(ϖ, ϖ) = 1/2`.
    pub fn sl2_weights() -> Arc<Self> {
        Arc::new(Self::diagonal(&[("varpi", rat(1, 2))]).expect("valid space"))
    }

    /// Number of generators.
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Generator names in order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of a named generator.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Gram entry `(g_i, g_j)`.
    pub fn gram(&self, i: usize, j: usize) -> &Rat {
        &self.gram[i][j]
    }

    /// Pairing of two coefficient vectors.
    pub fn pair_coeffs(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || self.gram[i][j].is_zero() {
                    continue;
                }
                acc += xi * &self.gram[i][j] * yj;
            }
        }
        acc
    }

    /// Pairing of a generator with a coefficient vector.
    pub fn pair_gen(&self, g: usize, y: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() && !self.gram[g][j].is_zero() {
                acc += &self.gram[g][j] * yj;
            }
        }
        acc
    }

    /// `true` if a lattice cocycle is installed.
    pub fn has_lattice(&self) -> bool {
        self.cocycle.is_some()
    }

    /// Lattice coordinates of a coefficient vector, if a lattice is declared.
    pub fn lattice_coords(&self, x: &[Rat]) -> Option<Vec<Rat>> {
        self.cocycle.as_ref().map(|c| {
            c.to_lattice
                .iter()
                .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
                .collect()
        })
    }

    /// Cocycle sign `ε(x, y) ∈ {±1}`; fractional coordinates enter through
    /// their floors. Trivial when no lattice is declared.
    pub fn cocycle_sign(&self, x: &[Rat], y: &[Rat]) -> i64 {
        let Some(c) = &self.cocycle else { return 1 };
        let lx = self.lattice_coords(x).expect("lattice present");
        let ly = self.lattice_coords(y).expect("lattice present");
        let mut parity = 0i64;
        for i in 0..lx.len() {
            for j in 0..i {
                if c.odd[i][j] {
                    parity += floor_i64(&lx[i]).rem_euclid(2) * floor_i64(&ly[j]).rem_euclid(2);
                }
            }
        }
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// A rational vector in a [`QuadSpace`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    space: Arc<QuadSpace>,
    coeffs: Vec<Rat>,
}

impl WeightVector {
    /// Builds a vector; fails if the length does not match the space.
    pub fn new(space: Arc<QuadSpace>, coeffs: Vec<Rat>) -> Result<Self> {
        if coeffs.len() != space.dim() {
            return Err(Error::SpaceMismatch(format!(
                "expected {} coefficients, got {}",
                space.dim(),
                coeffs.len()
            )));
        }
        Ok(WeightVector { space, coeffs })
    }

    /// The zero vector.
    pub fn zero(space: Arc<QuadSpace>) -> Self {
        let n = space.dim();
        WeightVector {
            space,
            coeffs: vec![Rat::zero(); n],
        }
    }

    /// The vector `Σ c·g` from `(name, c)` pairs.
    pub fn from_named(space: Arc<QuadSpace>, parts: &[(&str, Rat)]) -> Result<Self> {
        let mut v = Self::zero(space);
        for (name, c) in parts {
            let i = v.space.index_of(name)?;
            v.coeffs[i] += c;
        }
        Ok(v)
    }

    /// Ambient space.
    pub fn space(&self) -> &Arc<QuadSpace> {
        &self.space
    }

    /// Coefficients in the generator basis.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || *self.space == *other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch("vectors live in different spaces".into()))
        }
    }

    /// Bilinear pairing `xᵀ G y`.
    pub fn pair(&self, other: &Self) -> Result<Rat> {
        self.same_space(other)?;
        Ok(self.space.pair_coeffs(&self.coeffs, &other.coeffs))
    }

    /// Vector sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(WeightVector {
            space: self.space.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> Self {
        WeightVector {
            space: self.space.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `true` for the zero vector.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_vector(&self.space, &self.coeffs))
    }
}

/// Canonical text of a coefficient vector, e.g. `u+v-1/2*a`.
pub fn format_vector(space: &QuadSpace, coeffs: &[Rat]) -> String {
    let mut s = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        let a = c.abs();
        if !a.is_one() {
            s.push_str(&to_pretty(&a));
            s.push('*');
        }
        s.push_str(&space.names[i]);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// The scalar `a_{r,s} = ((1−s)p + (r−1)) / (2p)`.
pub fn a_rs(p: i64, r: i64, s: i64) -> Rat {
    rat((1 - s) * p + (r - 1), 2 * p)
}

/// `λ_{r,s} = s − 1 − (r−1)/p` in units of `ϖ`.
pub fn lambda_rs(p: i64, r: i64, s: i64) -> Rat {
    int(s - 1) - rat(r - 1, p)
}

/// `Δ_{r,s} = ((sp − (r−1))² − p²) / 4p`.
pub fn delta_rs(p: i64, r: i64, s: i64) -> Rat {
    let t = s * p - (r - 1);
    rat(t * t - p * p, 4 * p)
}

/// Named weights of the realizations, returned in the basis of the space
/// they live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedWeight {
    /// `α_{r,s}` in the main space (`a`-coefficient `((r−1) − (s−1)p)/2`).
    AlphaRS,
    /// `λ_{r,s}` on the sl₂ weight line.
    LambdaRS,
    /// `β̃₁`, variant a (rescaled super side).
    BetaTildeA1,
    /// `β̃₂`, variant a (rescaled super side).
    BetaTildeA2,
    /// `β̃₁`, variant s (unscaled super side).
    BetaTildeS1,
    /// `β̃₂`, variant s (unscaled super side).
    BetaTildeS2,
}

impl NamedWeight {
    /// Parses labels such as `alpha_rs`, `lambda_rs`, `beta_a1`, `beta_s2`.
    pub fn from_label(label: &str) -> Result<Self> {
        Ok(match label {
            "alpha_rs" => NamedWeight::AlphaRS,
            "lambda_rs" => NamedWeight::LambdaRS,
            "beta_a1" => NamedWeight::BetaTildeA1,
            "beta_a2" => NamedWeight::BetaTildeA2,
            "beta_s1" => NamedWeight::BetaTildeS1,
            "beta_s2" => NamedWeight::BetaTildeS2,
            other => return Err(Error::UnknownName(other.to_string())),
        })
    }
}

/// Builds a named weight for parameters `p, r, s`.
pub fn named_weight(name: NamedWeight, p: u32, r: i64, s: i64) -> Result<WeightVector> {
    let pi = p as i64;
    match name {
        NamedWeight::AlphaRS => {
            if r < 1 || r > pi {
                return Err(Error::Domain(format!("r = {r} outside 1..={p}")));
            }
            WeightVector::from_named(QuadSpace::main(p), &[("a", rat((r - 1) - (s - 1) * pi, 2))])
        }
        NamedWeight::LambdaRS => WeightVector::from_named(QuadSpace::sl2_weights(), &[("varpi", lambda_rs(pi, r, s))]),
        NamedWeight::BetaTildeA1 => WeightVector::from_named(QuadSpace::super_side(p), &[("a", int(-1))]),
        NamedWeight::BetaTildeA2 => WeightVector::from_named(
            QuadSpace::super_side(p),
            &[("x", int(1)), ("a", rat(1, 2)), ("ad", rat(-1, 2))],
        ),
        NamedWeight::BetaTildeS1 => WeightVector::from_named(
            QuadSpace::super_side_unscaled(),
            &[("x", int(1)), ("alpha", rat(-1, 2)), ("alphad", rat(-1, 2))],
        ),
        NamedWeight::BetaTildeS2 => WeightVector::from_named(
            QuadSpace::super_side_unscaled(),
            &[("x", int(1)), ("alpha", rat(1, 2)), ("alphad", rat(-1, 2))],
        ),
    }
}
