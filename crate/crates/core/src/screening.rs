//! Single-integral screening operators and exact graded kernels.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::rat::{int, rat, to_pretty, to_text, Rat};
use crate::error::{Error, Result};
use crate::fock::{enumerate_graded, nth_product, ConformalVector, FockState, ModuleSpec, Monomial};
use crate::lattice::{format_vector, QuadSpace, WeightVector};
use crate::linalg::echelon;
use crate::realizations::wakimoto;

/// A screening operator: the zero mode of `Y(dressing · e^{charge}, z)`.
#[derive(Clone, Debug)]
pub struct Screening {
    name: String,
    charge: WeightVector,
    dressing: FockState,
}

impl Screening {
    /// A screening with the given momentum-free dressing.
    pub fn new(name: &str, charge: WeightVector, dressing: FockState) -> Result<Self> {
        if !Arc::ptr_eq(charge.space(), dressing.space()) && **charge.space() != **dressing.space() {
            return Err(Error::SpaceMismatch(format!("screening {name}")));
        }
        if dressing.momenta().iter().any(|m| m.iter().any(|x| !x.is_zero())) {
            return Err(Error::Domain("screening dressing must carry no momentum".into()));
        }
        Ok(Screening {
            name: name.to_string(),
            charge,
            dressing,
        })
    }

    /// The bare exponential screening `e^{charge}`.
    pub fn exponential(name: &str, charge: WeightVector) -> Self {
        let dressing = FockState::vacuum(charge.space().clone());
        Screening {
            name: name.to_string(),
            charge,
            dressing,
        }
    }

    /// Display name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Momentum carried by the screening current.
    pub fn charge(&self) -> &WeightVector {
        &self.charge
    }

    /// The screening current `dressing · e^{charge}`.
    pub fn current(&self) -> FockState {
        self.dressing
            .with_momentum(self.charge.coeffs())
            .expect("dressing is momentum-free")
    }

    /// Applies the zero mode to `s`.
    pub fn apply(&self, s: &FockState) -> Result<FockState> {
        let space = s.space();
        for mu in s.momenta() {
            let pairing = space.pair_coeffs(self.charge.coeffs(), &mu);
            if !pairing.is_integer() {
                return Err(Error::Domain(format!(
                    "screening {} is multivalued on momentum {}: pairing {}",
                    self.name,
                    format_vector(space, &mu),
                    to_pretty(&pairing)
                )));
            }
        }
        nth_product(&self.current(), 0, s)
    }

    /// Shift of the h-weight and of the conformal weight under the screening.
    pub fn bidegree(&self, module: &ModuleSpec, l: &ConformalVector) -> (Rat, Rat) {
        let h = module.h_weight(self.charge.coeffs());
        let current = self.current();
        let conf = current
            .terms()
            .next()
            .map(|(m, _)| l.monomial_weight(m))
            .unwrap_or_else(Rat::zero);
        (h, conf - int(1))
    }
}

/// Screening labels understood by [`named_screening`].
pub const SCREENING_NAMES: &[&str] = &[
    "Qplus", "QFMS", "Qminus", "S1", "S2", "Shat1", "Shat2", "Shat1s", "Shat2s", "Qvir+", "Qvir-",
];

/// Builds a named screening at parameter `p`.
///
/// `Qplus`, `QFMS`, `Qminus`, `S1`, `S2`, `Qvir+`, `Qvir-` live on the main
/// space `u, v, a`; `Shat1`, `Shat2` on the rescaled super side and
/// `Shat1s`, `Shat2s` on the unscaled super side.
pub fn named_screening(label: &str, p: u32) -> Result<Screening> {
    let pr = int(p as i64);
    let main = || QuadSpace::main(p);
    let vector = |space: Arc<QuadSpace>, parts: &[(&str, Rat)]| WeightVector::from_named(space, parts);
    let charge = match label {
        "Qplus" => vector(main(), &[("u", int(1)), ("v", int(1)), ("a", pr.clone())])?,
        "QFMS" | "S1" => {
            if label == "S1" && p != 1 {
                return Err(Error::Precondition("S1 is defined for p = 1 only".into()));
            }
            vector(main(), &[("u", int(1))])?
        }
        "Qminus" => {
            if p < 2 {
                return Err(Error::Precondition("Qminus requires p ≥ 2; use S1, S2 at p = 1".into()));
            }
            let inv = rat(-1, p as i64);
            vector(main(), &[("u", inv.clone()), ("v", inv), ("a", int(-1))])?
        }
        "S2" => {
            if p != 1 {
                return Err(Error::Precondition("S2 is defined for p = 1 only".into()));
            }
            vector(main(), &[("v", int(-1)), ("a", int(-1))])?
        }
        "Shat1" => vector(QuadSpace::super_side(p), &[("a", int(-1))])?,
        "Shat2" => vector(
            QuadSpace::super_side(p),
            &[("x", int(1)), ("a", rat(1, 2)), ("ad", rat(-1, 2))],
        )?,
        "Shat1s" => vector(
            QuadSpace::super_side_unscaled(),
            &[("x", int(1)), ("alpha", rat(-1, 2)), ("alphad", rat(-1, 2))],
        )?,
        "Shat2s" => vector(
            QuadSpace::super_side_unscaled(),
            &[("x", int(1)), ("alpha", rat(1, 2)), ("alphad", rat(-1, 2))],
        )?,
        "Qvir+" => vector(main(), &[("a", pr)])?,
        "Qvir-" => vector(main(), &[("a", int(-1))])?,
        other => return Err(Error::UnknownName(other.to_string())),
    };
    Ok(Screening::exponential(label, charge))
}

/// The module `Π[0] ⊗ V_{√p A₁}`: momenta `n(u+v) + m·p·a`, graded by the
/// zero mode of `h = −2v − a`.
pub fn affine_module(p: u32) -> ModuleSpec {
    let space = QuadSpace::main(p);
    ModuleSpec {
        space,
        offset: vec![Rat::zero(); 3],
        generators: vec![vec![int(1), int(1), int(0)], vec![int(0), int(0), int(p as i64)]],
        cartan: vec![int(0), int(-2), int(-1)],
        label: format!("Pi0 x V(sqrt{p} A1)"),
    }
}

/// The Sugawara conformal vector of the Wakimoto realization at `p`.
pub fn affine_conformal(p: u32) -> Result<ConformalVector> {
    ConformalVector::from_state(wakimoto(p)?.image("L")?)
}

/// An exact basis of a joint kernel on one bigraded component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    /// h-weight of the component.
    pub h_weight: Rat,
    /// Conformal weight of the component.
    pub conf_weight: Rat,
    /// Dimension of the whole component.
    pub component_dim: usize,
    /// Canonical kernel basis.
    pub vectors: Vec<FockState>,
}

impl Kernel {
    /// Kernel dimension.
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

/// Joint kernel of `screenings` on the component of `module` with h-weight
/// `h` and conformal weight `conf`, by exact fraction-free row reduction of
/// the stacked screening matrices.
pub fn kernel_basis(
    screenings: &[Screening],
    module: &ModuleSpec,
    h: &Rat,
    conf: &Rat,
    l: &ConformalVector,
) -> Result<Kernel> {
    let graded = enumerate_graded(module, h, conf, l)?;
    let cols = graded.basis.len();
    let mut row_index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut entries: Vec<(usize, usize, Rat)> = Vec::new();
    for (j, m) in graded.basis.iter().enumerate() {
        let state = FockState::from_terms(module.space.clone(), [(m.clone(), int(1))]);
        for (si, s) in screenings.iter().enumerate() {
            for (tm, c) in s.apply(&state)?.terms() {
                let next = row_index.len();
                let i = *row_index.entry((si, tm.clone())).or_insert(next);
                entries.push((i, j, c.clone()));
            }
        }
    }
    let mut rows: Vec<BTreeMap<usize, Rat>> = vec![BTreeMap::new(); row_index.len()];
    for (i, j, c) in entries {
        *rows[i].entry(j).or_insert_with(Rat::zero) += c;
    }
    let vectors = echelon(rows.into_iter().map(|r| r.into_iter().collect()))
        .null_space(cols)
        .into_iter()
        .map(|x| {
            FockState::from_terms(
                module.space.clone(),
                graded.basis.iter().cloned().zip(x).filter(|(_, c)| !c.is_zero()),
            )
        })
        .collect();
    Ok(Kernel {
        h_weight: h.clone(),
        conf_weight: conf.clone(),
        component_dim: cols,
        vectors,
    })
}

/// One cell of a kernel dimension table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelCell {
    /// h-weight, as `"num/den"`.
    #[serde(serialize_with = "crate::report::rat_text")]
    pub h_weight: Rat,
    /// Conformal weight, as `"num/den"`.
    #[serde(serialize_with = "crate::report::rat_text")]
    pub conf_weight: Rat,
    /// Dimension of the component.
    pub component_dim: usize,
    /// Dimension of the joint kernel.
    pub kernel_dim: usize,
}

/// Conformal weights `≤ max_conf` occurring at h-weight `h` in `module`.
pub fn conformal_weights(module: &ModuleSpec, h: &Rat, max_conf: &Rat, l: &ConformalVector) -> Result<Vec<Rat>> {
    let mut out = Vec::new();
    for mu in module.momenta(h, max_conf, l)? {
        let mut w = l.momentum_weight(&mu);
        while &w <= max_conf {
            out.push(w.clone());
            w += int(1);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Kernel dimensions over all nonempty cells with h-weight in
/// `window = (lo, hi)` and conformal weight at most `max_conf`, computed in
/// parallel and returned in (h, conf) order.
pub fn kernel_dim_table(
    screenings: &[Screening],
    module: &ModuleSpec,
    max_conf: &Rat,
    window: (i64, i64),
    l: &ConformalVector,
) -> Result<Vec<KernelCell>> {
    let mut cells = Vec::new();
    for h in window.0..=window.1 {
        let h = int(h);
        for conf in conformal_weights(module, &h, max_conf, l)? {
            cells.push((h.clone(), conf));
        }
    }
    cells
        .into_par_iter()
        .map(|(h, conf)| {
            let k = kernel_basis(screenings, module, &h, &conf, l)?;
            Ok(KernelCell {
                h_weight: h,
                conf_weight: conf,
                component_dim: k.component_dim,
                kernel_dim: k.dim(),
            })
        })
        .collect()
}

/// Renders a table as aligned text rows.
pub fn format_table(cells: &[KernelCell]) -> String {
    let mut out = String::from("h\tconf\tcomponent\tkernel\n");
    for c in cells {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            to_text(&c.h_weight),
            to_text(&c.conf_weight),
            c.component_dim,
            c.kernel_dim
        ));
    }
    out
}
