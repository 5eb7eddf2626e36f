//! Homological monodromy: carry arcs around the three sectors, recording the
//! update matrices `R^i` and the total displacement `[a^4 - a^1]`.

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::intlin::{lattice_intersection, lattice_quotient, smith_normal_form, solve, unimodular_inverse, IntMatrix, Lattice};
use crate::surface::SurfaceModel;

/// Lifts `κ` of a basis of `L_i / (L_i ∩ L_j)` and `λ` of `L_j / (L_i ∩ L_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBases {
    pub kappa: IntMatrix,
    pub lambda: IntMatrix,
    pub shared: Lattice,
}

/// Picks lifts among `candidates` greedily, falling back to the quotient
/// complement when no subset of them works.
fn lift(sup: &Lattice, shared: &Lattice, candidates: &IntMatrix) -> Result<IntMatrix> {
    let q = lattice_quotient(shared, sup)?;
    if !q.invariant_factors.is_empty() {
        return Err(Error::NotDirectSummand(format!(
            "intersection has index {:?} in its saturation",
            q.invariant_factors
        )));
    }
    let need = sup.rank() - shared.rank();
    let k = shared.rank();
    let Some(coords) = sup.coordinates(&shared.basis().hstack(candidates)) else {
        return Ok(q.complement);
    };
    let mut picked = coords.submatrix(0..coords.rows(), 0..k);
    let mut idx = Vec::with_capacity(need);
    for j in 0..candidates.cols() {
        if idx.len() == need {
            break;
        }
        let trial = picked.hstack(&coords.submatrix(0..coords.rows(), k + j..k + j + 1));
        let snf = smith_normal_form(&trial);
        if snf.rank() == trial.cols() && snf.torsion().is_empty() {
            picked = trial;
            idx.push(j);
        }
    }
    let chosen = candidates.select_columns(&idx);
    Ok(if chosen.cols() == need { chosen } else { q.complement })
}

pub fn quotient_bases(li: &Lattice, lj: &Lattice) -> Result<QuotientBases> {
    let shared = lattice_intersection(li, lj)?;
    let kappa = lift(li, &shared, li.basis())?;
    let lambda = lift(lj, &shared, lj.basis())?;
    Ok(QuotientBases { kappa, lambda, shared })
}

/// As [`quotient_bases`] for the spans of two curve systems, preferring lifts
/// among the systems' own curves.
pub fn quotient_bases_from_classes(mi: &IntMatrix, mj: &IntMatrix) -> Result<QuotientBases> {
    let (li, lj) = (Lattice::from_generators(mi), Lattice::from_generators(mj));
    let shared = lattice_intersection(&li, &lj)?;
    let kappa = lift(&li, &shared, mi)?;
    let lambda = lift(&lj, &shared, mj)?;
    Ok(QuotientBases { kappa, lambda, shared })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcStep {
    /// `R = -(a·λ)(κ·λ)^{-1}`, one row per arc.
    pub r: IntMatrix,
    /// `κ Rᵀ`: column `j` is `[a^{i+1}_j - a^i_j]` in `H_1(Σ)`.
    pub displacement: IntMatrix,
    pub next: IntMatrix,
}

pub fn arc_step(surface: &SurfaceModel, arcs: &IntMatrix, qb: &QuotientBases) -> Result<ArcStep> {
    let kl = surface.curve_pairing(&qb.kappa, &qb.lambda)?;
    let inv = unimodular_inverse(&kl).map_err(|e| Error::NotUnimodular(format!("κ·λ: {e}")))?;
    let al = surface.arc_pairing(arcs, &qb.lambda)?;
    let r = -&(&al * &inv);
    let displacement = &qb.kappa * &r.transpose();
    let next = arcs.add(&(surface.to_relative() * &displacement));
    Ok(ArcStep { r, displacement, next })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyResult {
    pub bases: Vec<QuotientBases>,
    pub r: [IntMatrix; 3],
    /// `a^1 … a^4` in the relative basis.
    pub arc_history: Vec<IntMatrix>,
    /// Columns `[a^4_j - a^1_j]` in `H_1(Σ)`.
    pub displacement: IntMatrix,
    /// Coefficients `c` with `[a^4_i - a^1_i] = Σ_j c_ji ([α_j] + [η_j])`;
    /// only computed in standardized position.
    pub a_psi: Option<IntMatrix>,
}

pub fn monodromy_action(d: &Diagram) -> Result<MonodromyResult> {
    let s = &d.surface;
    let mut arcs = d.arcs_or_empty()?;
    let mut bases = Vec::with_capacity(3);
    let mut rs = Vec::with_capacity(3);
    let mut arc_history = vec![arcs.clone()];
    let mut displacement = IntMatrix::zeros(s.rank(), arcs.cols());
    for i in 0..3 {
        let qb = quotient_bases_from_classes(d.system(i), d.system(i + 1))?;
        let step = arc_step(s, &arcs, &qb)?;
        displacement = displacement.add(&step.displacement);
        arcs = step.next;
        arc_history.push(arcs.clone());
        rs.push(step.r);
        bases.push(qb);
    }
    let a_psi = if d.is_standardized_position() { decompose(d, &displacement)? } else { None };
    let r: [IntMatrix; 3] = rs.try_into().expect("three steps");
    Ok(MonodromyResult { bases, r, arc_history, displacement, a_psi })
}

fn decompose(d: &Diagram, displacement: &IntMatrix) -> Result<Option<IntMatrix>> {
    let l = d.params.l();
    let eta = match (&d.eta, l) {
        (Some(e), _) => e.clone(),
        (None, 0) => IntMatrix::zeros(d.surface.rank(), 0),
        (None, _) => return Ok(None),
    };
    if l > d.params.curves() {
        return Err(Error::DecompositionFailed(format!("l = {l} exceeds g - p = {}", d.params.curves())));
    }
    let span = d.alpha.submatrix(0..d.surface.rank(), 0..l).add(&eta);
    solve(&span, displacement)
        .map(Some)
        .ok_or_else(|| Error::DecompositionFailed("displacement leaves the span of alpha_j + eta_j".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::synthesize_diagram;

    fn torus() -> SurfaceModel {
        SurfaceModel::new(1, 1).unwrap()
    }

    #[test]
    fn quotient_examples() {
        let s = torus();
        let a = Lattice::from_generators(&IntMatrix::column_vector(&s.unit(0)));
        let b = Lattice::from_generators(&IntMatrix::column_vector(&s.unit(1)));
        let qb = quotient_bases(&a, &b).unwrap();
        assert_eq!((qb.kappa.column(0), qb.lambda.column(0)), (s.unit(0), s.unit(1)));
        let qb = quotient_bases(&a, &a).unwrap();
        assert_eq!((qb.kappa.cols(), qb.lambda.cols()), (0, 0));
        let qb = quotient_bases(&Lattice::full(2), &b).unwrap();
        assert_eq!(qb.kappa, IntMatrix::column_vector(&s.unit(0)));
        assert_eq!(qb.lambda.cols(), 0);
    }

    #[test]
    fn non_summand_intersection() {
        let l1 = Lattice::from_generators(&IntMatrix::from_rows(&[[2], [0]]));
        let l2 = Lattice::full(2);
        assert!(matches!(quotient_bases(&l2, &l1), Err(Error::NotDirectSummand(_))));
    }

    #[test]
    fn worked_trace() {
        let d = synthesize_diagram(&IntMatrix::zeros(0, 0), &IntMatrix::from_rows(&[[1]]), 1, 0, 2).unwrap();
        let m = monodromy_action(&d).unwrap();
        assert_eq!(m.r[0], IntMatrix::from_rows(&[[0]]));
        assert_eq!(m.r[1], IntMatrix::from_rows(&[[-1]]));
        assert_eq!(m.r[2], IntMatrix::from_rows(&[[-1]]));
        assert_eq!(m.displacement, IntMatrix::from_rows(&[[1], [0], [1]]));
        assert_eq!(m.a_psi, Some(IntMatrix::from_rows(&[[1]])));
        assert_eq!(m.arc_history.len(), 4);
    }

    #[test]
    fn disk_is_empty() {
        let d = synthesize_diagram(&IntMatrix::zeros(0, 0), &IntMatrix::zeros(0, 0), 0, 0, 1).unwrap();
        let m = monodromy_action(&d).unwrap();
        assert_eq!(m.displacement.shape(), (0, 0));
        assert_eq!(m.a_psi.unwrap().shape(), (0, 0));
    }

    #[test]
    fn step_with_no_pairing_keeps_arcs() {
        let s = SurfaceModel::new(1, 2).unwrap();
        let arcs = IntMatrix::column_vector(&s.unit(2));
        let qb = quotient_bases(
            &Lattice::from_generators(&IntMatrix::column_vector(&s.unit(0))),
            &Lattice::from_generators(&IntMatrix::column_vector(&s.unit(1))),
        )
        .unwrap();
        let st = arc_step(&s, &arcs, &qb).unwrap();
        assert!(st.r.is_zero());
        assert_eq!(st.next, arcs);
    }
}
