use num_bigint::BigInt;

use super::{compensated_gamma_change, standardize, Move, StandardizationResult, Target, TransformationRecord};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::intlin::{unimodular_inverse, IntMatrix};
use crate::invariants::{form_invariants, FormInvariants};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equivalent,
    NotEquivalent,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub verdict: Verdict,
    /// What decided a negative or inconclusive verdict.
    pub reason: Option<String>,
    pub params_equal: bool,
    pub monodromy_equal: bool,
    pub forms: [FormInvariants; 2],
    /// `P` with `Pᵀ Q_X P = Q_Y`, when one was found.
    pub congruence: Option<IntMatrix>,
    /// Common standardized `γ` class matrix.
    pub certificate: Option<IntMatrix>,
    pub notes: Vec<String>,
}

impl ComparisonReport {
    pub fn summary(&self) -> String {
        match (self.verdict, &self.reason) {
            (Verdict::Equivalent, _) => "equivalent".into(),
            (Verdict::NotEquivalent, Some(r)) => format!("not equivalent: {r}"),
            (Verdict::NotEquivalent, None) => "not equivalent".into(),
            (Verdict::Inconclusive, Some(r)) => format!("inconclusive: {r}"),
            (Verdict::Inconclusive, None) => "inconclusive".into(),
        }
    }
}

const BOX: i64 = 3;
const SEARCH_RANK: usize = 4;

/// Searches `P` with entries in `[-3, 3]`, `|det P| = 1`, `Pᵀ A P = B`,
/// column by column. Only meant for small definite forms.
pub fn find_congruence(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    let n = a.rows();
    if a.shape() != b.shape() || !a.is_square() {
        return None;
    }
    let side = (2 * BOX + 1) as usize;
    let total = side.pow(n as u32);
    let vectors: Vec<Vec<BigInt>> = (0..total)
        .map(|mut c| {
            (0..n)
                .map(|_| {
                    let d = (c % side) as i64 - BOX;
                    c /= side;
                    BigInt::from(d)
                })
                .collect()
        })
        .collect();
    let av: Vec<Vec<BigInt>> = vectors.iter().map(|v| a.apply(v)).collect();
    let dot = |x: &[BigInt], y: &[BigInt]| -> BigInt { x.iter().zip(y).map(|(p, q)| p * q).sum() };
    let per_column: Vec<Vec<usize>> =
        (0..n).map(|j| (0..total).filter(|&v| dot(&vectors[v], &av[v]) == b[(j, j)]).collect()).collect();

    fn search(
        j: usize,
        chosen: &mut Vec<usize>,
        per_column: &[Vec<usize>],
        ok: &dyn Fn(usize, usize, usize) -> bool,
        done: &dyn Fn(&[usize]) -> bool,
    ) -> bool {
        if j == per_column.len() {
            return done(chosen);
        }
        for &v in &per_column[j] {
            if (0..j).all(|i| ok(chosen[i], v, i * per_column.len() + j)) {
                chosen.push(v);
                if search(j + 1, chosen, per_column, ok, done) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let ok = |u: usize, v: usize, ij: usize| dot(&vectors[u], &av[v]) == b[(ij / n, ij % n)];
    let to_matrix = |idx: &[usize]| IntMatrix::from_columns(n, &idx.iter().map(|&v| vectors[v].clone()).collect::<Vec<_>>());
    let done = |idx: &[usize]| to_matrix(idx).is_unimodular();
    let mut chosen = Vec::with_capacity(n);
    search(0, &mut chosen, &per_column, &ok, &done).then(|| to_matrix(&chosen))
}

fn negative(reason: &str, params_equal: bool, monodromy_equal: bool, forms: [FormInvariants; 2]) -> ComparisonReport {
    ComparisonReport {
        verdict: Verdict::NotEquivalent,
        reason: Some(reason.into()),
        params_equal,
        monodromy_equal,
        forms,
        congruence: None,
        certificate: None,
        notes: Vec::new(),
    }
}

/// Compares two diagrams through their standardizations: parameters, the
/// monodromy matrices, then the intersection forms.
pub fn torelli_compare(dx: &Diagram, dy: &Diagram) -> Result<ComparisonReport> {
    let sx = standardize(dx)?;
    let sy = standardize(dy)?;
    let forms = [form_invariants(&sx.q)?, form_invariants(&sy.q)?];
    let params_equal = dx.params == dy.params;
    if !params_equal {
        return Ok(negative("parameters", false, false, forms));
    }
    let monodromy_equal = sx.a_psi.is_some() && sx.a_psi == sy.a_psi;
    if !monodromy_equal {
        return Ok(negative("monodromy", true, false, forms));
    }
    let [fx, fy] = &forms;
    for (name, differs) in [
        ("rank", fx.rank != fy.rank || sx.q.rows() != sy.q.rows()),
        ("signature", fx.signature != fy.signature),
        ("parity", fx.parity != fy.parity),
        ("determinant", fx.determinant != fy.determinant),
    ] {
        if differs {
            return Ok(negative(name, true, true, forms));
        }
    }
    let mut notes = vec!["monodromy compared as matrices in the canonical arc basis".to_string()];
    let definite = fx.is_definite(sx.q.rows());
    let congruence = if sx.q == sy.q {
        Some(IntMatrix::identity(sx.q.rows()))
    } else if sx.q.rows() <= SEARCH_RANK {
        find_congruence(&sx.q, &sy.q)
    } else {
        None
    };
    let certificate = match &congruence {
        Some(p) => certificate(&sx, &sy, p)?,
        None => None,
    };
    let (verdict, reason) = match (&congruence, definite) {
        (Some(_), _) => (Verdict::Equivalent, None),
        (None, false) => {
            notes.push("indefinite unimodular forms with equal rank, signature and parity are isomorphic".into());
            (Verdict::Equivalent, None)
        }
        (None, true) if sx.q.rows() <= SEARCH_RANK => {
            (Verdict::Inconclusive, Some(format!("no congruence with entries in [-{BOX}, {BOX}]")))
        }
        (None, true) => (Verdict::Inconclusive, Some(format!("definite forms of rank {} are not searched", sx.q.rows()))),
    };
    Ok(ComparisonReport { verdict, reason, params_equal, monodromy_equal, forms, congruence, certificate, notes })
}

/// Moves the standardized `Y` along `P^{-1}` on its `H_2` block and checks
/// that its `γ` lands on the standardized `γ` of `X`.
fn certificate(sx: &StandardizationResult, sy: &StandardizationResult, p: &IntMatrix) -> Result<Option<IntMatrix>> {
    let d = &sy.standardized;
    let (h, l) = (d.params.curves(), d.params.l());
    let n1 = l + p.rows();
    let v = IntMatrix::identity(l).direct_sum(&unimodular_inverse(p)?).direct_sum(&IntMatrix::identity(h - n1));
    let mut moved = d.clone();
    if !v.is_identity() {
        for mv in compensated_gamma_change(&d.surface, &v)? {
            mv.apply(&mut moved)?;
        }
    }
    Ok((moved.gamma == sx.standardized.gamma).then_some(moved.gamma))
}

/// True when the composite of `record` fixes every class of the standard
/// configuration of `d`: `Φ α U_α = α`, `Φ β U_β = β`, `Φ η = η`, `Φ_rel a = a`.
pub fn is_homologically_torelli(record: &TransformationRecord, d: &Diagram) -> Result<bool> {
    let (n, h) = (d.surface.rank(), d.params.curves());
    for mv in &record.moves {
        let fits = match mv {
            Move::Rebasis { matrix, .. } => matrix.shape() == (h, h),
            Move::SurfaceMap { absolute, relative } => absolute.shape() == (n, n) && relative.shape() == (n, n),
        };
        if !fits {
            return Err(Error::DimensionMismatch(format!("record move does not fit rank {n}, {h} curves")));
        }
    }
    let c = d.standard_configuration()?;
    let (phi, phi_rel) = record.surface_composite(n);
    let ua = record.composite(Target::Alpha, h);
    let ub = record.composite(Target::Beta, h);
    Ok(&(&phi * &c.alpha) * &ua == c.alpha
        && &(&phi * &c.beta) * &ub == c.beta
        && &phi * &c.eta == c.eta
        && &phi_rel * &c.arcs == c.arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::synthesize_diagram;
    use crate::invariants::hyperbolic;
    use num_traits::One;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        let n = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_rows_with_cols(rows, n)
    }

    fn synth(q: IntMatrix) -> Diagram {
        synthesize_diagram(&q, &IntMatrix::zeros(0, 0), 0, 0, 1).unwrap()
    }

    #[test]
    fn self_comparison() {
        let d = synth(m(&[&[1]]));
        let r = torelli_compare(&d, &d).unwrap();
        assert_eq!(r.summary(), "equivalent");
        assert_eq!(r.certificate, Some(d.gamma.clone()));
    }

    #[test]
    fn signature_mismatch() {
        let r = torelli_compare(&synth(m(&[&[1]])), &synth(m(&[&[-1]]))).unwrap();
        assert_eq!(r.summary(), "not equivalent: signature");
    }

    #[test]
    fn congruent_definite_forms() {
        let x = synth(m(&[&[1, 0], &[0, 1]]));
        let y = synth(m(&[&[2, 1], &[1, 1]]));
        let r = torelli_compare(&x, &y).unwrap();
        assert_eq!(r.verdict, Verdict::Equivalent);
        let p = r.congruence.unwrap();
        assert_eq!(&(&p.transpose() * &m(&[&[1, 0], &[0, 1]])) * &p, m(&[&[2, 1], &[1, 1]]));
        assert_eq!(r.certificate, Some(x.gamma));
    }

    #[test]
    fn indefinite_by_classification() {
        let x = synth(hyperbolic().direct_sum(&hyperbolic()).direct_sum(&hyperbolic()));
        let y = synth(m(&[&[0, 1, 0, 0, 0, 0], &[1, 2, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 1], &[0, 0, 0, 0, 1, 0]]));
        let r = torelli_compare(&x, &y).unwrap();
        assert_eq!(r.verdict, Verdict::Equivalent);
        assert!(r.certificate.is_none());
    }

    #[test]
    fn torelli_records() {
        let d = synth(m(&[&[1, 0], &[0, 1]]));
        assert!(is_homologically_torelli(&TransformationRecord::default(), &d).unwrap());
        let u = m(&[&[1, 1], &[0, 1]]);
        let rec = TransformationRecord { moves: compensated_gamma_change(&d.surface, &u).unwrap() };
        assert!(is_homologically_torelli(&rec, &d).unwrap());
        let rec = TransformationRecord { moves: vec![Move::Rebasis { target: Target::Gamma, matrix: u }] };
        assert!(is_homologically_torelli(&rec, &d).unwrap());
        // B_1 ↦ B_1 + A_1
        let mut phi = IntMatrix::identity(4);
        phi[(0, 1)] = BigInt::one();
        let rec = TransformationRecord { moves: vec![Move::SurfaceMap { absolute: phi.clone(), relative: phi }] };
        assert!(!is_homologically_torelli(&rec, &d).unwrap());
        let rec = TransformationRecord {
            moves: vec![Move::Rebasis { target: Target::Beta, matrix: IntMatrix::identity(3) }],
        };
        assert!(matches!(is_homologically_torelli(&rec, &d), Err(Error::DimensionMismatch(_))));
    }
}
