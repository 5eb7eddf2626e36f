use serde::Serialize;

use super::Diagram;
use crate::error::Error;
use crate::intlin::{lattice_intersection, smith_normal_form, IntMatrix, Lattice};
use crate::invariants::build_chain_complex;
use crate::surface::check_arc_duality;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
    /// Offending matrix for failed checks, when there is one to show.
    pub witness: Option<IntMatrix>,
}

impl Check {
    fn new(name: impl Into<String>, result: Result<String, (String, Option<IntMatrix>)>) -> Self {
        let name = name.into();
        match result {
            Ok(detail) => Check { name, status: CheckStatus::Pass, detail, witness: None },
            Err((detail, witness)) => Check { name, status: CheckStatus::Fail, detail, witness },
        }
    }

    fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), status: CheckStatus::Skipped, detail: detail.into(), witness: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
    /// No check failed. Skipped checks do not count against the verdict.
    pub verdict: bool,
}

impl ValidationReport {
    pub const NOTE: &'static str =
        "homological conditions are necessary only; passing does not certify a geometric trisection diagram";

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

const NAMES: [&str; 3] = ["alpha", "beta", "gamma"];

/// Runs every homological check, never stopping at the first failure.
pub fn validate(d: &Diagram) -> ValidationReport {
    let s = &d.surface;
    let params = d.params;
    let (h, l) = (params.curves(), params.l());
    let mut checks = vec![Check::new("params", params.check().map(|()| format!("l = {l}")).map_err(|e| (e, None)))];

    let lattices: Vec<Lattice> = (0..3).map(|i| Lattice::from_generators(d.system(i))).collect();
    for i in 0..3 {
        let r = lattices[i].rank();
        let res = if r == h {
            Ok(format!("{} classes independent", NAMES[i]))
        } else {
            Err((format!("{} spans rank {r}, expected {h}", NAMES[i]), Some(d.system(i).clone())))
        };
        checks.push(Check::new(format!("independence[{}]", NAMES[i]), res));
    }
    for i in 0..3 {
        let m = s.curve_pairing(d.system(i), d.system(i)).expect("shapes checked at construction");
        let res = if m.is_zero() {
            Ok("pairwise intersections vanish".to_string())
        } else {
            Err((format!("{} is not isotropic", NAMES[i]), Some(m)))
        };
        checks.push(Check::new(format!("isotropy[{}]", NAMES[i]), res));
    }
    for i in 0..3 {
        let j = (i + 1) % 3;
        let name = format!("sutured[{},{}]", NAMES[i], NAMES[j]);
        let ki = params.k[i];
        let m = s.curve_pairing(d.system(i), d.system(j)).expect("shapes checked at construction");
        let res = match (h + l).checked_sub(ki) {
            None => Err((format!("k_{} = {ki} exceeds g - p + l = {}", i + 1, h + l), None)),
            Some(ones) => {
                let snf = smith_normal_form(&m);
                if snf.is_identity_pattern(ones) {
                    Ok(format!("Smith form I_{ones} + 0"))
                } else {
                    Err((format!("Smith diagonal {:?}, expected I_{ones} + 0", snf.diagonal()), Some(m)))
                }
            }
        };
        checks.push(Check::new(name, res));

        let name = format!("intersection[{},{}]", NAMES[i], NAMES[j]);
        let need = ki.saturating_sub(l);
        let res = match lattice_intersection(&lattices[i], &lattices[j]) {
            Ok(x) if x.rank() >= need => Ok(format!("rank {} >= k_{} - l = {need}", x.rank(), i + 1)),
            Ok(x) => Err((format!("rank {} < k_{} - l = {need}", x.rank(), i + 1), Some(x.basis().clone()))),
            Err(e) => Err((e.to_string(), None)),
        };
        checks.push(Check::new(name, res));
    }

    checks.push(match (&d.arcs, &d.eta) {
        (_, _) if l == 0 => Check::skipped("arcs", "l = 0, no arcs"),
        (None, _) => Check::skipped("arcs", "no arcs given"),
        (Some(a), Some(e)) => Check::new(
            "arcs",
            check_arc_duality(s, &d.alpha, &d.beta, a, e).map(|()| "a·η = I, disjoint from alpha and beta".into()).map_err(|m| (m, None)),
        ),
        (Some(a), None) => {
            let ab = s.arc_pairing(a, &d.alpha.hstack(&d.beta)).expect("shapes checked at construction");
            Check::new(
                "arcs",
                if ab.is_zero() { Ok("disjoint from alpha and beta".into()) } else { Err(("arcs meet alpha or beta".into(), Some(ab))) },
            )
        }
    });

    checks.push(match build_chain_complex(d) {
        Ok(c) => Check::new("chain", Ok(format!("rho·pi = 0 ({}x{} · {}x{})", c.rho.rows(), c.rho.cols(), c.pi.rows(), c.pi.cols()))),
        Err(Error::MissingArcs(_)) => Check::skipped("chain", "needs arcs"),
        Err(Error::ChainConditionViolated) => Check::new("chain", Err(("rho·pi != 0".into(), None))),
        Err(e) => Check::new("chain", Err((e.to_string(), None))),
    });

    let verdict = checks.iter().all(|c| c.status != CheckStatus::Fail);
    ValidationReport { checks, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{synthesize_diagram, TrisectionParams};

    fn status(r: &ValidationReport, name: &str) -> CheckStatus {
        r.checks.iter().find(|c| c.name == name).unwrap().status
    }

    #[test]
    fn synthesized_diagrams_pass() {
        let e = IntMatrix::zeros(0, 0);
        for (q, b, k, p, bd) in [
            (IntMatrix::from_rows(&[[1]]), e.clone(), 0, 0, 1),
            (e.clone(), IntMatrix::from_rows(&[[1]]), 2, 0, 2),
            (IntMatrix::from_rows(&[[0, 1], [1, 0]]), IntMatrix::from_rows(&[[1, 1], [0, 1]]), 3, 1, 1),
        ] {
            let d = synthesize_diagram(&q, &b, k, p, bd).unwrap();
            let r = validate(&d);
            assert!(r.verdict, "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn repeated_curve_passes() {
        let a = IntMatrix::from_rows(&[[1], [0]]);
        let d = Diagram::new(TrisectionParams::new(1, 1, 0, [1, 1, 1]), a.clone(), a.clone(), a, None, None).unwrap();
        let r = validate(&d);
        assert!(r.verdict);
        assert_eq!(status(&r, "arcs"), CheckStatus::Skipped);
    }

    #[test]
    fn k_below_l_fails_params() {
        let mut d = synthesize_diagram(&IntMatrix::zeros(0, 0), &IntMatrix::from_rows(&[[1]]), 1, 0, 2).unwrap();
        d.params.k[0] = 0;
        let r = validate(&d);
        assert!(!r.verdict);
        assert_eq!(status(&r, "params"), CheckStatus::Fail);
    }

    #[test]
    fn wrong_sutured_pattern_has_witness() {
        let a = IntMatrix::from_rows(&[[1], [0]]);
        let b = IntMatrix::from_rows(&[[0], [2]]);
        let d = Diagram::new(TrisectionParams::new(1, 1, 0, [0, 0, 0]), a.clone(), b, a, None, None).unwrap();
        let r = validate(&d);
        let c = r.checks.iter().find(|c| c.name == "sutured[alpha,beta]").unwrap();
        assert_eq!(c.status, CheckStatus::Fail);
        assert!(c.witness.is_some());
    }
}
