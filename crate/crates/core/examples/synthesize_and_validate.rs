//! Build a normal-form diagram from an intersection form and run the checks.

use trisect::diagram::{default_monodromy, serialize_diagram, synthesize_diagram, validate, CheckStatus};
use trisect::intlin::IntMatrix;

fn main() -> trisect::Result<()> {
    let q = IntMatrix::from_rows(&[[1, 0], [0, -1]]);
    let b = default_monodromy(1, 1)?;
    let d = synthesize_diagram(&q, &b, 3, 1, 1)?;
    println!("params {:?}", d.params);
    let report = validate(&d);
    for c in &report.checks {
        let mark = match c.status {
            CheckStatus::Pass => "ok  ",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skip",
        };
        println!("{mark} {:<26} {}", c.name, c.detail);
    }
    println!("verdict: {}", if report.verdict { "pass" } else { "fail" });

    // breaking isotropy of gamma is caught
    let mut broken = d.clone();
    broken.gamma = broken.gamma.add(&broken.alpha.submatrix(0..broken.surface.rank(), 0..broken.params.curves()));
    broken.gamma = broken.gamma.add(&broken.beta);
    println!("after an illegal edit: {}", if validate(&broken).verdict { "pass" } else { "fail" });

    println!("{}", serialize_diagram(&d).lines().take(8).collect::<Vec<_>>().join("\n"));
    Ok(())
}
