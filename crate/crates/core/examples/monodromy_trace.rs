//! Carry the arcs around the three sectors and read off the monodromy.

use trisect::diagram::synthesize_diagram;
use trisect::intlin::IntMatrix;
use trisect::monodromy::monodromy_action;

fn main() -> trisect::Result<()> {
    let d = synthesize_diagram(&IntMatrix::zeros(0, 0), &IntMatrix::from_rows(&[[1]]), 1, 0, 2)?;
    let m = monodromy_action(&d)?;
    for (i, (r, qb)) in m.r.iter().zip(&m.bases).enumerate() {
        println!("sector {}", i + 1);
        println!("kappa =\n{}", qb.kappa);
        println!("lambda =\n{}", qb.lambda);
        println!("R =\n{r}");
    }
    for (i, a) in m.arc_history.iter().enumerate() {
        println!("a^{} = {:?}", i + 1, a.column(0).iter().map(ToString::to_string).collect::<Vec<_>>());
    }
    println!("displacement a^4 - a^1 in H_1(Σ): {:?}", m.displacement.column(0).iter().map(ToString::to_string).collect::<Vec<_>>());
    if let Some(a) = &m.a_psi {
        println!("A_psi =\n{a}");
    }
    Ok(())
}
