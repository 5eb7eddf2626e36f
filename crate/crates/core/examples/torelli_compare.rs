//! Compare diagrams through their standardizations.

use trisect::diagram::synthesize_diagram;
use trisect::intlin::IntMatrix;
use trisect::invariants::{e8, hyperbolic};
use trisect::standardize::torelli_compare;

fn main() -> trisect::Result<()> {
    let empty = IntMatrix::zeros(0, 0);
    let synth = |q: &IntMatrix| synthesize_diagram(q, &empty, 0, 0, 1);
    let pairs = [
        ("[1]+[1] vs [[2,1],[1,1]]", IntMatrix::identity(2), IntMatrix::from_rows(&[[2, 1], [1, 1]])),
        ("[1] vs [-1]", IntMatrix::from_rows(&[[1]]), IntMatrix::from_rows(&[[-1]])),
        ("E8 vs I_8", e8(), IntMatrix::identity(8)),
        ("H vs [1]+[-1]", hyperbolic(), IntMatrix::diagonal(&[1, -1])),
        ("E8+H vs -E8+H", e8().direct_sum(&hyperbolic()), (-&e8()).direct_sum(&hyperbolic())),
    ];
    for (name, x, y) in &pairs {
        let c = torelli_compare(&synth(x)?, &synth(y)?)?;
        println!("{name:<26} {}", c.summary());
        if let Some(p) = &c.congruence {
            println!("congruence P with Pᵀ Q_X P = Q_Y:\n{p}");
        }
    }
    Ok(())
}
