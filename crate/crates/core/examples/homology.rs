//! Formal homology of the diagram chain complex.

use trisect::diagram::{synthesize_diagram, Diagram, TrisectionParams};
use trisect::intlin::IntMatrix;
use trisect::invariants::{e8, homology};

fn main() -> trisect::Result<()> {
    let empty = IntMatrix::zeros(0, 0);
    let cases = [
        ("4-ball", synthesize_diagram(&empty, &empty, 0, 0, 1)?),
        ("Q = [1]", synthesize_diagram(&IntMatrix::from_rows(&[[1]]), &empty, 0, 0, 1)?),
        ("Q = E8, two boundary circles", synthesize_diagram(&e8(), &IntMatrix::identity(1), 1, 0, 2)?),
    ];
    for (name, d) in &cases {
        println!("{name:<32} {}", homology(d)?);
    }
    let a = IntMatrix::from_rows(&[[1], [0]]);
    let same = Diagram::new(TrisectionParams::new(1, 1, 0, [1, 1, 1]), a.clone(), a.clone(), a, None, None)?;
    println!("{:<32} {}", "one curve in all three systems", homology(&same)?);
    Ok(())
}
