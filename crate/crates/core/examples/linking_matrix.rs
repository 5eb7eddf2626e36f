//! Linking matrix of the boundary, symmetric for diagrams in standard position.

use trisect::diagram::{default_monodromy, synthesize_diagram};
use trisect::intlin::IntMatrix;
use trisect::invariants::{linking_correction, linking_matrix};

fn main() -> trisect::Result<()> {
    println!("page correction for p = 1, b = 2:\n{}", linking_correction(1, 2));
    for (p, b) in [(0, 1), (0, 3), (1, 1)] {
        let bm = default_monodromy(p, b)?;
        let d = synthesize_diagram(&IntMatrix::from_rows(&[[2, 1], [1, 1]]), &bm, bm.rows() + 1, p, b)?;
        let lk = linking_matrix(&d)?;
        println!("p = {p}, b = {b}:\n{lk}");
        println!("symmetric: {}", lk.is_symmetric());
    }
    Ok(())
}
