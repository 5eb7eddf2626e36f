//! Smith and Hermite normal forms, lattices and their intersections.

use trisect::intlin::{column_hermite, lattice_intersection, lattice_quotient, smith_normal_form, IntMatrix, Lattice};

fn main() -> trisect::Result<()> {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("M =\n{m}");
    println!("S = U M V =\n{}", snf.s);
    println!("invariant factors: {:?}", snf.diagonal());
    assert_eq!(&(&snf.u * &m) * &snf.v, snf.s);

    let (h, u) = column_hermite(&m);
    println!("column Hermite form M U =\n{h}");
    assert_eq!(&m * &u, h);

    let a = Lattice::from_generators(&IntMatrix::from_rows(&[[1, 0], [0, 2], [0, 0]]));
    let b = Lattice::from_generators(&IntMatrix::from_rows(&[[1, 0], [1, 0], [0, 1]]));
    let c = lattice_intersection(&a, &b)?;
    println!("intersection basis =\n{}", c.basis());
    let q = lattice_quotient(&c, &a)?;
    println!("A / (A ∩ B): torsion {:?}, free part lifted by\n{}", q.invariant_factors, q.complement);
    Ok(())
}
