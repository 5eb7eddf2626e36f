//! Scramble a normal-form diagram by basis changes, then recover the normal form.

use trisect::diagram::{default_monodromy, synthesize_diagram};
use trisect::intlin::IntMatrix;
use trisect::standardize::{is_homologically_torelli, standardize, Move, Target};

fn main() -> trisect::Result<()> {
    let q = IntMatrix::from_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, -1]]);
    let b = default_monodromy(1, 1)?;
    let d = synthesize_diagram(&q, &b, 3, 1, 1)?;
    let h = d.params.curves();

    let mut u = IntMatrix::identity(h);
    u.add_col_multiple(3, 0, &2.into());
    u.add_col_multiple(1, 4, &(-1).into());
    u.swap_cols(2, 3);
    let mut scrambled = d.clone();
    Move::Rebasis { target: Target::Gamma, matrix: u }.apply(&mut scrambled)?;
    println!("alpha·gamma before:\n{}", scrambled.surface.curve_pairing(&scrambled.alpha, &scrambled.gamma)?);

    let r = standardize(&scrambled)?;
    println!("Qtilde:\n{}", r.qtilde);
    println!("B =\n{}", r.b);
    println!("Q =\n{}", r.q);
    if let Some(a) = &r.a_psi {
        println!("A_psi =\n{a}");
    }
    println!("{} moves, checks {:?}", r.record.moves.len(), r.checks);
    println!("homologically Torelli: {}", is_homologically_torelli(&r.record, &scrambled)?);
    assert_eq!(r.standardized, d);
    Ok(())
}
