//! Rank, signature, parity and determinant of integral symmetric forms.

use trisect::cli::parse_form_spec;
use trisect::invariants::{form_invariants, Parity};
use trisect::standardize::orthogonal_split;

fn main() -> trisect::Result<()> {
    for spec in ["e8", "-e8+h", "diag:1,1,-1", "h+h+h", "[[2,1],[1,2]]"] {
        let q = parse_form_spec(spec).expect("valid spec");
        let f = form_invariants(&q)?;
        let parity = if f.parity == Parity::Even { "even" } else { "odd" };
        println!("{spec:<14} rank {} signature {:>3} {parity:<4} det {}", f.rank, f.signature, f.determinant);
    }

    // split off a unimodular block
    let m = parse_form_spec("[[1,2,3],[2,5,1],[3,1,4]]").expect("valid spec");
    let (u, m1, m2) = orthogonal_split(&m, 1)?;
    println!("U =\n{u}");
    println!("M1 =\n{m1}");
    println!("M2 =\n{m2}");
    Ok(())
}
