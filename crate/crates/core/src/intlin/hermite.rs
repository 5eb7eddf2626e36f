use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Column-style Hermite normal form: returns `(h, u)` with `m * u = h`, `u`
/// unimodular, and `h = [h' | 0]` where `h'` is lower echelon with positive
/// pivots and the entries left of each pivot reduced into `[0, pivot)`.
///
/// The nonzero columns of `h` are the canonical basis of the column lattice.
pub fn column_hermite(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = m.shape();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(cols);
    let mut pc = 0;
    for r in 0..rows {
        if pc == cols {
            break;
        }
        for j in pc + 1..cols {
            if h[(r, j)].is_zero() {
                continue;
            }
            if h[(r, pc)].is_zero() {
                h.swap_cols(pc, j);
                u.swap_cols(pc, j);
                continue;
            }
            let (x, y) = (h[(r, pc)].clone(), h[(r, j)].clone());
            let e = x.extended_gcd(&y);
            let (bx, by) = (-(&y / &e.gcd), &x / &e.gcd);
            h.combine_cols(pc, j, [&e.x, &e.y, &bx, &by]);
            u.combine_cols(pc, j, [&e.x, &e.y, &bx, &by]);
        }
        if h[(r, pc)].is_zero() {
            continue;
        }
        if h[(r, pc)].is_negative() {
            h.negate_col(pc);
            u.negate_col(pc);
        }
        let pivot = h[(r, pc)].clone();
        for j in 0..pc {
            let q: BigInt = -h[(r, j)].div_floor(&pivot);
            h.add_col_multiple(j, pc, &q);
            u.add_col_multiple(j, pc, &q);
        }
        pc += 1;
    }
    (h, u)
}

/// Number of leading nonzero columns of a column-Hermite form.
pub(crate) fn hermite_rank(h: &IntMatrix) -> usize {
    (0..h.cols()).take_while(|&j| (0..h.rows()).any(|i| !h[(i, j)].is_zero())).count()
}
