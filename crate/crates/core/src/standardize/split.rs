use crate::error::{Error, Result};
use crate::intlin::{unimodular_inverse, IntMatrix};

/// Splits `M` over its leading `n1 x n1` block `M1`: returns `(U, M1, M2)`
/// with `U = [[I, -b], [0, I]]`, `b_x = M1^{-1} M[0..n1, x]`, and
/// `Uᵀ M U = M1 ⊕ M2`.
///
/// `M` need only be symmetric in the rows and columns meeting the leading block.
pub fn orthogonal_split(m: &IntMatrix, n1: usize) -> Result<(IntMatrix, IntMatrix, IntMatrix)> {
    let n = m.rows();
    if !m.is_square() || n1 > n {
        return Err(Error::DimensionMismatch(format!("split of {}x{} at {n1}", m.rows(), m.cols())));
    }
    for i in 0..n {
        for j in 0..n {
            if (i < n1 || j < n1) && m[(i, j)] != m[(j, i)] {
                return Err(Error::SymmetryViolated(format!("entry ({i}, {j}) differs from ({j}, {i})")));
            }
        }
    }
    let m1 = m.submatrix(0..n1, 0..n1);
    let inv = unimodular_inverse(&m1).map_err(|e| Error::NotUnimodular(format!("leading block: {e}")))?;
    let b = &inv * &m.submatrix(0..n1, n1..n);
    let mut u = IntMatrix::identity(n);
    for i in 0..n1 {
        for x in n1..n {
            u[(i, x)] = -b[(i, x - n1)].clone();
        }
    }
    let split = &(&u.transpose() * m) * &u;
    debug_assert!(split.submatrix(0..n1, n1..n).is_zero() && split.submatrix(n1..n, 0..n1).is_zero());
    let m2 = split.submatrix(n1..n, n1..n);
    Ok((u, m1, m2))
}
