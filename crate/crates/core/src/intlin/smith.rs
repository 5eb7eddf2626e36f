use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// `u * m * v = s` with `u`, `v` unimodular and `s` diagonal, nonnegative,
/// each diagonal entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The `min(rows, cols)` diagonal entries of `s`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }

    /// Diagonal entries greater than one: the torsion coefficients of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero() && !d.is_one()).collect()
    }

    /// True when `s = I_n ⊕ 0` for `n = ones`.
    pub fn is_identity_pattern(&self, ones: usize) -> bool {
        let d = self.diagonal();
        d.len() >= ones && d.iter().enumerate().all(|(i, x)| if i < ones { x.is_one() } else { x.is_zero() })
    }
}

fn min_abs_nonzero(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..s.rows() {
        for j in t..s.cols() {
            let x = &s[(i, j)];
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(_, b)| a < *b) {
                let one = a.is_one();
                best = Some(((i, j), a));
                if one {
                    return best.map(|(p, _)| p);
                }
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Smith normal form with smallest-magnitude pivoting.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = m.shape();
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_nonzero(&s, t) else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&s[(i, t)] / &s[(t, t)]);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&s[(t, j)] / &s[(t, t)]);
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                // a remainder smaller than the pivot survived; promote it
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !s[(i, t)].is_zero() && s[(i, t)].abs() < s[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..cols {
                    if !s[(t, j)].is_zero() && s[(t, j)].abs() < s[best].abs() {
                        best = (t, j);
                    }
                }
                s.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                s.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }
            // divisibility: pull a row whose entries the pivot does not divide
            let pivot = s[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&s[(i, j)] % &pivot).is_zero()));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithDecomposition { u, s, v }
}

/// Inverse over the integers; fails unless `|det m| = 1`.
pub fn unimodular_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!("inverse of non-square {}x{} matrix", m.rows(), m.cols())));
    }
    let snf = smith_normal_form(m);
    if !snf.s.is_identity() {
        return Err(Error::NotUnimodular(format!("invariant factors {:?}", snf.diagonal())));
    }
    Ok(&snf.v * &snf.u)
}

/// Integer solution `x` of `a * x = b` (column-wise), if one exists.
pub fn solve(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(a.rows(), b.rows(), "solve: row mismatch");
    let snf = smith_normal_form(a);
    let ub = &snf.u * b;
    let d = snf.diagonal();
    let mut y = IntMatrix::zeros(a.cols(), b.cols());
    for c in 0..b.cols() {
        for i in 0..a.rows() {
            let rhs = &ub[(i, c)];
            match d.get(i) {
                Some(di) if !di.is_zero() => {
                    if !(rhs % di).is_zero() {
                        return None;
                    }
                    y[(i, c)] = rhs / di;
                }
                _ => {
                    if !rhs.is_zero() {
                        return None;
                    }
                }
            }
        }
    }
    Some(&snf.v * &y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithDecomposition {
        let d = smith_normal_form(m);
        assert_eq!(&(&d.u * m) * &d.v, d.s);
        assert!(d.u.is_unimodular() && d.v.is_unimodular());
        d
    }

    #[test]
    fn zero_and_identity() {
        let z = IntMatrix::zeros(2, 2);
        assert_eq!(check(&z).s, z);
        let i = IntMatrix::identity(3);
        assert_eq!(check(&i).s, i);
    }

    #[test]
    fn two_by_two_example() {
        // gcd of entries 2, |det| = 8
        let m = IntMatrix::from_rows(&[[2, 4], [6, 8]]);
        assert_eq!(check(&m).s, IntMatrix::diagonal(&[2, 4]));
    }

    #[test]
    fn divisibility_is_enforced() {
        let m = IntMatrix::diagonal(&[2, 3]);
        assert_eq!(check(&m).s, IntMatrix::diagonal(&[1, 6]));
        let m = IntMatrix::from_rows(&[[4, 0, 0], [0, 6, 0], [0, 0, 10]]);
        assert_eq!(check(&m).diagonal(), vec![2.into(), 2.into(), 60.into()]);
    }

    #[test]
    fn empty_shapes() {
        let d = check(&IntMatrix::zeros(0, 3));
        assert_eq!(d.v, IntMatrix::identity(3));
        assert_eq!(d.rank(), 0);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(unimodular_inverse(&IntMatrix::identity(2)).unwrap(), IntMatrix::identity(2));
        let m = IntMatrix::from_rows(&[[1, 1], [0, 1]]);
        assert_eq!(unimodular_inverse(&m).unwrap(), IntMatrix::from_rows(&[[1, -1], [0, 1]]));
        let m = IntMatrix::from_rows(&[[2, 1], [1, 1]]);
        assert_eq!(unimodular_inverse(&m).unwrap(), IntMatrix::from_rows(&[[1, -1], [-1, 2]]));
        let m = IntMatrix::from_rows(&[[2, 0], [0, 1]]);
        assert!(matches!(unimodular_inverse(&m), Err(Error::NotUnimodular(_))));
        assert_eq!(unimodular_inverse(&IntMatrix::zeros(0, 0)).unwrap().shape(), (0, 0));
    }

    #[test]
    fn solve_checks_divisibility() {
        let a = IntMatrix::from_rows(&[[2, 0], [0, 3]]);
        let b = IntMatrix::from_rows(&[[4], [9]]);
        assert_eq!(solve(&a, &b).unwrap(), IntMatrix::from_rows(&[[2], [3]]));
        let b = IntMatrix::from_rows(&[[1], [0]]);
        assert!(solve(&a, &b).is_none());
    }
}
