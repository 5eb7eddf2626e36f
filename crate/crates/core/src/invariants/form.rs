use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FormInvariants {
    pub rank: usize,
    pub signature: i64,
    pub parity: Parity,
    pub determinant: BigInt,
}

impl FormInvariants {
    pub fn is_definite(&self, size: usize) -> bool {
        self.rank == size && self.signature.unsigned_abs() as usize == size
    }
}

/// Counts of positive, negative and zero eigenvalues by exact congruence
/// diagonalization over the rationals.
fn inertia(q: &IntMatrix) -> (usize, usize, usize) {
    let n = q.rows();
    let mut a: Vec<Vec<BigRational>> =
        (0..n).map(|i| (0..n).map(|j| BigRational::from_integer(q[(i, j)].clone())).collect()).collect();
    let mut live: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0, 0);
    while !live.is_empty() {
        let pivot = match live.iter().position(|&i| !a[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let found = live.iter().enumerate().find_map(|(x, &i)| {
                    live.iter().copied().find(|&j| j != i && !a[i][j].is_zero()).map(|j| (x, i, j))
                });
                let Some((x, i, j)) = found else { break };
                // e_i ← e_i + e_j makes the diagonal entry 2 a_ij
                for k in 0..n {
                    let t = a[j][k].clone();
                    a[i][k] += t;
                }
                for k in 0..n {
                    let t = a[k][j].clone();
                    a[k][i] += t;
                }
                x
            }
        };
        let i = live.remove(pivot);
        let d = a[i][i].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for &j in &live {
            let f = &a[j][i] / &d;
            for &k in &live {
                let t = &f * &a[i][k];
                a[j][k] -= t;
            }
        }
    }
    (pos, neg, n - pos - neg)
}

pub fn form_invariants(q: &IntMatrix) -> Result<FormInvariants> {
    if !q.is_square() || !q.is_symmetric() {
        return Err(Error::NotSymmetric(format!("{}x{} form", q.rows(), q.cols())));
    }
    let (pos, neg, _) = inertia(q);
    let parity = if (0..q.rows()).all(|i| q[(i, i)].is_even()) { Parity::Even } else { Parity::Odd };
    Ok(FormInvariants {
        rank: pos + neg,
        signature: pos as i64 - neg as i64,
        parity,
        determinant: q.determinant()?,
    })
}

pub fn hyperbolic() -> IntMatrix {
    IntMatrix::from_rows(&[[0, 1], [1, 0]])
}

/// Positive definite E8 (Cartan matrix: a chain of seven nodes with the
/// eighth attached to the third).
pub fn e8() -> IntMatrix {
    let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut m = IntMatrix::diagonal(&[2; 8]);
    for (i, j) in edges {
        m[(i, j)] = BigInt::from(-1);
        m[(j, i)] = BigInt::from(-1);
    }
    m
}
