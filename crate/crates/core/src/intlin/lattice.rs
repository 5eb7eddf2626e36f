use num_bigint::BigInt;
use num_traits::One;

use super::hermite::{column_hermite, hermite_rank};
use super::smith::{smith_normal_form, solve, unimodular_inverse};
use super::IntMatrix;
use crate::error::{Error, Result};

/// A sublattice of `Z^ambient`, stored by its canonical (column Hermite) basis.
///
/// Two `Lattice` values are equal iff they are the same subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient: usize,
    basis: IntMatrix,
}

impl Lattice {
    /// Lattice spanned by the columns of `generators` (dependencies allowed).
    pub fn from_generators(generators: &IntMatrix) -> Self {
        let (h, _) = column_hermite(generators);
        let r = hermite_rank(&h);
        Lattice { ambient: generators.rows(), basis: h.submatrix(0..h.rows(), 0..r) }
    }

    pub fn zero(ambient: usize) -> Self {
        Lattice { ambient, basis: IntMatrix::zeros(ambient, 0) }
    }

    pub fn full(ambient: usize) -> Self {
        Lattice { ambient, basis: IntMatrix::identity(ambient) }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// Coordinates of the columns of `vectors` in this lattice's basis, if
    /// every column is a member.
    pub fn coordinates(&self, vectors: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(vectors.rows(), self.ambient, "coordinates: ambient mismatch");
        solve(&self.basis, vectors)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(&IntMatrix::column_vector(v)).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        self.ambient == other.ambient && self.coordinates(&other.basis).is_some()
    }

    /// True when `Z^ambient / self` is torsion-free.
    pub fn is_saturated(&self) -> bool {
        smith_normal_form(&self.basis).diagonal().iter().all(One::is_one)
    }
}

/// Saturated kernel `{x : m x = 0}` of `m`, as a sublattice of `Z^cols`.
pub fn kernel_basis(m: &IntMatrix) -> Lattice {
    let (h, u) = column_hermite(m);
    let r = hermite_rank(&h);
    Lattice::from_generators(&u.submatrix(0..u.rows(), r..u.cols()))
}

fn same_ambient(a: &Lattice, b: &Lattice) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::DimensionMismatch(format!(
            "lattices live in Z^{} and Z^{}",
            a.ambient, b.ambient
        )));
    }
    Ok(())
}

/// `a ∩ b`, via the kernel of `[A | -B]`.
pub fn lattice_intersection(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    same_ambient(a, b)?;
    let joint = a.basis.hstack(&(-&b.basis));
    let k = kernel_basis(&joint);
    let x = k.basis.submatrix(0..a.rank(), 0..k.rank());
    Ok(Lattice::from_generators(&(&a.basis * &x)))
}

/// Structure of `sup / sub`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeQuotient {
    /// Torsion coefficients, each dividing the next; entries equal to one are dropped.
    pub invariant_factors: Vec<BigInt>,
    /// Elements of `sup` whose images form a basis of the free part of the quotient.
    pub complement: IntMatrix,
}

pub fn lattice_quotient(sub: &Lattice, sup: &Lattice) -> Result<LatticeQuotient> {
    same_ambient(sub, sup)?;
    let c = sup
        .coordinates(&sub.basis)
        .ok_or_else(|| Error::NotSublattice(format!("rank {} lattice not inside rank {} lattice", sub.rank(), sup.rank())))?;
    let snf = smith_normal_form(&c);
    let invariant_factors = snf.torsion();
    // new sup basis = sup * U^{-1}; the first rank(sub) vectors carry the image of sub
    let u_inv = unimodular_inverse(&snf.u).expect("smith transform is unimodular");
    let new_basis = &sup.basis * &u_inv;
    let complement = new_basis.submatrix(0..sup.ambient, sub.rank()..sup.rank());
    Ok(LatticeQuotient { invariant_factors, complement })
}

/// The smallest saturated lattice of the same rank containing `l`.
pub fn saturate(l: &Lattice) -> Lattice {
    let snf = smith_normal_form(&l.basis);
    let u_inv = unimodular_inverse(&snf.u).expect("smith transform is unimodular");
    Lattice::from_generators(&u_inv.submatrix(0..l.ambient, 0..l.rank()))
}

/// Extends the columns of `partial` (which must span a saturated lattice) to a
/// unimodular matrix, appending completion columns on the right.
pub fn complete_to_unimodular(partial: &IntMatrix) -> Result<IntMatrix> {
    let n = partial.rows();
    let snf = smith_normal_form(partial);
    if !snf.diagonal().iter().all(One::is_one) {
        return Err(Error::NotDirectSummand(format!(
            "columns span a non-saturated lattice (factors {:?})",
            snf.diagonal()
        )));
    }
    let u_inv = unimodular_inverse(&snf.u).expect("smith transform is unimodular");
    let completion = u_inv.submatrix(0..n, partial.cols()..n);
    Ok(partial.hstack(&completion))
}
