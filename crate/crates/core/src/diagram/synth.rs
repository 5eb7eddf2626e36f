use num_bigint::BigInt;
use num_traits::One;

use super::{Diagram, TrisectionParams};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;
use crate::surface::{StandardConfiguration, SurfaceModel};

/// Builds the normal-form diagram with `Q̃ = B ⊕ Q ⊕ 0^{k-l}` on `Σ_{g,b}`,
/// `g = p + k + size(Q)`, with parameters `(l, l, k)`:
/// `γ_i = -α_i - Σ_j Q̃_ji β_j - d_i η_i`.
pub fn synthesize_diagram(q: &IntMatrix, b_mat: &IntMatrix, k: usize, p: usize, b: usize) -> Result<Diagram> {
    if b < 1 {
        return Err(Error::InvalidParams(format!("b = {b} must be at least 1")));
    }
    let l = 2 * p + b - 1;
    if !b_mat.is_square() || b_mat.rows() != l {
        return Err(Error::DimensionMismatch(format!(
            "B is {}x{}, expected l x l with l = 2p+b-1 = {l}",
            b_mat.rows(),
            b_mat.cols()
        )));
    }
    if !b_mat.is_unimodular() {
        return Err(Error::NotUnimodular("B".into()));
    }
    if !q.is_square() {
        return Err(Error::DimensionMismatch(format!("Q is {}x{}", q.rows(), q.cols())));
    }
    if !q.is_symmetric() {
        return Err(Error::NotSymmetric("Q".into()));
    }
    if k < l {
        return Err(Error::InvalidParams(format!("k = {k} < l = {l}")));
    }
    let g = p + k + q.rows();
    let params = TrisectionParams::new(g, b, p, [l, l, k]);
    let surface = SurfaceModel::new(g, b)?;
    let config = StandardConfiguration::new(&surface, p)?;
    let h = g - p;
    let qtilde = b_mat.direct_sum(q).direct_sum(&IntMatrix::zeros(k - l, k - l));
    let e = IntMatrix::from_fn(l, h, |i, j| if i == j { BigInt::one() } else { BigInt::from(0) });
    let gamma = -&config.alpha.add(&(&config.beta * &qtilde)).add(&(&config.eta * &e));
    Diagram::new(params, config.alpha, config.beta, gamma, Some(config.arcs), Some(config.eta))
}

/// Unitriangular `B` with `B - Bᵀ` equal to the pairing of the `η_i`, which
/// keeps the synthesized `γ` isotropic; the identity when `p = 0`.
pub fn default_monodromy(p: usize, b: usize) -> Result<IntMatrix> {
    if b < 1 {
        return Err(Error::InvalidParams(format!("b = {b} must be at least 1")));
    }
    let surface = SurfaceModel::new(p, b)?;
    let eta = StandardConfiguration::new(&surface, p)?.eta;
    let m = surface.curve_pairing(&eta, &eta)?;
    let l = m.rows();
    Ok(IntMatrix::from_fn(l, l, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => BigInt::one(),
        std::cmp::Ordering::Less => m[(i, j)].clone(),
        std::cmp::Ordering::Greater => BigInt::from(0),
    }))
}
