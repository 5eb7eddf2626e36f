use num_bigint::BigInt;
use num_traits::One;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// Arc block of the linking correction: `0` on the `b - 1` boundary arcs,
/// `[[0, 1], [0, 0]]` on each page handle's arc pair.
pub fn linking_correction(p: usize, b: usize) -> IntMatrix {
    let off = b - 1;
    let mut r = IntMatrix::zeros(off + 2 * p, off + 2 * p);
    for h in 0..p {
        r[(off + 2 * h, off + 2 * h + 1)] = BigInt::one();
    }
    r
}

/// `(γ·(β, a)) R ((α, a)·γ)` with `R = I_{g-p} ⊕ linking_correction(p, b)`.
///
/// Requires `α_i = A_i`, `β_i = B_i` and the standard arcs.
pub fn linking_matrix(d: &Diagram) -> Result<IntMatrix> {
    let s = &d.surface;
    let config = d.standard_configuration()?;
    if d.alpha != config.alpha || d.beta != config.beta {
        return Err(Error::NotStandardPosition("alpha and beta must be A_i and B_i".into()));
    }
    let arcs = d.arcs_or_empty()?;
    if arcs != config.arcs {
        return Err(Error::NotStandardPosition("arcs differ from the standard arcs".into()));
    }
    let left = s.curve_pairing(&d.gamma, &d.beta)?.hstack(&s.curve_arc_pairing(&d.gamma, &arcs)?);
    let right = s.curve_pairing(&d.alpha, &d.gamma)?.vstack(&s.arc_pairing(&arcs, &d.gamma)?);
    let r = IntMatrix::identity(d.params.curves()).direct_sum(&linking_correction(d.params.p, d.params.b));
    Ok(&(&left * &r) * &right)
}
