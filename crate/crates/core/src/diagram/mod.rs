//! Relative trisection diagrams as homology data: three curve systems of
//! `g - p` classes each on `Σ_{g,b}`, plus optional arcs and their dual curves.

mod io;
mod synth;
mod validate;

pub use io::{parse_diagram, serialize_diagram, FORMAT_VERSION};
pub use synth::{default_monodromy, synthesize_diagram};
pub use validate::{validate, Check, CheckStatus, ValidationReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlin::IntMatrix;
use crate::surface::{StandardConfiguration, SurfaceModel};

/// `(g, k; p, b)` with `k = (k_1, k_2, k_3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TrisectionParams {
    pub g: usize,
    pub b: usize,
    pub p: usize,
    pub k: [usize; 3],
}

impl TrisectionParams {
    pub fn new(g: usize, b: usize, p: usize, k: [usize; 3]) -> Self {
        TrisectionParams { g, b, p, k }
    }

    /// `l = 2p + b - 1`, the number of arcs. Requires `b >= 1`.
    pub fn l(&self) -> usize {
        2 * self.p + self.b - 1
    }

    /// Curves per system, `g - p`. Requires `g >= p`.
    pub fn curves(&self) -> usize {
        self.g - self.p
    }

    /// `d_i` (1-based): 1 for `i <= l`, else 0.
    pub fn d(&self, i: usize) -> u8 {
        u8::from(i >= 1 && i <= self.l())
    }

    /// `g >= p >= 0`, `b >= 1`, `g + p + b - 1 >= k_i >= l`.
    pub fn check(&self) -> std::result::Result<(), String> {
        if self.b < 1 {
            return Err(format!("b = {} must be at least 1", self.b));
        }
        if self.g < self.p {
            return Err(format!("g = {} must be at least p = {}", self.g, self.p));
        }
        let (lo, hi) = (self.l(), self.g + self.p + self.b - 1);
        for (i, &ki) in self.k.iter().enumerate() {
            if ki < lo || ki > hi {
                return Err(format!("k_{} = {ki} outside [l, g+p+b-1] = [{lo}, {hi}]", i + 1));
            }
        }
        Ok(())
    }
}

/// A diagram `(Σ; α, β, γ)`; class matrices hold one class per column in
/// the canonical absolute basis, arcs in the relative basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub params: TrisectionParams,
    pub surface: SurfaceModel,
    pub alpha: IntMatrix,
    pub beta: IntMatrix,
    pub gamma: IntMatrix,
    pub arcs: Option<IntMatrix>,
    pub eta: Option<IntMatrix>,
}

impl Diagram {
    /// Checks shapes only; homological conditions live in [`validate`].
    pub fn new(
        params: TrisectionParams,
        alpha: IntMatrix,
        beta: IntMatrix,
        gamma: IntMatrix,
        arcs: Option<IntMatrix>,
        eta: Option<IntMatrix>,
    ) -> Result<Self> {
        if params.g < params.p {
            return Err(Error::InvalidParams(format!("g = {} < p = {}", params.g, params.p)));
        }
        let surface = SurfaceModel::new(params.g, params.b)?;
        let (n, h, l) = (surface.rank(), params.curves(), params.l());
        for (name, m) in [("alpha", &alpha), ("beta", &beta), ("gamma", &gamma)] {
            shape_check(name, m, n, h)?;
        }
        if let Some(a) = &arcs {
            shape_check("arcs", a, n, l)?;
        }
        if let Some(e) = &eta {
            shape_check("eta", e, n, l)?;
        }
        Ok(Diagram { params, surface, alpha, beta, gamma, arcs, eta })
    }

    /// `α^1 = α`, `α^2 = β`, `α^3 = γ`, indices taken mod 3 (0-based).
    pub fn system(&self, i: usize) -> &IntMatrix {
        match i % 3 {
            0 => &self.alpha,
            1 => &self.beta,
            _ => &self.gamma,
        }
    }

    pub fn standard_configuration(&self) -> Result<StandardConfiguration> {
        StandardConfiguration::new(&self.surface, self.params.p)
    }

    /// Arcs, or the empty arc system when `l = 0`.
    pub fn arcs_or_empty(&self) -> Result<IntMatrix> {
        match (&self.arcs, self.params.l()) {
            (Some(a), _) => Ok(a.clone()),
            (None, 0) => Ok(IntMatrix::zeros(self.surface.rank(), 0)),
            (None, l) => Err(Error::MissingArcs(l)),
        }
    }

    /// True when `α_i = A_i` and `β_i = B_i`.
    pub fn has_canonical_alpha_beta(&self) -> bool {
        self.standard_configuration()
            .map(|c| c.alpha == self.alpha && c.beta == self.beta)
            .unwrap_or(false)
    }

    /// Canonical `α`, `β`, standard arcs and `η`, `γ·β = I` and
    /// `a·γ = -[I | 0]`: the position in which `A_ψ` is read off.
    pub fn is_standardized_position(&self) -> bool {
        let Ok(c) = self.standard_configuration() else { return false };
        let (h, l) = (self.params.curves(), self.params.l());
        if c.alpha != self.alpha || c.beta != self.beta {
            return false;
        }
        if l > 0 && (self.arcs.as_ref() != Some(&c.arcs) || self.eta.as_ref() != Some(&c.eta)) {
            return false;
        }
        let s = &self.surface;
        let gb = s.curve_pairing(&self.gamma, &self.beta);
        let ag = s.arc_pairing(&c.arcs, &self.gamma);
        let lead = IntMatrix::identity(h).submatrix(0..l, 0..h);
        matches!((gb, ag), (Ok(gb), Ok(ag)) if gb.is_identity() && -&ag == lead)
    }
}

fn shape_check(name: &str, m: &IntMatrix, rank: usize, count: usize) -> Result<()> {
    if m.cols() != count {
        return Err(Error::DimensionMismatch(format!("{name} has {} classes, expected {count}", m.cols())));
    }
    if m.rows() != rank {
        return Err(Error::DimensionMismatch(format!(
            "{name} vectors have length {}, expected surface rank {rank}",
            m.rows()
        )));
    }
    Ok(())
}
