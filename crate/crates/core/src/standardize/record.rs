use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::intlin::{unimodular_inverse, IntMatrix};
use crate::surface::SurfaceModel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Alpha,
    Beta,
    Gamma,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::Alpha => "alpha",
            Target::Beta => "beta",
            Target::Gamma => "gamma",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Change of basis within one curve system: `M ↦ M U`.
    Rebasis { target: Target, matrix: IntMatrix },
    /// Action of a surface automorphism on homology: every curve class
    /// `x ↦ absolute x`, every arc class `a ↦ relative a`.
    SurfaceMap { absolute: IntMatrix, relative: IntMatrix },
}

impl Move {
    pub fn is_unimodular(&self) -> bool {
        match self {
            Move::Rebasis { matrix, .. } => matrix.is_unimodular(),
            Move::SurfaceMap { absolute, relative } => absolute.is_unimodular() && relative.is_unimodular(),
        }
    }

    fn check_shape(&self, d: &Diagram) -> Result<()> {
        let (n, h) = (d.surface.rank(), d.params.curves());
        let ok = match self {
            Move::Rebasis { matrix, .. } => matrix.shape() == (h, h),
            Move::SurfaceMap { absolute, relative } => absolute.shape() == (n, n) && relative.shape() == (n, n),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("move does not fit a diagram with rank {n} and {h} curves")))
        }
    }

    pub fn apply(&self, d: &mut Diagram) -> Result<()> {
        self.check_shape(d)?;
        match self {
            Move::Rebasis { target, matrix } => {
                let m = match target {
                    Target::Alpha => &mut d.alpha,
                    Target::Beta => &mut d.beta,
                    Target::Gamma => &mut d.gamma,
                };
                *m = &*m * matrix;
            }
            Move::SurfaceMap { absolute, relative } => {
                for m in [&mut d.alpha, &mut d.beta, &mut d.gamma] {
                    *m = absolute * m;
                }
                if let Some(e) = d.eta.as_mut() {
                    *e = absolute * e;
                }
                if let Some(a) = d.arcs.as_mut() {
                    *a = relative * a;
                }
            }
        }
        Ok(())
    }
}

/// Ordered moves taking an input diagram to its standardized form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransformationRecord {
    pub moves: Vec<Move>,
}

impl TransformationRecord {
    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Product of the rebasis matrices for `target`, in order (`h x h`).
    pub fn composite(&self, target: Target, h: usize) -> IntMatrix {
        self.moves.iter().fold(IntMatrix::identity(h), |acc, m| match m {
            Move::Rebasis { target: t, matrix } if *t == target => &acc * matrix,
            _ => acc,
        })
    }

    /// Composite surface action `(absolute, relative)`, later moves on the left.
    pub fn surface_composite(&self, rank: usize) -> (IntMatrix, IntMatrix) {
        self.moves.iter().fold((IntMatrix::identity(rank), IntMatrix::identity(rank)), |(a, r), m| match m {
            Move::SurfaceMap { absolute, relative } => (absolute * &a, relative * &r),
            _ => (a, r),
        })
    }

    pub fn all_unimodular(&self) -> bool {
        self.moves.iter().all(Move::is_unimodular)
    }

    pub fn apply(&self, d: &Diagram) -> Result<Diagram> {
        let mut out = d.clone();
        for m in &self.moves {
            m.apply(&mut out)?;
        }
        Ok(out)
    }

    /// Applies the composites in one shot: `M ↦ Φ M U_M`, `a ↦ Φ_rel a`.
    pub fn apply_composites(&self, d: &Diagram) -> Result<Diagram> {
        for m in &self.moves {
            m.check_shape(d)?;
        }
        let (n, h) = (d.surface.rank(), d.params.curves());
        let (phi, phi_rel) = self.surface_composite(n);
        let mut out = d.clone();
        out.alpha = &(&phi * &d.alpha) * &self.composite(Target::Alpha, h);
        out.beta = &(&phi * &d.beta) * &self.composite(Target::Beta, h);
        out.gamma = &(&phi * &d.gamma) * &self.composite(Target::Gamma, h);
        out.eta = d.eta.as_ref().map(|e| &phi * e);
        out.arcs = d.arcs.as_ref().map(|a| &phi_rel * a);
        Ok(out)
    }
}

/// The surface map acting on the first `u.rows()` handles by `U^{-1}` on
/// the `A` coordinates and `Uᵀ` on the `B` coordinates, identity elsewhere.
/// It is symplectic and fixes every arc of the standard configuration.
pub fn handle_map(surface: &SurfaceModel, u: &IntMatrix) -> Result<(IntMatrix, IntMatrix)> {
    let h = u.rows();
    if !u.is_square() || h > surface.genus() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} handle matrix on genus {}",
            u.rows(),
            u.cols(),
            surface.genus()
        )));
    }
    let inv = unimodular_inverse(u)?;
    let ut = u.transpose();
    let mut phi = IntMatrix::identity(surface.rank());
    for i in 0..h {
        for j in 0..h {
            phi[(surface.a(i), surface.a(j))] = inv[(i, j)].clone();
            phi[(surface.b(i), surface.b(j))] = ut[(i, j)].clone();
        }
    }
    // A', B' transform exactly like A, B
    Ok((phi.clone(), phi))
}

/// Replaces `γ` by `γ U` while keeping `α`, `β` fixed as class lists:
/// rebasis all three systems, then undo the `α`, `β` change by a handle map.
/// Net effect `α·γ ↦ Uᵀ (α·γ) U`, `a·γ ↦ (a·γ) U`.
pub fn compensated_gamma_change(surface: &SurfaceModel, u: &IntMatrix) -> Result<Vec<Move>> {
    let inv_t = unimodular_inverse(u)?.transpose();
    let (absolute, relative) = handle_map(surface, u)?;
    Ok(vec![
        Move::Rebasis { target: Target::Gamma, matrix: u.clone() },
        Move::Rebasis { target: Target::Beta, matrix: inv_t },
        Move::Rebasis { target: Target::Alpha, matrix: u.clone() },
        Move::SurfaceMap { absolute, relative },
    ])
}
