//! Homological model of the compact oriented surface `Σ_{g,b}`.
//!
//! Absolute basis of `H_1(Σ)`: `A_1, B_1, …, A_g, B_g, ∂_1, …, ∂_{b-1}`.
//! Relative basis of `H_1(Σ, ∂Σ)`: `A'_1, B'_1, …, A'_g, B'_g, T_1, …, T_{b-1}`,
//! where `T_j` is an arc from the j-th to the (j+1)-th boundary component.
//!
//! The pairing `⟨relative, absolute⟩` is fixed by
//! `⟨A'_i, B_j⟩ = -δ_ij`, `⟨B'_i, A_j⟩ = δ_ij`, `⟨T_j, ∂_m⟩ = δ_jm - δ_{j+1,m}`.
//! This order is part of the `canonical-v1` diagram file format.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// A closed-curve class, coordinates in the absolute basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveClass(pub Vec<BigInt>);

/// An arc class, coordinates in the relative basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcClass(pub Vec<BigInt>);

/// Left-hand argument of a pairing: either a closed curve or a proper arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceClass {
    Curve(CurveClass),
    Arc(ArcClass),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    genus: usize,
    boundary: usize,
    pairing: IntMatrix,
    to_relative: IntMatrix,
}

impl SurfaceModel {
    pub fn new(genus: usize, boundary: usize) -> Result<Self> {
        if boundary < 1 {
            return Err(Error::InvalidParams(format!("surface needs b >= 1 boundary components, got {boundary}")));
        }
        let rank = 2 * genus + boundary - 1;
        let mut pairing = IntMatrix::zeros(rank, rank);
        let mut to_relative = IntMatrix::zeros(rank, rank);
        for i in 0..genus {
            let (a, b) = (2 * i, 2 * i + 1);
            pairing[(a, b)] = -BigInt::one();
            pairing[(b, a)] = BigInt::one();
            to_relative[(a, a)] = BigInt::one();
            to_relative[(b, b)] = BigInt::one();
        }
        let off = 2 * genus;
        for j in 0..boundary - 1 {
            pairing[(off + j, off + j)] = BigInt::one();
            if j + 1 < boundary - 1 {
                pairing[(off + j, off + j + 1)] = -BigInt::one();
            }
        }
        Ok(SurfaceModel { genus, boundary, pairing, to_relative })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary(&self) -> usize {
        self.boundary
    }

    /// `2g + b - 1`, the rank of both `H_1(Σ)` and `H_1(Σ, ∂Σ)`.
    pub fn rank(&self) -> usize {
        2 * self.genus + self.boundary - 1
    }

    /// Rows indexed by the relative basis, columns by the absolute basis.
    pub fn pairing(&self) -> &IntMatrix {
        &self.pairing
    }

    /// The natural map `H_1(Σ) → H_1(Σ, ∂Σ)`.
    pub fn to_relative(&self) -> &IntMatrix {
        &self.to_relative
    }

    /// Skew intersection form on `H_1(Σ)`: `⟨x, y⟩ = xᵀ J y`.
    pub fn intersection_form(&self) -> IntMatrix {
        &self.to_relative.transpose() * &self.pairing
    }

    /// Absolute basis indices (0-based genus index `i`).
    pub fn a(&self, i: usize) -> usize {
        assert!(i < self.genus);
        2 * i
    }

    pub fn b(&self, i: usize) -> usize {
        assert!(i < self.genus);
        2 * i + 1
    }

    /// Index of `∂_{j+1}` (absolute) or `T_{j+1}` (relative).
    pub fn boundary_index(&self, j: usize) -> usize {
        assert!(j + 1 < self.boundary);
        2 * self.genus + j
    }

    pub fn unit(&self, idx: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.rank()];
        v[idx] = BigInt::one();
        v
    }

    fn check_rows(&self, m: &IntMatrix, what: &str) -> Result<()> {
        if m.rows() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{what}: class vectors have length {}, surface rank is {}",
                m.rows(),
                self.rank()
            )));
        }
        Ok(())
    }

    /// `(μ·ν)_ij = ⟨ι μ_i, ν_j⟩` for curve columns `mu`, `nu`.
    pub fn curve_pairing(&self, mu: &IntMatrix, nu: &IntMatrix) -> Result<IntMatrix> {
        self.check_rows(mu, "left curves")?;
        self.check_rows(nu, "right curves")?;
        Ok(&(&(&self.to_relative * mu).transpose() * &self.pairing) * nu)
    }

    /// `(a·ν)_ij = ⟨a_i, ν_j⟩` for arc columns `arcs`, curve columns `nu`.
    pub fn arc_pairing(&self, arcs: &IntMatrix, nu: &IntMatrix) -> Result<IntMatrix> {
        self.check_rows(arcs, "arcs")?;
        self.check_rows(nu, "curves")?;
        Ok(&(&arcs.transpose() * &self.pairing) * nu)
    }

    /// `(γ·a)_ij = ⟨γ_i, a_j⟩ = -⟨a_j, γ_i⟩` (skew convention for curve against arc).
    pub fn curve_arc_pairing(&self, curves: &IntMatrix, arcs: &IntMatrix) -> Result<IntMatrix> {
        Ok(-&self.arc_pairing(arcs, curves)?.transpose())
    }

    /// Pairing of a mixed list of curves and arcs against curves.
    pub fn pairing_matrix(&self, mu: &[SurfaceClass], nu: &[CurveClass]) -> Result<IntMatrix> {
        let n = self.rank();
        let check = |v: &[BigInt], what: &str, k: usize| {
            if v.len() != n {
                Err(Error::DimensionMismatch(format!("{what}[{k}] has length {}, surface rank is {n}", v.len())))
            } else {
                Ok(())
            }
        };
        let mut rel = Vec::with_capacity(mu.len());
        for (k, c) in mu.iter().enumerate() {
            match c {
                SurfaceClass::Curve(CurveClass(v)) => {
                    check(v, "mu", k)?;
                    rel.push(self.to_relative.apply(v));
                }
                SurfaceClass::Arc(ArcClass(v)) => {
                    check(v, "mu", k)?;
                    rel.push(v.clone());
                }
            }
        }
        for (k, CurveClass(v)) in nu.iter().enumerate() {
            check(v, "nu", k)?;
        }
        let left = IntMatrix::from_columns(n, &rel);
        let right = IntMatrix::from_columns(n, &nu.iter().map(|c| c.0.clone()).collect::<Vec<_>>());
        Ok(&(&left.transpose() * &self.pairing) * &right)
    }
}

/// The standard `(α, β, a, η)` configuration used by the normal form.
///
/// Boundary part first: `a_j = T_j`, `η_j = ∂_1 + … + ∂_j` for `j < b`.
/// Then for each page-genus handle `h`: `η = (B_{g-p+h}, A_{g-p+h})` with
/// dual arcs `(-A'_{g-p+h}, B'_{g-p+h})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardConfiguration {
    pub alpha: IntMatrix,
    pub beta: IntMatrix,
    pub arcs: IntMatrix,
    pub eta: IntMatrix,
}

impl StandardConfiguration {
    pub fn new(surface: &SurfaceModel, page_genus: usize) -> Result<Self> {
        let (g, b, p) = (surface.genus(), surface.boundary(), page_genus);
        if p > g {
            return Err(Error::InvalidParams(format!("page genus p = {p} exceeds g = {g}")));
        }
        let n = surface.rank();
        let h = g - p;
        let alpha: Vec<_> = (0..h).map(|i| surface.unit(surface.a(i))).collect();
        let beta: Vec<_> = (0..h).map(|i| surface.unit(surface.b(i))).collect();
        let mut arcs = Vec::new();
        let mut eta = Vec::new();
        let mut partial = vec![BigInt::zero(); n];
        for j in 0..b - 1 {
            let idx = surface.boundary_index(j);
            partial[idx] = BigInt::one();
            arcs.push(surface.unit(idx));
            eta.push(partial.clone());
        }
        for k in h..g {
            let mut neg_a = surface.unit(surface.a(k));
            neg_a[surface.a(k)] = -BigInt::one();
            eta.push(surface.unit(surface.b(k)));
            arcs.push(neg_a);
            eta.push(surface.unit(surface.a(k)));
            arcs.push(surface.unit(surface.b(k)));
        }
        Ok(StandardConfiguration {
            alpha: IntMatrix::from_columns(n, &alpha),
            beta: IntMatrix::from_columns(n, &beta),
            arcs: IntMatrix::from_columns(n, &arcs),
            eta: IntMatrix::from_columns(n, &eta),
        })
    }

    /// Checks duality `a·η = I`, disjointness of `a`/`η` from `α`, `β`, and
    /// that `{α, β, η}` is a basis of `H_1(Σ)`. Returns a description of the
    /// first failure.
    pub fn check(&self, surface: &SurfaceModel) -> std::result::Result<(), String> {
        check_arc_duality(surface, &self.alpha, &self.beta, &self.arcs, &self.eta)?;
        let all = self.alpha.hstack(&self.beta).hstack(&self.eta);
        if !all.is_unimodular() {
            return Err("alpha, beta, eta do not form a basis of H_1".into());
        }
        Ok(())
    }
}

/// Duality and disjointness conditions shared by standard configurations and
/// diagrams carrying arcs: `a·η = I`, `ι(α)·η = ι(β)·η = 0`, `a·α = a·β = 0`.
pub(crate) fn check_arc_duality(
    surface: &SurfaceModel,
    alpha: &IntMatrix,
    beta: &IntMatrix,
    arcs: &IntMatrix,
    eta: &IntMatrix,
) -> std::result::Result<(), String> {
    let pair = |f: &dyn Fn() -> Result<IntMatrix>| f().map_err(|e| e.to_string());
    if !pair(&|| surface.arc_pairing(arcs, eta))?.is_identity() {
        return Err("arcs and eta are not dual (a·η ≠ I)".into());
    }
    for (name, sys) in [("alpha", alpha), ("beta", beta)] {
        if !pair(&|| surface.curve_pairing(sys, eta))?.is_zero() {
            return Err(format!("{name} pairs nontrivially with eta"));
        }
        if !pair(&|| surface.arc_pairing(arcs, sys))?.is_zero() {
            return Err(format!("arcs pair nontrivially with {name}"));
        }
    }
    Ok(())
}

/// Homological shadow of the standard sutured diagram `(Σ; δ^k, ε^k)`:
/// `δ·ε = I_m ⊕ 0` with `m = g - p - k + l`, and `δ_i = ε_i` for `i ≥ m`.
pub fn standard_sutured_pattern(
    surface: &SurfaceModel,
    page_genus: usize,
    k: usize,
) -> Result<(IntMatrix, IntMatrix)> {
    let (g, b, p) = (surface.genus(), surface.boundary(), page_genus);
    let l = 2 * p + b - 1;
    if p > g || k < l || k > g + p + b - 1 {
        return Err(Error::InvalidParams(format!(
            "need g >= p and l <= k <= g+p+b-1 (g={g}, p={p}, b={b}, k={k}, l={l})"
        )));
    }
    let dual = g - p + l - k;
    let n = surface.rank();
    let mut delta = Vec::new();
    let mut epsilon = Vec::new();
    for i in 0..g - p {
        delta.push(surface.unit(surface.a(i)));
        if i < dual {
            let mut v = surface.unit(surface.b(i));
            v[surface.b(i)] = -BigInt::one();
            epsilon.push(v);
        } else {
            epsilon.push(surface.unit(surface.a(i)));
        }
    }
    Ok((IntMatrix::from_columns(n, &delta), IntMatrix::from_columns(n, &epsilon)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::smith_normal_form;

    fn curve(v: &[i64]) -> CurveClass {
        CurveClass(v.iter().map(|&x| x.into()).collect())
    }

    fn arc(v: &[i64]) -> ArcClass {
        ArcClass(v.iter().map(|&x| x.into()).collect())
    }

    #[test]
    fn disk_and_torus() {
        let disk = SurfaceModel::new(0, 1).unwrap();
        assert_eq!(disk.rank(), 0);
        let t = SurfaceModel::new(1, 1).unwrap();
        assert_eq!(t.pairing(), &IntMatrix::from_rows(&[[0, -1], [1, 0]]));
        assert!(SurfaceModel::new(1, 0).is_err());
    }

    #[test]
    fn torus_with_two_boundaries_is_perfect() {
        // rows A', B', T1; columns A, B, ∂1
        let s = SurfaceModel::new(1, 2).unwrap();
        let expected = IntMatrix::from_rows(&[[0, -1, 0], [1, 0, 0], [0, 0, 1]]);
        assert_eq!(s.pairing(), &expected);
        assert_eq!(s.pairing().determinant().unwrap().magnitude(), &1u32.into());
    }

    #[test]
    fn boundary_classes_span_kernel_of_to_relative() {
        for (g, b) in [(0, 3), (2, 4), (1, 1)] {
            let s = SurfaceModel::new(g, b).unwrap();
            let k = crate::intlin::kernel_basis(s.to_relative());
            assert_eq!(k.rank(), b - 1);
        }
    }

    #[test]
    fn sign_convention_examples() {
        let s = SurfaceModel::new(1, 1).unwrap();
        let a = curve(&[1, 0]);
        let b = curve(&[0, 1]);
        let m = s.pairing_matrix(&[SurfaceClass::Curve(a.clone())], std::slice::from_ref(&b)).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[-1]]));
        let m = s.pairing_matrix(&[SurfaceClass::Curve(b)], &[a]).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[1]]));

        let s = SurfaceModel::new(1, 2).unwrap();
        let d1 = curve(&[0, 0, 1]);
        let m = s
            .pairing_matrix(&[SurfaceClass::Curve(d1.clone())], &[curve(&[1, 0, 0]), curve(&[0, 1, 0]), d1.clone()])
            .unwrap();
        assert!(m.is_zero());
        let m = s.pairing_matrix(&[SurfaceClass::Arc(arc(&[0, 0, 1]))], &[d1]).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[[1]]));
        assert!(s.pairing_matrix(&[SurfaceClass::Arc(arc(&[1]))], &[]).is_err());
    }

    #[test]
    fn standard_configuration_examples() {
        let s = SurfaceModel::new(1, 1).unwrap();
        let c = StandardConfiguration::new(&s, 0).unwrap();
        assert_eq!(c.alpha, IntMatrix::from_rows(&[[1], [0]]));
        assert_eq!(c.beta, IntMatrix::from_rows(&[[0], [1]]));
        assert_eq!(c.arcs.cols(), 0);

        let s = SurfaceModel::new(1, 2).unwrap();
        let c = StandardConfiguration::new(&s, 0).unwrap();
        assert_eq!(c.arcs, IntMatrix::from_rows(&[[0], [0], [1]]));
        assert_eq!(c.eta, IntMatrix::from_rows(&[[0], [0], [1]]));
        assert_eq!(s.arc_pairing(&c.arcs, &c.eta).unwrap(), IntMatrix::identity(1));

        let s = SurfaceModel::new(1, 1).unwrap();
        let c = StandardConfiguration::new(&s, 1).unwrap();
        assert_eq!(c.eta, IntMatrix::from_rows(&[[0, 1], [1, 0]]));
        assert_eq!(s.arc_pairing(&c.arcs, &c.eta).unwrap(), IntMatrix::identity(2));
        c.check(&s).unwrap();
    }

    #[test]
    fn standard_configuration_sweep() {
        for g in 0..=5 {
            for p in 0..=g {
                for b in 1..=4 {
                    let s = SurfaceModel::new(g, b).unwrap();
                    let c = StandardConfiguration::new(&s, p).unwrap();
                    assert_eq!(c.arcs.cols(), 2 * p + b - 1);
                    c.check(&s).unwrap_or_else(|e| panic!("g={g} p={p} b={b}: {e}"));
                }
            }
        }
    }

    #[test]
    fn sutured_pattern_examples() {
        let s = SurfaceModel::new(1, 1).unwrap();
        let (d, e) = standard_sutured_pattern(&s, 0, 0).unwrap();
        assert_eq!(e, IntMatrix::from_rows(&[[0], [-1]]));
        assert_eq!(s.curve_pairing(&d, &e).unwrap(), IntMatrix::from_rows(&[[1]]));
        let (d, e) = standard_sutured_pattern(&s, 0, 1).unwrap();
        assert_eq!(d, e);
        assert_eq!(s.curve_pairing(&d, &e).unwrap(), IntMatrix::from_rows(&[[0]]));

        let s = SurfaceModel::new(2, 1).unwrap();
        let (d, e) = standard_sutured_pattern(&s, 0, 1).unwrap();
        assert_eq!(s.curve_pairing(&d, &e).unwrap(), IntMatrix::diagonal(&[1, 0]));
        assert_eq!(d.column(1), e.column(1));
        let snf = smith_normal_form(&s.curve_pairing(&d, &e).unwrap());
        assert!(snf.is_identity_pattern(1));

        assert!(standard_sutured_pattern(&s, 0, 5).is_err());
    }
}
