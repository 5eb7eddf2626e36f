use std::fmt;

use num_bigint::BigInt;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::intlin::{kernel_basis, lattice_intersection, smith_normal_form, IntMatrix, Lattice};
use crate::monodromy::{arc_step, quotient_bases_from_classes};

/// `0 → C_3 --π--> C_2 --ρ--> C_1 --0--> C_0 → 0` with
/// `C_3 = (L1∩L3) ⊕ (L2∩L3)`, `C_2 = L3`, `C_1 = Hom(L1rel ∩ L2rel, Z)`, `C_0 = Z`.
///
/// `pi` is in the lattice bases of `C_3` and `L3`; `rho` maps `L3`
/// coordinates to the basis dual to `rel_intersection`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexData {
    pub l1: Lattice,
    pub l2: Lattice,
    pub l3: Lattice,
    pub l1_rel: Lattice,
    pub l2_rel: Lattice,
    pub rel_intersection: Lattice,
    pub l13: Lattice,
    pub l23: Lattice,
    pub pi: IntMatrix,
    pub rho: IntMatrix,
}

impl ChainComplexData {
    /// Ranks of `C_0 … C_4`.
    pub fn ranks(&self) -> [usize; 5] {
        [1, self.rel_intersection.rank(), self.l3.rank(), self.l13.rank() + self.l23.rank(), 0]
    }
}

pub fn build_chain_complex(d: &Diagram) -> Result<ChainComplexData> {
    let s = &d.surface;
    let arcs = d.arcs_or_empty()?;
    // arcs disjoint from β: the first monodromy step moves them off β
    let arcs2 = if arcs.cols() == 0 {
        arcs.clone()
    } else {
        let qb = quotient_bases_from_classes(&d.alpha, &d.beta)?;
        arc_step(s, &arcs, &qb)?.next
    };
    let iota = s.to_relative();
    let l1 = Lattice::from_generators(&d.alpha);
    let l2 = Lattice::from_generators(&d.beta);
    let l3 = Lattice::from_generators(&d.gamma);
    let l1_rel = Lattice::from_generators(&(iota * &d.alpha).hstack(&arcs));
    let l2_rel = Lattice::from_generators(&(iota * &d.beta).hstack(&arcs2));
    let rel_intersection = lattice_intersection(&l1_rel, &l2_rel)?;
    let l13 = lattice_intersection(&l1, &l3)?;
    let l23 = lattice_intersection(&l2, &l3)?;
    let pi = l3
        .coordinates(&l13.basis().hstack(l23.basis()))
        .expect("intersections lie in L3");
    let rho = &(&rel_intersection.basis().transpose() * s.pairing()) * l3.basis();
    if !(&rho * &pi).is_zero() {
        return Err(Error::ChainConditionViolated);
    }
    Ok(ChainComplexData { l1, l2, l3, l1_rel, l2_rel, rel_intersection, l13, l23, pi, rho })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `H_0 … H_4`. For inputs that are only homologically valid this is the
/// homology of the formal complex, with no manifold behind it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyResult {
    pub groups: [HomologyGroup; 5],
}

impl HomologyResult {
    pub fn b2(&self) -> usize {
        self.groups[2].free_rank
    }

    pub fn free_ranks(&self) -> [usize; 5] {
        std::array::from_fn(|i| self.groups[i].free_rank)
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.groups.iter().map(ToString::to_string).collect();
        write!(f, "({})", g.join(", "))
    }
}

pub fn homology(d: &Diagram) -> Result<HomologyResult> {
    Ok(homology_of(&build_chain_complex(d)?))
}

pub fn homology_of(c: &ChainComplexData) -> HomologyResult {
    let h3 = HomologyGroup::free(c.pi.cols() - c.pi.rank());

    let ker = kernel_basis(&c.rho);
    let image = ker.coordinates(&c.pi).expect("rho·pi = 0");
    let snf = smith_normal_form(&image);
    let h2 = HomologyGroup { free_rank: ker.rank() - snf.rank(), torsion: snf.torsion() };

    let snf = smith_normal_form(&c.rho);
    let h1 = HomologyGroup { free_rank: c.rho.rows() - snf.rank(), torsion: snf.torsion() };

    HomologyResult { groups: [HomologyGroup::free(1), h1, h2, h3, HomologyGroup::free(0)] }
}
