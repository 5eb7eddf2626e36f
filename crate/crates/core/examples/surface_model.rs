//! The homology of a bordered surface and its standard curve configuration.

use trisect::surface::{StandardConfiguration, SurfaceModel};

fn main() -> trisect::Result<()> {
    let s = SurfaceModel::new(2, 3)?;
    println!("H_1(Σ_2,3) has rank {}; basis A1 B1 A2 B2 ∂1 ∂2", s.rank());
    println!("intersection form on H_1(Σ):\n{}", s.intersection_form());
    println!("pairing H_1(Σ, ∂) x H_1(Σ):\n{}", s.pairing());

    let c = StandardConfiguration::new(&s, 1)?;
    println!("page genus 1: arcs\n{}\neta\n{}", c.arcs, c.eta);
    println!("arcs · eta =\n{}", s.arc_pairing(&c.arcs, &c.eta)?);
    println!("arcs · alpha =\n{}", s.arc_pairing(&c.arcs, &c.alpha)?);
    Ok(())
}
