//! Compute classical and twisted Frobenius-Schur indicators for a
//! dihedral group and confirm that for every involutory automorphism the
//! degree-weighted twisted indicators sum to m_sigma.

use twistcheck::{
    enumerate_dihedral_auts, twisted_involution_count, Automorphism, CharacterTable, GroupHandle,
};

fn main() -> twistcheck::Result<()> {
    let l: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let g = GroupHandle::dihedral(l)?;
    let table = CharacterTable::build(&g)?;

    println!("D_{l} irreducibles:");
    for i in 0..table.num_irreps() {
        println!(
            "  {:<6} degree {}  classical indicator {}",
            table.labels()[i],
            table.degrees()[i],
            table.fs_indicator(i)?
        );
    }

    println!("\ninvolutory automorphisms (sigma^2 = id):");
    for aut in enumerate_dihedral_auts(l)? {
        if !aut.squares_to_identity() {
            continue;
        }
        let sigma = Automorphism::Dihedral(aut);
        let mut weighted = 0i64;
        let mut parts = Vec::new();
        for i in 0..table.num_irreps() {
            let eps = table.twisted_fs_indicator(i, &sigma)?.value.unwrap();
            parts.push(eps.to_string());
            weighted += eps * table.degrees()[i] as i64;
        }
        let m = twisted_involution_count(&g, &sigma)?;
        println!(
            "  ({},{}): eps = [{}], sum eps*deg = {weighted} = m_sigma = {m}",
            aut.u,
            aut.v,
            parts.join(", ")
        );
        assert_eq!(weighted, m as i64);
    }
    Ok(())
}
