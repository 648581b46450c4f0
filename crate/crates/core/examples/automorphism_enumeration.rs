//! Enumerate Aut(D_l) by the (u, v) parametrization and cross-check the
//! count and the maps themselves against the brute-force generator-image
//! oracle; do the same for a couple of abelian groups.

use twistcheck::{brute_force_auts, enumerate_abelian_auts, enumerate_dihedral_auts, GroupHandle};

fn main() -> twistcheck::Result<()> {
    let l: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let g = GroupHandle::dihedral(l)?;
    let auts = enumerate_dihedral_auts(l)?;
    println!("Aut(D_{l}): {} maps (l * phi(l))", auts.len());
    for a in &auts {
        println!("  (u={}, v={}): r -> r^{}, s -> r^{} s", a.u, a.v, a.u, a.v);
    }

    let oracle = brute_force_auts(&g)?;
    assert_eq!(oracle.len(), auts.len());
    let elems = g.elements();
    let mut parametrized: Vec<Vec<_>> = auts
        .iter()
        .map(|a| elems.iter().map(|&x| a.apply(x).unwrap()).collect())
        .collect();
    parametrized.sort();
    assert_eq!(parametrized, oracle);
    println!("brute-force oracle agrees on all {} maps", oracle.len());

    for name in ["Z:8", "Z:3xZ:3"] {
        let g: GroupHandle = name.parse()?;
        let auts = enumerate_abelian_auts(&g)?;
        println!("Aut({name}): {} maps, oracle {}", auts.len(), brute_force_auts(&g)?.len());
    }
    Ok(())
}
