//! Count the twisted involutions of one dihedral automorphism, showing
//! the closed-form gcd split next to the brute-force set.

use twistcheck::{count_closed_form, twisted_involution_set, Automorphism, DihedralAut, GroupHandle};

fn main() -> twistcheck::Result<()> {
    let mut args = std::env::args().skip(1);
    let l: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(12);
    let u: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(5);
    let v: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);

    let g = GroupHandle::dihedral(l)?;
    let aut = DihedralAut::new(l, u, v)?;
    let cf = count_closed_form(l, u, v)?;
    println!(
        "D_{l}, sigma = ({u},{v}): closed form m = {} = gcd(u+1, l) [{} rotations] + {} reflections",
        cf.total, cf.rotation_part, cf.reflection_part
    );

    let set = twisted_involution_set(&g, &Automorphism::Dihedral(aut))?;
    let names: Vec<String> = set.iter().map(|x| g.element_to_string(x)).collect();
    println!("brute force S_sigma = {{{}}} ({} elements)", names.join(", "), set.len());
    assert_eq!(set.len() as u64, cf.total);
    println!("T(D_{l}) = {}", twistcheck::degree_sum(&g));
    Ok(())
}
