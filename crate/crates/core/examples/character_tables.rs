//! Build the character table of any supported group and print degrees,
//! class sizes, the degree sum T(G), and the real-degree-sum identity.

use twistcheck::{degree_sum, CharacterTable, GroupHandle};

fn main() -> twistcheck::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "D:6".into());
    let g: GroupHandle = name.parse()?;
    let table = CharacterTable::build(&g)?;

    let sizes: Vec<usize> = table.classes().iter().map(|c| c.len()).collect();
    println!("{g}: {} conjugacy classes, sizes {sizes:?}", table.classes().len());
    for i in 0..table.num_irreps() {
        let values: Vec<String> = table
            .classes()
            .iter()
            .map(|c| {
                let v = table.value(i, &c[0]);
                if v.im.abs() < 1e-12 {
                    format!("{:.3}", v.re)
                } else {
                    format!("{:.3}{:+.3}i", v.re, v.im)
                }
            })
            .collect();
        println!("  {:<8} deg {}  [{}]", table.labels()[i], table.degrees()[i], values.join(", "));
    }
    println!("T({g}) = {} (degree sum)", degree_sum(&g));
    let (real_sum, involutions) = table.real_degree_sum_check()?;
    println!("real irrep degree sum {real_sum} = 1 + #involutions = {involutions}");
    println!("orthogonality defect {:.2e}", table.orthogonality_defect());
    Ok(())
}
