//! Print the six automorphisms of D_3 with their twisted-involution sets
//! and counts, the smallest complete worked example in the crate.

fn main() -> twistcheck::Result<()> {
    println!("Automorphisms of D_3, convention (u,v): r -> r^u, s -> r^v s");
    println!("{:<6} {:<7} {:<7} S_sigma, m_sigma", "sigma", "phi(r)", "phi(s)");
    for row in twistcheck::harness::table1_rows()? {
        println!(
            "{:<6} {:<7} {:<7} {{{}}}, {}",
            row.label,
            row.image_of_r,
            row.image_of_s,
            row.set.join(", "),
            row.m
        );
    }
    println!("\nT(D_3) = {} bounds every m_sigma above.", twistcheck::degree_sum(&"D:3".parse()?));
    Ok(())
}
