//! Solve a linear congruence a*k = c (mod n) and show how the solution
//! count drives the reflection part of the dihedral involution formula.

use twistcheck::{count_closed_form, solve_linear_congruence};

fn main() -> twistcheck::Result<()> {
    let mut args = std::env::args().skip(1);
    let a: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let c: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(-2);
    let n: i64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(6);

    let sol = solve_linear_congruence(a, c, n);
    println!("{a}*k = {c} (mod {n}): {}", serde_json::to_string(&sol).unwrap());

    // reflections of D_l fixed by (u, v) solve (u-1)k = -v (mod l)
    let (l, u, v) = (9i64, 4i64, 3i64);
    let refl = solve_linear_congruence(u - 1, -v, l);
    let cf = count_closed_form(l as u64, u, v)?;
    println!(
        "D_{l} with sigma = ({u},{v}): (u-1)k = -v (mod {l}) has {} solutions = reflection part {}",
        refl.count, cf.reflection_part
    );
    assert_eq!(refl.count, cf.reflection_part);
    Ok(())
}
