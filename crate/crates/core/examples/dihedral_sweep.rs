//! Sweep every automorphism of D_l for l up to a bound, checking
//! m_sigma <= T(D_l) by closed form and brute force, and print the
//! campaign summary plus the equality cases at non-identity maps.

use twistcheck::{run_dihedral_campaign, CampaignConfig};

fn main() -> twistcheck::Result<()> {
    let max_l = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(60);
    let report = run_dihedral_campaign(&CampaignConfig::dihedral(max_l))?;
    print!("{}", report.text_summary());

    println!("\nEquality cases m_sigma = T at non-identity automorphisms:");
    for rec in report.records.iter().filter(|r| r.equality && (r.u, r.v) != (Some(1), Some(0))) {
        println!("  {} ({},{}): m = {} = T", rec.group, rec.u.unwrap(), rec.v.unwrap(), rec.m());
    }
    std::process::exit(if report.passed() { 0 } else { 1 });
}
