//! Verify T(G) >= m_alpha for every group of order p, p^2, and 2p over a
//! list of primes: Z_p, Z_{p^2}, Z_p x Z_p, Z_{2p}, and D_p.

use twistcheck::{run_order_class_campaign, CampaignConfig};

fn main() -> twistcheck::Result<()> {
    let primes: Vec<u64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("prime arguments"))
        .collect();
    let primes = if primes.is_empty() { vec![2, 3, 5, 7, 11, 13] } else { primes };
    let report = run_order_class_campaign(&CampaignConfig::orders(primes))?;
    print!("{}", report.text_summary());

    // the paper's closing example: Z_3 under the identity automorphism
    let z3 = report
        .records
        .iter()
        .find(|r| r.group == "Z:3" && r.u == Some(1))
        .expect("Z:3 identity record");
    println!("Z_3 identity: m = {} while T = {}", z3.m(), z3.t);
    std::process::exit(if report.passed() { 0 } else { 1 });
}
