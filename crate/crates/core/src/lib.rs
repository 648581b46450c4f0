//! twistcheck: exact verification of twisted-involution counts and
//! character degree sums in dihedral and small abelian groups.
//!
//! For an automorphism sigma of a finite group G, the twisted involutions
//! are S_sigma = { x in G : sigma(x) = x^{-1} }, and T(G) is the sum of
//! the degrees of the irreducible complex representations of G. This
//! crate computes m_sigma = |S_sigma| three independent ways — brute
//! force over the group, a closed-form gcd count for dihedral groups, and
//! degree-weighted twisted Frobenius-Schur indicators — and machine-checks
//! the inequality T(G) >= m_sigma across whole families of groups.
//!
//! Dihedral automorphisms are parametrized as (u, v): r -> r^u,
//! s -> r^v s with gcd(u, l) = 1.
//!
//! See the crate examples for runnable entry points into each capability;
//! the `twistcheck` binary exposes the same campaigns on the command line.

pub mod aut;
pub mod character;
pub mod error;
pub mod group;
pub mod harness;
pub mod involution;
pub mod numtheory;

pub use aut::{
    brute_force_auts, enumerate_abelian_auts, enumerate_auts, enumerate_dihedral_auts,
    Automorphism, DihedralAut,
};
pub use character::{degree_sum, CharacterTable, TwistedIndicator};
pub use error::{Error, Result};
pub use group::{Element, GroupHandle, GroupKind};
pub use harness::{
    run_campaign, run_dihedral_campaign, run_indicator_campaign, run_order_class_campaign,
    run_table1, CampaignConfig, CampaignReport, Family,
};
pub use involution::{
    count_closed_form, identity_involution_count, max_twisted_count, twisted_involution_count,
    twisted_involution_set, ClosedFormCount, InvolutionRecord,
};
pub use numtheory::{
    check_gcd_lcm_inequality, check_gcd_triple_inequality, gcd_of_neighbors,
    solve_linear_congruence, CongruenceSolution,
};
