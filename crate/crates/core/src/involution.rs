//! Twisted involutions: the set S_sigma = { x : sigma(x) = x^{-1} },
//! counted both by brute force over the group and, for dihedral groups,
//! by the closed-form gcd count.
//!
//! For sigma = (u, v) on D_l the closed form is:
//!   rotations:   gcd(u + 1, l) solutions of (u + 1) k = 0 (mod l)
//!   reflections: gcd(u - 1, l) solutions of (u - 1) k = -v (mod l)
//!                when gcd(u - 1, l) | v, otherwise none.
//! gcd(0, l) is taken as l, which covers u = 1 uniformly.

use serde::Serialize;

use crate::aut::Automorphism;
use crate::character::degree_sum;
use crate::error::{Error, Result};
use crate::group::{Element, GroupHandle};
use crate::numtheory::gcd;

/// S_sigma in canonical element order. Always contains the identity.
pub fn twisted_involution_set(g: &GroupHandle, sigma: &Automorphism) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for x in g.elements() {
        if sigma.apply(x)? == g.inv(x)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// |S_sigma| without materializing the set.
pub fn twisted_involution_count(g: &GroupHandle, sigma: &Automorphism) -> Result<u64> {
    let mut count = 0;
    for x in g.elements() {
        if sigma.apply(x)? == g.inv(x)? {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosedFormCount {
    pub total: u64,
    pub rotation_part: u64,
    pub reflection_part: u64,
}

/// Closed-form |S_{(u,v)}| for D_l.
pub fn count_closed_form(l: u64, u: i64, v: i64) -> Result<ClosedFormCount> {
    if l < 3 {
        return Err(Error::UnsupportedGroup(format!("l = {l} < 3")));
    }
    let li = l as i64;
    if !(1..li).contains(&u) || gcd(u, li) != 1 {
        return Err(Error::InvalidAutomorphism(format!("u = {u} invalid for l = {l}")));
    }
    if !(0..li).contains(&v) {
        return Err(Error::InvalidAutomorphism(format!("v = {v} invalid for l = {l}")));
    }
    let rotation_part = gcd(u + 1, li) as u64;
    let d1 = gcd(u - 1, li); // gcd(0, l) = l when u = 1
    let reflection_part = if v % d1 == 0 { d1 as u64 } else { 0 };
    Ok(ClosedFormCount {
        total: rotation_part + reflection_part,
        rotation_part,
        reflection_part,
    })
}

/// m_e for D_l: l + 2 when l is even, l + 1 when l is odd.
pub fn identity_involution_count(l: u64) -> u64 {
    if l % 2 == 0 {
        l + 2
    } else {
        l + 1
    }
}

/// max over all (u, v) of the closed-form count; equals m_e.
pub fn max_twisted_count(l: u64) -> Result<u64> {
    let mut best = 0;
    for aut in crate::aut::enumerate_dihedral_auts(l)? {
        best = best.max(count_closed_form(l, aut.u, aut.v)?.total);
    }
    Ok(best)
}

/// Per-automorphism verification record.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct InvolutionRecord {
    pub group: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<i64>,
    /// Parameter text for automorphisms that are not (u, v) pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aut: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_brute: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_closed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rot: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refl: Option<u64>,
    #[serde(rename = "T")]
    pub t: u64,
    pub ineq_holds: bool,
    pub equality: bool,
}

impl InvolutionRecord {
    pub fn m(&self) -> u64 {
        self.m_closed.or(self.m_brute).expect("record carries at least one count")
    }

    /// Closed-form dihedral record, optionally cross-checked by brute force.
    pub fn dihedral(l: u64, u: i64, v: i64, brute: bool) -> Result<Self> {
        let cf = count_closed_form(l, u, v)?;
        let g = GroupHandle::dihedral(l)?;
        let m_brute = if brute {
            let sigma = Automorphism::Dihedral(crate::aut::DihedralAut::new(l, u, v)?);
            Some(twisted_involution_count(&g, &sigma)?)
        } else {
            None
        };
        let t = degree_sum(&g);
        Ok(InvolutionRecord {
            group: g.to_string(),
            u: Some(u),
            v: Some(v),
            aut: None,
            m_brute,
            m_closed: Some(cf.total),
            rot: Some(cf.rotation_part),
            refl: Some(cf.reflection_part),
            t,
            ineq_holds: cf.total <= t,
            equality: cf.total == t,
        })
    }

    /// Brute-force record for any supported group/automorphism pair.
    pub fn brute_force(g: &GroupHandle, sigma: &Automorphism) -> Result<Self> {
        let m = twisted_involution_count(g, sigma)?;
        let t = degree_sum(g);
        let (u, v, aut) = match sigma {
            Automorphism::Dihedral(a) => (Some(a.u), Some(a.v), None),
            Automorphism::CyclicUnit { w, .. } => (Some(*w), None, None),
            Automorphism::Matrix { .. } => (None, None, Some(sigma.describe())),
        };
        Ok(InvolutionRecord {
            group: g.to_string(),
            u,
            v,
            aut,
            m_brute: Some(m),
            m_closed: None,
            rot: None,
            refl: None,
            t,
            ineq_holds: m <= t,
            equality: m == t,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{enumerate_auts, enumerate_dihedral_auts, DihedralAut};

    fn d_aut(l: u64, u: i64, v: i64) -> Automorphism {
        Automorphism::Dihedral(DihedralAut::new(l, u, v).unwrap())
    }

    #[test]
    fn table1_sets() {
        let g = GroupHandle::dihedral(3).unwrap();
        let s = twisted_involution_set(&g, &d_aut(3, 1, 0)).unwrap();
        let shown: Vec<String> = s.iter().map(|x| g.element_to_string(x)).collect();
        assert_eq!(shown, vec!["e", "s", "rs", "r^2s"]);

        let s = twisted_involution_set(&g, &d_aut(3, 1, 1)).unwrap();
        assert_eq!(s, vec![g.identity()]);

        let z3 = GroupHandle::cyclic(3).unwrap();
        let id = Automorphism::identity(&z3).unwrap();
        assert_eq!(twisted_involution_set(&z3, &id).unwrap(), vec![z3.identity()]);
    }

    #[test]
    fn closed_form_spec_examples() {
        assert_eq!(
            count_closed_form(3, 1, 0).unwrap(),
            ClosedFormCount { total: 4, rotation_part: 1, reflection_part: 3 }
        );
        assert_eq!(
            count_closed_form(3, 2, 0).unwrap(),
            ClosedFormCount { total: 4, rotation_part: 3, reflection_part: 1 }
        );
        // brute force over D_4 confirms (4, 4, 0)
        let g4 = GroupHandle::dihedral(4).unwrap();
        assert_eq!(twisted_involution_count(&g4, &d_aut(4, 3, 1)).unwrap(), 4);
        assert_eq!(
            count_closed_form(4, 3, 1).unwrap(),
            ClosedFormCount { total: 4, rotation_part: 4, reflection_part: 0 }
        );
        // brute force over D_6 confirms (8, 6, 2); equality with T(D_6) = 8
        // at a non-identity automorphism
        let g6 = GroupHandle::dihedral(6).unwrap();
        assert_eq!(twisted_involution_count(&g6, &d_aut(6, 5, 0)).unwrap(), 8);
        assert_eq!(
            count_closed_form(6, 5, 0).unwrap(),
            ClosedFormCount { total: 8, rotation_part: 6, reflection_part: 2 }
        );
    }

    #[test]
    fn identity_count_formula() {
        assert_eq!(identity_involution_count(3), 4);
        assert_eq!(identity_involution_count(4), 6);
        assert_eq!(identity_involution_count(7), 8);
        for l in 3..=40 {
            assert_eq!(identity_involution_count(l), count_closed_form(l, 1, 0).unwrap().total);
        }
    }

    #[test]
    fn max_attained_at_identity() {
        assert_eq!(max_twisted_count(3).unwrap(), 4);
        assert_eq!(max_twisted_count(4).unwrap(), 6);
        assert_eq!(max_twisted_count(5).unwrap(), 6);
        for l in 3..=40 {
            assert_eq!(max_twisted_count(l).unwrap(), identity_involution_count(l), "l={l}");
        }
    }

    #[test]
    fn closed_form_matches_brute_force() {
        for l in 3..=24u64 {
            let g = GroupHandle::dihedral(l).unwrap();
            for aut in enumerate_dihedral_auts(l).unwrap() {
                let cf = count_closed_form(l, aut.u, aut.v).unwrap();
                let set =
                    twisted_involution_set(&g, &Automorphism::Dihedral(aut)).unwrap();
                assert_eq!(set.len() as u64, cf.total, "l={l} u={} v={}", aut.u, aut.v);
                assert!(set.contains(&g.identity()));
                let rotations = set
                    .iter()
                    .filter(|x| matches!(x, Element::Dihedral { refl: false, .. }))
                    .count() as u64;
                assert_eq!(rotations, cf.rotation_part);
                assert_eq!(set.len() as u64 - rotations, cf.reflection_part);
            }
        }
    }

    #[test]
    fn bound_chain() {
        // rot + refl <= gcd(u+1, l) + gcd(u-1, l) <= l + gcd(u+1, u-1) <= l + 2
        for l in 3..=60u64 {
            let li = l as i64;
            for aut in enumerate_dihedral_auts(l).unwrap() {
                let cf = count_closed_form(l, aut.u, aut.v).unwrap();
                let g_sum = (gcd(aut.u + 1, li) + gcd(aut.u - 1, li)) as u64;
                assert!(cf.total <= g_sum);
                assert!(g_sum <= l + gcd(aut.u + 1, aut.u - 1) as u64);
                assert!(g_sum <= l + 2);
            }
        }
    }

    #[test]
    fn divisibility_is_representative_independent() {
        // shifting v by multiples of l does not change the congruence
        for l in [5u64, 6, 9] {
            for aut in enumerate_dihedral_auts(l).unwrap() {
                let cf = count_closed_form(l, aut.u, aut.v).unwrap();
                let shifted = count_closed_form(l, aut.u, (aut.v + 3 * l as i64) % l as i64).unwrap();
                assert_eq!(cf, shifted);
            }
        }
    }

    #[test]
    fn abelian_records_have_no_closed_form() {
        let v4 = GroupHandle::two_cyclic(2, 2).unwrap();
        for sigma in enumerate_auts(&v4).unwrap() {
            let rec = InvolutionRecord::brute_force(&v4, &sigma).unwrap();
            assert!(rec.m_closed.is_none());
            assert!(rec.rot.is_none());
            assert!(rec.ineq_holds);
        }
    }

    #[test]
    fn record_serialization_fields() {
        let rec = InvolutionRecord::dihedral(6, 5, 0, true).unwrap();
        let json = serde_json::to_value(&rec).unwrap();
        assert_eq!(json["group"], "D:6");
        assert_eq!(json["u"], 5);
        assert_eq!(json["v"], 0);
        assert_eq!(json["m_brute"], 8);
        assert_eq!(json["m_closed"], 8);
        assert_eq!(json["rot"], 6);
        assert_eq!(json["refl"], 2);
        assert_eq!(json["T"], 8);
        assert_eq!(json["ineq_holds"], true);
        assert_eq!(json["equality"], true);
    }
}
