//! Automorphisms of the supported groups.
//!
//! Dihedral automorphisms use the (u, v) parametrization: r -> r^u,
//! s -> r^v s, with gcd(u, l) = 1. So u multiplies rotation exponents and
//! v shifts reflections; a general element maps by r^k -> r^{uk},
//! r^k s -> r^{uk+v} s. Cyclic automorphisms are multiplication by a unit;
//! Z_p x Z_p automorphisms are invertible 2x2 matrices over F_p.

use crate::error::{Error, Result};
use crate::group::{Element, GroupHandle, GroupKind};
use crate::numtheory::{euler_phi, gcd, is_prime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralAut {
    pub l: u64,
    pub u: i64,
    pub v: i64,
}

impl DihedralAut {
    pub fn new(l: u64, u: i64, v: i64) -> Result<Self> {
        if l < 3 {
            return Err(Error::UnsupportedGroup(format!("l = {l} < 3")));
        }
        let li = l as i64;
        if !(1..li).contains(&u) || gcd(u, li) != 1 {
            return Err(Error::InvalidAutomorphism(format!(
                "u = {u} must lie in [1, {l}) with gcd(u, {l}) = 1"
            )));
        }
        if !(0..li).contains(&v) {
            return Err(Error::InvalidAutomorphism(format!("v = {v} must lie in [0, {l})")));
        }
        Ok(Self { l, u, v })
    }

    pub fn identity(l: u64) -> Result<Self> {
        Self::new(l, 1, 0)
    }

    pub fn is_identity(&self) -> bool {
        self.u == 1 && self.v == 0
    }

    pub fn apply(&self, x: Element) -> Result<Element> {
        let l = self.l as i64;
        match x {
            Element::Dihedral { refl: false, k } if (0..l).contains(&k) => {
                Ok(Element::Dihedral { refl: false, k: (self.u * k).rem_euclid(l) })
            }
            Element::Dihedral { refl: true, k } if (0..l).contains(&k) => {
                Ok(Element::Dihedral { refl: true, k: (self.u * k + self.v).rem_euclid(l) })
            }
            _ => Err(Error::GroupMismatch { group: format!("D:{}", self.l) }),
        }
    }

    /// self ∘ other, with other applied first.
    pub fn compose(&self, other: &DihedralAut) -> Result<DihedralAut> {
        if self.l != other.l {
            return Err(Error::InvalidAutomorphism(format!(
                "cannot compose automorphisms of D:{} and D:{}",
                self.l, other.l
            )));
        }
        let l = self.l as i64;
        DihedralAut::new(
            self.l,
            (self.u * other.u).rem_euclid(l),
            (self.u * other.v + self.v).rem_euclid(l),
        )
    }

    pub fn squares_to_identity(&self) -> bool {
        self.compose(self).map(|a| a.is_identity()).unwrap_or(false)
    }
}

/// All l * phi(l) automorphisms of D_l, sorted by (u, v).
pub fn enumerate_dihedral_auts(l: u64) -> Result<Vec<DihedralAut>> {
    if l < 3 {
        return Err(Error::UnsupportedGroup(format!("l = {l} < 3")));
    }
    let li = l as i64;
    let mut out = Vec::with_capacity((l * euler_phi(l)) as usize);
    for u in 1..li {
        if gcd(u, li) != 1 {
            continue;
        }
        for v in 0..li {
            out.push(DihedralAut { l, u, v });
        }
    }
    Ok(out)
}

/// An automorphism of any supported group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Automorphism {
    Dihedral(DihedralAut),
    /// x -> w * x on Z_n, gcd(w, n) = 1.
    CyclicUnit { n: u64, w: i64 },
    /// (a, b) -> m * (a, b) over F_p on Z_p x Z_p, det(m) != 0 mod p.
    Matrix { p: u64, m: [[i64; 2]; 2] },
}

impl Automorphism {
    pub fn identity(g: &GroupHandle) -> Result<Self> {
        Ok(match g.kind() {
            GroupKind::Dihedral(l) => Automorphism::Dihedral(DihedralAut::identity(l)?),
            GroupKind::Cyclic(n) => Automorphism::CyclicUnit { n, w: 1 },
            GroupKind::TwoCyclic(p, q) if p == q => {
                Automorphism::Matrix { p, m: [[1, 0], [0, 1]] }
            }
            kind => return Err(Error::UnsupportedGroup(format!("{kind:?}"))),
        })
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Automorphism::Dihedral(a) => a.is_identity(),
            Automorphism::CyclicUnit { w, .. } => *w == 1,
            Automorphism::Matrix { m, .. } => *m == [[1, 0], [0, 1]],
        }
    }

    pub fn apply(&self, x: Element) -> Result<Element> {
        match (self, x) {
            (Automorphism::Dihedral(a), x) => a.apply(x),
            (Automorphism::CyclicUnit { n, w }, Element::Cyclic(a)) => {
                Ok(Element::Cyclic((w * a).rem_euclid(*n as i64)))
            }
            (Automorphism::Matrix { p, m }, Element::TwoCyclic(a, b)) => {
                let p = *p as i64;
                Ok(Element::TwoCyclic(
                    (m[0][0] * a + m[0][1] * b).rem_euclid(p),
                    (m[1][0] * a + m[1][1] * b).rem_euclid(p),
                ))
            }
            _ => Err(Error::GroupMismatch { group: "automorphism/element kind".into() }),
        }
    }

    pub fn squares_to_identity(&self) -> bool {
        match self {
            Automorphism::Dihedral(a) => a.squares_to_identity(),
            Automorphism::CyclicUnit { n, w } => (w * w).rem_euclid(*n as i64) == 1 % *n as i64,
            Automorphism::Matrix { p, m } => {
                let p = *p as i64;
                let mut sq = [[0i64; 2]; 2];
                for i in 0..2 {
                    for j in 0..2 {
                        sq[i][j] = (m[i][0] * m[0][j] + m[i][1] * m[1][j]).rem_euclid(p);
                    }
                }
                sq == [[1 % p, 0], [0, 1 % p]]
            }
        }
    }

    /// Short parameter text for reports ("u,v", "w", or "[[a,b],[c,d]]").
    pub fn describe(&self) -> String {
        match self {
            Automorphism::Dihedral(a) => format!("{},{}", a.u, a.v),
            Automorphism::CyclicUnit { w, .. } => w.to_string(),
            Automorphism::Matrix { m, .. } => {
                format!("[[{},{}],[{},{}]]", m[0][0], m[0][1], m[1][0], m[1][1])
            }
        }
    }
}

/// Automorphisms of the abelian handles: units mod n for Z_n, GL(2, p)
/// for Z_p x Z_p. Counts are phi(n) and (p^2 - 1)(p^2 - p).
pub fn enumerate_abelian_auts(g: &GroupHandle) -> Result<Vec<Automorphism>> {
    match g.kind() {
        GroupKind::Cyclic(n) => {
            if n > 1_000_000 {
                return Err(Error::UnsupportedGroup(format!("Z:{n} exceeds the n <= 10^6 cap")));
            }
            Ok((1..n.max(2) as i64)
                .filter(|&w| gcd(w, n as i64) == 1)
                .map(|w| Automorphism::CyclicUnit { n, w })
                .collect())
        }
        GroupKind::TwoCyclic(p, q) => {
            if p != q || !is_prime(p) {
                return Err(Error::UnsupportedGroup(format!(
                    "automorphism enumeration supports Z:pxZ:p for prime p, got Z:{p}xZ:{q}"
                )));
            }
            if p > 31 {
                return Err(Error::UnsupportedGroup(format!("p = {p} exceeds the p <= 31 cap")));
            }
            let pi = p as i64;
            let mut out = Vec::new();
            for a in 0..pi {
                for b in 0..pi {
                    for c in 0..pi {
                        for d in 0..pi {
                            if (a * d - b * c).rem_euclid(pi) != 0 {
                                out.push(Automorphism::Matrix { p, m: [[a, b], [c, d]] });
                            }
                        }
                    }
                }
            }
            Ok(out)
        }
        GroupKind::Dihedral(_) => Err(Error::UnsupportedGroup(
            "dihedral handles use enumerate_dihedral_auts".into(),
        )),
    }
}

/// All automorphisms of a supported group, under the uniform enum.
pub fn enumerate_auts(g: &GroupHandle) -> Result<Vec<Automorphism>> {
    match g.kind() {
        GroupKind::Dihedral(l) => Ok(enumerate_dihedral_auts(l)?
            .into_iter()
            .map(Automorphism::Dihedral)
            .collect()),
        _ => enumerate_abelian_auts(g),
    }
}

/// Brute-force oracle: every bijective homomorphism g -> g, found by
/// trying all images of a fixed generating set and extending. Returns
/// image vectors aligned with `g.elements()` order, sorted.
pub fn brute_force_auts(g: &GroupHandle) -> Result<Vec<Vec<Element>>> {
    if g.order() > 200 {
        return Err(Error::UnsupportedGroup(format!(
            "brute-force oracle capped at |G| <= 200, got {}",
            g.order()
        )));
    }
    let elems = g.elements();
    let mut maps: Vec<Vec<Element>> = Vec::new();
    match g.kind() {
        GroupKind::Dihedral(_) => {
            let r = Element::Dihedral { refl: false, k: 1 };
            for &ir in &elems {
                if g.element_order(ir)? != g.element_order(r)? {
                    continue;
                }
                for &is in &elems {
                    // relations: s^2 = e and s r s = r^{-1}
                    if g.mul(is, is)? != g.identity() {
                        continue;
                    }
                    let conj = g.mul(g.mul(is, ir)?, g.inv(is)?)?;
                    if conj != g.inv(ir)? {
                        continue;
                    }
                    // extend r^k s^e -> ir^k is^e
                    let image = elems
                        .iter()
                        .map(|&x| {
                            let Element::Dihedral { refl, k } = x else { unreachable!() };
                            let mut y = g.identity();
                            for _ in 0..k {
                                y = g.mul(y, ir).unwrap();
                            }
                            if refl {
                                y = g.mul(y, is).unwrap();
                            }
                            y
                        })
                        .collect::<Vec<_>>();
                    if is_bijective_homomorphism(g, &elems, &image)? {
                        maps.push(image);
                    }
                }
            }
        }
        GroupKind::Cyclic(n) => {
            for w in 0..n as i64 {
                let image: Vec<Element> = elems
                    .iter()
                    .map(|&x| {
                        let Element::Cyclic(a) = x else { unreachable!() };
                        Element::Cyclic((w * a).rem_euclid(n as i64))
                    })
                    .collect();
                if is_bijective_homomorphism(g, &elems, &image)? {
                    maps.push(image);
                }
            }
        }
        GroupKind::TwoCyclic(m, n) => {
            // images of the generators (1,0) and (0,1)
            for &g1 in &elems {
                for &g2 in &elems {
                    let Element::TwoCyclic(a, c) = g1 else { unreachable!() };
                    let Element::TwoCyclic(b, d) = g2 else { unreachable!() };
                    let image: Vec<Element> = elems
                        .iter()
                        .map(|&x| {
                            let Element::TwoCyclic(i, j) = x else { unreachable!() };
                            Element::TwoCyclic(
                                (a * i + b * j).rem_euclid(m as i64),
                                (c * i + d * j).rem_euclid(n as i64),
                            )
                        })
                        .collect();
                    if is_bijective_homomorphism(g, &elems, &image)? {
                        maps.push(image);
                    }
                }
            }
        }
    }
    maps.sort();
    maps.dedup();
    Ok(maps)
}

fn is_bijective_homomorphism(
    g: &GroupHandle,
    elems: &[Element],
    image: &[Element],
) -> Result<bool> {
    let mut seen = vec![false; elems.len()];
    for y in image {
        let idx = g.canonical_index(y);
        if seen[idx] {
            return Ok(false);
        }
        seen[idx] = true;
    }
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            let xy = g.mul(x, y)?;
            let lhs = image[g.canonical_index(&xy)];
            let rhs = g.mul(image[i], image[j])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(k: i64) -> Element {
        Element::Dihedral { refl: false, k }
    }

    fn refl(k: i64) -> Element {
        Element::Dihedral { refl: true, k }
    }

    #[test]
    fn enumeration_counts() {
        let a3 = enumerate_dihedral_auts(3).unwrap();
        let params: Vec<(i64, i64)> = a3.iter().map(|a| (a.u, a.v)).collect();
        assert_eq!(params, vec![(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]);
        assert_eq!(enumerate_dihedral_auts(4).unwrap().len(), 8);
        assert_eq!(enumerate_dihedral_auts(6).unwrap().len(), 12);
        for l in 3..=20 {
            assert_eq!(enumerate_dihedral_auts(l).unwrap().len() as u64, l * euler_phi(l));
        }
    }

    #[test]
    fn apply_spec_examples() {
        let inv_map = DihedralAut::new(3, 2, 0).unwrap();
        assert_eq!(inv_map.apply(rot(1)).unwrap(), rot(2));
        let shift = DihedralAut::new(3, 1, 1).unwrap();
        assert_eq!(shift.apply(refl(0)).unwrap(), refl(1));
        let id = DihedralAut::identity(7).unwrap();
        for x in GroupHandle::dihedral(7).unwrap().elements() {
            assert_eq!(id.apply(x).unwrap(), x);
        }
    }

    #[test]
    fn compose_spec_examples() {
        let a = DihedralAut::new(3, 2, 0).unwrap();
        assert_eq!(a.compose(&a).unwrap(), DihedralAut::identity(3).unwrap());
        let s1 = DihedralAut::new(5, 1, 2).unwrap();
        let s2 = DihedralAut::new(5, 1, 4).unwrap();
        assert_eq!(s1.compose(&s2).unwrap(), DihedralAut::new(5, 1, 1).unwrap());
        let b = DihedralAut::new(5, 3, 2).unwrap();
        assert_eq!(b.compose(&DihedralAut::identity(5).unwrap()).unwrap(), b);
    }

    #[test]
    fn compose_matches_pointwise_application() {
        let g = GroupHandle::dihedral(6).unwrap();
        let auts = enumerate_dihedral_auts(6).unwrap();
        for a1 in &auts {
            for a2 in &auts {
                let c = a1.compose(a2).unwrap();
                assert_eq!(gcd(c.u, 6), 1);
                for x in g.elements() {
                    assert_eq!(c.apply(x).unwrap(), a1.apply(a2.apply(x).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn homomorphism_and_bijectivity() {
        for l in [3u64, 4, 5, 6, 8] {
            let g = GroupHandle::dihedral(l).unwrap();
            let elems = g.elements();
            for aut in enumerate_dihedral_auts(l).unwrap() {
                let mut image: Vec<Element> = Vec::new();
                for &x in &elems {
                    for &y in &elems {
                        let lhs = aut.apply(g.mul(x, y).unwrap()).unwrap();
                        let rhs = g.mul(aut.apply(x).unwrap(), aut.apply(y).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                    image.push(aut.apply(x).unwrap());
                }
                image.sort();
                image.dedup();
                assert_eq!(image.len(), elems.len());
            }
        }
    }

    #[test]
    fn brute_force_oracle_counts() {
        let d3 = GroupHandle::dihedral(3).unwrap();
        assert_eq!(brute_force_auts(&d3).unwrap().len(), 6);
        let z8 = GroupHandle::cyclic(8).unwrap();
        assert_eq!(brute_force_auts(&z8).unwrap().len(), 4);
        let v9 = GroupHandle::two_cyclic(3, 3).unwrap();
        assert_eq!(brute_force_auts(&v9).unwrap().len(), 48);
    }

    #[test]
    fn oracle_agrees_with_parametrization() {
        for l in 3..=12u64 {
            let g = GroupHandle::dihedral(l).unwrap();
            let elems = g.elements();
            let mut parametrized: Vec<Vec<Element>> = enumerate_dihedral_auts(l)
                .unwrap()
                .iter()
                .map(|a| elems.iter().map(|&x| a.apply(x).unwrap()).collect())
                .collect();
            parametrized.sort();
            assert_eq!(parametrized, brute_force_auts(&g).unwrap(), "l={l}");
        }
    }

    #[test]
    fn abelian_aut_counts() {
        let z3 = GroupHandle::cyclic(3).unwrap();
        let auts = enumerate_abelian_auts(&z3).unwrap();
        let ws: Vec<i64> = auts
            .iter()
            .map(|a| match a {
                Automorphism::CyclicUnit { w, .. } => *w,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(ws, vec![1, 2]);
        let z7 = GroupHandle::cyclic(7).unwrap();
        assert_eq!(enumerate_abelian_auts(&z7).unwrap().len(), 6);
        let v4 = GroupHandle::two_cyclic(2, 2).unwrap();
        let gl22 = enumerate_abelian_auts(&v4).unwrap();
        assert_eq!(gl22.len(), 6);
        assert_eq!(gl22.len(), brute_force_auts(&v4).unwrap().len());
        let v9 = GroupHandle::two_cyclic(3, 3).unwrap();
        assert_eq!(enumerate_abelian_auts(&v9).unwrap().len(), 48);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(DihedralAut::new(6, 2, 0).is_err()); // gcd(2, 6) != 1
        assert!(DihedralAut::new(6, 1, 6).is_err());
        assert!(DihedralAut::new(2, 1, 0).is_err());
    }
}
