//! Exact arithmetic for the supported finite groups: the dihedral group
//! D_l (l >= 3), the cyclic group Z_n, and products Z_m x Z_n.
//!
//! Dihedral elements are kept in the normal form r^k or r^k s with
//! 0 <= k < l. The canonical enumeration order is rotations by ascending
//! k, then reflections by ascending k; abelian groups enumerate residues
//! (or residue pairs, lexicographically) ascending.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Dihedral(u64),
    Cyclic(u64),
    TwoCyclic(u64, u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupHandle {
    kind: GroupKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// r^k when refl is false, r^k s when refl is true.
    Dihedral { refl: bool, k: i64 },
    Cyclic(i64),
    TwoCyclic(i64, i64),
}

impl GroupHandle {
    pub fn dihedral(l: u64) -> Result<Self> {
        if l < 3 {
            return Err(Error::UnsupportedGroup(format!(
                "dihedral groups need l >= 3, got l = {l}"
            )));
        }
        Ok(Self { kind: GroupKind::Dihedral(l) })
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedGroup("cyclic group needs n >= 1".into()));
        }
        Ok(Self { kind: GroupKind::Cyclic(n) })
    }

    pub fn two_cyclic(m: u64, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::UnsupportedGroup("product moduli must be >= 1".into()));
        }
        Ok(Self { kind: GroupKind::TwoCyclic(m, n) })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> u64 {
        match self.kind {
            GroupKind::Dihedral(l) => 2 * l,
            GroupKind::Cyclic(n) => n,
            GroupKind::TwoCyclic(m, n) => m * n,
        }
    }

    pub fn identity(&self) -> Element {
        match self.kind {
            GroupKind::Dihedral(_) => Element::Dihedral { refl: false, k: 0 },
            GroupKind::Cyclic(_) => Element::Cyclic(0),
            GroupKind::TwoCyclic(_, _) => Element::TwoCyclic(0, 0),
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        match (self.kind, x) {
            (GroupKind::Dihedral(l), Element::Dihedral { k, .. }) => (0..l as i64).contains(k),
            (GroupKind::Cyclic(n), Element::Cyclic(a)) => (0..n as i64).contains(a),
            (GroupKind::TwoCyclic(m, n), Element::TwoCyclic(a, b)) => {
                (0..m as i64).contains(a) && (0..n as i64).contains(b)
            }
            _ => false,
        }
    }

    fn check_member(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::GroupMismatch { group: self.to_string() })
        }
    }

    /// Product in normal form. Dihedral relations: r^i r^j = r^{i+j},
    /// (r^i s)(r^j) = r^{i-j} s, (r^i)(r^j s) = r^{i+j} s,
    /// (r^i s)(r^j s) = r^{i-j}, exponents mod l.
    pub fn mul(&self, x: Element, y: Element) -> Result<Element> {
        self.check_member(&x)?;
        self.check_member(&y)?;
        Ok(match (self.kind, x, y) {
            (GroupKind::Dihedral(l), Element::Dihedral { refl: rx, k: i }, Element::Dihedral { refl: ry, k: j }) => {
                let l = l as i64;
                let k = if rx { i - j } else { i + j }.rem_euclid(l);
                Element::Dihedral { refl: rx ^ ry, k }
            }
            (GroupKind::Cyclic(n), Element::Cyclic(a), Element::Cyclic(b)) => {
                Element::Cyclic((a + b).rem_euclid(n as i64))
            }
            (GroupKind::TwoCyclic(m, n), Element::TwoCyclic(a, b), Element::TwoCyclic(c, d)) => {
                Element::TwoCyclic((a + c).rem_euclid(m as i64), (b + d).rem_euclid(n as i64))
            }
            _ => unreachable!("membership already checked"),
        })
    }

    pub fn inv(&self, x: Element) -> Result<Element> {
        self.check_member(&x)?;
        Ok(match (self.kind, x) {
            (GroupKind::Dihedral(l), Element::Dihedral { refl, k }) => {
                if refl {
                    x // reflections are self-inverse
                } else {
                    Element::Dihedral { refl: false, k: (-k).rem_euclid(l as i64) }
                }
            }
            (GroupKind::Cyclic(n), Element::Cyclic(a)) => Element::Cyclic((-a).rem_euclid(n as i64)),
            (GroupKind::TwoCyclic(m, n), Element::TwoCyclic(a, b)) => {
                Element::TwoCyclic((-a).rem_euclid(m as i64), (-b).rem_euclid(n as i64))
            }
            _ => unreachable!("membership already checked"),
        })
    }

    /// Smallest t >= 1 with x^t = identity.
    pub fn element_order(&self, x: Element) -> Result<u64> {
        self.check_member(&x)?;
        let e = self.identity();
        let mut acc = x;
        let mut t = 1u64;
        while acc != e {
            acc = self.mul(acc, x)?;
            t += 1;
        }
        Ok(t)
    }

    /// All elements exactly once, in canonical order.
    pub fn elements(&self) -> Vec<Element> {
        match self.kind {
            GroupKind::Dihedral(l) => {
                let mut out = Vec::with_capacity(2 * l as usize);
                for refl in [false, true] {
                    for k in 0..l as i64 {
                        out.push(Element::Dihedral { refl, k });
                    }
                }
                out
            }
            GroupKind::Cyclic(n) => (0..n as i64).map(Element::Cyclic).collect(),
            GroupKind::TwoCyclic(m, n) => {
                let mut out = Vec::with_capacity((m * n) as usize);
                for a in 0..m as i64 {
                    for b in 0..n as i64 {
                        out.push(Element::TwoCyclic(a, b));
                    }
                }
                out
            }
        }
    }

    /// Position of an element in the canonical `elements()` order.
    pub fn canonical_index(&self, x: &Element) -> usize {
        match (self.kind, x) {
            (GroupKind::Dihedral(l), Element::Dihedral { refl, k }) => {
                (*refl as usize) * l as usize + *k as usize
            }
            (GroupKind::Cyclic(_), Element::Cyclic(a)) => *a as usize,
            (GroupKind::TwoCyclic(_, n), Element::TwoCyclic(a, b)) => {
                *a as usize * n as usize + *b as usize
            }
            _ => panic!("element does not belong to {self}"),
        }
    }

    /// Partition under x -> y x y^{-1}, classes ordered by their minimal
    /// element in canonical order. O(|G|^2); intended for small groups.
    pub fn conjugacy_classes(&self) -> Vec<Vec<Element>> {
        let elems = self.elements();
        let mut assigned = vec![false; elems.len()];
        let mut classes = Vec::new();
        for (i, &x) in elems.iter().enumerate() {
            if assigned[i] {
                continue;
            }
            let mut class: Vec<Element> = Vec::new();
            for &y in &elems {
                let c = self
                    .mul(self.mul(y, x).unwrap(), self.inv(y).unwrap())
                    .unwrap();
                let idx = self.canonical_index(&c);
                if !assigned[idx] {
                    assigned[idx] = true;
                    class.push(c);
                }
            }
            class.sort_by_key(|e| self.canonical_index(e));
            classes.push(class);
        }
        classes
    }

    pub fn element_to_string(&self, x: &Element) -> String {
        match x {
            Element::Dihedral { refl, k } => match (refl, k) {
                (false, 0) => "e".into(),
                (false, 1) => "r".into(),
                (false, k) => format!("r^{k}"),
                (true, 0) => "s".into(),
                (true, 1) => "rs".into(),
                (true, k) => format!("r^{k}s"),
            },
            Element::Cyclic(a) => a.to_string(),
            Element::TwoCyclic(a, b) => format!("({a},{b})"),
        }
    }
}

impl fmt::Display for GroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Dihedral(l) => write!(f, "D:{l}"),
            GroupKind::Cyclic(n) => write!(f, "Z:{n}"),
            GroupKind::TwoCyclic(m, n) => write!(f, "Z:{m}xZ:{n}"),
        }
    }
}

impl FromStr for GroupHandle {
    type Err = Error;

    /// Grammar: "D:<l>", "Z:<n>", "Z:<m>xZ:<n>".
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.into() };
        if let Some(l) = s.strip_prefix("D:") {
            let l: u64 = l.parse().map_err(|_| parse_err("expected D:<l> with integer l"))?;
            return GroupHandle::dihedral(l);
        }
        if let Some(rest) = s.strip_prefix("Z:") {
            if let Some((m, n)) = rest.split_once("xZ:") {
                let m: u64 = m.parse().map_err(|_| parse_err("bad first modulus"))?;
                let n: u64 = n.parse().map_err(|_| parse_err("bad second modulus"))?;
                return GroupHandle::two_cyclic(m, n);
            }
            let n: u64 = rest.parse().map_err(|_| parse_err("expected Z:<n> with integer n"))?;
            return GroupHandle::cyclic(n);
        }
        Err(parse_err("expected D:<l>, Z:<n>, or Z:<m>xZ:<n>"))
    }
}
