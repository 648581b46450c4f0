//! Character tables for the supported groups, degree sums, and the
//! classical and twisted Frobenius-Schur indicators.
//!
//! Dihedral tables use the standard real character formulas: the
//! two-dimensional characters take 2 cos(2 pi j m / l) on rotations and 0
//! on reflections; the linear characters are the sign characters. Abelian
//! tables are products of roots of unity. Values are held as complex
//! doubles; every theoretically integral quantity is rounded and guarded
//! by a residual assertion.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::aut::Automorphism;
use crate::error::{Error, Result};
use crate::group::{Element, GroupHandle, GroupKind};

const INTEGRALITY_TOL: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: GroupHandle,
    classes: Vec<Vec<Element>>,
    /// canonical element index -> class index
    class_of: Vec<usize>,
    /// chars[irrep][class]
    chars: Vec<Vec<Complex64>>,
    degrees: Vec<u64>,
    labels: Vec<String>,
}

/// Twisted indicator result; `value` is present only when the
/// automorphism squares to the identity.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TwistedIndicator {
    pub raw: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
    pub integral: bool,
}

/// Sum of irreducible degrees, in closed form: l + 2 / l + 1 for
/// dihedral (even / odd l), |G| for abelian.
pub fn degree_sum(g: &GroupHandle) -> u64 {
    match g.kind() {
        GroupKind::Dihedral(l) => {
            if l % 2 == 0 {
                l + 2
            } else {
                l + 1
            }
        }
        GroupKind::Cyclic(_) | GroupKind::TwoCyclic(_, _) => g.order(),
    }
}

impl CharacterTable {
    pub fn build(g: &GroupHandle) -> Result<Self> {
        let classes = g.conjugacy_classes();
        let mut class_of = vec![0usize; g.order() as usize];
        for (ci, class) in classes.iter().enumerate() {
            for e in class {
                class_of[g.canonical_index(e)] = ci;
            }
        }
        let reps: Vec<Element> = classes.iter().map(|c| c[0]).collect();
        let (chars, labels): (Vec<Vec<Complex64>>, Vec<String>) = match g.kind() {
            GroupKind::Dihedral(l) => dihedral_irreps(l)
                .into_iter()
                .map(|(label, f)| (reps.iter().map(|&x| f(x)).collect(), label))
                .unzip(),
            GroupKind::Cyclic(n) => (0..n as i64)
                .map(|j| {
                    let row: Vec<Complex64> = reps
                        .iter()
                        .map(|&x| {
                            let Element::Cyclic(a) = x else { unreachable!() };
                            Complex64::from_polar(1.0, TAU * (j * a) as f64 / n as f64)
                        })
                        .collect();
                    (row, format!("chi{j}"))
                })
                .unzip(),
            GroupKind::TwoCyclic(m, n) => {
                let mut rows = Vec::new();
                for j1 in 0..m as i64 {
                    for j2 in 0..n as i64 {
                        let row: Vec<Complex64> = reps
                            .iter()
                            .map(|&x| {
                                let Element::TwoCyclic(a, b) = x else { unreachable!() };
                                Complex64::from_polar(
                                    1.0,
                                    TAU * ((j1 * a) as f64 / m as f64 + (j2 * b) as f64 / n as f64),
                                )
                            })
                            .collect();
                        rows.push((row, format!("chi{j1}_{j2}")));
                    }
                }
                rows.into_iter().unzip()
            }
        };
        let degrees: Vec<u64> = chars
            .iter()
            .map(|row| {
                let d = row[class_of[g.canonical_index(&g.identity())]].re;
                debug_assert!((d - d.round()).abs() < INTEGRALITY_TOL);
                d.round() as u64
            })
            .collect();
        Ok(CharacterTable { group: *g, classes, class_of, chars, degrees, labels })
    }

    pub fn group(&self) -> &GroupHandle {
        &self.group
    }

    pub fn classes(&self) -> &[Vec<Element>] {
        &self.classes
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_irreps(&self) -> usize {
        self.chars.len()
    }

    pub fn value(&self, irrep: usize, x: &Element) -> Complex64 {
        self.chars[irrep][self.class_of[self.group.canonical_index(x)]]
    }

    /// (1/|G|) sum over i != j of |<chi_i, chi_j>| plus deviation of
    /// <chi_i, chi_i> from 1; used by tests and the harness.
    pub fn orthogonality_defect(&self) -> f64 {
        let order = self.group.order() as f64;
        let mut worst: f64 = 0.0;
        for i in 0..self.chars.len() {
            for j in 0..self.chars.len() {
                let mut inner = Complex64::new(0.0, 0.0);
                for (ci, class) in self.classes.iter().enumerate() {
                    inner += self.chars[i][ci] * self.chars[j][ci].conj() * class.len() as f64;
                }
                inner /= order;
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((inner - target).norm());
            }
        }
        worst
    }

    fn rounded_indicator(&self, raw: Complex64, context: &str) -> Result<i64> {
        let rounded = raw.re.round();
        let residual = (raw - Complex64::new(rounded, 0.0)).norm();
        if residual > INTEGRALITY_TOL || !(-1.0..=1.0).contains(&rounded) {
            return Err(Error::NumericalIntegrity { context: context.to_string(), residual });
        }
        Ok(rounded as i64)
    }

    /// Classical Frobenius-Schur indicator (1/|G|) sum_g chi(g^2),
    /// rounded to an integer in {-1, 0, 1}.
    pub fn fs_indicator(&self, irrep: usize) -> Result<i64> {
        let mut sum = Complex64::new(0.0, 0.0);
        for x in self.group.elements() {
            let sq = self.group.mul(x, x)?;
            sum += self.value(irrep, &sq);
        }
        sum /= self.group.order() as f64;
        self.rounded_indicator(sum, &format!("fs_indicator({}, {})", self.group, irrep))
    }

    /// Twisted indicator (1/|G|) sum_g chi(g * sigma(g)). Integral with
    /// value in {-1, 0, 1} when sigma squares to the identity; otherwise
    /// only the raw sum is meaningful and `value` is absent.
    pub fn twisted_fs_indicator(
        &self,
        irrep: usize,
        sigma: &Automorphism,
    ) -> Result<TwistedIndicator> {
        let mut sum = Complex64::new(0.0, 0.0);
        for x in self.group.elements() {
            let y = self.group.mul(x, sigma.apply(x)?)?;
            sum += self.value(irrep, &y);
        }
        sum /= self.group.order() as f64;
        if sigma.squares_to_identity() {
            let value = self.rounded_indicator(
                sum,
                &format!("twisted_fs_indicator({}, {}, {})", self.group, irrep, sigma.describe()),
            )?;
            Ok(TwistedIndicator { raw: sum.re, value: Some(value), integral: true })
        } else {
            Ok(TwistedIndicator { raw: sum.re, value: None, integral: false })
        }
    }

    /// (sum of degrees of irreps with indicator 1, 1 + #{x : ord(x) = 2});
    /// the two numbers agree for every supported group.
    pub fn real_degree_sum_check(&self) -> Result<(u64, u64)> {
        let mut real_degree_sum = 0;
        for i in 0..self.num_irreps() {
            if self.fs_indicator(i)? == 1 {
                real_degree_sum += self.degrees[i];
            }
        }
        let e = self.group.identity();
        let involutions = self
            .group
            .elements()
            .into_iter()
            .filter(|&x| x != e && self.group.mul(x, x).unwrap() == e)
            .count() as u64;
        Ok((real_degree_sum, 1 + involutions))
    }
}

type CharFn = Box<dyn Fn(Element) -> Complex64>;

/// Irreducible characters of D_l as element-level functions.
fn dihedral_irreps(l: u64) -> Vec<(String, CharFn)> {
    let lf = l as f64;
    let mut out: Vec<(String, CharFn)> = Vec::new();
    let one = Complex64::new(1.0, 0.0);
    out.push((
        "triv".into(),
        Box::new(move |_| one),
    ));
    out.push((
        "sgn".into(),
        Box::new(move |x| {
            let Element::Dihedral { refl, .. } = x else { unreachable!() };
            Complex64::new(if refl { -1.0 } else { 1.0 }, 0.0)
        }),
    ));
    let two_dim_count = if l % 2 == 0 {
        // two further sign characters through the parity of the exponent
        out.push((
            "par".into(),
            Box::new(move |x| {
                let Element::Dihedral { k, .. } = x else { unreachable!() };
                Complex64::new(if k % 2 == 0 { 1.0 } else { -1.0 }, 0.0)
            }),
        ));
        out.push((
            "par_sgn".into(),
            Box::new(move |x| {
                let Element::Dihedral { refl, k } = x else { unreachable!() };
                let sign = if (k + refl as i64) % 2 == 0 { 1.0 } else { -1.0 };
                Complex64::new(sign, 0.0)
            }),
        ));
        l / 2 - 1
    } else {
        (l - 1) / 2
    };
    for j in 1..=two_dim_count {
        out.push((
            format!("rho{j}"),
            Box::new(move |x| {
                let Element::Dihedral { refl, k } = x else { unreachable!() };
                if refl {
                    Complex64::new(0.0, 0.0)
                } else {
                    Complex64::new(2.0 * (TAU * (j as i64 * k) as f64 / lf).cos(), 0.0)
                }
            }),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{enumerate_dihedral_auts, DihedralAut};
    use crate::involution::twisted_involution_count;

    fn table(name: &str) -> CharacterTable {
        CharacterTable::build(&name.parse().unwrap()).unwrap()
    }

    #[test]
    fn dihedral_degrees() {
        assert_eq!(table("D:3").degrees(), &[1, 1, 2]);
        assert_eq!(table("D:4").degrees(), &[1, 1, 1, 1, 2]);
        let mut d5 = table("D:5").degrees().to_vec();
        d5.sort();
        assert_eq!(d5, vec![1, 1, 2, 2]);
    }

    #[test]
    fn degree_sum_spec_examples() {
        assert_eq!(degree_sum(&"D:3".parse().unwrap()), 4);
        assert_eq!(degree_sum(&"D:6".parse().unwrap()), 8);
        assert_eq!(degree_sum(&"Z:3".parse().unwrap()), 3);
    }

    #[test]
    fn table_consistency_small() {
        for name in ["D:3", "D:4", "D:5", "D:6", "D:12", "D:13", "Z:5", "Z:8", "Z:3xZ:3"] {
            let g: GroupHandle = name.parse().unwrap();
            let t = table(name);
            assert_eq!(t.num_irreps(), t.classes().len(), "{name}");
            let sq_sum: u64 = t.degrees().iter().map(|d| d * d).sum();
            assert_eq!(sq_sum, g.order(), "{name}");
            assert_eq!(t.degrees().iter().sum::<u64>(), degree_sum(&g), "{name}");
            assert!(t.orthogonality_defect() < 1e-9, "{name}");
        }
    }

    #[test]
    fn classical_indicators() {
        let t = table("D:3");
        for i in 0..t.num_irreps() {
            assert_eq!(t.fs_indicator(i).unwrap(), 1);
        }
        // trivial character always has indicator 1
        assert_eq!(table("Z:8").fs_indicator(0).unwrap(), 1);
        // nontrivial Z_3 characters are complex-type
        let z3 = table("Z:3");
        assert_eq!(z3.fs_indicator(1).unwrap(), 0);
        assert_eq!(z3.fs_indicator(2).unwrap(), 0);
    }

    #[test]
    fn all_dihedral_irreps_are_real_type() {
        for l in 3..=20u64 {
            let t = CharacterTable::build(&GroupHandle::dihedral(l).unwrap()).unwrap();
            for i in 0..t.num_irreps() {
                assert_eq!(t.fs_indicator(i).unwrap(), 1, "l={l} irrep={i}");
            }
        }
    }

    #[test]
    fn real_degree_sums() {
        let (sum, inv) = table("D:3").real_degree_sum_check().unwrap();
        assert_eq!((sum, inv), (4, 4));
        let (sum, inv) = table("Z:3").real_degree_sum_check().unwrap();
        assert_eq!((sum, inv), (1, 1));
        let (sum, inv) = table("D:4").real_degree_sum_check().unwrap();
        assert_eq!((sum, inv), (6, 6));
    }

    #[test]
    fn twisted_reduces_to_classical_at_identity() {
        let t = table("D:5");
        let id = Automorphism::Dihedral(DihedralAut::identity(5).unwrap());
        for i in 0..t.num_irreps() {
            let tw = t.twisted_fs_indicator(i, &id).unwrap();
            assert_eq!(tw.value.unwrap(), t.fs_indicator(i).unwrap());
        }
    }

    #[test]
    fn twisted_sum_equals_involution_count() {
        // sum over irreps of eps_sigma(chi) * deg(chi) = m_sigma
        for l in 3..=10u64 {
            let g = GroupHandle::dihedral(l).unwrap();
            let t = CharacterTable::build(&g).unwrap();
            for aut in enumerate_dihedral_auts(l).unwrap() {
                let sigma = Automorphism::Dihedral(aut);
                let mut weighted = 0.0;
                for i in 0..t.num_irreps() {
                    let tw = t.twisted_fs_indicator(i, &sigma).unwrap();
                    if aut.squares_to_identity() {
                        assert!(tw.integral);
                        assert!(tw.value.unwrap().abs() <= 1);
                    }
                    weighted += tw.raw * t.degrees()[i] as f64;
                }
                let m = twisted_involution_count(&g, &sigma).unwrap() as f64;
                assert!(
                    (weighted - m).abs() < 1e-6,
                    "l={l} u={} v={} weighted={weighted} m={m}",
                    aut.u,
                    aut.v
                );
            }
        }
    }

    #[test]
    fn d5_shift_diagnostic_example() {
        // (1,1) on D_5 does not square to the identity; raw sums still
        // satisfy the degree-weighted identity with m_sigma = 1
        let g = GroupHandle::dihedral(5).unwrap();
        let t = CharacterTable::build(&g).unwrap();
        let aut = DihedralAut::new(5, 1, 1).unwrap();
        assert!(!aut.squares_to_identity());
        let sigma = Automorphism::Dihedral(aut);
        let mut weighted = 0.0;
        for i in 0..t.num_irreps() {
            let tw = t.twisted_fs_indicator(i, &sigma).unwrap();
            assert!(tw.value.is_none());
            weighted += tw.raw * t.degrees()[i] as f64;
        }
        assert!((weighted - 1.0).abs() < 1e-6);
        assert_eq!(twisted_involution_count(&g, &sigma).unwrap(), 1);
    }

    #[test]
    fn d3_twisted_by_inversion() {
        let t = table("D:3");
        let sigma = Automorphism::Dihedral(DihedralAut::new(3, 2, 0).unwrap());
        let mut weighted = 0i64;
        for i in 0..t.num_irreps() {
            let tw = t.twisted_fs_indicator(i, &sigma).unwrap();
            weighted += tw.value.unwrap() * t.degrees()[i] as i64;
        }
        assert_eq!(weighted, 4); // m_{sigma_3} from the D_3 automorphism table
    }
}
