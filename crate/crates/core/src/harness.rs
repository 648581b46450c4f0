//! Batch verification campaigns: sweep families of groups and
//! automorphisms, check every counting identity and inequality, and
//! collect violations into a deterministic report.
//!
//! Violations are collected rather than thrown so a single pass reports
//! every counterexample. Records are sorted by (l, u, v) (or by p and
//! group kind), so repeated runs with the same config produce
//! byte-identical JSON and CSV files.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::aut::{enumerate_auts, enumerate_dihedral_auts, Automorphism, DihedralAut};
use crate::character::{degree_sum, CharacterTable};
use crate::error::{Error, Result};
use crate::group::GroupHandle;
use crate::involution::{
    identity_involution_count, twisted_involution_count, twisted_involution_set, InvolutionRecord,
};
use crate::numtheory::is_prime;

/// Default cap on the brute-force cross-check inside dihedral sweeps.
pub const DEFAULT_BRUTE_CAP: u64 = 60;
/// Twisted indicator sweeps are cubic in practice; keep l small.
pub const INDICATOR_MAX_L: u64 = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Dihedral,
    Orders,
    Table1,
    Indicators,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignConfig {
    pub family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_l: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute_cap: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub primes: Vec<u64>,
}

impl CampaignConfig {
    pub fn dihedral(max_l: u64) -> Self {
        CampaignConfig {
            family: Family::Dihedral,
            max_l: Some(max_l),
            brute_cap: Some(DEFAULT_BRUTE_CAP),
            primes: Vec::new(),
        }
    }

    pub fn orders(primes: Vec<u64>) -> Self {
        CampaignConfig { family: Family::Orders, max_l: None, brute_cap: None, primes }
    }

    pub fn table1() -> Self {
        CampaignConfig { family: Family::Table1, max_l: None, brute_cap: None, primes: Vec::new() }
    }

    pub fn indicators(max_l: u64) -> Self {
        CampaignConfig {
            family: Family::Indicators,
            max_l: Some(max_l),
            brute_cap: None,
            primes: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub cases: u64,
    pub violations: u64,
    pub equality_cases: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub records: Vec<InvolutionRecord>,
    pub violations: Vec<String>,
    pub summary: Summary,
    pub version: String,
    /// Wall time is printed in the text summary only; it is excluded from
    /// serialized reports so identical configs give identical files.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CampaignReport {
    fn assemble(
        config: CampaignConfig,
        records: Vec<InvolutionRecord>,
        violations: Vec<String>,
        started: Instant,
    ) -> Self {
        let equality_cases = records.iter().filter(|r| r.equality).count() as u64;
        let summary = Summary {
            cases: records.len() as u64,
            violations: violations.len() as u64,
            equality_cases,
        };
        CampaignReport {
            config,
            records,
            violations,
            summary,
            version: env!("CARGO_PKG_VERSION").to_string(),
            wall_time: started.elapsed(),
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.violations == 0
    }

    pub fn write_json<W: std::io::Write>(&self, mut w: W) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut w, self)?;
        writeln!(w)
    }

    pub fn write_csv<W: std::io::Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "group,u,v,m_closed,m_brute,rot,refl,T,ineq_holds,equality")?;
        let opt = |o: Option<u64>| o.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.records {
            let u = r.u.map(|x| x.to_string()).unwrap_or_default();
            let v = r.v.map(|x| x.to_string()).unwrap_or_default();
            writeln!(
                w,
                "{},{},{},{},{},{},{},{},{},{}",
                r.group,
                u,
                v,
                opt(r.m_closed),
                opt(r.m_brute),
                opt(r.rot),
                opt(r.refl),
                r.t,
                r.ineq_holds,
                r.equality
            )?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut buf = Vec::new();
        self.write_json(&mut buf).expect("report serialization");
        String::from_utf8(buf).expect("json is utf-8")
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("report serialization");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn text_summary(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{:?} campaign: {} cases, {} violations, {} equality cases ({:.2?})",
            self.config.family,
            self.summary.cases,
            self.summary.violations,
            self.summary.equality_cases,
            self.wall_time
        )
        .unwrap();
        for v in &self.violations {
            writeln!(out, "VIOLATION: {v}").unwrap();
        }
        out
    }
}

/// Sweep D_l for l in 3..=max_l over all l * phi(l) automorphisms.
/// Checks m_sigma <= T(D_l), m_e = T(D_l), max_sigma m_sigma = m_e, and
/// (below the brute cap) closed form against the brute-force set size.
pub fn run_dihedral_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let started = Instant::now();
    let max_l = cfg.max_l.unwrap_or(60);
    if max_l < 3 {
        return Err(Error::UnsupportedGroup(format!("max_l = {max_l} < 3")));
    }
    let brute_cap = cfg.brute_cap.unwrap_or(DEFAULT_BRUTE_CAP);
    let per_l: Vec<(Vec<InvolutionRecord>, Vec<String>)> = (3..=max_l)
        .into_par_iter()
        .map(|l| dihedral_cases(l, brute_cap))
        .collect::<Result<_>>()?;
    let mut records = Vec::new();
    let mut violations = Vec::new();
    for (r, v) in per_l {
        records.extend(r);
        violations.extend(v);
    }
    Ok(CampaignReport::assemble(cfg.clone(), records, violations, started))
}

fn dihedral_cases(l: u64, brute_cap: u64) -> Result<(Vec<InvolutionRecord>, Vec<String>)> {
    let mut records = Vec::new();
    let mut violations = Vec::new();
    let t = degree_sum(&GroupHandle::dihedral(l)?);
    let m_e = identity_involution_count(l);
    if m_e != t {
        violations.push(format!("D:{l}: m_e = {m_e} differs from T = {t}"));
    }
    let mut max_m = 0;
    for aut in enumerate_dihedral_auts(l)? {
        let rec = InvolutionRecord::dihedral(l, aut.u, aut.v, l <= brute_cap)?;
        let m = rec.m_closed.unwrap();
        max_m = max_m.max(m);
        if let Some(mb) = rec.m_brute {
            if mb != m {
                violations.push(format!(
                    "D:{l} ({},{}): brute count {mb} differs from closed form {m}",
                    aut.u, aut.v
                ));
            }
        }
        if !rec.ineq_holds {
            violations.push(format!("D:{l} ({},{}): m = {m} exceeds T = {t}", aut.u, aut.v));
        }
        records.push(rec);
    }
    if max_m != m_e {
        violations.push(format!("D:{l}: max m over Aut is {max_m}, expected m_e = {m_e}"));
    }
    Ok((records, violations))
}

/// Verify T(G) >= m_alpha over all automorphisms of every group of order
/// p, p^2, and 2p for each configured prime: Z_p, Z_{p^2}, Z_p x Z_p,
/// Z_{2p}, and D_p (for p >= 3; D_2 is outside the dihedral contract).
pub fn run_order_class_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let started = Instant::now();
    if cfg.primes.is_empty() {
        return Err(Error::UnsupportedGroup("no primes configured".into()));
    }
    for &p in &cfg.primes {
        if !is_prime(p) {
            return Err(Error::Parse {
                input: p.to_string(),
                reason: "not a prime (trial division)".into(),
            });
        }
    }
    let per_p: Vec<(Vec<InvolutionRecord>, Vec<String>)> = cfg
        .primes
        .par_iter()
        .map(|&p| order_class_cases(p))
        .collect::<Result<_>>()?;
    let mut records = Vec::new();
    let mut violations = Vec::new();
    for (r, v) in per_p {
        records.extend(r);
        violations.extend(v);
    }
    Ok(CampaignReport::assemble(cfg.clone(), records, violations, started))
}

fn order_class_cases(p: u64) -> Result<(Vec<InvolutionRecord>, Vec<String>)> {
    let mut records = Vec::new();
    let mut violations = Vec::new();
    let mut groups = vec![
        GroupHandle::cyclic(p)?,
        GroupHandle::cyclic(p * p)?,
        GroupHandle::two_cyclic(p, p)?,
        GroupHandle::cyclic(2 * p)?,
    ];
    if p >= 3 {
        groups.push(GroupHandle::dihedral(p)?);
    }
    for g in groups {
        let t = degree_sum(&g);
        let abelian = !matches!(g.kind(), crate::group::GroupKind::Dihedral(_));
        if abelian && t != g.order() {
            violations.push(format!("{g}: abelian degree sum {t} differs from |G| = {}", g.order()));
        }
        for sigma in enumerate_auts(&g)? {
            let rec = InvolutionRecord::brute_force(&g, &sigma)?;
            if !rec.ineq_holds {
                violations.push(format!(
                    "{g} aut {}: m = {} exceeds T = {t}",
                    sigma.describe(),
                    rec.m()
                ));
            }
            records.push(rec);
        }
    }
    Ok((records, violations))
}

/// One row of the D_3 automorphism table.
#[derive(Debug, Clone, Serialize)]
pub struct Table1Row {
    pub label: String,
    pub u: i64,
    pub v: i64,
    pub image_of_r: String,
    pub image_of_s: String,
    pub set: Vec<String>,
    pub m: u64,
}

/// The six automorphisms of D_3 in classical table order: the three
/// rotation-fixing maps first, then the three with r -> r^2.
pub fn table1_rows() -> Result<Vec<Table1Row>> {
    let g = GroupHandle::dihedral(3)?;
    let r = crate::group::Element::Dihedral { refl: false, k: 1 };
    let s = crate::group::Element::Dihedral { refl: true, k: 0 };
    let params = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 2), (2, 1)];
    let labels = ["e", "s1", "s2", "s3", "s4", "s5"];
    let mut rows = Vec::new();
    for (label, (u, v)) in labels.iter().zip(params) {
        let aut = DihedralAut::new(3, u, v)?;
        let sigma = Automorphism::Dihedral(aut);
        let set = twisted_involution_set(&g, &sigma)?;
        rows.push(Table1Row {
            label: label.to_string(),
            u,
            v,
            image_of_r: g.element_to_string(&aut.apply(r)?),
            image_of_s: g.element_to_string(&aut.apply(s)?),
            set: set.iter().map(|x| g.element_to_string(x)).collect(),
            m: set.len() as u64,
        });
    }
    Ok(rows)
}

/// Reproduce the D_3 automorphism table: m values must be (4,1,1,4,4,4)
/// and each set must agree with the brute-force involution oracle.
pub fn run_table1(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let started = Instant::now();
    let expected_m = [4u64, 1, 1, 4, 4, 4];
    let mut records = Vec::new();
    let mut violations = Vec::new();
    for (row, &want) in table1_rows()?.iter().zip(&expected_m) {
        let rec = InvolutionRecord::dihedral(3, row.u, row.v, true)?;
        if row.m != want {
            violations.push(format!("table1 row {}: m = {}, table says {want}", row.label, row.m));
        }
        if rec.m_brute != Some(row.m) || rec.m_closed != Some(row.m) {
            violations.push(format!("table1 row {}: count paths disagree", row.label));
        }
        records.push(rec);
    }
    Ok(CampaignReport::assemble(cfg.clone(), records, violations, started))
}

/// Indicator sweeps: classical indicators of every D_l irreducible are 1,
/// the real-degree-sum identity holds, and for every involutory sigma the
/// degree-weighted twisted indicators sum to m_sigma.
pub fn run_indicator_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    let started = Instant::now();
    let max_l = cfg.max_l.unwrap_or(INDICATOR_MAX_L);
    if max_l < 3 {
        return Err(Error::UnsupportedGroup(format!("max_l = {max_l} < 3")));
    }
    let per_l: Vec<(Vec<InvolutionRecord>, Vec<String>)> = (3..=max_l)
        .into_par_iter()
        .map(indicator_cases)
        .collect::<Result<_>>()?;
    let mut records = Vec::new();
    let mut violations = Vec::new();
    for (r, v) in per_l {
        records.extend(r);
        violations.extend(v);
    }
    Ok(CampaignReport::assemble(cfg.clone(), records, violations, started))
}

fn indicator_cases(l: u64) -> Result<(Vec<InvolutionRecord>, Vec<String>)> {
    let mut records = Vec::new();
    let mut violations = Vec::new();
    let g = GroupHandle::dihedral(l)?;
    let table = CharacterTable::build(&g)?;
    for i in 0..table.num_irreps() {
        match table.fs_indicator(i) {
            Ok(1) => {}
            Ok(eps) => violations.push(format!("D:{l} irrep {i}: classical indicator {eps} != 1")),
            Err(e) => violations.push(format!("D:{l} irrep {i}: {e}")),
        }
    }
    match table.real_degree_sum_check() {
        Ok((sum, inv)) if sum == inv => {}
        Ok((sum, inv)) => violations.push(format!(
            "D:{l}: real degree sum {sum} differs from involution count {inv}"
        )),
        Err(e) => violations.push(format!("D:{l}: {e}")),
    }
    for aut in enumerate_dihedral_auts(l)? {
        if !aut.squares_to_identity() {
            continue;
        }
        let sigma = Automorphism::Dihedral(aut);
        let mut weighted = 0i64;
        let mut ok = true;
        for i in 0..table.num_irreps() {
            match table.twisted_fs_indicator(i, &sigma) {
                Ok(tw) => weighted += tw.value.expect("involutory sigma") * table.degrees()[i] as i64,
                Err(e) => {
                    violations.push(format!("D:{l} ({},{}) irrep {i}: {e}", aut.u, aut.v));
                    ok = false;
                }
            }
        }
        let m = twisted_involution_count(&g, &sigma)?;
        if ok && weighted != m as i64 {
            violations.push(format!(
                "D:{l} ({},{}): weighted twisted indicator sum {weighted} differs from m = {m}",
                aut.u, aut.v
            ));
        }
        records.push(InvolutionRecord::dihedral(l, aut.u, aut.v, true)?);
    }
    Ok((records, violations))
}

/// Dispatch on the configured family.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    match cfg.family {
        Family::Dihedral => run_dihedral_campaign(cfg),
        Family::Orders => run_order_class_campaign(cfg),
        Family::Table1 => run_table1(cfg),
        Family::Indicators => run_indicator_campaign(cfg),
    }
}

/// Per-irrep indicator rows for the one-shot `indicators` query.
#[derive(Debug, Clone, Serialize)]
pub struct IndicatorRow {
    pub irrep: String,
    pub degree: u64,
    pub epsilon: i64,
    pub twisted: Vec<TwistedEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TwistedEntry {
    pub u: i64,
    pub v: i64,
    pub value: f64,
    pub integral: bool,
}

pub fn indicator_rows(g: &GroupHandle, auts: &[DihedralAut]) -> Result<Vec<IndicatorRow>> {
    let table = CharacterTable::build(g)?;
    let mut rows = Vec::new();
    for i in 0..table.num_irreps() {
        let mut twisted = Vec::new();
        for aut in auts {
            let tw = table.twisted_fs_indicator(i, &Automorphism::Dihedral(*aut))?;
            twisted.push(TwistedEntry {
                u: aut.u,
                v: aut.v,
                value: tw.value.map(|v| v as f64).unwrap_or(tw.raw),
                integral: tw.integral,
            });
        }
        rows.push(IndicatorRow {
            irrep: table.labels()[i].clone(),
            degree: table.degrees()[i],
            epsilon: table.fs_indicator(i)?,
            twisted,
        });
    }
    Ok(rows)
}
