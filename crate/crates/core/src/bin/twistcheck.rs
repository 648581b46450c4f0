//! Thin command-line front end over the twistcheck library.
//!
//! Exit codes: 0 on success with zero violations, 1 when a campaign
//! records violations, 2 on usage errors.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use twistcheck::harness::{indicator_rows, table1_rows, DEFAULT_BRUTE_CAP, INDICATOR_MAX_L};
use twistcheck::{
    enumerate_dihedral_auts, solve_linear_congruence, CampaignConfig, CampaignReport, DihedralAut,
    GroupHandle, GroupKind, InvolutionRecord,
};

#[derive(Parser)]
#[command(name = "twistcheck", version, about = "Verify twisted-involution counts against character degree sums in dihedral and small abelian groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format (default: human-readable text)
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report to a file instead of stdout
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification campaign over a family of groups
    Verify {
        #[command(subcommand)]
        family: VerifyFamily,
    },
    /// Reproduce the D_3 automorphism/involution table
    Table1 {
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Count twisted involutions for one group and automorphism
    Count {
        /// Group literal: D:<l>, Z:<n>, or Z:<m>xZ:<n>
        #[arg(long)]
        group: String,
        /// Dihedral automorphism literal "u,v" (r -> r^u, s -> r^v s)
        #[arg(long)]
        aut: String,
        /// Also run the brute-force count alongside the closed form
        #[arg(long)]
        brute_force: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Frobenius-Schur indicators, classical and twisted
    Indicators {
        #[arg(long)]
        group: String,
        /// Restrict the twisted sweep to a single automorphism "u,v"
        #[arg(long)]
        aut: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Solve a*k = c (mod n), reporting the incongruent solutions
    Congruence {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        c: i64,
        #[arg(long)]
        n: i64,
    },
    /// Enumerate the automorphisms of a dihedral group
    AutList {
        #[arg(long)]
        group: String,
    },
}

#[derive(Subcommand)]
enum VerifyFamily {
    /// T(D_l) >= m_sigma over all automorphisms for l in 3..=max-l
    Dihedral {
        #[arg(long, default_value_t = 60)]
        max_l: u64,
        /// Cap on the brute-force cross-check
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        brute_cap: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Groups of order p, p^2, 2p for each listed prime
    Orders {
        /// Comma-separated primes, e.g. 2,3,5,7
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Classical and twisted indicator identities for l in 3..=max-l
    Indicators {
        #[arg(long, default_value_t = INDICATOR_MAX_L)]
        max_l: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn parse_aut_literal(s: &str, l: u64) -> Result<DihedralAut, String> {
    let (u, v) = s
        .split_once(',')
        .ok_or_else(|| format!("bad automorphism literal `{s}`: expected \"u,v\""))?;
    let u: i64 = u.trim().parse().map_err(|_| format!("bad u in `{s}`"))?;
    let v: i64 = v.trim().parse().map_err(|_| format!("bad v in `{s}`"))?;
    DihedralAut::new(l, u, v).map_err(|e| e.to_string())
}

fn dihedral_l(group: &str) -> Result<u64, String> {
    let g: GroupHandle = group.parse().map_err(|e| format!("{e}"))?;
    match g.kind() {
        GroupKind::Dihedral(l) => Ok(l),
        _ => Err(format!("`{group}` is not a dihedral group")),
    }
}

fn emit(out: &OutputOpts, text: String) -> std::io::Result<()> {
    match &out.output {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_report(report: &CampaignReport, out: &OutputOpts) -> std::io::Result<ExitCode> {
    let body = match out.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Text => report.text_summary(),
    };
    emit(out, body)?;
    if out.output.is_some() || out.format != Format::Text {
        eprint!("{}", report.text_summary());
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn configure_jobs(jobs: Option<usize>) {
    if let Some(n) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { family } => {
            let (report, out) = match family {
                VerifyFamily::Dihedral { max_l, brute_cap, jobs, out } => {
                    configure_jobs(jobs);
                    let mut cfg = CampaignConfig::dihedral(max_l);
                    cfg.brute_cap = Some(brute_cap);
                    (twistcheck::run_dihedral_campaign(&cfg), out)
                }
                VerifyFamily::Orders { primes, jobs, out } => {
                    configure_jobs(jobs);
                    (twistcheck::run_order_class_campaign(&CampaignConfig::orders(primes)), out)
                }
                VerifyFamily::Indicators { max_l, jobs, out } => {
                    configure_jobs(jobs);
                    (twistcheck::run_indicator_campaign(&CampaignConfig::indicators(max_l)), out)
                }
            };
            let report = report.map_err(|e| e.to_string())?;
            emit_report(&report, &out).map_err(|e| e.to_string())
        }
        Command::Table1 { out } => {
            let report = twistcheck::run_table1(&CampaignConfig::table1()).map_err(|e| e.to_string())?;
            if out.format == Format::Text && out.output.is_none() {
                let mut text = String::from("sigma  phi(r)  phi(s)  S_sigma, m_sigma\n");
                text.push_str("(convention: (u,v) maps r -> r^u, s -> r^v s)\n");
                for row in table1_rows().map_err(|e| e.to_string())? {
                    text.push_str(&format!(
                        "{:<5}  {:<6}  {:<6}  {{{}}}, {}\n",
                        row.label,
                        row.image_of_r,
                        row.image_of_s,
                        row.set.join(", "),
                        row.m
                    ));
                }
                print!("{text}");
                return Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
            }
            emit_report(&report, &out).map_err(|e| e.to_string())
        }
        Command::Count { group, aut, brute_force, out } => {
            let g: GroupHandle = group.parse().map_err(|e| format!("{e}"))?;
            let rec = match g.kind() {
                GroupKind::Dihedral(l) => {
                    let a = parse_aut_literal(&aut, l)?;
                    InvolutionRecord::dihedral(l, a.u, a.v, brute_force)
                }
                _ => Err(twistcheck::Error::UnsupportedGroup(format!(
                    "`count` takes a dihedral group, got {group}"
                ))),
            }
            .map_err(|e| e.to_string())?;
            let body = match out.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&rec).unwrap()),
                Format::Csv => {
                    let opt = |o: Option<u64>| o.map(|x| x.to_string()).unwrap_or_default();
                    format!(
                        "group,u,v,m_closed,m_brute,rot,refl,T,ineq_holds,equality\n{},{},{},{},{},{},{},{},{},{}\n",
                        rec.group,
                        rec.u.unwrap(),
                        rec.v.unwrap(),
                        opt(rec.m_closed),
                        opt(rec.m_brute),
                        opt(rec.rot),
                        opt(rec.refl),
                        rec.t,
                        rec.ineq_holds,
                        rec.equality,
                    )
                }
                Format::Text => {
                    let brute = rec
                        .m_brute
                        .map(|m| format!(", brute-force m = {m}"))
                        .unwrap_or_default();
                    format!(
                        "{} aut ({},{}): m = {} (rotations {}, reflections {}){brute}; T = {}, inequality {}, equality {}\n",
                        rec.group,
                        rec.u.unwrap(),
                        rec.v.unwrap(),
                        rec.m(),
                        rec.rot.unwrap(),
                        rec.refl.unwrap(),
                        rec.t,
                        if rec.ineq_holds { "holds" } else { "VIOLATED" },
                        rec.equality,
                    )
                }
            };
            emit(&out, body).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Indicators { group, aut, out } => {
            let l = dihedral_l(&group)?;
            let auts = match aut {
                Some(s) => vec![parse_aut_literal(&s, l)?],
                None => enumerate_dihedral_auts(l).map_err(|e| e.to_string())?,
            };
            let g: GroupHandle = group.parse().map_err(|e| format!("{e}"))?;
            let rows = indicator_rows(&g, &auts).map_err(|e| e.to_string())?;
            let body = match out.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows).unwrap()),
                _ => {
                    let mut text = format!("{group}: irrep  degree  epsilon  twisted\n");
                    for row in &rows {
                        let twisted: Vec<String> = row
                            .twisted
                            .iter()
                            .map(|t| {
                                if t.integral {
                                    format!("({},{}): {}", t.u, t.v, t.value as i64)
                                } else {
                                    format!("({},{}): {:.4} (diagnostic)", t.u, t.v, t.value)
                                }
                            })
                            .collect();
                        text.push_str(&format!(
                            "{:<6} {:<7} {:<8} {}\n",
                            row.irrep,
                            row.degree,
                            row.epsilon,
                            twisted.join("  ")
                        ));
                    }
                    text
                }
            };
            emit(&out, body).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Congruence { a, c, n } => {
            if n < 1 {
                return Err(format!("modulus n must be positive, got {n}"));
            }
            let sol = solve_linear_congruence(a, c, n);
            println!("{}", serde_json::to_string_pretty(&sol).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::AutList { group } => {
            let l = dihedral_l(&group)?;
            let auts = enumerate_dihedral_auts(l).map_err(|e| e.to_string())?;
            println!(
                "{} automorphisms of {group}; (u,v) maps r -> r^u, s -> r^v s",
                auts.len()
            );
            for a in auts {
                println!("{{\"u\": {}, \"v\": {}}}", a.u, a.v);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
