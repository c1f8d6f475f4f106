//! Command-line front end: case selection, execution, caching and
//! machine-readable reports.

use crate::chevgen::Representation;
use crate::engine::DEFAULT_BUDGET;
use crate::report::{Verdict, VerdictReport};
use crate::rings::{FiniteRing, IdealHandle};
use crate::rootsys::{roots_of, SystemKind};
use crate::theorems::{default_suite, run_case, CaseSpec, Claim, Ctx};
use crate::Error;
use clap::{Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, ValueEnum)]
pub enum Format {
    /// One JSON object per record (canonical)
    #[default]
    Json,
    /// Fixed-column tab-separated summary
    Tsv,
    /// Annotated text for reading offline
    Human,
}

#[derive(Parser)]
#[command(
    name = "chevlab",
    about = "Elementary Chevalley groups over finite rings: construction and exhaustive verification",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dump the structure-constant table as TSV
    Constants {
        /// Root system: A2, A3, C2 or G2
        #[arg(long)]
        phi: String,
    },
    /// Exhaustively validate the elementary relations for one representation
    Relations {
        #[arg(long)]
        phi: String,
        /// Ring spec: Z/n or Fp[t]/t2
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Dump the matrices of a generator family
    Gens {
        /// Family: E, Z, X or Y
        #[arg(long)]
        set: String,
        #[arg(long)]
        phi: String,
        #[arg(long)]
        ring: String,
        /// Principal generator of the ideal I
        #[arg(long = "ideal-i")]
        ideal_i: String,
        /// Principal generator of the ideal J (X and Y only)
        #[arg(long = "ideal-j")]
        ideal_j: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run verification cases
    Verify {
        /// Claim name (T1..T5, L2, L3, L5, L7, Cor1, Cor2, Strictness);
        /// with --suite this acts as a filter
        #[arg(long)]
        claim: Option<String>,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long = "ideal-i")]
        ideal_i: Option<String>,
        #[arg(long = "ideal-j")]
        ideal_j: Option<String>,
        /// Run a built-in case table ("default")
        #[arg(long)]
        suite: Option<String>,
        /// Include the deep cases in the suite
        #[arg(long)]
        deep: bool,
        /// Treat skipped cases as failures
        #[arg(long)]
        strict: bool,
        /// Enumeration budget, in group elements
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Worker threads for running cases in parallel
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Directory for cached subgroup enumerations
        /// (CHEVLAB_CACHE is used when the flag is absent)
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

/// Parses the process arguments and runs; returns the process exit code.
pub fn main_run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Constants { phi } => {
            let kind = SystemKind::parse(&phi)?;
            print!("{}", roots_of(kind).constants_tsv());
            Ok(0)
        }
        Cmd::Relations { phi, ring, format } => {
            let kind = SystemKind::parse(&phi)?;
            let ring = FiniteRing::parse(&ring)?;
            let rep = Representation::new(kind, ring);
            let rpt = rep.validate_relations();
            let fails = rpt.verdict == Verdict::Fails;
            emit_reports(&[rpt], format)?;
            Ok(if fails { 1 } else { 0 })
        }
        Cmd::Gens {
            set,
            phi,
            ring,
            ideal_i,
            ideal_j,
            format,
        } => {
            let kind = SystemKind::parse(&phi)?;
            let ring = FiniteRing::parse(&ring)?;
            let i = IdealHandle::parse(ring, &ideal_i)?;
            let rep = Representation::new(kind, ring);
            let gens = match set.as_str() {
                "E" => rep.generator_set_e(&i),
                "Z" => rep.generator_set_z(&i),
                "X" | "Y" => {
                    let j = ideal_j
                        .as_deref()
                        .ok_or_else(|| Error::Parse(format!("set {set} needs --ideal-j")))?;
                    let j = IdealHandle::parse(ring, j)?;
                    if set == "X" {
                        rep.generator_set_x(&i, &j)
                    } else {
                        rep.generator_set_y(&i, &j)
                    }
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unknown generator set {other:?} (use E, Z, X or Y)"
                    )))
                }
            };
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for g in &gens {
                match format {
                    Format::Json => {
                        let obj = serde_json::json!({ "labels": g.labels, "matrix": g.mat.rows() });
                        writeln!(out, "{obj}")?;
                    }
                    Format::Tsv | Format::Human => {
                        writeln!(out, "# {}", g.labels.join(" = "))?;
                        for row in g.mat.rows() {
                            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                            writeln!(out, "{}", cells.join("\t"))?;
                        }
                    }
                }
            }
            Ok(0)
        }
        Cmd::Verify {
            claim,
            phi,
            ring,
            ideal_i,
            ideal_j,
            suite,
            deep,
            strict,
            budget,
            jobs,
            format,
            cache_dir,
        } => {
            if budget < 1_000 {
                return Err(Error::Parse(format!(
                    "budget {budget} is below the minimum of 1000"
                )));
            }
            let cases = select_cases(claim, phi, ring, ideal_i, ideal_j, suite, deep)?;
            let cache_dir =
                cache_dir.or_else(|| std::env::var_os("CHEVLAB_CACHE").map(PathBuf::from));
            if let Some(dir) = &cache_dir {
                std::fs::create_dir_all(dir)?;
            }
            let mut ctx = Ctx::new(budget);
            if let Some(dir) = cache_dir {
                ctx = ctx.with_cache_dir(dir);
            }
            let reports = run_cases(&ctx, &cases, jobs)?;
            emit_reports(&reports, format)?;
            let failed = reports
                .iter()
                .any(|r| r.verdict == Verdict::Fails || (strict && r.verdict == Verdict::Skipped));
            Ok(if failed { 1 } else { 0 })
        }
    }
}

fn select_cases(
    claim: Option<String>,
    phi: Option<String>,
    ring: Option<String>,
    ideal_i: Option<String>,
    ideal_j: Option<String>,
    suite: Option<String>,
    deep: bool,
) -> Result<Vec<CaseSpec>, Error> {
    let claim = claim.map(|c| Claim::parse(&c)).transpose()?;
    let phi = phi.map(|p| SystemKind::parse(&p)).transpose()?;
    if let Some(name) = suite {
        if name != "default" {
            return Err(Error::Parse(format!("unknown suite {name:?}")));
        }
        let ring = ring.map(|r| FiniteRing::parse(&r)).transpose()?;
        let cases: Vec<CaseSpec> = default_suite(deep)
            .into_iter()
            .filter(|c| claim.is_none_or(|cl| c.claim == cl))
            .filter(|c| phi.is_none_or(|p| c.phi == p))
            .filter(|c| ring.is_none_or(|r| c.ring == r))
            .collect();
        if cases.is_empty() {
            return Err(Error::Parse("the filters match no suite case".into()));
        }
        return Ok(cases);
    }
    let claim = claim.ok_or_else(|| Error::Parse("--claim is required without --suite".into()))?;
    let phi = phi.ok_or_else(|| Error::Parse("--phi is required without --suite".into()))?;
    let ring = ring.ok_or_else(|| Error::Parse("--ring is required without --suite".into()))?;
    let ring = FiniteRing::parse(&ring)?;
    let mut case = CaseSpec::new(claim, phi, ring);
    let needs_i = claim != Claim::L7;
    let needs_j = !matches!(claim, Claim::T1 | Claim::L2 | Claim::L5 | Claim::L7);
    match (needs_i, ideal_i) {
        (true, Some(s)) => case = case.with_i(IdealHandle::parse(ring, &s)?),
        (true, None) => {
            return Err(Error::Parse(format!(
                "claim {} needs --ideal-i",
                claim.label()
            )))
        }
        (false, Some(_)) => {
            return Err(Error::Parse(format!(
                "claim {} takes no ideals",
                claim.label()
            )))
        }
        (false, None) => {}
    }
    match (needs_j, ideal_j) {
        (true, Some(s)) => case = case.with_j(IdealHandle::parse(ring, &s)?),
        (true, None) => {
            return Err(Error::Parse(format!(
                "claim {} needs --ideal-j",
                claim.label()
            )))
        }
        (false, Some(_)) => {
            return Err(Error::Parse(format!(
                "claim {} takes no --ideal-j",
                claim.label()
            )))
        }
        (false, None) => {}
    }
    Ok(vec![case])
}

/// Runs the cases, in parallel when asked to, and returns the reports in the
/// original case order.
fn run_cases(
    ctx: &Ctx,
    cases: &[CaseSpec],
    jobs: Option<usize>,
) -> Result<Vec<VerdictReport>, Error> {
    match jobs {
        Some(n) if n > 1 => {
            use rayon::prelude::*;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Parse(format!("cannot build thread pool: {e}")))?;
            Ok(pool.install(|| cases.par_iter().map(|c| run_case(ctx, c)).collect()))
        }
        _ => Ok(cases.iter().map(|c| run_case(ctx, c)).collect()),
    }
}

pub fn emit_reports(reports: &[VerdictReport], format: Format) -> Result<(), Error> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => {
            for r in reports {
                let line = serde_json::to_string(r)
                    .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?;
                writeln!(out, "{line}")?;
            }
        }
        Format::Tsv => {
            writeln!(
                out,
                "claim\tphi\tring\ti\tj\tverdict\tsize_M\tsize_EIJ\tmillis"
            )?;
            for r in reports {
                let verdict = match r.verdict {
                    Verdict::Holds => "holds",
                    Verdict::Fails => "fails",
                    Verdict::Skipped => "skipped",
                };
                let size = |k: &str| r.size(k).map_or("-".to_string(), |v| v.to_string());
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    r.claim,
                    r.phi,
                    r.ring,
                    r.ideal_i.as_deref().unwrap_or("-"),
                    r.ideal_j.as_deref().unwrap_or("-"),
                    verdict,
                    size("M"),
                    size("E(Phi,R,IJ)"),
                    r.millis
                )?;
            }
        }
        Format::Human => {
            for r in reports {
                writeln!(out, "{}", human_report(r))?;
            }
        }
    }
    Ok(())
}

fn human_report(r: &VerdictReport) -> String {
    let mut s = String::new();
    let verdict = match r.verdict {
        Verdict::Holds => "holds",
        Verdict::Fails => "FAILS",
        Verdict::Skipped => "skipped",
    };
    s.push_str(&format!("{} {} over {}", r.claim, r.phi, r.ring));
    if let Some(i) = &r.ideal_i {
        s.push_str(&format!(" I=({i})"));
    }
    if let Some(j) = &r.ideal_j {
        s.push_str(&format!(" J=({j})"));
    }
    s.push_str(&format!(": {verdict}  [{} ms]", r.millis));
    if let Some(reason) = &r.skip_reason {
        s.push_str(&format!("\n    reason: {reason}"));
    }
    if r.claim == "T4" && r.verdict == Verdict::Holds {
        // the inclusion chain, annotated with the enumerated sizes
        let show = |k: &str| {
            r.size(k)
                .map_or("not enumerated".to_string(), |v| format!("{v} elements"))
        };
        s.push_str(&format!(
            "\n    E(Phi,R,IJ)            {}",
            show("E(Phi,R,IJ)")
        ));
        s.push_str(&format!("\n      <=  [E(Phi,I),E(Phi,J)]    {}", show("D")));
        s.push_str(&format!(
            "\n      <=  [E(Phi,R,I),E(Phi,R,J)]  {}",
            show("M")
        ));
        match r.size("[G(I),G(J)]") {
            Some(v) => s.push_str(&format!("\n      <=  [G(I),G(J)]          {v} elements")),
            None => s.push_str("\n      <=  [G(I),G(J)]          skipped (ambient too large)"),
        }
        s.push_str("\n      <=  G(Phi,R,IJ)          via the level filter");
    } else {
        for (k, v) in &r.sizes {
            s.push_str(&format!("\n    |{k}| = {v}"));
        }
    }
    for note in &r.notes {
        s.push_str(&format!("\n    note: {note}"));
    }
    if let Some(w) = &r.witness {
        s.push_str(&format!("\n    witness ({}):", w.context));
        for row in &w.matrix {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            s.push_str(&format!("\n      [{}]", cells.join(" ")));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_case_selection() {
        let cases = select_cases(
            Some("T3".into()),
            Some("A2".into()),
            Some("Z/8".into()),
            Some("2".into()),
            Some("2".into()),
            None,
            false,
        )
        .unwrap();
        assert_eq!(cases.len(), 1);
        assert_eq!(cases[0].claim, Claim::T3);
    }

    #[test]
    fn missing_ideals_are_rejected() {
        let r = select_cases(
            Some("T3".into()),
            Some("A2".into()),
            Some("Z/8".into()),
            None,
            None,
            None,
            false,
        );
        assert!(r.is_err());
        let r = select_cases(
            Some("L7".into()),
            Some("A2".into()),
            Some("Z/8".into()),
            Some("2".into()),
            None,
            None,
            false,
        );
        assert!(r.is_err(), "L7 takes no ideals");
    }

    #[test]
    fn suite_filters_apply() {
        let all =
            select_cases(None, None, None, None, None, Some("default".into()), false).unwrap();
        let t1 = select_cases(
            Some("T1".into()),
            None,
            None,
            None,
            None,
            Some("default".into()),
            false,
        )
        .unwrap();
        assert!(!t1.is_empty() && t1.len() < all.len());
        assert!(t1.iter().all(|c| c.claim == Claim::T1));
        assert!(select_cases(None, None, None, None, None, Some("nope".into()), false).is_err());
    }

    #[test]
    fn human_format_draws_the_t4_chain() {
        let mut r = VerdictReport::new("T4", "A2", "Z/8");
        r.ideal_i = Some("2".into());
        r.ideal_j = Some("2".into());
        r.sizes.insert("E(Phi,R,IJ)".into(), 256);
        r.sizes.insert("D".into(), 256);
        r.sizes.insert("M".into(), 256);
        let text = human_report(&r);
        assert!(text.contains("E(Phi,R,IJ)"));
        assert!(text.contains("<="));
        assert!(text.contains("256 elements"));
    }
}
