//! The `cubicsurf` command line.
//!
//! [`run`] parses an argument vector, writes data to `out` and diagnostics to
//! `err`, and returns the process exit code: 0 on success, 1 on usage or
//! input errors, 2 when a verification fails.

mod output;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use cubicsurf::cones::{nef_cone, subcone, SubconeSelector};
use cubicsurf::constants::{
    alpha, alpha_rational_curve, seshadri, seshadri_oracle, BranchDatum, ConstantResult, ExtendedRational, ResidueCode,
    TangentType,
};
use cubicsurf::heights::{estimate_sequence, format_gamma, generate, Schedule, SequenceKind, SequenceSpec};
use cubicsurf::picard::{line_names, pencil_names, standard_class, ClassName, DivisorClass};
use cubicsurf::tables::{verify_all, verify_reasons, verify_table, VerificationReport};

pub use output::Format;
use output::{Align, Grid, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cubicsurf", version, about = "Seshadri and approximation constants on a smooth cubic surface")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The 27 lines.
    Lines,
    /// The 27 conic pencils.
    Pencils,
    /// Extreme rays of the nef cone.
    Nefcone,
    /// Extreme rays of Γ(C) or Γ(h).
    Subcone(SubconeArgs),
    /// Seshadri constant at a point off the 27 lines.
    #[command(allow_negative_numbers = true)]
    Seshadri {
        /// Coefficients of L, E1, .., E6.
        #[arg(num_args = 7, value_name = "COEFF", required = true)]
        class: Vec<BigInt>,
        /// Also evaluate the brute-force blow-up oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Approximation constant at a point off the 27 lines.
    #[command(allow_negative_numbers = true)]
    Alpha {
        #[arg(num_args = 7, value_name = "COEFF", required = true)]
        class: Vec<BigInt>,
        #[arg(long, value_enum)]
        tangent: Tangent,
    },
    /// α at a point of a rational curve from its branch data.
    CurveAlpha {
        #[arg(long)]
        degree: u64,
        /// Branch multiplicity and residue code as `m,r`.
        #[arg(long = "branch", value_parser = parse_branch, required = true)]
        branches: Vec<BranchDatum>,
    },
    /// Check the embedded tables against the computation.
    Verify {
        #[arg(value_enum)]
        what: VerifyTarget,
    },
    /// Empirical approximation constant along a test sequence.
    EstimateAlpha {
        /// `line:p/q`, `nodal:+1`, `nodal:-1`, `cusp` or `quadric:a,b`.
        #[arg(long, value_parser = parse_kind)]
        kind: SequenceKind,
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value_t = ScheduleArg::Linear)]
        schedule: ScheduleArg,
        /// Write per-point diagnostics to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SubconeArgs {
    /// A pencil name such as L1, L23 or B4.
    #[arg(long, value_parser = parse_pencil)]
    pencil: Option<ClassName>,
    #[arg(long)]
    hyperplane: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Tangent {
    Cusp,
    NodeLocal,
    NodeRational,
}

impl From<Tangent> for TangentType {
    fn from(t: Tangent) -> Self {
        match t {
            Tangent::Cusp => TangentType::Cuspidal,
            Tangent::NodeLocal => TangentType::NodalSlopesInKvNotK,
            Tangent::NodeRational => TangentType::NodalSlopesInKOrNotInKv,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyTarget {
    Tables,
    Reasons,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScheduleArg {
    Linear,
    Geometric,
}

impl From<ScheduleArg> for Schedule {
    fn from(s: ScheduleArg) -> Self {
        match s {
            ScheduleArg::Linear => Schedule::Linear,
            ScheduleArg::Geometric => Schedule::Geometric,
        }
    }
}

fn parse_branch(s: &str) -> Result<BranchDatum, String> {
    let (m, r) = s.split_once(',').ok_or_else(|| format!("expected m,r but got {s:?}"))?;
    let m: u32 = m.trim().parse().map_err(|e| format!("bad multiplicity {m:?}: {e}"))?;
    let r: u8 = r.trim().parse().map_err(|e| format!("bad residue code {r:?}: {e}"))?;
    let r = ResidueCode::try_from(r).map_err(|e| e.to_string())?;
    BranchDatum::new(m, r).map_err(|e| e.to_string())
}

fn parse_pencil(s: &str) -> Result<ClassName, String> {
    let name: ClassName = s.parse().map_err(|e: cubicsurf::Error| e.to_string())?;
    if !name.is_pencil() {
        return Err(format!("{name} is not one of the 27 pencils"));
    }
    Ok(name)
}

fn parse_kind(s: &str) -> Result<SequenceKind, String> {
    s.parse().map_err(|e: cubicsurf::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verification(Report),
}

impl From<cubicsurf::Error> for Failure {
    fn from(e: cubicsurf::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Runs the command line on `argv` (program name first).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let (report, code) = match dispatch(&cli.command) {
        Ok(r) => (r, EXIT_OK),
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Verification(r)) => (r, EXIT_VERIFY),
    };
    match report.write(cli.format, out) {
        Ok(()) => {}
        // a closed pipe downstream is not our failure
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    }
    code
}

fn dispatch(cmd: &Command) -> Result<Report, Failure> {
    match cmd {
        Command::Lines => Ok(named_classes(&line_names())),
        Command::Pencils => Ok(named_classes(&pencil_names())),
        Command::Nefcone => Ok(rays(nef_cone().rays())),
        Command::Subcone(args) => {
            let sel = match args.pencil {
                Some(name) => SubconeSelector::pencil(name)?,
                None => SubconeSelector::Hyperplane,
            };
            Ok(rays(subcone(&sel)?.rays()))
        }
        Command::Seshadri { class, oracle } => {
            let d = divisor(class)?;
            let result = seshadri(&d)?;
            let oracle = if *oracle { Some(seshadri_oracle(&d)?) } else { None };
            let mut report = constant_report(&d, &result, None);
            if let Some(o) = oracle {
                report.json["oracle"] = json!(o.to_string());
                report.grid.columns.push("oracle".into());
                report.grid.align.push(Align::Right);
                report.grid.rows[0].push(o.to_string());
                if o != result.value {
                    return Err(Failure::Verification(report));
                }
            }
            Ok(report)
        }
        Command::Alpha { class, tangent } => {
            let d = divisor(class)?;
            let result = alpha(&d, (*tangent).into())?;
            Ok(constant_report(&d, &result, Some(*tangent)))
        }
        Command::CurveAlpha { degree, branches } => {
            let value = alpha_rational_curve(*degree, branches)?;
            let listed: Vec<String> =
                branches.iter().map(|b| format!("{},{}", b.multiplicity(), b.residue().code())).collect();
            let mut grid = Grid::new(&["degree", "branches", "alpha"], &[Align::Right, Align::Left, Align::Right]);
            grid.push(vec![degree.to_string(), listed.join(" "), value.to_string()]);
            let json = json!({ "degree": degree, "branches": listed, "alpha": value.to_string() });
            Ok(Report { json, grid })
        }
        Command::Verify { what } => {
            let reports = match what {
                VerifyTarget::Tables => (1..=3).map(verify_table).collect::<Result<Vec<_>, _>>()?,
                VerifyTarget::Reasons => vec![verify_reasons()?],
                VerifyTarget::All => verify_all()?,
            };
            verify_outcome(&reports)
        }
        Command::EstimateAlpha { kind, length, schedule, csv } => {
            let spec = SequenceSpec::new(kind.clone(), *length)?.with_schedule((*schedule).into());
            estimate_report(&spec, csv.as_ref())
        }
    }
}

fn divisor(coeffs: &[BigInt]) -> Result<DivisorClass, Failure> {
    let arr: [BigInt; 7] = coeffs
        .to_vec()
        .try_into()
        .map_err(|_| Failure::Usage(format!("expected 7 coefficients, got {}", coeffs.len())))?;
    Ok(DivisorClass::new(arr))
}

const BASIS: [&str; 7] = ["L", "E1", "E2", "E3", "E4", "E5", "E6"];

fn class_grid(first: &str) -> Grid {
    let mut cols = vec![first];
    cols.extend(BASIS);
    let mut align = vec![Align::Left];
    align.extend([Align::Right; 7]);
    Grid::new(&cols, &align)
}

fn class_cells(id: String, d: &DivisorClass) -> Vec<String> {
    let mut row = vec![id];
    row.extend(d.coeffs().iter().map(BigInt::to_string));
    row
}

fn named_classes(names: &[ClassName]) -> Report {
    let mut grid = class_grid("name");
    let mut items = Vec::with_capacity(names.len());
    for &name in names {
        let class = standard_class(name).expect("standard names are valid");
        grid.push(class_cells(name.to_string(), &class));
        items.push(json!({ "name": name.to_string(), "class": class }));
    }
    Report { json: Value::Array(items), grid }
}

fn rays(rays: &[DivisorClass]) -> Report {
    let mut grid = class_grid("#");
    for (i, r) in rays.iter().enumerate() {
        grid.push(class_cells((i + 1).to_string(), r));
    }
    Report { json: json!(rays), grid }
}

fn constant_report(d: &DivisorClass, result: &ConstantResult, tangent: Option<Tangent>) -> Report {
    let certs: Vec<String> = result.certificates.iter().map(ToString::to_string).collect();
    let mut json = json!({
        "class": d,
        "value": result.value.to_string(),
        "certificates": certs,
    });
    let mut cols = vec!["class", "value", "certificates"];
    let mut row = vec![d.to_string(), result.value.to_string(), certs.join(" ")];
    if let Some(t) = tangent {
        let name = t.to_possible_value().expect("no skipped variants").get_name().to_string();
        json["tangent"] = json!(name);
        cols.insert(1, "tangent");
        row.insert(1, name);
    }
    let mut grid = Grid::new(&cols, &vec![Align::Left; cols.len()]);
    grid.push(row);
    Report { json, grid }
}

fn verification_report(reports: &[VerificationReport]) -> Report {
    let mut grid = Grid::new(&["item", "result", "detail"], &[Align::Left, Align::Left, Align::Left]);
    let verdict = |pass: bool| if pass { "PASS" } else { "FAIL" }.to_string();
    for r in reports {
        let failing = r.failures().count();
        grid.push(vec![
            r.name.clone(),
            verdict(r.pass),
            format!(
                "{} rows, {} failing, {} missing, {} extra",
                r.rows.len(),
                failing,
                r.missing.len(),
                r.extra.len()
            ),
        ]);
        for row in r.failures() {
            for c in row.checks.iter().filter(|c| !c.pass) {
                grid.push(vec![
                    format!("  table {} row {}", row.table, row.index),
                    verdict(false),
                    format!("{}: expected {}, computed {}", c.name, c.expected, c.computed),
                ]);
            }
        }
        for m in &r.missing {
            grid.push(vec!["  missing".into(), verdict(false), m.to_string()]);
        }
        for x in &r.extra {
            grid.push(vec!["  extra".into(), verdict(false), x.to_string()]);
        }
    }
    let all = reports.iter().all(|r| r.pass);
    let json = json!({ "pass": all, "reports": reports });
    Report { json, grid }
}

fn verify_outcome(reports: &[VerificationReport]) -> Result<Report, Failure> {
    let report = verification_report(reports);
    if reports.iter().all(|r| r.pass) {
        Ok(report)
    } else {
        Err(Failure::Verification(report))
    }
}

fn estimate_report(spec: &SequenceSpec, csv: Option<&PathBuf>) -> Result<Report, Failure> {
    let seq = generate(spec)?;
    let est = estimate_sequence(&seq)?;
    if let Some(path) = csv {
        let file = File::create(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        est.write_csv(BufWriter::new(file))?;
    }
    let schedule = match spec.schedule {
        Schedule::Linear => "linear",
        Schedule::Geometric => "geometric",
    };
    let expected = spec.kind.expected_alpha();
    let estimate = format_gamma(&est.estimate);
    let within = (est.estimate.to_f64() - ExtendedRational::from(expected.clone()).to_f64()).abs() <= spec.kind.tolerance();
    let json = json!({
        "kind": spec.kind.to_string(),
        "length": spec.length,
        "schedule": schedule,
        "estimate": estimate,
        "tail_start": est.tail_start + 1,
        "tail_min": format_gamma(&est.tail_min),
        "tail_max": format_gamma(&est.tail_max),
        "spread": format!("{:.12}", est.spread()),
        "stalled": est.stalled.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "expected": expected.to_string(),
        "engineering_tolerance": spec.kind.tolerance(),
        "within_tolerance": within,
    });
    let mut grid = Grid::new(&["field", "value"], &[Align::Left, Align::Left]);
    for key in [
        "kind", "length", "schedule", "estimate", "tail_start", "tail_min", "tail_max", "spread", "expected",
        "engineering_tolerance", "within_tolerance",
    ] {
        let v = &json[key];
        grid.push(vec![key.into(), v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())]);
    }
    grid.push(vec!["stalled".into(), est.stalled.len().to_string()]);
    Ok(Report { json, grid })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cubicsurf::tables::{Check, RowVerdict};

    #[test]
    fn failing_reports_are_verification_failures() {
        let bad = DivisorClass::from_ints([1, 2, 3, 4, 5, 6, 7]);
        let report = VerificationReport {
            name: "synthetic".into(),
            rows: vec![RowVerdict {
                table: 2,
                index: 5,
                class: bad.clone(),
                checks: vec![Check { name: "nef".into(), expected: "true".into(), computed: "false".into(), pass: false }],
                pass: false,
            }],
            missing: vec![],
            extra: vec![bad],
            pass: false,
        };
        let Err(Failure::Verification(r)) = verify_outcome(&[report]) else {
            panic!("a failing report must map to a verification failure");
        };
        let mut buf = Vec::new();
        r.write(Format::Table, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.lines().any(|l| l.starts_with("synthetic") && l.contains("FAIL")));
        assert!(text.contains("table 2 row 5"));
        assert!(text.contains("extra"));
        assert_eq!(r.json["pass"], false);
    }
}
