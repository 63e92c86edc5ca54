//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each, and exits non-zero if any failed.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use cubicsurf::cones::{nef_cone, subcone, Membership, SubconeSelector};
use cubicsurf::constants::*;
use cubicsurf::heights::{estimate_sequence, generate, Schedule, SequenceKind, SequenceSpec};
use cubicsurf::picard::*;
use cubicsurf::tables::{table_rows, verify_reasons};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x5e5_4ad1;

const TABLE1_LIMIT: Duration = Duration::from_secs(5);
const TABLE23_LIMIT: Duration = Duration::from_secs(10);
const REASONS_LIMIT: Duration = Duration::from_secs(30);
const ORACLE_LIMIT: Duration = Duration::from_secs(60);
const EMPIRICS_LIMIT: Duration = Duration::from_secs(120);

const ORACLE_SAMPLES: usize = 10_000;
const PROPERTY_CASES: usize = 1_000;
const MAX_COEFF: i64 = 10;

const TOL_LINE: f64 = 0.1;
const TOL_CUSP: f64 = 0.1;
const TOL_NODAL: f64 = 0.15;
const TOL_QUADRIC: f64 = 0.15;
const EMPIRICAL_LENGTH: usize = 1_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn set_of(v: &[DivisorClass]) -> BTreeSet<DivisorClass> {
    v.iter().cloned().collect()
}

fn table_set(id: u8) -> BTreeSet<DivisorClass> {
    table_rows(id).unwrap().into_iter().map(|r| r.class).collect()
}

fn compare_table(id: u8, computed: &[DivisorClass]) -> Result<(), String> {
    let table = table_set(id);
    let computed = set_of(computed);
    ensure(table.len() == 99 && computed == table, || {
        format!(
            "{} computed rays missing from table, {} table rows not computed",
            computed.difference(&table).count(),
            table.difference(&computed).count()
        )
    })
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let nef = nef_cone();
    compare_table(1, nef.rays())?;
    within(TABLE1_LIMIT, start)?;
    Ok(format!("99 rays equal table 1 in {:.2?}", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let cone = subcone(&SubconeSelector::pencil(ClassName::Li(1)).unwrap()).unwrap();
    compare_table(2, cone.rays())?;
    within(TABLE23_LIMIT, start)?;
    Ok(format!("99 rays of Γ(L1) equal table 2 in {:.2?}", start.elapsed()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let cone = subcone(&SubconeSelector::Hyperplane).unwrap();
    compare_table(3, cone.rays())?;
    within(TABLE23_LIMIT, start)?;
    Ok(format!("99 rays of Γ(h) equal table 3 in {:.2?}", start.elapsed()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let report = verify_reasons().map_err(|e| e.to_string())?;
    let failures: Vec<String> = report
        .failures()
        .map(|r| format!("table {} row {}", r.table, r.index))
        .collect();
    ensure(failures.is_empty(), || format!("failing rows: {}", failures.join(", ")))?;
    ensure(report.rows.len() == 198, || format!("{} rows checked", report.rows.len()))?;
    within(REASONS_LIMIT, start)?;
    Ok(format!("99 + 99 annotated rows check out in {:.2?}", start.elapsed()))
}

fn criterion_5() -> Outcome {
    use TangentType::*;
    let e = ExtendedRational::ratio;
    let cases = [
        ((true, Cuspidal), (e(1, 1), e(1, 1))),
        ((true, NodalSlopesInKvNotK), (e(1, 1), e(1, 1))),
        ((true, NodalSlopesInKOrNotInKv), (e(1, 1), e(1, 1))),
        ((false, Cuspidal), (e(3, 2), e(3, 2))),
        ((false, NodalSlopesInKvNotK), (e(3, 2), e(3, 2))),
        ((false, NodalSlopesInKOrNotInKv), (e(3, 2), e(2, 1))),
    ];
    for ((on_line, t), expected) in cases {
        let got = anticanonical_constants(on_line, t);
        ensure(got == expected, || format!("on_line={on_line}, {t:?}: got ({}, {})", got.0, got.1))?;
    }
    Ok("(1,1), (3/2,3/2), (3/2,3/2), (3/2,2)".into())
}

fn random_nef(rng: &mut StdRng) -> DivisorClass {
    let rays = nef_cone();
    let terms = rng.gen_range(1..=4);
    (0..terms).fold(DivisorClass::zero(), |acc, _| {
        let r = &rays.rays()[rng.gen_range(0..rays.rays().len())];
        &acc + &r.scale(&BigInt::from(rng.gen_range(0..=MAX_COEFF)))
    })
}

fn random_word(rng: &mut StdRng) -> Vec<usize> {
    let len = rng.gen_range(0..=10);
    (0..len).map(|_| rng.gen_range(0..6)).collect()
}

fn random_tangent(rng: &mut StdRng) -> TangentType {
    TangentType::ALL[rng.gen_range(0..3)]
}

fn eps(d: &DivisorClass) -> ExtendedRational {
    seshadri(d).unwrap().value
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    for r in nef_cone().rays() {
        let o = seshadri_oracle(r).unwrap();
        ensure(o == eps(r), || format!("generator {r}: oracle {o}, formula {}", eps(r)))?;
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..ORACLE_SAMPLES {
        let d = random_nef(&mut rng);
        let o = seshadri_oracle(&d).unwrap();
        ensure(o == eps(&d), || format!("{d}: oracle {o}, formula {}", eps(&d)))?;
    }
    within(ORACLE_LIMIT, start)?;
    Ok(format!("99 generators and {ORACLE_SAMPLES} combinations agree in {:.2?}", start.elapsed()))
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED + 7);
    let q = |n: i64| BigRational::from_integer(n.into());
    let zero = q(0);

    for _ in 0..PROPERTY_CASES {
        let d = random_nef(&mut rng);
        let m = rng.gen_range(1..=20);
        let t = random_tangent(&mut rng);
        let md = d.scale(&BigInt::from(m));
        ensure(eps(&md) == eps(&d).scale(&q(m)), || format!("homogeneity of ε at {d}, m={m}"))?;
        ensure(
            alpha(&md, t).unwrap().value == alpha(&d, t).unwrap().value.scale(&q(m)),
            || format!("homogeneity of α at {d}, m={m}, {t:?}"),
        )?;
    }

    for _ in 0..PROPERTY_CASES {
        let (d1, d2) = (random_nef(&mut rng), random_nef(&mut rng));
        let (a, b) = (rng.gen_range(0..=MAX_COEFF), rng.gen_range(0..=MAX_COEFF));
        let sum = &d1.scale(&BigInt::from(a)) + &d2.scale(&BigInt::from(b));
        let lhs = eps(&sum).finite().unwrap().clone();
        let rhs = eps(&d1).finite().unwrap() * q(a) + eps(&d2).finite().unwrap() * q(b);
        ensure(lhs >= rhs, || format!("superadditivity at {d1}, {d2}, a={a}, b={b}"))?;
    }

    for _ in 0..PROPERTY_CASES {
        let d = random_nef(&mut rng);
        for t in TangentType::ALL {
            let gap = liouville_gap(&d, t).unwrap();
            ensure(gap >= zero, || format!("negative Liouville gap at {d}, {t:?}"))?;
        }
    }

    for _ in 0..PROPERTY_CASES {
        let d = random_nef(&mut rng);
        let w = random_word(&mut rng);
        let t = random_tangent(&mut rng);
        let wd = apply_word(&d, &w);
        ensure(eps(&wd) == eps(&d), || format!("Weyl invariance of ε at {d}, word {w:?}"))?;
        ensure(
            alpha(&wd, t).unwrap().value == alpha(&d, t).unwrap().value,
            || format!("Weyl invariance of α at {d}, word {w:?}, {t:?}"),
        )?;
    }

    for _ in 0..PROPERTY_CASES {
        let (d1, d2) = (random_nef(&mut rng), random_nef(&mut rng));
        let (a1, a2) = (rng.gen_range(0..=MAX_COEFF), rng.gen_range(0..=MAX_COEFF));
        let t = random_tangent(&mut rng);
        let r1 = alpha(&d1, t).unwrap();
        let r2 = alpha(&d2, t).unwrap();
        let combo = &d1.scale(&BigInt::from(a1)) + &d2.scale(&BigInt::from(a2));
        let r = alpha(&combo, t).unwrap();
        for x in r1.certificates.iter().filter(|x| r2.certificates.contains(x)) {
            ensure(r.certificates.contains(x), || format!("argmin {x} lost on {combo}"))?;
        }
    }

    let mut subcones = vec![subcone(&SubconeSelector::Hyperplane).unwrap()];
    for name in pencil_names() {
        subcones.push(subcone(&SubconeSelector::pencil(name).unwrap()).unwrap());
    }
    let covered = |d: &DivisorClass| subcones.iter().any(|c| c.contains(d) != Membership::Outside);
    for r in nef_cone().rays() {
        ensure(covered(r), || format!("generator {r} lies in no subcone"))?;
    }
    for _ in 0..PROPERTY_CASES {
        let d = random_nef(&mut rng);
        ensure(covered(&d), || format!("{d} lies in no subcone"))?;
    }

    Ok(format!("{PROPERTY_CASES} cases each, no failures"))
}

fn criterion_8() -> Outcome {
    let b = |m, r| BranchDatum::new(m, ResidueCode::try_from(r).unwrap()).unwrap();
    let cases = [
        (3, vec![b(2, 1)], ExtendedRational::ratio(3, 2)),
        (3, vec![b(1, 1), b(1, 1)], ExtendedRational::integer(3)),
        (3, vec![b(1, 0), b(1, 0)], ExtendedRational::Infinity),
    ];
    for (d, branches, expected) in cases {
        let got = alpha_rational_curve(d, &branches).unwrap();
        ensure(got == expected, || format!("degree {d}: got {got}, expected {expected}"))?;
    }
    for d in 1..=20u64 {
        let got = alpha_rational_curve(d, &[b(1, 1)]).unwrap();
        ensure(got == ExtendedRational::integer(d as i64), || format!("smooth degree {d}: got {got}"))?;
    }
    Ok("3/2, 3, inf and d for smooth curves".into())
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut failures = Vec::new();
    let runs: Vec<(SequenceKind, Schedule, f64, f64)> = vec![
        (SequenceKind::LineShift(BigRational::from_integer(0.into())), Schedule::Linear, 1.0, TOL_LINE),
        (SequenceKind::CuspidalCubic, Schedule::Linear, 1.5, TOL_CUSP),
        (SequenceKind::NodalCubicBranch(1), Schedule::Geometric, 3.0, TOL_NODAL),
        (SequenceKind::SplitQuadric(1, 1), Schedule::Linear, 1.0, TOL_QUADRIC),
        (SequenceKind::SplitQuadric(1, 2), Schedule::Linear, 1.0, TOL_QUADRIC),
        (SequenceKind::SplitQuadric(2, 3), Schedule::Linear, 2.0, TOL_QUADRIC),
    ];
    for (kind, schedule, expected, tol) in runs {
        let spec = SequenceSpec::new(kind.clone(), EMPIRICAL_LENGTH).unwrap().with_schedule(schedule);
        let est = estimate_sequence(&generate(&spec).unwrap()).unwrap().estimate.to_f64();
        parts.push(format!("{kind} {est:.3}"));
        if (est - expected).abs() > tol {
            failures.push(format!("{kind}: {est:.4} not within {tol} of {expected}"));
        }
    }
    ensure(failures.is_empty(), || failures.join("; "))?;
    within(EMPIRICS_LIMIT, start)?;
    Ok(parts.join(", "))
}

fn criterion_10() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_cubicsurf");
    let runs: Vec<_> = (0..2)
        .map(|_| Command::new(bin).args(["verify", "all"]).output().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    for r in &runs {
        ensure(r.status.code() == Some(0), || format!("exit status {:?}", r.status))?;
    }
    ensure(runs[0].stdout == runs[1].stdout, || "outputs differ".into())?;
    ensure(!runs[0].stdout.is_empty(), || "empty output".into())?;
    Ok(format!("exit 0 twice, {} identical bytes", runs[0].stdout.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("table 1 reproduction", criterion_1),
        ("table 2 reproduction", criterion_2),
        ("table 3 reproduction", criterion_3),
        ("reason verification", criterion_4),
        ("anticanonical case table", criterion_5),
        ("oracle equivalence", criterion_6),
        ("property suites", criterion_7),
        ("singular-curve formula", criterion_8),
        ("empirical alpha", criterion_9),
        ("cli determinism", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
