//! The three embedded 99-row generator tables and their verification.
//!
//! * Table 1: generators of the nef cone `Γ`.
//! * Table 2: generators of `Γ(L1)`, each with a short reason why the member
//!   of the pencil `L1` through a general point computes `ε`.
//! * Table 3: generators of `Γ(h)`, each labelled with a pencil `C` such that
//!   the generator also spans a ray of `Γ(C)`.
//!
//! Row numbering carries no meaning across tables; comparisons with computed
//! cones are set comparisons on primitive vectors.

mod data;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::cones::{nef_cone, subcone, SubconeSelector};
use crate::constants::{seshadri, ExtendedRational};
use crate::picard::{hyperplane, is_nef, pair, standard_class, ClassName, DivisorClass};
use crate::{Error, Result};

pub const ROWS: usize = 99;

/// A summand in a decomposition reason.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Term {
    Named(ClassName),
    /// Row `k` (1-based) of Table 2.
    Row(usize),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Named(n) => write!(f, "{n}"),
            Term::Row(k) => write!(f, "D{k}"),
        }
    }
}

/// Annotation of a Table 2 row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    /// `L1 . D_n = c`.
    Degree(i64),
    /// `D_n` is the sum of two or three named classes or earlier rows.
    Sum(&'static [Term]),
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::Degree(c) => write!(f, "L1.D={c}"),
            Reason::Sum(terms) => {
                let parts: Vec<String> = terms.iter().map(Term::to_string).collect();
                write!(f, "{}", parts.join("+"))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Annotation {
    None,
    Reason(Reason),
    Pencil(ClassName),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub table: u8,
    /// 1-based row number.
    pub index: usize,
    pub class: DivisorClass,
    pub annotation: Annotation,
}

pub fn table_rows(id: u8) -> Result<Vec<TableRow>> {
    let row = |index: usize, v: [i64; 7], annotation| TableRow {
        table: id,
        index,
        class: DivisorClass::from_ints(v),
        annotation,
    };
    Ok(match id {
        1 => data::NEF_CONE
            .iter()
            .enumerate()
            .map(|(i, &v)| row(i + 1, v, Annotation::None))
            .collect(),
        2 => data::PENCIL_L1_CONE
            .iter()
            .enumerate()
            .map(|(i, &(v, r))| row(i + 1, v, Annotation::Reason(r)))
            .collect(),
        3 => data::HYPERPLANE_CONE
            .iter()
            .enumerate()
            .map(|(i, &(v, c))| row(i + 1, v, Annotation::Pencil(c)))
            .collect(),
        _ => return Err(Error::InvalidTable(id)),
    })
}

/// The selector of the cone a table lists.
pub fn table_cone(id: u8) -> Result<SubconeSelector> {
    match id {
        1 => Err(Error::InvalidArgument("table 1 lists the nef cone itself".into())),
        2 => SubconeSelector::pencil(ClassName::Li(1)),
        3 => Ok(SubconeSelector::Hyperplane),
        _ => Err(Error::InvalidTable(id)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Check {
    fn new(name: &str, expected: impl ToString, computed: impl ToString) -> Self {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let pass = expected == computed;
        Check { name: name.to_string(), expected, computed, pass }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowVerdict {
    pub table: u8,
    pub index: usize,
    pub class: DivisorClass,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl RowVerdict {
    fn new(row: &TableRow, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        RowVerdict { table: row.table, index: row.index, class: row.class.clone(), checks, pass }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub rows: Vec<RowVerdict>,
    /// Computed generators absent from the table.
    pub missing: Vec<DivisorClass>,
    /// Table rows that are not computed generators.
    pub extra: Vec<DivisorClass>,
    pub pass: bool,
}

impl VerificationReport {
    fn new(name: String, rows: Vec<RowVerdict>, missing: Vec<DivisorClass>, extra: Vec<DivisorClass>) -> Self {
        let pass = missing.is_empty() && extra.is_empty() && rows.iter().all(|r| r.pass);
        VerificationReport { name, rows, missing, extra, pass }
    }

    pub fn failures(&self) -> impl Iterator<Item = &RowVerdict> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

/// Compares a table with the rays computed by the cone engine.
pub fn verify_table(id: u8) -> Result<VerificationReport> {
    let rows = table_rows(id)?;
    let cone = match id {
        1 => nef_cone(),
        _ => subcone(&table_cone(id)?)?,
    };
    let computed: BTreeSet<&DivisorClass> = cone.rays().iter().collect();
    let listed: BTreeSet<&DivisorClass> = rows.iter().map(|r| &r.class).collect();

    let verdicts = rows
        .iter()
        .map(|r| {
            let checks = vec![
                Check::new("primitive", true, r.class.is_primitive()),
                Check::new("nef", true, is_nef(&r.class)),
                Check::new("computed-generator", true, computed.contains(&r.class)),
            ];
            RowVerdict::new(r, checks)
        })
        .collect();
    let missing = computed.difference(&listed).map(|c| (*c).clone()).collect();
    let mut extra: Vec<DivisorClass> = listed.difference(&computed).map(|c| (*c).clone()).collect();
    if listed.len() != rows.len() {
        // a duplicated row is as wrong as a missing one
        extra.extend(duplicates(&rows));
    }
    let name = match id {
        1 => "table 1: nef cone".to_string(),
        2 => "table 2: Γ(L1)".to_string(),
        _ => "table 3: Γ(h)".to_string(),
    };
    Ok(VerificationReport::new(name, verdicts, missing, extra))
}

fn duplicates(rows: &[TableRow]) -> Vec<DivisorClass> {
    let mut seen = BTreeSet::new();
    rows.iter()
        .filter(|r| !seen.insert(&r.class))
        .map(|r| r.class.clone())
        .collect()
}

fn half(n: BigInt) -> BigRational {
    BigRational::new(n, BigInt::from(2))
}

fn term_class(term: &Term, table2: &[TableRow]) -> Option<DivisorClass> {
    match term {
        Term::Named(n) => standard_class(*n).ok(),
        Term::Row(k) => table2.get(k.checked_sub(1)?).map(|r| r.class.clone()),
    }
}

fn verify_reason_row(row: &TableRow, reason: &Reason, table2: &[TableRow]) -> Vec<Check> {
    let l1 = standard_class(ClassName::Li(1)).expect("L1 is valid");
    let degree = pair(&l1, &row.class);
    let mut checks = match reason {
        Reason::Degree(c) => vec![Check::new("L1-degree", c, &degree)],
        Reason::Sum(terms) => {
            let summands: Option<Vec<DivisorClass>> =
                terms.iter().map(|t| term_class(t, table2)).collect();
            match summands {
                Some(summands) => {
                    let total = summands.iter().fold(DivisorClass::zero(), |acc, s| &acc + s);
                    vec![
                        Check::new("decomposition", &row.class, &total),
                        Check::new("summands-nef", true, summands.iter().all(is_nef)),
                    ]
                }
                None => vec![Check::new("decomposition", &row.class, "unresolved term")],
            }
        }
    };
    let eps = seshadri(&row.class).map(|r| r.value.to_string());
    checks.push(Check::new(
        "seshadri=L1.D",
        ExtendedRational::Finite(BigRational::from_integer(degree)),
        eps.unwrap_or_else(|e| e.to_string()),
    ));
    checks
}

fn verify_pencil_row(row: &TableRow, pencil: ClassName) -> Result<Vec<Check>> {
    let c = standard_class(pencil)?;
    let half_h = half(pair(&row.class, &hyperplane()));
    let gamma_c = subcone(&SubconeSelector::pencil(pencil)?)?;
    let eps = seshadri(&row.class).map(|r| r.value.to_string());
    Ok(vec![
        Check::new("G.C=(G.h)/2", &half_h, BigRational::from_integer(pair(&row.class, &c))),
        Check::new(&format!("extreme-ray-of-Γ({pencil})"), true, gamma_c.rays().contains(&row.class)),
        Check::new(
            "seshadri=(G.h)/2",
            ExtendedRational::Finite(half_h),
            eps.unwrap_or_else(|e| e.to_string()),
        ),
    ])
}

/// Checks every Table 2 reason and every Table 3 pencil label.
pub fn verify_reasons() -> Result<VerificationReport> {
    let table2 = table_rows(2)?;
    let table3 = table_rows(3)?;
    let mut verdicts = Vec::with_capacity(2 * ROWS);
    for row in &table2 {
        let Annotation::Reason(reason) = &row.annotation else {
            unreachable!("table 2 rows carry reasons")
        };
        verdicts.push(RowVerdict::new(row, verify_reason_row(row, reason, &table2)));
    }
    for row in &table3 {
        let Annotation::Pencil(pencil) = row.annotation else {
            unreachable!("table 3 rows carry pencils")
        };
        verdicts.push(RowVerdict::new(row, verify_pencil_row(row, pencil)?));
    }
    Ok(VerificationReport::new("reasons: tables 2 and 3".into(), verdicts, vec![], vec![]))
}

/// Tables 1–3 followed by the reasons.
pub fn verify_all() -> Result<Vec<VerificationReport>> {
    let mut out: Vec<VerificationReport> = (1..=3).map(verify_table).collect::<Result<_>>()?;
    out.push(verify_reasons()?);
    Ok(out)
}
