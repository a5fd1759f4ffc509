//! Vanishing, divisibility, sign and monotonicity statements about Welschinger
//! invariants, checked entry by entry on tables.
//!
//! Hypotheses travel with the table as flags. A missing or false flag makes a
//! check report `n/a`; it never counts as a pass.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::table::{InvariantTable, TableEntry, TableError, CONVENTION_F_MASS, F_STANDARD};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("d.delta = {0} must be even and nonnegative")]
    OddIntersection(i64),
    #[error("delta.l_d = {0} must be 0 or 1")]
    NotABit(u8),
    #[error(transparent)]
    Table(#[from] TableError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportLine {
    pub entry: String,
    pub check: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub lines: Vec<ReportLine>,
}

impl Report {
    pub fn push(&mut self, entry: impl Into<String>, check: &str, status: Status, detail: impl Into<String>) {
        self.lines.push(ReportLine {
            entry: entry.into(),
            check: check.to_string(),
            status,
            detail: detail.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }

    pub fn has_failures(&self) -> bool {
        self.lines.iter().any(|l| l.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.lines.iter().filter(|l| l.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("entry,check,status,detail\n");
        for l in &self.lines {
            out.push_str(&format!(
                "\"{}\",{},{},\"{}\"\n",
                l.entry.replace('"', "'"),
                l.check,
                l.status,
                l.detail.replace('"', "'")
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(&format!("{:<5} {:<14} {}  {}\n", l.status, l.check, l.entry, l.detail));
        }
        out
    }
}

pub const CHECK_VANISHING: &str = "vanishing";
pub const CHECK_DIVISIBILITY: &str = "divisibility";
pub const CHECK_SIGN: &str = "sign";
pub const CHECK_MONOTONICITY: &str = "monotonicity";

fn entry_label(table: &InvariantTable, e: &TableEntry) -> String {
    let class: Vec<String> = e.class.iter().map(|c| c.to_string()).collect();
    format!("{}({}) s={}", table.meta.surface, class.join(","), e.s)
}

/// Reason the chain-of-spheres statements do not apply, if any.
fn gate(table: &InvariantTable, needs_standard_f: bool) -> Option<String> {
    if table.meta.kind.as_deref() == Some("gw") {
        return Some("complex invariants".into());
    }
    match table.meta.convention.as_deref() {
        Some(CONVENTION_F_MASS) => {}
        Some(other) => return Some(format!("sign convention `{other}` differs")),
        None => return Some("no sign convention declared".into()),
    }
    let flags = &table.meta.flags;
    if flags.chain_of_spheres != Some(true) {
        return Some("flag chain_of_spheres not set".into());
    }
    if flags.f_nontrivial != Some(true) {
        return Some("flag F_nontrivial not set".into());
    }
    if needs_standard_f && table.meta.f != F_STANDARD {
        return Some(format!("F = {} is not [RX \\ L]", table.meta.f));
    }
    None
}

/// Per-entry data shared by the flag-gated checks: `(label, c1.d, r)`.
fn entry_data(table: &InvariantTable) -> Result<Vec<(String, BigInt, BigInt)>, CheckError> {
    table.validate()?;
    let model = table.surface_model()?;
    let mut out = Vec::new();
    for e in &table.entries {
        let class = table.class_of(e)?;
        let c1 = model.c1_dot(&class).map_err(TableError::from)?;
        let r = model.constraint_split(&class, e.s).map_err(TableError::from)?;
        out.push((entry_label(table, e), c1, r));
    }
    Ok(out)
}

/// Entries with `r >= 2` must vanish.
pub fn check_vanishing(table: &InvariantTable) -> Result<Report, CheckError> {
    let data = entry_data(table)?;
    let mut report = Report::default();
    let skip = gate(table, false);
    for (e, (label, _, r)) in table.entries.iter().zip(data) {
        if let Some(reason) = &skip {
            report.push(label, CHECK_VANISHING, Status::NotApplicable, reason.clone());
        } else if r < BigInt::from(2) {
            report.push(label, CHECK_VANISHING, Status::NotApplicable, format!("r = {r} < 2"));
        } else if e.value.is_zero() {
            report.push(label, CHECK_VANISHING, Status::Pass, format!("r = {r}, value 0"));
        } else {
            report.push(
                label,
                CHECK_VANISHING,
                Status::Fail,
                format!("r = {r} but value is {}", e.value),
            );
        }
    }
    Ok(report)
}

/// Entries with `r = 1` and `c1.d >= 2` must be divisible by `2^((c1.d - 4)/2)`.
pub fn check_divisibility(table: &InvariantTable) -> Result<Report, CheckError> {
    let data = entry_data(table)?;
    let mut report = Report::default();
    let skip = gate(table, false);
    for (e, (label, c1, r)) in table.entries.iter().zip(data) {
        if let Some(reason) = &skip {
            report.push(label, CHECK_DIVISIBILITY, Status::NotApplicable, reason.clone());
            continue;
        }
        if !r.is_one() || c1 < BigInt::from(2) {
            report.push(
                label,
                CHECK_DIVISIBILITY,
                Status::NotApplicable,
                format!("r = {r}, c1.d = {c1}"),
            );
            continue;
        }
        let top: BigInt = &c1 - 4;
        if top.is_negative() || top.is_odd() {
            report.push(
                label,
                CHECK_DIVISIBILITY,
                Status::NotApplicable,
                format!("exponent (c1.d - 4)/2 = ({c1} - 4)/2 is not a nonnegative integer"),
            );
            continue;
        }
        let half: BigInt = top / 2;
        let exponent = half.to_u64().unwrap_or(u64::MAX);
        let status = divisible_by_power_of_two(&e.value, exponent);
        let detail = format!("2^{exponent} | {}", e.value);
        report.push(
            label,
            CHECK_DIVISIBILITY,
            if status { Status::Pass } else { Status::Fail },
            if status { detail } else { format!("not {detail}") },
        );
    }
    Ok(report)
}

fn divisible_by_power_of_two(value: &BigInt, exponent: u64) -> bool {
    if value.is_zero() {
        return true;
    }
    value.trailing_zeros().is_some_and(|z| z >= exponent)
}

/// Entries with `r = 1` and `F = [RX \ L]` satisfy
/// `(-1)^((d^2 - c1.d + 2)/2) W >= 0`.
pub fn check_sign(table: &InvariantTable) -> Result<Report, CheckError> {
    let data = entry_data(table)?;
    let model = table.surface_model()?;
    let mut report = Report::default();
    let skip = gate(table, true);
    for (e, (label, _, r)) in table.entries.iter().zip(data) {
        if let Some(reason) = &skip {
            report.push(label, CHECK_SIGN, Status::NotApplicable, reason.clone());
            continue;
        }
        if !r.is_one() {
            report.push(label, CHECK_SIGN, Status::NotApplicable, format!("r = {r}"));
            continue;
        }
        let nodes = match model.node_count(&table.class_of(e)?) {
            Ok(n) => n,
            Err(err) => {
                report.push(label, CHECK_SIGN, Status::NotApplicable, err.to_string());
                continue;
            }
        };
        let signed = if nodes.is_odd() { -e.value.clone() } else { e.value.clone() };
        let ok = !signed.is_negative();
        report.push(
            label,
            CHECK_SIGN,
            if ok { Status::Pass } else { Status::Fail },
            format!("(-1)^{nodes} * {} = {signed}", e.value),
        );
    }
    Ok(report)
}

/// All three chain-of-spheres checks, in order.
pub fn check_table(table: &InvariantTable) -> Result<Report, CheckError> {
    let mut report = check_vanishing(table)?;
    report.extend(check_divisibility(table)?);
    report.extend(check_sign(table)?);
    Ok(report)
}

/// `(-1)^(d.delta / 2) value`.
pub fn sign_twist_curve(value: &BigInt, d_dot_delta: i64) -> Result<BigInt, CheckError> {
    if d_dot_delta < 0 || d_dot_delta % 2 != 0 {
        return Err(CheckError::OddIntersection(d_dot_delta));
    }
    Ok(if (d_dot_delta / 2) % 2 == 0 { value.clone() } else { -value })
}

/// `(-1)^(delta.l_d) value`.
pub fn sign_twist_kernel(value: &BigInt, delta_dot_ld: u8) -> Result<BigInt, CheckError> {
    match delta_dot_ld {
        0 => Ok(value.clone()),
        1 => Ok(-value),
        other => Err(CheckError::NotABit(other)),
    }
}

/// Values must be nonnegative and must not increase with the Euler
/// characteristic; equal characteristics force equal values.
pub fn check_monotonicity(series: &[(i64, BigInt)]) -> Report {
    let mut sorted: Vec<&(i64, BigInt)> = series.iter().collect();
    sorted.sort_by_key(|(chi, _)| *chi);
    let mut report = Report::default();
    for (chi, value) in &sorted {
        let ok = !value.is_negative();
        report.push(
            format!("chi={chi}"),
            CHECK_MONOTONICITY,
            if ok { Status::Pass } else { Status::Fail },
            format!("value {value} {}", if ok { ">= 0" } else { "< 0" }),
        );
    }
    for pair in sorted.windows(2) {
        let ((c1, v1), (c2, v2)) = (pair[0], pair[1]);
        let ok = if c1 == c2 { v1 == v2 } else { v1 >= v2 };
        let relation = if c1 == c2 { "==" } else { ">=" };
        report.push(
            format!("chi={c1}..{c2}"),
            CHECK_MONOTONICITY,
            if ok { Status::Pass } else { Status::Fail },
            format!("{v1} {relation} {v2}{}", if ok { "" } else { " violated" }),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{Flags, TableEntry, TableMeta};

    fn table(surface: &str, flags: Flags, entries: Vec<(Vec<i64>, u64, i64)>) -> InvariantTable {
        let mut t = InvariantTable::new(TableMeta {
            surface: surface.into(),
            real_structure: "test".into(),
            l: "L".into(),
            f: F_STANDARD.into(),
            flags,
            convention: Some(CONVENTION_F_MASS.into()),
            kind: Some("welschinger".into()),
            source: Some("synthetic".into()),
        });
        for (class, s, v) in entries {
            t.entries.push(TableEntry {
                class,
                s,
                value: BigInt::from(v),
            });
        }
        t
    }

    fn flagged() -> Flags {
        Flags {
            chain_of_spheres: Some(true),
            f_nontrivial: Some(true),
        }
    }

    #[test]
    fn vanishing_examples() {
        // CP2 degree 1: c1.d - 1 = 2; s = 0 gives r = 2
        let t = table("cp2", flagged(), vec![(vec![1], 0, 0)]);
        assert_eq!(check_vanishing(&t).unwrap().lines[0].status, Status::Pass);
        let t = table("cp2", flagged(), vec![(vec![1], 0, 5)]);
        assert!(check_vanishing(&t).unwrap().has_failures());
        let t = table("cp2", Flags::default(), vec![(vec![1], 0, 5)]);
        let r = check_vanishing(&t).unwrap();
        assert_eq!(r.lines[0].status, Status::NotApplicable);
        assert!(!r.has_failures());
    }

    #[test]
    fn divisibility_examples() {
        // blown-up plane: class 3 line - e1 has c1.d = 8, r = 1 for s = 3
        let t = table("cp2_1", flagged(), vec![(vec![3, -1], 3, 48)]);
        let r = check_divisibility(&t).unwrap();
        assert_eq!(r.lines[0].status, Status::Pass);
        // CP2 degree 2: c1.d = 6, r = 1 at s = 2
        let t = table("cp2", flagged(), vec![(vec![2], 2, 3)]);
        assert!(check_divisibility(&t).unwrap().has_failures());
        // F0 (1,1): c1.d = 4, r = 1 at s = 1
        for v in [-7, 0, 1, 3] {
            let t = table("f0", flagged(), vec![(vec![1, 1], 1, v)]);
            assert_eq!(check_divisibility(&t).unwrap().lines[0].status, Status::Pass);
        }
    }

    #[test]
    fn sign_examples() {
        // 3 line - e1 on the blown-up plane has one node; r = 1 at s = 3
        let t = table("cp2_1", flagged(), vec![(vec![3, -1], 3, -7)]);
        assert_eq!(check_sign(&t).unwrap().lines[0].status, Status::Pass);
        // F0 (1,1) has no node
        let t = table("f0", flagged(), vec![(vec![1, 1], 1, -1)]);
        assert!(check_sign(&t).unwrap().has_failures());
        let t = table("f0", flagged(), vec![(vec![1, 1], 1, 0)]);
        assert!(!check_sign(&t).unwrap().has_failures());
        let mut t = table("f0", flagged(), vec![(vec![1, 1], 1, -1)]);
        t.meta.f = "other".into();
        assert_eq!(check_sign(&t).unwrap().lines[0].status, Status::NotApplicable);
    }

    #[test]
    fn other_conventions_are_not_checked() {
        let mut t = table("cp2", flagged(), vec![(vec![1], 0, 5)]);
        t.meta.convention = Some(crate::table::CONVENTION_F_MASS_COMPLEMENT.into());
        let r = check_table(&t).unwrap();
        assert_eq!(r.count(Status::NotApplicable), 3);
    }

    #[test]
    fn twists() {
        let v = BigInt::from(5);
        assert_eq!(sign_twist_curve(&v, 2).unwrap(), BigInt::from(-5));
        assert_eq!(sign_twist_curve(&v, 4).unwrap(), BigInt::from(5));
        assert_eq!(sign_twist_curve(&BigInt::zero(), 6).unwrap(), BigInt::zero());
        assert!(sign_twist_curve(&v, 3).is_err());
        let v = BigInt::from(7);
        assert_eq!(sign_twist_kernel(&v, 1).unwrap(), BigInt::from(-7));
        assert_eq!(sign_twist_kernel(&v, 0).unwrap(), v);
        assert_eq!(sign_twist_kernel(&BigInt::zero(), 1).unwrap(), BigInt::zero());
        assert!(sign_twist_kernel(&v, 2).is_err());
    }

    #[test]
    fn monotonicity_examples() {
        let s = |v: &[(i64, i64)]| v.iter().map(|&(c, x)| (c, BigInt::from(x))).collect::<Vec<_>>();
        assert!(!check_monotonicity(&s(&[(-5, 10), (-3, 4), (-1, 0)])).has_failures());
        assert!(check_monotonicity(&s(&[(-5, 2), (-3, 4)])).has_failures());
        assert!(!check_monotonicity(&s(&[(1, 3)])).has_failures());
        assert!(check_monotonicity(&s(&[(1, -3)])).has_failures());
        assert!(check_monotonicity(&s(&[(0, 3), (0, 2)])).has_failures());
        // input order does not matter
        assert!(!check_monotonicity(&s(&[(-1, 0), (-5, 10), (-3, 4)])).has_failures());
    }
}
