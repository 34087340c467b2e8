//! structured check reports

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exactlin::{Field, Mat};

/// version of the report JSON layout
pub const REPORT_SCHEMA_VERSION: &str = "1";

/// a named law: machine id plus the label the law goes by
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Axiom {
    pub id: &'static str,
    pub anchor: &'static str,
}

impl Axiom {
    pub const fn new(id: &'static str, anchor: &'static str) -> Self {
        Axiom { id, anchor }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotVerified,
    /// a construction failed before the law could be evaluated
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

pub type Grid = Vec<Vec<Entry>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub lhs: Grid,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs: Option<Grid>,
}

pub fn grid<F: Field>(m: &Mat<F>) -> Grid {
    let f = m.field();
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| match f.to_i64(x) {
                    Some(n) => Entry::Int(n),
                    None => Entry::Text(f.format(x)),
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    /// the object tuple or instance part the law was evaluated at
    pub subject: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub millis: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, rec: CheckRecord) {
        self.records.push(rec);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    fn record(&mut self, ax: Axiom, subject: &str, status: Status, detail: Option<String>, witness: Option<Witness>) {
        self.records.push(CheckRecord {
            id: ax.id.to_string(),
            anchor: ax.anchor.to_string(),
            subject: subject.to_string(),
            status,
            detail,
            witness,
            millis: None,
        });
    }

    pub fn pass(&mut self, ax: Axiom, subject: &str) {
        self.record(ax, subject, Status::Pass, None, None);
    }

    pub fn pass_with(&mut self, ax: Axiom, subject: &str, detail: impl Into<String>) {
        self.record(ax, subject, Status::Pass, Some(detail.into()), None);
    }

    pub fn fail(&mut self, ax: Axiom, subject: &str, detail: impl Into<String>) {
        self.record(ax, subject, Status::Fail, Some(detail.into()), None);
    }

    pub fn fail_with<F: Field>(&mut self, ax: Axiom, subject: &str, detail: impl Into<String>, lhs: &Mat<F>, rhs: Option<&Mat<F>>) {
        let witness = Witness {
            lhs: grid(lhs),
            rhs: rhs.map(grid),
        };
        self.record(ax, subject, Status::Fail, Some(detail.into()), Some(witness));
    }

    pub fn not_verified(&mut self, ax: Axiom, subject: &str, detail: impl Into<String>) {
        self.record(ax, subject, Status::NotVerified, Some(detail.into()), None);
    }

    pub fn error(&mut self, ax: Axiom, subject: &str, detail: impl Into<String>) {
        self.record(ax, subject, Status::Error, Some(detail.into()), None);
    }

    /// pass/fail according to a boolean
    pub fn assert(&mut self, ax: Axiom, subject: &str, ok: bool, detail: impl Into<String>) {
        if ok {
            self.pass(ax, subject)
        } else {
            self.fail(ax, subject, detail)
        }
    }

    /// compare two matrices exactly
    pub fn equal<F: Field>(&mut self, ax: Axiom, subject: &str, lhs: &Mat<F>, rhs: &Mat<F>) -> bool {
        if lhs == rhs {
            self.pass(ax, subject);
            true
        } else if lhs.shape() != rhs.shape() {
            self.error(
                ax,
                subject,
                format!("sides have shapes {:?} and {:?}", lhs.shape(), rhs.shape()),
            );
            false
        } else {
            self.fail_with(ax, subject, "sides differ", lhs, Some(rhs));
            false
        }
    }

    /// evaluate both sides lazily; construction errors become `Error` records
    pub fn equal_with<F: Field>(&mut self, ax: Axiom, subject: &str, sides: impl FnOnce() -> Result<(Mat<F>, Mat<F>)>) -> bool {
        match sides() {
            Ok((l, r)) => self.equal(ax, subject, &l, &r),
            Err(e) => {
                self.error(ax, subject, e.to_string());
                false
            }
        }
    }

    /// records whose status is not `Pass`
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status != Status::Pass)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// ids with at least one non-passing record
    pub fn failed_ids(&self) -> BTreeSet<String> {
        self.failures().map(|r| r.id.clone()).collect()
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn passed(&self, id: &str) -> bool {
        let mut any = false;
        for r in self.records.iter().filter(|r| r.id == id) {
            if r.status != Status::Pass {
                return false;
            }
            any = true;
        }
        any
    }

    /// stable order: by id, then subject
    pub fn sort(&mut self) {
        self.records.sort_by(|a, b| (&a.id, &a.subject).cmp(&(&b.id, &b.subject)));
    }

    pub fn sorted(mut self) -> Self {
        self.sort();
        self
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::NotVerified => "not-verified",
                Status::Error => "ERROR",
            };
            write!(f, "{status:<12} {:<28} [{}] {}", r.id, r.anchor, r.subject)?;
            if let Some(d) = &r.detail {
                write!(f, " - {d}")?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "{} checks: {} pass, {} fail, {} not verified, {} error",
            self.records.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::NotVerified),
            self.count(Status::Error)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;

    const AX: Axiom = Axiom::new("t.ax", "AX");

    #[test]
    fn eq_records_witness() {
        let f = PrimeField::new(3).unwrap();
        let mut r = Report::new();
        assert!(r.equal(AX, "x", &Mat::identity(&f, 2), &Mat::identity(&f, 2)));
        assert!(!r.equal(AX, "y", &Mat::identity(&f, 2), &Mat::zeros(&f, 2, 2)));
        assert!(!r.equal(AX, "z", &Mat::identity(&f, 2), &Mat::zeros(&f, 1, 2)));
        assert_eq!(r.count(Status::Pass), 1);
        assert_eq!(r.count(Status::Fail), 1);
        assert_eq!(r.count(Status::Error), 1);
        let w = r.records[1].witness.as_ref().unwrap();
        assert_eq!(w.lhs[0][0], Entry::Int(1));
        assert!(!r.passed("t.ax"));
    }
}
