//! Suite reports.
//!
//! The machine format is a JSON array with one object per step:
//!
//! ```json
//! [
//!   {
//!     "check": "check_averaging",
//!     "args": ["UT2", "Z"],
//!     "tag": "averaging operator",
//!     "status": "fail",
//!     "witness": {
//!       "part": "averaging",
//!       "identity": "absorb_left",
//!       "indices": ["2", "2"],
//!       "lhs": ["-1/1", "0/1", "0/1"],
//!       "rhs": ["0/1", "0/1", "0/1"]
//!     }
//!   }
//! ]
//! ```
//!
//! Only strings, arrays and objects appear. Indices are 1-based. `output` is
//! present for constructions, `message` for failures that are not identity
//! violations and for skipped steps.

use std::fmt::Write as _;

use plab_core::{CheckReport, Error};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecordWitness {
    /// Slash-separated path of the sub-report holding the violation.
    pub part: String,
    pub identity: String,
    pub indices: Vec<String>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    pub check: String,
    pub args: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
    pub tag: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<RecordWitness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl Record {
    pub(crate) fn set_report(&mut self, report: &CheckReport) {
        if report.passed {
            self.status = Status::Pass;
            return;
        }
        self.status = Status::Fail;
        self.witness = Some(first_witness(report, "").unwrap_or_else(|| RecordWitness {
            part: report.name.clone(),
            identity: report.name.clone(),
            indices: Vec::new(),
            lhs: Vec::new(),
            rhs: Vec::new(),
        }));
    }

    /// A failure without a two-sided violation, e.g. a precondition that
    /// does not hold. The witness names the error kind.
    pub(crate) fn set_error(&mut self, e: &Error) {
        self.status = Status::Fail;
        self.witness = Some(RecordWitness {
            part: String::new(),
            identity: error_kind(e).to_string(),
            indices: Vec::new(),
            lhs: Vec::new(),
            rhs: Vec::new(),
        });
        self.message = Some(e.to_string());
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch(_) => "dimension_mismatch",
        Error::Kind(_) => "kind",
        Error::SearchSpaceTooLarge { .. } => "search_space_too_large",
        Error::SingularForm => "singular_form",
        Error::ZeroWeight => "zero_weight",
        Error::PreconditionFailed(_) => "precondition_failed",
        Error::NotBalanced => "not_balanced",
        Error::Partition(_) => "partition",
        Error::Parse { .. } => "parse",
        Error::UnknownObject(_) => "unknown_object",
        Error::UnknownCheck(_) => "unknown_check",
    }
}

/// Depth-first search for the first recorded violation, keeping the path.
fn first_witness(r: &CheckReport, prefix: &str) -> Option<RecordWitness> {
    let path = if prefix.is_empty() {
        r.name.clone()
    } else {
        format!("{prefix}/{}", r.name)
    };
    if let Some(w) = r.failures.first() {
        return Some(RecordWitness {
            part: path,
            identity: w.identity.clone(),
            indices: w.indices.iter().map(|i| (i + 1).to_string()).collect(),
            lhs: w.lhs.clone(),
            rhs: w.rhs.clone(),
        });
    }
    r.parts
        .iter()
        .filter(|p| !p.passed)
        .find_map(|p| first_witness(p, &path))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub records: Vec<Record>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("records serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let mut line = format!("{} {}", r.status.label(), r.check);
            for a in &r.args {
                line.push(' ');
                line.push_str(a);
            }
            if let Some(o) = &r.output {
                let _ = write!(line, " as {o}");
            }
            let _ = write!(line, "  [{}]", r.tag);
            if let Some(w) = &r.witness {
                if !w.indices.is_empty() || !w.lhs.is_empty() {
                    let _ = write!(
                        line,
                        "  {} in {} at ({}): lhs [{}] rhs [{}]",
                        w.identity,
                        w.part,
                        w.indices.join(","),
                        w.lhs.join(", "),
                        w.rhs.join(", ")
                    );
                } else if r.message.is_none() {
                    let _ = write!(line, "  {} in {}", w.identity, w.part);
                }
            }
            if let Some(m) = &r.message {
                let _ = write!(line, "  {m}");
            }
            out.push_str(&line);
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} step{}: {} passed, {} failed, {} skipped",
            self.records.len(),
            if self.records.len() == 1 { "" } else { "s" },
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skipped)
        );
        out
    }
}
