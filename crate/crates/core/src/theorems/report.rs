use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "strict")]
    Strict,
    #[serde(rename = "equality-certified")]
    EqualityCertified,
    #[serde(rename = "violated")]
    Violated,
    #[serde(rename = "not-applicable")]
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Strict => "strict",
            Verdict::EqualityCertified => "equality-certified",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "not-applicable",
        }
    }

    pub const ALL: [Verdict; 4] =
        [Verdict::Strict, Verdict::EqualityCertified, Verdict::Violated, Verdict::NotApplicable];
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Direction of the inequality `lhs ? rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "<")]
    Below,
    #[serde(rename = ">")]
    Above,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
            Relation::Below => "<",
            Relation::Above => ">",
        }
    }

    /// Whether equality satisfies the relation.
    pub fn admits_equality(self) -> bool {
        matches!(self, Relation::AtMost | Relation::AtLeast)
    }

    /// Whether `lhs - rhs` having sign `sign` (-1, 0, 1) is allowed.
    pub fn allows(self, sign: i32) -> bool {
        match self {
            Relation::AtMost => sign <= 0,
            Relation::AtLeast => sign >= 0,
            Relation::Below => sign < 0,
            Relation::Above => sign > 0,
        }
    }
}

/// Names the extremal graph a report matched, with a vertex bijection
/// (`witness[v]` is the image of vertex `v`) onto the constructed member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalCertificate {
    pub family: String,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub graph6: String,
    pub bound: String,
    pub relation: Relation,
    pub lhs: f64,
    pub lhs_exact: Option<String>,
    pub rhs: String,
    pub rhs_value: f64,
    pub verdict: Verdict,
    pub certified: bool,
    pub family: Option<ExtremalCertificate>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn not_applicable(graph6: String, bound: &str, relation: Relation, reason: impl Into<String>) -> Self {
        BoundReport {
            graph6,
            bound: bound.to_string(),
            relation,
            lhs: f64::NAN,
            lhs_exact: None,
            rhs: String::new(),
            rhs_value: f64::NAN,
            verdict: Verdict::NotApplicable,
            certified: false,
            family: None,
            notes: vec![reason.into()],
        }
    }

    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Violated
    }

    pub fn family_name(&self) -> &str {
        self.family.as_ref().map_or("", |c| c.family.as_str())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn text_line(&self) -> String {
        let mut s = format!("{}\t{}\t", self.graph6, self.bound);
        if self.verdict == Verdict::NotApplicable {
            s.push_str("not-applicable");
        } else {
            s.push_str(&format!("{:.9} {} {}\t{}", self.lhs, self.relation.symbol(), self.rhs, self.verdict));
        }
        if let Some(c) = &self.family {
            s.push_str(&format!("\t{}", c.family));
        }
        for note in &self.notes {
            s.push_str(&format!("\t# {note}"));
        }
        s
    }
}

/// Column layout of CSV report output.
pub const CSV_HEADER: [&str; 6] = ["graph6", "bound", "lhs", "rhs", "verdict", "family"];

pub fn write_json_lines<W: Write>(out: W, reports: &[BoundReport]) -> Result<()> {
    let mut out = out;
    for r in reports {
        writeln!(out, "{}", r.to_json()).map_err(io_err)?;
    }
    Ok(())
}

pub fn write_csv<W: Write>(out: W, reports: &[BoundReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in reports {
        let lhs = if r.lhs.is_nan() { String::new() } else { format!("{:.12}", r.lhs) };
        w.write_record([r.graph6.as_str(), &r.bound, &lhs, &r.rhs, r.verdict.as_str(), r.family_name()])
            .map_err(csv_err)?;
    }
    w.flush().map_err(io_err)
}

fn io_err(e: std::io::Error) -> Error {
    Error::Unsupported(format!("output failed: {e}"))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Unsupported(format!("csv output failed: {e}"))
}
