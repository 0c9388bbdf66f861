//! Output shaping for the CLI: aligned plain text, CSV with proper
//! quoting, JSON envelopes carrying a `kind` discriminator, and DOT
//! export of tiling posets. Every JSON value built here is meant to
//! validate against the schema shipped in `schemas/output.schema.json`;
//! the integration tests hold that promise.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::homology::{AlternatingSumReport, TilingPoset};
use crate::tiling::BrickSet;
use crate::verify::{tally, VerificationReport};

/// Output format selected per run. Plain is for eyes, the other two
/// for machines; all three are byte-stable for identical inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
}

impl OutputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Parse(format!(
                "unknown format {other:?}, expected plain, json, or csv"
            ))),
        }
    }
}

/// Quotes a CSV field when it contains a delimiter, quote, or line
/// break; passes it through bare otherwise.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A titled grid of strings. Most commands reduce to one of these:
/// character tables, Kostka matrices, tiling-count listings, stable
/// coefficient tables.
#[derive(Debug, Clone)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, headers: Vec<String>) -> Self {
        Self { title: title.into(), headers, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Plain => self.render_plain(),
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Json => pretty(&self.to_json()),
        }
    }

    fn render_plain(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(String::len).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        if !self.title.is_empty() {
            out.push_str(&self.title);
            out.push('\n');
        }
        let fmt_row = |cells: &[String]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        out.push_str(&fmt_row(&self.headers));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&fmt_row(row));
            out.push('\n');
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        let push_row = |out: &mut String, cells: &[String]| {
            let quoted: Vec<String> = cells.iter().map(|c| csv_field(c)).collect();
            out.push_str(&quoted.join(","));
            out.push('\n');
        };
        push_row(&mut out, &self.headers);
        for row in &self.rows {
            push_row(&mut out, row);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": "table",
            "title": self.title,
            "headers": self.headers,
            "rows": self.rows,
        })
    }
}

/// Serializes with 2-space indentation and a trailing newline, the one
/// JSON layout every command emits.
pub fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

/// JSON form of the alternating-sum report. `dims` holds the homology
/// dimensions; the chain dimensions ride along as `chain_dims`.
pub fn homology_json(rep: &AlternatingSumReport) -> Value {
    json!({
        "kind": "homology",
        "n": rep.n,
        "j": rep.j,
        "dims": rep.homology,
        "chain_dims": rep.dims,
        "euler": rep.euler,
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "homology_sum": rep.homology_sum,
        "all_equal": rep.all_equal,
    })
}

/// Homology report as aligned key: value lines.
pub fn homology_plain(rep: &AlternatingSumReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("n: {}\nj: {}\n", rep.n, rep.j));
    out.push_str(&format!("chain dims: {:?}\n", rep.dims));
    out.push_str(&format!("homology dims: {:?}\n", rep.homology));
    out.push_str(&format!(
        "lhs: {}\nrhs: {}\neuler: {}\nhomology sum: {}\nall equal: {}\n",
        rep.lhs, rep.rhs, rep.euler, rep.homology_sum, rep.all_equal
    ));
    out
}

/// Homology report as key,value CSV rows; list values are joined with
/// spaces to keep each row two fields wide.
pub fn homology_csv(rep: &AlternatingSumReport) -> String {
    let join = |v: &[usize]| {
        v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
    };
    let mut out = String::from("key,value\n");
    out.push_str(&format!("n,{}\n", rep.n));
    out.push_str(&format!("j,{}\n", rep.j));
    out.push_str(&format!("chain_dims,{}\n", join(&rep.dims)));
    out.push_str(&format!("dims,{}\n", join(&rep.homology)));
    out.push_str(&format!("euler,{}\n", rep.euler));
    out.push_str(&format!("lhs,{}\n", rep.lhs));
    out.push_str(&format!("rhs,{}\n", rep.rhs));
    out.push_str(&format!("homology_sum,{}\n", rep.homology_sum));
    out.push_str(&format!("all_equal,{}\n", rep.all_equal));
    out
}

fn brick_string(bs: &BrickSet, idx: u8) -> String {
    let labels: Vec<String> =
        bs.brick(idx).labels().iter().map(|x| x.to_string()).collect();
    format!("({})", labels.join(","))
}

fn rows_string(bs: &BrickSet, rows: &[Vec<u8>]) -> String {
    let rendered: Vec<String> = rows
        .iter()
        .map(|row| row.iter().map(|&b| brick_string(bs, b)).collect::<String>())
        .collect();
    rendered.join(" | ")
}

/// The tiling poset as DOT graph text, ranks drawn bottom-up with one
/// subgraph per rank. Node ids follow the poset's canonical order, so
/// the output is byte-stable.
pub fn poset_dot(p: &TilingPoset, bs: &BrickSet) -> String {
    let mut out = String::new();
    out.push_str("digraph tiling_poset {\n");
    out.push_str("  rankdir=BT;\n  node [shape=box, fontsize=10];\n");
    for rank in 0..p.j() as usize {
        let range = p.rank_range(rank);
        if range.is_empty() {
            continue;
        }
        out.push_str(&format!("  {{ rank=same; // rank {rank}\n"));
        for idx in range {
            let node = &p.nodes()[idx];
            let label = rows_string(bs, &node.rows).replace('"', "\\\"");
            out.push_str(&format!("    n{idx} [label=\"{label}\"];\n"));
        }
        out.push_str("  }\n");
    }
    for &(upper, lower) in p.covers() {
        out.push_str(&format!("  n{lower} -> n{upper};\n"));
    }
    out.push_str("}\n");
    out
}

/// The tiling poset as JSON: nodes carry rank, shape, and rows (brick
/// index lists); edges are [lower, upper] pairs of node ids, the lower
/// node being the upper with one row split in two.
pub fn poset_json(p: &TilingPoset, bs: &BrickSet) -> Value {
    let nodes: Vec<Value> = p
        .nodes()
        .iter()
        .enumerate()
        .map(|(idx, node)| {
            json!({
                "id": idx,
                "rank": node.rank,
                "shape": node.shape,
                "rows": node.rows,
                "rendered": rows_string(bs, &node.rows),
            })
        })
        .collect();
    let edges: Vec<Value> = p.covers().iter().map(|&(upper, lower)| json!([lower, upper])).collect();
    json!({
        "kind": "poset",
        "n": bs.shape().weight(),
        "j": p.j(),
        "nodes": nodes,
        "edges": edges,
    })
}

/// One verification line per report: a pass/fail marker, the identity,
/// the instance, and the failure detail when there is one.
pub fn verification_plain(suite: &str, reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let marker = if r.pass { "pass" } else { "FAIL" };
        out.push_str(&format!("{marker}  {}  {}", r.identity, r.instance));
        if let Some(detail) = &r.detail {
            out.push_str(&format!("  [{detail}]"));
        }
        out.push('\n');
    }
    let (passed, failed) = tally(reports);
    out.push_str(&format!("suite {suite}: {passed} passed, {failed} failed\n"));
    out
}

pub fn verification_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("status,identity,instance,detail\n");
    for r in reports {
        let status = if r.pass { "pass" } else { "fail" };
        out.push_str(&format!(
            "{status},{},{},{}\n",
            csv_field(&r.identity),
            csv_field(&r.instance),
            csv_field(r.detail.as_deref().unwrap_or(""))
        ));
    }
    out
}

pub fn verification_json(suite: &str, reports: &[VerificationReport]) -> Value {
    let (passed, failed) = tally(reports);
    let entries: Vec<Value> = reports
        .iter()
        .map(|r| {
            let mut obj = json!({
                "identity": r.identity,
                "instance": r.instance,
                "status": if r.pass { "pass" } else { "fail" },
            });
            if let Some(detail) = &r.detail {
                obj["detail"] = Value::String(detail.clone());
            }
            obj
        })
        .collect();
    json!({
        "kind": "verification",
        "suite": suite,
        "passed": passed,
        "failed": failed,
        "reports": entries,
    })
}

/// A polynomial in the cycle-count variables, as JSON. Terms carry the
/// exponent-or-binomial key vector and the coefficient as a string, so
/// no precision is lost on big rationals.
pub fn polynomial_json(
    family: &str,
    k: usize,
    basis: &str,
    rendered: &str,
    terms: Vec<(Vec<u16>, String)>,
) -> Value {
    let term_objs: Vec<Value> = terms
        .into_iter()
        .map(|(key, coeff)| json!({ "key": key, "coeff": coeff }))
        .collect();
    json!({
        "kind": "polynomial",
        "family": family,
        "k": k,
        "basis": basis,
        "rendered": rendered,
        "terms": term_objs,
    })
}

/// A truncated series as an array of degree/value coefficient objects.
pub fn series_json(name: &str, coefficients: Vec<(usize, String)>) -> Value {
    let entries: Vec<Value> = coefficients
        .into_iter()
        .map(|(degree, value)| json!({ "degree": degree, "value": value }))
        .collect();
    json!({
        "kind": "series",
        "name": name,
        "coefficients": entries,
    })
}

/// Tiling listings with their three counts.
pub struct TilingListing {
    pub n: u32,
    pub shape: Vec<u32>,
    pub perm: String,
    pub ordered: Vec<String>,
    pub unordered: Vec<String>,
    pub crackless: Vec<String>,
    pub zeta: u64,
    pub xi: u64,
    pub eta: u64,
}

pub fn tilings_plain(t: &TilingListing) -> String {
    let mut out = String::new();
    let shape: Vec<String> = t.shape.iter().map(|p| p.to_string()).collect();
    out.push_str(&format!("shape ({}) tiled by {}\n", shape.join(","), t.perm));
    out.push_str(&format!("ordered (zeta = {}):\n", t.zeta));
    for s in &t.ordered {
        out.push_str(&format!("  {s}\n"));
    }
    out.push_str(&format!("unordered (xi = {}):\n", t.xi));
    for s in &t.unordered {
        out.push_str(&format!("  {s}\n"));
    }
    out.push_str(&format!("crackless (eta = {}):\n", t.eta));
    for s in &t.crackless {
        out.push_str(&format!("  {s}\n"));
    }
    out
}

pub fn tilings_csv(t: &TilingListing) -> String {
    let mut out = String::from("class,index,tiling\n");
    for (kind, list) in [
        ("ordered", &t.ordered),
        ("unordered", &t.unordered),
        ("crackless", &t.crackless),
    ] {
        for (i, s) in list.iter().enumerate() {
            out.push_str(&format!("{kind},{i},{}\n", csv_field(s)));
        }
    }
    out.push_str(&format!("zeta,,{}\nxi,,{}\neta,,{}\n", t.zeta, t.xi, t.eta));
    out
}

pub fn tilings_json(t: &TilingListing) -> Value {
    json!({
        "kind": "tilings",
        "n": t.n,
        "shape": t.shape,
        "perm": t.perm,
        "ordered": t.ordered,
        "unordered": t.unordered,
        "crackless": t.crackless,
        "counts": { "zeta": t.zeta, "xi": t.xi, "eta": t.eta },
    })
}
