//! Text and JSON renderings of polynomials and verification reports.
//!
//! Polynomials in JSON are embedded verbatim in the `[1,0,1]` array format,
//! so arbitrarily large coefficients never pass through a float.

use std::fmt::Write as _;

use qfib_core::{ClaimId, Failure, IntPoly, Params, Value};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::engine::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    /// Human-readable, e.g. `1 + q^2`.
    #[default]
    Pretty,
    /// Compact and byte-deterministic, e.g. `[1,0,1]`.
    Coeffs,
    /// Indented JSON; reports carry `elapsed_ms`.
    Json,
}

fn raw(text: String) -> Box<RawValue> {
    RawValue::from_string(text).expect("serialized values are valid JSON")
}

fn raw_value(v: &Value) -> Box<RawValue> {
    match v {
        Value::Poly(p) => raw(p.serialize()),
        Value::Int(i) => raw(i.to_string()),
        Value::Bool(b) => raw(b.to_string()),
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Poly(p) => p.to_string(),
        Value::Int(i) => i.to_string(),
        Value::Bool(b) => b.to_string(),
    }
}

struct ParamsJson<'a>(&'a Params);

impl Serialize for ParamsJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries = self.0.entries();
        let mut map = s.serialize_map(Some(entries.len()))?;
        for (k, v) in entries {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct FailureJson<'a> {
    params: ParamsJson<'a>,
    check: &'a str,
    expected: Box<RawValue>,
    actual: Box<RawValue>,
    rerun: String,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    claim: &'a str,
    range: &'a str,
    bound: u64,
    instances_checked: usize,
    failures: Vec<FailureJson<'a>>,
    status: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    notes: &'a [&'static str],
}

/// Command line that re-checks exactly this instance.
pub fn rerun_command(claim: ClaimId, failure: &Failure) -> String {
    format!("qfib verify {claim} --instance {}", failure.params)
}

fn report_json(r: &VerificationReport, timing: bool) -> ReportJson<'_> {
    let claim = r.outcome.claim;
    ReportJson {
        claim: claim.name(),
        range: &r.outcome.range,
        bound: r.bound,
        instances_checked: r.outcome.instances_checked,
        failures: r
            .outcome
            .failures
            .iter()
            .map(|f| FailureJson {
                params: ParamsJson(&f.params),
                check: f.check,
                expected: raw_value(&f.expected),
                actual: raw_value(&f.actual),
                rerun: rerun_command(claim, f),
            })
            .collect(),
        status: r.outcome.status.as_str(),
        elapsed_ms: timing.then(|| r.elapsed.as_millis().try_into().unwrap_or(u64::MAX)),
        notes: &r.notes,
    }
}

fn pretty_report(r: &VerificationReport, out: &mut String) {
    let o = &r.outcome;
    let _ = writeln!(
        out,
        "{:<13} {:<15} {:>6} instances  {:>3} failures  {:>8.2}s  {}",
        o.claim.name(),
        o.status.as_str(),
        o.instances_checked,
        o.failures.len(),
        r.elapsed.as_secs_f64(),
        o.range
    );
    for note in &r.notes {
        let _ = writeln!(out, "    note: {note}");
    }
    for f in &o.failures {
        let _ = writeln!(out, "    FAIL {} [{}]", f.params, f.check);
        let _ = writeln!(out, "      expected: {}", value_text(&f.expected));
        let _ = writeln!(out, "      actual:   {}", value_text(&f.actual));
        let _ = writeln!(out, "      rerun:    {}", rerun_command(o.claim, f));
    }
}

/// Renders one report. `coeffs` is compact JSON without timing, so it is
/// byte-identical across runs and thread counts.
pub fn render_report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Pretty => {
            let mut s = String::new();
            pretty_report(r, &mut s);
            s
        }
        Format::Coeffs => {
            serde_json::to_string(&report_json(r, false)).expect("report serializes") + "\n"
        }
        Format::Json => {
            serde_json::to_string_pretty(&report_json(r, true)).expect("report serializes") + "\n"
        }
    }
}

/// Renders a batch: one line per claim in `pretty`, a JSON array otherwise.
pub fn render_reports(rs: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Pretty => {
            let mut s = String::new();
            for r in rs {
                pretty_report(r, &mut s);
            }
            let failed = rs.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(s, "{} claims, {} with counterexamples", rs.len(), failed);
            s
        }
        Format::Coeffs => {
            let all: Vec<_> = rs.iter().map(|r| report_json(r, false)).collect();
            serde_json::to_string(&all).expect("report serializes") + "\n"
        }
        Format::Json => {
            let all: Vec<_> = rs.iter().map(|r| report_json(r, true)).collect();
            serde_json::to_string_pretty(&all).expect("report serializes") + "\n"
        }
    }
}

/// Renders a polynomial; `json` wraps it with the given labels.
pub fn render_poly(p: &IntPoly, format: Format, labels: &[(&str, String)]) -> String {
    match format {
        Format::Pretty => format!("{p}\n"),
        Format::Coeffs => p.serialize() + "\n",
        Format::Json => {
            let mut s = String::from("{");
            for (k, v) in labels {
                let _ = write!(s, "{}:{},", serde_json::to_string(k).unwrap(), v);
            }
            let _ = write!(s, "\"coeffs\":{}}}", p.serialize());
            s + "\n"
        }
    }
}

/// Renders a set of indices, e.g. a cyclotomic spectrum.
pub fn render_indices(ds: &[usize], format: Format, labels: &[(&str, String)]) -> String {
    let list = serde_json::to_string(ds).expect("indices serialize");
    match format {
        Format::Pretty => {
            let items: Vec<String> = ds.iter().map(ToString::to_string).collect();
            format!("{{{}}}\n", items.join(", "))
        }
        Format::Coeffs => list + "\n",
        Format::Json => {
            let mut s = String::from("{");
            for (k, v) in labels {
                let _ = write!(s, "{}:{},", serde_json::to_string(k).unwrap(), v);
            }
            let _ = write!(s, "\"divisors\":{list}}}");
            s + "\n"
        }
    }
}
