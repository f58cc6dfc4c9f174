//! Text and JSON-lines rendering of check outcomes and sweep reports.
//!
//! JSON keeps every big integer as a decimal string. A sweep renders as one
//! case object per line followed by a summary object.

use serde::Serialize;
use serde_json::Value;

use crate::identities::{CaseParams, CheckOutcome, IdentityId, SweepReport};
use crate::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

#[derive(Serialize)]
struct RationalJson {
    num: String,
    den: String,
}

#[derive(Serialize)]
struct ParamsJson {
    m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<i64>,
}

#[derive(Serialize)]
struct CaseJson<'a> {
    identity: &'a str,
    params: ParamsJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<RationalJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<RationalJson>,
    status: &'a str,
    note: &'a str,
}

#[derive(Serialize)]
struct SummaryJson<'a> {
    identity: &'a str,
    pass: usize,
    fail: usize,
    skip: usize,
}

fn rational_repr(r: &BigRational) -> RationalJson {
    RationalJson {
        num: r.numer().to_string(),
        den: r.denom().to_string(),
    }
}

pub fn rational_json(r: &BigRational) -> Value {
    serde_json::to_value(rational_repr(r)).expect("plain struct")
}

fn side(r: &Option<BigRational>) -> String {
    r.as_ref()
        .map_or_else(|| "undefined".to_string(), ToString::to_string)
}

pub fn case_text(id: IdentityId, p: &CaseParams, o: &CheckOutcome) -> String {
    let mut line = format!(
        "{id} {p}: {} lhs={} rhs={}",
        o.status,
        side(&o.lhs),
        side(&o.rhs)
    );
    if !o.note.is_empty() {
        line.push_str(&format!(" ({})", o.note));
    }
    line
}

pub fn case_json(id: IdentityId, p: &CaseParams, o: &CheckOutcome) -> String {
    let record = CaseJson {
        identity: id.tag(),
        params: ParamsJson { m: p.m, k: p.k },
        lhs: o.lhs.as_ref().map(rational_repr),
        rhs: o.rhs.as_ref().map(rational_repr),
        status: o.status.as_str(),
        note: &o.note,
    };
    serde_json::to_string(&record).expect("plain struct")
}

pub fn case_line(mode: OutputMode, id: IdentityId, p: &CaseParams, o: &CheckOutcome) -> String {
    match mode {
        OutputMode::Text => case_text(id, p, o),
        OutputMode::Json => case_json(id, p, o),
    }
}

pub fn summary_line(mode: OutputMode, report: &SweepReport) -> String {
    let c = report.counts;
    match mode {
        OutputMode::Text => format!(
            "{} pass={} fail={} skip={}",
            report.identity, c.pass, c.fail, c.skip
        ),
        OutputMode::Json => serde_json::to_string(&SummaryJson {
            identity: report.identity.tag(),
            pass: c.pass,
            fail: c.fail,
            skip: c.skip,
        })
        .expect("plain struct"),
    }
}

/// Full report, one line per case and the summary last, newline-terminated.
pub fn render_sweep(mode: OutputMode, report: &SweepReport) -> String {
    let mut out = String::new();
    for (p, o) in &report.cases {
        out.push_str(&case_line(mode, report.identity, p, o));
        out.push('\n');
    }
    out.push_str(&summary_line(mode, report));
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{check, sweep};

    #[test]
    fn json_case_schema() {
        let p = CaseParams::mk(2, -4);
        let o = check(IdentityId::Thm1Gibonacci, &p).unwrap();
        let v: Value = serde_json::from_str(&case_json(IdentityId::Thm1Gibonacci, &p, &o)).unwrap();
        assert_eq!(v["identity"], "THM1_GIBONACCI");
        assert_eq!(v["params"]["m"], 2);
        assert_eq!(v["params"]["k"], -4);
        assert_eq!(v["lhs"]["num"], "81");
        assert_eq!(v["rhs"]["den"], "19");
        assert_eq!(v["status"], "PASS");
        assert_eq!(v["note"], "");
    }

    #[test]
    fn undefined_sides_are_omitted() {
        let p = CaseParams::mk(1, 0);
        let o = check(IdentityId::Thm3Ones, &p).unwrap();
        let v: Value = serde_json::from_str(&case_json(IdentityId::Thm3Ones, &p, &o)).unwrap();
        assert!(v.get("lhs").is_none() && v.get("rhs").is_none());
        assert_eq!(v["status"], "SKIPPED");
        assert_eq!(
            case_text(IdentityId::Thm3Ones, &p, &o),
            "THM3_ONES m=1 k=0: SKIPPED lhs=undefined rhs=undefined (both sides undefined)"
        );
    }

    #[test]
    fn params_without_k() {
        let p = CaseParams::m(3);
        let o = check(IdentityId::Id117, &p).unwrap();
        let v: Value = serde_json::from_str(&case_json(IdentityId::Id117, &p, &o)).unwrap();
        assert!(v["params"].get("k").is_none());
    }

    #[test]
    fn sweep_rendering_ends_with_summary() {
        let r = sweep(IdentityId::Id117, 0..=2, None).unwrap();
        let text = render_sweep(OutputMode::Text, &r);
        assert_eq!(text.lines().last(), Some("ID117 pass=3 fail=0 skip=0"));
        let json = render_sweep(OutputMode::Json, &r);
        let last: Value = serde_json::from_str(json.lines().last().unwrap()).unwrap();
        assert_eq!(last["pass"], 3);
        assert_eq!(json.lines().count(), 4);
    }
}
