use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::dimsub::{Datum, Status, VerifyReport};
use crate::exactlinalg::{AbGroup, LatticeBasis};
use crate::freering::DivisorTuple;
use crate::functors::{FunctorValue, Gated};

pub const SCHEMA_VERSION: &str = "1.0.0";

pub fn int(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse().expect("decimal integers are valid JSON numbers"))
}

pub fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn group(g: &AbGroup) -> Value {
    ints(g.invariant_factors())
}

pub fn lattice(l: &LatticeBasis) -> Value {
    Value::Array(l.basis().iter().map(|r| ints(r)).collect())
}

pub fn divisors(e: &DivisorTuple) -> Value {
    ints(e.entries())
}

fn order(o: &Option<BigInt>) -> Value {
    o.as_ref().map_or(Value::Null, int)
}

pub fn datum(d: &Datum) -> Value {
    match d {
        Datum::Group(g) => json!({ "invariants": group(g) }),
        Datum::Lattice(l) => json!({ "basis": lattice(l) }),
        Datum::Order(o) => json!({ "order": order(o) }),
    }
}

pub fn functor_value(v: &FunctorValue) -> Value {
    match v {
        FunctorValue::Group(g) | FunctorValue::Gated(Gated::Exact(g)) => group(g),
        FunctorValue::Gated(Gated::Bounds(b)) => {
            let uncomputed: Vec<Value> = if b.triple_torsion_uncomputed {
                vec![Value::from("Tor1(A,A,Z/2)")]
            } else {
                Vec::new()
            };
            json!({
                "bounds": {
                    "sub": group(&b.sub),
                    "quo": group(&b.quo),
                    "order": order(&b.order),
                    "extension": b.extension(),
                    "uncomputed": uncomputed,
                }
            })
        }
    }
}

fn named(items: &[(String, Datum)]) -> Value {
    Value::Object(items.iter().map(|(k, d)| (k.clone(), datum(d))).collect::<Map<_, _>>())
}

pub fn witness(r: &VerifyReport) -> Value {
    match &r.witness {
        None => Value::Null,
        Some(w) => json!({ "check": w.check, "vector": ints(w.vector.coords()) }),
    }
}

fn hypothesis(s: &Status) -> Value {
    match s {
        Status::Skipped { hypothesis } => Value::from(hypothesis.as_str()),
        _ => Value::Null,
    }
}

pub fn verify_report(r: &VerifyReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "holds": c.holds }))
        .collect();
    json!({
        "theorem": r.theorem.as_str(),
        "divisors": divisors(&r.divisors),
        "status": r.status.as_str(),
        "hypothesis": hypothesis(&r.status),
        "computed": named(&r.computed),
        "claimed": named(&r.claimed),
        "checks": checks,
        "witness": witness(r),
    })
}

/// The compact per-entry form used by sweeps.
pub fn sweep_entry(r: &VerifyReport) -> Value {
    json!({
        "theorem": r.theorem.as_str(),
        "divisors": divisors(&r.divisors),
        "status": r.status.as_str(),
        "witness": witness(r),
    })
}

#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
pub struct Tally {
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
}

impl Tally {
    pub fn add(&mut self, s: &Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Skipped { .. } => self.skipped += 1,
        }
    }

    pub fn to_json(self) -> Value {
        json!({ "pass": self.pass, "fail": self.fail, "skipped": self.skipped })
    }
}

pub fn document(command: &str, invocation: Value, results: Vec<Value>, summary: Value) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "invocation": invocation,
        "results": results,
        "summary": summary,
    })
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn flat_array(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| is_scalar(x) || flat_array(x)),
        _ => false,
    }
}

fn compact(v: &Value, out: &mut String) {
    match v {
        Value::Array(a) => {
            out.push('[');
            for (i, x) in a.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                compact(x, out);
            }
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}

fn write_json(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    let close = "  ".repeat(indent);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::from(k.as_str()).to_string());
                out.push_str(": ");
                write_json(x, indent + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push('}');
        }
        Value::Array(a) if !a.is_empty() && !flat_array(v) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad);
                write_json(x, indent + 1, out);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push(']');
        }
        _ => compact(v, out),
    }
}

/// Canonical JSON: sorted keys, two-space indentation, integer arrays on one line.
pub fn to_canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_json(v, 0, &mut out);
    out.push('\n');
    out
}

fn inline_text(v: &Value, out: &mut String) {
    match v {
        Value::Null => out.push('-'),
        Value::String(s) => out.push_str(s),
        Value::Array(a) => {
            out.push('[');
            for (i, x) in a.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                inline_text(x, out);
            }
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}

fn write_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if is_scalar(x) || flat_array(x) || x.as_array().is_some_and(|a| a.is_empty()) {
                    out.push_str(&format!("{pad}{k}: "));
                    inline_text(x, out);
                    out.push('\n');
                } else if x.as_object().is_some_and(|o| o.is_empty()) {
                    out.push_str(&format!("{pad}{k}: {{}}\n"));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    write_text(x, indent + 1, out);
                }
            }
        }
        Value::Array(a) => {
            for x in a {
                if is_scalar(x) || flat_array(x) {
                    out.push_str(&format!("{pad}- "));
                    inline_text(x, out);
                    out.push('\n');
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    write_text(x, indent + 1, out);
                }
            }
        }
        _ => {
            out.push_str(&pad);
            inline_text(v, out);
            out.push('\n');
        }
    }
}

/// Plain-text rendering carrying the same content as the JSON document.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    write_text(v, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_layout() {
        let v = json!({ "b": [1, 2], "a": { "z": null, "y": [[1, 0], [0, 3]] }, "c": [] });
        assert_eq!(
            to_canonical_json(&v),
            "{\n  \"a\": {\n    \"y\": [[1,0],[0,3]],\n    \"z\": null\n  },\n  \"b\": [1,2],\n  \"c\": []\n}\n"
        );
    }

    #[test]
    fn big_integers_stay_exact() {
        let n: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int(&n).to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn text_mirrors_json() {
        let v = json!({ "results": [{ "L1SP3": [3, 3], "ok": true }], "n": 2 });
        assert_eq!(to_text(&v), "n: 2\nresults:\n  -\n    L1SP3: [3, 3]\n    ok: true\n");
    }
}
