//! The `gdslab` command line: functor tables, dimension subgroups, word
//! membership, theorem verification and sweeps.
//!
//! Exit codes: 0 success with no failed check, 1 some check failed, 2 usage or
//! input error, 3 containment violation or internal error.

pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::dimsub::{lattice_quotient, DimensionSolver, TheoremId, Verifier, VerifyReport};
use crate::error::{Error, Result};
use crate::freering::{membership, DivisorTuple, GroupWord, IdealExpr, MAX_RANK};
use crate::functors::{derived_table, functor_on_free, FunctorTag};
use crate::nilpotent::{FreeNilpotent, SubgroupSpec};
use report::Tally;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Default cap on sweep ranks, overridable through `GDSLAB_MAX_RANK`.
pub const DEFAULT_RANK_CAP: usize = 3;

#[derive(Parser, Debug)]
#[command(
    name = "gdslab",
    version,
    about = "Compute D(n, a) lattices in truncated free group rings, derived functors of finite abelian groups, and the checkers relating them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct DivisorArgs {
    /// Divisor chain e1,...,em with each entry dividing the previous one (0 stands for Z)
    #[arg(long, value_name = "E1,E2,...")]
    divisors: String,
    /// Sort the entries into chain order before validating
    #[arg(long)]
    canonicalize: bool,
}

impl DivisorArgs {
    fn tuple(&self) -> Result<DivisorTuple> {
        let entries = DivisorTuple::parse_entries(&self.divisors)?;
        if self.canonicalize {
            DivisorTuple::canonicalize(entries)
        } else {
            DivisorTuple::new(entries)
        }
    }
}

#[derive(Args, Debug)]
struct Format {
    /// Emit canonical JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Functor table for A = Z/e1 + ... + Z/em
    Functors {
        #[command(flatten)]
        div: DivisorArgs,
        #[command(flatten)]
        fmt: Format,
    },
    /// Lattice of D(n, a) modulo gamma_n, optionally divided by a denominator subgroup
    Dimsub {
        #[command(flatten)]
        div: DivisorArgs,
        /// Ideal expression, e.g. "f*r*f" or "r*r*f + r*f*r"
        #[arg(long)]
        ideal: String,
        /// Truncation level n (3 or 4)
        #[arg(long)]
        level: usize,
        /// Denominator subgroup tag, e.g. RRF.g4
        #[arg(long = "mod", value_name = "TAG")]
        denom: Option<String>,
        /// Extra normal generators of the denominator (words in gamma_2)
        #[arg(long = "extra", value_name = "WORD")]
        extra: Vec<String>,
        #[command(flatten)]
        fmt: Format,
    },
    /// Whether a word lies in 1 + a + f^n
    Member {
        #[command(flatten)]
        div: DivisorArgs,
        #[arg(long)]
        word: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        level: usize,
        #[command(flatten)]
        fmt: Format,
    },
    /// Run theorem checkers on one divisor chain
    Verify {
        /// Theorem ids (comma separated) or "all"
        #[arg(long = "theorem", value_delimiter = ',', required = true)]
        theorems: Vec<String>,
        #[command(flatten)]
        div: DivisorArgs,
        #[command(flatten)]
        fmt: Format,
    },
    /// Run checkers over every divisor chain drawn from a pool
    Sweep {
        /// Candidate divisors, comma separated
        #[arg(long, value_name = "D1,D2,...")]
        pool: String,
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        max_rank: usize,
        /// Theorem ids (comma separated) or "all"
        #[arg(long = "theorem", value_delimiter = ',', default_value = "all")]
        theorems: Vec<String>,
        #[command(flatten)]
        fmt: Format,
    },
}

/// Process exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DenominatorNotContained { .. } | Error::NotSublattice { .. } | Error::Internal(_) => {
            EXIT_INTERNAL
        }
        _ => EXIT_USAGE,
    }
}

struct Outcome {
    doc: Value,
    json: bool,
    code: i32,
}

/// Runs the CLI on `args` (including the program name), writing to `out` and `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{text}");
            return EXIT_OK;
        }
    };
    let cap = std::env::var("GDSLAB_MAX_RANK").ok();
    match dispatch(cli.command, cap.as_deref(), err) {
        Ok(o) => {
            let text = if o.json {
                report::to_canonical_json(&o.doc)
            } else {
                report::to_text(&o.doc)
            };
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_INTERNAL;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cmd: Command, cap: Option<&str>, err: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::Functors { div, fmt } => {
            let e = div.tuple()?;
            Ok(Outcome {
                doc: cmd_functors(&e),
                json: fmt.json,
                code: EXIT_OK,
            })
        }
        Command::Dimsub {
            div,
            ideal,
            level,
            denom,
            extra,
            fmt,
        } => {
            let e = div.tuple()?;
            let expr = IdealExpr::parse(&ideal)?;
            let spec = match denom {
                None => None,
                Some(tag) => {
                    let words = extra
                        .iter()
                        .map(|w| GroupWord::parse(w))
                        .collect::<Result<Vec<_>>>()?;
                    Some(SubgroupSpec::with_extra(tag.parse()?, words))
                }
            };
            if spec.is_none() && !extra.is_empty() {
                return Err(Error::Parse {
                    offset: 0,
                    message: "--extra requires --mod".into(),
                });
            }
            Ok(Outcome {
                doc: cmd_dimsub(&e, &expr, level, spec.as_ref())?,
                json: fmt.json,
                code: EXIT_OK,
            })
        }
        Command::Member {
            div,
            word,
            ideal,
            level,
            fmt,
        } => {
            let e = div.tuple()?;
            let w = GroupWord::parse(&word)?;
            let expr = IdealExpr::parse(&ideal)?;
            Ok(Outcome {
                doc: cmd_member(&e, &w, &expr, level)?,
                json: fmt.json,
                code: EXIT_OK,
            })
        }
        Command::Verify { theorems, div, fmt } => {
            let ids = parse_theorems(&theorems)?;
            let e = div.tuple()?;
            let (doc, failed) = cmd_verify(&ids, &e)?;
            Ok(Outcome {
                doc,
                json: fmt.json,
                code: if failed { EXIT_FAIL } else { EXIT_OK },
            })
        }
        Command::Sweep {
            pool,
            max_rank,
            theorems,
            fmt,
        } => {
            let ids = parse_theorems(&theorems)?;
            let pool = DivisorTuple::parse_entries(&pool)?;
            let cap = rank_cap(cap)?;
            if max_rank == 0 || max_rank > cap {
                return Err(Error::RankOutOfRange(max_rank));
            }
            if max_rank > DEFAULT_RANK_CAP {
                let _ = writeln!(err, "warning: sweeping up to rank {max_rank} may take a long time");
            }
            let (doc, failed) = cmd_sweep(&pool, max_rank, &ids)?;
            Ok(Outcome {
                doc,
                json: fmt.json,
                code: if failed { EXIT_FAIL } else { EXIT_OK },
            })
        }
    }
}

fn rank_cap(env: Option<&str>) -> Result<usize> {
    match env {
        None => Ok(DEFAULT_RANK_CAP),
        Some(s) => match s.trim().parse::<usize>() {
            Ok(n) if (1..=MAX_RANK).contains(&n) => Ok(n),
            _ => Err(Error::Parse {
                offset: 0,
                message: format!("GDSLAB_MAX_RANK must be an integer in 1..={MAX_RANK}, got '{s}'"),
            }),
        },
    }
}

/// Expands `all` and removes duplicates, keeping first occurrences.
pub fn parse_theorems(names: &[String]) -> Result<Vec<TheoremId>> {
    let mut out: Vec<TheoremId> = Vec::new();
    for n in names {
        let n = n.trim();
        let add: Vec<TheoremId> = if n == "all" {
            TheoremId::ALL.to_vec()
        } else {
            vec![n.parse()?]
        };
        for id in add {
            if !out.contains(&id) {
                out.push(id);
            }
        }
    }
    Ok(out)
}

pub fn cmd_functors(e: &DivisorTuple) -> Value {
    let a = e.abelianization();
    let mut cover = Map::new();
    for tag in [
        FunctorTag::Sp2,
        FunctorTag::Sp3,
        FunctorTag::Lambda2,
        FunctorTag::Lambda3,
        FunctorTag::Lie3,
    ] {
        let v = functor_on_free(tag, e.rank());
        cover.insert(tag.as_str().to_string(), Value::from(v.generators.len()));
    }
    let derived: Map<String, Value> = derived_table(&a)
        .iter()
        .map(|(name, v)| (name.to_string(), report::functor_value(v)))
        .collect();
    let result = json!({
        "group": report::group(&a),
        "free_cover_ranks": cover,
        "derived": derived,
    });
    report::document(
        "functors",
        json!({ "divisors": report::divisors(e) }),
        vec![result],
        json!({ "status": "ok" }),
    )
}

pub fn cmd_dimsub(
    e: &DivisorTuple,
    ideal: &IdealExpr,
    level: usize,
    denom: Option<&SubgroupSpec>,
) -> Result<Value> {
    if !(3..=4).contains(&level) {
        return Err(Error::UnsupportedLevel(level));
    }
    let nil = FreeNilpotent::new(e.rank())?;
    let mut solver = DimensionSolver::new(&nil, e)?;
    let lat = solver.lattice(ideal, level)?;
    let in_f2 = solver.ideal_in_f2(ideal, level)?;
    let names: Vec<String> = nil.basis().names().into_iter().take(nil.log_dim(level)?).collect();
    let mut result = json!({
        "coordinates": names,
        "basis": report::lattice(&lat),
        "rank": lat.rank(),
        "contained_in_gamma2": in_f2,
    });
    let mut invocation = json!({
        "divisors": report::divisors(e),
        "ideal": ideal.to_string(),
        "level": level,
    });
    if let Some(spec) = denom {
        if spec.tag.level() != level {
            return Err(Error::DimensionMismatch {
                expected: level,
                found: spec.tag.level(),
            });
        }
        let den = solver.subgroup(spec)?;
        let q = lattice_quotient(&lat, &den)?;
        result["denominator_basis"] = report::lattice(&den);
        result["quotient"] = report::group(&q);
        invocation["mod"] = Value::from(spec.tag.as_str());
        let extra: Vec<String> = spec.extra.iter().map(ToString::to_string).collect();
        invocation["extra"] = Value::from(extra);
    }
    Ok(report::document(
        "dimsub",
        invocation,
        vec![result],
        json!({ "status": "ok" }),
    ))
}

pub fn cmd_member(e: &DivisorTuple, w: &GroupWord, ideal: &IdealExpr, level: usize) -> Result<Value> {
    let holds = membership(e, w, ideal, level)?;
    Ok(report::document(
        "member",
        json!({
            "divisors": report::divisors(e),
            "word": w.to_string(),
            "ideal": ideal.to_string(),
            "level": level,
        }),
        vec![json!({ "member": holds })],
        json!({ "status": "ok" }),
    ))
}

fn summary(reports: &[VerifyReport]) -> (Value, bool) {
    let mut total = Tally::default();
    let mut per: Map<String, Value> = Map::new();
    for id in TheoremId::ALL {
        let mut t = Tally::default();
        let mut seen = false;
        for r in reports.iter().filter(|r| r.theorem == id) {
            t.add(&r.status);
            seen = true;
        }
        if seen {
            per.insert(id.as_str().to_string(), t.to_json());
        }
    }
    for r in reports {
        total.add(&r.status);
    }
    let failed = total.fail > 0;
    let mut s = total.to_json();
    s["by_theorem"] = Value::Object(per);
    s["status"] = Value::from(if failed { "fail" } else { "ok" });
    (s, failed)
}

pub fn cmd_verify(ids: &[TheoremId], e: &DivisorTuple) -> Result<(Value, bool)> {
    let v = Verifier::new(e.rank())?;
    let reports = ids
        .par_iter()
        .map(|&id| v.verify(id, e))
        .collect::<Result<Vec<_>>>()?;
    let (s, failed) = summary(&reports);
    let names: Vec<&str> = ids.iter().map(|t| t.as_str()).collect();
    let doc = report::document(
        "verify",
        json!({ "divisors": report::divisors(e), "theorems": names }),
        reports.iter().map(report::verify_report).collect(),
        s,
    );
    Ok((doc, failed))
}

/// Every divisor chain of rank `1..=max_rank` with entries from `pool`, rank
/// first and then in lexicographic order of the sorted pool.
pub fn chains(pool: &[BigInt], max_rank: usize) -> Vec<DivisorTuple> {
    let mut p = pool.to_vec();
    p.sort();
    p.dedup();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<BigInt>> = vec![Vec::new()];
    for _ in 0..max_rank {
        let mut next = Vec::new();
        for prefix in &layer {
            for d in &p {
                let mut c = prefix.clone();
                c.push(d.clone());
                if let Ok(t) = DivisorTuple::new(c.clone()) {
                    out.push(t);
                    next.push(c);
                }
            }
        }
        layer = next;
    }
    out.sort_by_key(|t| t.rank());
    out
}

pub fn cmd_sweep(pool: &[BigInt], max_rank: usize, ids: &[TheoremId]) -> Result<(Value, bool)> {
    if pool.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            message: "pool empty".into(),
        });
    }
    if ids.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            message: "no theorems selected".into(),
        });
    }
    let tuples = chains(pool, max_rank);
    let verifiers = (1..=max_rank)
        .into_par_iter()
        .map(Verifier::new)
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(&DivisorTuple, TheoremId)> = tuples
        .iter()
        .flat_map(|t| ids.iter().map(move |&id| (t, id)))
        .collect();
    let reports = jobs
        .par_iter()
        .map(|(t, id)| verifiers[t.rank() - 1].verify(*id, t))
        .collect::<Result<Vec<_>>>()?;
    let (mut s, failed) = summary(&reports);
    s["tuples"] = Value::from(tuples.len());
    let names: Vec<&str> = ids.iter().map(|t| t.as_str()).collect();
    let pool_sorted = {
        let mut p = pool.to_vec();
        p.sort();
        p.dedup();
        p
    };
    let doc = report::document(
        "sweep",
        json!({
            "pool": report::ints(&pool_sorted),
            "max_rank": max_rank,
            "theorems": names,
        }),
        reports.iter().map(report::sweep_entry).collect(),
        s,
    );
    Ok((doc, failed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["gdslab"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn functors_json() {
        let (code, out, _) = call(&["functors", "--divisors", "9,3", "--json"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"L1SP3\": [3,3]"), "{out}");
        assert!(out.contains("\"schema_version\": \"1.0.0\""));
    }

    #[test]
    fn cyclic_rows_vanish() {
        let (code, out, _) = call(&["functors", "--divisors", "7"]);
        assert_eq!(code, 0);
        assert!(out.contains("L1SP2: []") && out.contains("L1SP3: []"), "{out}");
    }

    #[test]
    fn bad_chain_exits_2() {
        let (code, _, err) = call(&["functors", "--divisors", "3,9"]);
        assert_eq!(code, 2);
        assert!(err.contains("divisor chain violated"), "{err}");
        let (code, out, _) = call(&["functors", "--divisors", "3,9", "--canonicalize", "--json"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"divisors\": [9,3]"));
    }

    #[test]
    fn dimsub_quotient() {
        let (code, out, _) = call(&[
            "dimsub", "--divisors", "9,3", "--ideal", "f*r*f", "--level", "4", "--mod", "RRF.g4", "--json",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("\"quotient\": [3,3]"), "{out}");
    }

    #[test]
    fn dimsub_containment_violation_exits_3() {
        let (code, _, err) = call(&[
            "dimsub", "--divisors", "9,3", "--ideal", "r*r*f", "--level", "4", "--mod", "RF.g4",
        ]);
        assert_eq!(code, 3);
        assert!(err.contains("denominator not contained"), "{err}");
    }

    #[test]
    fn member_examples() {
        let base = ["member", "--divisors", "9,3", "--ideal", "r*f", "--level", "3", "--json", "--word"];
        let mut a = base.to_vec();
        a.push("[x2,x1]^9");
        let (code, out, _) = call(&a);
        assert_eq!(code, 0);
        assert!(out.contains("\"member\": true"));
        let mut b = base.to_vec();
        b.push("[x2,x1]^3");
        assert!(call(&b).1.contains("\"member\": false"));
    }

    #[test]
    fn verify_exit_codes() {
        assert_eq!(call(&["verify", "--theorem", "gupta", "--divisors", "4,2"]).0, 0);
        let (code, out, _) = call(&["verify", "--theorem", "main1", "--divisors", "4,2"]);
        assert_eq!(code, 0);
        assert!(out.contains("SKIPPED"));
        assert_eq!(call(&["verify", "--theorem", "bogus", "--divisors", "4,2"]).0, 2);
        assert_eq!(call(&["verify", "--theorem", "r2f_gens", "--divisors", "9,3"]).0, 1);
    }

    #[test]
    fn sweep_bounds() {
        assert_eq!(call(&["sweep", "--pool", "2,3", "--max-rank", "0"]).0, 2);
        assert_eq!(call(&["sweep", "--pool", "", "--max-rank", "1"]).0, 2);
        let (code, out, _) = call(&["sweep", "--pool", "1", "--max-rank", "1", "--json"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"fail\": 0"));
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        assert_eq!(call(&["functors", "--divisors", "9,3", "--bogus"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn chain_enumeration() {
        let pool: Vec<BigInt> = [3, 2].map(BigInt::from).to_vec();
        let c: Vec<String> = chains(&pool, 2).iter().map(ToString::to_string).collect();
        assert_eq!(c, ["2", "3", "2,2", "3,3"]);
    }

    #[test]
    fn rank_cap_from_env_text() {
        assert_eq!(rank_cap(None).unwrap(), 3);
        assert_eq!(rank_cap(Some("4")).unwrap(), 4);
        assert!(rank_cap(Some("x")).is_err());
        assert!(rank_cap(Some("9")).is_err());
    }
}
