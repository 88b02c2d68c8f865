//! Text, JSON and CSV renderings. Machine formats carry no timing data so
//! identical inputs give byte-identical output.

use std::fmt::Write;

use bajinv::codes::{r_encode, rank, v_encode, weight};
use bajinv::{Distribution, LastValue, Mismatch, Permutation, RCode, VCode, VerificationReport};
use serde::Serialize;
use serde_json::Value;

use crate::args::Format;

/// Largest integer a JSON consumer can hold exactly in a double.
const JSON_SAFE_MAX: u64 = (1 << 53) - 1;

fn json_count(c: u64) -> Value {
    if c > JSON_SAFE_MAX {
        Value::String(c.to_string())
    } else {
        Value::from(c)
    }
}

fn json_k(k: LastValue) -> Value {
    match k {
        LastValue::Fixed(k) => Value::from(k),
        LastValue::All => Value::from("all"),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn joined<T: ToString>(values: &[T], sep: &str) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn key_values(rows: &[(&str, String)], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("field,value\n");
            for (key, value) in rows {
                let _ = writeln!(out, "{key},\"{value}\"");
            }
        }
        _ => {
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (key, value) in rows {
                let _ = writeln!(out, "{key:<width$}  {value}");
            }
        }
    }
    out
}

#[derive(Serialize)]
struct StatsJson<'a> {
    n: usize,
    perm: &'a [u32],
    descents: &'a [usize],
    inv: u64,
    baj: u64,
    baj_minus_inv: u64,
    des: usize,
    maj: u64,
    vcode: &'a [u32],
    rcode: &'a [u32],
    k: u32,
    weight: u64,
    rank: Option<u128>,
}

pub fn stats(p: &Permutation, format: Format) -> String {
    let descents = p.descent_set();
    let classic = p.classic_stats();
    let v = v_encode(p);
    let rc = r_encode(&v);
    let idx = rank(&rc).ok();
    if format == Format::Json {
        return to_json(&StatsJson {
            n: p.n(),
            perm: p.as_slice(),
            descents: descents.positions(),
            inv: p.inv(),
            baj: p.baj(),
            baj_minus_inv: p.baj_minus_inv(),
            des: classic.des,
            maj: classic.maj,
            vcode: v.values(),
            rcode: rc.digits(),
            k: rc.k(),
            weight: weight(&rc),
            rank: idx,
        });
    }
    let rows = [
        ("n", p.n().to_string()),
        ("perm", p.to_string()),
        ("descents", descents.to_string()),
        ("inv", p.inv().to_string()),
        ("baj", p.baj().to_string()),
        ("baj-inv", p.baj_minus_inv().to_string()),
        ("des", classic.des.to_string()),
        ("maj", classic.maj.to_string()),
        ("vcode", v.to_string()),
        ("rcode", rc.to_string()),
        ("k", rc.k().to_string()),
        ("weight", weight(&rc).to_string()),
        ("rank", idx.map_or_else(|| "n/a".into(), |r| r.to_string())),
    ];
    key_values(&rows, format)
}

#[derive(Serialize)]
struct CodesJson<'a> {
    n: usize,
    vcode: &'a [u32],
    rcode: &'a [u32],
    k: u32,
}

pub fn codes(v: &VCode, rc: &RCode, format: Format) -> String {
    match format {
        Format::Json => to_json(&CodesJson {
            n: v.n(),
            vcode: v.values(),
            rcode: rc.digits(),
            k: rc.k(),
        }),
        Format::Text => format!("v {v}\nr {rc}\nk {}\n", rc.k()),
        Format::Csv => key_values(
            &[
                ("vcode", joined(v.values(), " ")),
                ("rcode", joined(rc.digits(), " ")),
                ("k", rc.k().to_string()),
            ],
            format,
        ),
    }
}

#[derive(Serialize)]
struct PermJson<'a> {
    n: usize,
    perm: &'a [u32],
}

pub fn permutation(p: &Permutation, format: Format) -> String {
    match format {
        Format::Json => to_json(&PermJson {
            n: p.n(),
            perm: p.as_slice(),
        }),
        Format::Text => format!("{p}\n"),
        Format::Csv => format!("{}\n", joined(p.as_slice(), ",")),
    }
}

#[derive(Serialize)]
struct UnrankJson<'a> {
    n: usize,
    k: u32,
    idx: u128,
    rcode: &'a [u32],
    perm: &'a [u32],
}

pub fn unranked(idx: u128, rc: &RCode, p: &Permutation, format: Format) -> String {
    match format {
        Format::Json => to_json(&UnrankJson {
            n: p.n(),
            k: rc.k(),
            idx,
            rcode: rc.digits(),
            perm: p.as_slice(),
        }),
        _ => permutation(p, format),
    }
}

#[derive(Serialize)]
struct RankJson {
    rank: u128,
}

pub fn rank_index(idx: u128, format: Format) -> String {
    match format {
        Format::Json => to_json(&RankJson { rank: idx }),
        Format::Text => format!("{idx}\n"),
        Format::Csv => format!("rank\n{idx}\n"),
    }
}

#[derive(Serialize)]
struct DistJson {
    n: usize,
    k: Value,
    coeffs: Vec<Value>,
}

pub fn distribution(d: &Distribution, format: Format) -> String {
    match format {
        Format::Json => to_json(&DistJson {
            n: d.n(),
            k: json_k(d.k()),
            coeffs: d
                .to_qpoly()
                .coeffs()
                .iter()
                .map(|&c| json_count(c))
                .collect(),
        }),
        Format::Csv => {
            let mut out = String::from("exponent,count\n");
            for (e, c) in d.counts() {
                let _ = writeln!(out, "{e},{c}");
            }
            out
        }
        Format::Text => {
            let header = ("exponent", "count");
            let w1 = d
                .counts()
                .keys()
                .map(|e| e.to_string().len())
                .chain([header.0.len()])
                .max()
                .unwrap_or(0);
            let w2 = d
                .counts()
                .values()
                .map(|c| c.to_string().len())
                .chain([header.1.len()])
                .max()
                .unwrap_or(0);
            let mut out = format!("{:>w1$}  {:>w2$}\n", header.0, header.1);
            for (e, c) in d.counts() {
                let _ = writeln!(out, "{e:>w1$}  {c:>w2$}");
            }
            out
        }
    }
}

#[derive(Serialize)]
struct MismatchJson {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    exponent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

impl From<&Mismatch> for MismatchJson {
    fn from(m: &Mismatch) -> Self {
        match m {
            Mismatch::Coefficient { exponent, lhs, rhs } => Self {
                kind: "coefficient",
                exponent: Some(*exponent),
                lhs: Some(json_count(*lhs)),
                rhs: Some(json_count(*rhs)),
                index: None,
                reason: None,
            },
            Mismatch::Bijection { index, reason } => Self {
                kind: "bijection",
                exponent: None,
                lhs: None,
                rhs: None,
                index: Some(*index),
                reason: Some(reason.clone()),
            },
        }
    }
}

#[derive(Serialize)]
struct ReportJson {
    theorem: u8,
    n: usize,
    k: Value,
    status: String,
    permutations_checked: u64,
    first_mismatch: Option<MismatchJson>,
}

fn theorem_of(report: &VerificationReport) -> u8 {
    match report.k {
        LastValue::All => 1,
        LastValue::Fixed(_) => 2,
    }
}

pub fn report(report: &VerificationReport, format: Format) -> String {
    let theorem = theorem_of(report);
    match format {
        Format::Json => to_json(&ReportJson {
            theorem,
            n: report.n,
            k: json_k(report.k),
            status: report.status().to_string(),
            permutations_checked: report.permutations_checked,
            first_mismatch: report.first_mismatch.as_ref().map(MismatchJson::from),
        }),
        Format::Csv => {
            let (e, l, r) = match &report.first_mismatch {
                Some(Mismatch::Coefficient { exponent, lhs, rhs }) => {
                    (exponent.to_string(), lhs.to_string(), rhs.to_string())
                }
                _ => Default::default(),
            };
            format!(
                "theorem,n,k,status,permutations_checked,mismatch_exponent,lhs,rhs\n{theorem},{},{},{},{},{e},{l},{r}\n",
                report.n,
                report.k,
                report.status(),
                report.permutations_checked
            )
        }
        Format::Text => {
            let mut out = format!(
                "theorem {theorem} (n={}, k={}): {}\npermutations checked: {}\nelapsed: {:.3?}\n",
                report.n,
                report.k,
                report.status(),
                report.permutations_checked,
                report.elapsed
            );
            if let Some(m) = &report.first_mismatch {
                let _ = writeln!(out, "first mismatch: {m}");
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use std::time::Duration;

    use super::*;

    #[test]
    fn large_counts_become_strings() {
        assert_eq!(json_count(JSON_SAFE_MAX), Value::from(JSON_SAFE_MAX));
        assert_eq!(
            json_count(JSON_SAFE_MAX + 1),
            Value::from("9007199254740992")
        );
    }

    #[test]
    fn failed_report_carries_mismatch() {
        let failed = VerificationReport {
            n: 5,
            k: LastValue::Fixed(2),
            first_mismatch: Some(Mismatch::Coefficient {
                exponent: 3,
                lhs: 4,
                rhs: 5,
            }),
            elapsed: Duration::from_millis(1),
            permutations_checked: 24,
        };
        assert_eq!(
            report(&failed, Format::Json),
            "{\"theorem\":2,\"n\":5,\"k\":2,\"status\":\"fail\",\"permutations_checked\":24,\
             \"first_mismatch\":{\"kind\":\"coefficient\",\"exponent\":3,\"lhs\":4,\"rhs\":5}}\n"
        );
        assert_eq!(
            report(&failed, Format::Csv).lines().nth(1),
            Some("2,5,2,fail,24,3,4,5")
        );
        assert!(report(&failed, Format::Text)
            .contains("first mismatch: coefficient of q^3: enumerated 4, product 5"));
    }
}
