//! Text and JSON rendering. Everything here is a pure function of its input,
//! so identical runs produce identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use projgeom_core::geometry::GeometrySummary;
use projgeom_core::module::{ConversionCase, Nmde};
use projgeom_core::verify::{RelationResult, ReportContext};
use projgeom_core::{Field, GeometryIndex, ModuleType, MultiplicityMap, SparseOperator, VerificationReport};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn emit(body: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, body).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values built from strings and integers serialize");
    s.push('\n');
    s
}

fn context_line(c: &ReportContext) -> String {
    let mut s = format!("context: q={} h={} k={} mode={}", c.q, c.h, c.k, c.mode);
    if let Some(y) = &c.y {
        let _ = write!(s, " y={y}");
    }
    if let Some(t) = &c.module_type {
        let _ = write!(s, " type={t}");
    }
    s
}

pub fn relation_line(r: &RelationResult) -> String {
    match &r.witness {
        None => format!("{}: pass", r.id),
        Some(w) => format!("{}: fail (row {}, col {}: {})", r.id, w.row, w.col, w.residual),
    }
}

fn report_text(report: &VerificationReport, out: &mut String) {
    let _ = writeln!(out, "{}", context_line(&report.context));
    for r in &report.relations {
        let _ = writeln!(out, "{}", relation_line(r));
    }
    if let Some(t) = &report.timings {
        for (id, ms) in t {
            let _ = writeln!(out, "timing {id}: {ms:.3} ms");
        }
    }
    let failed = report.failures().count();
    let _ = writeln!(
        out,
        "summary: {} passed, {failed} failed",
        report.relations.len() - failed
    );
}

fn report_json(report: &VerificationReport) -> Value {
    let mut v = json!({
        "context": report.context,
        "relations": report.relations,
    });
    if let Some(t) = &report.timings {
        v["timings"] = json!(t);
    }
    v
}

pub fn report(format: Format, report: &VerificationReport) -> String {
    match format {
        Format::Json => json_text(&report_json(report)),
        Format::Text => {
            let mut out = String::new();
            report_text(report, &mut out);
            out
        }
    }
}

pub fn module(format: Format, report: &VerificationReport, tables: &Value) -> String {
    match format {
        Format::Json => {
            let mut v = report_json(report);
            v["tables"] = tables.clone();
            json_text(&v)
        }
        Format::Text => {
            let mut out = String::new();
            report_text(report, &mut out);
            for row in tables.as_array().into_iter().flatten() {
                for e in row["entries"].as_array().into_iter().flatten() {
                    let _ = writeln!(
                        out,
                        "value w({},{}) {} = {}",
                        row["i"],
                        row["j"],
                        e["name"].as_str().unwrap_or_default(),
                        e["formula"].as_str().unwrap_or_default()
                    );
                }
            }
            out
        }
    }
}

pub fn summary(format: Format, s: &GeometrySummary) -> String {
    match format {
        Format::Json => json_text(&json!({ "summary": s })),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "geometry: q={} h={} k={} y={} size={}", s.q, s.h, s.k, s.y, s.size);
            for (l, n) in s.levels.iter().enumerate() {
                let _ = writeln!(out, "level {l}: {n}");
            }
            for st in &s.strata {
                let _ = writeln!(
                    out,
                    "stratum ({},{}): size {}, slash covers {:?}, backslash covers {:?}, slash covered by {:?}, backslash covered by {:?}",
                    st.i, st.j, st.size, st.slash_covers, st.backslash_covers, st.slash_covered_by, st.backslash_covered_by
                );
            }
            out
        }
    }
}

pub fn operator<S: Field>(format: Format, g: &GeometryIndex, name: &str, op: &SparseOperator<S>) -> String {
    match format {
        Format::Json => {
            let entries: Vec<Value> = op.entries().map(|(r, c, v)| json!([r, c, v.to_string()])).collect();
            json_text(&json!({
                "context": { "q": g.q().to_string(), "h": g.h(), "k": g.k(), "mode": "geometry", "y": g.y().to_string() },
                "operator": { "name": name, "dim": op.dim(), "entries": entries },
            }))
        }
        Format::Text => {
            format!(
                "operator {name}: dim {} nnz {}\n{}",
                op.dim(),
                op.nnz(),
                op.to_coo_string()
            )
        }
    }
}

pub fn decomposition(
    format: Format,
    report: &VerificationReport,
    mults: &MultiplicityMap,
    (sum, size): (usize, usize),
) -> String {
    match format {
        Format::Json => {
            let table: Vec<Value> = mults
                .iter()
                .map(|(t, m)| {
                    json!({
                        "type": t.to_string(),
                        "alpha": t.alpha,
                        "beta": t.beta,
                        "rho": t.rho,
                        "dim": t.dim(),
                        "multiplicity": m,
                    })
                })
                .collect();
            let mut v = report_json(report);
            v["multiplicities"] = Value::Array(table);
            v["total"] = json!({ "sum": sum, "size": size });
            json_text(&v)
        }
        Format::Text => {
            let mut out = String::new();
            for (t, m) in mults {
                let _ = writeln!(out, "multiplicity {t} dim {}: {m}", t.dim());
            }
            report_text(report, &mut out);
            let _ = writeln!(out, "total: {sum} = {size}");
            out
        }
    }
}

pub fn conversion(format: Format, ty: &ModuleType, n: &Nmde, case: ConversionCase, check: &RelationResult) -> String {
    match format {
        Format::Json => json_text(&json!({
            "context": { "h": ty.h, "k": ty.k, "type": ty.to_string() },
            "parameters": { "nu": n.nu, "mu": n.mu, "d": n.d, "e": n.e, "case": case.to_string() },
            "relations": [check],
        })),
        Format::Text => format!(
            "type {ty} at h={} k={}\nnu={}\nmu={}\nd={}\ncase={case}\ne={}\n{}\n",
            ty.h,
            ty.k,
            n.nu,
            n.mu,
            n.d,
            n.e,
            relation_line(check)
        ),
    }
}
