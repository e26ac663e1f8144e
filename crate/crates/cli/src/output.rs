//! Rendering command results as plain text, CSV or JSON.
//!
//! Big values always travel as decimal strings in JSON.

use std::fmt::Write as _;

use clap::ValueEnum;
use hilbert_core::parser::render_ideal_with;
use hilbert_core::{Count, HilbertTable, MethodKind, MonomialIdeal, Ring, SeriesNumerator};
use serde_json::{json, Value};

use crate::bench::BenchReport;
use crate::compare::Comparison;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// Text to print and the exit code to return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub code: i32,
}

impl Report {
    pub fn ok(text: String) -> Self {
        Self { text, code: 0 }
    }
}

fn generator_list(ring: &Ring, ideal: &MonomialIdeal) -> Vec<String> {
    ideal
        .generators()
        .iter()
        .map(|g| ring.render_monomial(g))
        .collect()
}

fn decimal(values: &[Count]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn pretty(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

/// Right-aligned columns; the first column is left-aligned.
fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c == 0 {
                let _ = write!(line, "{cell:<w$}", w = widths[0]);
            } else {
                let _ = write!(line, "  {cell:>w$}", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn degree_header(label: &str, n: usize) -> Vec<String> {
    std::iter::once(label.to_string())
        .chain((0..n).map(|b| b.to_string()))
        .collect()
}

fn labelled(label: &str, values: &[Count]) -> Vec<String> {
    std::iter::once(label.to_string())
        .chain(values.iter().map(ToString::to_string))
        .collect()
}

fn values_json(values: &[Count]) -> Value {
    Value::Array(
        values
            .iter()
            .enumerate()
            .map(|(b, v)| json!({"degree": b, "value": v.to_string()}))
            .collect(),
    )
}

pub fn hf_sequence(
    format: Format,
    ring: &Ring,
    ideal: &MonomialIdeal,
    method: MethodKind,
    values: &[Count],
) -> String {
    match format {
        Format::Plain => grid(&[
            degree_header("degree", values.len()),
            labelled("hf", values),
        ]),
        Format::Csv => {
            let mut s = String::from("degree,value\n");
            for (b, v) in values.iter().enumerate() {
                let _ = writeln!(s, "{b},{v}");
            }
            s
        }
        Format::Json => pretty(json!({
            "ring": ring.names(),
            "ideal": generator_list(ring, ideal),
            "method": method.name(),
            "values": values_json(values),
        })),
    }
}

pub fn table(
    format: Format,
    ring: &Ring,
    ideal: &MonomialIdeal,
    table: &HilbertTable,
    annihilators: bool,
) -> String {
    let ordered = ring.reordered(table.order());
    let width = table.rows().first().map_or(0, |r| r.values.len());
    match format {
        Format::Plain => {
            let mut rows = vec![degree_header("a\\b", width)];
            for r in table.rows() {
                rows.push(labelled(&r.stage.to_string(), &r.values));
            }
            let mut s = format!("order: {}\n", ordered.names().join(", "));
            s.push_str(&grid(&rows));
            if annihilators {
                let mut rows = vec![degree_header("0:x_a", width)];
                for r in table.rows().iter().take(ring.arity()) {
                    rows.push(labelled(&ordered.names()[r.stage - 1], &r.annihilator));
                }
                s.push('\n');
                s.push_str(&grid(&rows));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("a");
            for b in 0..width {
                let _ = write!(s, ",{b}");
            }
            s.push('\n');
            for r in table.rows() {
                let _ = writeln!(s, "{},{}", r.stage, decimal(&r.values).join(","));
            }
            s
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .rows()
                .iter()
                .map(|r| {
                    let names: Vec<String> = (0..r.stage)
                        .map(|v| {
                            ordered
                                .names()
                                .get(v)
                                .cloned()
                                .unwrap_or_else(|| format!("_{}", v + 1))
                        })
                        .collect();
                    let mut row = json!({
                        "a": r.stage,
                        "ideal": render_ideal_with(&r.ideal, &names),
                        "values": decimal(&r.values),
                    });
                    if annihilators {
                        row["annihilator"] = json!(decimal(&r.annihilator));
                    }
                    row
                })
                .collect();
            pretty(json!({
                "ring": ring.names(),
                "ideal": generator_list(ring, ideal),
                "order": ordered.names(),
                "rows": rows,
            }))
        }
    }
}

pub fn series(
    format: Format,
    ring: &Ring,
    ideal: &MonomialIdeal,
    num: &SeriesNumerator,
    expansion: Option<&[Count]>,
) -> String {
    match format {
        Format::Plain => {
            let mut s = format!("{num}\n");
            if let Some(e) = expansion {
                s.push_str(&grid(&[
                    degree_header("degree", e.len()),
                    labelled("hf", e),
                ]));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("part,degree,value\n");
            for (d, c) in num.coefficients() {
                let _ = writeln!(s, "numerator,{d},{c}");
            }
            for (b, v) in expansion.unwrap_or_default().iter().enumerate() {
                let _ = writeln!(s, "expansion,{b},{v}");
            }
            s
        }
        Format::Json => {
            let mut v = json!({
                "ring": ring.names(),
                "ideal": generator_list(ring, ideal),
                "series": num.to_string(),
                "denominator_exponent": num.arity(),
                "numerator": num
                    .coefficients()
                    .iter()
                    .map(|(d, c)| json!({"degree": d, "coefficient": c.to_string()}))
                    .collect::<Vec<_>>(),
            });
            if let Some(e) = expansion {
                v["expansion"] = values_json(e);
            }
            pretty(v)
        }
    }
}

pub fn comparison(format: Format, ring: &Ring, ideal: &MonomialIdeal, cmp: &Comparison) -> String {
    let cell = |v: &Option<Count>| v.as_ref().map_or("-".to_string(), ToString::to_string);
    match format {
        Format::Plain => {
            if cmp.agree() {
                return "AGREE\n".to_string();
            }
            let mut rows = vec![std::iter::once("degree".to_string())
                .chain(cmp.methods.iter().map(|m| m.name().to_string()))
                .collect::<Vec<_>>()];
            for r in cmp.disagreements() {
                rows.push(
                    std::iter::once(r.degree.to_string())
                        .chain(r.values.iter().map(cell))
                        .collect(),
                );
            }
            format!("DISAGREE\n{}", grid(&rows))
        }
        Format::Csv => {
            let mut s = String::from("degree");
            for m in &cmp.methods {
                let _ = write!(s, ",{}", m.name());
            }
            s.push_str(",agree\n");
            for r in &cmp.rows {
                let vals: Vec<String> = r.values.iter().map(cell).collect();
                let _ = writeln!(s, "{},{},{}", r.degree, vals.join(","), r.agrees());
            }
            s
        }
        Format::Json => pretty(json!({
            "ring": ring.names(),
            "ideal": generator_list(ring, ideal),
            "agree": cmp.agree(),
            "methods": cmp.methods.iter().map(|m| m.name()).collect::<Vec<_>>(),
            "rows": cmp.rows.iter().map(|r| json!({
                "degree": r.degree,
                "values": r.values.iter().map(|v| v.as_ref().map(ToString::to_string)).collect::<Vec<_>>(),
                "agree": r.agrees(),
            })).collect::<Vec<_>>(),
        })),
    }
}

fn bench_names(arity: usize) -> Vec<String> {
    (1..=arity).map(|i| format!("x{i}")).collect()
}

pub fn bench(format: Format, report: &BenchReport) -> String {
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    match format {
        Format::Plain | Format::Csv => {
            let header = [
                "case",
                "arity",
                "gens",
                "method",
                "time_ms",
                "subsets",
                "peak_memo",
                "hit_rate",
                "hf",
            ];
            let mut rows = vec![header.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
            for c in &report.cases {
                for r in &c.results {
                    let hf = match &r.error {
                        Some(e) => format!("error: {e}"),
                        None => decimal(&r.values).join(" "),
                    };
                    rows.push(vec![
                        c.id.clone(),
                        c.arity.to_string(),
                        c.generators.to_string(),
                        r.method.clone(),
                        format!("{:.3}", r.time_ms),
                        opt(r.subsets.map(|s| s.to_string())),
                        opt(r.peak_memo.map(|s| s.to_string())),
                        opt(r.memo_hit_rate.map(|h| format!("{h:.3}"))),
                        hf,
                    ]);
                }
            }
            if format == Format::Csv {
                rows.iter()
                    .map(|r| {
                        r.iter()
                            .map(|c| {
                                if c.contains(',') {
                                    format!("\"{c}\"")
                                } else {
                                    c.clone()
                                }
                            })
                            .collect::<Vec<_>>()
                            .join(",")
                            + "\n"
                    })
                    .collect()
            } else {
                format!(
                    "suite {} seed {} repetitions {} max-degree {}\n{}",
                    report.suite,
                    report.seed,
                    report.repetitions,
                    report.max_degree,
                    grid(&rows)
                )
            }
        }
        Format::Json => {
            let mut v = serde_json::to_value(report).expect("report serializes");
            if let Some(cases) = v["cases"].as_array_mut() {
                for (json_case, case) in cases.iter_mut().zip(&report.cases) {
                    json_case["ideal"] =
                        json!(render_ideal_with(&case.ideal, &bench_names(case.arity)));
                }
            }
            pretty(v)
        }
    }
}

pub fn stanley_reisner(
    format: Format,
    ring: &Ring,
    nonfaces: &[Vec<String>],
    ideal: &MonomialIdeal,
    method: MethodKind,
    values: &[Count],
) -> String {
    match format {
        Format::Plain => {
            let faces: Vec<String> = nonfaces
                .iter()
                .map(|n| format!("{{{}}}", n.join(",")))
                .collect();
            let faces = if faces.is_empty() {
                "none".to_string()
            } else {
                faces.join(" ")
            };
            format!(
                "minimal non-faces: {faces}\nideal: {}\n{}",
                ring.render_ideal(ideal),
                grid(&[
                    degree_header("degree", values.len()),
                    labelled("hf", values)
                ])
            )
        }
        Format::Csv => {
            let mut s = String::from("degree,value\n");
            for (b, v) in values.iter().enumerate() {
                let _ = writeln!(s, "{b},{v}");
            }
            s
        }
        Format::Json => pretty(json!({
            "ring": ring.names(),
            "minimal_nonfaces": nonfaces,
            "ideal": generator_list(ring, ideal),
            "method": method.name(),
            "values": values_json(values),
        })),
    }
}
