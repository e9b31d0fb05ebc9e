//! Structure-constant table formats: JSON, CSV, LaTeX and plain text.

use std::collections::BTreeMap;
use std::fmt::Write;

use hdlr_core::exact::{Poly, Var};
use hdlr_core::table::{SCTable, Theory};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantDoc {
    pub i: String,
    pub j: String,
    pub k: String,
    pub value: String,
}

/// JSON document of a table. Labels are cell names; values are canonical
/// polynomial strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub space: String,
    pub kind: String,
    pub labels: Vec<String>,
    pub constants: Vec<ConstantDoc>,
    pub meta: BTreeMap<String, String>,
}

fn kind_name(t: Theory) -> &'static str {
    match t {
        Theory::H => "csm",
        Theory::K => "mc",
    }
}

impl TableDoc {
    pub fn from_table(t: &SCTable) -> Self {
        let constants = t
            .entries()
            .map(|(&(i, j, k), v)| ConstantDoc {
                i: t.labels[i].clone(),
                j: t.labels[j].clone(),
                k: t.labels[k].clone(),
                value: v.to_string(),
            })
            .collect();
        let mut meta = t.metadata.clone();
        meta.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        TableDoc {
            space: t.metadata.get("space").cloned().unwrap_or_default(),
            kind: kind_name(t.theory).into(),
            labels: t.labels.clone(),
            constants,
            meta,
        }
    }

    pub fn to_table(&self) -> Result<SCTable> {
        let theory = match self.kind.as_str() {
            "csm" => Theory::H,
            "mc" => Theory::K,
            other => return Err(Error::Format(format!("unknown kind {other:?}"))),
        };
        let mut t = SCTable::new(theory, self.labels.clone());
        t.metadata = self.meta.clone();
        t.metadata.remove("version");
        let idx = |l: &str| t.label_index(l).ok_or_else(|| Error::Format(format!("unknown label {l:?}")));
        let mut entries = Vec::new();
        for c in &self.constants {
            entries.push((idx(&c.i)?, idx(&c.j)?, idx(&c.k)?, Poly::parse(&c.value)?));
        }
        for (i, j, k, v) in entries {
            t.set(i, j, k, v);
        }
        Ok(t)
    }
}

pub fn to_json(t: &SCTable) -> Result<String> {
    Ok(serde_json::to_string_pretty(&TableDoc::from_table(t))? + "\n")
}

pub fn from_json(s: &str) -> Result<SCTable> {
    serde_json::from_str::<TableDoc>(s)?.to_table()
}

pub fn to_csv(t: &SCTable) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["i", "j", "k", "value"])?;
    for (&(i, j, k), v) in t.entries() {
        w.write_record([&t.labels[i], &t.labels[j], &t.labels[k], &v.to_string()])?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Format(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
}

/// `\Omega_{label}`.
fn latex_cell(label: &str) -> String {
    format!("\\Omega_{{{}}}", label.replace("id", "\\mathrm{id}"))
}

/// A polynomial as LaTeX, e.g. `-h^{2}` or `2h^{2}`.
fn latex_poly(p: &Poly) -> String {
    let s = p.to_string();
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '*' => {}
            '^' => {
                let mut e = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() || (d == '-' && e.is_empty()) {
                        e.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                write!(out, "^{{{e}}}").unwrap();
            }
            _ => out.push(c),
        }
    }
    out
}

fn class_name(t: Theory) -> &'static str {
    match t {
        Theory::H => "\\mathrm{c^{sm}}",
        Theory::K => "\\mathrm{mC}",
    }
}

fn class_text(t: Theory) -> &'static str {
    match t {
        Theory::H => "csm",
        Theory::K => "mC",
    }
}

/// One product per row of an `align*` block, in table layout:
/// `class(Ω_i) class(Ω_j) = Σ_k c_k class(Ω_k)`.
pub fn to_latex(t: &SCTable) -> String {
    let c = class_name(t.theory);
    let mut out = String::from("\\begin{align*}\n");
    let r = t.size();
    let mut rows = Vec::new();
    for i in 0..r {
        for j in i..r {
            let lhs = format!("{c}({}){c}({})", latex_cell(&t.labels[i]), latex_cell(&t.labels[j]));
            let terms: Vec<String> = t
                .product(i, j)
                .into_iter()
                .rev()
                .map(|(k, v)| {
                    let coeff = latex_poly(&v);
                    let coeff = if v.len() > 1 { format!("({coeff})") } else { coeff };
                    format!("{coeff}\\,{c}({})", latex_cell(&t.labels[k]))
                })
                .collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ").replace("+ -", "- ") };
            rows.push(format!("{lhs}&={rhs}"));
        }
    }
    out.push_str(&rows.join("\\\\\n"));
    out.push_str("\n\\end{align*}\n");
    out
}

/// Plain text, one product per line.
pub fn to_text(t: &SCTable) -> String {
    let c = class_text(t.theory);
    let mut out = String::new();
    for (k, v) in &t.metadata {
        writeln!(out, "# {k}: {v}").unwrap();
    }
    let r = t.size();
    for i in 0..r {
        for j in i..r {
            let terms: Vec<String> =
                t.product(i, j).into_iter().rev().map(|(k, v)| format!("({v})*{c}(Ω_{})", t.labels[k])).collect();
            let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
            writeln!(out, "{c}(Ω_{}) {c}(Ω_{}) = {rhs}", t.labels[i], t.labels[j]).unwrap();
        }
    }
    out
}

pub fn render(t: &SCTable, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(t),
        Format::Csv => to_csv(t),
        Format::Latex => Ok(to_latex(t)),
        Format::Text => Ok(to_text(t)),
    }
}

/// A single polynomial in `h` for text output.
pub fn poly_in_h(p: &hdlr_core::exact::UPoly) -> String {
    p.to_poly(Var::H).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use hdlr_core::exact::int;

    fn sample() -> SCTable {
        let mut t = SCTable::new(Theory::H, vec!["1".into(), "2".into()]).with_meta("space", "P1");
        t.set(1, 1, 0, Poly::h());
        t.set(1, 1, 1, Poly::h().scale(&int(-2)).add(&Poly::int(1)));
        t
    }

    #[test]
    fn json_round_trip() {
        let t = sample();
        let s = to_json(&t).unwrap();
        assert!(s.contains("\"value\": \"h\""));
        assert_eq!(from_json(&s).unwrap(), t);
    }

    #[test]
    fn text_and_latex() {
        let t = sample();
        let txt = to_text(&t);
        assert!(txt.contains("csm(Ω_2) csm(Ω_2) = (-2*h + 1)*csm(Ω_2) + (h)*csm(Ω_1)"), "{txt}");
        let tex = to_latex(&t);
        assert!(
            tex.contains("&=(-2h + 1)\\,\\mathrm{c^{sm}}(\\Omega_{2}) + h\\,\\mathrm{c^{sm}}(\\Omega_{1})"),
            "{tex}"
        );
        assert_eq!(latex_poly(&Poly::parse("-3*h^12").unwrap()), "-3h^{12}");
    }

    #[test]
    fn csv_rows() {
        let s = to_csv(&sample()).unwrap();
        assert_eq!(s, "i,j,k,value\n2,2,1,h\n2,2,2,-2*h + 1\n");
    }
}
