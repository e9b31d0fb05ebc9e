//! Golden product tables for the toric pipeline.

use std::collections::BTreeMap;

use hdlr_core::exact::Poly;
use serde::Deserialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenProduct {
    pub left: String,
    pub right: String,
    /// Coefficients by cell label, as canonical polynomials.
    pub expansion: BTreeMap<String, String>,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenTable {
    pub name: String,
    pub space: String,
    pub kind: String,
    pub cells: Vec<String>,
    pub products: Vec<GoldenProduct>,
}

impl GoldenTable {
    pub fn parse(json: &str) -> Result<Self> {
        Ok(serde_json::from_str(json)?)
    }

    /// Position of a label such as `Ω_(1,2)`.
    pub fn cell(&self, label: &str) -> Result<usize> {
        self.cells.iter().position(|c| c == label).ok_or_else(|| Error::Format(format!("unknown cell {label:?}")))
    }

    /// Coefficients of a product by cell position; absent cells are zero.
    pub fn coefficients(&self, p: &GoldenProduct) -> Result<Vec<Poly>> {
        let mut out = vec![Poly::zero(); self.cells.len()];
        for (label, v) in &p.expansion {
            out[self.cell(label)?] = Poly::parse(v)?;
        }
        Ok(out)
    }
}

pub const TABLE1: &str = include_str!("../data/table1.json");
pub const TABLE2: &str = include_str!("../data/table2.json");

pub fn tables() -> Result<Vec<GoldenTable>> {
    [TABLE1, TABLE2].iter().map(|s| GoldenTable::parse(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_parse() {
        let t = tables().unwrap();
        assert_eq!(t[0].products.len(), 10);
        assert_eq!(t[1].products.len(), 5);
        for g in &t {
            for p in &g.products {
                g.cell(&p.left).unwrap();
                g.cell(&p.right).unwrap();
                g.coefficients(p).unwrap();
            }
        }
    }
}
