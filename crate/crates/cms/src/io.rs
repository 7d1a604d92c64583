//! File formats and report rendering: the JSON square document, CSV
//! analysis rows, and pretty block-form printing.

use crate::construction::{Couple, FriersonSpec};
use crate::error::{Error, Result};
use crate::matrix::IntSquareMatrix;
use crate::measures::MeasureReport;
use crate::properties::PropertyReport;
use crate::spectra::{IndexValue, SpectralProfile};
use serde::{Deserialize, Serialize};

/// Where a square came from, carried alongside its elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Spec { k: i128, couples: Vec<Couple> },
    Catalog { name: String },
    Compound { pattern: String, base: String, step: i128 },
}

/// One square as stored on disk: order, row-major elements, and an
/// optional provenance record. Round-trips losslessly through JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareDocument {
    pub order: usize,
    pub elements: Vec<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl SquareDocument {
    pub fn new(matrix: &IntSquareMatrix, provenance: Option<Provenance>) -> Self {
        Self {
            order: matrix.order(),
            elements: matrix.entries().to_vec(),
            provenance,
        }
    }

    pub fn matrix(&self) -> Result<IntSquareMatrix> {
        IntSquareMatrix::new(self.order, self.elements.clone())
            .map_err(|_| Error::BadDocument(format!(
                "element count {} does not match order {}",
                self.elements.len(),
                self.order
            )))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::BadDocument(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("order,elements\n");
        let elems: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        out.push_str(&format!("{},{}\n", self.order, elems.join(";")));
        out
    }
}

/// Parses a couple-list flag like "1,3;9,27;81,243" (innermost
/// couple first).
pub fn parse_couples(text: &str) -> Result<Vec<Couple>> {
    let bad = || Error::BadCoupleString(text.to_string());
    text.split(';')
        .map(|pair| {
            let mut it = pair.split(',');
            let a = it.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
            let b = it.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
            if it.next().is_some() {
                return Err(bad());
            }
            Ok(Couple::new(a, b))
        })
        .collect()
}

/// Renders a square with ruled block separators at the given block
/// size (0 means no rules), matching the compact block layout.
pub fn pretty_square(m: &IntSquareMatrix, block: usize) -> String {
    let n = m.order();
    let width = m
        .entries()
        .iter()
        .map(|e| e.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for i in 0..n {
        if block > 0 && i > 0 && i % block == 0 {
            let cells_per_group = block * (width + 1) + 1;
            let groups = n / block;
            let rule = vec!["-".repeat(cells_per_group - 2); groups].join("-+-");
            out.push_str(&rule);
            out.push('\n');
        }
        for j in 0..n {
            if j > 0 {
                if block > 0 && j % block == 0 {
                    out.push_str(" | ");
                } else {
                    out.push(' ');
                }
            }
            out.push_str(&format!("{:>width$}", m.get(i, j), width = width));
        }
        out.push('\n');
    }
    out
}

/// Picks the natural ruling for pretty output: 3 for powers of three,
/// 4 for powers of four, otherwise none.
pub fn default_block(n: usize) -> usize {
    let mut m = n;
    while m.is_multiple_of(3) {
        m /= 3;
    }
    if m == 1 && n > 3 {
        return 3;
    }
    let mut m = n;
    while m.is_multiple_of(4) {
        m /= 4;
    }
    if m == 1 && n > 4 {
        return 4;
    }
    0
}

fn fmt_sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let s = format!("{:.6e}", v);
    // re-render with 6 significant digits in plain notation
    let parsed: f64 = s.parse().unwrap();
    let mag = parsed.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{:.*}", decimals, parsed)
}

/// One analysis row with all derived quantities for a named square.
pub struct AnalysisRow<'a> {
    pub name: &'a str,
    pub properties: &'a PropertyReport,
    pub spectrum: &'a SpectralProfile,
    pub measures: &'a MeasureReport,
}

pub const ANALYSIS_CSV_HEADER: &str = "name,n,S,rank,H,C,R,L,is_magic,is_associative,is_pandiagonal";

impl AnalysisRow<'_> {
    /// H and C carry 6 significant digits; exact integers carry full
    /// precision, so golden files are byte-stable across runs.
    pub fn to_csv(&self) -> String {
        let index = |v: &IndexValue| match v {
            IndexValue::Exact(b) => b.to_string(),
            IndexValue::Approx(f) => fmt_sig6(*f),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.name,
            self.properties.order,
            self.properties.magic_constant,
            self.spectrum.rank,
            fmt_sig6(self.measures.h),
            fmt_sig6(self.measures.c),
            index(&self.spectrum.r_index),
            index(&self.spectrum.l_index),
            self.properties.is_magic,
            self.properties.is_associative,
            self.properties.is_pandiagonal,
        )
    }

    pub fn to_json(&self) -> String {
        let index = |v: &IndexValue| match v {
            IndexValue::Exact(b) => serde_json::json!({ "exact": b.to_string() }),
            IndexValue::Approx(f) => serde_json::json!({ "approx": f }),
        };
        let value = serde_json::json!({
            "name": self.name,
            "properties": {
                "order": self.properties.order,
                "magic_constant": self.properties.magic_constant.to_string(),
                "is_magic": self.properties.is_magic,
                "is_natural": self.properties.is_natural,
                "is_associative": self.properties.is_associative,
                "is_pandiagonal": self.properties.is_pandiagonal,
                "is_ultramagic": self.properties.is_ultramagic,
            },
            "spectrum": {
                "sigmas": self.spectrum.sigmas,
                "sigma_sq_exact": self.spectrum.sigma_sq_exact.as_ref().map(|v| {
                    v.iter().map(|s| s.to_string()).collect::<Vec<_>>()
                }),
                "rank": self.spectrum.rank,
                "R": index(&self.spectrum.r_index),
                "L": index(&self.spectrum.l_index),
            },
            "measures": {
                "normalized": self.measures.normalized,
                "H": self.measures.h,
                "C": self.measures.c,
            },
        });
        let mut s = serde_json::to_string_pretty(&value).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Reconstructs the spec a provenance record describes, when it is
/// spec-shaped.
pub fn provenance_spec(p: &Provenance) -> Option<FriersonSpec> {
    match p {
        Provenance::Spec { k, couples } => Some(FriersonSpec::new(*k, couples.clone())),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::catalog;

    #[test]
    fn json_roundtrip_all_catalog_squares() {
        for name in crate::construction::CATALOG_NAMES {
            let m = catalog(name).unwrap();
            let doc = SquareDocument::new(
                &m,
                Some(Provenance::Catalog { name: name.to_string() }),
            );
            let back = SquareDocument::from_json(&doc.to_json()).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.matrix().unwrap(), m);
        }
    }

    #[test]
    fn bad_document_rejected() {
        let doc = SquareDocument { order: 3, elements: vec![1, 2], provenance: None };
        assert!(doc.matrix().is_err());
        assert!(SquareDocument::from_json("{not json").is_err());
    }

    #[test]
    fn couple_parsing() {
        assert_eq!(
            parse_couples("1,3;9,27").unwrap(),
            vec![Couple::new(1, 3), Couple::new(9, 27)]
        );
        assert!(parse_couples("1,2,3").is_err());
        assert!(parse_couples("x,y").is_err());
        assert!(parse_couples("").is_err());
    }

    #[test]
    fn pretty_m3() {
        let m3 = catalog("m3").unwrap();
        let text = pretty_square(&m3, 0);
        assert_eq!(text, "8 1 6\n3 5 7\n4 9 2\n");
    }

    #[test]
    fn pretty_t9a_has_block_rules() {
        let t9a = catalog("t9a").unwrap();
        let text = pretty_square(&t9a, default_block(9));
        assert!(text.contains(" | "));
        assert!(text.lines().count() > 9); // rule lines between block rows
        assert!(text.starts_with("71 64 69 |  8  1  6 | 53 46 51"));
    }

    #[test]
    fn sig6_formatting() {
        assert_eq!(fmt_sig6(1.1299912345), "1.12999");
        assert_eq!(fmt_sig6(48.57212345), "48.5721");
        assert_eq!(fmt_sig6(0.0), "0");
        assert_eq!(fmt_sig6(100.0), "100.000");
    }
}
