//! Plain-text document formats: measures and zero lists as JSON (one record per
//! line for zeros), ordinates as one number per line. Floats are written with 17
//! significant digits so that parsing recovers them exactly.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::crystal::CrystallineMeasure;
use crate::error::{Error, Result};
use crate::sequence::RiemannSequenceCandidate;
use crate::zerofind::ZeroRecord;
use crate::zetabuild::ZetaLikeFunction;
use crate::numerics::Rational;

const BUNDLED_ORDINATES: &str = include_str!("../data/zeta_ordinates.txt");

/// `x` with 17 significant digits, as a JSON number.
pub fn format_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn json_error(line: usize, e: serde_json::Error) -> Error {
    Error::Parse { line, message: e.to_string() }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureDocument {
    pub n: usize,
    pub coefficients: Vec<f64>,
}

impl MeasureDocument {
    pub fn from_measure(m: &CrystallineMeasure) -> Self {
        MeasureDocument { n: m.n, coefficients: m.coefficients.clone() }
    }

    pub fn to_measure(&self) -> Result<CrystallineMeasure> {
        CrystallineMeasure::new(self.n, self.coefficients.clone())
    }

    pub fn serialize(&self) -> String {
        let cs: Vec<String> = self.coefficients.iter().map(|&c| format_f64(c)).collect();
        format!("{{\"n\":{},\"coefficients\":[{}]}}\n", self.n, cs.join(","))
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| json_error(e.line(), e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&read(path)?)
    }
}

/// One line of a zero document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ZeroLine {
    Zero { re: f64, im: f64, multiplicity: u32, residual: f64 },
    Pole { re: f64, im: f64 },
}

impl ZeroLine {
    fn serialize(&self) -> String {
        match self {
            ZeroLine::Zero { re, im, multiplicity, residual } => format!(
                "{{\"kind\":\"zero\",\"re\":{},\"im\":{},\"multiplicity\":{multiplicity},\"residual\":{}}}",
                format_f64(*re),
                format_f64(*im),
                format_f64(*residual)
            ),
            ZeroLine::Pole { re, im } => {
                format!("{{\"kind\":\"pole\",\"re\":{},\"im\":{}}}", format_f64(*re), format_f64(*im))
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ZeroDocument {
    pub lines: Vec<ZeroLine>,
}

impl ZeroDocument {
    pub fn new(zeros: &[ZeroRecord], poles: &[Complex64]) -> Self {
        let mut lines: Vec<ZeroLine> = zeros
            .iter()
            .map(|z| ZeroLine::Zero {
                re: z.location.re,
                im: z.location.im,
                multiplicity: z.multiplicity,
                residual: z.residual,
            })
            .collect();
        lines.extend(poles.iter().map(|p| ZeroLine::Pole { re: p.re, im: p.im }));
        ZeroDocument { lines }
    }

    pub fn serialize(&self) -> String {
        self.lines.iter().map(|l| l.serialize() + "\n").collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| serde_json::from_str(l).map_err(|e| json_error(i + 1, e)))
            .collect::<Result<Vec<ZeroLine>>>()?;
        Ok(ZeroDocument { lines })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&read(path)?)
    }

    /// Zero records (isolation data is not stored and comes back empty).
    pub fn zeros(&self) -> Vec<ZeroRecord> {
        self.lines
            .iter()
            .filter_map(|l| match *l {
                ZeroLine::Zero { re, im, multiplicity, residual } => Some(ZeroRecord {
                    location: Complex64::new(re, im),
                    multiplicity,
                    residual,
                    step: 0.0,
                    isolation_radius: 0.0,
                }),
                ZeroLine::Pole { .. } => None,
            })
            .collect()
    }

    pub fn poles(&self) -> Vec<Complex64> {
        self.lines
            .iter()
            .filter_map(|l| match *l {
                ZeroLine::Pole { re, im } => Some(Complex64::new(re, im)),
                ZeroLine::Zero { .. } => None,
            })
            .collect()
    }
}

/// Strictly ascending positive reals, one per line; blank lines are ignored.
pub fn parse_ordinates(text: &str) -> Result<Vec<f64>> {
    let mut out: Vec<f64> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let x: f64 = line
            .parse()
            .map_err(|e| Error::Parse { line: i + 1, message: format!("{line:?}: {e}") })?;
        if !x.is_finite() || x <= 0.0 {
            return Err(Error::Parse { line: i + 1, message: format!("{line:?} is not a positive real") });
        }
        if let Some(&prev) = out.last() {
            if x <= prev {
                return Err(Error::Ordering { line: i + 1, message: format!("{x} does not exceed {prev}") });
            }
        }
        out.push(x);
    }
    if out.is_empty() {
        return Err(Error::Parse { line: 0, message: "no ordinates".into() });
    }
    Ok(out)
}

pub fn serialize_ordinates(ordinates: &[f64]) -> String {
    ordinates.iter().map(|&x| format_f64(x) + "\n").collect()
}

/// Ordinates from a file as a real sequence with the default tail above the last one.
pub fn load_ordinates(path: &Path) -> Result<RiemannSequenceCandidate> {
    let ords = parse_ordinates(&read(path)?)?;
    RiemannSequenceCandidate::from_ordinates(&ords, &path.display().to_string())
}

/// The first 10⁴ zeta ordinates shipped with the crate.
pub fn bundled_zeta_ordinates() -> Vec<f64> {
    parse_ordinates(BUNDLED_ORDINATES).expect("bundled ordinates are well formed")
}

/// The bundled ordinates as a sequence with tail model.
pub fn zeta_sequence() -> RiemannSequenceCandidate {
    RiemannSequenceCandidate::from_ordinates(&bundled_zeta_ordinates(), "zeta").expect("ascending ordinates")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermEntry {
    pub weight: f64,
    pub base: Rational,
    pub shift: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeadEntry {
    pub lambda: Rational,
    pub coefficient: f64,
}

/// A Hurwitz combination with its residue and Dirichlet head.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CombinationDocument {
    pub label: String,
    pub residue: f64,
    pub terms: Vec<TermEntry>,
    pub head: Vec<HeadEntry>,
}

impl CombinationDocument {
    pub fn new(f: &ZetaLikeFunction, head_limit: &Rational) -> Self {
        CombinationDocument {
            label: f.label.clone(),
            residue: f.combination().residue(),
            terms: f
                .combination()
                .terms()
                .iter()
                .map(|t| TermEntry { weight: t.weight, base: t.base.clone(), shift: t.shift.clone() })
                .collect(),
            head: f
                .dirichlet_head(head_limit)
                .entries
                .into_iter()
                .map(|(lambda, coefficient)| HeadEntry { lambda, coefficient })
                .collect(),
        }
    }

    pub fn serialize(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinate_errors() {
        assert!(matches!(parse_ordinates(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_ordinates("1.0\nfoo\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_ordinates("2.0\n3.0\n2.5\n"), Err(Error::Ordering { line: 3, .. })));
    }

    #[test]
    fn bundled_start() {
        let o = bundled_zeta_ordinates();
        assert_eq!(o.len(), 10_000);
        assert!((o[0] - 14.134_725_141_7).abs() < 1e-10);
    }

    #[test]
    fn zero_document_roundtrip() {
        let doc = ZeroDocument {
            lines: vec![
                ZeroLine::Zero { re: 0.1, im: 77.164_816_421_802_27, multiplicity: 1, residual: 3e-15 },
                ZeroLine::Pole { re: 1.0, im: 0.0 },
            ],
        };
        let text = doc.serialize();
        assert_eq!(ZeroDocument::parse(&text).unwrap(), doc);
        assert_eq!(ZeroDocument::parse(&text).unwrap().serialize(), text);
    }
}
