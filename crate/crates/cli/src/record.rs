//! Per-graph output records and their JSON/CSV renderings.

use std::io::Write;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use wiener_roots::{Annulus, ComplexRoot, Graph, WienerPolynomial};

/// Coefficients and the Wiener index fit in `u64` for every family order the
/// library constructs; larger values fall back to decimal strings.
fn big<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(x) => s.serialize_u64(x),
        Err(_) => s.collect_str(v),
    }
}

fn big_seq<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct One<'a>(&'a BigUint);
    impl Serialize for One<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            big(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        seq.serialize_element(&One(c))?;
    }
    seq.end()
}

/// `coefficients` are `d_1..d_D`; `roots` are the nonzero roots (0 is implicit).
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub graph_desc: String,
    #[serde(serialize_with = "big_seq")]
    pub coefficients: Vec<BigUint>,
    pub roots: Vec<ComplexRoot>,
    pub annulus: Option<Annulus>,
    #[serde(serialize_with = "big")]
    pub wiener_index: BigUint,
}

/// A line that could not be turned into a record.
#[derive(Debug, Serialize)]
pub struct ErrorRecord {
    pub graph_desc: String,
    pub error: String,
}

#[derive(Debug)]
pub enum Line {
    Ok(OutputRecord),
    Err(ErrorRecord),
}

impl OutputRecord {
    pub fn from_polynomial(graph_desc: String, w: &WienerPolynomial) -> Result<Self, String> {
        let reduced = w.reduce();
        let roots = reduced.roots().map_err(|e| e.to_string())?;
        Ok(OutputRecord {
            graph_desc,
            coefficients: w.counts().to_vec(),
            roots,
            annulus: reduced.annulus().ok(),
            wiener_index: w.wiener_index(),
        })
    }

    pub fn from_graph(graph_desc: String, g: &Graph) -> Result<Self, String> {
        let d = g.distance_distribution().map_err(|e| e.to_string())?;
        Self::from_polynomial(graph_desc, &WienerPolynomial::from(&d))
    }
}

/// 17 significant digits, with `-0` folded into `0` so output is canonical.
pub fn float(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
}

/// JSON Lines: one object per input.
pub fn write_json(out: &mut dyn Write, lines: &[Line]) -> std::io::Result<()> {
    for line in lines {
        let text = match line {
            Line::Ok(r) => serde_json::to_string(r),
            Line::Err(e) => serde_json::to_string(e),
        }
        .map_err(std::io::Error::other)?;
        writeln!(out, "{text}")?;
    }
    Ok(())
}

/// One row per input. Sequences are space-separated inside their cell;
/// roots are `re:im` pairs.
pub fn write_csv(out: &mut dyn Write, lines: &[Line]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "graph_desc",
        "coefficients",
        "wiener_index",
        "annulus_r",
        "annulus_R",
        "roots",
        "error",
    ])?;
    for line in lines {
        match line {
            Line::Ok(r) => {
                let (lo, hi) = r.annulus.as_ref().map_or((String::new(), String::new()), |a| {
                    (a.inner.to_string(), a.outer.to_string())
                });
                let roots = joined(r.roots.iter().map(|z| format!("{}:{}", float(z.re), float(z.im))));
                w.write_record([
                    r.graph_desc.clone(),
                    joined(&r.coefficients),
                    r.wiener_index.to_string(),
                    lo,
                    hi,
                    roots,
                    String::new(),
                ])?;
            }
            Line::Err(e) => {
                w.write_record([e.graph_desc.as_str(), "", "", "", "", "", e.error.as_str()])?;
            }
        }
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_format_is_lossless_and_canonical() {
        assert_eq!(float(-0.0), float(0.0));
        let x = -1.0f64 / 3.0;
        assert_eq!(float(x).parse::<f64>().unwrap(), x);
        assert_eq!(float(-2.0), "-2.0000000000000000e0");
    }

    #[test]
    fn json_record_shape() {
        let w = WienerPolynomial::from_counts(&[5, 1]).unwrap();
        let r = OutputRecord::from_polynomial("K4-e".into(), &w).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["coefficients"], serde_json::json!([5, 1]));
        assert_eq!(v["wiener_index"], 7);
        assert_eq!(v["roots"][0]["re"], -5.0);
        assert_eq!(v["roots"][0]["exact"], "-5");
        assert_eq!(v["annulus"]["R"], "5");
    }
}
