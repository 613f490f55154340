//! Coverage curves and their CSV/JSON serialization.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::antenna::PatternKind;
use crate::error::{Error, Result};

/// How a curve was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Ad hoc series bound with the sinc pattern.
    AnalyticProp1,
    /// Cellular coverage with the cosine pattern.
    AnalyticProp2,
    /// Jensen bound on the cellular coverage.
    AnalyticCor2,
    /// Large-array outage asymptote, reported as coverage.
    Asymptotic,
    McActual,
    McSinc,
    McCos,
    McFlattop,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::AnalyticProp1,
        Method::AnalyticProp2,
        Method::AnalyticCor2,
        Method::Asymptotic,
        Method::McActual,
        Method::McSinc,
        Method::McCos,
        Method::McFlattop,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::AnalyticProp1 => "analytic_prop1",
            Method::AnalyticProp2 => "analytic_prop2",
            Method::AnalyticCor2 => "analytic_cor2",
            Method::Asymptotic => "asymptotic",
            Method::McActual => "mc_actual",
            Method::McSinc => "mc_sinc",
            Method::McCos => "mc_cos",
            Method::McFlattop => "mc_flattop",
        }
    }

    /// The simulated pattern for Monte Carlo methods.
    pub fn pattern(self) -> Option<PatternKind> {
        match self {
            Method::McActual => Some(PatternKind::Actual),
            Method::McSinc => Some(PatternKind::Sinc),
            Method::McCos => Some(PatternKind::Cosine),
            Method::McFlattop => Some(PatternKind::FlatTop),
            _ => None,
        }
    }

    pub fn is_monte_carlo(self) -> bool {
        self.pattern().is_some()
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::Config(format!("unknown method '{s}'")))
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub x: f64,
    pub p: f64,
    pub stderr: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveMeta {
    pub method: Method,
    pub seed: Option<u64>,
    /// Echo of the configuration; not carried by the CSV form.
    #[serde(default)]
    pub config: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverageCurve {
    /// One of `tau_db`, `n_t`, `lambda_b`.
    pub sweep_name: String,
    pub points: Vec<CurvePoint>,
    pub meta: CurveMeta,
}

pub const SWEEP_NAMES: [&str; 3] = ["tau_db", "n_t", "lambda_b"];

impl CoverageCurve {
    pub fn validate(&self) -> Result<()> {
        if !SWEEP_NAMES.contains(&self.sweep_name.as_str()) {
            return Err(Error::Config(format!("unknown sweep '{}'", self.sweep_name)));
        }
        if self.points.windows(2).any(|w| !(w[1].x > w[0].x)) {
            return Err(Error::Config("sweep values must be strictly increasing".into()));
        }
        if let Some(pt) = self.points.iter().find(|pt| !(0.0..=1.0).contains(&pt.p)) {
            return Err(Error::Validity(format!("probability {} outside [0, 1]", pt.p)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Config(format!("unknown format '{other}'"))),
        }
    }
}

/// C-style `%.10g`.
pub fn format_g10(x: f64) -> String {
    format_g(x, 10)
}

pub fn format_g(x: f64, precision: usize) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let p = precision.max(1);
    // rounding to p significant digits fixes the exponent
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= p as i32 {
        let m = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (p as i32 - 1 - exp).max(0) as usize;
        strip_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub const CSV_HEADER: [&str; 6] = ["sweep", "x", "p", "stderr", "method", "seed"];

/// Writes curves in order; CSV rows share a single header.
pub fn emit_curves(curves: &[CoverageCurve], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER).map_err(csv_err)?;
            for c in curves {
                let seed = c.meta.seed.map(|s| s.to_string()).unwrap_or_default();
                for pt in &c.points {
                    let stderr = pt.stderr.map(format_g10).unwrap_or_default();
                    w.write_record([
                        c.sweep_name.as_str(),
                        &format_g10(pt.x),
                        &format_g10(pt.p),
                        &stderr,
                        c.meta.method.tag(),
                        &seed,
                    ])
                    .map_err(csv_err)?;
                }
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, curves).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn emit_curve(curve: &CoverageCurve, format: Format, out: &mut dyn Write) -> Result<()> {
    emit_curves(std::slice::from_ref(curve), format, out)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// Reads curves back from CSV; consecutive rows with the same sweep, method
/// and seed form one curve. The configuration echo is not part of the CSV.
pub fn parse_csv(text: &str) -> Result<Vec<CoverageCurve>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().map_err(csv_err)?.clone();
    if headers.iter().collect::<Vec<_>>() != CSV_HEADER {
        return Err(Error::Config(format!("unexpected CSV header {headers:?}")));
    }
    let num = |s: &str| -> Result<f64> { s.parse().map_err(|_| Error::Config(format!("bad number '{s}'"))) };
    let mut curves: Vec<CoverageCurve> = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_err)?;
        let method: Method = rec[4].parse()?;
        let seed = if rec[5].is_empty() {
            None
        } else {
            Some(rec[5].parse().map_err(|_| Error::Config(format!("bad seed '{}'", &rec[5])))?)
        };
        let stderr = if rec[3].is_empty() { None } else { Some(num(&rec[3])?) };
        let point = CurvePoint {
            x: num(&rec[1])?,
            p: num(&rec[2])?,
            stderr,
        };
        match curves.last_mut() {
            Some(c) if c.sweep_name == rec[0] && c.meta.method == method && c.meta.seed == seed => c.points.push(point),
            _ => curves.push(CoverageCurve {
                sweep_name: rec[0].to_string(),
                points: vec![point],
                meta: CurveMeta {
                    method,
                    seed,
                    config: serde_json::Value::Null,
                },
            }),
        }
    }
    Ok(curves)
}

pub fn parse_json(text: &str) -> Result<Vec<CoverageCurve>> {
    serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_format_matches_c() {
        let cases = [
            (0.5, "0.5"),
            (1.0, "1"),
            (123456.0, "123456"),
            (1e-5, "1e-05"),
            (0.0001234, "0.0001234"),
            (1234567890123.0, "1.23456789e+12"),
            (-2.5e10, "-2.5e+10"),
            (0.1 + 0.2, "0.3"),
            (2.0f64.sqrt(), "1.414213562"),
            (9999999999.5, "1e+10"),
        ];
        for (x, want) in cases {
            assert_eq!(format_g10(x), want, "{x}");
        }
    }

    #[test]
    fn header_only_for_empty_curve() {
        let c = CoverageCurve {
            sweep_name: "tau_db".into(),
            points: vec![],
            meta: CurveMeta {
                method: Method::AnalyticProp1,
                seed: None,
                config: serde_json::Value::Null,
            },
        };
        let mut buf = Vec::new();
        emit_curve(&c, Format::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "sweep,x,p,stderr,method,seed\n");
    }

    #[test]
    fn method_tags_parse() {
        for m in Method::ALL {
            assert_eq!(m.tag().parse::<Method>().unwrap(), m);
        }
    }
}
