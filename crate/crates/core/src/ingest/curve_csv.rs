use std::fmt::Write as _;

use super::{IngestError, LineError};
use crate::estimators::{ComplexityCurve, CurvePoint, EntropyCurve, PointFlags};

pub const CURVE_HEADER: &str = "sample,estimator,denominator,tau,value,flags";

/// A labeled `(τ, value, flags)` series as stored in a curve table.
///
/// Entropy curves use the estimator name as label (`plugin`, `chao-shen`);
/// complexity curves prefix it with `complexity:`; dominance-rate series use
/// `tds:<attribute>` and `tds:chance`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSeries {
    pub sample_id: String,
    pub estimator: String,
    pub denominator: String,
    pub points: Vec<CurvePoint>,
}

impl From<&EntropyCurve> for CurveSeries {
    fn from(c: &EntropyCurve) -> Self {
        Self {
            sample_id: c.sample_id.clone(),
            estimator: c.estimator.to_string(),
            denominator: c.mode.to_string(),
            points: c.points.clone(),
        }
    }
}

impl From<&ComplexityCurve> for CurveSeries {
    fn from(c: &ComplexityCurve) -> Self {
        Self {
            sample_id: c.sample_id.clone(),
            estimator: format!("complexity:{}", c.estimator),
            denominator: c.mode.to_string(),
            points: c.points.clone(),
        }
    }
}

impl TryFrom<&CurveSeries> for EntropyCurve {
    type Error = String;

    fn try_from(s: &CurveSeries) -> Result<Self, Self::Error> {
        Ok(EntropyCurve {
            sample_id: s.sample_id.clone(),
            estimator: s.estimator.parse()?,
            mode: s.denominator.parse()?,
            points: s.points.clone(),
        })
    }
}

/// Writes series as a curve table, one row per point, LF line endings.
///
/// Values are written in the shortest form that parses back to the same
/// `f64`, so a write/parse cycle is bit-exact.
pub fn write_curve_csv(series: &[CurveSeries]) -> Result<String, IngestError> {
    if series.is_empty() || series.iter().any(|s| s.points.is_empty()) {
        return Err(IngestError::EmptyCurve);
    }
    let rows: usize = series.iter().map(|s| s.points.len()).sum();
    let mut out = String::with_capacity(48 * (rows + 1));
    out.push_str(CURVE_HEADER);
    out.push('\n');
    for s in series {
        for p in &s.points {
            let _ = writeln!(
                out,
                "{},{},{},{},{:?},{}",
                s.sample_id, s.estimator, s.denominator, p.tau, p.value, p.flags
            );
        }
    }
    Ok(out)
}

/// Parses a curve table. Rows sharing (sample, estimator, denominator) form
/// one series, in order of first appearance.
pub fn parse_curve_csv(text: &str) -> Result<Vec<CurveSeries>, IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    match records.next() {
        Some(Ok(h)) if h.iter().eq(CURVE_HEADER.split(',')) => {}
        _ => {
            return Err(IngestError::at(
                1,
                format!("expected header `{CURVE_HEADER}`"),
            ))
        }
    }

    let mut series: Vec<CurveSeries> = Vec::new();
    let mut errors = Vec::new();
    for record in records {
        let record = match record {
            Ok(r) => r,
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line() as usize);
                errors.push(LineError::new(line, e.to_string()));
                continue;
            }
        };
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != 6 {
            errors.push(LineError::new(
                line,
                format!("expected 6 fields, found {}", record.len()),
            ));
            continue;
        }
        let tau = record[3].parse::<f64>();
        let value = record[4].parse::<f64>();
        let flags = record[5].parse::<PointFlags>();
        let (tau, value, flags) = match (tau, value, flags) {
            (Ok(t), Ok(v), Ok(f)) => (t, v, f),
            (Err(_), _, _) => {
                errors.push(LineError::new(
                    line,
                    format!("tau `{}` is not a number", &record[3]),
                ));
                continue;
            }
            (_, Err(_), _) => {
                errors.push(LineError::new(
                    line,
                    format!("value `{}` is not a number", &record[4]),
                ));
                continue;
            }
            (_, _, Err(msg)) => {
                errors.push(LineError::new(line, msg));
                continue;
            }
        };
        let point = CurvePoint { tau, value, flags };
        match series.iter_mut().find(|s| {
            s.sample_id == record[0] && s.estimator == record[1] && s.denominator == record[2]
        }) {
            Some(s) => s.points.push(point),
            None => series.push(CurveSeries {
                sample_id: record[0].to_owned(),
                estimator: record[1].to_owned(),
                denominator: record[2].to_owned(),
                points: vec![point],
            }),
        }
    }
    if !errors.is_empty() {
        return Err(IngestError::Invalid(errors));
    }
    if series.is_empty() {
        return Err(IngestError::at(2, "curve table has no rows"));
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series(values: &[f64]) -> CurveSeries {
        CurveSeries {
            sample_id: "gel".into(),
            estimator: "chao-shen".into(),
            denominator: "active".into(),
            points: values
                .iter()
                .enumerate()
                .map(|(k, &value)| CurvePoint {
                    tau: k as f64,
                    value,
                    flags: PointFlags::default(),
                })
                .collect(),
        }
    }

    #[test]
    fn row_count() {
        let text = write_curve_csv(&[series(&[0.5; 101])]).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 102);
        assert_eq!(lines[0], CURVE_HEADER);
    }

    #[test]
    fn no_data_row() {
        let mut s = series(&[0.0, 0.3]);
        s.points[0].flags = PointFlags::NO_DATA;
        let text = write_curve_csv(&[s]).unwrap();
        assert_eq!(
            text.lines().nth(1).unwrap(),
            "gel,chao-shen,active,0,0.0,no-data"
        );
        assert_eq!(text.lines().nth(2).unwrap(), "gel,chao-shen,active,1,0.3,");
    }

    #[test]
    fn empty_is_error() {
        assert_eq!(write_curve_csv(&[]), Err(IngestError::EmptyCurve));
        assert_eq!(
            write_curve_csv(&[series(&[])]),
            Err(IngestError::EmptyCurve)
        );
    }

    #[test]
    fn bad_rows_carry_lines() {
        let text = format!("{CURVE_HEADER}\ngel,plugin,active,0,0.1,\ngel,plugin,active,1,x,\ngel,plugin,active,2,0.1,weird\n");
        let err = parse_curve_csv(&text).unwrap_err();
        let lines: Vec<usize> = err.lines().iter().map(|e| e.line).collect();
        assert_eq!(lines, vec![3, 4]);
    }

    #[test]
    fn groups_series() {
        let mut b = series(&[0.2, 0.4]);
        b.estimator = "complexity:chao-shen".into();
        let both = vec![series(&[0.1, 0.2]), b];
        let parsed = parse_curve_csv(&write_curve_csv(&both).unwrap()).unwrap();
        assert_eq!(parsed, both);
    }

    proptest! {
        #[test]
        fn roundtrip_is_exact(
            values in prop::collection::vec(prop_oneof![0.0f64..=1.0, Just(0.0), Just(1.0), Just(0.5), 1e-300f64..1e-200], 1..120),
            flag_bits in prop::collection::vec(0u8..8, 120),
        ) {
            let mut s = series(&values);
            for (p, bits) in s.points.iter_mut().zip(&flag_bits) {
                p.flags = PointFlags { no_data: bits & 1 != 0, clamped: bits & 2 != 0, singleton_fallback: bits & 4 != 0 };
                p.tau = p.tau * 100.0 / 7.0;
            }
            let text = write_curve_csv(std::slice::from_ref(&s)).unwrap();
            let parsed = parse_curve_csv(&text).unwrap();
            prop_assert_eq!(parsed.len(), 1);
            for (a, b) in parsed[0].points.iter().zip(&s.points) {
                prop_assert_eq!(a.tau.to_bits(), b.tau.to_bits());
                prop_assert_eq!(a.value.to_bits(), b.value.to_bits());
                prop_assert_eq!(a.flags, b.flags);
            }
        }
    }
}
