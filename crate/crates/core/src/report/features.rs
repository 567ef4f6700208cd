use crate::error::{Error, Result};
use crate::estimators::EntropyCurve;

/// Shape summary of an entropy curve, computed over points with data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveFeatures {
    pub first_defined_tau: f64,
    pub h_first: f64,
    pub h_max: f64,
    /// Smallest τ attaining `h_max`.
    pub tau_argmax: f64,
    /// Value at the last point with data, i.e. at swallowing.
    pub h_swallow: f64,
    /// `h_max > h_first` and `h_swallow < h_max`.
    pub rise_then_fall: bool,
}

pub fn curve_features(curve: &EntropyCurve) -> Result<CurveFeatures> {
    let mut defined = curve.points.iter().filter(|p| !p.flags.no_data);
    let first = defined.next().ok_or_else(|| {
        Error::NoData(format!(
            "entropy curve of `{}` has no data",
            curve.sample_id
        ))
    })?;
    let (mut h_max, mut tau_argmax, mut last) = (first.value, first.tau, first);
    for p in defined {
        if p.value > h_max {
            h_max = p.value;
            tau_argmax = p.tau;
        }
        last = p;
    }
    Ok(CurveFeatures {
        first_defined_tau: first.tau,
        h_first: first.value,
        h_max,
        tau_argmax,
        h_swallow: last.value,
        rise_then_fall: h_max > first.value && last.value < h_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimators::{CurvePoint, DenominatorMode, Estimator, PointFlags};

    fn curve(values: &[f64]) -> EntropyCurve {
        EntropyCurve {
            sample_id: "s".into(),
            estimator: Estimator::ChaoShen,
            mode: DenominatorMode::Active,
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
    fn constant() {
        let f = curve_features(&curve(&[0.4; 101])).unwrap();
        assert_eq!(f.h_max, 0.4);
        assert_eq!(f.tau_argmax, 0.0);
        assert!(!f.rise_then_fall);
    }

    #[test]
    fn tent() {
        let v: Vec<f64> = (0..=100)
            .map(|k| {
                if k <= 50 {
                    k as f64 / 50.0
                } else {
                    1.0 - 0.5 * (k - 50) as f64 / 50.0
                }
            })
            .collect();
        let f = curve_features(&curve(&v)).unwrap();
        assert_eq!(f.tau_argmax, 50.0);
        assert_eq!(f.h_swallow, 0.5);
        assert_eq!(f.h_first, 0.0);
        assert!(f.rise_then_fall);
    }

    #[test]
    fn skips_no_data_and_ties_go_left() {
        let mut c = curve(&[0.0, 0.0, 0.3, 0.7, 0.7, 0.2]);
        c.points[0].flags = PointFlags::NO_DATA;
        c.points[1].flags = PointFlags::NO_DATA;
        let f = curve_features(&c).unwrap();
        assert_eq!(f.first_defined_tau, 2.0);
        assert_eq!(f.h_first, 0.3);
        assert_eq!(f.tau_argmax, 3.0);
        // appending no-data points changes nothing
        let mut longer = c.clone();
        longer.points.push(CurvePoint {
            tau: 6.0,
            value: 0.0,
            flags: PointFlags::NO_DATA,
        });
        assert_eq!(curve_features(&longer).unwrap(), f);
    }

    #[test]
    fn all_no_data_is_error() {
        let mut c = curve(&[0.0; 3]);
        for p in &mut c.points {
            p.flags = PointFlags::NO_DATA;
        }
        assert!(curve_features(&c).is_err());
    }
}
