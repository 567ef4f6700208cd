//! Selection probabilities, normalized entropy estimators and complexity.

mod chao_shen;
mod complexity;
mod curve;
mod entropy;
mod probability;

use std::fmt;
use std::str::FromStr;

pub use chao_shen::{chao_shen_entropy, chao_shen_entropy_with_denominator, ChaoShenEstimate};
pub use complexity::{complexity_curve, complexity_value, ComplexityCurve, MAX_COMPLEXITY};
pub use curve::{entropy_curve, EntropyCurve};
pub use entropy::{normalization, plugin_entropy, shannon_bits};
pub use probability::selection_probabilities;

/// Tolerance on probability sums.
pub const PROB_SUM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Estimator {
    /// Relative frequencies plugged into the normalized Shannon entropy.
    Plugin,
    /// Coverage-adjusted estimator with the singleton count.
    #[default]
    ChaoShen,
}

impl Estimator {
    pub fn as_str(self) -> &'static str {
        match self {
            Estimator::Plugin => "plugin",
            Estimator::ChaoShen => "chao-shen",
        }
    }
}

impl fmt::Display for Estimator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Estimator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plugin" => Ok(Estimator::Plugin),
            "chao-shen" => Ok(Estimator::ChaoShen),
            other => Err(format!(
                "unknown estimator `{other}` (expected `plugin` or `chao-shen`)"
            )),
        }
    }
}

/// Which count divides `n_a(τ)` when forming selection probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DenominatorMode {
    /// The full panel, `n_r · n_p`; probabilities sum to `N(τ)/(n_r·n_p)`.
    Panel,
    /// Only measurements with a dominant attribute, `N(τ)`; probabilities sum to 1.
    #[default]
    Active,
}

impl DenominatorMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DenominatorMode::Panel => "panel",
            DenominatorMode::Active => "active",
        }
    }
}

impl fmt::Display for DenominatorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DenominatorMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "panel" => Ok(DenominatorMode::Panel),
            "active" => Ok(DenominatorMode::Active),
            other => Err(format!(
                "unknown denominator `{other}` (expected `panel` or `active`)"
            )),
        }
    }
}

/// Provenance flags carried by a curve point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointFlags {
    /// No measurement had a dominant attribute; the value is a placeholder 0.
    pub no_data: bool,
    /// The estimate exceeded 1 and was clamped.
    pub clamped: bool,
    /// Every observation was a singleton; the singleton count was reduced by one.
    pub singleton_fallback: bool,
}

impl PointFlags {
    pub const NO_DATA: PointFlags = PointFlags {
        no_data: true,
        clamped: false,
        singleton_fallback: false,
    };

    pub fn is_empty(&self) -> bool {
        !(self.no_data || self.clamped || self.singleton_fallback)
    }

    pub fn union(self, other: PointFlags) -> PointFlags {
        PointFlags {
            no_data: self.no_data || other.no_data,
            clamped: self.clamped || other.clamped,
            singleton_fallback: self.singleton_fallback || other.singleton_fallback,
        }
    }
}

impl fmt::Display for PointFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = [
            (self.no_data, "no-data"),
            (self.clamped, "clamped"),
            (self.singleton_fallback, "singleton-fallback"),
        ];
        let mut first = true;
        for (_, name) in names.iter().filter(|(set, _)| *set) {
            if !first {
                f.write_str(";")?;
            }
            f.write_str(name)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for PointFlags {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut flags = PointFlags::default();
        for part in s.split(';').filter(|p| !p.is_empty()) {
            match part {
                "no-data" => flags.no_data = true,
                "clamped" => flags.clamped = true,
                "singleton-fallback" => flags.singleton_fallback = true,
                other => return Err(format!("unknown flag `{other}`")),
            }
        }
        Ok(flags)
    }
}

/// One `(τ, value, flags)` sample of a curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub tau: f64,
    pub value: f64,
    pub flags: PointFlags,
}
