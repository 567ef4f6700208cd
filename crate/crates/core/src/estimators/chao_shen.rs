use super::entropy::normalization;
use super::PointFlags;
use crate::error::{domain, Error, Result};

/// A Chao–Shen estimate together with the corrections applied to reach it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChaoShenEstimate {
    pub value: f64,
    pub flags: PointFlags,
}

/// Normalized Chao–Shen entropy of a count vector.
///
/// With `N = Σ counts` and `m` the number of singletons, each observed
/// attribute contributes `−p̂ log₂ p̂ / (1 − (1 − p̂)^N)` where
/// `p̂ = (1 − m/N) · count/N`. When every observation is a singleton `m` is
/// reduced to `N − 1`; estimates above 1 are clamped. Both corrections are
/// reported in the flags.
pub fn chao_shen_entropy(counts: &[u32], n_attributes: usize) -> Result<ChaoShenEstimate> {
    let total = counts.iter().map(|&c| u64::from(c)).sum::<u64>();
    chao_shen_core(counts, n_attributes, total)
}

/// Chao–Shen entropy with raw probabilities `count / denominator`.
///
/// `denominator = N` is [`chao_shen_entropy`]. A larger `denominator`, such
/// as the whole panel `n_r · n_p`, keeps the coverage factor and exponent at
/// `N` but shrinks the raw probabilities.
pub fn chao_shen_entropy_with_denominator(
    counts: &[u32],
    n_attributes: usize,
    denominator: u32,
) -> Result<ChaoShenEstimate> {
    let total = counts.iter().map(|&c| u64::from(c)).sum::<u64>();
    if u64::from(denominator) < total {
        return Err(domain(format!(
            "denominator {denominator} is smaller than the {total} observations"
        )));
    }
    chao_shen_core(counts, n_attributes, u64::from(denominator))
}

fn chao_shen_core(
    counts: &[u32],
    n_attributes: usize,
    denominator: u64,
) -> Result<ChaoShenEstimate> {
    let k = normalization(n_attributes)?;
    if counts.len() > n_attributes {
        return Err(domain(format!(
            "{} counts for {n_attributes} attributes",
            counts.len()
        )));
    }
    let n: u64 = counts.iter().map(|&c| u64::from(c)).sum();
    if n == 0 {
        return Err(Error::NoData(
            "Chao-Shen estimate needs at least one observation".into(),
        ));
    }
    let mut flags = PointFlags::default();
    let mut singletons = counts.iter().filter(|&&c| c == 1).count() as u64;
    if singletons == n {
        singletons = n - 1;
        flags.singleton_fallback = true;
    }
    let n_f = n as f64;
    let coverage = 1.0 - singletons as f64 / n_f;
    let d = denominator as f64;

    let mut bits = 0.0;
    for &c in counts.iter().filter(|&&c| c > 0) {
        let p = coverage * f64::from(c) / d;
        // 1 − (1 − p)^N, computed without cancellation for small p
        let inclusion = -(n_f * (-p).ln_1p()).exp_m1();
        bits += -p * p.log2() / inclusion;
    }
    let mut value = k * bits;
    if value > 1.0 {
        value = 1.0;
        flags.clamped = true;
    }
    Ok(ChaoShenEstimate {
        value: value.max(0.0) + 0.0,
        flags,
    })
}
