use super::PROB_SUM_TOLERANCE;
use crate::error::{domain, Result};

/// Normalization factor `K = 1 / log₂ N_a`.
pub fn normalization(n_attributes: usize) -> Result<f64> {
    if n_attributes < 2 {
        return Err(domain(format!(
            "normalization needs at least 2 attributes, got {n_attributes}"
        )));
    }
    Ok(1.0 / (n_attributes as f64).log2())
}

/// Unnormalized Shannon entropy `Σ −p log₂ p` in bits, with `0 · log₂ 0 = 0`.
pub fn shannon_bits(p: &[f64]) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2()).sum()
}

/// Normalized plugin entropy `H = −K Σ p log₂ p`, `K = 1/log₂ N_a`.
///
/// `p` may list fewer than `N_a` entries; missing attributes have probability 0.
pub fn plugin_entropy(p: &[f64], n_attributes: usize) -> Result<f64> {
    let k = normalization(n_attributes)?;
    if p.len() > n_attributes {
        return Err(domain(format!(
            "{} probabilities for {n_attributes} attributes",
            p.len()
        )));
    }
    if let Some(bad) = p.iter().find(|&&x| !(x >= 0.0)) {
        return Err(domain(format!("probability {bad} is negative")));
    }
    let total: f64 = p.iter().sum();
    if total > 1.0 + PROB_SUM_TOLERANCE {
        return Err(domain(format!("probabilities sum to {total} > 1")));
    }
    let h = k * shannon_bits(p);
    debug_assert!(
        h > -PROB_SUM_TOLERANCE && h < 1.0 + PROB_SUM_TOLERANCE,
        "h = {h}"
    );
    // `+ 0.0` turns a -0.0 sum into 0.0
    Ok(h.clamp(0.0, 1.0) + 0.0)
}
