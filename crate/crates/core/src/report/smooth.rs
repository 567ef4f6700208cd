pub const DEFAULT_SMOOTHING_WINDOW: usize = 5;

/// Centered moving average over an odd `window`; the window shrinks
/// symmetrically near the ends. A window of 1 returns the input.
pub fn moving_average(values: &[f64], window: usize) -> Vec<f64> {
    assert!(
        window % 2 == 1,
        "smoothing window must be odd, got {window}"
    );
    let half = window / 2;
    let n = values.len();
    (0..n)
        .map(|i| {
            let h = half.min(i).min(n - 1 - i);
            let slice = &values[i - h..=i + h];
            slice.iter().sum::<f64>() / slice.len() as f64
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn averages() {
        assert_eq!(moving_average(&[1.0, 2.0, 3.0], 1), vec![1.0, 2.0, 3.0]);
        assert_eq!(
            moving_average(&[0.0, 3.0, 0.0, 3.0, 0.0], 3),
            vec![0.0, 1.0, 2.0, 1.0, 0.0]
        );
        assert_eq!(moving_average(&[2.0; 7], 5), vec![2.0; 7]);
        assert!(moving_average(&[], 5).is_empty());
    }

    #[test]
    #[should_panic]
    fn even_window() {
        moving_average(&[1.0], 4);
    }
}
