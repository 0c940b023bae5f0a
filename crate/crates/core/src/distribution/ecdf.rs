use crate::error::MetricError;
use crate::stats::sorted;

/// Empirical CDF of a finite sample.
#[derive(Debug, Clone, PartialEq)]
pub struct Ecdf {
    sorted_values: Vec<f64>,
}

impl Ecdf {
    pub fn new(sample: &[f64]) -> Result<Self, MetricError> {
        if sample.is_empty() {
            return Err(MetricError::EmptySample);
        }
        Ok(Ecdf {
            sorted_values: sorted(sample),
        })
    }

    /// Fraction of the sample `<= t`.
    pub fn evaluate(&self, t: f64) -> f64 {
        let count = self.sorted_values.partition_point(|&v| v <= t);
        count as f64 / self.sorted_values.len() as f64
    }

    pub fn sorted_values(&self) -> &[f64] {
        &self.sorted_values
    }

    pub fn len(&self) -> usize {
        self.sorted_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted_values.is_empty()
    }
}

/// Walks the pooled sorted sample and yields, for each distinct pooled point
/// `t` in ascending order, `(t, F_X(t), F_Y(t))`.
fn pooled_steps<'a>(xs: &'a [f64], ys: &'a [f64]) -> impl Iterator<Item = (f64, f64, f64)> + 'a {
    let n = xs.len() as f64;
    let m = ys.len() as f64;
    let (mut i, mut j) = (0usize, 0usize);
    std::iter::from_fn(move || {
        let t = match (xs.get(i), ys.get(j)) {
            (Some(&a), Some(&b)) => a.min(b),
            (Some(&a), None) => a,
            (None, Some(&b)) => b,
            (None, None) => return None,
        };
        while i < xs.len() && xs[i] <= t {
            i += 1;
        }
        while j < ys.len() && ys[j] <= t {
            j += 1;
        }
        Some((t, i as f64 / n, j as f64 / m))
    })
}

/// Two-sample Kolmogorov–Smirnov statistic `sup_t |F_X(t) - F_Y(t)|`.
pub fn ks_statistic(x: &[f64], y: &[f64]) -> Result<f64, MetricError> {
    let fx = Ecdf::new(x)?;
    let fy = Ecdf::new(y)?;
    let d = pooled_steps(fx.sorted_values(), fy.sorted_values())
        .map(|(_, a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    Ok(d.min(1.0))
}

/// 1-Wasserstein distance, computed exactly as the area between the two
/// step ECDFs.
pub fn wasserstein_1d(x: &[f64], y: &[f64]) -> Result<f64, MetricError> {
    let fx = Ecdf::new(x)?;
    let fy = Ecdf::new(y)?;
    let mut area = 0.0;
    let mut prev: Option<(f64, f64)> = None;
    for (t, a, b) in pooled_steps(fx.sorted_values(), fy.sorted_values()) {
        if let Some((t0, gap)) = prev {
            area += gap * (t - t0);
        }
        prev = Some((t, (a - b).abs()));
    }
    Ok(area)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ecdf_steps() {
        let f = Ecdf::new(&[3.0, 1.0, 2.0, 2.0]).unwrap();
        assert_eq!(f.evaluate(0.5), 0.0);
        assert_eq!(f.evaluate(1.0), 0.25);
        assert_eq!(f.evaluate(2.0), 0.75);
        assert_eq!(f.evaluate(2.5), 0.75);
        assert_eq!(f.evaluate(3.0), 1.0);
    }

    #[test]
    fn ks_examples() {
        let x = [0.3, 1.7, 2.2, 9.0];
        assert_eq!(ks_statistic(&x, &x).unwrap(), 0.0);
        let d = ks_statistic(&[1.0, 2.0, 3.0], &[1.0, 2.0, 4.0]).unwrap();
        assert!((d - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(ks_statistic(&[0.0, 0.0], &[1.0, 1.0]).unwrap(), 1.0);
    }

    #[test]
    fn ks_empty_errors() {
        assert_eq!(ks_statistic(&[], &[1.0]), Err(MetricError::EmptySample));
        assert_eq!(wasserstein_1d(&[1.0], &[]), Err(MetricError::EmptySample));
    }

    #[test]
    fn wd_examples() {
        let x = [0.3, 1.7, 2.2, 9.0];
        assert_eq!(wasserstein_1d(&x, &x).unwrap(), 0.0);
        assert!((wasserstein_1d(&[0.0, 1.0], &[1.0, 2.0]).unwrap() - 1.0).abs() < 1e-15);
        let shifted: Vec<f64> = x.iter().map(|v| v + 2.5).collect();
        assert!((wasserstein_1d(&x, &shifted).unwrap() - 2.5).abs() < 1e-12);
    }

    #[test]
    fn wd_unequal_sizes() {
        // F_X jumps to 1 at 0; F_Y is 1/2 on [0, 2): area 1/2 * 2 = 1
        assert!((wasserstein_1d(&[0.0], &[0.0, 2.0]).unwrap() - 1.0).abs() < 1e-15);
    }
}
