//! Data-parallel helpers with a sequential fallback.
//!
//! Grid scans, contour sampling, and line scans map an evaluator over a
//! precomputed list of points. With the `parallel` feature (default) the map
//! runs on rayon; without it, it runs sequentially. Output order always
//! matches input order, and every reduction downstream folds sequentially
//! over that ordered buffer, so results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `items`, in parallel when enabled. Order-preserving.
#[cfg(feature = "parallel")]
pub fn map<T: Sync, U: Send, F: Fn(&T) -> U + Sync + Send>(items: &[T], f: F) -> Vec<U> {
    items.par_iter().map(f).collect()
}

/// Map `f` over `items`, in parallel when enabled. Order-preserving.
#[cfg(not(feature = "parallel"))]
pub fn map<T: Sync, U: Send, F: Fn(&T) -> U + Sync + Send>(items: &[T], f: F) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Sequential map with the same signature, kept as the benchmark baseline.
pub fn map_seq<T: Sync, U: Send, F: Fn(&T) -> U + Sync>(items: &[T], f: F) -> Vec<U> {
    items.iter().map(f).collect()
}

/// Cap the worker count. No-op without the `parallel` feature or with n = 0.
pub fn limit_jobs(n: usize) {
    #[cfg(feature = "parallel")]
    if n > 0 {
        // Ignore the error if a pool was already installed.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = n;
}

/// Index of the maximum value, ties resolved to the smallest index.
/// Deterministic regardless of how the values were produced.
pub fn argmax(values: &[f64]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, &v) in values.iter().enumerate() {
        match best {
            None => best = Some(i),
            Some(j) if v > values[j] => best = Some(i),
            _ => {}
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let xs: Vec<i64> = (0..1000).collect();
        let ys = map(&xs, |x| x * 2);
        assert_eq!(ys, map_seq(&xs, |x| x * 2));
    }

    #[test]
    fn argmax_breaks_ties_low() {
        assert_eq!(argmax(&[1.0, 3.0, 3.0, 2.0]), Some(1));
        assert_eq!(argmax(&[]), None);
    }
}
