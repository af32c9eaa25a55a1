//! Order-preserving scans over index ranges, parallel when the `parallel`
//! feature is enabled and sequential otherwise.
//!
//! Validators walk large cartesian index spaces and collect the coordinates of
//! failing cases. Both implementations return failures in ascending index
//! order, so reports are byte-identical regardless of the execution mode.

/// Applies `f` to every index in `0..n` and collects the `Some` results in
/// index order.
#[cfg(feature = "parallel")]
pub fn scan<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().filter_map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn scan<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    scan_seq(n, f)
}

/// Sequential reference implementation with the same contract as [`scan`].
pub fn scan_seq<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> Option<T>,
{
    (0..n).filter_map(f).collect()
}

/// Decodes a flat index into mixed-radix coordinates (last axis fastest).
pub fn unrank(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = idx % d;
        idx /= d;
    }
    out
}

/// Inverse of [`unrank`].
pub fn rank(coords: &[usize], dims: &[usize]) -> usize {
    let mut idx = 0;
    for (&c, &d) in coords.iter().zip(dims) {
        debug_assert!(c < d);
        idx = idx * d + c;
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_agrees_with_sequential_and_preserves_order() {
        let f = |i: usize| if i.is_multiple_of(3) { Some(i * i) } else { None };
        assert_eq!(scan(100, f), scan_seq(100, f));
        let got = scan(10, |i| if i.is_multiple_of(2) { Some(i) } else { None });
        assert_eq!(got, vec![0, 2, 4, 6, 8]);
    }

    #[test]
    fn rank_unrank_roundtrip() {
        let dims = [3, 4, 2];
        for i in 0..24 {
            let c = unrank(i, &dims);
            assert_eq!(rank(&c, &dims), i);
        }
        assert_eq!(unrank(23, &dims), vec![2, 3, 1]);
    }
}
