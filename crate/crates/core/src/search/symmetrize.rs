//! Column/row compression and the close-pair count it rests on.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::gauss::GaussInt;
use crate::point_set::PointSet;

/// `m` consecutive integers centred at 0 (odd `m`) or 1/2 (even `m`).
pub fn centered_segment(m: usize) -> Vec<i64> {
    let m = m as i64;
    let start = if m % 2 == 1 { -(m - 1) / 2 } else { 1 - m / 2 };
    (start..start + m).collect()
}

/// Replaces the points on every vertical line by a centred segment of the
/// same size.
pub fn compress_columns(set: &PointSet) -> PointSet {
    let mut columns: BTreeMap<&BigInt, usize> = BTreeMap::new();
    for z in set {
        *columns.entry(&z.re).or_default() += 1;
    }
    let points = columns
        .into_iter()
        .flat_map(|(re, m)| centered_segment(m).into_iter().map(move |y| GaussInt { re: re.clone(), im: y.into() }));
    PointSet::new(points.collect()).expect("segments are distinct")
}

/// [`compress_columns`] for horizontal lines.
pub fn compress_rows(set: &PointSet) -> PointSet {
    let transpose = |z: &GaussInt| GaussInt { re: z.im.clone(), im: z.re.clone() };
    compress_columns(&set.map(transpose)).map(transpose)
}

/// `|{(a, b) : |a - b| <= k}|`.
pub fn count_close_pairs(a: &[i64], b: &[i64], k: u64) -> u64 {
    a.iter().map(|x| b.iter().filter(|y| x.abs_diff(**y) <= k).count() as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(pairs: &[(i64, i64)]) -> PointSet {
        PointSet::from_pairs(pairs).unwrap()
    }

    #[test]
    fn segments() {
        assert_eq!(centered_segment(1), vec![0]);
        assert_eq!(centered_segment(2), vec![0, 1]);
        assert_eq!(centered_segment(3), vec![-1, 0, 1]);
        assert_eq!(centered_segment(4), vec![-1, 0, 1, 2]);
        assert!(centered_segment(0).is_empty());
    }

    #[test]
    fn compression_examples() {
        assert_eq!(compress_columns(&set(&[(0, 0), (0, 2)])), set(&[(0, 0), (0, 1)]));
        assert_eq!(compress_columns(&set(&[(5, 0)])), set(&[(5, 0)]));
        assert_eq!(compress_columns(&set(&[(5, 7)])), set(&[(5, 0)]));
        assert_eq!(compress_columns(&set(&[(0, 0), (0, 2), (1, 0)])), set(&[(0, 0), (0, 1), (1, 0)]));
        assert_eq!(compress_rows(&set(&[(0, 0), (2, 0)])), set(&[(0, 0), (1, 0)]));
    }

    #[test]
    fn close_pair_examples() {
        assert_eq!(count_close_pairs(&[0, 1], &[0, 1], 0), 2);
        assert_eq!(count_close_pairs(&[0, 1], &[5], 3), 0);
        assert_eq!(count_close_pairs(&[0, 1, 2], &[1], 1), 3);
        assert_eq!(count_close_pairs(&[], &[1], 1), 0);
    }
}
