//! Exact integer linear algebra: rank and determinants via fraction-free
//! Gaussian elimination.  Matrices here are tiny (at most 8 x 8), so the
//! `i128` intermediates of the Bareiss scheme never overflow.

/// Rank of an integer matrix (rows of equal length).
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..m.len() {
            for c in col + 1..cols {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square integer matrix.
pub fn determinant(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> =
        rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    assert!(m.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    let mut sign = 1i128;
    let mut prev = 1i128;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(col, pivot);
            sign = -sign;
        }
        for r in col + 1..n {
            for c in col + 1..n {
                m[r][c] = (m[col][col] * m[r][c] - m[r][col] * m[col][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[col][col];
    }
    sign * m[n - 1][n - 1]
}

/// Affine dimension of a set of integer points: the rank of the differences
/// to the first point.
pub fn affine_dimension(points: &[Vec<i64>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs)
}
