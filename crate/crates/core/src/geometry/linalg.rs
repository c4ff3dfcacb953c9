use nalgebra::DMatrix;

fn to_matrix(m: &[Vec<f64>]) -> DMatrix<f64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    DMatrix::from_fn(rows, cols, |i, j| m[i][j])
}

/// Determinant of a square real matrix (LU with partial pivoting).
pub fn real_det(m: &[Vec<f64>]) -> f64 {
    if m.is_empty() {
        return 1.0;
    }
    to_matrix(m).lu().determinant()
}

/// Numerical rank: singular values above `tol · σ_max` count.
pub fn real_rank(m: &[Vec<f64>], tol: f64) -> usize {
    let a = to_matrix(m);
    if a.is_empty() {
        return 0;
    }
    let svd = a.svd(false, false);
    let smax = svd.singular_values.max();
    if smax == 0.0 {
        return 0;
    }
    svd.singular_values.iter().filter(|&&s| s > tol * smax).count()
}
