use crate::linalg::{rank, Matrix, Scalar};
use crate::poly::{rank_bareiss, Polynomial};
use crate::random::{random_point, rng};

/// Jacobian matrix: row `i` holds the partial derivatives of `forms[i]`.
pub fn jacobian(forms: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    forms.iter().map(|f| (0..f.nvars()).map(|j| f.derivative(j)).collect()).collect()
}

/// Algebraic independence by the Jacobian criterion (characteristic zero).
///
/// A full-rank random evaluation proves independence; otherwise the symbolic rank decides.
pub fn algebraically_independent(forms: &[Polynomial], seed: u64) -> bool {
    let Some(first) = forms.first() else { return true };
    let n = first.nvars();
    if forms.len() > n {
        return false;
    }
    let j = jacobian(forms);
    let mut r = rng(seed);
    for _ in 0..3 {
        let p = random_point(&mut r, n);
        let rows: Vec<Vec<Scalar>> = j.iter().map(|row| row.iter().map(|e| e.eval(&p)).collect()).collect();
        if rank(&Matrix::from_rows(rows, n).expect("shape")) == forms.len() {
            return true;
        }
    }
    rank_bareiss(&j) == forms.len()
}
