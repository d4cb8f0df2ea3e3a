use std::collections::HashMap;

use crate::linalg::{kernel_basis, rank, ExactMatrix, Matrix, Scalar};
use crate::poly::polynomial::apply_monomial;
use crate::poly::{monomial_basis, Form, Monomial, Polynomial, Ring};

/// The map `h -> h ∘ F` from `T_i` to `S_{d-i}` in monomial bases.
#[derive(Clone, Debug)]
pub struct Catalecticant {
    pub i: u32,
    /// Primal monomials of degree `d - i` indexing the rows.
    pub rows: Vec<Monomial>,
    /// Dual monomials of degree `i` indexing the columns.
    pub cols: Vec<Monomial>,
    pub matrix: ExactMatrix,
}

impl Catalecticant {
    pub fn rank(&self) -> usize {
        rank(&self.matrix)
    }
}

/// `Cat_{i, d-i}(F)`; entry `(m, m')` is the coefficient of `m` in `m' ∘ F`.
pub fn catalecticant(f: &Form, i: u32) -> Catalecticant {
    let d = f.degree();
    assert!(i <= d, "catalecticant index exceeds the degree");
    let n = f.nvars();
    let rows = monomial_basis(n, d - i, None);
    let cols = monomial_basis(n, i, None);
    let matrix = contraction_matrix(f.poly(), &rows, &cols);
    Catalecticant { i, rows, cols, matrix }
}

/// Matrix of `m' ∘ F` for `m'` in `cols`, with coordinates over `rows`.
pub(crate) fn contraction_matrix(f: &Polynomial, rows: &[Monomial], cols: &[Monomial]) -> ExactMatrix {
    let index: HashMap<&Monomial, usize> = rows.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut data = vec![Scalar::from_integer(0.into()); rows.len() * cols.len()];
    for (c, a) in cols.iter().enumerate() {
        for (b, coef) in f.terms() {
            if let Some((k, q)) = apply_monomial(a, b) {
                if let Some(&r) = index.get(&q) {
                    data[r * cols.len() + c] += coef * Scalar::from_integer(k);
                }
            }
        }
    }
    Matrix::new(rows.len(), cols.len(), data).expect("shape")
}

/// Matrix of `m' ∘ F` for `m'` in `cols`, rows indexed by whatever monomials occur.
pub(crate) fn image_matrix(f: &Polynomial, cols: &[Monomial]) -> ExactMatrix {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, Scalar)> = Vec::new();
    for (c, a) in cols.iter().enumerate() {
        for (b, coef) in f.terms() {
            if let Some((k, q)) = apply_monomial(a, b) {
                let next = index.len();
                let r = *index.entry(q).or_insert(next);
                entries.push((r, c, coef * Scalar::from_integer(k)));
            }
        }
    }
    let mut m: ExactMatrix = Matrix::zeros(index.len(), cols.len());
    for (r, c, v) in entries {
        let cur = m.get(r, c).clone();
        m.set(r, c, cur + v);
    }
    m
}

/// Basis of `Ann(F)_k`.
pub fn annihilator_component(f: &Form, k: u32) -> Vec<Polynomial> {
    let n = f.nvars();
    let cols = monomial_basis(n, k, None);
    if k > f.degree() {
        return cols.into_iter().map(|m| Polynomial::monomial(Ring::Dual, m, Scalar::from_integer(1.into()))).collect();
    }
    let m = image_matrix(f.poly(), &cols);
    kernel_basis(&m)
        .into_iter()
        .map(|v| Polynomial::from_terms(Ring::Dual, n, cols.iter().cloned().zip(v).collect()))
        .collect()
}
