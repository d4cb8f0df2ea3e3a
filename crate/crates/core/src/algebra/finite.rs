use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// Sparse vector: sorted `(index, nonzero coefficient)` pairs.
pub type Sparse = Vec<(usize, Scalar)>;

/// Commutative unital algebra with basis `a_0 = 1, a_1, …` and structure constants `a_i a_j = Σ_k c^k_ij a_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteAlgebra {
    labels: Vec<String>,
    products: Vec<Vec<Sparse>>,
}

fn sparse_from_dense(v: &[Scalar]) -> Sparse {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

fn add_scaled(acc: &mut [Scalar], v: &Sparse, c: &Scalar) {
    for (k, x) in v {
        acc[*k] += x * c;
    }
}

impl FiniteAlgebra {
    /// Builds from dense products `products[i][j]` (length `dim` each) and checks the axioms.
    pub fn from_dense(labels: Vec<String>, products: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let m = labels.len();
        if products.len() != m || products.iter().any(|r| r.len() != m || r.iter().any(|v| v.len() != m)) {
            return Err(Error::InvalidAlgebra("structure constants do not match the dimension".into()));
        }
        let products = products.iter().map(|r| r.iter().map(|v| sparse_from_dense(v)).collect()).collect();
        let a = FiniteAlgebra { labels, products };
        a.validate()?;
        Ok(a)
    }

    /// Builds from constants `(i, j, k, c)` with `i ≤ j`; symmetry fills the rest.
    pub fn from_constants(labels: Vec<String>, constants: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let m = labels.len();
        let mut dense = vec![vec![vec![Scalar::zero(); m]; m]; m];
        for (i, j, k, c) in constants {
            let (i, j, k) = (*i, *j, *k);
            if i >= m || j >= m || k >= m {
                return Err(Error::InvalidAlgebra(format!("index out of range in c^{k}_({i},{j})")));
            }
            dense[i][j][k] = c.clone();
            dense[j][i][k] = c.clone();
        }
        Self::from_dense(labels, dense)
    }

    fn validate(&self) -> Result<()> {
        let m = self.dim();
        if m == 0 {
            return Err(Error::InvalidAlgebra("empty basis".into()));
        }
        for j in 0..m {
            if self.products[0][j] != vec![(j, Scalar::one())] {
                return Err(Error::InvalidAlgebra(format!("a_0 does not act as the unit on a_{j}")));
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                if self.products[i][j] != self.products[j][i] {
                    return Err(Error::InvalidAlgebra(format!("a_{i} a_{j} != a_{j} a_{i}")));
                }
            }
        }
        for i in 1..m {
            for j in i..m {
                for k in 1..m {
                    let mut left = vec![Scalar::zero(); m];
                    for (l, c) in &self.products[i][j] {
                        add_scaled(&mut left, &self.products[*l][k], c);
                    }
                    let mut right = vec![Scalar::zero(); m];
                    for (l, c) in &self.products[j][k] {
                        add_scaled(&mut right, &self.products[i][*l], c);
                    }
                    if left != right {
                        return Err(Error::InvalidAlgebra(format!("(a_{i} a_{j}) a_{k} != a_{i} (a_{j} a_{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `a_i a_j` as a sparse vector.
    pub fn product(&self, i: usize, j: usize) -> &Sparse {
        &self.products[i][j]
    }

    /// `c^k_ij`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.products[i][j].iter().find(|(l, _)| *l == k).map_or_else(Scalar::zero, |(_, c)| c.clone())
    }

    /// Nonzero constants with `i ≤ j`.
    pub fn constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                for (k, c) in &self.products[i][j] {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn unit(&self) -> Vec<Scalar> {
        let mut u = vec![Scalar::zero(); self.dim()];
        u[0] = Scalar::one();
        u
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut u = vec![Scalar::zero(); self.dim()];
        u[i] = Scalar::one();
        u
    }

    /// Product of two elements in coordinates.
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let m = self.dim();
        let mut out = vec![Scalar::zero(); m];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                add_scaled(&mut out, &self.products[i][j], &(x * y));
            }
        }
        out
    }

    /// Product of basis elements `a_{i_1} ⋯ a_{i_r}` (the unit for an empty list).
    pub fn monomial(&self, idx: &[usize]) -> Vec<Scalar> {
        let mut acc = self.unit();
        for &i in idx {
            acc = self.mul(&acc, &self.basis_vector(i));
        }
        acc
    }

    /// Matrix of `x -> a x`; row `j` holds the coordinates of `a a_j`.
    pub fn multiplication_matrix(&self, a: &[Scalar]) -> Matrix<Scalar> {
        let rows = (0..self.dim()).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Matrix::from_rows(rows, self.dim()).expect("square")
    }

    /// `Tr(x -> a x)`.
    pub fn trace(&self, a: &[Scalar]) -> Scalar {
        let mut t = Scalar::zero();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for j in 0..self.dim() {
                t += x * self.constant(i, j, j);
            }
        }
        t
    }

    /// `A × B` with the unit `(1, 1)` placed first.
    pub fn product_with(&self, other: &FiniteAlgebra) -> FiniteAlgebra {
        let (m, n) = (self.dim(), other.dim());
        let size = m + n;
        // new basis: 1 = (1,1), then (a_i, 0) for i ≥ 1, then (0, 1), then (0, b_j) for j ≥ 1
        let mut labels = vec!["1".to_string()];
        labels.extend(self.labels[1..].iter().map(|l| format!("({l},0)")));
        labels.push("(0,1)".to_string());
        labels.extend(other.labels[1..].iter().map(|l| format!("(0,{l})")));
        let embed_a = |v: &[Scalar]| -> Vec<Scalar> {
            // (x, 0) = x_0 (1 - (0,1)) + Σ_{i≥1} x_i (a_i, 0)
            let mut out = vec![Scalar::zero(); size];
            out[0] = v[0].clone();
            out[m] = -v[0].clone();
            out[1..m].clone_from_slice(&v[1..m]);
            out
        };
        let embed_b = |v: &[Scalar]| -> Vec<Scalar> {
            let mut out = vec![Scalar::zero(); size];
            out[m] = v[0].clone();
            out[m + 1..].clone_from_slice(&v[1..n]);
            out
        };
        // coordinates of each new basis element as a pair (in A, in B)
        let pair = |k: usize| -> (Vec<Scalar>, Vec<Scalar>) {
            if k == 0 {
                (self.unit(), other.unit())
            } else if k < m {
                (self.basis_vector(k), vec![Scalar::zero(); n])
            } else if k == m {
                (vec![Scalar::zero(); m], other.unit())
            } else {
                (vec![Scalar::zero(); m], other.basis_vector(k - m))
            }
        };
        let mut dense = vec![vec![vec![Scalar::zero(); size]; size]; size];
        for i in 0..size {
            for j in 0..size {
                let (ai, bi) = pair(i);
                let (aj, bj) = pair(j);
                let a = self.mul(&ai, &aj);
                let b = other.mul(&bi, &bj);
                let mut v = embed_a(&a);
                for (x, y) in v.iter_mut().zip(embed_b(&b)) {
                    *x += y;
                }
                dense[i][j] = v;
            }
        }
        FiniteAlgebra::from_dense(labels, dense).expect("product of algebras")
    }
}

/// `Q^m` with orthogonal idempotents `e_0..e_{m-1}`, written in the basis `1, e_1, …, e_{m-1}`.
pub fn diagonal_algebra(m: usize) -> FiniteAlgebra {
    assert!(m >= 1);
    let mut labels = vec!["1".to_string()];
    labels.extend((1..m).map(|i| format!("e{i}")));
    let mut constants = Vec::new();
    for j in 0..m {
        constants.push((0, j, j, Scalar::one()));
    }
    for i in 1..m {
        constants.push((i, i, i, Scalar::one()));
    }
    FiniteAlgebra::from_constants(labels, &constants).expect("diagonal algebra")
}

/// `Q[y]/(y^k)` with basis `1, y, …, y^{k-1}`.
pub fn jet_algebra(k: usize) -> FiniteAlgebra {
    assert!(k >= 1);
    let labels = (0..k).map(|i| if i == 0 { "1".to_string() } else if i == 1 { "y".to_string() } else { format!("y^{i}") }).collect();
    let mut constants = Vec::new();
    for i in 0..k {
        for j in i..k {
            if i + j < k {
                constants.push((i, j, i + j, Scalar::one()));
            }
        }
    }
    FiniteAlgebra::from_constants(labels, &constants).expect("jet algebra")
}
