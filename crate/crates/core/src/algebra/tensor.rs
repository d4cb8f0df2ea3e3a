use num_traits::Zero;

use super::finite::FiniteAlgebra;
use crate::linalg::{Matrix, Scalar};
use crate::poly::{apply_dual, Form, Monomial, Polynomial, Ring};

/// Dense `d`-way tensor on a space of dimension `dim`, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    ways: usize,
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(ways: usize, dim: usize) -> Self {
        Tensor { ways, dim, data: vec![Scalar::zero(); dim.pow(ways as u32)] }
    }

    pub fn ways(&self) -> usize {
        self.ways
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.ways, "index length");
        idx.iter().fold(0, |acc, &i| {
            assert!(i < self.dim, "index out of bounds");
            acc * self.dim + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    /// Every index tuple in row-major order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let (w, n) = (self.ways, self.dim);
        (0..self.data.len()).map(move |mut o| {
            let mut idx = vec![0; w];
            for s in (0..w).rev() {
                idx[s] = o % n;
                o /= n;
            }
            idx
        })
    }

    /// Invariance under permutations of the first `k` slots.
    pub fn is_symmetric_in_first(&self, k: usize) -> bool {
        self.indices().all(|idx| {
            let mut s = idx.clone();
            s[..k].sort_unstable();
            self.get(&idx) == self.get(&s)
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_symmetric_in_first(self.ways)
    }

    /// Replaces slot `slot` by the basis whose vectors are the rows of `b`.
    pub fn change_slot(&self, slot: usize, b: &Matrix<Scalar>) -> Tensor {
        let n = self.dim;
        let mut out = Tensor::zeros(self.ways, n);
        for idx in self.indices() {
            let x = self.get(&idx);
            if x.is_zero() {
                continue;
            }
            let j = idx[slot];
            let mut target = idx.clone();
            for i in 0..n {
                let c = b.get(i, j);
                if !c.is_zero() {
                    target[slot] = i;
                    let o = out.offset(&target);
                    out.data[o] += c * x;
                }
            }
        }
        out
    }

    /// The matrix `T(v_1, …, v_{d-2}, •, •)`.
    pub fn contract_leading(&self, vs: &[Vec<Scalar>]) -> Matrix<Scalar> {
        assert_eq!(vs.len() + 2, self.ways);
        let n = self.dim;
        let mut m: Matrix<Scalar> = Matrix::zeros(n, n);
        for idx in self.indices() {
            let x = self.get(&idx);
            if x.is_zero() {
                continue;
            }
            let mut c = x.clone();
            for (s, v) in vs.iter().enumerate() {
                c *= &v[idx[s]];
                if c.is_zero() {
                    break;
                }
            }
            if !c.is_zero() {
                let (a, b) = (idx[self.ways - 2], idx[self.ways - 1]);
                let cur = m.get(a, b).clone();
                m.set(a, b, cur + c);
            }
        }
        m
    }
}

/// `T^{i_1…i_{d-1} k}` = coefficient of `a_k` in `a_{i_1} ⋯ a_{i_{d-1}}`.
pub fn structure_tensor(a: &FiniteAlgebra, d: usize) -> Tensor {
    assert!(d >= 3, "structure tensors have at least three slots");
    let n = a.dim();
    let mut t = Tensor::zeros(d, n);
    let idxs: Vec<Vec<usize>> = Tensor::zeros(d - 1, n).indices().collect();
    for idx in idxs {
        let v = a.monomial(&idx);
        let mut full = idx.clone();
        full.push(0);
        for (k, c) in v.into_iter().enumerate() {
            if !c.is_zero() {
                full[d - 1] = k;
                t.set(&full, c);
            }
        }
    }
    t
}

/// Symmetric tensor of a form: entry `(i_1, …, i_d)` is `(y_{i_1} ⋯ y_{i_d}) ∘ F`.
pub fn form_tensor(f: &Form) -> Tensor {
    let n = f.nvars();
    let d = f.degree() as usize;
    let mut t = Tensor::zeros(d, n);
    let idxs: Vec<Vec<usize>> = t.indices().collect();
    for idx in idxs {
        let mut e = vec![0u16; n];
        for &i in &idx {
            e[i] += 1;
        }
        let h = Polynomial::monomial(Ring::Dual, Monomial::new(&e), Scalar::from_integer(1.into()));
        let v = apply_dual(&h, f.poly()).expect("dual acts on primal");
        if let Some((_, c)) = v.terms().first() {
            t.set(&idx, c.clone());
        }
    }
    t
}
