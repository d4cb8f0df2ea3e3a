use num_traits::Zero;

use super::finite::FiniteAlgebra;
use super::nonvanishing_point;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rank, Matrix, Scalar};
use crate::poly::{det_bareiss, Monomial, Polynomial, Ring};
use crate::random::{rng, small_point, DEFAULT_SEED};

/// Largest dimension for which the generic pairing determinant is expanded symbolically.
pub const SYMBOLIC_LIMIT: usize = 8;

/// Functional `e` on an algebra whose pairing `e(a_i a_j)` is perfect.
#[derive(Clone, Debug, PartialEq)]
pub struct GorensteinWitness {
    pub functional: Vec<Scalar>,
    pub pairing: Matrix<Scalar>,
}

impl GorensteinWitness {
    /// Checks that `e` pairs perfectly.
    pub fn new(a: &FiniteAlgebra, functional: Vec<Scalar>) -> Result<Self> {
        if functional.len() != a.dim() {
            return Err(Error::DimensionMismatch(format!("functional of length {} on an algebra of dimension {}", functional.len(), a.dim())));
        }
        let pairing = pairing_matrix(a, &functional);
        if rank(&pairing) < a.dim() {
            return Err(Error::WitnessDegenerate);
        }
        Ok(GorensteinWitness { functional, pairing })
    }
}

/// `p(a_i, a_j) = e(a_i a_j)`.
pub fn pairing_matrix(a: &FiniteAlgebra, e: &[Scalar]) -> Matrix<Scalar> {
    let m = a.dim();
    let mut p: Matrix<Scalar> = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            let v: Scalar = a.product(i, j).iter().map(|(k, c)| c * &e[*k]).sum();
            p.set(i, j, v);
        }
    }
    p
}

/// Kernel of the trace form; in characteristic zero this is the nilradical.
pub fn radical(a: &FiniteAlgebra) -> Vec<Vec<Scalar>> {
    let m = a.dim();
    let rows = (0..m).map(|i| (0..m).map(|j| a.trace(&a.mul(&a.basis_vector(i), &a.basis_vector(j)))).collect()).collect();
    kernel_basis(&Matrix::from_rows(rows, m).expect("square"))
}

/// Annihilator of the span of `gens`: the `x` with `x g = 0` for every `g`.
fn annihilator(a: &FiniteAlgebra, gens: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let m = a.dim();
    let mut rows = Vec::new();
    for g in gens {
        // x g = Σ_j x_j (g a_j), so each output coordinate is one row of the transpose
        let mm = a.multiplication_matrix(g).transpose();
        rows.extend(mm.to_rows());
    }
    if rows.is_empty() {
        return (0..m).map(|i| a.basis_vector(i)).collect();
    }
    kernel_basis(&Matrix::from_rows(rows, m).expect("shape"))
}

/// Socle `(0 : m)` for a maximal ideal given by a spanning set.
pub fn socle(a: &FiniteAlgebra, maximal_ideal: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let m = a.dim();
    if maximal_ideal.iter().any(|v| v.len() != m) {
        return Err(Error::DimensionMismatch("ideal generator of the wrong length".into()));
    }
    let span = Matrix::from_rows(maximal_ideal.to_vec(), m).expect("shape");
    let r = rank(&span);
    if r + 1 != m {
        return Err(Error::NotAnIdeal(format!("codimension {} instead of 1", m - r)));
    }
    for g in maximal_ideal {
        for j in 0..m {
            let p = a.mul(g, &a.basis_vector(j));
            let mut rows = maximal_ideal.to_vec();
            rows.push(p);
            if rank(&Matrix::from_rows(rows, m).expect("shape")) > r {
                return Err(Error::NotAnIdeal(format!("not closed under multiplication by {}", a.labels()[j])));
            }
        }
    }
    Ok(annihilator(a, maximal_ideal))
}

/// Exact test: `dim soc(A) = dim A/rad`, with `soc(A) = (0 : rad)`.
///
/// Every local factor has socle dimension at least its residue degree, with equality exactly
/// when the factor is Gorenstein, so the sums agree iff every factor is.
pub fn socle_criterion(a: &FiniteAlgebra) -> bool {
    let rad = radical(a);
    annihilator(a, &rad).len() == a.dim() - rad.len()
}

/// A functional with perfect pairing, or `None` if the algebra is not Gorenstein.
pub fn is_gorenstein(a: &FiniteAlgebra) -> Option<GorensteinWitness> {
    let m = a.dim();
    let found = if m <= SYMBOLIC_LIMIT {
        // p_ij = Σ_k c^k_ij z_k with indeterminates z_k
        let entries: Vec<Vec<Polynomial>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let terms = a.product(i, j).iter().map(|(k, c)| (Monomial::var(m, *k), c.clone())).collect();
                        Polynomial::from_terms(Ring::Primal, m, terms)
                    })
                    .collect()
            })
            .collect();
        let det = det_bareiss(&entries);
        if det.is_zero() {
            None
        } else {
            Some(GorensteinWitness::new(a, nonvanishing_point(&det)).expect("nonzero determinant"))
        }
    } else {
        let mut r = rng(DEFAULT_SEED);
        let mut attempt = |bound: i64| {
            let e = small_point(&mut r, m, bound);
            GorensteinWitness::new(a, e).ok()
        };
        match (0..8).find_map(|_| attempt(3)) {
            Some(w) => Some(w),
            None if !socle_criterion(a) => None,
            // the degenerate functionals form a proper hypersurface, so widening the range terminates
            None => (0..).find_map(|i| attempt(16 << (i / 8).min(40))),
        }
    };
    let rad = radical(a);
    if rad.len() + 1 == m {
        // local with residue field Q: Gorenstein iff the socle is one-dimensional
        let soc = socle(a, &rad).expect("the radical of a local algebra is its maximal ideal");
        assert_eq!(found.is_some(), soc.len() == 1, "pairing and socle tests disagree");
    }
    found
}

/// The fully symmetric tensor `e(a_{i_1} ⋯ a_{i_d})`.
pub fn symmetrize_structure_tensor(a: &FiniteAlgebra, w: &GorensteinWitness, d: usize) -> Result<super::Tensor> {
    let checked = GorensteinWitness::new(a, w.functional.clone())?;
    let e = &checked.functional;
    let m = a.dim();
    let mut t = super::Tensor::zeros(d, m);
    let mut memo: std::collections::HashMap<Vec<usize>, Scalar> = std::collections::HashMap::new();
    let idxs: Vec<Vec<usize>> = t.indices().collect();
    for idx in idxs {
        let mut key = idx.clone();
        key.sort_unstable();
        let v = memo
            .entry(key)
            .or_insert_with_key(|k| {
                let p = a.monomial(k);
                p.iter().zip(e).map(|(x, y)| x * y).sum()
            })
            .clone();
        if !v.is_zero() {
            t.set(&idx, v);
        }
    }
    Ok(t)
}
