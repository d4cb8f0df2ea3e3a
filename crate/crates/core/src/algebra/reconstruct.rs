use num_traits::{One, Zero};
use serde::Serialize;

use super::finite::FiniteAlgebra;
use super::gorenstein::GorensteinWitness;
use super::tensor::{form_tensor, Tensor};
use super::nonvanishing_point;
use crate::apolar::hessian_matrix;
use crate::error::{Error, Result};
use crate::linalg::{determinant, format_scalar, inverse, Matrix, Scalar};
use crate::poly::{det_bareiss, Form};
use crate::random::{rng, small_point, DEFAULT_SEED};

/// Outcome of one identity in [`verify_multiplication_matrices`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Indices of the first failing instance.
    pub counterexample: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MultiplicationReport {
    /// `M_i[a][b] = T^{0…0 a i b}`.
    pub matrices: Vec<Matrix<Scalar>>,
    pub checks: Vec<IdentityCheck>,
}

impl MultiplicationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn summary(&self) -> String {
        self.checks
            .iter()
            .map(|c| match &c.counterexample {
                None => format!("{}: pass", c.name),
                Some(ix) => format!("{}: FAIL at {ix:?}", c.name),
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn lead(len: usize, tail: &[usize]) -> Vec<usize> {
    let mut v = vec![0; len];
    v.extend_from_slice(tail);
    v
}

fn combination(ms: &[Matrix<Scalar>], coeffs: impl Iterator<Item = Scalar>) -> Matrix<Scalar> {
    let n = ms[0].rows();
    let mut out: Matrix<Scalar> = Matrix::zeros(n, n);
    for (m, c) in ms.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for a in 0..n {
            for b in 0..n {
                let v = out.get(a, b) + c.clone() * m.get(a, b);
                out.set(a, b, v);
            }
        }
    }
    out
}

/// Nondecreasing index tuples of length `k` below `n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                let start = v.last().copied().unwrap_or(0);
                (start..n).map(move |i| {
                    let mut w = v.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

fn check(name: &'static str, mut cases: impl Iterator<Item = (Vec<usize>, bool)>) -> IdentityCheck {
    let counterexample = cases.find(|(_, ok)| !ok).map(|(ix, _)| ix);
    IdentityCheck { name, passed: counterexample.is_none(), counterexample }
}

/// Builds `M_i` from a `d`-way tensor with index `0` as the unit and checks the four identities
/// (commutativity, closure, structure property, Strassen commutators).
pub fn verify_multiplication_matrices(t: &Tensor) -> Result<MultiplicationReport> {
    let d = t.ways();
    let n = t.dim();
    if d < 3 {
        return Err(Error::DimensionMismatch(format!("need at least 3 slots, got {d}")));
    }
    for k in 0..n {
        for l in 0..n {
            let want = if k == l { Scalar::one() } else { Scalar::zero() };
            if t.get(&lead(d - 2, &[k, l])) != &want {
                return Err(Error::NotNormalized(k, l));
            }
        }
    }
    let ms: Vec<Matrix<Scalar>> = (0..n)
        .map(|i| {
            let rows = (0..n).map(|a| (0..n).map(|b| t.get(&lead(d - 3, &[a, i, b])).clone()).collect()).collect();
            Matrix::from_rows(rows, n).expect("square")
        })
        .collect();
    let prod = |a: &Matrix<Scalar>, b: &Matrix<Scalar>| a.mul(b).expect("square");
    let pairs = || (0..n).flat_map(move |i| (i..n).map(move |j| (i, j)));

    let commutativity = check("commutativity", pairs().map(|(i, j)| (vec![i, j], prod(&ms[i], &ms[j]) == prod(&ms[j], &ms[i]))));
    let closure = check(
        "closure",
        pairs().map(|(i, j)| {
            let rhs = combination(&ms, (0..n).map(|k| t.get(&lead(d - 3, &[i, j, k])).clone()));
            (vec![i, j], prod(&ms[i], &ms[j]) == rhs)
        }),
    );
    let structure = check(
        "structure property",
        multisets(n, d - 1).into_iter().map(|ix| {
            let lhs = ix.iter().skip(1).fold(ms[ix[0]].clone(), |acc, &i| prod(&acc, &ms[i]));
            let rhs = combination(
                &ms,
                (0..n).map(|j| {
                    let mut full = ix.clone();
                    full.push(j);
                    t.get(&full).clone()
                }),
            );
            (ix, lhs == rhs)
        }),
    );
    // slices N_I[j1][j2] = T^{I j1 j2} must commute, as T(u^{d-2}) = id
    let slice = |ix: &[usize]| -> Matrix<Scalar> {
        let rows = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let mut full = ix.to_vec();
                        full.extend([a, b]);
                        t.get(&full).clone()
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows, n).expect("square")
    };
    let labels = multisets(n, d - 2);
    let slices: Vec<Matrix<Scalar>> = labels.iter().map(|ix| slice(ix)).collect();
    let strassen = check(
        "strassen commutators",
        (0..slices.len()).flat_map(|p| (p + 1..slices.len()).map(move |q| (p, q))).map(|(p, q)| {
            let mut ix = labels[p].clone();
            ix.extend(&labels[q]);
            (ix, prod(&slices[p], &slices[q]) == prod(&slices[q], &slices[p]))
        }),
    );
    Ok(MultiplicationReport { matrices: ms, checks: vec![commutativity, closure, structure, strassen] })
}

/// Number of pseudorandom functionals tried after the coordinate ones.
pub const RANDOM_WITNESS_TRIES: usize = 20;

fn contraction(t: &Tensor, l: &[Scalar]) -> Matrix<Scalar> {
    t.contract_leading(&vec![l.to_vec(); t.ways() - 2])
}

fn nonsingular(m: &Matrix<Scalar>) -> bool {
    determinant(m).is_some_and(|d| !d.is_zero())
}

/// A functional `ℓ` with `T_F(ℓ^{d-2})` of full rank, i.e. with `Hess(F)(ℓ) ≠ 0`.
///
/// Tries the coordinate functionals, then seeded pseudorandom ones, and finally expands the
/// Hessian determinant to decide.
pub fn hessian_witness(f: &Form) -> Option<Vec<Scalar>> {
    let n = f.nvars();
    if f.degree() < 2 {
        return None;
    }
    let t = form_tensor(f);
    let works = |l: &[Scalar]| nonsingular(&contraction(&t, l));
    let coordinate = (0..n).map(|i| {
        let mut e = vec![Scalar::zero(); n];
        e[i] = Scalar::one();
        e
    });
    let mut r = rng(DEFAULT_SEED);
    let random: Vec<Vec<Scalar>> = (0..RANDOM_WITNESS_TRIES).map(|_| small_point(&mut r, n, 10)).collect();
    if let Some(l) = coordinate.chain(random).find(|l| works(l)) {
        return Some(l);
    }
    let det = det_bareiss(&hessian_matrix(f));
    if det.is_zero() {
        return None;
    }
    let l = nonvanishing_point(&det);
    debug_assert!(works(&l));
    Some(l)
}

/// Result of [`algebra_from_tensor`] with the basis changes that produced it.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub algebra: FiniteAlgebra,
    /// Rows `v_0 = ℓ, v_1, …` used in the first `d - 1` slots.
    pub basis: Matrix<Scalar>,
    /// Rows `v'_j` with `Q(v_i, v'_j) = δ_ij`, used in the last slot.
    pub dual_basis: Matrix<Scalar>,
    /// `e(a_k) = T(ℓ^{d-1}, v_k)`.
    pub witness: GorensteinWitness,
    pub report: MultiplicationReport,
}

impl Reconstruction {
    /// `T` with every slot expressed in the basis `v`.
    pub fn transformed(&self, t: &Tensor) -> Tensor {
        (0..t.ways()).fold(t.clone(), |acc, s| acc.change_slot(s, &self.basis))
    }
}

/// Greedy completion of `ℓ` by unit vectors to a basis.
fn complete_basis(l: &[Scalar]) -> Matrix<Scalar> {
    let n = l.len();
    let mut rows = vec![l.to_vec()];
    for i in 0..n {
        if rows.len() == n {
            break;
        }
        let mut e = vec![Scalar::zero(); n];
        e[i] = Scalar::one();
        let mut trial = rows.clone();
        trial.push(e.clone());
        if crate::linalg::rank(&Matrix::from_rows(trial, n).expect("shape")) == rows.len() + 1 {
            rows.push(e);
        }
    }
    Matrix::from_rows(rows, n).expect("shape")
}

/// Reads off a commutative algebra from a symmetric tensor with `T(ℓ^{d-2})` of full rank.
pub fn algebra_from_tensor(t: &Tensor, l: &[Scalar]) -> Result<Reconstruction> {
    let d = t.ways();
    let n = t.dim();
    if d < 3 {
        return Err(Error::DimensionMismatch(format!("need at least 3 slots, got {d}")));
    }
    if l.len() != n {
        return Err(Error::DimensionMismatch(format!("functional of length {} for dimension {n}", l.len())));
    }
    if !t.is_symmetric() {
        return Err(Error::IdentityFailure("input tensor is not symmetric".into()));
    }
    let q = contraction(t, l);
    if !nonsingular(&q) {
        return Err(Error::WitnessDegenerate);
    }
    let v = complete_basis(l);
    let vq = v.mul(&q).expect("square");
    let dual = inverse(&vq).expect("V and Q are invertible").transpose();
    let mut tp = t.clone();
    for s in 0..d - 1 {
        tp = tp.change_slot(s, &v);
    }
    tp = tp.change_slot(d - 1, &dual);
    let report = verify_multiplication_matrices(&tp)?;
    if !report.all_passed() {
        return Err(Error::IdentityFailure(report.summary()));
    }
    let products = (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| tp.get(&lead(d - 3, &[i, j, k])).clone()).collect()).collect())
        .collect();
    let labels = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("M{i}") }).collect();
    let algebra = FiniteAlgebra::from_dense(labels, products).map_err(|e| Error::IdentityFailure(e.to_string()))?;
    // row 0 of VQ is ℓQ, so e_k = Q(ℓ, v_k)
    let functional: Vec<Scalar> = (0..n).map(|k| vq.row(0).iter().zip(v.row(k)).map(|(x, y)| x * y).sum()).collect();
    let witness = GorensteinWitness::new(&algebra, functional)?;
    Ok(Reconstruction { algebra, basis: v, dual_basis: dual, witness, report })
}

/// Formats a functional for reports.
pub fn format_functional(l: &[Scalar]) -> String {
    format!("[{}]", l.iter().map(format_scalar).collect::<Vec<_>>().join(", "))
}
