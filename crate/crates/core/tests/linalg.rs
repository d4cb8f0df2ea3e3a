use num_bigint::BigInt;
use num_traits::Signed;
use num_traits::Zero as _;
use proptest::prelude::*;
use wildforms::apolar::catalecticant;
use wildforms::linalg::*;
use wildforms::poly::Form;

fn m(rows: &[&[i64]]) -> Matrix<Scalar> {
    let cols = rows.first().map_or(0, |r| r.len());
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(), cols).unwrap()
}

/// Rank by Bareiss elimination over the integers, kept apart from the library code.
fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            for j in c + 1..cols {
                a[i][j] = (&a[i][j] * &a[r][c] - &a[i][c] * &a[r][j]) / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].abs();
        r += 1;
    }
    r
}

#[test]
fn rref_examples() {
    let r = rref(&Matrix::<Scalar>::identity(3));
    assert_eq!((r.rank, r.pivots), (3, vec![0, 1, 2]));
    let r = rref(&m(&[&[2, 4], &[1, 2]]));
    assert_eq!(r.rank, 1);
    assert_eq!(r.reduced, m(&[&[1, 2], &[0, 0]]));
}

#[test]
fn kernel_examples() {
    assert!(kernel_basis(&Matrix::<Scalar>::identity(2)).is_empty());
    let k = kernel_basis(&m(&[&[1, 1]]));
    assert_eq!(k.len(), 1);
    assert_eq!(k[0][0], -k[0][1].clone());
    // Cat_{2,1}(x0^2 x1): the kernel is spanned by the column of y1^2
    let cat = catalecticant(&Form::parse("x0^2*x1").unwrap(), 2);
    let ker = kernel_basis(&cat.matrix);
    assert_eq!(ker.len(), 1);
    let y1sq = cat.cols.iter().position(|c| c.exps() == [0, 2]).unwrap();
    assert!(ker[0].iter().enumerate().all(|(i, c)| (i == y1sq) != Field::is_zero(c)));
}

fn p(c: &[i64]) -> ParamScalar {
    ParamScalar::from_poly(UniPoly::from_i64(c))
}

fn pm(rows: Vec<Vec<ParamScalar>>) -> Matrix<ParamScalar> {
    let cols = rows[0].len();
    Matrix::from_rows(rows, cols).unwrap()
}

#[test]
fn limit_examples() {
    assert_eq!(limit_subspace(&pm(vec![vec![p(&[1]), p(&[0, 1])]])).unwrap(), m(&[&[1, 0]]));
    assert_eq!(limit_subspace(&pm(vec![vec![p(&[0, 1]), p(&[0, 1])]])).unwrap(), m(&[&[1, 1]]));
    let l = limit_subspace(&pm(vec![vec![p(&[1]), p(&[1])], vec![p(&[1]), p(&[1, 1])]])).unwrap();
    assert_eq!(rref(&l).reduced, m(&[&[1, 0], &[0, 1]]));
    // the limit of span{(1,1), (1,1+t)} contains (0,1)
    let with = l.vstack(&m(&[&[0, 1]])).unwrap();
    assert_eq!(rank(&with), 2);
}

fn small_matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn to_matrix(rows: &[Vec<i64>]) -> Matrix<Scalar> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect(), rows[0].len()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(rows in small_matrix(5)) {
        let a = to_matrix(&rows);
        let once = rref(&a).reduced;
        prop_assert_eq!(rref(&once).reduced, once);
    }

    #[test]
    fn rank_is_transpose_invariant(rows in small_matrix(5)) {
        let a = to_matrix(&rows);
        prop_assert_eq!(rank(&a), rank(&a.transpose()));
    }

    #[test]
    fn rank_matches_bareiss(rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 4), 4)) {
        prop_assert_eq!(rank(&to_matrix(&rows)), bareiss_rank(&rows));
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in small_matrix(5)) {
        let a = to_matrix(&rows);
        let ker = kernel_basis(&a);
        prop_assert_eq!(ker.len() + rank(&a), a.cols());
        for v in ker {
            prop_assert!(a.mul_vec(&v).iter().all(Field::is_zero));
        }
    }
}

/// Entries `num / (1 + t)^e` with small integer numerators of degree at most 2.
fn param_matrix() -> impl Strategy<Value = Vec<Vec<(Vec<i64>, u32)>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec((prop::collection::vec(-2i64..=2, 1..=3), 0u32..=1), c), r)
    })
}

fn build_param(rows: &[Vec<(Vec<i64>, u32)>]) -> Matrix<ParamScalar> {
    let den = UniPoly::from_i64(&[1, 1]);
    pm(rows
        .iter()
        .map(|r| r.iter().map(|(num, e)| ParamScalar::new(UniPoly::from_i64(num), den.pow(*e))).collect())
        .collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn limit_preserves_dimension(rows in param_matrix()) {
        let a = build_param(&rows);
        let l = limit_subspace(&a).unwrap();
        prop_assert_eq!(l.rows(), param_rank(&a));
        prop_assert_eq!(rank(&l), l.rows());
    }

    #[test]
    fn constant_limit_is_the_row_space(rows in small_matrix(4)) {
        let a = pm(rows.iter().map(|r| r.iter().map(|&x| p(&[x])).collect()).collect());
        let l = limit_subspace(&a).unwrap();
        let q = to_matrix(&rows);
        prop_assert_eq!(l.rows(), rank(&q));
        if l.rows() > 0 {
            prop_assert_eq!(rank(&l.vstack(&q).unwrap()), rank(&q));
        }
    }
}
