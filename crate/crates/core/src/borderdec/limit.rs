use std::collections::HashMap;

use num_traits::Zero;

use super::decomposition::BorderDecomposition;
use crate::error::{Error, Result};
use crate::groebner::extract::GeneratorBuilder;
use crate::groebner::{ideal_of_points, saturation, GradedIdeal};
use crate::linalg::{limit_polynomial_rows, Matrix, Scalar, UniPoly};
use crate::poly::{apply_dual, monomial_basis, Form, Monomial};

/// Graded limit of the ideals of moving points, known in degrees `≤ bound`.
#[derive(Clone, Debug)]
pub struct LimitIdeal {
    pub ideal: GradedIdeal,
    pub bound: u32,
    /// Codimension of the limit piece in each degree `0..=bound`.
    pub hf: Vec<usize>,
}

fn check_family(points: &[Vec<UniPoly>]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::DimensionMismatch("no points".into()));
    };
    let n = first.len();
    if points.iter().any(|p| p.len() != n) {
        return Err(Error::DimensionMismatch("points of different lengths".into()));
    }
    for (i, p) in points.iter().enumerate() {
        if p.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroPoint(i));
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (p, q) = (&points[i], &points[j]);
            let proportional = (0..n).all(|a| (a + 1..n).all(|b| p[a].mul(&q[b]).sub(&p[b].mul(&q[a])).is_zero()));
            if proportional {
                return Err(Error::PointCollision(i, j));
            }
        }
    }
    Ok(n)
}

/// Evaluation rows `m(p_j(t))` over the monomials `cols`.
fn evaluation_rows(points: &[Vec<UniPoly>], cols: &[Monomial], k: u32) -> Vec<Vec<UniPoly>> {
    points
        .iter()
        .map(|p| {
            let pows: Vec<Vec<UniPoly>> = p
                .iter()
                .map(|c| {
                    let mut v = vec![UniPoly::one()];
                    for e in 1..=k as usize {
                        let next = v[e - 1].mul(c);
                        v.push(next);
                    }
                    v
                })
                .collect();
            cols.iter()
                .map(|m| {
                    let mut acc = UniPoly::one();
                    for i in m.support() {
                        acc = acc.mul(&pows[i][m.exp(i) as usize]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// `lim_{t→0} I(p_1(t), …, p_r(t))` in degrees `1..=bound` (default `r + 1`).
///
/// Each degree-`k` piece is the orthogonal complement of the limit of the span of the
/// evaluation rows, which keeps the computation in `Z[t]`.
pub fn limit_ideal_family(points: &[Vec<UniPoly>], bound: Option<u32>) -> Result<LimitIdeal> {
    let n = check_family(points)?;
    let bound = bound.unwrap_or(points.len() as u32 + 1);
    let mut b = GeneratorBuilder::new(n);
    let mut hf = vec![1usize];
    for k in 1..=bound {
        let full = monomial_basis(n, k, None);
        let rows = evaluation_rows(points, &full, k);
        let lim = limit_polynomial_rows(rows, full.len())?;
        hf.push(lim.rows());
        let index: HashMap<&Monomial, usize> = full.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let cols = b.standard(k);
        let data: Vec<Vec<Scalar>> =
            (0..lim.rows()).map(|r| cols.iter().map(|m| lim.get(r, index[m]).clone()).collect()).collect();
        let map = Matrix::from_rows(data, cols.len())?;
        b.add_kernel(&cols, &map);
    }
    Ok(LimitIdeal { ideal: b.finish(), bound, hf })
}

/// Saturated limit of a decomposition's points with the checks that go with it.
#[derive(Clone, Debug)]
pub struct LimitingSchemeResult {
    pub limit: LimitIdeal,
    pub saturated: GradedIdeal,
    /// Constant Hilbert polynomial of the saturation.
    pub length: Option<usize>,
    /// Distinct limit points `L_j(0)` (lowest nonvanishing order).
    pub support: Vec<Vec<Scalar>>,
    /// Whether the scheme is the reduced union of its support.
    pub reduced: bool,
    /// Whether the unsaturated limit ideal annihilates the form.
    pub contained_in_ann: Option<bool>,
}

fn support(d: &BorderDecomposition) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = Vec::new();
    for s in &d.summands {
        let Some(v) = s.valuation() else { continue };
        let p = normalize(s.linear_part(v));
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Scales so the first nonzero coordinate is one.
fn normalize(p: Vec<Scalar>) -> Vec<Scalar> {
    let lead = p.iter().find(|c| !c.is_zero()).cloned().expect("nonzero point");
    p.into_iter().map(|c| c / &lead).collect()
}

/// Limit ideal of the points `[L_j(t)]`, its saturation, length, support, and containment in `Ann(F)`.
pub fn limiting_scheme_ideal(d: &BorderDecomposition, f: Option<&Form>, bound: Option<u32>) -> Result<LimitingSchemeResult> {
    let points: Vec<Vec<UniPoly>> = d.summands.iter().map(|s| s.coeffs.clone()).collect();
    let limit = limit_ideal_family(&points, bound)?;
    let saturated = saturation(&limit.ideal);
    let length = if saturated.dimension() == 1 { saturated.length_and_regularity().map(|(l, _)| l) } else { None };
    let support = support(d);
    let reduced = length == Some(support.len()) && saturated.same_ideal(&ideal_of_points(&support)?);
    let contained_in_ann = match f {
        None => None,
        Some(f) => {
            let mut ok = true;
            for g in limit.ideal.generators() {
                if !apply_dual(g, f.poly())?.is_zero() {
                    ok = false;
                    break;
                }
            }
            Some(ok)
        }
    };
    Ok(LimitingSchemeResult { limit, saturated, length, support, reduced, contained_in_ann })
}
