use super::express;
use crate::borderdec::TangentData;
use crate::error::{Error, Result};
use crate::linalg::{int, kernel_basis, Matrix, Scalar};
use crate::poly::{Form, Monomial, Polynomial, Ring, VariableSet};

/// `G_d = Σ_{i<d} v_i u0^i u1^{d-1-i}` in the variables `v0..v_{d-1}, u0, u1`.
pub fn gd_form(d: u32) -> Result<Form> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { degree: d, min: 3 });
    }
    let n = d as usize + 2;
    let mut terms = Vec::new();
    for i in 0..d as usize {
        let mut e = vec![0u16; n];
        e[i] = 1;
        e[n - 2] = i as u16;
        e[n - 1] = (d as usize - 1 - i) as u16;
        terms.push((Monomial::new(&e), int(1)));
    }
    Form::new(Polynomial::from_terms(Ring::Primal, n, terms), VariableSet::aliased(d as usize, 2))
}

/// Points `u0 + j u1` for `j = 0..=d+1`, tangents writing `G_d = Σ_{j<d} ℓ_j^{d-1} m_j`, and the
/// dependence among the `ℓ_j^d`.
pub fn gd_tangent_data(d: u32) -> Result<TangentData> {
    let g = gd_form(d)?;
    let n = g.nvars();
    let (u0, u1) = (n - 2, n - 1);
    let points: Vec<Vec<Scalar>> = (0..=d as i64 + 1)
        .map(|j| {
            let mut p = vec![int(0); n];
            p[u0] = int(1);
            p[u1] = int(j);
            p
        })
        .collect();
    let lin = |p: &Vec<Scalar>| Polynomial::linear(Ring::Primal, p);
    let basis: Vec<Polynomial> = points[..d as usize].iter().map(|p| lin(p).pow(d - 1)).collect();
    let targets: Vec<Polynomial> = (0..d as usize)
        .map(|i| {
            let mut e = vec![0u16; n];
            e[u0] = i as u16;
            e[u1] = (d as usize - 1 - i) as u16;
            Polynomial::monomial(Ring::Primal, Monomial::new(&e), int(1))
        })
        .collect();
    // u0^i u1^{d-1-i} = Σ_j a[i][j] ℓ_j^{d-1}, so m_j = Σ_i a[i][j] v_i
    let a = express(&targets, &basis);
    let mut tangents = vec![vec![int(0); n]; points.len()];
    for (i, row) in a.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            tangents[j][i] = c.clone();
        }
    }
    let relation = cube_relation(&points, d);
    Ok(TangentData::new(d, points, tangents, relation))
}

/// The unique (up to scale) relation among the `d`-th powers of the points.
pub(crate) fn cube_relation(points: &[Vec<Scalar>], d: u32) -> Vec<Scalar> {
    let powers: Vec<Polynomial> = points.iter().map(|p| Polynomial::linear(Ring::Primal, p).pow(d)).collect();
    let mut monos: Vec<Monomial> = Vec::new();
    for p in &powers {
        for (m, _) in p.terms() {
            if !monos.contains(m) {
                monos.push(m.clone());
            }
        }
    }
    let rows = monos.iter().map(|m| powers.iter().map(|p| p.coeff(m)).collect()).collect();
    let ker = kernel_basis(&Matrix::from_rows(rows, powers.len()).expect("shape"));
    ker.into_iter().next().unwrap_or_else(|| vec![int(0); points.len()])
}
