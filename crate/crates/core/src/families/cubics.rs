use super::express;
use crate::borderdec::TangentData;
use crate::error::{Error, Result};
use crate::linalg::{int, Scalar};
use crate::poly::{Form, Monomial, Polynomial, Ring, VariableSet};

fn chain_length(n: usize) -> Result<usize> {
    if n < 4 || n % 3 != 1 {
        return Err(Error::BadIndex(format!("n = {n} is not of the form 3k + 1 with k ≥ 1")));
    }
    Ok((n - 1) / 3)
}

/// `F_n = x0 x1^2 + Σ_{h=1}^{k} (x_{3h-2} x_{3h-1} x_{3h+1} + x_{3h} x_{3h+1}^2)` for `n = 3k + 1`.
pub fn fn_form(n: usize) -> Result<Form> {
    let k = chain_length(n)?;
    let nv = n + 1;
    let mono = |pairs: &[(usize, u16)]| {
        let mut e = vec![0u16; nv];
        for &(i, x) in pairs {
            e[i] += x;
        }
        (Monomial::new(&e), int(1))
    };
    let mut terms = vec![mono(&[(0, 1), (1, 2)])];
    for h in 1..=k {
        terms.push(mono(&[(3 * h - 2, 1), (3 * h - 1, 1), (3 * h + 1, 1)]));
        terms.push(mono(&[(3 * h, 1), (3 * h + 1, 2)]));
    }
    Form::new(Polynomial::from_terms(Ring::Primal, nv, terms), VariableSet::standard(nv))
}

/// A point `x_{3h-2} + j x_{3h+1}` on the `h`-th line of the chain.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfigPoint {
    pub component: usize,
    pub j: i64,
    pub form: Vec<Scalar>,
}

/// Points on the chain `C_k` with tangent directions and the dependence among their cubes.
#[derive(Clone, Debug)]
pub struct PointConfiguration {
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub points: Vec<ConfigPoint>,
    pub tangents: Vec<Vec<Scalar>>,
    pub relation: Vec<Scalar>,
}

impl PointConfiguration {
    pub fn nvars(&self) -> usize {
        3 * self.k + 2
    }

    pub fn tangent_data(&self) -> TangentData {
        TangentData::new(3, self.points.iter().map(|p| p.form.clone()).collect(), self.tangents.clone(), self.relation.clone())
    }
}

fn line_point(nv: usize, h: usize, j: i64) -> ConfigPoint {
    let mut form = vec![int(0); nv];
    form[3 * h - 2] = int(1);
    form[3 * h + 1] = int(j);
    ConfigPoint { component: h, j, form }
}

fn var(nv: usize, i: usize) -> Polynomial {
    Polynomial::var(Ring::Primal, nv, i)
}

/// Three points `j = 2, 3, 4` on every line, plus `j = 1` on lines `a` and `b` (lines are numbered
/// `1..=k`; for `k = 1` the single line carries `j = 1..=5`). Tangent directions write the `h`-th
/// block of `F_n` as `Σ_j ℓ_{h,j}^2 m_{h,j}`; the relation comes from eliminating the junction cubes
/// `x_{3h+1}^3` from line `a` to line `b`.
pub fn fn_point_configuration(k: usize, a: usize, b: usize) -> Result<PointConfiguration> {
    if k == 0 {
        return Err(Error::BadIndex("k must be at least 1".into()));
    }
    let valid = if k == 1 { a == 1 && b == 1 } else { 1 <= a && a < b && b <= k };
    if !valid {
        return Err(Error::BadPair { a, b, k });
    }
    let nv = 3 * k + 2;
    let mut points = Vec::new();
    let mut tangents = Vec::new();
    for h in 1..=k {
        let extra: Vec<i64> = if k == 1 { vec![1, 5] } else if h == a || h == b { vec![1] } else { vec![] };
        let (p, q) = (var(nv, 3 * h - 2), var(nv, 3 * h + 1));
        let tpts: Vec<ConfigPoint> = [2, 3, 4].iter().map(|&j| line_point(nv, h, j)).collect();
        let squares: Vec<Polynomial> = tpts.iter().map(|c| Polynomial::linear(Ring::Primal, &c.form).pow(2)).collect();
        // p^2, pq, q^2 in terms of the three squares
        let coords = express(&[p.pow(2), p.mul(&q), q.pow(2)], &squares);
        let big_p = if h == 1 { Some(0) } else { None };
        let (big_q, big_r) = (3 * h - 1, 3 * h);
        for j in 1..=5i64 {
            if [2, 3, 4].contains(&j) {
                let idx = (j - 2) as usize;
                let mut m = vec![int(0); nv];
                if let Some(pi) = big_p {
                    m[pi] += &coords[0][idx];
                }
                m[big_q] += &coords[1][idx];
                m[big_r] += &coords[2][idx];
                points.push(tpts[idx].clone());
                tangents.push(m);
            } else if extra.contains(&j) {
                points.push(line_point(nv, h, j));
                tangents.push(vec![int(0); nv]);
            }
        }
    }
    let relation = chain_relation(nv, k, a, b, &points);
    Ok(PointConfiguration { k, a, b, points, tangents, relation })
}

fn cube(p: &ConfigPoint) -> Polynomial {
    Polynomial::linear(Ring::Primal, &p.form).pow(3)
}

/// Walks the chain from line `a` to line `b`, carrying the junction cube as a combination of point cubes.
fn chain_relation(nv: usize, k: usize, a: usize, b: usize, points: &[ConfigPoint]) -> Vec<Scalar> {
    let r = points.len();
    let on = |h: usize| -> Vec<usize> { (0..r).filter(|&i| points[i].component == h).collect() };
    if k == 1 {
        let idx = on(1);
        let cubes: Vec<Polynomial> = idx.iter().map(|&i| cube(&points[i])).collect();
        let c = express(&[cubes[4].clone()], &cubes[..4])[0].clone();
        let mut rel = vec![int(0); r];
        for (t, &i) in idx[..4].iter().enumerate() {
            rel[i] = c[t].clone();
        }
        rel[idx[4]] = int(-1);
        return rel;
    }
    // carry = coefficients of x_{3h+1}^3 in terms of point cubes
    let idx = on(a);
    let cubes: Vec<Polynomial> = idx.iter().map(|&i| cube(&points[i])).collect();
    let c = express(&[var(nv, 3 * a + 1).pow(3)], &cubes)[0].clone();
    let mut carry = vec![int(0); r];
    for (t, &i) in idx.iter().enumerate() {
        carry[i] = c[t].clone();
    }
    for h in a + 1..b {
        let idx = on(h);
        let mut basis = vec![var(nv, 3 * h - 2).pow(3)];
        basis.extend(idx.iter().map(|&i| cube(&points[i])));
        let c = express(&[var(nv, 3 * h + 1).pow(3)], &basis)[0].clone();
        let mut next: Vec<Scalar> = carry.iter().map(|x| x * &c[0]).collect();
        for (t, &i) in idx.iter().enumerate() {
            next[i] += &c[t + 1];
        }
        carry = next;
    }
    let idx = on(b);
    let cubes: Vec<Polynomial> = idx.iter().map(|&i| cube(&points[i])).collect();
    let c = express(&[var(nv, 3 * b - 2).pow(3)], &cubes)[0].clone();
    for (t, &i) in idx.iter().enumerate() {
        carry[i] -= &c[t];
    }
    carry
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::borderdec::{construct_tangent_decomposition, verify_border_decomposition};

    #[test]
    fn small_forms() {
        assert_eq!(fn_form(4).unwrap().to_string(), Form::parse("x0*x1^2 + x1*x2*x4 + x3*x4^2").unwrap().to_string());
        assert_eq!(
            fn_form(7).unwrap().poly(),
            Form::parse("x0*x1^2 + x1*x2*x4 + x3*x4^2 + x4*x5*x7 + x6*x7^2").unwrap().poly()
        );
        assert!(fn_form(5).is_err());
    }

    #[test]
    fn configurations_verify() {
        for k in 1..=2 {
            let n = 3 * k + 1;
            let c = fn_point_configuration(k, 1, k).unwrap();
            assert_eq!(c.points.len(), n + 1);
            let data = c.tangent_data();
            assert_eq!(data.target(), *fn_form(n).unwrap().poly());
            let dec = construct_tangent_decomposition(&data).unwrap();
            assert!(verify_border_decomposition(&dec, &fn_form(n).unwrap()).unwrap().ok);
        }
        assert!(matches!(fn_point_configuration(3, 2, 2), Err(Error::BadPair { .. })));
    }
}
