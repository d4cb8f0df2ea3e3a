use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{Scalar, UniPoly};
use crate::poly::{Form, Polynomial, Ring, VariableSet};

/// One summand `weight · L(t)^d`, with `L(t) = Σ_i coeffs[i](t) x_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Summand {
    pub weight: Scalar,
    pub coeffs: Vec<UniPoly>,
}

impl Summand {
    /// The linear form obtained from the coefficient of `t^k`.
    pub fn linear_part(&self, k: usize) -> Vec<Scalar> {
        self.coeffs.iter().map(|c| Scalar::from_integer(c.coeff(k))).collect()
    }

    /// Lowest `t`-order with a nonzero coefficient vector.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.valuation()).min()
    }
}

/// `F = t^{-s} Σ_j w_j L_j(t)^d + O(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BorderDecomposition {
    pub nvars: usize,
    pub degree: u32,
    pub shift: u32,
    pub summands: Vec<Summand>,
}

impl BorderDecomposition {
    pub fn new(nvars: usize, degree: u32, shift: u32, summands: Vec<Summand>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::DimensionMismatch("a decomposition needs at least one summand".into()));
        }
        if summands.iter().any(|s| s.coeffs.len() != nvars) {
            return Err(Error::DimensionMismatch(format!("every linear form needs {nvars} coefficients")));
        }
        Ok(BorderDecomposition { nvars, degree, shift, summands })
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Coefficients of `t^0..=t^s` of `Σ_j w_j L_j(t)^d`.
    pub fn expand(&self) -> Vec<Polynomial> {
        let s = self.shift as usize;
        let n = self.nvars;
        let mut acc = vec![Polynomial::zero(Ring::Primal, n); s + 1];
        for sm in &self.summands {
            let series: Vec<Polynomial> = (0..=s).map(|k| Polynomial::linear(Ring::Primal, &sm.linear_part(k))).collect();
            let mut pow = vec![Polynomial::zero(Ring::Primal, n); s + 1];
            pow[0] = Polynomial::one(Ring::Primal, n);
            for _ in 0..self.degree {
                pow = truncated_mul(&pow, &series, s);
            }
            for (a, p) in acc.iter_mut().zip(pow) {
                *a = a.add(&p.scale(&sm.weight));
            }
        }
        acc
    }

    /// Display form of the decomposition.
    pub fn describe(&self, vars: &VariableSet) -> String {
        let mut parts = Vec::new();
        for sm in &self.summands {
            let terms: Vec<String> = sm
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| format!("({c})*{}", vars.primal_name(i)))
                .collect();
            parts.push(format!("{} * ({})^{}", crate::linalg::format_scalar(&sm.weight), terms.join(" + "), self.degree));
        }
        format!("t^-{} * [{}]", self.shift, parts.join(" + "))
    }
}

fn truncated_mul(a: &[Polynomial], b: &[Polynomial], s: usize) -> Vec<Polynomial> {
    let n = a[0].nvars();
    let mut out = vec![Polynomial::zero(Ring::Primal, n); s + 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(s + 1 - i) {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    out
}

/// Result of checking a decomposition against a form.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub ok: bool,
    /// First `t`-order that disagrees.
    pub failing_order: Option<u32>,
    /// Offending coefficient minus its expected value.
    pub residual: Option<Polynomial>,
}

/// Checks that the `t^k` coefficients vanish for `k < s` and the `t^s` coefficient equals `F`.
pub fn verify_border_decomposition(d: &BorderDecomposition, f: &Form) -> Result<VerificationReport> {
    if d.nvars != f.nvars() || d.degree != f.degree() {
        return Err(Error::DimensionMismatch(format!(
            "decomposition of degree {} in {} variables against a form of degree {} in {}",
            d.degree,
            d.nvars,
            f.degree(),
            f.nvars()
        )));
    }
    let coeffs = d.expand();
    for (k, c) in coeffs.iter().enumerate() {
        let expected = if k == d.shift as usize { f.poly().clone() } else { Polynomial::zero(Ring::Primal, d.nvars) };
        let residual = c.sub(&expected);
        if !residual.is_zero() {
            return Ok(VerificationReport { ok: false, failing_order: Some(k as u32), residual: Some(residual) });
        }
    }
    Ok(VerificationReport { ok: true, failing_order: None, residual: None })
}

/// Exact rank decomposition `Σ w_j ℓ_j^d` with `t`-free forms.
pub fn constant_decomposition(weights: &[Scalar], forms: &[Vec<BigInt>], degree: u32) -> Result<BorderDecomposition> {
    let n = forms.first().map_or(0, |f| f.len());
    let summands = weights
        .iter()
        .zip(forms)
        .map(|(w, f)| Summand { weight: w.clone(), coeffs: f.iter().map(|c| UniPoly::constant(c.clone())).collect() })
        .collect();
    BorderDecomposition::new(n, degree, 0, summands)
}
