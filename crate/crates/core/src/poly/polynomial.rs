use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::vars::VariableSet;
use crate::error::{Error, Result};
use crate::linalg::{format_scalar, Scalar};

/// Which ring a polynomial lives in: forms in the x-variables or differential operators in the y-variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Ring {
    Primal,
    Dual,
}

/// Sparse polynomial with terms sorted in descending grevlex order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    ring: Ring,
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

fn desc(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Grevlex.cmp(b, a)
}

impl Polynomial {
    pub fn zero(ring: Ring, nvars: usize) -> Self {
        Polynomial { ring, nvars, terms: Vec::new() }
    }

    pub fn constant(ring: Ring, nvars: usize, c: Scalar) -> Self {
        Self::from_terms(ring, nvars, vec![(Monomial::one(nvars), c)])
    }

    pub fn one(ring: Ring, nvars: usize) -> Self {
        Self::constant(ring, nvars, Scalar::one())
    }

    pub fn var(ring: Ring, nvars: usize, i: usize) -> Self {
        Self::from_terms(ring, nvars, vec![(Monomial::var(nvars, i), Scalar::one())])
    }

    pub fn monomial(ring: Ring, m: Monomial, c: Scalar) -> Self {
        let n = m.nvars();
        Self::from_terms(ring, n, vec![(m, c)])
    }

    /// Linear form `Σ c_i x_i`.
    pub fn linear(ring: Ring, coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        let terms = coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())).collect();
        Self::from_terms(ring, n, terms)
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(ring: Ring, nvars: usize, terms: Vec<(Monomial, Scalar)>) -> Self {
        let mut map: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            if c.is_zero() {
                continue;
            }
            *map.entry(m).or_insert_with(Scalar::zero) += c;
        }
        let mut terms: Vec<(Monomial, Scalar)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| desc(&a.0, &b.0));
        Polynomial { ring, nvars, terms }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Same polynomial regarded in the other ring.
    pub fn with_ring(&self, ring: Ring) -> Self {
        Polynomial { ring, nvars: self.nvars, terms: self.terms.clone() }
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .binary_search_by(|(t, _)| desc(t, m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Scalar::zero())
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            match desc(&self.terms[i].0, &o.terms[j].0) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(o.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &o.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Polynomial { ring: self.ring, nvars: self.nvars, terms: out }
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring, nvars: self.nvars, terms }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring, self.nvars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { ring: self.ring, nvars: self.nvars, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring, self.nvars);
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Polynomial { ring: self.ring, nvars: self.nvars, terms }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.ring, self.nvars);
        }
        let mut map: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.len() * o.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                *map.entry(a.mul(b)).or_insert_with(Scalar::zero) += ca * cb;
            }
        }
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| desc(&a.0, &b.0));
        Polynomial { ring: self.ring, nvars: self.nvars, terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.ring, self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let e = m.exp(i);
                m.div_var(i).map(|q| (q, c * Scalar::from_integer(BigInt::from(e))))
            })
            .collect();
        Self::from_terms(self.ring, self.nvars, terms)
    }

    /// Evaluation at a point.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in m.support() {
                v *= pow_scalar(&point[i], m.exp(i) as u32);
            }
            acc += v;
        }
        acc
    }

    /// Homogeneous component of degree `k`.
    pub fn component(&self, k: u32) -> Self {
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == k).cloned().collect();
        Polynomial { ring: self.ring, nvars: self.nvars, terms }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Substitutes `x_i -> images[i]`; images share a ring and variable count.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let (ring, n) = images.first().map_or((self.ring, 0), |p| (p.ring, p.nvars));
        let mut acc = Polynomial::zero(ring, n);
        let mut cache: HashMap<(usize, u16), Polynomial> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(ring, n, c.clone());
            for i in m.support() {
                let e = m.exp(i);
                let p = cache.entry((i, e)).or_insert_with(|| images[i].pow(e as u32));
                t = t.mul(p);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (dm, dc) = d.leading_term()?.clone();
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = r.terms.first().cloned() {
            let qm = dm.div(&m)?;
            let qc = c / &dc;
            r = r.sub(&d.mul_monomial(&qm, &qc));
            q.push((qm, qc));
        }
        Some(Polynomial { ring: self.ring, nvars: self.nvars, terms: q })
    }

    /// Clears denominators and removes the integer content, leaving a positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let den = crate::linalg::field::common_denominator(self.terms.iter().map(|(_, c)| c));
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&den / c.denom());
            g = num_integer::Integer::gcd(&g, &v);
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        self.scale(&BigRational::new(den, g))
    }

    /// Renders with the given variable names.
    pub fn display_with(&self, vars: &VariableSet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            for i in m.support() {
                let name = match self.ring {
                    Ring::Primal => vars.primal_name(i),
                    Ring::Dual => vars.dual_name(i),
                };
                let e = m.exp(i);
                factors.push(if e == 1 { name } else { format!("{name}^{e}") });
            }
            if factors.is_empty() {
                s.push_str(&format_scalar(&a));
            } else {
                if !a.is_one() {
                    s.push_str(&format_scalar(&a));
                    s.push('*');
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

pub(crate) fn pow_scalar(x: &Scalar, e: u32) -> Scalar {
    num_traits::pow::pow(x.clone(), e as usize)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&VariableSet::standard(self.nvars)))
    }
}

/// Falling factorial `b (b-1) ... (b-a+1)`.
fn falling(b: u16, a: u16) -> BigInt {
    let mut r = BigInt::one();
    for k in 0..a {
        r *= BigInt::from(b - k);
    }
    r
}

/// `y^a ∘ x^b`: coefficient and resulting monomial, `None` when the derivative vanishes.
pub fn apply_monomial(a: &Monomial, b: &Monomial) -> Option<(BigInt, Monomial)> {
    let q = a.div(b)?;
    let mut c = BigInt::one();
    for i in a.support() {
        c *= falling(b.exp(i), a.exp(i));
    }
    Some((c, q))
}

/// The apolarity action `h ∘ F`, with `y_i` acting as `∂/∂x_i`.
pub fn apply_dual(h: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    if h.ring() != Ring::Dual {
        return Err(Error::RingMismatch("operator must lie in the dual ring".into()));
    }
    if f.ring() != Ring::Primal {
        return Err(Error::RingMismatch("operand must lie in the primal ring".into()));
    }
    if h.nvars() != f.nvars() {
        return Err(Error::RingMismatch(format!("{} dual variables against {} primal variables", h.nvars(), f.nvars())));
    }
    let mut terms = Vec::new();
    for (a, ca) in h.terms() {
        for (b, cb) in f.terms() {
            if let Some((k, m)) = apply_monomial(a, b) {
                terms.push((m, ca * cb * Scalar::from_integer(k)));
            }
        }
    }
    Ok(Polynomial::from_terms(Ring::Primal, f.nvars(), terms))
}

/// All monomials of degree `k` in `nvars` variables (optionally only those in `restrict`), descending grevlex.
pub fn monomial_basis(nvars: usize, k: u32, restrict: Option<&[usize]>) -> Vec<Monomial> {
    let allowed: Vec<usize> = match restrict {
        Some(r) => r.to_vec(),
        None => (0..nvars).collect(),
    };
    let mut out = Vec::new();
    let mut exps = vec![0u16; nvars];
    fn rec(allowed: &[usize], pos: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if pos + 1 == allowed.len() {
            exps[allowed[pos]] = left as u16;
            out.push(Monomial::new(exps));
            exps[allowed[pos]] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[allowed[pos]] = e as u16;
            rec(allowed, pos + 1, left - e, exps, out);
        }
        exps[allowed[pos]] = 0;
    }
    if allowed.is_empty() {
        if k == 0 {
            out.push(Monomial::one(nvars));
        }
        return out;
    }
    rec(&allowed, 0, k, &mut exps, &mut out);
    out.sort_by(desc);
    out
}

/// `binomial(n, k)` as `usize`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

/// `dim S^k` in `nvars` variables.
pub fn dim_degree(nvars: usize, k: u32) -> usize {
    if nvars == 0 {
        return usize::from(k == 0);
    }
    binomial(nvars - 1 + k as usize, k as usize)
}
