use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::ops::{Mul, Neg, Sub};

use crate::linalg::field::common_denominator;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// Terms sorted in descending order for a fixed monomial order.
pub(crate) type Terms<C> = Vec<(Monomial, C)>;

/// `a*f - b*q*g` for term lists sorted descending in `order`.
pub(crate) fn axpy<C>(order: MonomialOrder, a: &C, f: &[(Monomial, C)], b: &C, q: &Monomial, g: &[(Monomial, C)]) -> Terms<C>
where
    C: Clone + Zero + One + PartialEq + Neg<Output = C>,
    for<'x> &'x C: Mul<&'x C, Output = C> + Sub<&'x C, Output = C>,
{
    let mut out = Vec::with_capacity(f.len() + g.len());
    let a_one = a.is_one();
    let (mut i, mut j) = (0, 0);
    let mut gm: Option<Monomial> = g.first().map(|t| t.0.mul(q));
    while i < f.len() || j < g.len() {
        let ord = match (i < f.len(), &gm) {
            (true, Some(m)) => order.cmp(&f[i].0, m),
            (true, None) => Ordering::Greater,
            (false, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                let c = if a_one { f[i].1.clone() } else { a * &f[i].1 };
                out.push((f[i].0.clone(), c));
                i += 1;
            }
            Ordering::Less => {
                let c = -(b * &g[j].1);
                out.push((gm.take().expect("term"), c));
                j += 1;
                gm = g.get(j).map(|t| t.0.mul(q));
            }
            Ordering::Equal => {
                let left = if a_one { f[i].1.clone() } else { a * &f[i].1 };
                let c = &left - &(b * &g[j].1);
                if !c.is_zero() {
                    out.push((f[i].0.clone(), c));
                }
                i += 1;
                j += 1;
                gm = g.get(j).map(|t| t.0.mul(q));
            }
        }
    }
    out
}

/// Polynomial with content-free integer coefficients and a sugar degree.
#[derive(Clone, Debug)]
pub(crate) struct IPoly {
    pub terms: Terms<BigInt>,
    pub sugar: u32,
}

impl IPoly {
    pub fn from_poly(p: &Polynomial, order: MonomialOrder) -> IPoly {
        let den = common_denominator(p.terms().iter().map(|(_, c)| c));
        let mut terms: Terms<BigInt> = p.terms().iter().map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom()))).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let sugar = terms.iter().map(|t| t.0.degree()).max().unwrap_or(0);
        let mut f = IPoly { terms, sugar };
        f.make_primitive();
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = content(&self.terms);
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for t in self.terms.iter_mut() {
                t.1 = &t.1 / &g;
            }
        }
    }

    /// Monic rational polynomial in the given ring.
    pub fn to_poly(&self, ring: Ring, nvars: usize) -> Polynomial {
        if self.terms.is_empty() {
            return Polynomial::zero(ring, nvars);
        }
        let lc = self.lc().clone();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), BigRational::new(c.clone(), lc.clone()))).collect();
        Polynomial::from_terms(ring, nvars, terms)
    }
}

pub(crate) fn content(terms: &[(Monomial, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in terms {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}
