use num_traits::One;

use super::engine::Engine;
use super::ipoly::{axpy, Terms};
use crate::linalg::Scalar;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// Reduced Gröbner basis with monic elements.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    ring: Ring,
    nvars: usize,
    elems: Vec<Polynomial>,
    lms: Vec<Monomial>,
}

fn sorted_terms(p: &Polynomial, order: MonomialOrder) -> Terms<Scalar> {
    let mut t = p.terms().to_vec();
    if order != MonomialOrder::Grevlex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(order: MonomialOrder, ring: Ring, nvars: usize, elems: Vec<Polynomial>) -> Self {
        let mut pairs: Vec<(Monomial, Polynomial)> = elems
            .into_iter()
            .map(|p| {
                let lm = sorted_terms(&p, order)[0].0.clone();
                (lm, p)
            })
            .collect();
        pairs.sort_by(|a, b| order.cmp(&a.0, &b.0));
        let (lms, elems) = pairs.into_iter().unzip();
        GroebnerBasis { order, ring, nvars, elems, lms }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elems
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.lms
    }

    pub fn is_unit(&self) -> bool {
        self.lms.iter().any(|m| m.is_one())
    }

    /// Whether `m` is standard (not divisible by any leading monomial).
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.lms.iter().any(|l| l.divides(m))
    }

    /// Remainder of `f` on division by the basis; zero iff `f` lies in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.nvars(), self.nvars, "variable count mismatch");
        let divisors: Vec<Terms<Scalar>> = self.elems.iter().map(|g| sorted_terms(g, self.order)).collect();
        let one = Scalar::one();
        let mut rem: Terms<Scalar> = Vec::new();
        let mut terms = sorted_terms(f, self.order);
        while !terms.is_empty() {
            let m = &terms[0].0;
            match self.lms.iter().position(|l| l.divides(m)) {
                Some(k) => {
                    let q = self.lms[k].div(m).expect("divisor");
                    let c = terms[0].1.clone();
                    terms = axpy(self.order, &one, &terms[1..], &c, &q, &divisors[k][1..]);
                }
                None => rem.push(terms.remove(0)),
            }
        }
        Polynomial::from_terms(f.ring(), self.nvars, rem)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let n = self.elems.len();
        for i in 0..n {
            for j in i + 1..n {
                let l = self.lms[i].lcm(&self.lms[j]);
                let a = self.elems[i].mul_monomial(&self.lms[i].div(&l).expect("lcm"), &Scalar::one());
                let b = self.elems[j].mul_monomial(&self.lms[j].div(&l).expect("lcm"), &Scalar::one());
                if !self.normal_form(&a.sub(&b)).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the basis is reduced: monic, and no term of any element is divisible by another leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.elems.iter().enumerate().all(|(i, g)| {
            let t = sorted_terms(g, self.order);
            t[0].1.is_one()
                && t.iter().enumerate().all(|(k, (m, _))| {
                    self.lms.iter().enumerate().all(|(j, l)| (k == 0 && j == i) || !l.divides(m))
                })
        })
    }

    /// Standard monomials of degree `k`.
    pub fn standard_monomials(&self, k: u32) -> Vec<Monomial> {
        standard_monomials(&self.lms, self.nvars, k)
    }
}

/// Monomials of degree `k` not divisible by any of `lms`, in descending grevlex order.
pub fn standard_monomials(lms: &[Monomial], nvars: usize, k: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    let mut exps = vec![0u16; nvars];
    // fill variables from the last one backwards so partial monomials only use trailing variables
    fn rec(lms: &[Monomial], var: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if var == 0 {
            exps[0] = left as u16;
            let m = Monomial::new(exps);
            if !lms.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            exps[0] = 0;
            return;
        }
        for e in 0..=left {
            exps[var] = e as u16;
            let partial = Monomial::new(exps);
            if e > 0 && lms.iter().any(|l| l.divides(&partial)) {
                break;
            }
            rec(lms, var - 1, left - e, exps, out);
        }
        exps[var] = 0;
    }
    rec(lms, nvars - 1, k, &mut exps, &mut out);
    out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
    out
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], nvars: usize, order: MonomialOrder) -> GroebnerBasis {
    let ring = gens.first().map_or(Ring::Dual, |g| g.ring());
    let mut e = Engine::new(nvars, order);
    for g in gens {
        e.add(g);
    }
    e.run(None);
    GroebnerBasis::from_reduced(order, ring, nvars, e.reduced_basis(ring))
}

/// Gröbner basis truncated at degree `bound` (homogeneous input, graded order).
pub fn buchberger_truncated(gens: &[Polynomial], nvars: usize, order: MonomialOrder, bound: u32) -> GroebnerBasis {
    let ring = gens.first().map_or(Ring::Dual, |g| g.ring());
    let mut e = Engine::new(nvars, order);
    for g in gens {
        e.add(g);
    }
    e.run(Some(bound));
    GroebnerBasis::from_reduced(order, ring, nvars, e.reduced_basis(ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VariableSet};

    fn ps(v: &[&str], n: usize) -> Vec<Polynomial> {
        v.iter().map(|s| parse_poly(s, &VariableSet::standard(n)).unwrap()).collect()
    }

    #[test]
    fn principal() {
        let g = buchberger(&ps(&["y0"], 2), 2, MonomialOrder::Grevlex);
        assert_eq!(g.elements(), &ps(&["y0"], 2)[..]);
    }

    #[test]
    fn fermat_annihilator() {
        let g = buchberger(&ps(&["y0*y1", "y0^3 - y1^3"], 2), 2, MonomialOrder::Grevlex);
        assert!(g.satisfies_buchberger_criterion());
        assert!(g.is_reduced());
        let hf: Vec<usize> = (0..5).map(|k| g.standard_monomials(k).len()).collect();
        assert_eq!(hf, vec![1, 2, 2, 1, 0]);
        let y0sq = &ps(&["y0^2"], 2)[0];
        assert_eq!(&g.normal_form(y0sq), y0sq);
    }

    #[test]
    fn coprime_pair() {
        let g = buchberger(&ps(&["y1^2", "y0*y1"], 2), 2, MonomialOrder::Grevlex);
        assert_eq!(g.elements().len(), 2);
        assert!(g.satisfies_buchberger_criterion());
    }

    #[test]
    fn lex_elimination() {
        // twisted cubic parametrization: eliminate y0 from y1 - y0, y2 - y0^2, y3 - y0^3
        let g = buchberger(&ps(&["y1 - y0", "y2 - y0^2", "y3 - y0^3"], 4), 4, MonomialOrder::Lex);
        assert!(g.satisfies_buchberger_criterion());
        assert!(g.contains(&ps(&["y2 - y1^2"], 4)[0]));
        assert!(g.contains(&ps(&["y3 - y1*y2"], 4)[0]));
    }
}
