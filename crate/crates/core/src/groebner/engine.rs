use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::cmp::Ordering;

use super::ipoly::{axpy, content, IPoly, Terms};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Incremental Buchberger engine with the Gebauer–Möller criteria and the sugar strategy.
///
/// `run(Some(b))` processes only pairs and inputs of sugar at most `b`; for homogeneous
/// input under a graded order the active basis is then correct up to degree `b`.
pub struct Engine {
    order: MonomialOrder,
    nvars: usize,
    polys: Vec<IPoly>,
    sevs: Vec<u64>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    inputs: Vec<IPoly>,
    unit: bool,
}

impl Engine {
    pub fn new(nvars: usize, order: MonomialOrder) -> Self {
        Engine {
            order,
            nvars,
            polys: Vec::new(),
            sevs: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            inputs: Vec::new(),
            unit: false,
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add(&mut self, p: &Polynomial) {
        assert_eq!(p.nvars(), self.nvars, "variable count mismatch");
        if !p.is_zero() {
            self.inputs.push(IPoly::from_poly(p, self.order));
        }
    }

    /// Whether the ideal has been found to contain a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.unit
    }

    fn next_sugar(&self) -> Option<u32> {
        let a = self.inputs.iter().map(|f| f.sugar).min();
        let b = self.pairs.last().map(|p| p.sugar);
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        }
    }

    /// Processes pairs and inputs up to the sugar bound (`None`: to completion).
    pub fn run(&mut self, bound: Option<u32>) {
        while !self.unit {
            let Some(s) = self.next_sugar() else { break };
            if bound.is_some_and(|b| s > b) {
                break;
            }
            let from_input = self.inputs.iter().position(|f| f.sugar == s);
            let f = if let Some(k) = from_input {
                self.inputs.swap_remove(k)
            } else {
                let p = self.pairs.pop().expect("pair");
                self.spoly(&p)
            };
            let h = self.reduce(f, true);
            if !h.is_zero() {
                self.insert(h);
            }
        }
    }

    fn spoly(&self, p: &Pair) -> IPoly {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let qf = f.lm().div(&p.lcm).expect("lcm");
        let qg = g.lm().div(&p.lcm).expect("lcm");
        let gcd = f.lc().gcd(g.lc());
        let a = g.lc() / &gcd;
        let b = f.lc() / &gcd;
        let ft: Terms<BigInt> = f.terms[1..].iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
        let terms = axpy(self.order, &a, &ft, &b, &qg, &g.terms[1..]);
        let mut out = IPoly { terms, sugar: p.sugar };
        out.make_primitive();
        out
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let sev = m.sev();
        (0..self.polys.len())
            .find(|&k| self.active[k] && self.sevs[k] & !sev == 0 && self.polys[k].lm().divides(m))
    }

    /// Reduces `f` by the active basis; `full` also reduces the tail.
    pub(crate) fn reduce(&self, f: IPoly, full: bool) -> IPoly {
        let mut rem: Terms<BigInt> = Vec::new();
        let mut terms = f.terms;
        let mut sugar = f.sugar;
        let mut pos = 0usize;
        let mut steps = 0usize;
        while pos < terms.len() {
            let m = &terms[pos].0;
            match self.find_divisor(m) {
                Some(k) => {
                    let g = &self.polys[k];
                    let q = g.lm().div(m).expect("divisor");
                    sugar = sugar.max(g.sugar + q.degree());
                    let c = terms[pos].1.clone();
                    let gcd = c.gcd(g.lc());
                    let a = g.lc() / &gcd;
                    let b = &c / &gcd;
                    if !a.is_one() {
                        for t in rem.iter_mut() {
                            t.1 = &t.1 * &a;
                        }
                    }
                    terms = axpy(self.order, &a, &terms[pos + 1..], &b, &q, &g.terms[1..]);
                    pos = 0;
                    steps += 1;
                    if steps % 8 == 0 {
                        let g = content(&terms).gcd(&content(&rem));
                        if !g.is_one() && !g.is_zero() {
                            for t in rem.iter_mut().chain(terms.iter_mut()) {
                                t.1 = &t.1 / &g;
                            }
                        }
                    }
                }
                None if full => {
                    pos += 1;
                }
                None => break,
            }
            if pos > 0 {
                // everything before pos is irreducible
                rem.extend(terms.drain(..pos));
                pos = 0;
            }
        }
        rem.extend(terms);
        let mut out = IPoly { terms: rem, sugar };
        out.make_primitive();
        out
    }

    fn insert(&mut self, h: IPoly) {
        if h.lm().is_one() {
            self.unit = true;
            let mut one = h;
            one.terms.truncate(1);
            one.terms[0].1 = BigInt::one();
            for a in self.active.iter_mut() {
                *a = false;
            }
            self.pairs.clear();
            self.sevs.push(0);
            self.polys.push(one);
            self.active.push(true);
            return;
        }
        let hi = self.polys.len();
        let hlm = h.lm().clone();
        // Gebauer–Möller update
        let mut cands: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let glm = self.polys[g].lm();
                (g, glm.lcm(&hlm), glm.is_coprime(&hlm))
            })
            .collect();
        let mut keep: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g, l, cop)) = cands.pop() {
            let dominated = cands.iter().chain(keep.iter()).any(|(_, l2, _)| l2.divides(&l));
            if cop || !dominated {
                keep.push((g, l, cop));
            }
        }
        let order = self.order;
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hlm.divides(&p.lcm)
                && polys[p.i].lm().lcm(&hlm) != p.lcm
                && polys[p.j].lm().lcm(&hlm) != p.lcm)
        });
        for (g, l, cop) in keep {
            if cop {
                continue;
            }
            let f = &self.polys[g];
            let sugar = (f.sugar + f.lm().div(&l).expect("lcm").degree()).max(h.sugar + hlm.div(&l).expect("lcm").degree());
            self.pairs.push(Pair { i: g, j: hi, lcm: l, sugar });
        }
        // pop from the end yields the smallest sugar, then the smallest lcm
        self.pairs.sort_by(|a, b| b.sugar.cmp(&a.sugar).then_with(|| order.cmp(&b.lcm, &a.lcm)).then(Ordering::Equal));
        for g in 0..hi {
            if self.active[g] && hlm.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
        self.sevs.push(hlm.sev());
        self.polys.push(h);
        self.active.push(true);
    }

    /// Leading monomials of the active basis.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        (0..self.polys.len()).filter(|&k| self.active[k]).map(|k| self.polys[k].lm().clone()).collect()
    }

    /// Whether all work below the bound is done.
    pub fn is_complete(&self) -> bool {
        self.unit || (self.pairs.is_empty() && self.inputs.is_empty())
    }

    /// Interreduced monic basis of the active elements.
    pub fn reduced_basis(&self, ring: Ring) -> Vec<Polynomial> {
        if self.unit {
            return vec![Polynomial::one(ring, self.nvars)];
        }
        (0..self.polys.len())
            .filter(|&k| self.active[k])
            .map(|k| self.combine(&self.polys[k], k).to_poly(ring, self.nvars))
            .collect()
    }

    /// Fully reduces `f` against the other active elements, keeping its leading term.
    fn combine(&self, f: &IPoly, k: usize) -> IPoly {
        let mut rem: Terms<BigInt> = vec![f.terms[0].clone()];
        let mut terms: Terms<BigInt> = f.terms[1..].to_vec();
        while !terms.is_empty() {
            let m = &terms[0].0;
            let sev = m.sev();
            let div = (0..self.polys.len()).find(|&j| {
                j != k && self.active[j] && self.sevs[j] & !sev == 0 && self.polys[j].lm().divides(m)
            });
            match div {
                Some(j) => {
                    let g = &self.polys[j];
                    let q = g.lm().div(m).expect("divisor");
                    let gcd = terms[0].1.gcd(g.lc());
                    let a = g.lc() / &gcd;
                    let b = &terms[0].1 / &gcd;
                    if !a.is_one() {
                        for t in rem.iter_mut() {
                            t.1 = &t.1 * &a;
                        }
                    }
                    terms = axpy(self.order, &a, &terms[1..], &b, &q, &g.terms[1..]);
                }
                None => rem.push(terms.remove(0)),
            }
        }
        rem.extend(terms);
        let mut out = IPoly { terms: rem, sugar: f.sugar };
        out.make_primitive();
        out
    }
}
