use super::basis::buchberger;
use super::engine::Engine;
use super::ideal::GradedIdeal;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// Moves variable `i` to the last position.
fn to_last(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|j| if j == i { n - 1 } else if j > i { j - 1 } else { j }).collect()
}

fn permute(p: &Polynomial, perm: &[usize]) -> Polynomial {
    let terms = p.terms().iter().map(|(m, c)| (m.permute(perm), c.clone())).collect();
    Polynomial::from_terms(p.ring(), p.nvars(), terms)
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Divides `p` by `y_last^e` with `e = min(max_e, largest power dividing p)`.
fn strip_last(p: &Polynomial, max_e: Option<u16>) -> Polynomial {
    let last = p.nvars() - 1;
    let mut e = p.terms().iter().map(|(m, _)| m.exp(last)).min().unwrap_or(0);
    if let Some(b) = max_e {
        e = e.min(b);
    }
    if e == 0 {
        return p.clone();
    }
    let mut d = vec![0u16; p.nvars()];
    d[last] = e;
    let dm = Monomial::new(&d);
    let terms = p.terms().iter().map(|(m, c)| (dm.div(m).expect("divisible"), c.clone())).collect();
    Polynomial::from_terms(p.ring(), p.nvars(), terms)
}

/// `(I : y_i)` (once) or `(I : y_i^∞)`, from a grevlex basis with `y_i` last.
fn colon_variable(i_: &GradedIdeal, var: usize, once: bool) -> GradedIdeal {
    let n = i_.nvars();
    if i_.generators().is_empty() {
        return i_.clone();
    }
    let perm = to_last(n, var);
    let inv = inverse(&perm);
    let gens: Vec<Polynomial> = i_.generators().iter().map(|g| permute(g, &perm)).collect();
    let gb = buchberger(&gens, n, MonomialOrder::Grevlex);
    let out: Vec<Polynomial> = gb
        .elements()
        .iter()
        .map(|g| permute(&strip_last(g, if once { Some(1) } else { None }), &inv))
        .collect();
    GradedIdeal::new(n, out).expect("homogeneous")
}

/// `(I : y_i^∞)`.
pub fn saturate_by_variable(i_: &GradedIdeal, var: usize) -> GradedIdeal {
    colon_variable(i_, var, false)
}

fn lift(p: &Polynomial, front: &Polynomial) -> Polynomial {
    // p in n variables -> front * p in n+1 variables (aux variable at index 0)
    let n1 = p.nvars() + 1;
    let terms = p.terms().iter().map(|(m, c)| (m.extend_front(1, 0), c.clone())).collect();
    Polynomial::from_terms(p.ring(), n1, terms).mul(front)
}

fn eliminate_aux(e: Engine, ring: Ring, n: usize) -> GradedIdeal {
    let basis = e.reduced_basis(ring);
    let out: Vec<Polynomial> = basis
        .into_iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exp(0) == 0))
        .map(|g| {
            let terms = g.terms().iter().map(|(m, c)| (m.drop_front(1), c.clone())).collect();
            Polynomial::from_terms(ring, n, terms)
        })
        .collect();
    GradedIdeal::new(n, out).expect("elimination ideal of homogeneous data is homogeneous")
}

/// `(I : f^∞)`; variables use the fast route, general `f` an auxiliary variable `w` with `1 - w f`.
pub fn saturate_by(i_: &GradedIdeal, f: &Polynomial) -> GradedIdeal {
    let n = i_.nvars();
    if let [(m, _)] = f.terms() {
        let mut acc = i_.clone();
        for v in m.support() {
            acc = saturate_by_variable(&acc, v);
        }
        return acc;
    }
    let ring = Ring::Dual;
    let mut e = Engine::new(n + 1, MonomialOrder::Block(1));
    let one = Polynomial::one(ring, n + 1);
    for g in i_.generators() {
        e.add(&lift(g, &one));
    }
    let w = Polynomial::var(ring, n + 1, 0);
    e.add(&one.sub(&lift(&f.with_ring(ring), &w)));
    e.run(None);
    eliminate_aux(e, ring, n)
}

/// `I ∩ J` by eliminating `t` from `t I + (1 - t) J`.
pub fn intersect(a: &GradedIdeal, b: &GradedIdeal) -> GradedIdeal {
    let n = a.nvars();
    if a.generators().is_empty() || b.generators().is_empty() {
        return GradedIdeal::zero(n);
    }
    let ring = Ring::Dual;
    let mut e = Engine::new(n + 1, MonomialOrder::Block(1));
    let t = Polynomial::var(ring, n + 1, 0);
    let one_minus_t = Polynomial::one(ring, n + 1).sub(&t);
    for g in a.generators() {
        e.add(&lift(g, &t));
    }
    for g in b.generators() {
        e.add(&lift(g, &one_minus_t));
    }
    e.run(None);
    eliminate_aux(e, ring, n)
}

/// `(I : f)`.
pub fn colon_ideal(i_: &GradedIdeal, f: &Polynomial) -> GradedIdeal {
    let n = i_.nvars();
    if let [(m, _)] = f.terms() {
        if m.degree() == 1 {
            let v = m.support().next().expect("variable");
            return colon_variable(i_, v, true);
        }
    }
    let fi = GradedIdeal::new(n, vec![f.with_ring(Ring::Dual)]).expect("homogeneous");
    let cap = intersect(i_, &fi);
    let f = f.with_ring(Ring::Dual);
    let gens = cap.generators().iter().map(|g| g.div_exact(&f).expect("element of <f>")).collect();
    GradedIdeal::new(n, gens).expect("homogeneous")
}

/// Repeats `I -> I : f` until it stabilizes; returns the result and the number of strict steps.
pub fn iterated_colon(i_: &GradedIdeal, f: &Polynomial, max_steps: usize) -> (GradedIdeal, usize) {
    let mut cur = i_.clone();
    for step in 0..max_steps {
        let next = colon_ideal(&cur, f);
        if cur.contains_ideal(&next) {
            return (cur, step);
        }
        cur = next;
    }
    (cur, max_steps)
}

/// `I^sat = I : m^∞`, as the intersection of the saturations by each variable.
pub fn saturation(i_: &GradedIdeal) -> GradedIdeal {
    let n = i_.nvars();
    if i_.generators().is_empty() {
        return i_.clone();
    }
    let mut acc: Option<GradedIdeal> = None;
    for v in 0..n {
        let s = saturate_by_variable(i_, v);
        acc = Some(match acc {
            None => s,
            Some(a) => {
                if s.contains_ideal(&a) {
                    a
                } else if a.contains_ideal(&s) {
                    s
                } else {
                    intersect(&a, &s)
                }
            }
        });
    }
    let out = acc.expect("at least one variable");
    out.reduced()
}

/// Whether `I_1 ≠ 0`.
pub fn contains_linear_form(i_: &GradedIdeal) -> bool {
    let gb = i_.groebner_basis();
    gb.is_unit() || gb.leading_monomials().iter().any(|m| m.degree() == 1)
}

/// Whether `I` equals its saturation.
pub fn is_saturated(i_: &GradedIdeal) -> bool {
    let s = saturation(i_);
    i_.contains_ideal(&s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VariableSet};

    fn ideal(v: &[&str], n: usize) -> GradedIdeal {
        let vs = VariableSet::standard(n);
        GradedIdeal::new(n, v.iter().map(|s| parse_poly(s, &vs).unwrap()).collect()).unwrap()
    }

    #[test]
    fn saturate_product() {
        let i = ideal(&["y0*y1"], 2);
        let y1 = parse_poly("y1", &VariableSet::standard(2)).unwrap();
        assert!(saturate_by(&i, &y1).same_ideal(&ideal(&["y0"], 2)));
        let s = saturate_by(&i, &parse_poly("y0 + y1", &VariableSet::standard(2)).unwrap());
        assert!(s.same_ideal(&i));
    }

    #[test]
    fn colon_and_intersection() {
        let i = ideal(&["y0^2*y1", "y1^3"], 2);
        let y1 = parse_poly("y1", &VariableSet::standard(2)).unwrap();
        assert!(colon_ideal(&i, &y1).same_ideal(&ideal(&["y0^2", "y1^2"], 2)));
        let f = parse_poly("y0*y1", &VariableSet::standard(2)).unwrap();
        assert!(colon_ideal(&i, &f).same_ideal(&ideal(&["y0", "y1^2"], 2)));
        let cap = intersect(&ideal(&["y0"], 2), &ideal(&["y1"], 2));
        assert!(cap.same_ideal(&ideal(&["y0*y1"], 2)));
    }

    #[test]
    fn saturation_of_embedded_component() {
        // <y0^2, y0*y1> = <y0> ∩ <y0^2, y1>: saturation is <y0>
        let i = ideal(&["y0^2", "y0*y1"], 2);
        assert!(saturation(&i).same_ideal(&ideal(&["y0"], 2)));
        assert!(!is_saturated(&i));
        assert!(is_saturated(&ideal(&["y1^2"], 2)));
        let m = ideal(&["y0", "y1"], 2);
        assert!(saturation(&m).is_unit());
    }
}
