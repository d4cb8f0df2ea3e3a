use std::collections::HashMap;

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::finite::{jet_algebra, FiniteAlgebra};
use super::gorenstein::GorensteinWitness;
use crate::apolar::annihilator_generators;
use crate::error::{Error, Result};
use crate::groebner::{GradedIdeal, GroebnerBasis};
use crate::linalg::{inverse, Matrix, Scalar};
use crate::poly::{apply_dual, monomial_basis, Form, Monomial, Polynomial, Ring, VariableSet};
use crate::random::small_point;

/// `T/I` on the standard monomials of a Gröbner basis, ordered by degree.
#[derive(Clone, Debug)]
pub struct MonomialAlgebra {
    pub algebra: FiniteAlgebra,
    pub monomials: Vec<Monomial>,
}

fn monomial_algebra(gb: &GroebnerBasis, vars: &VariableSet) -> Result<MonomialAlgebra> {
    let mut monomials = Vec::new();
    for k in 0.. {
        let s = gb.standard_monomials(k);
        if s.is_empty() {
            break;
        }
        monomials.extend(s);
    }
    let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let m = monomials.len();
    let mut products = vec![vec![vec![Scalar::zero(); m]; m]; m];
    for i in 0..m {
        for j in i..m {
            let p = Polynomial::monomial(Ring::Dual, monomials[i].mul(&monomials[j]), Scalar::from_integer(1.into()));
            for (mono, c) in gb.normal_form(&p).terms() {
                let k = index[mono];
                products[i][j][k] = c.clone();
                products[j][i][k] = c.clone();
            }
        }
    }
    let labels = monomials
        .iter()
        .map(|mono| Polynomial::monomial(Ring::Dual, mono.clone(), Scalar::from_integer(1.into())).display_with(vars))
        .collect();
    Ok(MonomialAlgebra { algebra: FiniteAlgebra::from_dense(labels, products)?, monomials })
}

/// Quotient of the dual ring by an ideal with finite-dimensional quotient.
pub fn quotient_algebra(ideal: &GradedIdeal, vars: &VariableSet) -> Result<MonomialAlgebra> {
    if ideal.dimension() > 0 {
        return Err(Error::NotArtinian);
    }
    monomial_algebra(ideal.groebner_basis(), vars)
}

/// Apolar algebra together with its canonical witness `e(s) = s ∘ F` on top-degree monomials.
#[derive(Clone, Debug)]
pub struct ApolarAlgebra {
    pub algebra: FiniteAlgebra,
    pub monomials: Vec<Monomial>,
    pub witness: GorensteinWitness,
}

pub fn apolar_presentation(f: &Form) -> ApolarAlgebra {
    let ann = annihilator_generators(f);
    let MonomialAlgebra { algebra, monomials } = monomial_algebra(ann.groebner_basis(), f.vars()).expect("apolar algebras are associative");
    let d = f.degree();
    let functional = monomials
        .iter()
        .map(|mono| {
            if mono.degree() != d {
                return Scalar::zero();
            }
            let h = Polynomial::monomial(Ring::Dual, mono.clone(), Scalar::from_integer(1.into()));
            let v = apply_dual(&h, f.poly()).expect("dual acts on primal");
            v.terms().first().map_or_else(Scalar::zero, |(_, c)| c.clone())
        })
        .collect();
    let witness = GorensteinWitness::new(&algebra, functional).expect("apolar algebras are Gorenstein");
    ApolarAlgebra { algebra, monomials, witness }
}

/// `T/Ann(F)`.
pub fn apolar_algebra(f: &Form) -> FiniteAlgebra {
    apolar_presentation(f).algebra
}

impl FiniteAlgebra {
    /// Rewrites the algebra in the basis whose vectors are the rows of `p`; row 0 must be the unit.
    pub fn change_basis(&self, p: &Matrix<Scalar>) -> Result<FiniteAlgebra> {
        let m = self.dim();
        if p.rows() != m || p.cols() != m || p.row(0) != self.unit().as_slice() {
            return Err(Error::InvalidAlgebra("basis change must be square and keep the unit first".into()));
        }
        let inv = inverse(p).ok_or_else(|| Error::InvalidAlgebra("basis change is singular".into()))?;
        let products = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let x = self.mul(p.row(i), p.row(j));
                        // coordinates c with c P = x
                        (0..m).map(|k| (0..m).map(|l| &x[l] * inv.get(l, k)).sum()).collect()
                    })
                    .collect()
            })
            .collect();
        let labels = (0..m).map(|i| if i == 0 { "1".to_string() } else { format!("b{i}") }).collect();
        FiniteAlgebra::from_dense(labels, products)
    }
}

/// Product of one to three jet algebras, in a random unitriangular basis.
pub fn random_smoothable_algebra(rng: &mut ChaCha8Rng) -> FiniteAlgebra {
    let factors = rng.gen_range(1..=3);
    let mut a = jet_algebra(rng.gen_range(1..=3));
    for _ in 1..factors {
        a = a.product_with(&jet_algebra(rng.gen_range(1..=3)));
    }
    let m = a.dim();
    let rows = (0..m)
        .map(|i| {
            let mut r = small_point(rng, m, 2);
            r[i] = Scalar::from_integer(1.into());
            for x in r.iter_mut().take(i) {
                *x = Scalar::zero();
            }
            if i == 0 {
                r = a.unit();
            }
            r
        })
        .collect();
    a.change_basis(&Matrix::from_rows(rows, m).expect("square")).expect("unitriangular change")
}

fn random_form(rng: &mut ChaCha8Rng, ring: Ring, nvars: usize, k: u32) -> Polynomial {
    let basis = monomial_basis(nvars, k, None);
    let coeffs = small_point(rng, basis.len(), 3);
    Polynomial::from_terms(ring, nvars, basis.into_iter().zip(coeffs).collect())
}

/// A graded Artinian quotient of `Q[y0..y_{n-1}]`, `n ∈ {2, 3}`; index 0 is the unit and the rest span
/// the maximal ideal.
///
/// Even draws are apolar algebras of random forms, odd draws are cut out by a few random forms
/// plus every monomial of degree `top + 1`.
pub fn random_graded_local_algebra(rng: &mut ChaCha8Rng) -> FiniteAlgebra {
    let n = rng.gen_range(2..=3);
    let top = rng.gen_range(2..=3);
    let vars = VariableSet::standard(n);
    if rng.gen_bool(0.5) {
        loop {
            let f = random_form(rng, Ring::Primal, n, top);
            if let Ok(form) = Form::new(f, vars.clone()) {
                return apolar_algebra(&form);
            }
        }
    }
    let mut gens: Vec<Polynomial> = monomial_basis(n, top + 1, None)
        .into_iter()
        .map(|m| Polynomial::monomial(Ring::Dual, m, Scalar::from_integer(1.into())))
        .collect();
    for _ in 0..rng.gen_range(1..=3) {
        let k = rng.gen_range(2..=top);
        let g = random_form(rng, Ring::Dual, n, k);
        if !g.is_zero() {
            gens.push(g);
        }
    }
    let ideal = GradedIdeal::new(n, gens).expect("homogeneous generators");
    quotient_algebra(&ideal, &vars).expect("contains a power of the maximal ideal").algebra
}
