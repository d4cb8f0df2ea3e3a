use super::basis::{standard_monomials, GroebnerBasis};
use super::engine::Engine;
use super::ideal::GradedIdeal;
use crate::linalg::{kernel_basis, Matrix, Scalar};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// Builds minimal generators of an ideal known degree by degree as the kernel of a linear map.
///
/// In degree `k` the new generators span the kernel of the target map restricted to the
/// standard monomials of the ideal generated so far.
pub(crate) struct GeneratorBuilder {
    nvars: usize,
    engine: Engine,
    gens: Vec<Polynomial>,
}

impl GeneratorBuilder {
    pub fn new(nvars: usize) -> Self {
        GeneratorBuilder { nvars, engine: Engine::new(nvars, MonomialOrder::Grevlex), gens: Vec::new() }
    }

    /// Standard monomials of degree `k` of the current ideal, ascending grevlex.
    pub fn standard(&mut self, k: u32) -> Vec<Monomial> {
        self.engine.run(Some(k));
        let mut s = standard_monomials(&self.engine.leading_monomials(), self.nvars, k);
        s.reverse();
        s
    }

    /// Adds the kernel of `map` (columns indexed by `cols`); returns the number of new generators.
    pub fn add_kernel(&mut self, cols: &[Monomial], map: &Matrix<Scalar>) -> usize {
        let ker = kernel_basis(map);
        let count = ker.len();
        for v in ker {
            let terms = cols.iter().cloned().zip(v).collect();
            let p = Polynomial::from_terms(Ring::Dual, self.nvars, terms);
            self.engine.add(&p);
            self.gens.push(p);
        }
        count
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Completes the Gröbner basis and returns the ideal with it attached.
    pub fn finish(mut self) -> GradedIdeal {
        self.engine.run(None);
        let gb = GroebnerBasis::from_reduced(MonomialOrder::Grevlex, Ring::Dual, self.nvars, self.engine.reduced_basis(Ring::Dual));
        GradedIdeal::with_basis(self.nvars, self.gens, gb)
    }
}
