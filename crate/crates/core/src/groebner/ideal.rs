use std::fmt;
use std::sync::OnceLock;

use super::basis::{buchberger, GroebnerBasis};
use super::hilbert::{constant_tail, hf_from_numerator, hilbert_numerator, reduced_series};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, VariableSet};

/// Homogeneous ideal in the dual ring with a lazily computed grevlex Gröbner basis.
#[derive(Clone, Debug)]
pub struct GradedIdeal {
    nvars: usize,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
    numerator: OnceLock<Vec<i128>>,
}

impl GradedIdeal {
    pub fn new(nvars: usize, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != nvars {
                return Err(Error::RingMismatch(format!("generator in {} variables, ideal in {nvars}", g.nvars())));
            }
            if g.ring() != Ring::Dual {
                return Err(Error::RingMismatch("ideal generators must use y-variables".into()));
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(GradedIdeal { nvars, gens, gb: OnceLock::new(), numerator: OnceLock::new() })
    }

    pub fn zero(nvars: usize) -> Self {
        GradedIdeal { nvars, gens: Vec::new(), gb: OnceLock::new(), numerator: OnceLock::new() }
    }

    /// Generators together with their known reduced grevlex basis.
    pub(crate) fn with_basis(nvars: usize, gens: Vec<Polynomial>, gb: GroebnerBasis) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        GradedIdeal { nvars, gens, gb: cell, numerator: OnceLock::new() }
    }

    /// Wraps a known reduced grevlex basis.
    pub(crate) fn from_basis(gb: GroebnerBasis) -> Self {
        let nvars = gb.nvars();
        let gens = gb.elements().to_vec();
        let cell = OnceLock::new();
        let _ = cell.set(gb);
        GradedIdeal { nvars, gens, gb: cell, numerator: OnceLock::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| buchberger(&self.gens, self.nvars, MonomialOrder::Grevlex))
    }

    pub fn hilbert_numerator(&self) -> &[i128] {
        self.numerator.get_or_init(|| hilbert_numerator(self.groebner_basis().leading_monomials()))
    }

    /// `HF(T/I, k)`.
    pub fn hf(&self, k: u32) -> usize {
        if self.gens.is_empty() {
            return crate::poly::dim_degree(self.nvars, k);
        }
        hf_from_numerator(self.hilbert_numerator(), self.nvars, k)
    }

    pub fn hf_table(&self, upto: u32) -> Vec<usize> {
        (0..=upto).map(|k| self.hf(k)).collect()
    }

    /// Krull dimension of `T/I` and the reduced Hilbert series numerator.
    pub fn dimension(&self) -> usize {
        if self.gens.is_empty() {
            return self.nvars;
        }
        reduced_series(self.hilbert_numerator(), self.nvars).0
    }

    /// For one-dimensional quotients: `(length, first degree where HF equals it)`.
    pub fn length_and_regularity(&self) -> Option<(usize, usize)> {
        if self.gens.is_empty() {
            return None;
        }
        constant_tail(self.hilbert_numerator(), self.nvars)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.groebner_basis().contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &GradedIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality by mutual membership.
    pub fn same_ideal(&self, other: &GradedIdeal) -> bool {
        self.nvars == other.nvars && self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn sum(&self, other: &GradedIdeal) -> GradedIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        GradedIdeal::new(self.nvars, gens).expect("homogeneous")
    }

    /// Ideal generated by the generators of degree at most `d`.
    pub fn truncate(&self, d: u32) -> GradedIdeal {
        let gens = self.gens.iter().filter(|g| g.degree().is_some_and(|e| e <= d)).cloned().collect();
        GradedIdeal::new(self.nvars, gens).expect("homogeneous")
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    /// Standard monomials of degree `k` for the grevlex basis.
    pub fn standard_monomials(&self, k: u32) -> Vec<Monomial> {
        self.groebner_basis().standard_monomials(k)
    }

    /// The reduced Gröbner basis as a new ideal (canonical generators).
    pub fn reduced(&self) -> GradedIdeal {
        GradedIdeal::from_basis(self.groebner_basis().clone())
    }

    pub fn display_with(&self, vars: &VariableSet) -> String {
        let g: Vec<String> = self.gens.iter().map(|p| p.display_with(vars)).collect();
        format!("<{}>", g.join(", "))
    }
}

impl fmt::Display for GradedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&VariableSet::standard(self.nvars)))
    }
}
