use std::fmt;
use std::sync::OnceLock;

use super::parse::parse_poly;
use super::polynomial::{Polynomial, Ring};
use super::vars::VariableSet;
use crate::error::{Error, Result};

/// A nonzero homogeneous polynomial of degree at least 1 in the primal ring.
#[derive(Clone, Debug)]
pub struct Form {
    poly: Polynomial,
    degree: u32,
    vars: VariableSet,
    hf: OnceLock<Vec<usize>>,
}

impl PartialEq for Form {
    fn eq(&self, o: &Self) -> bool {
        self.poly == o.poly
    }
}

impl Form {
    pub fn new(poly: Polynomial, vars: VariableSet) -> Result<Self> {
        if poly.ring() != Ring::Primal {
            return Err(Error::RingMismatch("a form lives in the x-variables".into()));
        }
        if poly.nvars() != vars.count() {
            return Err(Error::RingMismatch(format!(
                "polynomial has {} variables, variable set {}",
                poly.nvars(),
                vars.count()
            )));
        }
        let Some(degree) = poly.degree() else { return Err(Error::ZeroForm) };
        if !poly.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if degree < 1 {
            return Err(Error::DegreeTooSmall { degree, min: 1 });
        }
        Ok(Form { poly, degree, vars, hf: OnceLock::new() })
    }

    pub fn from_poly(poly: Polynomial) -> Result<Self> {
        let vars = VariableSet::standard(poly.nvars());
        Self::new(poly, vars)
    }

    /// Parses with the variable set inferred from the text.
    pub fn parse(text: &str) -> Result<Self> {
        let vars = VariableSet::infer(text);
        Self::parse_with(text, &vars)
    }

    pub fn parse_with(text: &str, vars: &VariableSet) -> Result<Self> {
        Self::new(parse_poly(text, vars)?, vars.clone())
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    /// The same form viewed in `n >= nvars` variables.
    pub fn embed(&self, n: usize) -> Result<Self> {
        if n < self.nvars() {
            return Err(Error::DimensionMismatch(format!("cannot embed {} variables into {n}", self.nvars())));
        }
        let images: Vec<Polynomial> = (0..self.nvars()).map(|i| Polynomial::var(Ring::Primal, n, i)).collect();
        Self::new(self.poly.substitute(&images), VariableSet::standard(n))
    }

    pub(crate) fn hf_cache(&self) -> &OnceLock<Vec<usize>> {
        &self.hf
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.display_with(&self.vars))
    }
}
