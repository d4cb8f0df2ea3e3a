//! Polynomials in the x-variables, differential operators in the y-variables, and the apolarity action.

pub mod form;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polymatrix;
pub mod polynomial;
pub mod vars;

pub use form::Form;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_dual, parse_poly};
pub use polymatrix::{det_bareiss, rank_bareiss};
pub use polynomial::{apply_dual, binomial, dim_degree, monomial_basis, Polynomial, Ring};
pub use vars::VariableSet;
