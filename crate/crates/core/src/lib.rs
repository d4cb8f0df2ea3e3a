//! Exact tools for apolarity, Hessians, border rank and wild forms over the rationals.

pub mod algebra;
pub mod apolar;
pub mod borderdec;
pub mod error;
pub mod families;
pub mod linalg;
pub mod groebner;
pub mod interchange;
pub mod poly;
pub mod random;

pub use error::{Error, Result};
