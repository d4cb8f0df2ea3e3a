use super::gd::gd_form;
use crate::apolar::annihilator_generators;
use crate::error::{Error, Result};
use crate::groebner::GradedIdeal;
use crate::poly::{dim_degree, Polynomial, Ring};

/// Hilbert function of `r` general points in `P^{n-1}` at degree `k`.
pub fn generic_hf(nvars: usize, r: usize, k: u32) -> usize {
    dim_degree(nvars, k).min(r)
}

/// `Ann(G_d)_{≤ d-1} + ⟨q⟩` for a nonzero binary form `q` of degree `d + 2` in the dual `u`-variables.
pub fn gd_vsp_ideal(d: u32, q: &Polynomial) -> Result<GradedIdeal> {
    let g = gd_form(d)?;
    let n = g.nvars();
    if q.nvars() != n || q.ring() != Ring::Dual {
        return Err(Error::BadQ(format!("q must be a dual form in {n} variables")));
    }
    if q.is_zero() {
        return Err(Error::BadQ("q is zero".into()));
    }
    if !q.is_homogeneous() || q.degree() != Some(d + 2) {
        return Err(Error::BadQ(format!("q must be homogeneous of degree {}", d + 2)));
    }
    if q.terms().iter().any(|(m, _)| m.support().any(|i| i < n - 2)) {
        return Err(Error::BadQ("q may only involve the duals of u0 and u1".into()));
    }
    let ann = annihilator_generators(&g);
    let mut gens: Vec<Polynomial> = ann.truncate(d - 1).generators().to_vec();
    gens.push(q.clone());
    GradedIdeal::new(n, gens)
}

/// Hilbert function of a `G_d` VSP ideal against the generic one of `d + 2` points.
#[derive(Clone, Debug)]
pub struct VspCheck {
    pub ideal: GradedIdeal,
    /// `HF(T/J, k)` for `k = 0..=d+3`.
    pub hf: Vec<usize>,
    pub expected: Vec<usize>,
    pub generic: bool,
    /// `HF` is `d + 2` in degrees `d + 2` and `d + 3`, with all generators in degree `≤ d + 2`.
    pub persistence: bool,
}

pub fn gd_vsp_check(d: u32, q: &Polynomial) -> Result<VspCheck> {
    let ideal = gd_vsp_ideal(d, q)?;
    let n = ideal.nvars();
    let r = d as usize + 2;
    let hf = ideal.hf_table(d + 3);
    let expected: Vec<usize> = (0..=d + 3).map(|k| generic_hf(n, r, k)).collect();
    let generic = hf == expected;
    let persistence = hf[r] == r && hf[r + 1] == r && ideal.generators().iter().all(|g| g.degree().is_some_and(|e| e <= d + 2));
    Ok(VspCheck { ideal, hf, expected, generic, persistence })
}
