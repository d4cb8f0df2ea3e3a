use serde::Serialize;

use super::annihilator::{hilbert_function, is_concise, rank_lower_bound};
use super::hessian::{hessian_vanishes, HessianMode, HessianStatus};
use crate::borderdec::{verify_border_decomposition, BorderDecomposition};
use crate::error::{Error, Result};
use crate::poly::Form;

/// Evidence that a form has minimal border rank.
#[derive(Clone, Debug)]
pub enum MinimalBorderRankCertificate {
    /// Taken on trust; recorded in the verdict.
    AssumedMinimal,
    /// A decomposition with `n + 1` summands, checked before use.
    Decomposition(BorderDecomposition),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NotApplicableReason {
    NotConcise,
    NonMinimalBorderRank,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Wild,
    NotWild,
    NotApplicable(NotApplicableReason),
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Wild => f.write_str("Wild"),
            Verdict::NotWild => f.write_str("NotWild"),
            Verdict::NotApplicable(r) => write!(f, "NotApplicable({r:?})"),
        }
    }
}

/// Verdict together with the facts it rests on.
#[derive(Clone, Debug, Serialize)]
pub struct WildnessVerdict {
    pub verdict: Verdict,
    pub concise: bool,
    pub hilbert_function: Vec<usize>,
    pub rank_lower_bound: usize,
    pub nvars: usize,
    pub hessian: Option<HessianStatus>,
    pub certificate: String,
    pub consequences: Vec<String>,
}

/// Wildness of a concise form of minimal border rank: wild exactly when the Hessian vanishes.
pub fn classify_wild(f: &Form, cert: &MinimalBorderRankCertificate, mode: HessianMode) -> Result<WildnessVerdict> {
    let n1 = f.nvars();
    let hf = hilbert_function(f);
    let lb = rank_lower_bound(f);
    let concise = is_concise(f);
    let mut out = WildnessVerdict {
        verdict: Verdict::NotApplicable(NotApplicableReason::NotConcise),
        concise,
        hilbert_function: hf,
        rank_lower_bound: lb,
        nvars: n1,
        hessian: None,
        certificate: String::new(),
        consequences: Vec::new(),
    };
    if !concise {
        out.consequences.push("Ann(F) contains a linear form".into());
        return Ok(out);
    }
    if lb > n1 {
        out.verdict = Verdict::NotApplicable(NotApplicableReason::NonMinimalBorderRank);
        out.consequences.push(format!("a catalecticant has rank {lb} > {n1}, so the border rank exceeds {n1}"));
        return Ok(out);
    }
    out.certificate = match cert {
        MinimalBorderRankCertificate::AssumedMinimal => format!("assumed: border rank {n1}"),
        MinimalBorderRankCertificate::Decomposition(d) => {
            if d.len() != n1 {
                return Err(Error::CertificateInvalid(format!("decomposition has {} summands, expected {n1}", d.len())));
            }
            let rep = verify_border_decomposition(d, f)?;
            if !rep.ok {
                return Err(Error::CertificateInvalid(format!("decomposition fails at t^{}", rep.failing_order.unwrap_or(0))));
            }
            format!("verified border decomposition with {n1} summands")
        }
    };
    let h = hessian_vanishes(f, mode)?;
    if h.vanishes {
        out.verdict = Verdict::Wild;
        out.consequences.push(format!("cactus rank > {n1}"));
        out.consequences.push(format!("smoothable rank > {n1}"));
    } else {
        out.verdict = Verdict::NotWild;
        out.consequences.push(format!("cactus rank = {n1}"));
        out.consequences.push(format!("smoothable rank = {n1}"));
    }
    out.hessian = Some(h);
    Ok(out)
}
