use crate::groebner::extract::GeneratorBuilder;
use crate::groebner::GradedIdeal;
use crate::linalg::Matrix;
use crate::poly::Form;

use super::catalecticant::{catalecticant, image_matrix};

/// `HF(T/Ann(F), k)` for `k = 0..=d`, from catalecticant ranks.
pub fn hilbert_function(f: &Form) -> Vec<usize> {
    f.hf_cache()
        .get_or_init(|| {
            let d = f.degree();
            let mut hf = vec![0usize; d as usize + 1];
            for k in 0..=d / 2 {
                let r = catalecticant(f, k).rank();
                hf[k as usize] = r;
                hf[(d - k) as usize] = r;
            }
            hf
        })
        .clone()
}

/// Minimal generators of `Ann(F)`, extracted degree by degree up to `d + 1`.
pub fn annihilator_generators(f: &Form) -> GradedIdeal {
    let n = f.nvars();
    let d = f.degree();
    let mut b = GeneratorBuilder::new(n);
    for k in 1..=d + 1 {
        let cols = b.standard(k);
        let map = if k > d { Matrix::zeros(0, cols.len()) } else { image_matrix(f.poly(), &cols) };
        b.add_kernel(&cols, &map);
    }
    b.finish()
}

/// Whether `Ann(F)` has no linear forms.
pub fn is_concise(f: &Form) -> bool {
    hilbert_function(f).get(1).copied() == Some(f.nvars())
}

/// `max_k HF(k)`, a lower bound for border and cactus rank.
pub fn rank_lower_bound(f: &Form) -> usize {
    hilbert_function(f).into_iter().max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VariableSet};

    #[test]
    fn small_annihilators() {
        let f = Form::parse("x0^3 + x1^3").unwrap();
        let ann = annihilator_generators(&f);
        assert_eq!(ann.hf_table(4), vec![1, 2, 2, 1, 0]);
        let vs = VariableSet::standard(2);
        let expect = GradedIdeal::new(2, vec![parse_poly("y0*y1", &vs).unwrap(), parse_poly("y0^3 - y1^3", &vs).unwrap()]).unwrap();
        assert!(ann.same_ideal(&expect));
        assert_eq!(ann.generators().len(), 2);

        let jet = Form::parse("x0^2*x1").unwrap();
        let ann = annihilator_generators(&jet);
        let expect = GradedIdeal::new(2, vec![parse_poly("y1^2", &vs).unwrap(), parse_poly("y0^3", &vs).unwrap()]).unwrap();
        assert!(ann.same_ideal(&expect));
        assert_eq!(ann.generators().len(), 2);
    }

    #[test]
    fn tables() {
        let h5 = Form::parse("v0*u0^4+v1*u0^2*u1^2+v2*u1^4").unwrap();
        assert_eq!(hilbert_function(&h5), vec![1, 5, 7, 7, 5, 1]);
        assert_eq!(rank_lower_bound(&h5), 7);
        assert!(is_concise(&h5));
        let jet3 = Form::parse("x0^2*x1").unwrap().embed(3).unwrap();
        assert!(!is_concise(&jet3));
    }
}
