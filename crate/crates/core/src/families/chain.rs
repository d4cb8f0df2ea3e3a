use crate::groebner::GradedIdeal;
use crate::linalg::int;
use crate::poly::{Monomial, Polynomial, Ring};

/// Coordinate pairs `(3h-2, 3h+1)` of the lines of `C_k`, for `h = 1..=k`.
pub fn chain_lines(k: usize) -> Vec<(usize, usize)> {
    (1..=k).map(|h| (3 * h - 2, 3 * h + 1)).collect()
}

/// `⟨y_{3h}, y_{3h+2}, y_{3h+1} y_{3(h+s)+1} : h ≥ 0, s ≥ 2⟩` in `3k + 2` variables.
pub fn chain_ideal(k: usize) -> GradedIdeal {
    let nv = 3 * k + 2;
    let mut gens = Vec::new();
    for i in 0..nv {
        if i % 3 != 1 {
            gens.push(Polynomial::var(Ring::Dual, nv, i));
        }
    }
    let ones: Vec<usize> = (0..nv).filter(|i| i % 3 == 1).collect();
    for (x, &i) in ones.iter().enumerate() {
        for &j in ones.iter().skip(x + 2) {
            let mut e = vec![0u16; nv];
            e[i] = 1;
            e[j] = 1;
            gens.push(Polynomial::monomial(Ring::Dual, Monomial::new(&e), int(1)));
        }
    }
    GradedIdeal::new(nv, gens).expect("monomial generators")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::is_saturated;

    #[test]
    fn one_line() {
        assert_eq!(chain_ideal(1).to_string(), "<y0, y2, y3>");
        assert_eq!(chain_lines(2), vec![(1, 4), (4, 7)]);
    }

    #[test]
    fn chains_are_saturated_curves() {
        for k in 1..=3 {
            let c = chain_ideal(k);
            assert!(is_saturated(&c));
            assert_eq!(c.dimension(), 2);
            // k lines meeting in k - 1 points: HF(t) = k t + 1
            assert_eq!(c.hf(5), 5 * k + 1);
        }
    }
}
