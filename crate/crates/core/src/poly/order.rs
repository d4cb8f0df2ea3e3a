use std::cmp::Ordering;

use super::monomial::Monomial;

/// Term orders. Variable 0 is the largest variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    Deglex,
    /// Elimination order: grevlex on the first `k` variables, ties broken by grevlex on the rest.
    Block(usize),
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                let (x, y) = (a.exps(), b.exps());
                for i in (0..x.len()).rev() {
                    if x[i] != y[i] {
                        return y[i].cmp(&x[i]);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Deglex => a.degree().cmp(&b.degree()).then_with(|| a.exps().cmp(b.exps())),
            MonomialOrder::Block(k) => {
                let k = (*k).min(a.nvars());
                grevlex(&a.exps()[..k], &b.exps()[..k]).then_with(|| grevlex(&a.exps()[k..], &b.exps()[k..]))
            }
        }
    }

    /// Whether the order compares total degree first.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex | MonomialOrder::Deglex)
    }
}
