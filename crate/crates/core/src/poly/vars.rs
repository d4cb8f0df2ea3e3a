use serde::{Deserialize, Serialize};

/// Names for the primal variables x0..xn and dual variables y0..yn.
///
/// With aliases, primal variable `i < nv` prints as `v<i>` and `nv + j` as `u<j>`.
/// Dual variables always print as `y<i>` with the global index.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct VariableSet {
    count: usize,
    aliases: Option<(usize, usize)>,
}

impl VariableSet {
    pub fn standard(count: usize) -> Self {
        VariableSet { count, aliases: None }
    }

    /// `nv` variables named `v*` followed by `nu` named `u*`.
    pub fn aliased(nv: usize, nu: usize) -> Self {
        VariableSet { count: nv + nu, aliases: Some((nv, nu)) }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn aliases(&self) -> Option<(usize, usize)> {
        self.aliases
    }

    pub fn primal_name(&self, i: usize) -> String {
        match self.aliases {
            Some((nv, _)) if i < nv => format!("v{i}"),
            Some((nv, _)) => format!("u{}", i - nv),
            None => format!("x{i}"),
        }
    }

    pub fn dual_name(&self, i: usize) -> String {
        format!("y{i}")
    }

    /// Resolves a variable token to (index, is_dual).
    pub fn resolve(&self, letter: char, index: usize) -> Option<(usize, bool)> {
        let (i, dual) = match (letter, self.aliases) {
            ('x', _) => (index, false),
            ('y', _) => (index, true),
            ('v', Some((nv, _))) if index < nv => (index, false),
            ('u', Some((nv, nu))) if index < nu => (nv + index, false),
            _ => return None,
        };
        (i < self.count).then_some((i, dual))
    }

    /// Smallest variable set covering the tokens used in `text`.
    pub fn infer(text: &str) -> Self {
        let (mut mx, mut mv, mut mu) = (None::<usize>, None::<usize>, None::<usize>);
        let b = text.as_bytes();
        let mut i = 0;
        while i < b.len() {
            let c = b[i] as char;
            if matches!(c, 'x' | 'y' | 'u' | 'v') && i + 1 < b.len() && b[i + 1].is_ascii_digit() {
                let mut j = i + 1;
                while j < b.len() && b[j].is_ascii_digit() {
                    j += 1;
                }
                if let Ok(k) = text[i + 1..j].parse::<usize>() {
                    let slot = match c {
                        'x' | 'y' => &mut mx,
                        'v' => &mut mv,
                        _ => &mut mu,
                    };
                    *slot = Some(slot.map_or(k, |m| m.max(k)));
                }
                i = j;
            } else {
                i += 1;
            }
        }
        if mv.is_some() || mu.is_some() {
            let nv = mv.map_or(0, |m| m + 1);
            let nu = mu.map_or(0, |m| m + 1);
            let mut vs = Self::aliased(nv, nu);
            if let Some(m) = mx {
                vs.count = vs.count.max(m + 1);
            }
            vs
        } else {
            Self::standard(mx.map_or(1, |m| m + 1))
        }
    }
}
