use smallvec::SmallVec;
use std::fmt;

/// Exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: SmallVec<[u16; 16]>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: &[u16]) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), deg }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), deg: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, o: &Self) -> Self {
        let exps = self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, deg: self.deg + o.deg }
    }

    pub fn mul_var(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.exps[i] += 1;
        m.deg += 1;
        m
    }

    pub fn pow(&self, e: u32) -> Self {
        let exps = self.exps.iter().map(|&a| a * e as u16).collect();
        Monomial { exps, deg: self.deg * e }
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.deg <= o.deg && self.exps.iter().zip(&o.exps).all(|(a, b)| a <= b)
    }

    /// `o / self` when `self` divides `o`.
    pub fn div(&self, o: &Self) -> Option<Self> {
        if !self.divides(o) {
            return None;
        }
        let exps = o.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, deg: o.deg - self.deg })
    }

    /// Division by a variable, if possible.
    pub fn div_var(&self, i: usize) -> Option<Self> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        m.deg -= 1;
        Some(m)
    }

    pub fn lcm(&self, o: &Self) -> Self {
        let exps: SmallVec<[u16; 16]> = self.exps.iter().zip(&o.exps).map(|(a, b)| *a.max(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let exps: SmallVec<[u16; 16]> = self.exps.iter().zip(&o.exps).map(|(a, b)| *a.min(b)).collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, o: &Self) -> bool {
        self.exps.iter().zip(&o.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Bit `i mod 64` set when variable `i` occurs; used for fast divisibility rejection.
    pub fn sev(&self) -> u64 {
        let mut s = 0u64;
        for i in self.support() {
            s |= 1 << (i % 64);
        }
        s
    }

    /// Permutes variables: variable `i` moves to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut exps: SmallVec<[u16; 16]> = SmallVec::from_elem(0, self.exps.len());
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial { exps, deg: self.deg }
    }

    /// Inserts `k` new variables with exponent zero at the front.
    pub fn extend_front(&self, k: usize, e0: u16) -> Self {
        let mut exps: SmallVec<[u16; 16]> = SmallVec::from_elem(0, k);
        if k > 0 {
            exps[0] = e0;
        }
        exps.extend_from_slice(&self.exps);
        Monomial { exps, deg: self.deg + e0 as u32 }
    }

    /// Drops the first `k` variables.
    pub fn drop_front(&self, k: usize) -> Self {
        Monomial::new(&self.exps[k..])
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}
