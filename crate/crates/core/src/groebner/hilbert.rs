use crate::poly::{binomial, Monomial};

/// Numerator `N(z)` of the Hilbert series `N(z) / (1 - z)^n` of `T / (monomial ideal)`.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i128> {
    let min = minimalize(gens.to_vec());
    numerator(min)
}

fn minimalize(mut g: Vec<Monomial>) -> Vec<Monomial> {
    g.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(g.len());
    for m in g {
        if !out.iter().any(|o| o.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

fn trim(mut a: Vec<i128>) -> Vec<i128> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

/// Bigatti-style pivot recursion on a minimal generating set.
fn numerator(gens: Vec<Monomial>) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // pairwise coprime generators: product of (1 - z^deg)
    let mut coprime = true;
    'outer: for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !gens[i].is_coprime(&gens[j]) {
                coprime = false;
                break 'outer;
            }
        }
    }
    if coprime {
        let mut acc = vec![1i128];
        for m in &gens {
            let mut f = vec![0i128; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return trim(acc);
    }
    // pivot: the variable occurring in the most non-pure-power generators, to the power
    // of the smallest positive exponent seen there
    let nv = gens[0].nvars();
    let mut count = vec![0usize; nv];
    for m in &gens {
        if m.support().count() > 1 {
            for i in m.support() {
                count[i] += 1;
            }
        }
    }
    let var = (0..nv).max_by_key(|&i| count[i]).expect("variables");
    let mut exps: Vec<u16> = gens.iter().filter(|m| m.support().count() > 1 && m.exp(var) > 0).map(|m| m.exp(var)).collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2].max(1);
    let mut pe = vec![0u16; nv];
    pe[var] = e;
    let pivot = Monomial::new(&pe);
    // N(I) = N(I + p) + z^deg(p) N(I : p)
    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let plus = minimalize(plus);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let ex: Vec<u16> = m.exps().iter().zip(pivot.exps()).map(|(a, b)| a.saturating_sub(*b)).collect();
            Monomial::new(&ex)
        })
        .collect();
    let colon = minimalize(colon);
    let mut out = numerator(plus);
    poly_add(&mut out, &numerator(colon), e as usize);
    trim(out)
}

/// `HF(k)` from the numerator.
pub fn hf_from_numerator(num: &[i128], nvars: usize, k: u32) -> usize {
    let k = k as usize;
    let mut acc: i128 = 0;
    for (j, c) in num.iter().enumerate() {
        if j > k || *c == 0 {
            continue;
        }
        let b = if nvars == 0 { usize::from(k == j) } else { binomial(k - j + nvars - 1, nvars - 1) };
        acc += c * b as i128;
    }
    acc.max(0) as usize
}

/// Reduced form `N(z) / (1 - z)^dim` with `N(1) != 0`: returns `(dim, N)`.
pub fn reduced_series(num: &[i128], nvars: usize) -> (usize, Vec<i128>) {
    let mut n = num.to_vec();
    let mut dim = nvars;
    if n.iter().all(|&c| c == 0) {
        return (0, vec![0]);
    }
    while dim > 0 && n.iter().sum::<i128>() == 0 {
        // divide by (1 - z): q_j = sum_{i <= j} n_i
        let mut q = Vec::with_capacity(n.len() - 1);
        let mut s = 0;
        for c in &n[..n.len() - 1] {
            s += c;
            q.push(s);
        }
        n = trim(q);
        dim -= 1;
    }
    (dim, n)
}

/// For a one-dimensional quotient (projective points): the constant Hilbert polynomial
/// value and the degree from which HF equals it. `None` for other dimensions.
pub fn constant_tail(num: &[i128], nvars: usize) -> Option<(usize, usize)> {
    let (dim, n) = reduced_series(num, nvars);
    if dim != 1 {
        return None;
    }
    let len: i128 = n.iter().sum();
    // HF(k) = sum_{j <= k} n_j, constant from deg n on; find the first k where the partial sums settle
    let mut s = 0;
    let mut start = 0;
    for (j, c) in n.iter().enumerate() {
        s += c;
        if s != len {
            start = j + 1;
        }
    }
    Some((len as usize, start))
}
