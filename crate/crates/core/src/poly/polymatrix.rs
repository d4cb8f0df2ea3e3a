use super::polynomial::Polynomial;

/// Determinant of a square polynomial matrix by fraction-free (Bareiss) elimination.
pub fn det_bareiss(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let Some(first) = m.first().and_then(|r| r.first()) else {
        panic!("empty matrix");
    };
    let (ring, nv) = (first.ring(), first.nvars());
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut prev = Polynomial::one(ring, nv);
    let mut sign = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Polynomial::zero(ring, nv);
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Polynomial::zero(ring, nv);
        }
        prev = a[k][k].clone();
    }
    if sign {
        prev.neg()
    } else {
        prev
    }
}

/// Rank over the rational function field, by fraction-free elimination with full pivot search.
pub fn rank_bareiss(m: &[Vec<Polynomial>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let Some(first) = m.iter().flatten().next() else { return 0 };
    let (ring, nv) = (first.ring(), first.nvars());
    let mut a: Vec<Vec<Polynomial>> = m.to_vec();
    let mut prev = Polynomial::one(ring, nv);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // choose the sparsest nonzero pivot in this column
        let Some(p) = (r..rows).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].len()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = a[i][j].mul(&a[r][c]).sub(&a[i][c].mul(&a[r][j]));
                a[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][c] = Polynomial::zero(ring, nv);
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}
