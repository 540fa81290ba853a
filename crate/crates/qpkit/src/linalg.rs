//! Exact linear algebra: Gaussian elimination over the rationals, Smith
//! normal form over the integers, and solving over GF(2).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense matrix over the rationals, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Row-reduces in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // find a pivot in column c at row >= r
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..self.cols {
                    self.data.swap(r * self.cols + k, p * self.cols + k);
                }
            }
            let inv = self.get(r, c).recip();
            for k in c..self.cols {
                let v = self.get(r, k).clone() * inv.clone();
                self.set(r, k, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let f = self.get(i, c).clone();
                    for k in c..self.cols {
                        let v = self.get(i, k).clone() - f.clone() * self.get(r, k).clone();
                        self.set(i, k, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// Basis of the right kernel (vectors x with M x = 0), as rows.
    pub fn kernel_basis(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![BigRational::zero(); self.cols];
            v[f] = BigRational::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.get(ri, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Matrix product self * other.
    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = BigRational::zero();
                for (j, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self.get(i, j).is_zero() {
                        s += self.get(i, j).clone() * x.clone();
                    }
                }
                s
            })
            .collect()
    }
}

/// Reduces a list of vectors to an independent echelon basis.
/// Returns (basis rows in echelon form, pivot column per row).
pub fn echelon_basis(vectors: Vec<Vec<BigRational>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut v in vectors {
        loop {
            let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
                break;
            };
            if let Some(idx) = pivots.iter().position(|&p| p == lead) {
                let f = v[lead].clone() / rows[idx][lead].clone();
                for (k, item) in rows[idx].iter().enumerate() {
                    if !item.is_zero() {
                        v[k] = v[k].clone() - f.clone() * item.clone();
                    }
                }
            } else {
                let ins = pivots.iter().position(|&p| p > lead).unwrap_or(pivots.len());
                pivots.insert(ins, lead);
                rows.insert(ins, v);
                break;
            }
        }
    }
    (rows, pivots)
}

/// Expresses `v` in terms of an echelon basis; returns None when outside the span.
pub fn reduce_against(
    v: &[BigRational],
    rows: &[Vec<BigRational>],
    pivots: &[usize],
) -> Option<Vec<BigRational>> {
    let mut v = v.to_vec();
    let mut coeffs = vec![BigRational::zero(); rows.len()];
    loop {
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return Some(coeffs);
        };
        let idx = pivots.iter().position(|&p| p == lead)?;
        let f = v[lead].clone() / rows[idx][lead].clone();
        coeffs[idx] = f.clone();
        for (k, item) in rows[idx].iter().enumerate() {
            if !item.is_zero() {
                v[k] = v[k].clone() - f.clone() * item.clone();
            }
        }
    }
}

/// Dense integer matrix used for homology and exponent-lattice computations.
#[derive(Clone, Debug)]
pub struct ZMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl ZMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ZMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for k in 0..self.cols {
                self.data.swap(a * self.cols + k, b * self.cols + k);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for k in 0..self.cols {
            let v = self.get(dst, k) + f * self.get(src, k);
            self.set(dst, k, v);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, dst) + f * self.get(r, src);
            self.set(r, dst, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for k in 0..self.cols {
            let v = -self.get(r, k).clone();
            self.set(r, k, v);
        }
    }
}

/// Smith normal form decomposition U * A * V = D with U, V unimodular.
pub struct Smith {
    pub d: ZMat,
    pub u: ZMat,
    pub v: ZMat,
}

/// Computes the Smith normal form by repeated pivoting on a minimal
/// nonzero entry.
pub fn smith_normal_form(a: &ZMat) -> Smith {
    let mut d = a.clone();
    let mut u = ZMat::identity(a.rows);
    let mut v = ZMat::identity(a.cols);
    let n = a.rows.min(a.cols);
    let mut t = 0;
    while t < n {
        // locate minimal nonzero |entry| in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..d.rows {
            for c in t..d.cols {
                if !d.get(r, c).is_zero()
                    && pivot
                        .map(|(pr, pc)| d.get(r, c).abs() < d.get(pr, pc).abs())
                        .unwrap_or(true)
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);
        let mut clean = true;
        for r in t + 1..d.rows {
            if !d.get(r, t).is_zero() {
                let f = -(d.get(r, t) / d.get(t, t));
                d.add_row(r, t, &f);
                u.add_row(r, t, &f);
                if !d.get(r, t).is_zero() {
                    clean = false;
                }
            }
        }
        for c in t + 1..d.cols {
            if !d.get(t, c).is_zero() {
                let f = -(d.get(t, c) / d.get(t, t));
                d.add_col(c, t, &f);
                v.add_col(c, t, &f);
                if !d.get(t, c).is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // divisibility fix-up: d[t][t] must divide the rest of the block
        let mut fixed = true;
        'outer: for r in t + 1..d.rows {
            for c in t + 1..d.cols {
                if !(d.get(r, c) % d.get(t, t)).is_zero() {
                    d.add_row(t, r, &BigInt::one());
                    u.add_row(t, r, &BigInt::one());
                    fixed = false;
                    break 'outer;
                }
            }
        }
        if !fixed {
            continue;
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    Smith { d, u, v }
}

/// Invariant factors (the nonzero diagonal of the Smith form).
pub fn invariant_factors(a: &ZMat) -> Vec<BigInt> {
    let s = smith_normal_form(a);
    let n = a.rows.min(a.cols);
    (0..n)
        .map(|i| s.d.get(i, i).clone())
        .filter(|x| !x.is_zero())
        .collect()
}

/// Solves A x = b over the integers; returns one solution or None.
pub fn solve_integer(a: &ZMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows, b.len());
    let s = smith_normal_form(a);
    // y = U b, solve D z = y, x = V z
    let mut y = vec![BigInt::zero(); a.rows];
    for (i, item) in y.iter_mut().enumerate() {
        for (j, bv) in b.iter().enumerate() {
            *item += s.u.get(i, j) * bv;
        }
    }
    let mut z = vec![BigInt::zero(); a.cols];
    for i in 0..a.rows {
        let d = if i < a.cols {
            s.d.get(i, i).clone()
        } else {
            BigInt::zero()
        };
        if d.is_zero() {
            if !y[i].is_zero() {
                return None;
            }
        } else {
            if !(y[i].clone() % &d).is_zero() {
                return None;
            }
            z[i] = y[i].clone() / &d;
        }
    }
    let mut x = vec![BigInt::zero(); a.cols];
    for (i, item) in x.iter_mut().enumerate() {
        for (j, zv) in z.iter().enumerate() {
            *item += s.v.get(i, j) * zv;
        }
    }
    Some(x)
}

/// Solves A x = b over GF(2); rows of `a` are bit vectors as Vec<bool>.
pub fn solve_f2(a: &[Vec<bool>], b: &[bool]) -> Option<Vec<bool>> {
    let rows = a.len();
    if rows == 0 {
        return Some(Vec::new());
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<bool>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, &bit)| {
            let mut r = row.clone();
            r.push(bit);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c]) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && m[i][c] {
                let (head, tail) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&mut b[0], &a[r])
                };
                for k in 0..=cols {
                    head[k] ^= tail[k];
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    // consistency check
    for row in m.iter().skip(r) {
        if row[cols] && row[..cols].iter().all(|&x| !x) {
            return None;
        }
    }
    let mut x = vec![false; cols];
    for &(ri, ci) in &pivots {
        x[ci] = m[ri][cols];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rank_and_kernel() {
        let mut m = QMat::zeros(2, 3);
        m.set(0, 0, q(1));
        m.set(0, 1, q(2));
        m.set(0, 2, q(3));
        m.set(1, 0, q(2));
        m.set(1, 1, q(4));
        m.set(1, 2, q(6));
        assert_eq!(m.rank(), 1);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in ker {
            let img = m.apply(&v);
            assert!(img.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn smith_of_diag() {
        let mut a = ZMat::zeros(2, 2);
        a.set(0, 0, BigInt::from(4));
        a.set(1, 1, BigInt::from(6));
        let f = invariant_factors(&a);
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn smith_rank_of_boundary() {
        // boundary of a triangle: H0 rank check
        let mut a = ZMat::zeros(3, 3);
        // edges (0->1),(1->2),(2->0): rows vertices, cols edges, entry t - s
        let edges = [(0usize, 1usize), (1, 2), (2, 0)];
        for (c, &(s, t)) in edges.iter().enumerate() {
            a.set(s, c, BigInt::from(-1));
            let v = a.get(t, c) + BigInt::one();
            a.set(t, c, v);
        }
        let f = invariant_factors(&a);
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn integer_solve() {
        let mut a = ZMat::zeros(2, 2);
        a.set(0, 0, BigInt::from(2));
        a.set(0, 1, BigInt::from(1));
        a.set(1, 1, BigInt::from(3));
        let b = vec![BigInt::from(5), BigInt::from(9)];
        let x = solve_integer(&a, &b).unwrap();
        assert_eq!(&(a.get(0, 0) * &x[0] + a.get(0, 1) * &x[1]), &b[0]);
        assert_eq!(&(a.get(1, 0) * &x[0] + a.get(1, 1) * &x[1]), &b[1]);
        // no integer solution
        let b2 = vec![BigInt::from(1), BigInt::from(1)];
        let mut a2 = ZMat::zeros(2, 1);
        a2.set(0, 0, BigInt::from(2));
        a2.set(1, 0, BigInt::from(2));
        assert!(solve_integer(&a2, &b2).is_none());
    }

    #[test]
    fn f2_solve() {
        let a = vec![vec![true, true, false], vec![false, true, true]];
        let b = vec![true, false];
        let x = solve_f2(&a, &b).unwrap();
        for (row, &bit) in a.iter().zip(b.iter()) {
            let s = row.iter().zip(x.iter()).fold(false, |acc, (&r, &v)| acc ^ (r && v));
            assert_eq!(s, bit);
        }
    }
}
