//! Dense linear algebra over any [`Scalar`], used exactly with rationals and
//! approximately with floats.

use crate::scalar::{Ring, Scalar};

/// Row-major dense matrix.
pub type Mat<T> = Vec<Vec<T>>;

pub fn identity<T: Scalar>(n: usize) -> Mat<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>], ncols: usize) -> Mat<T> {
    (0..ncols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

pub fn mat_mul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Mat<T> {
    let inner = b.len();
    let ncols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    (0..inner).fold(T::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone())
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec<T: Scalar>(a: &[Vec<T>], v: &[T]) -> Vec<T> {
    a.iter().map(|row| dot(row, v)).collect()
}

pub fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Reduces `m` in place to reduced row echelon form and returns the pivot
/// columns. Rows below the rank are zero afterwards.
pub fn rref<T: Scalar>(m: &mut Mat<T>, ncols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let best = (r..nrows)
            .filter(|&i| !m[i][c].is_negligible())
            .max_by(|&i, &j| m[i][c].magnitude().total_cmp(&m[j][c].magnitude()));
        let Some(p) = best else {
            for row in m.iter_mut().skip(r) {
                row[c] = T::zero();
            }
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        m[r][c] = T::one();
        for i in 0..nrows {
            if i == r || m[i][c].is_negligible() {
                m[i][c] = if i == r { T::one() } else { T::zero() };
                continue;
            }
            let f = m[i][c].clone();
            for j in 0..ncols {
                let d = f.clone() * m[r][j].clone();
                m[i][j] = m[i][j].clone() - d;
            }
            m[i][c] = T::zero();
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Scalar>(m: &[Vec<T>], ncols: usize) -> usize {
    let mut w = m.to_vec();
    rref(&mut w, ncols).len()
}

/// Nonzero rows of the reduced row echelon form: a canonical basis of the
/// row space.
pub fn row_space_basis<T: Scalar>(m: &[Vec<T>], ncols: usize) -> Mat<T> {
    let mut w = m.to_vec();
    let k = rref(&mut w, ncols).len();
    w.truncate(k);
    w
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace<T: Scalar>(m: &[Vec<T>], ncols: usize) -> Mat<T> {
    let mut w = m.to_vec();
    let pivots = rref(&mut w, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![T::zero(); ncols];
            x[f] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -w[r][f].clone();
            }
            x
        })
        .collect()
}

/// Some solution of `a x = b` (free variables set to zero), or `None` when
/// the system is inconsistent.
pub fn solve<T: Scalar>(a: &[Vec<T>], b: &[T], ncols: usize) -> Option<Vec<T>> {
    let mut aug: Mat<T> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![T::zero(); ncols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][ncols].clone();
    }
    Some(x)
}

pub fn inverse<T: Scalar>(a: &[Vec<T>]) -> Option<Mat<T>> {
    let n = a.len();
    let mut aug: Mat<T> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn det<T: Scalar>(a: &[Vec<T>]) -> T {
    let n = a.len();
    let mut m = a.to_vec();
    let mut d = T::one();
    for c in 0..n {
        let Some(p) = (c..n)
            .filter(|&i| !m[i][c].is_negligible())
            .max_by(|&i, &j| m[i][c].magnitude().total_cmp(&m[j][c].magnitude()))
        else {
            return T::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d = d * m[c][c].clone();
        for i in c + 1..n {
            let f = m[i][c].clone() / m[c][c].clone();
            for j in c..n {
                let s = f.clone() * m[c][j].clone();
                m[i][j] = m[i][j].clone() - s;
            }
        }
    }
    d
}

/// Coefficients `c_0..c_n` of `det(tI − a) = Σ c_k t^k` by the
/// Faddeev–LeVerrier recursion; needs only ring operations and exact
/// division by small integers.
pub fn char_poly<R: Ring>(a: &[Vec<R>]) -> Vec<R> {
    let n = a.len();
    let mut coeffs = vec![R::zero(); n + 1];
    coeffs[n] = R::one();
    let mut m: Mat<R> = vec![vec![R::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = ring_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].add(&coeffs[n - k + 1]);
        }
        m = next;
        let am = ring_mul(a, &m);
        let tr = (0..n).fold(R::zero(), |acc, i| acc.add(&am[i][i]));
        coeffs[n - k] = R::zero().sub(&tr.div_int(k as i64));
    }
    coeffs
}

fn ring_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Mat<R> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    (0..b.len()).fold(R::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j])))
                })
                .collect()
        })
        .collect()
}
