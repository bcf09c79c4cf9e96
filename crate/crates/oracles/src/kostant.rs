//! Weight multiplicities via Kostant's formula
//! `m_λ(μ) = Σ_w det(w) P(w(λ+ρ) − (μ+ρ))`.

use std::collections::{BTreeMap, HashMap};

use num_rational::Rational64;

use crate::roots::{apply, det, positive_roots, weyl_group};
use crate::IMat;

pub fn weight_multiplicities(a: &IMat, lambda: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    let n = a.len();
    let roots = positive_roots(a);
    let group = weyl_group(a, 0);
    let inv = rational_inverse(a);
    let to_simple = |w: &[i64]| -> Option<Vec<i64>> {
        // w_k = Σ_j c_j a[j][k]  ⇒  c = w · a⁻¹
        let c: Vec<Rational64> = (0..n)
            .map(|j| (0..n).map(|k| inv[k][j] * w[k]).sum())
            .collect();
        c.iter().all(|x| x.is_integer()).then(|| c.iter().map(|x| x.to_integer()).collect())
    };
    let rho = vec![1i64; n];
    let w0 = group.iter().find(|g| apply(g, &rho) == rho.iter().map(|x| -x).collect::<Vec<_>>()).unwrap();
    let low = apply(w0, lambda);
    let span: Vec<i64> = to_simple(&sub(lambda, &low)).unwrap();
    let lam_rho = add(lambda, &rho);
    let shifted: Vec<(i64, Vec<i64>)> = group.iter().map(|g| (det(g), apply(g, &lam_rho))).collect();
    let mut memo = HashMap::new();
    let mut out = BTreeMap::new();
    let mut c = vec![0i64; n];
    loop {
        let mut mu = lambda.to_vec();
        for (j, &cj) in c.iter().enumerate() {
            for k in 0..n {
                mu[k] -= cj * a[j][k];
            }
        }
        let mu_rho = add(&mu, &rho);
        let mut m = 0i64;
        for (sign, img) in &shifted {
            if let Some(nu) = to_simple(&sub(img, &mu_rho)) {
                m += sign * partitions(&nu, &roots, 0, &mut memo);
            }
        }
        if m != 0 {
            out.insert(mu, m);
        }
        // odometer over the box 0 ≤ c ≤ span
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if c[k] < span[k] {
                c[k] += 1;
                break;
            }
            c[k] = 0;
            k += 1;
        }
    }
}

/// Number of ways to write `nu` as a nonnegative combination of `roots[k..]`.
fn partitions(
    nu: &[i64],
    roots: &[Vec<i64>],
    k: usize,
    memo: &mut HashMap<(Vec<i64>, usize), i64>,
) -> i64 {
    if nu.iter().any(|&x| x < 0) {
        return 0;
    }
    if k == roots.len() {
        return i64::from(nu.iter().all(|&x| x == 0));
    }
    if let Some(&v) = memo.get(&(nu.to_vec(), k)) {
        return v;
    }
    let mut total = 0;
    let mut rest = nu.to_vec();
    while rest.iter().all(|&x| x >= 0) {
        total += partitions(&rest, roots, k + 1, memo);
        for (r, b) in rest.iter_mut().zip(&roots[k]) {
            *r -= b;
        }
    }
    memo.insert((nu.to_vec(), k), total);
    total
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn rational_inverse(a: &IMat) -> Vec<Vec<Rational64>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational64>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational64> = row.iter().map(|&x| Rational64::from_integer(x)).collect();
            r.extend((0..n).map(|j| Rational64::from_integer(i64::from(i == j))));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| m[r][c] != Rational64::from_integer(0)).expect("invertible");
        m.swap(c, p);
        let piv = m[c][c];
        for x in m[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..n {
            if r != c {
                let f = m[r][c];
                for j in 0..2 * n {
                    let t = m[c][j] * f;
                    m[r][j] -= t;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}
