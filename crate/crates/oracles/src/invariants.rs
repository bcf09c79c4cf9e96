//! dim (SᵈV)^G as the joint kernel of the raising operators on the
//! weight-zero monomials of degree d, in exact arithmetic.

use std::collections::HashMap;

use num_rational::Rational64;

use crate::matrices::ExplicitRep;

pub fn invariant_dims(rep: &ExplicitRep, max_degree: usize) -> Vec<usize> {
    (0..=max_degree).map(|d| invariants_in_degree(rep, d)).collect()
}

/// Number of exponent vectors of total degree d whose weight is zero; for a
/// torus this is the invariant dimension itself.
pub fn zero_weight_monomials(weights: &[Vec<i64>], d: usize) -> Vec<Vec<usize>> {
    let n = weights.len();
    let dim = weights.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut exps = vec![0usize; n];
    fn rec(
        k: usize,
        left: usize,
        exps: &mut Vec<usize>,
        weights: &[Vec<i64>],
        dim: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = exps.len();
        if k == n - 1 {
            exps[k] = left;
            let mut w = vec![0i64; dim];
            for (e, wt) in exps.iter().zip(weights) {
                for (acc, x) in w.iter_mut().zip(wt) {
                    *acc += *e as i64 * x;
                }
            }
            if w.iter().all(|&x| x == 0) {
                out.push(exps.clone());
            }
            return;
        }
        for e in 0..=left {
            exps[k] = e;
            rec(k + 1, left - e, exps, weights, dim, out);
        }
    }
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    rec(0, d, &mut exps, weights, dim, &mut out);
    out
}

fn invariants_in_degree(rep: &ExplicitRep, d: usize) -> usize {
    let source = zero_weight_monomials(&rep.weights, d);
    if source.is_empty() {
        return 0;
    }
    let n = rep.weights.len();
    let mut row_index: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, i64)> = Vec::new();
    for (col, mono) in source.iter().enumerate() {
        for (op, e) in rep.raising.iter().enumerate() {
            for k in 0..n {
                if mono[k] == 0 {
                    continue;
                }
                for i in 0..n {
                    let c = e[i][k];
                    if c == 0 {
                        continue;
                    }
                    let mut target = mono.clone();
                    target[k] -= 1;
                    target[i] += 1;
                    let next = row_index.len();
                    let row = *row_index.entry((op, target)).or_insert(next);
                    entries.push((row, col, c * mono[k] as i64));
                }
            }
        }
    }
    let mut m = vec![vec![Rational64::from_integer(0); source.len()]; row_index.len()];
    for (r, c, v) in entries {
        m[r][c] += Rational64::from_integer(v);
    }
    source.len() - rank(m)
}

pub(crate) fn rank(mut m: Vec<Vec<Rational64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let zero = Rational64::from_integer(0);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != zero) else { continue };
        m.swap(r, p);
        for i in r + 1..rows {
            if m[i][c] != zero {
                let f = m[i][c] / m[r][c];
                for j in c..cols {
                    let t = m[r][j] * f;
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::*;

    #[test]
    fn two_standards_of_sl2() {
        let rep = direct_sum(&[sl2_irrep(1), sl2_irrep(1)]);
        assert_eq!(invariant_dims(&rep, 4), vec![1, 0, 1, 0, 1]);
    }

    #[test]
    fn binary_cubics() {
        assert_eq!(invariant_dims(&sl2_irrep(3), 8), vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn sp4_standard_has_no_invariants() {
        assert_eq!(invariant_dims(&sp_standard(2), 4), vec![1, 0, 0, 0, 0]);
    }
}
