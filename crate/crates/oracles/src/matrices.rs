//! Hand-written integer matrices for the raising operators of a few
//! classical modules. Columns are images: `e·v_j = Σ_i m[i][j] v_i`.

use crate::IMat;

#[derive(Clone, Debug)]
pub struct ExplicitRep {
    /// Weight of each basis vector (fundamental-weight coordinates, then
    /// central coordinates).
    pub weights: Vec<Vec<i64>>,
    /// One matrix per simple root.
    pub raising: Vec<IMat>,
}

fn zeros(n: usize) -> IMat {
    vec![vec![0; n]; n]
}

/// SL₂ module of highest weight m: `e v_j = j(m−j+1) v_{j−1}`.
pub fn sl2_irrep(m: i64) -> ExplicitRep {
    let n = (m + 1) as usize;
    let mut e = zeros(n);
    for j in 1..n {
        let jj = j as i64;
        e[j - 1][j] = jj * (m - jj + 1);
    }
    ExplicitRep { weights: (0..n).map(|j| vec![m - 2 * j as i64]).collect(), raising: vec![e] }
}

/// εₖ = ϖₖ − ϖₖ₋₁ in the fundamental-weight coordinates of A_{n−1} or Cₙ.
fn epsilon(rank: usize, k: usize) -> Vec<i64> {
    let mut w = vec![0; rank];
    if k < rank {
        w[k] += 1;
    }
    if k > 0 {
        w[k - 1] -= 1;
    }
    w
}

pub fn sl_standard(n: usize) -> ExplicitRep {
    let r = n - 1;
    let raising = (0..r)
        .map(|i| {
            let mut e = zeros(n);
            e[i][i + 1] = 1;
            e
        })
        .collect();
    ExplicitRep { weights: (0..n).map(|k| epsilon(r, k)).collect(), raising }
}

pub fn sl_dual(n: usize) -> ExplicitRep {
    let r = n - 1;
    let raising = (0..r)
        .map(|i| {
            let mut e = zeros(n);
            e[i + 1][i] = -1;
            e
        })
        .collect();
    ExplicitRep {
        weights: (0..n).map(|k| epsilon(r, k).iter().map(|x| -x).collect()).collect(),
        raising,
    }
}

/// Basis ε₁..εₙ, −ε₁..−εₙ.
pub fn sp_standard(n: usize) -> ExplicitRep {
    let mut raising = Vec::new();
    for i in 0..n - 1 {
        let mut e = zeros(2 * n);
        e[i][i + 1] = 1;
        e[n + i + 1][n + i] = -1;
        raising.push(e);
    }
    let mut e = zeros(2 * n);
    e[n - 1][2 * n - 1] = 1;
    raising.push(e);
    let mut weights: Vec<Vec<i64>> = (0..n).map(|k| epsilon(n, k)).collect();
    weights.extend((0..n).map(|k| epsilon(n, k).iter().map(|x| -x).collect::<Vec<_>>()));
    ExplicitRep { weights, raising }
}

/// One-dimensional modules of a torus.
pub fn torus_characters(chars: &[Vec<i64>]) -> ExplicitRep {
    ExplicitRep { weights: chars.to_vec(), raising: Vec::new() }
}

pub fn direct_sum(parts: &[ExplicitRep]) -> ExplicitRep {
    let n: usize = parts.iter().map(|p| p.weights.len()).sum();
    let k = parts[0].raising.len();
    let mut raising = vec![zeros(n); k];
    let mut weights = Vec::new();
    let mut off = 0;
    for p in parts {
        let d = p.weights.len();
        for (e_out, e) in raising.iter_mut().zip(&p.raising) {
            for i in 0..d {
                for j in 0..d {
                    e_out[off + i][off + j] = e[i][j];
                }
            }
        }
        weights.extend(p.weights.iter().cloned());
        off += d;
    }
    ExplicitRep { weights, raising }
}

/// External tensor product for a product of groups; weights concatenate.
pub fn external_tensor(a: &ExplicitRep, b: &ExplicitRep) -> ExplicitRep {
    let (da, db) = (a.weights.len(), b.weights.len());
    let mut weights = Vec::new();
    for wa in &a.weights {
        for wb in &b.weights {
            let mut w = wa.clone();
            w.extend(wb.iter().copied());
            weights.push(w);
        }
    }
    let idx = |i: usize, j: usize| i * db + j;
    let mut raising = Vec::new();
    for e in &a.raising {
        let mut m = zeros(da * db);
        for i in 0..da {
            for k in 0..da {
                for j in 0..db {
                    m[idx(i, j)][idx(k, j)] = e[i][k];
                }
            }
        }
        raising.push(m);
    }
    for e in &b.raising {
        let mut m = zeros(da * db);
        for i in 0..da {
            for j in 0..db {
                for l in 0..db {
                    m[idx(i, j)][idx(i, l)] = e[j][l];
                }
            }
        }
        raising.push(m);
    }
    ExplicitRep { weights, raising }
}

/// Appends fixed central coordinates to every weight.
pub fn with_central(rep: &ExplicitRep, central: &[i64]) -> ExplicitRep {
    let weights = rep
        .weights
        .iter()
        .map(|w| {
            let mut v = w.clone();
            v.extend(central.iter().copied());
            v
        })
        .collect();
    ExplicitRep { weights, raising: rep.raising.clone() }
}
