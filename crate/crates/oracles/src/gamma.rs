//! `N(a*)`, `C(a*)` and `Γ` by testing every element of a brute-force Weyl
//! group against the annihilator of a*.

use std::collections::HashSet;

use num_rational::Rational64;

use crate::invariants::rank;
use crate::roots::weyl_group;
use crate::IMat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaCounts {
    pub normalizer: usize,
    pub centralizer: usize,
    pub gamma: usize,
    pub reflections: usize,
}

pub fn gamma_counts(a: &IMat, central: usize, a_star: &[Vec<Rational64>]) -> GammaCounts {
    let zero = Rational64::from_integer(0);
    let n = a.len() + central;
    let annihilator = annihilator(a_star, n);
    let mut counts = GammaCounts { normalizer: 0, centralizer: 0, gamma: 0, reflections: 0 };
    let mut restrictions = HashSet::new();
    for g in weyl_group(a, central) {
        let images: Vec<Vec<Rational64>> = a_star
            .iter()
            .map(|b| g.iter().map(|row| row.iter().zip(b).map(|(x, y)| y * *x).sum()).collect())
            .collect();
        let preserved = images.iter().all(|img: &Vec<Rational64>| {
            annihilator.iter().all(|u| u.iter().zip(img).map(|(x, y)| x * y).sum::<Rational64>() == zero)
        });
        if !preserved {
            continue;
        }
        counts.normalizer += 1;
        let moved: Vec<Vec<Rational64>> = images
            .iter()
            .zip(a_star)
            .map(|(img, b)| img.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        if moved.iter().all(|v| v.iter().all(|x| *x == zero)) {
            counts.centralizer += 1;
        }
        if restrictions.insert(images.clone()) {
            counts.gamma += 1;
            if rank(moved) == 1 {
                counts.reflections += 1;
            }
        }
    }
    counts
}

/// Basis of `{u : u·b = 0 for all b}`.
fn annihilator(basis: &[Vec<Rational64>], n: usize) -> Vec<Vec<Rational64>> {
    let zero = Rational64::from_integer(0);
    let one = Rational64::from_integer(1);
    let mut m: Vec<Vec<Rational64>> = basis.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != zero) else { continue };
        m.swap(r, p);
        let piv = m[r][c];
        for x in m[r].iter_mut() {
            *x /= piv;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != zero {
                let f = m[i][c];
                for j in 0..n {
                    let t = m[r][j] * f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut u = vec![zero; n];
            u[f] = one;
            for (row, &p) in pivots.iter().enumerate() {
                u[p] = -m[row][f];
            }
            u
        })
        .collect()
}
