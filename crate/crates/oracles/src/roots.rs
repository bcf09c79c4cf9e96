use crate::IMat;

/// Positive roots in simple-root coordinates, grown height by height with
/// the root-string rule: β + αᵢ is a root iff `q − ⟨β, αᵢ^∨⟩ > 0`, where `q`
/// is the largest k with β − kαᵢ a root.
pub fn positive_roots(a: &IMat) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                // ⟨β, αᵢ^∨⟩ = Σ_j c_j a[j][i]
                let pairing: i64 = (0..n).map(|j| beta[j] * a[j][i]).sum();
                let mut q = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= q + 1;
                    if down.iter().all(|&c| c == 0) || !roots.contains(&down) {
                        break;
                    }
                    q += 1;
                }
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !roots.contains(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        frontier = next;
    }
    roots
}

/// Root in fundamental-weight coordinates.
pub fn to_weight(a: &IMat, coeffs: &[i64]) -> Vec<i64> {
    let n = a.len();
    (0..n).map(|k| (0..n).map(|j| coeffs[j] * a[j][k]).sum()).collect()
}

/// Closure of the simple reflections (on fundamental-weight coordinates,
/// padded with `central` fixed coordinates) under multiplication.
pub fn weyl_group(a: &IMat, central: usize) -> Vec<IMat> {
    let r = a.len();
    let n = r + central;
    let gens: Vec<IMat> = (0..r)
        .map(|i| {
            (0..n)
                .map(|row| {
                    (0..n)
                        .map(|col| {
                            let id = i64::from(row == col);
                            // s_i λ = λ − λ_i αᵢ
                            let alpha = if row < r { a[i][row] } else { 0 };
                            id - if col == i { alpha } else { 0 }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let id: IMat = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    let mut group = vec![id];
    let mut set = std::collections::HashSet::new();
    set.insert(group[0].clone());
    let mut head = 0;
    while head < group.len() {
        for g in &gens {
            let p = mul(&group[head], g);
            if set.insert(p.clone()) {
                group.push(p);
            }
        }
        head += 1;
    }
    group
}

pub fn mul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn apply(m: &IMat, v: &[i64]) -> Vec<i64> {
    m.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

/// Determinant of a small integer matrix by cofactor expansion.
pub fn det(m: &IMat) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: IMat = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{cartan_a, cartan_c};

    #[test]
    fn counts() {
        assert_eq!(positive_roots(&cartan_a(3)).len(), 6);
        assert_eq!(positive_roots(&cartan_c(3)).len(), 9);
        assert_eq!(weyl_group(&cartan_c(2), 0).len(), 8);
        assert_eq!(weyl_group(&cartan_a(3), 1).len(), 24);
    }
}
