//! Brute-force reference computations for tests.
//!
//! Everything here works from a Cartan matrix (`a[i][j] = ⟨αᵢ, αⱼ^∨⟩`, weights
//! in fundamental-weight coordinates) and deliberately avoids the algorithms
//! used by `symrep`: roots come from root strings, Weyl groups from closure
//! under matrix multiplication, multiplicities from Kostant's formula and
//! invariants from explicit kernels of raising operators.

pub mod gamma;
pub mod invariants;
pub mod kostant;
pub mod matrices;
pub mod roots;

pub type IMat = Vec<Vec<i64>>;

pub fn cartan_a(n: usize) -> IMat {
    let mut a = diag2(n);
    for i in 0..n.saturating_sub(1) {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
    a
}

/// Cₙ with αₙ long.
pub fn cartan_c(n: usize) -> IMat {
    let mut a = cartan_a(n);
    if n >= 2 {
        a[n - 1][n - 2] = -2;
    }
    a
}

pub fn block_diag(blocks: &[IMat]) -> IMat {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut a = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                a[off + i][off + j] = x;
            }
        }
        off += b.len();
    }
    a
}

/// Bₙ with αₙ short.
pub fn cartan_b(n: usize) -> IMat {
    let mut a = cartan_a(n);
    if n >= 2 {
        a[n - 2][n - 1] = -2;
    }
    a
}

/// Dₙ (n ≥ 3) with αₙ₋₂ joined to both αₙ₋₁ and αₙ.
pub fn cartan_d(n: usize) -> IMat {
    let mut a = cartan_a(n);
    a[n - 2][n - 1] = 0;
    a[n - 1][n - 2] = 0;
    a[n - 3][n - 1] = -1;
    a[n - 1][n - 3] = -1;
    a
}

/// G₂ with α₁ short.
pub fn cartan_g2() -> IMat {
    vec![vec![2, -1], vec![-3, 2]]
}

/// F₄ with α₁, α₂ long.
pub fn cartan_f4() -> IMat {
    let mut a = cartan_a(4);
    a[1][2] = -2;
    a
}

/// Eₙ (n = 6, 7, 8): chain α₁ α₃ α₄ … αₙ with α₂ attached to α₄.
pub fn cartan_e(n: usize) -> IMat {
    let mut a = diag2(n);
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    link(1, 3);
    link(2, 4);
    for i in 3..n {
        link(i, i + 1);
    }
    a
}

fn diag2(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| if i == j { 2 } else { 0 }).collect()).collect()
}
