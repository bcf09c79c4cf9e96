//! Cartan matrices (Bourbaki numbering) and classification of connected
//! Dynkin components.

use std::collections::BTreeSet;
use std::fmt;

use super::RootDataError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub fn parse(s: &str) -> Option<Letter> {
        match s.trim() {
            "A" | "a" => Some(Letter::A),
            "B" | "b" => Some(Letter::B),
            "C" | "c" => Some(Letter::C),
            "D" | "d" => Some(Letter::D),
            "E" | "e" => Some(Letter::E),
            "F" | "f" => Some(Letter::F),
            "G" | "g" => Some(Letter::G),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Letter::A => "A",
            Letter::B => "B",
            Letter::C => "C",
            Letter::D => "D",
            Letter::E => "E",
            Letter::F => "F",
            Letter::G => "G",
        };
        f.write_str(s)
    }
}

/// A simple factor with its simple-root indices listed in Bourbaki order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleFactor {
    pub letter: Letter,
    pub rank: usize,
    pub nodes: Vec<usize>,
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// Rewrites low-rank coincidences to a canonical form: B1, C1 → A1,
/// D2 → A1×A1, D3 → A3.
pub fn normalize(letter: Letter, rank: usize) -> Result<Vec<(Letter, usize)>, RootDataError> {
    let bad = || RootDataError::InvalidCartanType { letter: letter.to_string(), rank };
    if rank == 0 {
        return Err(bad());
    }
    Ok(match (letter, rank) {
        (Letter::A, n) => vec![(Letter::A, n)],
        (Letter::B, 1) | (Letter::C, 1) => vec![(Letter::A, 1)],
        (Letter::B, n) | (Letter::C, n) => vec![(letter, n)],
        (Letter::D, 1) => return Err(bad()),
        (Letter::D, 2) => vec![(Letter::A, 1), (Letter::A, 1)],
        (Letter::D, 3) => vec![(Letter::A, 3)],
        (Letter::D, n) => vec![(Letter::D, n)],
        (Letter::E, 6..=8) => vec![(Letter::E, rank)],
        (Letter::F, 4) => vec![(Letter::F, 4)],
        (Letter::G, 2) => vec![(Letter::G, 2)],
        _ => return Err(bad()),
    })
}

/// `a[i][j] = ⟨αᵢ, αⱼ^∨⟩` for a normalized type.
pub fn cartan_matrix(letter: Letter, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match letter {
        Letter::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Letter::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // αₙ short
            link(n - 2, n - 1, -2, -1);
        }
        Letter::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            // αₙ long
            link(n - 2, n - 1, -1, -2);
        }
        Letter::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Letter::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Letter::F => {
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
        }
        Letter::G => link(0, 1, -1, -3),
    }
    a
}

pub fn weyl_order(letter: Letter, n: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    match letter {
        Letter::A => fact(n + 1),
        Letter::B | Letter::C => (1u128 << n) * fact(n),
        Letter::D => (1u128 << (n - 1)) * fact(n),
        Letter::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Letter::F => 1_152,
        Letter::G => 12,
    }
}

/// Splits the Cartan matrix into connected components and identifies each,
/// listing its nodes in Bourbaki order. A rank-2 double bond is reported as
/// C2 with the short node first.
pub fn classify_components(a: &[Vec<i64>]) -> Vec<SimpleFactor> {
    let n = a.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            if seen[i] {
                continue;
            }
            seen[i] = true;
            comp.insert(i);
            stack.extend((0..n).filter(|&j| j != i && a[i][j] != 0 && !seen[j]));
        }
        out.push(classify_connected(a, &comp.into_iter().collect::<Vec<_>>()));
    }
    out
}

fn classify_connected(a: &[Vec<i64>], nodes: &[usize]) -> SimpleFactor {
    let nbrs = |i: usize| -> Vec<usize> {
        nodes.iter().copied().filter(|&j| j != i && a[i][j] != 0).collect()
    };
    let rank = nodes.len();
    let factor = |letter, nodes| SimpleFactor { letter, rank, nodes };
    if rank == 1 {
        return factor(Letter::A, nodes.to_vec());
    }
    let bond = |i: usize, j: usize| a[i][j] * a[j][i];
    let multi: Vec<(usize, usize)> = nodes
        .iter()
        .flat_map(|&i| nodes.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| i < j && bond(i, j) > 1)
        .collect();
    // a[long][short] is the larger-magnitude entry of a multiple bond.
    let long_short = |i: usize, j: usize| if a[i][j] < a[j][i] { (i, j) } else { (j, i) };

    if let Some(&(i, j)) = multi.first() {
        let (long, short) = long_short(i, j);
        if bond(i, j) == 3 {
            return factor(Letter::G, vec![short, long]);
        }
        if rank == 2 {
            return factor(Letter::C, vec![short, long]);
        }
        let end_of_chain_from = |first: usize, second: usize| {
            let mut order = vec![first, second];
            loop {
                let last = order[order.len() - 1];
                let prev = order[order.len() - 2];
                match nbrs(last).into_iter().find(|&k| k != prev) {
                    Some(k) => order.push(k),
                    None => break order,
                }
            }
        };
        let deg_long = nbrs(long).len();
        let deg_short = nbrs(short).len();
        if deg_long == 2 && deg_short == 2 {
            // F4: walk from the long side outward, then reverse.
            let mut order = end_of_chain_from(short, long);
            order.reverse();
            order.extend(nbrs(short).into_iter().filter(|&k| k != long));
            return factor(Letter::F, order);
        }
        if deg_long == 1 {
            // long node is the chain end: C_n with αₙ long.
            let mut order = end_of_chain_from(long, short);
            order.reverse();
            return factor(Letter::C, order);
        }
        let mut order = end_of_chain_from(short, long);
        order.reverse();
        return factor(Letter::B, order);
    }

    if let Some(&b) = nodes.iter().find(|&&i| nbrs(i).len() == 3) {
        let mut arms: Vec<Vec<usize>> = nbrs(b)
            .into_iter()
            .map(|first| {
                let mut arm = vec![first];
                let mut prev = b;
                loop {
                    let last = *arm.last().unwrap();
                    match nbrs(last).into_iter().find(|&k| k != prev) {
                        Some(k) => {
                            prev = last;
                            arm.push(k);
                        }
                        None => break arm,
                    }
                }
            })
            .collect();
        arms.sort_by_key(|arm| (arm.len(), arm[0]));
        let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
        if lens[0] == 1 && lens[1] == 1 {
            let mut order: Vec<usize> = arms[2].iter().rev().copied().collect();
            order.push(b);
            order.push(arms[0][0]);
            order.push(arms[1][0]);
            return factor(Letter::D, order);
        }
        let mut order = vec![arms[1][1], arms[0][0], arms[1][0], b];
        order.extend(arms[2].iter().copied());
        return factor(Letter::E, order);
    }

    let ends: Vec<usize> = nodes.iter().copied().filter(|&i| nbrs(i).len() == 1).collect();
    let mut order = vec![ends[0]];
    let mut prev = usize::MAX;
    while let Some(k) = nbrs(*order.last().unwrap()).into_iter().find(|&k| k != prev) {
        prev = *order.last().unwrap();
        order.push(k);
    }
    factor(Letter::A, order)
}
