//! Weyl group elements as integer matrices on the ambient lattice.

use std::collections::{HashMap, VecDeque};

use num_rational::Rational64;

use super::{pair, RootDataError, RootDatum};
use crate::weight::{RatVec, WeightVec};

/// Square integer matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IntMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * o.data[k * n + j];
                }
            }
        }
        IntMatrix { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n).map(|i| pair(&self.data[i * self.n..(i + 1) * self.n], v)).collect()
    }

    pub fn apply_rat(&self, v: &[Rational64]) -> RatVec {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(Rational64::from_integer(0), |acc, j| acc + v[j] * self.get(i, j))
            })
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        IntMatrix { n, data }
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[i64]>::to_vec).collect()
    }
}

/// Element of W with a reduced word; `word = [i₁, …, iₖ]` denotes
/// `s_{i₁} ⋯ s_{iₖ}`, indices referring to the datum's simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: IntMatrix,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { word: Vec::new(), matrix: IntMatrix::identity(n) }
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// `(−1)^ℓ(w)`.
    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, v: &[i64]) -> WeightVec {
        WeightVec::new(self.matrix.apply(v))
    }
}

impl RootDatum {
    /// Matrix of the simple reflection `sᵢ(λ) = λ − ⟨λ, αᵢ^∨⟩αᵢ`.
    pub fn reflection_matrix(&self, i: usize) -> IntMatrix {
        let n = self.ambient_dim();
        let a = &self.simple_roots()[i];
        let c = &self.simple_coroots()[i];
        let mut m = IntMatrix::identity(n);
        for r in 0..n {
            for s in 0..n {
                m.data[r * n + s] -= a[r] * c[s];
            }
        }
        m
    }

    pub fn reflect(&self, i: usize, w: &[i64]) -> WeightVec {
        let p = pair(w, &self.simple_coroots()[i]);
        WeightVec::new(w.iter().zip(self.simple_roots()[i].iter()).map(|(x, a)| x - p * a).collect())
    }

    pub fn element_from_word(&self, word: &[usize]) -> WeylElement {
        let mut m = IntMatrix::identity(self.ambient_dim());
        for &i in word {
            m = m.mul(&self.reflection_matrix(i));
        }
        WeylElement { word: word.to_vec(), matrix: m }
    }

    /// Action of `w` on a coweight, `μ ↦ μ ∘ w⁻¹`.
    pub fn coweight_action(&self, w: &WeylElement, mu: &[Rational64]) -> RatVec {
        // sᵢ on coweights: μ ↦ μ − ⟨αᵢ, μ⟩ αᵢ^∨; apply the word right to left.
        let mut v = mu.to_vec();
        for &i in w.word.iter().rev() {
            let a = &self.simple_roots()[i];
            let c = &self.simple_coroots()[i];
            let p = a.iter().zip(&v).fold(Rational64::from_integer(0), |acc, (x, y)| acc + y * *x);
            for (vk, ck) in v.iter_mut().zip(c) {
                *vk -= p * *ck;
            }
        }
        v
    }

    /// Dominant representative of the orbit of `w`, with the element
    /// mapping `w` to it.
    pub fn to_dominant(&self, w: &[i64]) -> (WeightVec, WeylElement) {
        let mut cur = WeightVec::new(w.to_vec());
        let mut applied = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| pair(&cur, &self.simple_coroots()[i]) < 0) {
            cur = self.reflect(i, &cur);
            applied.push(i);
        }
        applied.reverse();
        (cur, self.element_from_word(&applied))
    }

    pub fn longest_element(&self) -> WeylElement {
        self.to_dominant(&self.regular_dominant().neg()).1
    }

    /// W-orbit of a weight by reflection closure (no group enumeration).
    pub fn orbit(&self, w: &[i64]) -> Vec<WeightVec> {
        let start = WeightVec::new(w.to_vec());
        let mut seen = std::collections::HashSet::from([start.clone()]);
        let mut out = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank() {
                let r = self.reflect(i, &v);
                if seen.insert(r.clone()) {
                    out.push(r.clone());
                    queue.push_back(r);
                }
            }
        }
        out
    }

    /// Every element of W exactly once, identity first, in breadth-first
    /// order so that each word is reduced.
    pub fn enumerate_weyl(&self, cap: usize) -> Result<Vec<WeylElement>, RootDataError> {
        let order = self.weyl_order();
        if order > cap as u128 {
            return Err(RootDataError::GroupTooLarge { order, cap });
        }
        let n = self.ambient_dim();
        let p = self.regular_dominant().clone();
        let gens: Vec<IntMatrix> = (0..self.rank()).map(|i| self.reflection_matrix(i)).collect();
        let mut elements = vec![WeylElement::identity(n)];
        let mut index: HashMap<WeightVec, usize> = HashMap::from([(p.clone(), 0)]);
        let mut head = 0;
        while head < elements.len() {
            for (i, s) in gens.iter().enumerate() {
                let m = elements[head].matrix.mul(s);
                let image = WeightVec::new(m.apply(&p));
                if index.contains_key(&image) {
                    continue;
                }
                let mut word = elements[head].word.clone();
                word.push(i);
                index.insert(image, elements.len());
                elements.push(WeylElement { word, matrix: m });
            }
            head += 1;
        }
        debug_assert_eq!(elements.len() as u128, order);
        Ok(elements)
    }
}

#[cfg(test)]
mod tests {
    use super::super::Letter;
    use super::*;

    #[test]
    fn small_groups() {
        let a1 = RootDatum::new(&[(Letter::A, 1)], 0).unwrap();
        assert_eq!(a1.enumerate_weyl(100).unwrap().len(), 2);
        let a2 = RootDatum::new(&[(Letter::A, 2)], 0).unwrap();
        let w = a2.enumerate_weyl(100).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.iter().map(WeylElement::length).max(), Some(3));
        assert!(w[0].word.is_empty());
        let c2 = RootDatum::new(&[(Letter::C, 2)], 0).unwrap();
        let w = c2.enumerate_weyl(100).unwrap();
        assert_eq!(w.len(), 8);
        assert_eq!(w.iter().map(WeylElement::length).max(), Some(4));
    }

    #[test]
    fn cap_is_reported() {
        let e8 = RootDatum::new(&[(Letter::E, 8)], 0).unwrap();
        match e8.enumerate_weyl(1_000_000) {
            Err(RootDataError::GroupTooLarge { cap, .. }) => assert_eq!(cap, 1_000_000),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dominant_rep_of_minus_omega1_in_a2() {
        let a2 = RootDatum::new(&[(Letter::A, 2)], 0).unwrap();
        let (dom, w) = a2.to_dominant(&[-1, 0]);
        assert_eq!(dom, WeightVec::new(vec![0, 1]));
        assert_eq!(w.apply(&[-1, 0]), dom);
    }

    #[test]
    fn longest_element_negates_positive_roots() {
        for (l, n) in [(Letter::A, 3), (Letter::C, 3), (Letter::G, 2), (Letter::D, 5)] {
            let d = RootDatum::new(&[(l, n)], 0).unwrap();
            let w0 = d.longest_element();
            assert_eq!(w0.matrix.mul(&w0.matrix), IntMatrix::identity(n));
            let pos: std::collections::HashSet<_> =
                d.positive_roots().iter().map(|r| r.vector.clone()).collect();
            for r in d.positive_roots() {
                assert!(pos.contains(&w0.apply(&r.vector).neg()));
            }
        }
    }
}
