use std::fmt;
use std::ops::Deref;

use num_rational::Rational64;

/// Integer vector in the ambient lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeightVec(Vec<i64>);

/// Rational vector in the ambient basis, used for subspaces of t*.
pub type RatVec = Vec<Rational64>;

impl WeightVec {
    pub fn new(coords: Vec<i64>) -> Self {
        WeightVec(coords)
    }

    pub fn zeros(n: usize) -> Self {
        WeightVec(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        WeightVec(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> WeightVec {
        WeightVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: i64) -> WeightVec {
        WeightVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn to_rational(&self) -> RatVec {
        self.0.iter().map(|&x| Rational64::from_integer(x)).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|&x| x as f64).collect()
    }
}

impl Deref for WeightVec {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for WeightVec {
    fn from(v: Vec<i64>) -> Self {
        WeightVec(v)
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Formats a rational vector as `(1,1/2,0)`.
pub fn format_ratvec(v: &[Rational64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}
