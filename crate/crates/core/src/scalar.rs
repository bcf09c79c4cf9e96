//! Scalar abstraction shared by the exact and floating-point code paths.

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

/// A field element usable by the generic elimination routines.
///
/// Exact types report zero only for true zero; floating types use a small
/// absolute threshold.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> {
    fn from_i64(v: i64) -> Self;

    fn is_negligible(&self) -> bool;

    /// Pivot preference during elimination; larger is better.
    fn magnitude(&self) -> f64;
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-12
    }

    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }

    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-6
    }

    fn magnitude(&self) -> f64 {
        f64::from(self.abs())
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Signed + Clone + Debug + From<i64> + ToPrimitive,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(I::from(v))
    }

    fn is_negligible(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    // Exact pivots: prefer small numerators to limit coefficient growth.
    fn magnitude(&self) -> f64 {
        match self.numer().abs().to_f64() {
            Some(n) if n > 0.0 => 1.0 / n,
            _ => 0.0,
        }
    }
}

/// Minimal ring interface used by the characteristic-polynomial routine.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale_int(&self, k: i64) -> Self;
    fn div_int(&self, k: i64) -> Self;
}

impl<T: Scalar> Ring for T {
    fn zero() -> Self {
        T::zero()
    }
    fn one() -> Self {
        T::one()
    }
    fn add(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }
    fn sub(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }
    fn mul(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
    fn scale_int(&self, k: i64) -> Self {
        self.clone() * T::from_i64(k)
    }
    fn div_int(&self, k: i64) -> Self {
        self.clone() / T::from_i64(k)
    }
}

/// First-order dual number `re + eps·ε` with `ε² = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dual<T> {
    pub re: T,
    pub eps: T,
}

impl<T: Scalar> Dual<T> {
    pub fn new(re: T, eps: T) -> Self {
        Dual { re, eps }
    }
}

impl<T: Scalar> Ring for Dual<T> {
    fn zero() -> Self {
        Dual::new(T::zero(), T::zero())
    }
    fn one() -> Self {
        Dual::new(T::one(), T::zero())
    }
    fn add(&self, o: &Self) -> Self {
        Dual::new(self.re.clone() + o.re.clone(), self.eps.clone() + o.eps.clone())
    }
    fn sub(&self, o: &Self) -> Self {
        Dual::new(self.re.clone() - o.re.clone(), self.eps.clone() - o.eps.clone())
    }
    fn mul(&self, o: &Self) -> Self {
        Dual::new(
            self.re.clone() * o.re.clone(),
            self.re.clone() * o.eps.clone() + self.eps.clone() * o.re.clone(),
        )
    }
    fn scale_int(&self, k: i64) -> Self {
        Dual::new(self.re.clone() * T::from_i64(k), self.eps.clone() * T::from_i64(k))
    }
    fn div_int(&self, k: i64) -> Self {
        Dual::new(self.re.clone() / T::from_i64(k), self.eps.clone() / T::from_i64(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn rational_zero_is_exact() {
        assert!(Rational64::new(0, 5).is_negligible());
        assert!(!Rational64::new(1, 1_000_000_000).is_negligible());
    }

    #[test]
    fn dual_product_rule() {
        let a = Dual::new(3.0, 1.0);
        let b = Dual::new(2.0, 5.0);
        let p = Ring::mul(&a, &b);
        assert_eq!(p, Dual::new(6.0, 17.0));
    }
}
