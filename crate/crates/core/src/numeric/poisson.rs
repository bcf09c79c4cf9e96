//! The Poisson bracket `{f, g} = ω(H_f, H_g)` of functions on V, with
//! observables supplying their own gradients.

use nalgebra::DVector;

use super::catalog::MatrixRep;
use super::moment::{inv_moment_eval, inv_moment_jacobian};
use super::Real;

/// A function on V with its gradient.
pub trait Observable<T: Real> {
    fn value(&self, v: &DVector<T>) -> T;
    fn gradient(&self, v: &DVector<T>) -> DVector<T>;
}

/// The coordinate function `v ↦ v[index]`.
#[derive(Clone, Copy, Debug)]
pub struct LinearCoordinate(pub usize);

impl<T: Real> Observable<T> for LinearCoordinate {
    fn value(&self, v: &DVector<T>) -> T {
        v[self.0]
    }
    fn gradient(&self, v: &DVector<T>) -> DVector<T> {
        let mut g = DVector::zeros(v.len());
        g[self.0] = T::one();
        g
    }
}

/// The pullback `m*(p)` of a Chevalley coordinate along the moment map.
#[derive(Clone, Copy, Debug)]
pub struct ChevalleyPullback<'a, T: Real> {
    pub rep: &'a MatrixRep<T>,
    pub coord: usize,
}

impl<T: Real> Observable<T> for ChevalleyPullback<'_, T> {
    fn value(&self, v: &DVector<T>) -> T {
        inv_moment_eval(self.rep, v).expect("dimension matches the model")[self.coord]
    }
    fn gradient(&self, v: &DVector<T>) -> DVector<T> {
        inv_moment_jacobian(self.rep, v).row(self.coord).transpose()
    }
}

/// The pointwise product of two observables.
pub struct Product<'a, T: Real>(pub &'a dyn Observable<T>, pub &'a dyn Observable<T>);

impl<T: Real> Observable<T> for Product<'_, T> {
    fn value(&self, v: &DVector<T>) -> T {
        self.0.value(v) * self.1.value(v)
    }
    fn gradient(&self, v: &DVector<T>) -> DVector<T> {
        self.0.gradient(v) * self.1.value(v) + self.1.gradient(v) * self.0.value(v)
    }
}

/// A black-box function with central-difference gradients.
pub struct FiniteDifference<F> {
    pub f: F,
    pub step: f64,
}

impl<F> FiniteDifference<F> {
    pub fn new(f: F) -> Self {
        FiniteDifference { f, step: 1e-5 }
    }
}

impl<T: Real, F: Fn(&DVector<T>) -> T> Observable<T> for FiniteDifference<F> {
    fn value(&self, v: &DVector<T>) -> T {
        (self.f)(v)
    }
    fn gradient(&self, v: &DVector<T>) -> DVector<T> {
        let h = T::of(self.step);
        DVector::from_iterator(
            v.len(),
            (0..v.len()).map(|i| {
                let mut p = v.clone();
                let mut m = v.clone();
                p[i] += h;
                m[i] -= h;
                ((self.f)(&p) - (self.f)(&m)) / (h + h)
            }),
        )
    }
}

/// `{f, g}(v) = −∇fᵀ J⁻¹ ∇g`, so that `{x₁, y₁} = 1` for the standard form.
pub fn poisson_bracket<T: Real>(rep: &MatrixRep<T>, f: &dyn Observable<T>, g: &dyn Observable<T>, v: &DVector<T>) -> T {
    let jinv = rep.form.clone().try_inverse().expect("the symplectic form is invertible");
    -f.gradient(v).dot(&(jinv * g.gradient(v)))
}
