pub mod linalg;
pub mod rootdata;
pub mod scalar;
pub mod weight;
pub mod budget;
pub mod reps;
pub mod classify;
pub mod reduce;
pub mod numeric;

/// Double-precision matrix model.
pub type MatrixRep64 = numeric::MatrixRep<f64>;
/// Double-precision section of the invariant moment map.
pub type Section64 = numeric::Section<f64>;
/// Double-precision reduction stage.
pub type LocalStage64 = numeric::LocalStage<f64>;
