//! Exact rational and cyclotomic arithmetic, plus the scalar abstraction
//! that lets the rest of the crate run in exact or float mode.

mod cyclo;
pub mod cyclotomic;
mod literal;
mod rat;
mod scalar;

pub use cyclo::Cyclo;
pub use cyclotomic::{cyclotomic_poly, max_order, set_max_order, totient, DEFAULT_MAX_ORDER};
pub use literal::{parse_coeff_list, parse_cyclo};
pub use rat::{binomial, denominator_lcm, rat, Rat};
pub use scalar::{ComplexF, Scalar, DEFAULT_TOL};

/// Canonical representative of `Σ raw_j ζ_order^j`.
pub fn cyclo_new(order: usize, raw: &[Rat]) -> crate::Result<Cyclo> {
    Cyclo::new(order, raw)
}
