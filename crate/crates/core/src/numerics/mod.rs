//! Scalar building blocks: constants, exact rational sequences, ψ and ζ.

pub mod constants;
pub mod gamma;
pub mod rational;
pub mod zeta;

pub use constants::{Constants, CONSTANTS};
pub use gamma::{digamma, digamma_real, harmonic_real, polygamma, polygamma_real};
pub use rational::{
    bernoulli, bernoulli_f64, binomial, euler_number, factorial, harmonic, harmonic2, Rational,
};
pub use zeta::{dirichlet_eta, riemann_zeta};
