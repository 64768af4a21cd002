//! Exact rationals, Bernoulli/Euler numbers and the complex special functions
//! everything else is built on.

mod bernoulli;
mod double_double;
mod gamma;
mod hurwitz;
mod rational;

pub use bernoulli::{bernoulli_number, bernoulli_polynomial, euler_number};
pub use double_double::DoubleDouble;
pub use gamma::{digamma, gamma, log_gamma};
pub(crate) use hurwitz::hurwitz_em;
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_rational, hurwitz_zeta_real_dd, EmValue};
pub use num_complex::Complex64;
pub use rational::{binomial, Rational};

/// Working precision for computations that support an extended mode.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Precision {
    #[default]
    Double,
    Extended,
}
