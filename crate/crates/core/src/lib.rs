//! Crystalline measures, the zeta-like functions they define, their zeros, and
//! checks of the resulting sequences against the asymptotics of the Riemann zeros.

pub mod error;
pub mod asymptotics;
pub mod crystal;
pub mod documents;
pub mod numerics;
pub mod sequence;
pub mod zerofind;
pub mod zetabuild;
pub mod xray;

pub use error::{Error, Result};
