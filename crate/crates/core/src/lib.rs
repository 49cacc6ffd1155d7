//! Exact element theory for Bezout domains over the integers, the rational
//! polynomials and the Henriksen ring `Z + xQ[[x]]`.

pub mod classifier;
pub mod cli;
pub mod error;
pub mod factor;
pub mod grammar;
pub mod instances;
pub mod matrix;
pub mod numbers;
pub mod ring;
pub mod sample;
pub mod search;

pub use error::{Error, Result};
pub use instances::{CanonicalClass, HSeries, Instance, Poly, DEFAULT_PRECISION};
pub use matrix::Matrix;
pub use numbers::{Int, Rat};
pub use ring::{BezoutDomain, GcdCert, RingKind, Shape};
