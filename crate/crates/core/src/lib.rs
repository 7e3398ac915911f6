//! Balanced Hermitian metrics on even-dimensional non-compact simple Lie
//! algebras of inner type, computed in exact rational arithmetic.
//!
//! The pipeline for one pair `(g, k)`: choose a simple system
//! ([`ordering`]), solve for a positive diagonal balanced metric
//! ([`balanced`]), certify that no invariant pluriclosed metric exists for
//! that complex structure ([`pluriclosed`]) and check that the Chern scalar
//! curvature vanishes ([`chern`]). [`certkit`] packages the results as JSON
//! certificates; [`check`] re-verifies them from raw data.

pub mod balanced;
pub mod certkit;
pub mod check;
pub mod chern;
pub mod error;
pub mod ordering;
pub mod pairs;
pub mod par;
pub mod pluriclosed;
pub mod rational;
pub mod rootsys;

pub use error::{Error, Result};
pub use rational::Rational;
pub use rootsys::{build_root_system, Family, RootSystem, RootVector, SimpleSystem};
