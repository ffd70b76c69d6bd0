//! Exact combinatorics of non-crossing linked partitions and planar trees,
//! and the free-probability transforms they govern: moments, free cumulants
//! and t-coefficients, with machine checks of the identities that connect
//! them.

mod cache;
pub mod error;
pub mod freeness;
pub mod limits;
pub mod partitions;
pub mod rational;
pub mod render;
pub mod series;
pub mod transforms;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use limits::{Kind, Limits};
pub use rational::Rational;
