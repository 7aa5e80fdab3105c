//! Proximal ADMM with an over-relaxed multiplier step `theta in (0, 2)` for
//! nonconvex problems `min f(x) + g(y) s.t. A x + B y = b`, plus a certifier
//! that re-checks, iteration by iteration, the descent inequalities and the
//! best-iterate rate bounds that make the method's parameter rules work.

// `!(x > 0.0)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bench;
pub mod certify;
pub mod error;
pub mod linalg;
pub mod params;
pub mod problem;
pub mod solver;

pub use error::{Error, Result};
