//! Unit-memory maximum distance profile (MDP) convolutional codes built from
//! skew Vandermonde matrices over `F_{q^t}`, together with exact tools to
//! verify them: minor conditions on truncated sliding matrices, column
//! distances, minimality and duality, plus a windowed erasure simulator.

pub mod combin;
pub mod construction;
pub mod conv;
pub mod erasure;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod par;
pub mod skew;

pub use error::{Error, Result};
pub use gf::{ExtensionField, FieldElement};
pub use linalg::Matrix;
pub use skew::SkewPolynomial;
