//! Exact arithmetic for triangles with integer sides and integer medians.
//!
//! The crate enumerates and certifies such triangles, implements the
//! companion transform (sides `(2/3)·medians`) and the descent driver built
//! on it, and audits a family of identities around them: eight equal-area
//! products, shift brackets, a quartic in the median difference and its
//! claimed factorization, and mod-3 constraints. Everything is exact; no
//! floating point participates in any decision.
//!
//! ```
//! use median_descent::triangle::IntTriangle;
//!
//! let t = IntTriangle::from_u64(136, 170, 174).unwrap();
//! let medians = t.integer_medians().unwrap();
//! assert_eq!(medians.map(|m| m.to_string()), ["158", "131", "127"]);
//! ```

pub mod arith;
pub mod audit;
pub mod companion;
pub mod error;
pub mod io;
pub mod search;
pub mod triangle;

pub use error::{Error, Result};
pub use triangle::{AreaClass, IntTriangle, RatTriangle, Triangle};
