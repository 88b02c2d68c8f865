//! Permutation statistics `baj` and `inv`, the v-code / r-code bijection
//! that carries `baj − inv` to a weighted digit sum, and exact verification
//! of the generating function
//!
//! ```text
//! Σ_{σ ∈ S_n, σ_n = k} q^{baj(σ) − inv(σ)} = Π_{i=1}^{n-1} (1 − q^{i(n−i)}) / (1 − q^i)
//! ```
//!
//! by exhaustive enumeration.

pub mod codes;
pub mod error;
pub mod perm;
pub mod qpoly;
pub mod verify;

pub use codes::{RCode, VCode};
pub use error::{Error, Result};
pub use perm::{iterate_with_last, ClassicStats, DescentSet, Permutation};
pub use qpoly::{geometric, rhs_product, QPolynomial};
pub use verify::{Distribution, LastValue, Mismatch, Status, VerificationReport, Verifier};

/// `m!`, or `None` once it no longer fits in a `u128` (m > 34).
pub fn factorial(m: usize) -> Option<u128> {
    (1..=m as u128).try_fold(1u128, |acc, i| acc.checked_mul(i))
}
