//! Exact classification of irreducible integrable highest-weight modules for
//! current Kac-Moody algebras `g' ⊗ A ⊕ h''`, with a brute-force
//! contravariant-form verifier for type A.

pub mod classify;
pub mod error;
pub mod hwchar;
pub mod liecore;
pub mod linalg;
pub mod oracle;
pub mod polyring;
pub mod zerodim;

pub use error::{Error, Result};
