//! Exact arithmetic in the representation ring of a cyclic group `C_q`,
//! `q = p^alpha`, over a field of characteristic `p`.
//!
//! The ring has the indecomposables `V_1, .., V_q` as a basis. [`tensor`]
//! decomposes `V_r (x) V_s` symbolically, [`oracle`] recomputes the same
//! decompositions as Jordan types over `F_p`, and the remaining modules cover
//! the U-basis, ideals of induced modules and the digit identity.
//!
//! ```
//! use greenring::{tensor::tensor, GroupSpec};
//!
//! let g = GroupSpec::new(5, 3)?;
//! assert_eq!(tensor(g, 2, 11)?.to_string(), "V12 + V10");
//! # Ok::<(), greenring::Error>(())
//! ```

pub mod cli;
pub mod digits;
pub mod error;
pub mod group;
pub mod ideals;
pub mod lattice;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod quantum;
pub mod ring;
pub mod tensor;
pub mod ubasis;

pub use error::{Error, Result};
pub use group::GroupSpec;
pub use ring::RingElement;
