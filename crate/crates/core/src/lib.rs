//! CSS and CSS-T quantum codes from classical linear codes over GF(q).
//!
//! See the guide in `book/` for a walk through the modules.

pub mod census;
pub mod css;
pub mod csst;
pub mod error;
pub mod fqlinear;
pub mod galois;
pub mod hermitian;
pub mod limits;
pub mod statevec;

pub use error::{Error, Result};
pub use galois::{Field, FieldElement, QClass};
pub use limits::Limits;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/linear-codes.md")]
    mod linear_codes {}
    #[doc = include_str!("../../../book/src/css.md")]
    mod css {}
    #[doc = include_str!("../../../book/src/csst.md")]
    mod csst {}
    #[doc = include_str!("../../../book/src/hermitian.md")]
    mod hermitian {}
    #[doc = include_str!("../../../book/src/density.md")]
    mod density {}
    #[doc = include_str!("../../../book/src/statevec.md")]
    mod statevec {}
}
