//! Exact classification of the subalgebras of `so(4,C) ≅ sl(2,C) ⊕ sl(2,C)`
//! up to inner automorphism.
//!
//! All arithmetic is over the Gaussian rationals `Q(i)`. The usual entry
//! point is [`classify::classify`] on a [`lie::Subalgebra`]:
//!
//! ```
//! use so4::lie::{Element, Subalgebra};
//! use so4::classify::classify;
//!
//! let s = Subalgebra::span_close(&[Element::x1() + Element::x2()]).unwrap();
//! assert_eq!(classify(&s).unwrap().to_string(), "J5");
//! ```

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod conjugacy;
pub mod lie;
pub mod linalg;
pub mod modulerep;
pub mod scalar;
pub mod verify;

pub use catalog::{ClassLabel, Representative};
pub use lie::{Element, Subalgebra};
pub use scalar::Scalar;
