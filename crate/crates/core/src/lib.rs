//! Arbitrary-precision evaluation and verification of the dilogarithmic
//! integral
//!
//! ```text
//! I₇ = 24/(7√7) ∫_{π/3}^{π/2} ln|(tan θ + √7)/(tan θ − √7)| dθ
//! ```
//!
//! and of the identities that tie it to the Dirichlet L-value `L₋₇(2)`.
//!
//! * [`mpcontext`]: working precision, constants, exact Bernoulli numbers.
//! * [`specfun`]: `Cl₂`, Hurwitz zeta, Kronecker symbol, `L_d(s)`, `A(x)`.
//! * [`quadrature`]: tanh-sinh engine and the split evaluation of `I₇`.
//! * [`identities`]: registry of identities with independent evaluators.
//! * [`relations`]: PSLQ integer-relation detection.
//!
//! ```
//! use dilogint::{make_context, specfun};
//!
//! let ctx = make_context(30).unwrap();
//! let d = specfun::Discriminant::new(-7).unwrap();
//! let point = specfun::LSeriesPoint::new(d, ctx.float(2)).unwrap();
//! let l = specfun::dirichlet_l(&point, &ctx).unwrap();
//! assert_eq!(l.to_fixed(15), "1.151925470544491");
//! ```

pub mod error;
pub mod identities;
pub mod mpcontext;
pub mod quadrature;
pub mod relations;
pub mod specfun;

pub use crate::error::{Error, Result};
pub use crate::mpcontext::{make_context, PrecisionContext, Real};

// The guide's code blocks run as doctests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/precision.md")]
    mod precision {}
    #[doc = include_str!("../../../book/src/clausen.md")]
    mod clausen {}
    #[doc = include_str!("../../../book/src/lseries.md")]
    mod lseries {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    mod quadrature {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/relations.md")]
    mod relations {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
