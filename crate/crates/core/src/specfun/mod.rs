//! Special functions: Clausen `Cl₂`, Hurwitz zeta, the Kronecker symbol,
//! Dirichlet L-series and Zagier's `A(x)`.
//!
//! Every function takes its arguments as [`rug::Float`] and evaluates at the
//! working precision of the supplied context.

mod clausen;
mod hurwitz;
mod kronecker;
mod lseries;
mod zagier;

pub(crate) use self::clausen::clausen2_float;
pub use self::clausen::{clausen2, clausen2_integral};
pub use self::hurwitz::hurwitz_zeta;
pub use self::kronecker::{kronecker, Discriminant};
pub use self::lseries::{dirichlet_l, dirichlet_l_clausen, LSeriesPoint};
pub use self::zagier::{arccot, zagier_a, zagier_a_quadrature};

use rug::Float;

use crate::mpcontext::{PrecisionContext, Real};

/// `ζ(s) = ζ(s, 1)`.
pub fn riemann_zeta(s: &Float, ctx: &PrecisionContext) -> crate::Result<Real> {
    hurwitz_zeta(s, &ctx.float(1), ctx)
}
