//! Exact arithmetic: rationals, one quadratic extension, polynomials and
//! extended integers.

mod extint;
pub mod parse;
mod poly;
mod quad;
mod rational;
mod upoly;

pub use extint::{ExtInt, Finite, NegInf, PosInf};
pub use parse::{parse_expr, Expr};
pub use poly::{poly_arith, rational_roots, root_multiplicity, Monomial, MultiPoly, PolyOp, Var};
pub use quad::QuadExt;
pub use rational::{q, Rational};
pub use upoly::UniPoly;
