//! Exact arithmetic core: rationals, sparse polynomials, rational expressions
//! with factored denominators, the expression grammar, and linear solving
//! over the rational function field.

pub mod linsolve;
pub mod parse;
pub mod poly;
pub mod ratexpr;
pub mod vars;

pub use parse::{parse, print_poly, print_ratexpr, ParseError};
pub use poly::{format_q, qi, qr, Mono, Poly, Q};
pub use ratexpr::{
    collect_buckets, eq_under, is_free_of, zero_test, AlgError, FuchsMode, FuchsPolicy, RatExpr,
};
pub use vars::Var;
