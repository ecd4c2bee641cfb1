//! Exact arithmetic substrate: monomials, sparse polynomials, dense matrices
//! and truncated power series.

pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod series;

pub use matrix::{solve_in_span, EchelonBasis, Matrix, Rref};
pub use monomial::Monomial;
pub use poly::{poly_arith, Poly, PolyOp};
pub use series::{binomial, binomial_series_coeffs, one_minus_pow, BivariateSeries, PowerSign, UniPoly};
