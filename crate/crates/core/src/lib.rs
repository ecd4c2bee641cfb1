//! Bigraded Poincaré series of the algebra of rational functions regular
//! outside a central hyperplane arrangement.
//!
//! Two independent routes to the same numbers:
//!
//! * [`formulas`] evaluates the closed forms from the intersection lattice
//!   and its Möbius function;
//! * [`oracle`] builds spanning sets of the filtration cells `R^p_q` and
//!   takes exact ranks.
//!
//! Everything is generic over an exact [`Scalar`] field; the aliases below
//! fix it to arbitrary-precision rationals.

pub mod algebra;
pub mod arrangement;
pub mod error;
pub mod formulas;
pub mod oracle;
pub mod scalar;

pub use algebra::{BivariateSeries, Monomial, UniPoly};
pub use arrangement::{flat_leq, lattice_by_subsets, Flat, IntersectionLattice, LinearForm};
pub use error::{AlgebraError, ArrangementError, OracleError};
pub use formulas::{
    c_series_per_flat, c_series_total, cumulative_series, poincare_from_exponents, poincare_polynomial,
    rbar_series, rbar_series_par, series_from_exponents, try_factor_exponents, ExponentsProfile, FlatSeriesRow,
};
pub use oracle::{DenominatorTuple, DimTable, FiltrationOracle, FlatDimRow};
pub use scalar::Scalar;

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
/// Sparse polynomial over [`Rational`].
pub type MultiPoly = algebra::Poly<Rational>;
/// Dense matrix over [`Rational`].
pub type RationalMatrix = algebra::Matrix<Rational>;
pub type Arrangement = arrangement::Arrangement<Rational>;
pub type Lattice = IntersectionLattice<Rational>;
pub type FractionGenerator = oracle::FractionGenerator<Rational>;
pub type Oracle<'a> = FiltrationOracle<'a, Rational>;
