//! Closed-form generating functions attached to an intersection lattice.
//!
//! Everything here is driven by the Möbius values and codimensions alone.
//! The bigraded series is the substitution `u = t(1-s)/(1-t)` into the
//! Poincaré polynomial, divided by `(1-s)^ℓ`; each lattice term
//! `μ(X)(-u)^c` expands as the product of a pure `s`-series and a pure
//! `t`-series, so the whole grid is a sum of outer products.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::{binomial, one_minus_pow, BivariateSeries, UniPoly};
use crate::arrangement::IntersectionLattice;
use crate::scalar::Scalar;

/// Exponents `d_1 ≤ … ≤ d_ℓ` with `Poin(t) = ∏ (1 + d_i t)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentsProfile(pub Vec<u64>);

impl ExponentsProfile {
    pub fn ell(&self) -> usize {
        self.0.len()
    }

    /// `0, 1, …, ℓ-1`, the exponents of the braid arrangement.
    pub fn braid(ell: usize) -> Self {
        ExponentsProfile((0..ell as u64).collect())
    }
}

/// `Σ_X μ(X) (-t)^{codim X}`.
pub fn poincare_polynomial<T: Scalar>(lattice: &IntersectionLattice<T>) -> UniPoly {
    let mut coeffs = vec![BigInt::zero(); lattice.ell() + 1];
    for (flat, &mu) in lattice.flats().iter().zip(lattice.moebius()) {
        let c = flat.codim();
        let sign = if c % 2 == 0 { mu } else { -mu };
        coeffs[c] += sign;
    }
    UniPoly::new(coeffs)
}

/// `∏ (1 + d_i t)`.
pub fn poincare_from_exponents(exps: &ExponentsProfile) -> UniPoly {
    exps.0
        .iter()
        .fold(UniPoly::one(), |acc, &d| acc.mul(&UniPoly::from_i64(&[1, d as i64])))
}

/// Inverts [`poincare_from_exponents`]: nonnegative integers `d_i`, sorted
/// ascending and padded with zeros to length `ell`, or `None` when the
/// polynomial is not such a product.
pub fn try_factor_exponents(p: &UniPoly, ell: usize) -> Option<ExponentsProfile> {
    if p.coeff(0) != BigInt::one() {
        return None;
    }
    let degree = p.degree().unwrap_or(0);
    if degree > ell {
        return None;
    }
    let mut rest = p.clone();
    let mut found = Vec::new();
    while rest.degree().unwrap_or(0) > 0 {
        // each nonzero d_i divides the leading coefficient ∏ d_i
        let lead = rest.coeffs().last().cloned().unwrap();
        if lead.is_negative() {
            return None;
        }
        let mut next = None;
        let mut d = BigInt::one();
        while d <= lead {
            if (&lead % &d).is_zero() {
                if let Some(q) = rest.div_linear(&d) {
                    next = Some((d.clone(), q));
                    break;
                }
            }
            d += 1;
        }
        let (d, q) = next?;
        found.push(u64::try_from(&d).ok()?);
        rest = q;
    }
    let mut exps = vec![0u64; ell - found.len()];
    exps.extend(found);
    exps.sort_unstable();
    Some(ExponentsProfile(exps))
}

/// The grid of one lattice term `(-1)^c μ t^c (1-s)^(c-ℓ+shift_s) (1-t)^(-c+shift_t)`.
fn lattice_term(codim: usize, mu: i64, ell: usize, shift_s: i64, shift_t: i64, max_p: usize, max_q: usize) -> BivariateSeries {
    let c = codim as i64;
    let s_part = one_minus_pow(c - ell as i64 + shift_s, max_p);
    let base_t = one_minus_pow(-c + shift_t, max_q);
    let mut t_part = vec![BigInt::zero(); max_q + 1];
    if codim <= max_q {
        t_part[codim..].clone_from_slice(&base_t[..=max_q - codim]);
    }
    let sign = if codim.is_multiple_of(2) { mu } else { -mu };
    BivariateSeries::outer(&s_part, &t_part, max_p, max_q).scale(&BigInt::from(sign))
}

fn substituted_series<T: Scalar>(
    lattice: &IntersectionLattice<T>,
    shift_s: i64,
    shift_t: i64,
    max_p: usize,
    max_q: usize,
) -> BivariateSeries {
    let ell = lattice.ell();
    let mut out = BivariateSeries::zero(max_p, max_q);
    for (flat, &mu) in lattice.flats().iter().zip(lattice.moebius()) {
        out.add_assign(&lattice_term(flat.codim(), mu, ell, shift_s, shift_t, max_p, max_q));
    }
    out
}

/// `Poin(R̄, s, t) = (1-s)^{-ℓ} Poin(𝒜, t(1-s)/(1-t))`, truncated
/// inclusively at `(max_p, max_q)`.
pub fn rbar_series<T: Scalar>(lattice: &IntersectionLattice<T>, max_p: usize, max_q: usize) -> BivariateSeries {
    substituted_series(lattice, 0, 0, max_p, max_q)
}

/// [`rbar_series`] with the per-flat grids computed in parallel.
pub fn rbar_series_par<T: Scalar>(lattice: &IntersectionLattice<T>, max_p: usize, max_q: usize) -> BivariateSeries {
    let ell = lattice.ell();
    lattice
        .flats()
        .par_iter()
        .zip(lattice.moebius().par_iter())
        .map(|(flat, &mu)| lattice_term(flat.codim(), mu, ell, 0, 0, max_p, max_q))
        .reduce(
            || BivariateSeries::zero(max_p, max_q),
            |mut a, b| {
                a.add_assign(&b);
                a
            },
        )
}

/// `Σ dim R^p_q s^p t^q = (1-s)^{-ℓ-1} (1-t)^{-1} Poin(𝒜, t(1-s)/(1-t))`.
///
/// Computed from the product formula directly; equals
/// `rbar_series(..).partial_sums()`.
pub fn cumulative_series<T: Scalar>(lattice: &IntersectionLattice<T>, max_p: usize, max_q: usize) -> BivariateSeries {
    substituted_series(lattice, -1, -1, max_p, max_q)
}

/// `(1-s)^{-ℓ} (1-t)^{-ℓ} ∏ (1 + (d_i - 1 - s d_i) t)`.
pub fn series_from_exponents(exps: &ExponentsProfile, max_p: usize, max_q: usize) -> BivariateSeries {
    let ell = exps.ell() as i64;
    let mut acc = BivariateSeries::outer(&one_minus_pow(-ell, max_p), &one_minus_pow(-ell, max_q), max_p, max_q);
    for &d in &exps.0 {
        let d = d as i64;
        let mut factor = BivariateSeries::one(max_p, max_q);
        if max_q >= 1 {
            factor[(0, 1)] = BigInt::from(d - 1);
            if max_p >= 1 {
                factor[(1, 1)] = BigInt::from(-d);
            }
        }
        acc = acc.mul(&factor);
    }
    acc
}

/// Dimensions `dim C_{q,X}` for one flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatSeriesRow {
    pub flat: usize,
    pub codim: usize,
    pub moebius: i64,
    /// Entry `q` for `q = 0..=max_q`.
    pub coeffs: Vec<BigInt>,
}

/// `dim C_{q,X} = (-1)^c μ(X) C(q-1, c-1)` for `q ≥ c ≥ 1`; the flat `V`
/// contributes only the constants.
pub fn c_series_per_flat<T: Scalar>(lattice: &IntersectionLattice<T>, max_q: usize) -> Vec<FlatSeriesRow> {
    lattice
        .flats()
        .iter()
        .zip(lattice.moebius())
        .enumerate()
        .map(|(i, (flat, &mu))| {
            let c = flat.codim();
            let signed = BigInt::from(if c % 2 == 0 { mu } else { -mu });
            let coeffs = (0..=max_q)
                .map(|q| {
                    if c == 0 {
                        if q == 0 { BigInt::one() } else { BigInt::zero() }
                    } else if q < c {
                        BigInt::zero()
                    } else {
                        &signed * binomial(q as i64 - 1, c as i64 - 1)
                    }
                })
                .collect();
            FlatSeriesRow {
                flat: i,
                codim: c,
                moebius: mu,
                coeffs,
            }
        })
        .collect()
}

/// `Poin(C, t) = Poin(𝒜, t/(1-t))`, as the sum of the per-flat rows.
pub fn c_series_total<T: Scalar>(lattice: &IntersectionLattice<T>, max_q: usize) -> Vec<BigInt> {
    let mut total = vec![BigInt::zero(); max_q + 1];
    for row in c_series_per_flat(lattice, max_q) {
        for (acc, v) in total.iter_mut().zip(row.coeffs) {
            *acc += v;
        }
    }
    total
}
