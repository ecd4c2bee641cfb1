use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Sign of the exponent in `(1 - u)^(±c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerSign {
    Positive,
    Negative,
}

/// Coefficients of `u^0..=u^order` in `(1 - u)^(±c)`.
///
/// For the negative power the k-th coefficient is `C(k + c - 1, c - 1)`
/// (and `(1 - u)^0 = 1`). For the positive power it is `(-1)^k C(c, k)`.
pub fn binomial_series_coeffs(c: u64, sign: PowerSign, order: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(order + 1);
    let mut cur = BigInt::one();
    for k in 0..=order {
        out.push(cur.clone());
        let k = k as u64;
        cur = match sign {
            // C(k+c, c-1) = C(k+c-1, c-1) * (k + c) / (k + 1)
            PowerSign::Negative => cur * BigInt::from(k + c) / BigInt::from(k + 1),
            // (-1)^(k+1) C(c, k+1) = -(-1)^k C(c, k) * (c - k) / (k + 1)
            PowerSign::Positive => {
                if k >= c {
                    BigInt::zero()
                } else {
                    -cur * BigInt::from(c - k) / BigInt::from(k + 1)
                }
            }
        };
    }
    out
}

/// Coefficients of `(1 - u)^e` for any integer `e`.
pub fn one_minus_pow(e: i64, order: usize) -> Vec<BigInt> {
    if e >= 0 {
        binomial_series_coeffs(e as u64, PowerSign::Positive, order)
    } else {
        binomial_series_coeffs(e.unsigned_abs(), PowerSign::Negative, order)
    }
}

/// Binomial coefficient with `C(n, k) = 0` outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Integer polynomial in one variable `t`, ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        UniPoly::from_i64(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Exact division by `1 + d t`, `None` on a nonzero remainder.
    pub fn div_linear(&self, d: &BigInt) -> Option<UniPoly> {
        let n = self.coeffs.len();
        if n == 0 {
            return Some(self.clone());
        }
        // q_0 = a_0, q_k = a_k - d q_{k-1}
        let mut q = Vec::with_capacity(n);
        let mut prev = BigInt::zero();
        for a in &self.coeffs {
            let qk = a - d * &prev;
            q.push(qk.clone());
            prev = qk;
        }
        // the last quotient coefficient must vanish
        if !q.pop().unwrap().is_zero() {
            return None;
        }
        Some(UniPoly::new(q))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                1 => write!(f, "{abs} t")?,
                _ => write!(f, "{abs} t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Truncated power series in `(s, t)`: coefficient `(p, q)` of `s^p t^q` for
/// `0 ≤ p ≤ max_p`, `0 ≤ q ≤ max_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BivariateSeries {
    max_p: usize,
    max_q: usize,
    coeffs: Vec<BigInt>,
}

impl BivariateSeries {
    pub fn zero(max_p: usize, max_q: usize) -> Self {
        BivariateSeries {
            max_p,
            max_q,
            coeffs: vec![BigInt::zero(); (max_p + 1) * (max_q + 1)],
        }
    }

    pub fn one(max_p: usize, max_q: usize) -> Self {
        let mut s = BivariateSeries::zero(max_p, max_q);
        s[(0, 0)] = BigInt::one();
        s
    }

    /// Product `f(s) g(t)` of two univariate series.
    pub fn outer(s_part: &[BigInt], t_part: &[BigInt], max_p: usize, max_q: usize) -> Self {
        let mut out = BivariateSeries::zero(max_p, max_q);
        for (p, a) in s_part.iter().take(max_p + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (q, b) in t_part.iter().take(max_q + 1).enumerate() {
                out[(p, q)] = a * b;
            }
        }
        out
    }

    /// Builds from a grid indexed `[p][q]`.
    pub fn from_grid(grid: Vec<Vec<BigInt>>) -> Self {
        let max_p = grid.len().checked_sub(1).expect("grid has at least one row");
        let max_q = grid[0].len().checked_sub(1).expect("grid has at least one column");
        let mut out = BivariateSeries::zero(max_p, max_q);
        for (p, row) in grid.into_iter().enumerate() {
            assert_eq!(row.len(), max_q + 1, "ragged grid");
            for (q, v) in row.into_iter().enumerate() {
                out[(p, q)] = v;
            }
        }
        out
    }

    pub fn max_p(&self) -> usize {
        self.max_p
    }

    pub fn max_q(&self) -> usize {
        self.max_q
    }

    pub fn get(&self, p: usize, q: usize) -> Option<&BigInt> {
        (p <= self.max_p && q <= self.max_q).then(|| &self.coeffs[p * (self.max_q + 1) + q])
    }

    /// Row of fixed `p` (the `s^p` coefficients as a series in `t`).
    pub fn s_row(&self, p: usize) -> Vec<BigInt> {
        (0..=self.max_q).map(|q| self[(p, q)].clone()).collect()
    }

    /// Column of fixed `q` (the `t^q` coefficients as a series in `s`).
    pub fn t_column(&self, q: usize) -> Vec<BigInt> {
        (0..=self.max_p).map(|p| self[(p, q)].clone()).collect()
    }

    pub fn add_assign(&mut self, other: &BivariateSeries) {
        assert_eq!((self.max_p, self.max_q), (other.max_p, other.max_q), "truncation mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn scale(&self, c: &BigInt) -> BivariateSeries {
        BivariateSeries {
            max_p: self.max_p,
            max_q: self.max_q,
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    /// Truncated product.
    pub fn mul(&self, other: &BivariateSeries) -> BivariateSeries {
        assert_eq!((self.max_p, self.max_q), (other.max_p, other.max_q), "truncation mismatch");
        let mut out = BivariateSeries::zero(self.max_p, self.max_q);
        for p1 in 0..=self.max_p {
            for q1 in 0..=self.max_q {
                let a = &self[(p1, q1)];
                if a.is_zero() {
                    continue;
                }
                for p2 in 0..=self.max_p - p1 {
                    for q2 in 0..=self.max_q - q1 {
                        let b = &other[(p2, q2)];
                        if !b.is_zero() {
                            out[(p1 + p2, q1 + q2)] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Two-dimensional prefix sums: entry `(p, q)` becomes
    /// `Σ_{a ≤ p, b ≤ q}` of the original entries.
    pub fn partial_sums(&self) -> BivariateSeries {
        let mut out = self.clone();
        for p in 0..=self.max_p {
            for q in 0..=self.max_q {
                let mut v = self[(p, q)].clone();
                if p > 0 {
                    v += &out[(p - 1, q)];
                }
                if q > 0 {
                    v += &out[(p, q - 1)];
                }
                if p > 0 && q > 0 {
                    v -= &out[(p - 1, q - 1)];
                }
                out[(p, q)] = v;
            }
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Row-major `[p][q]` grid.
    pub fn grid(&self) -> Vec<Vec<BigInt>> {
        (0..=self.max_p).map(|p| self.s_row(p)).collect()
    }
}

impl std::ops::Index<(usize, usize)> for BivariateSeries {
    type Output = BigInt;

    fn index(&self, (p, q): (usize, usize)) -> &BigInt {
        assert!(p <= self.max_p && q <= self.max_q, "index ({p}, {q}) outside truncation");
        &self.coeffs[p * (self.max_q + 1) + q]
    }
}

impl std::ops::IndexMut<(usize, usize)> for BivariateSeries {
    fn index_mut(&mut self, (p, q): (usize, usize)) -> &mut BigInt {
        assert!(p <= self.max_p && q <= self.max_q, "index ({p}, {q}) outside truncation");
        &mut self.coeffs[p * (self.max_q + 1) + q]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|b| i64::try_from(b).unwrap()).collect()
    }

    #[test]
    fn negative_powers() {
        assert_eq!(ints(&binomial_series_coeffs(3, PowerSign::Negative, 4)), vec![1, 3, 6, 10, 15]);
        assert_eq!(binomial_series_coeffs(3, PowerSign::Negative, 2)[2], BigInt::from(6));
        assert_eq!(ints(&binomial_series_coeffs(0, PowerSign::Negative, 3)), vec![1, 0, 0, 0]);
        assert_eq!(ints(&binomial_series_coeffs(1, PowerSign::Negative, 3)), vec![1, 1, 1, 1]);
        for c in 0..6 {
            assert_eq!(binomial_series_coeffs(c, PowerSign::Negative, 0), vec![BigInt::one()]);
        }
    }

    #[test]
    fn positive_powers() {
        assert_eq!(ints(&binomial_series_coeffs(2, PowerSign::Positive, 4)), vec![1, -2, 1, 0, 0]);
        assert_eq!(ints(&binomial_series_coeffs(0, PowerSign::Positive, 2)), vec![1, 0, 0]);
    }

    #[test]
    fn negative_power_matches_binomial() {
        for c in 1..6i64 {
            let got = binomial_series_coeffs(c as u64, PowerSign::Negative, 8);
            for (k, v) in got.iter().enumerate() {
                assert_eq!(*v, binomial(k as i64 + c - 1, c - 1));
            }
        }
    }

    #[test]
    fn inverse_powers_multiply_to_one() {
        let a = UniPoly::new(one_minus_pow(3, 6));
        let b = UniPoly::new(one_minus_pow(-3, 6));
        let prod = a.mul(&b);
        assert_eq!(prod.coeff(0), BigInt::one());
        for k in 1..=6 {
            assert_eq!(prod.coeff(k), BigInt::zero());
        }
    }

    #[test]
    fn unipoly_display_and_division() {
        let p = UniPoly::from_i64(&[1, 3, 2]);
        assert_eq!(p.to_string(), "1 + 3 t + 2 t^2");
        assert_eq!(UniPoly::from_i64(&[1, -2]).to_string(), "1 - 2 t");
        assert_eq!(UniPoly::from_i64(&[]).to_string(), "0");
        assert_eq!(p.div_linear(&BigInt::from(2)), Some(UniPoly::from_i64(&[1, 1])));
        assert_eq!(p.div_linear(&BigInt::from(3)), None);
    }

    #[test]
    fn prefix_sums() {
        let s = BivariateSeries::from_grid(vec![
            vec![1.into(), 2.into()],
            vec![3.into(), 4.into()],
        ]);
        let c = s.partial_sums();
        assert_eq!(c.grid(), vec![vec![BigInt::from(1), 3.into()], vec![4.into(), 10.into()]]);
    }
}
