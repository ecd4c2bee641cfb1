//! Brute-force dimensions of the filtration cells `R^p_q`.
//!
//! `R^p_q` is spanned by the fractions `m / ∏ε` with `m` a monomial of degree
//! at most `p` and `ε` a multiset of at most `q` forms. Multiplying every
//! spanning fraction by the common denominator `(∏Δ)^Q` (any `Q` at least
//! every multiplicity) is injective and lands in the polynomial ring, so
//! each dimension becomes the rank of a coefficient matrix. All generators
//! are homogeneous, hence ranks split over total degree.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{binomial, solve_in_span, EchelonBasis, Matrix, Monomial, Poly};
use crate::arrangement::{Arrangement, IntersectionLattice};
use crate::error::OracleError;
use crate::scalar::Scalar;

/// A multiset of form indices, sorted ascending, standing for `∏ε`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DenominatorTuple {
    indices: Vec<usize>,
}

impl DenominatorTuple {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        DenominatorTuple { indices }
    }

    pub fn empty() -> Self {
        DenominatorTuple { indices: Vec::new() }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Degree of `∏ε`.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn multiplicity(&self, form: usize) -> usize {
        self.indices.iter().filter(|&&i| i == form).count()
    }

    /// Distinct forms, for computing the flat `V(ε)`.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.indices.clone();
        s.dedup();
        s
    }

    /// All multisets of exactly `size` indices from `0..n`, lexicographic.
    pub fn all_of_size(n: usize, size: usize) -> Vec<DenominatorTuple> {
        fn rec(n: usize, start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<DenominatorTuple>) {
            if left == 0 {
                out.push(DenominatorTuple { indices: cur.clone() });
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(n, i, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 0, size, &mut Vec::with_capacity(size), &mut out);
        out
    }

    /// All multisets of at most `max_size` indices, by size then lexicographic.
    pub fn all_up_to(n: usize, max_size: usize) -> Vec<DenominatorTuple> {
        (0..=max_size).flat_map(|b| DenominatorTuple::all_of_size(n, b)).collect()
    }
}

/// The fraction `numerator / ∏ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionGenerator<T> {
    pub numerator: Poly<T>,
    pub denominator: DenominatorTuple,
}

impl<T: Scalar> FractionGenerator<T> {
    pub fn new(numerator: Poly<T>, denominator: DenominatorTuple) -> Self {
        FractionGenerator { numerator, denominator }
    }

    /// Numerator degree, with `0` for a zero numerator.
    pub fn numerator_degree(&self) -> usize {
        self.numerator.degree().unwrap_or(0) as usize
    }

    /// Renders with the forms of `arrangement`.
    pub fn display<'a>(&'a self, arrangement: &'a Arrangement<T>) -> impl fmt::Display + 'a {
        DisplayFraction {
            fraction: self,
            arrangement,
        }
    }
}

struct DisplayFraction<'a, T> {
    fraction: &'a FractionGenerator<T>,
    arrangement: &'a Arrangement<T>,
}

impl<T: Scalar> fmt::Display for DisplayFraction<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = &self.fraction.numerator;
        if num.len() > 1 {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        let den = &self.fraction.denominator;
        if den.is_empty() {
            return Ok(());
        }
        write!(f, " / ")?;
        let support = den.support();
        let single = support.len() == 1 && den.len() == 1;
        if !single {
            write!(f, "(")?;
        }
        for (k, i) in support.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            write!(f, "({})", self.arrangement.forms()[*i])?;
            let m = den.multiplicity(*i);
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        if !single {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Oracle dimensions on a grid `0..=max_p × 0..=max_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimTable {
    pub max_p: usize,
    pub max_q: usize,
    /// `dim R^p_q`, indexed `[p][q]`.
    pub dim_r: Vec<Vec<usize>>,
    /// `dim R̄^p_q`, indexed `[p][q]`.
    pub dim_rbar: Vec<Vec<usize>>,
}

impl DimTable {
    /// Builds from `dim R` values. Panics if a finite difference is
    /// negative, which would contradict the filtration being increasing.
    pub fn from_dim_r(dim_r: Vec<Vec<usize>>) -> Self {
        let max_p = dim_r.len() - 1;
        let max_q = dim_r[0].len() - 1;
        let at = |p: i64, q: i64| -> i64 {
            if p < 0 || q < 0 {
                0
            } else {
                dim_r[p as usize][q as usize] as i64
            }
        };
        let dim_rbar = (0..=max_p as i64)
            .map(|p| {
                (0..=max_q as i64)
                    .map(|q| {
                        let d = at(p, q) - at(p - 1, q) - at(p, q - 1) + at(p - 1, q - 1);
                        usize::try_from(d).expect("negative graded dimension")
                    })
                    .collect()
            })
            .collect();
        DimTable {
            max_p,
            max_q,
            dim_r,
            dim_rbar,
        }
    }
}

/// Per-flat piece of `dim R̄^p_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatDimRow {
    pub flat: usize,
    /// `dim S^p_X = C(p + dim X - 1, dim X - 1)`.
    pub dim_s: BigInt,
    pub dim_c: usize,
    pub contribution: BigInt,
}

/// `dim S^p` of the polynomial functions on a space of dimension `dim`.
pub fn dim_polynomials(p: usize, dim: usize) -> BigInt {
    if dim == 0 {
        return BigInt::from(u8::from(p == 0));
    }
    binomial((p + dim - 1) as i64, dim as i64 - 1)
}

/// Dimension oracle for one arrangement. Cell ranks are memoised; the memo
/// is write-once per cell and may be filled from several threads.
pub struct FiltrationOracle<'a, T> {
    arrangement: &'a Arrangement<T>,
    lattice: IntersectionLattice<T>,
    forms: Vec<Poly<T>>,
    memo: RwLock<HashMap<(usize, usize), usize>>,
}

impl<'a, T: Scalar> FiltrationOracle<'a, T> {
    pub fn new(arrangement: &'a Arrangement<T>) -> Self {
        Self::with_lattice(arrangement, IntersectionLattice::new(arrangement))
    }

    pub fn with_lattice(arrangement: &'a Arrangement<T>, lattice: IntersectionLattice<T>) -> Self {
        FiltrationOracle {
            arrangement,
            lattice,
            forms: arrangement.forms().iter().map(|f| f.to_poly()).collect(),
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn arrangement(&self) -> &Arrangement<T> {
        self.arrangement
    }

    pub fn lattice(&self) -> &IntersectionLattice<T> {
        &self.lattice
    }

    fn ell(&self) -> usize {
        self.arrangement.ell()
    }

    /// Spanning set of `R^p_q`: denominators by size then lexicographic,
    /// numerators graded-lex ascending.
    pub fn enumerate_generators(&self, p: usize, q: usize) -> Vec<FractionGenerator<T>> {
        let monomials = Monomial::up_to_degree(self.ell(), p as u32);
        DenominatorTuple::all_up_to(self.arrangement.len(), q)
            .into_iter()
            .flat_map(|den| {
                monomials.iter().map(move |m| {
                    FractionGenerator::new(Poly::monomial(m.clone(), T::one()), den.clone())
                })
            })
            .collect()
    }

    /// `(∏Δ)^clear / ∏ε`.
    fn cofactor(&self, den: &DenominatorTuple, clear: usize) -> Poly<T> {
        let mut acc = Poly::one(self.ell());
        for (i, form) in self.forms.iter().enumerate() {
            let m = den.multiplicity(i);
            assert!(m <= clear, "clearing exponent below a denominator multiplicity");
            acc = acc.mul(&form.pow((clear - m) as u32));
        }
        acc
    }

    /// The polynomial `fraction · (∏Δ)^clear`.
    pub fn cleared(&self, fraction: &FractionGenerator<T>, clear: usize) -> Poly<T> {
        fraction.numerator.mul(&self.cofactor(&fraction.denominator, clear))
    }

    /// Cleared generators of `R^p_q` (with clearing exponent `clear ≥ q`),
    /// grouped by total degree.
    fn cleared_cell_by_degree(&self, p: usize, q: usize, clear: usize) -> BTreeMap<u32, Vec<Poly<T>>> {
        let monomials = Monomial::up_to_degree(self.ell(), p as u32);
        let mut groups: BTreeMap<u32, Vec<Poly<T>>> = BTreeMap::new();
        for den in DenominatorTuple::all_up_to(self.arrangement.len(), q) {
            let cof = self.cofactor(&den, clear);
            let Some(base) = cof.degree() else { continue };
            for m in &monomials {
                groups.entry(base + m.degree()).or_default().push(cof.mul_monomial(m));
            }
        }
        groups
    }

    fn rank_uncached(&self, p: usize, q: usize) -> usize {
        self.cleared_cell_by_degree(p, q, q)
            .values()
            .map(|rows| Matrix::from_polys(rows).0.rank())
            .sum()
    }

    /// `dim R^p_q`, zero when either index is negative.
    pub fn dim_r(&self, p: i64, q: i64) -> usize {
        if p < 0 || q < 0 {
            return 0;
        }
        let key = (p as usize, q as usize);
        if let Some(&d) = self.memo.read().unwrap().get(&key) {
            return d;
        }
        let d = self.rank_uncached(key.0, key.1);
        let mut memo = self.memo.write().unwrap();
        let stored = *memo.entry(key).or_insert(d);
        assert_eq!(stored, d, "conflicting ranks for cell {key:?}");
        d
    }

    /// `dim R̄^p_q = dim R^p_q - dim R^{p-1}_q - dim R^p_{q-1} + dim R^{p-1}_{q-1}`.
    pub fn dim_rbar(&self, p: usize, q: usize) -> usize {
        let (p, q) = (p as i64, q as i64);
        let d = self.dim_r(p, q) as i64 - self.dim_r(p - 1, q) as i64 - self.dim_r(p, q - 1) as i64
            + self.dim_r(p - 1, q - 1) as i64;
        usize::try_from(d).expect("negative graded dimension")
    }

    /// Computes every cell of the grid, in parallel, and tabulates.
    pub fn dim_table(&self, max_p: usize, max_q: usize) -> DimTable {
        let cells: Vec<(usize, usize)> = (0..=max_p)
            .flat_map(|p| (0..=max_q).map(move |q| (p, q)))
            .collect();
        cells.par_iter().for_each(|&(p, q)| {
            self.dim_r(p as i64, q as i64);
        });
        let dim_r = (0..=max_p)
            .map(|p| (0..=max_q).map(|q| self.dim_r(p as i64, q as i64)).collect())
            .collect();
        DimTable::from_dim_r(dim_r)
    }

    /// `dim C_{q,X}`: rank of the reciprocals `1/∏ε` with `|ε| = q` and
    /// `V(ε) = X`.
    pub fn dim_c_flat(&self, q: usize, flat: usize) -> usize {
        let rows: Vec<Poly<T>> = DenominatorTuple::all_of_size(self.arrangement.len(), q)
            .into_iter()
            .filter(|den| self.lattice.flat_of(self.arrangement, &den.support()) == flat)
            .map(|den| self.cofactor(&den, q))
            .collect();
        Matrix::from_polys(&rows).0.rank()
    }

    /// Splits `dim R̄^p_q` over the flats as `dim S^p_X · dim C_{q,X}`.
    pub fn dims_by_flat(&self, p: usize, q: usize) -> Vec<FlatDimRow> {
        self.lattice
            .flats()
            .iter()
            .enumerate()
            .map(|(i, flat)| {
                let dim_s = dim_polynomials(p, flat.dim());
                let dim_c = self.dim_c_flat(q, i);
                FlatDimRow {
                    flat: i,
                    contribution: &dim_s * BigInt::from(dim_c),
                    dim_s,
                    dim_c,
                }
            })
            .collect()
    }

    /// Cleared generators of `R^{p-1}_q + R^p_{q-1}`, cleared with exponent
    /// `clear`.
    fn lower_cleared(&self, p: usize, q: usize, clear: usize) -> Vec<Poly<T>> {
        let mut rows = Vec::new();
        if p > 0 {
            rows.extend(self.cleared_cell_by_degree(p - 1, q, clear).into_values().flatten());
        }
        if q > 0 {
            rows.extend(self.cleared_cell_by_degree(p, q - 1, clear).into_values().flatten());
        }
        rows
    }

    /// A basis of `R̄^p_q` chosen greedily among the fractions `m/∏ε` with
    /// `deg m = p` and `|ε| = q`, in generator order.
    pub fn basis_rbar(&self, p: usize, q: usize) -> Vec<FractionGenerator<T>> {
        let degree = (p + q * self.arrangement.len() - q) as u32;
        let columns = Monomial::of_degree(self.ell(), degree);
        let to_row = |poly: &Poly<T>| -> Vec<T> { Matrix::from_polys_on(std::slice::from_ref(poly), &columns).row(0).to_vec() };

        let mut span = EchelonBasis::new(columns.len());
        // the lower cells are graded, so only their degree-`degree` part
        // can meet the candidates
        for row in self.lower_cleared(p, q, q) {
            if row.degree() == Some(degree) {
                span.insert(to_row(&row));
            }
        }
        let mut basis = Vec::new();
        let monomials = Monomial::of_degree(self.ell(), p as u32);
        for den in DenominatorTuple::all_of_size(self.arrangement.len(), q) {
            let cof = self.cofactor(&den, q);
            for m in &monomials {
                if span.insert(to_row(&cof.mul_monomial(m))) {
                    basis.push(FractionGenerator::new(Poly::monomial(m.clone(), T::one()), den.clone()));
                }
            }
        }
        basis
    }

    fn check_in_bounds(&self, f: &FractionGenerator<T>, p: usize, q: usize) -> Result<(), OracleError> {
        if f.numerator.nvars() != self.ell() {
            return Err(OracleError::Arity {
                expected: self.ell(),
                found: f.numerator.nvars(),
            });
        }
        let degree = f.numerator_degree();
        if degree > p || f.denominator.len() > q || f.denominator.indices().iter().any(|&i| i >= self.arrangement.len()) {
            return Err(OracleError::OutsideCellBounds {
                degree,
                factors: f.denominator.len(),
                p,
                q,
            });
        }
        Ok(())
    }

    /// Coordinates of the class of `phi` in `R̄^p_q` against `basis`: the
    /// unique `c` with `phi - Σ c_i basis_i ∈ R^{p-1}_q + R^p_{q-1}`.
    pub fn decompose_class(
        &self,
        phi: &FractionGenerator<T>,
        p: usize,
        q: usize,
        basis: &[FractionGenerator<T>],
    ) -> Result<Vec<T>, OracleError> {
        self.decompose_sum(std::slice::from_ref(phi), p, q, basis)
    }

    /// [`Self::decompose_class`] for a formal sum of fractions.
    pub fn decompose_sum(
        &self,
        phi: &[FractionGenerator<T>],
        p: usize,
        q: usize,
        basis: &[FractionGenerator<T>],
    ) -> Result<Vec<T>, OracleError> {
        for f in phi.iter().chain(basis) {
            self.check_in_bounds(f, p, q)?;
        }
        let mut rows: Vec<Poly<T>> = basis.iter().map(|b| self.cleared(b, q)).collect();
        rows.extend(self.lower_cleared(p, q, q));
        let target = phi
            .iter()
            .fold(Poly::zero(self.ell()), |acc, f| acc.add(&self.cleared(f, q)));
        let mut all = rows.clone();
        all.push(target.clone());
        let (_, columns) = Matrix::from_polys(&all);

        let k = basis.len();
        let stacked = Matrix::from_polys_on(&rows, &columns);
        independent_mod_lower(&stacked, k)?;
        let target_row = Matrix::from_polys_on(std::slice::from_ref(&target), &columns);
        let coeffs = solve_in_span(target_row.row(0), &stacked).ok_or(OracleError::NotInCell { p, q })?;
        Ok(coeffs.into_iter().take(k).collect())
    }

    /// Checks that the classes of `basis` are linearly independent in
    /// `R̄^p_q`.
    pub fn verify_basis(&self, p: usize, q: usize, basis: &[FractionGenerator<T>]) -> Result<(), OracleError> {
        for f in basis {
            self.check_in_bounds(f, p, q)?;
        }
        let mut rows: Vec<Poly<T>> = basis.iter().map(|b| self.cleared(b, q)).collect();
        rows.extend(self.lower_cleared(p, q, q));
        independent_mod_lower(&Matrix::from_polys(&rows).0, basis.len())
    }

    /// Whether `fraction ∈ R^p_q`.
    pub fn cell_contains(&self, p: usize, q: usize, fraction: &FractionGenerator<T>) -> bool {
        let clear = q.max(fraction.denominator.len());
        let rows: Vec<Poly<T>> = self.cleared_cell_by_degree(p, q, clear).into_values().flatten().collect();
        let target = self.cleared(fraction, clear);
        let mut all = rows.clone();
        all.push(target);
        let (m, _) = Matrix::from_polys(&all);
        let (without, _) = Matrix::from_polys(&rows);
        m.rank() == without.rank()
    }

    /// Splits `denominator` into forms of the arrangement by trial division in
    /// form order, returning the multiset and the leftover constant.
    pub fn factor_over_forms(&self, denominator: &Poly<T>) -> Result<(DenominatorTuple, T), OracleError> {
        if denominator.nvars() != self.ell() {
            return Err(OracleError::Arity {
                expected: self.ell(),
                found: denominator.nvars(),
            });
        }
        let mut rest = denominator.clone();
        let mut indices = Vec::new();
        for (i, form) in self.forms.iter().enumerate() {
            while rest.degree().is_some_and(|d| d > 0) {
                match rest.div_exact(form) {
                    Some(q) => {
                        indices.push(i);
                        rest = q;
                    }
                    None => break,
                }
            }
        }
        match rest.as_constant() {
            Some(c) if !c.is_zero() => Ok((DenominatorTuple::new(indices), c)),
            _ => Err(OracleError::FactorOverDelta),
        }
    }

    /// `numerator / denominator` with the denominator factored over the
    /// arrangement and its constant folded into the numerator.
    pub fn fraction(&self, numerator: Poly<T>, denominator: &Poly<T>) -> Result<FractionGenerator<T>, OracleError> {
        if numerator.nvars() != self.ell() {
            return Err(OracleError::Arity {
                expected: self.ell(),
                found: numerator.nvars(),
            });
        }
        let (den, c) = self.factor_over_forms(denominator)?;
        Ok(FractionGenerator::new(numerator.scale(&(T::one() / c)), den))
    }
}

// The first `k` rows must stay independent modulo the span of the rest.
fn independent_mod_lower<T: Scalar>(stacked: &Matrix<T>, k: usize) -> Result<(), OracleError> {
    let lower = Matrix::from_rows(stacked.cols(), stacked.row_vectors().split_off(k));
    let lower_rank = lower.rank();
    let rank = stacked.rank();
    if rank != lower_rank + k {
        return Err(OracleError::BasisNotIndependent {
            rank: rank - lower_rank,
            len: k,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn lin(c: &[i64]) -> Poly<Rational> {
        Poly::linear(&c.iter().map(|&v| Rational::from_i64(v)).collect::<Vec<_>>())
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(DenominatorTuple::all_up_to(3, 2).len(), 10);
        assert_eq!(DenominatorTuple::all_of_size(4, 3).len(), 20);
        assert_eq!(DenominatorTuple::all_of_size(0, 0).len(), 1);
        assert_eq!(DenominatorTuple::all_of_size(0, 2).len(), 0);
        let two = DenominatorTuple::all_of_size(2, 2);
        assert_eq!(
            two.iter().map(|d| d.indices().to_vec()).collect::<Vec<_>>(),
            vec![vec![0, 0], vec![0, 1], vec![1, 1]]
        );
    }

    #[test]
    fn generator_enumeration() {
        let h = Arrangement::<Rational>::boolean(1);
        let o = FiltrationOracle::new(&h);
        let g = o.enumerate_generators(1, 1);
        let shown: Vec<String> = g.iter().map(|f| f.display(&h).to_string()).collect();
        assert_eq!(shown, vec!["1", "x1", "1 / (x1)", "x1 / (x1)"]);

        let braid = Arrangement::<Rational>::braid(3);
        assert_eq!(FiltrationOracle::new(&braid).enumerate_generators(1, 2).len(), 40);
        assert_eq!(FiltrationOracle::new(&braid).enumerate_generators(0, 0).len(), 1);
    }

    #[test]
    fn single_hyperplane_dims() {
        let h = Arrangement::<Rational>::boolean(1);
        let o = FiltrationOracle::new(&h);
        for p in 0..4 {
            for q in 0..4 {
                assert_eq!(o.dim_r(p, q), (p + q + 1) as usize);
            }
        }
        assert_eq!(o.dim_r(-1, 2), 0);
        assert!(o.basis_rbar(1, 1).is_empty());
        assert_eq!(o.basis_rbar(0, 0).len(), 1);
    }

    #[test]
    fn braid_cells() {
        let a = Arrangement::<Rational>::braid(3);
        let o = FiltrationOracle::new(&a);
        assert_eq!(o.dim_r(0, 0), 1);
        assert_eq!(o.dim_r(1, 2), 26);
        assert_eq!(o.dim_rbar(1, 2), 8);
        assert_eq!(o.dim_rbar(0, 2), 5);
        assert_eq!(o.basis_rbar(1, 2).len(), 8);
    }

    #[test]
    fn boolean_two_cell() {
        let a = Arrangement::<Rational>::boolean(2);
        let o = FiltrationOracle::new(&a);
        assert_eq!(o.dim_r(1, 1), 7);
        assert_eq!(o.dim_r(0, 1), 3);
        assert_eq!(o.dim_r(1, 0), 3);
        assert_eq!(o.dim_rbar(1, 1), 2);
    }

    #[test]
    fn c_dimensions() {
        let a = Arrangement::<Rational>::braid(3);
        let o = FiltrationOracle::new(&a);
        assert_eq!(o.dim_c_flat(2, 4), 2);
        assert_eq!(o.dim_c_flat(3, 1), 1);
        assert_eq!(o.dim_c_flat(2, 0), 0);
        assert_eq!(o.dim_c_flat(0, 0), 1);
    }

    #[test]
    fn per_flat_split() {
        let a = Arrangement::<Rational>::braid(3);
        let o = FiltrationOracle::new(&a);
        let rows = o.dims_by_flat(1, 2);
        let contributions: Vec<i64> = rows.iter().map(|r| i64::try_from(&r.contribution).unwrap()).collect();
        assert_eq!(contributions, vec![0, 2, 2, 2, 2]);
        let origin = o.dims_by_flat(0, 0);
        assert_eq!(origin[0].contribution, BigInt::from(1));
        assert!(origin[1..].iter().all(|r| r.contribution == BigInt::from(0)));
    }

    #[test]
    fn factoring_denominators() {
        let a = Arrangement::<Rational>::braid(3);
        let o = FiltrationOracle::new(&a);
        // forms: x1-x2, x1-x3, x2-x3
        let den = lin(&[1, 0, -1]).mul(&lin(&[0, -1, 1])).scale(&Rational::from_i64(2));
        let (tuple, c) = o.factor_over_forms(&den).unwrap();
        assert_eq!(tuple.indices(), &[1, 2]);
        assert_eq!(c, Rational::from_i64(-2));
        assert_eq!(o.factor_over_forms(&lin(&[1, 1, 0])), Err(OracleError::FactorOverDelta));
        assert_eq!(o.factor_over_forms(&Poly::zero(3)), Err(OracleError::FactorOverDelta));
    }

    #[test]
    fn decompose_rejects_out_of_bounds() {
        let a = Arrangement::<Rational>::braid(3);
        let o = FiltrationOracle::new(&a);
        let phi = FractionGenerator::new(lin(&[1, 0, 0]).mul(&lin(&[0, 1, 0])), DenominatorTuple::empty());
        assert!(matches!(
            o.decompose_class(&phi, 1, 2, &[]),
            Err(OracleError::OutsideCellBounds { .. })
        ));
    }

    #[test]
    fn dependent_basis_is_rejected() {
        let a = Arrangement::<Rational>::braid(3);
        let o = FiltrationOracle::new(&a);
        let b = o.basis_rbar(1, 2);
        let dup = vec![b[0].clone(), b[0].clone()];
        assert!(matches!(
            o.decompose_class(&b[0], 1, 2, &dup),
            Err(OracleError::BasisNotIndependent { .. })
        ));
    }
}
