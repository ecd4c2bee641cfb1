//! Central arrangements, their intersection lattice and Möbius function.
//!
//! A flat `X` is stored through the row space of the linear forms vanishing
//! on it, in canonical reduced row-echelon form. Two flats are equal exactly
//! when their RREF matrices are equal, and `X ≤ Y` (reverse inclusion of
//! subspaces) is containment of row spaces.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::algebra::{Matrix, Poly};
use crate::error::ArrangementError;
use crate::scalar::Scalar;

/// A nonzero linear form scaled so that its first nonzero coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> LinearForm<T> {
    /// Canonically rescales `coeffs`; `None` when all are zero.
    pub fn new(coeffs: Vec<T>) -> Option<Self> {
        let lead = coeffs.iter().find(|c| !c.is_zero())?.clone();
        Some(LinearForm {
            coeffs: coeffs.into_iter().map(|c| c / lead.clone()).collect(),
        })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn ell(&self) -> usize {
        self.coeffs.len()
    }

    pub fn to_poly(&self) -> Poly<T> {
        Poly::linear(&self.coeffs)
    }
}

impl<T: Scalar> fmt::Display for LinearForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// A central arrangement: the hyperplanes `ker α` for `α` in an ordered
/// list of pairwise non-proportional forms on an `ell`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement<T> {
    ell: usize,
    forms: Vec<LinearForm<T>>,
}

impl<T: Scalar> Arrangement<T> {
    /// Validates and canonically scales `raw`, keeping input order.
    pub fn new(ell: usize, raw: Vec<Vec<T>>) -> Result<Self, ArrangementError> {
        let mut forms: Vec<LinearForm<T>> = Vec::with_capacity(raw.len());
        for (index, v) in raw.into_iter().enumerate() {
            if v.len() != ell {
                return Err(ArrangementError::WrongLength {
                    index,
                    expected: ell,
                    found: v.len(),
                });
            }
            let form = LinearForm::new(v).ok_or(ArrangementError::ZeroForm { index })?;
            if let Some(first) = forms.iter().position(|f| *f == form) {
                return Err(ArrangementError::ProportionalPair { first, second: index });
            }
            forms.push(form);
        }
        Ok(Arrangement { ell, forms })
    }

    /// Hyperplanes `x_i = x_j`, pairs `i < j` in lexicographic order.
    pub fn braid(ell: usize) -> Self {
        let mut raw = Vec::new();
        for i in 0..ell {
            for j in i + 1..ell {
                let mut v = vec![T::zero(); ell];
                v[i] = T::one();
                v[j] = -T::one();
                raw.push(v);
            }
        }
        Arrangement::new(ell, raw).expect("braid forms are pairwise independent")
    }

    /// The coordinate hyperplanes.
    pub fn boolean(ell: usize) -> Self {
        let raw = (0..ell)
            .map(|i| {
                let mut v = vec![T::zero(); ell];
                v[i] = T::one();
                v
            })
            .collect();
        Arrangement::new(ell, raw).expect("coordinate forms are distinct")
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn forms(&self) -> &[LinearForm<T>] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Canonical RREF of the span of the selected forms (repeats allowed).
    pub fn span_rref(&self, indices: &[usize]) -> Matrix<T> {
        let rows = indices.iter().map(|&i| self.forms[i].coeffs.clone()).collect();
        Matrix::from_rows(self.ell, rows).rref().matrix
    }
}

/// An element of the intersection lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flat<T> {
    rref: Matrix<T>,
    forms: Vec<usize>,
}

impl<T: Scalar> Flat<T> {
    /// Canonical RREF whose row space is the span of the forms vanishing on
    /// the flat.
    pub fn rref(&self) -> &Matrix<T> {
        &self.rref
    }

    pub fn codim(&self) -> usize {
        self.rref.rows()
    }

    pub fn dim(&self) -> usize {
        self.rref.cols() - self.rref.rows()
    }

    /// Indices of the forms of the arrangement vanishing on this flat.
    pub fn forms(&self) -> &[usize] {
        &self.forms
    }

    /// Whether the linear form with coefficients `v` vanishes on the flat.
    pub fn contains_form(&self, v: &[T]) -> bool {
        let stacked = self.rref.vstack(&Matrix::from_rows(v.len(), vec![v.to_vec()]));
        stacked.rank() == self.codim()
    }
}

/// `X ≤ Y` in the lattice order: the subspace `X` contains `Y`, i.e. every
/// form vanishing on `X` vanishes on `Y`.
pub fn flat_leq<T: Scalar>(x: &Flat<T>, y: &Flat<T>) -> bool {
    x.rref.vstack(&y.rref).rank() == y.codim()
}

/// All flats of an arrangement, sorted by codimension then RREF entries,
/// with the order relation and Möbius values.
#[derive(Clone, Debug)]
pub struct IntersectionLattice<T> {
    ell: usize,
    flats: Vec<Flat<T>>,
    index: BTreeMap<Matrix<T>, usize>,
    leq: Vec<Vec<bool>>,
    moebius: Vec<i64>,
}

impl<T: Scalar> IntersectionLattice<T> {
    /// Closure from `{V}`: adjoin every form to every flat until no new row
    /// space appears.
    pub fn new(arrangement: &Arrangement<T>) -> Self {
        let ell = arrangement.ell;
        let top = Matrix::zeros(0, ell);
        let mut seen: BTreeSet<Matrix<T>> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(top.clone());
        queue.push_back(top);
        while let Some(rref) = queue.pop_front() {
            for form in &arrangement.forms {
                let row = Matrix::from_rows(ell, vec![form.coeffs.clone()]);
                let next = rref.vstack(&row).rref().matrix;
                if next.rows() == rref.rows() {
                    continue;
                }
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Self::from_rrefs(arrangement, seen)
    }

    fn from_rrefs(arrangement: &Arrangement<T>, rrefs: BTreeSet<Matrix<T>>) -> Self {
        // BTreeSet iteration on Matrix is (rows, cols, entries) order, which is
        // (codim, lexicographic RREF) since all share `cols`.
        let flats: Vec<Flat<T>> = rrefs
            .into_iter()
            .map(|rref| {
                let mut flat = Flat {
                    rref,
                    forms: Vec::new(),
                };
                flat.forms = (0..arrangement.len())
                    .filter(|&i| flat.contains_form(&arrangement.forms[i].coeffs))
                    .collect();
                flat
            })
            .collect();
        let index = flats
            .iter()
            .enumerate()
            .map(|(i, f)| (f.rref.clone(), i))
            .collect();
        let n = flats.len();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                leq[i][j] = i == j || (flats[i].codim() < flats[j].codim() && flat_leq(&flats[i], &flats[j]));
            }
        }
        let mut lattice = IntersectionLattice {
            ell: arrangement.ell,
            flats,
            index,
            leq,
            moebius: Vec::new(),
        };
        lattice.moebius = compute_moebius(&lattice);
        lattice
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn flats(&self) -> &[Flat<T>] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flat(&self, i: usize) -> &Flat<T> {
        &self.flats[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn moebius(&self) -> &[i64] {
        &self.moebius
    }

    pub fn index_of(&self, rref: &Matrix<T>) -> Option<usize> {
        self.index.get(rref).copied()
    }

    /// Index of the flat `V(ε)` cut out by the selected forms.
    pub fn flat_of(&self, arrangement: &Arrangement<T>, forms: &[usize]) -> usize {
        self.index_of(&arrangement.span_rref(forms))
            .expect("every intersection of hyperplanes is a flat")
    }

    /// The rank of the lattice: the largest codimension.
    pub fn rank(&self) -> usize {
        self.flats.last().map_or(0, Flat::codim)
    }
}

/// Möbius values from `μ(V) = 1` and `μ(X) = -Σ_{Y < X} μ(Y)`, evaluated in
/// increasing codimension.
pub fn compute_moebius<T: Scalar>(lattice: &IntersectionLattice<T>) -> Vec<i64> {
    let n = lattice.flats.len();
    let mut mu = vec![0i64; n];
    for x in 0..n {
        if lattice.flats[x].codim() == 0 {
            mu[x] = 1;
            continue;
        }
        mu[x] = -(0..x).filter(|&y| lattice.leq[y][x]).map(|y| mu[y]).sum::<i64>();
    }
    mu
}

/// Lattice by enumerating all `2^n` subsets of forms. Exponential; meant as
/// an independent cross-check of [`IntersectionLattice::new`].
pub fn lattice_by_subsets<T: Scalar>(arrangement: &Arrangement<T>) -> IntersectionLattice<T> {
    let n = arrangement.len();
    assert!(n < 24, "subset enumeration over {n} forms");
    let mut rrefs = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let chosen: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        rrefs.insert(arrangement.span_rref(&chosen));
    }
    IntersectionLattice::from_rrefs(arrangement, rrefs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn arr(ell: usize, raw: &[&[i64]]) -> Result<Arrangement<Rational>, ArrangementError> {
        Arrangement::new(
            ell,
            raw.iter()
                .map(|r| r.iter().map(|&v| Rational::from_i64(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn canonical_scaling() {
        let a = arr(3, &[&[2, -2, 0]]).unwrap();
        assert_eq!(a.forms()[0].coeffs(), &[1, -1, 0].map(Rational::from_i64));
        let b = arr(2, &[&[0, -3]]).unwrap();
        assert_eq!(b.forms()[0].coeffs(), &[0, 1].map(Rational::from_i64));
    }

    #[test]
    fn rejections() {
        assert_eq!(
            arr(3, &[&[1, -1, 0], &[-1, 1, 0]]),
            Err(ArrangementError::ProportionalPair { first: 0, second: 1 })
        );
        assert_eq!(arr(2, &[&[1, 0], &[0, 0]]), Err(ArrangementError::ZeroForm { index: 1 }));
        assert_eq!(
            arr(2, &[&[1, 0, 0]]),
            Err(ArrangementError::WrongLength {
                index: 0,
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn braid_three_lattice() {
        let a = arr(3, &[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]).unwrap();
        assert_eq!(a.len(), 3);
        let l = IntersectionLattice::new(&a);
        assert_eq!(l.len(), 5);
        let codims: Vec<usize> = l.flats().iter().map(Flat::codim).collect();
        assert_eq!(codims, vec![0, 1, 1, 1, 2]);
        assert_eq!(l.moebius(), &[1, -1, -1, -1, 2]);
        assert_eq!(l.flat(4).forms(), &[0, 1, 2]);
    }

    #[test]
    fn empty_and_single() {
        let e = Arrangement::<Rational>::new(2, vec![]).unwrap();
        let l = IntersectionLattice::new(&e);
        assert_eq!(l.len(), 1);
        assert_eq!(l.moebius(), &[1]);

        let h = arr(1, &[&[1]]).unwrap();
        assert_eq!(IntersectionLattice::new(&h).moebius(), &[1, -1]);

        let zero_dim = Arrangement::<Rational>::new(0, vec![]).unwrap();
        assert_eq!(IntersectionLattice::new(&zero_dim).len(), 1);
    }

    #[test]
    fn boolean_two() {
        let l = IntersectionLattice::new(&Arrangement::<Rational>::boolean(2));
        assert_eq!(l.len(), 4);
        assert_eq!(l.moebius(), &[1, -1, -1, 1]);
    }

    #[test]
    fn order_relation() {
        let a = Arrangement::<Rational>::braid(3);
        let l = IntersectionLattice::new(&a);
        for i in 0..l.len() {
            assert!(flat_leq(l.flat(0), l.flat(i)));
        }
        assert!(!flat_leq(l.flat(1), l.flat(2)));
        assert!(!flat_leq(l.flat(2), l.flat(1)));
        // ker(x1 - x2) below the center line
        let h = l.flat_of(&a, &[0]);
        assert!(flat_leq(l.flat(h), l.flat(4)));
        assert!(!flat_leq(l.flat(4), l.flat(h)));
    }

    #[test]
    fn non_essential_center() {
        // two planes in 3-space meeting in a line
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        let l = IntersectionLattice::new(&a);
        assert_eq!(l.len(), 4);
        assert_eq!(l.rank(), 2);
        assert_eq!(l.flat(3).dim(), 1);
    }
}
