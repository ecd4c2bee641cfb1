#![allow(dead_code)]

use rand::Rng;
use rbar_core::{Arrangement, FractionGenerator, MultiPoly, Oracle, Rational, Scalar};

pub fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

pub fn arrangement(ell: usize, raw: &[&[i64]]) -> Arrangement {
    Arrangement::new(ell, raw.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()).unwrap()
}

/// braid ℓ=2, braid ℓ=3, boolean ℓ=1..3, four generic lines in the plane.
pub fn corpus() -> Vec<(&'static str, Arrangement)> {
    vec![
        ("braid-2", Arrangement::braid(2)),
        ("braid-3", Arrangement::braid(3)),
        ("boolean-1", Arrangement::boolean(1)),
        ("boolean-2", Arrangement::boolean(2)),
        ("boolean-3", Arrangement::boolean(3)),
        ("four-lines", arrangement(2, &[&[1, 0], &[0, 1], &[1, -1], &[1, 1]])),
    ]
}

pub fn lin(c: &[i64]) -> MultiPoly {
    MultiPoly::linear(&c.iter().map(|&v| q(v)).collect::<Vec<_>>())
}

pub fn var(i: usize) -> MultiPoly {
    MultiPoly::variable(3, i)
}

/// A hand-picked basis of R̄¹₂ for braid ℓ=3, in the worked-example order.
pub fn worked_basis(oracle: &Oracle<'_>) -> Vec<FractionGenerator> {
    let a12 = lin(&[1, -1, 0]);
    let a23 = lin(&[0, 1, -1]);
    let a13 = lin(&[1, 0, -1]);
    let spec = [
        (var(0), a12.mul(&a13)),
        (var(0), a12.mul(&a23)),
        (var(0), a12.pow(2)),
        (var(2), a12.pow(2)),
        (var(0), a23.pow(2)),
        (var(1), a23.pow(2)),
        (var(0), a13.pow(2)),
        (var(1), a13.pow(2)),
    ];
    spec.into_iter()
        .map(|(n, d)| oracle.fraction(n, &d).unwrap())
        .collect()
}

/// (x1 + 2 x2 - x3 + 3) / ((x1 - x3)(x2 - x3))
pub fn worked_phi(oracle: &Oracle<'_>) -> FractionGenerator {
    let num = lin(&[1, 2, -1]).add(&MultiPoly::constant(3, q(3)));
    oracle.fraction(num, &lin(&[1, 0, -1]).mul(&lin(&[0, 1, -1]))).unwrap()
}

/// A random arrangement of rank at most 3 with between 1 and 6 forms.
pub fn random_arrangement<R: Rng>(rng: &mut R) -> Arrangement {
    let ell = rng.gen_range(1..=3usize);
    let target = rng.gen_range(1..=6usize);
    let mut raw: Vec<Vec<Rational>> = Vec::new();
    let mut attempts = 0;
    while raw.len() < target && attempts < 200 {
        attempts += 1;
        let v: Vec<Rational> = (0..ell).map(|_| q(rng.gen_range(-2..=2))).collect();
        let mut trial = raw.clone();
        trial.push(v);
        if Arrangement::new(ell, trial.clone()).is_ok() {
            raw = trial;
        }
    }
    Arrangement::new(ell, raw).unwrap()
}
