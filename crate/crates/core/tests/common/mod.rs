//! Oracles shared by the integration suites.
#![allow(dead_code)]

use detres_core::resultant::GenericMorphism;
use detres_core::scroll::{parametrize, PlaneStiefel, ScrollSpec};
use detres_core::{det_fraction_free, gcd_many, Matrix, Monomial, Polynomial, VarSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Classical Sylvester determinant of the two generic binary forms of the
/// `(2, 1, 0)` family, built straight from the coefficient variables.
pub fn classical_sylvester(g: &GenericMorphism, d1: u32, d2: u32) -> Polynomial {
    let params = g.parameter_vars();
    let coeff = |col: usize, a: u32, b: u32| -> Polynomial {
        let idx = g
            .slots()
            .iter()
            .position(|s| s.row == 0 && s.col == col && s.monomial.exponents() == [a, b])
            .unwrap();
        Polynomial::var(params, idx)
    };
    let size = (d1 + d2) as usize;
    let mut rows = Vec::new();
    for shift in 0..d2 {
        let mut row = vec![Polynomial::zero(params); size];
        for t in 0..=d1 {
            row[(shift + t) as usize] = coeff(0, d1 - t, t);
        }
        rows.push(row);
    }
    for shift in 0..d1 {
        let mut row = vec![Polynomial::zero(params); size];
        for t in 0..=d2 {
            row[(shift + t) as usize] = coeff(1, d2 - t, t);
        }
        rows.push(row);
    }
    det_fraction_free(&Matrix::from_rows(rows).unwrap()).unwrap()
}

/// `p(subs[0], subs[1], …)`.
pub fn compose(p: &Polynomial, subs: &[Polynomial]) -> Polynomial {
    let target = subs[0].vars().clone();
    let mut acc = Polynomial::zero(&target);
    for (m, c) in p.terms() {
        let mut t = Polynomial::constant(&target, c.clone());
        for (v, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                t = &t * &subs[v].pow(e);
            }
        }
        acc = &acc + &t;
    }
    acc
}

pub fn random_point(rng: &mut ChaCha8Rng, spec: &ScrollSpec) -> Vec<BigRational> {
    loop {
        let x = q(rng.gen_range(-4..=4));
        let y = q(rng.gen_range(-4..=4));
        let lambda: Vec<BigRational> = (0..spec.blocks()).map(|_| q(rng.gen_range(-3..=3))).collect();
        if let Ok(p) = parametrize(spec, (&x, &y), &lambda) {
            return p;
        }
    }
}

/// A random plane whose `r + 1` linear forms all vanish at `point`.
pub fn plane_through(rng: &mut ChaCha8Rng, spec: &ScrollSpec, point: &[BigRational]) -> PlaneStiefel {
    let pivot = point.iter().position(|v| !v.is_zero()).unwrap();
    let rows = (0..=spec.blocks())
        .map(|_| {
            let mut w: Vec<BigRational> = (0..point.len()).map(|_| q(rng.gen_range(-5..=5))).collect();
            w[pivot] = BigRational::zero();
            let dot: BigRational = w.iter().zip(point).map(|(a, b)| a * b).sum();
            w[pivot] = -dot / &point[pivot];
            w
        })
        .collect();
    PlaneStiefel::new(spec, rows).unwrap()
}

pub fn random_plane(rng: &mut ChaCha8Rng, spec: &ScrollSpec, bound: i64) -> PlaneStiefel {
    let rows = (0..=spec.blocks())
        .map(|_| (0..=spec.ambient_dim()).map(|_| q(rng.gen_range(-bound..=bound))).collect())
        .collect();
    PlaneStiefel::new(spec, rows).unwrap()
}

/// Incidence oracle: the plane meets the scroll iff some `(x:y)` and
/// `λ ≠ 0` satisfy `Σ_i λ_i A_{s,i}(x, y) = 0` for every row `s`, i.e. iff
/// the `r × r` minors of `A` share a root on `P^1` over the algebraic closure.
pub fn meets_by_incidence(spec: &ScrollSpec, plane: &PlaneStiefel) -> bool {
    let xy = VarSet::new(["x", "y"]).unwrap();
    let m = plane.matrix();
    let r = spec.blocks();
    let a = Matrix::from_fn(r + 1, r, |s, i| {
        let d = spec.degrees()[i];
        let mut p = Polynomial::zero(&xy);
        for t in 0..=d {
            let c = m.get(s, spec.coordinate_index(i + 1, t as usize));
            p = &p + &Polynomial::monomial(&xy, Monomial::new(vec![d - t, t]), c.clone());
        }
        p
    });
    let cols: Vec<usize> = (0..r).collect();
    let minors: Vec<Polynomial> = (0..=r)
        .map(|skip| {
            let rows: Vec<usize> = (0..=r).filter(|&s| s != skip).collect();
            det_fraction_free(&a.select(&rows, &cols)).unwrap()
        })
        .filter(|p| !p.is_zero())
        .collect();
    if minors.is_empty() {
        return true;
    }
    gcd_many(&minors).unwrap().total_degree().unwrap() > 0
}

/// The printed σ_4 matrix of S(2,1) with its documented relation to ours.
pub struct Golden {
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
    pub sign: i64,
    pub entries: Vec<Vec<String>>,
}

pub fn s21_golden() -> Golden {
    let text = include_str!("../fixtures/s21_sigma.txt");
    let mut g = Golden { row_perm: vec![], col_perm: vec![], sign: 1, entries: vec![] };
    let nums = |s: &str| s.split_whitespace().map(|v| v.parse().unwrap()).collect::<Vec<usize>>();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        if let Some(rest) = line.strip_prefix("permutation-rows:") {
            g.row_perm = nums(rest);
        } else if let Some(rest) = line.strip_prefix("permutation-cols:") {
            g.col_perm = nums(rest);
        } else if let Some(rest) = line.strip_prefix("sign:") {
            g.sign = rest.trim().parse().unwrap();
        } else {
            g.entries.push(line.split('|').map(|e| e.trim().to_string()).collect());
        }
    }
    g
}

/// Coefficient of the monomial `Π name^e` in `p`.
pub fn coefficient_of(p: &Polynomial, term: &[(&str, u32)]) -> BigRational {
    let vs = p.vars();
    let mut e = vec![0u32; vs.len()];
    for (name, k) in term {
        e[vs.index_of(name).unwrap()] = *k;
    }
    p.coefficient(&Monomial::new(e))
}
