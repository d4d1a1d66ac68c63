//! Truncated Chern calculus on `P^N` and the degree formulas for
//! determinantal resultants.
//!
//! Classes live in `Z[h]/(h^{N+1})`, extended by terms linear in formal
//! variables `α_i`; any product of two α-terms is dropped. Series are
//! polynomials in `t` with such classes as coefficients, truncated at a cap.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::problem::ProblemSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChernError {
    #[error("no determinantal resultant: {}", .0.join("; "))]
    Existence(Vec<String>),
    #[error("series truncated at t^{cap} but t^{needed} is required")]
    CapTooSmall { cap: usize, needed: usize },
    #[error("series constant term is not the unit class")]
    NonUnitConstant,
    #[error("Δ_(p,q) needs p, q >= 1")]
    BadDeltaIndex,
}

/// Element of `Z[h]/(h^{N+1}) ⊕ ⊕_i α_i·Z[h]/(h^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedClass {
    pure: Vec<BigInt>,
    alpha: BTreeMap<usize, Vec<BigInt>>,
}

impl TruncatedClass {
    pub fn zero(dim: usize) -> Self {
        TruncatedClass {
            pure: vec![BigInt::zero(); dim + 1],
            alpha: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        let mut c = Self::zero(dim);
        c.pure[0] = BigInt::one();
        c
    }

    /// `a·h + α_i` (the α part omitted when `alpha` is `None`).
    pub fn linear(dim: usize, a: i64, alpha: Option<usize>) -> Self {
        let mut c = Self::zero(dim);
        if dim >= 1 {
            c.pure[1] = BigInt::from(a);
        }
        if let Some(i) = alpha {
            let mut v = vec![BigInt::zero(); dim + 1];
            v[0] = BigInt::one();
            c.alpha.insert(i, v);
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.pure.len() - 1
    }

    /// Coefficient of `h^e` in the α-free part.
    pub fn pure_coeff(&self, e: usize) -> BigInt {
        self.pure.get(e).cloned().unwrap_or_default()
    }

    /// Coefficient of `α_i h^e`.
    pub fn alpha_coeff(&self, i: usize, e: usize) -> BigInt {
        self.alpha
            .get(&i)
            .and_then(|v| v.get(e).cloned())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.pure.iter().all(Zero::is_zero) && self.alpha.values().flatten().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.pure[0].is_one()
            && self.pure[1..].iter().all(Zero::is_zero)
            && self.alpha.values().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b) in out.pure.iter_mut().zip(&other.pure) {
            *a += b;
        }
        for (i, v) in &other.alpha {
            let slot = out
                .alpha
                .entry(*i)
                .or_insert_with(|| vec![BigInt::zero(); self.pure.len()]);
            for (a, b) in slot.iter_mut().zip(v) {
                *a += b;
            }
        }
        out.trimmed()
    }

    /// Drops α parts that are identically zero, so equal classes compare equal.
    fn trimmed(mut self) -> Self {
        self.alpha.retain(|_, v| v.iter().any(|c| !c.is_zero()));
        self
    }

    pub fn neg(&self) -> Self {
        TruncatedClass {
            pure: self.pure.iter().map(|c| -c).collect(),
            alpha: self
                .alpha
                .iter()
                .map(|(i, v)| (*i, v.iter().map(|c| -c).collect()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.pure.len();
        let trunc_mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
            let mut out = vec![BigInt::zero(); n];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().enumerate().take(n - i) {
                    out[i + j] += x * y;
                }
            }
            out
        };
        let mut out = TruncatedClass {
            pure: trunc_mul(&self.pure, &other.pure),
            alpha: BTreeMap::new(),
        };
        // (p + Σ α_i a_i)(q + Σ α_i b_i) ≡ pq + Σ α_i (p b_i + a_i q)
        for (i, a) in &self.alpha {
            let t = trunc_mul(a, &other.pure);
            add_into(&mut out.alpha, *i, t);
        }
        for (i, b) in &other.alpha {
            let t = trunc_mul(&self.pure, b);
            add_into(&mut out.alpha, *i, t);
        }
        out.trimmed()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        TruncatedClass {
            pure: self.pure.iter().map(|c| c * k).collect(),
            alpha: self
                .alpha
                .iter()
                .map(|(i, v)| (*i, v.iter().map(|c| c * k).collect()))
                .collect(),
        }
        .trimmed()
    }
}

fn add_into(map: &mut BTreeMap<usize, Vec<BigInt>>, i: usize, v: Vec<BigInt>) {
    match map.get_mut(&i) {
        Some(slot) => {
            for (a, b) in slot.iter_mut().zip(v) {
                *a += b;
            }
        }
        None => {
            map.insert(i, v);
        }
    }
}

/// `Σ_{j ≤ cap} c_j t^j` with [`TruncatedClass`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<TruncatedClass>,
}

impl TruncatedSeries {
    pub fn one(dim: usize, cap: usize) -> Self {
        let mut coeffs = vec![TruncatedClass::zero(dim); cap + 1];
        coeffs[0] = TruncatedClass::one(dim);
        TruncatedSeries { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<TruncatedClass>) -> Self {
        assert!(!coeffs.is_empty(), "series needs a constant term");
        TruncatedSeries { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.coeffs[0].dim()
    }

    /// `c_j`, zero outside `0..=cap`.
    pub fn coeff(&self, j: i64) -> TruncatedClass {
        if j < 0 || j as usize > self.cap() {
            TruncatedClass::zero(self.dim())
        } else {
            self.coeffs[j as usize].clone()
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap().min(other.cap());
        let dim = self.dim();
        let mut coeffs = vec![TruncatedClass::zero(dim); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(cap + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(cap + 1 - i) {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TruncatedSeries { coeffs }
    }
}

/// `∏_i (1 − (d_i h + α_i) t)`, or without the `α_i` when `with_alpha` is false.
pub fn chern_poly_split(twists: &[i64], with_alpha: bool, dim: usize, cap: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(dim, cap);
    for (i, d) in twists.iter().enumerate() {
        let mut f = TruncatedSeries::one(dim, cap);
        if cap >= 1 {
            f.coeffs[1] = TruncatedClass::linear(dim, *d, with_alpha.then_some(i)).neg();
        }
        s = s.mul(&f);
    }
    s
}

/// `1 / s` up to the cap; `s` must start with the unit class.
pub fn series_inverse(s: &TruncatedSeries) -> Result<TruncatedSeries, ChernError> {
    if !s.coeffs[0].is_one() {
        return Err(ChernError::NonUnitConstant);
    }
    let dim = s.dim();
    let cap = s.cap();
    let mut inv = vec![TruncatedClass::zero(dim); cap + 1];
    inv[0] = TruncatedClass::one(dim);
    for k in 1..=cap {
        let mut acc = TruncatedClass::zero(dim);
        for j in 1..=k {
            acc = acc.add(&s.coeffs[j].mul(&inv[k - j]));
        }
        inv[k] = acc.neg();
    }
    Ok(TruncatedSeries { coeffs: inv })
}

/// `Δ_{p,q}(s)`: determinant of the `q×q` matrix with entry `(a, b)` equal
/// to `c_{p−a+b}(s)`, first row `c_p … c_{p+q−1}`.
pub fn delta_pq(s: &TruncatedSeries, p: usize, q: usize) -> Result<TruncatedClass, ChernError> {
    if p == 0 || q == 0 {
        return Err(ChernError::BadDeltaIndex);
    }
    let needed = p + q - 1;
    if s.cap() < needed {
        return Err(ChernError::CapTooSmall {
            cap: s.cap(),
            needed,
        });
    }
    let entries: Vec<Vec<TruncatedClass>> = (0..q)
        .map(|a| {
            (0..q)
                .map(|b| s.coeff(p as i64 - a as i64 + b as i64))
                .collect()
        })
        .collect();
    Ok(det_by_minors(&entries, s.dim()))
}

/// Division-free determinant by expansion over column subsets.
fn det_by_minors(m: &[Vec<TruncatedClass>], dim: usize) -> TruncatedClass {
    let q = m.len();
    // minors[mask] = det of rows q-|mask|.. against the columns in mask
    let mut minors: BTreeMap<u32, TruncatedClass> = BTreeMap::new();
    minors.insert(0, TruncatedClass::one(dim));
    for size in 1..=q {
        let row = q - size;
        let mut next = BTreeMap::new();
        for mask in 0u32..(1 << q) {
            if mask.count_ones() as usize != size {
                continue;
            }
            let mut acc = TruncatedClass::zero(dim);
            let mut sign_neg = false;
            for col in 0..q {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let sub = &minors[&(mask & !(1 << col))];
                let t = m[row][col].mul(sub);
                acc = if sign_neg { acc.sub(&t) } else { acc.add(&t) };
                sign_neg = !sign_neg;
            }
            next.insert(mask, acc);
        }
        minors = next;
    }
    minors.remove(&((1u32 << q) - 1)).expect("full minor")
}

/// Per-column degrees of a determinantal resultant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multidegree {
    /// `N_i`, positive for valid problems.
    pub degrees: Vec<BigInt>,
    /// Coefficients of `α_i h^N` before the sign `(−1)^{(m−r)(n−r)}`.
    pub raw: Vec<BigInt>,
    /// The same degrees read from `Δ_{n−r,m−r}(c_t(F − E))`, which needs no sign.
    pub dual_form: Vec<BigInt>,
}

fn check(spec: &ProblemSpec) -> Result<(), ChernError> {
    let e = spec.existence_check();
    if e.exists {
        Ok(())
    } else {
        Err(ChernError::Existence(e.failures))
    }
}

/// `N_i = (−1)^{(m−r)(n−r)} · [α_i h^N] Δ_{m−r,n−r}(∏(1−(d_i h+α_i)t) / ∏(1−k_j h t))`.
pub fn multidegree(spec: &ProblemSpec) -> Result<Multidegree, ChernError> {
    check(spec)?;
    let dim = spec.ambient_dim();
    let (p, q) = (spec.m - spec.r, spec.n - spec.r);
    let cap = (spec.m + spec.n).max(p + q - 1);
    let ce = chern_poly_split(&spec.d, true, dim, cap);
    let cf = chern_poly_split(&spec.k, false, dim, cap);
    let e_minus_f = ce.mul(&series_inverse(&cf)?);
    let f_minus_e = cf.mul(&series_inverse(&ce)?);
    let delta = delta_pq(&e_minus_f, p, q)?;
    let dual = delta_pq(&f_minus_e, q, p)?;
    let sign = if (p * q) % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let raw: Vec<BigInt> = (0..spec.m).map(|i| delta.alpha_coeff(i, dim)).collect();
    Ok(Multidegree {
        degrees: raw.iter().map(|c| c * &sign).collect(),
        dual_form: (0..spec.m).map(|i| dual.alpha_coeff(i, dim)).collect(),
        raw,
    })
}

/// Total degree: the sum of the multidegree.
pub fn total_degree(spec: &ProblemSpec) -> Result<BigInt, ChernError> {
    Ok(multidegree(spec)?.degrees.iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn two_factor_expansion() {
        let s = chern_poly_split(&[3, 5], false, 2, 4);
        assert!(s.coeff(0).is_one());
        assert_eq!(s.coeff(1).pure_coeff(1), b(-8));
        assert_eq!(s.coeff(2).pure_coeff(2), b(15));
        assert!(s.coeff(3).is_zero());
    }

    #[test]
    fn alpha_linear_parts() {
        let s = chern_poly_split(&[4], true, 1, 2);
        assert_eq!(s.coeff(1).pure_coeff(1), b(-4));
        assert_eq!(s.coeff(1).alpha_coeff(0, 0), b(-1));
        // (1 − (h+α_1)t)(1 − (h+α_2)t): t² coefficient has α_1-part h
        let s = chern_poly_split(&[1, 1], true, 2, 3);
        assert_eq!(s.coeff(2).alpha_coeff(0, 1), b(1));
        assert_eq!(s.coeff(2).alpha_coeff(1, 1), b(1));
        assert_eq!(s.coeff(2).pure_coeff(2), b(1));
    }

    #[test]
    fn geometric_inverse() {
        let s = chern_poly_split(&[3], false, 4, 6);
        let inv = series_inverse(&s).unwrap();
        for j in 0..=4 {
            assert_eq!(inv.coeff(j).pure_coeff(j as usize), b(3i64.pow(j as u32)));
        }
        assert!(series_inverse(&TruncatedSeries::one(2, 3)).unwrap().coeff(0).is_one());
    }

    #[test]
    fn inverse_of_rank_two_split() {
        // 1/c(V) = 1 − c_1 t + (c_1² − c_2) t² + …, c(V) = (1+at)(1+bt)
        let (a, bb) = (2i64, 7i64);
        let s = chern_poly_split(&[-a, -bb], false, 3, 3);
        let inv = series_inverse(&s).unwrap();
        let (c1, c2) = (a + bb, a * bb);
        assert_eq!(inv.coeff(1).pure_coeff(1), b(-c1));
        assert_eq!(inv.coeff(2).pure_coeff(2), b(c1 * c1 - c2));
    }

    #[test]
    fn non_unit_constant_rejected() {
        let mut c = vec![TruncatedClass::zero(1); 3];
        c[0] = TruncatedClass::one(1).scale(&b(2));
        let s = TruncatedSeries::from_coeffs(c);
        assert_eq!(series_inverse(&s), Err(ChernError::NonUnitConstant));
    }

    #[test]
    fn delta_small_cases() {
        let s = chern_poly_split(&[2, 3, 5], false, 4, 6);
        assert_eq!(delta_pq(&s, 2, 1).unwrap(), s.coeff(2));
        let d12 = delta_pq(&s, 1, 2).unwrap();
        let expect = s.coeff(1).mul(&s.coeff(1)).sub(&s.coeff(0).mul(&s.coeff(2)));
        assert_eq!(d12, expect);
        assert!(matches!(delta_pq(&s, 5, 3), Err(ChernError::CapTooSmall { .. })));
    }

    #[test]
    fn sylvester_multidegree() {
        let spec = ProblemSpec::new(2, 1, 0, vec![3, 5], vec![0]);
        let md = multidegree(&spec).unwrap();
        assert_eq!(md.degrees, vec![b(5), b(3)]);
        assert_eq!(total_degree(&spec).unwrap(), b(8));
    }

    #[test]
    fn invalid_spec_is_error() {
        let spec = ProblemSpec::new(2, 1, 0, vec![1, 1], vec![1]);
        assert!(matches!(multidegree(&spec), Err(ChernError::Existence(_))));
    }
}
