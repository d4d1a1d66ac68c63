use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// A power product `x_0^e_0 ... x_{k-1}^e_{k-1}` over an ambient [`VarSet`](super::VarSet).
///
/// Monomials are ordered graded-lexicographically: first by total degree,
/// then lexicographically on the exponent vector, so that `x_0` is the
/// largest variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    /// The monomial `x_var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|e| e * k).collect(),
            degree: self.degree * k,
        }
    }

    /// Same monomial with the exponent of `var` replaced.
    pub fn with_exponent(&self, var: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        let old = exps[var];
        exps[var] = e;
        Monomial {
            exps,
            degree: self.degree - old + e,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `nvars` variables, in descending
/// graded-lex order (`x_0^d` first, `x_{nvars-1}^d` last).
///
/// The result has `binomial(d + nvars - 1, nvars - 1)` entries.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    assert!(nvars >= 1, "monomials_of_degree needs at least one variable");
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fill_descending(&mut exps, 0, d, &mut out);
    out
}

fn fill_descending(exps: &mut [u32], pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial {
            exps: exps.to_vec(),
            degree: exps.iter().sum(),
        });
        return;
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        fill_descending(exps, pos + 1, remaining - e, out);
    }
    exps[pos] = 0;
}
