use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::PolyError;

/// Ordered list of distinct variable names.
///
/// The position of a name fixes the exponent slot it occupies in every
/// [`Monomial`] of a polynomial over this set, and its rank in the
/// graded-lex order (earlier names are larger).
#[derive(Clone, Debug)]
pub struct VarSet {
    names: Arc<[String]>,
}

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VarSet {
            names: names.into(),
        })
    }

    pub fn empty() -> Self {
        VarSet {
            names: Arc::from(Vec::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for VarSet {}

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map keyed by graded-lex ordered monomials and never
/// store a zero coefficient, so structural equality is polynomial equality.
/// The zero polynomial has no terms and no degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn constant(vars: &VarSet, c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn from_int(vars: &VarSet, c: i64) -> Self {
        Self::constant(vars, BigRational::from_integer(BigInt::from(c)))
    }

    /// The polynomial consisting of the single variable at `index`.
    pub fn var(vars: &VarSet, index: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), index), BigRational::one())
    }

    pub fn var_named(vars: &VarSet, name: &str) -> Result<Self, PolyError> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.into()))?;
        Ok(Self::var(vars, idx))
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.nvars(), vars.len(), "monomial arity differs from VarSet");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from (coefficient, exponents) pairs; repeated
    /// monomials are summed.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (BigRational, Vec<u32>)>,
    {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            if e.len() != vars.len() {
                return Err(PolyError::ArityMismatch {
                    expected: vars.len(),
                    found: e.len(),
                });
            }
            p.add_term(Monomial::new(e), c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial (degree minus infinity).
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// Maximum over terms of the summed exponents of `block`.
    pub fn degree_in_block(&self, block: &[usize]) -> u32 {
        self.terms
            .keys()
            .map(|m| block.iter().map(|&v| m.exponent(v)).sum())
            .max()
            .unwrap_or(0)
    }

    /// True if every term has the same summed exponent over `block`.
    pub fn is_homogeneous_in(&self, block: &[usize]) -> bool {
        let mut degs = self
            .terms
            .keys()
            .map(|m| block.iter().map(|&v| m.exponent(v)).sum::<u32>());
        match degs.next() {
            None => true,
            Some(first) => degs.all(|d| d == first),
        }
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Variables that occur with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.vars.len()];
        for m in self.terms.keys() {
            for (v, e) in m.exponents().iter().enumerate() {
                if *e > 0 {
                    seen[v] = true;
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter_map(|(v, s)| s.then_some(v))
            .collect()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VarSetMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_vars(other)?;
        let mut out = Polynomial::zero(&self.vars);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiply by the monomial `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, ca)| (a.mul(m), ca * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes values for some variables; the result stays over the
    /// same [`VarSet`] with the substituted exponents cleared.
    pub fn evaluate(&self, point: &[(&str, BigRational)]) -> Result<Polynomial, PolyError> {
        let mut assign: Vec<Option<&BigRational>> = vec![None; self.vars.len()];
        for (name, val) in point {
            let idx = self
                .vars
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable((*name).into()))?;
            assign[idx] = Some(val);
        }
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps = m.exponents().to_vec();
            for (v, e) in exps.iter_mut().enumerate() {
                if let Some(val) = assign[v] {
                    if *e > 0 {
                        coeff *= num_traits::pow(val.clone(), *e as usize);
                        *e = 0;
                    }
                }
            }
            out.add_term(Monomial::new(exps), coeff);
        }
        Ok(out)
    }

    /// Full evaluation; every variable occurring in `self` must be assigned.
    pub fn evaluate_rational(&self, point: &[(&str, BigRational)]) -> Result<BigRational, PolyError> {
        let p = self.evaluate(point)?;
        if let Some(v) = p.support().first() {
            return Err(PolyError::Unassigned(self.vars.names()[*v].clone()));
        }
        Ok(p.coefficient(&Monomial::one(self.vars.len())))
    }

    /// Evaluation at a dense vector of values indexed like the VarSet.
    pub fn evaluate_dense(&self, values: &[BigRational]) -> BigRational {
        assert_eq!(values.len(), self.vars.len());
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.exponents().iter().enumerate() {
                if *e > 0 {
                    t *= num_traits::pow(values[v].clone(), *e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficients with respect to `var`: entry `i` is the coefficient of
    /// `var^i`, with `var` removed from its monomials.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Polynomial::zero(&self.vars); deg + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            out[e].terms.insert(m.with_exponent(var, 0), c.clone());
        }
        out
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(vars: &VarSet, var: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let e = m.exponent(var) + i as u32;
                out.add_term(m.with_exponent(var, e), a.clone());
            }
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(self.vars == divisor.vars, "VarSet mismatch in div_exact");
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.vars);
        while let Some((m, c)) = rem.terms.iter().next_back() {
            let qm = lm.quotient_of(m)?;
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// Divides every monomial by `m`; `m` must divide each of them.
    pub(crate) fn div_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (m.quotient_of(a).expect("monomial does not divide"), c.clone()))
                .collect(),
        }
    }

    /// Greatest common monomial divisor of all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.vars.len()),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients; zero for the zero polynomial.
    pub fn rational_content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(num, den)
    }

    /// Scales to integer content 1 with a positive leading coefficient.
    /// Returns the normalized polynomial and the factor divided out.
    pub fn normalized(&self) -> (Polynomial, BigRational) {
        if self.is_zero() {
            return (self.clone(), BigRational::one());
        }
        let mut c = self.rational_content();
        if self.leading_coefficient().is_some_and(Signed::is_negative) {
            c = -c;
        }
        let inv = c.recip();
        (self.scale(&inv), c)
    }

    /// Re-expresses the polynomial over a larger or reordered VarSet.
    /// Every variable in the support must exist in `target`.
    pub fn embed(&self, target: &VarSet) -> Result<Polynomial, PolyError> {
        let mut map = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            map.push(target.index_of(name));
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (v, e) in m.exponents().iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                match map[v] {
                    Some(t) => exps[t] = *e,
                    None => {
                        return Err(PolyError::UnknownVariable(self.vars.names()[v].clone()))
                    }
                }
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    /// Panics on VarSet mismatch; use [`Polynomial::checked_add`] to get an error instead.
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("VarSet mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("VarSet mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("VarSet mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (v, e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars.names()[v].clone()),
                    _ => factors.push(alloc::format!("{}^{}", self.vars.names()[v], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn xy() -> (VarSet, Polynomial, Polynomial) {
        let vs = VarSet::new(["x", "y"]).unwrap();
        let x = Polynomial::var(&vs, 0);
        let y = Polynomial::var(&vs, 1);
        (vs, x, y)
    }

    #[test]
    fn difference_of_squares() {
        let (_, x, y) = xy();
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_absorbs() {
        let (vs, x, y) = xy();
        let p = &x + &y;
        let z = &p * &Polynomial::zero(&vs);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
        assert_eq!(z.total_degree(), None);
    }

    #[test]
    fn cube_of_sum() {
        let (vs, x, y) = xy();
        let p = (&x + &y).pow(3);
        let expected = Polynomial::from_terms(
            &vs,
            [
                (q(1), vec![3, 0]),
                (q(3), vec![2, 1]),
                (q(3), vec![1, 2]),
                (q(1), vec![0, 3]),
            ],
        )
        .unwrap();
        assert_eq!(p, expected);
    }

    #[test]
    fn mismatched_varsets_error() {
        let (_, x, _) = xy();
        let other = VarSet::new(["a"]).unwrap();
        let a = Polynomial::var(&other, 0);
        assert_eq!(x.checked_add(&a), Err(PolyError::VarSetMismatch));
        assert_eq!(x.checked_mul(&a), Err(PolyError::VarSetMismatch));
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(matches!(
            VarSet::new(["x", "x"]),
            Err(PolyError::DuplicateVariable(_))
        ));
    }

    #[test]
    fn evaluation() {
        let (_, x, y) = xy();
        let p = &(&x * &x) + &y;
        assert_eq!(p.evaluate_rational(&[("x", q(2)), ("y", q(3))]).unwrap(), q(7));
        assert!(matches!(
            p.evaluate(&[("z", q(1))]),
            Err(PolyError::UnknownVariable(_))
        ));
        assert!(matches!(
            p.evaluate_rational(&[("x", q(1))]),
            Err(PolyError::Unassigned(_))
        ));
    }

    #[test]
    fn partial_evaluation() {
        let vs = VarSet::new(["a", "b", "x"]).unwrap();
        let a = Polynomial::var(&vs, 0);
        let b = Polynomial::var(&vs, 1);
        let x = Polynomial::var(&vs, 2);
        let p = &(&a * &x) + &b;
        assert_eq!(p.evaluate(&[("a", q(1))]).unwrap(), &x + &b);
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = xy();
        let p = &(&x * &x) - &(&y * &y);
        assert_eq!(p.div_exact(&(&x + &y)), Some(&x - &y));
        assert_eq!(p.div_exact(&(&x + &x)).map(|q| q.num_terms()), None);
    }

    #[test]
    fn normalization_fixes_sign_and_content() {
        let (vs, x, y) = xy();
        let p = (&x - &y).scale(&BigRational::new((-6).into(), 4.into()));
        let (n, c) = p.normalized();
        assert_eq!(n, &x - &y);
        assert_eq!(c, BigRational::new((-3).into(), 2.into()));
        assert_eq!(Polynomial::zero(&vs).normalized().0, Polynomial::zero(&vs));
    }

    #[test]
    fn coefficient_split_round_trip() {
        let (vs, x, y) = xy();
        let p = &(&x * &x).pow(2) + &(&x * &y);
        let cs = p.coefficients_in(0);
        assert_eq!(cs.len(), 5);
        assert_eq!(Polynomial::from_coefficients_in(&vs, 0, &cs), p);
    }

    #[test]
    fn display() {
        let (_, x, y) = xy();
        let p = &(&x * &x) - &y.scale(&q(2));
        assert_eq!(alloc::format!("{}", p), "x^2 - 2*y");
    }
}
