//! Multivariate gcd over the rationals.
//!
//! The core is a subresultant pseudo-remainder sequence in a chosen main
//! variable with recursive content extraction. Before running it, each
//! variable gets an upper bound on the degree of the gcd in that variable,
//! read off a univariate image modulo a large prime. The bound is sound: a
//! specialization that keeps both leading coefficients nonzero can only
//! enlarge the gcd. Bounds of zero everywhere prove coprimality without
//! running the sequence at all, and the bounds pick the main variable that
//! keeps the sequence shortest.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::PolyError;

/// Normalized greatest common divisor of `p` and `q`.
///
/// The result has integer content 1 and a positive coefficient on its
/// graded-lex leading monomial. `gcd(0, q)` is `q` normalized.
pub fn gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial, PolyError> {
    if p.vars() != q.vars() {
        return Err(PolyError::VarSetMismatch);
    }
    if p.is_zero() && q.is_zero() {
        return Err(PolyError::ZeroGcd);
    }
    Ok(gcd_nonzero(p, q))
}

/// Gcd of a list of polynomials, skipping zeros. Errors if all are zero.
pub fn gcd_many(polys: &[Polynomial]) -> Result<Polynomial, PolyError> {
    let nonzero: Vec<&Polynomial> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(PolyError::ZeroGcd);
    }
    if nonzero.iter().any(|p| p.vars() != nonzero[0].vars()) {
        return Err(PolyError::VarSetMismatch);
    }
    Ok(gcd_list(nonzero))
}

fn gcd_list(mut list: Vec<&Polynomial>) -> Polynomial {
    list.sort_by_key(|p| p.num_terms());
    let mut g = list[0].normalized().0;
    for p in &list[1..] {
        if g.is_constant() {
            break;
        }
        g = gcd_nonzero(&g, p);
    }
    g
}

fn gcd_nonzero(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let vars = p.vars().clone();
    if p.is_zero() {
        return q.normalized().0;
    }
    if q.is_zero() {
        return p.normalized().0;
    }
    if p.is_constant() || q.is_constant() {
        return Polynomial::one(&vars);
    }

    // monomial content
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let mono = mp.gcd(&mq);
    let p = p.div_monomial(&mp).normalized().0;
    let q = q.div_monomial(&mq).normalized().0;
    let mono_poly = Polynomial::monomial(&vars, mono, num_rational::BigRational::from_integer(1.into()));
    if p.is_constant() || q.is_constant() {
        return mono_poly;
    }
    if p == q {
        return (&mono_poly * &p).normalized().0;
    }

    // trial division of the smaller operand into the larger one
    let (small, large) = if p.num_terms() <= q.num_terms() {
        (&p, &q)
    } else {
        (&q, &p)
    };
    if degree_dominated(small, large) && large.div_exact(small).is_some() {
        return (&mono_poly * small).normalized().0;
    }

    let bounds = degree_bounds(&p, &q);
    let deg_p: Vec<u32> = (0..vars.len()).map(|v| p.degree_in(v)).collect();
    let deg_q: Vec<u32> = (0..vars.len()).map(|v| q.degree_in(v)).collect();
    if bounds.iter().all(|b| *b == 0) {
        return mono_poly;
    }

    // A variable occurring in the inputs but not in the gcd: the gcd divides
    // every coefficient with respect to it.
    let free = (0..vars.len())
        .filter(|&v| bounds[v] == 0 && deg_p[v] + deg_q[v] > 0)
        .max_by_key(|&v| (deg_p[v].max(deg_q[v]), core::cmp::Reverse(v)));
    if let Some(u) = free {
        let mut coeffs = p.coefficients_in(u);
        coeffs.extend(q.coefficients_in(u));
        let refs: Vec<&Polynomial> = coeffs.iter().filter(|c| !c.is_zero()).collect();
        let g = gcd_list(refs);
        return (&mono_poly * &g).normalized().0;
    }

    // main variable: the shortest remainder sequence
    let x = (0..vars.len())
        .filter(|&v| bounds[v] > 0)
        .min_by_key(|&v| {
            (
                deg_p[v] + deg_q[v] - 2 * bounds[v],
                deg_p[v].max(deg_q[v]),
                v,
            )
        })
        .expect("some bound is positive");

    let a = p.coefficients_in(x);
    let b = q.coefficients_in(x);
    let (cont_a, a) = primitive_part(&a);
    let (cont_b, b) = primitive_part(&b);
    let cont = gcd_nonzero(&cont_a, &cont_b);

    let last = subresultant_last(a, b);
    let g = if last.len() <= 1 {
        Polynomial::one(&vars)
    } else {
        let (_, pp) = primitive_part(&last);
        Polynomial::from_coefficients_in(&vars, x, &pp)
    };
    let result = &(&mono_poly * &cont) * &g;
    result.normalized().0
}

fn degree_dominated(small: &Polynomial, large: &Polynomial) -> bool {
    match (small.total_degree(), large.total_degree()) {
        (Some(ds), Some(dl)) if ds <= dl => {}
        _ => return false,
    }
    (0..small.vars().len()).all(|v| small.degree_in(v) <= large.degree_in(v))
}

/// Content (gcd of coefficients) and primitive part of a dense
/// coefficient vector in the main variable.
fn primitive_part(coeffs: &[Polynomial]) -> (Polynomial, Vec<Polynomial>) {
    let refs: Vec<&Polynomial> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    let content = gcd_list(refs);
    if content.is_one() {
        return (content, coeffs.to_vec());
    }
    let pp = coeffs
        .iter()
        .map(|c| c.div_exact(&content).expect("content divides coefficient"))
        .collect();
    (content, pp)
}

fn trim(v: &mut Vec<Polynomial>) {
    while v.last().is_some_and(Polynomial::is_zero) {
        v.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_remainder(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.to_vec();
    let mut i = r.len() - 1;
    loop {
        let lead = r[i].clone();
        for c in r.iter_mut().take(i) {
            *c = &*c * lcb;
        }
        if !lead.is_zero() {
            for (j, bj) in b.iter().enumerate().take(db) {
                let k = i - db + j;
                r[k] = &r[k] - &(&lead * bj);
            }
        }
        r.truncate(i);
        if i == db {
            break;
        }
        i -= 1;
    }
    trim(&mut r);
    r
}

/// Runs the subresultant sequence on `a`, `b` (dense in the main variable,
/// both of positive degree) and returns its last nonzero member.
fn subresultant_last(mut a: Vec<Polynomial>, mut b: Vec<Polynomial>) -> Vec<Polynomial> {
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    if b.len() <= 1 {
        return b;
    }
    let vars = a[0].vars().clone();
    let mut g = Polynomial::one(&vars);
    let mut h = Polynomial::one(&vars);
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = pseudo_remainder(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return r;
        }
        let divisor = &g * &h.pow(delta);
        let r: Vec<Polynomial> = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        a = core::mem::replace(&mut b, r);
        g = a.last().expect("nonempty").clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant scaling is exact"),
        };
    }
}

// Degree bounds from images modulo a prime.

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, PRIME - 2)
}

fn bigint_mod(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(PRIME))
        .to_u64()
        .expect("reduced residue fits in u64")
}

struct ModImage<'a> {
    terms: Vec<(&'a Monomial, u64)>,
}

impl<'a> ModImage<'a> {
    /// `None` when some denominator vanishes modulo the prime.
    fn new(p: &'a Polynomial) -> Option<Self> {
        let mut terms = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let den = bigint_mod(c.denom());
            if den == 0 {
                return None;
            }
            let num = bigint_mod(c.numer());
            terms.push((m, mul_mod(num, inv_mod(den))));
        }
        Some(ModImage { terms })
    }

    /// Univariate image in `var` with every other variable set to `point`.
    fn univariate(&self, var: usize, point: &[u64], degree: u32) -> Vec<u64> {
        let mut out = vec![0u64; degree as usize + 1];
        for (m, c) in &self.terms {
            let mut t = *c;
            for (u, e) in m.exponents().iter().enumerate() {
                if u != var && *e > 0 {
                    t = mul_mod(t, pow_mod(point[u], *e as u64));
                }
            }
            let slot = &mut out[m.exponent(var) as usize];
            *slot = (*slot + t) % PRIME;
        }
        out
    }
}

fn uni_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Degree of the monic gcd of two univariate polynomials over GF(PRIME).
fn uni_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    uni_trim(&mut a);
    uni_trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let db = b.len() - 1;
        let inv = inv_mod(b[db]);
        while a.len() > db {
            let top = a.len() - 1;
            let f = mul_mod(a[top], inv);
            if f != 0 {
                for j in 0..=db {
                    let k = top - db + j;
                    a[k] = (a[k] + PRIME - mul_mod(f, b[j])) % PRIME;
                }
            }
            a.pop();
            uni_trim(&mut a);
        }
        core::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// xorshift64*; fixed seeds keep every gcd run reproducible.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 ^= self.0 >> 12;
        self.0 ^= self.0 << 25;
        self.0 ^= self.0 >> 27;
        self.0.wrapping_mul(0x2545_f491_4f6c_dd1d) % PRIME
    }
}

/// Upper bound on `deg_v gcd(p, q)` for every variable `v`.
fn degree_bounds(p: &Polynomial, q: &Polynomial) -> Vec<u32> {
    let n = p.vars().len();
    let deg_p: Vec<u32> = (0..n).map(|v| p.degree_in(v)).collect();
    let deg_q: Vec<u32> = (0..n).map(|v| q.degree_in(v)).collect();
    let fallback: Vec<u32> = (0..n).map(|v| deg_p[v].min(deg_q[v])).collect();
    let (Some(ip), Some(iq)) = (ModImage::new(p), ModImage::new(q)) else {
        return fallback;
    };
    let mut rng = Rng(0x9e37_79b9_7f4a_7c15);
    let mut bounds = vec![0u32; n];
    for v in 0..n {
        if fallback[v] == 0 {
            continue;
        }
        bounds[v] = fallback[v];
        for _attempt in 0..4 {
            let point: Vec<u64> = (0..n).map(|_| rng.next()).collect();
            let up = ip.univariate(v, &point, deg_p[v]);
            let uq = iq.univariate(v, &point, deg_q[v]);
            if up.last() == Some(&0) || uq.last() == Some(&0) {
                continue;
            }
            bounds[v] = uni_gcd_degree(up, uq) as u32;
            break;
        }
    }
    bounds
}
