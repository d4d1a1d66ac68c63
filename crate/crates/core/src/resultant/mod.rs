//! Resultant matrices `σ_d`, determinantal resultants as gcds of maximal
//! minors, and the exact rank test.

mod morphism;
mod sigma;

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

pub use morphism::{geometric_vars, ConcreteMorphism, GenericMorphism, MorphismRef, ParameterSlot};
pub use sigma::{build_sigma, subsets, SigmaColumn, SigmaMatrix};

use crate::chern::{self, ChernError};
use crate::matrix::{det_fraction_free, pivot_columns, rank, Matrix, MatrixError};
use crate::poly::{gcd, Polynomial, PolyError};
use crate::problem::ProblemSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ResultantError {
    #[error("no determinantal resultant: {}", .0.join("; "))]
    Existence(Vec<String>),
    #[error("morphism belongs to a different problem")]
    SpecMismatch,
    #[error("morphism must be a {rows}x{cols} matrix")]
    BadShape { rows: usize, cols: usize },
    #[error("entry ({row}, {col}): {reason}")]
    BadEntry { row: usize, col: usize, reason: String },
    #[error("degree {d} is below the critical degree {nu}")]
    DegreeBelowCritical { d: i64, nu: i64 },
    #[error("sigma has {cols} columns for {rows} rows; increase the degree")]
    TooFewColumns { rows: usize, cols: usize },
    #[error("no nonsingular maximal minor found at the sample points")]
    NoNonzeroMinor,
    #[error("the staircase morphism needs r = n - 1")]
    NotPrincipal,
    #[error("minor budget must be positive")]
    ZeroBudget,
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

pub(crate) fn check_spec(spec: &ProblemSpec) -> Result<(), ResultantError> {
    let e = spec.existence_check();
    if e.exists {
        Ok(())
    } else {
        Err(ResultantError::Existence(e.failures))
    }
}

/// `ν = (n−r)(Σd − Σk) − (m−n)(k_{r+1}+…+k_n) − (m−r)(n−r) + 1` with `k`
/// sorted in decreasing order. Invariant under twisting.
pub fn critical_degree(spec: &ProblemSpec) -> Result<i64, ResultantError> {
    check_spec(spec)?;
    let s = spec.normalized();
    let mut k = s.k.clone();
    k.sort_unstable_by(|a, b| b.cmp(a));
    let (m, n, r) = (s.m as i64, s.n as i64, s.r as i64);
    let sd: i64 = s.d.iter().sum();
    let sk: i64 = k.iter().sum();
    let tail: i64 = k[s.r..].iter().sum();
    Ok((n - r) * (sd - sk) - (m - n) * tail - (m - r) * (n - r) + 1)
}

fn working_degree(spec: &ProblemSpec, d: Option<u32>) -> Result<u32, ResultantError> {
    let nu = critical_degree(spec)?;
    match d {
        Some(d) if (d as i64) < nu => Err(ResultantError::DegreeBelowCritical { d: d as i64, nu }),
        Some(d) => Ok(d),
        None => Ok(nu.max(0) as u32),
    }
}

/// Computes determinants of batches of square polynomial matrices.
pub trait DeterminantBackend {
    /// How many minors the gcd loop hands over at once.
    fn batch_size(&self) -> usize {
        1
    }

    fn determinants(&self, minors: &[Matrix<Polynomial>]) -> Vec<Result<Polynomial, MatrixError>>;
}

/// Evaluates each determinant in turn on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct SequentialBackend;

impl DeterminantBackend for SequentialBackend {
    fn determinants(&self, minors: &[Matrix<Polynomial>]) -> Vec<Result<Polynomial, MatrixError>> {
        minors.iter().map(det_fraction_free).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResultantOptions {
    /// Working degree; `None` means the critical degree.
    pub degree: Option<u32>,
    pub minor_budget: usize,
}

impl Default for ResultantOptions {
    fn default() -> Self {
        ResultantOptions {
            degree: None,
            minor_budget: 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Confirmation {
    /// The gcd reached the degree predicted by the Chern class computation.
    Confirmed,
    /// The budget ran out first; the polynomial is a multiple of the resultant.
    Unconfirmed,
}

/// A maximal minor used by the gcd loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorRecord {
    /// Column indices of `σ_d`, increasing.
    pub columns: Vec<usize>,
    pub degree: u32,
    /// Determinant, normalized like the output.
    pub determinant: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    /// Integer coefficients with content 1 and a positive coefficient on the
    /// largest monomial in graded-lex order.
    pub rule: &'static str,
    pub leading_exponents: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct ResultantOutput {
    pub polynomial: Polynomial,
    /// Degree in the parameters of each morphism column.
    pub degree_report: Vec<u32>,
    pub target_degree: u32,
    pub status: Confirmation,
    pub normalization: Normalization,
    pub sigma_degree: u32,
    pub sigma_rows: usize,
    pub sigma_cols: usize,
    pub minors: Vec<MinorRecord>,
}

impl ResultantOutput {
    pub fn total_degree(&self) -> u32 {
        self.polynomial.total_degree().unwrap_or(0)
    }

    pub fn is_confirmed(&self) -> bool {
        self.status == Confirmation::Confirmed
    }
}

/// Resultant of the generic morphism with default parameter names.
pub fn resultant_gcd(spec: &ProblemSpec, opts: ResultantOptions) -> Result<ResultantOutput, ResultantError> {
    let g = GenericMorphism::new(spec)?;
    resultant_gcd_for(&g, opts, &SequentialBackend)
}

/// Deterministic sample values for the parameters: small nonzero integers.
fn sample_point(len: usize, seed: u64) -> Vec<BigRational> {
    let mut s = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) | 1;
    (0..len)
        .map(|_| {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            let v = (s % 193) as i64 - 96;
            BigRational::from_integer(BigInt::from(if v == 0 { 97 } else { v }))
        })
        .collect()
}

/// Column sets of nonsingular maximal minors at the sample point: the greedy
/// pivot columns first, then every single-column swap of them (new column
/// ascending, replaced position ascending) that stays nonsingular.
fn minor_sequence<'a>(
    eval: &'a Matrix<BigRational>,
    pivots: &'a [usize],
) -> impl Iterator<Item = Vec<usize>> + 'a {
    let rows = eval.rows();
    let first = pivots.to_vec();
    let swaps = (0..eval.cols())
        .filter(move |c| !pivots.contains(c))
        .flat_map(move |c| {
            (0..rows).filter_map(move |pos| {
                let mut set = pivots.to_vec();
                set[pos] = c;
                set.sort_unstable();
                let sub = eval.select_columns(&set);
                (rank(&sub) == rows).then_some(set)
            })
        });
    core::iter::once(first).chain(swaps)
}

/// Determinantal resultant of a generic morphism as the gcd of maximal
/// minors of `σ_d`, stopping once the gcd has the predicted total degree.
pub fn resultant_gcd_for(
    phi: &GenericMorphism,
    opts: ResultantOptions,
    backend: &dyn DeterminantBackend,
) -> Result<ResultantOutput, ResultantError> {
    if opts.minor_budget == 0 {
        return Err(ResultantError::ZeroBudget);
    }
    let spec = phi.spec();
    let d = working_degree(spec, opts.degree)?;
    let sigma = build_sigma(spec, d, phi)?;
    let (rows, cols) = (sigma.rows(), sigma.cols());
    if cols < rows {
        return Err(ResultantError::TooFewColumns { rows, cols });
    }
    let target = chern::total_degree(spec)?
        .to_u32()
        .expect("resultant degree fits in u32");
    let np = phi.parameter_vars().len();

    let mut found = None;
    for seed in 1..=4u64 {
        let eval = sigma.evaluate(&sample_point(np, seed));
        let pivots = pivot_columns(&eval);
        if pivots.len() == rows {
            found = Some((eval, pivots));
            break;
        }
    }
    let (eval, pivots) = found.ok_or(ResultantError::NoNonzeroMinor)?;

    let mut candidates = minor_sequence(&eval, &pivots);
    let mut running: Option<Polynomial> = None;
    let mut minors = Vec::new();
    let batch = backend.batch_size().max(1);
    'outer: while minors.len() < opts.minor_budget {
        let take = batch.min(opts.minor_budget - minors.len());
        let sets: Vec<Vec<usize>> = candidates.by_ref().take(take).collect();
        if sets.is_empty() {
            break;
        }
        let mats: Vec<Matrix<Polynomial>> = sets.iter().map(|s| sigma.entries.select_columns(s)).collect();
        for (set, det) in sets.into_iter().zip(backend.determinants(&mats)) {
            let det = det?.normalized().0;
            let g = match &running {
                None => det.clone(),
                Some(g) => gcd(g, &det)?,
            };
            minors.push(MinorRecord {
                columns: set,
                degree: det.total_degree().unwrap_or(0),
                determinant: det,
            });
            let reached = g.total_degree().unwrap_or(0) <= target;
            running = Some(g);
            if reached {
                break 'outer;
            }
        }
    }
    let poly = running.ok_or(ResultantError::NoNonzeroMinor)?;
    let degree = poly.total_degree().unwrap_or(0);
    let status = if degree == target {
        Confirmation::Confirmed
    } else {
        Confirmation::Unconfirmed
    };
    let degree_report = (0..spec.m)
        .map(|i| poly.degree_in_block(phi.column_block(i)))
        .collect();
    let leading_exponents = poly
        .leading_term()
        .map(|(m, _)| m.exponents().to_vec())
        .unwrap_or_default();
    Ok(ResultantOutput {
        polynomial: poly,
        degree_report,
        target_degree: target,
        status,
        normalization: Normalization {
            rule: "integer content 1, positive graded-lex leading coefficient",
            leading_exponents,
        },
        sigma_degree: d,
        sigma_rows: rows,
        sigma_cols: cols,
        minors,
    })
}

/// Outcome of the exact rank test on `σ_d(φ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VanishReport {
    /// `rank < rows`: the resultant vanishes at `φ`.
    pub vanishes: bool,
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
    pub degree: u32,
}

/// Rank test: builds `σ_d(φ)` over the rationals and compares its rank with
/// the number of rows.
pub fn vanish_test(
    spec: &ProblemSpec,
    phi: &ConcreteMorphism,
    d: Option<u32>,
) -> Result<VanishReport, ResultantError> {
    if phi.spec() != spec {
        return Err(ResultantError::SpecMismatch);
    }
    let d = working_degree(spec, d)?;
    let sigma = build_sigma(spec, d, phi)?;
    let eval = sigma.evaluate(&[]);
    let rk = rank(&eval);
    Ok(VanishReport {
        vanishes: rk < sigma.rows(),
        rank: rk,
        rows: sigma.rows(),
        cols: sigma.cols(),
        degree: d,
    })
}

/// The principal-case morphism with entry `(j, i) = x_{i−j}^{d_i − k_j}` for
/// `0 ≤ i − j ≤ m − n` and zero elsewhere. It has rank `n` everywhere on
/// `P^{m−n}`.
pub fn staircase_specialization(spec: &ProblemSpec) -> Result<ConcreteMorphism, ResultantError> {
    check_spec(spec)?;
    if !spec.is_principal() {
        return Err(ResultantError::NotPrincipal);
    }
    let geo = geometric_vars(spec);
    let band = spec.m - spec.n;
    let entries = (0..spec.n)
        .map(|j| {
            (0..spec.m)
                .map(|i| {
                    if i >= j && i - j <= band {
                        Polynomial::var(&geo, i - j).pow(spec.entry_degree(j, i) as u32)
                    } else {
                        Polynomial::zero(&geo)
                    }
                })
                .collect()
        })
        .collect();
    ConcreteMorphism::new(spec, entries)
}
