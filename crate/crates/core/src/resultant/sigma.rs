use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::morphism::MorphismRef;
use super::ResultantError;
use crate::matrix::{det_fraction_free, Matrix};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, VarSet};
use crate::problem::ProblemSpec;

/// Column label `(J, I, μ)`: rows `J` and columns `I` of the morphism (both
/// 0-based, increasing) and the shift monomial `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaColumn {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub shift: Monomial,
}

/// The matrix of `σ_d`: column `(J, I, μ)` holds the coefficients of
/// `Δ_{J,I}·μ` in the monomial basis of degree-`d` forms.
#[derive(Clone, Debug)]
pub struct SigmaMatrix {
    pub degree: u32,
    pub row_basis: Vec<Monomial>,
    pub col_basis: Vec<SigmaColumn>,
    /// Polynomials in the parameter variables; constants for a concrete morphism.
    pub entries: Matrix<Polynomial>,
    pub params: VarSet,
    pub geo: VarSet,
    /// Number of `(J, I)` pairs skipped because `Δ_{J,I}` has degree above `d`.
    pub omitted_blocks: usize,
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..k).rev().find(|&t| cur[t] < n - k + t) else {
            return out;
        };
        cur[pos] += 1;
        for t in pos + 1..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
}

/// Builds `σ_d(φ)` with columns ordered by `J`, then `I` (both
/// lexicographic), then `μ` in descending graded-lex order, and rows in
/// descending graded-lex order.
pub fn build_sigma<'a>(
    spec: &ProblemSpec,
    d: u32,
    phi: impl Into<MorphismRef<'a>>,
) -> Result<SigmaMatrix, ResultantError> {
    let phi = phi.into();
    if phi.spec() != spec {
        return Err(ResultantError::SpecMismatch);
    }
    super::check_spec(spec)?;
    let size = spec.r + 1;
    let np = phi.param_count();
    let params = phi.parameter_vars();
    let combined = phi.entry_vars().clone();
    let nx = combined.len() - np;
    let geo = VarSet::new(combined.names()[np..].iter().cloned())?;
    let row_basis = monomials_of_degree(nx, d);
    let row_index: BTreeMap<&Monomial, usize> =
        row_basis.iter().enumerate().map(|(i, m)| (m, i)).collect();

    let mut col_basis = Vec::new();
    let mut columns: Vec<Vec<Polynomial>> = Vec::new();
    let mut omitted = 0;
    for rows in subsets(spec.n, size) {
        for cols in subsets(spec.m, size) {
            let minor_deg: i64 = cols.iter().map(|&i| spec.d[i]).sum::<i64>()
                - rows.iter().map(|&j| spec.k[j]).sum::<i64>();
            let comp = d as i64 - minor_deg;
            if comp < 0 {
                omitted += 1;
                continue;
            }
            let sub = Matrix::from_fn(size, size, |a, b| phi.entry(rows[a], cols[b]).clone());
            let delta = det_fraction_free(&sub)?;
            // Split Δ by geometric monomial: param part keyed by the geometric exponents.
            let mut split: Vec<(Monomial, Monomial, BigRational)> = Vec::with_capacity(delta.num_terms());
            for (m, c) in delta.terms() {
                let e = m.exponents();
                split.push((
                    Monomial::new(e[np..].to_vec()),
                    Monomial::new(e[..np].to_vec()),
                    c.clone(),
                ));
            }
            for mu in monomials_of_degree(nx, comp as u32) {
                let mut column = alloc::vec![Polynomial::zero(&params); row_basis.len()];
                for (g, p, c) in &split {
                    let rho = g.mul(&mu);
                    let idx = row_index[&rho];
                    column[idx].add_term(p.clone(), c.clone());
                }
                columns.push(column);
                col_basis.push(SigmaColumn {
                    rows: rows.clone(),
                    cols: cols.clone(),
                    shift: mu,
                });
            }
        }
    }
    let entries = Matrix::from_fn(row_basis.len(), columns.len(), |i, j| columns[j][i].clone());
    Ok(SigmaMatrix {
        degree: d,
        row_basis,
        col_basis,
        entries,
        params,
        geo,
        omitted_blocks: omitted,
    })
}

impl SigmaMatrix {
    pub fn rows(&self) -> usize {
        self.entries.rows()
    }

    pub fn cols(&self) -> usize {
        self.entries.cols()
    }

    /// Column `c` re-expanded as `Σ_ρ entry·ρ` over the parameters followed
    /// by the geometric variables.
    pub fn reexpand_column(&self, c: usize) -> Result<Polynomial, ResultantError> {
        let combined = VarSet::new(self.params.names().iter().chain(self.geo.names()).cloned())?;
        let mut out = Polynomial::zero(&combined);
        for (i, rho) in self.row_basis.iter().enumerate() {
            for (m, coef) in self.entries.get(i, c).terms() {
                let mut e = m.exponents().to_vec();
                e.extend_from_slice(rho.exponents());
                out.add_term(Monomial::new(e), coef.clone());
            }
        }
        Ok(out)
    }

    /// The matrix evaluated at a dense parameter vector.
    pub fn evaluate(&self, values: &[BigRational]) -> Matrix<BigRational> {
        self.entries.map(|p| p.evaluate_dense(values))
    }
}
