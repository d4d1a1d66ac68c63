//! Rational normal scrolls `S(d_1, …, d_r)`: equations, parametrization and
//! Chow forms through the principal determinantal resultant on `P^1`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::matrix::{det_fraction_free, rank, ExactDomain, Matrix, MatrixError};
use crate::poly::{Polynomial, VarSet};
use crate::problem::ProblemSpec;
use crate::resultant::{
    self, vanish_test, ConcreteMorphism, DeterminantBackend, GenericMorphism, ResultantError,
    ResultantOptions, ResultantOutput, VanishReport,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScrollError {
    #[error("a scroll needs at least one block")]
    Empty,
    #[error("block {index} has degree 0; every block degree must be at least 1")]
    ZeroDegree { index: usize },
    #[error("(x:y) = (0:0) is not a point of P^1")]
    ZeroPoint,
    #[error("lambda must have {expected} entries, not all zero")]
    BadLambda { expected: usize },
    #[error("plane must be {rows}x{cols}, got {found_rows}x{found_cols}")]
    PlaneShape {
        rows: usize,
        cols: usize,
        found_rows: usize,
        found_cols: usize,
    },
    #[error(transparent)]
    Resultant(#[from] ResultantError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Block degrees `(d_1, …, d_r)`, all at least 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScrollSpec {
    degrees: Vec<u32>,
}

impl ScrollSpec {
    pub fn new(degrees: Vec<u32>) -> Result<Self, ScrollError> {
        if degrees.is_empty() {
            return Err(ScrollError::Empty);
        }
        if let Some(index) = degrees.iter().position(|&d| d == 0) {
            return Err(ScrollError::ZeroDegree { index: index + 1 });
        }
        Ok(ScrollSpec { degrees })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Number of blocks `r`.
    pub fn blocks(&self) -> usize {
        self.degrees.len()
    }

    /// `N` with `N + 1 = Σ(d_i + 1)`.
    pub fn ambient_dim(&self) -> usize {
        self.degrees.iter().map(|&d| d as usize + 1).sum::<usize>() - 1
    }

    /// `Σ d_i`, the degree of the scroll.
    pub fn degree(&self) -> u32 {
        self.degrees.iter().sum()
    }

    /// Position of `X_{i,j}` (1-based block `i`) among the coordinates.
    pub fn coordinate_index(&self, block: usize, j: usize) -> usize {
        self.degrees[..block - 1].iter().map(|&d| d as usize + 1).sum::<usize>() + j
    }

    /// Coordinates `X{i}_{j}`, blocks in order and `j` ascending in each block.
    pub fn coordinate_vars(&self) -> VarSet {
        let names = self
            .degrees
            .iter()
            .enumerate()
            .flat_map(|(i, &d)| (0..=d).map(move |j| format!("X{}_{}", i + 1, j)));
        VarSet::new(names).expect("distinct names")
    }
}

/// The `2 × Σd_i` matrix whose block `i` has top row `X_{i,0} … X_{i,d_i−1}`
/// and bottom row `X_{i,1} … X_{i,d_i}`.
pub fn scroll_matrix(spec: &ScrollSpec) -> Matrix<Polynomial> {
    let vars = spec.coordinate_vars();
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (b, &d) in spec.degrees.iter().enumerate() {
        for j in 0..d as usize {
            let idx = spec.coordinate_index(b + 1, j);
            top.push(Polynomial::var(&vars, idx));
            bottom.push(Polynomial::var(&vars, idx + 1));
        }
    }
    Matrix::from_rows(vec![top, bottom]).expect("rows have equal length")
}

/// All 2×2 minors of [`scroll_matrix`], column pairs in lexicographic order.
pub fn scroll_equations(spec: &ScrollSpec) -> Vec<Polynomial> {
    let m = scroll_matrix(spec);
    resultant::subsets(m.cols(), 2)
        .into_iter()
        .map(|c| &(m.get(0, c[0]) * m.get(1, c[1])) - &(m.get(0, c[1]) * m.get(1, c[0])))
        .collect()
}

/// The point `X_{i,j} = λ_i x^{d_i−j} y^j`.
pub fn parametrize(
    spec: &ScrollSpec,
    point: (&BigRational, &BigRational),
    lambda: &[BigRational],
) -> Result<Vec<BigRational>, ScrollError> {
    let (x, y) = point;
    if Zero::is_zero(x) && Zero::is_zero(y) {
        return Err(ScrollError::ZeroPoint);
    }
    if lambda.len() != spec.blocks() || lambda.iter().all(Zero::is_zero) {
        return Err(ScrollError::BadLambda {
            expected: spec.blocks(),
        });
    }
    let mut out = Vec::with_capacity(spec.ambient_dim() + 1);
    for (&d, l) in spec.degrees.iter().zip(lambda) {
        for j in 0..=d as usize {
            out.push(l * num_traits::pow(x.clone(), d as usize - j) * num_traits::pow(y.clone(), j));
        }
    }
    Ok(out)
}

/// The principal problem on `P^1` whose resultant is the Chow form:
/// `m = r + 1`, `n = r`, rank bound `r − 1`, `d = 0`, `k_j = −d_j`.
pub fn chow_problem(spec: &ScrollSpec) -> ProblemSpec {
    let r = spec.blocks();
    ProblemSpec::new(
        r + 1,
        r,
        r - 1,
        vec![0; r + 1],
        spec.degrees.iter().map(|&d| -(d as i64)).collect(),
    )
}

/// Name of Stiefel coordinate `idx` in row `s` of a plane: `a{idx}` for the
/// first row, `b{idx}` for the second, and so on; `s{row}_{idx}` past `z`.
pub fn stiefel_name(s: usize, idx: usize) -> String {
    if s < 26 {
        format!("{}{}", (b'a' + s as u8) as char, idx)
    } else {
        format!("s{}_{}", s + 1, idx)
    }
}

/// The generic morphism of [`chow_problem`] whose column `s` carries the
/// linear form of row `s` of a plane: the coefficient of `x^{d_j−t} y^t` in
/// entry `(j, s)` is the Stiefel coordinate of `X_{j,t}`.
pub fn stiefel_morphism(spec: &ScrollSpec) -> Result<GenericMorphism, ScrollError> {
    let problem = chow_problem(spec);
    Ok(GenericMorphism::with_names(&problem, |slot| {
        let idx = spec.coordinate_index(slot.row + 1, slot.monomial.exponent(1) as usize);
        stiefel_name(slot.col, idx)
    })?)
}

/// The symbolic `(r+1) × (N+1)` Stiefel matrix over the parameters of
/// [`stiefel_morphism`].
pub fn stiefel_matrix(spec: &ScrollSpec) -> Result<Matrix<Polynomial>, ScrollError> {
    let g = stiefel_morphism(spec)?;
    let vars = g.parameter_vars().clone();
    Ok(Matrix::from_fn(spec.blocks() + 1, spec.ambient_dim() + 1, |s, c| {
        Polynomial::var_named(&vars, &stiefel_name(s, c)).expect("Stiefel variable exists")
    }))
}

/// Chow form of the scroll in Stiefel coordinates.
pub fn chow_form(
    spec: &ScrollSpec,
    opts: ResultantOptions,
    backend: &dyn DeterminantBackend,
) -> Result<ResultantOutput, ScrollError> {
    let g = stiefel_morphism(spec)?;
    Ok(resultant::resultant_gcd_for(&g, opts, backend)?)
}

/// All maximal minors of a plane's Stiefel matrix, column subsets in
/// lexicographic order.
pub fn plucker_coords<T: ExactDomain>(plane: &Matrix<T>) -> Result<Vec<T>, MatrixError> {
    let rows: Vec<usize> = (0..plane.rows()).collect();
    resultant::subsets(plane.cols(), plane.rows())
        .into_iter()
        .map(|c| det_fraction_free(&plane.select(&rows, &c)))
        .collect()
}

/// A rational plane given by `r + 1` linear forms on `P^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneStiefel {
    rows: Matrix<BigRational>,
}

impl PlaneStiefel {
    pub fn new(spec: &ScrollSpec, rows: Vec<Vec<BigRational>>) -> Result<Self, ScrollError> {
        let (want_r, want_c) = (spec.blocks() + 1, spec.ambient_dim() + 1);
        let shape_err = |fr: usize, fc: usize| ScrollError::PlaneShape {
            rows: want_r,
            cols: want_c,
            found_rows: fr,
            found_cols: fc,
        };
        let found_rows = rows.len();
        let m = Matrix::from_rows(rows).map_err(|_| shape_err(found_rows, 0))?;
        if m.rows() != want_r || m.cols() != want_c {
            return Err(shape_err(m.rows(), m.cols()));
        }
        Ok(PlaneStiefel { rows: m })
    }

    pub fn matrix(&self) -> &Matrix<BigRational> {
        &self.rows
    }

    /// Parameter values for [`stiefel_morphism`], in its parameter order.
    pub fn parameter_values(&self, spec: &ScrollSpec) -> Result<Vec<(String, BigRational)>, ScrollError> {
        let g = stiefel_morphism(spec)?;
        Ok(g.parameter_vars()
            .names()
            .iter()
            .zip(g.slots())
            .map(|(name, slot)| {
                let idx = spec.coordinate_index(slot.row + 1, slot.monomial.exponent(1) as usize);
                (name.clone(), self.rows.get(slot.col, idx).clone())
            })
            .collect())
    }

    /// The concrete morphism of [`chow_problem`] determined by the plane.
    pub fn to_morphism(&self, spec: &ScrollSpec) -> Result<ConcreteMorphism, ScrollError> {
        let problem = chow_problem(spec);
        let geo = resultant::geometric_vars(&problem);
        let mut entries = Vec::with_capacity(spec.blocks());
        for (b, &d) in spec.degrees.iter().enumerate() {
            let row = (0..self.rows.rows())
                .map(|s| {
                    let mut p = Polynomial::zero(&geo);
                    for t in 0..=d {
                        let c = self.rows.get(s, spec.coordinate_index(b + 1, t as usize));
                        let mono = crate::poly::Monomial::new(vec![d - t, t]);
                        p = &p + &Polynomial::monomial(&geo, mono, c.clone());
                    }
                    p
                })
                .collect();
            entries.push(row);
        }
        Ok(ConcreteMorphism::new(&problem, entries)?)
    }
}

/// Verdict of [`plane_meets_scroll`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlaneVerdict {
    pub meets: bool,
    /// The rows are linearly dependent, so they do not cut out a plane of
    /// codimension `r + 1`; `meets` then reports the rank test as is.
    pub degenerate: bool,
    pub plane_rank: usize,
    pub report: VanishReport,
}

/// Whether the plane meets the scroll, by the rank test on `σ_ν`.
pub fn plane_meets_scroll(spec: &ScrollSpec, plane: &PlaneStiefel) -> Result<PlaneVerdict, ScrollError> {
    let problem = chow_problem(spec);
    let phi = plane.to_morphism(spec)?;
    let report = vanish_test(&problem, &phi, None)?;
    let plane_rank = rank(&plane.rows);
    Ok(PlaneVerdict {
        meets: report.vanishes,
        degenerate: plane_rank < spec.blocks() + 1,
        plane_rank,
        report,
    })
}

/// Row-scales a Stiefel matrix; used to check verdict invariance.
pub fn scale_row(plane: &PlaneStiefel, row: usize, factor: &BigRational) -> PlaneStiefel {
    let m = Matrix::from_fn(plane.rows.rows(), plane.rows.cols(), |i, j| {
        let v = plane.rows.get(i, j);
        if i == row {
            v * factor
        } else {
            v.clone()
        }
    });
    PlaneStiefel { rows: m }
}
