use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::One;

use super::ResultantError;
use crate::poly::{monomials_of_degree, Monomial, Polynomial, VarSet};
use crate::problem::ProblemSpec;

/// Variables `x0 … xN` of the base projective space.
pub fn geometric_vars(spec: &ProblemSpec) -> VarSet {
    VarSet::new((0..=spec.ambient_dim()).map(|v| format!("x{}", v))).expect("distinct names")
}

/// Identifies one coefficient of a generic morphism: entry `(row, col)`
/// (0-based) and the geometric monomial it multiplies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterSlot {
    pub row: usize,
    pub col: usize,
    pub monomial: Monomial,
}

/// The morphism whose entry `(j, i)` is `Σ_μ c_{j,i,μ} μ` over all monomials
/// `μ` of degree `d_i − k_j`, each coefficient a distinct parameter.
///
/// Parameters are ordered column by column, then by row, then by monomial
/// in descending graded-lex order. The default names are
/// `c_{j}_{i}_{e0_e1_…}` with 1-based `j`, `i` and the exponents of `μ`.
#[derive(Clone, Debug)]
pub struct GenericMorphism {
    spec: ProblemSpec,
    params: VarSet,
    geo: VarSet,
    slots: Vec<ParameterSlot>,
    blocks: Vec<Vec<usize>>,
    /// Entries over `params ++ geo`.
    entries: Vec<Vec<Polynomial>>,
    combined: VarSet,
}

impl GenericMorphism {
    pub fn new(spec: &ProblemSpec) -> Result<Self, ResultantError> {
        Self::with_names(spec, |slot| {
            let exps: Vec<String> = slot
                .monomial
                .exponents()
                .iter()
                .map(|e| format!("{}", e))
                .collect();
            format!("c_{}_{}_{}", slot.row + 1, slot.col + 1, exps.join("_"))
        })
    }

    /// Like [`new`](Self::new) with caller-chosen parameter names.
    pub fn with_names(
        spec: &ProblemSpec,
        mut name: impl FnMut(&ParameterSlot) -> String,
    ) -> Result<Self, ResultantError> {
        super::check_spec(spec)?;
        let geo = geometric_vars(spec);
        let nx = geo.len();
        let mut slots = Vec::new();
        let mut names = Vec::new();
        let mut blocks = Vec::with_capacity(spec.m);
        for i in 0..spec.m {
            let mut block = Vec::new();
            for j in 0..spec.n {
                let deg = spec.entry_degree(j, i) as u32;
                for mu in monomials_of_degree(nx, deg) {
                    let slot = ParameterSlot {
                        row: j,
                        col: i,
                        monomial: mu,
                    };
                    block.push(slots.len());
                    names.push(name(&slot));
                    slots.push(slot);
                }
            }
            blocks.push(block);
        }
        let params = VarSet::new(names.iter().cloned())?;
        let combined = VarSet::new(names.iter().cloned().chain(geo.names().iter().cloned()))?;
        let np = params.len();
        let mut entries = alloc::vec![alloc::vec![Polynomial::zero(&combined); spec.m]; spec.n];
        for (idx, slot) in slots.iter().enumerate() {
            let mut exps = alloc::vec![0u32; np];
            exps[idx] = 1;
            exps.extend_from_slice(slot.monomial.exponents());
            let term = Polynomial::monomial(&combined, Monomial::new(exps), BigRational::one());
            let e = &mut entries[slot.row][slot.col];
            *e = &*e + &term;
        }
        Ok(GenericMorphism {
            spec: spec.clone(),
            params,
            geo,
            slots,
            blocks,
            entries,
            combined,
        })
    }

    pub fn spec(&self) -> &ProblemSpec {
        &self.spec
    }

    pub fn parameter_vars(&self) -> &VarSet {
        &self.params
    }

    pub fn geometric_vars(&self) -> &VarSet {
        &self.geo
    }

    pub fn slots(&self) -> &[ParameterSlot] {
        &self.slots
    }

    /// Parameter indices belonging to column `i` (the coefficients of
    /// `h_{1,i}, …, h_{n,i}`).
    pub fn column_block(&self, i: usize) -> &[usize] {
        &self.blocks[i]
    }

    /// Entry `(j, i)` over the parameters followed by the geometric variables.
    pub fn entry(&self, j: usize, i: usize) -> &Polynomial {
        &self.entries[j][i]
    }

    pub(crate) fn combined_vars(&self) -> &VarSet {
        &self.combined
    }

    /// Reads the parameter values realizing a concrete morphism, in
    /// parameter order.
    pub fn parameter_values(&self, phi: &ConcreteMorphism) -> Result<Vec<BigRational>, ResultantError> {
        if phi.spec() != &self.spec {
            return Err(ResultantError::SpecMismatch);
        }
        Ok(self
            .slots
            .iter()
            .map(|s| phi.entry(s.row, s.col).coefficient(&s.monomial))
            .collect())
    }

    /// Named parameter assignment, for [`Polynomial::evaluate`].
    pub fn parameter_assignment(&self, phi: &ConcreteMorphism) -> Result<Vec<(String, BigRational)>, ResultantError> {
        Ok(self
            .params
            .names()
            .iter()
            .cloned()
            .zip(self.parameter_values(phi)?)
            .collect())
    }
}

/// A morphism with rational coefficients: entry `(j, i)` is zero or a form
/// of degree `d_i − k_j` in `x0 … xN`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConcreteMorphism {
    spec: ProblemSpec,
    geo: VarSet,
    entries: Vec<Vec<Polynomial>>,
}

impl ConcreteMorphism {
    /// Entries may use any variable names; they are matched to `x0 … xN`
    /// by position, so every entry must share one VarSet of `N + 1` variables.
    pub fn new(spec: &ProblemSpec, entries: Vec<Vec<Polynomial>>) -> Result<Self, ResultantError> {
        super::check_spec(spec)?;
        let geo = geometric_vars(spec);
        if entries.len() != spec.n || entries.iter().any(|r| r.len() != spec.m) {
            return Err(ResultantError::BadShape {
                rows: spec.n,
                cols: spec.m,
            });
        }
        let source = entries[0][0].vars().clone();
        if source.len() != geo.len() {
            return Err(ResultantError::BadEntry {
                row: 0,
                col: 0,
                reason: format!("expected {} variables, found {}", geo.len(), source.len()),
            });
        }
        let all: Vec<usize> = (0..geo.len()).collect();
        let mut out = Vec::with_capacity(spec.n);
        for (j, row) in entries.into_iter().enumerate() {
            let mut new_row = Vec::with_capacity(spec.m);
            for (i, e) in row.into_iter().enumerate() {
                if e.vars() != &source {
                    return Err(ResultantError::BadEntry {
                        row: j,
                        col: i,
                        reason: String::from("entries use different variable sets"),
                    });
                }
                let want = spec.entry_degree(j, i) as u32;
                if !e.is_zero() && (!e.is_homogeneous_in(&all) || e.total_degree() != Some(want)) {
                    return Err(ResultantError::BadEntry {
                        row: j,
                        col: i,
                        reason: format!("not a form of degree {}", want),
                    });
                }
                let terms = e.terms().map(|(m, c)| (c.clone(), m.exponents().to_vec()));
                new_row.push(Polynomial::from_terms(&geo, terms)?);
            }
            out.push(new_row);
        }
        Ok(ConcreteMorphism {
            spec: spec.clone(),
            geo,
            entries: out,
        })
    }

    pub fn spec(&self) -> &ProblemSpec {
        &self.spec
    }

    pub fn geometric_vars(&self) -> &VarSet {
        &self.geo
    }

    pub fn entry(&self, j: usize, i: usize) -> &Polynomial {
        &self.entries[j][i]
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }
}

/// Either kind of morphism, as accepted by [`build_sigma`](super::build_sigma).
#[derive(Clone, Copy, Debug)]
pub enum MorphismRef<'a> {
    Generic(&'a GenericMorphism),
    Concrete(&'a ConcreteMorphism),
}

impl<'a> From<&'a GenericMorphism> for MorphismRef<'a> {
    fn from(g: &'a GenericMorphism) -> Self {
        MorphismRef::Generic(g)
    }
}

impl<'a> From<&'a ConcreteMorphism> for MorphismRef<'a> {
    fn from(c: &'a ConcreteMorphism) -> Self {
        MorphismRef::Concrete(c)
    }
}

impl MorphismRef<'_> {
    pub fn spec(&self) -> &ProblemSpec {
        match self {
            MorphismRef::Generic(g) => g.spec(),
            MorphismRef::Concrete(c) => c.spec(),
        }
    }

    /// Parameter variables (empty for a concrete morphism).
    pub fn parameter_vars(&self) -> VarSet {
        match self {
            MorphismRef::Generic(g) => g.parameter_vars().clone(),
            MorphismRef::Concrete(_) => VarSet::empty(),
        }
    }

    /// Number of leading parameter slots in the variable set of [`entry`](Self::entry).
    pub(crate) fn param_count(&self) -> usize {
        match self {
            MorphismRef::Generic(g) => g.parameter_vars().len(),
            MorphismRef::Concrete(_) => 0,
        }
    }

    pub(crate) fn entry(&self, j: usize, i: usize) -> &Polynomial {
        match self {
            MorphismRef::Generic(g) => &g.entries[j][i],
            MorphismRef::Concrete(c) => &c.entries[j][i],
        }
    }

    pub(crate) fn entry_vars(&self) -> &VarSet {
        match self {
            MorphismRef::Generic(g) => g.combined_vars(),
            MorphismRef::Concrete(c) => &c.geo,
        }
    }
}
