//! JSON file formats. Every output document carries `"schema": "detres/1"`.

use std::fmt;

use detres_core::partition::ComplexTerm;
use detres_core::resultant::{
    ConcreteMorphism, Confirmation, ResultantOutput, SigmaMatrix, VanishReport,
};
use detres_core::scroll::PlaneVerdict;
use detres_core::{Monomial, Polynomial, ProblemSpec, VarSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "detres/1";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for FormatError {}

fn err<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError(msg.into()))
}

/// Parses `"p"`, `"-p"` or `"p/q"` with integer `p`, `q`.
pub fn parse_rational(s: &str) -> Result<BigRational, FormatError> {
    let s = s.trim();
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| FormatError(format!("not an exact rational: {:?}", s)));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(int(s)?)),
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return err(format!("zero denominator in {:?}", s));
            }
            Ok(BigRational::new(int(n)?, d))
        }
    }
}

pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

/// A polynomial with its variable names and terms in descending graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(p: &Polynomial) -> Self {
        PolyJson {
            vars: p.vars().names().to_vec(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    c: format_rational(c),
                    e: m.exponents().to_vec(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<Polynomial, FormatError> {
        let vars = VarSet::new(self.vars.iter().cloned()).map_err(|e| FormatError(e.to_string()))?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.e.len() != vars.len() {
                return err(format!("term has {} exponents for {} variables", t.e.len(), vars.len()));
            }
            terms.push((parse_rational(&t.c)?, t.e.clone()));
        }
        Polynomial::from_terms(&vars, terms).map_err(|e| FormatError(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecJson {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub d: Vec<i64>,
    pub k: Vec<i64>,
}

impl SpecJson {
    pub fn from_spec(s: &ProblemSpec) -> Self {
        SpecJson {
            m: s.m,
            n: s.n,
            r: s.r,
            d: s.d.clone(),
            k: s.k.clone(),
        }
    }

    pub fn to_spec(&self) -> Result<ProblemSpec, FormatError> {
        if self.d.len() != self.m || self.k.len() != self.n {
            return err(format!(
                "d must have m = {} entries and k must have n = {} entries",
                self.m, self.n
            ));
        }
        Ok(ProblemSpec::new(self.m, self.n, self.r, self.d.clone(), self.k.clone()))
    }
}

/// `phi.json`: an `n × m` array of polynomials in the geometric variables.
pub fn morphism_from_json(spec: &ProblemSpec, rows: &[Vec<PolyJson>]) -> Result<ConcreteMorphism, FormatError> {
    let entries = rows
        .iter()
        .map(|row| row.iter().map(PolyJson::to_poly).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    ConcreteMorphism::new(spec, entries).map_err(|e| FormatError(e.to_string()))
}

/// `plane.json`: rows of exact rational strings.
pub fn plane_from_json(rows: &[Vec<String>]) -> Result<Vec<Vec<BigRational>>, FormatError> {
    rows.iter()
        .map(|row| row.iter().map(|s| parse_rational(s)).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDoc {
    pub schema: String,
    pub spec: SpecJson,
    pub ambient_dim: usize,
    pub exists: bool,
    pub failures: Vec<String>,
    pub multidegree: Vec<String>,
    pub total_degree: Option<String>,
    pub raw_sign_value: Vec<String>,
    pub dual_form: Vec<String>,
    pub critical_degree: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnJson {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub shift: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub schema: String,
    pub spec: SpecJson,
    pub degree: u32,
    pub rows: usize,
    pub cols: usize,
    pub parameters: Vec<String>,
    pub geometric: Vec<String>,
    pub row_basis: Vec<Vec<u32>>,
    pub col_basis: Vec<ColumnJson>,
    pub omitted_blocks: usize,
    pub entries: Vec<Vec<PolyJson>>,
}

impl MatrixDoc {
    pub fn new(spec: &ProblemSpec, sigma: &SigmaMatrix) -> Self {
        MatrixDoc {
            schema: SCHEMA.into(),
            spec: SpecJson::from_spec(spec),
            degree: sigma.degree,
            rows: sigma.rows(),
            cols: sigma.cols(),
            parameters: sigma.params.names().to_vec(),
            geometric: sigma.geo.names().to_vec(),
            row_basis: sigma.row_basis.iter().map(|m| m.exponents().to_vec()).collect(),
            col_basis: sigma
                .col_basis
                .iter()
                .map(|c| ColumnJson {
                    rows: c.rows.clone(),
                    cols: c.cols.clone(),
                    shift: c.shift.exponents().to_vec(),
                })
                .collect(),
            omitted_blocks: sigma.omitted_blocks,
            entries: (0..sigma.rows())
                .map(|i| (0..sigma.cols()).map(|j| PolyJson::from_poly(sigma.entries.get(i, j))).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorJson {
    pub columns: Vec<usize>,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizationJson {
    pub rule: String,
    pub leading_exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultantDoc {
    pub schema: String,
    pub spec: SpecJson,
    pub status: String,
    pub target_degree: u32,
    pub total_degree: u32,
    pub degree_report: Vec<u32>,
    pub sigma_degree: u32,
    pub sigma_rows: usize,
    pub sigma_cols: usize,
    pub minors: Vec<MinorJson>,
    pub normalization: NormalizationJson,
    pub polynomial: PolyJson,
}

pub fn status_name(s: Confirmation) -> &'static str {
    match s {
        Confirmation::Confirmed => "confirmed",
        Confirmation::Unconfirmed => "unconfirmed",
    }
}

impl ResultantDoc {
    pub fn new(spec: &ProblemSpec, out: &ResultantOutput) -> Self {
        ResultantDoc {
            schema: SCHEMA.into(),
            spec: SpecJson::from_spec(spec),
            status: status_name(out.status).into(),
            target_degree: out.target_degree,
            total_degree: out.total_degree(),
            degree_report: out.degree_report.clone(),
            sigma_degree: out.sigma_degree,
            sigma_rows: out.sigma_rows,
            sigma_cols: out.sigma_cols,
            minors: out
                .minors
                .iter()
                .map(|m| MinorJson {
                    columns: m.columns.clone(),
                    degree: m.degree,
                })
                .collect(),
            normalization: NormalizationJson {
                rule: out.normalization.rule.into(),
                leading_exponents: out.normalization.leading_exponents.clone(),
            },
            polynomial: PolyJson::from_poly(&out.polynomial),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestDoc {
    pub schema: String,
    pub spec: SpecJson,
    pub vanishes: bool,
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
    pub degree: u32,
}

impl TestDoc {
    pub fn new(spec: &ProblemSpec, r: &VanishReport) -> Self {
        TestDoc {
            schema: SCHEMA.into(),
            spec: SpecJson::from_spec(spec),
            vanishes: r.vanishes,
            rank: r.rank,
            rows: r.rows,
            cols: r.cols,
            degree: r.degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChowDoc {
    pub schema: String,
    pub scroll: Vec<u32>,
    pub matrix: MatrixDoc,
    pub chow_form: Option<ResultantDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChowTestDoc {
    pub schema: String,
    pub scroll: Vec<u32>,
    pub meets: bool,
    pub degenerate: bool,
    pub plane_rank: usize,
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
    pub degree: u32,
}

impl ChowTestDoc {
    pub fn new(scroll: &[u32], v: &PlaneVerdict) -> Self {
        ChowTestDoc {
            schema: SCHEMA.into(),
            scroll: scroll.to_vec(),
            meets: v.meets,
            degenerate: v.degenerate,
            plane_rank: v.plane_rank,
            rank: v.report.rank,
            rows: v.report.rows,
            cols: v.report.cols,
            degree: v.report.degree,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermShape {
    pub p: i64,
    pub i: Vec<u32>,
    pub i_prime: Vec<u32>,
    pub ampleness: u32,
}

impl From<&ComplexTerm> for TermShape {
    fn from(t: &ComplexTerm) -> Self {
        TermShape {
            p: t.homological_index,
            i: t.i.nonzero_parts().to_vec(),
            i_prime: t.i_prime.nonzero_parts().to_vec(),
            ampleness: t.ampleness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    pub schema: String,
    pub spec: SpecJson,
    pub p: i64,
    pub terms: Vec<TermShape>,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// Exponent vector to a monomial string over `vars`, `1` for the constant.
pub fn monomial_text(vars: &VarSet, e: &[u32]) -> String {
    Polynomial::monomial(vars, Monomial::new(e.to_vec()), BigRational::from_integer(1.into())).to_string()
}
