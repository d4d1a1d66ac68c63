//! One function per subcommand. Each returns the rendered output and the
//! process exit code.

use std::fmt::{self, Write};

use detres_core::chern::{multidegree, total_degree, ChernError};
use detres_core::partition::complex_terms;
use detres_core::resultant::{
    build_sigma, critical_degree, resultant_gcd_for, vanish_test, ConcreteMorphism,
    DeterminantBackend, GenericMorphism, ResultantError, ResultantOptions, ResultantOutput,
    SigmaMatrix,
};
use detres_core::scroll::{
    chow_form, chow_problem, plane_meets_scroll, stiefel_morphism, PlaneStiefel, ScrollError,
    ScrollSpec,
};
use detres_core::ProblemSpec;
use num_rational::BigRational;

use crate::format::{
    monomial_text, status_name, to_json, ChowDoc, ChowTestDoc, ComplexDoc, DegreeDoc, MatrixDoc,
    ResultantDoc, SpecJson, TermShape, TestDoc, SCHEMA,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VANISHES: i32 = 10;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_EXISTENCE: i32 = 3;
pub const EXIT_UNCONFIRMED: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}

impl From<ResultantError> for Failure {
    fn from(e: ResultantError) -> Self {
        let code = match e {
            ResultantError::Existence(_) => EXIT_EXISTENCE,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ChernError> for Failure {
    fn from(e: ChernError) -> Self {
        ResultantError::from(e).into()
    }
}

impl From<ScrollError> for Failure {
    fn from(e: ScrollError) -> Self {
        match e {
            ScrollError::Resultant(r) => r.into(),
            other => Failure::invalid(other.to_string()),
        }
    }
}

fn render<T: serde::Serialize>(format: OutputFormat, doc: &T, text: impl FnOnce() -> String) -> String {
    match format {
        OutputFormat::Json => to_json(doc),
        OutputFormat::Text => text(),
    }
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub fn degree(spec: &ProblemSpec, format: OutputFormat) -> Result<Outcome, Failure> {
    let e = spec.existence_check();
    let mut doc = DegreeDoc {
        schema: SCHEMA.into(),
        spec: SpecJson::from_spec(spec),
        ambient_dim: spec.ambient_dim(),
        exists: e.exists,
        failures: e.failures.clone(),
        multidegree: vec![],
        total_degree: None,
        raw_sign_value: vec![],
        dual_form: vec![],
        critical_degree: None,
    };
    if e.exists {
        let md = multidegree(spec)?;
        doc.multidegree = md.degrees.iter().map(|v| v.to_string()).collect();
        doc.raw_sign_value = md.raw.iter().map(|v| v.to_string()).collect();
        doc.dual_form = md.dual_form.iter().map(|v| v.to_string()).collect();
        doc.total_degree = Some(total_degree(spec)?.to_string());
        doc.critical_degree = Some(critical_degree(spec)?);
    }
    let output = render(format, &doc, || {
        let mut s = String::new();
        writeln!(s, "N = {}", doc.ambient_dim).unwrap();
        if doc.exists {
            writeln!(s, "exists: yes").unwrap();
            writeln!(s, "multidegree: {}", list(&doc.multidegree)).unwrap();
            writeln!(s, "total degree: {}", doc.total_degree.as_deref().unwrap_or("")).unwrap();
            writeln!(s, "critical degree: {}", doc.critical_degree.unwrap_or(0)).unwrap();
        } else {
            writeln!(s, "exists: no").unwrap();
            for f in &doc.failures {
                writeln!(s, "  {}", f).unwrap();
            }
        }
        s
    });
    Ok(Outcome {
        output,
        code: if e.exists { EXIT_OK } else { EXIT_EXISTENCE },
    })
}

fn sigma_text(sigma: &SigmaMatrix) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "sigma_{}: {} x {} over {}",
        sigma.degree,
        sigma.rows(),
        sigma.cols(),
        sigma.geo.names().join(", ")
    )
    .unwrap();
    let cols: Vec<String> = sigma
        .col_basis
        .iter()
        .map(|c| {
            let one = |v: &[usize]| v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join("");
            format!("J={} I={} mu={}", one(&c.rows), one(&c.cols), monomial_text(&sigma.geo, c.shift.exponents()))
        })
        .collect();
    for (j, c) in cols.iter().enumerate() {
        writeln!(s, "col {}: {}", j, c).unwrap();
    }
    for (i, rho) in sigma.row_basis.iter().enumerate() {
        let entries: Vec<String> = (0..sigma.cols()).map(|j| sigma.entries.get(i, j).to_string()).collect();
        writeln!(s, "{}: {}", monomial_text(&sigma.geo, rho.exponents()), entries.join(" | ")).unwrap();
    }
    s
}

fn working_degree(spec: &ProblemSpec, degree: Option<u32>) -> Result<u32, Failure> {
    let nu = critical_degree(spec)?;
    match degree {
        Some(d) if (d as i64) < nu => Err(ResultantError::DegreeBelowCritical { d: d as i64, nu }.into()),
        Some(d) => Ok(d),
        None => Ok(nu.max(0) as u32),
    }
}

pub fn matrix(
    spec: &ProblemSpec,
    degree: Option<u32>,
    phi: Option<&ConcreteMorphism>,
    format: OutputFormat,
) -> Result<Outcome, Failure> {
    let d = working_degree(spec, degree)?;
    let sigma = match phi {
        Some(phi) => build_sigma(spec, d, phi)?,
        None => build_sigma(spec, d, &GenericMorphism::new(spec)?)?,
    };
    let doc = MatrixDoc::new(spec, &sigma);
    Ok(Outcome {
        output: render(format, &doc, || sigma_text(&sigma)),
        code: EXIT_OK,
    })
}

fn resultant_text(out: &ResultantOutput) -> String {
    let mut s = String::new();
    writeln!(s, "status: {}", status_name(out.status)).unwrap();
    writeln!(s, "degree: {} (target {})", out.total_degree(), out.target_degree).unwrap();
    writeln!(s, "block degrees: {}", list(&out.degree_report)).unwrap();
    writeln!(s, "sigma_{}: {} x {}", out.sigma_degree, out.sigma_rows, out.sigma_cols).unwrap();
    writeln!(s, "minors used: {}", out.minors.len()).unwrap();
    writeln!(s, "resultant: {}", out.polynomial).unwrap();
    s
}

fn options(degree: Option<u32>, budget: usize) -> Result<ResultantOptions, Failure> {
    if budget == 0 {
        return Err(Failure::invalid("the minor budget must be at least 1"));
    }
    Ok(ResultantOptions {
        degree,
        minor_budget: budget,
    })
}

fn status_code(out: &ResultantOutput) -> i32 {
    if out.is_confirmed() {
        EXIT_OK
    } else {
        EXIT_UNCONFIRMED
    }
}

pub fn resultant(
    spec: &ProblemSpec,
    degree: Option<u32>,
    budget: usize,
    backend: &dyn DeterminantBackend,
    format: OutputFormat,
) -> Result<Outcome, Failure> {
    let opts = options(degree, budget)?;
    let g = GenericMorphism::new(spec)?;
    let out = resultant_gcd_for(&g, opts, backend)?;
    let doc = ResultantDoc::new(spec, &out);
    Ok(Outcome {
        output: render(format, &doc, || resultant_text(&out)),
        code: status_code(&out),
    })
}

pub fn test(
    spec: &ProblemSpec,
    phi: &ConcreteMorphism,
    degree: Option<u32>,
    format: OutputFormat,
) -> Result<Outcome, Failure> {
    let report = vanish_test(spec, phi, degree)?;
    let doc = TestDoc::new(spec, &report);
    let output = render(format, &doc, || {
        format!(
            "rank {} of {} (sigma_{}: {} x {})\nvanishes: {}\n",
            report.rank,
            report.rows,
            report.degree,
            report.rows,
            report.cols,
            if report.vanishes { "yes" } else { "no" }
        )
    });
    Ok(Outcome {
        output,
        code: if report.vanishes { EXIT_VANISHES } else { EXIT_OK },
    })
}

/// Comma-separated block degrees such as `2,1`.
pub fn parse_scroll(text: &str) -> Result<ScrollSpec, Failure> {
    let degrees = text
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::invalid(format!("scroll degrees must look like 2,1; got {:?}", text)))?;
    Ok(ScrollSpec::new(degrees)?)
}

pub fn chow(
    scroll: &ScrollSpec,
    budget: usize,
    backend: &dyn DeterminantBackend,
    format: OutputFormat,
) -> Result<Outcome, Failure> {
    let problem = chow_problem(scroll);
    let g = stiefel_morphism(scroll)?;
    let nu = critical_degree(&problem)? as u32;
    let sigma = build_sigma(&problem, nu, &g)?;
    let form = if budget == 0 {
        None
    } else {
        Some(chow_form(scroll, options(None, budget)?, backend)?)
    };
    let doc = ChowDoc {
        schema: SCHEMA.into(),
        scroll: scroll.degrees().to_vec(),
        matrix: MatrixDoc::new(&problem, &sigma),
        chow_form: form.as_ref().map(|f| ResultantDoc::new(&problem, f)),
    };
    let output = render(format, &doc, || {
        let mut s = sigma_text(&sigma);
        if let Some(f) = &form {
            s.push_str(&resultant_text(f));
        }
        s
    });
    Ok(Outcome {
        output,
        code: form.as_ref().map_or(EXIT_OK, status_code),
    })
}

pub fn chow_test(scroll: &ScrollSpec, rows: Vec<Vec<BigRational>>, format: OutputFormat) -> Result<Outcome, Failure> {
    let plane = PlaneStiefel::new(scroll, rows)?;
    let v = plane_meets_scroll(scroll, &plane)?;
    let doc = ChowTestDoc::new(scroll.degrees(), &v);
    let output = render(format, &doc, || {
        let mut s = format!(
            "rank {} of {} (sigma_{}: {} x {})\nmeets: {}\n",
            v.report.rank,
            v.report.rows,
            v.report.degree,
            v.report.rows,
            v.report.cols,
            if v.meets { "yes" } else { "no" }
        );
        if v.degenerate {
            writeln!(s, "warning: plane rows have rank {}, not {}", v.plane_rank, scroll.blocks() + 1).unwrap();
        }
        s
    });
    Ok(Outcome {
        output,
        code: if v.meets { EXIT_VANISHES } else { EXIT_OK },
    })
}

pub fn complex(spec: &ProblemSpec, p: i64, format: OutputFormat) -> Result<Outcome, Failure> {
    let terms = complex_terms(spec.m as u32, spec.n as u32, spec.r as u32, p)
        .map_err(|e| Failure::invalid(e.to_string()))?;
    let doc = ComplexDoc {
        schema: SCHEMA.into(),
        spec: SpecJson::from_spec(spec),
        p,
        terms: terms.iter().map(TermShape::from).collect(),
    };
    let output = render(format, &doc, || {
        terms
            .iter()
            .map(|t| format!("p={} I={} I'={} n(I)={}\n", t.homological_index, t.i, t.i_prime, t.ampleness))
            .collect()
    });
    Ok(Outcome { output, code: EXIT_OK })
}
