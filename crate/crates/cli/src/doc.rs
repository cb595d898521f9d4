//! JSON documents: systems, certificates, point sets and coefficient
//! matrices. Every exact number travels as a string.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use nullcert::bounds::BoundReport;
use nullcert::poly::{PolySystem, Polynomial};
use nullcert::polytope::{convex_hull, LatticePolytope};
use nullcert::serde_util::{format_rational, parse_rational};
use nullcert::solver::{Certificate, PlanMode};
use nullcert::ExponentVector;

use crate::CliError;

pub const SCHEMA: &str = "nullcert/1";

fn schema() -> String {
    SCHEMA.to_string()
}

fn check_schema(s: &str) -> Result<(), CliError> {
    if s != SCHEMA {
        return Err(CliError::Parse(format!("unsupported schema {s:?}, expected {SCHEMA:?}")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub exp: Vec<i64>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDocument {
    #[serde(default = "schema")]
    pub schema: String,
    pub vars: Vec<String>,
    #[serde(default)]
    pub laurent: bool,
    pub polys: Vec<Vec<TermDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub localizer: Option<Vec<TermDoc>>,
}

pub fn terms_to_poly(nvars: usize, laurent: bool, terms: &[TermDoc]) -> Result<Polynomial, CliError> {
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        if t.exp.len() != nvars {
            return Err(CliError::Parse(format!(
                "exponent {:?} has length {}, expected {nvars}",
                t.exp,
                t.exp.len()
            )));
        }
        let c = parse_rational(&t.coef).map_err(CliError::Parse)?;
        if c.is_zero() {
            return Err(CliError::Parse(format!("zero coefficient at exponent {:?}", t.exp)));
        }
        parsed.push((ExponentVector::new(t.exp.clone()), c));
    }
    Polynomial::from_terms(nvars, laurent, parsed).map_err(|e| CliError::Domain(e.to_string()))
}

/// Terms in lexicographic exponent order, coefficients in lowest terms.
pub fn poly_to_terms(p: &Polynomial) -> Vec<TermDoc> {
    p.terms()
        .map(|(e, c)| TermDoc {
            exp: e.coords().to_vec(),
            coef: format_rational(c),
        })
        .collect()
}

pub fn default_vars(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl SystemDocument {
    pub fn to_system(&self) -> Result<PolySystem, CliError> {
        check_schema(&self.schema)?;
        if self.polys.is_empty() {
            return Err(CliError::Domain("system has no polynomials".into()));
        }
        let n = self.vars.len();
        let polys = self
            .polys
            .iter()
            .map(|t| terms_to_poly(n, self.laurent, t))
            .collect::<Result<Vec<_>, _>>()?;
        let localizer = self
            .localizer
            .as_ref()
            .map(|t| terms_to_poly(n, self.laurent, t))
            .transpose()?;
        PolySystem::new(polys, localizer).map_err(|e| CliError::Domain(e.to_string()))
    }

    pub fn from_system(sys: &PolySystem, vars: Option<Vec<String>>) -> Self {
        SystemDocument {
            schema: schema(),
            vars: vars.unwrap_or_else(|| default_vars(sys.nvars())),
            laurent: sys.is_laurent(),
            polys: sys.polys().iter().map(poly_to_terms).collect(),
            localizer: sys.localizer().map(poly_to_terms),
        }
    }

    /// Parse, rebuild and re-serialize: sorted terms, reduced coefficients.
    pub fn canonical(&self) -> Result<Self, CliError> {
        Ok(SystemDocument::from_system(&self.to_system()?, Some(self.vars.clone())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum PlanDoc {
    Degree {
        bound: u64,
    },
    Polytope {
        dilation: u64,
        base_vertices: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        shift: Option<Vec<i64>>,
    },
}

impl PlanDoc {
    pub fn from_mode(mode: &PlanMode) -> Self {
        match mode {
            PlanMode::Degree { bound } => PlanDoc::Degree { bound: *bound },
            PlanMode::Polytope { dilation, base, shift } => PlanDoc::Polytope {
                dilation: *dilation,
                base_vertices: base.vertices().iter().map(|v| v.coords().to_vec()).collect(),
                shift: shift.as_ref().map(|a| a.coords().to_vec()),
            },
        }
    }

    pub fn to_mode(&self) -> Result<PlanMode, CliError> {
        Ok(match self {
            PlanDoc::Degree { bound } => PlanMode::Degree { bound: *bound },
            PlanDoc::Polytope {
                dilation,
                base_vertices,
                shift,
            } => PlanMode::Polytope {
                dilation: *dilation,
                base: convex_hull(base_vertices.iter().map(|v| ExponentVector::new(v.clone())))
                    .map_err(|e| CliError::Domain(e.to_string()))?,
                shift: shift.as_ref().map(|a| ExponentVector::new(a.clone())),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    #[serde(default = "schema")]
    pub schema: String,
    pub vars: Vec<String>,
    #[serde(default)]
    pub laurent: bool,
    /// Power of the localizer on the left-hand side.
    #[serde(default)]
    pub exponent_d: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<Vec<i64>>,
    pub cofactors: Vec<Vec<TermDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plan: Option<PlanDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<BoundReport>,
}

impl CertificateDocument {
    pub fn from_certificate(cert: &Certificate, vars: Vec<String>, laurent: bool) -> Self {
        CertificateDocument {
            schema: schema(),
            vars,
            laurent,
            exponent_d: cert.exponent_d,
            shift: cert.shift.as_ref().map(|a| a.coords().to_vec()),
            cofactors: cert.cofactors.iter().map(poly_to_terms).collect(),
            plan: cert.plan.as_ref().map(PlanDoc::from_mode),
            provenance: cert.provenance.clone(),
        }
    }

    /// Cofactors are read in the arity of the system they are checked
    /// against; a different variable count is a domain error.
    pub fn to_certificate(&self, sys: &PolySystem) -> Result<Certificate, CliError> {
        check_schema(&self.schema)?;
        let n = self.vars.len();
        if n != sys.nvars() {
            return Err(CliError::Domain(format!(
                "certificate has {n} variables, system has {}",
                sys.nvars()
            )));
        }
        let laurent = self.laurent || sys.is_laurent();
        let cofactors = self
            .cofactors
            .iter()
            .map(|t| terms_to_poly(n, laurent, t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Certificate {
            cofactors,
            exponent_d: self.exponent_d,
            shift: self.shift.as_ref().map(|a| ExponentVector::new(a.clone())),
            provenance: self.provenance.clone(),
            plan: self.plan.as_ref().map(PlanDoc::to_mode).transpose()?,
        })
    }
}

/// A polytope given by points (`kind = "polytope"`), or a graded set
/// (`kind = "graded"`) with an optional grading vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsDocument {
    #[serde(default = "schema")]
    pub schema: String,
    #[serde(default)]
    pub kind: PointsKind,
    pub points: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointsKind {
    #[default]
    Polytope,
    Graded,
}

impl PointsDocument {
    pub fn polytope(&self) -> Result<LatticePolytope, CliError> {
        check_schema(&self.schema)?;
        convex_hull(self.points.iter().map(|p| ExponentVector::new(p.clone())))
            .map_err(|e| CliError::Domain(e.to_string()))
    }
}

/// `{"lambda": [["p/q", ...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaDocument {
    #[serde(default = "schema")]
    pub schema: String,
    pub lambda: Vec<Vec<String>>,
}

impl LambdaDocument {
    pub fn matrix(&self) -> Result<Vec<Vec<BigRational>>, CliError> {
        check_schema(&self.schema)?;
        self.lambda
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| parse_rational(c).map_err(CliError::Parse))
                    .collect()
            })
            .collect()
    }

    pub fn from_matrix(m: &[Vec<BigRational>]) -> Self {
        LambdaDocument {
            schema: schema(),
            lambda: m.iter().map(|r| r.iter().map(format_rational).collect()).collect(),
        }
    }
}

/// Either kind of input accepted by `volume`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum VolumeInput {
    System(SystemDocument),
    Points(PointsDocument),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_round_trip_is_canonical() {
        let raw = r#"{"vars":["x","y"],"polys":[[{"exp":[0,1],"coef":"-4/6"},{"exp":[1,0],"coef":"2"}]]}"#;
        let doc: SystemDocument = serde_json::from_str(raw).unwrap();
        let canon = doc.canonical().unwrap();
        assert_eq!(canon.polys[0][0], TermDoc { exp: vec![0, 1], coef: "-2/3".into() });
        let text = serde_json::to_string(&canon).unwrap();
        let again: SystemDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(again.canonical().unwrap(), canon);
    }

    #[test]
    fn invalid_terms() {
        let bad_len = r#"{"vars":["x"],"polys":[[{"exp":[0,1],"coef":"1"}]]}"#;
        let doc: SystemDocument = serde_json::from_str(bad_len).unwrap();
        assert!(matches!(doc.to_system(), Err(CliError::Parse(_))));
        let zero = r#"{"vars":["x"],"polys":[[{"exp":[1],"coef":"0"}]]}"#;
        let doc: SystemDocument = serde_json::from_str(zero).unwrap();
        assert!(matches!(doc.to_system(), Err(CliError::Parse(_))));
        let empty = r#"{"vars":["x"],"polys":[]}"#;
        let doc: SystemDocument = serde_json::from_str(empty).unwrap();
        assert!(matches!(doc.to_system(), Err(CliError::Domain(_))));
        let neg = r#"{"vars":["x"],"polys":[[{"exp":[-1],"coef":"1"}]]}"#;
        let doc: SystemDocument = serde_json::from_str(neg).unwrap();
        assert!(matches!(doc.to_system(), Err(CliError::Domain(_))));
    }
}
