//! Certificate search: `p^D = g_1 f_1 + ... + g_s f_s` as a linear system in
//! the coefficients of the cofactors, over a prescribed support for each.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::bounds::BoundReport;
use crate::exponent::ExponentVector;
use crate::linsys::{LinearOutcome, SolveOptions, SparseSystem};
use crate::poly::{PolyError, PolySystem, Polynomial};
use crate::polytope::{GeometryError, LatticePolytope};

pub const DEFAULT_MAX_UNKNOWNS: usize = 200_000;
pub const DEFAULT_MAX_NONZEROS: usize = 20_000_000;
pub const MAX_UNKNOWNS_ENV: &str = "NULLCERT_MAX_UNKNOWNS";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("support plan is empty for every nonzero polynomial")]
    EmptyPlan,
    #[error("target monomial {0} is outside every S_i + support(f_i)")]
    Infeasible(ExponentVector),
    #[error("resource limit: {what} = {value} exceeds cap {cap}")]
    Budget { what: &'static str, value: String, cap: usize },
    #[error("no certificate with degree at most {0}")]
    NoCertificateWithinBudget(u64),
    #[error("{0}")]
    Unsupported(String),
    #[error("internal self-check failed: {0}")]
    SelfCheck(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    pub max_unknowns: usize,
    pub max_nonzeros: usize,
    pub modular_precheck: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_unknowns: DEFAULT_MAX_UNKNOWNS,
            max_nonzeros: DEFAULT_MAX_NONZEROS,
            modular_precheck: true,
        }
    }
}

impl SolverConfig {
    /// Defaults, with the unknown cap taken from `NULLCERT_MAX_UNKNOWNS` when
    /// it parses.
    pub fn from_env() -> Self {
        let mut cfg = SolverConfig::default();
        if let Some(v) = std::env::var(MAX_UNKNOWNS_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            cfg.max_unknowns = v;
        }
        cfg
    }
}

/// How the supports were chosen; kept on the certificate so that
/// verification can re-check containment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanMode {
    /// `deg(g_i f_i) <= bound`.
    Degree { bound: u64 },
    /// `a + support(g_i) + support(f_i) ⊆ dilation * base`.
    Polytope {
        dilation: u64,
        base: LatticePolytope,
        shift: Option<ExponentVector>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportPlan {
    mode: PlanMode,
    supports: Vec<Vec<ExponentVector>>,
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exponents in `N^n` of total degree at most `k`, in lexicographic order.
pub fn monomials_up_to(n: usize, k: u64) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<ExponentVector>) {
        if i == cur.len() {
            out.push(ExponentVector::new(cur.clone()));
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, k as i64, &mut cur, &mut out);
    out
}

fn budget(what: &'static str, value: impl ToString, cap: usize) -> SolverError {
    SolverError::Budget {
        what,
        value: value.to_string(),
        cap,
    }
}

impl SupportPlan {
    /// `S_i` = exponents of degree at most `bound - deg f_i`.
    pub fn degree(sys: &PolySystem, bound: u64, cfg: &SolverConfig) -> Result<Self, SolverError> {
        if sys.is_laurent() {
            return Err(SolverError::Unsupported(
                "degree mode needs ordinary polynomials".into(),
            ));
        }
        let n = sys.nvars() as u64;
        let mut total = BigInt::zero();
        for f in sys.polys() {
            if let Some(d) = f.total_degree() {
                if d as u64 <= bound {
                    total += binomial(n + bound - d as u64, n);
                }
            }
        }
        if total > BigInt::from(cfg.max_unknowns) {
            return Err(budget("unknowns", total, cfg.max_unknowns));
        }
        let supports = sys
            .polys()
            .iter()
            .map(|f| match f.total_degree() {
                Some(d) if d as u64 <= bound => monomials_up_to(sys.nvars(), bound - d as u64),
                _ => Vec::new(),
            })
            .collect();
        Ok(SupportPlan {
            mode: PlanMode::Degree { bound },
            supports,
        })
    }

    /// `S_i = {b : b + support(f_i) ⊆ (dilation * base ∩ Z^n) - shift}`,
    /// restricted to `N^n` for ordinary systems.
    pub fn polytope(
        sys: &PolySystem,
        dilation: u64,
        base: &LatticePolytope,
        shift: Option<ExponentVector>,
        cfg: &SolverConfig,
    ) -> Result<Self, SolverError> {
        if base.ambient_dim() != sys.nvars() {
            return Err(GeometryError::DimensionMismatch {
                expected: sys.nvars(),
                found: base.ambient_dim(),
            }
            .into());
        }
        if let Some(a) = &shift {
            if a.len() != sys.nvars() {
                return Err(GeometryError::DimensionMismatch {
                    expected: sys.nvars(),
                    found: a.len(),
                }
                .into());
            }
        }
        // keep dilated coordinates well inside i64
        const COORD_CAP: u128 = 1 << 40;
        let reach = base
            .vertices()
            .iter()
            .flat_map(|v| v.coords().iter().map(|c| c.unsigned_abs()))
            .max()
            .unwrap_or(0)
            .max(1) as u128;
        if reach * dilation as u128 > COORD_CAP {
            return Err(budget("dilated coordinate", reach * dilation as u128, COORD_CAP as usize));
        }
        let big = base.dilate(dilation);
        let scan = big.enumeration_box_size();
        let scan_cap = cfg.max_unknowns.saturating_mul(64);
        if scan > BigInt::from(scan_cap) {
            return Err(budget("lattice points scanned", scan, scan_cap));
        }
        let region: HashSet<ExponentVector> = big
            .lattice_points()
            .into_iter()
            .map(|p| match &shift {
                Some(a) => &p - a,
                None => p,
            })
            .collect();
        let mut ordered: Vec<&ExponentVector> = region.iter().collect();
        ordered.sort();
        let laurent = sys.is_laurent();
        let mut supports = Vec::with_capacity(sys.len());
        let mut total = 0usize;
        for f in sys.polys() {
            let supp = f.support();
            let Some(e0) = supp.first() else {
                supports.push(Vec::new());
                continue;
            };
            let s: Vec<ExponentVector> = ordered
                .iter()
                .map(|l| *l - e0)
                .filter(|b| laurent || b.is_nonnegative())
                .filter(|b| supp.iter().all(|e| region.contains(&(b + e))))
                .collect();
            total += s.len();
            if total > cfg.max_unknowns {
                return Err(budget("unknowns", total, cfg.max_unknowns));
            }
            supports.push(s);
        }
        Ok(SupportPlan {
            mode: PlanMode::Polytope {
                dilation,
                base: base.clone(),
                shift,
            },
            supports,
        })
    }

    pub fn mode(&self) -> &PlanMode {
        &self.mode
    }

    pub fn supports(&self) -> &[Vec<ExponentVector>] {
        &self.supports
    }

    pub fn unknowns(&self) -> usize {
        self.supports.iter().map(Vec::len).sum()
    }
}

/// Polynomial region test for a plan, without enumerating it.
struct PlanRegion<'a> {
    mode: &'a PlanMode,
    big: Option<LatticePolytope>,
}

impl<'a> PlanRegion<'a> {
    fn new(mode: &'a PlanMode) -> Self {
        let big = match mode {
            PlanMode::Polytope { dilation, base, .. } => Some(base.dilate(*dilation)),
            PlanMode::Degree { .. } => None,
        };
        PlanRegion { mode, big }
    }

    /// Whether `b` is an admissible cofactor exponent for `f`.
    fn admits(&self, b: &ExponentVector, f: &Polynomial, laurent: bool) -> bool {
        match self.mode {
            PlanMode::Degree { bound } => {
                b.is_nonnegative() && f.total_degree().is_some_and(|d| b.total() + d <= *bound as i64)
            }
            PlanMode::Polytope { shift, .. } => {
                let big = self.big.as_ref().unwrap();
                (laurent || b.is_nonnegative())
                    && f.support().iter().all(|e| {
                        let p = b + e;
                        let p = match shift {
                            Some(a) => &p + a,
                            None => p,
                        };
                        big.contains(&p)
                    })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub cofactors: Vec<Polynomial>,
    /// Power of the localizer on the left-hand side.
    pub exponent_d: u64,
    pub shift: Option<ExponentVector>,
    pub provenance: Option<BoundReport>,
    pub plan: Option<PlanMode>,
}

/// The linear system behind a plan: one column per `(i, b)` with
/// `b ∈ S_i`, one row per reachable monomial.
#[derive(Clone, Debug)]
pub struct CertificateSystem {
    pub linear: SparseSystem,
    pub columns: Vec<(usize, ExponentVector)>,
    pub monomials: Vec<ExponentVector>,
}

impl CertificateSystem {
    pub fn unknowns(&self) -> usize {
        self.columns.len()
    }

    pub fn equations(&self) -> usize {
        self.monomials.len()
    }
}

pub fn build_system(
    sys: &PolySystem,
    plan: &SupportPlan,
    target: &Polynomial,
    cfg: &SolverConfig,
) -> Result<CertificateSystem, SolverError> {
    if target.nvars() != sys.nvars() {
        return Err(PolyError::ArityMismatch {
            expected: sys.nvars(),
            found: target.nvars(),
        }
        .into());
    }
    if plan.supports.len() != sys.len() {
        return Err(SolverError::Unsupported(format!(
            "plan has {} supports for {} polynomials",
            plan.supports.len(),
            sys.len()
        )));
    }
    let usable = sys
        .polys()
        .iter()
        .zip(&plan.supports)
        .any(|(f, s)| !f.is_zero() && !s.is_empty());
    if !usable {
        return Err(SolverError::EmptyPlan);
    }
    let unknowns = plan.unknowns();
    if unknowns > cfg.max_unknowns {
        return Err(budget("unknowns", unknowns, cfg.max_unknowns));
    }
    let nnz: usize = sys
        .polys()
        .iter()
        .zip(&plan.supports)
        .map(|(f, s)| f.num_terms() * s.len())
        .sum();
    if nnz > cfg.max_nonzeros {
        return Err(budget("matrix nonzeros", nnz, cfg.max_nonzeros));
    }
    let mut reach: BTreeSet<ExponentVector> = BTreeSet::new();
    let mut columns = Vec::with_capacity(unknowns);
    for (i, (f, s)) in sys.polys().iter().zip(&plan.supports).enumerate() {
        if f.is_zero() {
            continue;
        }
        for b in s {
            for (e, _) in f.terms() {
                reach.insert(b + e);
            }
            columns.push((i, b.clone()));
        }
    }
    for (e, _) in target.terms() {
        if !reach.contains(e) {
            return Err(SolverError::Infeasible(e.clone()));
        }
    }
    let monomials: Vec<ExponentVector> = reach.into_iter().collect();
    let row_of: BTreeMap<&ExponentVector, usize> = monomials.iter().enumerate().map(|(k, e)| (e, k)).collect();
    let mut rows: Vec<Vec<(usize, BigRational)>> = vec![Vec::new(); monomials.len()];
    for (col, (i, b)) in columns.iter().enumerate() {
        for (e, c) in sys.polys()[*i].terms() {
            rows[row_of[&(b + e)]].push((col, c.clone()));
        }
    }
    let mut linear = SparseSystem::new(columns.len());
    for (row, e) in rows.into_iter().zip(&monomials) {
        linear.push_row(row, target.coeff(e));
    }
    Ok(CertificateSystem {
        linear,
        columns,
        monomials,
    })
}

fn zero_like(sys: &PolySystem) -> Polynomial {
    let z = Polynomial::zero(sys.nvars());
    if sys.is_laurent() {
        z.into_laurent()
    } else {
        z
    }
}

/// Solve with the plan, `target = p^exponent_d`; `None` when the plan admits
/// no certificate. Every returned certificate has passed verification.
pub fn solve_for_target(
    sys: &PolySystem,
    plan: &SupportPlan,
    exponent_d: u64,
    cfg: &SolverConfig,
) -> Result<Option<Certificate>, SolverError> {
    let target = sys.localizer_or_one().pow(exponent_d as u32);
    let built = match build_system(sys, plan, &target, cfg) {
        Ok(b) => b,
        Err(SolverError::EmptyPlan) | Err(SolverError::Infeasible(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let x = match built.linear.solve(SolveOptions {
        modular_precheck: cfg.modular_precheck,
    }) {
        LinearOutcome::Inconsistent => return Ok(None),
        LinearOutcome::Solution(x) => x,
    };
    let mut cofactors: Vec<Polynomial> = (0..sys.len()).map(|_| zero_like(sys)).collect();
    for ((i, b), v) in built.columns.iter().zip(x) {
        if !v.is_zero() {
            let mono = Polynomial::from_terms(sys.nvars(), sys.is_laurent(), [(b.clone(), v)])?;
            cofactors[*i] = &cofactors[*i] + &mono;
        }
    }
    let (shift, plan_mode) = match &plan.mode {
        PlanMode::Polytope { shift, .. } => (shift.clone(), plan.mode.clone()),
        PlanMode::Degree { .. } => (None, plan.mode.clone()),
    };
    let cert = Certificate {
        cofactors,
        exponent_d,
        shift,
        provenance: None,
        plan: Some(plan_mode),
    };
    let check = verify_certificate(sys, &cert);
    if !check.ok {
        return Err(SolverError::SelfCheck(check.diagnostic.unwrap_or_default()));
    }
    Ok(Some(cert))
}

/// `1 = sum g_i f_i` within the plan.
pub fn solve_at(sys: &PolySystem, plan: &SupportPlan, cfg: &SolverConfig) -> Result<Option<Certificate>, SolverError> {
    solve_for_target(sys, plan, 0, cfg)
}

/// `p^D = sum g_i f_i` within the plan, `D >= 1`.
pub fn solve_with_localizer(
    sys: &PolySystem,
    plan: &SupportPlan,
    exponent_d: u64,
    cfg: &SolverConfig,
) -> Result<Option<Certificate>, SolverError> {
    if exponent_d == 0 {
        return Err(SolverError::Unsupported("localizer exponent must be at least 1".into()));
    }
    solve_for_target(sys, plan, exponent_d, cfg)
}

/// Degree-mode plan at `bound` and [`solve_at`].
pub fn solve_degree(sys: &PolySystem, bound: u64, cfg: &SolverConfig) -> Result<Option<Certificate>, SolverError> {
    let plan = SupportPlan::degree(sys, bound, cfg)?;
    solve_at(sys, &plan, cfg)
}

/// Smallest `D <= d_max` for which the degree-mode plan yields
/// `1 = sum g_i f_i`, scanning upward.
pub fn minimal_degree_search(
    sys: &PolySystem,
    d_max: u64,
    cfg: &SolverConfig,
) -> Result<(u64, Certificate), SolverError> {
    minimal_degree_search_for(sys, d_max, 0, cfg)
}

/// As [`minimal_degree_search`] with target `p^exponent_d`.
pub fn minimal_degree_search_for(
    sys: &PolySystem,
    d_max: u64,
    exponent_d: u64,
    cfg: &SolverConfig,
) -> Result<(u64, Certificate), SolverError> {
    for d in 0..=d_max {
        let plan = SupportPlan::degree(sys, d, cfg)?;
        if let Some(c) = solve_for_target(sys, &plan, exponent_d, cfg)? {
            return Ok((d, c));
        }
    }
    Err(SolverError::NoCertificateWithinBudget(d_max))
}

/// Polytope-mode search for Laurent systems: the caller's shift if given,
/// otherwise the zero shift and then the vertices of
/// `shift_dilation * base` in lexicographic order.
pub fn solve_laurent(
    sys: &PolySystem,
    dilation: u64,
    base: &LatticePolytope,
    shift_dilation: u64,
    shift: Option<ExponentVector>,
    exponent_d: u64,
    cfg: &SolverConfig,
) -> Result<Option<Certificate>, SolverError> {
    let shifts: Vec<Option<ExponentVector>> = match shift {
        Some(a) => vec![Some(a)],
        None => {
            let mut v = vec![None];
            let mut verts: Vec<ExponentVector> = base.dilate(shift_dilation).vertices().to_vec();
            verts.sort();
            v.extend(verts.into_iter().filter(|a| !a.is_zero()).map(Some));
            v
        }
    };
    for a in shifts {
        let plan = SupportPlan::polytope(sys, dilation, base, a, cfg)?;
        if let Some(c) = solve_for_target(sys, &plan, exponent_d, cfg)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    pub diagnostic: Option<String>,
}

impl Verification {
    fn fail(msg: String) -> Self {
        Verification {
            ok: false,
            diagnostic: Some(msg),
        }
    }
}

/// Exact check of `p^D = sum g_i f_i`, then of support containment when the
/// certificate carries its plan.
pub fn verify_certificate(sys: &PolySystem, cert: &Certificate) -> Verification {
    if cert.cofactors.len() != sys.len() {
        return Verification::fail(format!(
            "expected {} cofactors, found {}",
            sys.len(),
            cert.cofactors.len()
        ));
    }
    if let Some(g) = cert.cofactors.iter().find(|g| g.nvars() != sys.nvars()) {
        return Verification::fail(format!(
            "cofactor has {} variables, system has {}",
            g.nvars(),
            sys.nvars()
        ));
    }
    let Some(exp) = cert.exponent_d.to_u32() else {
        return Verification::fail("localizer exponent too large".into());
    };
    let target = sys.localizer_or_one().pow(exp);
    let mut lhs = zero_like(sys);
    for (g, f) in cert.cofactors.iter().zip(sys.polys()) {
        lhs = lhs + &(g * f);
    }
    let diff = &lhs - &target;
    if let Some((e, _)) = diff.terms().next() {
        return Verification::fail(format!(
            "coefficient of x^{e}: sum g_i f_i has {}, target has {}",
            lhs.coeff(e),
            target.coeff(e)
        ));
    }
    if let Some(mode) = &cert.plan {
        let region = PlanRegion::new(mode);
        for (i, (g, f)) in cert.cofactors.iter().zip(sys.polys()).enumerate() {
            for (b, _) in g.terms() {
                if !region.admits(b, f, sys.is_laurent()) {
                    return Verification::fail(format!(
                        "cofactor {} has monomial x^{b} outside its planned support",
                        i + 1
                    ));
                }
            }
        }
    }
    Verification {
        ok: true,
        diagnostic: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::convex_hull;

    fn p(n: usize, terms: &[(&[i64], i64)]) -> Polynomial {
        Polynomial::from_int_terms(n, terms).unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn x_one_minus_x() -> PolySystem {
        PolySystem::new(vec![p(1, &[(&[1], 1)]), p(1, &[(&[0], 1), (&[1], -1)])], None).unwrap()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_up_to(2, 2).len(), 6);
        assert_eq!(monomials_up_to(3, 0), vec![ExponentVector::zero(3)]);
        assert_eq!(binomial(5, 2), BigInt::from(10));
    }

    #[test]
    fn hand_expanded_system() {
        // g1 = a, g2 = b at D = 1: rows 1: b = 1, x: a - b = 0
        let cfg = SolverConfig::default();
        let sys = x_one_minus_x();
        let plan = SupportPlan::degree(&sys, 1, &cfg).unwrap();
        let b = build_system(&sys, &plan, &Polynomial::one(1), &cfg).unwrap();
        assert_eq!((b.unknowns(), b.equations()), (2, 2));
        let cert = solve_at(&sys, &plan, &cfg).unwrap().unwrap();
        assert_eq!(cert.cofactors, vec![Polynomial::one(1), Polynomial::one(1)]);
        assert_eq!(solve_degree(&sys, 0, &cfg).unwrap(), None);
        assert_eq!(minimal_degree_search(&sys, 3, &cfg).unwrap().0, 1);
    }

    #[test]
    fn trivial_and_infeasible() {
        let cfg = SolverConfig::default();
        let one = PolySystem::new(vec![Polynomial::one(2)], None).unwrap();
        let plan = SupportPlan::degree(&one, 0, &cfg).unwrap();
        assert_eq!(plan.unknowns(), 1);
        assert_eq!(solve_at(&one, &plan, &cfg).unwrap().unwrap().cofactors, vec![Polynomial::one(2)]);

        let sq = PolySystem::new(vec![p(1, &[(&[2], 1)])], None).unwrap();
        for d in 0..6 {
            assert_eq!(solve_degree(&sq, d, &cfg).unwrap(), None);
        }
        let plan = SupportPlan::degree(&sq, 3, &cfg).unwrap();
        assert_eq!(
            build_system(&sq, &plan, &Polynomial::one(1), &cfg).unwrap_err(),
            SolverError::Infeasible(ExponentVector::zero(1))
        );
        assert!(matches!(
            minimal_degree_search(&sq, 4, &cfg),
            Err(SolverError::NoCertificateWithinBudget(4))
        ));
    }

    #[test]
    fn localizer_power() {
        let cfg = SolverConfig::default();
        let sys = PolySystem::new(vec![p(1, &[(&[2], 1)])], Some(p(1, &[(&[1], 1)]))).unwrap();
        let plan = SupportPlan::degree(&sys, 2, &cfg).unwrap();
        assert_eq!(solve_with_localizer(&sys, &plan, 1, &cfg).unwrap(), None);
        let c = solve_with_localizer(&sys, &plan, 2, &cfg).unwrap().unwrap();
        assert_eq!(c.cofactors, vec![Polynomial::one(1)]);
    }

    #[test]
    fn budget_is_distinct_from_none() {
        let cfg = SolverConfig {
            max_unknowns: 5,
            ..Default::default()
        };
        let sys = x_one_minus_x();
        assert!(matches!(
            SupportPlan::degree(&sys, 10, &cfg),
            Err(SolverError::Budget { .. })
        ));
    }

    #[test]
    fn polytope_quotient_plan() {
        let cfg = SolverConfig::default();
        let sys = x_one_minus_x();
        let seg = convex_hull(vec![ExponentVector::new(vec![0]), ExponentVector::new(vec![1])]).unwrap();
        let plan = SupportPlan::polytope(&sys, 1, &seg, None, &cfg).unwrap();
        // x * b ⊆ [0,1] -> b = 0; (1 - x) b ⊆ [0,1] -> b = 0
        assert_eq!(plan.supports()[0], vec![ExponentVector::zero(1)]);
        assert_eq!(plan.supports()[1], vec![ExponentVector::zero(1)]);
        assert!(solve_at(&sys, &plan, &cfg).unwrap().is_some());
    }

    #[test]
    fn laurent_shift() {
        // x^{-1} - 1 and x - 2: 1 = -1/2 (x - 2) + ... ; solve with shifts
        let cfg = SolverConfig::default();
        let f1 = Polynomial::from_terms(
            1,
            true,
            [(ExponentVector::new(vec![-1]), q(1)), (ExponentVector::new(vec![0]), q(-1))],
        )
        .unwrap();
        let f2 = p(1, &[(&[1], 1), (&[0], -2)]).into_laurent();
        let sys = PolySystem::new(vec![f1, f2], None).unwrap();
        let base = crate::poly::newton_polytope(sys.polys()).unwrap();
        let cert = solve_laurent(&sys, 2, &base, 1, None, 0, &cfg).unwrap().unwrap();
        assert!(verify_certificate(&sys, &cert).ok);
    }

    #[test]
    fn verification_diagnostics() {
        let sys = x_one_minus_x();
        let good = Certificate {
            cofactors: vec![Polynomial::one(1), Polynomial::one(1)],
            exponent_d: 0,
            shift: None,
            provenance: None,
            plan: None,
        };
        assert!(verify_certificate(&sys, &good).ok);
        let mut bad = good.clone();
        bad.cofactors[0] = Polynomial::constant(1, q(2));
        let v = verify_certificate(&sys, &bad);
        assert!(!v.ok);
        assert!(v.diagnostic.unwrap().contains("x^(1)"));
        let mut empty = good.clone();
        empty.cofactors.clear();
        assert!(!verify_certificate(&sys, &empty).ok);
        let mut outside = good;
        outside.plan = Some(PlanMode::Degree { bound: 0 });
        assert!(!verify_certificate(&sys, &outside).ok);
    }
}
