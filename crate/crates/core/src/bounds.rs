//! Closed-form bounds for Bézout certificates.
//!
//! Every function returns a [`BoundReport`] recording which result licensed
//! the number, the formula, its inputs and the values it produced. All
//! arithmetic is on big integers; volumes enter either as exact rationals
//! (euclidean) or as normalized lattice volumes (integers).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{self, PolyError, PolySystem, Polynomial};
use crate::polytope::{factorial, LatticePolytope, PolytopeSummary};
use crate::serde_util::{bigint_str, opt_bigint_str, opt_rational_str};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: String },
    #[error("degree list must be sorted in descending order")]
    Unsorted,
    #[error("empty degree list")]
    EmptyDegrees,
    #[error("{0}")]
    NonIntegral(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    MainLemma,
    ThmCm,
    Cor12,
    Thm21,
    Cor21,
    Thm22,
    Cor22,
    Thm31,
    Thm32,
    BezoutAlgDeg,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::Thm1,
        TheoremId::Thm2,
        TheoremId::Thm3,
        TheoremId::Thm4,
        TheoremId::MainLemma,
        TheoremId::ThmCm,
        TheoremId::Cor12,
        TheoremId::Thm21,
        TheoremId::Cor21,
        TheoremId::Thm22,
        TheoremId::Cor22,
        TheoremId::Thm31,
        TheoremId::Thm32,
        TheoremId::BezoutAlgDeg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Thm1 => "thm1",
            TheoremId::Thm2 => "thm2",
            TheoremId::Thm3 => "thm3",
            TheoremId::Thm4 => "thm4",
            TheoremId::MainLemma => "main_lemma",
            TheoremId::ThmCm => "thm_cm",
            TheoremId::Cor12 => "cor12",
            TheoremId::Thm21 => "thm21",
            TheoremId::Cor21 => "cor21",
            TheoremId::Thm22 => "thm22",
            TheoremId::Cor22 => "cor22",
            TheoremId::Thm31 => "thm31",
            TheoremId::Thm32 => "thm32",
            TheoremId::BezoutAlgDeg => "bezout_alg_deg",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == norm)
            .ok_or_else(|| format!("unknown theorem id {s:?}"))
    }
}

/// Inputs a bound was evaluated at. Unused fields stay `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundInputs {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degrees: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub deg_p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "opt_bigint_str")]
    pub deg_i: Option<BigInt>,
    /// Euclidean volume of `P` (`vol`, not normalized).
    #[serde(skip_serializing_if = "Option::is_none", default, with = "opt_rational_str")]
    pub vol_p: Option<BigRational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rho: Option<u64>,
    /// Unmixed volume.
    #[serde(skip_serializing_if = "Option::is_none", default, with = "opt_bigint_str")]
    pub u: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "opt_bigint_str")]
    pub delta: Option<BigInt>,
}

/// `N(g_i f_i) ⊆ dilation * base - a` with `a ∈ shift_dilation * base`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportBound {
    #[serde(with = "bigint_str")]
    pub dilation: BigInt,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub base: Option<PolytopeSummary>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "opt_bigint_str")]
    pub shift_dilation: Option<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub formula: String,
    pub inputs: BoundInputs,
    /// Exponent `D` of the localizer (or of `x_0`) licensed by the result.
    #[serde(with = "bigint_str")]
    pub exponent_d: BigInt,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub support: Option<SupportBound>,
    /// Bound on `deg g_i f_i`.
    #[serde(skip_serializing_if = "Option::is_none", default, with = "opt_bigint_str")]
    pub degree_bound: Option<BigInt>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl BoundReport {
    fn new(theorem: TheoremId, formula: &str, inputs: BoundInputs, exponent_d: BigInt) -> Self {
        BoundReport {
            theorem,
            formula: formula.to_string(),
            inputs,
            exponent_d,
            support: None,
            degree_bound: None,
            notes: Vec::new(),
        }
    }
}

const VOLUME_CONVENTION: &str =
    "unmixed volume measured as normalized volume in the lattice of the affine hull (covolume rho!)";

fn positive(name: &'static str, v: u64) -> Result<BigInt, BoundError> {
    if v == 0 {
        return Err(BoundError::NonPositive {
            name,
            value: v.to_string(),
        });
    }
    Ok(BigInt::from(v))
}

fn positive_big(name: &'static str, v: &BigInt) -> Result<(), BoundError> {
    if *v <= BigInt::zero() {
        return Err(BoundError::NonPositive {
            name,
            value: v.to_string(),
        });
    }
    Ok(())
}

fn pow(b: &BigInt, e: u64) -> BigInt {
    num_traits::pow(b.clone(), e as usize)
}

fn check_sorted(degrees: &[u64]) -> Result<(), BoundError> {
    if degrees.is_empty() {
        return Err(BoundError::EmptyDegrees);
    }
    if degrees.windows(2).any(|w| w[0] < w[1]) {
        return Err(BoundError::Unsorted);
    }
    Ok(())
}

/// Support dilation `n^{n+3} U` on the Newton polytope of
/// `x_1, ..., x_n, f_1, ..., f_s`; with `d` the degree bound `n^{n+3} d U`.
pub fn bound_thm1(n: u64, s: u64, u: &BigInt, d: Option<u64>) -> Result<BoundReport, BoundError> {
    let nb = positive("n", n)?;
    positive("s", s)?;
    positive_big("U", u)?;
    let dilation = pow(&nb, n + 3) * u;
    let mut r = BoundReport::new(
        TheoremId::Thm1,
        "N(g_i f_i) ⊆ n^(n+3) U N;  deg g_i f_i <= n^(n+3) d U;  D <= n^(n+2) U",
        BoundInputs {
            n: Some(n),
            s: Some(s),
            d,
            u: Some(u.clone()),
            ..Default::default()
        },
        pow(&nb, n + 2) * u,
    );
    r.degree_bound = d.map(|d| &dilation * BigInt::from(d));
    r.support = Some(SupportBound {
        dilation,
        base: None,
        shift_dilation: None,
    });
    r.notes.push(VOLUME_CONVENTION.into());
    r.notes.push(
        "with U = d^n the degree formula gives n^(n+3) d^(n+1); the worst-case figure n^(n+2) d^(n+1) quoted alongside it does not follow from the formula".into(),
    );
    Ok(r)
}

/// Laurent version: support `n^{2n+3} U^2 N - a` with `a ∈ n^{2n+3} U^2 N`.
pub fn bound_thm2(n: u64, s: u64, u: &BigInt, d: Option<u64>) -> Result<BoundReport, BoundError> {
    let nb = positive("n", n)?;
    positive("s", s)?;
    positive_big("U", u)?;
    let dilation = pow(&nb, 2 * n + 3) * u * u;
    let mut r = BoundReport::new(
        TheoremId::Thm2,
        "a ∈ n^(2n+3) U^2 N;  N(g_i f_i) ⊆ n^(2n+3) U^2 N - a;  D <= n^(n+2) U",
        BoundInputs {
            n: Some(n),
            s: Some(s),
            d,
            u: Some(u.clone()),
            ..Default::default()
        },
        pow(&nb, n + 2) * u,
    );
    r.degree_bound = d.map(|d| &dilation * BigInt::from(d));
    r.support = Some(SupportBound {
        shift_dilation: Some(dilation.clone()),
        dilation,
        base: None,
    });
    r.notes.push(VOLUME_CONVENTION.into());
    Ok(r)
}

/// `deg g_i f_i <= 2 d_s prod_{j=1}^{min(n,s)-1} d_j` for `d_1 >= ... >= d_s`.
pub fn bound_thm3(degrees: &[u64], n: u64) -> Result<BoundReport, BoundError> {
    let mut r = thm3_core(TheoremId::Thm3, degrees, n)?;
    r.degree_bound = Some(r.exponent_d.clone());
    Ok(r)
}

/// Homogeneous form: `x_0^D` lies in the ideal with the same `D`.
pub fn bound_thm31(degrees: &[u64], n: u64) -> Result<BoundReport, BoundError> {
    thm3_core(TheoremId::Thm31, degrees, n)
}

fn thm3_core(id: TheoremId, degrees: &[u64], n: u64) -> Result<BoundReport, BoundError> {
    positive("n", n)?;
    check_sorted(degrees)?;
    let s = degrees.len() as u64;
    let m = n.min(s) as usize;
    let prod: BigInt = degrees[..m - 1].iter().map(|&d| BigInt::from(d)).product();
    let value = BigInt::from(2u32) * BigInt::from(*degrees.last().unwrap()) * prod;
    Ok(BoundReport::new(
        id,
        "2 d_s prod_{j=1}^{min(n,s)-1} d_j",
        BoundInputs {
            n: Some(n),
            s: Some(s),
            degrees: Some(degrees.to_vec()),
            ..Default::default()
        },
        value,
    ))
}

/// `deg g_i f_i <= min(n,s)^2 d delta`.
pub fn bound_thm4(n: u64, s: u64, d: u64, delta: &BigInt) -> Result<BoundReport, BoundError> {
    let mut r = thm4_core(TheoremId::Thm4, n, s, d, delta)?;
    r.degree_bound = Some(r.exponent_d.clone());
    Ok(r)
}

pub fn bound_thm32(n: u64, s: u64, d: u64, delta: &BigInt) -> Result<BoundReport, BoundError> {
    thm4_core(TheoremId::Thm32, n, s, d, delta)
}

fn thm4_core(id: TheoremId, n: u64, s: u64, d: u64, delta: &BigInt) -> Result<BoundReport, BoundError> {
    positive("n", n)?;
    positive("s", s)?;
    positive_big("delta", delta)?;
    let m = BigInt::from(n.min(s));
    let value = &m * &m * BigInt::from(d) * delta;
    Ok(BoundReport::new(
        id,
        "min(n,s)^2 d delta",
        BoundInputs {
            n: Some(n),
            s: Some(s),
            d: Some(d),
            delta: Some(delta.clone()),
            ..Default::default()
        },
        value,
    ))
}

/// `D = min(r,s)^2 deg I`.
pub fn bound_main_lemma(r: u64, s: u64, deg_i: &BigInt) -> Result<BoundReport, BoundError> {
    positive("s", s)?;
    positive_big("deg I", deg_i)?;
    let m = BigInt::from(r.min(s));
    Ok(BoundReport::new(
        TheoremId::MainLemma,
        "min(r,s)^2 deg I",
        BoundInputs {
            r: Some(r),
            s: Some(s),
            deg_i: Some(deg_i.clone()),
            ..Default::default()
        },
        &m * &m * deg_i,
    ))
}

/// `D = r^2 d^r deg I` for homogeneous elements of degree at most `d` in a
/// Cohen-Macaulay graded ring.
pub fn bound_thm_cm(r: u64, d: u64, deg_i: &BigInt) -> Result<BoundReport, BoundError> {
    positive_big("deg I", deg_i)?;
    let rb = BigInt::from(r);
    Ok(BoundReport::new(
        TheoremId::ThmCm,
        "r^2 d^r deg I",
        BoundInputs {
            r: Some(r),
            d: Some(d),
            deg_i: Some(deg_i.clone()),
            ..Default::default()
        },
        &rb * &rb * pow(&BigInt::from(d), r) * deg_i,
    ))
}

/// `D = (r+1)^2 d^{r+1} deg I^h`; for the zero ideal `deg I^h = 1`.
pub fn bound_cor12(r: u64, d: u64, deg_ih: &BigInt) -> Result<BoundReport, BoundError> {
    positive_big("deg I^h", deg_ih)?;
    let r1 = BigInt::from(r + 1);
    Ok(BoundReport::new(
        TheoremId::Cor12,
        "(r+1)^2 d^(r+1) deg I^h",
        BoundInputs {
            r: Some(r),
            d: Some(d),
            deg_i: Some(deg_ih.clone()),
            ..Default::default()
        },
        &r1 * &r1 * pow(&BigInt::from(d), r + 1) * deg_ih,
    ))
}

fn integral(x: BigRational, what: &str) -> Result<BigInt, BoundError> {
    if !x.is_integer() {
        return Err(BoundError::NonIntegral(format!("{what} = {x} is not an integer")));
    }
    Ok(x.to_integer())
}

fn check_volume(vol: &BigRational) -> Result<(), BoundError> {
    if *vol <= BigRational::zero() {
        return Err(BoundError::NonPositive {
            name: "vol(P)",
            value: vol.to_string(),
        });
    }
    Ok(())
}

/// `p^D = sum g_i f_i` with `D <= n! min(n+1,s)^2 vol(P)` and
/// `N(g_i f_i) ⊆ (1 + deg p) n! min(n+1,s)^2 vol(P) P`.
pub fn bound_thm21(n: u64, s: u64, vol_p: &BigRational, deg_p: u64) -> Result<BoundReport, BoundError> {
    positive("n", n)?;
    positive("s", s)?;
    check_volume(vol_p)?;
    let normalized = integral(BigRational::from_integer(factorial(n as usize)) * vol_p, "n! vol(P)")?;
    let m = BigInt::from((n + 1).min(s));
    let d_exp = &normalized * &m * &m;
    let dilation = BigInt::from(1 + deg_p) * &d_exp;
    let mut r = BoundReport::new(
        TheoremId::Thm21,
        "D <= n! min(n+1,s)^2 vol(P);  N(g_i f_i) ⊆ (1+deg p) n! min(n+1,s)^2 vol(P) P",
        BoundInputs {
            n: Some(n),
            s: Some(s),
            vol_p: Some(vol_p.clone()),
            deg_p: Some(deg_p),
            ..Default::default()
        },
        d_exp,
    );
    r.support = Some(SupportBound {
        dilation,
        base: None,
        shift_dilation: None,
    });
    r.notes.push("requires A(P) normal and P ⊇ N(1, x_1, ..., x_n, f_1, ..., f_s)".into());
    r.notes.push(
        "the squared factor min(n+1,s)^2 is used; one step of the accompanying derivation carries a single factor".into(),
    );
    Ok(r)
}

/// Degree form: `deg g_i f_i <= d (1 + deg p) n! min(n+1,s)^2 vol(P)`.
pub fn bound_cor21(n: u64, s: u64, vol_p: &BigRational, deg_p: u64, d: u64) -> Result<BoundReport, BoundError> {
    let mut r = bound_thm21(n, s, vol_p, deg_p)?;
    r.theorem = TheoremId::Cor21;
    r.formula = "D <= n! min(n+1,s)^2 vol(P);  deg g_i f_i <= d (1+deg p) n! min(n+1,s)^2 vol(P)".into();
    r.inputs.d = Some(d);
    let dil = &r.support.as_ref().unwrap().dilation;
    r.degree_bound = Some(BigInt::from(d) * dil);
    Ok(r)
}

/// Laurent case: `D <= rho! min(n+1,s)^2 vol(P)`,
/// `a ∈ (rho! min(n+1,s) vol(P))^2 P`, `N(g_i f_i) ⊆ (same)^2 P - a`.
pub fn bound_thm22(n: u64, s: u64, rho: u64, vol_p: &BigRational) -> Result<BoundReport, BoundError> {
    positive("n", n)?;
    positive("s", s)?;
    check_volume(vol_p)?;
    let normalized = integral(
        BigRational::from_integer(factorial(rho as usize)) * vol_p,
        "rho! vol(P)",
    )?;
    let m = BigInt::from((n + 1).min(s));
    let d_exp = &normalized * &m * &m;
    let base = &normalized * &m;
    let dilation = &base * &base;
    let mut r = BoundReport::new(
        TheoremId::Thm22,
        "D <= rho! min(n+1,s)^2 vol(P);  a ∈ (rho! min(n+1,s) vol(P))^2 P;  N(g_i f_i) ⊆ (rho! min(n+1,s) vol(P))^2 P - a",
        BoundInputs {
            n: Some(n),
            s: Some(s),
            rho: Some(rho),
            vol_p: Some(vol_p.clone()),
            ..Default::default()
        },
        d_exp,
    );
    r.support = Some(SupportBound {
        shift_dilation: Some(dilation.clone()),
        dilation,
        base: None,
    });
    r.notes.push("requires A(P) normal and P ⊇ N(p, f_1, ..., f_s)".into());
    Ok(r)
}

/// Degree form: `deg g_i f_i <= d ((1 + deg p) rho! min(n+1,s) vol(P))^2`.
pub fn bound_cor22(
    n: u64,
    s: u64,
    rho: u64,
    vol_p: &BigRational,
    deg_p: u64,
    d: u64,
) -> Result<BoundReport, BoundError> {
    let mut r = bound_thm22(n, s, rho, vol_p)?;
    r.theorem = TheoremId::Cor22;
    r.formula = "D <= rho! min(n+1,s)^2 vol(P);  deg g_i f_i <= d ((1+deg p) rho! min(n+1,s) vol(P))^2".into();
    r.inputs.deg_p = Some(deg_p);
    r.inputs.d = Some(d);
    let normalized = integral(
        BigRational::from_integer(factorial(rho as usize)) * vol_p,
        "rho! vol(P)",
    )?;
    let inner = BigInt::from(1 + deg_p) * normalized * BigInt::from((n + 1).min(s));
    r.degree_bound = Some(BigInt::from(d) * &inner * &inner);
    Ok(r)
}

/// `delta <= d_s prod_{i=1}^{min(n,s)-2} d_i`.
pub fn bezout_algdeg_bound(degrees: &[u64], n: u64) -> Result<BigInt, BoundError> {
    Ok(bound_bezout_algdeg(degrees, n)?.exponent_d)
}

pub fn bound_bezout_algdeg(degrees: &[u64], n: u64) -> Result<BoundReport, BoundError> {
    positive("n", n)?;
    check_sorted(degrees)?;
    let s = degrees.len() as u64;
    let m = n.min(s) as usize;
    let upto = m.saturating_sub(2);
    let prod: BigInt = degrees[..upto].iter().map(|&d| BigInt::from(d)).product();
    let value = BigInt::from(*degrees.last().unwrap()) * prod;
    let mut r = BoundReport::new(
        TheoremId::BezoutAlgDeg,
        "delta <= d_s prod_{i=1}^{min(n,s)-2} d_i",
        BoundInputs {
            n: Some(n),
            s: Some(s),
            degrees: Some(degrees.to_vec()),
            ..Default::default()
        },
        value,
    );
    r.notes.push("value reported in exponent_d is the bound on the algebraic degree".into());
    Ok(r)
}

/// Degree list of a system as `u64`, sorted descending; zero polynomials are
/// skipped.
pub fn system_degrees(sys: &PolySystem) -> Vec<u64> {
    poly::degrees(sys.polys()).into_iter().map(|d| d.max(0) as u64).collect()
}

/// Newton polytope of `x_1, ..., x_n, f_1, ..., f_s`.
pub fn thm1_polytope(sys: &PolySystem) -> Result<LatticePolytope, BoundError> {
    let n = sys.nvars();
    let mut fs: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(n, i)).collect();
    fs.extend(sys.polys().iter().cloned());
    Ok(poly::newton_polytope(&fs)?)
}

/// The `thm1` bound evaluated on a concrete system.
pub fn thm1_for_system(sys: &PolySystem) -> Result<BoundReport, BoundError> {
    let n_poly = thm1_polytope(sys)?;
    let u = n_poly.normalized_volume();
    let d = poly::max_degree(sys.polys()).max(0) as u64;
    let mut r = bound_thm1(sys.nvars() as u64, sys.len() as u64, &u, Some(d))?;
    r.support.as_mut().unwrap().base = Some(n_poly.summary());
    Ok(r)
}

/// The `thm2` bound evaluated on a concrete (Laurent) system.
pub fn thm2_for_system(sys: &PolySystem) -> Result<BoundReport, BoundError> {
    let n_poly = poly::newton_polytope(sys.polys())?;
    let u = n_poly.normalized_volume();
    let d = poly::max_degree(sys.polys()).max(0) as u64;
    let mut r = bound_thm2(sys.nvars() as u64, sys.len() as u64, &u, Some(d))?;
    r.support.as_mut().unwrap().base = Some(n_poly.summary());
    Ok(r)
}

/// The `thm21` bound with a concrete polytope `P` (its normalized volume is
/// `n! vol(P)` when full-dimensional).
pub fn thm21_for_polytope(sys: &PolySystem, p: &LatticePolytope) -> Result<BoundReport, BoundError> {
    let n = sys.nvars() as u64;
    let vol = BigRational::new(p.normalized_volume(), factorial(p.dim()));
    if p.dim() as u64 != n {
        return Err(BoundError::NonIntegral(
            "thm21 needs a full-dimensional polytope".into(),
        ));
    }
    let deg_p = sys
        .localizer()
        .and_then(Polynomial::total_degree)
        .unwrap_or(0)
        .max(0) as u64;
    let d = poly::max_degree(sys.polys()).max(0) as u64;
    let mut r = bound_cor21(n, sys.len() as u64, &vol, deg_p, d)?;
    r.support.as_mut().unwrap().base = Some(p.summary());
    Ok(r)
}

/// The `thm22` bound with a concrete polytope `P`.
pub fn thm22_for_polytope(sys: &PolySystem, p: &LatticePolytope) -> Result<BoundReport, BoundError> {
    let rho = p.dim() as u64;
    let vol = BigRational::new(p.normalized_volume(), factorial(p.dim()));
    let deg_p = sys
        .localizer()
        .and_then(Polynomial::total_degree)
        .unwrap_or(0)
        .max(0) as u64;
    let d = poly::max_degree(sys.polys()).max(0) as u64;
    let mut r = bound_cor22(sys.nvars() as u64, sys.len() as u64, rho, &vol, deg_p, d)?;
    r.support.as_mut().unwrap().base = Some(p.summary());
    Ok(r)
}

/// `2^{n+1}`, the all-quadratics value of [`bound_thm3`].
pub fn quadratic_figure(n: u64) -> BigInt {
    pow(&BigInt::from(2), n + 1)
}

/// `n 2^{n+2}`, the earlier all-quadratics bound it improves on.
pub fn earlier_quadratic_figure(n: u64) -> BigInt {
    BigInt::from(n) * pow(&BigInt::from(2), n + 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn thm1_values() {
        let r = bound_thm1(2, 2, &b(2), None).unwrap();
        assert_eq!(r.support.unwrap().dilation, b(64));
        // worst case U = d^n: the degree formula gives n^{n+3} d^{n+1}
        for n in 1..=4u64 {
            for d in 1..=4u64 {
                let u = BigInt::from(d).pow(n as u32);
                let r = bound_thm1(n, n, &u, Some(d)).unwrap();
                assert_eq!(
                    r.degree_bound.unwrap(),
                    BigInt::from(n).pow(n as u32 + 3) * BigInt::from(d).pow(n as u32 + 1)
                );
            }
        }
        // n = 1 is admissible
        assert_eq!(bound_thm1(1, 1, &b(1), Some(1)).unwrap().degree_bound, Some(b(1)));
        assert!(bound_thm1(0, 1, &b(1), None).is_err());
        assert!(bound_thm1(1, 1, &b(0), None).is_err());
    }

    #[test]
    fn thm2_values() {
        let r = bound_thm2(2, 2, &b(1), None).unwrap();
        assert_eq!(r.support.as_ref().unwrap().dilation, b(128));
        assert_eq!(r.support.unwrap().shift_dilation, Some(b(128)));
        assert_eq!(r.exponent_d, b(16)); // n^{n+2} U
        assert_eq!(bound_thm2(1, 3, &b(2), None).unwrap().support.unwrap().dilation, b(4));
    }

    #[test]
    fn thm3_values() {
        for n in 2..=10u64 {
            let r = bound_thm3(&vec![2; n as usize], n).unwrap();
            assert_eq!(r.degree_bound.unwrap(), quadratic_figure(n));
        }
        assert_eq!(bound_thm3(&[3, 2, 2], 3).unwrap().exponent_d, b(24));
        assert_eq!(bound_thm3(&[5], 4).unwrap().exponent_d, b(10));
        assert_eq!(bound_thm3(&[2, 3], 2).unwrap_err(), BoundError::Unsorted);
        assert_eq!(bound_thm31(&[3, 2, 2], 3).unwrap().exponent_d, b(24));
    }

    #[test]
    fn thm4_values() {
        for n in 1..=5u64 {
            for d in 1..=5u64 {
                let r = bound_thm4(n, n, d, &b(2)).unwrap();
                assert_eq!(r.exponent_d, BigInt::from(2 * n * n * d));
            }
        }
        assert_eq!(bound_thm4(1, 4, 7, &b(3)).unwrap().exponent_d, b(21));
        assert_eq!(bound_thm4(3, 3, 3, &b(2)).unwrap().exponent_d, b(54));
        assert_eq!(bound_thm32(3, 3, 3, &b(2)).unwrap().exponent_d, b(54));
    }

    #[test]
    fn lemma_and_graded_ring_values() {
        assert_eq!(bound_main_lemma(3, 5, &b(2)).unwrap().exponent_d, b(18));
        assert_eq!(bound_main_lemma(1, 1, &b(1)).unwrap().exponent_d, b(1));
        // with r >= s the lemma gives s^2 deg I
        assert_eq!(bound_main_lemma(7, 3, &b(5)).unwrap().exponent_d, b(45));
        assert_eq!(bound_thm_cm(2, 3, &b(1)).unwrap().exponent_d, b(36));
        for d in 1..6 {
            assert_eq!(bound_thm_cm(1, d, &b(1)).unwrap().exponent_d, BigInt::from(d));
        }
        assert_eq!(bound_cor12(0, 7, &b(1)).unwrap().exponent_d, b(7));
        assert_eq!(bound_cor12(2, 2, &b(3)).unwrap().exponent_d, b(216));
        // zero ideal with r = n: (n+1)^2 d^{n+1}
        assert_eq!(bound_cor12(3, 2, &b(1)).unwrap().exponent_d, b(16 * 16));
        // corollary at r equals the graded-ring theorem at r+1
        for r in 0..4 {
            for d in 1..4 {
                assert_eq!(
                    bound_cor12(r, d, &b(2)).unwrap().exponent_d,
                    bound_thm_cm(r + 1, d, &b(2)).unwrap().exponent_d
                );
            }
        }
    }

    #[test]
    fn prism_example_chain() {
        // vol(P_d) = d/(n-1)!, p = 1
        for n in 1..=5u64 {
            for d in 1..=6u64 {
                for s in 1..=6u64 {
                    let vol = BigRational::new(BigInt::from(d), factorial((n - 1) as usize));
                    let r = bound_cor21(n, s, &vol, 0, d + 1).unwrap();
                    let m = BigInt::from((n + 1).min(s));
                    let dil = BigInt::from(d * n) * &m * &m;
                    assert_eq!(r.support.as_ref().unwrap().dilation, dil);
                    let quoted = BigInt::from(n + 1).pow(3) * BigInt::from(d + 1).pow(2);
                    assert!(r.degree_bound.unwrap() <= quoted);
                }
            }
        }
        let one = BigRational::one();
        assert_eq!(bound_thm21(1, 1, &one, 0).unwrap().exponent_d, b(1));
        // (1 + deg p) doubles the support dilation for a linear localizer
        let a = bound_thm21(2, 3, &one, 0).unwrap().support.unwrap().dilation;
        let c = bound_thm21(2, 3, &one, 1).unwrap().support.unwrap().dilation;
        assert_eq!(c, a * 2);
    }

    #[test]
    fn thm22_values() {
        let one = BigRational::one();
        let r = bound_thm22(2, 2, 2, &one).unwrap();
        // rho! min(n+1,s)^2 vol = 2 * 4 * 1
        assert_eq!(r.exponent_d, b(8));
        assert_eq!(r.support.unwrap().dilation, b(16));
        let seg = bound_thm22(1, 1, 1, &BigRational::from_integer(b(3))).unwrap();
        assert_eq!(seg.exponent_d, b(3));
        assert!(bound_thm22(2, 2, 2, &BigRational::new(b(1), b(3))).is_err());
    }

    #[test]
    fn dilated_newton_polytope_recovers_stated_constants() {
        // P = (n-1) N: rho! vol(P) = (n-1)^rho U with rho = n; compare with
        // the constants stated for the affine and Laurent theorems
        for n in 2..=7u64 {
            for u in 1..=5i64 {
                for s in 1..=8u64 {
                    let vol_p = BigRational::new(
                        BigInt::from(n - 1).pow(n as u32) * u,
                        factorial(n as usize),
                    );
                    let t21 = bound_thm21(n, s, &vol_p, 0).unwrap();
                    // dilation of P = (n-1)N is (n-1) times a dilation of N
                    let as_n = t21.support.unwrap().dilation * BigInt::from(n - 1);
                    assert!(as_n <= bound_thm1(n, s, &b(u), None).unwrap().support.unwrap().dilation);
                    assert!(t21.exponent_d <= BigInt::from(n).pow(n as u32 + 2) * u);
                    let t22 = bound_thm22(n, s, n, &vol_p).unwrap();
                    let as_n = t22.support.unwrap().dilation * BigInt::from(n - 1);
                    assert!(as_n <= bound_thm2(n, s, &b(u), None).unwrap().support.unwrap().dilation);
                }
            }
        }
    }

    #[test]
    fn bezout_values() {
        assert_eq!(bezout_algdeg_bound(&[4, 3, 2], 3).unwrap(), b(8));
        assert_eq!(bezout_algdeg_bound(&[5, 3], 4).unwrap(), b(3));
        for n in 2..=5u64 {
            for d in 1..=4u64 {
                assert_eq!(
                    bezout_algdeg_bound(&vec![d; n as usize], n).unwrap(),
                    BigInt::from(d).pow(n as u32 - 1)
                );
            }
        }
    }

    #[test]
    fn quadratic_comparison() {
        for n in 2..=10 {
            assert!(quadratic_figure(n) < earlier_quadratic_figure(n));
        }
    }

    #[test]
    fn monotone_in_every_input() {
        let grid = 1..=4u64;
        for n in grid.clone() {
            for s in grid.clone() {
                for x in grid.clone() {
                    let xb = BigInt::from(x);
                    let x1 = BigInt::from(x + 1);
                    let le = |a: BoundReport, c: BoundReport| {
                        assert!(a.exponent_d <= c.exponent_d);
                        if let (Some(p), Some(q)) = (a.support, c.support) {
                            assert!(p.dilation <= q.dilation);
                        }
                    };
                    le(bound_thm1(n, s, &xb, None).unwrap(), bound_thm1(n + 1, s, &xb, None).unwrap());
                    le(bound_thm1(n, s, &xb, None).unwrap(), bound_thm1(n, s + 1, &xb, None).unwrap());
                    le(bound_thm1(n, s, &xb, None).unwrap(), bound_thm1(n, s, &x1, None).unwrap());
                    le(bound_thm2(n, s, &xb, None).unwrap(), bound_thm2(n + 1, s, &xb, None).unwrap());
                    le(bound_thm2(n, s, &xb, None).unwrap(), bound_thm2(n, s, &x1, None).unwrap());
                    le(bound_thm4(n, s, x, &xb).unwrap(), bound_thm4(n + 1, s, x, &xb).unwrap());
                    le(bound_thm4(n, s, x, &xb).unwrap(), bound_thm4(n, s + 1, x, &xb).unwrap());
                    le(bound_thm4(n, s, x, &xb).unwrap(), bound_thm4(n, s, x + 1, &xb).unwrap());
                    le(bound_thm4(n, s, x, &xb).unwrap(), bound_thm4(n, s, x, &x1).unwrap());
                    le(bound_main_lemma(n, s, &xb).unwrap(), bound_main_lemma(n + 1, s, &xb).unwrap());
                    le(bound_main_lemma(n, s, &xb).unwrap(), bound_main_lemma(n, s + 1, &xb).unwrap());
                    le(bound_thm_cm(n, x, &xb).unwrap(), bound_thm_cm(n + 1, x, &xb).unwrap());
                    le(bound_thm_cm(n, x, &xb).unwrap(), bound_thm_cm(n, x + 1, &x1).unwrap());
                    le(bound_cor12(n, x, &xb).unwrap(), bound_cor12(n + 1, x + 1, &x1).unwrap());
                    let v = BigRational::from_integer(xb.clone());
                    let v1 = BigRational::from_integer(x1.clone());
                    le(bound_thm21(n, s, &v, x).unwrap(), bound_thm21(n + 1, s, &v, x).unwrap());
                    le(bound_thm21(n, s, &v, x).unwrap(), bound_thm21(n, s + 1, &v1, x + 1).unwrap());
                    le(bound_thm22(n, s, n, &v).unwrap(), bound_thm22(n + 1, s + 1, n + 1, &v1).unwrap());
                    // degree lists: raise one entry keeping the order
                    let base = vec![x + 1, x, x];
                    let raised = vec![x + 1, x + 1, x];
                    le(bound_thm3(&base, n).unwrap(), bound_thm3(&raised, n).unwrap());
                    le(bound_thm3(&base, n).unwrap(), bound_thm3(&base, n + 1).unwrap());
                    le(bound_bezout_algdeg(&base, n).unwrap(), bound_bezout_algdeg(&raised, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
            let j = serde_json_like(t);
            assert_eq!(j, t.as_str());
        }
        assert_eq!("Thm-CM".parse::<TheoremId>().unwrap(), TheoremId::ThmCm);
        assert!("thm9".parse::<TheoremId>().is_err());
    }

    fn serde_json_like(t: TheoremId) -> String {
        // serde rename must agree with as_str
        format!("{t}")
    }
}
