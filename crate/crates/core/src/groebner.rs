//! Buchberger's algorithm in degree reverse lexicographic order, with
//! optional tracking of each basis element as a combination of the inputs.
//!
//! Also: ideal membership certificates, homogenization of ideals, Hilbert
//! series of homogeneous ideals (dimension and degree), and the algebraic
//! degree `delta(lambda)` of a system for one coefficient matrix.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exponent::ExponentVector;
use crate::poly::{PolyError, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("Gröbner budget exceeded: {0}")]
    Budget(String),
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("coefficient matrix must be {expected}x{expected}")]
    MatrixShape { expected: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    /// Graded, ties broken by the smaller exponent of the last variable.
    DegRevLex,
}

#[derive(Clone, Copy, Debug)]
pub struct GroebnerConfig {
    pub max_pairs: usize,
    pub max_basis: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_pairs: 100_000,
            max_basis: 5_000,
        }
    }
}

/// Degree reverse lexicographic comparison.
pub fn degrevlex_cmp(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    a.total().cmp(&b.total()).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Drl(ExponentVector);

impl Ord for Drl {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for Drl {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

type DPoly = BTreeMap<Drl, BigRational>;

fn to_dpoly(f: &Polynomial) -> DPoly {
    f.terms().map(|(e, c)| (Drl(e.clone()), c.clone())).collect()
}

fn from_dpoly(n: usize, p: &DPoly) -> Polynomial {
    Polynomial::from_terms(n, false, p.iter().map(|(e, c)| (e.0.clone(), c.clone()))).unwrap()
}

fn lead(p: &DPoly) -> Option<(&ExponentVector, &BigRational)> {
    p.last_key_value().map(|(e, c)| (&e.0, c))
}

fn divides(a: &ExponentVector, b: &ExponentVector) -> bool {
    a.coords().iter().zip(b.coords()).all(|(x, y)| x <= y)
}

fn lcm(a: &ExponentVector, b: &ExponentVector) -> ExponentVector {
    ExponentVector::new(a.coords().iter().zip(b.coords()).map(|(x, y)| *x.max(y)).collect())
}

/// `p -= c x^m q`
fn sub_mul(p: &mut DPoly, c: &BigRational, m: &ExponentVector, q: &DPoly) {
    for (e, v) in q {
        let key = Drl(&e.0 + m);
        let t = c * v;
        match p.entry(key) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(-t);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() -= t;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

fn scale(p: &mut DPoly, c: &BigRational) {
    for v in p.values_mut() {
        *v *= c;
    }
}

/// A polynomial with its expression over the input generators.
#[derive(Clone, Debug)]
struct Tracked {
    p: DPoly,
    rows: Option<Vec<Polynomial>>,
}

impl Tracked {
    fn sub_mul(&mut self, c: &BigRational, m: &ExponentVector, other: &Tracked) {
        sub_mul(&mut self.p, c, m, &other.p);
        if let (Some(rows), Some(orows)) = (&mut self.rows, &other.rows) {
            for (r, o) in rows.iter_mut().zip(orows) {
                if !o.is_zero() {
                    let t = o.monomial_shift(m).unwrap().scalar_mul(c);
                    *r = &*r - &t;
                }
            }
        }
    }

    fn make_monic(&mut self) {
        let Some((_, c)) = lead(&self.p) else { return };
        let inv = BigRational::one() / c;
        scale(&mut self.p, &inv);
        if let Some(rows) = &mut self.rows {
            for r in rows.iter_mut() {
                *r = r.scalar_mul(&inv);
            }
        }
    }
}

/// Full reduction of `f` by `basis`; every reduction step is recorded in
/// `quotients` when given.
fn reduce(f: &mut Tracked, basis: &[Tracked], mut quotients: Option<&mut Vec<DPoly>>) {
    // rows stay on `f`; only the irreducible terms move to `rem`
    let mut rem = DPoly::new();
    loop {
        let Some((e, c)) = lead(&f.p).map(|(e, c)| (e.clone(), c.clone())) else {
            break;
        };
        let divisor = basis.iter().position(|g| lead(&g.p).is_some_and(|(m, _)| divides(m, &e)));
        match divisor {
            Some(k) => {
                let (m, lc) = lead(&basis[k].p).unwrap();
                let mult = &e - m;
                let coef = &c / lc;
                f.sub_mul(&coef, &mult, &basis[k]);
                if let Some(q) = quotients.as_deref_mut() {
                    let slot = q[k].entry(Drl(mult)).or_insert_with(BigRational::zero);
                    *slot += &coef;
                }
            }
            None => {
                f.p.pop_last();
                rem.insert(Drl(e), c);
            }
        }
    }
    f.p = rem;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    pub generators: Vec<Polynomial>,
    pub order: MonomialOrder,
    /// `cofactors[k][i]`: coefficient of input `i` in generator `k`.
    pub cofactors: Option<Vec<Vec<Polynomial>>>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn leading_monomials(&self) -> Vec<ExponentVector> {
        self.generators.iter().map(|g| leading_monomial(g).unwrap()).collect()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let basis: Vec<Tracked> = self
            .generators
            .iter()
            .map(|g| Tracked {
                p: to_dpoly(g),
                rows: None,
            })
            .collect();
        let mut t = Tracked {
            p: to_dpoly(f),
            rows: None,
        };
        reduce(&mut t, &basis, None);
        from_dpoly(self.nvars, &t.p)
    }
}

pub fn leading_monomial(f: &Polynomial) -> Option<ExponentVector> {
    f.terms().map(|(e, _)| e).max_by(|a, b| degrevlex_cmp(a, b)).cloned()
}

fn check_inputs(gens: &[Polynomial]) -> Result<usize, GroebnerError> {
    let n = gens.first().map_or(0, Polynomial::nvars);
    for g in gens {
        if g.is_laurent() {
            return Err(PolyError::NotOrdinaryPolynomial.into());
        }
        if g.nvars() != n {
            return Err(PolyError::ArityMismatch {
                expected: n,
                found: g.nvars(),
            }
            .into());
        }
    }
    Ok(n)
}

/// Reduced Gröbner basis of the ideal generated by `gens` (in `nvars`
/// variables; `nvars` is only used when `gens` is empty).
pub fn buchberger(
    gens: &[Polynomial],
    nvars: usize,
    track_cofactors: bool,
    cfg: &GroebnerConfig,
) -> Result<GroebnerBasis, GroebnerError> {
    let n = if gens.is_empty() { nvars } else { check_inputs(gens)? };
    let s = gens.len();
    let unit_row = |i: usize| -> Vec<Polynomial> {
        (0..s)
            .map(|j| if i == j { Polynomial::one(n) } else { Polynomial::zero(n) })
            .collect()
    };
    let mut basis: Vec<Tracked> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut processed = 0usize;

    let add = |mut t: Tracked, basis: &mut Vec<Tracked>, pairs: &mut BTreeSet<(usize, usize)>| -> Result<bool, GroebnerError> {
        t.make_monic();
        let is_const = lead(&t.p).is_some_and(|(e, _)| e.is_zero());
        let k = basis.len();
        if k >= cfg.max_basis {
            return Err(GroebnerError::Budget(format!("basis exceeded {} elements", cfg.max_basis)));
        }
        for i in 0..k {
            pairs.insert((i, k));
        }
        basis.push(t);
        Ok(is_const)
    };

    let mut unit: Option<usize> = None;
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut t = Tracked {
            p: to_dpoly(g),
            rows: track_cofactors.then(|| unit_row(i)),
        };
        reduce(&mut t, &basis, None);
        if t.p.is_empty() {
            continue;
        }
        if add(t, &mut basis, &mut pairs)? {
            unit = Some(basis.len() - 1);
            break;
        }
    }

    while unit.is_none() {
        // normal selection: smallest lcm, then lowest indices
        let Some(&(i, j)) = pairs.iter().min_by(|a, b| {
            let la = lcm(lead(&basis[a.0].p).unwrap().0, lead(&basis[a.1].p).unwrap().0);
            let lb = lcm(lead(&basis[b.0].p).unwrap().0, lead(&basis[b.1].p).unwrap().0);
            degrevlex_cmp(&la, &lb).then(a.cmp(b))
        }) else {
            break;
        };
        pairs.remove(&(i, j));
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(GroebnerError::Budget(format!("more than {} pairs", cfg.max_pairs)));
        }
        let mi = lead(&basis[i].p).unwrap().0.clone();
        let mj = lead(&basis[j].p).unwrap().0.clone();
        let l = lcm(&mi, &mj);
        // first criterion: coprime leading monomials
        if l.total() == mi.total() + mj.total() {
            continue;
        }
        // second criterion
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(lead(&basis[k].p).unwrap().0, &l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        // basis elements are monic
        let mut sp = Tracked {
            p: DPoly::new(),
            rows: track_cofactors.then(|| vec![Polynomial::zero(n); s]),
        };
        let minus_one = -BigRational::one();
        sp.sub_mul(&minus_one, &(&l - &mi), &basis[i]);
        sp.sub_mul(&BigRational::one(), &(&l - &mj), &basis[j]);
        reduce(&mut sp, &basis, None);
        if sp.p.is_empty() {
            continue;
        }
        if add(sp, &mut basis, &mut pairs)? {
            unit = Some(basis.len() - 1);
        }
    }

    if let Some(u) = unit {
        let g = basis.swap_remove(u);
        return Ok(GroebnerBasis {
            nvars: n,
            generators: vec![Polynomial::one(n)],
            order: MonomialOrder::DegRevLex,
            cofactors: g.rows.map(|r| vec![r]),
        });
    }

    // minimal basis: drop elements whose leading monomial is divisible by
    // another's (the earlier one survives a tie)
    let leads: Vec<ExponentVector> = basis.iter().map(|t| lead(&t.p).unwrap().0.clone()).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&a| {
            !(0..basis.len()).any(|b| b != a && divides(&leads[b], &leads[a]) && (leads[b] != leads[a] || b < a))
        })
        .collect();
    let mut minimal: Vec<Tracked> = keep.into_iter().map(|k| basis[k].clone()).collect();
    minimal.sort_by(|a, b| degrevlex_cmp(lead(&a.p).unwrap().0, lead(&b.p).unwrap().0));
    // interreduce tails
    for k in 0..minimal.len() {
        let mut t = minimal[k].clone();
        let others: Vec<Tracked> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, g)| g.clone())
            .collect();
        let (lm, lc) = lead(&t.p).map(|(e, c)| (e.clone(), c.clone())).unwrap();
        t.p.pop_last();
        reduce(&mut t, &others, None);
        t.p.insert(Drl(lm), lc);
        t.make_monic();
        minimal[k] = t;
    }
    let cofactors = track_cofactors.then(|| minimal.iter().map(|t| t.rows.clone().unwrap()).collect());
    Ok(GroebnerBasis {
        nvars: n,
        generators: minimal.iter().map(|t| from_dpoly(n, &t.p)).collect(),
        order: MonomialOrder::DegRevLex,
        cofactors,
    })
}

/// Cofactors `h` with `f = sum h_i gens_i`, or `None` when `f` is not in the
/// ideal.
pub fn membership_certificate(
    f: &Polynomial,
    gens: &[Polynomial],
    cfg: &GroebnerConfig,
) -> Result<Option<Vec<Polynomial>>, GroebnerError> {
    let n = f.nvars();
    check_inputs(&[gens, std::slice::from_ref(f)].concat())?;
    if f.is_zero() {
        return Ok(Some(vec![Polynomial::zero(n); gens.len()]));
    }
    if let Some(i) = gens.iter().position(|g| g == f) {
        return Ok(Some(
            (0..gens.len())
                .map(|j| if i == j { Polynomial::one(n) } else { Polynomial::zero(n) })
                .collect(),
        ));
    }
    let gb = buchberger(gens, n, true, cfg)?;
    let basis: Vec<Tracked> = gb
        .generators
        .iter()
        .map(|g| Tracked {
            p: to_dpoly(g),
            rows: None,
        })
        .collect();
    let mut t = Tracked {
        p: to_dpoly(f),
        rows: None,
    };
    let mut quotients = vec![DPoly::new(); basis.len()];
    reduce(&mut t, &basis, Some(&mut quotients));
    if !t.p.is_empty() {
        return Ok(None);
    }
    let rows = gb.cofactors.unwrap();
    let mut h = vec![Polynomial::zero(n); gens.len()];
    for (q, row) in quotients.iter().zip(&rows) {
        if q.is_empty() {
            continue;
        }
        let q = from_dpoly(n, q);
        for (hi, r) in h.iter_mut().zip(row) {
            *hi = &*hi + &(&q * r);
        }
    }
    Ok(Some(h))
}

/// Generators of the homogenization `I^h ⊆ k[x_0, ..., x_n]` (`x_0` first):
/// the homogenized elements of a degree-compatible Gröbner basis.
pub fn homogenize_ideal(gens: &[Polynomial], nvars: usize, cfg: &GroebnerConfig) -> Result<Vec<Polynomial>, GroebnerError> {
    let gb = buchberger(gens, nvars, false, cfg)?;
    Ok(gb
        .generators
        .iter()
        .map(|g| g.homogenize(None))
        .collect::<Result<_, _>>()?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealProfile {
    /// Krull dimension of the quotient; `-1` for the unit ideal.
    pub dim: i64,
    /// Degree; `0` for the unit ideal.
    pub degree: BigInt,
    /// Numerator of the Hilbert series over `(1 - t)^nvars`.
    pub hilbert_numerator: Vec<BigInt>,
}

fn poly_sub(a: &mut Vec<BigInt>, b: &[BigInt], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, BigInt::zero());
    }
    for (k, v) in b.iter().enumerate() {
        a[k + shift] -= v;
    }
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
}

fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_by(degrevlex_cmp);
    gens.dedup();
    let mut out: Vec<ExponentVector> = Vec::new();
    for g in gens {
        if !out.iter().any(|m| divides(m, &g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `S / M` for
/// a monomial ideal `M`, via `N(M + (m)) = N(M) - t^{deg m} N(M : m)`.
pub fn hilbert_numerator(gens: &[ExponentVector]) -> Vec<BigInt> {
    let gens = minimalize(gens.to_vec());
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(ExponentVector::is_zero) {
        return Vec::new();
    }
    // pairwise coprime generators: product of (1 - t^{deg m})
    let coprime = gens.iter().enumerate().all(|(i, a)| {
        gens[i + 1..]
            .iter()
            .all(|b| a.coords().iter().zip(b.coords()).all(|(x, y)| *x == 0 || *y == 0))
    });
    if coprime {
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            let d = g.total() as usize;
            let mut next = acc.clone();
            poly_sub(&mut next, &acc, d);
            acc = next;
        }
        return acc;
    }
    let (last, rest) = gens.split_last().unwrap();
    let colon: Vec<ExponentVector> = rest.iter().map(|m| &lcm(m, last) - last).collect();
    let mut n = hilbert_numerator(rest);
    let c = hilbert_numerator(&colon);
    poly_sub(&mut n, &c, last.total() as usize);
    n
}

/// Dimension and degree from a Hilbert numerator in `nvars` variables.
pub fn profile_from_numerator(numerator: Vec<BigInt>, nvars: usize) -> IdealProfile {
    if numerator.is_empty() {
        return IdealProfile {
            dim: -1,
            degree: BigInt::zero(),
            hilbert_numerator: numerator,
        };
    }
    let mut q = numerator.clone();
    let mut k = 0usize;
    while q.iter().sum::<BigInt>().is_zero() {
        // q(t) = (1 - t) r(t): r_j = q_0 + ... + q_j
        let mut r = Vec::with_capacity(q.len() - 1);
        let mut acc = BigInt::zero();
        for v in &q[..q.len() - 1] {
            acc += v;
            r.push(acc.clone());
        }
        q = r;
        k += 1;
    }
    IdealProfile {
        dim: nvars as i64 - k as i64,
        degree: q.iter().sum(),
        hilbert_numerator: numerator,
    }
}

/// Dimension and degree of a homogeneous ideal.
pub fn ideal_profile(gens: &[Polynomial], nvars: usize, cfg: &GroebnerConfig) -> Result<IdealProfile, GroebnerError> {
    if let Some(i) = gens.iter().position(|g| !g.is_homogeneous()) {
        return Err(GroebnerError::NotHomogeneous(i));
    }
    let gb = buchberger(gens, nvars, false, cfg)?;
    Ok(profile_from_numerator(
        hilbert_numerator(&gb.leading_monomials()),
        gb.nvars(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraicDegree {
    /// Number of combinations needed before 1 enters the ideal.
    pub t: usize,
    pub delta: BigInt,
    /// Profiles of `J_1, ..., J_{t-1}`.
    pub profiles: Vec<IdealProfile>,
}

/// `h_i = sum_j lambda_ij f_j`; `None` when `lambda` is outside the
/// admissible set (no `t <= min(n, s)` with `1 ∈ (h_1..h_t)`, or the
/// homogenized partial ideals do not drop dimension one step at a time).
pub fn algebraic_degree_for_lambda(
    fs: &[Polynomial],
    nvars: usize,
    lambda: &[Vec<BigRational>],
    cfg: &GroebnerConfig,
) -> Result<Option<AlgebraicDegree>, GroebnerError> {
    let s = fs.len();
    if lambda.len() != s || lambda.iter().any(|r| r.len() != s) {
        return Err(GroebnerError::MatrixShape { expected: s });
    }
    check_inputs(fs)?;
    let h: Vec<Polynomial> = lambda
        .iter()
        .map(|row| {
            row.iter()
                .zip(fs)
                .fold(Polynomial::zero(nvars), |acc, (c, f)| acc + f.scalar_mul(c))
        })
        .collect();
    let limit = nvars.min(s);
    let Some(t) = (1..=limit)
        .map(|t| buchberger(&h[..t], nvars, false, cfg).map(|gb| gb.is_unit()))
        .position(|r| !matches!(r, Ok(false)))
        .map(|k| k + 1)
    else {
        return Ok(None);
    };
    // surface a budget error hit while scanning
    if !buchberger(&h[..t], nvars, false, cfg)?.is_unit() {
        return Ok(None);
    }
    let mut profiles = Vec::with_capacity(t - 1);
    let mut prev_dim = nvars as i64 + 1;
    for i in 1..t {
        let j = homogenize_ideal(&h[..i], nvars, cfg)?;
        let prof = ideal_profile(&j, nvars + 1, cfg)?;
        if prof.dim != prev_dim - 1 {
            return Ok(None);
        }
        prev_dim = prof.dim;
        profiles.push(prof);
    }
    let delta = profiles
        .iter()
        .map(|p| p.degree.clone())
        .max()
        .unwrap_or_else(BigInt::one);
    Ok(Some(AlgebraicDegree { t, delta, profiles }))
}
