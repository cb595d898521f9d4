//! Simplicial subdivisions: the explicit unimodular subdivision of the prism
//! `P_d` and an exact checker for unimodular subdivisions.

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::{affine_rank, simplex_det, AffineFrame, GeometryError, LatticePolytope};
use crate::exponent::ExponentVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexSubdivision {
    pub simplices: Vec<Vec<ExponentVector>>,
}

impl SimplexSubdivision {
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }
}

/// Split `P_1 = S x [0,1]` into the `n` simplices with vertices
/// `alpha_1..alpha_i, beta_i..beta_n` and stack `d` translated copies.
pub fn unimodular_subdivision_pd(n: usize, d: u32) -> Result<SimplexSubdivision, GeometryError> {
    if n == 0 || d == 0 {
        return Err(GeometryError::InvalidArgument("n and d must be positive".into()));
    }
    let alpha = |i: usize| {
        // e_i x {0} for i < n, the origin for i = n (1-based)
        if i < n {
            ExponentVector::unit(n, i - 1)
        } else {
            ExponentVector::zero(n)
        }
    };
    let beta = |i: usize| &alpha(i) + &ExponentVector::unit(n, n - 1);
    let mut simplices = Vec::with_capacity(n * d as usize);
    for slice in 0..d as i64 {
        let lift = ExponentVector::unit(n, n - 1).scale(slice);
        for i in 1..=n {
            let mut s: Vec<ExponentVector> = (1..=i).map(|j| &alpha(j) + &lift).collect();
            s.extend((i..=n).map(|j| &beta(j) + &lift));
            simplices.push(s);
        }
    }
    Ok(SimplexSubdivision { simplices })
}

/// True iff every simplex is a unimodular simplex inside `P` of full
/// dimension, their volumes add up to the volume of `P`, and any two of
/// them meet in a common face (possibly empty).
///
/// Containment, interior-disjointness and volume additivity together imply
/// that the simplices cover `P`.
pub fn verify_unimodular_subdivision(
    p: &LatticePolytope,
    sub: &SimplexSubdivision,
) -> Result<bool, GeometryError> {
    let n = p.ambient_dim();
    let rho = p.dim();
    for s in &sub.simplices {
        if let Some(v) = s.iter().find(|v| v.len() != n) {
            return Err(GeometryError::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
    }
    let mut total = num_bigint::BigInt::from(0);
    for s in &sub.simplices {
        if s.len() != rho + 1 || !s.iter().all(|v| p.contains(v)) {
            return Ok(false);
        }
        let local: Vec<Vec<i64>> = s.iter().map(|v| p.local_coords(v).unwrap()).collect();
        let refs: Vec<&[i64]> = local.iter().map(Vec::as_slice).collect();
        let det = if rho == 0 { 1.into() } else { simplex_det(&refs).abs() };
        if det != 1.into() {
            return Ok(false);
        }
        total += det;
    }
    if total != p.normalized_volume() {
        return Ok(false);
    }
    for (i, s) in sub.simplices.iter().enumerate() {
        for t in &sub.simplices[i + 1..] {
            if !intersect_in_common_face(s, t) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn dedup_sorted(v: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut v = v.to_vec();
    v.sort();
    v.dedup();
    v
}

/// Whether `conv(s) ∩ conv(t) = conv(s ∩ t)` for two point sets that are each
/// affinely independent.
///
/// If the intersection is proper there is a weakly separating hyperplane
/// spanned by points of `s ∪ t` (an extreme ray of the cone of separating
/// hyperplanes). The intersection then lives in that hyperplane, where the
/// same question is asked one dimension lower.
pub(crate) fn intersect_in_common_face(s: &[ExponentVector], t: &[ExponentVector]) -> bool {
    let s = dedup_sorted(s);
    let t = dedup_sorted(t);
    if s.iter().all(|x| t.contains(x)) || t.iter().all(|x| s.contains(x)) {
        return true;
    }
    let mut all = s.clone();
    all.extend(t.iter().cloned());
    let all = dedup_sorted(&all);
    let frame = AffineFrame::new(&all[0], &all);
    let k = frame.dim();
    let local: Vec<Vec<i64>> = all.iter().map(|x| frame.coords(x).unwrap()).collect();
    let in_s: Vec<bool> = all.iter().map(|x| s.contains(x)).collect();
    let in_t: Vec<bool> = all.iter().map(|x| t.contains(x)).collect();

    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    let found = search_separator(&local, k, 0, &mut chosen, &in_s, &in_t);
    match found {
        Some(on_plane) => {
            let s2: Vec<ExponentVector> = (0..all.len())
                .filter(|&i| in_s[i] && on_plane[i])
                .map(|i| all[i].clone())
                .collect();
            let t2: Vec<ExponentVector> = (0..all.len())
                .filter(|&i| in_t[i] && on_plane[i])
                .map(|i| all[i].clone())
                .collect();
            if s2.is_empty() || t2.is_empty() {
                return true;
            }
            intersect_in_common_face(&s2, &t2)
        }
        None => false,
    }
}

/// Enumerate `k`-subsets spanning a hyperplane; return the on-plane mask of
/// the first one that weakly separates the two marked sets.
fn search_separator(
    pts: &[Vec<i64>],
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    in_s: &[bool],
    in_t: &[bool],
) -> Option<Vec<bool>> {
    if chosen.len() == k {
        let refs: Vec<&[i64]> = chosen.iter().map(|&i| pts[i].as_slice()).collect();
        if affine_rank(&refs) != k - 1 {
            return None;
        }
        let normal = hyperplane_normal(&refs, k);
        let base: i128 = dot(&normal, refs[0]);
        let side: Vec<i128> = pts.iter().map(|p| dot(&normal, p) - base).collect();
        let s_le = (0..pts.len()).all(|i| !in_s[i] || side[i] <= 0);
        let s_ge = (0..pts.len()).all(|i| !in_s[i] || side[i] >= 0);
        let t_le = (0..pts.len()).all(|i| !in_t[i] || side[i] <= 0);
        let t_ge = (0..pts.len()).all(|i| !in_t[i] || side[i] >= 0);
        if (s_le && t_ge) || (s_ge && t_le) {
            return Some(side.iter().map(|&v| v == 0).collect());
        }
        return None;
    }
    for i in start..pts.len() {
        chosen.push(i);
        if let Some(r) = search_separator(pts, k, i + 1, chosen, in_s, in_t) {
            return Some(r);
        }
        chosen.pop();
    }
    None
}

fn dot(a: &[i128], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(x, &y)| x * y as i128).sum()
}

fn hyperplane_normal(pts: &[&[i64]], k: usize) -> Vec<i128> {
    let rows: Vec<Vec<num_bigint::BigInt>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(pts[0]).map(|(a, b)| (a - b).into()).collect())
        .collect();
    (0..k)
        .map(|c| {
            let minor: Vec<Vec<num_bigint::BigInt>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let d = crate::intmat::determinant(&minor);
            let d: i128 = i128::try_from(d).expect("normal overflow");
            if c % 2 == 1 {
                -d
            } else {
                d
            }
        })
        .collect()
}
