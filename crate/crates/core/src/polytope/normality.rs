//! Graded point sets and a level-by-level saturation check.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{convex_hull, GeometryError, LatticePolytope};
use crate::exponent::ExponentVector;
use crate::intmat;

/// Integer vectors on an affine hyperplane `<a, omega> = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSet {
    points: Vec<ExponentVector>,
    grading_witness: ExponentVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NormalityVerdict {
    /// Every lattice point of `pos(A) ∩ ZA` up to this grading level is a sum
    /// of that many elements of `A`.
    NormalUpToDepth { depth: u32 },
    /// A point of `pos(A) ∩ ZA` at `level` that is not such a sum.
    Counterexample { point: ExponentVector, level: u32 },
}

impl GradedSet {
    pub fn new(points: Vec<ExponentVector>, omega: ExponentVector) -> Result<Self, GeometryError> {
        if points.is_empty() {
            return Err(GeometryError::EmptyPointSet);
        }
        for p in &points {
            if p.len() != omega.len() {
                return Err(GeometryError::DimensionMismatch {
                    expected: omega.len(),
                    found: p.len(),
                });
            }
            if p.dot(omega.coords()) != 1 {
                return Err(GeometryError::NotGraded);
            }
        }
        let mut points = points;
        points.sort();
        points.dedup();
        Ok(GradedSet {
            points,
            grading_witness: omega,
        })
    }

    /// Find an integer grading `omega` with `<a, omega> = 1` for all `a`.
    pub fn detect(points: Vec<ExponentVector>) -> Result<Self, GeometryError> {
        let Some(first) = points.first() else {
            return Err(GeometryError::EmptyPointSet);
        };
        let n = first.len();
        if let Some(bad) = points.iter().find(|p| p.len() != n) {
            return Err(GeometryError::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let m: Vec<Vec<BigInt>> = points.iter().map(|p| intmat::to_big(p.coords())).collect();
        let ones = vec![BigInt::from(1); points.len()];
        let omega = intmat::solve_integer(&m, n, &ones).ok_or(GeometryError::NotGraded)?;
        let omega = ExponentVector::new(
            omega
                .iter()
                .map(|x| i64::try_from(x).map_err(|_| GeometryError::NotGraded))
                .collect::<Result<_, _>>()?,
        );
        GradedSet::new(points, omega)
    }

    /// `A(P) = {1} x (P ∩ Z^n)` with grading `e_0`.
    pub fn of_polytope(p: &LatticePolytope) -> Self {
        let points = p.lattice_points().iter().map(|x| x.prepend(1)).collect();
        GradedSet::new(points, ExponentVector::unit(p.ambient_dim() + 1, 0)).unwrap()
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn grading_witness(&self) -> &ExponentVector {
        &self.grading_witness
    }

    /// `m`-fold sums of elements of `A`, each with one decomposition.
    fn sum_levels(&self, depth: u32) -> Vec<HashMap<ExponentVector, (usize, ExponentVector)>> {
        let mut levels: Vec<HashMap<ExponentVector, (usize, ExponentVector)>> = Vec::new();
        let n = self.grading_witness.len();
        let mut first = HashMap::new();
        for (i, a) in self.points.iter().enumerate() {
            first.insert(a.clone(), (i, ExponentVector::zero(n)));
        }
        levels.push(first);
        for _ in 1..depth {
            let prev = levels.last().unwrap();
            let mut keys: Vec<&ExponentVector> = prev.keys().collect();
            keys.sort();
            let mut next = HashMap::new();
            for s in keys {
                for (i, a) in self.points.iter().enumerate() {
                    next.entry(s + a).or_insert_with(|| (i, s.clone()));
                }
            }
            levels.push(next);
        }
        levels
    }

    /// An explicit decomposition of `point` as a sum of `level` elements of
    /// `A`, if one exists.
    pub fn sum_witness(&self, point: &ExponentVector, level: u32) -> Option<Vec<ExponentVector>> {
        if level == 0 {
            return point.is_zero().then(Vec::new);
        }
        let levels = self.sum_levels(level);
        let mut cur = point.clone();
        let mut out = Vec::new();
        for l in (0..level as usize).rev() {
            let (i, prev) = levels[l].get(&cur)?;
            out.push(self.points[*i].clone());
            cur = prev.clone();
        }
        out.reverse();
        Some(out)
    }
}

/// Membership test for the lattice generated by a set of vectors.
struct GeneratedLattice {
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl GeneratedLattice {
    fn new(gens: &[ExponentVector], n: usize) -> Self {
        let rows: Vec<Vec<BigInt>> = gens.iter().map(|g| intmat::to_big(g.coords())).collect();
        let basis = intmat::hermite_normal_form(&rows, n);
        let pivots = basis
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        GeneratedLattice { basis, pivots }
    }

    fn contains(&self, p: &ExponentVector) -> bool {
        let mut r = intmat::to_big(p.coords());
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            let (q, rem) = r[c].div_rem(&row[c]);
            if !rem.is_zero() {
                return false;
            }
            for (ri, bi) in r.iter_mut().zip(row) {
                *ri -= &q * bi;
            }
        }
        r.iter().all(Zero::is_zero)
    }
}

/// Check `NA = pos(A) ∩ ZA` on grading levels `1..=depth`.
///
/// Level `m` of `pos(A)` is `m conv(A)`, so its candidate points are the
/// lattice points of that dilate that also lie in `ZA`. Each one must appear
/// among the `m`-fold sums of elements of `A`.
pub fn is_normal(a: &GradedSet, depth: u32) -> Result<NormalityVerdict, GeometryError> {
    if depth == 0 {
        return Err(GeometryError::InvalidArgument("depth must be positive".into()));
    }
    let n = a.grading_witness.len();
    let hull = convex_hull(a.points.iter().cloned())?;
    let lattice = GeneratedLattice::new(&a.points, n);
    let levels = a.sum_levels(depth);
    for m in 1..=depth {
        let sums = &levels[m as usize - 1];
        let candidates: BTreeMap<ExponentVector, ()> = hull
            .dilate(m as u64)
            .lattice_points()
            .into_iter()
            .filter(|p| lattice.contains(p))
            .map(|p| (p, ()))
            .collect();
        for p in candidates.keys() {
            if !sums.contains_key(p) {
                return Ok(NormalityVerdict::Counterexample {
                    point: p.clone(),
                    level: m,
                });
            }
        }
    }
    Ok(NormalityVerdict::NormalUpToDepth { depth })
}
