//! Exact polyhedral geometry over the integers.
//!
//! Volumes are normalized with respect to the saturated lattice of the
//! affine hull, so a unimodular simplex has volume one in any dimension and
//! a lower-dimensional polytope is measured inside its own affine lattice.

mod frame;
pub mod normality;
pub mod subdivision;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exponent::ExponentVector;
pub(crate) use frame::{affine_rank, simplex_det, AffineFrame};
use frame::{placing_triangulation, Halfspace};

pub use normality::{is_normal, GradedSet, NormalityVerdict};
pub use subdivision::{unimodular_subdivision_pd, verify_unimodular_subdivision, SimplexSubdivision};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point set is not graded")]
    NotGraded,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Convex hull of finitely many integer points, kept in minimal
/// V-representation together with the lattice data of its affine hull.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<ExponentVector>,
    frame: AffineFrame,
    facets: Vec<Halfspace>,
    normalized_volume: BigInt,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

/// Plain view of a polytope for serialization.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolytopeSummary {
    pub ambient_dim: usize,
    pub dim: usize,
    pub vertices: Vec<ExponentVector>,
    pub hull_lattice_basis: Vec<ExponentVector>,
}

/// Minimal vertex set, dimension and lattice basis of `conv(points)`.
pub fn convex_hull<I>(points: I) -> Result<LatticePolytope, GeometryError>
where
    I: IntoIterator<Item = ExponentVector>,
{
    let mut pts: Vec<ExponentVector> = points.into_iter().collect();
    let Some(first) = pts.first() else {
        return Err(GeometryError::EmptyPointSet);
    };
    let n = first.len();
    if let Some(bad) = pts.iter().find(|p| p.len() != n) {
        return Err(GeometryError::DimensionMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    pts.sort();
    pts.dedup();
    // lexicographically smallest input point is always a vertex
    let frame = AffineFrame::new(&pts[0], &pts);
    let rho = frame.dim();
    let local: Vec<Vec<i64>> = pts
        .iter()
        .map(|p| frame.coords(p).expect("point outside its own affine hull"))
        .collect();
    let tri = placing_triangulation(&local, rho);
    let vertices: Vec<ExponentVector> = tri.vertices.iter().map(|&i| pts[i].clone()).collect();
    Ok(LatticePolytope {
        ambient_dim: n,
        vertices,
        frame,
        facets: tri.facets,
        normalized_volume: tri.volume,
    })
}

impl LatticePolytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension `rho` of the affine hull.
    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    /// Base vertex of the lattice frame (the lexicographically smallest).
    pub fn base_vertex(&self) -> &ExponentVector {
        &self.vertices[0]
    }

    /// Basis of the saturated lattice `span(P - a0) ∩ Z^n`, in Hermite
    /// normal form.
    pub fn hull_lattice_basis(&self) -> Vec<ExponentVector> {
        self.frame.basis_vectors()
    }

    pub fn summary(&self) -> PolytopeSummary {
        PolytopeSummary {
            ambient_dim: self.ambient_dim,
            dim: self.dim(),
            vertices: self.vertices.clone(),
            hull_lattice_basis: self.hull_lattice_basis(),
        }
    }

    /// Coordinates of `p` in the lattice frame when `p` lies on the affine
    /// lattice of the polytope.
    pub(crate) fn local_coords(&self, p: &ExponentVector) -> Option<Vec<i64>> {
        self.frame.coords(p)
    }

    pub fn contains(&self, p: &ExponentVector) -> bool {
        if p.len() != self.ambient_dim {
            return false;
        }
        match self.frame.coords(p) {
            Some(y) => self.facets.iter().all(|h| h.contains(&y)),
            None => false,
        }
    }

    /// All integer points of `P`, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<ExponentVector> {
        let rho = self.dim();
        if rho == 0 {
            return self.vertices.clone();
        }
        let local: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| self.frame.coords(v).unwrap())
            .collect();
        let lo: Vec<i64> = (0..rho).map(|k| local.iter().map(|y| y[k]).min().unwrap()).collect();
        let hi: Vec<i64> = (0..rho).map(|k| local.iter().map(|y| y[k]).max().unwrap()).collect();
        let mut out = Vec::new();
        let mut y = lo.clone();
        'outer: loop {
            if self.facets.iter().all(|h| h.contains(&y)) {
                out.push(self.frame.lift(&y));
            }
            for k in (0..rho).rev() {
                if y[k] < hi[k] {
                    y[k] += 1;
                    continue 'outer;
                }
                y[k] = lo[k];
            }
            break;
        }
        out.sort();
        out
    }

    /// Number of points in the bounding box scanned by
    /// [`lattice_points`](Self::lattice_points); an upper bound on their count.
    pub fn enumeration_box_size(&self) -> BigInt {
        let local: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| self.frame.coords(v).unwrap())
            .collect();
        (0..self.dim())
            .map(|k| {
                let lo = local.iter().map(|y| y[k]).min().unwrap();
                let hi = local.iter().map(|y| y[k]).max().unwrap();
                BigInt::from(hi) - BigInt::from(lo) + 1
            })
            .product()
    }

    /// `{k v : v vertex}`; `dilate(P, 0)` is the origin.
    pub fn dilate(&self, k: u64) -> LatticePolytope {
        let k = i64::try_from(k).expect("dilation factor overflow");
        convex_hull(self.vertices.iter().map(|v| v.scale(k))).unwrap()
    }

    pub fn translate(&self, a: &ExponentVector) -> Result<LatticePolytope, GeometryError> {
        if a.len() != self.ambient_dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.ambient_dim,
                found: a.len(),
            });
        }
        convex_hull(self.vertices.iter().map(|v| v + a))
    }

    /// Lattice-normalized volume: sum of `|det|` over a placing triangulation
    /// in lattice coordinates of the affine hull. Equals `rho!` times the
    /// euclidean volume for full-dimensional polytopes; a point has volume 1.
    pub fn normalized_volume(&self) -> BigInt {
        self.normalized_volume.clone()
    }

    /// `normalized_volume / rho!`: the volume in the induced lattice with unit
    /// cube covolume.
    pub fn euclidean_volume(&self) -> BigRational {
        let fact: BigInt = (1..=self.dim() as u64).map(BigInt::from).product();
        BigRational::new(self.normalized_volume(), fact)
    }

    /// Minkowski sum, computed as the hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &LatticePolytope) -> Result<LatticePolytope, GeometryError> {
        if other.ambient_dim != self.ambient_dim {
            return Err(GeometryError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        convex_hull(
            self.vertices
                .iter()
                .flat_map(|a| other.vertices.iter().map(move |b| a + b)),
        )
    }

    /// Placing triangulation of the vertices (lexicographic insertion).
    pub fn triangulation(&self) -> SimplexSubdivision {
        let local: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| self.frame.coords(v).unwrap())
            .collect();
        let tri = placing_triangulation(&local, self.dim());
        SimplexSubdivision {
            simplices: tri
                .simplices
                .iter()
                .map(|s| s.iter().map(|&i| self.vertices[i].clone()).collect())
                .collect(),
        }
    }
}

/// Standard simplex `conv{0, e_1, ..., e_n}` scaled by `d`.
pub fn scaled_simplex(n: usize, d: i64) -> LatticePolytope {
    let mut pts = vec![ExponentVector::zero(n)];
    pts.extend((0..n).map(|i| ExponentVector::unit(n, i).scale(d)));
    convex_hull(pts).unwrap()
}

/// The prism `{x >= 0, x_1 + ... + x_{n-1} <= 1, x_n <= d}`.
pub fn prism_pd(n: usize, d: i64) -> LatticePolytope {
    assert!(n >= 1);
    let mut pts = Vec::new();
    for h in [0, d] {
        let mut base = ExponentVector::zero(n).into_coords();
        base[n - 1] = h;
        pts.push(ExponentVector::new(base.clone()));
        for i in 0..n - 1 {
            let mut v = base.clone();
            v[i] = 1;
            pts.push(ExponentVector::new(v));
        }
    }
    convex_hull(pts).unwrap()
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k as u64).map(BigInt::from).fold(BigInt::one(), |a, b| a * b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn hull(pts: &[&[i64]]) -> LatticePolytope {
        convex_hull(pts.iter().map(|p| ev(p))).unwrap()
    }

    /// Extreme-point oracle in the plane: a point is a vertex iff it is not in
    /// the closed hull of the remaining points, tested via all triangles and
    /// segments.
    fn brute_vertices_2d(pts: &[[i64; 2]]) -> Vec<[i64; 2]> {
        let cross = |o: [i64; 2], a: [i64; 2], b: [i64; 2]| {
            (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
        };
        let in_tri = |p: [i64; 2], a, b, c| {
            let (d1, d2, d3) = (cross(a, b, p), cross(b, c, p), cross(c, a, p));
            let neg = d1 < 0 || d2 < 0 || d3 < 0;
            let pos = d1 > 0 || d2 > 0 || d3 > 0;
            !(neg && pos)
        };
        let on_seg = |p: [i64; 2], a: [i64; 2], b: [i64; 2]| {
            cross(a, b, p) == 0
                && p[0] >= a[0].min(b[0])
                && p[0] <= a[0].max(b[0])
                && p[1] >= a[1].min(b[1])
                && p[1] <= a[1].max(b[1])
        };
        let mut uniq: Vec<[i64; 2]> = pts.to_vec();
        uniq.sort();
        uniq.dedup();
        let mut out = Vec::new();
        for (i, &p) in uniq.iter().enumerate() {
            let others: Vec<[i64; 2]> = uniq
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &q)| q)
                .collect();
            let mut covered = false;
            for a in 0..others.len() {
                for b in a..others.len() {
                    if on_seg(p, others[a], others[b]) {
                        covered = true;
                    }
                    for c in b + 1..others.len() {
                        if cross(others[a], others[b], others[c]) != 0
                            && in_tri(p, others[a], others[b], others[c])
                        {
                            covered = true;
                        }
                    }
                }
            }
            if !covered {
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn hull_of_single_point() {
        let p = hull(&[&[0, 0]]);
        assert_eq!(p.vertices(), &[ev(&[0, 0])]);
        assert_eq!(p.dim(), 0);
        assert!(p.hull_lattice_basis().is_empty());
        assert_eq!(p.lattice_points(), vec![ev(&[0, 0])]);
        assert_eq!(p.normalized_volume(), BigInt::from(1));
    }

    #[test]
    fn hull_with_duplicates() {
        let p = hull(&[&[0, 0], &[1, 0], &[0, 1], &[0, 0]]);
        assert_eq!(p.vertices(), &[ev(&[0, 0]), ev(&[0, 1]), ev(&[1, 0])]);
        assert_eq!(p.dim(), 2);
    }

    #[test]
    fn hull_drops_interior_and_edge_points() {
        let raw = [[0, 0], [2, 0], [1, 0], [0, 2], [1, 1]];
        let p = convex_hull(raw.iter().map(|p| ev(p))).unwrap();
        let expected: Vec<ExponentVector> = brute_vertices_2d(&raw).iter().map(|p| ev(p)).collect();
        assert_eq!(p.vertices(), expected.as_slice());
        assert_eq!(p.vertices(), &[ev(&[0, 0]), ev(&[0, 2]), ev(&[2, 0])]);
        assert_eq!(p.dim(), 2);
    }

    #[test]
    fn empty_input_is_an_error() {
        assert_eq!(
            convex_hull(Vec::<ExponentVector>::new()).unwrap_err(),
            GeometryError::EmptyPointSet
        );
        assert!(matches!(
            convex_hull(vec![ev(&[0]), ev(&[0, 1])]),
            Err(GeometryError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn lower_dimensional_lattice_is_saturated() {
        // segment from 0 to (2,4): induced lattice generated by (1,2)
        let p = hull(&[&[0, 0], &[2, 4]]);
        assert_eq!(p.dim(), 1);
        assert_eq!(p.hull_lattice_basis(), vec![ev(&[1, 2])]);
        assert_eq!(p.normalized_volume(), BigInt::from(2));
        assert_eq!(p.lattice_points(), vec![ev(&[0, 0]), ev(&[1, 2]), ev(&[2, 4])]);
        // triangle in a plane of Z^3
        let t = hull(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(t.dim(), 2);
        assert_eq!(t.normalized_volume(), BigInt::from(1));
        assert_eq!(t.lattice_points().len(), 3);
    }

    #[test]
    fn lattice_point_counts() {
        // d * simplex_n has C(n+d, n) points
        let binom = |a: u64, b: u64| (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1));
        for n in 1..=3usize {
            for d in 0..=4i64 {
                let p = scaled_simplex(n, d);
                assert_eq!(p.lattice_points().len() as u64, binom(n as u64 + d as u64, n as u64));
            }
        }
        for d in 1..=5 {
            assert_eq!(prism_pd(2, d).lattice_points().len() as i64, 2 * (d + 1));
        }
    }

    #[test]
    fn dilate_and_translate() {
        let s = scaled_simplex(2, 1);
        assert_eq!(s.dilate(3).vertices(), &[ev(&[0, 0]), ev(&[0, 3]), ev(&[3, 0])]);
        assert_eq!(s.dilate(1), s);
        assert_eq!(hull(&[&[1, 1]]).dilate(5).vertices(), &[ev(&[5, 5])]);
        assert_eq!(s.dilate(0).vertices(), &[ev(&[0, 0])]);
        let t = s.translate(&ev(&[-1, 0])).unwrap();
        assert_eq!(t.vertices(), &[ev(&[-1, 0]), ev(&[-1, 1]), ev(&[0, 0])]);
        assert_eq!(s.translate(&ev(&[0, 0])).unwrap(), s);
        assert_eq!(t.translate(&ev(&[1, 0])).unwrap(), s);
        assert!(s.translate(&ev(&[1])).is_err());
    }

    #[test]
    fn volumes_of_standard_shapes() {
        assert_eq!(scaled_simplex(3, 1).normalized_volume(), BigInt::from(1));
        assert_eq!(scaled_simplex(3, 2).normalized_volume(), BigInt::from(8));
        assert_eq!(scaled_simplex(2, 2).normalized_volume(), BigInt::from(4));
        // unit square: two unimodular triangles
        assert_eq!(hull(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).normalized_volume(), BigInt::from(2));
        // P_d for n = 3, d = 2: euclidean 2/2! = 1, normalized 3! * 1 = 6
        assert_eq!(prism_pd(3, 2).normalized_volume(), BigInt::from(6));
        assert_eq!(prism_pd(3, 2).euclidean_volume(), BigRational::from_integer(1.into()));
    }

    #[test]
    fn contains_respects_affine_hull() {
        let seg = hull(&[&[0, 0], &[2, 2]]);
        assert!(seg.contains(&ev(&[1, 1])));
        assert!(!seg.contains(&ev(&[1, 0])));
        assert!(!seg.contains(&ev(&[3, 3])));
    }

    #[test]
    fn triangulation_volume_matches() {
        let p = hull(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[2, 2, 2]]);
        let tri = p.triangulation();
        let total: BigInt = tri
            .simplices
            .iter()
            .map(|s| convex_hull(s.clone()).unwrap().normalized_volume())
            .sum();
        assert_eq!(total, p.normalized_volume());
    }
}
