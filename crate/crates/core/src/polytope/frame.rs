//! Affine lattice frames and the placing triangulation.
//!
//! A frame identifies the affine hull of a point set with `Z^rho` through a
//! basis of the saturated lattice `span(A - a0) ∩ Z^n`. All polyhedral work
//! (facets, triangulations, volumes) happens in those coordinates, which
//! makes lower-dimensional polytopes full-dimensional.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exponent::ExponentVector;
use crate::intmat;

#[derive(Clone, Debug)]
pub(crate) struct AffineFrame {
    pub origin: ExponentVector,
    /// Row HNF basis of the saturated lattice, `dim` rows of length `n`.
    pub basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    /// Integer equations cutting out the linear span.
    equations: Vec<Vec<BigInt>>,
}

impl AffineFrame {
    /// Frame of the affine hull of `points` with the given base point.
    pub fn new(origin: &ExponentVector, points: &[ExponentVector]) -> Self {
        let n = origin.len();
        let diffs: Vec<Vec<BigInt>> = points
            .iter()
            .map(|p| intmat::to_big((p - origin).coords()))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let equations = intmat::integer_kernel(&diffs, n);
        let saturated = intmat::integer_kernel(&equations, n);
        let basis = intmat::hermite_normal_form(&saturated, n);
        let pivots = basis
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        AffineFrame {
            origin: origin.clone(),
            basis,
            pivots,
            equations,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Lattice coordinates of `p`, or `None` when `p` is off the affine hull.
    pub fn coords(&self, p: &ExponentVector) -> Option<Vec<i64>> {
        let mut r = intmat::to_big((p - &self.origin).coords());
        for eq in &self.equations {
            let s: BigInt = eq.iter().zip(&r).map(|(a, b)| a * b).sum();
            if !s.is_zero() {
                return None;
            }
        }
        let mut y = Vec::with_capacity(self.dim());
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            let (q, rem) = r[c].div_rem(&row[c]);
            if !rem.is_zero() {
                return None;
            }
            for (ri, bi) in r.iter_mut().zip(row) {
                *ri -= &q * bi;
            }
            y.push(q.to_i64().expect("lattice coordinate overflow"));
        }
        debug_assert!(r.iter().all(Zero::is_zero));
        Some(y)
    }

    pub fn lift(&self, y: &[i64]) -> ExponentVector {
        let mut x: Vec<BigInt> = intmat::to_big(self.origin.coords());
        for (yi, row) in y.iter().zip(&self.basis) {
            if *yi == 0 {
                continue;
            }
            let yb = BigInt::from(*yi);
            for (xi, bi) in x.iter_mut().zip(row) {
                *xi += &yb * bi;
            }
        }
        ExponentVector::new(
            x.iter()
                .map(|v| v.to_i64().expect("lattice point overflow"))
                .collect(),
        )
    }

    pub fn basis_vectors(&self) -> Vec<ExponentVector> {
        self.basis
            .iter()
            .map(|r| ExponentVector::new(r.iter().map(|v| v.to_i64().unwrap()).collect()))
            .collect()
    }
}

/// `normal · x <= offset` on the polytope.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Halfspace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Halfspace {
    pub fn eval(&self, x: &[i64]) -> i128 {
        self.normal
            .iter()
            .zip(x)
            .map(|(&a, &b)| a as i128 * b as i128)
            .sum()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.eval(x) <= self.offset as i128
    }

    pub fn is_tight(&self, x: &[i64]) -> bool {
        self.eval(x) == self.offset as i128
    }

    fn primitive(mut self) -> Self {
        let g = self
            .normal
            .iter()
            .fold(self.offset.unsigned_abs(), |g, &c| g.gcd(&c.unsigned_abs()));
        if g > 1 {
            let g = g as i64;
            self.normal.iter_mut().for_each(|c| *c /= g);
            self.offset /= g;
        }
        self
    }
}

/// Signed `rho x rho` determinant of the edge matrix of a simplex.
pub(crate) fn simplex_det(pts: &[&[i64]]) -> BigInt {
    let base = pts[0];
    let m: Vec<Vec<BigInt>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| BigInt::from(a - b)).collect())
        .collect();
    intmat::determinant(&m)
}

/// Affine rank of a point set in `Z^k`.
pub(crate) fn affine_rank(pts: &[&[i64]]) -> usize {
    if pts.is_empty() {
        return 0;
    }
    let k = pts[0].len();
    let m: Vec<Vec<BigInt>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(pts[0]).map(|(a, b)| BigInt::from(a - b)).collect())
        .collect();
    intmat::rank(&m, k)
}

/// Hyperplane through `rho` affinely independent points of `Z^rho`, oriented
/// so that `inside_sum / inside_den` satisfies the strict inequality.
fn hyperplane(pts: &[&[i64]], inside_sum: &[i64], inside_den: i64) -> Halfspace {
    let rho = inside_sum.len();
    let base = pts[0];
    let rows: Vec<Vec<BigInt>> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| BigInt::from(a - b)).collect())
        .collect();
    let mut normal = Vec::with_capacity(rho);
    for k in 0..rho {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut d = intmat::determinant(&minor);
        if k % 2 == 1 {
            d = -d;
        }
        normal.push(d.to_i64().expect("facet normal overflow"));
    }
    let mut h = Halfspace {
        offset: normal.iter().zip(base).map(|(a, b)| a * b).sum(),
        normal,
    };
    let lhs = h.eval(inside_sum);
    let rhs = h.offset as i128 * inside_den as i128;
    debug_assert_ne!(lhs, rhs, "reference point on facet hyperplane");
    if lhs > rhs {
        h.normal.iter_mut().for_each(|c| *c = -*c);
        h.offset = -h.offset;
    }
    h.primitive()
}

/// Placing triangulation of a full-dimensional point set in `Z^rho`.
pub(crate) struct Triangulation {
    pub simplices: Vec<Vec<usize>>,
    /// Distinct facet hyperplanes of the hull.
    pub facets: Vec<Halfspace>,
    /// Indices of the hull vertices.
    pub vertices: Vec<usize>,
    pub volume: BigInt,
}

struct BoundaryFacet {
    verts: Vec<usize>,
    plane: Halfspace,
}

/// Triangulate `pts` (already in lattice coordinates of their affine hull, so
/// of full dimension `rho`) by inserting points in the given order.
pub(crate) fn placing_triangulation(pts: &[Vec<i64>], rho: usize) -> Triangulation {
    if rho == 0 {
        return Triangulation {
            simplices: vec![vec![0]],
            facets: Vec::new(),
            vertices: vec![0],
            volume: BigInt::from(1),
        };
    }
    // initial simplex: greedy in insertion order
    let mut init: Vec<usize> = vec![0];
    for i in 1..pts.len() {
        if init.len() == rho + 1 {
            break;
        }
        let mut cand: Vec<&[i64]> = init.iter().map(|&j| pts[j].as_slice()).collect();
        cand.push(&pts[i]);
        if affine_rank(&cand) == cand.len() - 1 {
            init.push(i);
        }
    }
    assert_eq!(init.len(), rho + 1, "point set is not full-dimensional");
    let mut inside_sum = vec![0i64; rho];
    for &i in &init {
        for (s, c) in inside_sum.iter_mut().zip(&pts[i]) {
            *s += c;
        }
    }
    let inside_den = (rho + 1) as i64;
    let plane_of = |verts: &[usize]| {
        let p: Vec<&[i64]> = verts.iter().map(|&j| pts[j].as_slice()).collect();
        hyperplane(&p, &inside_sum, inside_den)
    };

    let mut simplices = vec![init.clone()];
    let mut boundary: Vec<BoundaryFacet> = (0..=rho)
        .map(|skip| {
            let verts: Vec<usize> = init
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &v)| v)
                .collect();
            let plane = plane_of(&verts);
            BoundaryFacet { verts, plane }
        })
        .collect();

    for (p_idx, p) in pts.iter().enumerate() {
        if init.contains(&p_idx) {
            continue;
        }
        let (visible, hidden): (Vec<BoundaryFacet>, Vec<BoundaryFacet>) = boundary
            .into_iter()
            .partition(|f| f.plane.eval(p) > f.plane.offset as i128);
        boundary = hidden;
        if visible.is_empty() {
            continue;
        }
        let mut ridges: std::collections::HashMap<Vec<usize>, usize> = Default::default();
        for f in &visible {
            let mut s = f.verts.clone();
            s.push(p_idx);
            s.sort_unstable();
            simplices.push(s);
            for skip in 0..f.verts.len() {
                let ridge: Vec<usize> = f
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                *ridges.entry(ridge).or_default() += 1;
            }
        }
        let mut horizon: Vec<Vec<usize>> = ridges
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect();
        horizon.sort();
        for mut verts in horizon {
            verts.push(p_idx);
            verts.sort_unstable();
            let plane = plane_of(&verts);
            boundary.push(BoundaryFacet { verts, plane });
        }
    }

    let mut volume = BigInt::zero();
    for s in &simplices {
        let p: Vec<&[i64]> = s.iter().map(|&j| pts[j].as_slice()).collect();
        volume += simplex_det(&p).abs();
    }

    let mut facets: Vec<Halfspace> = boundary.iter().map(|f| f.plane.clone()).collect();
    facets.sort_by(|a, b| (&a.normal, a.offset).cmp(&(&b.normal, b.offset)));
    facets.dedup();

    let mut candidates: Vec<usize> = boundary.iter().flat_map(|f| f.verts.iter().copied()).collect();
    candidates.sort_unstable();
    candidates.dedup();
    let vertices = candidates
        .into_iter()
        .filter(|&i| {
            let tight: Vec<Vec<BigInt>> = facets
                .iter()
                .filter(|h| h.is_tight(&pts[i]))
                .map(|h| intmat::to_big(&h.normal))
                .collect();
            intmat::rank(&tight, rho) == rho
        })
        .collect();

    Triangulation {
        simplices,
        facets,
        vertices,
        volume,
    }
}
