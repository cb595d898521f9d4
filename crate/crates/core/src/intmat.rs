//! Integer matrix routines: column echelon form with unimodular transform,
//! Hermite normal form, integer kernels and integer linear solving.
//!
//! Matrices are small (dimension of a polytope, a few dozen generators), so
//! everything is done with `BigInt` and no attempt at clever pivoting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Result of reducing `M` (rows x cols) by unimodular column operations:
/// `M * U = H`, where `H` is lower-trapezoidal with its first `rank` columns
/// carrying strictly increasing pivot rows and the remaining columns zero.
pub(crate) struct ColumnEchelon {
    /// Column-major `H`.
    pub h_cols: Vec<Vec<BigInt>>,
    /// Column-major unimodular `U`.
    pub u_cols: Vec<Vec<BigInt>>,
    /// Row index of the pivot of column `k`, for `k < rank`.
    pub pivot_rows: Vec<usize>,
}

impl ColumnEchelon {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }
}

fn col_axpy(target: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    // target -= q * src
    for (t, s) in target.iter_mut().zip(src) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

pub(crate) fn column_echelon(m: &[Vec<BigInt>], ncols: usize) -> ColumnEchelon {
    let nrows = m.len();
    let mut h_cols: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect();
    let mut u_cols: Vec<Vec<BigInt>> = (0..ncols)
        .map(|j| {
            let mut c = vec![BigInt::zero(); ncols];
            c[j] = BigInt::one();
            c
        })
        .collect();
    let mut pivot_rows = Vec::new();
    let mut k = 0;
    for i in 0..nrows {
        if k == ncols {
            break;
        }
        loop {
            // smallest nonzero magnitude among columns k.. in row i
            let best = (k..ncols)
                .filter(|&j| !h_cols[j][i].is_zero())
                .min_by(|&a, &b| h_cols[a][i].abs().cmp(&h_cols[b][i].abs()));
            let Some(best) = best else { break };
            h_cols.swap(k, best);
            u_cols.swap(k, best);
            let mut done = true;
            for j in (k + 1)..ncols {
                if h_cols[j][i].is_zero() {
                    continue;
                }
                let q = h_cols[j][i].div_floor(&h_cols[k][i]);
                let (lo, hi) = h_cols.split_at_mut(j);
                col_axpy(&mut hi[0], &q, &lo[k]);
                let (lo, hi) = u_cols.split_at_mut(j);
                col_axpy(&mut hi[0], &q, &lo[k]);
                if !h_cols[j][i].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !h_cols[k][i].is_zero() {
            if h_cols[k][i].is_negative() {
                for x in h_cols[k].iter_mut() {
                    *x = -&*x;
                }
                for x in u_cols[k].iter_mut() {
                    *x = -&*x;
                }
            }
            pivot_rows.push(i);
            k += 1;
        }
    }
    ColumnEchelon {
        h_cols,
        u_cols,
        pivot_rows,
    }
}

/// Basis (as row vectors) of `{x in Z^ncols : M x = 0}`. The basis spans the
/// full integer kernel, not just a finite-index sublattice.
pub(crate) fn integer_kernel(m: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let ech = column_echelon(m, ncols);
    ech.u_cols[ech.rank()..].to_vec()
}

/// Some integer solution of `M x = b`, if one exists.
pub(crate) fn solve_integer(m: &[Vec<BigInt>], ncols: usize, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let ech = column_echelon(m, ncols);
    let rank = ech.rank();
    let mut y = vec![BigInt::zero(); ncols];
    let mut next = 0;
    for (i, bi) in b.iter().enumerate() {
        let mut acc = bi.clone();
        let upto = if next < rank && ech.pivot_rows[next] == i {
            next + 1
        } else {
            next
        };
        for k in 0..next {
            acc -= &ech.h_cols[k][i] * &y[k];
        }
        if upto > next {
            let piv = &ech.h_cols[next][i];
            let (q, r) = acc.div_rem(piv);
            if !r.is_zero() {
                return None;
            }
            y[next] = q;
            next = upto;
        } else if !acc.is_zero() {
            return None;
        }
    }
    let mut x = vec![BigInt::zero(); ncols];
    for (k, yk) in y.iter().enumerate().take(rank) {
        if yk.is_zero() {
            continue;
        }
        for (xi, u) in x.iter_mut().zip(&ech.u_cols[k]) {
            *xi += yk * u;
        }
    }
    Some(x)
}

/// Row Hermite normal form of the lattice spanned by `rows`; zero rows are
/// dropped. Pivots are positive and entries above a pivot lie in `[0, pivot)`.
pub(crate) fn hermite_normal_form(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut work: Vec<Vec<BigInt>> = rows.to_vec();
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for c in 0..ncols {
        loop {
            let best = work
                .iter()
                .enumerate()
                .filter(|(_, r)| !r[c].is_zero())
                .min_by(|a, b| a.1[c].abs().cmp(&b.1[c].abs()))
                .map(|(i, _)| i);
            let Some(best) = best else { break };
            let piv = work.swap_remove(best);
            let mut done = true;
            for r in work.iter_mut() {
                if r[c].is_zero() {
                    continue;
                }
                let q = r[c].div_floor(&piv[c]);
                col_axpy(r, &q, &piv);
                if !r[c].is_zero() {
                    done = false;
                }
            }
            work.push(piv);
            if done {
                let idx = work.iter().position(|r| !r[c].is_zero()).unwrap();
                let mut piv = work.swap_remove(idx);
                if piv[c].is_negative() {
                    for x in piv.iter_mut() {
                        *x = -&*x;
                    }
                }
                out.push(piv);
                break;
            }
        }
        work.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    // reduce entries above pivots
    let pivots: Vec<usize> = out
        .iter()
        .map(|r| r.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    for k in 0..out.len() {
        let c = pivots[k];
        let piv = out[k].clone();
        for r in out.iter_mut().take(k) {
            let q = r[c].div_floor(&piv[c]);
            if !q.is_zero() {
                col_axpy(r, &q, &piv);
            }
        }
    }
    out
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
pub(crate) fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank over the rationals.
pub(crate) fn rank(m: &[Vec<BigInt>], ncols: usize) -> usize {
    column_echelon(m, ncols).rank()
}

pub(crate) fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| to_big(r)).collect()
    }

    fn mat_vec(m: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
        m.iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    #[test]
    fn kernel_is_saturated() {
        // x + 2y + 3z = 0 has kernel basis of determinant-one completion
        let m = big(&[&[2, 4, 6]]);
        let k = integer_kernel(&m, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&m, v).iter().all(Zero::is_zero));
        }
        // (1,1,-1) is in the kernel and must be an integer combination
        let basis_t: Vec<Vec<BigInt>> = (0..3).map(|i| k.iter().map(|v| v[i].clone()).collect()).collect();
        assert!(solve_integer(&basis_t, 2, &to_big(&[1, 1, -1])).is_some());
    }

    #[test]
    fn solve_detects_non_integral() {
        let m = big(&[&[2, 0], &[0, 2]]);
        assert!(solve_integer(&m, 2, &to_big(&[1, 0])).is_none());
        assert_eq!(solve_integer(&m, 2, &to_big(&[4, -2])).unwrap(), to_big(&[2, -1]));
        // inconsistent rows
        let m = big(&[&[1, 1], &[2, 2]]);
        assert!(solve_integer(&m, 2, &to_big(&[1, 3])).is_none());
        let x = solve_integer(&m, 2, &to_big(&[1, 2])).unwrap();
        assert_eq!(mat_vec(&m, &x), to_big(&[1, 2]));
    }

    #[test]
    fn hnf_canonical() {
        let a = hermite_normal_form(&big(&[&[2, 0], &[0, 2], &[1, 1]]), 2);
        assert_eq!(a, big(&[&[1, 1], &[0, 2]]));
        let b = hermite_normal_form(&big(&[&[1, 1], &[2, 0]]), 2);
        assert_eq!(a, b);
        assert!(hermite_normal_form(&big(&[&[0, 0]]), 2).is_empty());
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(determinant(&big(&[&[2, 1], &[1, 3]])), BigInt::from(5));
        assert_eq!(determinant(&big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            determinant(&big(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])),
            BigInt::from(-3)
        );
        assert_eq!(determinant(&big(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }
}
