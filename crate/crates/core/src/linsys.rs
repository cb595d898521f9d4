//! Exact sparse linear systems over the rationals.
//!
//! Rows are cleared to integers and inserted one by one into a fraction-free
//! row echelon form. Columns are relabelled by ascending column count before
//! elimination, and the pivot of a row is its lowest relabelled column, which
//! keeps fill-in low on the very sparse systems coming from certificate
//! search. An optional pass modulo a 61-bit prime tries to reconstruct a
//! solution cheaply; whatever it produces is checked exactly, and every
//! inconsistency verdict comes from the exact pass.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// `A x = b` with `A` given row by row as `(column, value)` pairs.
#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    ncols: usize,
    rows: Vec<Vec<(usize, BigRational)>>,
    rhs: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearOutcome {
    Solution(Vec<BigRational>),
    Inconsistent,
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub modular_precheck: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            modular_precheck: true,
        }
    }
}

impl SparseSystem {
    pub fn new(ncols: usize) -> Self {
        SparseSystem {
            ncols,
            ..Default::default()
        }
    }

    /// Append a row; repeated columns are summed and zeros dropped.
    pub fn push_row(&mut self, entries: Vec<(usize, BigRational)>, rhs: BigRational) {
        let mut acc: HashMap<usize, BigRational> = HashMap::new();
        for (c, v) in entries {
            assert!(c < self.ncols, "column {c} out of range");
            *acc.entry(c).or_insert_with(BigRational::zero) += v;
        }
        let mut row: Vec<(usize, BigRational)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        row.sort_by_key(|e| e.0);
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Whether `x` satisfies every equation exactly.
    pub fn check(&self, x: &[BigRational]) -> bool {
        x.len() == self.ncols
            && self.rows.iter().zip(&self.rhs).all(|(row, b)| {
                let lhs: BigRational = row.iter().map(|(c, v)| v * &x[*c]).sum();
                lhs == *b
            })
    }

    pub fn solve(&self, opts: SolveOptions) -> LinearOutcome {
        let (order, rows) = self.integer_rows();
        if opts.modular_precheck {
            if let Some(x) = modular_attempt(&rows, order.len()) {
                let x = unpermute(&order, x);
                if self.check(&x) {
                    return LinearOutcome::Solution(x);
                }
            }
        }
        match exact_solve(&rows, order.len()) {
            Some(x) => LinearOutcome::Solution(unpermute(&order, x)),
            None => LinearOutcome::Inconsistent,
        }
    }

    /// Rows over `Z` in relabelled columns; the right-hand side sits in the
    /// extra column `ncols`. Returns the relabelling (new index -> old).
    fn integer_rows(&self) -> (Vec<usize>, Vec<Vec<(usize, BigInt)>>) {
        let mut count = vec![0usize; self.ncols];
        for row in &self.rows {
            for (c, _) in row {
                count[*c] += 1;
            }
        }
        let mut order: Vec<usize> = (0..self.ncols).collect();
        order.sort_by_key(|&c| (count[c], c));
        let mut relabel = vec![0usize; self.ncols];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
        }
        let mut rows: Vec<Vec<(usize, BigInt)>> = self
            .rows
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                let mut denom = b.denom().clone();
                for (_, v) in row {
                    denom = denom.lcm(v.denom());
                }
                let scale = |v: &BigRational| (v * &denom).to_integer();
                let mut r: Vec<(usize, BigInt)> = row.iter().map(|(c, v)| (relabel[*c], scale(v))).collect();
                if !b.is_zero() {
                    r.push((self.ncols, scale(b)));
                }
                r.sort_by_key(|e| e.0);
                r
            })
            .filter(|r| !r.is_empty())
            .collect();
        rows.sort_by_key(Vec::len);
        (order, rows)
    }
}

fn unpermute(order: &[usize], x: Vec<BigRational>) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); order.len()];
    for (new, v) in x.into_iter().enumerate() {
        out[order[new]] = v;
    }
    out
}

fn content(row: &[(usize, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, v) in row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

/// `a * r - b * p` for sparse rows sorted by column.
fn combine(r: &[(usize, BigInt)], a: &BigInt, p: &[(usize, BigInt)], b: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, a * &r[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(b * &p[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, a * &r[i - 1].1 - b * &p[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

/// Fraction-free echelon insertion; `None` if some row reduces to `0 = c`.
fn exact_solve(rows: &[Vec<(usize, BigInt)>], ncols: usize) -> Option<Vec<BigRational>> {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    for row in rows {
        let mut r = row.clone();
        while let Some(&(lead, _)) = r.first() {
            if lead == ncols {
                return None;
            }
            match pivots.get(&lead) {
                Some(p) => {
                    let g = p[0].1.gcd(&r[0].1);
                    let a = &p[0].1 / &g;
                    let b = &r[0].1 / &g;
                    r = combine(&r, &a, p, &b);
                    let c = content(&r);
                    if !c.is_zero() && !c.is_one() {
                        for e in &mut r {
                            e.1 /= &c;
                        }
                    }
                }
                None => {
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    let mut cols: Vec<usize> = pivots.keys().copied().collect();
    cols.sort_unstable_by(|a, b| b.cmp(a));
    let mut x = vec![BigRational::zero(); ncols];
    for c in cols {
        let p = &pivots[&c];
        let mut acc = BigRational::zero();
        for (j, v) in &p[1..] {
            if *j == ncols {
                acc += BigRational::from_integer(v.clone());
            } else if !x[*j].is_zero() {
                acc -= &x[*j] * v;
            }
        }
        x[c] = acc / BigRational::from_integer(p[0].1.clone());
    }
    Some(x)
}

const PRIME: u64 = 2_305_843_009_213_693_951; // 2^61 - 1

fn mulm(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powm(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a);
        }
        a = mulm(a, a);
        e >>= 1;
    }
    r
}

fn invm(a: u64) -> u64 {
    powm(a, PRIME - 2)
}

fn reduce(v: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    v.mod_floor(&p).to_u64().unwrap()
}

/// Rational `n/d` with `|n|, d <= sqrt(p/2)` congruent to `a`.
fn rational_reconstruction(a: u64) -> Option<BigRational> {
    let bound: i128 = ((PRIME / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (PRIME as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let r = BigRational::new(BigInt::from(r1), BigInt::from(t1));
    if reduce(&BigInt::from(t1)) == 0 {
        return None;
    }
    Some(r)
}

/// Reduced echelon form modulo the prime; `None` if inconsistent there or
/// if some value does not reconstruct.
fn modular_attempt(rows: &[Vec<(usize, BigInt)>], ncols: usize) -> Option<Vec<BigRational>> {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for row in rows {
        let mut r: Vec<(usize, u64)> = row
            .iter()
            .map(|(c, v)| (*c, reduce(v)))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(lead, lv)) = r.first() {
            if lead == ncols {
                return None;
            }
            match pivots.get(&lead) {
                Some(p) => {
                    // pivot rows are monic
                    let mut merged: Vec<(usize, u64)> = Vec::with_capacity(r.len() + p.len());
                    let (mut i, mut j) = (0, 0);
                    while i < r.len() || j < p.len() {
                        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
                        let cj = p.get(j).map_or(usize::MAX, |e| e.0);
                        let (c, v) = if ci < cj {
                            i += 1;
                            (ci, r[i - 1].1)
                        } else if cj < ci {
                            j += 1;
                            (cj, PRIME - mulm(lv, p[j - 1].1))
                        } else {
                            i += 1;
                            j += 1;
                            (ci, (r[i - 1].1 + PRIME - mulm(lv, p[j - 1].1)) % PRIME)
                        };
                        if v != 0 {
                            merged.push((c, v));
                        }
                    }
                    r = merged;
                }
                None => {
                    let inv = invm(lv);
                    for e in &mut r {
                        e.1 = mulm(e.1, inv);
                    }
                    pivots.insert(lead, r);
                    break;
                }
            }
        }
    }
    let mut cols: Vec<usize> = pivots.keys().copied().collect();
    cols.sort_unstable_by(|a, b| b.cmp(a));
    let mut x = vec![0u64; ncols];
    for c in cols {
        let p = &pivots[&c];
        let mut acc = 0u64;
        for (j, v) in &p[1..] {
            if *j == ncols {
                acc = (acc + v) % PRIME;
            } else if x[*j] != 0 {
                acc = (acc + PRIME - mulm(x[*j], *v)) % PRIME;
            }
        }
        x[c] = acc;
    }
    x.into_iter()
        .map(|v| if v == 0 { Some(BigRational::zero()) } else { rational_reconstruction(v) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_consistent() {
        // x + y = 3, x - y = 1
        let mut s = SparseSystem::new(2);
        s.push_row(vec![(0, q(1, 1)), (1, q(1, 1))], q(3, 1));
        s.push_row(vec![(0, q(1, 1)), (1, q(-1, 1))], q(1, 1));
        for pre in [false, true] {
            assert_eq!(
                s.solve(SolveOptions { modular_precheck: pre }),
                LinearOutcome::Solution(vec![q(2, 1), q(1, 1)])
            );
        }
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let mut s = SparseSystem::new(3);
        s.push_row(vec![(0, q(2, 1)), (2, q(4, 1))], q(1, 1));
        s.push_row(vec![(0, q(1, 1)), (2, q(2, 1))], q(1, 1));
        assert_eq!(s.solve(SolveOptions::default()), LinearOutcome::Inconsistent);

        let mut s = SparseSystem::new(3);
        s.push_row(vec![(0, q(1, 3)), (1, q(1, 1)), (2, q(1, 1))], q(1, 2));
        match s.solve(SolveOptions::default()) {
            LinearOutcome::Solution(x) => assert!(s.check(&x)),
            _ => panic!(),
        }
    }

    #[test]
    fn empty_rows() {
        let mut s = SparseSystem::new(1);
        s.push_row(vec![], q(0, 1));
        assert_eq!(s.solve(SolveOptions::default()), LinearOutcome::Solution(vec![q(0, 1)]));
        s.push_row(vec![(0, q(1, 1)), (0, q(-1, 1))], q(5, 1));
        assert_eq!(s.solve(SolveOptions::default()), LinearOutcome::Inconsistent);
    }

    #[test]
    fn large_coefficients_fall_back() {
        let big = BigInt::from(10).pow(40);
        let mut s = SparseSystem::new(1);
        s.push_row(vec![(0, BigRational::from_integer(big.clone()))], q(1, 1));
        let x = match s.solve(SolveOptions::default()) {
            LinearOutcome::Solution(x) => x,
            _ => panic!(),
        };
        assert_eq!(x[0], BigRational::new(1.into(), big));
    }

    #[test]
    fn reconstruction() {
        for (n, d) in [(1, 3), (-7, 5), (123_456, 789), (0, 1)] {
            let v = q(n, d);
            let a = mulm(reduce(v.numer()), invm(reduce(v.denom())));
            if n == 0 {
                continue;
            }
            assert_eq!(rational_reconstruction(a), Some(v));
        }
    }

    /// Dense Gauss-Jordan over the rationals as an independent oracle.
    fn dense_consistent(a: &[Vec<i64>], b: &[i64]) -> bool {
        let n = a.first().map_or(0, Vec::len);
        let mut m: Vec<Vec<BigRational>> = a
            .iter()
            .zip(b)
            .map(|(r, &bi)| r.iter().chain([bi].iter()).map(|&v| q(v, 1)).collect())
            .collect();
        let mut row = 0;
        for c in 0..=n {
            let Some(p) = (row..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            if c == n {
                return false;
            }
            m.swap(row, p);
            for i in 0..m.len() {
                if i != row && !m[i][c].is_zero() {
                    let f = &m[i][c] / &m[row][c];
                    for k in 0..=n {
                        let t = &f * &m[row][k];
                        m[i][k] -= t;
                    }
                }
            }
            row += 1;
        }
        true
    }

    proptest! {
        #[test]
        fn agrees_with_dense_oracle(
            a in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 1..6),
            b in prop::collection::vec(-2i64..=2, 6),
            pre in any::<bool>(),
        ) {
            let b = &b[..a.len()];
            let mut s = SparseSystem::new(4);
            for (r, &bi) in a.iter().zip(b) {
                s.push_row(r.iter().enumerate().map(|(c, &v)| (c, q(v, 1))).collect(), q(bi, 1));
            }
            match s.solve(SolveOptions { modular_precheck: pre }) {
                LinearOutcome::Solution(x) => {
                    prop_assert!(s.check(&x));
                    prop_assert!(dense_consistent(&a, b));
                }
                LinearOutcome::Inconsistent => prop_assert!(!dense_consistent(&a, b)),
            }
        }
    }
}
