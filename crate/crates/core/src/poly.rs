//! Sparse multivariate and Laurent polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exponent::ExponentVector;
use crate::polytope::{convex_hull, GeometryError, LatticePolytope};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("negative exponent {0} in an ordinary polynomial")]
    ExponentUnderflow(ExponentVector),
    #[error("operation requires an ordinary (non-Laurent) polynomial")]
    NotOrdinaryPolynomial,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("mixed Laurent and ordinary polynomials in one system")]
    MixedLaurent,
    #[error("empty polynomial system")]
    EmptySystem,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Finite map from exponent vectors to nonzero rationals.
///
/// With `laurent == false` every exponent is nonnegative. The zero
/// polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    laurent: bool,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            laurent: false,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(ExponentVector::zero(nvars), c);
        }
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(ExponentVector::unit(nvars, i), BigRational::one());
        p
    }

    pub fn monomial(exp: ExponentVector, coef: BigRational) -> Result<Self, PolyError> {
        Self::from_terms(exp.len(), false, [(exp, coef)])
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents are
    /// summed and zero coefficients dropped.
    pub fn from_terms<I>(nvars: usize, laurent: bool, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (ExponentVector, BigRational)>,
    {
        let mut p = Polynomial {
            nvars,
            laurent,
            terms: BTreeMap::new(),
        };
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(PolyError::ArityMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            if !laurent && !e.is_nonnegative() {
                return Err(PolyError::ExponentUnderflow(e));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(nvars: usize, terms: &[(&[i64], i64)]) -> Result<Self, PolyError> {
        Self::from_terms(
            nvars,
            false,
            terms
                .iter()
                .map(|(e, c)| (ExponentVector::new(e.to_vec()), BigRational::from_integer((*c).into()))),
        )
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    /// Same terms, with negative exponents permitted from now on.
    pub fn into_laurent(mut self) -> Self {
        self.laurent = true;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(e, c)| e.is_zero() && c.is_one())
                .unwrap()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    /// Terms in graded lexicographic order (the serialization order).
    pub fn terms_grlex(&self) -> Vec<(&ExponentVector, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp_grlex(b.0));
        v
    }

    pub fn coeff(&self, e: &ExponentVector) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Exponents with nonzero coefficient, in lexicographic order.
    pub fn support(&self) -> Vec<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    /// Largest exponent sum over the support; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(ExponentVector::total).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(ExponentVector::total);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn scalar_mul(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Polynomial {
                terms: BTreeMap::new(),
                ..self.clone()
            };
        }
        Polynomial {
            nvars: self.nvars,
            laurent: self.laurent,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiply by the monomial `x^a`.
    pub fn monomial_shift(&self, a: &ExponentVector) -> Result<Self, PolyError> {
        if a.len() != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: a.len(),
            });
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let s = e + a;
            if !self.laurent && !s.is_nonnegative() {
                return Err(PolyError::ExponentUnderflow(s));
            }
            terms.insert(s, c.clone());
        }
        Ok(Polynomial {
            nvars: self.nvars,
            laurent: self.laurent,
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Polynomial::one(self.nvars);
        acc.laurent = self.laurent;
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Homogenize with a new variable `x_0` placed at index 0, at degree
    /// `max(deg f, total_degree)`.
    pub fn homogenize(&self, total_degree: Option<u32>) -> Result<Self, PolyError> {
        if self.laurent {
            return Err(PolyError::NotOrdinaryPolynomial);
        }
        let deg = self
            .total_degree()
            .unwrap_or(0)
            .max(total_degree.map(i64::from).unwrap_or(0));
        let mut out = Polynomial::zero(self.nvars + 1);
        for (e, c) in &self.terms {
            out.terms.insert(e.prepend(deg - e.total()), c.clone());
        }
        Ok(out)
    }

    /// Substitute `x_0 := 1`, dropping the first variable.
    pub fn dehomogenize(&self) -> Result<Self, PolyError> {
        if self.nvars == 0 {
            return Err(PolyError::ArityMismatch {
                expected: 1,
                found: 0,
            });
        }
        let mut out = Polynomial {
            nvars: self.nvars - 1,
            laurent: self.laurent,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.add_term(ExponentVector::new(e.coords()[1..].to_vec()), c.clone());
        }
        Ok(out)
    }

    /// Multiply through by the lcm of the coefficient denominators and divide
    /// by the gcd of the numerators, giving a primitive integer polynomial.
    pub fn primitive_integer_terms(&self) -> Vec<(ExponentVector, BigInt)> {
        use num_integer::Integer;
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<(ExponentVector, BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), (c * BigRational::from_integer(lcm.clone())).to_integer()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c));
        if g.is_zero() || g.is_one() {
            return ints;
        }
        ints.into_iter().map(|(e, c)| (e, c / &g)).collect()
    }

    fn check_arity(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomial arithmetic on different numbers of variables"
        );
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_arity(rhs);
        let mut out = self.clone();
        out.laurent |= rhs.laurent;
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_arity(rhs);
        let mut out = self.clone();
        out.laurent |= rhs.laurent;
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            laurent: self.laurent,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_arity(rhs);
        let mut out = Polynomial {
            nvars: self.nvars,
            laurent: self.laurent || rhs.laurent,
            terms: BTreeMap::new(),
        };
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let terms = self.terms_grlex();
        for (k, (e, c)) in terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let a = c.abs();
            let mono: Vec<String> = e
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
                .collect();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// `f_1, ..., f_s` together with an optional localizer `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    polys: Vec<Polynomial>,
    localizer: Option<Polynomial>,
    nvars: usize,
}

impl PolySystem {
    pub fn new(polys: Vec<Polynomial>, localizer: Option<Polynomial>) -> Result<Self, PolyError> {
        let Some(first) = polys.first() else {
            return Err(PolyError::EmptySystem);
        };
        let nvars = first.nvars;
        let laurent = polys.iter().any(|p| p.laurent);
        for p in polys.iter().chain(localizer.iter()) {
            if p.nvars != nvars {
                return Err(PolyError::ArityMismatch {
                    expected: nvars,
                    found: p.nvars,
                });
            }
        }
        if localizer.as_ref().is_some_and(|p| p.laurent && !laurent) {
            return Err(PolyError::MixedLaurent);
        }
        let polys = polys
            .into_iter()
            .map(|p| if laurent { p.into_laurent() } else { p })
            .collect();
        let localizer = localizer.map(|p| if laurent { p.into_laurent() } else { p });
        Ok(PolySystem {
            polys,
            localizer,
            nvars,
        })
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn localizer(&self) -> Option<&Polynomial> {
        self.localizer.as_ref()
    }

    /// The localizer, defaulting to the constant 1.
    pub fn localizer_or_one(&self) -> Polynomial {
        self.localizer.clone().unwrap_or_else(|| {
            let mut one = Polynomial::one(self.nvars);
            one.laurent = self.is_laurent();
            one
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_laurent(&self) -> bool {
        self.polys.iter().any(|p| p.laurent)
    }
}

pub fn support(f: &Polynomial) -> Vec<ExponentVector> {
    f.support()
}

/// Convex hull of the union of the supports.
pub fn newton_polytope(fs: &[Polynomial]) -> Result<LatticePolytope, PolyError> {
    Ok(convex_hull(fs.iter().flat_map(|f| f.support()))?)
}

/// Normalized volume of the Newton polytope, measured in the lattice of its
/// affine hull.
pub fn unmixed_volume(fs: &[Polynomial]) -> Result<BigInt, PolyError> {
    Ok(newton_polytope(fs)?.normalized_volume())
}

/// Largest total degree across the system; zero polynomials count as 0.
pub fn max_degree(fs: &[Polynomial]) -> i64 {
    fs.iter().filter_map(Polynomial::total_degree).max().unwrap_or(0)
}

/// Total degrees sorted descending, `d_1 >= ... >= d_s`. Zero polynomials
/// are skipped.
pub fn degrees(fs: &[Polynomial]) -> Vec<i64> {
    let mut d: Vec<i64> = fs.iter().filter_map(Polynomial::total_degree).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: usize, terms: &[(&[i64], i64)]) -> Polynomial {
        Polynomial::from_int_terms(n, terms).unwrap()
    }

    fn ev(v: &[i64]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn supports() {
        let f = p(2, &[(&[0, 0], 1), (&[1, 3], -1)]);
        assert_eq!(f.support(), vec![ev(&[0, 0]), ev(&[1, 3])]);
        assert!(Polynomial::zero(2).support().is_empty());
        let g = p(3, &[(&[0, 1, 0], 1), (&[0, 0, 3], -1)]);
        assert_eq!(g.support(), vec![ev(&[0, 0, 3]), ev(&[0, 1, 0])]);
    }

    #[test]
    fn newton_polytopes_and_volumes() {
        let d = 4;
        let f = p(2, &[(&[0, 0], 1), (&[1, d], -1)]);
        assert_eq!(newton_polytope(&[f]).unwrap().vertices(), &[ev(&[0, 0]), ev(&[1, d])]);
        let g = [p(1, &[(&[2], 1)]), p(1, &[(&[0], 1), (&[1], -1)])];
        assert_eq!(newton_polytope(&g).unwrap().vertices(), &[ev(&[0]), ev(&[2])]);
        let seg = [p(1, &[(&[0], 1)]), p(1, &[(&[1], 1)])];
        assert_eq!(unmixed_volume(&seg).unwrap(), 1.into());
        let square = [
            p(2, &[(&[0, 0], 1)]),
            p(2, &[(&[1, 0], 1)]),
            p(2, &[(&[0, 1], 1)]),
            p(2, &[(&[1, 1], 1)]),
        ];
        assert_eq!(unmixed_volume(&square).unwrap(), 2.into());
        assert!(newton_polytope(&[Polynomial::zero(2)]).is_err());
    }

    #[test]
    fn sparse_system_fits_in_prism() {
        // deg <= 1 in x1, x2 and <= d in x3, together with 1 and the variables
        let d = 3;
        let mut fs = vec![Polynomial::one(3)];
        fs.extend((0..3).map(|i| Polynomial::var(3, i)));
        fs.push(p(3, &[(&[1, 0, 3], 2), (&[0, 1, 1], -1), (&[0, 0, 0], 5)]));
        fs.push(p(3, &[(&[0, 1, 2], 1), (&[0, 0, 3], 1)]));
        let n = newton_polytope(&fs).unwrap();
        let pd = crate::polytope::prism_pd(3, d);
        assert!(n.vertices().iter().all(|v| pd.contains(v)));
        assert!(unmixed_volume(&fs).unwrap() <= BigInt::from(d).pow(3));
    }

    #[test]
    fn homogenization() {
        let f = p(2, &[(&[0, 0], 1), (&[1, 1], -1)]);
        let h = f.homogenize(None).unwrap();
        assert_eq!(h, p(3, &[(&[2, 0, 0], 1), (&[0, 1, 1], -1)]));
        assert_eq!(h.dehomogenize().unwrap(), f);
        let g = p(1, &[(&[1], 1), (&[0], 1)]);
        let h = g.homogenize(Some(3)).unwrap();
        assert_eq!(h, p(2, &[(&[2, 1], 1), (&[3, 0], 1)]));
        assert_eq!(h.dehomogenize().unwrap(), g);
        let one = Polynomial::one(2);
        let h = one.homogenize(Some(4)).unwrap();
        assert_eq!(h, p(3, &[(&[4, 0, 0], 1)]));
        assert_eq!(h.dehomogenize().unwrap(), one);
        let l = Polynomial::one(1).into_laurent();
        assert_eq!(l.homogenize(None).unwrap_err(), PolyError::NotOrdinaryPolynomial);
    }

    #[test]
    fn shifts() {
        let f = p(1, &[(&[0], 1), (&[1], 1)]).into_laurent();
        let g = f.monomial_shift(&ev(&[-1])).unwrap();
        let expected = Polynomial::from_terms(
            1,
            true,
            [(ev(&[-1]), BigRational::one()), (ev(&[0]), BigRational::one())],
        )
        .unwrap();
        assert_eq!(g, expected);
        let ordinary = p(1, &[(&[0], 1), (&[1], 1)]);
        assert!(matches!(
            ordinary.monomial_shift(&ev(&[-1])),
            Err(PolyError::ExponentUnderflow(_))
        ));
    }

    #[test]
    fn degree_lists() {
        let fs = [p(1, &[(&[2], 1)]), p(1, &[(&[0], 1), (&[1], -1)])];
        assert_eq!(max_degree(&fs), 2);
        assert_eq!(max_degree(&[Polynomial::one(2)]), 0);
        // example system with n = 3, d = 3
        let ex = [
            p(3, &[(&[0, 0, 0], 1), (&[1, 3, 0], -1)]),
            p(3, &[(&[0, 1, 0], 1), (&[0, 0, 3], -1)]),
            p(3, &[(&[0, 0, 2], 1)]),
        ];
        assert_eq!(degrees(&ex), vec![4, 3, 2]);
    }

    #[test]
    fn cancellation_to_zero() {
        let f = p(2, &[(&[0, 0], 3), (&[2, 1], -7)]);
        let z = &f + &f.scalar_mul(&BigRational::from_integer((-1).into()));
        assert!(z.is_zero());
        assert!((&f - &f).is_zero());
    }

    #[test]
    fn system_validation() {
        assert_eq!(PolySystem::new(vec![], None).unwrap_err(), PolyError::EmptySystem);
        assert!(matches!(
            PolySystem::new(vec![Polynomial::one(1), Polynomial::one(2)], None),
            Err(PolyError::ArityMismatch { .. })
        ));
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::collection::vec(0i64..3, n), -3i64..=3), 0..5).prop_map(
            move |ts| {
                Polynomial::from_terms(
                    n,
                    false,
                    ts.into_iter()
                        .map(|(e, c)| (ExponentVector::new(e), BigRational::from_integer(c.into()))),
                )
                .unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&(&a + &b) - &b - &a).is_zero());
        }

        #[test]
        fn homogenize_round_trip(a in arb_poly(3), extra in 0u32..4) {
            let h = a.homogenize(Some(extra)).unwrap();
            prop_assert!(h.is_homogeneous());
            prop_assert_eq!(h.dehomogenize().unwrap(), a);
        }

        #[test]
        fn product_support_in_minkowski_sum(
            e1 in proptest::collection::vec(0i64..4, 2),
            e2 in proptest::collection::vec(0i64..4, 2),
            e3 in proptest::collection::vec(0i64..4, 2),
            e4 in proptest::collection::vec(0i64..4, 2),
            c in 1i64..3,
        ) {
            let one = BigRational::one();
            let f = Polynomial::from_terms(2, false, [
                (ExponentVector::new(e1), one.clone()),
                (ExponentVector::new(e2), BigRational::from_integer(c.into())),
            ]).unwrap();
            let g = Polynomial::from_terms(2, false, [
                (ExponentVector::new(e3), one.clone()),
                (ExponentVector::new(e4), -one),
            ]).unwrap();
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = &f * &g;
            let nf = newton_polytope(std::slice::from_ref(&f)).unwrap();
            let ng = newton_polytope(std::slice::from_ref(&g)).unwrap();
            let sum = nf.minkowski_sum(&ng).unwrap();
            for e in fg.support() {
                prop_assert!(sum.contains(&e));
            }
            // over a domain the vertices of N(f) + N(g) never cancel
            prop_assert_eq!(newton_polytope(&[fg]).unwrap(), sum);
        }
    }
}
