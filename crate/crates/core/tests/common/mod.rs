#![allow(dead_code)]

use nullcert::bounds::bound_thm3;
use nullcert::poly::{self, PolySystem, Polynomial};
use nullcert::solver::monomials_up_to;
use nullcert::ExponentVector;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn ev(v: &[i64]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

pub fn unit_exp(n: usize, pairs: &[(usize, i64)]) -> Vec<i64> {
    let mut e = vec![0; n];
    for &(i, k) in pairs {
        e[i] += k;
    }
    e
}

/// f_1 = 1 - x_1 x_2^d, f_i = x_i - x_{i+1}^d, f_n = x_n^2 (0-based
/// variables in code).
pub fn chain_system(n: usize, d: i64) -> Vec<Polynomial> {
    assert!(n >= 2);
    let z = vec![0; n];
    let mut fs = vec![Polynomial::from_int_terms(n, &[(&z, 1), (&unit_exp(n, &[(0, 1), (1, d)]), -1)]).unwrap()];
    for i in 1..n - 1 {
        fs.push(
            Polynomial::from_int_terms(n, &[(&unit_exp(n, &[(i, 1)]), 1), (&unit_exp(n, &[(i + 1, d)]), -1)])
                .unwrap(),
        );
    }
    fs.push(Polynomial::from_int_terms(n, &[(&unit_exp(n, &[(n - 1, 2)]), 1)]).unwrap());
    fs
}

/// g_1 = 1, g_k = x_1 x_2^{d-1} ... x_k^{d-1} for 1 < k < n,
/// g_n = x_1 x_2^{d-1} ... x_{n-1}^{d-1} x_n^{d-2}.
pub fn chain_system_cofactors(n: usize, d: i64) -> Vec<Polynomial> {
    let mut gs = vec![Polynomial::one(n)];
    for k in 1..n {
        let mut e = vec![0; n];
        e[0] = 1;
        for j in 1..k {
            e[j] = d - 1;
        }
        if k == n - 1 {
            e[n - 1] = d - 2;
        } else {
            e[k] = d - 1;
        }
        gs.push(Polynomial::from_int_terms(n, &[(&e, 1)]).unwrap());
    }
    gs
}

/// Random system with `n, s <= 3`, total degree `<= 2`, coefficients in
/// `{-2..2}`.
pub fn random_system(rng: &mut ChaCha8Rng) -> PolySystem {
    let n = rng.gen_range(1..=3);
    let s = rng.gen_range(1..=3);
    let monos = monomials_up_to(n, 2);
    let polys: Vec<Polynomial> = (0..s)
        .map(|_| {
            let terms = monos.iter().filter_map(|m| {
                if rng.gen_bool(0.45) {
                    let c: i64 = rng.gen_range(-2..=2);
                    Some((m.clone(), BigRational::from_integer(c.into())))
                } else {
                    None
                }
            });
            Polynomial::from_terms(n, false, terms.collect::<Vec<_>>()).unwrap()
        })
        .collect();
    PolySystem::new(polys, None).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The `thm3` degree budget for a system; `0` when every polynomial is zero.
pub fn thm3_budget(sys: &PolySystem) -> u64 {
    let degrees: Vec<u64> = poly::degrees(sys.polys()).into_iter().map(|d| d as u64).collect();
    if degrees.is_empty() {
        return 0;
    }
    bound_thm3(&degrees, sys.nvars() as u64).unwrap().exponent_d.to_u64().unwrap()
}

pub fn combine(gs: &[Polynomial], fs: &[Polynomial]) -> Polynomial {
    gs.iter()
        .zip(fs)
        .fold(Polynomial::zero(fs[0].nvars()), |acc, (g, f)| acc + g * f)
}
