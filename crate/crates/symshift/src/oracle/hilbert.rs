//! Hilbert series numerators by pivot recursion
//! `K(I) = K(I + (p)) + t^{deg p} K(I : p)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{divides, minimalize};
use crate::partitions::Exponent;

/// Univariate integer polynomial, lowest degree first.
pub type Poly = Vec<BigInt>;

pub(crate) fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigInt::zero());
    }
    p
}

pub(crate) fn add_shifted(acc: &mut Poly, p: &Poly, shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_minus_t_pow(d: usize) -> Poly {
    let mut p = vec![BigInt::zero(); d + 1];
    p[0] = BigInt::one();
    p[d] -= BigInt::one();
    p
}

fn deg(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

fn numerator(gens: Vec<Exponent>) -> Poly {
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.iter().all(|&x| x == 0)) {
        return vec![BigInt::zero()];
    }
    let n = gens[0].len();
    // pairwise coprime generators: product formula
    let mut used = vec![false; n];
    let mut coprime = true;
    'outer: for g in &gens {
        for (i, &x) in g.iter().enumerate() {
            if x > 0 {
                if used[i] {
                    coprime = false;
                    break 'outer;
                }
                used[i] = true;
            }
        }
    }
    if coprime {
        return gens.iter().fold(vec![BigInt::one()], |acc, g| mul(&acc, &one_minus_t_pow(deg(g))));
    }
    // pivot on the variable occurring in the most non-pure-power generators
    let mixed: Vec<&Exponent> = gens.iter().filter(|g| g.iter().filter(|&&x| x > 0).count() > 1).collect();
    let var = (0..n)
        .max_by_key(|&i| (mixed.iter().filter(|g| g[i] > 0).count(), std::cmp::Reverse(i)))
        .expect("n > 0");
    let mut exps: Vec<u32> = mixed.iter().map(|g| g[var]).filter(|&x| x > 0).collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let mut p = vec![0u32; n];
    p[var] = e;
    debug_assert!(!gens.iter().any(|g| divides(g, &p)));

    let mut with_p = gens.clone();
    with_p.push(p.clone());
    let colon: Vec<Exponent> = gens
        .iter()
        .map(|g| g.iter().zip(&p).map(|(a, b)| a.saturating_sub(*b)).collect())
        .collect();
    let mut out = numerator(minimalize(with_p));
    add_shifted(&mut out, &numerator(minimalize(colon)), e as usize);
    out
}

/// Numerator `K(t)` with `HS(R/I) = K(t) / (1 - t)^n`.
pub fn hilbert_numerator(_n: usize, gens: &[Exponent]) -> Poly {
    trim(numerator(minimalize(gens.to_vec())))
}
