//! Exchange properties of symmetric ideals: polymatroidal, strong exchange, transversal.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{monomial_string, MonomialIdeal};
use crate::partitions::{delta, Exponent, Partition};
use crate::symideal::SymmetricIdeal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub u: String,
    pub v: String,
    /// 1-based index with `u_i > v_i` admitting no exchange.
    pub i: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeReport {
    pub polymatroidal: bool,
    /// Lexicographically least failing triple.
    pub witness: Option<ExchangeWitness>,
    /// Number of `(u, v, i)` triples checked.
    pub exchanges: usize,
    /// Whether every exchange could be chosen symmetric (`v x_i / x_j ∈ I` too).
    pub symmetric: bool,
}

fn expanded_gens(i: &SymmetricIdeal) -> Result<Vec<Exponent>> {
    if i.is_zero() || !i.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    let mut g = i.expand()?.gens().to_vec();
    g.sort();
    Ok(g)
}

fn moved(u: &[u32], plus: usize, minus: usize) -> Exponent {
    let mut w = u.to_vec();
    w[plus] += 1;
    w[minus] -= 1;
    w
}

pub fn is_polymatroidal(i: &SymmetricIdeal) -> Result<ExchangeReport> {
    let gens = expanded_gens(i)?;
    let set: HashSet<&Exponent> = gens.iter().collect();
    let n = i.n();
    let mut exchanges = 0;
    let mut symmetric = true;
    for u in &gens {
        for v in &gens {
            for a in 0..n {
                if u[a] <= v[a] {
                    continue;
                }
                exchanges += 1;
                let js: Vec<usize> = (0..n).filter(|&b| u[b] < v[b] && set.contains(&moved(u, b, a))).collect();
                if js.is_empty() {
                    let witness = ExchangeWitness { u: monomial_string(u), v: monomial_string(v), i: a + 1 };
                    return Ok(ExchangeReport { polymatroidal: false, witness: Some(witness), exchanges, symmetric: false });
                }
                if !js.iter().any(|&b| set.contains(&moved(v, a, b))) {
                    symmetric = false;
                }
            }
        }
    }
    Ok(ExchangeReport { polymatroidal: true, witness: None, exchanges, symmetric })
}

/// Polymatroidal iff strongly shifted with a single Borel generator.
pub fn verify_polymatroid_criterion(i: &SymmetricIdeal) -> Result<bool> {
    let poly = is_polymatroidal(i)?.polymatroidal;
    let principal = i.principal_borel().is_some();
    if poly != principal {
        return Err(Error::Verification(format!(
            "exchange check says {poly} but principal Borel test says {principal} for {i}"
        )));
    }
    Ok(poly)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SepType {
    /// `(a, …, a)`
    Constant,
    /// `(a^s, b^{n−s})`
    TwoBlock,
    /// `(a^s, b, c^{n−s−1})`
    Pinch,
    None,
}

impl SepType {
    pub fn has_sep(self) -> bool {
        self != SepType::None
    }
}

pub fn classify_sep(lam: &Partition) -> Result<SepType> {
    if lam.is_zero() {
        return Err(Error::ZeroPartition);
    }
    let mut blocks: Vec<(u32, usize)> = Vec::new();
    for &x in lam.parts() {
        match blocks.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => blocks.push((x, 1)),
        }
    }
    Ok(match blocks.len() {
        1 => SepType::Constant,
        2 => SepType::TwoBlock,
        3 if blocks[1].1 == 1 => SepType::Pinch,
        _ => SepType::None,
    })
}

/// Strong exchange by exhaustive check: `u x_j / x_i ∈ G(I)` whenever `u_i > v_i` and `u_j < v_j`.
pub fn has_sep_bruteforce(i: &SymmetricIdeal) -> Result<bool> {
    let gens = expanded_gens(i)?;
    let set: HashSet<&Exponent> = gens.iter().collect();
    let n = i.n();
    for u in &gens {
        for v in &gens {
            for a in (0..n).filter(|&a| u[a] > v[a]) {
                for b in (0..n).filter(|&b| u[b] < v[b]) {
                    if !set.contains(&moved(u, b, a)) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transversal {
    pub transversal: bool,
    /// `a_j` with `λ_i = Σ_{j≤i} C(i−1, j−1) a_j`.
    #[serde(serialize_with = "crate::ser::display_seq")]
    pub coefficients: Vec<BigInt>,
    /// `(c, a_c)`: the factor `∏_{|S| = c} P_S^{a_c}`, zero exponents omitted.
    pub factors: Vec<(usize, u64)>,
    /// Lattice path polymatroidal: `λ` constant or a power of the maximal ideal.
    pub lattice_path: bool,
}

fn binom(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

pub fn transversal_classify(lam: &Partition) -> Result<Transversal> {
    if lam.is_zero() {
        return Err(Error::ZeroPartition);
    }
    let n = lam.n();
    let mut a: Vec<BigInt> = Vec::with_capacity(n);
    for i in 1..=n {
        let mut v = BigInt::from(lam.part(i));
        for j in 1..i {
            v -= binom(i - 1, j - 1) * &a[j - 1];
        }
        a.push(v);
    }
    let by_system = a.iter().all(|x| !x.is_negative());
    let by_delta = (0..n).map(|i| delta(lam, i).map(|d| !d[0].is_negative())).collect::<Result<Vec<_>>>()?;
    let by_delta = by_delta.into_iter().all(|b| b);
    if by_system != by_delta {
        return Err(Error::Verification(format!("transversal criteria disagree for {lam}")));
    }
    let factors = if by_system {
        a.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c + 1, x.to_u64().expect("nonnegative coefficient")))
            .collect()
    } else {
        Vec::new()
    };
    let lattice_path = lam.is_constant() || lam.parts()[..n - 1].iter().all(|&x| x == 0);
    Ok(Transversal { transversal: by_system, coefficients: a, factors, lattice_path })
}

/// `∏_{(c, e)} ∏_{|S| = c} P_S^e` as an explicit ideal.
pub fn transversal_product(n: usize, factors: &[(usize, u64)]) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(n);
    for &(c, e) in factors {
        let mut support = vec![0; n];
        support[n - c..].fill(1);
        for s in Partition::new(support)?.orbit() {
            let prime: Vec<Exponent> = (0..n)
                .filter(|&i| s[i] == 1)
                .map(|i| {
                    let mut x = vec![0; n];
                    x[i] = 1;
                    x
                })
                .collect();
            let p = MonomialIdeal::new(n, prime)?.power(e as u32)?;
            acc = acc.product(&p)?;
        }
    }
    Ok(acc)
}

/// `Sss({λ}) = ∏_i I_{n,i}^{λ_i − λ_{i−1}}`, as `(i, λ_i − λ_{i−1})` with zero exponents dropped.
pub fn veronese_factorization(lam: &Partition) -> Result<Vec<(usize, u32)>> {
    if lam.is_zero() {
        return Err(Error::ZeroPartition);
    }
    let mut prev = 0;
    let mut out = Vec::new();
    for (i, &x) in lam.parts().iter().enumerate() {
        if x > prev {
            out.push((i + 1, x - prev));
        }
        prev = x;
    }
    Ok(out)
}

/// Product of the factors in compressed form.
pub fn factorization_product(n: usize, factors: &[(usize, u32)]) -> Result<SymmetricIdeal> {
    let mut acc = SymmetricIdeal::unit(n);
    for &(c, e) in factors {
        acc = acc.multiply(&SymmetricIdeal::veronese(n, c)?.power(e)?)?;
    }
    Ok(acc)
}
