//! Brute-force monomial ideals: the uncompressed reference implementation.
//!
//! Nothing here knows about symmetry; every routine works on explicit
//! generator lists and is used to cross-check the compressed algorithms.

pub(crate) mod hilbert;
mod lp;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use crate::budget;
use crate::error::{check_dim, Error, Result};
use crate::partitions::Exponent;

pub use hilbert::{hilbert_numerator, Poly};
pub use lp::convex_combination;

#[inline]
pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn degree(e: &[u32]) -> u64 {
    e.iter().map(|&x| u64::from(x)).sum()
}

/// Minimal elements under divisibility, sorted lexicographically.
pub fn minimalize(mut gens: Vec<Exponent>) -> Vec<Exponent> {
    gens.sort_by(|a, b| degree(a).cmp(&degree(b)).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Exponent> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// A monomial prime `(x_i : i ∈ support)`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialPrime {
    pub support: Vec<usize>,
}

impl MonomialPrime {
    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn contains_prime(&self, other: &MonomialPrime) -> bool {
        other.support.iter().all(|i| self.support.contains(i))
    }

    pub fn to_ideal(&self, n: usize) -> MonomialIdeal {
        let gens = self
            .support
            .iter()
            .map(|&i| {
                let mut e = vec![0; n];
                e[i - 1] = 1;
                e
            })
            .collect();
        MonomialIdeal::from_minimal(n, minimalize(gens))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.support.iter().map(|i| format!("x{i}")).collect();
        write!(f, "({})", vars.join(","))
    }
}

/// Which primes a symbolic power is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolicMode {
    Min,
    Ass,
}

/// Monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Exponent>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Exponent>) -> Result<Self> {
        for g in &gens {
            check_dim(n, g.len())?;
        }
        Ok(MonomialIdeal { n, gens: minimalize(gens) })
    }

    pub(crate) fn from_minimal(n: usize, gens: Vec<Exponent>) -> Self {
        MonomialIdeal { n, gens }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![vec![0; n]] }
    }

    /// `𝔪^d`.
    pub fn max_power(n: usize, d: u32) -> Self {
        let gens = crate::partitions::all_partitions(n, u64::from(d))
            .expect("small enumeration")
            .into_iter()
            .flat_map(|p| p.orbit())
            .collect();
        MonomialIdeal { n, gens: minimalize(gens) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Exponent] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.iter().all(|&x| x == 0))
    }

    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(|g| degree(g)).max().unwrap_or(0)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.gens.iter().map(|g| degree(g)).collect::<HashSet<_>>().len() <= 1
    }

    pub fn contains(&self, e: &[u32]) -> bool {
        debug_assert_eq!(e.len(), self.n);
        self.gens.iter().any(|g| divides(g, e))
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    fn guard(&self, count: usize, what: &'static str) -> Result<()> {
        let cap = budget::limits().generators;
        if count > cap {
            Err(Error::Budget { what, limit: cap })
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.n, other.n)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { n: self.n, gens: minimalize(gens) })
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.n, other.n)?;
        self.guard(self.gens.len() * other.gens.len(), "oracle intersection")?;
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cands.push(lcm(a, b));
            }
        }
        Ok(MonomialIdeal { n: self.n, gens: minimalize(cands) })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.n, other.n)?;
        self.guard(self.gens.len() * other.gens.len(), "oracle product")?;
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                cands.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Ok(MonomialIdeal { n: self.n, gens: minimalize(cands) })
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I : x^m`.
    pub fn colon_mono(&self, m: &[u32]) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.iter().zip(m).map(|(a, b)| a.saturating_sub(*b)).collect())
            .collect();
        MonomialIdeal { n: self.n, gens: minimalize(gens) }
    }

    /// `I : J = ⋂_{g ∈ G(J)} (I : g)`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.n, other.n)?;
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let c = self.colon_mono(g);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| MonomialIdeal::unit(self.n)))
    }

    /// `I : (x_S)^∞`: drops the variables in `S` (1-based).
    pub fn saturate_by_variables(&self, vars: &[usize]) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut g = g.clone();
                for &i in vars {
                    g[i - 1] = 0;
                }
                g
            })
            .collect();
        MonomialIdeal { n: self.n, gens: minimalize(gens) }
    }

    /// `I R_P ∩ R` for the monomial prime `P`.
    pub fn localize(&self, p: &MonomialPrime) -> MonomialIdeal {
        let outside: Vec<usize> = (1..=self.n).filter(|i| !p.support.contains(i)).collect();
        self.saturate_by_variables(&outside)
    }

    /// `I : J^∞ = ⋂_{g ∈ G(J)} (I : g^∞)`.
    pub fn saturation(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.n, other.n)?;
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let supp: Vec<usize> = (1..=self.n).filter(|&i| g[i - 1] > 0).collect();
            let c = self.saturate_by_variables(&supp);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| MonomialIdeal::unit(self.n)))
    }

    /// Saturation by iterating `K ↦ K : J` to a fixed point.
    pub fn saturation_iterated(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_ideal(other)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|g| {
            (0..self.n).all(|j| {
                g[j] == 0
                    || (0..j).all(|i| {
                        let mut h = g.clone();
                        h[i] += 1;
                        h[j] -= 1;
                        self.contains(&h)
                    })
            })
        })
    }

    /// Borel-fixed closure of a set of monomials under `x_j ↦ x_i`, `i < j`.
    pub fn borel_closure(n: usize, monomials: &[Exponent]) -> Result<MonomialIdeal> {
        let cap = budget::limits().generators;
        let mut seen: HashSet<Exponent> = HashSet::new();
        let mut queue: VecDeque<Exponent> = VecDeque::new();
        for m in monomials {
            check_dim(n, m.len())?;
            if seen.insert(m.clone()) {
                queue.push_back(m.clone());
            }
        }
        while let Some(g) = queue.pop_front() {
            for j in 0..n {
                if g[j] == 0 {
                    continue;
                }
                for i in 0..j {
                    let mut h = g.clone();
                    h[i] += 1;
                    h[j] -= 1;
                    if seen.insert(h.clone()) {
                        if seen.len() > cap {
                            return Err(Error::Budget { what: "Borel closure", limit: cap });
                        }
                        queue.push_back(h);
                    }
                }
            }
        }
        Ok(MonomialIdeal { n, gens: minimalize(seen.into_iter().collect()) })
    }

    /// Componentwise maximum exponent over the generators.
    pub fn exponent_bound(&self) -> Exponent {
        let mut m = vec![0; self.n];
        for g in &self.gens {
            for (a, b) in m.iter_mut().zip(g) {
                *a = (*a).max(*b);
            }
        }
        m
    }

    /// Membership table on the box `[0, M]`, with `M` the exponent bound.
    fn membership_box(&self) -> Result<(Exponent, Vec<bool>)> {
        let m = self.exponent_bound();
        let dims: Vec<usize> = m.iter().map(|&x| x as usize + 1).collect();
        let cells = dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d));
        let cap = budget::limits().cells;
        let cells = match cells {
            Some(c) if c <= cap => c,
            _ => return Err(Error::Budget { what: "decomposition box", limit: cap }),
        };
        let mut strides = vec![1usize; self.n];
        for i in (0..self.n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        let gens: HashSet<&Exponent> = self.gens.iter().collect();
        let mut inside = vec![false; cells];
        let mut v = vec![0u32; self.n];
        for (idx, slot) in inside.iter_mut().enumerate() {
            let mut rest = idx;
            for i in 0..self.n {
                v[i] = (rest / strides[i]) as u32;
                rest %= strides[i];
            }
            *slot = gens.contains(&v);
        }
        for idx in 0..cells {
            if inside[idx] {
                continue;
            }
            let mut rest = idx;
            let mut hit = false;
            for i in 0..self.n {
                let vi = rest / strides[i];
                rest %= strides[i];
                if vi > 0 && inside[idx - strides[i]] {
                    hit = true;
                    break;
                }
            }
            inside[idx] = hit;
        }
        Ok((m, inside))
    }

    /// Irredundant irreducible decomposition. A component is stored as an
    /// exponent vector `c`: it is generated by `x_i^{c_i}` for `c_i > 0`.
    pub fn irreducible_decomposition(&self) -> Result<Vec<Exponent>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let (m, inside) = self.membership_box()?;
        let n = self.n;
        let dims: Vec<usize> = m.iter().map(|&x| x as usize + 1).collect();
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        let mut comps = Vec::new();
        for idx in 0..inside.len() {
            if inside[idx] {
                continue;
            }
            let mut rest = idx;
            let mut v = vec![0u32; n];
            for i in 0..n {
                v[i] = (rest / strides[i]) as u32;
                rest %= strides[i];
            }
            let socle = (0..n).all(|i| v[i] == m[i] || inside[idx + strides[i]]);
            if socle {
                comps.push((0..n).map(|i| if v[i] < m[i] { v[i] + 1 } else { 0 }).collect::<Exponent>());
            }
        }
        // C ⊇ C' makes C redundant.
        let contains = |c: &Exponent, d: &Exponent| (0..n).all(|i| d[i] == 0 || (c[i] > 0 && c[i] <= d[i]));
        let mut keep: Vec<Exponent> = Vec::new();
        for (a, c) in comps.iter().enumerate() {
            let redundant = comps.iter().enumerate().any(|(b, d)| a != b && d != c && contains(c, d));
            if !redundant && !keep.contains(c) {
                keep.push(c.clone());
            }
        }
        keep.sort();
        Ok(keep)
    }

    /// Whether `I = ⋂ components`, checked cell by cell on the exponent box.
    pub fn equals_intersection(&self, comps: &[Exponent]) -> Result<bool> {
        let (m, inside) = self.membership_box()?;
        let n = self.n;
        let dims: Vec<usize> = m.iter().map(|&x| x as usize + 1).collect();
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        for (idx, &ins) in inside.iter().enumerate() {
            let mut rest = idx;
            let mut v = vec![0u32; n];
            for i in 0..n {
                v[i] = (rest / strides[i]) as u32;
                rest %= strides[i];
            }
            let in_all = comps.iter().all(|c| (0..n).any(|i| c[i] > 0 && v[i] >= c[i]));
            if in_all != ins {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Associated primes: radicals of the irreducible components.
    pub fn ass(&self) -> Result<Vec<MonomialPrime>> {
        let mut primes: Vec<MonomialPrime> = self
            .irreducible_decomposition()?
            .into_iter()
            .map(|c| MonomialPrime {
                support: (1..=self.n).filter(|&i| c[i - 1] > 0).collect(),
            })
            .collect();
        primes.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        primes.dedup();
        Ok(primes)
    }

    pub fn min_primes(&self) -> Result<Vec<MonomialPrime>> {
        let ass = self.ass()?;
        Ok(ass
            .iter()
            .filter(|p| !ass.iter().any(|q| q != *p && p.contains_prime(q)))
            .cloned()
            .collect())
    }

    pub fn height(&self) -> Result<usize> {
        Ok(self.min_primes()?.iter().map(MonomialPrime::height).min().unwrap_or(0))
    }

    /// `⋂_{P} (I^m R_P ∩ R)` over the minimal or associated primes of `I`.
    pub fn symbolic_power(&self, m: u32, mode: SymbolicMode) -> Result<MonomialIdeal> {
        if m < 1 {
            return Err(Error::InvalidArgument("symbolic exponent must be at least 1".into()));
        }
        let primes = match mode {
            SymbolicMode::Min => self.min_primes()?,
            SymbolicMode::Ass => self.ass()?,
        };
        let pw = self.power(m)?;
        let mut acc: Option<MonomialIdeal> = None;
        for p in &primes {
            let loc = pw.localize(p);
            acc = Some(match acc {
                None => loc,
                Some(a) => a.intersect(&loc)?,
            });
        }
        Ok(acc.unwrap_or(pw))
    }

    /// The saturation form `I^m : J^∞`, with `Ass*(I)` replaced by the union
    /// of `Ass(I^k)` for `k ≤ kmax`.
    pub fn symbolic_power_saturation(&self, m: u32, mode: SymbolicMode, kmax: u32) -> Result<MonomialIdeal> {
        let mut stable: Vec<MonomialPrime> = Vec::new();
        for k in 1..=kmax.max(m) {
            for p in self.power(k)?.ass()? {
                if !stable.contains(&p) {
                    stable.push(p);
                }
            }
        }
        let base = match mode {
            SymbolicMode::Min => self.min_primes()?,
            SymbolicMode::Ass => self.ass()?,
        };
        let removed: Vec<&MonomialPrime> = stable
            .iter()
            .filter(|p| match mode {
                SymbolicMode::Min => !base.contains(p),
                SymbolicMode::Ass => !base.iter().any(|q| q.contains_prime(p)),
            })
            .collect();
        let pw = self.power(m)?;
        if removed.is_empty() {
            return Ok(pw);
        }
        let mut j = removed[0].to_ideal(self.n);
        for p in &removed[1..] {
            j = j.intersect(&p.to_ideal(self.n))?;
        }
        pw.saturation(&j)
    }

    pub fn hilbert_numerator(&self) -> Poly {
        hilbert_numerator(self.n, &self.gens)
    }

    /// Whether `x^a` lies in the integral closure, by exact LP feasibility of
    /// `a ∈ conv(G(I)) + ℝ^n_{≥0}`.
    pub fn integral_closure_contains(&self, a: &[u32]) -> Result<bool> {
        Ok(self.integral_closure_witness(a)?.is_some())
    }

    /// Convex weights on the generators certifying membership in the closure.
    pub fn integral_closure_witness(&self, a: &[u32]) -> Result<Option<Vec<BigRational>>> {
        check_dim(self.n, a.len())?;
        if self.is_zero() {
            return Ok(None);
        }
        let cap = budget::limits().lp_dim;
        let dim = self.n + 1 + self.gens.len() + self.n + 1;
        if dim > cap {
            return Err(Error::Budget { what: "LP dimension", limit: cap });
        }
        Ok(convex_combination(&self.gens, a))
    }

    /// `x^{s·a} ∈ I^s`, decided by layered search over partial generator sums.
    pub fn power_contains(&self, a: &[u32], s: u32) -> Result<bool> {
        check_dim(self.n, a.len())?;
        let target: Exponent = a.iter().map(|&x| x * s).collect();
        let cap = budget::limits().cells;
        let mut layer: HashSet<Exponent> = HashSet::from([vec![0; self.n]]);
        for _ in 0..s {
            let mut next = HashSet::new();
            for p in &layer {
                for g in &self.gens {
                    let q: Exponent = p.iter().zip(g).map(|(x, y)| x + y).collect();
                    if divides(&q, &target) {
                        next.insert(q);
                    }
                }
            }
            if next.len() > cap {
                return Err(Error::Budget { what: "power search", limit: cap });
            }
            layer = next;
            if layer.is_empty() {
                return Ok(false);
            }
        }
        Ok(!layer.is_empty())
    }

    /// Every monomial of degree at most `dmax` in the closure lies in `I`.
    pub fn is_integrally_closed_up_to(&self, dmax: u64) -> Result<bool> {
        for d in 0..=dmax {
            for p in crate::partitions::all_partitions(self.n, d)? {
                for a in p.orbit() {
                    if !self.contains(&a) && self.integral_closure_contains(&a)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.gens.iter().map(|g| monomial_string(g)).collect();
        write!(f, "({})", terms.join(", "))
    }
}

pub fn monomial_string(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, x) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn poly(c: &[i64]) -> Poly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Generator splitting: `I = (G∖u, u′) ∩ (G∖u, u″)` for coprime `u = u′u″`.
    fn split_decomposition(i: &MonomialIdeal) -> Vec<Exponent> {
        let n = i.n();
        let pick = i.gens().iter().find(|g| g.iter().filter(|&&x| x > 0).count() > 1);
        match pick {
            None => vec![(0..n)
                .map(|k| i.gens().iter().map(|g| g[k]).find(|&x| x > 0).unwrap_or(0))
                .collect()],
            Some(u) => {
                let k = u.iter().position(|&x| x > 0).unwrap();
                let mut u1 = vec![0; n];
                u1[k] = u[k];
                let mut u2 = u.clone();
                u2[k] = 0;
                let rest: Vec<Exponent> = i.gens().iter().filter(|g| *g != u).cloned().collect();
                let mut out = Vec::new();
                for part in [u1, u2] {
                    let mut g = rest.clone();
                    g.push(part);
                    out.extend(split_decomposition(&MonomialIdeal::new(n, g).unwrap()));
                }
                out
            }
        }
    }

    #[test]
    fn intersect_basic() {
        let a = ideal(2, &[&[2, 0]]);
        let b = ideal(2, &[&[0, 2]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[2, 2]]));
    }

    #[test]
    fn colon_self_is_unit() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 2, 1]]);
        assert!(i.colon_ideal(&i).unwrap().is_unit());
    }

    #[test]
    fn saturation_forms_agree() {
        let i = ideal(3, &[&[2, 2, 1], &[1, 2, 2], &[2, 1, 2], &[0, 2, 3], &[3, 0, 2], &[2, 3, 0]]);
        let m = MonomialIdeal::max_power(3, 1);
        assert_eq!(i.saturation(&m).unwrap(), i.saturation_iterated(&m).unwrap());
    }

    #[test]
    fn textbook_decomposition() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.irreducible_decomposition().unwrap(), vec![vec![1, 0], vec![2, 1]]);
        let ass: Vec<Vec<usize>> = i.ass().unwrap().into_iter().map(|p| p.support).collect();
        assert_eq!(ass, vec![vec![1], vec![1, 2]]);
    }

    #[test]
    fn veronese_ass() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let ass = i.ass().unwrap();
        assert_eq!(ass.len(), 3);
        assert!(ass.iter().all(|p| p.height() == 2));
    }

    #[test]
    fn decomposition_matches_splitting() {
        let cases = [
            ideal(3, &[&[2, 1, 0], &[0, 3, 1], &[1, 0, 2]]),
            ideal(3, &[&[1, 1, 1], &[2, 2, 0]]),
            ideal(4, &[&[1, 2, 0, 0], &[0, 1, 1, 1], &[2, 0, 0, 1]]),
        ];
        for i in cases {
            let fast = i.irreducible_decomposition().unwrap();
            assert!(i.equals_intersection(&fast).unwrap());
            let slow = split_decomposition(&i);
            assert!(i.equals_intersection(&slow).unwrap());
            // irredundant decompositions are unique
            let contains = |c: &Exponent, d: &Exponent| (0..i.n()).all(|k| d[k] == 0 || (c[k] > 0 && c[k] <= d[k]));
            let mut slow_irr: Vec<Exponent> = slow
                .iter()
                .filter(|c| !slow.iter().any(|d| d != *c && contains(c, d)))
                .cloned()
                .collect();
            slow_irr.sort();
            slow_irr.dedup();
            assert_eq!(fast, slow_irr);
        }
    }

    #[test]
    fn hilbert_examples() {
        let v = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(v.hilbert_numerator(), poly(&[1, 0, -3, 2]));
        assert_eq!(ideal(1, &[&[1]]).hilbert_numerator(), poly(&[1, -1]));
        assert_eq!(MonomialIdeal::unit(2).hilbert_numerator(), poly(&[0]));
    }

    #[test]
    fn borel_closure_example() {
        let b = MonomialIdeal::borel_closure(3, &[vec![0, 1, 1]]).unwrap();
        let want = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1]]);
        assert_eq!(b, want);
        assert!(b.is_strongly_stable());
        assert!(MonomialIdeal::max_power(3, 3).is_strongly_stable());
        assert!(!ideal(3, &[&[0, 1, 1]]).is_strongly_stable());
    }

    #[test]
    fn integral_closure_simple() {
        let i = ideal(2, &[&[2, 0], &[0, 2]]);
        assert!(i.integral_closure_contains(&[1, 1]).unwrap());
        assert!(!i.contains(&[1, 1]));
        assert!(!i.integral_closure_contains(&[1, 0]).unwrap());
        assert!(i.power_contains(&[1, 1], 2).unwrap());
        assert!(!i.is_integrally_closed_up_to(2).unwrap());
        assert!(MonomialIdeal::max_power(3, 2).is_integrally_closed_up_to(4).unwrap());
    }

    #[test]
    fn symbolic_first_power_ass_is_identity() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0]]);
        assert_eq!(i.symbolic_power(1, SymbolicMode::Ass).unwrap(), i);
    }
}
