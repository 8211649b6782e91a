//! Partitions with a fixed number of parts, ordered nondecreasingly, and the
//! dominance order on them.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::budget;
use crate::error::{check_dim, Error, Result};

/// An exponent vector; entries are unordered.
pub type Exponent = Vec<u32>;

/// A nondecreasing vector of nonnegative integers `λ_1 ≤ … ≤ λ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub min_idx: usize,
    pub max_idx: usize,
    pub med: usize,
    pub degree: u64,
}

impl Partition {
    /// Validates that `parts` is nondecreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(i) = parts.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::Unsorted {
                index: i + 1,
                prev: parts[i],
                next: parts[i + 1],
            });
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        Partition { parts }
    }

    pub fn zero(n: usize) -> Self {
        Partition { parts: vec![0; n] }
    }

    /// `(c, …, c)` with `n` parts.
    pub fn constant(n: usize, c: u32) -> Self {
        Partition { parts: vec![c; n] }
    }

    /// `(0^{c-1}, 1^{n-c+1})`, the generator of the squarefree Veronese ideal of height `c`.
    pub fn veronese(n: usize, c: usize) -> Self {
        assert!(c >= 1 && c <= n);
        Partition {
            parts: (1..=n).map(|i| u32::from(i >= c)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn degree(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Largest part `λ_n` (0 for `n = 0`).
    pub fn last(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// 1-based part access.
    pub fn part(&self, i: usize) -> u32 {
        self.parts[i - 1]
    }

    pub fn is_constant(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// `min(λ)`: smallest 1-based index with a positive part.
    pub fn min_idx(&self) -> Result<usize> {
        self.parts.iter().position(|&p| p > 0).map(|i| i + 1).ok_or(Error::ZeroPartition)
    }

    /// Largest 1-based index with a positive part.
    pub fn max_idx(&self) -> Result<usize> {
        self.parts.iter().rposition(|&p| p > 0).map(|i| i + 1).ok_or(Error::ZeroPartition)
    }

    /// Number of parts strictly below `λ_n`.
    pub fn med(&self) -> usize {
        let top = self.last();
        self.parts.iter().filter(|&&p| p < top).count()
    }

    pub fn stats(&self) -> Result<Stats> {
        Ok(Stats {
            min_idx: self.min_idx()?,
            max_idx: self.max_idx()?,
            med: self.med(),
            degree: self.degree(),
        })
    }

    /// `Σ_k(λ) = λ_k + … + λ_n`, 1-based.
    pub fn suffix_sum(&self, k: usize) -> u64 {
        self.parts[k - 1..].iter().map(|&p| u64::from(p)).sum()
    }

    /// `λ_1 + … + λ_j`.
    pub fn prefix_sum(&self, j: usize) -> u64 {
        self.parts[..j].iter().map(|&p| u64::from(p)).sum()
    }

    pub fn prefix_sums(&self) -> Vec<u64> {
        self.parts
            .iter()
            .scan(0u64, |acc, &p| {
                *acc += u64::from(p);
                Some(*acc)
            })
            .collect()
    }

    /// Componentwise `≤`; for sorted vectors this is divisibility up to permutation.
    pub fn le_componentwise(&self, other: &Partition) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Componentwise sum (sorted vectors add to a sorted vector).
    pub fn plus(&self, other: &Partition) -> Partition {
        Partition::from_sorted(self.parts.iter().zip(&other.parts).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> Partition {
        Partition::from_sorted(self.parts.iter().map(|&p| p * k).collect())
    }

    /// Adds `e` to the largest part: `λ + e·e_n`.
    pub fn lift(&self, e: u32) -> Partition {
        let mut parts = self.parts.clone();
        if let Some(last) = parts.last_mut() {
            *last += e;
        }
        Partition::from_sorted(parts)
    }

    /// Number of distinct permutations of the parts.
    pub fn orbit_size(&self) -> u64 {
        let mut total = 1u64;
        let mut seen = 0u64;
        let mut i = 0;
        while i < self.parts.len() {
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
                seen += 1;
                total = total * seen / (j - i) as u64;
            }
            i = j;
        }
        total
    }

    /// All distinct rearrangements, in lexicographic order.
    pub fn orbit(&self) -> Vec<Exponent> {
        let mut cur = self.parts.clone();
        let mut out = vec![cur.clone()];
        while next_permutation(&mut cur) {
            out.push(cur.clone());
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Advances to the next lexicographic permutation; false when wrapped around.
pub fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// The nondecreasing rearrangement of `e`.
pub fn part_of(e: &[u32]) -> Partition {
    let mut parts = e.to_vec();
    parts.sort_unstable();
    Partition { parts }
}

/// `μ ⊴ λ`: every suffix sum of `μ` is at most the corresponding one of `λ`.
pub fn dominance_leq(mu: &Partition, lam: &Partition) -> Result<bool> {
    check_dim(lam.n(), mu.n())?;
    let (mut sm, mut sl) = (0u64, 0u64);
    for (a, b) in mu.parts.iter().rev().zip(lam.parts.iter().rev()) {
        sm += u64::from(*a);
        sl += u64::from(*b);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

fn hat(lam: &Partition) -> Vec<u64> {
    lam.parts
        .iter()
        .rev()
        .scan(0u64, |acc, &p| {
            *acc += u64::from(p);
            Some(*acc)
        })
        .collect()
}

fn from_hat(h: &[u64]) -> Partition {
    let mut parts: Vec<u32> = h
        .iter()
        .scan(0u64, |prev, &x| {
            let d = x - *prev;
            *prev = x;
            Some(d as u32)
        })
        .collect();
    parts.reverse();
    Partition::from_sorted(parts)
}

/// Greatest lower bound in the dominance order.
pub fn meet(lam: &Partition, mu: &Partition) -> Result<Partition> {
    check_dim(lam.n(), mu.n())?;
    let h: Vec<u64> = hat(lam).into_iter().zip(hat(mu)).map(|(a, b)| a.min(b)).collect();
    Ok(from_hat(&h))
}

fn transpose_raw(parts: &[u32]) -> Vec<u32> {
    let top = parts.last().copied().unwrap_or(0);
    (1..=top)
        .map(|i| parts.iter().filter(|&&p| p > top - i).count() as u32)
        .collect()
}

fn pad_left(mut v: Vec<u32>, len: usize) -> Vec<u32> {
    if v.len() < len {
        let mut out = vec![0; len - v.len()];
        out.append(&mut v);
        out
    } else {
        v
    }
}

/// Least upper bound in the dominance order, `(λ^T ∧ μ^T)^T`.
pub fn join(lam: &Partition, mu: &Partition) -> Result<Partition> {
    check_dim(lam.n(), mu.n())?;
    let (a, b) = (transpose_raw(&lam.parts), transpose_raw(&mu.parts));
    let len = a.len().max(b.len());
    let m = meet(
        &Partition::from_sorted(pad_left(a, len)),
        &Partition::from_sorted(pad_left(b, len)),
    )?;
    let t = transpose_raw(&m.parts);
    debug_assert!(t.len() <= lam.n());
    Ok(Partition::from_sorted(pad_left(t, lam.n())))
}

/// The conjugate partition, of length `λ_n`.
pub fn transpose(lam: &Partition) -> Result<Partition> {
    if lam.is_zero() {
        return Err(Error::ZeroPartition);
    }
    Ok(Partition::from_sorted(transpose_raw(&lam.parts)))
}

/// `Δ^i λ`, the `i`-fold consecutive difference vector.
pub fn delta(lam: &Partition, i: usize) -> Result<Vec<BigInt>> {
    let n = lam.n();
    if n == 0 || i > n - 1 {
        return Err(Error::OutOfRange { index: i, max: n.saturating_sub(1) });
    }
    let mut v: Vec<BigInt> = lam.parts.iter().map(|&p| BigInt::from(p)).collect();
    for _ in 0..i {
        v = v.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    Ok(v)
}

/// All partitions of `d` with exactly `n` parts (zeros allowed), sorted.
pub fn all_partitions(n: usize, d: u64) -> Result<Vec<Partition>> {
    fn rec(n: usize, left: u64, min: u64, cur: &mut Vec<u32>, out: &mut Vec<Partition>, cap: usize) -> Result<()> {
        if cur.len() == n - 1 {
            if left >= min {
                cur.push(left as u32);
                out.push(Partition::from_sorted(cur.clone()));
                cur.pop();
                if out.len() > cap {
                    return Err(Error::Budget { what: "partition enumeration", limit: cap });
                }
            }
            return Ok(());
        }
        let slots = (n - cur.len()) as u64;
        let mut v = min;
        while v * slots <= left {
            cur.push(v as u32);
            rec(n, left - v, v, cur, out, cap)?;
            cur.pop();
            v += 1;
        }
        Ok(())
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Partition::zero(0));
        }
        return Ok(out);
    }
    rec(n, d, 0, &mut Vec::with_capacity(n), &mut out, budget::limits().partitions)?;
    Ok(out)
}

fn dominated_cache() -> &'static Mutex<HashMap<Partition, Arc<Vec<Partition>>>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Arc<Vec<Partition>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All `μ` of the same degree with `μ ⊴ λ`, found by closing `λ` under Borel moves.
pub fn enumerate_dominated(lam: &Partition) -> Result<Arc<Vec<Partition>>> {
    if let Some(hit) = dominated_cache().lock().expect("cache poisoned").get(lam) {
        return Ok(hit.clone());
    }
    let cap = budget::limits().partitions;
    let mut seen: HashSet<Partition> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lam.clone());
    queue.push_back(lam.clone());
    while let Some(p) = queue.pop_front() {
        let n = p.n();
        for i in 0..n {
            for j in i + 1..n {
                if p.parts[j] < p.parts[i] + 2 {
                    continue;
                }
                let mut q = p.parts.clone();
                q[i] += 1;
                q[j] -= 1;
                q.sort_unstable();
                let q = Partition::from_sorted(q);
                if seen.insert(q.clone()) {
                    if seen.len() > cap {
                        return Err(Error::Budget { what: "dominated partitions", limit: cap });
                    }
                    queue.push_back(q);
                }
            }
        }
    }
    let mut out: Vec<Partition> = seen.into_iter().collect();
    out.sort();
    let out = Arc::new(out);
    dominated_cache().lock().expect("cache poisoned").insert(lam.clone(), out.clone());
    Ok(out)
}
