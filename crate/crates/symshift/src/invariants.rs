//! Numerical invariants of symmetric shifted ideals.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::budget;
use crate::decomp::stable_ass;
use crate::error::{Error, Result};
use crate::oracle::hilbert::{add_shifted, Poly};
use crate::oracle::{monomial_string, MonomialIdeal};
use crate::partitions::Exponent;
use crate::symideal::SymmetricIdeal;

/// `|G(C(u))|` for a minimal generator `u` whose largest exponent is `lam_n`.
pub fn cu_size(u: &[u32], lam_n: u32) -> Result<usize> {
    if u.iter().all(|&x| x == 0) {
        return Err(Error::ZeroPartition);
    }
    let umax = u.iter().rposition(|&x| x == lam_n).ok_or_else(|| {
        Error::InvalidArgument(format!("{lam_n} is not the largest exponent of u"))
    })?;
    let below = u.iter().filter(|&&x| x + 1 < lam_n).count();
    let next = u[..umax].iter().filter(|&&x| x + 1 == lam_n).count();
    Ok(below + next)
}

fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    /// Total Betti numbers `β_i(I)`.
    pub totals: Vec<u64>,
    /// `β_{i,j}(I)`, withheld if the Hilbert-series check fails.
    pub graded: Option<BTreeMap<(usize, u64), u64>>,
    /// Outcome of the Hilbert-series check, `None` when the ideal was too large to expand.
    pub hilbert_verified: Option<bool>,
}

impl BettiTable {
    /// `1 + Σ (−1)^{i+1} β_{i,j} t^j`, the numerator of the Hilbert series of `R/I`.
    pub fn hilbert_numerator(&self) -> Option<Poly> {
        let graded = self.graded.as_ref()?;
        let mut k: Poly = vec![BigInt::one()];
        for (&(i, j), &b) in graded {
            let c = BigInt::from(b);
            let c = if i % 2 == 0 { -c } else { c };
            add_shifted(&mut k, &vec![c], j as usize);
        }
        while k.len() > 1 && k.last().is_some_and(Zero::is_zero) {
            k.pop();
        }
        Some(k)
    }
}

fn require_shifted(i: &SymmetricIdeal) -> Result<()> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !i.is_shifted() {
        return Err(Error::NotShifted);
    }
    Ok(())
}

/// Graded Betti numbers of a shifted ideal from the sizes of the `C(u)`.
pub fn betti(i: &SymmetricIdeal) -> Result<BettiTable> {
    require_shifted(i)?;
    let mut graded: BTreeMap<(usize, u64), u64> = BTreeMap::new();
    for l in i.gens() {
        let orbit = l.orbit();
        for u in &orbit {
            let c = cu_size(u, l.last())?;
            for h in 0..=c {
                *graded.entry((h, l.degree() + h as u64)).or_default() += binom(c, h);
            }
        }
    }
    let mut totals = Vec::new();
    for (&(h, _), &b) in &graded {
        if totals.len() <= h {
            totals.resize(h + 1, 0);
        }
        totals[h] += b;
    }
    let mut table = BettiTable { totals, graded: Some(graded), hilbert_verified: None };
    if i.n() <= budget::limits().expand_n {
        let expected = i.expand()?.hilbert_numerator();
        let ok = table.hilbert_numerator().as_ref() == Some(&expected);
        table.hilbert_verified = Some(ok);
        if !ok {
            table.graded = None;
        }
    }
    Ok(table)
}

/// `pd(R/I) = 1 + max med` over `Λ(I)`.
pub fn proj_dim(i: &SymmetricIdeal) -> Result<usize> {
    require_shifted(i)?;
    Ok(1 + i.gens().iter().map(|l| l.med()).max().unwrap_or(0))
}

pub fn depth_quotient(i: &SymmetricIdeal) -> Result<usize> {
    Ok(i.n() - proj_dim(i)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationGraph {
    /// Endpoints of edges, 1-based.
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl RelationGraph {
    pub fn components(&self) -> usize {
        let mut seen = HashSet::new();
        let mut count = 0;
        for &v in &self.vertices {
            if !seen.insert(v) {
                continue;
            }
            count += 1;
            let mut stack = vec![v];
            while let Some(x) = stack.pop() {
                for &(a, b) in &self.edges {
                    let y = if a == x { b } else if b == x { a } else { continue };
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }
}

/// Edges `{i, j}` with `x_i u = x_j v` for minimal generators `u ≠ v`.
pub fn relation_graph(i: &SymmetricIdeal) -> Result<RelationGraph> {
    if !i.is_equigenerated() || i.is_zero() {
        return Err(Error::NotEquigenerated);
    }
    let n = i.n();
    let gens: HashSet<Exponent> = i.expand()?.gens().iter().cloned().collect();
    let mut edges = BTreeSet::new();
    for u in &gens {
        for a in 0..n {
            for b in 0..n {
                if a == b || u[b] == 0 {
                    continue;
                }
                let mut v = u.clone();
                v[a] += 1;
                v[b] -= 1;
                if gens.contains(&v) {
                    edges.insert((a.min(b) + 1, a.max(b) + 1));
                }
            }
        }
    }
    let vertices = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    Ok(RelationGraph { vertices, edges })
}

/// Rank over `Q` by Gaussian elimination.
pub fn rank(rows: &[Exponent]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &pivot;
                for cc in c..cols {
                    let d = &f * &m[r][cc];
                    m[i][cc] -= d;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyticSpread {
    pub value: usize,
    pub closed_form: usize,
    pub rank: usize,
    /// `r − s + 1` from the relation graph; only for shifted ideals.
    pub graph: Option<usize>,
}

pub fn analytic_spread(i: &SymmetricIdeal) -> Result<AnalyticSpread> {
    if i.is_zero() || !i.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    let closed_form = if i.is_constant_principal() { 1 } else { i.n() };
    let rank = rank(i.expand()?.gens());
    let graph = if i.is_shifted() {
        let g = relation_graph(i)?;
        Some(g.vertices.len() + 1 - g.components())
    } else {
        None
    };
    if rank != closed_form || graph.is_some_and(|g| g != closed_form) {
        return Err(Error::Verification(format!(
            "analytic spread methods disagree: closed form {closed_form}, rank {rank}, graph {graph:?}"
        )));
    }
    Ok(AnalyticSpread { value: closed_form, closed_form, rank, graph })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabReport {
    /// `depth(R/I^k)` for `k = 1..=kmax`.
    pub depth_table: Vec<usize>,
    /// Associated prime heights of `I^k`.
    pub ass_table: Vec<Vec<usize>>,
    pub dstab_observed: usize,
    pub astab_observed: usize,
    /// True when the last value change happens at `kmax`, so stabilization is not yet visible.
    pub horizon_limited: bool,
    /// Exact values certified by theory for principal ideals.
    pub certified: Option<usize>,
    pub bound: Option<usize>,
}

fn require_sssi(i: &SymmetricIdeal, kmax: u32) -> Result<()> {
    if kmax < 1 {
        return Err(Error::InvalidArgument("kmax must be at least 1".into()));
    }
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !i.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    if !i.is_strongly_shifted() {
        return Err(Error::NotStronglyShifted);
    }
    Ok(())
}

/// `depth(R/I^k)` for `k ≤ kmax`, checking monotonicity and the `n − k − 1` bound.
pub fn depth_powers(i: &SymmetricIdeal, kmax: u32) -> Result<Vec<usize>> {
    require_sssi(i, kmax)?;
    let n = i.n();
    let mut table = Vec::new();
    let mut pw = i.clone();
    for k in 1..=kmax {
        if k > 1 {
            pw = pw.multiply(i)?;
        }
        let d = depth_quotient(&pw)?;
        if table.last().is_some_and(|&prev| d > prev) {
            return Err(Error::Verification(format!("depth increases at power {k}")));
        }
        if !i.is_constant_principal() && (k as usize) < n && d + k as usize + 1 > n {
            return Err(Error::Verification(format!("depth {d} of power {k} exceeds n-k-1")));
        }
        table.push(d);
    }
    Ok(table)
}

fn stabilized_from<T: PartialEq>(xs: &[T]) -> usize {
    let last = xs.len();
    let mut k = last;
    while k > 1 && xs[k - 2] == xs[last - 1] {
        k -= 1;
    }
    k
}

pub fn stab_report(i: &SymmetricIdeal, kmax: u32) -> Result<StabReport> {
    let depth_table = depth_powers(i, kmax)?;
    let mut ass_table = Vec::new();
    let mut pw = i.clone();
    for k in 1..=kmax {
        if k > 1 {
            pw = pw.multiply(i)?;
        }
        ass_table.push(pw.ass_heights()?);
    }
    let dstab_observed = stabilized_from(&depth_table);
    let astab_observed = stabilized_from(&ass_table);
    let horizon_limited = kmax > 1 && (dstab_observed == kmax as usize || astab_observed == kmax as usize);
    let (certified, bound) = match i.principal_borel() {
        Some(l) => {
            let s = stable_ass(&l)?;
            if s.certified {
                (Some(1), Some(1))
            } else {
                (None, Some(s.astab_bound))
            }
        }
        None => (None, None),
    };
    Ok(StabReport { depth_table, ass_table, dstab_observed, astab_observed, horizon_limited, certified, bound })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatliffRow {
    pub k: u32,
    pub holds: bool,
    /// A generator of `I^{k+1} : I` outside `I^k`.
    pub witness: Option<String>,
}

/// `I^{k+1} : I = I^k` for `k ≤ kmax`, computed with the oracle.
pub fn ratliff_check(i: &SymmetricIdeal, kmax: u32) -> Result<Vec<RatliffRow>> {
    let base = i.expand()?;
    let mut rows = Vec::new();
    let mut pk: MonomialIdeal = base.clone();
    for k in 1..=kmax {
        let next = pk.product(&base)?;
        let colon = next.colon_ideal(&base)?;
        let witness = colon.gens().iter().find(|g| !pk.contains(g)).map(|g| monomial_string(g));
        rows.push(RatliffRow { k, holds: witness.is_none() && pk.is_subset(&colon), witness });
        pk = next;
    }
    Ok(rows)
}
