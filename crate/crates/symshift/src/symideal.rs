//! Symmetric monomial ideals stored as their partition generators `Λ(I)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::budget;
use crate::error::{check_dim, Error, Result};
use crate::oracle::MonomialIdeal;
use crate::partitions::{dominance_leq, enumerate_dominated, meet, part_of, Exponent, Partition};

#[derive(Debug, Clone, Copy)]
struct Flags {
    shifted: bool,
    strongly: bool,
}

/// A symmetric monomial ideal. The zero ideal has no generators; the unit
/// ideal is generated by the zero partition.
#[derive(Debug, Clone)]
pub struct SymmetricIdeal {
    n: usize,
    gens: Vec<Partition>,
    flags: OnceLock<Flags>,
}

impl PartialEq for SymmetricIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gens == other.gens
    }
}

impl Eq for SymmetricIdeal {}

/// JSON envelope `{"n": 4, "generators": [[…], …]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

fn minimal_partitions(mut ps: Vec<Partition>) -> Vec<Partition> {
    ps.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    ps.dedup();
    let mut kept: Vec<Partition> = Vec::with_capacity(ps.len());
    for p in ps {
        if !kept.iter().any(|k| k.le_componentwise(&p)) {
            kept.push(p);
        }
    }
    kept.sort();
    kept
}

fn sn_guard(n: usize) -> Result<()> {
    let cap = budget::limits().expand_n;
    if n > cap {
        Err(Error::Budget { what: "symmetric group enumeration", limit: cap })
    } else {
        Ok(())
    }
}

/// `x^e ∈ Sss({λ})` via prefix sums: `Σ_{i≤j} μ_i ≥ Σ_{i≤j} λ_i` with `μ = part(e)`.
pub fn principal_membership(lam: &Partition, e: &[u32]) -> Result<bool> {
    check_dim(lam.n(), e.len())?;
    if lam.is_zero() {
        return Err(Error::ZeroPartition);
    }
    let mu = part_of(e);
    Ok(mu.prefix_sums().iter().zip(lam.prefix_sums()).all(|(a, b)| *a >= b))
}

impl SymmetricIdeal {
    pub fn from_partitions(n: usize, ps: Vec<Partition>) -> Result<Self> {
        for p in &ps {
            check_dim(n, p.n())?;
        }
        Ok(SymmetricIdeal { n, gens: minimal_partitions(ps), flags: OnceLock::new() })
    }

    /// Validates an unsorted-looking spec, naming the offending generator.
    pub fn from_spec(spec: &IdealSpec) -> Result<Self> {
        let mut ps = Vec::with_capacity(spec.generators.len());
        for (k, g) in spec.generators.iter().enumerate() {
            if g.len() != spec.n {
                return Err(Error::InvalidArgument(format!(
                    "generators[{k}] has {} entries, expected {}",
                    g.len(),
                    spec.n
                )));
            }
            let p = Partition::new(g.clone())
                .map_err(|e| Error::InvalidArgument(format!("generators[{k}]: {e}")))?;
            ps.push(p);
        }
        SymmetricIdeal::from_partitions(spec.n, ps)
    }

    pub fn to_spec(&self) -> IdealSpec {
        IdealSpec { n: self.n, generators: self.gens.iter().map(|p| p.parts().to_vec()).collect() }
    }

    pub fn zero(n: usize) -> Self {
        SymmetricIdeal { n, gens: Vec::new(), flags: OnceLock::new() }
    }

    pub fn unit(n: usize) -> Self {
        SymmetricIdeal { n, gens: vec![Partition::zero(n)], flags: OnceLock::new() }
    }

    /// The squarefree Veronese ideal `I_{n,c}`.
    pub fn veronese(n: usize, c: usize) -> Result<Self> {
        if c < 1 || c > n {
            return Err(Error::OutOfRange { index: c, max: n });
        }
        SymmetricIdeal::from_partitions(n, vec![Partition::veronese(n, c)])
    }

    /// `𝔪^d`.
    pub fn max_power(n: usize, d: u32) -> Self {
        let mut parts = vec![0; n];
        if let Some(l) = parts.last_mut() {
            *l = d;
        }
        SymmetricIdeal::sss_closure(n, &[Partition::from_sorted(parts)]).expect("small closure")
    }

    /// Reads off `Λ(I)` from an uncompressed ideal, checking that it is symmetric.
    pub fn compress(m: &MonomialIdeal) -> Result<Self> {
        let ps: Vec<Partition> = m.gens().iter().map(|g| part_of(g)).collect();
        let s = SymmetricIdeal::from_partitions(m.n(), ps)?;
        let expected: u64 = s.gens.iter().map(Partition::orbit_size).sum();
        if expected != m.gens().len() as u64 {
            return Err(Error::InvalidArgument("ideal is not symmetric".into()));
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Partition] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Partition::is_zero)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    /// `Λ(I) = {(a, …, a)}`.
    pub fn is_constant_principal(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_constant()
    }

    pub fn contains(&self, e: &[u32]) -> Result<bool> {
        check_dim(self.n, e.len())?;
        let mu = part_of(e);
        Ok(self.gens.iter().any(|l| l.le_componentwise(&mu)))
    }

    fn contains_sorted(&self, mu: &Partition) -> bool {
        self.gens.iter().any(|l| l.le_componentwise(mu))
    }

    fn flags(&self) -> Flags {
        *self.flags.get_or_init(|| {
            let mut shifted = true;
            let mut strongly = true;
            for l in &self.gens {
                let p = l.parts();
                let n = p.len();
                for j in 0..n {
                    for i in 0..j {
                        if p[i] >= p[j] {
                            continue;
                        }
                        let mut q = p.to_vec();
                        q[i] += 1;
                        q[j] -= 1;
                        if !self.contains_sorted(&part_of(&q)) {
                            strongly = false;
                            if j == n - 1 {
                                shifted = false;
                            }
                        }
                    }
                }
            }
            Flags { shifted, strongly }
        })
    }

    pub fn is_shifted(&self) -> bool {
        self.flags().shifted
    }

    pub fn is_strongly_shifted(&self) -> bool {
        self.flags().strongly
    }

    /// Per-degree dominance-maximal elements of `Λ(I)`.
    pub fn borel_generators(&self) -> Result<Vec<Partition>> {
        if !self.is_strongly_shifted() {
            return Err(Error::NotStronglyShifted);
        }
        Ok(dominance_maxima(&self.gens))
    }

    /// Whether `I` is a principal Borel ideal `Sss({λ})`; returns `λ`.
    pub fn principal_borel(&self) -> Option<Partition> {
        match self.borel_generators() {
            Ok(b) if b.len() == 1 => Some(b[0].clone()),
            _ => None,
        }
    }

    /// Smallest symmetric strongly shifted ideal containing `x^B`.
    pub fn sss_closure(n: usize, b: &[Partition]) -> Result<Self> {
        let mut all = Vec::new();
        for l in b {
            check_dim(n, l.n())?;
            all.extend(enumerate_dominated(l)?.iter().cloned());
        }
        SymmetricIdeal::from_partitions(n, all)
    }

    /// Smallest symmetric shifted ideal containing `x^B`.
    pub fn ss_closure(n: usize, b: &[Partition]) -> Result<Self> {
        move_closure(n, b, false)
    }

    /// Strongly shifted closure by fixed-point iteration of Borel moves.
    pub fn sss_closure_by_moves(n: usize, b: &[Partition]) -> Result<Self> {
        move_closure(n, b, true)
    }

    pub fn add(&self, other: &SymmetricIdeal) -> Result<Self> {
        check_dim(self.n, other.n)?;
        SymmetricIdeal::from_partitions(self.n, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    fn both_strong(&self, other: &SymmetricIdeal) -> bool {
        self.is_strongly_shifted() && other.is_strongly_shifted() && !self.is_zero() && !other.is_zero()
    }

    pub fn intersect(&self, other: &SymmetricIdeal) -> Result<Self> {
        check_dim(self.n, other.n)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SymmetricIdeal::zero(self.n));
        }
        if self.both_strong(other) {
            let (a, b) = (self.borel_generators()?, other.borel_generators()?);
            let mut meets = Vec::new();
            for x in &a {
                for y in &b {
                    meets.push(lifted_meet(x, y)?);
                }
            }
            return SymmetricIdeal::sss_closure(self.n, &meets);
        }
        self.intersect_general(other)
    }

    /// Intersection over all `σ ∈ S_n`, without fast paths.
    pub fn intersect_general(&self, other: &SymmetricIdeal) -> Result<Self> {
        check_dim(self.n, other.n)?;
        sn_guard(self.n)?;
        let mut cands = Vec::new();
        for l in &self.gens {
            for s in l.orbit() {
                for m in &other.gens {
                    let v: Exponent = s.iter().zip(m.parts()).map(|(a, b)| *a.max(b)).collect();
                    cands.push(part_of(&v));
                }
            }
        }
        SymmetricIdeal::from_partitions(self.n, cands)
    }

    pub fn multiply(&self, other: &SymmetricIdeal) -> Result<Self> {
        check_dim(self.n, other.n)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SymmetricIdeal::zero(self.n));
        }
        if self.both_strong(other) {
            let (a, b) = (self.borel_generators()?, other.borel_generators()?);
            let sums: Vec<Partition> = a.iter().flat_map(|x| b.iter().map(move |y| x.plus(y))).collect();
            return SymmetricIdeal::sss_closure(self.n, &sums);
        }
        self.multiply_general(other)
    }

    pub fn multiply_general(&self, other: &SymmetricIdeal) -> Result<Self> {
        check_dim(self.n, other.n)?;
        sn_guard(self.n)?;
        let mut cands = Vec::new();
        for l in &self.gens {
            for s in l.orbit() {
                for m in &other.gens {
                    let v: Exponent = s.iter().zip(m.parts()).map(|(a, b)| a + b).collect();
                    cands.push(part_of(&v));
                }
            }
        }
        SymmetricIdeal::from_partitions(self.n, cands)
    }

    pub fn power(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(SymmetricIdeal::unit(self.n));
        }
        if let Some(l) = self.principal_borel() {
            return SymmetricIdeal::sss_closure(self.n, &[l.scale(k)]);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `I : I_{n,c}^∞` for strongly shifted `I`.
    pub fn saturate_veronese(&self, c: usize) -> Result<Self> {
        if c < 1 || c > self.n {
            return Err(Error::OutOfRange { index: c, max: self.n });
        }
        if !self.is_strongly_shifted() {
            return Err(Error::NotStronglyShifted);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        if c == 1 {
            return Ok(SymmetricIdeal::unit(self.n));
        }
        let ps = self
            .gens
            .iter()
            .map(|l| {
                let p = l.parts();
                let v: Vec<u32> = (0..self.n).map(|i| if i < c - 1 { p[i] } else { p[c - 2] }).collect();
                Partition::from_sorted(v)
            })
            .collect();
        SymmetricIdeal::from_partitions(self.n, ps)
    }

    /// `max_{λ ∈ Λ(I)} min(λ)`.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        self.gens.iter().map(Partition::min_idx).try_fold(0, |acc, h| Ok(acc.max(h?)))
    }

    /// The radical, `I_{n,c}` with `c` the height.
    pub fn radical(&self) -> Result<Self> {
        if self.is_unit() {
            return Ok(self.clone());
        }
        SymmetricIdeal::veronese(self.n, self.height()?)
    }

    /// Heights of the associated primes of a strongly shifted ideal, read off
    /// from where consecutive Veronese saturations differ.
    pub fn ass_heights(&self) -> Result<Vec<usize>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let mut sats: Vec<SymmetricIdeal> = (1..=self.n).map(|h| self.saturate_veronese(h)).collect::<Result<_>>()?;
        sats.push(self.clone());
        Ok((1..=self.n).filter(|&h| sats[h - 1] != sats[h]).collect())
    }

    /// Symbolic power of a strongly shifted ideal via a single Veronese saturation.
    pub fn symbolic_power(&self, m: u32, mode: crate::oracle::SymbolicMode) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidArgument("symbolic exponent must be at least 1".into()));
        }
        if !self.is_strongly_shifted() {
            return Err(Error::NotStronglyShifted);
        }
        let top = match mode {
            crate::oracle::SymbolicMode::Min => self.height()?,
            crate::oracle::SymbolicMode::Ass => *self.ass_heights()?.last().ok_or(Error::UnitIdeal)?,
        };
        let pw = self.power(m)?;
        if top == self.n {
            Ok(pw)
        } else {
            pw.saturate_veronese(top + 1)
        }
    }

    /// `{λ ∈ P_n : x^λ ∈ J}` for strongly stable `J`, as a symmetric ideal.
    pub fn symmetrize(j: &MonomialIdeal) -> Result<Self> {
        if !j.is_strongly_stable() {
            return Err(Error::NotStronglyStable);
        }
        let ps = j
            .gens()
            .iter()
            .map(|a| {
                let v: Vec<u32> = a
                    .iter()
                    .scan(0u32, |m, &x| {
                        *m = (*m).max(x);
                        Some(*m)
                    })
                    .collect();
                Partition::from_sorted(v)
            })
            .collect();
        SymmetricIdeal::from_partitions(j.n(), ps)
    }

    /// `Borel(x^{B(I)})`.
    pub fn smallest_sstable(&self) -> Result<MonomialIdeal> {
        let b = self.borel_generators()?;
        let mons: Vec<Exponent> = b.iter().map(|p| p.parts().to_vec()).collect();
        MonomialIdeal::borel_closure(self.n, &mons)
    }

    /// Orbit expansion into an explicit monomial ideal.
    pub fn expand(&self) -> Result<MonomialIdeal> {
        sn_guard(self.n)?;
        let total: u64 = self.gens.iter().map(Partition::orbit_size).sum();
        let cap = budget::limits().generators as u64;
        if total > cap {
            return Err(Error::Budget { what: "orbit expansion", limit: cap as usize });
        }
        let gens = self.gens.iter().flat_map(Partition::orbit).collect();
        MonomialIdeal::new(self.n, gens)
    }
}

impl fmt::Display for SymmetricIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", g.join(", "))
    }
}

/// Meet after raising the lower-degree partition to the common degree.
pub fn lifted_meet(a: &Partition, b: &Partition) -> Result<Partition> {
    let d = a.degree().max(b.degree());
    let a = a.lift((d - a.degree()) as u32);
    let b = b.lift((d - b.degree()) as u32);
    meet(&a, &b)
}

/// Within each degree, the elements not strictly dominated by another.
pub fn dominance_maxima(ps: &[Partition]) -> Vec<Partition> {
    let mut by_degree: BTreeMap<u64, Vec<&Partition>> = BTreeMap::new();
    for p in ps {
        by_degree.entry(p.degree()).or_default().push(p);
    }
    let mut out = Vec::new();
    for group in by_degree.values() {
        for p in group {
            let dominated = group
                .iter()
                .any(|q| q != p && dominance_leq(p, q).expect("same n"));
            if !dominated && !out.contains(*p) {
                out.push((*p).clone());
            }
        }
    }
    out.sort();
    out
}

fn move_closure(n: usize, b: &[Partition], strong: bool) -> Result<SymmetricIdeal> {
    for l in b {
        check_dim(n, l.n())?;
    }
    let cap = budget::limits().partitions;
    let mut pool: Vec<Partition> = b.to_vec();
    loop {
        let cur = SymmetricIdeal::from_partitions(n, pool.clone())?;
        let mut added = false;
        for l in &cur.gens {
            let p = l.parts();
            for j in 0..n {
                if !strong && j != n - 1 {
                    continue;
                }
                for i in 0..j {
                    if p[i] >= p[j] {
                        continue;
                    }
                    let mut q = p.to_vec();
                    q[i] += 1;
                    q[j] -= 1;
                    let q = part_of(&q);
                    if !cur.contains_sorted(&q) && !pool.contains(&q) {
                        pool.push(q);
                        added = true;
                    }
                }
            }
        }
        if pool.len() > cap {
            return Err(Error::Budget { what: "shifted closure", limit: cap });
        }
        if !added {
            return Ok(cur);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::SymbolicMode;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> SymmetricIdeal {
        SymmetricIdeal::from_partitions(n, gens.iter().map(|g| p(g)).collect()).unwrap()
    }

    fn sss(l: &[u32]) -> SymmetricIdeal {
        SymmetricIdeal::sss_closure(l.len(), &[p(l)]).unwrap()
    }

    fn shifted_not_strong() -> SymmetricIdeal {
        ideal(4, &[&[1, 1, 2, 2], &[0, 2, 2, 2], &[0, 1, 2, 3]])
    }

    #[test]
    fn minimalization() {
        let i = ideal(3, &[&[0, 1, 2], &[1, 1, 1], &[1, 1, 2]]);
        assert_eq!(i.gens(), &[p(&[0, 1, 2]), p(&[1, 1, 1])]);
        assert_eq!(i.expand().unwrap().gens().len(), 7);
        assert_eq!(ideal(3, &[&[1, 2, 2], &[0, 2, 3]]).gens().len(), 2);
        assert!(SymmetricIdeal::from_partitions(3, vec![]).unwrap().is_zero());
        assert!(SymmetricIdeal::from_partitions(3, vec![p(&[0, 1])]).is_err());
    }

    #[test]
    fn sorted_comparison_is_orbit_divisibility() {
        // ∃σ: σ(λ) ≤ μ  ⇔  sorted λ ≤ sorted μ
        for l in crate::partitions::all_partitions(3, 4).unwrap() {
            for m in crate::partitions::all_partitions(3, 5).unwrap() {
                let any = l.orbit().iter().any(|s| crate::oracle::divides(s, m.parts()));
                assert_eq!(any, l.le_componentwise(&m));
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert!(sss(&[1, 2, 2, 4, 4]).contains(&[4, 2, 1, 4, 2]).unwrap());
        assert!(!ideal(3, &[&[0, 2, 2]]).contains(&[1, 1, 2]).unwrap());
        assert!(!sss(&[0, 1, 2]).contains(&[3, 0, 0]).unwrap());
        assert!(sss(&[0, 1, 2]).contains(&[0, 1]).is_err());
    }

    #[test]
    fn shiftedness_examples() {
        let i = shifted_not_strong();
        assert!(i.is_shifted());
        assert!(!i.is_strongly_shifted());
        let j = ideal(3, &[&[1, 2, 2], &[0, 2, 3]]);
        assert!(j.is_shifted() && !j.is_strongly_shifted());
        let m = SymmetricIdeal::max_power(3, 4);
        assert!(m.is_shifted() && m.is_strongly_shifted());
    }

    #[test]
    fn mixed_ideal_times_maximal_ideal() {
        let prod = shifted_not_strong().multiply(&SymmetricIdeal::max_power(4, 1)).unwrap();
        let want = ideal(4, &[&[1, 2, 2, 2], &[1, 1, 2, 3], &[0, 2, 2, 3], &[0, 1, 2, 4], &[0, 1, 3, 3]]);
        assert_eq!(prod, want);
        // Only a strongly shifted move leads from (0,1,2,4) to (1,1,1,4).
        assert!(prod.is_shifted());
        assert!(!prod.is_strongly_shifted());
        assert!(prod.contains(&[0, 1, 2, 4]).unwrap());
        assert!(!prod.contains(&[1, 1, 1, 4]).unwrap());
    }

    #[test]
    fn closures() {
        assert_eq!(sss(&[0, 1, 2]).gens(), &[p(&[0, 1, 2]), p(&[1, 1, 1])]);
        assert_eq!(sss(&[2, 2, 2]).gens(), &[p(&[2, 2, 2])]);
        let s = SymmetricIdeal::ss_closure(3, &[p(&[0, 2, 3])]).unwrap();
        assert!(s.is_shifted());
        assert!(!s.contains(&[1, 1, 3]).unwrap());
        assert_eq!(
            SymmetricIdeal::sss_closure_by_moves(3, &[p(&[0, 1, 3])]).unwrap(),
            sss(&[0, 1, 3])
        );
    }

    #[test]
    fn borel_generators_examples() {
        assert_eq!(sss(&[0, 1, 2]).borel_generators().unwrap(), vec![p(&[0, 1, 2])]);
        assert_eq!(shifted_not_strong().borel_generators(), Err(Error::NotStronglyShifted));
        // I_{5,1} ∩ I_{5,3}^{(5)}
        let a = SymmetricIdeal::veronese(5, 1).unwrap();
        let b = ideal(5, &[&[0, 0, 5, 5, 5], &[0, 1, 4, 4, 4], &[0, 2, 3, 3, 3], &[1, 1, 3, 3, 3], &[1, 2, 2, 2, 2]]);
        let i = a.intersect(&b).unwrap();
        assert_eq!(i.borel_generators().unwrap(), vec![p(&[1, 1, 3, 3, 3]), p(&[1, 2, 2, 2, 2])]);
        // with exponent 4 the intersection is principal
        let b4 = ideal(5, &[&[0, 0, 4, 4, 4], &[0, 1, 3, 3, 3], &[0, 2, 2, 2, 2], &[1, 1, 2, 2, 2]]);
        assert_eq!(a.intersect(&b4).unwrap().borel_generators().unwrap(), vec![p(&[1, 1, 2, 2, 2])]);
    }

    #[test]
    fn cross_degree_meet_needs_lift() {
        // Sss((1,1,1)) ∩ Sss((0,0,2)) = (x1x2x3)
        let i = sss(&[1, 1, 1]).intersect(&sss(&[0, 0, 2])).unwrap();
        assert_eq!(i, ideal(3, &[&[1, 1, 1]]));
        assert_eq!(i, sss(&[1, 1, 1]).intersect_general(&sss(&[0, 0, 2])).unwrap());
        assert_eq!(meet(&p(&[1, 1, 1]), &p(&[0, 0, 2])).unwrap(), p(&[0, 1, 1]));
    }

    #[test]
    fn principal_products() {
        let prod = sss(&[0, 1, 2]).multiply(&sss(&[0, 0, 1])).unwrap();
        assert_eq!(prod, sss(&[0, 1, 3]));
        let oracle = sss(&[0, 1, 2]).expand().unwrap().product(&sss(&[0, 0, 1]).expand().unwrap()).unwrap();
        assert_eq!(prod.expand().unwrap(), oracle);
        let i = shifted_not_strong();
        assert_eq!(i.intersect(&i).unwrap(), i);
    }

    #[test]
    fn saturation_examples() {
        assert!(sss(&[0, 1, 2]).saturate_veronese(1).unwrap().is_unit());
        // 𝔪 is not associated to Sss((1,2,2)), so saturating by it changes nothing
        let i = sss(&[1, 2, 2]);
        let sat = i.saturate_veronese(3).unwrap();
        assert_eq!(sat, i);
        let m = SymmetricIdeal::max_power(3, 1).expand().unwrap();
        assert_eq!(sat.expand().unwrap(), i.expand().unwrap().saturation(&m).unwrap());
        let s2 = sss(&[0, 1, 2]).saturate_veronese(2).unwrap();
        assert!(s2.is_unit());
        let v = SymmetricIdeal::veronese(3, 2).unwrap().expand().unwrap();
        assert!(sss(&[0, 1, 2]).expand().unwrap().saturation(&v).unwrap().is_unit());
        assert_eq!(shifted_not_strong().saturate_veronese(2), Err(Error::NotStronglyShifted));
    }

    #[test]
    fn radical_and_height() {
        let i = sss(&[0, 1, 2]);
        assert_eq!(i.height().unwrap(), 2);
        assert_eq!(i.radical().unwrap(), ideal(3, &[&[0, 1, 1]]));
        assert_eq!(i.expand().unwrap().height().unwrap(), 2);
        assert_eq!(SymmetricIdeal::veronese(5, 3).unwrap().height().unwrap(), 3);
        assert_eq!(SymmetricIdeal::max_power(4, 1).height().unwrap(), 4);
        assert_eq!(SymmetricIdeal::zero(3).height(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn symmetrize_examples() {
        let j = MonomialIdeal::borel_closure(3, &[vec![0, 1, 2]]).unwrap();
        let s = SymmetricIdeal::symmetrize(&j).unwrap();
        assert_eq!(s, sss(&[0, 1, 2]));
        let mut inter = j.clone();
        for sigma in p(&[0, 1, 2]).orbit() {
            let permuted: Vec<Exponent> = j
                .gens()
                .iter()
                .map(|g| (0..3).map(|i| g[sigma[i] as usize]).collect())
                .collect();
            inter = inter.intersect(&MonomialIdeal::new(3, permuted).unwrap()).unwrap();
        }
        assert_eq!(s.expand().unwrap(), inter);
        let m3 = MonomialIdeal::max_power(3, 2);
        assert_eq!(SymmetricIdeal::symmetrize(&m3).unwrap(), SymmetricIdeal::max_power(3, 2));
        let v = SymmetricIdeal::veronese(3, 2).unwrap();
        let st = v.smallest_sstable().unwrap();
        assert_eq!(st, MonomialIdeal::borel_closure(3, &[vec![0, 1, 1]]).unwrap());
        assert_eq!(SymmetricIdeal::symmetrize(&st).unwrap(), v);
        // prefix maxima may exceed the generator degree of J
        let x1 = MonomialIdeal::new(3, vec![vec![1, 0, 0]]).unwrap();
        assert_eq!(SymmetricIdeal::symmetrize(&x1).unwrap(), ideal(3, &[&[1, 1, 1]]));
    }

    #[test]
    fn principal_membership_examples() {
        assert!(principal_membership(&p(&[0, 1, 2]), &[1, 1, 1]).unwrap());
        assert!(!principal_membership(&p(&[0, 1, 2]), &[0, 0, 3]).unwrap());
        assert!(principal_membership(&p(&[1, 2, 2]), &[5, 5, 5]).unwrap());
    }

    #[test]
    fn expand_counts() {
        assert_eq!(ideal(3, &[&[0, 1, 1]]).expand().unwrap().gens().len(), 3);
        assert_eq!(ideal(3, &[&[0, 0, 1]]).expand().unwrap().gens().len(), 3);
        assert_eq!(ideal(3, &[&[0, 1, 2]]).expand().unwrap().gens().len(), 6);
    }

    #[test]
    fn veronese_symbolic_square() {
        let v = SymmetricIdeal::veronese(3, 2).unwrap();
        let s = v.symbolic_power(2, SymbolicMode::Min).unwrap();
        assert_eq!(s, ideal(3, &[&[0, 2, 2], &[1, 1, 1]]));
        let o = v.expand().unwrap().symbolic_power(2, SymbolicMode::Min).unwrap();
        assert_eq!(s.expand().unwrap(), o);
    }

    #[test]
    fn spec_round_trip_and_errors() {
        let i = shifted_not_strong();
        assert_eq!(SymmetricIdeal::from_spec(&i.to_spec()).unwrap(), i);
        let bad = IdealSpec { n: 3, generators: vec![vec![0, 1, 2], vec![2, 1, 0]] };
        let err = SymmetricIdeal::from_spec(&bad).unwrap_err().to_string();
        assert!(err.contains("generators[1]") && err.contains("index 1"), "{err}");
    }

    fn small_partition(n: usize) -> impl Strategy<Value = Partition> {
        prop::collection::vec(0u32..=3, n).prop_map(|v| part_of(&v))
    }

    fn small_ideal() -> impl Strategy<Value = SymmetricIdeal> {
        (2usize..=4).prop_flat_map(|n| {
            prop::collection::vec(small_partition(n), 1..=3)
                .prop_map(move |ps| SymmetricIdeal::from_partitions(n, ps).unwrap())
        })
    }

    fn small_sssi() -> impl Strategy<Value = SymmetricIdeal> {
        (2usize..=4).prop_flat_map(|n| {
            prop::collection::vec(small_partition(n), 1..=2).prop_map(move |ps| {
                let ps: Vec<Partition> = ps.into_iter().filter(|q| !q.is_zero()).collect();
                if ps.is_empty() {
                    SymmetricIdeal::max_power(n, 1)
                } else {
                    SymmetricIdeal::sss_closure(n, &ps).unwrap()
                }
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn closure_is_strongly_shifted_and_idempotent(i in small_sssi()) {
            prop_assert!(i.is_strongly_shifted());
            prop_assert!(i.is_shifted());
            let b = i.borel_generators().unwrap();
            let again = SymmetricIdeal::sss_closure(i.n(), &b).unwrap();
            prop_assert_eq!(&again, &i);
            prop_assert_eq!(&SymmetricIdeal::sss_closure_by_moves(i.n(), &b).unwrap(), &i);
            let st = i.smallest_sstable().unwrap();
            prop_assert_eq!(&SymmetricIdeal::symmetrize(&st).unwrap(), &i);
        }

        #[test]
        fn sss_inside_borel_closure(i in small_sssi()) {
            let b = i.borel_generators().unwrap();
            let borel = i.smallest_sstable().unwrap();
            prop_assert!(i.expand().unwrap().is_subset(&borel));
            for d in 0..=b.iter().map(|x| x.degree()).max().unwrap() {
                for q in crate::partitions::all_partitions(i.n(), d).unwrap() {
                    prop_assert_eq!(i.contains(q.parts()).unwrap(), borel.contains(q.parts()));
                }
            }
        }

        #[test]
        fn arithmetic_matches_oracle(a in small_ideal(), b in small_ideal()) {
            prop_assume!(a.n() == b.n());
            let (ea, eb) = (a.expand().unwrap(), b.expand().unwrap());
            prop_assert_eq!(a.add(&b).unwrap().expand().unwrap(), ea.sum(&eb).unwrap());
            prop_assert_eq!(a.intersect(&b).unwrap().expand().unwrap(), ea.intersect(&eb).unwrap());
            prop_assert_eq!(a.multiply(&b).unwrap().expand().unwrap(), ea.product(&eb).unwrap());
        }

        #[test]
        fn fast_paths_match_general(a in small_sssi(), b in small_sssi()) {
            prop_assume!(a.n() == b.n());
            prop_assert_eq!(a.intersect(&b).unwrap(), a.intersect_general(&b).unwrap());
            prop_assert_eq!(a.multiply(&b).unwrap(), a.multiply_general(&b).unwrap());
        }

        #[test]
        fn powers_stay_strongly_shifted(i in small_sssi(), k in 1u32..=3) {
            prop_assert!(i.power(k).unwrap().is_strongly_shifted());
        }

        #[test]
        fn ass_heights_match_oracle(i in small_sssi()) {
            prop_assume!(!i.is_unit());
            let oracle: Vec<usize> = {
                let mut h: Vec<usize> = i.expand().unwrap().ass().unwrap().iter().map(|q| q.height()).collect();
                h.dedup();
                h
            };
            prop_assert_eq!(i.ass_heights().unwrap(), oracle);
        }
    }
}
