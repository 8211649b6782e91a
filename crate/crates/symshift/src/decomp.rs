//! Primary decompositions of principal Borel ideals `Sss({λ})^k` into
//! symbolic powers of squarefree Veronese ideals.

use std::collections::HashSet;

use serde::Serialize;

use crate::budget;
use crate::error::{check_dim, Error, Result};
use crate::partitions::{part_of, Partition};
use crate::symideal::{principal_membership, SymmetricIdeal};

/// `I_{n,j}^{(m)}`: monomials whose `j` smallest exponents sum to at least `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct VeroneseSymbolic {
    pub n: usize,
    pub j: usize,
    pub m: u64,
}

impl VeroneseSymbolic {
    pub fn new(n: usize, j: usize, m: u64) -> Result<Self> {
        if j < 1 || j > n {
            return Err(Error::OutOfRange { index: j, max: n });
        }
        Ok(VeroneseSymbolic { n, j, m })
    }

    pub fn contains(&self, e: &[u32]) -> Result<bool> {
        check_dim(self.n, e.len())?;
        Ok(part_of(e).prefix_sum(self.j) >= self.m)
    }

    /// Partitions with `Σ_{i≤j} μ_i = m` and `μ_i = μ_j` for `i > j`.
    pub fn generators(&self) -> Result<Vec<Partition>> {
        let m = u32::try_from(self.m).map_err(|_| Error::InvalidArgument("exponent too large".into()))?;
        let cap = budget::limits().partitions;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.n);
        fill(self.j, m, 0, &mut cur, &mut out, self.n, cap)?;
        SymmetricIdeal::from_partitions(self.n, out).map(|i| i.gens().to_vec())
    }

    pub fn to_ideal(&self) -> Result<SymmetricIdeal> {
        SymmetricIdeal::from_partitions(self.n, self.generators()?)
    }
}

fn fill(
    left: usize,
    rem: u32,
    lo: u32,
    cur: &mut Vec<u32>,
    out: &mut Vec<Partition>,
    n: usize,
    cap: usize,
) -> Result<()> {
    if left == 0 {
        if rem == 0 {
            let mut v = cur.clone();
            let last = v.last().copied().unwrap_or(0);
            v.resize(n, last);
            out.push(Partition::from_sorted(v));
            if out.len() > cap {
                return Err(Error::Budget { what: "symbolic generators", limit: cap });
            }
        }
        return Ok(());
    }
    // remaining `left` parts are each ≥ lo
    let max = rem / left as u32;
    for x in lo..=max {
        if left == 1 && x != rem {
            continue;
        }
        cur.push(x);
        fill(left - 1, rem - x, x, cur, out, n, cap)?;
        cur.pop();
    }
    Ok(())
}

/// Which argument decided a component's status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    BelowMin,
    MinPrime,
    Jump,
    EqualsFirst,
    Ratio,
    Witness,
    ExactSearch,
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub j: usize,
    pub exponent: u64,
    pub redundant: bool,
    pub rule: Rule,
}

impl Component {
    pub fn veronese(&self, n: usize) -> VeroneseSymbolic {
        VeroneseSymbolic { n, j: self.j, m: self.exponent }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimaryDecomposition {
    pub lambda: Partition,
    pub k: u32,
    pub components: Vec<Component>,
}

impl PrimaryDecomposition {
    pub fn kept(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| !c.redundant)
    }

    pub fn heights(&self) -> Vec<usize> {
        self.kept().map(|c| c.j).collect()
    }

    /// Intersection of the chosen components in compressed form.
    pub fn intersection(&self, only_kept: bool) -> Result<SymmetricIdeal> {
        let n = self.lambda.n();
        let mut acc = SymmetricIdeal::unit(n);
        for c in &self.components {
            if only_kept && c.redundant {
                continue;
            }
            acc = acc.intersect(&c.veronese(n).to_ideal()?)?;
        }
        Ok(acc)
    }

    /// Checks that both the full and the irredundant intersections equal `Sss({kλ})`.
    pub fn verify(&self) -> Result<bool> {
        let target = SymmetricIdeal::sss_closure(self.lambda.n(), &[self.lambda.scale(self.k)])?;
        Ok(self.intersection(false)? == target && self.intersection(true)? == target)
    }
}

fn check_args(lam: &Partition, k: u32) -> Result<()> {
    if lam.is_zero() {
        return Err(Error::ZeroPartition);
    }
    if k < 1 {
        return Err(Error::InvalidArgument("power must be at least 1".into()));
    }
    Ok(())
}

/// `Sss({λ})^k = ∩_j I_{n,j}^{(k a_j)}` with `a_j = λ_1 + … + λ_j`; nothing is marked redundant.
pub fn principal_decomposition(lam: &Partition, k: u32) -> Result<PrimaryDecomposition> {
    check_args(lam, k)?;
    let components = (1..=lam.n())
        .map(|j| Component { j, exponent: k as u64 * lam.prefix_sum(j), redundant: false, rule: Rule::Unclassified })
        .collect();
    Ok(PrimaryDecomposition { lambda: lam.clone(), k, components })
}

/// Marks each component of [`principal_decomposition`] redundant or not.
pub fn irredundant_components(lam: &Partition, k: u32) -> Result<PrimaryDecomposition> {
    let mut dec = principal_decomposition(lam, k)?;
    let jp = lam.min_idx()?;
    let l = |i: usize| lam.part(i) as u64;
    let kk = k as u64;
    for c in &mut dec.components {
        let j = c.j;
        let (redundant, rule) = if j < jp {
            (true, Rule::BelowMin)
        } else if j == jp {
            (false, Rule::MinPrime)
        } else if l(j - 1) < l(j) {
            (false, Rule::Jump)
        } else if l(j) == l(1) {
            (true, Rule::EqualsFirst)
        } else {
            let s = kk * lam.prefix_sum(j - 1);
            let (q, r) = (s / (j as u64 - 1), s % (j as u64 - 1));
            let ratio = l(j) * kk > q + j as u64 - r;
            if kk > (j * (j - 1)) as u64 || ratio {
                (false, Rule::Ratio)
            } else if witness_separates(lam, k, j) {
                (false, Rule::Witness)
            } else {
                (!separating_partition_exists(lam, k, j), Rule::ExactSearch)
            }
        };
        c.redundant = redundant;
        c.rule = rule;
    }
    Ok(dec)
}

/// The witness `((q+1)^j, N^{n-j})` lies in every component except possibly `j`.
fn witness_separates(lam: &Partition, k: u32, j: usize) -> bool {
    let kk = k as u64;
    let s = kk * lam.prefix_sum(j - 1);
    let q = s / (j as u64 - 1);
    // μ lies in every component i < j and misses component j
    (1..j).all(|i| (q + 1) * i as u64 >= kk * lam.prefix_sum(i)) && (j as u64) * (q + 1) < kk * lam.prefix_sum(j)
}

/// Whether some nondecreasing `μ_1 ≤ … ≤ μ_j` has prefix sums `≥ k a_i` for `i < j`
/// and `< k a_j` at `j`; later entries can then be taken arbitrarily large.
fn separating_partition_exists(lam: &Partition, k: u32, j: usize) -> bool {
    let kk = k as u64;
    let target: Vec<u64> = (1..=j).map(|i| kk * lam.prefix_sum(i)).collect();
    let cap = target[j - 1];
    if cap == 0 {
        return false;
    }
    // states (last part, prefix sum) with prefix sum < cap
    let mut states: HashSet<(u64, u64)> = HashSet::new();
    for x in 0..cap {
        if j == 1 || x >= target[0] {
            states.insert((x, x));
        }
    }
    for (i, t) in target.iter().enumerate().skip(1) {
        let last = i == j - 1;
        let mut next = HashSet::new();
        for &(m, s) in &states {
            let mut x = m;
            while s + x < cap {
                if last || s + x >= *t {
                    next.insert((x, s + x));
                }
                x += 1;
            }
        }
        states = next;
    }
    !states.is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableAss {
    pub heights: Vec<usize>,
    /// `astab = dstab = 1` and `I^k = I^{(k)_Ass}` for all `k`.
    pub certified: bool,
    pub astab_bound: usize,
    pub dstab_bound: usize,
}

/// Stable associated primes of `Sss({λ})` and the stabilization bounds.
pub fn stable_ass(lam: &Partition) -> Result<StableAss> {
    if lam.is_zero() {
        return Err(Error::ZeroPartition);
    }
    let n = lam.n();
    let jp = lam.min_idx()?;
    let l = |i: usize| lam.part(i);
    let heights: Vec<usize> = if jp > 1 {
        (jp..=n).collect()
    } else {
        (1..=n).filter(|&j| j == 1 || l(j) != l(1)).collect()
    };
    let s = (2..=n).filter(|&j| l(1) < l(j - 1) && l(j - 1) == l(j)).max();
    let (certified, bound) = match s {
        None => (true, 1),
        Some(s) => (false, (n - 1).min(s * (s - 1) + 1)),
    };
    Ok(StableAss { heights, certified, astab_bound: bound, dstab_bound: bound })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Containment {
    pub sufficient: bool,
    pub exact: bool,
}

/// Whether `I^{(m)_Min} ⊆ I^k` for `I = Sss({λ})`.
pub fn containment_check(lam: &Partition, m: u32, k: u32) -> Result<Containment> {
    check_args(lam, k)?;
    if m < 1 {
        return Err(Error::InvalidArgument("symbolic exponent must be at least 1".into()));
    }
    let c = lam.min_idx()?;
    let lc = lam.part(c) as u64;
    let sufficient = m as u64 * lc >= lam.degree() * k as u64;
    let sym = VeroneseSymbolic::new(lam.n(), c, lc * m as u64)?;
    let target = lam.scale(k);
    let mut exact = true;
    for g in sym.generators()? {
        if !principal_membership(&target, g.parts())? {
            exact = false;
            break;
        }
    }
    if sufficient && !exact {
        return Err(Error::Verification(format!("ratio test passed but {lam}^({m}) is not contained in the {k}-th power")));
    }
    Ok(Containment { sufficient, exact })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PAdic {
    pub closed: bool,
    /// `(j, v_j)` for each associated height `j`.
    pub certificate: Vec<(usize, u64)>,
}

/// Whether `I = ∩_{j ∈ Ass heights} I_{n,j}^{(v_j)}` with `v_j` the least `j`-prefix sum over `Λ(I)`.
pub fn p_adically_closed(i: &SymmetricIdeal) -> Result<PAdic> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let heights = if i.is_strongly_shifted() {
        i.ass_heights()?
    } else {
        let mut h: Vec<usize> = i.expand()?.ass()?.iter().map(|p| p.height()).collect();
        h.dedup();
        h
    };
    let n = i.n();
    let mut acc = SymmetricIdeal::unit(n);
    let mut certificate = Vec::new();
    for j in heights {
        let v = i.gens().iter().map(|l| l.prefix_sum(j)).min().unwrap_or(0);
        certificate.push((j, v));
        acc = acc.intersect(&VeroneseSymbolic::new(n, j, v)?.to_ideal()?)?;
    }
    Ok(PAdic { closed: acc == *i, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{MonomialIdeal, SymbolicMode};
    use crate::partitions::all_partitions;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn kept(lam: &[u32], k: u32) -> Vec<usize> {
        irredundant_components(&p(lam), k).unwrap().heights()
    }

    fn oracle_component(v: &VeroneseSymbolic) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(v.n);
        let mut support = vec![0; v.n];
        support[v.n - v.j..].fill(1);
        for s in Partition::new(support).unwrap().orbit() {
            let prime = MonomialIdeal::new(v.n, (0..v.n).filter(|&i| s[i] == 1).map(|i| {
                let mut e = vec![0; v.n];
                e[i] = 1;
                e
            }).collect()).unwrap();
            acc = acc.intersect(&prime.power(v.m as u32).unwrap()).unwrap();
        }
        acc
    }

    #[test]
    fn veronese_symbolic_generators() {
        let g = VeroneseSymbolic::new(3, 2, 2).unwrap().generators().unwrap();
        assert_eq!(g, vec![p(&[0, 2, 2]), p(&[1, 1, 1])]);
        assert_eq!(VeroneseSymbolic::new(4, 1, 3).unwrap().generators().unwrap(), vec![p(&[3, 3, 3, 3])]);
        assert!(VeroneseSymbolic::new(3, 2, 0).unwrap().to_ideal().unwrap().is_unit());
        for (n, j, m) in [(3, 2, 3), (4, 2, 2), (4, 3, 3), (3, 3, 2)] {
            let v = VeroneseSymbolic::new(n, j, m).unwrap();
            assert_eq!(v.to_ideal().unwrap().expand().unwrap(), oracle_component(&v), "{n} {j} {m}");
        }
        assert!(VeroneseSymbolic::new(5, 4, 9).unwrap().contains(&[1, 2, 2, 4, 4]).unwrap());
        assert!(!VeroneseSymbolic::new(5, 4, 10).unwrap().contains(&[4, 2, 2, 1, 4]).unwrap());
    }

    #[test]
    fn compressed_symbolic_power_of_veronese() {
        for (n, c, m) in [(3, 2, 2), (4, 2, 3), (4, 3, 2), (5, 3, 4)] {
            let v = SymmetricIdeal::veronese(n, c).unwrap();
            let s = v.symbolic_power(m as u32, SymbolicMode::Min).unwrap();
            assert_eq!(s, VeroneseSymbolic::new(n, c, m).unwrap().to_ideal().unwrap());
        }
    }

    #[test]
    fn principal_exponents() {
        let d = principal_decomposition(&p(&[1, 2, 2, 4, 4]), 1).unwrap();
        let e: Vec<u64> = d.components.iter().map(|c| c.exponent).collect();
        assert_eq!(e, vec![1, 3, 5, 9, 13]);
        assert!(d.verify().unwrap());
        let d = principal_decomposition(&p(&[0, 1, 2]), 2).unwrap();
        assert_eq!(d.components.iter().map(|c| c.exponent).collect::<Vec<_>>(), vec![0, 2, 6]);
        assert!(d.verify().unwrap());
        assert_eq!(kept(&[0, 0, 0, 3], 1), vec![4]);
    }

    #[test]
    fn irredundant_example_powers() {
        assert_eq!(kept(&[1, 2, 2, 4, 4], 1), vec![1, 2, 4, 5]);
        assert_eq!(kept(&[1, 2, 2, 4, 4], 2), vec![1, 2, 3, 4, 5]);
        assert_eq!(kept(&[2, 2, 2, 2], 3), vec![1]);
        assert!(irredundant_components(&p(&[1, 2, 2, 4, 4]), 1).unwrap().verify().unwrap());
    }

    #[test]
    fn stable_ass_cases() {
        let s = stable_ass(&p(&[1, 2, 2, 4, 4])).unwrap();
        assert_eq!(s.heights, vec![1, 2, 3, 4, 5]);
        assert!(!s.certified);
        assert_eq!(s.astab_bound, 4);
        let s = stable_ass(&p(&[0, 1, 2])).unwrap();
        assert!(s.certified);
        assert_eq!(s.heights, vec![2, 3]);
        let s = stable_ass(&p(&[3, 3, 3])).unwrap();
        assert_eq!((s.heights, s.certified), (vec![1], true));
        assert!(stable_ass(&p(&[1, 1, 2, 3])).unwrap().certified);
    }

    #[test]
    fn containment_examples() {
        assert_eq!(containment_check(&p(&[1, 2, 2]), 5, 1).unwrap(), Containment { sufficient: true, exact: true });
        let c = containment_check(&p(&[1, 2, 2]), 1, 1).unwrap();
        assert!(!c.sufficient);
        let i = SymmetricIdeal::sss_closure(3, &[p(&[1, 2, 2])]).unwrap();
        let o = i.expand().unwrap();
        let sym = o.symbolic_power(1, SymbolicMode::Min).unwrap();
        assert_eq!(c.exact, sym.is_subset(&o));
        // with j' = 1 the minimal symbolic power is a power of (x_1⋯x_n)
        for k in 1..=3 {
            assert!(!containment_check(&p(&[1, 2, 3]), k, k).unwrap().exact);
            assert!(containment_check(&p(&[2, 2, 2]), k, k).unwrap().exact);
            let i = SymmetricIdeal::sss_closure(3, &[p(&[1, 2, 3])]).unwrap();
            assert_eq!(i.symbolic_power(k, SymbolicMode::Ass).unwrap(), i.power(k).unwrap());
        }
    }

    #[test]
    fn p_adic_examples() {
        let a = SymmetricIdeal::veronese(5, 1).unwrap();
        let b = VeroneseSymbolic::new(5, 3, 4).unwrap().to_ideal().unwrap();
        let i = a.intersect(&b).unwrap();
        let r = p_adically_closed(&i).unwrap();
        assert!(r.closed);
        assert_eq!(r.certificate, vec![(1, 1), (3, 4)]);
        assert_eq!(i.borel_generators().unwrap(), vec![p(&[1, 1, 2, 2, 2])]);
        let b5 = VeroneseSymbolic::new(5, 3, 5).unwrap().to_ideal().unwrap();
        let i5 = a.intersect(&b5).unwrap();
        assert_eq!(i5.borel_generators().unwrap(), vec![p(&[1, 1, 3, 3, 3]), p(&[1, 2, 2, 2, 2])]);
        assert!(p_adically_closed(&i5).unwrap().closed);
        for lam in [&[1u32, 2, 2, 4][..], &[0, 1, 2], &[0, 2, 2, 3]] {
            let i = SymmetricIdeal::sss_closure(lam.len(), &[p(lam)]).unwrap();
            assert!(p_adically_closed(&i).unwrap().closed, "{lam:?}");
        }
        let ssi = SymmetricIdeal::from_partitions(3, vec![p(&[1, 2, 2]), p(&[0, 2, 3])]).unwrap();
        assert!(!p_adically_closed(&ssi).unwrap().closed);
    }

    fn small_lambda() -> impl Strategy<Value = Partition> {
        (2usize..=4, 1u64..=6).prop_flat_map(|(n, d)| {
            let all = all_partitions(n, d).unwrap();
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn decomposition_matches_power(lam in small_lambda(), k in 1u32..=3) {
            let d = irredundant_components(&lam, k).unwrap();
            prop_assert!(d.verify().unwrap());
            let pw = SymmetricIdeal::sss_closure(lam.n(), std::slice::from_ref(&lam)).unwrap().power(k).unwrap();
            let mut oracle: Vec<usize> = pw.expand().unwrap().ass().unwrap().iter().map(|q| q.height()).collect();
            oracle.dedup();
            prop_assert_eq!(d.heights(), oracle.clone());
            prop_assert_eq!(pw.ass_heights().unwrap(), oracle);
        }

        #[test]
        fn each_kept_component_is_needed(lam in small_lambda(), k in 1u32..=2) {
            let d = irredundant_components(&lam, k).unwrap();
            let target = d.intersection(true).unwrap();
            for c in d.kept() {
                let mut without = d.clone();
                without.components.retain(|x| x.j != c.j);
                prop_assert_ne!(without.intersection(true).unwrap(), target.clone());
            }
        }

        #[test]
        fn ass_persistence_and_stable_set(lam in small_lambda()) {
            let base = SymmetricIdeal::sss_closure(lam.n(), std::slice::from_ref(&lam)).unwrap();
            let st = stable_ass(&lam).unwrap();
            let mut prev: Vec<usize> = Vec::new();
            for k in 1..=4u32 {
                let h = base.power(k).unwrap().ass_heights().unwrap();
                prop_assert!(prev.iter().all(|x| h.contains(x)));
                if k as usize >= st.astab_bound {
                    prop_assert_eq!(&h, &st.heights);
                }
                prev = h;
            }
        }

        #[test]
        fn ratio_test_implies_containment(lam in small_lambda(), m in 1u32..=6, k in 1u32..=3) {
            let c = containment_check(&lam, m, k).unwrap();
            let i = SymmetricIdeal::sss_closure(lam.n(), std::slice::from_ref(&lam)).unwrap();
            let sym = i.symbolic_power(m, SymbolicMode::Min).unwrap();
            let pw = i.power(k).unwrap();
            let inside = sym.gens().iter().all(|g| pw.contains(g.parts()).unwrap());
            prop_assert_eq!(c.exact, inside);
        }
    }
}
