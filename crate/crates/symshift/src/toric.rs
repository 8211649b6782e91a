//! Permutohedra, Ehrhart counts and degree-by-degree certificates for the
//! defining equations of fiber cones and Rees algebras.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::budget;
use crate::error::{check_dim, Error, Result};
use crate::invariants::cu_size;
use crate::oracle::{monomial_string, MonomialIdeal};
use crate::partitions::{enumerate_dominated, part_of, Exponent, Partition};
use crate::symideal::SymmetricIdeal;

fn nonzero(lam: &Partition) -> Result<()> {
    if lam.is_zero() {
        Err(Error::ZeroPartition)
    } else {
        Ok(())
    }
}

/// The `S_n`-orbit of `λ`, sorted.
pub fn permutohedron_vertices(lam: &Partition) -> Result<Vec<Exponent>> {
    nonzero(lam)?;
    Ok(lam.orbit())
}

/// Integer point membership in `P(λ)`: same coordinate sum and every sorted suffix sum bounded.
pub fn permutohedron_contains(lam: &Partition, point: &[u32]) -> Result<bool> {
    check_dim(lam.n(), point.len())?;
    let mu = part_of(point);
    let n = lam.n();
    Ok(mu.degree() == lam.degree() && (1..=n).all(|k| mu.suffix_sum(k) <= lam.suffix_sum(k)))
}

/// Integer points of `k·P(λ)`.
pub fn lattice_points(lam: &Partition, k: u32) -> Result<Vec<Exponent>> {
    if k == 0 {
        return Ok(vec![vec![0; lam.n()]]);
    }
    let mut pts: Vec<Exponent> = enumerate_dominated(&lam.scale(k))?.iter().flat_map(Partition::orbit).collect();
    pts.sort();
    Ok(pts)
}

/// `|k·P(λ) ∩ Z^n|` without listing the points.
pub fn lattice_count(lam: &Partition, k: u32) -> Result<u64> {
    if k == 0 {
        return Ok(1);
    }
    Ok(enumerate_dominated(&lam.scale(k))?.iter().map(Partition::orbit_size).sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ehrhart {
    /// Coefficients of `t^0, t^1, …`.
    #[serde(serialize_with = "crate::ser::display_seq")]
    pub coefficients: Vec<BigRational>,
    /// Dilations checked beyond the interpolation nodes.
    pub validated: Vec<u32>,
}

impl Ehrhart {
    pub fn eval(&self, k: u32) -> BigRational {
        let t = BigRational::from_integer(k.into());
        self.coefficients.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
    }
}

fn poly_mul_linear(p: &[BigRational], root: &BigRational) -> Vec<BigRational> {
    // p(t) · (t − root)
    let mut out = vec![BigRational::zero(); p.len() + 1];
    for (i, c) in p.iter().enumerate() {
        out[i + 1] += c;
        out[i] -= c * root;
    }
    out
}

/// Lagrange interpolation through `(x_i, y_i)`.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let mut coeffs = vec![BigRational::zero(); xs.len()];
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i != j {
                basis = poly_mul_linear(&basis, xj);
                denom *= xi - xj;
            }
        }
        let scale = yi / denom;
        for (c, b) in coeffs.iter_mut().zip(basis) {
            *c += b * &scale;
        }
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// Ehrhart polynomial of `P(λ)` from counts at `k = 0..n−1`, validated at `k = n..=kmax`.
pub fn ehrhart(lam: &Partition, kmax: u32) -> Result<Ehrhart> {
    nonzero(lam)?;
    let n = lam.n() as u32;
    if kmax < n {
        return Err(Error::InvalidArgument(format!("kmax must be at least n = {n}")));
    }
    let xs: Vec<BigRational> = (0..n).map(|k| BigRational::from_integer(k.into())).collect();
    let ys: Vec<BigRational> = (0..n)
        .map(|k| lattice_count(lam, k).map(|c| BigRational::from_integer(c.into())))
        .collect::<Result<_>>()?;
    let e = Ehrhart { coefficients: interpolate(&xs, &ys), validated: (n..=kmax).collect() };
    for k in n..=kmax {
        let got = BigRational::from_integer(lattice_count(lam, k)?.into());
        if e.eval(k) != got {
            return Err(Error::Verification(format!("Ehrhart interpolation disagrees with the count at k = {k}")));
        }
    }
    Ok(e)
}

/// Leading coefficient of the Ehrhart polynomial times `(n−1)!`; zero for a point.
pub fn normalized_volume(lam: &Partition) -> Result<BigRational> {
    let n = lam.n();
    let e = ehrhart(lam, n as u32)?;
    let lead = e.coefficients.get(n - 1).cloned().unwrap_or_else(BigRational::zero);
    let fact: BigInt = (1..n).map(BigInt::from).product();
    Ok(lead * BigRational::from_integer(fact))
}

/// Each point of `k·P(λ)` is a sum of `k` points of `P(λ)`, for `k ≤ kmax`.
pub fn is_normal_up_to(lam: &Partition, kmax: u32) -> Result<bool> {
    let i = SymmetricIdeal::sss_closure(lam.n(), std::slice::from_ref(lam))?;
    for k in 1..=kmax {
        if fiber_hilbert(&i, k)? != lattice_count(lam, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The orbit ideal `L(λ) = (σ(x^λ))`.
pub fn minimal_monomial_reduction(lam: &Partition) -> Result<MonomialIdeal> {
    nonzero(lam)?;
    MonomialIdeal::new(lam.n(), lam.orbit())
}

/// `L(λ) ⊆ Sss({λ})` and every generator of `Sss({λ})` is integral over `L(λ)`.
pub fn reduction_closure_check(lam: &Partition) -> Result<bool> {
    let l = minimal_monomial_reduction(lam)?;
    let full = SymmetricIdeal::sss_closure(lam.n(), std::slice::from_ref(lam))?.expand()?;
    if !l.is_subset(&full) {
        return Ok(false);
    }
    for g in full.gens() {
        if !l.integral_closure_contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimal generators in a fixed order; `T_i ↦ targets[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialMap {
    pub n: usize,
    pub targets: Vec<Exponent>,
    #[serde(skip)]
    index: HashMap<Exponent, usize>,
}

impl MonomialMap {
    pub fn new(i: &SymmetricIdeal) -> Result<Self> {
        if i.is_zero() || !i.is_equigenerated() {
            return Err(Error::NotEquigenerated);
        }
        let mut targets = i.expand()?.gens().to_vec();
        targets.sort();
        let index = targets.iter().enumerate().map(|(k, t)| (t.clone(), k)).collect();
        Ok(MonomialMap { n: i.n(), targets, index })
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn image(&self, ts: &[usize]) -> Exponent {
        let mut v = vec![0; self.n];
        for &t in ts {
            for (a, b) in v.iter_mut().zip(&self.targets[t]) {
                *a += b;
            }
        }
        v
    }

    pub fn label(&self, t: usize) -> String {
        monomial_string(&self.targets[t])
    }
}

/// `T_a T_b − T_c T_d` with `a ≤ b`, `c ≤ d` and `(a, b) < (c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Quadric {
    pub lhs: (usize, usize),
    pub rhs: (usize, usize),
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Symmetric exchange relations of an equigenerated ideal, checked to lie in the kernel.
pub fn exchange_quadrics(map: &MonomialMap) -> Result<Vec<Quadric>> {
    let n = map.n;
    fiber_guard(binom_u128(map.targets.len() + 1, 2))?;
    let mut out = BTreeSet::new();
    for (r, ur) in map.targets.iter().enumerate() {
        for (s, us) in map.targets.iter().enumerate() {
            for i in (0..n).filter(|&i| ur[i] > us[i]) {
                for j in (0..n).filter(|&j| ur[j] < us[j]) {
                    let mut t = ur.clone();
                    t[j] += 1;
                    t[i] -= 1;
                    let mut w = us.clone();
                    w[i] += 1;
                    w[j] -= 1;
                    let (Some(ti), Some(wi)) = (map.index_of(&t), map.index_of(&w)) else { continue };
                    let (a, b) = (ordered(r, s), ordered(ti, wi));
                    if a == b {
                        continue;
                    }
                    if map.image(&[a.0, a.1]) != map.image(&[b.0, b.1]) {
                        return Err(Error::Verification("exchange quadric outside the toric kernel".into()));
                    }
                    out.insert(Quadric { lhs: a.min(b), rhs: a.max(b) });
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    fn components(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

fn binom_u128(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(m: usize, k: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in lo..m {
            cur.push(x);
            rec(m, k, x, cur, out);
            cur.pop();
        }
    }
    rec(m, k, 0, &mut cur, &mut out);
    out
}

fn fiber_guard(count: u128) -> Result<()> {
    let cap = budget::limits().fibers;
    if count > cap as u128 {
        Err(Error::Budget { what: "fiber enumeration", limit: cap })
    } else {
        Ok(())
    }
}

/// Degree-`k` monomials in the `T`s grouped by image, in image order.
fn fibers(map: &MonomialMap, k: usize) -> Result<BTreeMap<Exponent, Vec<Vec<usize>>>> {
    fiber_guard(binom_u128(map.targets.len() + k - 1, k))?;
    let mut f: BTreeMap<Exponent, Vec<Vec<usize>>> = BTreeMap::new();
    for ms in multisets(map.targets.len(), k) {
        f.entry(map.image(&ms)).or_default().push(ms);
    }
    Ok(f)
}

/// Replace one occurrence each of `a` and `b` (as a pair) in a sorted multiset.
fn apply_pair(ms: &[usize], from: (usize, usize), to: (usize, usize)) -> Option<Vec<usize>> {
    let mut v = ms.to_vec();
    let p = v.iter().position(|&x| x == from.0)?;
    v.remove(p);
    let q = v.iter().position(|&x| x == from.1)?;
    v.remove(q);
    v.push(to.0);
    v.push(to.1);
    v.sort_unstable();
    Some(v)
}

fn quadric_moves(quadrics: &[Quadric]) -> HashMap<(usize, usize), Vec<(usize, usize)>> {
    let mut moves: HashMap<(usize, usize), Vec<(usize, usize)>> = HashMap::new();
    for q in quadrics {
        moves.entry(q.lhs).or_default().push(q.rhs);
        moves.entry(q.rhs).or_default().push(q.lhs);
    }
    moves
}

fn pairs_of(ms: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for a in 0..ms.len() {
        for b in a + 1..ms.len() {
            out.insert((ms[a], ms[b]));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadraticReport {
    pub generators: usize,
    pub quadrics: usize,
    /// New minimal relations per degree.
    pub minimal_relation_counts: BTreeMap<usize, u64>,
    /// Whether every fiber of that degree is connected by exchange quadrics.
    pub quadric_connected: BTreeMap<usize, bool>,
    pub generated_by_quadrics_up_to: usize,
    /// First degree skipped because of the fiber budget.
    pub truncated_at: Option<usize>,
}

/// Degree-by-degree relation counts and quadric connectivity up to `kmax`.
pub fn check_quadratic_generation(i: &SymmetricIdeal, kmax: usize) -> Result<QuadraticReport> {
    let map = MonomialMap::new(i)?;
    let mut report = QuadraticReport {
        generators: map.targets.len(),
        quadrics: 0,
        minimal_relation_counts: BTreeMap::new(),
        quadric_connected: BTreeMap::new(),
        generated_by_quadrics_up_to: 1,
        truncated_at: None,
    };
    let quadrics = match exchange_quadrics(&map) {
        Ok(q) => q,
        Err(Error::Budget { .. }) if kmax >= 2 => {
            report.truncated_at = Some(2);
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.quadrics = quadrics.len();
    let moves = quadric_moves(&quadrics);
    let mut all_connected = true;
    for k in 2..=kmax {
        let fib = match fibers(&map, k) {
            Ok(f) => f,
            Err(Error::Budget { .. }) => {
                report.truncated_at = Some(k);
                break;
            }
            Err(e) => return Err(e),
        };
        let mut new_relations = 0u64;
        let mut connected = true;
        for members in fib.values().filter(|m| m.len() > 1) {
            let pos: HashMap<&Vec<usize>, usize> = members.iter().enumerate().map(|(p, m)| (m, p)).collect();
            // relations from lower degrees join monomials with a common variable
            let mut lower = UnionFind::new(members.len());
            let mut first_with: HashMap<usize, usize> = HashMap::new();
            for (p, m) in members.iter().enumerate() {
                for &t in m {
                    match first_with.get(&t) {
                        Some(&q) => lower.union(p, q),
                        None => {
                            first_with.insert(t, p);
                        }
                    }
                }
            }
            new_relations += lower.components() as u64 - 1;
            let mut quad = UnionFind::new(members.len());
            for (p, m) in members.iter().enumerate() {
                for pair in pairs_of(m) {
                    for &to in moves.get(&pair).into_iter().flatten() {
                        let next = apply_pair(m, pair, to).expect("pair occurs in multiset");
                        quad.union(p, pos[&next]);
                    }
                }
            }
            connected &= quad.components() == 1;
        }
        report.minimal_relation_counts.insert(k, new_relations);
        report.quadric_connected.insert(k, connected);
        all_connected &= connected;
        if all_connected {
            report.generated_by_quadrics_up_to = k;
        }
    }
    Ok(report)
}

/// Number of distinct images of degree-`k` monomials in the `T`s.
pub fn fiber_hilbert(i: &SymmetricIdeal, k: u32) -> Result<u64> {
    if k == 0 {
        return Ok(1);
    }
    let map = MonomialMap::new(i)?;
    let cap = budget::limits().fibers;
    let mut cur: HashSet<Exponent> = map.targets.iter().cloned().collect();
    for _ in 1..k {
        let mut next = HashSet::new();
        for a in &cur {
            for t in &map.targets {
                next.insert(a.iter().zip(t).map(|(x, y)| x + y).collect::<Exponent>());
            }
            if next.len() > cap {
                return Err(Error::Budget { what: "fiber images", limit: cap });
            }
        }
        cur = next;
    }
    Ok(cur.len() as u64)
}

/// How fiber relations are applied in [`fiber_type_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiberMoves {
    /// Only the symmetric exchange quadrics.
    Quadrics,
    /// Every relation of the fiber cone.
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberTypeReport {
    pub moves: FiberMoves,
    pub linear_relations: usize,
    /// `(d, k)` bidegrees whose fibers are all connected.
    pub certified: Vec<(usize, usize)>,
    /// `(d, k)` bidegrees with a disconnected fiber.
    pub failed: Vec<(usize, usize)>,
    pub truncated_at: Option<(usize, usize)>,
}

impl FiberTypeReport {
    pub fn ok(&self) -> bool {
        self.failed.is_empty() && self.truncated_at.is_none()
    }
}

/// `x_i T_u − x_{u_max} T_v` for `i ∈ C(u)`, `v = u x_i / x_{u_max}`.
pub fn linear_relations(map: &MonomialMap) -> Result<Vec<(usize, usize, usize, usize)>> {
    let mut out = Vec::new();
    for (ui, u) in map.targets.iter().enumerate() {
        let top = *u.iter().max().expect("nonempty");
        if top == 0 {
            continue;
        }
        let umax = u.iter().rposition(|&x| x == top).expect("max attained");
        let expected = cu_size(u, top)?;
        let mut found = 0;
        for i in 0..map.n {
            let in_c = u[i] + 1 < top || (u[i] + 1 == top && i < umax);
            if !in_c {
                continue;
            }
            found += 1;
            let mut v = u.clone();
            v[i] += 1;
            v[umax] -= 1;
            let vi = map.index_of(&v).ok_or_else(|| {
                Error::Verification(format!("{} is not a generator", monomial_string(&v)))
            })?;
            out.push((i, ui, umax, vi));
        }
        debug_assert_eq!(found, expected);
    }
    Ok(out)
}

/// Connectivity of every Rees-algebra fiber in bidegrees `(d, k)` with `d ≤ dmax`, `1 ≤ k ≤ kmax`.
pub fn fiber_type_check(i: &SymmetricIdeal, dmax: usize, kmax: usize, mode: FiberMoves) -> Result<FiberTypeReport> {
    if !i.is_strongly_shifted() {
        return Err(Error::NotStronglyShifted);
    }
    let map = MonomialMap::new(i)?;
    let n = map.n;
    let lin = linear_relations(&map)?;
    let mut by_u: HashMap<usize, Vec<(usize, usize, usize)>> = HashMap::new();
    for &(x, u, y, v) in &lin {
        by_u.entry(u).or_default().push((x, y, v));
    }
    let moves = quadric_moves(&exchange_quadrics(&map)?);
    let mut report = FiberTypeReport {
        moves: mode,
        linear_relations: lin.len(),
        certified: Vec::new(),
        failed: Vec::new(),
        truncated_at: None,
    };
    'outer: for d in 0..=dmax {
        let xs: Vec<Exponent> = crate::partitions::all_partitions(n, d as u64)?
            .iter()
            .flat_map(Partition::orbit)
            .collect();
        for k in 1..=kmax {
            if fiber_guard(xs.len() as u128 * binom_u128(map.targets.len() + k - 1, k)).is_err() {
                report.truncated_at = Some((d, k));
                break 'outer;
            }
            let ts = multisets(map.targets.len(), k);
            let mut elems: Vec<(Exponent, Vec<usize>)> = Vec::with_capacity(xs.len() * ts.len());
            for a in &xs {
                for t in &ts {
                    elems.push((a.clone(), t.clone()));
                }
            }
            let pos: HashMap<&(Exponent, Vec<usize>), usize> = elems.iter().enumerate().map(|(p, e)| (e, p)).collect();
            let mut uf = UnionFind::new(elems.len());
            let mut t_fiber_rep: HashMap<(Exponent, Exponent), usize> = HashMap::new();
            for (p, (a, t)) in elems.iter().enumerate() {
                for (idx, &u) in t.iter().enumerate() {
                    if idx > 0 && t[idx - 1] == u {
                        continue;
                    }
                    for &(x, y, v) in by_u.get(&u).into_iter().flatten() {
                        if a[x] == 0 {
                            continue;
                        }
                        let mut a2 = a.clone();
                        a2[x] -= 1;
                        a2[y] += 1;
                        let mut t2 = t.clone();
                        t2[idx] = v;
                        t2.sort_unstable();
                        uf.union(p, pos[&(a2, t2)]);
                    }
                }
                match mode {
                    FiberMoves::Quadrics => {
                        for pair in pairs_of(t) {
                            for &to in moves.get(&pair).into_iter().flatten() {
                                let t2 = apply_pair(t, pair, to).expect("pair occurs in multiset");
                                uf.union(p, pos[&(a.clone(), t2)]);
                            }
                        }
                    }
                    FiberMoves::Full => {
                        let key = (a.clone(), map.image(t));
                        match t_fiber_rep.get(&key) {
                            Some(&q) => uf.union(p, q),
                            None => {
                                t_fiber_rep.insert(key, p);
                            }
                        }
                    }
                }
            }
            let mut fiber_root: HashMap<Exponent, usize> = HashMap::new();
            let mut ok = true;
            for (p, (a, t)) in elems.iter().enumerate() {
                let mut img = map.image(t);
                for (z, b) in img.iter_mut().zip(a) {
                    *z += b;
                }
                let r = uf.find(p);
                if *fiber_root.entry(img).or_insert(r) != r {
                    ok = false;
                    break;
                }
            }
            if ok {
                report.certified.push((d, k));
            } else {
                report.failed.push((d, k));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::all_partitions;
    use crate::polymatroid::veronese_factorization;
    use crate::symideal::principal_membership;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sss(l: &[u32]) -> SymmetricIdeal {
        SymmetricIdeal::sss_closure(l.len(), &[p(l)]).unwrap()
    }

    #[test]
    fn vertices_and_points() {
        assert_eq!(permutohedron_vertices(&p(&[0, 1, 2])).unwrap().len(), 6);
        assert_eq!(permutohedron_vertices(&p(&[0, 1, 1])).unwrap().len(), 3);
        let pts = lattice_points(&p(&[0, 1, 2]), 1).unwrap();
        assert_eq!(pts.len(), 7);
        assert!(pts.contains(&vec![1, 1, 1]));
        let mut gens = sss(&[0, 1, 2]).expand().unwrap().gens().to_vec();
        gens.sort();
        assert_eq!(pts, gens);
        assert!(!permutohedron_contains(&p(&[0, 1, 2]), &[0, 0, 3]).unwrap());
    }

    #[test]
    fn ehrhart_examples() {
        assert_eq!(normalized_volume(&p(&[0, 0, 1, 1])).unwrap(), BigRational::from_integer(4.into()));
        assert!(normalized_volume(&p(&[2, 2, 2])).unwrap().is_zero());
        assert_eq!(normalized_volume(&p(&[0, 0, 1])).unwrap(), BigRational::one());
        // forests on three labelled vertices: 1, 3, 3 with 0, 1, 2 edges
        let e = ehrhart(&p(&[0, 1, 2]), 5).unwrap();
        assert_eq!(e.eval(1), BigRational::from_integer(7.into()));
        assert_eq!(normalized_volume(&p(&[0, 1, 2])).unwrap(), BigRational::from_integer(6.into()));
        assert!(ehrhart(&p(&[0, 1, 2]), 2).is_err());
    }

    #[test]
    fn normality_small() {
        for lam in [&[0u32, 1, 2][..], &[1, 1, 3], &[0, 0, 1, 2]] {
            assert!(is_normal_up_to(&p(lam), 3).unwrap(), "{lam:?}");
        }
    }

    #[test]
    fn reduction_examples() {
        let l = minimal_monomial_reduction(&p(&[0, 1, 2])).unwrap();
        assert_eq!(l.gens().len(), 6);
        assert!(!l.contains(&[1, 1, 1]));
        assert!(l.integral_closure_contains(&[1, 1, 1]).unwrap());
        assert!(reduction_closure_check(&p(&[0, 1, 2])).unwrap());
        assert_eq!(minimal_monomial_reduction(&p(&[0, 0, 1])).unwrap(), MonomialIdeal::max_power(3, 1));
        assert!(reduction_closure_check(&p(&[0, 1, 1])).unwrap());
        assert!(reduction_closure_check(&p(&[1, 2, 2, 3])).unwrap());
    }

    #[test]
    fn quadric_examples() {
        let map = MonomialMap::new(&SymmetricIdeal::veronese(3, 2).unwrap()).unwrap();
        assert!(exchange_quadrics(&map).unwrap().is_empty());
        let map = MonomialMap::new(&SymmetricIdeal::max_power(2, 1)).unwrap();
        assert!(exchange_quadrics(&map).unwrap().is_empty());
        let map = MonomialMap::new(&sss(&[0, 1, 2])).unwrap();
        let q = exchange_quadrics(&map).unwrap();
        assert!(!q.is_empty());
        for x in &q {
            assert_eq!(map.image(&[x.lhs.0, x.lhs.1]), map.image(&[x.rhs.0, x.rhs.1]));
        }
    }

    #[test]
    fn quadratic_generation_examples() {
        let r = check_quadratic_generation(&sss(&[0, 1, 2]), 3).unwrap();
        assert_eq!(r.generated_by_quadrics_up_to, 3);
        assert_eq!(r.minimal_relation_counts[&3], 0);
        let r = check_quadratic_generation(&sss(&[2, 2, 2]), 3).unwrap();
        assert_eq!(r.minimal_relation_counts.values().sum::<u64>(), 0);
        let shifted_not_strong = SymmetricIdeal::from_partitions(4, vec![p(&[1, 1, 2, 2]), p(&[0, 2, 2, 2]), p(&[0, 1, 2, 3])]).unwrap();
        let r = check_quadratic_generation(&shifted_not_strong, 3).unwrap();
        assert_eq!(r.minimal_relation_counts[&3], 28);
        assert!(!r.quadric_connected[&3]);
    }

    #[test]
    fn fiber_counts() {
        assert_eq!(fiber_hilbert(&sss(&[0, 1, 2]), 1).unwrap(), 7);
        assert_eq!(fiber_hilbert(&sss(&[0, 1, 2]), 0).unwrap(), 1);
        assert_eq!(fiber_hilbert(&sss(&[0, 1, 1]), 2).unwrap(), 6);
        assert_eq!(lattice_count(&p(&[0, 1, 1]), 2).unwrap(), 6);
    }

    #[test]
    fn fiber_type_examples() {
        let r = fiber_type_check(&SymmetricIdeal::veronese(3, 2).unwrap(), 2, 2, FiberMoves::Quadrics).unwrap();
        assert!(r.ok(), "{r:?}");
        let r = fiber_type_check(&sss(&[0, 1, 2]), 2, 3, FiberMoves::Quadrics).unwrap();
        assert!(r.ok(), "{r:?}");
        let ne = SymmetricIdeal::from_partitions(3, vec![p(&[1, 1, 1]), p(&[0, 2, 2])]).unwrap();
        assert!(fiber_type_check(&ne, 1, 1, FiberMoves::Full).is_err());
    }

    #[test]
    fn linear_relations_vanish() {
        let map = MonomialMap::new(&sss(&[0, 1, 3])).unwrap();
        for (x, u, y, v) in linear_relations(&map).unwrap() {
            let mut l = map.targets[u].clone();
            l[x] += 1;
            let mut r = map.targets[v].clone();
            r[y] += 1;
            assert_eq!(l, r);
        }
    }

    fn principal_lambda() -> impl Strategy<Value = Partition> {
        (2usize..=4, 1u64..=5).prop_flat_map(|(n, d)| {
            let all = all_partitions(n, d).unwrap();
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn rado_membership_agree(lam in principal_lambda()) {
            let i = SymmetricIdeal::sss_closure(lam.n(), std::slice::from_ref(&lam)).unwrap();
            let d = lam.degree();
            for q in all_partitions(lam.n(), d).unwrap() {
                for pt in q.orbit() {
                    let a = permutohedron_contains(&lam, &pt).unwrap();
                    prop_assert_eq!(a, principal_membership(&lam, &pt).unwrap());
                    prop_assert_eq!(a, i.contains(&pt).unwrap());
                }
            }
        }

        #[test]
        fn minkowski_matches_factorization(lam in principal_lambda()) {
            let n = lam.n();
            let mut sums: BTreeSet<Exponent> = [vec![0; n]].into_iter().collect();
            for (c, e) in veronese_factorization(&lam).unwrap() {
                for _ in 0..e {
                    let pts = lattice_points(&Partition::veronese(n, c), 1).unwrap();
                    sums = sums.iter().flat_map(|s| pts.iter().map(move |q| s.iter().zip(q).map(|(a, b)| a + b).collect())).collect();
                }
            }
            prop_assert_eq!(sums.into_iter().collect::<Vec<_>>(), lattice_points(&lam, 1).unwrap());
        }

        #[test]
        fn fiber_hilbert_is_lattice_count(lam in principal_lambda(), k in 1u32..=3) {
            let i = SymmetricIdeal::sss_closure(lam.n(), std::slice::from_ref(&lam)).unwrap();
            prop_assert_eq!(fiber_hilbert(&i, k).unwrap(), lattice_count(&lam, k).unwrap());
        }
    }
}
