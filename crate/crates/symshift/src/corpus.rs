//! Seeded random ideals for property suites and `oracle-verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::partitions::{part_of, Partition};
use crate::symideal::SymmetricIdeal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A partition of exactly `d` into `n` parts, with units dropped into uniform slots.
pub fn partition_of_degree<R: Rng>(rng: &mut R, n: usize, d: u32) -> Partition {
    let mut v = vec![0u32; n];
    for _ in 0..d {
        v[rng.gen_range(0..n)] += 1;
    }
    part_of(&v)
}

/// A nonzero partition of degree `1..=max_degree`.
pub fn partition<R: Rng>(rng: &mut R, n: usize, max_degree: u32) -> Partition {
    let d = rng.gen_range(1..=max_degree.max(1));
    partition_of_degree(rng, n, d)
}

/// Arbitrary symmetric ideal with up to `max_gens` partition generators.
pub fn ideal<R: Rng>(rng: &mut R, n: usize, max_degree: u32, max_gens: usize) -> SymmetricIdeal {
    let k = rng.gen_range(1..=max_gens.max(1));
    let ps = (0..k).map(|_| partition(rng, n, max_degree)).collect();
    SymmetricIdeal::from_partitions(n, ps).expect("dimensions agree")
}

/// Symmetric strongly shifted ideal with up to `max_borel` Borel generators.
pub fn sssi<R: Rng>(rng: &mut R, n: usize, max_degree: u32, max_borel: usize) -> SymmetricIdeal {
    let k = rng.gen_range(1..=max_borel.max(1));
    let ps: Vec<Partition> = (0..k).map(|_| partition(rng, n, max_degree)).collect();
    SymmetricIdeal::sss_closure(n, &ps).expect("small closure")
}

/// Symmetric shifted ideal generated by shifted moves.
pub fn ssi<R: Rng>(rng: &mut R, n: usize, max_degree: u32, max_gens: usize) -> SymmetricIdeal {
    let k = rng.gen_range(1..=max_gens.max(1));
    let ps: Vec<Partition> = (0..k).map(|_| partition(rng, n, max_degree)).collect();
    SymmetricIdeal::ss_closure(n, &ps).expect("small closure")
}

/// Equigenerated sssi of degree `d` with up to `max_borel` Borel generators.
pub fn equigenerated_sssi<R: Rng>(rng: &mut R, n: usize, d: u32, max_borel: usize) -> SymmetricIdeal {
    let k = rng.gen_range(1..=max_borel.max(1));
    let ps: Vec<Partition> = (0..k).map(|_| partition_of_degree(rng, n, d)).collect();
    SymmetricIdeal::sss_closure(n, &ps).expect("small closure")
}
