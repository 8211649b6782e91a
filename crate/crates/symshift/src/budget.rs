//! Resource caps shared by every enumeration in the crate.
//!
//! Defaults can be overridden with the `SYMSHIFT_BUDGET` environment
//! variable, either as a single integer (sets both the partition and fiber
//! caps) or as a comma list such as `partitions=2000000,expand_n=9`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of partitions produced by one enumeration.
    pub partitions: usize,
    /// Largest ambient dimension for which orbits are expanded.
    pub expand_n: usize,
    /// Maximum number of T-monomials per degree in fiber computations.
    pub fibers: usize,
    /// Maximum number of lattice cells scanned by box-based oracle routines.
    pub cells: usize,
    /// Maximum `rows + columns` of an exact LP.
    pub lp_dim: usize,
    /// Maximum number of generators held by an oracle ideal.
    pub generators: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            partitions: 1_000_000,
            expand_n: 8,
            fibers: 200_000,
            cells: 8_000_000,
            lp_dim: 4096,
            generators: 400_000,
        }
    }
}

impl Budget {
    pub fn parse(spec: &str) -> Result<Budget> {
        let mut b = Budget::default();
        let spec = spec.trim();
        if let Ok(v) = spec.parse::<usize>() {
            b.partitions = v;
            b.fibers = v;
            return Ok(b);
        }
        for item in spec.split(',').filter(|s| !s.trim().is_empty()) {
            let (key, val) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("budget entry `{item}`")))?;
            let val: usize = val
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("budget value `{val}`")))?;
            match key.trim() {
                "partitions" => b.partitions = val,
                "expand_n" => b.expand_n = val,
                "fibers" => b.fibers = val,
                "cells" => b.cells = val,
                "lp_dim" => b.lp_dim = val,
                "generators" => b.generators = val,
                other => return Err(Error::InvalidArgument(format!("unknown budget key `{other}`"))),
            }
        }
        Ok(b)
    }
}

/// The process-wide budget, read once from the environment.
pub fn limits() -> &'static Budget {
    static LIMITS: OnceLock<Budget> = OnceLock::new();
    LIMITS.get_or_init(|| match std::env::var("SYMSHIFT_BUDGET") {
        Ok(s) => Budget::parse(&s).unwrap_or_default(),
        Err(_) => Budget::default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(Budget::parse("5").unwrap().partitions, 5);
        let b = Budget::parse("expand_n=9, cells=10").unwrap();
        assert_eq!((b.expand_n, b.cells), (9, 10));
        assert!(Budget::parse("bogus=1").is_err());
    }
}
