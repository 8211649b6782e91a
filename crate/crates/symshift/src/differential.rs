//! Differential checks of compressed operations against the expanded oracle.

use rand::Rng;
use serde::Serialize;

use crate::corpus;
use crate::error::Result;
use crate::oracle::{MonomialIdeal, SymbolicMode};
use crate::symideal::SymmetricIdeal;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub check: &'static str,
    pub passed: bool,
    /// Inputs, for reproducing a failure.
    pub input: String,
}

fn outcome(check: &'static str, compressed: &SymmetricIdeal, oracle: &MonomialIdeal, input: String) -> Result<Outcome> {
    Ok(Outcome { check, passed: compressed.expand()? == *oracle, input })
}

fn radical_oracle(i: &MonomialIdeal) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(i.n());
    for p in i.min_primes()? {
        acc = acc.intersect(&p.to_ideal(i.n()))?;
    }
    Ok(acc)
}

/// One random case: every operation on fresh inputs in `n` variables, output degrees at most `max_degree`.
pub fn run_case<R: Rng>(rng: &mut R, n: usize, max_degree: u32) -> Result<Vec<Outcome>> {
    let half = (max_degree / 2).max(1);
    let mut out = Vec::new();

    let a = corpus::ideal(rng, n, max_degree, 3);
    let b = corpus::ideal(rng, n, max_degree, 3);
    let (ea, eb) = (a.expand()?, b.expand()?);
    let input = format!("{a} | {b}");
    out.push(outcome("add", &a.add(&b)?, &ea.sum(&eb)?, input.clone())?);
    out.push(outcome("intersect", &a.intersect(&b)?, &ea.intersect(&eb)?, input)?);

    let s = corpus::sssi(rng, n, max_degree, 2);
    let t = corpus::sssi(rng, n, max_degree, 2);
    out.push(outcome("intersect-sssi", &s.intersect(&t)?, &s.expand()?.intersect(&t.expand()?)?, format!("{s} | {t}"))?);

    let a = corpus::ideal(rng, n, half, 2);
    let b = corpus::ideal(rng, n, half, 2);
    out.push(outcome("multiply", &a.multiply(&b)?, &a.expand()?.product(&b.expand()?)?, format!("{a} | {b}"))?);
    let s = corpus::sssi(rng, n, half, 2);
    let t = corpus::sssi(rng, n, half, 2);
    out.push(outcome("multiply-sssi", &s.multiply(&t)?, &s.expand()?.product(&t.expand()?)?, format!("{s} | {t}"))?);

    let a = corpus::ideal(rng, n, half, 2);
    out.push(outcome("power", &a.power(2)?, &a.expand()?.power(2)?, format!("{a}"))?);

    let s = corpus::sssi(rng, n, max_degree, 2);
    let c = rng.gen_range(1..=n);
    let v = SymmetricIdeal::veronese(n, c)?.expand()?;
    out.push(outcome("saturate", &s.saturate_veronese(c)?, &s.expand()?.saturation(&v)?, format!("{s} c={c}"))?);

    let a = corpus::ideal(rng, n, max_degree, 3);
    out.push(outcome("radical", &a.radical()?, &radical_oracle(&a.expand()?)?, format!("{a}"))?);

    let s = corpus::sssi(rng, n, half, 2);
    let es = s.expand()?;
    for (check, mode) in [("symbolic-min", SymbolicMode::Min), ("symbolic-ass", SymbolicMode::Ass)] {
        out.push(outcome(check, &s.symbolic_power(2, mode)?, &es.symbolic_power(2, mode)?, format!("{s}"))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_pass() {
        let mut rng = corpus::rng(3);
        for _ in 0..5 {
            for o in run_case(&mut rng, 3, 4).unwrap() {
                assert!(o.passed, "{o:?}");
            }
        }
    }
}
