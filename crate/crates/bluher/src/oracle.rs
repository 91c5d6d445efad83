//! Ground truth by exhaustion: root enumeration, field-wide censuses, and
//! solver-vs-oracle comparison reports.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elt, FieldCtx};
use crate::sequence::Instance;
use crate::solver;

/// Largest field brute_roots will sweep.
pub const MAX_BRUTE: u64 = 1 << 16;
/// Largest field census will sweep.
pub const MAX_CENSUS: u64 = 1 << 14;

/// Every root of x^(q+1) + x + a found by trying all of GF(Q); sorted by
/// encoding because the sweep is in encoding order.
pub fn brute_roots(inst: &Instance) -> Result<Vec<Elt>> {
    let ctx = inst.ctx();
    if ctx.size() > MAX_BRUTE {
        return Err(Error::FieldTooLarge(format!(
            "brute-force root search is capped at {MAX_BRUTE} elements"
        )));
    }
    let mut roots = Vec::new();
    for x in ctx.elements() {
        if inst.trinomial_at(&x)?.is_zero() {
            roots.push(x);
        }
    }
    Ok(roots)
}

/// How many a in GF(Q)* have each root count.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CensusRow {
    /// A root count (0, 1, 2, or p^d + 1).
    pub count: u64,
    /// Number of a realizing it.
    pub num_a: u64,
}

/// Exhaustive root-count distribution over all a in GF(Q)*.
#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub p: u64,
    pub k: usize,
    pub n: usize,
    pub modulus: Vec<u64>,
    pub rows: Vec<CensusRow>,
    /// Sum of count * num_a over the rows.
    pub total_roots: u64,
    /// Number of a where the closed-form classifier agreed with the count.
    pub classified: u64,
}

/// Census over GF(p^n) with the default modulus.
pub fn census(p: u64, k: usize, n: usize) -> Result<Census> {
    census_over(Arc::new(FieldCtx::new(p, n)?), k)
}

/// Census over an existing field.
///
/// Counts roots for all a at once (each x contributes to a = -x^(q+1) - x),
/// then checks [`solver::classify`] against the observed count for every a;
/// any disagreement is an internal error.
pub fn census_over(ctx: Arc<FieldCtx>, k: usize) -> Result<Census> {
    if ctx.size() > MAX_CENSUS {
        return Err(Error::FieldTooLarge(format!(
            "census is capped at {MAX_CENSUS} elements"
        )));
    }
    let mut per_a: BTreeMap<u64, u64> = BTreeMap::new();
    for x in ctx.elements() {
        let xq1 = ctx.mul(&ctx.frobenius(&x, k), &x);
        let a = ctx.neg(&ctx.add(&xq1, &x));
        if !a.is_zero() {
            *per_a.entry(ctx.encoding(&a)).or_insert(0) += 1;
        }
    }
    let mut rows: BTreeMap<u64, u64> = BTreeMap::new();
    let mut classified = 0;
    for v in 1..ctx.size() {
        let count = per_a.get(&v).copied().unwrap_or(0);
        *rows.entry(count).or_insert(0) += 1;
        let inst = Instance::from_elt(ctx.clone(), k, ctx.from_encoding(v)?)?;
        let predicted = solver::classify(&inst)?;
        if predicted != count {
            return Err(Error::InternalCheckFailed(format!(
                "classify said {predicted} roots for a = {v}, oracle counted {count}"
            )));
        }
        classified += 1;
    }
    let total_roots = rows.iter().map(|(c, n)| c * n).sum();
    Ok(Census {
        p: ctx.p(),
        k,
        n: ctx.e(),
        modulus: ctx.modulus().to_vec(),
        rows: rows.into_iter().map(|(count, num_a)| CensusRow { count, num_a }).collect(),
        total_roots,
        classified,
    })
}

/// Side-by-side result of the closed-form solver and the brute-force oracle.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub p: u64,
    pub k: usize,
    pub n: usize,
    pub a: u64,
    pub modulus: Vec<u64>,
    pub case: String,
    pub solver_count: u64,
    pub oracle_count: u64,
    pub solver_roots: Vec<u64>,
    pub oracle_roots: Vec<u64>,
    pub matches: bool,
}

/// Build a report from an already computed solution and oracle root list.
pub fn compare(inst: &Instance, sol: &solver::Solution, oracle_roots: &[Elt]) -> VerifyReport {
    let ctx = inst.ctx();
    let solver_roots: Vec<u64> = sol.roots.iter().map(|x| ctx.encoding(x)).collect();
    let oracle_roots: Vec<u64> = oracle_roots.iter().map(|x| ctx.encoding(x)).collect();
    let matches = solver_roots == oracle_roots && sol.count == oracle_roots.len() as u64;
    VerifyReport {
        p: inst.p(),
        k: inst.k(),
        n: inst.n(),
        a: ctx.encoding(inst.a()),
        modulus: ctx.modulus().to_vec(),
        case: sol.case.label().to_string(),
        solver_count: sol.count,
        oracle_count: oracle_roots.len() as u64,
        solver_roots,
        oracle_roots,
        matches,
    }
}

/// Solve with the closed forms, solve by exhaustion, and compare.
pub fn verify(inst: &Instance) -> Result<VerifyReport> {
    let sol = solver::solve(inst)?;
    let roots = brute_roots(inst)?;
    Ok(compare(inst, &sol, &roots))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_roots_gf8_worked_example() {
        let inst = Instance::new(2, 1, 3, 1).unwrap();
        let roots = brute_roots(&inst).unwrap();
        let encs: Vec<u64> = roots.iter().map(|x| inst.ctx().encoding(x)).collect();
        assert_eq!(encs, vec![2, 4, 6]);
    }

    #[test]
    fn census_gf8_distribution() {
        // Over GF(8) with q = 2: three a with no root, three with one root,
        // one with all three; six roots in total.
        let c = census(2, 1, 3).unwrap();
        assert_eq!(
            c.rows,
            vec![
                CensusRow { count: 0, num_a: 3 },
                CensusRow { count: 1, num_a: 3 },
                CensusRow { count: 3, num_a: 1 },
            ]
        );
        assert_eq!(c.total_roots, 6);
        assert_eq!(c.classified, 7);
    }

    #[test]
    fn census_counts_stay_in_allowed_set() {
        for (p, k, n) in [(2, 1, 4), (3, 1, 2), (2, 2, 4), (5, 1, 2)] {
            let c = census(p, k, n).unwrap();
            let pd = p.pow(num_gcd(n, k) as u32);
            for row in &c.rows {
                assert!(
                    [0, 1, 2, pd + 1].contains(&row.count),
                    "({p},{k},{n}): {} roots occurred",
                    row.count
                );
            }
            let q_minus_1: u64 = p.pow(n as u32) - 1;
            assert_eq!(c.rows.iter().map(|r| r.num_a).sum::<u64>(), q_minus_1);
        }
    }

    fn num_gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            num_gcd(b, a % b)
        }
    }

    #[test]
    fn verify_agrees_and_detects_corruption() {
        let inst = Instance::new(3, 1, 2, 1).unwrap();
        let report = verify(&inst).unwrap();
        assert!(report.matches);
        assert_eq!(report.solver_roots, report.oracle_roots);

        // Cross-wire: the solution for a different a must not match.
        let other = Instance::new(3, 1, 2, 2).unwrap();
        let sol = solver::solve(&other).unwrap();
        let roots = brute_roots(&inst).unwrap();
        let bad = compare(&inst, &sol, &roots);
        assert!(!bad.matches);
    }

    #[test]
    fn caps_are_enforced() {
        // GF(2^15) is fine for brute force but beyond the census cap.
        let inst = Instance::new(2, 1, 15, 1).unwrap();
        assert!(brute_roots(&inst).is_ok());
        assert!(matches!(census(2, 1, 15), Err(Error::FieldTooLarge(_))));
    }
}
