//! Definition-level reference implementations.
//!
//! Everything here recomputes membership from the generator list alone
//! (memoized top-down recursion, no shared sieve), then evaluates Apéry sets,
//! divisor sets, and Feng-Rao minima as literal scans over their defining
//! windows. Closed formulas elsewhere in the crate are tested against these.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Extra padding added to every scan window.
    pub window_slack: i64,
    /// Cap on the number of tuples a Feng-Rao search may visit.
    pub tuple_budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            window_slack: 50,
            tuple_budget: 10_000_000,
        }
    }
}

/// Membership by generator subtraction with memoization; deliberately
/// independent of the sieve the main type carries.
struct Membership {
    gens: Vec<i64>,
    memo: HashMap<i64, bool>,
}

impl Membership {
    fn new(gens: &[i64]) -> Membership {
        let mut memo = HashMap::new();
        memo.insert(0, true);
        Membership {
            gens: gens.to_vec(),
            memo,
        }
    }

    fn contains(&mut self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        if let Some(&v) = self.memo.get(&z) {
            return v;
        }
        let mut stack = vec![z];
        while let Some(&top) = stack.last() {
            if self.memo.contains_key(&top) {
                stack.pop();
                continue;
            }
            let mut value = false;
            let mut blocked = false;
            for &g in &self.gens {
                let w = top - g;
                if w < 0 {
                    continue;
                }
                match self.memo.get(&w) {
                    Some(&true) => {
                        value = true;
                        break;
                    }
                    Some(&false) => {}
                    None => {
                        stack.push(w);
                        blocked = true;
                    }
                }
            }
            if value || !blocked {
                self.memo.insert(top, value);
                stack.pop();
            }
        }
        self.memo[&z]
    }

    /// Start of the first run of `m` consecutive members, i.e. the conductor.
    fn conductor(&mut self) -> i64 {
        let m = *self.gens.iter().min().unwrap();
        let mut run = 0;
        let mut z = 0;
        loop {
            if self.contains(z) {
                run += 1;
                if run == m {
                    return z + 1 - m;
                }
            } else {
                run = 0;
            }
            z += 1;
        }
    }

    fn genus(&mut self) -> i64 {
        let c = self.conductor();
        (0..c).filter(|&z| !self.contains(z)).count() as i64
    }
}

/// Structural facts recomputed from the generators alone:
/// (multiplicity, frobenius, conductor, genus).
pub fn oracle_structure(s: &NumericalSemigroup) -> (i64, i64, i64, i64) {
    let mut mem = Membership::new(s.generators());
    let m = (1..).find(|&z| mem.contains(z)).unwrap();
    let c = mem.conductor();
    let g = mem.genus();
    (m, c - 1, c, g)
}

/// Ap(Γ, x) = {a ∈ Γ | a − x ∉ Γ} scanned over [0, conductor + |x| + slack].
pub fn oracle_apery(s: &NumericalSemigroup, x: i64, cfg: &OracleConfig) -> Vec<i64> {
    let mut mem = Membership::new(s.generators());
    let hi = mem.conductor() + x.abs() + cfg.window_slack;
    (0..=hi)
        .filter(|&a| mem.contains(a) && !mem.contains(a - x))
        .collect()
}

/// D(z) = {s ∈ Γ | z − s ∈ Γ} scanned over [0, z].
pub fn oracle_divisors(s: &NumericalSemigroup, z: i64) -> Vec<i64> {
    let mut mem = Membership::new(s.generators());
    (0..=z.max(-1))
        .filter(|&t| mem.contains(t) && mem.contains(z - t))
        .collect()
}

/// min over tuples a ≤ t₁ < … < t_r of members of #(D(t₁) ∪ … ∪ D(t_r)),
/// exhaustively within the proven cutoff t_r + 1 − 2g > current minimum.
pub fn oracle_delta_r(s: &NumericalSemigroup, a: i64, r: usize, cfg: &OracleConfig) -> Result<i64> {
    assert!((1..=3).contains(&r), "oracle supports r = 1, 2, 3");
    let mut mem = Membership::new(s.generators());
    let two_g = 2 * mem.genus();
    let start = a.max(0);
    let mut budget = cfg.tuple_budget;

    let union_size = |mem: &mut Membership, tuple: &[i64]| -> i64 {
        let hi = *tuple.iter().max().unwrap();
        (0..=hi)
            .filter(|&t| mem.contains(t) && tuple.iter().any(|&b| mem.contains(b - t)))
            .count() as i64
    };

    // Greedy seed: the first r members at or above `start`.
    let mut pool: Vec<i64> = Vec::new();
    let mut z = start;
    while pool.len() < r {
        if mem.contains(z) {
            pool.push(z);
        }
        z += 1;
    }
    budget = budget.checked_sub(1).ok_or(Error::BudgetExceeded)?;
    let mut best = union_size(&mut mem, &pool.clone());

    // `pool` holds members in [start, top); `top` is the current largest entry.
    let mut top = pool[r - 1];
    pool.truncate(r - 1);
    loop {
        if top + 1 - two_g > best {
            return Ok(best);
        }
        if mem.contains(top) {
            if r == 1 {
                if budget == 0 {
                    return Err(Error::BudgetExceeded);
                }
                budget -= 1;
                best = best.min(union_size(&mut mem, &[top]));
            } else {
                let k = r - 1;
                if pool.len() >= k {
                    let mut idx: Vec<usize> = (0..k).collect();
                    loop {
                        if budget == 0 {
                            return Err(Error::BudgetExceeded);
                        }
                        budget -= 1;
                        let mut tuple: Vec<i64> = idx.iter().map(|&i| pool[i]).collect();
                        tuple.push(top);
                        best = best.min(union_size(&mut mem, &tuple));
                        // Advance the index odometer.
                        let mut pos = k;
                        while pos > 0 {
                            pos -= 1;
                            if idx[pos] + 1 <= pool.len() - (k - pos) {
                                idx[pos] += 1;
                                for q in pos + 1..k {
                                    idx[q] = idx[q - 1] + 1;
                                }
                                break;
                            }
                            if pos == 0 {
                                pos = usize::MAX;
                                break;
                            }
                        }
                        if pos == usize::MAX {
                            break;
                        }
                    }
                }
            }
            pool.push(top);
        }
        top += 1;
    }
}
