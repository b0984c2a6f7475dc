//! Numerical semigroups: cofinite, additively closed subsets of the
//! natural numbers containing 0, represented by a minimal generating set
//! plus a boolean membership sieve.

use crate::error::{Error, Result};
use num_integer::Integer;
use std::fmt;

/// A numerical semigroup Γ = ⟨n₁, …, n_e⟩ with cached invariants.
///
/// `sieve[z]` answers z ∈ Γ for 0 ≤ z < conductor + max(nᵢ); membership is
/// trivially true above the conductor and false below 0, so queries never
/// need table growth.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    sieve: Vec<bool>,
    multiplicity: i64,
    frobenius: i64,
    conductor: i64,
    genus: i64,
}

/// Same member set ⟺ same minimal generating set; the sieve length is an
/// artifact of how the semigroup was built and is ignored.
impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

/// Builds ⟨raw_generators⟩, reducing the input to the minimal generating set.
pub fn make_semigroup(raw_generators: &[i64]) -> Result<NumericalSemigroup> {
    if raw_generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for &g in raw_generators {
        if g < 1 {
            return Err(Error::NonPositiveGenerator { value: g });
        }
    }
    let mut gens: Vec<i64> = raw_generators.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let gcd = gens.iter().fold(0i64, |acc, &g| acc.gcd(&g));
    if gcd != 1 {
        return Err(Error::GcdNotOne { gcd });
    }

    let m = gens[0];
    let max_gen = *gens.last().unwrap();

    // Fill membership by dynamic programming (z ∈ Γ iff z = 0 or z − nᵢ ∈ Γ)
    // until a run of m consecutive members certifies cofiniteness: past such a
    // run every integer is that run plus a multiple of m.
    let mut limit = (m * max_gen + 2 * m + 2) as usize;
    let (mut sieve, run_start) = loop {
        let mut sieve = vec![false; limit];
        sieve[0] = true;
        for z in 1..limit {
            sieve[z] = gens
                .iter()
                .take_while(|&&g| g as usize <= z)
                .any(|&g| sieve[z - g as usize]);
        }
        if let Some(start) = find_member_run(&sieve, m as usize) {
            break (sieve, start);
        }
        limit *= 2;
    };

    let mut frobenius = -1;
    let mut genus = 0;
    for z in 0..run_start {
        if !sieve[z] {
            frobenius = z as i64;
            genus += 1;
        }
    }
    let conductor = frobenius + 1;

    sieve.resize((conductor + max_gen) as usize, true);

    // Minimal generating set: members of Γ∖{0} not expressible as a sum of
    // two nonzero members.
    let minimal: Vec<i64> = gens
        .iter()
        .copied()
        .filter(|&g| !(m..=g - m).any(|s| sieve_get(&sieve, s) && sieve_get(&sieve, g - s)))
        .collect();

    Ok(NumericalSemigroup {
        generators: minimal,
        sieve,
        multiplicity: m,
        frobenius,
        conductor,
        genus,
    })
}

fn find_member_run(sieve: &[bool], len: usize) -> Option<usize> {
    let mut run = 0;
    for (z, &member) in sieve.iter().enumerate() {
        if member {
            run += 1;
            if run == len {
                return Some(z + 1 - len);
            }
        } else {
            run = 0;
        }
    }
    None
}

fn sieve_get(sieve: &[bool], z: i64) -> bool {
    sieve.get(z as usize).copied().unwrap_or(true)
}

impl NumericalSemigroup {
    /// The minimal generating set, sorted ascending.
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Number of minimal generators (embedding dimension).
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Smallest nonzero member m(Γ).
    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    /// Largest integer not in Γ; −1 for Γ = N.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// F(Γ) + 1: least c with c + N ⊆ Γ.
    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    /// Number of gaps (positive integers outside Γ).
    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Membership test; false for z < 0, true for z ≥ conductor.
    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            return false;
        }
        if z >= self.conductor {
            return true;
        }
        self.sieve[z as usize]
    }

    /// ρ_r, the r-th smallest member (ρ₁ = 0, ρ₂ = m(Γ)).
    pub fn rho(&self, r: i64) -> i64 {
        assert!(r >= 1, "rho takes r >= 1");
        let below = self.conductor - self.genus;
        if r <= below {
            let mut seen = 0;
            for z in 0..self.conductor {
                if self.sieve[z as usize] {
                    seen += 1;
                    if seen == r {
                        return z;
                    }
                }
            }
            unreachable!("member count below conductor mismatch");
        }
        self.conductor + (r - below - 1)
    }

    /// Test hook: flips one sieve entry in place so oracle-equivalence tests
    /// can prove they would catch a corrupted table.
    #[doc(hidden)]
    pub fn corrupt_sieve_entry(&mut self, index: usize) {
        self.sieve[index] = !self.sieve[index];
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn whole_naturals() {
        let n = make_semigroup(&[1]).unwrap();
        assert_eq!(n.generators(), &[1]);
        assert_eq!(n.frobenius(), -1);
        assert_eq!(n.conductor(), 0);
        assert_eq!(n.genus(), 0);
        assert_eq!(n.multiplicity(), 1);
        assert!(n.contains(0) && n.contains(7));
        assert!(!n.contains(-1));
    }

    #[test]
    fn small_three_generator() {
        let s = make_semigroup(&[4, 6, 9]).unwrap();
        assert_eq!(s.generators(), &[4, 6, 9]);
        assert_eq!(s.genus(), 6);
        assert_eq!(s.frobenius(), 11);
        assert_eq!(s.conductor(), 12);
        assert!(s.contains(13));
        assert!(!s.contains(-3));
    }

    #[test]
    fn reduces_to_minimal_generators() {
        let s = make_semigroup(&[4, 5, 6, 8]).unwrap();
        assert_eq!(s.generators(), &[4, 5, 6]);
        let t = make_semigroup(&[6, 4, 9, 6, 13, 15]).unwrap();
        assert_eq!(t.generators(), &[4, 6, 9]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(make_semigroup(&[]), Err(Error::EmptyGenerators));
        assert_eq!(make_semigroup(&[4, 6]), Err(Error::GcdNotOne { gcd: 2 }));
        assert_eq!(
            make_semigroup(&[0, 3]),
            Err(Error::NonPositiveGenerator { value: 0 })
        );
    }

    #[test]
    fn explicit_member_listing() {
        let s = make_semigroup(&[6, 10, 11]).unwrap();
        let below: Vec<i64> = (0..26).filter(|&z| s.contains(z)).collect();
        assert_eq!(
            below,
            vec![0, 6, 10, 11, 12, 16, 17, 18, 20, 21, 22, 23, 24]
        );
        assert!(!s.contains(25));
        assert_eq!(s.conductor(), 26);
        assert_eq!(s.genus(), 13);
    }

    #[test]
    fn rho_examples() {
        let s = make_semigroup(&[4, 5]).unwrap();
        assert_eq!(s.rho(1), 0);
        assert_eq!(s.rho(2), 4);
        let t = make_semigroup(&[6, 10, 11]).unwrap();
        assert_eq!(t.rho(3), 10);
        // Past the conductor the r-th member advances by one per step.
        assert_eq!(t.rho(14), 26);
        assert_eq!(t.rho(15), 27);
    }

    #[test]
    fn closure_under_addition() {
        for gens in [vec![4, 6, 9], vec![8, 10, 12, 13], vec![6, 10, 11]] {
            let s = make_semigroup(&gens).unwrap();
            let c = s.conductor();
            let members: Vec<i64> = (0..2 * c).filter(|&z| s.contains(z)).collect();
            for &x in &members {
                for &y in &members {
                    assert!(s.contains(x + y), "{x} + {y} escaped ⟨{s}⟩");
                }
            }
        }
    }

    /// Membership built the slow way: saturate {0} under generator addition.
    fn brute_force_members(gens: &[i64], bound: i64) -> Vec<bool> {
        let n = (bound + 1) as usize;
        let mut member = vec![false; n];
        member[0] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for z in 0..=bound {
                if member[z as usize] {
                    continue;
                }
                if gens
                    .iter()
                    .any(|&g| z >= g && member[(z - g) as usize])
                {
                    member[z as usize] = true;
                    changed = true;
                }
            }
        }
        member
    }

    proptest! {
        #[test]
        fn sieve_matches_brute_force(
            gens in proptest::collection::vec(1i64..=40, 1..=4)
                .prop_filter("gcd 1", |v| v.iter().fold(0i64, |a, &b| a.gcd(&b)) == 1)
        ) {
            let s = make_semigroup(&gens).unwrap();
            let bound = s.conductor() + 100;
            let brute = brute_force_members(&gens, bound);
            for z in 0..=bound {
                prop_assert_eq!(s.contains(z), brute[z as usize], "mismatch at {}", z);
            }
            prop_assert!(!s.contains(s.frobenius()));
            prop_assert_eq!(s.genus(), (0..s.conductor()).filter(|&z| !s.contains(z)).count() as i64);
            prop_assert_eq!(s.rho(1), 0);
            prop_assert_eq!(s.rho(2), s.multiplicity());
        }

        #[test]
        fn minimal_generators_are_minimal(
            gens in proptest::collection::vec(1i64..=40, 1..=4)
                .prop_filter("gcd 1", |v| v.iter().fold(0i64, |a, &b| a.gcd(&b)) == 1)
        ) {
            let s = make_semigroup(&gens).unwrap();
            for &g in s.generators() {
                let rest: Vec<i64> = s.generators().iter().copied().filter(|&h| h != g).collect();
                if rest.is_empty() || rest.iter().fold(0i64, |a, &b| a.gcd(&b)) != 1 {
                    continue;
                }
                let sub = make_semigroup(&rest).unwrap();
                prop_assert!(!sub.contains(g), "{} is redundant in {:?}", g, gens);
            }
        }
    }
}
