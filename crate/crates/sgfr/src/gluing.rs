//! Gluings Γ = a₁Γ₁ + a₂Γ₂ and their Apéry/divisor structure.
//!
//! With gcd(a₁,a₂) = 1, a₁ ∈ Γ₂, a₂ ∈ Γ₁, and neither a minimal generator of
//! its partner, every integer z decomposes uniquely as z = a₁k + a₂ω with
//! ω ∈ Ap(Γ₂,a₁), and membership in Γ reduces to k ∈ Γ₁. The cocycle of
//! (Γ₂,a₁) then transports Apéry and divisor sets of Γ down to Γ₁-level data.

use crate::apery::{apery, apery_size, divisors, AperySet, DivisorSet};
use crate::error::{Error, Result};
use crate::semigroup::{make_semigroup, NumericalSemigroup};
use num_integer::Integer;

/// The cocycle of (Γ, g): ω(i) is the element of Ap(Γ,g) congruent to
/// i mod g, and h[i][j] = (ω(i) − ω(i+j) + ω(j)) / g measures the carry when
/// adding residue classes. Symmetric, zero on the 0 row/column, and each
/// column sums back to ω.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleTable {
    semigroup: NumericalSemigroup,
    modulus: i64,
    omega: Vec<i64>,
    h: Vec<Vec<i64>>,
}

impl CocycleTable {
    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// ω as a list indexed by residue; this is Ap(Γ, g) in residue order.
    pub fn omega(&self) -> &[i64] {
        &self.omega
    }

    pub fn h(&self) -> &[Vec<i64>] {
        &self.h
    }

    /// h(i, j) with arbitrary integer indices reduced mod g.
    pub fn at(&self, i: i64, j: i64) -> i64 {
        let g = self.modulus;
        self.h[i.rem_euclid(g) as usize][j.rem_euclid(g) as usize]
    }
}

/// Builds the cocycle table of (S, g) for a member g ≥ 1.
pub fn cocycle(s: &NumericalSemigroup, g: i64) -> Result<CocycleTable> {
    if g < 1 || !s.contains(g) {
        return Err(Error::NotMember { value: g });
    }
    let gu = g as usize;
    let mut omega = vec![0i64; gu];
    for (i, slot) in omega.iter_mut().enumerate().skip(1) {
        let mut w = i as i64;
        while !s.contains(w) {
            w += g;
        }
        *slot = w;
    }
    let mut h = vec![vec![0i64; gu]; gu];
    for i in 0..gu {
        for j in 0..gu {
            // ω(i) + ω(j) is a member congruent to i+j, hence ≥ ω(i+j) and
            // the difference is a nonnegative multiple of g.
            let num = omega[i] - omega[(i + j) % gu] + omega[j];
            assert!(num >= 0 && num % g == 0, "cocycle arithmetic broke");
            h[i][j] = num / g;
        }
    }
    Ok(CocycleTable {
        semigroup: s.clone(),
        modulus: g,
        omega,
        h,
    })
}

/// A validated gluing Γ = a₁Γ₁ + a₂Γ₂ with the (Γ₂, a₁) cocycle cached.
#[derive(Debug, Clone)]
pub struct Gluing {
    a1: i64,
    gamma1: NumericalSemigroup,
    a2: i64,
    gamma2: NumericalSemigroup,
    expanded: NumericalSemigroup,
    cocycle2: CocycleTable,
    a2_inv: i64,
}

/// The unique decomposition z = a₁·k + a₂·omega with omega ∈ Ap(Γ₂, a₁);
/// `residue` is omega's class mod a₁ and `member` reports z ∈ Γ ⇔ k ∈ Γ₁.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniqueForm {
    pub k: i64,
    pub omega: i64,
    pub residue: i64,
    pub member: bool,
}

/// All closed-form data for Ap(Γ, z) and D(z) in a free extension
/// Γ = a₁Γ₁ + a₂N, where z = a₁·alpha + a₂·beta with 0 ≤ beta < a₁.
#[derive(Debug, Clone)]
pub struct FreeExtension {
    pub apery_set: AperySet,
    pub divisor_set: DivisorSet,
    pub apery_size: i64,
    pub divisor_size: i64,
    pub alpha: i64,
    pub beta: i64,
}

/// Validates and builds a gluing; the expanded semigroup is generated by
/// a₁·gens(Γ₁) ∪ a₂·gens(Γ₂).
pub fn make_gluing(
    a1: i64,
    gamma1: NumericalSemigroup,
    a2: i64,
    gamma2: NumericalSemigroup,
) -> Result<Gluing> {
    if !gamma2.contains(a1) {
        return Err(Error::NotMember { value: a1 });
    }
    if !gamma1.contains(a2) {
        return Err(Error::NotMember { value: a2 });
    }
    let gcd = a1.gcd(&a2);
    if gcd != 1 {
        return Err(Error::GcdNotOne { gcd });
    }
    if gamma2.generators().contains(&a1) {
        return Err(Error::IsMinimalGenerator { value: a1 });
    }
    if gamma1.generators().contains(&a2) {
        return Err(Error::IsMinimalGenerator { value: a2 });
    }
    let mut gens = Vec::new();
    for &g in gamma1.generators() {
        gens.push(g.checked_mul(a1).ok_or(Error::InvalidParameters {
            reason: "generator overflow".into(),
        })?);
    }
    for &g in gamma2.generators() {
        gens.push(g.checked_mul(a2).ok_or(Error::InvalidParameters {
            reason: "generator overflow".into(),
        })?);
    }
    let expanded = make_semigroup(&gens)?;
    let cocycle2 = cocycle(&gamma2, a1)?;
    let egcd = a2.extended_gcd(&a1);
    let a2_inv = egcd.x.rem_euclid(a1);
    Ok(Gluing {
        a1,
        gamma1,
        a2,
        gamma2,
        expanded,
        cocycle2,
        a2_inv,
    })
}

impl Gluing {
    pub fn a1(&self) -> i64 {
        self.a1
    }

    pub fn a2(&self) -> i64 {
        self.a2
    }

    pub fn gamma1(&self) -> &NumericalSemigroup {
        &self.gamma1
    }

    pub fn gamma2(&self) -> &NumericalSemigroup {
        &self.gamma2
    }

    pub fn expanded(&self) -> &NumericalSemigroup {
        &self.expanded
    }

    /// The cached cocycle of (Γ₂, a₁).
    pub fn cocycle2(&self) -> &CocycleTable {
        &self.cocycle2
    }
}

/// Same syntax the CLI accepts: `a1*(gens)+a2*(gens)`.
impl std::fmt::Display for Gluing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}*({})+{}*({})",
            self.a1, self.gamma1, self.a2, self.gamma2
        )
    }
}

/// z = a₁k + a₂ω(i), the unique such expression with ω(i) ∈ Ap(Γ₂, a₁).
pub fn unique_form(g: &Gluing, z: i64) -> UniqueForm {
    let i = (z.rem_euclid(g.a1) * g.a2_inv).rem_euclid(g.a1);
    let omega = g.cocycle2.omega[i as usize];
    let k = (z - g.a2 * omega) / g.a1;
    debug_assert_eq!(g.a1 * k + g.a2 * omega, z);
    UniqueForm {
        k,
        omega,
        residue: i,
        member: g.gamma1.contains(k),
    }
}

/// Ap(Γ, z) assembled per residue class from Γ₁-level Apéry sets:
/// Ap(Γ,z) = ⋃ⱼ a₁·Ap(Γ₁, k + a₂·h(j−i, i)) + a₂·ω(j).
pub fn apery_via_cocycle(g: &Gluing, z: i64) -> AperySet {
    let form = unique_form(g, z);
    let mut elements = Vec::new();
    for j in 0..g.a1 {
        let shift = form.k + g.a2 * g.cocycle2.at(j - form.residue, form.residue);
        let w_j = g.cocycle2.omega[j as usize];
        for &w in apery(&g.gamma1, shift).elements() {
            elements.push(g.a1 * w + g.a2 * w_j);
        }
    }
    AperySet::from_parts(g.expanded.clone(), z, elements)
}

/// D(z) assembled the same way: D(z) = ⋃ⱼ a₁·D_{Γ₁}(k − a₂·h(i−j, j)) + a₂·ω(j).
pub fn divisors_via_cocycle(g: &Gluing, z: i64) -> DivisorSet {
    let form = unique_form(g, z);
    let mut elements = Vec::new();
    for j in 0..g.a1 {
        let target = form.k - g.a2 * g.cocycle2.at(form.residue - j, j);
        let w_j = g.cocycle2.omega[j as usize];
        for &s in divisors(&g.gamma1, target).elements() {
            elements.push(g.a1 * s + g.a2 * w_j);
        }
    }
    DivisorSet::from_parts(g.expanded.clone(), vec![z], elements)
}

/// β = #{x ∈ Ap(Γ₂,a₁) | x − ω(i) ∉ Γ₂} and the induced lower bound
/// (a₁−β)·#Ap(Γ₁, k) + β·#Ap(Γ₁, k + a₂)  ≤  #Ap(Γ, z).
pub fn apery_beta_bound(g: &Gluing, z: i64) -> (i64, i64) {
    let form = unique_form(g, z);
    let beta = g
        .cocycle2
        .omega
        .iter()
        .filter(|&&x| !g.gamma2.contains(x - form.omega))
        .count() as i64;
    let bound = (g.a1 - beta) * apery_size(&g.gamma1, form.k)
        + beta * apery_size(&g.gamma1, form.k + g.a2);
    (beta, bound)
}

/// Ap(Γ, a₁·z) = a₁·Ap(Γ₁, z) + a₂·Ap(Γ₂, a₁), of size a₁·#Ap(Γ₁, z).
pub fn apery_multiple(g: &Gluing, z: i64) -> AperySet {
    let inner = apery(&g.gamma1, z);
    let mut elements = Vec::with_capacity(inner.elements().len() * g.a1 as usize);
    for &w in inner.elements() {
        for &v in &g.cocycle2.omega {
            elements.push(g.a1 * w + g.a2 * v);
        }
    }
    let set = AperySet::from_parts(g.expanded.clone(), g.a1 * z, elements);
    assert_eq!(set.len(), g.a1 * inner.len(), "size law broke");
    set
}

/// For a member g = a₁g₁ + a₂g₂ (gᵢ ∈ Γᵢ), the two disjoint halves of
/// Ap(Γ, g): a₁Ap(Γ₁,g₁) + a₂Ap(Γ₂,a₁) and a₁g₁ + a₁Ap(Γ₁,a₂) + a₂Ap(Γ₂,g₂).
pub fn apery_of_member_glued(g: &Gluing, g1: i64, g2: i64) -> Result<(Vec<i64>, Vec<i64>)> {
    if !g.gamma1.contains(g1) {
        return Err(Error::NotMember { value: g1 });
    }
    if !g.gamma2.contains(g2) {
        return Err(Error::NotMember { value: g2 });
    }
    let mut first = Vec::new();
    for &w in apery(&g.gamma1, g1).elements() {
        for &v in &g.cocycle2.omega {
            first.push(g.a1 * w + g.a2 * v);
        }
    }
    let mut second = Vec::new();
    for &w in apery(&g.gamma1, g.a2).elements() {
        for &v in apery(&g.gamma2, g2).elements() {
            second.push(g.a1 * g1 + g.a1 * w + g.a2 * v);
        }
    }
    first.sort_unstable();
    second.sort_unstable();
    Ok((first, second))
}

/// Closed forms for a free extension Γ = a₁Γ₁ + a₂N. Writing
/// z = a₁·α + a₂·β with 0 ≤ β < a₁:
///   Ap(Γ,z) = (a₁Ap(Γ₁,α+a₂) + a₂{0..β−1}) ∪ (a₁Ap(Γ₁,α) + a₂{β..a₁−1})
///   D(z)    = (a₁D(α) + a₂{0..β})          ∪ (a₁D(α−a₂) + a₂{β+1..a₁−1})
/// with sizes β·#Ap(α+a₂) + (a₁−β)·#Ap(α) and (β+1)·#D(α) + (a₁−β−1)·#D(α−a₂).
pub fn free_extension(g: &Gluing, z: i64) -> Result<FreeExtension> {
    if g.gamma2.generators() != [1] {
        return Err(Error::WrongShape);
    }
    let form = unique_form(g, z);
    let (alpha, beta) = (form.k, form.omega);
    let (a1, a2) = (g.a1, g.a2);

    let ap_high = apery(&g.gamma1, alpha + a2);
    let ap_low = apery(&g.gamma1, alpha);
    let mut ap_elems = Vec::new();
    for j in 0..beta {
        for &w in ap_high.elements() {
            ap_elems.push(a1 * w + a2 * j);
        }
    }
    for j in beta..a1 {
        for &w in ap_low.elements() {
            ap_elems.push(a1 * w + a2 * j);
        }
    }
    let apery_count = beta * ap_high.len() + (a1 - beta) * ap_low.len();

    let d_high = divisors(&g.gamma1, alpha);
    let d_low = divisors(&g.gamma1, alpha - a2);
    let mut d_elems = Vec::new();
    for j in 0..=beta {
        for &s in d_high.elements() {
            d_elems.push(a1 * s + a2 * j);
        }
    }
    for j in beta + 1..a1 {
        for &s in d_low.elements() {
            d_elems.push(a1 * s + a2 * j);
        }
    }
    let divisor_count = (beta + 1) * d_high.len() + (a1 - beta - 1) * d_low.len();

    let apery_set = AperySet::from_parts(g.expanded.clone(), z, ap_elems);
    let divisor_set = DivisorSet::from_parts(g.expanded.clone(), vec![z], d_elems);
    assert_eq!(apery_set.len(), apery_count, "residue classes collided");
    assert_eq!(divisor_set.len(), divisor_count, "residue classes collided");
    Ok(FreeExtension {
        apery_set,
        divisor_set,
        apery_size: apery_count,
        divisor_size: divisor_count,
        alpha,
        beta,
    })
}

/// #Ap(⟨a,b⟩, z) in closed form: with z = u·a + v·b, 0 ≤ u < b, the size is
/// (b−u)·max{v,0} + u·max{v+a, 0}.
pub fn two_gen_apery_size(a: i64, b: i64, z: i64) -> Result<i64> {
    if a < 2 || b < 2 {
        return Err(Error::InvalidParameters {
            reason: "two-generator form needs a, b >= 2".into(),
        });
    }
    let gcd = a.gcd(&b);
    if gcd != 1 {
        return Err(Error::GcdNotOne { gcd });
    }
    let egcd = a.extended_gcd(&b);
    let u = (z.rem_euclid(b) * egcd.x.rem_euclid(b)).rem_euclid(b);
    let v = (z - u * a) / b;
    debug_assert_eq!(u * a + v * b, z);
    Ok((b - u) * v.max(0) + u * (v + a).max(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apery::{apery, apery_size, divisors};
    use crate::oracle::{oracle_apery, OracleConfig};
    use num_integer::Integer;
    use proptest::prelude::*;

    fn glue(a1: i64, g1: &[i64], a2: i64, g2: &[i64]) -> Gluing {
        make_gluing(
            a1,
            make_semigroup(g1).unwrap(),
            a2,
            make_semigroup(g2).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn construction_and_validation() {
        let g = glue(2, &[2, 3], 5, &[1]);
        assert_eq!(g.expanded().generators(), &[4, 5, 6]);
        let h = glue(4, &[2, 3], 17, &[1]);
        assert_eq!(h.expanded().generators(), &[8, 12, 17]);

        let gamma1 = make_semigroup(&[2, 3]).unwrap();
        let n = make_semigroup(&[1]).unwrap();
        assert!(matches!(
            make_gluing(2, gamma1.clone(), 3, n.clone()),
            Err(Error::IsMinimalGenerator { value: 3 })
        ));
        assert!(matches!(
            make_gluing(2, gamma1.clone(), 4, n.clone()),
            Err(Error::GcdNotOne { gcd: 2 })
        ));
        assert!(matches!(
            make_gluing(2, gamma1.clone(), 1, n.clone()),
            Err(Error::NotMember { value: 1 })
        ));
        // a₁ must avoid being a minimal generator of Γ₂ = N.
        assert!(matches!(
            make_gluing(1, gamma1, 5, n),
            Err(Error::IsMinimalGenerator { value: 1 })
        ));
    }

    #[test]
    fn unique_form_examples() {
        let g = glue(2, &[2, 3], 5, &[1]);
        let f = unique_form(&g, 1);
        assert_eq!((f.k, f.omega, f.member), (-2, 1, false));
        let f = unique_form(&g, 0);
        assert_eq!((f.k, f.omega, f.member), (0, 0, true));
        let f = unique_form(&g, 10);
        assert_eq!((f.k, f.omega, f.member), (5, 0, true));
    }

    #[test]
    fn cocycle_tables() {
        let s = make_semigroup(&[2, 3]).unwrap();
        let t = cocycle(&s, 2).unwrap();
        assert_eq!(t.omega(), &[0, 3]);
        assert_eq!(t.h(), &[vec![0, 0], vec![0, 3]]);

        // The carry cocycle of (N, g).
        let n = make_semigroup(&[1]).unwrap();
        let t = cocycle(&n, 4).unwrap();
        assert_eq!(t.omega(), &[0, 1, 2, 3]);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(t.at(i, j), i64::from(i + j >= 4));
            }
        }

        assert_eq!(cocycle(&s, 1), Err(Error::NotMember { value: 1 }));
    }

    #[test]
    fn cocycle_invariants() {
        for (gens, g) in [(vec![4, 6, 9], 6), (vec![8, 10, 12, 13], 8), (vec![5, 7], 7)] {
            let s = make_semigroup(&gens).unwrap();
            let t = cocycle(&s, g).unwrap();
            let gu = g as usize;
            for i in 0..gu {
                assert_eq!(t.h()[0][i], 0);
                for j in 0..gu {
                    assert_eq!(t.h()[i][j], t.h()[j][i]);
                    assert!(t.h()[i][j] >= 0);
                }
                // Reconstruction: ω(i) = Σⱼ h(j, i).
                let sum: i64 = (0..gu).map(|j| t.h()[j][i]).sum();
                assert_eq!(t.omega()[i], sum);
            }
        }
    }

    #[test]
    fn cocycle_apery_and_divisor_values() {
        let g = glue(2, &[2, 3], 5, &[1]);
        assert_eq!(apery_via_cocycle(&g, 1).elements(), &[0, 4, 8]);
        assert!(apery_via_cocycle(&g, 0).is_empty());
        assert_eq!(divisors_via_cocycle(&g, 0).elements(), &[0]);
        assert!(divisors_via_cocycle(&g, 3).is_empty());

        let cfg = OracleConfig::default();
        let h = glue(4, &[2, 3], 17, &[1]);
        let direct = oracle_apery(h.expanded(), 30, &cfg);
        assert_eq!(apery_via_cocycle(&h, 30).elements(), direct.as_slice());
    }

    #[test]
    fn beta_bound_examples() {
        let g = glue(2, &[2, 3], 5, &[1]);
        assert_eq!(apery_beta_bound(&g, 1), (1, 3));
        // Multiples of a₁ have ω(i) = 0, forcing β = 0.
        let (beta, bound) = apery_beta_bound(&g, 8);
        assert_eq!(beta, 0);
        assert_eq!(bound, 2 * apery_size(g.gamma1(), 4));
        let h = glue(4, &[2, 3], 17, &[1]);
        let (_, b) = apery_beta_bound(&h, 7);
        assert!(b <= apery_size(h.expanded(), 7));
    }

    #[test]
    fn multiple_and_member_formulas() {
        let g = glue(2, &[2, 3], 5, &[1]);
        assert!(apery_multiple(&g, 0).is_empty());
        let classical = apery_multiple(&g, 5);
        assert_eq!(classical.elements(), apery(g.expanded(), 10).elements());

        // Suzuki-shaped instance: 2·⟨4,5,6⟩ + 13·N = ⟨8,10,12,13⟩.
        let s = glue(2, &[4, 5, 6], 13, &[1]);
        assert_eq!(s.expanded().generators(), &[8, 10, 12, 13]);
        assert_eq!(apery_multiple(&s, 1).len(), 6);

        let (first, second) = apery_of_member_glued(&g, 2, 1).unwrap();
        let whole = apery(g.expanded(), 9);
        let mut union = first.clone();
        union.extend_from_slice(&second);
        union.sort_unstable();
        assert_eq!(union, whole.elements());
        assert_eq!(first.len() + second.len(), whole.elements().len());

        let (first, _) = apery_of_member_glued(&g, 0, 1).unwrap();
        assert!(first.is_empty());
        let (_, second) = apery_of_member_glued(&g, 2, 0).unwrap();
        assert!(second.is_empty());
        assert_eq!(
            apery_of_member_glued(&g, 1, 0),
            Err(Error::NotMember { value: 1 })
        );
    }

    #[test]
    fn free_extension_closed_forms() {
        let g = glue(2, &[2, 3], 5, &[1]);
        let fe = free_extension(&g, 1).unwrap();
        assert_eq!((fe.alpha, fe.beta), (-2, 1));
        assert_eq!(fe.apery_size, 3);
        assert_eq!(fe.apery_set.elements(), &[0, 4, 8]);

        let fe = free_extension(&g, 14).unwrap();
        assert_eq!((fe.alpha, fe.beta), (7, 0));
        assert_eq!(fe.divisor_size, 8);
        assert_eq!(
            fe.divisor_set.elements(),
            divisors(g.expanded(), 14).elements()
        );

        // Γ₂ ≠ N is rejected.
        let general = glue(4, &[2, 3], 5, &[2, 3]);
        assert!(matches!(
            free_extension(&general, 5),
            Err(Error::WrongShape)
        ));
    }

    #[test]
    fn two_generator_closed_form() {
        assert_eq!(two_gen_apery_size(2, 3, 1), Ok(2));
        assert_eq!(two_gen_apery_size(4, 5, 0), Ok(0));
        assert_eq!(two_gen_apery_size(4, 5, 4), Ok(4));
        assert_eq!(two_gen_apery_size(4, 6, 3), Err(Error::GcdNotOne { gcd: 2 }));
        assert!(matches!(
            two_gen_apery_size(1, 5, 3),
            Err(Error::InvalidParameters { .. })
        ));
    }

    proptest! {
        #[test]
        fn two_gen_matches_scan(
            a in 2i64..=9,
            b in 2i64..=11,
            z in -40i64..=80,
        ) {
            prop_assume!(a.gcd(&b) == 1);
            let s = make_semigroup(&[a, b]).unwrap();
            prop_assert_eq!(two_gen_apery_size(a, b, z).unwrap(), apery_size(&s, z));
        }

        #[test]
        fn cocycle_reconstruction(
            gens in proptest::collection::vec(2i64..=25, 2..=3)
                .prop_filter("gcd 1", |v| v.iter().fold(0i64, |a, &b| a.gcd(&b)) == 1),
            pick in 0usize..4,
        ) {
            let s = make_semigroup(&gens).unwrap();
            let g = s.rho(pick as i64 + 2);
            let t = cocycle(&s, g).unwrap();
            let gu = g as usize;
            for i in 0..gu {
                let sum: i64 = (0..gu).map(|j| t.h()[j][i]).sum();
                prop_assert_eq!(t.omega()[i], sum, "reconstruction at {}", i);
            }
        }
    }
}
