//! Feng-Rao distances, Feng-Rao numbers, and the free/telescopic structure
//! results that pin the second Feng-Rao number to the multiplicity.
//!
//! δ_FR(a) = min{#D(b) | b ∈ Γ, b ≥ a} and its order-r generalization drive
//! the minimum-distance bounds in module `bounds`; E(Γ, r) is the constant by
//! which δʳ_FR eventually exceeds the Goppa line a + 1 − 2g.

use crate::apery::{apery_size, divisor_count};
use crate::error::{Error, Result};
use crate::gluing::Gluing;
use crate::semigroup::{make_semigroup, NumericalSemigroup};
use itertools::Itertools;
use num_integer::Integer;
use num_rational::Rational64;
use std::collections::BTreeMap;

/// Default cap on tuples examined by the order-r searches.
pub const DEFAULT_TUPLE_BUDGET: u64 = 10_000_000;

pub(crate) fn ceil_div(n: i64, d: i64) -> i64 {
    debug_assert!(d > 0);
    (n + d - 1).div_euclid(d)
}

/// δ_FR(a): scans members b ≥ a, pruning once b > best + 2g − 1, which is
/// sound because #D(b) ≥ b + 1 − 2g for every b ≥ 0.
pub fn feng_rao_distance(s: &NumericalSemigroup, a: i64) -> i64 {
    assert!(a >= 0, "Feng-Rao distance takes a >= 0");
    let two_g = 2 * s.genus();
    let mut b = a;
    while !s.contains(b) {
        b += 1;
    }
    let mut best = divisor_count(s, b);
    loop {
        b += 1;
        if b + 1 - two_g > best {
            return best;
        }
        if s.contains(b) {
            best = best.min(divisor_count(s, b));
        }
    }
}

/// δʳ_FR(a) with the default tuple budget.
pub fn generalized_feng_rao_distance(s: &NumericalSemigroup, a: i64, r: usize) -> Result<i64> {
    generalized_feng_rao_distance_with_budget(s, a, r, DEFAULT_TUPLE_BUDGET)
}

/// δʳ_FR(a) = min #(D(t₁) ∪ … ∪ D(t_r)) over members a ≤ t₁ < … < t_r.
///
/// The search runs in lexicographic order of (t_r, rest), seeded by the
/// greedy tuple of the r smallest admissible members; a stratum t_r is pruned
/// entirely once t_r + 1 − 2g exceeds the best size found (the union
/// contains D(t_r), whose size is at least t_r + 1 − 2g).
pub fn generalized_feng_rao_distance_with_budget(
    s: &NumericalSemigroup,
    a: i64,
    r: usize,
    budget: u64,
) -> Result<i64> {
    assert!(a >= 0, "Feng-Rao distance takes a >= 0");
    assert!(r >= 1, "tuple order must be positive");
    if r == 1 {
        return Ok(feng_rao_distance(s, a));
    }
    let two_g = 2 * s.genus();
    let mut examined: u64 = 0;

    let union_size = |tuple: &[i64]| -> i64 {
        let hi = *tuple.last().unwrap();
        (0..=hi)
            .filter(|&t| s.contains(t) && tuple.iter().any(|&b| s.contains(b - t)))
            .count() as i64
    };

    // Greedy seed: the r smallest members at or above a.
    let mut pool: Vec<i64> = Vec::with_capacity(16);
    let mut z = a;
    while pool.len() < r {
        if s.contains(z) {
            pool.push(z);
        }
        z += 1;
    }
    examined += 1;
    let mut best = union_size(&pool);

    let mut top = pool[r - 1];
    pool.truncate(r - 1);
    let k = r - 1;
    loop {
        if top + 1 - two_g > best {
            return Ok(best);
        }
        if s.contains(top) {
            if pool.len() >= k {
                let mut idx: Vec<usize> = (0..k).collect();
                'combos: loop {
                    if examined >= budget {
                        return Err(Error::SearchBudgetExceeded {
                            best_upper_bound: best,
                            tuples_examined: examined,
                        });
                    }
                    examined += 1;
                    let mut tuple: Vec<i64> = idx.iter().map(|&i| pool[i]).collect();
                    tuple.push(top);
                    best = best.min(union_size(&tuple));

                    // Advance the combination odometer over `pool`.
                    let mut pos = k;
                    loop {
                        if pos == 0 {
                            break 'combos;
                        }
                        pos -= 1;
                        if idx[pos] + 1 <= pool.len() - (k - pos) {
                            idx[pos] += 1;
                            for q in pos + 1..k {
                                idx[q] = idx[q - 1] + 1;
                            }
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

/// E(Γ, 2) = min{#Ap(Γ, z) | 1 ≤ z ≤ m(Γ)}; the range suffices because
/// #Ap(Γ, z) ≥ z ≥ m(Γ) once z ≥ m(Γ).
pub fn second_feng_rao_number(s: &NumericalSemigroup) -> Result<i64> {
    if s.generators() == [1] {
        return Err(Error::DegenerateSemigroup);
    }
    Ok((1..=s.multiplicity())
        .map(|z| apery_size(s, z))
        .min()
        .unwrap())
}

/// E(Γ, r) with the default tuple budget.
pub fn feng_rao_number(s: &NumericalSemigroup, r: usize) -> Result<i64> {
    feng_rao_number_with_budget(s, r, DEFAULT_TUPLE_BUDGET)
}

/// E(Γ, r): 0 for r = 1; the min-Apéry characterization for r = 2; for
/// r ≥ 3 recovered from δʳ_FR(2c−1) = (2c−1) + 1 − 2g + E(Γ, r), the
/// smallest argument where the linear law is guaranteed.
pub fn feng_rao_number_with_budget(s: &NumericalSemigroup, r: usize, budget: u64) -> Result<i64> {
    assert!(r >= 1, "tuple order must be positive");
    if r == 1 {
        return Ok(0);
    }
    if s.generators() == [1] {
        return Err(Error::DegenerateSemigroup);
    }
    if r == 2 {
        return second_feng_rao_number(s);
    }
    let a = 2 * s.conductor() - 1;
    let delta = generalized_feng_rao_distance_with_budget(s, a, r, budget)?;
    Ok(delta - (a + 1 - 2 * s.genus()))
}

/// An arrangement (n₁, …, n_e) of the minimal generators witnessing
/// freeness: with dᵢ = gcd(n₁,…,n_{i−1}) and cᵢ = dᵢ/d_{i+1}, every
/// dᵢ > d_{i+1} and cᵢnᵢ ∈ ⟨n₁,…,n_{i−1}⟩.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeArrangement {
    pub generators: Vec<i64>,
    /// d₂, …, d_{e+1} (so d[0] = n₁ and d[e−1] = 1).
    pub d: Vec<i64>,
    /// c₂, …, c_e.
    pub c: Vec<i64>,
    /// Ascending and free, i.e. the telescopic witness.
    pub telescopic: bool,
}

/// Result of scanning permutations of the minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementScan {
    pub arrangements: Vec<FreeArrangement>,
    /// False when only the ascending arrangement was checked (e > 8).
    pub exhaustive: bool,
}

fn check_arrangement(
    arr: &[i64],
    cache: &mut BTreeMap<Vec<i64>, NumericalSemigroup>,
) -> Option<FreeArrangement> {
    let e = arr.len();
    let mut d = Vec::with_capacity(e);
    let mut running = 0i64;
    for &n in arr {
        running = running.gcd(&n);
        d.push(running);
    }
    if d.windows(2).any(|w| w[0] <= w[1]) {
        return None;
    }
    let c: Vec<i64> = d.windows(2).map(|w| w[0] / w[1]).collect();
    // cᵢnᵢ ∈ ⟨n₁,…,n_{i−1}⟩ ⟺ nᵢ/d_{i+1} lies in the prefix scaled by dᵢ.
    for i in 2..=e {
        let t = i - 2;
        let mut scaled: Vec<i64> = arr[..i - 1].iter().map(|&n| n / d[t]).collect();
        scaled.sort_unstable();
        let prefix = cache
            .entry(scaled.clone())
            .or_insert_with(|| make_semigroup(&scaled).unwrap());
        if !prefix.contains(arr[i - 1] / d[t + 1]) {
            return None;
        }
    }
    let telescopic = arr.windows(2).all(|w| w[0] < w[1]);
    Some(FreeArrangement {
        generators: arr.to_vec(),
        d,
        c,
        telescopic,
    })
}

/// All free arrangements of the minimal generators (every permutation for
/// e ≤ 8; ascending only above that, flagged non-exhaustive). Empty iff the
/// semigroup is not free — modulo the e > 8 caveat.
pub fn free_arrangements(s: &NumericalSemigroup) -> ArrangementScan {
    let gens = s.generators().to_vec();
    let e = gens.len();
    let mut cache = BTreeMap::new();
    if e > 8 {
        return ArrangementScan {
            arrangements: check_arrangement(&gens, &mut cache).into_iter().collect(),
            exhaustive: false,
        };
    }
    let mut arrangements = Vec::new();
    for perm in gens.iter().copied().permutations(e) {
        if let Some(a) = check_arrangement(&perm, &mut cache) {
            arrangements.push(a);
        }
    }
    ArrangementScan {
        arrangements,
        exhaustive: true,
    }
}

/// Free with respect to at least one arrangement. N counts as free.
pub fn is_free(s: &NumericalSemigroup) -> bool {
    !free_arrangements(s).arrangements.is_empty()
}

/// Telescopic ⟺ the ascending arrangement itself is free: ascending order
/// makes the gluing condition a₂ > a₁·n automatic at every step.
pub fn is_telescopic(s: &NumericalSemigroup) -> bool {
    let mut cache = BTreeMap::new();
    check_arrangement(s.generators(), &mut cache).is_some()
}

/// A free arrangement with (cᵢ−1)/cᵢ · nᵢ ≥ n₁ for i ∈ {3,…,e}, when one
/// exists. Such an arrangement certifies E(Γ, 2) = m(Γ). None for N, where
/// the second Feng-Rao number is degenerate.
pub fn min_apery_certificate(s: &NumericalSemigroup) -> Option<FreeArrangement> {
    if s.generators() == [1] {
        return None;
    }
    free_arrangements(s).arrangements.into_iter().find(|arr| {
        let n1 = arr.generators[0];
        (3..=arr.generators.len())
            .all(|i| (arr.c[i - 2] - 1) * arr.generators[i - 1] >= arr.c[i - 2] * n1)
    })
}

/// For telescopic Γ = ⟨n₁ < … < n_e⟩: returns (#Ap(Γ, z), n₁·⌈z/n_e⌉),
/// with the left side never below the right.
pub fn telescopic_apery_bound(s: &NumericalSemigroup, z: i64) -> Result<(i64, i64)> {
    if !is_telescopic(s) {
        return Err(Error::NotTelescopic);
    }
    let n1 = s.generators()[0];
    let ne = *s.generators().last().unwrap();
    let lhs = apery_size(s, z);
    let rhs = n1 * ceil_div(z, ne);
    assert!(lhs >= rhs, "ceiling bound failed at z = {z}");
    Ok((lhs, rhs))
}

/// Ceiling-bound transfer across a gluing Γ = a₁Γ₁ + a₂Γ₂: if
/// #Ap(Γ₁, z) ≥ m(Γ₁)·⌈z/y⌉ for all z and a₂ > a₁y (with y ≥ m(Γ₁)), then
/// #Ap(Γ, z) ≥ m(Γ)·⌈z/a₂⌉ for all z. Hypothesis and conclusion are sampled
/// over z ∈ [−3a₂, 3a₂]; the conclusion is asserted, the hypothesis reported.
pub fn gluing_ceiling_transfer(g: &Gluing, y: i64) -> Result<bool> {
    let m1 = g.gamma1().multiplicity();
    if y < m1 {
        return Err(Error::InvalidParameters {
            reason: format!("y = {y} is below the inner multiplicity {m1}"),
        });
    }
    if g.a2() <= g.a1() * y {
        return Err(Error::InvalidParameters {
            reason: format!("needs a2 > a1*y, got a2 = {} <= {}", g.a2(), g.a1() * y),
        });
    }
    let range = 3 * g.a2();
    for z in -range..=range {
        if apery_size(g.gamma1(), z) < m1 * ceil_div(z, y) {
            return Err(Error::HypothesisFailed { z });
        }
    }
    let m = g.expanded().multiplicity();
    for z in -range..=range {
        assert!(
            apery_size(g.expanded(), z) >= m * ceil_div(z, g.a2()),
            "transferred bound failed at z = {z}"
        );
    }
    Ok(true)
}

/// The three case bounds behind the E(Γ, 2) estimate of a free extension
/// Γ = a₁Γ₁ + a₂N with Γ₁ ≠ N, and their minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GluedLowerBound {
    /// min{a₁·E(Γ₁,2), (a₁−1)·a₂/a₁} ≤ E(Γ, 2).
    pub bound: Rational64,
    /// Bound when z = a₁α + a₂β has α > 0: a₁·E(Γ₁, 2).
    pub positive_alpha: i64,
    /// Bound when 2 ≤ β ≤ a₁−2: strictly above a₂.
    pub middle_beta: i64,
    /// Bound when β ∈ {1, a₁−1}: strictly above (a₁−1)·a₂/a₁.
    pub edge_beta: Rational64,
}

/// Lower bound for E(Γ, 2) of a free extension Γ = a₁Γ₁ + a₂N (Γ₁ ≠ N).
pub fn glued_e2_lower_bound(g: &Gluing) -> Result<GluedLowerBound> {
    if g.gamma2().generators() != [1] || g.gamma1().generators() == [1] {
        return Err(Error::WrongShape);
    }
    let e1 = second_feng_rao_number(g.gamma1())?;
    let positive_alpha = g.a1() * e1;
    let middle_beta = g.a2();
    let edge_beta = Rational64::new((g.a1() - 1) * g.a2(), g.a1());
    let bound = Rational64::from_integer(positive_alpha).min(edge_beta);
    Ok(GluedLowerBound {
        bound,
        positive_alpha,
        middle_beta,
        edge_beta,
    })
}

/// Closed-form #Ap(Γ, z) for the three-generator complete intersection
/// Γ = ⟨σx, σy, c⟩ with c = c_x·x + c_y·y, gcd(x,y) = gcd(σ,c) = 1,
/// 0 ≤ c_y < x, c_x ≥ 0, and σ, x, y > 1.
///
/// Writing z = z_σ·σ + z_c·c (0 ≤ z_c < σ), z_σ = z_x·x + z_y·y
/// (0 ≤ z_y < x), and M(t) = max{t, 0}:
///   #Ap = (σ−z_c)·[(x−z_y)·M(z_x) + z_y·M(z_x+y)] + z_c·(second block),
/// where the second block is
///   (x−z_y−c_y)·M(z_x+c_x) + (z_y+c_y)·M(z_x+c_x+y)        if z_y+c_y < x,
///   (2x−z_y−c_y)·M(z_x+c_x+y) + (z_y+c_y−x)·M(z_x+c_x+2y)  otherwise
/// (the overflowing case re-expresses z_σ + c with its canonical y-digit).
pub fn three_gen_ci_apery_size(
    sigma: i64,
    x: i64,
    y: i64,
    cx: i64,
    cy: i64,
    z: i64,
) -> Result<i64> {
    if sigma < 2 || x < 2 || y < 2 {
        return Err(Error::InvalidParameters {
            reason: "sigma, x, y must all exceed 1".into(),
        });
    }
    if cx < 0 || cy < 0 || cy >= x {
        return Err(Error::InvalidParameters {
            reason: "needs c_x >= 0 and 0 <= c_y < x".into(),
        });
    }
    if x.gcd(&y) != 1 {
        return Err(Error::InvalidParameters {
            reason: "x and y must be coprime".into(),
        });
    }
    let c = cx * x + cy * y;
    if sigma.gcd(&c) != 1 {
        return Err(Error::InvalidParameters {
            reason: "sigma and c_x*x + c_y*y must be coprime".into(),
        });
    }
    let c_inv = c.extended_gcd(&sigma).x.rem_euclid(sigma);
    let zc = (z.rem_euclid(sigma) * c_inv).rem_euclid(sigma);
    let zs = (z - zc * c) / sigma;
    let y_inv = y.extended_gcd(&x).x.rem_euclid(x);
    let zy = (zs.rem_euclid(x) * y_inv).rem_euclid(x);
    let zx = (zs - zy * y) / x;
    debug_assert_eq!(zs * sigma + zc * c, z);
    debug_assert_eq!(zx * x + zy * y, zs);

    let m = |t: i64| t.max(0);
    let first = (sigma - zc) * ((x - zy) * m(zx) + zy * m(zx + y));
    let second = if zy + cy < x {
        zc * ((x - zy - cy) * m(zx + cx) + (zy + cy) * m(zx + cx + y))
    } else {
        zc * ((2 * x - zy - cy) * m(zx + cx + y) + (zy + cy - x) * m(zx + cx + 2 * y))
    };
    Ok(first + second)
}

/// Every telescopic semigroup with 1 ≤ genus ≤ max_genus, each reached once
/// through its canonical decomposition Γ = d_e·Γ′ + n_e·N (largest generator
/// last, the gcd of the rest in front), sorted by (genus, generators).
pub fn telescopic_up_to_genus(max_genus: i64) -> Vec<NumericalSemigroup> {
    let mut out = Vec::new();
    let mut stack = vec![make_semigroup(&[1]).unwrap()];
    while let Some(s) = stack.pop() {
        if s.genus() >= 1 {
            out.push(s.clone());
        }
        let g1 = s.genus();
        let max_gen = *s.generators().last().unwrap();
        let mut a1 = 2i64;
        loop {
            // Smallest admissible a₂ exceeds a₁·max_gen; genus grows with
            // both parameters, so overshoot here ends the a₁ loop too.
            let a2_floor = a1 * max_gen + 1;
            if 2 * a1 * g1 + (a1 - 1) * (a2_floor - 1) > 2 * max_genus {
                break;
            }
            let mut a2 = a2_floor;
            while 2 * a1 * g1 + (a1 - 1) * (a2 - 1) <= 2 * max_genus {
                if a1.gcd(&a2) == 1 && s.contains(a2) {
                    let mut gens: Vec<i64> =
                        s.generators().iter().map(|&g| g * a1).collect();
                    gens.push(a2);
                    let child = make_semigroup(&gens).unwrap();
                    assert_eq!(
                        child.genus(),
                        a1 * g1 + (a1 - 1) * (a2 - 1) / 2,
                        "gluing genus law failed"
                    );
                    stack.push(child);
                }
                a2 += 1;
            }
            a1 += 1;
        }
    }
    out.sort_by(|a, b| {
        (a.genus(), a.generators())
            .cmp(&(b.genus(), b.generators()))
    });
    out
}
