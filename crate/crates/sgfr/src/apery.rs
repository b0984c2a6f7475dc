//! Generalized Apéry sets and divisor sets.
//!
//! For any integer x (member or not, any sign), Ap(Γ, x) = {a ∈ Γ | a − x ∉ Γ}
//! is finite, and D(z) = {s ∈ Γ | z − s ∈ Γ} collects the divisors of z in Γ.
//! Both drive the Feng-Rao machinery: #Ap governs the generalized Feng-Rao
//! numbers and #D the classical Feng-Rao distance.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;
use serde_json::json;

/// Ap(Γ, x) with its defining data attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperySet {
    semigroup: NumericalSemigroup,
    shift: i64,
    elements: Vec<i64>,
}

/// D(z) (or a union of divisor sets) with its defining data attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorSet {
    semigroup: NumericalSemigroup,
    targets: Vec<i64>,
    elements: Vec<i64>,
}

/// Both named splits of Ap(Γ, x + y) for y ∈ Γ:
/// Ap(Γ, x+y) = Ap(Γ, x) ∪ (y + Ap(Γ, x)) ∪ (Ap(Γ, y) ∩ (x + Ap(Γ, y))).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftSplit {
    pub base: Vec<i64>,
    pub translated: Vec<i64>,
    pub intersection: Vec<i64>,
    /// −x ∈ Γ forces Ap(Γ, x) = ∅, so the union collapses to the intersection.
    pub collapses_to_intersection: bool,
    /// |x| avoids every difference within Ap(Γ, y) (and is nonzero), so the
    /// intersection is redundant: Ap(Γ, x+y) = {0, y} + Ap(Γ, x).
    pub translate_only: bool,
}

/// Every w ∈ Ap(Γ, x) satisfies w < conductor + max(x, 0): above that,
/// w − x ≥ conductor would be a member.
fn window(s: &NumericalSemigroup, x: i64) -> i64 {
    if x > 0 {
        s.conductor() + x
    } else {
        s.conductor() - x
    }
}

/// Ap(Γ, x), sorted ascending. Empty iff −x ∈ Γ (in particular for x = 0).
pub fn apery(s: &NumericalSemigroup, x: i64) -> AperySet {
    let elements = (0..window(s, x))
        .filter(|&w| s.contains(w) && !s.contains(w - x))
        .collect();
    AperySet {
        semigroup: s.clone(),
        shift: x,
        elements,
    }
}

/// #Ap(Γ, x) without materializing the set.
pub fn apery_size(s: &NumericalSemigroup, x: i64) -> i64 {
    (0..window(s, x))
        .filter(|&w| s.contains(w) && !s.contains(w - x))
        .count() as i64
}

/// D(z) = {s ∈ Γ | z − s ∈ Γ}, sorted ascending; empty exactly when z ∉ Γ.
pub fn divisors(s: &NumericalSemigroup, z: i64) -> DivisorSet {
    let elements = divisor_elements(s, z);
    DivisorSet {
        semigroup: s.clone(),
        targets: vec![z],
        elements,
    }
}

fn divisor_elements(s: &NumericalSemigroup, z: i64) -> Vec<i64> {
    (0..=z.max(-1))
        .filter(|&t| s.contains(t) && s.contains(z - t))
        .collect()
}

/// #D(z).
pub fn divisor_count(s: &NumericalSemigroup, z: i64) -> i64 {
    (0..=z.max(-1))
        .filter(|&t| s.contains(t) && s.contains(z - t))
        .count() as i64
}

/// D(b₁) ∪ … ∪ D(b_r) for a strictly increasing list of members.
pub fn divisors_union(s: &NumericalSemigroup, targets: &[i64]) -> Result<DivisorSet> {
    if targets.is_empty() || targets.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotIncreasing);
    }
    for &b in targets {
        if !s.contains(b) {
            return Err(Error::NotMember { value: b });
        }
    }
    let hi = *targets.last().unwrap();
    let elements = (0..=hi)
        .filter(|&t| s.contains(t) && targets.iter().any(|&b| s.contains(b - t)))
        .collect();
    Ok(DivisorSet {
        semigroup: s.clone(),
        targets: targets.to_vec(),
        elements,
    })
}

/// Splits Ap(Γ, g + h) for members g, h as Ap(Γ, g) ⊔ (g + Ap(Γ, h));
/// returns the combined set and the verbatim translated part.
pub fn apery_sum_split(
    s: &NumericalSemigroup,
    g: i64,
    h: i64,
) -> Result<(AperySet, Vec<i64>)> {
    for v in [g, h] {
        if !s.contains(v) {
            return Err(Error::NotMember { value: v });
        }
    }
    let base = apery(s, g);
    let translated: Vec<i64> = apery(s, h).elements.iter().map(|&w| w + g).collect();
    let mut elements = base.elements.clone();
    elements.extend_from_slice(&translated);
    elements.sort_unstable();
    elements.dedup();
    Ok((
        AperySet {
            semigroup: s.clone(),
            shift: g + h,
            elements,
        },
        translated,
    ))
}

/// Splits Ap(Γ, x + y) for arbitrary x and a member y into the three pieces
/// Ap(Γ, x), y + Ap(Γ, x), and Ap(Γ, y) ∩ (x + Ap(Γ, y)), with flags for the
/// two degenerate regimes.
pub fn apery_shift_split(s: &NumericalSemigroup, x: i64, y: i64) -> Result<ShiftSplit> {
    if !s.contains(y) {
        return Err(Error::NotMember { value: y });
    }
    let base = apery(s, x).elements;
    let translated: Vec<i64> = base.iter().map(|&w| w + y).collect();
    let ap_y = apery(s, y).elements;
    let intersection: Vec<i64> = ap_y
        .iter()
        .copied()
        .filter(|&w| ap_y.binary_search(&(w - x)).is_ok())
        .collect();
    let collapses_to_intersection = s.contains(-x);
    let translate_only = x != 0
        && !ap_y
            .iter()
            .flat_map(|&lo| ap_y.iter().map(move |&hi| hi - lo))
            .any(|d| d == x.abs());
    Ok(ShiftSplit {
        base,
        translated,
        intersection,
        collapses_to_intersection,
        translate_only,
    })
}

impl AperySet {
    pub(crate) fn from_parts(
        semigroup: NumericalSemigroup,
        shift: i64,
        mut elements: Vec<i64>,
    ) -> AperySet {
        elements.sort_unstable();
        elements.dedup();
        AperySet {
            semigroup,
            shift,
            elements,
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> i64 {
        self.elements.len() as i64
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "semigroup": self.semigroup.to_string(),
            "shift": self.shift,
            "elements": self.elements,
        })
    }
}

impl DivisorSet {
    pub(crate) fn from_parts(
        semigroup: NumericalSemigroup,
        targets: Vec<i64>,
        mut elements: Vec<i64>,
    ) -> DivisorSet {
        elements.sort_unstable();
        elements.dedup();
        DivisorSet {
            semigroup,
            targets,
            elements,
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn targets(&self) -> &[i64] {
        &self.targets
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    pub fn len(&self) -> i64 {
        self.elements.len() as i64
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "semigroup": self.semigroup.to_string(),
            "targets": self.targets,
            "elements": self.elements,
        })
    }
}
