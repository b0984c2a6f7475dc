//! Named families built as towers of gluings: generalized Hermitian
//! semigroups H_{q,r}, generalized Suzuki semigroups S_{p,n}, and the
//! intermediate family Γ₁(p,n) sitting inside the Suzuki tower.

use crate::error::{Error, Result};
use crate::fengrao::second_feng_rao_number;
use crate::gluing::{make_gluing, Gluing};
use crate::semigroup::{make_semigroup, NumericalSemigroup};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Hermitian { q: i64, r: i64 },
    Suzuki { p: i64, n: i64 },
    SuzukiGamma1 { p: i64, n: i64 },
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Hermitian { q, r } => write!(f, "hermitian q={q} r={r}"),
            FamilyKind::Suzuki { p, n } => write!(f, "suzuki p={p} n={n}"),
            FamilyKind::SuzukiGamma1 { p, n } => write!(f, "suzuki-gamma1 p={p} n={n}"),
        }
    }
}

/// A family member: the flat generator list and the gluing tower are built
/// independently and asserted to expand to the same semigroup, so a
/// transcription slip in either formula fails construction immediately.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub expanded: NumericalSemigroup,
    pub tower: Gluing,
    pub closed_form_e2: i64,
}

impl FamilySpec {
    /// Recomputes E(Γ, 2) from scratch and compares to the closed form.
    pub fn verify_e2(&self) -> Result<bool> {
        Ok(second_feng_rao_number(&self.expanded)? == self.closed_form_e2)
    }
}

fn pow(base: i64, exp: i64) -> Result<i64> {
    let e = u32::try_from(exp).map_err(|_| Error::InvalidParameters {
        reason: "negative exponent".into(),
    })?;
    base.checked_pow(e).ok_or(Error::InvalidParameters {
        reason: "parameter overflow".into(),
    })
}

/// H_{q,r} = ⟨q^{r−1}, q^{r−1}+q^{r−2}, q^r+1⟩ = q^{r−2}·⟨q,q+1⟩ + (q^r+1)·N,
/// telescopic with E₂ = q^{r−1}. At r = 2 this degenerates to the classical
/// Hermitian ⟨q, q+1⟩, realized as the two-step tower q·N + (q+1)·N because
/// a scale factor of 1 is a minimal generator of N and cannot glue.
pub fn hermitian(q: i64, r: i64) -> Result<FamilySpec> {
    if q < 2 || r < 2 {
        return Err(Error::InvalidParameters {
            reason: "needs q >= 2 and r >= 2".into(),
        });
    }
    let n = make_semigroup(&[1]).unwrap();
    let flat = make_semigroup(&[
        pow(q, r - 1)?,
        pow(q, r - 1)? + pow(q, r - 2)?,
        pow(q, r)? + 1,
    ])?;
    let tower = if r == 2 {
        make_gluing(q, n.clone(), q + 1, n)?
    } else {
        let inner = make_semigroup(&[q, q + 1]).unwrap();
        make_gluing(pow(q, r - 2)?, inner, pow(q, r)? + 1, n)?
    };
    assert_eq!(&flat, tower.expanded(), "family formulas disagree");
    Ok(FamilySpec {
        kind: FamilyKind::Hermitian { q, r },
        expanded: flat,
        tower,
        closed_form_e2: pow(q, r - 1)?,
    })
}

/// S_{p,n} = ⟨p^{2n+1}, p^{2n+1}+pⁿ, p^{2n+1}+p^{n+1}, p^{2n+1}+p^{n+1}+1⟩
/// = pⁿ·Γ₁(p,n) + (p^{2n+1}+p^{n+1}+1)·N, with E₂ = p^{2n+1} − p^{2n} + pⁿ.
pub fn suzuki(p: i64, n: i64) -> Result<FamilySpec> {
    if p < 2 || n < 1 {
        return Err(Error::InvalidParameters {
            reason: "needs p >= 2 and n >= 1".into(),
        });
    }
    let base = pow(p, 2 * n + 1)?;
    let pn = pow(p, n)?;
    let pn1 = pow(p, n + 1)?;
    let flat = make_semigroup(&[base, base + pn, base + pn1, base + pn1 + 1])?;
    let inner = suzuki_gamma1(p, n)?;
    let tower = make_gluing(pn, inner.expanded, base + pn1 + 1, make_semigroup(&[1]).unwrap())?;
    assert_eq!(&flat, tower.expanded(), "family formulas disagree");
    Ok(FamilySpec {
        kind: FamilyKind::Suzuki { p, n },
        expanded: flat,
        tower,
        closed_form_e2: base - pow(p, 2 * n)? + pn,
    })
}

/// Γ₁(p,n) = ⟨p^{n+1}, p^{n+1}+1, p^{n+1}+p⟩ = p·⟨pⁿ, pⁿ+1⟩ + (p^{n+1}+1)·N,
/// free but not telescopic, with E₂ = p^{n+1} − pⁿ + 1.
pub fn suzuki_gamma1(p: i64, n: i64) -> Result<FamilySpec> {
    if p < 2 || n < 1 {
        return Err(Error::InvalidParameters {
            reason: "needs p >= 2 and n >= 1".into(),
        });
    }
    let pn = pow(p, n)?;
    let pn1 = pow(p, n + 1)?;
    let flat = make_semigroup(&[pn1, pn1 + 1, pn1 + p])?;
    let inner = make_semigroup(&[pn, pn + 1]).unwrap();
    let tower = make_gluing(p, inner, pn1 + 1, make_semigroup(&[1]).unwrap())?;
    assert_eq!(&flat, tower.expanded(), "family formulas disagree");
    Ok(FamilySpec {
        kind: FamilyKind::SuzukiGamma1 { p, n },
        expanded: flat,
        tower,
        closed_form_e2: pn1 - pn + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apery::apery_size;
    use crate::fengrao::{is_free, is_telescopic};

    #[test]
    fn hermitian_members() {
        let h = hermitian(2, 3).unwrap();
        assert_eq!(h.expanded.generators(), &[4, 6, 9]);
        assert_eq!(h.expanded.genus(), 6);
        assert_eq!(h.closed_form_e2, 4);
        assert!(h.verify_e2().unwrap());
        assert!(is_telescopic(&h.expanded));

        let h = hermitian(2, 4).unwrap();
        assert_eq!(h.expanded.generators(), &[8, 12, 17]);
        assert_eq!(h.expanded.genus(), 28);

        let h = hermitian(3, 3).unwrap();
        assert_eq!(h.expanded.generators(), &[9, 12, 28]);
        assert_eq!(h.closed_form_e2, 9);
        assert!(h.verify_e2().unwrap());

        // Classical Hermitian at r = 2.
        let h = hermitian(3, 2).unwrap();
        assert_eq!(h.expanded.generators(), &[3, 4]);
        assert_eq!(h.closed_form_e2, 3);
        assert!(h.verify_e2().unwrap());

        assert!(hermitian(1, 3).is_err());
        assert!(hermitian(2, 1).is_err());
    }

    #[test]
    fn suzuki_members() {
        let s = suzuki(2, 1).unwrap();
        assert_eq!(s.expanded.generators(), &[8, 10, 12, 13]);
        assert_eq!(s.expanded.genus(), 14);
        assert_eq!(s.expanded.conductor(), 28);
        assert_eq!(s.closed_form_e2, 6);
        assert!(s.verify_e2().unwrap());
        assert!(!is_telescopic(&s.expanded));

        let s = suzuki(3, 1).unwrap();
        assert_eq!(s.expanded.generators(), &[27, 30, 36, 37]);
        assert_eq!(s.closed_form_e2, 21);
        assert!(s.verify_e2().unwrap());

        let s = suzuki(2, 2).unwrap();
        assert_eq!(s.expanded.generators(), &[32, 36, 40, 41]);
        assert_eq!(s.closed_form_e2, 20);

        assert!(suzuki(2, 0).is_err());
    }

    #[test]
    fn gamma1_members() {
        let g = suzuki_gamma1(2, 1).unwrap();
        assert_eq!(g.expanded.generators(), &[4, 5, 6]);
        assert_eq!(g.closed_form_e2, 3);
        assert!(g.verify_e2().unwrap());
        assert!(is_free(&g.expanded));
        assert!(!is_telescopic(&g.expanded));

        let g = suzuki_gamma1(2, 2).unwrap();
        assert_eq!(g.expanded.generators(), &[8, 9, 10]);
        assert_eq!(g.closed_form_e2, 5);
        assert!(g.verify_e2().unwrap());

        let g = suzuki_gamma1(3, 1).unwrap();
        assert_eq!(g.expanded.generators(), &[9, 10, 12]);
        assert_eq!(g.closed_form_e2, 7);
        assert!(g.verify_e2().unwrap());
    }

    #[test]
    fn tower_witnesses() {
        // #Ap(Γ₁(p,n), 1) = p^{n+1} − pⁿ + 1 …
        for (p, n) in [(2, 1), (2, 2), (3, 1)] {
            let g1 = suzuki_gamma1(p, n).unwrap();
            assert_eq!(apery_size(&g1.expanded, 1), g1.closed_form_e2);
            // … and #Ap(S_{p,n}, pⁿ) = pⁿ·#Ap(Γ₁(p,n), 1).
            let s = suzuki(p, n).unwrap();
            let pn = s.tower.a1();
            assert_eq!(
                apery_size(&s.expanded, pn),
                pn * apery_size(&g1.expanded, 1)
            );
        }
    }
}
