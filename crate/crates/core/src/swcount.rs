//! Seiberg–Witten polynomials of link surgery manifolds via the product
//! formula `SW = Π SWᵢ(tᵢ) · Δ_L(t₁², …, t_n²)`, and basic-class counts along
//! the curve families.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::alexander::{
    alexander_from_braid, cable_alexander, nonzero_term_count, torres_check, torus_knot_alexander,
};
use crate::braid::{
    cable_family_descriptor, closure_info, family_link_braid, FamilyKind, KnotType,
};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::surgery::LinkSurgeryDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SWPolynomial {
    pub poly: LaurentPoly,
    pub delta: LaurentPoly,
    pub descriptor: LinkSurgeryDescriptor,
}

pub fn sw_polynomial(desc: &LinkSurgeryDescriptor, delta: &LaurentPoly) -> Result<SWPolynomial> {
    let n = desc.num_components();
    if n < 2 {
        return Err(Error::TooFewComponents(n));
    }
    if delta.num_vars() != n {
        return Err(Error::Arity {
            expected: n,
            found: delta.num_vars(),
        });
    }
    let squares: Vec<LaurentPoly> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 2;
            LaurentPoly::monomial(n, e, 1)
        })
        .collect();
    let mut poly = delta.substitute(&squares)?;
    for (i, sw) in desc.relative_sw.iter().enumerate() {
        if !sw.is_one() {
            poly = poly.mul(&sw.relabel(n, &[i])?)?;
        }
    }
    Ok(SWPolynomial {
        poly,
        delta: delta.clone(),
        descriptor: desc.clone(),
    })
}

/// Number of basic classes: monomials with nonzero coefficient.
pub fn basic_class_count(sw: &SWPolynomial) -> usize {
    sw.poly.nonzero_term_count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaRow {
    pub p: i64,
    pub gamma: KnotType,
    /// Term count of the Torres specialization of Δ_L at the knot K.
    pub lower_bound: usize,
    /// β_p, when the full Δ_L was computed from the braid model.
    pub beta: Option<usize>,
    /// Whether the computed Δ_L satisfies the Torres prediction.
    pub torres_verified: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BetaTable {
    pub family: FamilyKind,
    pub rows: Vec<BetaRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Compute the full Δ_L (and hence β_p) for members with p up to this.
    pub full_delta_max_p: i64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            full_delta_max_p: 4,
        }
    }
}

fn trefoil_delta() -> LaurentPoly {
    LaurentPoly::univariate(0, &[1, -1, 1])
}

/// Δ of γ_p as a knot in S³.
pub fn gamma_alexander(kind: FamilyKind, p: i64) -> Result<LaurentPoly> {
    match kind {
        FamilyKind::CircleSum | FamilyKind::TrefoilFiber => torus_knot_alexander(p, p + 1),
        FamilyKind::Cable => cable_alexander(&trefoil_delta(), p, 1),
    }
}

/// Torres lower bound for β_p: the term count of `Δ_L` with `t_K = 1`, which
/// is `nonzero_term_count(Δ_{γ_p})` for the two-component families and twice
/// it for `K ∪ M ∪ γ_p`, where the factor `t_M − 1` doubles the terms.
pub fn torres_lower_bound(kind: FamilyKind, p: i64) -> Result<usize> {
    let count = nonzero_term_count(&gamma_alexander(kind, p)?);
    Ok(match kind {
        FamilyKind::TrefoilFiber => 2 * count,
        FamilyKind::CircleSum | FamilyKind::Cable => count,
    })
}

fn sweep_row(kind: FamilyKind, p: i64, opts: SweepOptions) -> Result<BetaRow> {
    let member = cable_family_descriptor(kind, p, 1)?;
    let lower_bound = torres_lower_bound(kind, p)?;
    let (beta, torres_verified) = if p <= opts.full_delta_max_p {
        let braid = family_link_braid(&member)?;
        let info = closure_info(&braid);
        let delta = alexander_from_braid(&braid)?.poly;
        let n = info.num_components();
        let desc = LinkSurgeryDescriptor::with_unit_fiber(info.linking.clone())?;
        let sw = sw_polynomial(&desc, &delta)?;
        let gamma = gamma_alexander(kind, p)?.relabel(n, &[n - 1])?;
        let ok = torres_check(&delta, 0, &info.linking[0], &gamma)?;
        (Some(basic_class_count(&sw)), Some(ok))
    } else {
        (None, None)
    };
    Ok(BetaRow {
        p,
        gamma: member.gamma,
        lower_bound,
        beta,
        torres_verified,
    })
}

/// Rows ordered by p; members are evaluated in parallel.
pub fn beta_sweep(
    kind: FamilyKind,
    ps: RangeInclusive<i64>,
    opts: SweepOptions,
) -> Result<BetaTable> {
    if ps.is_empty() {
        return Err(Error::InvalidParameter("empty p range".into()));
    }
    let ps: Vec<i64> = ps.collect();
    let rows = ps
        .par_iter()
        .map(|&p| sweep_row(kind, p, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(BetaTable { family: kind, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf_desc() -> LinkSurgeryDescriptor {
        LinkSurgeryDescriptor::with_unit_fiber(vec![vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn squares_variables() {
        let delta = LaurentPoly::parse("t1 - 1 + t2^-1", 2).unwrap();
        let sw = sw_polynomial(&hopf_desc(), &delta).unwrap();
        assert_eq!(sw.poly, LaurentPoly::parse("t1^2 - 1 + t2^-2", 2).unwrap());
        assert_eq!(basic_class_count(&sw), 3);
    }

    #[test]
    fn unit_delta_and_relative_factor() {
        let sw = sw_polynomial(&hopf_desc(), &LaurentPoly::one(2)).unwrap();
        assert!(sw.poly.is_one());
        assert_eq!(basic_class_count(&sw), 1);
        let rel = LaurentPoly::parse("t - t^-1", 1).unwrap();
        let desc = hopf_desc()
            .with_relative_sw(vec![rel, LaurentPoly::one(1)])
            .unwrap();
        let sw = sw_polynomial(&desc, &LaurentPoly::one(2)).unwrap();
        assert_eq!(sw.poly, LaurentPoly::parse("t1 - t1^-1", 2).unwrap());
        let zero = sw_polynomial(&hopf_desc(), &LaurentPoly::zero(2)).unwrap();
        assert_eq!(basic_class_count(&zero), 0);
    }

    #[test]
    fn rejects_knots_and_arity() {
        let knot = LinkSurgeryDescriptor::with_unit_fiber(vec![vec![0]]).unwrap();
        assert!(matches!(
            sw_polynomial(&knot, &LaurentPoly::one(1)),
            Err(Error::TooFewComponents(1))
        ));
        assert!(sw_polynomial(&hopf_desc(), &LaurentPoly::one(3)).is_err());
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(torres_lower_bound(FamilyKind::CircleSum, 1).unwrap(), 1);
        assert_eq!(torres_lower_bound(FamilyKind::CircleSum, 2).unwrap(), 3);
        assert_eq!(torres_lower_bound(FamilyKind::CircleSum, 3).unwrap(), 5);
        assert_eq!(torres_lower_bound(FamilyKind::TrefoilFiber, 2).unwrap(), 6);
        assert_eq!(torres_lower_bound(FamilyKind::Cable, 4).unwrap(), 3);
    }

    #[test]
    fn small_sweep_is_ordered_and_consistent() {
        let t = beta_sweep(
            FamilyKind::CircleSum,
            1..=3,
            SweepOptions {
                full_delta_max_p: 3,
            },
        )
        .unwrap();
        assert_eq!(
            t.rows.iter().map(|r| r.p).collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        for r in &t.rows {
            assert_eq!(r.torres_verified, Some(true));
            assert!(r.beta.unwrap() >= r.lower_bound);
        }
        let (lo, hi) = (3, 2);
        assert!(beta_sweep(FamilyKind::CircleSum, lo..=hi, SweepOptions::default()).is_err());
    }
}
