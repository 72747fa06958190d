//! Alexander polynomials of braid closures, torus knots and cables, and
//! Torres specializations.
//!
//! The multivariable polynomial of a link with μ ≥ 2 components is read off
//! the Alexander matrix of the closure presentation: deleting the column of
//! generator `j` leaves a square matrix whose determinant is
//! `(t_{c(j)} − 1)·Δ_L` up to units, and the division is exact. For knots the
//! minor is Δ itself. No multivariate gcd is ever taken.

use num_integer::Integer;
use serde::Serialize;

use crate::braid::{closure_info, BraidWord};
use crate::error::{Error, Result};
use crate::fox::{alexander_matrix, closure_presentation};
use crate::laurent::{LaurentPoly, PolyMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    MinorDivision,
    Burau,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlexanderResult {
    /// Normalized with [`LaurentPoly::normalize_symmetric`].
    pub poly: LaurentPoly,
    pub num_components: usize,
    pub route: Route,
}

/// `det(A with column j deleted)`, divided by `(t_{c(j)} − 1)` when the
/// closure has at least two components. Not normalized.
pub fn alexander_minor(b: &BraidWord, column: usize) -> Result<LaurentPoly> {
    let pres = closure_presentation(b);
    let m = alexander_matrix(&pres)?;
    if column >= m.cols() {
        return Err(Error::IndexOutOfRange {
            index: column,
            len: m.cols(),
        });
    }
    let nv = m.num_vars();
    let det = m.without_column(column).det()?;
    if nv >= 2 {
        let color = pres.coloring.as_ref().ok_or(Error::MissingColoring)?[column];
        det.exact_div(&LaurentPoly::var_pow_minus_one(nv, color, 1))
    } else {
        Ok(det)
    }
}

/// Multivariable Alexander polynomial of the closure of `b`, one variable
/// per component (component order as in [`closure_info`]).
pub fn alexander_from_braid(b: &BraidWord) -> Result<AlexanderResult> {
    let num_components = closure_info(b).num_components();
    let poly = alexander_minor(b, 0)?;
    if cfg!(debug_assertions) && b.strands() > 1 && b.strands() <= 6 {
        let other = alexander_minor(b, b.strands() - 1)?;
        debug_assert!(
            poly.equal_up_to_units(&other),
            "column-deletion results disagree: {poly} vs {other}"
        );
    }
    Ok(AlexanderResult {
        poly: poly.normalize_symmetric(),
        num_components,
        route: Route::MinorDivision,
    })
}

/// Right-multiplies `m` by the reduced Burau matrix of one letter. Only the
/// column of the generator changes.
fn burau_apply(m: &mut PolyMatrix, letter: i32) {
    let dim = m.rows();
    let i = letter.unsigned_abs() as usize;
    let col = i - 1;
    let t = LaurentPoly::var(1, 0);
    let t_inv = LaurentPoly::univariate(-1, &[1]);
    let (left_w, mid_w, right_w) = if letter > 0 {
        (t.clone(), -&t, LaurentPoly::one(1))
    } else {
        (LaurentPoly::one(1), -&t_inv, t_inv)
    };
    for r in 0..dim {
        let mut acc = m.get(r, col) * &mid_w;
        if col >= 1 {
            acc = &acc + &(m.get(r, col - 1) * &left_w);
        }
        if col + 1 < dim {
            acc = &acc + &(m.get(r, col + 1) * &right_w);
        }
        m.set(r, col, acc);
    }
}

/// Reduced Burau matrix of the braid, `(k−1) × (k−1)` over `Z[t^±1]`.
pub fn reduced_burau(b: &BraidWord) -> PolyMatrix {
    let mut m = PolyMatrix::identity(b.strands() - 1, 1);
    for &l in b.letters() {
        burau_apply(&mut m, l);
    }
    m
}

/// Δ of a knot closure via `det(I − B̄(β))·(t − 1)/(t^k − 1)`.
pub fn alexander_burau(b: &BraidWord) -> Result<LaurentPoly> {
    let info = closure_info(b);
    if !info.is_knot() {
        return Err(Error::NotAKnot {
            components: info.num_components(),
        });
    }
    let k = b.strands();
    let burau = reduced_burau(b);
    let det = PolyMatrix::identity(k - 1, 1).sub(&burau)?.det()?;
    let num = det.mul(&LaurentPoly::var_pow_minus_one(1, 0, 1))?;
    Ok(num
        .exact_div(&LaurentPoly::var_pow_minus_one(1, 0, k as i64))?
        .normalize_symmetric())
}

/// `(t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1))`, normalized.
pub fn torus_knot_alexander(p: i64, q: i64) -> Result<LaurentPoly> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidParameter(format!(
            "torus knot parameters must be positive, got ({p}, {q})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let f = |k: i64| LaurentPoly::var_pow_minus_one(1, 0, k);
    let num = f(p * q).mul(&f(1))?;
    let den = f(p).mul(&f(q))?;
    Ok(num.exact_div(&den)?.normalize_symmetric())
}

/// Satellite formula for the (p,q)-cable: `Δ_K(t^p)·Δ_{T(p,q)}(t)`.
/// `companion` must be univariate.
pub fn cable_alexander(companion: &LaurentPoly, p: i64, q: i64) -> Result<LaurentPoly> {
    if companion.num_vars() != 1 {
        return Err(Error::Arity {
            expected: 1,
            found: companion.num_vars(),
        });
    }
    if p < 1 {
        return Err(Error::InvalidParameter(format!(
            "cable parameter p must be positive, got {p}"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let pattern = if q == 0 {
        LaurentPoly::one(1)
    } else {
        torus_knot_alexander(p, q.abs())?
    };
    let lifted = companion.substitute(&[LaurentPoly::monomial(1, vec![p], 1)])?;
    Ok(lifted.mul(&pattern)?.normalize_symmetric())
}

/// Sets the variable of `component` to 1.
pub fn torres_specialize(link_poly: &LaurentPoly, component: usize) -> Result<LaurentPoly> {
    if link_poly.num_vars() < 2 {
        return Err(Error::Arity {
            expected: 2,
            found: link_poly.num_vars(),
        });
    }
    link_poly.specialize_to_one(component)
}

/// Right-hand side of the Torres formula for removing `component`.
///
/// `linking[j]` is lk(K_component, K_j) and `sublink_poly` is Δ of the
/// remaining sublink written in the same `n` variables (the removed variable
/// absent). For two components the factor is `(t^{lk} − 1)/(t − 1)`, for
/// more it is `Π t_j^{lk_j} − 1`.
pub fn torres_prediction(
    component: usize,
    linking: &[i64],
    sublink_poly: &LaurentPoly,
) -> Result<LaurentPoly> {
    let n = sublink_poly.num_vars();
    if linking.len() != n {
        return Err(Error::Arity {
            expected: n,
            found: linking.len(),
        });
    }
    if component >= n {
        return Err(Error::IndexOutOfRange {
            index: component,
            len: n,
        });
    }
    if n < 2 {
        return Err(Error::Arity {
            expected: 2,
            found: n,
        });
    }
    let mut e = vec![0i64; n];
    for (j, &l) in linking.iter().enumerate() {
        if j != component {
            e[j] = l;
        }
    }
    let mut factor = LaurentPoly::monomial(n, e, 1).sub(&LaurentPoly::one(n))?;
    if n == 2 {
        let other = 1 - component;
        factor = factor.exact_div(&LaurentPoly::var_pow_minus_one(n, other, 1))?;
    }
    factor.mul(sublink_poly)
}

/// Checks `Δ_L|_{t_component = 1} ≐ torres_prediction(..)`.
pub fn torres_check(
    link_poly: &LaurentPoly,
    component: usize,
    linking: &[i64],
    sublink_poly: &LaurentPoly,
) -> Result<bool> {
    let lhs = torres_specialize(link_poly, component)?;
    let rhs = torres_prediction(component, linking, sublink_poly)?;
    Ok(lhs.equal_up_to_units(&rhs))
}

pub fn nonzero_term_count(p: &LaurentPoly) -> usize {
    p.nonzero_term_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::torus_braid;

    fn uni(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::univariate(low, c)
    }

    #[test]
    fn trefoil_routes() {
        let b = torus_braid(2, 3).unwrap();
        let expected = uni(0, &[1, -1, 1]);
        let minor = alexander_from_braid(&b).unwrap();
        assert_eq!(minor.num_components, 1);
        assert_eq!(minor.poly, uni(-1, &[1, -1, 1]));
        assert!(alexander_burau(&b).unwrap().equal_up_to_units(&expected));
        assert!(torus_knot_alexander(2, 3)
            .unwrap()
            .equal_up_to_units(&expected));
    }

    #[test]
    fn unknot_is_one() {
        let b = BraidWord::trivial(1).unwrap();
        assert!(alexander_from_braid(&b).unwrap().poly.is_one());
        assert!(alexander_burau(&b).unwrap().is_one());
        assert!(torus_knot_alexander(1, 7).unwrap().is_one());
    }

    #[test]
    fn hopf_link_is_unit() {
        let b = BraidWord::new(2, vec![1, 1]).unwrap();
        let r = alexander_from_braid(&b).unwrap();
        assert_eq!(r.num_components, 2);
        assert!(r.poly.is_one());
    }

    #[test]
    fn split_link_is_zero() {
        let r = alexander_from_braid(&BraidWord::trivial(2).unwrap()).unwrap();
        assert!(r.poly.is_zero());
    }

    #[test]
    fn burau_rejects_links() {
        let b = BraidWord::new(2, vec![1, 1]).unwrap();
        assert_eq!(alexander_burau(&b), Err(Error::NotAKnot { components: 2 }));
    }

    #[test]
    fn torus_closed_form() {
        let t34 = torus_knot_alexander(3, 4).unwrap();
        assert!(t34.equal_up_to_units(&uni(0, &[1, -1, 0, 1, 0, -1, 1])));
        assert_eq!(nonzero_term_count(&t34), 5);
        assert_eq!(
            torus_knot_alexander(2, 4),
            Err(Error::NotCoprime { p: 2, q: 4 })
        );
        assert!(torus_knot_alexander(0, 3).is_err());
    }

    #[test]
    fn cable_formula_cases() {
        let tref = uni(0, &[1, -1, 1]);
        assert!(cable_alexander(&tref, 1, 1)
            .unwrap()
            .equal_up_to_units(&tref));
        assert!(cable_alexander(&tref, 1, 0)
            .unwrap()
            .equal_up_to_units(&tref));
        let one = LaurentPoly::one(1);
        assert!(cable_alexander(&one, 2, 5)
            .unwrap()
            .equal_up_to_units(&torus_knot_alexander(2, 5).unwrap()));
        assert!(cable_alexander(&tref, 3, 1)
            .unwrap()
            .equal_up_to_units(&uni(0, &[1, 0, 0, -1, 0, 0, 1])));
        assert!(cable_alexander(&tref, 2, 4).is_err());
    }

    #[test]
    fn torres_prediction_shapes() {
        // two components, lk = 1: factor is 1
        let sub = LaurentPoly::univariate(0, &[1, -1, 1])
            .relabel(2, &[1])
            .unwrap();
        let pred = torres_prediction(0, &[0, 1], &sub).unwrap();
        assert_eq!(pred, sub);
        // lk = 2: factor (t2^2 - 1)/(t2 - 1) = t2 + 1
        let pred = torres_prediction(0, &[0, 2], &LaurentPoly::one(2)).unwrap();
        assert_eq!(pred, LaurentPoly::parse("1 + t2", 2).unwrap());
        // three components: factor t2 * t3^0 - 1
        let pred = torres_prediction(0, &[0, 1, 0], &LaurentPoly::one(3)).unwrap();
        assert_eq!(pred, LaurentPoly::parse("t2 - 1", 3).unwrap());
        assert!(torres_specialize(&LaurentPoly::one(1), 0).is_err());
    }

    #[test]
    fn specialization_of_absent_variable_is_identity() {
        let p = LaurentPoly::parse("t2^2 - t2 + 1", 2).unwrap();
        assert_eq!(torres_specialize(&p, 0).unwrap(), p);
    }
}
