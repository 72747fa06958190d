//! Sparse multivariable Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! A polynomial is a map from exponent vectors (possibly negative) to nonzero
//! coefficients. The map is a `BTreeMap`, so iteration order is the
//! lexicographic order on exponent vectors and doubles as the canonical order
//! for serialization. The zero polynomial is the empty map.

mod io;
mod matrix;

pub use matrix::{PolyMatrix, COFACTOR_THRESHOLD};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Exponents = Vec<i64>;

/// A single term `coefficient * t^exponents`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coefficient: BigInt,
    pub exponents: Exponents,
}

impl Monomial {
    pub fn new(coefficient: impl Into<BigInt>, exponents: Exponents) -> Self {
        Monomial {
            coefficient: coefficient.into(),
            exponents,
        }
    }

    /// `+t^exponents`.
    pub fn unit(exponents: Exponents) -> Self {
        Monomial {
            coefficient: BigInt::one(),
            exponents,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.coefficient.abs().is_one()
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::monomial(
            self.exponents.len(),
            self.exponents.clone(),
            self.coefficient.clone(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    num_vars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero(num_vars: usize) -> Self {
        LaurentPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, 1)
    }

    pub fn constant(num_vars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(num_vars, vec![0; num_vars], c)
    }

    /// The variable `t_{index+1}`.
    pub fn var(num_vars: usize, index: usize) -> Self {
        assert!(
            index < num_vars,
            "variable index {index} out of range for {num_vars} variables"
        );
        let mut e = vec![0; num_vars];
        e[index] = 1;
        Self::monomial(num_vars, e, 1)
    }

    pub fn monomial(num_vars: usize, exponents: Exponents, c: impl Into<BigInt>) -> Self {
        assert_eq!(
            exponents.len(),
            num_vars,
            "exponent vector length must equal the variable count"
        );
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        LaurentPoly { num_vars, terms }
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I, C>(num_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(num_vars);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::Arity {
                    expected: num_vars,
                    found: e.len(),
                });
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    /// Univariate polynomial from integer coefficients, lowest degree `low`.
    pub fn univariate(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero(1);
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(vec![low + k as i64], BigInt::from(c));
        }
        p
    }

    /// `t_{index+1}^k - 1`.
    pub fn var_pow_minus_one(num_vars: usize, index: usize, k: i64) -> Self {
        let mut e = vec![0; num_vars];
        e[index] = k;
        let mut p = Self::monomial(num_vars, e, 1);
        p.add_term(vec![0; num_vars], BigInt::from(-1));
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (hence nonzero) monomials.
    pub fn nonzero_term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[i64]) -> BigInt {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Lexicographically smallest term.
    pub fn first_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Returns the single term if the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<Monomial> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Monomial {
            coefficient: c.clone(),
            exponents: e.clone(),
        })
    }

    /// Per-variable (min, max) exponents over the support, or `None` for zero.
    pub fn exponent_bounds(&self) -> Option<(Exponents, Exponents)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.clone();
        let mut hi = first.clone();
        for e in it {
            for i in 0..self.num_vars {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        Some((lo, hi))
    }

    /// Whether variable `index` occurs with nonzero exponent in some term.
    pub fn involves_var(&self, index: usize) -> bool {
        self.terms.keys().any(|e| e[index] != 0)
    }

    fn add_term(&mut self, exponents: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += scale * t^shift * other`, in place.
    fn add_scaled_shifted(&mut self, other: &LaurentPoly, scale: &BigInt, shift: &[i64]) {
        for (e, c) in &other.terms {
            let ne: Exponents = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            self.add_term(ne, c * scale);
        }
    }

    fn check_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::VarMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut out = LaurentPoly::zero(self.num_vars);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        for (e, c) in &self.terms {
            out.add_scaled_shifted(other, c, e);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.num_vars);
        }
        LaurentPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> LaurentPoly {
        assert_eq!(shift.len(), self.num_vars);
        LaurentPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Integer power. Negative exponents are only defined for units `±t^a`.
    pub fn pow(&self, k: i64) -> Result<LaurentPoly> {
        if k < 0 {
            let m = self
                .as_monomial()
                .filter(Monomial::is_unit)
                .ok_or_else(|| Error::NotInvertible(self.to_string()))?;
            // (±t^a)^-1 = ±t^-a
            let inv = LaurentPoly::monomial(
                self.num_vars,
                m.exponents.iter().map(|x| -x).collect(),
                m.coefficient,
            );
            return inv.pow(-k);
        }
        let mut result = LaurentPoly::one(self.num_vars);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Exact quotient in the Laurent ring.
    ///
    /// Long division on lexicographically leading terms. The quotient's support
    /// must lie in the box `[min(a) - min(b), max(a) - max(b)]`, so any step
    /// leaving that box (or needing a non-integral coefficient) proves that
    /// `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.num_vars;
        if self.is_zero() {
            return Ok(LaurentPoly::zero(n));
        }
        let not_divisible = || Error::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let (alo, ahi) = self.exponent_bounds().expect("nonzero");
        let (blo, bhi) = divisor.exponent_bounds().expect("nonzero");
        let lo: Exponents = (0..n).map(|i| alo[i] - blo[i]).collect();
        let hi: Exponents = (0..n).map(|i| ahi[i] - bhi[i]).collect();
        if (0..n).any(|i| lo[i] > hi[i]) {
            return Err(not_divisible());
        }
        let (dlead_e, dlead_c) = divisor
            .leading_term()
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("nonzero");

        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero(n);
        while let Some((re, rc)) = rem.leading_term() {
            let qe: Exponents = re.iter().zip(&dlead_e).map(|(a, b)| a - b).collect();
            if (0..n).any(|i| qe[i] < lo[i] || qe[i] > hi[i]) {
                return Err(not_divisible());
            }
            let (qc, r) = rc.div_rem(&dlead_c);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            rem.add_scaled_shifted(divisor, &-&qc, &qe);
            quotient.add_term(qe, qc);
        }
        Ok(quotient)
    }

    /// Applies the ring homomorphism `t_i -> images[i]` term by term.
    ///
    /// Negative exponents require the corresponding image to be a unit.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<LaurentPoly> {
        if images.len() != self.num_vars {
            return Err(Error::Arity {
                expected: self.num_vars,
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(img) => img.num_vars,
            None => 0,
        };
        for img in images {
            if img.num_vars != target {
                return Err(Error::VarMismatch {
                    left: target,
                    right: img.num_vars,
                });
            }
        }
        // Fast path: every image a monomial, so exponents map linearly.
        if let Some(monos) = images
            .iter()
            .map(LaurentPoly::as_monomial)
            .collect::<Option<Vec<_>>>()
        {
            let invertible = monos.iter().all(Monomial::is_unit);
            if invertible || self.terms.keys().all(|e| e.iter().all(|&x| x >= 0)) {
                let mut out = LaurentPoly::zero(target);
                for (e, c) in &self.terms {
                    let mut ne = vec![0i64; target];
                    let mut coeff = c.clone();
                    for (k, &ek) in e.iter().enumerate() {
                        if ek == 0 {
                            continue;
                        }
                        for (slot, &x) in ne.iter_mut().zip(&monos[k].exponents) {
                            *slot += x * ek;
                        }
                        coeff *= num_traits::pow::pow(
                            monos[k].coefficient.clone(),
                            ek.unsigned_abs() as usize,
                        );
                    }
                    out.add_term(ne, coeff);
                }
                return Ok(out);
            }
        }
        let mut cache: HashMap<(usize, i64), LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(target, c.clone());
            for (k, &ek) in e.iter().enumerate() {
                if ek == 0 {
                    continue;
                }
                let factor = match cache.get(&(k, ek)) {
                    Some(f) => f.clone(),
                    None => {
                        let f = images[k].pow(ek)?;
                        cache.insert((k, ek), f.clone());
                        f
                    }
                };
                term = term.mul(&factor)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Sets variable `index` to 1, keeping the variable count.
    pub fn specialize_to_one(&self, index: usize) -> Result<LaurentPoly> {
        if index >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.num_vars,
            });
        }
        let mut out = LaurentPoly::zero(self.num_vars);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            ne[index] = 0;
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Embeds into a ring with more variables: variable `i` becomes `t_{map[i]+1}`.
    pub fn relabel(&self, target_vars: usize, map: &[usize]) -> Result<LaurentPoly> {
        if map.len() != self.num_vars {
            return Err(Error::Arity {
                expected: self.num_vars,
                found: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&m| m >= target_vars) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: target_vars,
            });
        }
        let mut out = LaurentPoly::zero(target_vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target_vars];
            for (i, &x) in e.iter().enumerate() {
                ne[map[i]] += x;
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Drops variables that are identically absent and keeps only those in
    /// `keep`, in order. Fails if a dropped variable occurs in the support.
    pub fn restrict_vars(&self, keep: &[usize]) -> Result<LaurentPoly> {
        for i in 0..self.num_vars {
            if !keep.contains(&i) && self.involves_var(i) {
                return Err(Error::InvalidParameter(format!(
                    "variable t{} still occurs",
                    i + 1
                )));
            }
        }
        let mut out = LaurentPoly::zero(keep.len());
        for (e, c) in &self.terms {
            out.add_term(keep.iter().map(|&i| e[i]).collect(), c.clone());
        }
        Ok(out)
    }

    /// `p(t_1^{-1}, ..., t_n^{-1})`.
    pub fn invert_vars(&self) -> LaurentPoly {
        LaurentPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Value at `t_i = 1` for all i.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Canonical representative of the class `{±t^a · self}`.
    ///
    /// Each variable's exponent range is centered at zero (rounding toward
    /// the lower end when the range has odd width), then the sign is fixed so
    /// that the lexicographically first term is positive. When the class
    /// contains a representative fixed by `t_i -> t_i^{-1}` (up to sign), the
    /// centering finds it.
    pub fn normalize_symmetric(&self) -> LaurentPoly {
        let Some((lo, hi)) = self.exponent_bounds() else {
            return self.clone();
        };
        let shift: Exponents = lo
            .iter()
            .zip(&hi)
            .map(|(a, b)| -(a + b).div_euclid(2))
            .collect();
        let mut out = self.shift(&shift);
        if out.first_term().is_some_and(|(_, c)| c.is_negative()) {
            out = -out;
        }
        out
    }

    /// True iff `self = ±t^a · other` for some exponent vector `a`.
    ///
    /// The unit is read off by aligning lexicographically first terms, so no
    /// search is needed.
    pub fn equal_up_to_units(&self, other: &LaurentPoly) -> bool {
        if self.num_vars != other.num_vars || self.terms.len() != other.terms.len() {
            return false;
        }
        let (Some((ea, ca)), Some((eb, cb))) = (self.first_term(), other.first_term()) else {
            return self.is_zero() && other.is_zero();
        };
        let sign = if ca == cb {
            BigInt::one()
        } else if *ca == -cb {
            -BigInt::one()
        } else {
            return false;
        };
        let shift: Exponents = ea.iter().zip(eb).map(|(a, b)| a - b).collect();
        self.terms
            .iter()
            .zip(other.terms.iter())
            .all(|((e1, c1), (e2, c2))| {
                e1.iter().zip(e2).zip(&shift).all(|((x, y), s)| *x == y + s) && *c1 == c2 * &sign
            })
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&io::to_text(self))
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

// Operator forms panic on a variable-count mismatch; use the named methods
// where the arities are not already known to agree.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs).expect("variable count mismatch in +")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs).expect("variable count mismatch in -")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs).expect("variable count mismatch in *")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> LaurentPoly {
        LaurentPoly::var(1, 0)
    }

    fn uni(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::univariate(low, c)
    }

    #[test]
    fn add_cancels_and_prunes() {
        let a = uni(0, &[-1, 1]);
        let s = a.add(&LaurentPoly::one(1)).unwrap();
        assert_eq!(s, t());
        assert_eq!(a.add(&LaurentPoly::zero(1)).unwrap(), a);
        let x = LaurentPoly::monomial(2, vec![1, 1], 1);
        assert_eq!(x.add(&x).unwrap(), LaurentPoly::monomial(2, vec![1, 1], 2));
        let z = a.sub(&a).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.len(), 0);
    }

    #[test]
    fn mismatched_arity_is_an_error() {
        let a = LaurentPoly::one(1);
        let b = LaurentPoly::one(2);
        assert_eq!(a.add(&b), Err(Error::VarMismatch { left: 1, right: 2 }));
        assert!(a.mul(&b).is_err());
        assert!(a.exact_div(&b).is_err());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            uni(0, &[-1, 1]).mul(&uni(0, &[1, 1])).unwrap(),
            uni(0, &[-1, 0, 1])
        );
        assert!(uni(-1, &[1]).mul(&t()).unwrap().is_one());
        // (t2 - 1) * (t3^2 - t3 + 1) over variables (t2, t3)
        let a = LaurentPoly::from_terms(2, vec![(vec![1, 0], 1), (vec![0, 0], -1)]).unwrap();
        let b =
            LaurentPoly::from_terms(2, vec![(vec![0, 2], 1), (vec![0, 1], -1), (vec![0, 0], 1)])
                .unwrap();
        let expected = LaurentPoly::from_terms(
            2,
            vec![
                (vec![1, 2], 1),
                (vec![1, 1], -1),
                (vec![1, 0], 1),
                (vec![0, 2], -1),
                (vec![0, 1], 1),
                (vec![0, 0], -1),
            ],
        )
        .unwrap();
        assert_eq!(a.mul(&b).unwrap(), expected);
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(
            uni(0, &[-1, 0, 1]).exact_div(&uni(0, &[-1, 1])).unwrap(),
            uni(0, &[1, 1])
        );
        let t6 = LaurentPoly::var_pow_minus_one(1, 0, 6);
        let t1 = LaurentPoly::var_pow_minus_one(1, 0, 1);
        let t2 = LaurentPoly::var_pow_minus_one(1, 0, 2);
        let t3 = LaurentPoly::var_pow_minus_one(1, 0, 3);
        let q = t6
            .mul(&t1)
            .unwrap()
            .exact_div(&t2.mul(&t3).unwrap())
            .unwrap();
        assert_eq!(q, uni(0, &[1, -1, 1]));
        assert_eq!(q.mul(&t2.mul(&t3).unwrap()).unwrap(), t6.mul(&t1).unwrap());
    }

    #[test]
    fn exact_div_detects_non_divisibility() {
        let err = uni(0, &[1, 0, 1]).exact_div(&uni(0, &[-1, 1])).unwrap_err();
        assert!(matches!(err, Error::NotDivisible { .. }));
        assert_eq!(
            uni(0, &[1]).exact_div(&LaurentPoly::zero(1)),
            Err(Error::DivisionByZero)
        );
        // coefficient not divisible
        assert!(uni(0, &[1, 1])
            .exact_div(&LaurentPoly::constant(1, 2))
            .is_err());
        // multivariate: (t1 - t2) does not divide t1 + t2
        let a = LaurentPoly::from_terms(2, vec![(vec![1, 0], 1), (vec![0, 1], 1)]).unwrap();
        let b = LaurentPoly::from_terms(2, vec![(vec![1, 0], 1), (vec![0, 1], -1)]).unwrap();
        assert!(a.exact_div(&b).is_err());
    }

    #[test]
    fn exact_div_with_negative_exponents() {
        let a = LaurentPoly::from_terms(
            2,
            vec![(vec![-3, 1], 2), (vec![0, -2], -5), (vec![1, 1], 1)],
        )
        .unwrap();
        let b = LaurentPoly::from_terms(2, vec![(vec![-1, 0], 1), (vec![2, -1], 3)]).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p.exact_div(&b).unwrap(), a);
        assert_eq!(p.exact_div(&a).unwrap(), b);
    }

    #[test]
    fn substitute_examples() {
        let tref = uni(0, &[1, -1, 1]);
        let squared = tref.substitute(&[uni(2, &[1])]).unwrap();
        assert_eq!(squared, uni(0, &[1, 0, -1, 0, 1]));

        let p =
            LaurentPoly::from_terms(2, vec![(vec![2, 1], 3), (vec![-1, 0], 1), (vec![0, 2], -1)])
                .unwrap();
        let restricted = p.substitute(&[LaurentPoly::one(1), t()]).unwrap();
        assert_eq!(restricted, uni(0, &[1, 3, -1]));

        let id = [LaurentPoly::var(2, 0), LaurentPoly::var(2, 1)];
        assert_eq!(p.substitute(&id).unwrap(), p);
        assert!(p.substitute(&[t()]).is_err());
    }

    #[test]
    fn substitute_general_images() {
        // t -> (t + 1) applied to t^2 - 1 gives t^2 + 2t
        let p = uni(0, &[-1, 0, 1]);
        assert_eq!(p.substitute(&[uni(0, &[1, 1])]).unwrap(), uni(1, &[2, 1]));
        // negative exponent with a non-unit image is rejected
        assert!(uni(-1, &[1]).substitute(&[uni(0, &[1, 1])]).is_err());
        // negative exponent with -t^2
        assert_eq!(
            uni(-1, &[1]).substitute(&[uni(2, &[-1])]).unwrap(),
            uni(-2, &[-1])
        );
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            uni(0, &[1, -1, 1]).normalize_symmetric(),
            uni(-1, &[1, -1, 1])
        );
        assert!(uni(1, &[-1]).normalize_symmetric().is_one());
        assert!(LaurentPoly::one(1).normalize_symmetric().is_one());
        assert!(LaurentPoly::zero(2).normalize_symmetric().is_zero());
        // odd width: t - 1 -> -1 + t stays (range [0,1]), sign fixed by first term
        assert_eq!(uni(0, &[1, -1]).normalize_symmetric(), uni(0, &[1, -1]));
    }

    #[test]
    fn units_comparison() {
        assert!(uni(0, &[1, -1, 1]).equal_up_to_units(&uni(-1, &[1, -1, 1])));
        let p = uni(-2, &[3, 0, -1, 4]);
        assert!(p.equal_up_to_units(&-&p));
        assert!(!uni(0, &[-1, 1]).equal_up_to_units(&uni(0, &[1, 1])));
        assert!(LaurentPoly::zero(1).equal_up_to_units(&LaurentPoly::zero(1)));
        assert!(!LaurentPoly::zero(1).equal_up_to_units(&LaurentPoly::one(1)));
        assert!(!uni(0, &[2]).equal_up_to_units(&uni(0, &[1])));
    }

    #[test]
    fn pow_and_inverse() {
        assert_eq!(uni(0, &[1, 1]).pow(2).unwrap(), uni(0, &[1, 2, 1]));
        assert_eq!(uni(1, &[-1]).pow(-3).unwrap(), uni(-3, &[-1]));
        assert!(uni(0, &[1, 1]).pow(-1).is_err());
        assert!(uni(0, &[1, 1]).pow(0).unwrap().is_one());
    }

    #[test]
    fn relabel_and_restrict() {
        let p = uni(0, &[1, -1, 1]);
        let q = p.relabel(3, &[2]).unwrap();
        assert_eq!(q.coefficient(&[0, 0, 2]), BigInt::from(1));
        assert_eq!(q.restrict_vars(&[2]).unwrap(), p);
        assert!(q.restrict_vars(&[0]).is_err());
    }
}
