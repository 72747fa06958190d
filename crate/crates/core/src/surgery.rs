//! Surgery slopes on the boundary tori of a link surgery manifold and the
//! homology classes of the tori `S¹ × γ`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// The slope `d·σ = mu_coeff·μ + lambda_coeff·λ` on component `component`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlopeData {
    pub component: usize,
    pub mu_coeff: i64,
    pub lambda_coeff: i64,
    /// `gcd(|mu_coeff|, |lambda_coeff|)`, always positive.
    pub divisibility: i64,
    /// Primitive `(μ, λ)` coordinates of σ.
    pub sigma: (i64, i64),
}

/// Link data for the link surgery construction: linking matrix, the fiber
/// class `m`, and one relative Seiberg–Witten polynomial per component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinkSurgeryDescriptor {
    pub linking: Vec<Vec<i64>>,
    pub m: Vec<i64>,
    /// Univariate polynomials; the default `1` stands for an `E(1)` piece.
    pub relative_sw: Vec<LaurentPoly>,
}

impl LinkSurgeryDescriptor {
    #[allow(clippy::needless_range_loop)]
    pub fn new(linking: Vec<Vec<i64>>, m: Vec<i64>) -> Result<Self> {
        let n = linking.len();
        for (i, row) in linking.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Arity {
                    expected: n,
                    found: row.len(),
                });
            }
            for j in 0..i {
                if linking[i][j] != linking[j][i] {
                    return Err(Error::InvalidParameter(format!(
                        "linking matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        if m.len() != n {
            return Err(Error::Arity {
                expected: n,
                found: m.len(),
            });
        }
        let relative_sw = vec![LaurentPoly::one(1); n];
        Ok(LinkSurgeryDescriptor {
            linking,
            m,
            relative_sw,
        })
    }

    /// All-ones fiber class.
    pub fn with_unit_fiber(linking: Vec<Vec<i64>>) -> Result<Self> {
        let n = linking.len();
        Self::new(linking, vec![1; n])
    }

    pub fn with_relative_sw(mut self, relative_sw: Vec<LaurentPoly>) -> Result<Self> {
        if relative_sw.len() != self.num_components() {
            return Err(Error::Arity {
                expected: self.num_components(),
                found: relative_sw.len(),
            });
        }
        if let Some(p) = relative_sw.iter().find(|p| p.num_vars() != 1) {
            return Err(Error::Arity {
                expected: 1,
                found: p.num_vars(),
            });
        }
        self.relative_sw = relative_sw;
        Ok(self)
    }

    pub fn num_components(&self) -> usize {
        self.linking.len()
    }
}

pub fn slope(desc: &LinkSurgeryDescriptor, i: usize) -> Result<SlopeData> {
    let n = desc.num_components();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    let mu_coeff: i64 = -(0..n)
        .filter(|&j| j != i)
        .map(|j| desc.m[j] * desc.linking[i][j])
        .sum::<i64>();
    let lambda_coeff = desc.m[i];
    let d = mu_coeff.gcd(&lambda_coeff);
    if d == 0 {
        return Err(Error::FiberDisjoint(i));
    }
    Ok(SlopeData {
        component: i,
        mu_coeff,
        lambda_coeff,
        divisibility: d,
        sigma: (mu_coeff / d, lambda_coeff / d),
    })
}

/// Class of `S¹ × γ` in the basis `[S¹ × μ(K_j)]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusClass {
    pub coefficients: Vec<i64>,
}

impl TorusClass {
    pub fn is_nullhomologous(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }
}

/// The class is read off the linking numbers of γ with the link components.
pub fn torus_class(gamma_linking: &[i64], num_components: usize) -> Result<TorusClass> {
    if gamma_linking.len() != num_components {
        return Err(Error::Arity {
            expected: num_components,
            found: gamma_linking.len(),
        });
    }
    Ok(TorusClass {
        coefficients: gamma_linking.to_vec(),
    })
}

pub fn classes_equal(a: &TorusClass, b: &TorusClass) -> bool {
    a == b
}
