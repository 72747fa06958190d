use crate::error::{Error, Result};

use super::LaurentPoly;

/// Matrices of at most this size use cofactor expansion in [`PolyMatrix::det`].
pub const COFACTOR_THRESHOLD: usize = 3;

/// Dense row-major matrix of Laurent polynomials over a shared variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    num_vars: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, num_vars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            num_vars,
            data: vec![LaurentPoly::zero(num_vars); rows * cols],
        }
    }

    pub fn identity(n: usize, num_vars: usize) -> Self {
        let mut m = Self::zeros(n, n, num_vars);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one(num_vars));
        }
        m
    }

    pub fn from_rows(num_vars: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Arity {
                    expected: c,
                    found: row.len(),
                });
            }
            for p in row {
                if p.num_vars() != num_vars {
                    return Err(Error::VarMismatch {
                        left: num_vars,
                        right: p.num_vars(),
                    });
                }
                data.push(p);
            }
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            num_vars,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: LaurentPoly) {
        assert_eq!(p.num_vars(), self.num_vars);
        self.data[r * self.cols + c] = p;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn without_column(&self, col: usize) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows, self.cols - 1, self.num_vars);
        for r in 0..self.rows {
            let mut k = 0;
            for c in 0..self.cols {
                if c != col {
                    out.set(r, k, self.get(r, c).clone());
                    k += 1;
                }
            }
        }
        out
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows - 1, self.cols - 1, self.num_vars);
        let mut rr = 0;
        for r in 0..self.rows {
            if r == skip_row {
                continue;
            }
            let mut cc = 0;
            for c in 0..self.cols {
                if c == skip_col {
                    continue;
                }
                out.set(rr, cc, self.get(r, c).clone());
                cc += 1;
            }
            rr += 1;
        }
        out
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Arity {
                expected: self.cols,
                found: other.rows,
            });
        }
        if self.num_vars != other.num_vars {
            return Err(Error::VarMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        let mut out = PolyMatrix::zeros(self.rows, other.cols, self.num_vars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentPoly::zero(self.num_vars);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Arity {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        if self.num_vars != other.num_vars {
            return Err(Error::VarMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            num_vars: self.num_vars,
            data,
        })
    }

    /// Determinant: cofactor expansion up to [`COFACTOR_THRESHOLD`], Bareiss
    /// elimination above it.
    pub fn det(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::Arity {
                expected: self.rows,
                found: self.cols,
            });
        }
        if self.rows <= COFACTOR_THRESHOLD {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along the first row. Exponential; for small matrices
    /// and as a cross-check of [`det_bareiss`](Self::det_bareiss).
    pub fn det_cofactor(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::Arity {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        match n {
            0 => return Ok(LaurentPoly::one(self.num_vars)),
            1 => return Ok(self.get(0, 0).clone()),
            2 => {
                let ad = self.get(0, 0) * self.get(1, 1);
                let bc = self.get(0, 1) * self.get(1, 0);
                return Ok(&ad - &bc);
            }
            _ => {}
        }
        let mut acc = LaurentPoly::zero(self.num_vars);
        for c in 0..n {
            let a = self.get(0, c);
            if a.is_zero() {
                continue;
            }
            let sub = self.minor(0, c).det_cofactor()?;
            let term = a * &sub;
            acc = if c % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        Ok(acc)
    }

    /// Fraction-free Gaussian elimination. Every intermediate division is
    /// exact, so a `NotDivisible` error here means corrupted input arithmetic.
    pub fn det_bareiss(&self) -> Result<LaurentPoly> {
        if !self.is_square() {
            return Err(Error::Arity {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one(self.num_vars));
        }
        let mut a: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one(self.num_vars);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                // Prefer the sparsest nonzero pivot below.
                let pivot = (k + 1..n)
                    .filter(|&i| !a[i][k].is_zero())
                    .min_by_key(|&i| a[i][k].len());
                match pivot {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(LaurentPoly::zero(self.num_vars)),
                }
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            let pivot = &pivot_row[k];
            for row in bottom.iter_mut() {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let num = if lead.is_zero() {
                        pivot * &row[j]
                    } else {
                        &(pivot * &row[j]) - &(&lead * &pivot_row[j])
                    };
                    row[j] = if prev.is_one() {
                        num
                    } else {
                        num.exact_div(&prev)?
                    };
                }
                row[k] = LaurentPoly::zero(self.num_vars);
            }
            prev = pivot.clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }
}
