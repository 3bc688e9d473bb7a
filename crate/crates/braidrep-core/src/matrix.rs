//! Dense exact matrices over Q(ω).
//!
//! Row-major storage; all operations are pure and exact. The projective
//! canonical form divides by the first nonzero entry in a row-major scan —
//! that scan order is fixed, since dedup tables key on the resulting form.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::CycloNum;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<CycloNum>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<CycloNum>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                left: (rows, cols),
                right: (entries.len(), 1),
            });
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycloNum) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from small integer parts: each entry is
    /// (a + b·ω + c·ω² + d·ω³) given as `[a, b, c, d]`.
    pub fn from_int_coeffs(rows: usize, cols: usize, table: &[[i64; 4]]) -> Self {
        assert_eq!(table.len(), rows * cols);
        let entries = table
            .iter()
            .map(|&[a, b, c, d]| {
                CycloNum::new([
                    crate::Dyadic::from_int(a),
                    crate::Dyadic::from_int(b),
                    crate::Dyadic::from_int(c),
                    crate::Dyadic::from_int(d),
                ])
            })
            .collect();
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![CycloNum::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == c {
                CycloNum::one()
            } else {
                CycloNum::zero()
            }
        })
    }

    pub fn diagonal(diag: &[CycloNum]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |r, c| {
            if r == c {
                diag[r].clone()
            } else {
                CycloNum::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[CycloNum] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &CycloNum {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycloNum) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        self.add(&rhs.scale(&CycloNum::from_int(-1)))
    }

    pub fn scale(&self, s: &CycloNum) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.mul(s)).collect(),
        }
    }

    /// Kronecker product with block layout `self[i,j] * rhs`.
    pub fn kron(&self, rhs: &ExactMatrix) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let (ra, rb) = (r / rhs.rows, r % rhs.rows);
            let (ca, cb) = (c / rhs.cols, c % rhs.cols);
            self.get(ra, ca).mul(rhs.get(rb, cb))
        })
    }

    /// Block-diagonal sum: `self` upper-left, `rhs` lower-right.
    pub fn dirsum(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..rhs.rows {
            for c in 0..rhs.cols {
                out.set(self.rows + r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn trace(&self) -> Result<CycloNum> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut t = CycloNum::zero();
        for k in 0..self.rows {
            t = t.add(self.get(k, k));
        }
        Ok(t)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == ExactMatrix::identity(self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if r != c && !self.get(r, c).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True iff dagger(self)·self = I exactly.
    pub fn is_unitary(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        match self.dagger().mul(self) {
            Ok(p) => p.is_identity(),
            Err(_) => false,
        }
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn compress(&self, keep: &[usize]) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        for (pos, &k) in keep.iter().enumerate() {
            if k >= self.rows {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    bound: self.rows,
                });
            }
            if keep[..pos].contains(&k) {
                return Err(Error::DuplicateIndex { index: k });
            }
        }
        Ok(ExactMatrix::from_fn(keep.len(), keep.len(), |r, c| {
            self.get(keep[r], keep[c]).clone()
        }))
    }

    /// Scales by the reciprocal of the first nonzero entry in row-major
    /// order, so that matrices differing by a scalar share one canonical
    /// form. The result is generally not unitary; it serves as a map key.
    pub fn projective_canonical(&self) -> Result<ExactMatrix> {
        let pivot = self
            .entries
            .iter()
            .find(|e| !e.is_zero())
            .ok_or(Error::ZeroMatrix)?;
        let inv = pivot.inv()?;
        Ok(self.scale(&inv))
    }

    /// If `self = λ·rhs` for a scalar λ, returns λ (checked entrywise
    /// exactly); otherwise `None`. Shapes must agree.
    pub fn projective_eq(&self, rhs: &ExactMatrix) -> Result<Option<CycloNum>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let pivot = rhs.entries.iter().position(|e| !e.is_zero());
        let Some(k) = pivot else {
            // rhs = 0: scalar relation only if self = 0 too
            return Ok(if self.entries.iter().all(CycloNum::is_zero) {
                Some(CycloNum::one())
            } else {
                None
            });
        };
        let lambda = match self.entries[k].div_exact(&rhs.entries[k]) {
            Ok(l) => l,
            Err(Error::NonDyadicQuotient) => return Ok(None),
            Err(e) => return Err(e),
        };
        for (a, b) in self.entries.iter().zip(&rhs.entries) {
            if *a != lambda.mul(b) {
                return Ok(None);
            }
        }
        Ok(Some(lambda))
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Pauli σ1.
pub fn sigma1() -> ExactMatrix {
    ExactMatrix::from_int_coeffs(
        2,
        2,
        &[[0, 0, 0, 0], [1, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0]],
    )
}

/// Pauli σ2, with i = ω².
pub fn sigma2() -> ExactMatrix {
    ExactMatrix::from_int_coeffs(
        2,
        2,
        &[[0, 0, 0, 0], [0, 0, -1, 0], [0, 0, 1, 0], [0, 0, 0, 0]],
    )
}

/// Pauli σ3.
pub fn sigma3() -> ExactMatrix {
    ExactMatrix::from_int_coeffs(
        2,
        2,
        &[[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [-1, 0, 0, 0]],
    )
}

/// n-fold Kronecker power.
pub fn kron_power(m: &ExactMatrix, n: usize) -> ExactMatrix {
    let mut out = ExactMatrix::identity(1);
    for _ in 0..n {
        out = out.kron(m);
    }
    out
}
