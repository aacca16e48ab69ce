//! Matrices over commutative polynomials, with tensor-space tags.
//!
//! A `CMatrix` records which tensor factorization of its index space is
//! meant: `Single(N)`, `Tensor2(N)` for matrices on C^N (x) C^N, or
//! `Tensor3(N)`. The basis of `Tensor2(N)` is fixed once and used
//! everywhere: the pair (i, j) with slot-1 index i and slot-2 index j maps
//! to row (i-1)*N + j, row-major over (slot1, slot2).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cpoly::{CPoly, CPolyError, Var, VarSet};
use crate::scalar::ScalarQ;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpaceTag {
    Single(usize),
    Tensor2(usize),
    Tensor3(usize),
}

impl SpaceTag {
    pub fn dim(&self) -> usize {
        match *self {
            SpaceTag::Single(n) => n,
            SpaceTag::Tensor2(n) => n * n,
            SpaceTag::Tensor3(n) => n * n * n,
        }
    }

    pub fn base(&self) -> usize {
        match *self {
            SpaceTag::Single(n) | SpaceTag::Tensor2(n) | SpaceTag::Tensor3(n) => n,
        }
    }
}

impl fmt::Display for SpaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceTag::Single(n) => write!(f, "single({n})"),
            SpaceTag::Tensor2(n) => write!(f, "tensor2({n})"),
            SpaceTag::Tensor3(n) => write!(f, "tensor3({n})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CMatrixError {
    SpaceMismatch,
    ShapeMismatch,
    IndexOutOfRange,
    NotInvertible,
    Poly(CPolyError),
}

impl fmt::Display for CMatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CMatrixError::SpaceMismatch => write!(f, "tensor space tags differ"),
            CMatrixError::ShapeMismatch => write!(f, "matrix shapes are incompatible"),
            CMatrixError::IndexOutOfRange => write!(f, "matrix index out of range"),
            CMatrixError::NotInvertible => write!(f, "matrix is not invertible"),
            CMatrixError::Poly(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CMatrixError {}

impl From<CPolyError> for CMatrixError {
    fn from(e: CPolyError) -> Self {
        CMatrixError::Poly(e)
    }
}

/// Dense matrix of `CPoly` entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CMatrix {
    space: SpaceTag,
    vars: VarSet,
    rows: usize,
    cols: usize,
    entries: Vec<CPoly>,
}

impl CMatrix {
    pub fn zero(space: SpaceTag, vars: VarSet) -> Self {
        let d = space.dim();
        let entries = vec![CPoly::zero(vars.clone()); d * d];
        CMatrix { space, vars, rows: d, cols: d, entries }
    }

    pub fn identity(space: SpaceTag, vars: VarSet) -> Self {
        let mut m = Self::zero(space, vars.clone());
        for i in 0..m.rows {
            m.entries[i * m.cols + i] = CPoly::one(vars.clone());
        }
        m
    }

    pub fn scalar(space: SpaceTag, vars: VarSet, c: ScalarQ) -> Self {
        let mut m = Self::zero(space, vars.clone());
        for i in 0..m.rows {
            m.entries[i * m.cols + i] = CPoly::constant(vars.clone(), c.clone());
        }
        m
    }

    pub fn space(&self) -> SpaceTag {
        self.space
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> &CPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut CPoly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: CPoly) {
        self.entries[r * self.cols + c] = p;
    }

    /// Row index of the tensor2 basis vector e_i (x) e_j (1-based i, j).
    pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
        (i - 1) * n + (j - 1)
    }

    /// Triple index for tensor3 (1-based).
    pub fn triple_index(n: usize, i: usize, j: usize, k: usize) -> usize {
        ((i - 1) * n + (j - 1)) * n + (k - 1)
    }

    pub fn try_add(&self, other: &CMatrix) -> Result<CMatrix, CMatrixError> {
        if self.space != other.space {
            return Err(CMatrixError::SpaceMismatch);
        }
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.try_add(b)?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &CMatrix) -> Result<CMatrix, CMatrixError> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> CMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.neg();
        }
        out
    }

    pub fn scale(&self, c: &ScalarQ) -> CMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.scale(c);
        }
        out
    }

    pub fn scale_poly(&self, p: &CPoly) -> Result<CMatrix, CMatrixError> {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.try_mul(p)?;
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &CMatrix) -> Result<CMatrix, CMatrixError> {
        if self.space != other.space {
            return Err(CMatrixError::SpaceMismatch);
        }
        if self.cols != other.rows {
            return Err(CMatrixError::ShapeMismatch);
        }
        let mut out = CMatrix::zero(self.space, self.vars.clone());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.try_mul(b)?;
                    let cur = out.entry(i, j).try_add(&prod)?;
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Kronecker product Single (x) Single -> Tensor2 with the fixed basis
    /// ordering (i-1)*N + j.
    pub fn kron(&self, other: &CMatrix) -> Result<CMatrix, CMatrixError> {
        let (n1, n2) = match (self.space, other.space) {
            (SpaceTag::Single(a), SpaceTag::Single(b)) => (a, b),
            _ => return Err(CMatrixError::SpaceMismatch),
        };
        if n1 != n2 || self.vars != other.vars {
            return Err(CMatrixError::SpaceMismatch);
        }
        let n = n1;
        let mut out = CMatrix::zero(SpaceTag::Tensor2(n), self.vars.clone());
        for i in 1..=n {
            for j in 1..=n {
                let a = self.entry(i - 1, j - 1);
                if a.is_zero() {
                    continue;
                }
                for k in 1..=n {
                    for l in 1..=n {
                        let b = other.entry(k - 1, l - 1);
                        if b.is_zero() {
                            continue;
                        }
                        let r = Self::pair_index(n, i, k);
                        let c = Self::pair_index(n, j, l);
                        out.set(r, c, a.try_mul(b)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Embed a Tensor2 matrix into Tensor3 acting on the named pair of legs.
    pub fn embed_tensor3(&self, legs: (usize, usize)) -> Result<CMatrix, CMatrixError> {
        let n = match self.space {
            SpaceTag::Tensor2(n) => n,
            _ => return Err(CMatrixError::SpaceMismatch),
        };
        let mut out = CMatrix::zero(SpaceTag::Tensor3(n), self.vars.clone());
        // Iterate over tensor2 entries ((a,b),(c,d)) and spectator index s.
        for a in 1..=n {
            for b in 1..=n {
                let r2 = Self::pair_index(n, a, b);
                for c in 1..=n {
                    for d in 1..=n {
                        let c2 = Self::pair_index(n, c, d);
                        let v = self.entry(r2, c2);
                        if v.is_zero() {
                            continue;
                        }
                        for s in 1..=n {
                            let (r3, c3) = match legs {
                                (1, 2) => (
                                    Self::triple_index(n, a, b, s),
                                    Self::triple_index(n, c, d, s),
                                ),
                                (1, 3) => (
                                    Self::triple_index(n, a, s, b),
                                    Self::triple_index(n, c, s, d),
                                ),
                                (2, 3) => (
                                    Self::triple_index(n, s, a, b),
                                    Self::triple_index(n, s, c, d),
                                ),
                                _ => return Err(CMatrixError::IndexOutOfRange),
                            };
                            out.set(r3, c3, v.clone());
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Conjugation by the permutation matrix: X -> P X P on Tensor2.
    pub fn swap_legs(&self) -> Result<CMatrix, CMatrixError> {
        let n = match self.space {
            SpaceTag::Tensor2(n) => n,
            _ => return Err(CMatrixError::SpaceMismatch),
        };
        let mut out = CMatrix::zero(self.space, self.vars.clone());
        for a in 1..=n {
            for b in 1..=n {
                for c in 1..=n {
                    for d in 1..=n {
                        let v = self.entry(Self::pair_index(n, a, b), Self::pair_index(n, c, d));
                        if !v.is_zero() {
                            out.set(
                                Self::pair_index(n, b, a),
                                Self::pair_index(n, d, c),
                                v.clone(),
                            );
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Inverse of a matrix whose entries are all constants in Q(q^{1/2}).
    pub fn invert_constant(&self) -> Result<CMatrix, CMatrixError> {
        let d = self.rows;
        let mut a: Vec<Vec<ScalarQ>> = Vec::with_capacity(d);
        for r in 0..d {
            let mut row = Vec::with_capacity(d);
            for c in 0..d {
                row.push(
                    self.entry(r, c)
                        .as_constant()
                        .ok_or(CMatrixError::NotInvertible)?,
                );
            }
            a.push(row);
        }
        let mut inv: Vec<Vec<ScalarQ>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { ScalarQ::one() } else { ScalarQ::zero() })
                    .collect()
            })
            .collect();
        for col in 0..d {
            let pivot = (col..d)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(CMatrixError::NotInvertible)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let pv = a[col][col].clone();
            for j in 0..d {
                a[col][j] = a[col][j].checked_div(&pv).unwrap();
                inv[col][j] = inv[col][j].checked_div(&pv).unwrap();
            }
            for r in 0..d {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..d {
                    a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
        let mut out = CMatrix::zero(self.space, self.vars.clone());
        for r in 0..d {
            for c in 0..d {
                out.set(r, c, CPoly::constant(self.vars.clone(), inv[r][c].clone()));
            }
        }
        Ok(out)
    }

    /// Substitute a scalar value for a variable in every entry.
    pub fn substitute_scalar(&self, v: Var, value: &ScalarQ) -> Result<CMatrix, CMatrixError> {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.substitute_scalar(v, value)?;
        }
        Ok(out)
    }

    /// Coefficient-wise specialization at q = 1.
    pub fn at_q_one(&self) -> Result<CMatrix, CMatrixError> {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.at_q_one()?;
        }
        Ok(out)
    }

    /// Entry-wise gamma-derivative (divided by i) at q = 1.
    pub fn gamma_derivative_at_one(&self) -> Result<CMatrix, CMatrixError> {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.gamma_derivative_at_one()?;
        }
        Ok(out)
    }

    pub fn extend_vars(&self, vars: &VarSet) -> Result<CMatrix, CMatrixError> {
        let mut out = CMatrix::zero(self.space, vars.clone());
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.entry(r, c).extend_vars(vars)?);
            }
        }
        Ok(out)
    }

    /// Canonical text form under a versioned header, used for golden files.
    pub fn to_canonical_string(&self) -> String {
        use alloc::format;
        use core::fmt::Write;
        let mut s = String::new();
        let _ = writeln!(s, "qlax-matrix v1 space={} dim={}", self.space, self.rows);
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.entry(r, c).to_canonical_string())
                .collect();
            let _ = writeln!(s, "[{}]", row.join(", "));
        }
        let _ = format!("");
        s
    }
}

impl fmt::Display for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix;

    #[test]
    fn pair_index_layout() {
        // (i, j) -> (i-1)*N + j, 1-based in the API, 0-based rows internally.
        assert_eq!(CMatrix::pair_index(2, 1, 1), 0);
        assert_eq!(CMatrix::pair_index(2, 1, 2), 1);
        assert_eq!(CMatrix::pair_index(2, 2, 1), 2);
        assert_eq!(CMatrix::pair_index(2, 2, 2), 3);
    }

    #[test]
    fn matrix_unit_products() {
        // E^{12} E^{21} = E^{11}
        let n = 2;
        let e12 = rmatrix::unit_matrix(n, 1, 2).unwrap();
        let e21 = rmatrix::unit_matrix(n, 2, 1).unwrap();
        let e11 = rmatrix::unit_matrix(n, 1, 1).unwrap();
        assert_eq!(e12.try_mul(&e21).unwrap(), e11);
    }

    #[test]
    fn constant_inverse_roundtrip() {
        let vars = VarSet::empty();
        let mut m = CMatrix::zero(SpaceTag::Single(2), vars.clone());
        m.set(0, 0, CPoly::constant(vars.clone(), ScalarQ::q()));
        m.set(0, 1, CPoly::constant(vars.clone(), ScalarQ::one()));
        m.set(1, 1, CPoly::constant(vars.clone(), ScalarQ::from_int(2)));
        let inv = m.invert_constant().unwrap();
        let id = CMatrix::identity(SpaceTag::Single(2), vars);
        assert_eq!(m.try_mul(&inv).unwrap(), id);
        assert_eq!(inv.try_mul(&m).unwrap(), id);
    }
}
