//! Integer symplectic linear algebra on `H_1` of the fiber.
//!
//! Basis convention: `a_1, b_1, ..., a_h, b_h` with `<a_i, b_i> = +1` and all
//! other basis pairings zero. A right-handed Dehn twist about a curve with
//! class `c` acts on homology by the transvection `x -> x + <x, c> c`.
//!
//! The monodromy check here only sees these homological shadows, so an
//! `Identity` verdict is a necessary condition for a monodromy factorization
//! and never a proof that one exists.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::invariants::FibrationDescription;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix rows have unequal lengths")]
    RaggedRows,
    #[error("curve class is neither zero nor primitive")]
    NonPrimitiveCurveClass,
    #[error("fiber {fiber} curve {curve} carries no homology class")]
    MissingHomologyData { fiber: usize, curve: usize },
    #[error("base genus is positive but no handle monodromy matrices were supplied")]
    MissingHandleMatrices,
    #[error("handle matrix {index} is not symplectic")]
    MatrixNotSymplectic { index: usize },
}

/// Dense matrix of arbitrary-precision integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. An empty row list gives
    /// a `0 x 0` matrix.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, HomologyError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(HomologyError::RaggedRows);
            }
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Result<Self, HomologyError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(HomologyError::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Entries as machine integers, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| i64::try_from(x).ok()).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &IntegerMatrix) -> Result<IntegerMatrix, HomologyError> {
        if self.cols != rhs.rows {
            return Err(HomologyError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, x: &[BigInt]) -> Result<Vec<BigInt>, HomologyError> {
        if x.len() != self.cols {
            return Err(HomologyError::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn scaled(&self, factor: &BigInt) -> Self {
        IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn sub(&self, rhs: &IntegerMatrix) -> Result<IntegerMatrix, HomologyError> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(HomologyError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// Fraction-free (Bareiss) determinant. Non-square matrices have none.
    pub fn determinant(&self) -> Option<BigInt> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Some(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Some(sign * &a[(n - 1, n - 1)])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let delta = factor * &self[(src, j)];
            self[(dst, j)] += delta;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let delta = factor * &self[(i, src)];
            self[(i, dst)] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = -x;
        }
    }
}

impl Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;

    /// Panics on incompatible shapes; use [`IntegerMatrix::checked_mul`] for
    /// a fallible product.
    fn mul(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        self.checked_mul(rhs).expect("incompatible matrix shapes")
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Standard symplectic form `J` on `Z^{2h}`, block diagonal with blocks
/// `[[0, 1], [-1, 0]]`.
pub fn symplectic_form(h: usize) -> IntegerMatrix {
    let mut j = IntegerMatrix::zeros(2 * h, 2 * h);
    for i in 0..h {
        j[(2 * i, 2 * i + 1)] = BigInt::one();
        j[(2 * i + 1, 2 * i)] = -BigInt::one();
    }
    j
}

/// Algebraic intersection number `x^T J y`.
pub fn symplectic_pairing(x: &[BigInt], y: &[BigInt], h: usize) -> Result<BigInt, HomologyError> {
    for v in [x, y] {
        if v.len() != 2 * h {
            return Err(HomologyError::DimensionMismatch {
                expected: 2 * h,
                found: v.len(),
            });
        }
    }
    Ok((0..h)
        .map(|i| &x[2 * i] * &y[2 * i + 1] - &x[2 * i + 1] * &y[2 * i])
        .sum())
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Matrix of the transvection `x -> x + <x, c> c`; the homological action of
/// a right-handed Dehn twist about a curve with class `c`.
pub fn transvection_matrix(c: &[BigInt], h: usize) -> Result<IntegerMatrix, HomologyError> {
    if c.len() != 2 * h {
        return Err(HomologyError::DimensionMismatch {
            expected: 2 * h,
            found: c.len(),
        });
    }
    let g = content(c);
    if !g.is_zero() && !g.is_one() {
        return Err(HomologyError::NonPrimitiveCurveClass);
    }
    let n = 2 * h;
    let mut t = IntegerMatrix::identity(n);
    for col in 0..n {
        // <e_col, c>
        let pair = if col % 2 == 0 {
            c[col + 1].clone()
        } else {
            -c[col - 1].clone()
        };
        if pair.is_zero() {
            continue;
        }
        for row in 0..n {
            t[(row, col)] += &pair * &c[row];
        }
    }
    Ok(t)
}

/// `M^T J M == J`.
pub fn is_symplectic_matrix(m: &IntegerMatrix, h: usize) -> Result<bool, HomologyError> {
    if m.rows() != 2 * h || m.cols() != 2 * h {
        return Err(HomologyError::DimensionMismatch {
            expected: 2 * h,
            found: if m.rows() != 2 * h { m.rows() } else { m.cols() },
        });
    }
    let j = symplectic_form(h);
    Ok(&(&m.transpose() * &j) * m == j)
}

/// Inverse of a symplectic matrix, `-J M^T J`.
pub fn symplectic_inverse(m: &IntegerMatrix, h: usize) -> IntegerMatrix {
    let j = symplectic_form(h);
    (&(&j * &m.transpose()) * &j).scaled(&-BigInt::one())
}

/// `A B A^{-1} B^{-1}` for symplectic `A`, `B`.
pub fn commutator(a: &IntegerMatrix, b: &IntegerMatrix, h: usize) -> IntegerMatrix {
    let ab = a * b;
    let ab_ainv = &ab * &symplectic_inverse(a, h);
    &ab_ainv * &symplectic_inverse(b, h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShadowVerdict {
    Identity,
    NonIdentity,
    Indeterminate,
}

impl fmt::Display for ShadowVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ShadowVerdict::Identity => "identity",
            ShadowVerdict::NonIdentity => "non-identity",
            ShadowVerdict::Indeterminate => "indeterminate",
        })
    }
}

/// `[A_1, B_1] ... [A_g, B_g] T_{c_1} ... T_{c_k}`, with the handle matrices
/// given as consecutive pairs.
pub fn monodromy_product(
    h: usize,
    handles: &[IntegerMatrix],
    classes: &[Vec<BigInt>],
) -> Result<IntegerMatrix, HomologyError> {
    if !handles.len().is_multiple_of(2) {
        return Err(HomologyError::DimensionMismatch {
            expected: handles.len() + 1,
            found: handles.len(),
        });
    }
    let mut acc = IntegerMatrix::identity(2 * h);
    for (index, m) in handles.iter().enumerate() {
        if !is_symplectic_matrix(m, h)? {
            return Err(HomologyError::MatrixNotSymplectic { index });
        }
    }
    for pair in handles.chunks(2) {
        acc = &acc * &commutator(&pair[0], &pair[1], h);
    }
    for c in classes {
        acc = &acc * &transvection_matrix(c, h)?;
    }
    Ok(acc)
}

/// Vanishing-cycle classes in global order: fibers in list order, curves in
/// declaration order within each fiber.
pub fn vanishing_classes(fd: &FibrationDescription) -> Result<Vec<Vec<BigInt>>, HomologyError> {
    let mut out = Vec::new();
    for (fiber, f) in fd.fibers().iter().enumerate() {
        for (curve, c) in f.curves().iter().enumerate() {
            let class = c
                .homology
                .as_ref()
                .ok_or(HomologyError::MissingHomologyData { fiber, curve })?;
            out.push(to_big(class));
        }
    }
    Ok(out)
}

/// Checks the homological shadow of the global monodromy relation.
///
/// `Indeterminate` when the base has positive genus and no handle matrices
/// were supplied.
pub fn monodromy_shadow_check(fd: &FibrationDescription) -> Result<ShadowVerdict, HomologyError> {
    let h = fd.fiber_genus() as usize;
    let handles: &[IntegerMatrix] = match fd.handle_matrices() {
        Some(m) => m,
        None if fd.base_genus() == 0 => &[],
        None => return Ok(ShadowVerdict::Indeterminate),
    };
    let classes = vanishing_classes(fd)?;
    let product = monodromy_product(h, handles, &classes)?;
    Ok(if product.is_identity() {
        ShadowVerdict::Identity
    } else {
        ShadowVerdict::NonIdentity
    })
}

/// `S = U M V` with `U`, `V` unimodular and `S` diagonal, `d_1 | d_2 | ...`,
/// all `d_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub u: IntegerMatrix,
    pub s: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithNormalForm {
    /// Diagonal entries of `S`, including trailing zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .collect()
    }

    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn min_nonzero_in(s: &IntegerMatrix, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in cells {
        let x = s[(i, j)].abs();
        if x.is_zero() {
            continue;
        }
        if best.as_ref().is_none_or(|(_, b)| x < *b) {
            best = Some(((i, j), x));
        }
    }
    best.map(|(idx, _)| idx)
}

/// Smith normal form by row and column gcd reduction, pivoting on the entry
/// of least absolute value.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithNormalForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let block = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)));
        let Some((pi, pj)) = min_nonzero_in(&s, block) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let pivot = s[(t, t)].clone();
            let mut leftover = false;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -s[(i, t)].div_floor(&pivot);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                leftover |= !s[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -s[(t, j)].div_floor(&pivot);
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                leftover |= !s[(t, j)].is_zero();
            }

            if leftover {
                let cross = std::iter::once((t, t))
                    .chain((t + 1..rows).map(|i| (i, t)))
                    .chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = min_nonzero_in(&s, cross).expect("pivot is nonzero");
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
                s.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }

            // Pivot must divide the rest of the block; otherwise fold the
            // offending row into row t and reduce again with a smaller pivot.
            let offending = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithNormalForm { u, s, v }
}

/// First homology of the total space: `b_1` and the torsion invariant
/// factors (those greater than one).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    pub b1: u64,
    #[serde(serialize_with = "crate::document::serialize_bigints")]
    pub torsion: Vec<BigInt>,
}

/// `H_1(X) = Z^{2g} + coker R`, where the columns of `R` are the vanishing
/// cycle classes and the columns of `phi - I` for every handle matrix `phi`.
pub fn first_homology(fd: &FibrationDescription) -> Result<HomologySummary, HomologyError> {
    let h = fd.fiber_genus() as usize;
    let g = fd.base_genus() as u64;
    let handles: &[IntegerMatrix] = match fd.handle_matrices() {
        Some(m) => m,
        None if g == 0 => &[],
        None => return Err(HomologyError::MissingHandleMatrices),
    };

    let mut columns = vanishing_classes(fd)?;
    let id = IntegerMatrix::identity(2 * h);
    for phi in handles {
        let diff = phi.sub(&id)?;
        columns.extend((0..2 * h).map(|j| diff.column(j)));
    }
    let relations = IntegerMatrix::from_columns(2 * h, &columns)?;
    let snf = smith_normal_form(&relations);
    let factors = snf.invariant_factors();
    Ok(HomologySummary {
        b1: 2 * g + (2 * h - factors.len()) as u64,
        torsion: factors.into_iter().filter(|d| !d.is_one()).collect(),
    })
}
