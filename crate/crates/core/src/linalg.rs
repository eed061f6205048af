//! Exact dense linear algebra over rationals, cyclotomics and integers,
//! Hermite normal form for integer lattices, exact Pfaffians, and sparse
//! rank over prime fields.
//!
//! Elimination over the field scalars is fraction-free (Bareiss one-step
//! condensation), so intermediate entries are minors of the input and the
//! interior divisions are exact in the coefficient domain. That keeps the
//! degree-18 cyclotomic entries and the wide rational multiplication
//! matrices tractable.

#![allow(clippy::needless_range_loop, clippy::while_let_loop)] // index loops mirror the matrix algebra
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::Signed;

use crate::cyclo::{Cyclotomic, Rational};

/// Scalar operations needed by the elimination kernels. `exact_div` must be
/// exact in the domain; for fields it is ordinary division.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, o: &Self) -> Self;
    /// Multiplicative inverse where the scalars form a field; elimination
    /// caches this per pivot so that cyclotomic divisions (a linear solve
    /// each) are not repeated across a whole elimination step.
    fn try_inv(&self) -> Option<Self> {
        None
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        self / o
    }
    fn try_inv(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for BigInt {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, o: &Self) -> Self {
        let (q, r) = self.div_rem(o);
        debug_assert!(num_traits::Zero::is_zero(&r), "inexact integer division");
        q
    }
}

impl Scalar for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero(1)
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Cyclotomic::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Cyclotomic::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Cyclotomic::mul(self, o)
    }
    fn neg(&self) -> Self {
        Cyclotomic::neg(self)
    }
    fn exact_div(&self, o: &Self) -> Self {
        Cyclotomic::div(self, o).expect("division by zero in elimination")
    }
    fn try_inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}

/// Dense rectangular matrix with uniform scalar kind.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix<S> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
            }
            acc
        })
    }

    pub fn matvec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<S>) -> Matrix<S> {
        assert!(self.rows == other.rows && self.cols == other.cols);
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j).add(other.at(i, j)))
    }

    pub fn sub(&self, other: &Matrix<S>) -> Matrix<S> {
        assert!(self.rows == other.rows && self.cols == other.cols);
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j).sub(other.at(i, j)))
    }

    pub fn scale(&self, s: &S) -> Matrix<S> {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j).mul(s))
    }

    pub fn map<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix::from_fn(self.rows, self.cols, |i, j| f(self.at(i, j)))
    }
}

impl<S: Scalar + fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Result of fraction-free row reduction.
pub struct Echelon<S> {
    pub m: Matrix<S>,
    /// `(row, col)` of each pivot, rows 0..rank, columns increasing.
    pub pivots: Vec<(usize, usize)>,
    /// Sign of the row permutation applied.
    pub sign: i32,
}

/// One-step Bareiss condensation. Entries of the result are (up to sign)
/// minors of the input, and every interior division is exact.
pub fn bareiss_echelon<S: Scalar>(input: &Matrix<S>) -> Echelon<S> {
    let mut m = input.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut pivots = Vec::new();
    let mut sign = 1;
    let mut prev = S::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // pivot search in column c at rows >= r
        let Some(p) = (r..rows).find(|&i| !m.at(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.data.swap(p * cols + j, r * cols + j);
            }
            sign = -sign;
        }
        let pivot = m.at(r, c).clone();
        let prev_is_one = prev == S::one();
        let prev_inv = if prev_is_one { None } else { prev.try_inv() };
        for i in (r + 1)..rows {
            let head = m.at(i, c).clone();
            for j in (c + 1)..cols {
                let v = pivot.mul(m.at(i, j)).sub(&head.mul(m.at(r, j)));
                let v = if prev_is_one {
                    v
                } else if let Some(pi) = &prev_inv {
                    v.mul(pi)
                } else {
                    v.exact_div(&prev)
                };
                m.set(i, j, v);
            }
            m.set(i, c, S::zero());
        }
        prev = pivot;
        pivots.push((r, c));
        r += 1;
    }
    Echelon { m, pivots, sign }
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    bareiss_echelon(m).pivots.len()
}

/// Determinant of a square matrix over an integral domain.
pub fn det<S: Scalar>(m: &Matrix<S>) -> S {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let ech = bareiss_echelon(m);
    if ech.pivots.len() < m.rows {
        return S::zero();
    }
    let last = ech.m.at(m.rows - 1, m.cols - 1).clone();
    if ech.sign < 0 {
        last.neg()
    } else {
        last
    }
}

/// Rank and an exact kernel basis; scalars must form a field.
pub fn rank_kernel<S: Scalar>(m: &Matrix<S>) -> (usize, Vec<Vec<S>>) {
    let ech = bareiss_echelon(m);
    let rank = ech.pivots.len();
    let cols = m.cols;
    let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
    let is_pivot = |c: usize| pivot_cols.binary_search(&c).is_ok();
    let mut basis = Vec::new();
    for fc in (0..cols).filter(|&c| !is_pivot(c)) {
        let mut x = vec![S::zero(); cols];
        x[fc] = S::one();
        // back-substitute pivot variables from bottom to top
        for &(pr, pc) in ech.pivots.iter().rev() {
            let mut acc = S::zero();
            for j in (pc + 1)..cols {
                if !x[j].is_zero() {
                    acc = acc.add(&ech.m.at(pr, j).mul(&x[j]));
                }
            }
            x[pc] = acc.neg().exact_div(ech.m.at(pr, pc));
        }
        basis.push(x);
    }
    debug_assert!(basis
        .iter()
        .all(|x| m.matvec(x).iter().all(|v| v.is_zero())));
    (rank, basis)
}

/// Solve `m x = b` over a field; `None` if inconsistent. Free variables are
/// set to zero, so the result is one solution, not the affine set.
pub fn solve<S: Scalar>(m: &Matrix<S>, b: &[S]) -> Option<Vec<S>> {
    assert_eq!(m.rows, b.len());
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m.at(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let ech = bareiss_echelon(&aug);
    if ech.pivots.iter().any(|&(_, c)| c == m.cols) {
        return None; // pivot in the augmented column
    }
    let mut x = vec![S::zero(); m.cols];
    for &(pr, pc) in ech.pivots.iter().rev() {
        let mut acc = ech.m.at(pr, m.cols).clone();
        for j in (pc + 1)..m.cols {
            if !x[j].is_zero() {
                acc = acc.sub(&ech.m.at(pr, j).mul(&x[j]));
            }
        }
        x[pc] = acc.exact_div(ech.m.at(pr, pc));
    }
    Some(x)
}

pub fn inverse<S: Scalar>(m: &Matrix<S>) -> Option<Matrix<S>> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<S> =
            (0..n).map(|i| if i == j { S::one() } else { S::zero() }).collect();
        cols.push(solve(m, &e)?);
    }
    Some(Matrix::from_fn(n, n, |i, j| cols[j][i].clone()))
}

// ---------------------------------------------------------------------------
// Hermite normal form over the integers.
// ---------------------------------------------------------------------------

pub struct Hnf {
    /// Row Hermite normal form: pivots positive, entries above each pivot
    /// reduced into `[0, pivot)`, zero rows at the bottom.
    pub h: Matrix<BigInt>,
    /// Unimodular transform with `u * m = h`.
    pub u: Matrix<BigInt>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        (0..self.h.rows())
            .take_while(|&i| (0..self.h.cols()).any(|j| !Scalar::is_zero(self.h.at(i, j))))
            .count()
    }

    /// The nonzero rows as a basis matrix.
    pub fn basis(&self) -> Matrix<BigInt> {
        let r = self.rank();
        Matrix::from_fn(r, self.h.cols(), |i, j| self.h.at(i, j).clone())
    }
}

/// Row Hermite normal form with transform, by gcd row reduction.
pub fn hnf(m: &Matrix<BigInt>) -> Hnf {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u: Matrix<BigInt> = Matrix::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // smallest nonzero entry in column c at rows >= r
            let Some(p) = ((r..rows).filter(|&i| !Scalar::is_zero(h.at(i, c))))
                .min_by_key(|&i| h.at(i, c).abs())
            else {
                break;
            };
            if p != r {
                for j in 0..cols {
                    let a = h.at(r, j).clone();
                    h.set(r, j, h.at(p, j).clone());
                    h.set(p, j, a);
                }
                for j in 0..rows {
                    let a = u.at(r, j).clone();
                    u.set(r, j, u.at(p, j).clone());
                    u.set(p, j, a);
                }
            }
            let pivot = h.at(r, c).clone();
            let mut done = true;
            for i in (r + 1)..rows {
                if Scalar::is_zero(h.at(i, c)) {
                    continue;
                }
                // round-to-nearest quotient keeps entries small
                let q = rounded_div(h.at(i, c), &pivot);
                if !Scalar::is_zero(&q) {
                    for j in 0..cols {
                        let v = h.at(i, j) - &q * h.at(r, j);
                        h.set(i, j, v);
                    }
                    for j in 0..rows {
                        let v = u.at(i, j) - &q * u.at(r, j);
                        u.set(i, j, v);
                    }
                }
                if !Scalar::is_zero(h.at(i, c)) {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if Scalar::is_zero(h.at(r, c)) {
            continue;
        }
        if h.at(r, c).is_negative() {
            for j in 0..cols {
                h.set(r, j, -h.at(r, j).clone());
            }
            for j in 0..rows {
                u.set(r, j, -u.at(r, j).clone());
            }
        }
        // reduce the entries above the pivot into [0, pivot)
        let pivot = h.at(r, c).clone();
        for i in 0..r {
            let q = h.at(i, c).div_floor(&pivot);
            if !Scalar::is_zero(&q) {
                for j in 0..cols {
                    let v = h.at(i, j) - &q * h.at(r, j);
                    h.set(i, j, v);
                }
                for j in 0..rows {
                    let v = u.at(i, j) - &q * u.at(r, j);
                    u.set(i, j, v);
                }
            }
        }
        r += 1;
    }
    Hnf { h, u }
}

fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if &r * 2 > b.abs() {
        q + 1
    } else {
        q
    }
}

/// Integer coordinates of `v` in the (nonzero-row) HNF basis, or `None` when
/// `v` is outside the lattice the rows generate.
pub fn coords_in_hnf(basis: &Matrix<BigInt>, v: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(basis.cols(), v.len());
    let mut v = v.to_vec();
    let mut coords = Vec::with_capacity(basis.rows());
    for i in 0..basis.rows() {
        let pc = (0..basis.cols()).find(|&j| !Scalar::is_zero(basis.at(i, j)));
        let Some(pc) = pc else {
            coords.push(<BigInt as Scalar>::zero());
            continue;
        };
        let (q, r) = v[pc].div_rem(basis.at(i, pc));
        if !Scalar::is_zero(&r) {
            return None;
        }
        if !Scalar::is_zero(&q) {
            for j in pc..basis.cols() {
                let d = &v[j] - &q * basis.at(i, j);
                v[j] = d;
            }
        }
        coords.push(q);
    }
    if v.iter().all(Scalar::is_zero) {
        Some(coords)
    } else {
        None
    }
}

pub fn in_lattice(basis: &Matrix<BigInt>, v: &[BigInt]) -> bool {
    coords_in_hnf(basis, v).is_some()
}

// ---------------------------------------------------------------------------
// Pfaffian of an antisymmetric rational matrix.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PfaffianError {
    OddDimension(usize),
    NotAntisymmetric,
}

impl fmt::Display for PfaffianError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PfaffianError::OddDimension(n) => write!(f, "odd dimension {n}"),
            PfaffianError::NotAntisymmetric => write!(f, "matrix is not antisymmetric"),
        }
    }
}

impl std::error::Error for PfaffianError {}

/// Exact Pfaffian by skew-symmetric congruence elimination: repeatedly bring
/// a 2x2 block to the front and clear its row/column pair with congruence
/// operations (which leave the Pfaffian fixed), accumulating swap signs.
pub fn pfaffian(m: &Matrix<Rational>) -> Result<Rational, PfaffianError> {
    let n = m.rows();
    if n != m.cols() || !n.is_multiple_of(2) {
        return Err(PfaffianError::OddDimension(n));
    }
    for i in 0..n {
        for j in 0..n {
            if *m.at(i, j) != -m.at(j, i).clone() {
                return Err(PfaffianError::NotAntisymmetric);
            }
        }
    }
    let mut a = m.clone();
    let mut pf = <Rational as Scalar>::one();
    for k in (0..n).step_by(2) {
        let Some(p) = ((k + 1)..n).find(|&j| !Scalar::is_zero(a.at(k, j))) else {
            return Ok(<Rational as Scalar>::zero());
        };
        if p != k + 1 {
            swap_rows_cols(&mut a, p, k + 1);
            pf = -pf;
        }
        let pivot = a.at(k, k + 1).clone();
        for i in (k + 2)..n {
            // clear a[k][i] with row/col k+1
            let f1 = a.at(k, i) / &pivot;
            if !Scalar::is_zero(&f1) {
                add_multiple_row_col(&mut a, i, k + 1, &-f1);
            }
            // clear a[k+1][i] with row/col k (a[k+1][k] = -pivot)
            let f2 = a.at(k + 1, i) / &pivot;
            if !Scalar::is_zero(&f2) {
                add_multiple_row_col(&mut a, i, k, &f2);
            }
        }
        pf *= &pivot;
    }
    Ok(pf)
}

fn swap_rows_cols(a: &mut Matrix<Rational>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let x = a.at(i, c).clone();
        a.set(i, c, a.at(j, c).clone());
        a.set(j, c, x);
    }
    for r in 0..n {
        let x = a.at(r, i).clone();
        a.set(r, i, a.at(r, j).clone());
        a.set(r, j, x);
    }
}

/// `row_i += f * row_j` and `col_i += f * col_j` (congruence by a transvection).
fn add_multiple_row_col(a: &mut Matrix<Rational>, i: usize, j: usize, f: &Rational) {
    let n = a.rows();
    for c in 0..n {
        let v = a.at(i, c) + f * a.at(j, c);
        a.set(i, c, v);
    }
    for r in 0..n {
        let v = a.at(r, i) + f * a.at(r, j);
        a.set(r, i, v);
    }
}

// ---------------------------------------------------------------------------
// Dense matrices over a small prime field.
// ---------------------------------------------------------------------------

/// Dense matrix over `F_p` for small `p`; used for the quotient-flag
/// computations over `F_19`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpMatrix {
    pub p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn from_fn(p: u64, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j) % p);
            }
        }
        FpMatrix { p, rows, cols, data }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        Self::from_fn(p, n, n, |i, j| u64::from(i == j))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn mul(&self, o: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, o.rows);
        assert_eq!(self.p, o.p);
        FpMatrix::from_fn(self.p, self.rows, o.cols, |i, j| {
            let mut acc = 0u64;
            for k in 0..self.cols {
                acc = (acc + self.at(i, k) * o.at(k, j)) % self.p;
            }
            acc
        })
    }

    pub fn sub(&self, o: &FpMatrix) -> FpMatrix {
        assert!(self.rows == o.rows && self.cols == o.cols && self.p == o.p);
        FpMatrix::from_fn(self.p, self.rows, self.cols, |i, j| {
            (self.at(i, j) + self.p - o.at(i, j)) % self.p
        })
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = FpMatrix::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Reduced row echelon form; returns pivot columns.
    pub fn rref(&self) -> (FpMatrix, Vec<usize>) {
        let mut m = self.clone();
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.at(i, c) != 0) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m.at(r, j);
                m.set(r, j, m.at(pr, j));
                m.set(pr, j, tmp);
            }
            let inv = mod_inverse_u64(m.at(r, c), p);
            for j in 0..m.cols {
                m.set(r, j, m.at(r, j) * inv % p);
            }
            for i in 0..m.rows {
                if i != r && m.at(i, c) != 0 {
                    let f = m.at(i, c);
                    for j in 0..m.cols {
                        let v = (m.at(i, j) + (p - f) * m.at(r, j)) % p;
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let (m, pivots) = self.rref();
        let p = self.p;
        let mut basis = Vec::new();
        for fc in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut x = vec![0u64; self.cols];
            x[fc] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = (p - m.at(r, fc) % p) % p;
            }
            basis.push(x);
        }
        basis
    }
}

pub fn is_prime_u64(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn mod_inverse_u64(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "{a} not invertible mod {p}");
    t.rem_euclid(p as i128) as u64
}

// ---------------------------------------------------------------------------
// Sparse rank over F_p.
// ---------------------------------------------------------------------------

/// Sparse matrix over `F_p`, rows stored as sorted `(column, value)` lists
/// with values in `[1, p-1]`.
#[derive(Clone, Debug)]
pub struct SparseMatrixFp {
    p: u64,
    ncols: usize,
    rows: Vec<Vec<(u32, u64)>>,
}

impl SparseMatrixFp {
    pub fn new(p: u64, ncols: usize) -> Self {
        assert!((2..(1 << 31)).contains(&p), "modulus out of range");
        assert!(is_prime_u64(p), "modulus must be prime");
        SparseMatrixFp { p, ncols, rows: Vec::new() }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Push a row given as arbitrary (column, value) pairs; duplicates are
    /// accumulated and zeros dropped.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (u32, u64)>) {
        let p = self.p;
        let mut row: Vec<(u32, u64)> = Vec::new();
        for (c, v) in entries {
            assert!((c as usize) < self.ncols);
            row.push((c, v % p));
        }
        row.sort_unstable_by_key(|&(c, _)| c);
        let mut merged: Vec<(u32, u64)> = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some((lc, lv)) if *lc == c => *lv = (*lv + v) % p,
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|&(_, v)| v != 0);
        self.rows.push(merged);
    }

    /// Exact rank by sparsity-guided elimination: always eliminate with the
    /// shortest live row, pivoting on its rarest column.
    pub fn rank(&self) -> usize {
        let p = self.p;
        let mut rows: Vec<Option<Vec<(u32, u64)>>> =
            self.rows.iter().cloned().map(Some).collect();
        // exact live occupancy per column + (stale-tolerant) row lists
        let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); self.ncols];
        let mut col_count: Vec<u32> = vec![0; self.ncols];
        for (ri, row) in rows.iter().enumerate() {
            for &(c, _) in row.as_ref().unwrap() {
                col_rows[c as usize].push(ri as u32);
                col_count[c as usize] += 1;
            }
        }
        use std::cmp::Reverse;
        use std::collections::BinaryHeap;
        let mut heap: BinaryHeap<Reverse<(u32, u32)>> = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.as_ref().unwrap().is_empty())
            .map(|(i, r)| Reverse((r.as_ref().unwrap().len() as u32, i as u32)))
            .collect();
        let mut rank = 0usize;
        while let Some(Reverse((len, ri))) = heap.pop() {
            let ri = ri as usize;
            let Some(prow) = rows[ri].clone() else { continue };
            if prow.is_empty() || prow.len() as u32 != len {
                continue; // stale heap entry
            }
            rank += 1;
            // rarest column of the pivot row
            let (pc, pv) = *prow
                .iter()
                .min_by_key(|&&(c, _)| col_count[c as usize])
                .expect("nonempty row");
            let pv_inv = mod_inverse_u64(pv, p);
            // eliminate pc from every other live row containing it
            let victims = std::mem::take(&mut col_rows[pc as usize]);
            for si in victims {
                let si = si as usize;
                if si == ri {
                    continue;
                }
                let Some(srow) = rows[si].take() else { continue };
                let Ok(pos) = srow.binary_search_by_key(&pc, |&(c, _)| c) else {
                    rows[si] = Some(srow);
                    continue; // stale entry
                };
                let factor = srow[pos].1 * pv_inv % p;
                // srow - factor * prow, sorted merge
                let mut out: Vec<(u32, u64)> = Vec::with_capacity(srow.len() + prow.len());
                let (mut a, mut b) = (0usize, 0usize);
                while a < srow.len() || b < prow.len() {
                    match (srow.get(a), prow.get(b)) {
                        (Some(&(ca, va)), Some(&(cb, vb))) if ca == cb => {
                            let v = (va + (p - factor * vb % p)) % p;
                            if v != 0 {
                                out.push((ca, v));
                            } else {
                                col_count[ca as usize] -= 1;
                            }
                            a += 1;
                            b += 1;
                        }
                        (Some(&(ca, va)), Some(&(cb, _))) if ca < cb => {
                            out.push((ca, va));
                            a += 1;
                        }
                        (Some(&(ca, va)), None) => {
                            out.push((ca, va));
                            a += 1;
                        }
                        (_, Some(&(cb, vb))) => {
                            let v = (p - factor * vb % p) % p;
                            if v != 0 {
                                out.push((cb, v));
                                col_rows[cb as usize].push(si as u32);
                                col_count[cb as usize] += 1;
                            }
                            b += 1;
                        }
                        (None, None) => unreachable!(),
                    }
                }
                if !out.is_empty() {
                    heap.push(Reverse((out.len() as u32, si as u32)));
                    rows[si] = Some(out);
                } else {
                    rows[si] = Some(Vec::new());
                }
            }
            // retire the pivot row
            for &(c, _) in &prow {
                col_count[c as usize] -= 1;
                if c != pc {
                    // stale entries for c are filtered on use
                }
            }
            rows[ri] = None;
        }
        rank
    }
}
