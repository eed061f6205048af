//! The period-lattice tower `Lambda_0 c ... c Lambda_8` inside
//! `Q(zeta_19)^9`, the quotient-flag machinery over `F_19`, the invariant
//! alternating form, Gram Pfaffians, and the principal-lattice
//! computations.
//!
//! Lattices are rank-18 integer lattices in the 162-dimensional rational
//! coordinate space of `Q(zeta_19)^9`, stored as a Hermite normal form over
//! a common denominator. The `Z[nu]`-module structure is verified as
//! stability under multiplication by `nu` rather than assumed (`Z[nu]` is a
//! principal ideal domain with no Euclidean algorithm, so integer normal
//! forms are the robust canonical representation).
//!
//! The alternating form is
//! `E(x, y) = a (s - conj s)/(1 + 2 nu)` with `s = sum_k x_k conj(y_k)`,
//! the exact realization of the imaginary part of the invariant Hermitian
//! form `(2/sqrt19) I`: on lattice vectors `s` lies in `Q(nu)` and the
//! quotient by `1 + 2 nu = i sqrt19` is rational.

#![allow(clippy::needless_range_loop)] // index loops mirror the matrix algebra
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::cyclo::{gauss_nu, one_plus_two_nu, Cyclotomic, Rational};
use crate::linalg::{self, FpMatrix, Matrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeriodsError {
    /// A pairing that must be rational came out irrational: the inputs are
    /// outside the module where the form is integral-rational.
    NonRational(String),
    RankDeficient(usize),
}

impl fmt::Display for PeriodsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeriodsError::NonRational(what) => write!(f, "non-rational value: {what}"),
            PeriodsError::RankDeficient(r) => write!(f, "lattice has rank {r}, expected 18"),
        }
    }
}

impl std::error::Error for PeriodsError {}

/// A vector in `V = Q(zeta_19)^9` over the basis `e_1..e_9`.
#[derive(Clone, PartialEq, Debug)]
pub struct PeriodVector {
    pub coords: Vec<Cyclotomic>,
}

impl PeriodVector {
    pub fn new(coords: Vec<Cyclotomic>) -> Self {
        assert_eq!(coords.len(), 9);
        PeriodVector { coords }
    }

    pub fn zero() -> Self {
        PeriodVector { coords: vec![Cyclotomic::zero(19); 9] }
    }

    pub fn basis(j: usize) -> Self {
        let mut v = Self::zero();
        v.coords[j] = Cyclotomic::one();
        v
    }

    pub fn add(&self, o: &PeriodVector) -> PeriodVector {
        PeriodVector {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &PeriodVector) -> PeriodVector {
        PeriodVector {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> PeriodVector {
        PeriodVector { coords: self.coords.iter().map(|v| v.mul(c)).collect() }
    }

    pub fn apply(&self, g: &Matrix<Cyclotomic>) -> PeriodVector {
        assert!(g.rows() == 9 && g.cols() == 9);
        PeriodVector { coords: g.matvec(&self.coords) }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Cyclotomic::is_zero)
    }

    /// Rational coordinates over `Q^162` (nine blocks of the 18 canonical
    /// basis coefficients of `Q(zeta_19)`).
    pub fn to_q162(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(162);
        for c in &self.coords {
            let c = c.lift_to_order(19);
            for e in 0..18 {
                out.push(c.coeff(e));
            }
        }
        out
    }

    pub fn from_q162(coords: &[Rational]) -> PeriodVector {
        assert_eq!(coords.len(), 162);
        PeriodVector {
            coords: (0..9)
                .map(|j| {
                    Cyclotomic::from_terms(
                        19,
                        (0..18).map(|e| (i64::from(e), coords[j * 18 + e as usize].clone())),
                    )
                })
                .collect(),
        }
    }
}

/// `v_k = tau^k (e_1 + ... + e_9)`, coordinates `xi^{j^2 k}`; periodic with
/// `v_{k+19} = v_k`.
pub fn v_vector(k: i64) -> PeriodVector {
    PeriodVector {
        coords: (1..=9i64).map(|j| Cyclotomic::root_of_unity(19, j * j * k)).collect(),
    }
}

/// `w'_k = (v_k - 5 v_{k+1} + 10 v_{k+2} - 10 v_{k+3} + 5 v_{k+4} - v_{k+5})
///         / (1 + 2 nu)`, the binomial combination `(1-tau)^5 v_k / (1+2nu)`.
pub fn wprime_vector(k: i64) -> PeriodVector {
    let coeffs: [i64; 6] = [1, -5, 10, -10, 5, -1];
    let mut acc = PeriodVector::zero();
    for (j, &c) in coeffs.iter().enumerate() {
        acc = acc.add(&v_vector(k + j as i64).scale(&Cyclotomic::from_int(c)));
    }
    acc.scale(&inv_one_plus_two_nu())
}

pub fn inv_one_plus_two_nu() -> Cyclotomic {
    // (1 + 2 nu)^{-1} = -(1 + 2 nu)/19
    one_plus_two_nu().scale(&crate::cyclo::rat(-1, 19))
}

/// The covector `ell_k`: `ell_k(z) = sum_j xi^{j^2 k} z_j`.
pub fn ell(k: i64, z: &PeriodVector) -> Cyclotomic {
    let mut acc = Cyclotomic::zero(19);
    for (j0, c) in z.coords.iter().enumerate() {
        let j = j0 as i64 + 1;
        acc = acc.add(&Cyclotomic::root_of_unity(19, j * j * k).mul(c));
    }
    acc
}

/// Write a value as `a + b nu` with integers `a, b`, if it lies in `Z[nu]`.
pub fn try_z_nu(c: &Cyclotomic) -> Option<(BigInt, BigInt)> {
    let b = c.coeff(1);
    let a = c.coeff(0);
    if !a.is_integer() || !b.is_integer() {
        return None;
    }
    let candidate = Cyclotomic::from_rational(a.clone())
        .add(&gauss_nu().scale(&b));
    if candidate == *c {
        Some((a.to_integer(), b.to_integer()))
    } else {
        None
    }
}

/// A rank-18 lattice in `Q(zeta_19)^9 = Q^162`, held as the row Hermite
/// normal form of its generators over a reduced common denominator; two
/// lattices are equal exactly when these canonical forms coincide.
#[derive(Clone, PartialEq)]
pub struct PeriodLattice {
    scale: BigInt,
    basis: Matrix<BigInt>,
}

impl fmt::Debug for PeriodLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PeriodLattice(rank {}, scale {})", self.basis.rows(), self.scale)
    }
}

impl PeriodLattice {
    pub fn from_generators(gens: &[PeriodVector]) -> PeriodLattice {
        let coords: Vec<Vec<Rational>> = gens.iter().map(PeriodVector::to_q162).collect();
        let mut den = BigInt::one();
        for row in &coords {
            for v in row {
                den = den.lcm(v.denom());
            }
        }
        let int_rows: Vec<Vec<BigInt>> = coords
            .iter()
            .map(|row| row.iter().map(|v| v.numer() * (&den / v.denom())).collect())
            .collect();
        let hnf = linalg::hnf(&Matrix::from_rows(int_rows));
        let mut basis = hnf.basis();
        // canonical form: gcd(scale, entries) = 1
        let mut g = den.clone();
        'outer: for i in 0..basis.rows() {
            for j in 0..basis.cols() {
                g = g.gcd(basis.at(i, j));
                if g.is_one() {
                    break 'outer;
                }
            }
        }
        if !g.is_one() {
            basis = basis.map(|v| v / &g);
        }
        PeriodLattice { scale: den / g, basis }
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn expect_full_rank(self) -> Result<PeriodLattice, PeriodsError> {
        if self.rank() == 18 {
            Ok(self)
        } else {
            Err(PeriodsError::RankDeficient(self.rank()))
        }
    }

    /// Basis vectors back in `Q(zeta_19)^9` form.
    pub fn basis_vectors(&self) -> Vec<PeriodVector> {
        let s = Rational::new(BigInt::one(), self.scale.clone());
        (0..self.basis.rows())
            .map(|i| {
                let row: Vec<Rational> = (0..162)
                    .map(|j| Rational::from_integer(self.basis.at(i, j).clone()) * &s)
                    .collect();
                PeriodVector::from_q162(&row)
            })
            .collect()
    }

    pub fn contains(&self, v: &PeriodVector) -> bool {
        let coords = v.to_q162();
        let mut scaled = Vec::with_capacity(162);
        for c in coords {
            let t = c * Rational::from_integer(self.scale.clone());
            if !t.is_integer() {
                return false;
            }
            scaled.push(t.to_integer());
        }
        linalg::in_lattice(&self.basis, &scaled)
    }

    /// `[self : sub]` as a positive integer when `sub` is a finite-index
    /// sublattice, `None` if `sub` is not contained in `self`.
    pub fn index_over(&self, sub: &PeriodLattice) -> Option<BigInt> {
        if self.rank() != sub.rank() {
            return None;
        }
        let l = self.scale.lcm(&sub.scale);
        let self_mult = &l / &self.scale;
        let sub_mult = &l / &sub.scale;
        let self_basis = self.basis.map(|v| v * &self_mult);
        let n = sub.rank();
        let mut coord_rows = Vec::with_capacity(n);
        for i in 0..n {
            let row: Vec<BigInt> =
                (0..162).map(|j| sub.basis.at(i, j) * &sub_mult).collect();
            coord_rows.push(linalg::coords_in_hnf(&self_basis, &row)?);
        }
        let c = Matrix::from_rows(coord_rows);
        Some(linalg::det(&c).abs())
    }

    /// Image lattice under a 9x9 matrix acting on `Q(zeta_19)^9`.
    pub fn apply(&self, g: &Matrix<Cyclotomic>) -> PeriodLattice {
        let gens: Vec<PeriodVector> =
            self.basis_vectors().iter().map(|v| v.apply(g)).collect();
        PeriodLattice::from_generators(&gens)
    }

    pub fn stable_under(&self, g: &Matrix<Cyclotomic>) -> bool {
        self.apply(g) == *self
    }

    /// Stability of the `Z[nu]`-module structure: multiplication by `nu`
    /// maps the lattice into itself.
    pub fn nu_stable(&self) -> bool {
        let nu = gauss_nu();
        self.basis_vectors().iter().all(|v| self.contains(&v.scale(&nu)))
    }
}

/// `Lambda_0 = sum_k Z[nu] v_k`, `k = 0..8`.
pub fn lattice_lambda0() -> PeriodLattice {
    let nu = gauss_nu();
    let mut gens = Vec::new();
    for k in 0..9 {
        let v = v_vector(k);
        gens.push(v.scale(&nu));
        gens.push(v);
    }
    PeriodLattice::from_generators(&gens).expect_full_rank().expect("rank 18")
}

/// The same lattice from the 19 translates `v_0 .. v_18` (the raw
/// definition, before the module identity).
pub fn lattice_v_span() -> PeriodLattice {
    let gens: Vec<PeriodVector> = (0..19).map(v_vector).collect();
    PeriodLattice::from_generators(&gens).expect_full_rank().expect("rank 18")
}

/// `Lambda_8 = sum_{k=0..7} (Z[nu]/(1+2nu)) (v_k - v_{k+1}) + Z[nu] v_0`
/// from its explicit basis.
pub fn lattice_lambda8() -> PeriodLattice {
    let nu = gauss_nu();
    let w = inv_one_plus_two_nu();
    let mut gens = Vec::new();
    for k in 0..8 {
        let d = v_vector(k).sub(&v_vector(k + 1)).scale(&w);
        gens.push(d.scale(&nu));
        gens.push(d);
    }
    let v0 = v_vector(0);
    gens.push(v0.scale(&nu));
    gens.push(v0);
    PeriodLattice::from_generators(&gens).expect_full_rank().expect("rank 18")
}

/// `Lambda_8` from its dual description `{z : ell_k(z) in Z[nu], k=0..8}`,
/// i.e. the `Z[nu]`-span of the dual basis of the `ell_k`.
pub fn lattice_lambda8_dual() -> PeriodLattice {
    let lmat = Matrix::from_fn(9, 9, |k, j0| {
        let j = j0 as i64 + 1;
        Cyclotomic::root_of_unity(19, j * j * k as i64)
    });
    let linv = linalg::inverse(&lmat).expect("ell covectors are independent");
    let nu = gauss_nu();
    let mut gens = Vec::new();
    for i in 0..9 {
        let col = PeriodVector::new((0..9).map(|r| linv.at(r, i).clone()).collect());
        gens.push(col.scale(&nu));
        gens.push(col);
    }
    PeriodLattice::from_generators(&gens).expect_full_rank().expect("rank 18")
}

/// The flag data of the quotient `Lambda_8 / Lambda_0` over
/// `F_19 = Z[nu]/(1+2nu)`.
pub struct FlagQuotient {
    /// Matrix of the induced `tau` in the `t`-basis.
    pub tau_hat_t: FpMatrix,
    /// Matrix of the induced `tau` in the `w`-basis: the single unipotent
    /// Jordan block.
    pub tau_hat_w: FpMatrix,
    /// Lifts of `w_1 .. w_8` to `Lambda_8`.
    pub w_lifts: Vec<PeriodVector>,
    /// Number of `tau`-stable subspaces of the quotient (the flag: 9).
    pub stable_subspace_count: usize,
}

/// Coordinates of `Lambda_8`-elements in the `t_i = (v_{i-1} - v_i)/(1+2nu)`
/// basis of the quotient modulo `Lambda_0`.
struct QuotientSolver {
    /// HNF of the stacked generators `t_1..t_8, Lambda_0-basis` at scale 19.
    h: Matrix<BigInt>,
    u: Matrix<BigInt>,
}

impl QuotientSolver {
    fn new(lambda0: &PeriodLattice, t_lifts: &[PeriodVector]) -> QuotientSolver {
        let scale = BigInt::from(19);
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for t in t_lifts {
            rows.push(scaled_integer_coords(t, &scale));
        }
        let mult = &scale / &lambda0.scale;
        assert!(!mult.is_zero(), "lattice scale divides 19");
        for i in 0..lambda0.basis.rows() {
            rows.push((0..162).map(|j| lambda0.basis.at(i, j) * &mult).collect());
        }
        let hnf = linalg::hnf(&Matrix::from_rows(rows));
        QuotientSolver { h: hnf.h, u: hnf.u }
    }

    /// `z mod Lambda_0` in the `t`-basis; `z` must lie in the span.
    fn coords(&self, z: &PeriodVector) -> [u64; 8] {
        let zi = scaled_integer_coords(z, &BigInt::from(19));
        let c = linalg::coords_in_hnf(&self.h, &zi).expect("element of Lambda_8");
        // back through the transform: coefficients over the original rows
        let mut out = [0u64; 8];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = BigInt::zero();
            for (k, ck) in c.iter().enumerate() {
                acc += ck * self.u.at(k, i);
            }
            *slot = u64::try_from(acc.mod_floor(&BigInt::from(19))).unwrap();
        }
        out
    }
}

fn scaled_integer_coords(v: &PeriodVector, scale: &BigInt) -> Vec<BigInt> {
    v.to_q162()
        .into_iter()
        .map(|c| {
            let t = c * Rational::from_integer(scale.clone());
            assert!(t.is_integer(), "vector outside the 1/{scale} lattice");
            t.to_integer()
        })
        .collect()
}

/// Build the quotient flag: the `t`-basis, the `w`-basis with its binomial
/// change of basis, the induced `tau` matrices, and the count of stable
/// subspaces (certified by the kernel chain of the unipotent part, whose
/// one-dimensional kernel forces every invariant subspace onto the chain).
pub fn flag_quotient(tau: &Matrix<Cyclotomic>, lambda0: &PeriodLattice) -> FlagQuotient {
    let w = inv_one_plus_two_nu();
    let t_lifts: Vec<PeriodVector> = (1..=8)
        .map(|i| v_vector(i - 1).sub(&v_vector(i)).scale(&w))
        .collect();
    let solver = QuotientSolver::new(lambda0, &t_lifts);
    let p = 19u64;
    let mut tau_t = FpMatrix::from_fn(p, 8, 8, |_, _| 0);
    for (i, t) in t_lifts.iter().enumerate() {
        let img = solver.coords(&t.apply(tau));
        for m in 0..8 {
            tau_t.set(m, i, img[m]);
        }
    }
    // w_{8-k} = (-1)^k sum_j binom(k, j) (-1)^j t_{j+1}
    let mut wcols: Vec<Vec<i64>> = vec![vec![0; 8]; 8];
    for k in 0..8usize {
        let col = &mut wcols[7 - k];
        let mut binom: i64 = 1;
        for j in 0..=k {
            let signed = binom * if (k + j) % 2 == 0 { 1 } else { -1 };
            col[j] = signed;
            binom = binom * (k as i64 - j as i64) / (j as i64 + 1);
        }
    }
    let wmat = FpMatrix::from_fn(p, 8, 8, |m, i| wcols[i][m].rem_euclid(19) as u64);
    let winv = fp_inverse(&wmat);
    let tau_w = winv.mul(&tau_t).mul(&wmat);

    let w_lifts: Vec<PeriodVector> = (0..8)
        .map(|i| {
            let mut acc = PeriodVector::zero();
            for (j, t) in t_lifts.iter().enumerate() {
                if wcols[i][j] != 0 {
                    acc = acc.add(&t.scale(&Cyclotomic::from_int(wcols[i][j])));
                }
            }
            acc
        })
        .collect();

    // invariant subspaces: N = tau_w - 1 is nilpotent with dim ker N = 1,
    // so the invariant subspaces are exactly ker N^j, j = 0..8
    let n = tau_w.sub(&FpMatrix::identity(p, 8));
    assert_eq!(n.kernel().len(), 1, "one-dimensional fixed space");
    let mut count = 1; // the zero subspace
    for j in 1..=8u64 {
        let ker = n.pow(j).kernel();
        assert_eq!(ker.len(), j as usize, "kernel chain dimension");
        // spanned by the first j w-basis vectors: rref is the standard basis
        let km = FpMatrix::from_fn(p, ker.len(), 8, |r, c| ker[r][c]);
        let (rref, pivots) = km.rref();
        assert_eq!(pivots, (0..j as usize).collect::<Vec<_>>());
        for r in 0..ker.len() {
            for c in 0..8 {
                let expect = u64::from(r == c);
                assert_eq!(rref.at(r, c), expect, "kernel chain is the w-flag");
            }
        }
        count += 1;
    }
    FlagQuotient { tau_hat_t: tau_t, tau_hat_w: tau_w, w_lifts, stable_subspace_count: count }
}

fn fp_inverse(m: &FpMatrix) -> FpMatrix {
    let n = m.rows();
    let aug = FpMatrix::from_fn(m.p, n, 2 * n, |i, j| {
        if j < n {
            m.at(i, j)
        } else {
            u64::from(j - n == i)
        }
    });
    let (r, pivots) = aug.rref();
    assert_eq!(pivots.len(), n, "matrix invertible");
    FpMatrix::from_fn(m.p, n, n, |i, j| r.at(i, j + n))
}

/// The expected matrix of `tau` on the quotient in the `w`-basis: ones on
/// the diagonal and superdiagonal.
pub fn jordan_block_19() -> FpMatrix {
    FpMatrix::from_fn(19, 8, 8, |i, j| u64::from(j == i || j == i + 1))
}

/// `Lambda_j = phi^{-1} W_j`: the span of `Lambda_0` and the first `j`
/// `w`-lifts.
pub fn lattice_lambda(j: usize, lambda0: &PeriodLattice, flag: &FlagQuotient) -> PeriodLattice {
    assert!(j <= 8);
    let mut gens = lambda0.basis_vectors();
    gens.extend(flag.w_lifts.iter().take(j).cloned());
    PeriodLattice::from_generators(&gens).expect_full_rank().expect("rank 18")
}

/// The principal lattice written with the explicit generators
/// `w'_0..w'_3` (over `Z[nu]`) and `v_4..v_8` (over `Z[nu]`).
pub fn explicit_principal_lattice() -> PeriodLattice {
    let nu = gauss_nu();
    let mut gens = Vec::new();
    for k in 0..4 {
        let w = wprime_vector(k);
        gens.push(w.scale(&nu));
        gens.push(w);
    }
    for k in 4..9 {
        let v = v_vector(k);
        gens.push(v.scale(&nu));
        gens.push(v);
    }
    PeriodLattice::from_generators(&gens).expect_full_rank().expect("rank 18")
}

/// `E(x, y) = a (s - conj s)/(1 + 2 nu)`, `s = sum x_k conj(y_k)`; errors
/// when the value is not rational (inputs outside the intended module).
pub fn polarization_eval(
    x: &PeriodVector,
    y: &PeriodVector,
    a: &Rational,
) -> Result<Rational, PeriodsError> {
    let mut s = Cyclotomic::zero(19);
    for (xk, yk) in x.coords.iter().zip(&y.coords) {
        s = s.add(&xk.mul(&yk.conj()));
    }
    let num = s.sub(&s.conj());
    let val = num.mul(&inv_one_plus_two_nu());
    match val.try_rational() {
        Some(r) => Ok(r * a),
        None => Err(PeriodsError::NonRational(format!("E value {val}"))),
    }
}

/// Gram matrix of the alternating form on the HNF basis of a lattice.
pub fn gram_matrix(l: &PeriodLattice, a: &Rational) -> Result<Matrix<Rational>, PeriodsError> {
    let vs = l.basis_vectors();
    let n = vs.len();
    let mut m = Matrix::<Rational>::zero(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = polarization_eval(&vs[i], &vs[j], a)?;
            m.set(i, j, v.clone());
            m.set(j, i, -v);
        }
    }
    Ok(m)
}

/// |Pfaffian| of the Gram matrix on an HNF basis; basis changes only flip
/// the sign, so the absolute value is the lattice invariant.
pub fn gram_pfaffian(l: &PeriodLattice, a: &Rational) -> Result<Rational, PeriodsError> {
    let g = gram_matrix(l, a)?;
    let pf = linalg::pfaffian(&g).expect("Gram matrix is antisymmetric of even rank");
    Ok(pf.abs())
}

pub fn gram_is_integral(l: &PeriodLattice, a: &Rational) -> Result<bool, PeriodsError> {
    let g = gram_matrix(l, a)?;
    for i in 0..g.rows() {
        if !g.row(i).iter().all(Rational::is_integer) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `gT conj(g) = 1`: the transpose-conjugate is the inverse, which makes
/// the Hermitian form (and hence `E`) automatically invariant.
pub fn unitary(g: &Matrix<Cyclotomic>) -> bool {
    let n = g.rows();
    if n != g.cols() {
        return false;
    }
    let ct = Matrix::from_fn(n, n, |i, j| g.at(j, i).conj());
    ct.mul(g) == Matrix::<Cyclotomic>::identity(n)
}

/// `sum_j sigma^j` is the rank-one projection `v_0 ell_0` onto the
/// invariant line, and composing with `tau` scales it by
/// `nu = ell_0(tau v_0)`.
pub fn q_endomorphism_check(sigma: &Matrix<Cyclotomic>) -> bool {
    let mut q = Matrix::<Cyclotomic>::zero(9, 9);
    let mut power = Matrix::<Cyclotomic>::identity(9);
    for _ in 0..9 {
        q = q.add(&power);
        power = power.mul(sigma);
    }
    // outer product v_0 * ell_0: the all-ones matrix
    let ones = Matrix::from_fn(9, 9, |_, _| Cyclotomic::one());
    if q != ones {
        return false;
    }
    if linalg::rank(&q) != 1 {
        return false;
    }
    let v1 = v_vector(1);
    let image = PeriodVector::new(q.matvec(&v1.coords));
    let expect = v_vector(0).scale(&gauss_nu());
    image == expect && ell(0, &v_vector(1)) == gauss_nu()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;

    fn tau_matrix() -> Matrix<Cyclotomic> {
        Matrix::from_fn(9, 9, |i, j| {
            if i == j {
                let jj = (i as i64 + 1) * (i as i64 + 1);
                Cyclotomic::root_of_unity(19, jj)
            } else {
                Cyclotomic::zero(19)
            }
        })
    }

    #[test]
    fn v_vector_basics() {
        let v0 = v_vector(0);
        assert!(v0.coords.iter().all(|c| *c == Cyclotomic::one()));
        assert_eq!(v_vector(19), v_vector(0));
        // tau shifts the index
        assert_eq!(v_vector(4).apply(&tau_matrix()), v_vector(5));
    }

    #[test]
    fn wprime_is_the_binomial_combination() {
        // w'_0 = (1 - tau)^5 v_0 / (1 + 2 nu), expanded independently by
        // applying (1 - tau) five times
        let t = tau_matrix();
        let mut acc = v_vector(0);
        for _ in 0..5 {
            acc = acc.sub(&acc.apply(&t));
        }
        let expect = acc.scale(&inv_one_plus_two_nu());
        assert_eq!(wprime_vector(0), expect);
    }

    #[test]
    fn ell_of_tau_v0_is_nu() {
        assert_eq!(ell(0, &v_vector(0).apply(&tau_matrix())), gauss_nu());
    }

    #[test]
    fn nu_v0_is_the_residue_translate_sum() {
        // nu v_0 = sum of v_k over the quadratic residues k (coordinatewise
        // the sets j^2 k run over the residues again); the same sum over
        // k = 1..9 misses the sign folds and does not give nu v_0
        let lhs = v_vector(0).scale(&gauss_nu());
        let rhs = crate::cyclo::residue_exponents()
            .iter()
            .fold(PeriodVector::zero(), |acc, &k| acc.add(&v_vector(i64::from(k))));
        assert_eq!(lhs, rhs);
        let naive = (1..=9).fold(PeriodVector::zero(), |acc, k| acc.add(&v_vector(k)));
        assert_ne!(lhs, naive);
    }

    #[test]
    fn v9_expansion_over_the_module_basis() {
        // v_9 = v_0 + (1+nu)v_1 - 2v_2 + (1-nu)v_3 + (3+nu)v_4
        //       + (-2+nu)v_5 - (2+nu)v_6 + 2v_7 + nu v_8
        let nu = gauss_nu();
        let c = |a: i64, b: i64| Cyclotomic::from_int(a).add(&nu.scale(&rat(b, 1)));
        let coeffs = [
            c(1, 0),
            c(1, 1),
            c(-2, 0),
            c(1, -1),
            c(3, 1),
            c(-2, 1),
            c(-2, -1),
            c(2, 0),
            c(0, 1),
        ];
        let mut acc = PeriodVector::zero();
        for (k, cf) in coeffs.iter().enumerate() {
            acc = acc.add(&v_vector(k as i64).scale(cf));
        }
        assert_eq!(v_vector(9), acc);
    }

    #[test]
    fn v9_minus_v8_expansion() {
        // v_9 - v_8 = v_0 + (1+nu)v_1 - 2v_2 + (1-nu)v_3 + (3+nu)v_4
        //             + (nu-2)v_5 - (2+nu)v_6 + 2v_7 + (nu-1)v_8
        let nu = gauss_nu();
        let c = |a: i64, b: i64| Cyclotomic::from_int(a).add(&nu.scale(&rat(b, 1)));
        let coeffs = [
            c(1, 0),
            c(1, 1),
            c(-2, 0),
            c(1, -1),
            c(3, 1),
            c(-2, 1),
            c(-2, -1),
            c(2, 0),
            c(-1, 1),
        ];
        let mut acc = PeriodVector::zero();
        for (k, cf) in coeffs.iter().enumerate() {
            acc = acc.add(&v_vector(k as i64).scale(cf));
        }
        assert_eq!(v_vector(9).sub(&v_vector(8)), acc);
    }

    #[test]
    fn lambda0_equals_the_full_translate_span() {
        let l0 = lattice_lambda0();
        assert_eq!(l0, lattice_v_span());
        assert!(l0.nu_stable());
        // tau permutes the v_k, so it stabilizes the lattice
        assert!(l0.stable_under(&tau_matrix()));
        assert!(l0.contains(&v_vector(13).scale(&gauss_nu())));
    }

    #[test]
    fn lambda8_matches_its_dual_description() {
        let l8 = lattice_lambda8();
        assert_eq!(l8, lattice_lambda8_dual());
        // every generator evaluates integrally in Z[nu] under every ell_m
        for g in l8.basis_vectors() {
            for m in 0..9 {
                assert!(try_z_nu(&ell(m, &g)).is_some(), "ell_{m} value in Z[nu]");
            }
        }
        // index over Lambda_0 is 19^8
        let l0 = lattice_lambda0();
        let idx = l8.index_over(&l0).expect("Lambda_0 inside Lambda_8");
        assert_eq!(idx, BigInt::from(19u64).pow(8));
        assert!(l8.stable_under(&tau_matrix()));
        assert!(l8.nu_stable());
    }

    #[test]
    fn quotient_flag_is_a_single_jordan_block() {
        let l0 = lattice_lambda0();
        let flag = flag_quotient(&tau_matrix(), &l0);
        assert_eq!(flag.tau_hat_w, jordan_block_19());
        assert_eq!(flag.stable_subspace_count, 9);
        // phi(w'_0) = w_4: the lift differs from w'_0 by a Lambda_0 element
        assert!(l0.contains(&wprime_vector(0).sub(&flag.w_lifts[3])));
    }

    #[test]
    fn lattice_tower_indices() {
        let l0 = lattice_lambda0();
        let flag = flag_quotient(&tau_matrix(), &l0);
        let mut prev = lattice_lambda(0, &l0, &flag);
        assert_eq!(prev, l0);
        for j in 1..=8 {
            let next = lattice_lambda(j, &l0, &flag);
            let idx = next.index_over(&prev).expect("tower inclusion");
            assert_eq!(idx, BigInt::from(19), "index at level {j}");
            assert!(next.stable_under(&tau_matrix()), "tau-stability at level {j}");
            assert!(next.nu_stable(), "nu-stability at level {j}");
            prev = next;
        }
        assert_eq!(prev, lattice_lambda8());
    }

    #[test]
    fn lambda4_has_the_explicit_generator_basis() {
        let l0 = lattice_lambda0();
        let flag = flag_quotient(&tau_matrix(), &l0);
        let l4 = lattice_lambda(4, &l0, &flag);
        assert_eq!(l4, explicit_principal_lattice());
    }

    #[test]
    fn polarization_values() {
        // E(v_1, v_0) = 1: s = nu and (nu - conj nu)/(1 + 2 nu) = 1
        assert_eq!(polarization_eval(&v_vector(1), &v_vector(0), &rat(1, 1)).unwrap(), rat(1, 1));
        // alternating on equal arguments
        assert_eq!(polarization_eval(&v_vector(3), &v_vector(3), &rat(1, 1)).unwrap(), rat(0, 1));
        // integer values on Z[nu]-multiples of a basis vector
        let e1 = PeriodVector::basis(0);
        let e1nu = e1.scale(&gauss_nu());
        assert_eq!(polarization_eval(&e1, &e1nu, &rat(1, 1)).unwrap(), rat(-1, 1));
        // scaling parameter passes through linearly
        assert_eq!(polarization_eval(&v_vector(1), &v_vector(0), &rat(7, 2)).unwrap(), rat(7, 2));
        // a generic cyclotomic pair falls outside the rational module:
        // s = xi gives (xi - xi^-1)/(1 + 2 nu), in the real subfield but
        // not in Q
        let bad = PeriodVector::basis(0).scale(&crate::cyclo::xi());
        assert!(polarization_eval(&bad, &PeriodVector::basis(0), &rat(1, 1)).is_err());
    }

    #[test]
    fn gram_pfaffians_along_the_tower() {
        let l0 = lattice_lambda0();
        let flag = flag_quotient(&tau_matrix(), &l0);
        for j in 0..=8i32 {
            let lj = lattice_lambda(j as usize, &l0, &flag);
            let pf = gram_pfaffian(&lj, &rat(1, 1)).unwrap();
            let expect_sq = if j <= 4 {
                rat(19i64.pow((8 - 2 * j) as u32), 1)
            } else {
                rat(1, 19i64.pow((2 * j - 8) as u32))
            };
            assert_eq!(&pf * &pf, expect_sq, "P_{j}^2 = 19^(8-2j)");
            let integral = gram_is_integral(&lj, &rat(1, 1)).unwrap();
            assert_eq!(integral, j <= 4, "integrality at level {j}");
        }
    }

    #[test]
    fn principality_is_exactly_level_four_scale_one() {
        let l0 = lattice_lambda0();
        let flag = flag_quotient(&tau_matrix(), &l0);
        let l4 = lattice_lambda(4, &l0, &flag);
        assert_eq!(gram_pfaffian(&l4, &rat(1, 1)).unwrap(), rat(1, 1));
        assert!(gram_is_integral(&l4, &rat(1, 1)).unwrap());
        // the Pfaffian scales by a^9, so no other positive integer scale
        // is principal
        for a in 2..=3i64 {
            assert_eq!(gram_pfaffian(&l4, &rat(a, 1)).unwrap(), rat(a.pow(9), 1));
        }
        // tau-stable but non-principal neighbor
        let l3 = lattice_lambda(3, &l0, &flag);
        assert!(l3.stable_under(&tau_matrix()));
        let pf3 = gram_pfaffian(&l3, &rat(1, 1)).unwrap();
        assert_eq!(&pf3 * &pf3, rat(361, 1));
    }

    #[test]
    fn q_endomorphism_projects_onto_the_invariant_line() {
        // sigma as the permutation matrix of the 9-cycle
        let sigma = Matrix::from_fn(9, 9, |i, j| {
            let img = crate::psl2::abs_mod19(6 * (j as i64 + 1)) - 1;
            if i == img {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero(19)
            }
        });
        assert!(q_endomorphism_check(&sigma));
    }

    #[test]
    fn norm_of_one_plus_two_nu() {
        let t = one_plus_two_nu();
        let n = t.mul(&t.conj());
        assert_eq!(n.try_integer(), Some(19.into()));
    }

    #[test]
    fn form_is_invariant_under_the_unitary_generators() {
        use crate::psl2::{ConjugacyData, Gen, ProjectiveRep};
        let rep = ProjectiveRep::build(ConjugacyData::enumerate_g()).unwrap();
        let basis: Vec<PeriodVector> = (0..9).map(v_vector).collect();
        for gen in [Gen::Tau, Gen::Sigma, Gen::Mu] {
            let g = rep.generator_matrix(gen);
            assert!(unitary(&g), "{gen} is unitary");
            for x in &basis {
                for y in &basis {
                    let before = polarization_eval(x, y, &rat(1, 1)).unwrap();
                    let after =
                        polarization_eval(&x.apply(&g), &y.apply(&g), &rat(1, 1)).unwrap();
                    assert_eq!(before, after);
                }
            }
        }
    }
}
