//! The invariant cubic pencil `f_lambda`, its graded Jacobian ring, Hodge
//! numbers through the graded-piece dimensions, the group action on graded
//! pieces, and mod-p smoothness certificates.
//!
//! The pencil in nine variables is
//! `f_lambda = x1^2 x6 + x6^2 x2 + x2^2 x7 + x7^2 x4 + x4^2 x5 + x5^2 x8
//!           + x8^2 x9 + x9^2 x3 + x3^2 x1
//!           + lambda (x1 x7 x8 + x2 x3 x5 + x4 x6 x9)`;
//! `lambda = 0` is the Klein-type cubic with the 9 squared-variable
//! monomials only, `lambda = -2` the unique member invariant under the
//! whole group.
//!
//! Group elements act on polynomials on the right, `g . f = f o g`
//! (substitute `x_j -> sum_k g[j][k] x_k`), which matches the trace
//! identities used in the character computations: the action of the
//! diagonal generator multiplies a monomial of tau-weight `w` (the sum of
//! `exponent * j^2 mod 19`) by `xi^w`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::cyclo::{Cyclotomic, Rational};
use crate::linalg::{self, Matrix, SparseMatrixFp};
use crate::psl2::{ConjugacyData, ProjectiveRep};

pub type Mono = [u8; 9];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacError {
    SingularMatrix,
    /// The prime divides a coefficient denominator (or is not prime).
    BadPrime(u64),
    /// A group element does not fix the polynomial with scalar one.
    NotInvariant(String),
    /// `dim I_3 != 81`: the degree-3 ideal piece is not `S_1 (x) I_2`.
    UnexpectedIdealDimension(usize),
}

impl fmt::Display for JacError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JacError::SingularMatrix => write!(f, "matrix acts non-invertibly"),
            JacError::BadPrime(p) => write!(f, "{p} is unusable for this reduction"),
            JacError::NotInvariant(m) => write!(f, "polynomial is not invariant: {m}"),
            JacError::UnexpectedIdealDimension(d) => {
                write!(f, "dim I_3 = {d}, expected 81")
            }
        }
    }
}

impl std::error::Error for JacError {}

/// Sparse polynomial in 9 variables with cyclotomic coefficients.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct Poly9 {
    terms: BTreeMap<Mono, Cyclotomic>,
}

impl Poly9 {
    pub fn zero() -> Self {
        Poly9::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Mono, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Mono) -> Cyclotomic {
        self.terms.get(mono).cloned().unwrap_or_else(|| Cyclotomic::zero(1))
    }

    pub fn add(&self, o: &Poly9) -> Poly9 {
        let mut out = self.clone();
        for (m, c) in o.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Poly9) -> Poly9 {
        self.add(&o.scale(&Cyclotomic::from_int(-1)))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Poly9 {
        let mut out = Poly9::zero();
        for (m, v) in self.terms() {
            out.add_term(*m, v.mul(c));
        }
        out
    }

    pub fn mul(&self, o: &Poly9) -> Poly9 {
        let mut out = Poly9::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in o.terms() {
                let mut m = *m1;
                for (a, b) in m.iter_mut().zip(m2.iter()) {
                    *a += b;
                }
                out.add_term(m, c1.mul(c2));
            }
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().map(|&e| u32::from(e)).sum()).max().unwrap_or(0)
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.terms.values().all(|c| c.try_rational().is_some())
    }
}

impl fmt::Display for Poly9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (j, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", j + 1)?,
                    _ => write!(f, "*x{}^{}", j + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

fn mono(spec: &[(usize, u8)]) -> Mono {
    let mut m = [0u8; 9];
    for &(var, e) in spec {
        m[var - 1] += e;
    }
    m
}

/// The 9 squared-variable monomials `x_k^2 x_{pi(k)}` of the pencil, as
/// `(k, pi(k))` pairs.
pub const SQUARE_CYCLE: [(usize, usize); 9] =
    [(1, 6), (6, 2), (2, 7), (7, 4), (4, 5), (5, 8), (8, 9), (9, 3), (3, 1)];

/// The three `lambda`-monomials.
pub const TRIPLE_ORBITS: [[usize; 3]; 3] = [[1, 7, 8], [2, 3, 5], [4, 6, 9]];

/// The pencil member `f_lambda`; `lambda = -2` is the fully invariant cubic.
pub fn pencil(lambda: &Rational) -> Poly9 {
    let mut f = Poly9::zero();
    for &(k, m) in &SQUARE_CYCLE {
        f.add_term(mono(&[(k, 2), (m, 1)]), Cyclotomic::one());
    }
    let c = Cyclotomic::from_rational(lambda.clone());
    for orbit in &TRIPLE_ORBITS {
        f.add_term(mono(&[(orbit[0], 1), (orbit[1], 1), (orbit[2], 1)]), c.clone());
    }
    f
}

/// Formal partial derivative with respect to `x_j`, `j` in `1..=9`.
pub fn partial(f: &Poly9, j: usize) -> Poly9 {
    assert!((1..=9).contains(&j));
    let mut out = Poly9::zero();
    for (m, c) in f.terms() {
        let e = m[j - 1];
        if e == 0 {
            continue;
        }
        let mut dm = *m;
        dm[j - 1] -= 1;
        out.add_term(dm, c.scale(&Rational::from_integer(BigInt::from(e))));
    }
    out
}

/// The tau-weight of a monomial: `sum_j exponent_j * (j^2 mod 19) mod 19`.
pub fn tau_weight(m: &Mono) -> u32 {
    m.iter()
        .enumerate()
        .map(|(j0, &e)| u32::from(e) * ((j0 as u32 + 1) * (j0 as u32 + 1) % 19))
        .sum::<u32>()
        % 19
}

/// Right substitution action `g . f = f o g`: replace `x_j` by
/// `sum_k g[j][k] x_k`.
pub fn act(g: &Matrix<Cyclotomic>, f: &Poly9) -> Poly9 {
    assert!(g.rows() == 9 && g.cols() == 9);
    let lin: Vec<Poly9> = (0..9)
        .map(|j| {
            let mut l = Poly9::zero();
            for k in 0..9 {
                let mut m = [0u8; 9];
                m[k] = 1;
                l.add_term(m, g.at(j, k).clone());
            }
            l
        })
        .collect();
    let mut out = Poly9::zero();
    for (m, c) in f.terms() {
        let mut prod = Poly9::zero();
        prod.add_term([0; 9], c.clone());
        for (j, &e) in m.iter().enumerate() {
            for _ in 0..e {
                prod = prod.mul(&lin[j]);
            }
        }
        out = out.add(&prod);
    }
    out
}

/// The scalar `c` with `g . f = c f`, if one exists. Requires `g`
/// invertible.
pub fn invariance_scalar(
    g: &Matrix<Cyclotomic>,
    f: &Poly9,
) -> Result<Option<Cyclotomic>, JacError> {
    if linalg::rank(g) < 9 {
        return Err(JacError::SingularMatrix);
    }
    let image = act(g, f);
    let Some((m0, c0)) = f.terms().next() else {
        return Ok(Some(Cyclotomic::one())); // zero polynomial
    };
    let c = image.coeff(m0).div(c0).expect("leading coefficient nonzero");
    if image == f.scale(&c) {
        Ok(Some(c))
    } else {
        Ok(None)
    }
}

/// All monomials of total degree `d` in 9 variables, in a fixed
/// (lexicographic) order; `dim S_d = binomial(d+8, 8)`.
pub fn monomials(d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut cur = [0u8; 9];
    fn rec(out: &mut Vec<Mono>, cur: &mut Mono, pos: usize, left: u32) {
        if pos == 8 {
            cur[8] = left as u8;
            out.push(*cur);
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e as u8;
            rec(out, cur, pos + 1, left - e);
        }
        cur[pos] = 0;
    }
    rec(&mut out, &mut cur, 0, d);
    out
}

pub fn dim_s(d: u32) -> usize {
    // binomial(d+8, 8)
    let mut num = BigInt::one();
    for k in 1..=8u32 {
        num *= BigInt::from(d + k);
    }
    let den: BigInt = (1..=8u32).map(BigInt::from).product();
    usize::try_from(num / den).expect("dimension fits usize")
}

/// The multiplication matrix `S_{d-2} (x) {partials} -> S_d` with rows
/// indexed by the `S_d` monomial basis and columns by the generators
/// `x^alpha df/dx_j` (so for `d = 3` it is 165 x 81).
pub fn jacobian_matrix(f: &Poly9, d: u32) -> Matrix<Cyclotomic> {
    assert!(d >= 2);
    let rows_basis = monomials(d);
    let row_index: BTreeMap<Mono, usize> =
        rows_basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let parts: Vec<Poly9> = (1..=9).map(|j| partial(f, j)).collect();
    let alpha = monomials(d - 2);
    let mut cols: Vec<Vec<(usize, Cyclotomic)>> = Vec::with_capacity(alpha.len() * 9);
    for a in &alpha {
        for p in &parts {
            let mut col = Vec::new();
            for (m, c) in p.terms() {
                let mut shifted = *m;
                for (s, &e) in shifted.iter_mut().zip(a.iter()) {
                    *s += e;
                }
                col.push((row_index[&shifted], c.clone()));
            }
            cols.push(col);
        }
    }
    let mut mat = Matrix::<Cyclotomic>::zero(rows_basis.len(), cols.len());
    for (j, col) in cols.into_iter().enumerate() {
        for (i, c) in col {
            mat.set(i, j, c);
        }
    }
    mat
}

/// Rank of the degree-`d` Jacobian multiplication matrix, over the
/// integers when the coefficients are rational (after clearing
/// denominators), exactly over the cyclotomics otherwise.
pub fn jacobian_rank(f: &Poly9, d: u32) -> usize {
    let m = jacobian_matrix(f, d);
    if f.is_rational() {
        // clear denominators once; integer fraction-free elimination
        let mut den = BigInt::one();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if let Some(r) = m.at(i, j).try_rational() {
                    den = den.lcm(r.denom());
                }
            }
        }
        let mi = m.map(|c| {
            let r = c.try_rational().expect("rational coefficient");
            r.numer() * (&den / r.denom())
        });
        linalg::rank(&mi)
    } else {
        linalg::rank(&m)
    }
}

/// `dim R_d = dim S_d - rank(I_d)` for `d >= 0`.
pub fn graded_dim(f: &Poly9, d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    let d = d as u32;
    if d < 2 {
        return dim_s(d); // the ideal starts in degree 2
    }
    dim_s(d) - jacobian_rank(f, d)
}

/// `h^{7-q, q} = dim R_{3(q+1) - 9}`, zero for negative degrees.
pub fn hodge_number(f: &Poly9, q: u32) -> usize {
    assert!(q <= 7);
    graded_dim(f, 3 * (i64::from(q) + 1) - 9)
}

/// Per-class action data on the graded pieces of the Jacobian ring of an
/// invariant polynomial.
pub struct R3Character {
    /// The character of the group action on `R_3 = S_3 / I_3`.
    pub r3: crate::chars::Character,
    /// The character on the 9-dimensional span of the partials (`I_2`).
    pub i2: crate::chars::Character,
    /// The character on `S_3`.
    pub s3: crate::chars::Character,
}

/// Traces of the group action on `R_3`, class by class, for an invariant
/// `f`: the trace on `S_3` comes from the symmetric-cube formula on the
/// 9x9 matrices, the trace on `I_3 = S_1 . I_2` is the product of the
/// traces on the factors once `dim I_3 = 81` certifies the factorization,
/// and `R_3 = S_3 - I_3`.
///
/// Every class-representative matrix is checked to fix `f` with scalar
/// exactly one (the determinant-one normalization makes that literal).
pub fn character_on_r3(
    f: &Poly9,
    conj: &ConjugacyData,
    rep: &ProjectiveRep,
) -> Result<R3Character, JacError> {
    let i3_rank = jacobian_rank(f, 3);
    if i3_rank != 81 {
        return Err(JacError::UnexpectedIdealDimension(i3_rank));
    }
    let parts: Vec<Poly9> = (1..=9).map(|j| partial(f, j)).collect();
    // coefficient matrix of the partials over the degree-2 monomial basis
    let s2 = monomials(2);
    let s2_index: BTreeMap<Mono, usize> =
        s2.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let pmat = Matrix::from_fn(s2.len(), 9, |i, j| parts[j].coeff(&s2[i]));

    use rayon::prelude::*;
    let per_class: Vec<Result<(Cyclotomic, Cyclotomic, Cyclotomic), JacError>> = conj
        .classes
        .par_iter()
        .map(|info| {
            let g = rep.element_matrix(&info.rep);
            // the normalization must make the invariance scalar exactly 1
            match invariance_scalar(&g, f)? {
                Some(c) if c == Cyclotomic::one() => {}
                Some(c) => {
                    return Err(JacError::NotInvariant(format!(
                        "class {} fixes f only up to {c}",
                        info.label
                    )))
                }
                None => {
                    return Err(JacError::NotInvariant(format!(
                        "class {} does not fix f",
                        info.label
                    )))
                }
            }
            let g2 = g.mul(&g);
            let g3 = g2.mul(&g);
            let tr = |m: &Matrix<Cyclotomic>| {
                (0..9).fold(Cyclotomic::zero(1), |acc, i| acc.add(m.at(i, i)))
            };
            let (t1, t2, t3) = (tr(&g), tr(&g2), tr(&g3));
            let s3 = t1
                .mul(&t1)
                .mul(&t1)
                .add(&t2.mul(&t1).scale(&crate::cyclo::rat(3, 1)))
                .add(&t3.scale(&crate::cyclo::rat(2, 1)))
                .scale(&crate::cyclo::rat(1, 6));
            // action on the span of the partials: g . df_j = sum_k B[j][k] df_k
            let mut tr_i2 = Cyclotomic::zero(1);
            for (j, p) in parts.iter().enumerate() {
                let image = act(&g, p);
                let mut v = vec![Cyclotomic::zero(1); s2.len()];
                for (m, c) in image.terms() {
                    v[s2_index[m]] = c.clone();
                }
                let b = linalg::solve(&pmat, &v).ok_or_else(|| {
                    JacError::NotInvariant(format!(
                        "class {} does not stabilize the partials span",
                        info.label
                    ))
                })?;
                tr_i2 = tr_i2.add(&b[j]);
            }
            Ok((t1, s3, tr_i2))
        })
        .collect();
    let mut s3_vals = Vec::new();
    let mut i2_vals = Vec::new();
    let mut r3_vals = Vec::new();
    for res in per_class {
        let (t1, s3, tr_i2) = res?;
        // trace on I_3 = S_1 . I_2 factors as the product of the traces
        let i3 = t1.mul(&tr_i2);
        r3_vals.push(s3.sub(&i3));
        s3_vals.push(s3);
        i2_vals.push(tr_i2);
    }
    let mk = |values| crate::chars::Character { group: conj.group, values };
    Ok(R3Character { r3: mk(r3_vals), i2: mk(i2_vals), s3: mk(s3_vals) })
}

/// Outcome of the positive-characteristic smoothness test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SmoothStatus {
    /// `R_10 = 0 mod p`: the partials have no common projective zero over
    /// any field of characteristic p, which forces the characteristic-0
    /// member smooth (the singular locus is a closed projective scheme over
    /// the integers; an empty fiber over one prime leaves no room for a
    /// generic point).
    CertifiedSmooth,
    /// Rank fell short mod p; says nothing either way about characteristic
    /// zero.
    Inconclusive,
}

impl fmt::Display for SmoothStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmoothStatus::CertifiedSmooth => write!(f, "certified smooth"),
            SmoothStatus::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Degree-10 smoothness certificate modulo `p`: build the sparse matrix of
/// `S_8 . {partials} -> S_10` over `F_p` (each row is a monomial times a
/// short quadric, at most a few nonzeros) and compare its rank with
/// `dim S_10 = 43758`.
pub fn smooth_certificate_mod_p(f: &Poly9, p: u64) -> Result<SmoothStatus, JacError> {
    if !linalg::is_prime_u64(p) {
        return Err(JacError::BadPrime(p));
    }
    if !f.is_rational() {
        return Err(JacError::BadPrime(p));
    }
    let parts: Vec<Vec<(Mono, u64)>> = (1..=9)
        .map(|j| {
            partial(f, j)
                .terms()
                .map(|(m, c)| {
                    let r = c.try_rational().expect("rational");
                    rational_mod_p(&r, p).map(|v| (*m, v))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let s10 = monomials(10);
    let index: BTreeMap<Mono, u32> =
        s10.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
    let mut mat = SparseMatrixFp::new(p, s10.len());
    for a in monomials(8) {
        for part in &parts {
            mat.push_row(part.iter().map(|(m, v)| {
                let mut shifted = *m;
                for (s, &e) in shifted.iter_mut().zip(a.iter()) {
                    *s += e;
                }
                (index[&shifted], *v)
            }));
        }
    }
    if mat.rank() == s10.len() {
        Ok(SmoothStatus::CertifiedSmooth)
    } else {
        Ok(SmoothStatus::Inconclusive)
    }
}

fn rational_mod_p(r: &Rational, p: u64) -> Result<u64, JacError> {
    let pb = BigInt::from(p);
    let den = r.denom().mod_floor(&pb);
    if den.is_zero() {
        return Err(JacError::BadPrime(p));
    }
    let num = r.numer().mod_floor(&pb);
    let den64 = u64::try_from(den).expect("reduced");
    let num64 = u64::try_from(num).expect("reduced");
    Ok(num64 * linalg::mod_inverse_u64(den64, p) % p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;
    use crate::psl2::Gen;

    fn adler() -> Poly9 {
        pencil(&rat(-2, 1))
    }

    #[test]
    fn pencil_monomial_inventory() {
        let f = adler();
        assert_eq!(f.num_terms(), 12);
        // the displayed coefficient -2 on x1 x7 x8
        assert_eq!(
            f.coeff(&mono(&[(1, 1), (7, 1), (8, 1)])).try_integer(),
            Some((-2).into())
        );
        // x4^2 x5 has coefficient 1 for every lambda
        for lam in [rat(0, 1), rat(-2, 1), rat(7, 1), rat(1, 3)] {
            let fl = pencil(&lam);
            assert_eq!(fl.coeff(&mono(&[(4, 2), (5, 1)])).try_integer(), Some(1.into()));
        }
        // the Klein-type member keeps only the 9 squared monomials
        assert_eq!(pencil(&rat(0, 1)).num_terms(), 9);
    }

    #[test]
    fn partial_of_the_invariant_cubic() {
        // df/dx1 = 2 x1 x6 + x3^2 - 2 x7 x8
        let d1 = partial(&adler(), 1);
        let mut expect = Poly9::zero();
        expect.add_term(mono(&[(1, 1), (6, 1)]), Cyclotomic::from_int(2));
        expect.add_term(mono(&[(3, 2)]), Cyclotomic::one());
        expect.add_term(mono(&[(7, 1), (8, 1)]), Cyclotomic::from_int(-2));
        assert_eq!(d1, expect);
        // derivative of a constant vanishes
        let mut k = Poly9::zero();
        k.add_term([0; 9], Cyclotomic::from_int(5));
        assert!(partial(&k, 3).is_zero());
    }

    #[test]
    fn euler_identity() {
        // sum_j x_j df/dx_j = 3 f
        let f = adler();
        let mut acc = Poly9::zero();
        for j in 1..=9 {
            let mut xj = Poly9::zero();
            xj.add_term(mono(&[(j, 1)]), Cyclotomic::one());
            acc = acc.add(&xj.mul(&partial(&f, j)));
        }
        assert_eq!(acc, f.scale(&Cyclotomic::from_int(3)));
    }

    #[test]
    fn monomial_weights_of_the_pencil_vanish() {
        // every pencil monomial has tau-weight 0 mod 19, e.g. x1^2 x6 gives
        // 2*1 + 17 = 19
        assert_eq!(tau_weight(&mono(&[(1, 2), (6, 1)])), 0);
        for (m, _) in pencil(&rat(5, 7)).terms() {
            assert_eq!(tau_weight(m), 0);
        }
    }

    #[test]
    fn invariance_scalars_on_the_pencil() {
        let conj = ConjugacyData::enumerate_g();
        let rep = ProjectiveRep::build(conj).unwrap();
        let f = adler();
        let t = rep.generator_matrix(Gen::Tau);
        let s = rep.generator_matrix(Gen::Sigma);
        let m = rep.generator_matrix(Gen::Mu);
        assert_eq!(invariance_scalar(&t, &f).unwrap(), Some(Cyclotomic::one()));
        assert_eq!(invariance_scalar(&s, &f).unwrap(), Some(Cyclotomic::one()));
        // the displayed mu has determinant -1, so it fixes f only up to -1;
        // the determinant-one representative fixes it on the nose
        assert_eq!(invariance_scalar(&m, &f).unwrap(), Some(Cyclotomic::from_int(-1)));
        let mn = rep.element_matrix(&crate::psl2::mu_element());
        assert_eq!(invariance_scalar(&mn, &f).unwrap(), Some(Cyclotomic::one()));
        // sigma fixes every member; mu only the invariant one
        for lam in [rat(0, 1), rat(1, 1), rat(7, 1)] {
            let fl = pencil(&lam);
            assert_eq!(invariance_scalar(&s, &fl).unwrap(), Some(Cyclotomic::one()));
            assert_eq!(invariance_scalar(&m, &fl).unwrap(), None, "lambda = {lam}");
        }
    }

    #[test]
    fn graded_dims_match_regular_sequence() {
        let f = adler();
        assert_eq!(graded_dim(&f, 0), 1);
        assert_eq!(graded_dim(&f, 1), 9);
        assert_eq!(graded_dim(&f, 2), 36);
        assert_eq!(graded_dim(&f, 3), 84);
        // dimension ledger in degree 3: 165 = 84 + 81
        assert_eq!(dim_s(3), 165);
        assert_eq!(jacobian_rank(&f, 3), 81);
    }

    #[test]
    fn hodge_numbers_of_the_invariant_cubic() {
        let f = adler();
        assert_eq!(hodge_number(&f, 0), 0);
        assert_eq!(hodge_number(&f, 1), 0);
        assert_eq!(hodge_number(&f, 2), 1);
        assert_eq!(hodge_number(&f, 3), 84);
    }

    #[test]
    fn monomial_count_matches_binomials() {
        assert_eq!(monomials(3).len(), 165);
        assert_eq!(dim_s(8), 12870);
        assert_eq!(dim_s(10), 43758);
        let visibly_singular = {
            // x1^3: all partials share the zero x1 = 0
            let mut f = Poly9::zero();
            f.add_term(mono(&[(1, 3)]), Cyclotomic::one());
            f
        };
        assert_eq!(
            smooth_certificate_mod_p(&visibly_singular, 101).unwrap(),
            SmoothStatus::Inconclusive
        );
    }

    #[test]
    fn singular_matrices_are_rejected_by_invariance() {
        let mut g = Matrix::<Cyclotomic>::identity(9);
        g.set(0, 0, Cyclotomic::zero(19));
        assert_eq!(
            invariance_scalar(&g, &adler()),
            Err(JacError::SingularMatrix)
        );
    }

    #[test]
    fn graded_dims_are_action_invariant() {
        // precomposing with a certified group matrix leaves every graded
        // dimension unchanged, even when the polynomial itself moves
        let conj = ConjugacyData::enumerate_g();
        let rep = ProjectiveRep::build(conj).unwrap();
        let f0 = pencil(&rat(0, 1));
        let mu = rep.generator_matrix(Gen::Mu);
        let moved = act(&mu, &f0);
        assert_ne!(moved, f0);
        for d in 0..=3i64 {
            assert_eq!(graded_dim(&moved, d), graded_dim(&f0, d), "degree {d}");
        }
    }

    #[test]
    fn bad_primes_are_rejected() {
        let f = pencil(&rat(1, 3));
        assert_eq!(smooth_certificate_mod_p(&f, 3), Err(JacError::BadPrime(3)));
        assert_eq!(smooth_certificate_mod_p(&f, 4), Err(JacError::BadPrime(4)));
    }
}
