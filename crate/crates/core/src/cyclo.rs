//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! Elements are stored as sparse maps from canonical basis exponents to
//! rationals. The basis is the prime-power product basis: writing
//! `n = q_1 * ... * q_r` with `q_i = p_i^{k_i}` the maximal prime powers,
//! `zeta_n^e` is a basis element iff every prime-power digit of `e` (its
//! image under the CRT splitting, scaled so that exponent addition is
//! componentwise) is below `phi(q_i)`. Out-of-range digits are rewritten with
//! the vanishing sums `1 + zeta_p + ... + zeta_p^{p-1} = 0` (appropriately
//! scaled for higher prime powers), which terminates in one pass per digit.
//!
//! Equality of values is equality of canonical forms; elements of different
//! stored orders are lifted to the least common order first. Subfield
//! membership is visible: a value lies in `Q(zeta_m)` for `m | n` exactly
//! when all its basis exponents come from `Q(zeta_m)`'s basis, and rational
//! values are exactly those supported on exponent zero.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;
pub type Integer = BigInt;

/// Shorthand for a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycloError {
    DivisionByZero,
    /// `galois(a, k)` with `gcd(k, order) != 1`.
    NotCoprime { order: u32, k: i64 },
}

impl fmt::Display for CycloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloError::DivisionByZero => write!(f, "division by zero"),
            CycloError::NotCoprime { order, k } => {
                write!(f, "galois exponent {k} is not coprime to the order {order}")
            }
        }
    }
}

impl std::error::Error for CycloError {}

/// Per-order canonical basis descriptor. Cheap to build (orders here stay
/// below a few thousand) and immutable once built.
#[derive(Debug, Clone)]
struct Factor {
    p: u32,
    /// `q = p^k`, the maximal power of `p` dividing `n`.
    q: u32,
    phi_q: u32,
    n_over_q: u32,
    /// `p^(k-1)`.
    sub: u32,
    /// `(n/q)^{-1} mod q`, for digit extraction.
    inv: u64,
}

#[derive(Debug, Clone)]
struct OrderData {
    n: u32,
    factors: Vec<Factor>,
}

impl OrderData {
    fn new(n: u32) -> Self {
        assert!(n >= 1, "order must be positive");
        let mut factors = Vec::new();
        let mut m = n;
        let mut p = 2;
        while p * p <= m {
            if m.is_multiple_of(p) {
                let mut q = 1;
                while m.is_multiple_of(p) {
                    m /= p;
                    q *= p;
                }
                factors.push(Factor {
                    p,
                    q,
                    phi_q: q / p * (p - 1),
                    n_over_q: n / q,
                    sub: q / p,
                    inv: mod_inverse(u64::from((n / q) % q), u64::from(q)),
                });
            }
            p += 1;
        }
        if m > 1 {
            factors.push(Factor {
                p: m,
                q: m,
                phi_q: m - 1,
                n_over_q: n / m,
                sub: 1,
                inv: mod_inverse(u64::from((n / m) % m), u64::from(m)),
            });
        }
        OrderData { n, factors }
    }

    /// Digit of `e` at the prime power `q`: the exponent `d` such that
    /// `zeta_n^e = prod_q zeta_q^{d_q}`.
    fn digit(&self, e: u32, fi: usize) -> u32 {
        let f = &self.factors[fi];
        ((u64::from(e % f.q) * f.inv) % u64::from(f.q)) as u32
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid; m is small here
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m as i64, (a % m) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "{a} not invertible mod {m}");
    t.rem_euclid(m as i64) as u64
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd_u64(b, a % b) }
}

/// An exact element of `Q(zeta_n)` in canonical basis form.
///
/// The stored order stays `n` even when the value lies in a subfield; use
/// [`Cyclotomic::reduced_order`] to shrink it. Zero has an empty coefficient
/// map. Equality compares canonical forms after lifting to a common order.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: BTreeMap<u32, Rational>,
}

impl Cyclotomic {
    pub fn zero(order: u32) -> Self {
        assert!(order >= 1);
        Cyclotomic { order, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclotomic { order: 1, coeffs }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(rat_int(k))
    }

    /// `zeta_n^k`, the root of unity `e^{2 pi i k / n}`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(i64::from(n)) as u32;
        let mut v = Cyclotomic::zero(n);
        v.add_term(e, Rational::one());
        v
    }

    /// Build from raw (exponent, coefficient) terms; exponents are taken
    /// modulo `n` and rewritten into the canonical basis.
    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut v = Cyclotomic::zero(n);
        for (e, c) in terms {
            v.add_term(e.rem_euclid(i64::from(n)) as u32, c);
        }
        v
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of the canonical basis element `zeta_order^e`.
    pub fn coeff(&self, e: u32) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Canonical (exponent, coefficient) view, exponents increasing.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Add `c * zeta_order^e` (raw exponent) to `self`, canonicalizing.
    fn add_term(&mut self, e: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let data = OrderData::new(self.order);
        self.add_term_with(&data, e, c);
    }

    fn add_term_with(&mut self, data: &OrderData, e: u32, c: Rational) {
        debug_assert!(e < data.n);
        // find an out-of-range prime-power digit, if any
        for fi in 0..data.factors.len() {
            let f = &data.factors[fi];
            let d = data.digit(e, fi);
            if d >= f.phi_q {
                // zeta_q^d = - sum_{j=0..p-2} zeta_q^{d - phi(q) + j*p^(k-1)}
                for j in 0..(f.p - 1) {
                    let nd = d - f.phi_q + j * f.sub;
                    // shift exponent e by (nd - d) in the q-component
                    let delta = (u64::from(nd) + u64::from(f.q) - u64::from(d)) % u64::from(f.q);
                    let ne =
                        ((u64::from(e) + delta * u64::from(f.n_over_q)) % u64::from(data.n)) as u32;
                    self.add_term_with(data, ne, -c.clone());
                }
                return;
            }
        }
        match self.coeffs.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lift into `Q(zeta_m)`; requires `order | m`. Basis exponents map to
    /// basis exponents, so no re-reduction is needed.
    pub fn lift_to_order(&self, m: u32) -> Cyclotomic {
        assert!(m.is_multiple_of(self.order), "{} does not divide {}", self.order, m);
        if m == self.order {
            return self.clone();
        }
        let k = m / self.order;
        let coeffs = self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect();
        Cyclotomic { order: m, coeffs }
    }

    /// The minimal order `m | order` with the value inside `Q(zeta_m)`.
    /// A basis exponent `e` lies in the subfield for `m | n` exactly when
    /// `(n/m) | e`, so this is a divisibility scan over the support.
    pub fn reduced_order(&self) -> u32 {
        let data = OrderData::new(self.order);
        let mut m = 1u32;
        for (fi, f) in data.factors.iter().enumerate() {
            // smallest p^j such that all digits at q are divisible by p^(k-j)
            let mut pj = 1u32;
            for &e in self.coeffs.keys() {
                let d = data.digit(e, fi);
                while pj < f.q && !d.is_multiple_of(f.q / pj) {
                    pj *= f.p;
                }
                if pj == f.q {
                    break;
                }
            }
            m *= pj;
        }
        m
    }

    /// Rewrite on the smallest order containing the value.
    pub fn reduce_order(&self) -> Cyclotomic {
        let m = self.reduced_order();
        if m == self.order {
            return self.clone();
        }
        let k = self.order / m;
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, c)| {
                debug_assert!(e % k == 0);
                (e / k, c.clone())
            })
            .collect();
        Cyclotomic { order: m, coeffs }
    }

    fn lift_pair(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if a.order == b.order {
            (a.clone(), b.clone())
        } else {
            let m = lcm_u32(a.order, b.order);
            (a.lift_to_order(m), b.lift_to_order(m))
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = Self::lift_pair(self, other);
        for (e, c) in b.coeffs {
            match a.coeffs.entry(e) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        a
    }

    pub fn neg(&self) -> Cyclotomic {
        let coeffs = self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Self::lift_pair(self, other);
        let n = a.order;
        let data = OrderData::new(n);
        let mut out = Cyclotomic::zero(n);
        for (&e1, c1) in a.coeffs.iter() {
            for (&e2, c2) in b.coeffs.iter() {
                let e = ((u64::from(e1) + u64::from(e2)) % u64::from(n)) as u32;
                out.add_term_with(&data, e, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        if r.is_zero() {
            return Cyclotomic::zero(self.order);
        }
        let coeffs = self.coeffs.iter().map(|(&e, c)| (e, c * r)).collect();
        Cyclotomic { order: self.order, coeffs }
    }

    pub fn pow(&self, mut k: u64) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse, solving `a * x = 1` over the rational
    /// coordinates of `Q(zeta_n)`.
    pub fn inverse(&self) -> Result<Cyclotomic, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        // fast paths: rationals and single terms
        if let Some(r) = self.try_rational() {
            return Ok(Cyclotomic::from_rational(r.recip()));
        }
        if self.coeffs.len() == 1 {
            let (&e, c) = self.coeffs.iter().next().unwrap();
            let mut inv = Cyclotomic::zero(self.order);
            inv.add_term(
                ((u64::from(self.order) - u64::from(e)) % u64::from(self.order)) as u32,
                c.recip(),
            );
            return Ok(inv);
        }
        let v = self.reduce_order();
        let n = v.order;
        let data = OrderData::new(n);
        let basis: Vec<u32> = basis_exponents(&data);
        let index: BTreeMap<u32, usize> =
            basis.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let dim = basis.len();
        // columns: v * zeta^b_j in basis coordinates
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(dim);
        for &b in &basis {
            let prod = v.mul(&Cyclotomic::root_of_unity(n, i64::from(b)));
            let mut col = vec![Rational::zero(); dim];
            for (&e, c) in prod.coeffs.iter() {
                col[index[&e]] = c.clone();
            }
            cols.push(col);
        }
        let m = crate::linalg::Matrix::from_fn(dim, dim, |i, j| cols[j][i].clone());
        let mut rhs = vec![Rational::zero(); dim];
        rhs[index[&0]] = Rational::one();
        let x = crate::linalg::solve(&m, &rhs).expect("nonzero cyclotomic is invertible");
        let inv = Cyclotomic::from_terms(
            n,
            basis.iter().zip(x).map(|(&e, c)| (i64::from(e), c)),
        );
        Ok(inv.lift_to_order(self.order))
    }

    pub fn div(&self, other: &Cyclotomic) -> Result<Cyclotomic, CycloError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// The Galois automorphism `zeta -> zeta^k`; requires `gcd(k, order) = 1`.
    pub fn galois(&self, k: i64) -> Result<Cyclotomic, CycloError> {
        let n = self.order;
        let ku = k.rem_euclid(i64::from(n)) as u64;
        if n > 1 && (ku == 0 || gcd_u64(ku, u64::from(n)) != 1) {
            return Err(CycloError::NotCoprime { order: n, k });
        }
        let mut out = Cyclotomic::zero(n);
        let data = OrderData::new(n);
        for (&e, c) in self.coeffs.iter() {
            out.add_term_with(&data, ((u64::from(e) * ku) % u64::from(n)) as u32, c.clone());
        }
        Ok(out)
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        if self.order <= 2 {
            return self.clone();
        }
        self.galois(i64::from(self.order) - 1).expect("n-1 is coprime to n")
    }

    /// The rational value, if the canonical form is rational.
    pub fn try_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// The integer value, if the canonical form is a rational integer.
    pub fn try_integer(&self) -> Option<Integer> {
        let r = self.try_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }
}

fn basis_exponents(data: &OrderData) -> Vec<u32> {
    let n = data.n;
    (0..n)
        .filter(|&e| {
            (0..data.factors.len()).all(|fi| data.digit(e, fi) < data.factors[fi].phi_q)
        })
        .collect()
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    a / (gcd_u64(u64::from(a), u64::from(b)) as u32) * b
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::lift_pair(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter() {
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_one = mag.is_one();
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !is_one {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "z{}", self.order)?;
                } else {
                    write!(f, "z{}^{}", self.order, e)?;
                }
            }
        }
        Ok(())
    }
}

impl PartialOrd for Cyclotomic {
    /// Arbitrary but total and stable order (by canonical form); used only
    /// for deterministic sorting of reports, not as a numeric order.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b) = Self::lift_pair(self, other);
        let va: Vec<_> = a.coeffs.into_iter().collect();
        let vb: Vec<_> = b.coeffs.into_iter().collect();
        va.partial_cmp(&vb)
    }
}

// ---------------------------------------------------------------------------
// Named constants of the construction.
// ---------------------------------------------------------------------------

/// `xi = zeta_19`, the fixed primitive 19th root of unity.
pub fn xi() -> Cyclotomic {
    Cyclotomic::root_of_unity(19, 1)
}

/// The quadratic Gauss sum `nu = sum_{k=1..9} xi^{k^2} = (-1 + i sqrt(19))/2`,
/// a root of `x^2 + x + 5`.
pub fn gauss_nu() -> Cyclotomic {
    Cyclotomic::from_terms(19, (1..=9i64).map(|k| ((k * k) % 19, Rational::one())))
}

/// The exponents `k^2 mod 19` for `k = 1..9` (the quadratic residues).
pub fn residue_exponents() -> Vec<u32> {
    (1..=9u32).map(|k| (k * k) % 19).collect()
}

/// `1 + 2 nu = i sqrt(19)`; its square is `-19`.
pub fn one_plus_two_nu() -> Cyclotomic {
    Cyclotomic::one().add(&gauss_nu().scale(&rat_int(2)))
}

/// `a_k = 2 cos(2 k pi / 9) = zeta_9^k + zeta_9^{-k}`.
pub fn a_value(k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(9, k).add(&Cyclotomic::root_of_unity(9, -k))
}

/// `b_k = -2 cos(k pi / 5) = -(zeta_10^k + zeta_10^{-k})`.
pub fn b_value(k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(10, k).add(&Cyclotomic::root_of_unity(10, -k)).neg()
}

/// Legendre symbol `(a | p)` for odd prime `p`.
pub fn legendre(a: i64, p: i64) -> i64 {
    let r = a.rem_euclid(p);
    if r == 0 {
        return 0;
    }
    // Euler criterion with small-modulus exponentiation
    let mut acc: i64 = 1;
    let mut base = r % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed;

    #[test]
    fn vanishing_sum_of_fifth_roots() {
        let s = (1..=4).fold(Cyclotomic::zero(5), |acc, k| {
            acc.add(&Cyclotomic::root_of_unity(5, k))
        });
        assert_eq!(s, Cyclotomic::from_int(-1));
    }

    #[test]
    fn nu_exponent_set_is_quadratic_residues() {
        assert_eq!(residue_exponents(), vec![1, 4, 9, 16, 6, 17, 11, 7, 5]);
        let nu = gauss_nu();
        let mut exps: Vec<u32> = nu.terms().map(|(e, _)| e).collect();
        exps.sort_unstable();
        assert_eq!(exps, vec![1, 4, 5, 6, 7, 9, 11, 16, 17]);
    }

    #[test]
    fn nu_satisfies_its_minimal_polynomial() {
        let nu = gauss_nu();
        let val = nu.mul(&nu).add(&nu).add(&Cyclotomic::from_int(5));
        assert!(val.is_zero());
        // embedding oracle: nu is the root with positive imaginary part,
        // i.e. nu = (-1 + i sqrt(19))/2, so |nu|^2 = (1 + 19)/4 = 5
        let (re, im) = embed::evaluate(&nu, 1);
        assert!(embed::close_to_f64(&re, -0.5));
        assert!(im > embed::fixed_from_f64(2.0));
    }

    #[test]
    fn nu_times_conj_is_five() {
        let nu = gauss_nu();
        let prod = nu.mul(&nu.conj());
        assert_eq!(prod.try_integer(), Some(Integer::from(5)));
        // independent check through the numerical embedding: |nu|^2 = 5
        let (re, im) = embed::evaluate(&prod, 1);
        assert!(embed::close_to_f64(&re, 5.0));
        assert!(embed::close_to_f64(&im, 0.0));
    }

    #[test]
    fn one_plus_two_nu_squares_to_minus_19() {
        let t = one_plus_two_nu();
        assert_eq!(t.mul(&t).try_integer(), Some(Integer::from(-19)));
    }

    #[test]
    fn conj_of_nu_is_minus_one_minus_nu() {
        let nu = gauss_nu();
        let expect = Cyclotomic::from_int(-1).sub(&nu);
        assert_eq!(nu.conj(), expect);
        // oracle: conjugation matches complex conjugation numerically
        let (re, im) = embed::evaluate(&nu, 1);
        let (re2, im2) = embed::evaluate(&nu.conj(), 1);
        assert!(embed::fixed_close(&re, &re2));
        assert!(embed::fixed_close(&im, &(-im2)));
    }

    #[test]
    fn nu_plus_conj_is_minus_one() {
        let nu = gauss_nu();
        assert_eq!(nu.add(&nu.conj()).try_integer(), Some(Integer::from(-1)));
    }

    #[test]
    fn galois_fixes_rationals() {
        let r = Cyclotomic::from_rational(rat(22, 7));
        for k in [1i64, 2, 3, 5, 11] {
            assert_eq!(r.galois(k).unwrap(), r);
        }
    }

    #[test]
    fn conj_is_an_involution() {
        let v = Cyclotomic::from_terms(19, [(3, rat(2, 3)), (5, rat(-1, 4)), (0, rat(7, 2))]);
        assert_eq!(v.conj().conj(), v);
    }

    #[test]
    fn galois_rejects_non_coprime() {
        let v = xi();
        assert!(matches!(v.galois(38), Err(CycloError::NotCoprime { .. })));
    }

    #[test]
    fn try_rational_on_irrational_cosine() {
        let c = Cyclotomic::root_of_unity(7, 1);
        let v = c.add(&c.conj());
        assert_eq!(v.try_rational(), None);
    }

    #[test]
    fn try_rational_identity_root() {
        let v = Cyclotomic::root_of_unity(19, 0);
        assert_eq!(v.try_rational(), Some(Rational::one()));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let z = Cyclotomic::zero(19);
        assert_eq!(xi().div(&z), Err(CycloError::DivisionByZero));
    }

    #[test]
    fn inverse_of_one_plus_two_nu() {
        let t = one_plus_two_nu();
        let inv = t.inverse().unwrap();
        assert_eq!(t.mul(&inv), Cyclotomic::one());
        // (1 + 2 nu)^{-1} = -(1 + 2 nu)/19
        assert_eq!(inv, t.scale(&rat(-1, 19)));
    }

    #[test]
    fn order_lift_roundtrip() {
        let v = Cyclotomic::from_terms(5, [(1, rat(1, 2)), (3, rat(-4, 3))]);
        let lifted = v.lift_to_order(95);
        assert_eq!(lifted.order(), 95);
        let back = lifted.reduce_order();
        assert_eq!(back.order(), 5);
        assert_eq!(back, v);
        assert_eq!(lifted, v); // equality across orders
    }

    #[test]
    fn tenth_roots_reduce_to_fifth_roots() {
        // zeta_10 = -zeta_5^3
        let z10 = Cyclotomic::root_of_unity(10, 1);
        let z5 = Cyclotomic::root_of_unity(5, 3);
        assert_eq!(z10, z5.neg());
        assert_eq!(b_value(5).try_integer(), Some(Integer::from(2)));
    }

    #[test]
    fn a_values_fold() {
        // a_3 = zeta_3 + zeta_3^2 = -1, a_9 = 2
        assert_eq!(a_value(3).try_integer(), Some(Integer::from(-1)));
        assert_eq!(a_value(9).try_integer(), Some(Integer::from(2)));
        assert_eq!(a_value(6), a_value(3));
        assert_eq!(a_value(12), a_value(3));
    }

    #[test]
    fn legendre_symbol_mod_19() {
        let squares: Vec<i64> = (1..19).filter(|&a| legendre(a, 19) == 1).collect();
        assert_eq!(squares, vec![1, 4, 5, 6, 7, 9, 11, 16, 17]);
        assert_eq!(legendre(2, 19), -1);
        assert_eq!(legendre(19, 19), 0);
    }
}
