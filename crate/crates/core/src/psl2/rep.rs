//! The certified 9-dimensional projective representation of `PSL(2,19)`.
//!
//! Generator matrices: `T = diag(xi^{j^2})`, `S` the permutation
//! `e_k -> e_{|6k|}`, and `M` built from the Gauss-sum formula
//! `M[k][j] = (i/sqrt19) (kj|19) (xi^{kj} - xi^{-kj})` with `i/sqrt19`
//! realized exactly as `(1 + 2 nu)/19` inside `Q(zeta_19)`.
//!
//! Every group element receives a matrix by breadth-first multiplication
//! from the identity; the homomorphism certificate is the exhaustive
//! consistency check `matrix(x) * matrix(g) = matrix(xg)` (projectively) for
//! all 3420 elements and all three generators, which pins the assignment by
//! induction on word length.
//!
//! Matrices carry their own compact scalar type: entries of `Q(zeta_19)`
//! with a shared power-of-19 denominator and `i128` numerator coordinates.
//! Entries of words in the generators stay bounded (the generators are
//! unitary and stabilize a fixed lattice), so the fixed-width arithmetic is
//! exact; debug builds carry overflow checks.

#![allow(clippy::needless_range_loop)] // index loops mirror the matrix algebra
use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::cyclo::{legendre, one_plus_two_nu, rat, Cyclotomic, Rational};
use crate::linalg::Matrix;

use super::{mu_element, sigma_element, tau_element, ConjugacyData, GroupElement, GroupTag};

/// Element of `Q(zeta_19)` with `i128` coordinates over a positive common
/// denominator; always stored reduced.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct C19 {
    num: [i128; 18],
    den: i128,
}

impl C19 {
    pub(crate) fn zero() -> Self {
        C19 { num: [0; 18], den: 1 }
    }

    pub(crate) fn one() -> Self {
        let mut num = [0i128; 18];
        num[0] = 1;
        C19 { num, den: 1 }
    }

    fn normalize(mut self) -> Self {
        debug_assert!(self.den > 0);
        let mut g = self.den;
        for v in self.num {
            g = gcd_i128(g, v);
            if g == 1 {
                break;
            }
        }
        if g > 1 {
            for v in self.num.iter_mut() {
                *v /= g;
            }
            self.den /= g;
        }
        if self.num.iter().all(|&v| v == 0) {
            self.den = 1;
        }
        self
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.num.iter().all(|&v| v == 0)
    }

    fn add(&self, o: &C19) -> C19 {
        let g = gcd_i128(self.den, o.den);
        let la = o.den / g;
        let lb = self.den / g;
        let mut num = [0i128; 18];
        for (i, slot) in num.iter_mut().enumerate() {
            *slot = self.num[i] * la + o.num[i] * lb;
        }
        (C19 { num, den: self.den * la }).normalize()
    }

    fn mul(&self, o: &C19) -> C19 {
        let mut acc = [0i128; 19];
        for (i, &a) in self.num.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.num.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let mut e = i + j;
                if e >= 19 {
                    e -= 19;
                }
                acc[e] += a * b;
            }
        }
        (C19 { num: fold19(acc), den: self.den * o.den }).normalize()
    }

    fn conj(&self) -> C19 {
        let mut acc = [0i128; 19];
        for (e, &v) in self.num.iter().enumerate() {
            let ce = if e == 0 { 0 } else { 19 - e };
            acc[ce] += v;
        }
        (C19 { num: fold19(acc), den: self.den }).normalize()
    }

    fn scale_int(&self, k: i128) -> C19 {
        let mut num = self.num;
        for v in num.iter_mut() {
            *v *= k;
        }
        (C19 { num, den: self.den }).normalize()
    }

    pub(crate) fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::from_terms(
            19,
            self.num.iter().enumerate().filter(|(_, &v)| v != 0).map(|(e, &v)| {
                (
                    e as i64,
                    Rational::new(
                        num_bigint::BigInt::from(v),
                        num_bigint::BigInt::from(self.den),
                    ),
                )
            }),
        )
    }

    pub(crate) fn from_cyclotomic(c: &Cyclotomic) -> C19 {
        assert!(19 % c.order() == 0, "value outside Q(zeta_19)");
        let c = c.lift_to_order(19);
        let mut den: i128 = 1;
        for (_, r) in c.terms() {
            let d: i128 = i128::try_from(r.denom().clone()).expect("denominator fits i128");
            den = den / gcd_i128(den, d) * d;
        }
        let mut num = [0i128; 18];
        for (e, r) in c.terms() {
            let n: i128 = i128::try_from(r.numer().clone()).expect("numerator fits i128");
            let d: i128 = i128::try_from(r.denom().clone()).expect("denominator fits i128");
            num[e as usize] = n * (den / d);
        }
        (C19 { num, den }).normalize()
    }
}

impl fmt::Debug for C19 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cyclotomic())
    }
}

/// Rewrite a 19-slot accumulator into the 18 canonical coordinates using
/// `zeta^18 = -(1 + zeta + ... + zeta^17)`.
fn fold19(acc: [i128; 19]) -> [i128; 18] {
    let top = acc[18];
    let mut out = [0i128; 18];
    for (e, slot) in out.iter_mut().enumerate() {
        *slot = acc[e] - top;
    }
    out
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Dense 9x9 matrix over [`C19`].
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Mat9 {
    e: Vec<C19>,
}

impl Mat9 {
    pub(crate) fn identity() -> Self {
        let mut e = vec![C19::zero(); 81];
        for i in 0..9 {
            e[i * 9 + i] = C19::one();
        }
        Mat9 { e }
    }

    pub(crate) fn at(&self, i: usize, j: usize) -> &C19 {
        &self.e[i * 9 + j]
    }

    fn set(&mut self, i: usize, j: usize, v: C19) {
        self.e[i * 9 + j] = v;
    }

    pub(crate) fn mul(&self, o: &Mat9) -> Mat9 {
        let mut out = Mat9 { e: vec![C19::zero(); 81] };
        for i in 0..9 {
            for j in 0..9 {
                let mut acc = C19::zero();
                for k in 0..9 {
                    let a = self.at(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = o.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b));
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    fn conj_transpose(&self) -> Mat9 {
        let mut out = Mat9 { e: vec![C19::zero(); 81] };
        for i in 0..9 {
            for j in 0..9 {
                out.set(i, j, self.at(j, i).conj());
            }
        }
        out
    }

    pub(crate) fn is_unitary(&self) -> bool {
        // gT * conj(g) = identity, i.e. conj-transpose is the inverse
        self.conj_transpose().mul(self) == Mat9::identity()
    }

    /// Equality up to a scalar: cross-multiply against the first nonzero
    /// entry of each.
    pub(crate) fn projective_eq(&self, o: &Mat9) -> bool {
        let Some(pos) = self.e.iter().position(|v| !v.is_zero()) else {
            return o.e.iter().all(C19::is_zero);
        };
        if o.e[pos].is_zero() {
            return false;
        }
        let a0 = &self.e[pos];
        let b0 = &o.e[pos];
        for k in 0..81 {
            if self.e[k].mul(b0) != o.e[k].mul(a0) {
                return false;
            }
        }
        true
    }

    pub(crate) fn trace(&self) -> C19 {
        let mut acc = C19::zero();
        for i in 0..9 {
            acc = acc.add(self.at(i, i));
        }
        acc
    }

    pub(crate) fn scale_sign(&self, sign: i8) -> Mat9 {
        if sign >= 0 {
            self.clone()
        } else {
            Mat9 { e: self.e.iter().map(|v| v.scale_int(-1)).collect() }
        }
    }

    pub(crate) fn to_matrix(&self) -> Matrix<Cyclotomic> {
        Matrix::from_fn(9, 9, |i, j| self.at(i, j).to_cyclotomic())
    }
}

/// A generator in a form that admits a fast right-multiplication.
enum GenMatrix {
    /// Right-multiplying by a diagonal scales columns.
    Diag(Vec<C19>),
    /// Right-multiplying by the matrix of `e_j -> e_{pi(j)}` pulls column
    /// `pi(j)` into column `j`; stores the 0-based `pi`.
    Perm([usize; 9]),
    Dense(Box<Mat9>),
}

impl GenMatrix {
    fn right_apply(&self, x: &Mat9) -> Mat9 {
        match self {
            GenMatrix::Diag(d) => {
                let mut out = x.clone();
                for i in 0..9 {
                    for j in 0..9 {
                        if !out.at(i, j).is_zero() {
                            let v = out.at(i, j).mul(&d[j]);
                            out.set(i, j, v);
                        }
                    }
                }
                out
            }
            GenMatrix::Perm(p) => {
                let mut out = Mat9 { e: vec![C19::zero(); 81] };
                for i in 0..9 {
                    for j in 0..9 {
                        out.set(i, j, x.at(i, p[j]).clone());
                    }
                }
                out
            }
            GenMatrix::Dense(m) => x.mul(m),
        }
    }

    fn to_mat9(&self) -> Mat9 {
        self.right_apply(&Mat9::identity())
    }
}

/// The three generator letters.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Gen {
    Tau,
    Sigma,
    Mu,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::Tau, Gen::Sigma, Gen::Mu];

    pub fn element(self) -> GroupElement {
        match self {
            Gen::Tau => tau_element(),
            Gen::Sigma => sigma_element(),
            Gen::Mu => mu_element(),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Tau => write!(f, "tau"),
            Gen::Sigma => write!(f, "sigma"),
            Gen::Mu => write!(f, "mu"),
        }
    }
}

/// Which entry formula for `mu` was accepted.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum MuVariant {
    /// With the Legendre-symbol factor `(kj|19)`.
    Legendre,
    /// Without it.
    Plain,
}

#[derive(Debug, Clone)]
pub struct CertifyError {
    pub variant: MuVariant,
    /// First violated edge `(element, generator)`, if certification got that
    /// far; `None` means the generators failed the basic identities.
    pub edge: Option<(GroupElement, Gen)>,
    pub message: String,
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "certification failed ({:?}): {}", self.variant, self.message)?;
        if let Some((g, gen)) = &self.edge {
            write!(f, " at edge {g} * {gen}")?;
        }
        Ok(())
    }
}

impl std::error::Error for CertifyError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    Uncertified,
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::Uncertified => write!(f, "representation is not certified"),
        }
    }
}

impl std::error::Error for RepError {}

/// The generator-built 9x9 matrix assignment for all of `PSL(2,19)`, with a
/// homomorphism certificate.
pub struct ProjectiveRep {
    pub conj: Arc<ConjugacyData>,
    variant: MuVariant,
    cache: Vec<Mat9>,
    /// `(parent element id, generator)` describing the breadth-first tree;
    /// the identity is its own parent.
    parents: Vec<(u32, Gen)>,
    /// Parity of `mu` letters in the word; with `det M = -1` this is the
    /// determinant sign of the cached matrix.
    mu_parity: Vec<bool>,
    certified: bool,
}

impl ProjectiveRep {
    /// Build the representation, trying the Legendre-factor form of `mu`
    /// first and the plain form as fallback; a variant is accepted when the
    /// generator identities hold and a light edge sample is consistent.
    /// Full certification is [`ProjectiveRep::certify`].
    pub fn build(conj: Arc<ConjugacyData>) -> Result<ProjectiveRep, CertifyError> {
        assert_eq!(conj.group, GroupTag::G);
        let mut first_err = None;
        for variant in [MuVariant::Legendre, MuVariant::Plain] {
            match Self::try_build(conj.clone(), variant) {
                Ok(rep) => return Ok(rep),
                Err(e) => first_err = first_err.or(Some(e)),
            }
        }
        Err(first_err.expect("at least one variant attempted"))
    }

    fn try_build(conj: Arc<ConjugacyData>, variant: MuVariant) -> Result<ProjectiveRep, CertifyError> {
        let gens = [tau_matrix(), sigma_matrix(), mu_matrix(variant)];
        let fail = |message: String, edge| CertifyError { variant, edge, message };

        // basic generator identities, exact
        let t = gens[0].to_mat9();
        let s = gens[1].to_mat9();
        let m = gens[2].to_mat9();
        if !m.mul(&m).projective_eq(&Mat9::identity()) {
            return Err(fail("mu^2 is not the identity".into(), None));
        }
        for (g, name) in [(&t, "tau"), (&s, "sigma"), (&m, "mu")] {
            if !g.is_unitary() {
                return Err(fail(format!("{name} matrix is not unitary"), None));
            }
        }
        // S T S^{-1} = T^9 exactly (conjugating the diagonal by the 9-cycle)
        let mut t9 = Mat9::identity();
        for _ in 0..9 {
            t9 = gens[0].right_apply(&t9);
        }
        let sts = s.mul(&t).mul(&s.conj_transpose());
        if sts != t9 {
            return Err(fail("S T S^-1 != T^9".into(), None));
        }

        // breadth-first matrix assignment over the Cayley graph
        let n = conj.len();
        let id_idx = conj.element_index(&GroupElement::identity()) as usize;
        let mut cache: Vec<Option<Mat9>> = vec![None; n];
        let mut parents = vec![(id_idx as u32, Gen::Tau); n];
        let mut mu_parity = vec![false; n];
        cache[id_idx] = Some(Mat9::identity());
        parents[id_idx] = (id_idx as u32, Gen::Tau);
        let mut queue = VecDeque::from([id_idx]);
        while let Some(i) = queue.pop_front() {
            for (gi, gen) in Gen::ALL.iter().enumerate() {
                let target = conj.elements[i].mul(&gen.element());
                let j = conj.element_index(&target) as usize;
                if cache[j].is_none() {
                    let mat = gens[gi].right_apply(cache[i].as_ref().unwrap());
                    cache[j] = Some(mat);
                    parents[j] = (i as u32, *gen);
                    mu_parity[j] = mu_parity[i] ^ (*gen == Gen::Mu);
                    queue.push_back(j);
                }
            }
        }
        if cache.iter().any(Option::is_none) {
            return Err(fail("generators do not generate the group".into(), None));
        }
        let cache: Vec<Mat9> = cache.into_iter().map(Option::unwrap).collect();

        // trace of mu pins det(M): with M^2 = 1 and tr M = -1 the eigenvalues
        // are +1 (x4) and -1 (x5), so det M = -1 and the mu-parity of a word
        // is the determinant sign of its matrix.
        let trace_m = m.trace().to_cyclotomic();
        if trace_m.try_integer() != Some((-1).into()) {
            return Err(fail(format!("trace of mu is {trace_m}, expected -1"), None));
        }

        let rep = ProjectiveRep { conj, variant, cache, parents, mu_parity, certified: false };

        // light edge sample: all generator pairs plus edges out of the class
        // representatives (non-tree edges among them catch a wrong mu)
        let mut sample: Vec<GroupElement> =
            rep.conj.classes.iter().map(|c| c.rep).collect();
        sample.extend(Gen::ALL.iter().map(|g| g.element()));
        for x in sample {
            for gen in Gen::ALL {
                if let Err(e) = rep.check_edge(&gens, &x, gen) {
                    return Err(fail(e, Some((x, gen))));
                }
            }
        }
        Ok(rep)
    }

    fn check_edge(&self, gens: &[GenMatrix; 3], x: &GroupElement, gen: Gen) -> Result<(), String> {
        let i = self.conj.element_index(x) as usize;
        let j = self.conj.element_index(&x.mul(&gen.element())) as usize;
        let prod = gens[gen as usize].right_apply(&self.cache[i]);
        if prod.projective_eq(&self.cache[j]) {
            Ok(())
        } else {
            Err("matrix(x) * matrix(g) differs from matrix(xg)".into())
        }
    }

    /// The exhaustive homomorphism certificate: `matrix(x) * matrix(g)`
    /// equals `matrix(xg)` projectively for every element and generator.
    pub fn certify(&mut self) -> Result<(), CertifyError> {
        if self.certified {
            return Ok(());
        }
        let gens = [tau_matrix(), sigma_matrix(), mu_matrix(self.variant)];
        let conj = &self.conj;
        let cache = &self.cache;
        let n = conj.len();
        let mut failures: Vec<(usize, Gen)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let gens = &gens;
                Gen::ALL.into_iter().filter_map(move |gen| {
                    let x = conj.elements[i];
                    let j = conj.element_index(&x.mul(&gen.element())) as usize;
                    let prod = gens[gen as usize].right_apply(&cache[i]);
                    if prod.projective_eq(&cache[j]) {
                        None
                    } else {
                        Some((i, gen))
                    }
                })
            })
            .collect();
        failures.sort_by_key(|&(i, g)| (i, g as u8));
        if let Some(&(i, gen)) = failures.first() {
            return Err(CertifyError {
                variant: self.variant,
                edge: Some((self.conj.elements[i], gen)),
                message: format!("{} inconsistent edges", failures.len()),
            });
        }
        self.certified = true;
        Ok(())
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn mu_variant(&self) -> MuVariant {
        self.variant
    }

    /// Determinant sign of the cached matrix of `g` (`det M = -1`, the
    /// diagonal and permutation generators have determinant 1).
    pub fn det_sign(&self, g: &GroupElement) -> i8 {
        if self.mu_parity[self.conj.element_index(g) as usize] {
            -1
        } else {
            1
        }
    }

    /// The cached (word-product) matrix of `g`, exactly as built.
    pub fn raw_matrix(&self, g: &GroupElement) -> Matrix<Cyclotomic> {
        self.cache[self.conj.element_index(g) as usize].to_matrix()
    }

    /// The determinant-one representative of the projective class of
    /// `matrix(g)`: the unique scalar multiple with entries in `Q(zeta_19)`
    /// and determinant 1. Its traces reproduce the character-table row.
    pub fn element_matrix(&self, g: &GroupElement) -> Matrix<Cyclotomic> {
        let i = self.conj.element_index(g) as usize;
        self.cache[i].scale_sign(self.det_sign(g)).to_matrix()
    }

    pub(crate) fn fast_matrix(&self, idx: usize) -> &Mat9 {
        &self.cache[idx]
    }

    pub(crate) fn fast_normalized(&self, idx: usize) -> Mat9 {
        let sign = if self.mu_parity[idx] { -1 } else { 1 };
        self.cache[idx].scale_sign(sign)
    }

    /// Scalar-normalized trace at each conjugacy class, in table order.
    pub fn trace_character(&self) -> Result<Vec<Cyclotomic>, RepError> {
        if !self.certified {
            return Err(RepError::Uncertified);
        }
        Ok(self
            .conj
            .classes
            .iter()
            .map(|c| {
                let i = self.conj.element_index(&c.rep) as usize;
                let tr = self.cache[i].trace().to_cyclotomic();
                if self.mu_parity[i] {
                    tr.neg()
                } else {
                    tr
                }
            })
            .collect())
    }

    /// A word over the generators evaluating to `g` (breadth-first, so of
    /// minimal length for this generating set).
    pub fn word_for(&self, g: &GroupElement) -> Vec<Gen> {
        let id = self.conj.element_index(&GroupElement::identity());
        let mut i = self.conj.element_index(g);
        let mut word = Vec::new();
        while i != id {
            let (p, gen) = self.parents[i as usize];
            word.push(gen);
            i = p;
        }
        word.reverse();
        word
    }

    /// Heavy sweep: every cached matrix is unitary.
    pub fn all_unitary(&self) -> bool {
        self.cache.par_iter().all(Mat9::is_unitary)
    }

    /// The literal generator matrix (un-normalized, as displayed).
    pub fn generator_matrix(&self, gen: Gen) -> Matrix<Cyclotomic> {
        match gen {
            Gen::Tau => tau_matrix().to_mat9().to_matrix(),
            Gen::Sigma => sigma_matrix().to_mat9().to_matrix(),
            Gen::Mu => mu_matrix(self.variant).to_mat9().to_matrix(),
        }
    }
}

/// Class sums `sum_{g in C} rho(g)` of the determinant-one representatives
/// on the natural 9-dimensional representation, in class order.
pub(crate) fn natural_class_sums(rep: &ProjectiveRep) -> Vec<Matrix<Cyclotomic>> {
    let ncl = rep.conj.num_classes();
    let mut sums = vec![Mat9 { e: vec![C19::zero(); 81] }; ncl];
    for (i, &cls) in rep.conj.class_of.iter().enumerate() {
        let m = rep.fast_normalized(i);
        let acc = &mut sums[cls as usize];
        for k in 0..81 {
            acc.e[k] = acc.e[k].add(&m.e[k]);
        }
    }
    sums.iter().map(Mat9::to_matrix).collect()
}

/// Class sums on the 81-dimensional tensor square `W9 (x) conj(W9)`
/// (scalar normalization cancels there). Heavy: 3420 Kronecker products.
pub(crate) fn tensor_class_sums(rep: &ProjectiveRep) -> Vec<Matrix<Cyclotomic>> {
    let ncl = rep.conj.num_classes();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); ncl];
    for (i, &cls) in rep.conj.class_of.iter().enumerate() {
        members[cls as usize].push(i);
    }
    members
        .par_iter()
        .map(|idxs| {
            let mut acc = vec![C19::zero(); 81 * 81];
            for &i in idxs {
                let g = rep.fast_matrix(i);
                for r in 0..81 {
                    let (gi, gj) = (r / 9, r % 9);
                    for c in 0..81 {
                        let (gk, gl) = (c / 9, c % 9);
                        let a = g.at(gi, gk);
                        if a.is_zero() {
                            continue;
                        }
                        let b = g.at(gj, gl);
                        if b.is_zero() {
                            continue;
                        }
                        acc[r * 81 + c] = acc[r * 81 + c].add(&a.mul(&b.conj()));
                    }
                }
            }
            Matrix::from_fn(81, 81, |r, c| acc[r * 81 + c].to_cyclotomic())
        })
        .collect()
}

fn tau_matrix() -> GenMatrix {
    GenMatrix::Diag(
        (1..=9u32)
            .map(|j| C19::from_cyclotomic(&Cyclotomic::root_of_unity(19, i64::from(j * j))))
            .collect(),
    )
}

/// `|t|`: the representative of `t mod 19` in `1..=9` up to sign.
pub fn abs_mod19(t: i64) -> usize {
    let r = t.rem_euclid(19);
    if r <= 9 {
        r as usize
    } else {
        19 - r as usize
    }
}

fn sigma_matrix() -> GenMatrix {
    let mut p = [0usize; 9];
    for (k0, slot) in p.iter_mut().enumerate() {
        *slot = abs_mod19(6 * (k0 as i64 + 1)) - 1;
    }
    GenMatrix::Perm(p)
}

fn mu_matrix(variant: MuVariant) -> GenMatrix {
    let i_over_sqrt19 = one_plus_two_nu().scale(&rat(1, 19));
    let mut m = Mat9 { e: vec![C19::zero(); 81] };
    for k in 1..=9i64 {
        for j in 1..=9i64 {
            let sign = match variant {
                MuVariant::Legendre => legendre(k * j, 19),
                MuVariant::Plain => 1,
            };
            let diff = Cyclotomic::root_of_unity(19, k * j)
                .sub(&Cyclotomic::root_of_unity(19, -k * j));
            let entry = i_over_sqrt19.mul(&diff).scale(&crate::cyclo::rat_int(sign));
            m.set(k as usize - 1, j as usize - 1, C19::from_cyclotomic(&entry));
        }
    }
    GenMatrix::Dense(Box::new(m))
}
