//! Shared fixtures for the criterion benchmarks: deterministic
//! pseudo-random inputs for the exact kernels.

use adler19::cyclo::{rat, Cyclotomic, Rational};
use adler19::linalg::Matrix;

pub struct Xorshift(pub u64);

impl Xorshift {
    pub fn next_u64(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }
}

/// A dense element of `Q(zeta_19)` with small rational coefficients.
pub fn dense_cyclotomic(rng: &mut Xorshift) -> Cyclotomic {
    Cyclotomic::from_terms(
        19,
        (0..18).map(|e| (e, rat((rng.next_u64() % 9) as i64 - 4, (rng.next_u64() % 4 + 1) as i64))),
    )
}

pub fn random_rational_matrix(rng: &mut Xorshift, n: usize) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |_, _| rat((rng.next_u64() % 19) as i64 - 9, 1))
}

pub fn random_antisymmetric(rng: &mut Xorshift, n: usize) -> Matrix<Rational> {
    let mut m = Matrix::<Rational>::zero(n, n);
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rat((rng.next_u64() % 13) as i64 - 6, 1);
            m.set(i, j, v.clone());
            m.set(j, i, -v);
        }
    }
    m
}
