// SPDX-License-Identifier: Apache-2.0

//! Rabin-Karp fingerprints `phi(S) = sum_{k=1..|S|} S[k] * b^k mod p`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// A prime modulus below 2^62.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus(u64);

impl Modulus {
    /// The Mersenne prime 2^61 - 1.
    pub const MERSENNE_61: Modulus = Modulus((1 << 61) - 1);
    /// p = 257: collisions are common enough to exercise the verifier.
    pub const SMALL: Modulus = Modulus(257);

    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 62 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Modulus(p))
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        let x = a as u128 * b as u128;
        if self == Self::MERSENNE_61 {
            let p = self.0 as u128;
            let folded = (x & p) + (x >> 61);
            let folded = (folded & p) + (folded >> 61);
            let r = folded as u64;
            if r >= self.0 {
                r - self.0
            } else {
                r
            }
        } else {
            (x % self.0 as u128) as u64
        }
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a non-zero residue, by Fermat.
    pub fn inverse(self, a: u64) -> u64 {
        self.pow(a, self.0 - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let m = Modulus(n);
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &w in &WITNESSES {
        let mut x = m.pow(w, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = m.mul(x, x);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// One member of the fingerprint family: a modulus `p` and a base `b` in `1..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FingerprintFn {
    modulus: Modulus,
    base: u64,
    seed: u64,
    error_exponent: u32,
}

impl FingerprintFn {
    /// The nominal `c` in the `1 - n^-c` success bound; recorded, not enforced.
    pub const DEFAULT_ERROR_EXPONENT: u32 = 2;

    pub fn new(modulus: Modulus, base: u64) -> Result<Self> {
        if base == 0 || base >= modulus.value() {
            return Err(Error::InvalidBase { base, modulus: modulus.value() });
        }
        Ok(FingerprintFn { modulus, base, seed: 0, error_exponent: Self::DEFAULT_ERROR_EXPONENT })
    }

    /// Draws `b` uniformly from `1..p` with a generator seeded by `seed`.
    pub fn random(modulus: Modulus, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::draw(modulus, seed, &mut rng)
    }

    pub(crate) fn draw<R: Rng>(modulus: Modulus, seed: u64, rng: &mut R) -> Self {
        let base = rng.gen_range(1..modulus.value());
        FingerprintFn { modulus, base, seed, error_exponent: Self::DEFAULT_ERROR_EXPONENT }
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    #[inline]
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn error_exponent(&self) -> u32 {
        self.error_exponent
    }

    /// `b^e mod p`.
    #[inline]
    pub fn power(&self, e: u64) -> u64 {
        self.modulus.pow(self.base, e)
    }

    /// Fingerprint of `bytes` by direct summation.
    pub fn fp_direct(&self, bytes: &[u8]) -> u64 {
        let m = self.modulus;
        let mut acc = 0;
        let mut pw = 1 % m.value();
        for &c in bytes {
            pw = m.mul(pw, self.base);
            acc = m.add(acc, m.mul(c as u64 % m.value(), pw));
        }
        acc
    }

    /// `phi(X Y)` from `phi(X)`, `|X|` and `phi(Y)`.
    pub fn concat(&self, fx: u64, x_len: u64, fy: u64) -> u64 {
        let m = self.modulus;
        m.add(fx, m.mul(self.power(x_len), fy))
    }
}
