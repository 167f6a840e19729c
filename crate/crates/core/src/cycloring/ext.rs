//! The finite field `F_{q^e}` realized as `F_q[Y]/(g(Y))` for the
//! lexicographically first monic irreducible `g` of degree `e`.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::One;

use super::{poly_divmod, poly_mul, poly_sub, trim};
use crate::ntcore::{inv_mod, mul_mod, prime_factors};

/// Field context; elements are coefficient vectors of length `e` over `F_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqExt {
    q: u64,
    e: usize,
    g: Vec<u64>,
}

impl FqExt {
    /// Construct `F_{q^e}`, searching monic polynomials of degree `e` in
    /// lexicographic coefficient order for the first irreducible one.
    pub fn new(q: u64, e: usize) -> FqExt {
        assert!(e >= 1);
        let mut coeffs = vec![0u64; e + 1];
        coeffs[e] = 1;
        loop {
            if is_irreducible(&coeffs, q) {
                return FqExt { q, e, g: coeffs };
            }
            // increment the non-leading coefficients as a base-q counter
            let mut i = 0;
            loop {
                assert!(i < e, "no irreducible of degree {e} found");
                coeffs[i] += 1;
                if coeffs[i] < q {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    pub fn modulus(&self) -> &[u64] {
        &self.g
    }

    /// `q^e`, the field size.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.q).pow(self.e as u32)
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.e]
    }

    pub fn one(&self) -> Vec<u64> {
        self.scalar(1)
    }

    pub fn scalar(&self, c: u64) -> Vec<u64> {
        let mut v = vec![0; self.e];
        v[0] = c % self.q;
        v
    }

    pub fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.q).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + self.q - y) % self.q)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().map(|&x| (self.q - x) % self.q).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let prod = poly_mul(a, b, self.q);
        let (_, mut rem) = poly_divmod(&prod, &self.g, self.q);
        rem.resize(self.e, 0);
        rem
    }

    /// Multiply by a base-field scalar.
    pub fn scale(&self, a: &[u64], c: u64) -> Vec<u64> {
        a.iter().map(|&x| mul_mod(x, c % self.q, self.q)).collect()
    }

    pub fn inv(&self, a: &[u64]) -> Option<Vec<u64>> {
        let mut r0 = self.g.clone();
        let mut r1 = a.to_vec();
        trim(&mut r1);
        if r1.is_empty() {
            return None;
        }
        let mut s0: Vec<u64> = Vec::new();
        let mut s1 = vec![1u64];
        while !r1.is_empty() {
            let (quot, rem) = poly_divmod(&r0, &r1, self.q);
            r0 = r1;
            r1 = rem;
            let t = poly_sub(&s0, &poly_mul(&quot, &s1, self.q), self.q);
            s0 = s1;
            s1 = t;
        }
        debug_assert_eq!(r0.len(), 1, "g is irreducible, gcd must be constant");
        let scale = inv_mod(r0[0], self.q);
        let mut out: Vec<u64> =
            s0.iter().map(|&c| mul_mod(c, scale, self.q)).collect();
        out.resize(self.e, 0);
        Some(out)
    }

    pub fn pow(&self, a: &[u64], e: u64) -> Vec<u64> {
        self.pow_big(a, &BigUint::from(e))
    }

    pub fn pow_big(&self, a: &[u64], e: &BigUint) -> Vec<u64> {
        let mut acc = self.one();
        let mut base = a.to_vec();
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
        }
        acc
    }

    /// An element of multiplicative order exactly `d`; requires
    /// `d | q^e - 1`. Candidates are scanned in lexicographic order and
    /// projected onto the order-d subgroup, so the result is deterministic.
    pub fn root_of_unity(&self, d: u64) -> Vec<u64> {
        let size_minus_one = self.size() - BigUint::one();
        assert!(
            (&size_minus_one % d).bits() == 0,
            "d must divide q^e - 1"
        );
        let exp = &size_minus_one / d;
        let d_prime_factors = prime_factors(d);
        let mut cand = self.zero();
        loop {
            // base-q counter over coefficient vectors
            let mut i = 0;
            loop {
                assert!(i < self.e, "no element of order {d}: impossible");
                cand[i] += 1;
                if cand[i] < self.q {
                    break;
                }
                cand[i] = 0;
                i += 1;
            }
            let w = self.pow_big(&cand, &exp);
            let exact = !self.is_zero(&w)
                && d_prime_factors
                    .iter()
                    .all(|&l| self.pow(&w, d / l) != self.one());
            if exact && self.pow(&w, d) == self.one() {
                return w;
            }
        }
    }
}

/// Rabin irreducibility test for a monic polynomial over `F_q`.
fn is_irreducible(f: &[u64], q: u64) -> bool {
    let e = f.len() - 1;
    if e == 0 {
        return false;
    }
    // h = Y^(q^k) mod f by iterated q-th powering
    let frob = |h: &[u64]| -> Vec<u64> {
        // h^q mod f
        let mut acc = vec![1u64];
        let mut base = h.to_vec();
        let mut exp = q;
        while exp > 0 {
            if exp & 1 == 1 {
                let (_, r) = poly_divmod(&poly_mul(&acc, &base, q), f, q);
                acc = r;
            }
            let (_, r) = poly_divmod(&poly_mul(&base, &base, q), f, q);
            base = r;
            exp >>= 1;
        }
        acc
    };
    // Y reduced mod f (degree-one f makes this a constant)
    let (_, y) = poly_divmod(&[0, 1], f, q);
    let mut h = y.clone();
    for _ in 0..e {
        h = frob(&h);
    }
    if poly_sub(&h, &y, q) != Vec::<u64>::new() {
        return false; // Y^(q^e) != Y mod f
    }
    for l in prime_factors(e as u64) {
        let mut h = y.clone();
        for _ in 0..e / l as usize {
            h = frob(&h);
        }
        let diff = poly_sub(&h, &y, q);
        if poly_gcd(&diff, f, q).len() != 1 {
            return false;
        }
    }
    true
}

fn poly_gcd(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    while !r1.is_empty() {
        let (_, rem) = poly_divmod(&r0, &r1, q);
        r0 = r1;
        r1 = rem;
    }
    r0
}
