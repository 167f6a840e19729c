//! Elementary modular arithmetic: primality, multiplicative orders,
//! Fermat quotients, Wieferich congruences, the exponent-gap inequality
//! and the real-splitting criterion.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NtError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("p and q must be distinct")]
    EqualPrimes,
    #[error("{a} is not coprime to {m}")]
    NotCoprime { a: u64, m: u64 },
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    debug_assert!(m > 1);
    base %= m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of `a` modulo `m`, for `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> u64 {
    // extended Euclid on signed values
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let d = r0 / r1;
        let r = r0 - d * r1;
        r0 = r1;
        r1 = r;
        let s = s0 - d * s1;
        s0 = s1;
        s1 = s;
    }
    debug_assert_eq!(r0, 1, "inv_mod of non-unit");
    (s0.rem_euclid(m as i128)) as u64
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let r = (n - 1).trailing_zeros();
    let d = (n - 1) >> r;
    // witness set sufficient for n < 3.3 * 10^24 > 2^64
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn is_odd_prime(n: u64) -> bool {
    n >= 3 && n % 2 == 1 && is_prime(n)
}

/// Prime factors of `n` (without multiplicity), by trial division.
pub fn prime_factors(mut n: u64) -> alloc::vec::Vec<u64> {
    let mut out = alloc::vec::Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplicative order of `a` modulo a prime `m`.
pub fn mult_order(a: u64, m: u64) -> u64 {
    debug_assert!(is_prime(m) && a % m != 0);
    let mut ord = m - 1;
    for f in prime_factors(m - 1) {
        while ord % f == 0 && pow_mod(a, ord / f, m) == 1 {
            ord /= f;
        }
    }
    ord
}

/// A validated pair of distinct odd primes with the derived multiplicative
/// orders of each prime modulo the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePair {
    p: u64,
    q: u64,
    ord_q_of_p: u64,
    ord_p_of_q: u64,
}

impl PrimePair {
    pub fn new(p: u64, q: u64) -> Result<Self, NtError> {
        if !is_odd_prime(p) {
            return Err(NtError::NotOddPrime(p));
        }
        if !is_odd_prime(q) {
            return Err(NtError::NotOddPrime(q));
        }
        if p == q {
            return Err(NtError::EqualPrimes);
        }
        Ok(PrimePair {
            p,
            q,
            ord_q_of_p: mult_order(p % q, q),
            ord_p_of_q: mult_order(q % p, p),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Order of `p` in `(Z/qZ)^*`.
    pub fn ord_q_of_p(&self) -> u64 {
        self.ord_q_of_p
    }

    /// Order of `q` in `(Z/pZ)^*`.
    pub fn ord_p_of_q(&self) -> u64 {
        self.ord_p_of_q
    }

    /// The pair with the roles of `p` and `q` exchanged.
    pub fn swapped(&self) -> PrimePair {
        PrimePair {
            p: self.q,
            q: self.p,
            ord_q_of_p: self.ord_p_of_q,
            ord_p_of_q: self.ord_q_of_p,
        }
    }
}

/// The Fermat quotient `(a^q - a)/q mod q`, computed exactly from
/// `a^q mod q^2`. Defined for any `a` coprime to `q`; negative `a` are
/// reduced modulo `q^2` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FermatQuotient {
    pub base: u64,
    pub q: u64,
    pub value: u64,
}

pub fn fermat_quotient(a: i64, q: u64) -> Result<FermatQuotient, NtError> {
    if !is_odd_prime(q) {
        return Err(NtError::NotOddPrime(q));
    }
    let q2 = q * q;
    let base = (a as i128).rem_euclid(q2 as i128) as u64;
    if base % q == 0 {
        return Err(NtError::NotCoprime { a: base, m: q });
    }
    let aq = pow_mod(base, q, q2);
    // a^q == a mod q, so the difference is divisible by q
    let diff = (aq + q2 - base) % q2;
    debug_assert_eq!(diff % q, 0);
    Ok(FermatQuotient {
        base,
        q,
        value: (diff / q) % q,
    })
}

/// `a^(q-1) == 1 mod q^2`?
pub fn is_wieferich(a: u64, q: u64) -> Result<bool, NtError> {
    if !is_odd_prime(q) {
        return Err(NtError::NotOddPrime(q));
    }
    if a % q == 0 {
        return Err(NtError::NotCoprime { a, m: q });
    }
    let q2 = q * q;
    Ok(pow_mod(a % q2, q - 1, q2) == 1)
}

/// Case I a congruence: `2^(q-1) == 1 mod q^2`.
pub fn wieferich_case_ia(pair: &PrimePair) -> bool {
    is_wieferich(2, pair.q()).expect("2 is coprime to any odd prime")
}

/// Case II b congruence: `p^(q-1) == 1 mod q^2`.
pub fn wieferich_case_iib(pair: &PrimePair) -> bool {
    is_wieferich(pair.p() % (pair.q() * pair.q()), pair.q())
        .expect("distinct primes are coprime")
}

/// Case II a congruence: `(2^(p-1) * p^p)^(q-1) == 1 mod q^2`, with the
/// base assembled modulo `q^2` before the final exponentiation.
pub fn wieferich_case_iia(pair: &PrimePair) -> bool {
    let q2 = pair.q() * pair.q();
    let base = mul_mod(
        pow_mod(2, pair.p() - 1, q2),
        pow_mod(pair.p() % q2, pair.p(), q2),
        q2,
    );
    is_wieferich(base, pair.q()).expect("base is coprime to q")
}

/// Is `-1 mod m` a power of `g mod m`? Tested as: the order of `g` is even
/// and `g^(ord/2) == -1`.
pub fn minus_one_in_cyclic_subgroup(g: u64, m: u64) -> Result<bool, NtError> {
    if !is_odd_prime(m) {
        return Err(NtError::NotOddPrime(m));
    }
    if g % m == 0 {
        return Err(NtError::NotCoprime { a: g, m });
    }
    let ord = mult_order(g % m, m);
    Ok(ord % 2 == 0 && pow_mod(g % m, ord / 2, m) == m - 1)
}

/// Whether `p` splits into real prime ideals in the q-th cyclotomic field,
/// tested via the equivalent subgroup condition `-1 in <p mod q>`.
pub fn real_splitting_criterion(pair: &PrimePair) -> bool {
    minus_one_in_cyclic_subgroup(pair.p() % pair.q(), pair.q())
        .expect("pair primes are coprime")
}

/// `max{p, p(p-20)/16} > q`, with the fraction compared exactly.
pub fn exponent_gap_ok(pair: &PrimePair) -> bool {
    let (p, q) = (pair.p() as i128, pair.q() as i128);
    p > q || p * (p - 20) > 16 * q
}
