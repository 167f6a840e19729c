//! Exact arithmetic in `Q(zeta_n)`: cyclotomic polynomials with integer
//! coefficients and field elements as rational-coefficient polynomials
//! reduced modulo `Phi_n`.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ntcore::gcd;

/// Monic integer coefficients of `Phi_n(x)`, low degree first, computed by
/// exact division of `x^n - 1` by all `Phi_d` for proper divisors `d`.
pub fn cyclotomic_poly(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    if n == 1 {
        return vec![BigInt::from(-1), BigInt::one()];
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = exact_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

/// Exact division of integer polynomials (low degree first); panics if the
/// division leaves a remainder.
fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = a.to_vec();
    while rem.last().map_or(false, |c| c.is_zero()) {
        rem.pop();
    }
    let bl = b.len();
    assert!(bl >= 1 && rem.len() >= bl);
    let lead = &b[bl - 1];
    let mut quot = vec![BigInt::zero(); rem.len() - bl + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + bl - 1] / lead;
        assert_eq!(&c * lead, rem[k + bl - 1], "non-exact division");
        for (i, bc) in b.iter().enumerate() {
            let t = &c * bc;
            rem[k + i] -= t;
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact division");
    quot
}

/// Arithmetic context for `Q(zeta_n)`; elements are vectors of
/// `phi(n)` rationals over the power basis `{1, zeta, ..., zeta^(phi(n)-1)}`.
#[derive(Debug, Clone)]
pub struct CycloField {
    n: u64,
    dim: usize,
    /// `zeta^j` reduced mod `Phi_n`, for `j = 0..n-1`.
    zeta_table: Vec<Vec<BigRational>>,
}

pub type CycloNum = Vec<BigRational>;

impl CycloField {
    pub fn new(n: u64) -> CycloField {
        let phi_poly = cyclotomic_poly(n);
        let dim = phi_poly.len() - 1;
        // reduction rule: zeta^dim = -(phi_0 + phi_1 zeta + ...) (monic)
        let reduction: Vec<BigRational> = phi_poly[..dim]
            .iter()
            .map(|c| BigRational::from_integer(-c.clone()))
            .collect();
        let mut zeta_table = Vec::with_capacity(n as usize);
        let mut cur = vec![BigRational::zero(); dim];
        cur[0] = BigRational::one();
        zeta_table.push(cur.clone());
        for _ in 1..n {
            // multiply by zeta: shift, then fold the overflow term
            let top = cur.pop().unwrap();
            cur.insert(0, BigRational::zero());
            if !top.is_zero() {
                for (c, r) in cur.iter_mut().zip(&reduction) {
                    *c += &top * r;
                }
            }
            zeta_table.push(cur.clone());
        }
        CycloField { n, dim, zeta_table }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn zero(&self) -> CycloNum {
        vec![BigRational::zero(); self.dim]
    }

    pub fn one(&self) -> CycloNum {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, r: BigRational) -> CycloNum {
        let mut v = self.zero();
        v[0] = r;
        v
    }

    pub fn zeta_pow(&self, k: u64) -> CycloNum {
        self.zeta_table[(k % self.n) as usize].clone()
    }

    pub fn add(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(&self, a: &CycloNum) -> CycloNum {
        a.iter().map(|x| -x).collect()
    }

    pub fn scale(&self, a: &CycloNum, r: &BigRational) -> CycloNum {
        a.iter().map(|x| x * r).collect()
    }

    pub fn mul(&self, a: &CycloNum, b: &CycloNum) -> CycloNum {
        let mut conv = vec![BigRational::zero(); 2 * self.dim - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    conv[i + j] += x * y;
                }
            }
        }
        // fold powers >= dim through the zeta table
        let mut out = conv[..self.dim].to_vec();
        for (j, c) in conv.iter().enumerate().skip(self.dim) {
            if c.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&self.zeta_table[j % self.n as usize]) {
                *o += c * t;
            }
        }
        out
    }

    /// The conjugation `zeta -> zeta^k` for `gcd(k, n) = 1`.
    pub fn conjugate(&self, a: &CycloNum, k: u64) -> CycloNum {
        debug_assert_eq!(gcd(k % self.n, self.n), 1);
        let mut out = self.zero();
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = &self.zeta_table[(i as u64 * k % self.n) as usize];
            for (o, t) in out.iter_mut().zip(img) {
                *o += c * t;
            }
        }
        out
    }

    pub fn is_zero(&self, a: &CycloNum) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self, a: &CycloNum) -> bool {
        a[1..].iter().all(|c| c.is_zero())
    }

    /// `N_{Q(zeta_n)/Q}(a)`, asserted to land in `Q`.
    pub fn norm(&self, a: &CycloNum) -> BigRational {
        let mut acc = self.one();
        for k in 1..=self.n {
            if gcd(k, self.n) == 1 {
                acc = self.mul(&acc, &self.conjugate(a, k));
            }
        }
        assert!(self.is_rational(&acc), "norm must be rational");
        acc[0].clone()
    }
}

/// Exact q-adic valuation of a nonzero rational.
pub fn rational_valuation(r: &BigRational, q: u64) -> i64 {
    assert!(!r.is_zero());
    let q = BigInt::from(q);
    let mut v = 0i64;
    let mut n = r.numer().abs();
    while (&n % &q).is_zero() {
        n /= &q;
        v += 1;
    }
    let mut d = r.denom().abs();
    while (&d % &q).is_zero() {
        d /= &q;
        v -= 1;
    }
    v
}
