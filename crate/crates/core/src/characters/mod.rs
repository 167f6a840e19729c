//! Dirichlet characters with exact cyclotomic values, generalized
//! Bernoulli numbers `B_{1,chi}`, relative class numbers `h_m^-`, and the
//! reflection quantity `B_omega` with its `q`-divisibility verdict.

pub mod cyclotomic;

mod bernoulli;

pub use bernoulli::{
    b_omega, bernoulli_b1, h_minus, h_pq_reflection, q_divides_h_minus,
    BOmegaReport, BernoulliValue, ClassNumberReport, ReflectionReport,
};

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::cycloring::primitive_root;
use crate::ntcore::{gcd, is_prime, mul_mod};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("modulus {0} is not an odd prime or a product of two distinct odd primes")]
    BadModulus(u64),
    #[error("B_1 of the trivial character is not defined here")]
    TrivialCharacter,
}

/// A three-valued divisibility verdict: desk-scale bounds make some
/// quantities uncomputable, and "could not verify" must stay distinct
/// from "false".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Divides {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct CharComponent {
    prime: u64,
    generator: u64,
    group_order: u64,
    /// chi(generator) = zeta_group_order ^ exp
    exp: u64,
    /// discrete logs base `generator`: dlog[x] = j with generator^j = x,
    /// u64::MAX at non-units
    dlog: Vec<u64>,
}

/// A Dirichlet character mod an odd prime or a product of two distinct
/// odd primes, encoded by its value on one fixed generator per prime
/// component (the smallest primitive root).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletChar {
    modulus: u64,
    comps: Vec<CharComponent>,
}

fn dlog_table(p: u64, g: u64) -> Vec<u64> {
    let mut table = vec![u64::MAX; p as usize];
    let mut x = 1u64;
    for j in 0..p - 1 {
        table[x as usize] = j;
        x = mul_mod(x, g, p);
    }
    table
}

fn split_modulus(m: u64) -> Result<Vec<u64>, CharError> {
    if m >= 3 && m % 2 == 1 && is_prime(m) {
        return Ok(vec![m]);
    }
    for p in (3..m).step_by(2) {
        if p * p > m {
            break;
        }
        if m % p == 0 {
            let q = m / p;
            if p != q && is_prime(p) && is_prime(q) && q % 2 == 1 {
                return Ok(vec![p, q]);
            }
            break;
        }
    }
    Err(CharError::BadModulus(m))
}

/// All `phi(m)` Dirichlet characters mod `m`, in a fixed deterministic
/// order (lexicographic in the generator-exponent tuple).
pub fn characters_mod(m: u64) -> Result<Vec<DirichletChar>, CharError> {
    let primes = split_modulus(m)?;
    let comps: Vec<CharComponent> = primes
        .iter()
        .map(|&p| {
            let g = primitive_root(p);
            CharComponent {
                prime: p,
                generator: g,
                group_order: p - 1,
                exp: 0,
                dlog: dlog_table(p, g),
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut exps = vec![0u64; comps.len()];
    loop {
        let mut c = comps.clone();
        for (comp, &e) in c.iter_mut().zip(&exps) {
            comp.exp = e;
        }
        out.push(DirichletChar {
            modulus: m,
            comps: c,
        });
        // odometer over exponent tuples
        let mut i = 0;
        loop {
            if i == exps.len() {
                return Ok(out);
            }
            exps[i] += 1;
            if exps[i] < comps[i].group_order {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

impl DirichletChar {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The order of the character in the dual group.
    pub fn order(&self) -> u64 {
        self.comps
            .iter()
            .map(|c| c.group_order / gcd(c.exp, c.group_order))
            .fold(1, |a, b| a / gcd(a, b) * b)
    }

    pub fn is_trivial(&self) -> bool {
        self.comps.iter().all(|c| c.exp == 0)
    }

    /// Minimal modulus the character factors through: the product of the
    /// primes whose component is nontrivial.
    pub fn conductor(&self) -> u64 {
        self.comps
            .iter()
            .filter(|c| c.exp != 0)
            .map(|c| c.prime)
            .product()
    }

    /// `chi(-1) = -1`?
    pub fn is_odd(&self) -> bool {
        let d = self.order();
        match self.value_exponent(self.modulus - 1) {
            Some(e) => {
                debug_assert!(e == 0 || 2 * e == d);
                e != 0
            }
            None => unreachable!("-1 is always a unit"),
        }
    }

    /// `chi(x) = zeta_d ^ (returned exponent)` with `d` the character
    /// order; `None` when `gcd(x, m) > 1` (the value is 0).
    pub fn value_exponent(&self, x: u64) -> Option<u64> {
        let d = self.order();
        let mut total = 0u64;
        for c in &self.comps {
            let j = c.dlog[(x % c.prime) as usize];
            if j == u64::MAX {
                return None;
            }
            if c.exp == 0 {
                continue;
            }
            let g = gcd(c.exp, c.group_order);
            let di = c.group_order / g; // component order
            let t = mul_mod(c.exp / g, j % di, di);
            total = (total + mul_mod(t, d / di, d)) % d;
        }
        Some(total)
    }

    /// Value exponent of the primitive character of conductor
    /// [`conductor`](Self::conductor) that induces this one; `None` when
    /// `gcd(x, conductor) > 1`.
    pub fn primitive_value_exponent(&self, x: u64) -> Option<u64> {
        let d = self.order();
        let mut total = 0u64;
        for c in self.comps.iter().filter(|c| c.exp != 0) {
            let j = c.dlog[(x % c.prime) as usize];
            if j == u64::MAX {
                return None;
            }
            let g = gcd(c.exp, c.group_order);
            let di = c.group_order / g;
            let t = mul_mod(c.exp / g, j % di, di);
            total = (total + mul_mod(t, d / di, d)) % d;
        }
        Some(total)
    }

    /// The character `chi^k`.
    pub fn power(&self, k: u64) -> DirichletChar {
        let mut comps = self.comps.clone();
        for c in comps.iter_mut() {
            c.exp = mul_mod(c.exp, k % c.group_order, c.group_order);
        }
        DirichletChar {
            modulus: self.modulus,
            comps,
        }
    }

    /// The inverse (= conjugate) character.
    pub fn inverse(&self) -> DirichletChar {
        let mut comps = self.comps.clone();
        for c in comps.iter_mut() {
            c.exp = (c.group_order - c.exp) % c.group_order;
        }
        DirichletChar {
            modulus: self.modulus,
            comps,
        }
    }

    /// Generator exponents, the character's identity within its modulus.
    pub fn exponents(&self) -> Vec<u64> {
        self.comps.iter().map(|c| c.exp).collect()
    }
}

/// The product character `chi * psi` mod `p*q` of a character mod `p` and
/// a character mod `q` for distinct primes.
pub fn product_char(chi: &DirichletChar, psi: &DirichletChar) -> DirichletChar {
    assert_eq!(chi.comps.len(), 1);
    assert_eq!(psi.comps.len(), 1);
    assert_ne!(chi.modulus, psi.modulus);
    let mut comps = vec![chi.comps[0].clone(), psi.comps[0].clone()];
    comps.sort_by_key(|c| c.prime);
    DirichletChar {
        modulus: chi.modulus * psi.modulus,
        comps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_orders() {
        let chars = characters_mod(5).unwrap();
        assert_eq!(chars.len(), 4);
        let mut orders: Vec<u64> = chars.iter().map(|c| c.order()).collect();
        orders.sort();
        assert_eq!(orders, [1, 2, 4, 4]);
        assert_eq!(chars.iter().filter(|c| c.is_odd()).count(), 2);

        assert_eq!(characters_mod(15).unwrap().len(), 8);

        let chars = characters_mod(3).unwrap();
        assert_eq!(chars.len(), 2);
        assert!(chars[0].is_trivial() && !chars[0].is_odd());
        assert!(chars[1].order() == 2 && chars[1].is_odd());

        assert!(characters_mod(9).is_err());
        assert!(characters_mod(10).is_err());
        assert!(characters_mod(2).is_err());
    }

    #[test]
    fn homomorphism_property() {
        for m in [7u64, 15, 33] {
            for chi in characters_mod(m).unwrap() {
                let d = chi.order();
                for x in 1..m {
                    for y in 1..m {
                        let vx = chi.value_exponent(x);
                        let vy = chi.value_exponent(y);
                        let vxy = chi.value_exponent(x * y % m);
                        match (vx, vy) {
                            (Some(a), Some(b)) => {
                                assert_eq!(vxy, Some((a + b) % d))
                            }
                            _ => assert_eq!(vxy, None),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conductors() {
        let chars = characters_mod(15).unwrap();
        for chi in &chars {
            let f = chi.conductor();
            assert!(f == 1 || f == 3 || f == 5 || f == 15);
            if chi.is_trivial() {
                assert_eq!(f, 1);
            }
            // the character factors through its conductor: equal values on
            // arguments congruent mod f (both units mod m)
            for x in 1..15u64 {
                for y in 1..15u64 {
                    if x % f == y % f
                        && gcd(x, 15) == 1
                        && gcd(y, 15) == 1
                    {
                        assert_eq!(chi.value_exponent(x), chi.value_exponent(y));
                    }
                }
            }
        }
        // minimality: no proper-divisor modulus works for a conductor-15 char
        let full = chars
            .iter()
            .find(|c| c.conductor() == 15)
            .expect("a conductor-15 character exists");
        let mut violates_3 = false;
        for x in 1..15u64 {
            for y in 1..15u64 {
                if x % 3 == y % 3 && gcd(x * y, 15) == 1 {
                    violates_3 |=
                        full.value_exponent(x) != full.value_exponent(y);
                }
            }
        }
        assert!(violates_3, "conductor must be minimal");
    }

    #[test]
    fn orthogonality() {
        // sum over a of chi(a) = 0 for nontrivial chi, as exact cyclotomics
        for m in [5u64, 7, 15, 21, 33] {
            for chi in characters_mod(m).unwrap() {
                if chi.is_trivial() {
                    continue;
                }
                let d = chi.order();
                let f = cyclotomic::CycloField::new(d);
                let mut acc = f.zero();
                for a in 1..m {
                    if let Some(e) = chi.value_exponent(a) {
                        acc = f.add(&acc, &f.zeta_pow(e));
                    }
                }
                assert!(f.is_zero(&acc), "m={m} chi={:?}", chi.exponents());
            }
        }
    }

    #[test]
    fn powers_and_inverse() {
        let chars = characters_mod(7).unwrap();
        let gen_char = chars
            .iter()
            .find(|c| c.order() == 6)
            .expect("cyclic dual group");
        assert!(gen_char.power(6).is_trivial());
        assert_eq!(gen_char.power(5), gen_char.inverse());
        for x in 1..7 {
            let e = gen_char.value_exponent(x).unwrap();
            let ei = gen_char.inverse().value_exponent(x).unwrap();
            assert_eq!((e + ei) % 6, 0);
        }
    }

    #[test]
    fn product_characters() {
        let c3 = characters_mod(3).unwrap();
        let c5 = characters_mod(5).unwrap();
        let prod = product_char(&c3[1], &c5[1]);
        assert_eq!(prod.modulus(), 15);
        assert_eq!(prod.conductor(), 15);
        for x in 1..15u64 {
            if gcd(x, 15) > 1 {
                continue;
            }
            let d = prod.order();
            let e3 = c3[1].value_exponent(x % 3).unwrap();
            let e5 = c5[1].value_exponent(x % 5).unwrap();
            let combined = (e3 * (d / c3[1].order()) + e5 * (d / c5[1].order())) % d;
            assert_eq!(prod.value_exponent(x), Some(combined));
        }
    }
}
