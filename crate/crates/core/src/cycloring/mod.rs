//! Arithmetic in the Galois ring `Z[zeta_p]/(q) = F_q[X]/(Phi_p(X))`:
//! ring operations, the Galois action, trace and norm, the unit `gamma`,
//! and the inverse-basis determinant with its resolvent identity.

mod ext;
mod resolvent;

pub use ext::FqExt;
pub use resolvent::{
    resolvent_bernoulli_check, resolvent_bernoulli_report, ResolventCheck,
};

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::ntcore::{inv_mod, mul_mod, mult_order, PrimePair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("elements live in different rings")]
    RingMismatch,
    #[error("element is not a unit; gcd with Phi_p has degree {gcd_degree}")]
    NotAUnit { gcd_degree: usize },
    #[error("galois exponent must be nonzero mod p")]
    BadGaloisExponent,
    #[error("p = 1 mod q: (p-1) has no inverse mod q")]
    NoGammaExponent,
    #[error("m*(p-1) != 1 mod q")]
    BadGammaExponent,
}

/// An element of `F_q[X]/(Phi_p(X))` in canonical form: a coefficient
/// vector of length `p-1` over the power basis `{1, zeta, ..., zeta^(p-2)}`
/// with all entries reduced mod `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloElem {
    p: u64,
    q: u64,
    coeffs: Vec<u64>,
}

impl CycloElem {
    /// Element from coefficients of an arbitrary-degree polynomial in zeta;
    /// exponents are taken mod p and the result reduced mod Phi_p.
    pub fn from_poly(p: u64, q: u64, poly: &[i64]) -> CycloElem {
        let mut cyc = vec![0u64; p as usize];
        for (i, &c) in poly.iter().enumerate() {
            let idx = i % p as usize;
            let c = (c as i128).rem_euclid(q as i128) as u64;
            cyc[idx] = (cyc[idx] + c) % q;
        }
        Self::from_cyclic(p, q, cyc)
    }

    /// Canonical reduction of a length-p vector of coefficients over
    /// `{1, zeta, ..., zeta^(p-1)}`, using
    /// `zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))`.
    pub fn from_cyclic(p: u64, q: u64, mut cyc: Vec<u64>) -> CycloElem {
        debug_assert_eq!(cyc.len(), p as usize);
        let top = cyc.pop().unwrap() % q;
        for c in cyc.iter_mut() {
            *c = (*c % q + q - top) % q;
        }
        CycloElem { p, q, coeffs: cyc }
    }

    pub fn zero(p: u64, q: u64) -> CycloElem {
        CycloElem {
            p,
            q,
            coeffs: vec![0; (p - 1) as usize],
        }
    }

    pub fn one(p: u64, q: u64) -> CycloElem {
        Self::scalar(p, q, 1)
    }

    pub fn scalar(p: u64, q: u64, c: u64) -> CycloElem {
        let mut coeffs = vec![0; (p - 1) as usize];
        coeffs[0] = c % q;
        CycloElem { p, q, coeffs }
    }

    /// `zeta^k` for any integer exponent (taken mod p).
    pub fn zeta_pow(p: u64, q: u64, k: i64) -> CycloElem {
        let idx = (k as i128).rem_euclid(p as i128) as usize;
        let mut cyc = vec![0u64; p as usize];
        cyc[idx] = 1;
        Self::from_cyclic(p, q, cyc)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Canonical coefficients over `{1, zeta, ..., zeta^(p-2)}`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    fn check(&self, other: &CycloElem) -> Result<(), RingError> {
        if self.p != other.p || self.q != other.q {
            return Err(RingError::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &CycloElem) -> Result<CycloElem, RingError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % self.q)
            .collect();
        Ok(CycloElem {
            p: self.p,
            q: self.q,
            coeffs,
        })
    }

    pub fn sub(&self, other: &CycloElem) -> Result<CycloElem, RingError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + self.q - b) % self.q)
            .collect();
        Ok(CycloElem {
            p: self.p,
            q: self.q,
            coeffs,
        })
    }

    pub fn neg(&self) -> CycloElem {
        let coeffs = self.coeffs.iter().map(|&a| (self.q - a) % self.q).collect();
        CycloElem {
            p: self.p,
            q: self.q,
            coeffs,
        }
    }

    pub fn mul(&self, other: &CycloElem) -> Result<CycloElem, RingError> {
        self.check(other)?;
        let p = self.p as usize;
        // cyclic convolution mod X^p - 1, then Phi_p reduction
        let mut cyc = vec![0u64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = (i + j) % p;
                cyc[k] = (cyc[k] + mul_mod(a, b, self.q)) % self.q;
            }
        }
        Ok(CycloElem::from_cyclic(self.p, self.q, cyc))
    }

    pub fn scale(&self, c: u64) -> CycloElem {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| mul_mod(a, c % self.q, self.q))
            .collect();
        CycloElem {
            p: self.p,
            q: self.q,
            coeffs,
        }
    }

    pub fn pow(&self, mut e: u64) -> CycloElem {
        let mut base = self.clone();
        let mut acc = CycloElem::one(self.p, self.q);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `F_q[X]` against `Phi_p(X)`.
    pub fn inverse(&self) -> Result<CycloElem, RingError> {
        let q = self.q;
        // r0 = Phi_p = 1 + X + ... + X^(p-1), r1 = self
        let mut r0 = vec![1u64; self.p as usize];
        let mut r1 = self.coeffs.clone();
        let mut s0 = vec![0u64];
        let mut s1 = vec![1u64];
        trim(&mut r0);
        trim(&mut r1);
        while !r1.is_empty() {
            let (quot, rem) = poly_divmod(&r0, &r1, q);
            r0 = r1;
            r1 = rem;
            let t = poly_sub(&s0, &poly_mul(&quot, &s1, q), q);
            s0 = s1;
            s1 = t;
        }
        if r0.len() != 1 {
            return Err(RingError::NotAUnit {
                gcd_degree: r0.len() - 1,
            });
        }
        let scale = inv_mod(r0[0], q);
        let mut coeffs: Vec<u64> =
            s0.iter().map(|&c| mul_mod(c, scale, q)).collect();
        coeffs.resize((self.p - 1) as usize, 0);
        Ok(CycloElem {
            p: self.p,
            q,
            coeffs,
        })
    }

    /// The automorphism `zeta -> zeta^c` for `c` nonzero mod p.
    pub fn galois(&self, c: u64) -> Result<CycloElem, RingError> {
        if c % self.p == 0 {
            return Err(RingError::BadGaloisExponent);
        }
        let p = self.p as usize;
        let mut cyc = vec![0u64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let k = (i as u64 * c % self.p) as usize;
            cyc[k] = (cyc[k] + a) % self.q;
        }
        Ok(CycloElem::from_cyclic(self.p, self.q, cyc))
    }

    /// Coefficients `b_1, ..., b_(p-1)` over the alternative basis
    /// `{zeta, zeta^2, ..., zeta^(p-1)}`, converted exactly from the
    /// canonical power basis via `1 = -(zeta + ... + zeta^(p-1))`.
    pub fn omega_coeffs(&self) -> Vec<u64> {
        let a0 = self.coeffs[0];
        let mut out: Vec<u64> = self.coeffs[1..]
            .iter()
            .map(|&a| (a + self.q - a0) % self.q)
            .collect();
        out.push((self.q - a0) % self.q);
        out
    }

    /// Inverse conversion of [`omega_coeffs`](Self::omega_coeffs).
    pub fn from_omega_coeffs(p: u64, q: u64, b: &[u64]) -> CycloElem {
        debug_assert_eq!(b.len(), (p - 1) as usize);
        let mut cyc = vec![0u64; p as usize];
        cyc[1..].copy_from_slice(b);
        for c in cyc.iter_mut() {
            *c %= q;
        }
        Self::from_cyclic(p, q, cyc)
    }

    /// Is the element anti-invariant under complex conjugation
    /// (`zeta -> zeta^(-1)` sends it to its negative)?
    pub fn is_anti_invariant(&self) -> bool {
        self.galois(self.p - 1).unwrap() == self.neg()
    }

    fn rational_part(&self, label: &str) -> u64 {
        for &c in &self.coeffs[1..] {
            assert_eq!(c, 0, "{label} is not rational: reduction bug");
        }
        self.coeffs[0]
    }

    /// `Tr(a) = sum over all Galois conjugates`, asserted rational.
    pub fn trace(&self) -> u64 {
        let mut acc = CycloElem::zero(self.p, self.q);
        for c in 1..self.p {
            acc = acc.add(&self.galois(c).unwrap()).unwrap();
        }
        acc.rational_part("trace")
    }

    /// `N(a) = product over all Galois conjugates`, asserted rational.
    pub fn norm(&self) -> u64 {
        let mut acc = CycloElem::one(self.p, self.q);
        for c in 1..self.p {
            acc = acc.mul(&self.galois(c).unwrap()).unwrap();
        }
        acc.rational_part("norm")
    }
}

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn poly_sub(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + q - y) % q;
    }
    trim(&mut out);
    out
}

pub(crate) fn poly_mul(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, q)) % q;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn poly_divmod(a: &[u64], b: &[u64], q: u64) -> (Vec<u64>, Vec<u64>) {
    debug_assert!(!b.is_empty());
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - b.len() + 1];
    let lead_inv = inv_mod(*b.last().unwrap(), q);
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = mul_mod(*rem.last().unwrap(), lead_inv, q);
        quot[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            rem[shift + i] = (rem[shift + i] + q - mul_mod(c, bc, q)) % q;
        }
        trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    trim(&mut quot);
    (quot, rem)
}

/// Smallest primitive root modulo an odd prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    (2..p)
        .find(|&g| mult_order(g, p) == p - 1)
        .expect("every prime has a primitive root")
}

/// The unit `gamma = ((1 - zeta)^(p-1) / p)^m` with `m*(p-1) = 1 mod q`.
pub fn gamma_unit(pair: &PrimePair, m: u64) -> Result<CycloElem, RingError> {
    let (p, q) = (pair.p(), pair.q());
    if mul_mod(m % q, (p - 1) % q, q) != 1 {
        return Err(if (p - 1) % q == 0 {
            RingError::NoGammaExponent
        } else {
            RingError::BadGammaExponent
        });
    }
    let one_minus_zeta = CycloElem::from_poly(p, q, &[1, -1]);
    let base = one_minus_zeta.pow(p - 1).scale(inv_mod(p % q, q));
    Ok(base.pow(m))
}

/// The exponent `m` with `m*(p-1) = 1 mod q`, if it exists.
pub fn gamma_exponent(pair: &PrimePair) -> Result<u64, RingError> {
    if (pair.p() - 1) % pair.q() == 0 {
        return Err(RingError::NoGammaExponent);
    }
    Ok(inv_mod((pair.p() - 1) % pair.q(), pair.q()))
}

/// The circulant sequence `sigma^k(1/(1-zeta))`, `k = 0..p-2`, for `sigma`
/// the automorphism `zeta -> zeta^g` with `g` the smallest primitive root.
#[derive(Debug, Clone)]
pub struct ResolventMatrix {
    pub p: u64,
    pub q: u64,
    pub generator: u64,
    pub powers: Vec<CycloElem>,
}

impl ResolventMatrix {
    /// Entry `(i, j)` of the matrix `A = (sigma^(i+j)(1/(1-zeta)))`,
    /// depending only on `(i + j) mod (p-1)`.
    pub fn entry(&self, i: usize, j: usize) -> &CycloElem {
        &self.powers[(i + j) % self.powers.len()]
    }
}

pub fn inverse_basis_matrix(pair: &PrimePair) -> ResolventMatrix {
    let (p, q) = (pair.p(), pair.q());
    let g = primitive_root(p);
    let base = CycloElem::from_poly(p, q, &[1, -1])
        .inverse()
        .expect("1 - zeta is a unit mod q since its norm is p != q");
    let mut powers = Vec::with_capacity((p - 1) as usize);
    let mut c = 1u64;
    for _ in 0..p - 1 {
        // sigma^k(1/(1-zeta)) = 1/(1-zeta^(g^k))
        powers.push(base.galois(c).unwrap());
        c = mul_mod(c, g, p);
    }
    ResolventMatrix {
        p,
        q,
        generator: g,
        powers,
    }
}

/// Determinant of the full coefficient matrix of `1/(1 - zeta^c)`,
/// `c = 1..p-1`, in the power basis. For `p >= 5` this is always 0:
/// `1/(1-z) + 1/(1-1/z) = 1` forces the linear dependency
/// `gamma_1 + gamma_(-1) - gamma_c - gamma_(-c) = 0`, so the full family
/// never spans. The meaningful invertibility statement lives on the
/// minus part; see [`inverse_basis_invertible`].
pub fn full_basis_det(pair: &PrimePair) -> u64 {
    let m = inverse_basis_matrix(pair);
    let rows: Vec<Vec<u64>> =
        m.powers.iter().map(|e| e.coeffs().to_vec()).collect();
    det_mod(rows, pair.q())
}

/// Do the anti-invariant projections `gamma_c - gamma_(-c)`,
/// `c = 1..(p-1)/2`, span the minus part of the ring? The determinant of
/// this system factors over the odd characters psi as a unit times
/// `B_(1,psi)`, so it is nonzero precisely when `q` does not divide the
/// minus class number `h_p^-`.
pub fn inverse_basis_invertible(pair: &PrimePair) -> bool {
    let (p, q) = (pair.p(), pair.q());
    let base = CycloElem::from_poly(p, q, &[1, -1])
        .inverse()
        .expect("1 - zeta is a unit mod q since its norm is p != q");
    let half = ((p - 1) / 2) as usize;
    let mut rows = Vec::with_capacity(half);
    for c in 1..=half as u64 {
        let diff = base
            .galois(c)
            .unwrap()
            .sub(&base.galois(p - c).unwrap())
            .unwrap();
        debug_assert!(diff.is_anti_invariant());
        // anti-invariant: b_(p-k) = -b_k, so b_1..b_((p-1)/2) suffice
        let b = diff.omega_coeffs();
        rows.push(b[..half].to_vec());
    }
    det_mod(rows, q) != 0
}

/// Determinant of a square matrix over `F_q` by Gaussian elimination.
pub fn det_mod(mut rows: Vec<Vec<u64>>, q: u64) -> u64 {
    let n = rows.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| rows[r][col] % q != 0) else {
            return 0;
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = (q - det) % q;
        }
        let inv = inv_mod(rows[col][col] % q, q);
        det = mul_mod(det, rows[col][col] % q, q);
        for r in col + 1..n {
            let factor = mul_mod(rows[r][col] % q, inv, q);
            if factor == 0 {
                continue;
            }
            for c in col..n {
                let sub = mul_mod(factor, rows[col][c] % q, q);
                rows[r][c] = (rows[r][c] % q + q - sub) % q;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ntcore::is_prime;
    use proptest::prelude::*;

    fn pairs_grid(bound: u64) -> Vec<PrimePair> {
        let primes: Vec<u64> =
            (3..=bound).filter(|&n| is_prime(n)).collect();
        let mut out = Vec::new();
        for &p in &primes {
            for &q in &primes {
                if p != q {
                    out.push(PrimePair::new(p, q).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn canonical_reduction() {
        // zeta^(p-1) = -(1 + ... + zeta^(p-2))
        let e = CycloElem::zeta_pow(5, 7, 4);
        assert_eq!(e.coeffs(), [6, 6, 6, 6]);
        assert_eq!(CycloElem::zeta_pow(5, 7, 5), CycloElem::one(5, 7));
        assert_eq!(CycloElem::zeta_pow(5, 7, -1), CycloElem::zeta_pow(5, 7, 4));
    }

    #[test]
    fn mul_zeta_inverse_powers() {
        for (p, q) in [(5u64, 7u64), (7, 5), (11, 3), (13, 19)] {
            for k in 1..p as i64 {
                let a = CycloElem::zeta_pow(p, q, k);
                let b = CycloElem::zeta_pow(p, q, p as i64 - k);
                assert_eq!(a.mul(&b).unwrap(), CycloElem::one(p, q));
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let one = CycloElem::one(5, 7);
        assert_eq!(one.inverse().unwrap(), one);
        let a = CycloElem::from_poly(5, 7, &[1, -1]); // 1 - zeta
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), one);
        // zero is not a unit
        assert!(matches!(
            CycloElem::zero(5, 7).inverse(),
            Err(RingError::NotAUnit { .. })
        ));
    }

    #[test]
    fn galois_composition() {
        let p = 13u64;
        let a = CycloElem::from_poly(p, 5, &[3, 1, 4, 1, 5, 9, 2, 6]);
        assert_eq!(a.galois(1).unwrap(), a);
        let half = (p + 1) / 2;
        assert_eq!(
            a.galois(2).unwrap().galois(half).unwrap(),
            a,
            "2 * (p+1)/2 = 1 mod p"
        );
        for c in 1..p {
            for d in 1..p {
                let lhs = a.galois(c).unwrap().galois(d).unwrap();
                let rhs = a.galois(c * d % p).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert!(a.galois(0).is_err());
        assert!(a.galois(p).is_err());
    }

    #[test]
    fn trace_norm_basics() {
        for (p, q) in [(5u64, 7u64), (7, 5), (11, 3), (19, 13)] {
            assert_eq!(CycloElem::one(p, q).trace(), (p - 1) % q);
            assert_eq!(CycloElem::zeta_pow(p, q, 1).trace(), q - 1);
            let omz = CycloElem::from_poly(p, q, &[1, -1]);
            assert_eq!(omz.norm(), p % q, "norm(1 - zeta) = Phi_p(1) = p");
        }
    }

    #[test]
    fn gamma_unit_examples() {
        // (p=5, q=3): m = 1 since 1*4 = 1 mod 3
        let pair = PrimePair::new(5, 3).unwrap();
        assert_eq!(gamma_exponent(&pair).unwrap(), 1);
        let expect = CycloElem::from_poly(5, 3, &[1, -1])
            .pow(4)
            .scale(inv_mod(5 % 3, 3));
        assert_eq!(gamma_unit(&pair, 1).unwrap(), expect);

        let pair = PrimePair::new(5, 7).unwrap();
        let m = gamma_exponent(&pair).unwrap();
        let g = gamma_unit(&pair, m).unwrap();
        assert_ne!(g.norm(), 0, "gamma is a unit");
        assert!(gamma_unit(&pair, m + 1).is_err());

        // p = 1 mod q leaves no valid exponent
        let pair = PrimePair::new(11, 5).unwrap();
        assert!(matches!(
            gamma_exponent(&pair),
            Err(RingError::NoGammaExponent)
        ));
    }

    #[test]
    fn gamma_unit_norm_one() {
        // N(1-zeta) = p kills the p^(-m(p-1)) factor: norm(gamma) = 1
        for (p, q) in [(5u64, 7u64), (7, 5), (13, 7), (7, 11)] {
            let pair = PrimePair::new(p, q).unwrap();
            let m = gamma_exponent(&pair).unwrap();
            assert_eq!(gamma_unit(&pair, m).unwrap().norm(), 1, "p={p} q={q}");
        }
    }

    #[test]
    fn resolvent_matrix_circulant() {
        let pair = PrimePair::new(7, 5).unwrap();
        let m = inverse_basis_matrix(&pair);
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(m.entry(i, j), m.entry(j, i));
                assert_eq!(m.entry(i, j), &m.powers[(i + j) % 6]);
            }
        }
        // each power really is 1/(1 - zeta^(g^k))
        let mut c = 1u64;
        for k in 0..6usize {
            let direct = CycloElem::from_poly(7, 5, &[1])
                .sub(&CycloElem::zeta_pow(7, 5, c as i64))
                .unwrap()
                .inverse()
                .unwrap();
            assert_eq!(m.powers[k], direct);
            c = c * m.generator % 7;
        }
    }

    #[test]
    fn inverse_basis_examples() {
        // p != 1 mod q and q does not divide h_5^- = 1
        assert!(inverse_basis_invertible(&PrimePair::new(5, 7).unwrap()));
        assert!(inverse_basis_invertible(&PrimePair::new(7, 5).unwrap()));
        assert!(inverse_basis_invertible(&PrimePair::new(37, 23).unwrap()));
        // h_23^- = 3 and h_31^- = 9: the minus system degenerates mod 3
        assert!(!inverse_basis_invertible(&PrimePair::new(23, 3).unwrap()));
        assert!(!inverse_basis_invertible(&PrimePair::new(31, 3).unwrap()));
        // q = 1 mod p: compute and record, no claim
        let _ = inverse_basis_invertible(&PrimePair::new(5, 11).unwrap());
    }

    #[test]
    fn full_basis_always_degenerate() {
        // gamma_c + gamma_(-c) = 1 forces dependency for p >= 5
        for (p, q) in [(5u64, 7u64), (7, 5), (11, 3), (13, 7)] {
            assert_eq!(full_basis_det(&PrimePair::new(p, q).unwrap()), 0);
        }
        // p = 3 has only the pair (gamma_1, gamma_2); no dependency
        assert_ne!(full_basis_det(&PrimePair::new(3, 7).unwrap()), 0);
    }

    #[test]
    fn omega_coeffs_roundtrip() {
        for (p, q) in [(5u64, 7u64), (11, 13)] {
            for k in 0..p as i64 {
                let e = CycloElem::zeta_pow(p, q, k);
                let b = e.omega_coeffs();
                assert_eq!(CycloElem::from_omega_coeffs(p, q, &b), e);
            }
            let e = CycloElem::from_poly(p, q, &[3, 1, 4, 1]);
            assert_eq!(
                CycloElem::from_omega_coeffs(p, q, &e.omega_coeffs()),
                e
            );
        }
        // zeta^k has omega-basis coefficient 1 at position k
        let b = CycloElem::zeta_pow(7, 5, 3).omega_coeffs();
        assert_eq!(b, [0, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn det_mod_known() {
        assert_eq!(det_mod(vec![vec![1, 2], vec![3, 4]], 7), 5); // -2 mod 7
        assert_eq!(det_mod(vec![vec![1, 2], vec![2, 4]], 7), 0);
        assert_eq!(det_mod(vec![vec![0, 1], vec![1, 0]], 5), 4); // -1
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn ring_axioms(
            seed in prop::collection::vec(0i64..1000, 18),
            pair_ix in 0usize..4,
        ) {
            let (p, q) = [(5u64, 7u64), (7, 5), (11, 3), (13, 17)][pair_ix];
            let a = CycloElem::from_poly(p, q, &seed[0..6]);
            let b = CycloElem::from_poly(p, q, &seed[6..12]);
            let c = CycloElem::from_poly(p, q, &seed[12..18]);
            // commutativity, associativity, distributivity
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(a.sub(&b).unwrap().add(&b).unwrap(), a.clone());
        }

        #[test]
        fn galois_is_ring_automorphism(
            seed in prop::collection::vec(0i64..1000, 12),
            c in 1u64..11,
        ) {
            let (p, q) = (11u64, 7u64);
            let a = CycloElem::from_poly(p, q, &seed[0..6]);
            let b = CycloElem::from_poly(p, q, &seed[6..12]);
            prop_assert_eq!(
                a.mul(&b).unwrap().galois(c).unwrap(),
                a.galois(c).unwrap().mul(&b.galois(c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.add(&b).unwrap().galois(c).unwrap(),
                a.galois(c).unwrap().add(&b.galois(c).unwrap()).unwrap()
            );
            // trace and norm are Galois-invariant
            prop_assert_eq!(a.galois(c).unwrap().trace(), a.trace());
            prop_assert_eq!(a.galois(c).unwrap().norm(), a.norm());
        }

        #[test]
        fn inverse_roundtrip(seed in prop::collection::vec(0i64..1000, 6)) {
            let (p, q) = (7u64, 11u64);
            let a = CycloElem::from_poly(p, q, &seed);
            match a.inverse() {
                Ok(inv) => prop_assert_eq!(
                    a.mul(&inv).unwrap(), CycloElem::one(p, q)
                ),
                Err(RingError::NotAUnit { gcd_degree }) => {
                    prop_assert!(gcd_degree >= 1)
                }
                Err(e) => prop_assert!(false, "unexpected error {e:?}"),
            }
        }
    }

    #[test]
    fn norm_one_minus_zeta_grid() {
        for pair in pairs_grid(23) {
            let omz = CycloElem::from_poly(pair.p(), pair.q(), &[1, -1]);
            assert_eq!(omz.norm(), pair.p() % pair.q());
        }
    }
}
