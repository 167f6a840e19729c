//! Difference-operator calculus over `F_q`-valued sequences and the
//! exhaustive solver for the congruence system in the parameter
//! `t = -y/x mod q^2`:
//!
//! ```text
//! -(zeta^q - zeta^(-q)) phi(t)  =  sum_(k=1..q-1) (t^k - t^(2-k))/k * (zeta^k - zeta^(-k))
//! ```
//!
//! in `F_q[X]/(Phi_p(X))`, whose full solution set collapses to
//! `t in {0, 1, -1}` under the threshold regimes.

use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

use crate::cycloring::CycloElem;
use crate::ntcore::{fermat_quotient, mul_mod, pow_mod, PrimePair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TsysError {
    #[error("window of length {len} too short; need at least {need}")]
    WindowTooShort { len: usize, need: usize },
    #[error("t = 0 mod q: the Fermat quotient phi(t) is undefined")]
    TZero,
}

/// A finite window of an `F_q`-valued sequence, with its parameter `t`
/// and the index range `[start, start + len)` recorded; the difference
/// operators shrink the window from the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqSequence {
    q: u64,
    t: u64,
    start: i64,
    terms: Vec<u64>,
}

impl FqSequence {
    pub fn new(q: u64, t: u64, start: i64, terms: Vec<u64>) -> FqSequence {
        let terms = terms.into_iter().map(|a| a % q).collect();
        FqSequence {
            q,
            t: t % q,
            start,
            terms,
        }
    }

    /// The window as (first index, terms).
    pub fn window(&self) -> (i64, &[u64]) {
        (self.start, &self.terms)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|&a| a == 0)
    }

    fn shrunk(&self, by: usize, terms: Vec<u64>) -> FqSequence {
        FqSequence {
            q: self.q,
            t: self.t,
            start: self.start + by as i64,
            terms,
        }
    }

    fn need(&self, need: usize) -> Result<(), TsysError> {
        if self.terms.len() < need {
            return Err(TsysError::WindowTooShort {
                len: self.terms.len(),
                need,
            });
        }
        Ok(())
    }

    /// `theta_+(a_n) = a_n - t * a_(n-1)`; window shrinks by one.
    pub fn theta_plus(&self) -> Result<FqSequence, TsysError> {
        self.need(2)?;
        let out = self
            .terms
            .windows(2)
            .map(|w| (w[1] + self.q - mul_mod(self.t, w[0], self.q)) % self.q)
            .collect();
        Ok(self.shrunk(1, out))
    }

    /// `theta_-(a_n) = t * a_n - a_(n-1)`; window shrinks by one.
    pub fn theta_minus(&self) -> Result<FqSequence, TsysError> {
        self.need(2)?;
        let out = self
            .terms
            .windows(2)
            .map(|w| (mul_mod(self.t, w[1], self.q) + self.q - w[0]) % self.q)
            .collect();
        Ok(self.shrunk(1, out))
    }

    /// `Theta = theta_+ after theta_-`; window shrinks by two.
    pub fn theta_big(&self) -> Result<FqSequence, TsysError> {
        self.need(3)?;
        self.theta_minus()?.theta_plus()
    }
}

/// `phi` of the balanced lift of `t` into `(-q/2, q/2)`: the quotient
/// depends on the representative mod `q^2`, and the residue classes of
/// `x` and `y` are read off through signed representatives, so
/// `t = q - 1` stands for the integer `-1` (with `phi(-1) = 0`).
fn balanced_fermat_quotient(t: u64, q: u64) -> u64 {
    let lift = if 2 * t > q { t as i64 - q as i64 } else { t as i64 };
    fermat_quotient(lift, q).expect("t is a unit mod q").value
}

/// Both sides of the key congruence for one `(p, q, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PonderResidue {
    pub pair: PrimePair,
    pub t: u64,
    pub lhs: CycloElem,
    pub rhs: CycloElem,
}

/// Inverses `1..q-1` mod prime q, by the standard recurrence.
fn inverse_table(q: u64) -> Vec<u64> {
    let mut inv = vec![0u64; q as usize];
    if q > 1 {
        inv[1] = 1;
    }
    for k in 2..q {
        inv[k as usize] =
            mul_mod(q - q / k, inv[(q % k) as usize], q);
    }
    inv
}

pub fn ponder_residue(
    pair: &PrimePair,
    t: u64,
) -> Result<PonderResidue, TsysError> {
    let (p, q) = (pair.p(), pair.q());
    if t % q == 0 {
        return Err(TsysError::TZero);
    }
    let t = t % q;
    let phi = balanced_fermat_quotient(t, q);

    // lhs = -(zeta^q - zeta^(-q)) * phi(t)
    let zq = CycloElem::zeta_pow(p, q, q as i64);
    let zqb = CycloElem::zeta_pow(p, q, -(q as i64));
    let lhs = zq.sub(&zqb).unwrap().neg().scale(phi);

    // rhs accumulated over the length-p cyclic vector: each term touches
    // two coordinates, O(q + p) total
    let inv = inverse_table(q);
    let tinv = inv[t as usize];
    let t2 = mul_mod(t, t, q);
    let mut cyc = vec![0u64; p as usize];
    let mut tk = 1u64; // t^k
    let mut tmk = t2; // t^(2-k) = t^2 * t^(-k)
    for k in 1..q {
        tk = mul_mod(tk, t, q);
        tmk = mul_mod(tmk, tinv, q);
        let c = mul_mod((tk + q - tmk) % q, inv[k as usize], q);
        let i = (k % p) as usize;
        let j = ((p - k % p) % p) as usize;
        cyc[i] = (cyc[i] + c) % q;
        cyc[j] = (cyc[j] + q - c) % q;
    }
    let rhs = CycloElem::from_cyclic(p, q, cyc);
    Ok(PonderResidue {
        pair: *pair,
        t,
        lhs,
        rhs,
    })
}

pub fn ponder_holds(pair: &PrimePair, t: u64) -> Result<bool, TsysError> {
    let r = ponder_residue(pair, t)?;
    Ok(r.lhs == r.rhs)
}

/// The full solution set `{0} U {t in F_q^* : the congruence holds}`,
/// sorted ascending. `t = 0` encodes `q | x` and is adjoined by
/// convention.
pub fn solve_t(pair: &PrimePair) -> Vec<u64> {
    let mut out = vec![0u64];
    for t in 1..pair.q() {
        if ponder_holds(pair, t).unwrap() {
            out.push(t);
        }
    }
    out
}

/// The singular index: the representative of +-q mod p in (0, p/2).
pub fn nu(pair: &PrimePair) -> u64 {
    let r = pair.q() % pair.p();
    r.min(pair.p() - r)
}

/// Per-index data of the linear system obtained by reading the key
/// congruence off the basis `{zeta, ..., zeta^(p-1)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsysCoefficients {
    pub pair: PrimePair,
    pub t: u64,
    pub nu: u64,
    /// +1 when q = nu mod p, -1 when q = -nu mod p.
    pub sign_positive: bool,
    /// Direct right-hand sums for `k = 1..(p-1)/2` (index k-1).
    pub sums: Vec<u64>,
    /// `phi(t)`.
    pub phi: u64,
}

impl LsysCoefficients {
    /// Does equation `k` of the system hold?
    pub fn equation_holds(&self, k: u64) -> bool {
        let q = self.pair.q();
        let delta = if k == self.nu {
            let s = if self.sign_positive { self.phi } else { (q - self.phi) % q };
            (q - s) % q // the -delta * phi(t) left-hand side
        } else {
            0
        };
        self.sums[(k - 1) as usize] == delta
    }
}

/// Direct evaluation of the grouped sums
/// `sum_(jp+k<q) (t^(k+pj) - t^(2-(k+pj)))/(pj+k)
///  - sum_(jp+p-k<q) (t^(p-k+pj) - t^(2-(p-k+pj)))/(p-k+jp)`
/// for `k = 1..(p-1)/2`, cross-checked against coefficient extraction
/// from [`ponder_residue`].
pub fn lsys_coefficients(
    pair: &PrimePair,
    t: u64,
) -> Result<LsysCoefficients, TsysError> {
    let (p, q) = (pair.p(), pair.q());
    if t % q == 0 {
        return Err(TsysError::TZero);
    }
    let t = t % q;
    let inv = inverse_table(q);
    let tinv = inv[t as usize];
    let t2 = mul_mod(t, t, q);
    let term = |m: u64| -> u64 {
        // (t^m - t^(2-m)) / m
        let tm = pow_mod(t, m, q);
        let tmm = mul_mod(t2, pow_mod(tinv, m, q), q);
        mul_mod((tm + q - tmm) % q, inv[(m % q) as usize], q)
    };
    let half = (p - 1) / 2;
    let mut sums = Vec::with_capacity(half as usize);
    for k in 1..=half {
        let mut s = 0u64;
        let mut m = k;
        while m < q {
            s = (s + term(m)) % q;
            m += p;
        }
        let mut m = p - k;
        while m < q {
            s = (s + q - term(m)) % q;
            m += p;
        }
        sums.push(s);
    }

    let nu_val = nu(pair);
    let sign_positive = q % p == nu_val;
    let phi = balanced_fermat_quotient(t, q);

    // second path: coefficients of (zeta^k - zeta^(-k)) in rhs - lhs of
    // the key congruence, read off the omega basis
    let r = ponder_residue(pair, t)?;
    let diff = r.rhs.sub(&r.lhs).unwrap();
    debug_assert!(diff.is_anti_invariant());
    let b = diff.omega_coeffs();
    for k in 1..=half {
        assert_eq!(
            (b[(k - 1) as usize] + b[(p - k - 1) as usize]) % q,
            0,
            "anti-invariance of the residue difference"
        );
        // b_k = sums_k + s * delta_(nu,k) * phi(t)
        let delta = if k == nu_val {
            if sign_positive { phi } else { (q - phi) % q }
        } else {
            0
        };
        assert_eq!(
            b[(k - 1) as usize],
            (sums[(k - 1) as usize] + delta) % q,
            "two-path mismatch at k={k} (p={p}, q={q}, t={t})"
        );
    }

    Ok(LsysCoefficients {
        pair: *pair,
        t,
        nu: nu_val,
        sign_positive,
        sums,
        phi,
    })
}

/// Which proposition's hypotheses cover the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `p > q`.
    PGtQ,
    /// `p < q`, `nu > p/4`, `16q < p^2`.
    NuHigh,
    /// `p < q`, `nu < p/4`, `16q < p(p-20)`.
    NuLow,
    /// No threshold applies.
    Outside,
}

pub fn threshold_regime(pair: &PrimePair) -> Regime {
    let (p, q) = (pair.p() as i128, pair.q() as i128);
    if p > q {
        return Regime::PGtQ;
    }
    let nu_val = nu(pair) as i128;
    if 4 * nu_val > p && 16 * q < p * p {
        Regime::NuHigh
    } else if 4 * nu_val < p && 16 * q < p * (p - 20) {
        Regime::NuLow
    } else {
        Regime::Outside
    }
}
