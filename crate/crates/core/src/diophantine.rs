//! Desk-scale equation work: the Euler gcd lemma, Barlow–Abel case
//! classification, the non-coprime lifting construction, conversion
//! between the rational Catalan equation `X^p + Y^q = 1` and the
//! integer form `x^p + y^q = z^(pq)`, exhaustive height-bounded search
//! for `x^p + y^p = z^q`, and the explicit lower-bound functions
//! (reported as base-10 logarithms in fixed-point decimals).

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::ntcore::PrimePair;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DioError {
    #[error("x and y must be coprime")]
    NotCoprime,
    #[error("x + y must be nonzero")]
    ZeroSum,
    #[error("x^p + y^p must be nonzero")]
    ZeroPowerSum,
    #[error("n must be odd and > 1")]
    BadExponent,
    #[error("the triple does not satisfy its equation")]
    EquationFails,
    #[error("triple must be primitive and non-trivial")]
    NonPrimitive,
    #[error("fraction {0} is not in lowest terms")]
    NotLowestTerms(String),
    #[error("c^p != d^q: not a valid rational solution denominator pair")]
    DenominatorMismatch,
    #[error("X^p + Y^q != 1")]
    NotOnCurve,
    #[error("k must be 2 or 3")]
    BadValuationCase,
}

// ---------------------------------------------------------------------------
// elementary helpers
// ---------------------------------------------------------------------------

/// Exact `p`-adic valuation of a nonzero integer.
pub fn big_valuation(n: &BigInt, p: u64) -> u64 {
    assert!(!n.is_zero());
    let p = BigInt::from(p);
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (d, r) = m.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        m = d;
        v += 1;
    }
}

/// The exact signed `q`-th root of `n` when `n` is a perfect `q`-th
/// power (`q` odd, so negative inputs are legal).
pub fn perfect_qth_root(n: &BigInt, q: u64) -> Option<BigInt> {
    let root = BigInt::from_biguint(n.sign(), n.magnitude().nth_root(q as u32));
    if root.pow(q as u32) == *n {
        Some(root)
    } else {
        None
    }
}

/// `gcd((x^n + y^n)/(x + y), x + y)`; the result divides `n` (asserted).
pub fn euler_gcd(x: &BigInt, y: &BigInt, n: u64) -> Result<BigInt, DioError> {
    if n < 3 || n % 2 == 0 {
        return Err(DioError::BadExponent);
    }
    if !x.gcd(y).is_one() {
        return Err(DioError::NotCoprime);
    }
    let s = x + y;
    if s.is_zero() {
        return Err(DioError::ZeroSum);
    }
    let total = x.pow(n as u32) + y.pow(n as u32);
    let (cofactor, rem) = total.div_rem(&s);
    debug_assert!(rem.is_zero(), "x + y divides x^n + y^n for odd n");
    let d = cofactor.gcd(&s);
    assert!(
        (BigInt::from(n) % &d).is_zero(),
        "gcd of the cofactor with x + y must divide n"
    );
    Ok(d)
}

// ---------------------------------------------------------------------------
// solution triples and case classification
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquationKind {
    /// `x^p + y^p = z^q`
    Fc,
    /// `x^p + y^q = z^(pq)`
    Homfc,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionTriple {
    x: BigInt,
    y: BigInt,
    z: BigInt,
    pair: PrimePair,
    kind: EquationKind,
}

impl SolutionTriple {
    /// Builds a triple after verifying its equation exactly.
    pub fn new(
        x: BigInt,
        y: BigInt,
        z: BigInt,
        pair: PrimePair,
        kind: EquationKind,
    ) -> Result<SolutionTriple, DioError> {
        let (p, q) = (pair.p() as u32, pair.q() as u32);
        let holds = match kind {
            EquationKind::Fc => x.pow(p) + y.pow(p) == z.pow(q),
            EquationKind::Homfc => x.pow(p) + y.pow(q) == z.pow(p * q),
        };
        if !holds {
            return Err(DioError::EquationFails);
        }
        Ok(SolutionTriple { x, y, z, pair, kind })
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }
    pub fn y(&self) -> &BigInt {
        &self.y
    }
    pub fn z(&self) -> &BigInt {
        &self.z
    }
    pub fn pair(&self) -> &PrimePair {
        &self.pair
    }
    pub fn kind(&self) -> EquationKind {
        self.kind
    }

    pub fn is_primitive(&self) -> bool {
        self.x.gcd(&self.y).gcd(&self.z).is_one()
    }

    /// `xyz = 0`, or the all-units pattern `|x| = |y| = |z| = 1`.
    pub fn is_trivial(&self) -> bool {
        let one = BigInt::one();
        (self.x.is_zero() || self.y.is_zero() || self.z.is_zero())
            || (self.x.abs() == one && self.y.abs() == one && self.z.abs() == one)
    }
}

/// Case tag `(e, f)`: `e = 1` iff `p | z`; `f` is the element of
/// `{-1, 0, 1}` with `x + f*y = 0 mod q^2` (checked in the order
/// `0, 1, -1`; `None` when no candidate matches).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CaseTag {
    pub e: u8,
    pub f: Option<i8>,
}

/// Does `(x, y)` satisfy the coprime-case split: `x + y` and
/// `(x^p + y^p)/(x + y)` both perfect `q`-th powers?
pub fn case_i_shape(x: &BigInt, y: &BigInt, pair: &PrimePair) -> bool {
    let s = x + y;
    if s.is_zero() {
        return false;
    }
    let cofactor = (x.pow(pair.p() as u32) + y.pow(pair.p() as u32)) / &s;
    perfect_qth_root(&s, pair.q()).is_some()
        && perfect_qth_root(&cofactor, pair.q()).is_some()
}

/// Does `(x, y)` satisfy the `p | z` valuation pattern:
/// `v_p(x + y) = -1 mod q` and `v_p((x^p + y^p)/(x + y)) = 1`?
pub fn case_ii_valuations(x: &BigInt, y: &BigInt, pair: &PrimePair) -> bool {
    let (p, q) = (pair.p(), pair.q());
    let s = x + y;
    if s.is_zero() {
        return false;
    }
    let cofactor = (x.pow(p as u32) + y.pow(p as u32)) / &s;
    if cofactor.is_zero() {
        return false;
    }
    big_valuation(&s, p) % q == q - 1 && big_valuation(&cofactor, p) == 1
}

pub fn classify_case(sol: &SolutionTriple) -> Result<CaseTag, DioError> {
    assert_eq!(sol.kind, EquationKind::Fc, "classification applies to x^p + y^p = z^q");
    if !sol.is_primitive() || sol.is_trivial() {
        return Err(DioError::NonPrimitive);
    }
    let (p, q) = (sol.pair.p(), sol.pair.q());
    let e = if (&sol.z % BigInt::from(p)).is_zero() { 1 } else { 0 };
    let shape_ok = if e == 0 {
        case_i_shape(&sol.x, &sol.y, &sol.pair)
    } else {
        case_ii_valuations(&sol.x, &sol.y, &sol.pair)
    };
    assert!(shape_ok, "a primitive solution must satisfy the two-factor split");
    let q2 = BigInt::from(q * q);
    let f = [0i8, 1, -1]
        .into_iter()
        .find(|&f| ((&sol.x + BigInt::from(f) * &sol.y) % &q2).is_zero());
    Ok(CaseTag { e, f })
}

// ---------------------------------------------------------------------------
// non-coprime lifting
// ---------------------------------------------------------------------------

fn factor_u128(mut n: u128) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d as u64, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n as u64, 1));
    }
    out
}

/// The multiplier `D` with `(Dx)^p + (Dy)^p = z^q`, built prime by
/// prime: write `x^p + y^p = C * z0^q` with `C` `q`-th-power-free and
/// for each `l^n || C` take the minimal `a >= 0` with
/// `n + a*p = 0 mod q`. Returns `(D, z)`, verified exactly.
pub fn lift_noncoprime(
    x: i64,
    y: i64,
    pair: &PrimePair,
) -> Result<(BigInt, BigInt), DioError> {
    let (p, q) = (pair.p(), pair.q());
    let (bx, by) = (BigInt::from(x), BigInt::from(y));
    if !bx.gcd(&by).is_one() {
        return Err(DioError::NotCoprime);
    }
    let s = bx.pow(p as u32) + by.pow(p as u32);
    if s.is_zero() {
        return Err(DioError::ZeroPowerSum);
    }
    let mag = s
        .magnitude()
        .to_u128()
        .expect("lifting is a desk-scale construction on small inputs");
    let mut d = BigInt::one();
    for (l, n) in factor_u128(mag) {
        let m = n % q;
        if m == 0 {
            continue;
        }
        // minimal a with m + a*p = 0 mod q
        let a = (0..q)
            .find(|a| (m + a * p) % q == 0)
            .expect("p invertible mod q");
        d *= BigInt::from(l).pow(a as u32);
    }
    let lifted = d.pow(p as u32) * &s;
    let z = perfect_qth_root(&lifted, q).expect("the lift is a perfect q-th power");
    debug_assert_eq!((&d * &bx).pow(p as u32) + (&d * &by).pow(p as u32), z.pow(q as u32));
    Ok((d, z))
}

// ---------------------------------------------------------------------------
// rational <-> integer Catalan
// ---------------------------------------------------------------------------

/// From `X = a/c`, `Y = b/d` in lowest terms with `X^p + Y^q = 1`
/// (positive denominators) to an integer triple of `x^p + y^q = z^(pq)`.
pub fn rational_to_integer_catalan(
    a: &BigInt,
    c: &BigInt,
    b: &BigInt,
    d: &BigInt,
    pair: &PrimePair,
) -> Result<SolutionTriple, DioError> {
    use alloc::string::ToString;
    let (p, q) = (pair.p() as u32, pair.q() as u32);
    if c.sign() != Sign::Plus || !a.gcd(c).is_one() {
        return Err(DioError::NotLowestTerms(alloc::format!("{}/{}", a, c).to_string()));
    }
    if d.sign() != Sign::Plus || !b.gcd(d).is_one() {
        return Err(DioError::NotLowestTerms(alloc::format!("{}/{}", b, d).to_string()));
    }
    let (cp, dq) = (c.pow(p), d.pow(q));
    if cp != dq {
        return Err(DioError::DenominatorMismatch);
    }
    if a.pow(p) * &dq + b.pow(q) * &cp != &cp * &dq {
        return Err(DioError::NotOnCurve);
    }
    // c^p = d^q with gcd(p, q) = 1 forces c = u^q, d = u^p
    let u = perfect_qth_root(c, pair.q()).ok_or(DioError::DenominatorMismatch)?;
    debug_assert_eq!(u.pow(p), *d);
    SolutionTriple::new(a.clone(), b.clone(), u, *pair, EquationKind::Homfc)
}

/// Back to the rational curve: `(x/z^q, y/z^p)`.
pub fn integer_to_rational_catalan(
    sol: &SolutionTriple,
) -> Result<(BigRational, BigRational), DioError> {
    assert_eq!(sol.kind, EquationKind::Homfc);
    if sol.z.is_zero() {
        return Err(DioError::EquationFails);
    }
    let (p, q) = (sol.pair.p() as u32, sol.pair.q() as u32);
    Ok((
        BigRational::new(sol.x.clone(), sol.z.pow(q)),
        BigRational::new(sol.y.clone(), sol.z.pow(p)),
    ))
}

// ---------------------------------------------------------------------------
// height-bounded search
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub pair: PrimePair,
    pub height: u64,
    /// Primitive non-trivial triples, sorted by `(x, y, z)`.
    pub solutions: Vec<SolutionTriple>,
    /// Degenerate hits filtered out (e.g. `x = -y` giving `z = 0`).
    pub trivial_count: u64,
}

/// Exhaustive scan of one strip `y in [y_lo, y_hi]` of the search
/// rectangle `1 <= |x| <= |y| <= h`, coprime, both signs of `x`.
pub fn search_fc_strip(
    pair: &PrimePair,
    height: u64,
    y_lo: u64,
    y_hi: u64,
) -> SearchReport {
    let (p, q) = (pair.p() as u32, pair.q());
    let mut solutions = Vec::new();
    let mut trivial_count = 0u64;
    let y_hi = y_hi.min(height);
    for y in y_lo.max(1)..=y_hi {
        let yp = BigInt::from(y).pow(p);
        for a in 1..=y {
            if crate::ntcore::gcd(a, y) != 1 {
                continue;
            }
            let ap = BigInt::from(a).pow(p);
            for x_neg in [false, true] {
                let x = if x_neg { -BigInt::from(a) } else { BigInt::from(a) };
                let s = if x_neg { &yp - &ap } else { &yp + &ap };
                if s.is_zero() {
                    trivial_count += 1;
                    continue;
                }
                if let Some(z) = perfect_qth_root(&s, q) {
                    let sol = SolutionTriple::new(
                        x,
                        BigInt::from(y),
                        z,
                        *pair,
                        EquationKind::Fc,
                    )
                    .expect("constructed from the equation");
                    if sol.is_trivial() {
                        trivial_count += 1;
                    } else {
                        solutions.push(sol);
                    }
                }
            }
        }
    }
    sort_solutions(&mut solutions);
    SearchReport {
        pair: *pair,
        height,
        solutions,
        trivial_count,
    }
}

pub fn search_fc(pair: &PrimePair, height: u64) -> SearchReport {
    search_fc_strip(pair, height, 1, height)
}

/// Canonical `(x, y, z)` order used to normalize strip merges.
pub fn sort_solutions(sols: &mut [SolutionTriple]) {
    sols.sort_by(|a, b| {
        a.x.cmp(&b.x)
            .then_with(|| a.y.cmp(&b.y))
            .then_with(|| a.z.cmp(&b.z))
    });
}

/// Merge strip reports (same pair and height) into the serial result.
pub fn merge_reports(mut parts: Vec<SearchReport>) -> SearchReport {
    assert!(!parts.is_empty());
    let mut out = parts.remove(0);
    for part in parts {
        assert_eq!(part.pair, out.pair);
        assert_eq!(part.height, out.height);
        out.solutions.extend(part.solutions);
        out.trivial_count += part.trivial_count;
    }
    sort_solutions(&mut out.solutions);
    out
}

// ---------------------------------------------------------------------------
// fixed-point decimals and the explicit bounds
// ---------------------------------------------------------------------------

/// Internal fractional digits: 50 reported + 10 guard digits.
const DEC_FRAC: u32 = 60;
const DEC_REPORT: usize = 50;

/// A fixed-point decimal `scaled / 10^60`. All operations truncate
/// toward zero at the internal scale, so every value is reproducible
/// bit for bit; display truncates to 50 fractional digits.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Dec(BigInt);

fn dec_unit() -> BigInt {
    BigInt::from(10u32).pow(DEC_FRAC)
}

impl Dec {
    pub fn from_int(n: i64) -> Dec {
        Dec(BigInt::from(n) * dec_unit())
    }

    pub fn from_ratio(r: &BigRational) -> Dec {
        Dec(r.numer() * dec_unit() / r.denom())
    }

    pub fn add(&self, o: &Dec) -> Dec {
        Dec(&self.0 + &o.0)
    }
    pub fn sub(&self, o: &Dec) -> Dec {
        Dec(&self.0 - &o.0)
    }
    pub fn neg(&self) -> Dec {
        Dec(-&self.0)
    }
    pub fn mul(&self, o: &Dec) -> Dec {
        Dec(&self.0 * &o.0 / dec_unit())
    }
    pub fn div(&self, o: &Dec) -> Dec {
        assert!(!o.0.is_zero());
        Dec(&self.0 * dec_unit() / &o.0)
    }
    pub fn mul_int(&self, n: i64) -> Dec {
        Dec(&self.0 * BigInt::from(n))
    }
    pub fn div_int(&self, n: i64) -> Dec {
        Dec(&self.0 / BigInt::from(n))
    }
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.0.clone(), dec_unit())
    }

    pub fn cmp_int(&self, n: i64) -> Ordering {
        self.0.cmp(&(BigInt::from(n) * dec_unit()))
    }
}

impl fmt::Display for Dec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use alloc::string::ToString;
        let mag = self.0.magnitude().to_string();
        let frac_len = DEC_FRAC as usize;
        let padded = if mag.len() <= frac_len {
            alloc::format!("{}{}", "0".repeat(frac_len + 1 - mag.len()), mag)
        } else {
            mag
        };
        let split = padded.len() - frac_len;
        let sign = if self.0.sign() == Sign::Minus { "-" } else { "" };
        write!(f, "{}{}.{}", sign, &padded[..split], &padded[split..split + DEC_REPORT])
    }
}

/// `atanh(z)` for rational `|z| < 1/3`, by the odd power series.
fn atanh_dec(z: &BigRational) -> Dec {
    let z2 = Dec::from_ratio(&(z * z));
    let mut term = Dec::from_ratio(z);
    let mut sum = term.clone();
    let mut k = 1i64;
    while !term.is_zero() {
        term = term.mul(&z2);
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term.div_int(2 * k + 1));
        k += 1;
    }
    sum
}

fn ln2_dec() -> Dec {
    // ln 2 = 2 atanh(1/3)
    atanh_dec(&BigRational::new(BigInt::one(), BigInt::from(3))).mul_int(2)
}

/// `ln(r)` for a positive rational, via reduction into `[3/4, 3/2]`
/// and `ln m = 2 atanh((m-1)/(m+1))`.
pub fn ln_dec(r: &BigRational) -> Dec {
    assert!(r.is_positive());
    let mut m = r.clone();
    let mut a = 0i64;
    let two = BigRational::from_integer(2.into());
    let hi = BigRational::new(3.into(), 2.into());
    let lo = BigRational::new(3.into(), 4.into());
    while m > hi {
        m /= &two;
        a += 1;
    }
    while m < lo {
        m *= &two;
        a -= 1;
    }
    let z = (&m - BigRational::one()) / (&m + BigRational::one());
    let ln_m = atanh_dec(&z).mul_int(2);
    ln_m.add(&ln2_dec().mul_int(a))
}

pub fn log10_dec(r: &BigRational) -> Dec {
    ln_dec(r).div(&ln_dec(&BigRational::from_integer(10.into())))
}

fn log10_int(n: u64) -> Dec {
    log10_dec(&BigRational::from_integer(n.into()))
}

/// `c(q)` from the series estimate: `c(q)^-1 = (4/q)(1 + 16 q^-2 ln(1 + 2/q^q))`.
pub fn c_of_q(q: u64) -> Dec {
    let qq = BigInt::from(q).pow(q as u32);
    let arg = BigRational::one() + BigRational::new(2.into(), qq);
    let ln_term = ln_dec(&arg);
    let correction = Dec::from_int(1).add(&ln_term.mul_int(16).div_int((q * q) as i64));
    let c_inv = correction.mul_int(4).div_int(q as i64);
    Dec::from_int(1).div(&c_inv)
}

/// `c_1(q) = c(q)/2`.
pub fn c1(q: u64) -> Dec {
    c_of_q(q).div_int(2)
}

/// log10 of the height threshold
/// `(1/2) * ((1/(p(p-1))) * (q^((q-2)/(q-1)) / 2)^(p-2))^q`.
pub fn bound_lowb(pair: &PrimePair) -> Dec {
    let (p, q) = (pair.p(), pair.q());
    let l2 = log10_int(2);
    let lq = log10_int(q);
    let lpp = log10_int(p * (p - 1));
    let inner = lq
        .mul_int((q - 2) as i64)
        .div_int((q - 1) as i64)
        .sub(&l2)
        .mul_int((p - 2) as i64)
        .sub(&lpp);
    inner.mul_int(q as i64).sub(&l2)
}

/// log10 of the minimum-coordinate bound: `c_1(q) (q^(e(p-1))/p)^(q-2)`
/// with `e = 1` when `k = 2` (`q` not 1 mod `p`) and `e = 2` when `k = 3`.
pub fn bound_main2(pair: &PrimePair, k: u64) -> Result<Dec, DioError> {
    let e = match k {
        2 => 1i64,
        3 => 2,
        _ => return Err(DioError::BadValuationCase),
    };
    let (p, q) = (pair.p(), pair.q());
    let lc1 = log10_dec(&c1(q).to_rational());
    let core = log10_int(q)
        .mul_int(e * (p - 1) as i64)
        .sub(&log10_int(p))
        .mul_int((q - 2) as i64);
    Ok(lc1.add(&core))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub pair: PrimePair,
    /// log10 of the three bounds.
    pub lowb: Dec,
    pub bound: Dec,
    pub bound1: Dec,
    /// The constant itself (not a log).
    pub c1_of_q: Dec,
}

pub fn bound_report(pair: &PrimePair) -> BoundReport {
    BoundReport {
        pair: *pair,
        lowb: bound_lowb(pair),
        bound: bound_main2(pair, 2).unwrap(),
        bound1: bound_main2(pair, 3).unwrap(),
        c1_of_q: c1(pair.q()),
    }
}

/// `v_q(n!)` by Legendre's formula.
pub fn vq_factorial(n: u64, q: u64) -> u64 {
    let mut v = 0;
    let mut pw = q;
    while pw <= n {
        v += n / pw;
        match pw.checked_mul(q) {
            Some(next) => pw = next,
            None => break,
        }
    }
    v
}

/// `v_q(binom(1/q, n)) = -n - v_q(n!)`.
pub fn vq_binom(n: u64, q: u64) -> i64 {
    assert!(n >= 1);
    -(n as i64) - vq_factorial(n, q) as i64
}
