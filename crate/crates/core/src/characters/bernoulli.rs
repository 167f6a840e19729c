//! Generalized Bernoulli numbers `B_{1,chi}`, the analytic relative class
//! number `h_m^-`, and the reflection quantity `B_omega` entering
//! `h(p,q) = h_p^- * B_omega`.

use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::{rational_valuation, CycloField, CycloNum};
use super::{
    characters_mod, product_char, CharError, DirichletChar, Divides,
};
use crate::ntcore::{gcd, PrimePair};

/// `B_{1,chi}` as an exact element of `Q(zeta_d)`, `d` the character order.
#[derive(Debug, Clone)]
pub struct BernoulliValue {
    pub char: DirichletChar,
    pub value: CycloNum,
}

/// `B_{1,chi} = (1/f) sum_(a=1..f) a * chi*(a)` over the conductor `f`,
/// with `chi*` the primitive character inducing `chi`.
pub fn bernoulli_b1(chi: &DirichletChar) -> Result<BernoulliValue, CharError> {
    if chi.is_trivial() {
        return Err(CharError::TrivialCharacter);
    }
    let f = chi.conductor();
    let d = chi.order();
    let field = CycloField::new(d);
    let mut acc = field.zero();
    for a in 1..f {
        if let Some(e) = chi.primitive_value_exponent(a) {
            let term = field.scale(
                &field.zeta_pow(e),
                &BigRational::from_integer(a.into()),
            );
            acc = field.add(&acc, &term);
        }
    }
    let value = field.scale(
        &acc,
        &BigRational::new(BigInt::one(), BigInt::from(f)),
    );
    if chi.is_odd() {
        assert!(
            !field.is_zero(&value),
            "B_1 of an odd character never vanishes (L(1, chi) != 0)"
        );
    }
    Ok(BernoulliValue {
        char: chi.clone(),
        value,
    })
}

/// Exact `h_m^-` with the per-orbit rational factors that assembled it.
#[derive(Debug, Clone)]
pub struct ClassNumberReport {
    pub modulus: u64,
    pub h_minus: BigUint,
    /// (orbit representative's generator exponents, rational orbit norm)
    pub orbit_factors: Vec<(Vec<u64>, BigRational)>,
    /// The unit-index constant Q (1 for prime conductor, 2 for pq).
    pub q_const: u64,
    /// The root-of-unity count w = 2m.
    pub w_const: u64,
}

/// `h_m^- = Q * w * prod_(chi odd) (-B_{1,chi}/2)`, assembled over Galois
/// orbits (each orbit contributes the rational norm of one factor).
pub fn h_minus(m: u64) -> Result<ClassNumberReport, CharError> {
    let chars = characters_mod(m)?;
    let q_const = if chars[0].comps.len() == 1 { 1u64 } else { 2 };
    let w_const = 2 * m;
    let minus_half = BigRational::new(BigInt::from(-1), BigInt::from(2));

    let mut seen: Vec<Vec<u64>> = Vec::new();
    let mut orbit_factors = Vec::new();
    let mut total = BigRational::from_integer(BigInt::from(q_const * w_const));
    for chi in chars.iter().filter(|c| c.is_odd()) {
        if seen.contains(&chi.exponents()) {
            continue;
        }
        let d = chi.order();
        for k in (1..d).filter(|&k| gcd(k, d) == 1) {
            seen.push(chi.power(k).exponents());
        }
        let b = bernoulli_b1(chi)?;
        let field = CycloField::new(d);
        let factor = field.norm(&field.scale(&b.value, &minus_half));
        total *= &factor;
        orbit_factors.push((chi.exponents(), factor));
    }

    assert!(total.is_integer(), "h^- must assemble to an integer");
    assert!(total.is_positive(), "h^- must be positive");
    Ok(ClassNumberReport {
        modulus: m,
        h_minus: total.to_integer().to_biguint().unwrap(),
        orbit_factors,
        q_const,
        w_const,
    })
}

/// Exact divisibility verdict `q | h_m^-`, degrading to `Unknown` above
/// the desk-scale cutoff.
pub fn q_divides_h_minus(m: u64, q: u64, cutoff: u64) -> Divides {
    if m > cutoff {
        return Divides::Unknown;
    }
    match h_minus(m) {
        Ok(report) => {
            if (report.h_minus % q).is_zero() {
                Divides::Yes
            } else {
                Divides::No
            }
        }
        Err(_) => Divides::Unknown,
    }
}

/// The reflection factor `B_omega = prod_(chi in X) B_{1, chi^(-1) omega}`
/// with `X` the characters mod `p` of exact order `q` and `omega` the
/// Teichmueller character mod `q` (order `q-1`). The product equals the
/// relative norm of a single factor, so the q-divisibility verdict is read
/// off the full rational norm.
#[derive(Debug, Clone)]
pub struct BOmegaReport {
    pub pair: PrimePair,
    /// Number of characters of exact order q (0 or q-1).
    pub x_size: u64,
    /// `N_(Q(zeta_(q(q-1)))/Q)` of one factor; 1 for empty X.
    pub norm: Option<BigRational>,
    /// q-adic valuation of the norm (0 for empty X).
    pub valuation: Option<i64>,
    pub q_divides: Divides,
}

pub fn b_omega(pair: &PrimePair, cutoff: u64) -> BOmegaReport {
    let (p, q) = (pair.p(), pair.q());
    if (p - 1) % q != 0 {
        // empty product: B_omega = 1
        return BOmegaReport {
            pair: *pair,
            x_size: 0,
            norm: Some(BigRational::one()),
            valuation: Some(0),
            q_divides: Divides::No,
        };
    }
    let d_total = q * (q - 1);
    if d_total > cutoff {
        return BOmegaReport {
            pair: *pair,
            x_size: q - 1,
            norm: None,
            valuation: None,
            q_divides: Divides::Unknown,
        };
    }
    // deterministic representative: first character of exact order q
    let chi = characters_mod(p)
        .expect("p is an odd prime")
        .into_iter()
        .find(|c| c.order() == q)
        .expect("q | p-1 guarantees order-q characters");
    // omega(g_q) = zeta_(q-1): the Teichmueller character
    let omega = characters_mod(q)
        .expect("q is an odd prime")
        .into_iter()
        .find(|c| c.order() == q - 1 && c.exponents() == [1])
        .expect("the dual group mod q is cyclic of order q-1");
    let factor = product_char(&chi.inverse(), &omega);
    debug_assert_eq!(factor.order(), d_total);
    let b = bernoulli_b1(&factor).expect("chi^(-1) omega is nontrivial");
    let field = CycloField::new(d_total);
    let norm = field.norm(&b.value);
    assert!(!norm.is_zero(), "odd character: B_1 nonzero");
    let v = rational_valuation(&norm, q);
    BOmegaReport {
        pair: *pair,
        x_size: q - 1,
        q_divides: if v > 0 { Divides::Yes } else { Divides::No },
        norm: Some(norm),
        valuation: Some(v),
    }
}

/// Verdict on `q | h(p,q)` for `h(p,q) = h_p^- * B_omega`.
#[derive(Debug, Clone)]
pub struct ReflectionReport {
    pub pair: PrimePair,
    pub q_divides_h_p_minus: Divides,
    pub b_omega: BOmegaReport,
    pub q_divides_h_pq_reflection: Divides,
}

pub fn h_pq_reflection(pair: &PrimePair, cutoff: u64) -> ReflectionReport {
    let hp = q_divides_h_minus(pair.p(), pair.q(), cutoff);
    let bw = b_omega(pair, cutoff);
    let combined = match (hp, bw.q_divides) {
        (Divides::Yes, _) | (_, Divides::Yes) => Divides::Yes,
        (Divides::No, Divides::No) => Divides::No,
        _ => Divides::Unknown,
    };
    ReflectionReport {
        pair: *pair,
        q_divides_h_p_minus: hp,
        b_omega: bw,
        q_divides_h_pq_reflection: combined,
    }
}
