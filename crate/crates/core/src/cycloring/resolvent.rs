//! The resolvent/Bernoulli identity: for every nontrivial character `psi`
//! of `(Z/pZ)^*` realized over an extension of `F_q`,
//!
//! ```text
//! sum_x psi(x)/(1 - zeta^x)  =  -tau(psi) * B_{1, psi^(-1)}
//! ```
//!
//! with `tau(psi) = sum_x psi(x) zeta^x` the Gauss sum and `B_{1,chi}` the
//! generalized Bernoulli number, both evaluated inside
//! `F_{q^e}[X]/(Phi_p(X))`.

use alloc::vec;
use alloc::vec::Vec;

use super::ext::FqExt;
use super::{primitive_root, CycloElem};
use crate::ntcore::{gcd, inv_mod, PrimePair};

/// One character's two-sided evaluation, for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolventCheck {
    /// Character index i, meaning `psi(g^j) = zeta_{p-1}^(i*j)`.
    pub char_index: u64,
    /// Order of the character.
    pub order: u64,
    /// Extension degree the check ran in.
    pub ext_degree: usize,
    pub holds: bool,
}

/// Verify the identity for every nontrivial character of `(Z/pZ)^*`.
pub fn resolvent_bernoulli_check(pair: &PrimePair) -> bool {
    resolvent_bernoulli_report(pair).iter().all(|c| c.holds)
}

pub fn resolvent_bernoulli_report(pair: &PrimePair) -> Vec<ResolventCheck> {
    let (p, q) = (pair.p(), pair.q());
    // characters into extensions of F_q exist for all orders dividing p-1
    // only when q does not divide p-1 (no q-torsion in any F_{q^e}^*)
    assert!(
        (p - 1) % q != 0,
        "resolvent check requires p != 1 mod q"
    );
    let g = primitive_root(p);

    // 1/(1 - zeta^x) has F_q coefficients; precompute for all x
    let base_inv = CycloElem::from_poly(p, q, &[1, -1])
        .inverse()
        .expect("norm(1 - zeta) = p is prime to q");
    let mut gamma = vec![Vec::new(); p as usize];
    for x in 1..p {
        gamma[x as usize] = base_inv.galois(x).unwrap().coeffs().to_vec();
    }

    let mut out = Vec::new();
    for i in 1..p - 1 {
        let d = (p - 1) / gcd(i, p - 1); // order of psi_i
        let (field, omega) = field_for_order(q, d);
        let e = field.degree();
        let u = i / gcd(i, p - 1); // psi(g) = omega^u, gcd(u, d) = 1

        // psi(g^j) = omega^(u*j mod d), tabulated per residue x = g^j
        let mut psi = vec![field.zero(); p as usize];
        let mut x = 1u64;
        for j in 0..p - 1 {
            psi[x as usize] = field.pow(&omega, u * j % d);
            x = x * g % p;
        }
        let psi_inv = |x: u64| field.inv(&psi[x as usize]).unwrap();

        // lhs[k] = sum_x psi(x) * gamma_x[k]; tau[k] = sum_x psi(x)*zeta^x
        let n = (p - 1) as usize;
        let mut lhs = vec![field.zero(); n];
        let mut tau = vec![field.zero(); n];
        for x in 1..p {
            let zx = CycloElem::zeta_pow(p, q, x as i64);
            for k in 0..n {
                let t = field.scale(&psi[x as usize], gamma[x as usize][k]);
                lhs[k] = field.add(&lhs[k], &t);
                let t = field.scale(&psi[x as usize], zx.coeffs()[k]);
                tau[k] = field.add(&tau[k], &t);
            }
        }

        // B_{1, psi^(-1)} = p^(-1) * sum_a a * psi^(-1)(a)
        let mut b = field.zero();
        for a in 1..p {
            b = field.add(&b, &field.scale(&psi_inv(a), a % q));
        }
        b = field.scale(&b, inv_mod(p % q, q));

        let holds = (0..n).all(|k| {
            let rhs = field.neg(&field.mul(&tau[k], &b));
            lhs[k] == rhs
        });
        out.push(ResolventCheck {
            char_index: i,
            order: d,
            ext_degree: e,
            holds,
        });
    }
    out
}

fn field_for_order(q: u64, d: u64) -> (FqExt, Vec<u64>) {
    let e = order_mod(q, d);
    let field = FqExt::new(q, e);
    let omega = field.root_of_unity(d);
    (field, omega)
}

/// Order of `a` in `(Z/mZ)^*` for any `m >= 1` with `gcd(a, m) = 1`.
fn order_mod(a: u64, m: u64) -> usize {
    if m == 1 {
        return 1;
    }
    debug_assert_eq!(gcd(a % m, m), 1);
    let mut x = a % m;
    let mut ord = 1usize;
    while x != 1 {
        x = x * a % m;
        ord += 1;
    }
    ord
}
