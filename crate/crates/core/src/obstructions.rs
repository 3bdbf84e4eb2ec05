//! Individual lower and upper bounds on `γ₄(T(p,q))`.
//!
//! Lower bounds come from the signature/Arf congruence, `|υ + σ/2|`, the
//! `σ/2 - d` inequality, the pinch theorem and the linking form of the
//! double branched cover. Upper bounds come from pinch moves, Möbius band
//! families and single band moves to knots of known genus.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{arf, d_invariant, signature_mirror, upsilon};
use crate::knot::{factorize, to_integer, Rational, TorusKnot};

/// `(σ + 4 Arf) mod 8`, with the mirror-positive signature.
pub fn sigma_arf_mod8(k: &TorusKnot) -> i64 {
    (signature_mirror(k) + 4 * i64::from(arf(k))).rem_euclid(8)
}

/// True when `σ + 4 Arf ≡ 4 (mod 8)`, which forces `γ₄ >= 2`.
pub fn sigma_arf_obstructed(k: &TorusKnot) -> bool {
    sigma_arf_mod8(k) == 4
}

/// `|υ + σ/2|`.
pub fn upsilon_sigma_lower(k: &TorusKnot) -> i64 {
    let v = Rational::from(upsilon(k)) + Rational::new(signature_mirror(k), 2);
    to_integer(v).abs()
}

/// `σ/2 - d(S³₋₁)`. Can be negative.
pub fn batson_lower(k: &TorusKnot) -> i64 {
    to_integer(Rational::new(signature_mirror(k), 2)) - d_invariant(k)
}

/// One non-oriented band move `T(p, kp ± 1) → T(p-2, k(p-2) ± 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PinchStep {
    pub from: TorusKnot,
    pub to: TorusKnot,
    pub multiplier: i64,
    /// `+1` or `-1`.
    pub sign: i64,
}

/// Reads `k = T(p, kp ± 1)` with `p` the smaller parameter.
fn pinch_form(k: &TorusKnot) -> Result<(i64, i64, i64)> {
    let (p, q) = (k.p(), k.q());
    if p < 2 {
        return Err(Error::NotPinchFamily(p, q));
    }
    if q % p == 1 {
        Ok((p, (q - 1) / p, 1))
    } else if q % p == p - 1 {
        Ok((p, (q + 1) / p, -1))
    } else {
        Err(Error::NotPinchFamily(p, q))
    }
}

pub fn pinch_reduce(k: &TorusKnot) -> Result<PinchStep> {
    let (p, mult, sign) = pinch_form(k)?;
    let p2 = p - 2;
    let q2 = mult * p2 + sign;
    let to = if p2 <= 1 || q2.abs() <= 1 {
        TorusKnot::unknot()
    } else {
        TorusKnot::new(p2, q2)?
    };
    Ok(PinchStep {
        from: *k,
        to,
        multiplier: mult,
        sign,
    })
}

/// Repeated pinch moves until the unknot is reached.
pub fn pinch_chain(k: &TorusKnot) -> Result<Vec<PinchStep>> {
    let mut steps = Vec::new();
    let mut cur = *k;
    while !cur.is_unknot() {
        let step = pinch_reduce(&cur)?;
        cur = step.to;
        steps.push(step);
    }
    Ok(steps)
}

/// `ϑ(T(p, kp ± 1))`, the number of pinch moves needed to reach the unknot.
pub fn theta(k: &TorusKnot) -> Result<i64> {
    if k.is_unknot() {
        return Err(Error::NotPinchFamily(k.p(), k.q()));
    }
    let (p, mult, sign) = pinch_form(k)?;
    Ok(if p % 2 == 1 {
        (p - 1) / 2
    } else if mult * p + sign != p - 1 {
        p / 2
    } else {
        (p - 2) / 2
    })
}

/// `(ϑ - 1, ϑ)` or `(ϑ, ϑ)` when the pinch theorem applies (`p > 3` and `q`
/// in one of the listed classes mod `2p`).
pub fn pinch_theorem_interval(k: &TorusKnot) -> Option<(i64, i64)> {
    let (p, q) = (k.p(), k.q());
    if p <= 3 {
        return None;
    }
    let r = q % (2 * p);
    if p % 2 == 1 {
        if r == p - 1 {
            Some(((p - 3) / 2, (p - 1) / 2))
        } else if r == p + 1 || r == 2 * p - 1 {
            Some(((p - 1) / 2, (p - 1) / 2))
        } else {
            None
        }
    } else if q > p && (r == p - 1 || r == p + 1 || r == 2 * p - 1) {
        Some(((p - 2) / 2, p / 2))
    } else {
        None
    }
}

/// `T(mk ± 2, m)` with `m >= 3` odd bounds a Möbius band.
pub fn mobius_family(k: &TorusKnot) -> bool {
    [(k.p(), k.q()), (k.q(), k.p())]
        .into_iter()
        .any(|(m, other)| m >= 3 && m % 2 == 1 && matches!(other % m, r if r == 2 || r == m - 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionStatus {
    Obstructed,
    NotObstructed,
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionResult {
    pub status: ObstructionStatus,
    /// Present iff `status` is `NotObstructed`.
    pub witness: Option<i64>,
    pub reason: &'static str,
}

/// Smallest `n` in `[1, q)` coprime to `q` with `-(p/2) n² ≡ ±1 (mod q)`.
pub fn linking_form_witness(half_even: i64, q: i64) -> Option<i64> {
    (1..q).find(|&n| {
        let v = (-half_even * (n * n % q)).rem_euclid(q);
        n.gcd(&q) == 1 && (v == 1 || v == q - 1)
    })
}

/// Linking form test on `H₁(Σ(2,p,q)) ≅ Z_q`, with `p` the even parameter.
///
/// A Möbius band forces a generator with `λ(a,a) = ±1/q`, and
/// `λ(a,a) ≡ -p/(2q)` for some generator, so the test asks whether
/// `-(p/2) n² ≡ ±1 (mod q)` is solvable. An exhaustive search decides it.
///
/// When no `n` exists the knot is reported obstructed. A solution only rules
/// the obstruction out when every prime of `q` has odd exponent; otherwise
/// the result is inapplicable.
pub fn linking_form_obstruction(k: &TorusKnot) -> ObstructionResult {
    let inapplicable = |reason| ObstructionResult {
        status: ObstructionStatus::Inapplicable,
        witness: None,
        reason,
    };
    if k.is_unknot() {
        return inapplicable("unknot");
    }
    let Some((even, q)) = k.even_odd() else {
        return inapplicable("p odd");
    };
    let odd_exponents = factorize(q).iter().all(|&(_, e)| e % 2 == 1);
    match linking_form_witness(even / 2, q) {
        Some(n) if odd_exponents => ObstructionResult {
            status: ObstructionStatus::NotObstructed,
            witness: Some(n),
            reason: "congruence solvable",
        },
        Some(_) => inapplicable("q has a prime with even exponent"),
        None => ObstructionResult {
            status: ObstructionStatus::Obstructed,
            witness: None,
            reason: if odd_exponents {
                "no n with -(p/2)n^2 = +-1 mod q"
            } else {
                "no n with -(p/2)n^2 = +-1 mod q (q has a prime with even exponent)"
            },
        },
    }
}

/// Upper bound from a single non-oriented band move `K → K'`:
/// `γ₄(K) <= γ₄(K') + 1`, which is exactly 1 when `K'` is slice.
pub fn band_move_upper(_from: &TorusKnot, _to: &TorusKnot, gamma4_of_target: i64) -> i64 {
    gamma4_of_target + 1
}
