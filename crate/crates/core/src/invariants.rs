//! Signature, Arf invariant, `υ = Υ(1)` and the `d`-invariant of `-1`
//! surgery for torus knots.
//!
//! Signatures follow the mirror-positive convention `σ(p,q) = -σ(T(p,q))`,
//! so every value reported here is nonnegative.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::knot::{floor_div, to_integer, Rational, TorusKnot};
use crate::laurent::{alexander_polynomial, inner_count, symmetric_coefficients};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct InvariantRecord {
    pub sigma_mirror: i64,
    pub arf: u8,
    pub upsilon: i64,
    pub d_minus_one_surgery: i64,
}

/// Mirror-positive signature `σ(p,q)` via the Gordon–Litherland–Murasugi
/// reduction, run iteratively with the larger argument first.
pub fn signature_mirror(k: &TorusKnot) -> i64 {
    let (mut a, mut b) = (k.q(), k.p());
    let mut sign = 1;
    let mut acc = 0;
    loop {
        if b == 1 {
            return acc;
        }
        if b == 2 {
            return acc + sign * (a - 1);
        }
        let sq = b * b;
        if 2 * b < a {
            acc += sign * if b % 2 == 1 { sq - 1 } else { sq };
            a -= 2 * b;
        } else {
            acc += sign * if b % 2 == 1 { sq - 1 } else { sq - 2 };
            sign = -sign;
            a = 2 * b - a;
        }
        if a < b {
            std::mem::swap(&mut a, &mut b);
        }
    }
}

/// Reads `k` as `T(m, other)` with `m` in {5, 6}.
fn tabulated_reading(k: &TorusKnot) -> Result<(i64, i64)> {
    [k.p(), k.q()]
        .into_iter()
        .find(|m| *m == 5 || *m == 6)
        .map(|m| (m, k.other(m).unwrap()))
        .ok_or(Error::Unsupported(k.p(), k.q()))
}

/// Piecewise closed form of `σ(5,q)` and `σ(6,q)`.
pub fn signature_closed(k: &TorusKnot) -> Result<i64> {
    let (p, q) = tabulated_reading(k)?;
    Ok(if p == 6 {
        let k = q / 6;
        match q % 6 {
            1 => 18 * k,
            5 => 18 * k + 16,
            _ => unreachable!(),
        }
    } else {
        let (k10, k5) = (q / 10, q / 5);
        match (q % 10, q % 5) {
            (1, _) => 24 * k10,
            (4, _) => 24 * k10 + 8,
            (6, _) => 24 * k10 + 16,
            (9, _) => 24 * k10 + 24,
            (_, 2) => 12 * k5 + 4,
            (_, 3) => 12 * k5 + 8,
            _ => unreachable!(),
        }
    })
}

/// Arf invariant of `T(p,q)`.
pub fn arf(k: &TorusKnot) -> u8 {
    match k.even_odd() {
        Some((_, odd)) if matches!(odd % 8, 3 | 5) => 1,
        _ => 0,
    }
}

/// `υ(p, p+1) = -i(i+1) - p(p-1-2i)/2` with `i = ⌊p/2⌋ + index_shift`.
pub(crate) fn upsilon_consecutive_with(p: i64, index_shift: i64) -> i64 {
    let i = p / 2 + index_shift;
    let v = Rational::from(-i * (i + 1)) - Rational::new(p * (p - 1 - 2 * i), 2);
    to_integer(v)
}

/// `υ(p, p+1)`.
pub fn upsilon_consecutive(p: i64) -> i64 {
    upsilon_consecutive_with(p, 0)
}

pub(crate) fn upsilon_with(k: &TorusKnot, index_shift: i64) -> i64 {
    // υ(p,q) = υ(p,q-p) + υ(p,p+1), applied ⌊q/p⌋ times at once
    let (mut a, mut b) = (k.p(), k.q());
    let mut acc = 0;
    while a > 1 {
        acc += (b / a) * upsilon_consecutive_with(a, index_shift);
        (a, b) = (b % a, a);
    }
    acc
}

/// `υ(T(p,q)) = Υ(1)`, nonpositive.
pub fn upsilon(k: &TorusKnot) -> i64 {
    upsilon_with(k, 0)
}

/// Piecewise closed form of `υ(5,q)` and `υ(6,q)`.
pub fn upsilon_closed(k: &TorusKnot) -> Result<i64> {
    let (p, q) = tabulated_reading(k)?;
    let k = q / p;
    Ok(match (p, q % p) {
        (6, 1) => -9 * k,
        (6, 5) => -9 * k - 6,
        (5, 1) => -6 * k,
        (5, 2) => -6 * k - 2,
        (5, 3) => -6 * k - 3,
        (5, 4) => -6 * k - 4,
        _ => unreachable!(),
    })
}

pub(crate) fn d_formula_with(first: i64, second: i64, div: fn(i64, i64) -> i64) -> i64 {
    let half = first / 2;
    let sum: i64 = (0..half)
        .map(|k| inner_count(first, second, k, div) - 1)
        .sum();
    2 * (half + sum)
}

/// `2(⌊p/2⌋ + Σ_{k=0}^{⌊p/2⌋-1} ⌊((p-1-2k)q - p - 1)/(2p)⌋)` evaluated with
/// the arguments in the given order. The value is the same in either order;
/// with `first > second` some numerators are negative.
pub fn d_formula(first: i64, second: i64) -> i64 {
    d_formula_with(first, second, floor_div)
}

/// `d(S³₋₁(T(p,q)))` from the closed-form floor sum.
pub fn d_invariant(k: &TorusKnot) -> i64 {
    d_formula(k.p(), k.q())
}

/// `d(S³₋₁(T(p,q))) = 2 Σ j·a_j` read off the symmetric Alexander polynomial.
pub fn d_invariant_oracle(k: &TorusKnot) -> Result<i64> {
    let (_, coeffs) = symmetric_coefficients(&alexander_polynomial(k)?)?;
    Ok(2 * coeffs.iter().zip(1..).map(|(a, j)| j * a).sum::<i64>())
}

/// Piecewise closed form of `d(5,q)` and `d(6,q)`.
pub fn d_closed(k: &TorusKnot) -> Result<i64> {
    let (p, q) = tabulated_reading(k)?;
    Ok(if p == 6 {
        let k = q / 12;
        match q % 12 {
            1 => 18 * k,
            5 => 18 * k + 6,
            7 => 18 * k + 12,
            11 => 18 * k + 18,
            _ => unreachable!(),
        }
    } else {
        6 * (q / 5) + 2 * (q % 5 - 1)
    })
}

pub fn full_record(k: &TorusKnot) -> InvariantRecord {
    InvariantRecord {
        sigma_mirror: signature_mirror(k),
        arf: arf(k),
        upsilon: upsilon(k),
        d_minus_one_surgery: d_invariant(k),
    }
}
