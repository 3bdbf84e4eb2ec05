//! Torus knot parameters and the small amount of exact integer arithmetic
//! shared by every other module.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// A positive torus knot `T(p,q)` with `gcd(p,q) = 1`, stored with `p <= q`.
///
/// `T(p,q)` and `T(q,p)` are the same knot, so construction normalizes the
/// order. Any pair containing a 1 is the unknot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorusKnot {
    p: i64,
    q: i64,
}

impl TorusKnot {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 1 || q < 1 {
            return Err(Error::NonPositive(p, q));
        }
        let g = p.gcd(&q);
        if g != 1 {
            return Err(Error::NonCoprime(p, q, g));
        }
        Ok(Self {
            p: p.min(q),
            q: p.max(q),
        })
    }

    pub fn unknot() -> Self {
        Self { p: 1, q: 1 }
    }

    /// The smaller parameter.
    pub fn p(&self) -> i64 {
        self.p
    }

    /// The larger parameter.
    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_unknot(&self) -> bool {
        self.p == 1
    }

    /// Returns `(even, odd)` if one parameter is even.
    pub fn even_odd(&self) -> Option<(i64, i64)> {
        if self.p % 2 == 0 {
            Some((self.p, self.q))
        } else if self.q % 2 == 0 {
            Some((self.q, self.p))
        } else {
            None
        }
    }

    /// Reads the knot as `T(m, other)` for a given parameter `m`.
    pub fn other(&self, m: i64) -> Option<i64> {
        if m == self.p {
            Some(self.q)
        } else if m == self.q {
            Some(self.p)
        } else {
            None
        }
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

/// Builds a normalized torus knot from an unordered parameter pair.
pub fn make_knot(p: i64, q: i64) -> Result<TorusKnot> {
    TorusKnot::new(p, q)
}

/// `⌊a/b⌋`, rounding toward negative infinity. `b` must be positive.
pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    Integer::div_floor(&a, &b)
}

/// Exact rational used for half-integer quantities such as `σ/2`.
pub type Rational = Ratio<i64>;

/// Converts a rational that is known to be integral.
pub(crate) fn to_integer(r: Rational) -> i64 {
    assert!(r.is_integer(), "expected an integer, got {r}");
    r.to_integer()
}

/// Trial-division factorization, ascending primes with exponents.
pub fn factorize(mut n: i64) -> Vec<(i64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}
