//! Sparse integer Laurent polynomials in one variable `t`, and the torus knot
//! Alexander polynomial built from them.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::knot::{floor_div, TorusKnot};

/// Exponent-to-coefficient map with no stored zeros. Iteration is by
/// ascending exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    /// Divides exactly by `1 - t^m` (`m >= 1`), working from the highest
    /// exponent down. Fails if a remainder is left over.
    pub fn div_one_minus_power(&self, m: i64) -> Result<Self> {
        assert!(m >= 1);
        let mut rem = self.terms.clone();
        let mut quot = Self::zero();
        let low = self.min_exp().unwrap_or(0);
        while let Some((&e, &c)) = rem.iter().next_back() {
            if e - m < low {
                break;
            }
            // c t^e = (1 - t^m)(-c t^{e-m}) + c t^{e-m}
            rem.remove(&e);
            quot.add_term(e - m, -c);
            let slot = rem.entry(e - m).or_insert(0);
            *slot += c;
            if *slot == 0 {
                rem.remove(&(e - m));
            }
        }
        if rem.is_empty() {
            Ok(quot)
        } else {
            Err(Error::InternalDivision)
        }
    }

    /// Writes one `exponent<TAB>coefficient` line per term, ascending.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (e, c) in self.terms() {
            writeln!(s, "{e}\t{c}").unwrap();
        }
        s
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{e}")?,
                _ => write!(f, "{a}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// `1 - t^m`.
pub fn one_minus_power(m: i64) -> LaurentPoly {
    LaurentPoly::from_terms([(0, 1), (m, -1)])
}

/// `t^{(p-1)(q-1)/2} Δ_{p,q}(t) = (1-t)(1-t^{pq}) / ((1-t^p)(1-t^q))`.
pub fn unshifted_alexander(k: &TorusKnot) -> Result<LaurentPoly> {
    let (p, q) = (k.p(), k.q());
    let num = &one_minus_power(1) * &one_minus_power(p * q);
    num.div_one_minus_power(p)?.div_one_minus_power(q)
}

/// The symmetric Alexander polynomial `Δ_{p,q}(t)`.
pub fn alexander_polynomial(k: &TorusKnot) -> Result<LaurentPoly> {
    let half = (k.p() - 1) * (k.q() - 1) / 2;
    Ok(unshifted_alexander(k)?.shift(-half))
}

/// Splits a symmetric polynomial as `a_0 + Σ a_i (t^i + t^{-i})`, returning
/// `a_0` and `[a_1, ..., a_d]` with `d` the top exponent.
pub fn symmetric_coefficients(poly: &LaurentPoly) -> Result<(i64, Vec<i64>)> {
    for (e, c) in poly.terms() {
        if poly.coeff(-e) != c {
            return Err(Error::NotSymmetric(e));
        }
    }
    let d = poly.max_exp().unwrap_or(0).max(0);
    Ok((poly.coeff(0), (1..=d).map(|i| poly.coeff(i)).collect()))
}

/// The number of `n` terms contributed for a given `k` in the truncated
/// expansion: `⌊((p-1-2k)q - p - 1)/(2p)⌋ + 1` (may be zero).
pub(crate) fn inner_count(p: i64, q: i64, k: i64, div: fn(i64, i64) -> i64) -> i64 {
    div((p - 1 - 2 * k) * q - p - 1, 2 * p) + 1
}

/// `Σ_{k=0}^{⌊p/2⌋-1} Σ_{n=0}^{⌊((p-1-2k)q-p-1)/(2p)⌋} t^{np+kq}(1-t)`.
///
/// Agrees with `t^{(p-1)(q-1)/2} Δ_{p,q}` below the middle exponent. Requires
/// `2 <= p < q`.
pub fn truncated_expansion(k: &TorusKnot) -> Result<LaurentPoly> {
    let (p, q) = (k.p(), k.q());
    if p < 2 || p >= q {
        return Err(Error::Precondition("truncated expansion needs 2 <= p < q"));
    }
    let mut out = LaurentPoly::zero();
    for kk in 0..p / 2 {
        for n in 0..inner_count(p, q, kk, floor_div).max(0) {
            let e = n * p + kk * q;
            out.add_term(e, 1);
            out.add_term(e + 1, -1);
        }
    }
    Ok(out)
}
