//! Exact rational arithmetic for threshold comparisons.
//!
//! Density parameters sit exactly on several inequality boundaries, so every
//! comparison here is exact: square roots are compared by sign analysis and
//! squaring, never evaluated in floating point.

use num::bigint::BigInt;
use num::{BigRational, One, Signed, Zero};
use std::cmp::Ordering;
use std::str::FromStr;

pub type Rational = BigRational;

/// Short constructor for small rationals.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_usize(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| format!("bad rational `{s}`"))?;
    let q = BigInt::from_str(q).map_err(|_| format!("bad rational `{s}`"))?;
    if q.is_zero() {
        return Err(format!("bad rational `{s}`: zero denominator"));
    }
    Ok(Rational::new(p, q))
}

/// Canonical `p/q` form (reduced, denominator ≥ 1).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Smallest integer ≥ r, as usize. r must not be negative enough to matter;
/// negative values clamp to 0.
pub fn ceil_to_usize(r: &Rational) -> usize {
    let c = r.ceil().to_integer();
    if c.is_negative() {
        0
    } else {
        use num::ToPrimitive;
        c.to_usize().expect("ceil fits in usize")
    }
}

/// √x when x is a perfect rational square.
pub fn perfect_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let sp = x.numer().sqrt();
    let sq = x.denom().sqrt();
    if &(&sp * &sp) == x.numer() && &(&sq * &sq) == x.denom() {
        Some(Rational::new(sp, sq))
    } else {
        None
    }
}

/// A rational interval [lo, hi] with lo ≤ √x ≤ hi and hi − lo ≤ eps.
/// Exact (lo = hi) when x is a perfect square.
pub fn sqrt_enclosure(x: &Rational, eps: &Rational) -> (Rational, Rational) {
    assert!(!x.is_negative() && eps.is_positive());
    if let Some(s) = perfect_sqrt(x) {
        return (s.clone(), s);
    }
    let mut lo = Rational::zero();
    let mut hi = if *x >= Rational::one() { x.clone() } else { Rational::one() };
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) / rat(2, 1);
        if &mid * &mid <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// The exact real a + b·√s with rational a, b and s ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub a: Rational,
    pub b: Rational,
    pub s: Rational,
}

impl Surd {
    pub fn new(a: Rational, b: Rational, s: Rational) -> Surd {
        assert!(!s.is_negative(), "radicand must be non-negative");
        Surd { a, b, s }
    }

    pub fn sqrt_of(s: Rational) -> Surd {
        Surd::new(Rational::zero(), Rational::one(), s)
    }

    /// Exact sign of a + b√s.
    pub fn sign(&self) -> Ordering {
        if self.b.is_zero() || self.s.is_zero() {
            return self.a.cmp(&Rational::zero());
        }
        match (self.a.cmp(&Rational::zero()), self.b.cmp(&Rational::zero())) {
            (Ordering::Equal, bs) => bs,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // opposite signs: compare a² with b²·s, inheriting the sign of
            // whichever side dominates
            (a_sign, _) => {
                let lhs = &self.a * &self.a;
                let rhs = &self.b * &self.b * &self.s;
                match lhs.cmp(&rhs) {
                    Ordering::Equal => Ordering::Equal,
                    Ordering::Greater => a_sign,
                    Ordering::Less => a_sign.reverse(),
                }
            }
        }
    }

    /// Exact comparison of a + b√s with a rational.
    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        Surd::new(&self.a - r, self.b.clone(), self.s.clone()).sign()
    }
}
