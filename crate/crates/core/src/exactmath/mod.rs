//! Exact scalar, polynomial, and truncated-series arithmetic.
//!
//! The single scalar type is [`Rat`], an arbitrary-precision rational kept
//! in lowest terms with positive denominator. No floating point enters any
//! computation in this module.

mod poly;
mod series;

pub use poly::PolyQ;
pub use series::PuiseuxSeries;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, the sole scalar of all symbolic computation.
pub type Rat = num_rational::BigRational;

/// `n/d` as a [`Rat`]. Panics on `d = 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Integer binomial `C(n, k)` for any integer `n` (negative allowed) and
/// `k >= 0`, via the falling factorial; always an exact integer.
pub fn binom_int(n: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(n) - BigInt::from(j);
    }
    let q = &num / factorial(k);
    debug_assert!(&q * factorial(k) == num, "falling factorial not divisible by k!");
    q
}

/// Generalized binomial `C(a, k) = a(a-1)...(a-k+1)/k!` for rational `a`.
pub fn gen_binom(a: &Rat, k: u32) -> Rat {
    let mut num = Rat::one();
    for j in 0..k {
        num *= a - rat_int(j as i64);
    }
    num / Rat::from_integer(factorial(k as u64))
}

/// The formal binomial `C(t, k) = t(t-1)...(t-k+1)/k!` as a polynomial in `t`.
///
/// `binom_poly(0) = 1` (empty product).
pub fn binom_poly(k: u32) -> PolyQ {
    let mut poly = PolyQ::one();
    for j in 0..k {
        let factor = PolyQ::from_coeffs(vec![rat_int(-(j as i64)), Rat::one()]);
        poly = &poly * &factor;
    }
    poly.scale(&Rat::new(BigInt::one(), factorial(k as u64)))
}

/// Unique polynomial of degree `< points.len()` through the given points.
///
/// Errors with [`Error::DuplicateAbscissa`] when two abscissas coincide.
/// Panics on an empty point list (precondition).
pub fn lagrange_interpolate(points: &[(Rat, Rat)]) -> Result<PolyQ> {
    assert!(!points.is_empty(), "lagrange_interpolate: empty point list");
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in points.iter().skip(i + 1) {
            if xi == xj {
                return Err(Error::DuplicateAbscissa(xi.to_string()));
            }
        }
    }
    let mut acc = PolyQ::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = PolyQ::one();
        let mut denom = Rat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &PolyQ::from_coeffs(vec![-xj.clone(), Rat::one()]);
            denom *= xi - xj;
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    Ok(acc)
}
