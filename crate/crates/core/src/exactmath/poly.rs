//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Dense univariate polynomial over [`Rat`]; `coeffs[i]` is the coefficient
/// of `x^i`, and the leading stored coefficient is nonzero (the zero
/// polynomial stores nothing).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        PolyQ::from_coeffs(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        PolyQ::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// `c * x^deg`.
    pub fn monomial(c: Rat, deg: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        PolyQ::from_coeffs(coeffs)
    }

    /// Build from a coefficient list (index = power), trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero when `i` exceeds the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Exact division with remainder: `self = q*b + r`, `deg r < deg b`.
    pub fn divrem(&self, b: &PolyQ) -> Result<(PolyQ, PolyQ)> {
        if b.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let db = b.degree().unwrap();
        let lead_inv = b.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(db)];
        while rem.len() > db {
            let k = rem.len() - 1 - db;
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                for (i, bc) in b.coeffs.iter().enumerate() {
                    let t = &factor * bc;
                    rem[k + i] -= t;
                }
                quot[k] = factor;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        Ok((PolyQ::from_coeffs(quot), PolyQ::from_coeffs(rem)))
    }

    /// Substitute `inner` for the variable (Horner on polynomials).
    pub fn compose(&self, inner: &PolyQ) -> PolyQ {
        let mut acc = PolyQ::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &PolyQ::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> PolyQ {
        let mut base = self.clone();
        let mut acc = PolyQ::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Monic greatest common divisor (Euclid).
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) => {
                let inv = l.recip();
                a.scale(&inv)
            }
            None => a,
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> PolyQ {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * super::rat_int(i as i64))
            .collect();
        PolyQ::from_coeffs(coeffs)
    }
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        PolyQ::from_coeffs(coeffs)
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        PolyQ::from_coeffs(coeffs)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(coeffs)
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if i == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int};

    #[test]
    fn divrem_simple() {
        let a = PolyQ::monomial(Rat::one(), 2);
        let b = PolyQ::x();
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, PolyQ::x());
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_by_zero() {
        assert_eq!(PolyQ::one().divrem(&PolyQ::zero()), Err(Error::DivisionByZeroPoly));
    }

    #[test]
    fn divrem_reconstructs() {
        // f(x) = (x + 1/8)(x - 3/8)(x - 1) divided by x: remainder f(0), quotient r with r(0) = 13/64.
        let f = &(&PolyQ::from_coeffs(vec![rat(1, 8), rat_int(1)])
            * &PolyQ::from_coeffs(vec![rat(-3, 8), rat_int(1)]))
            * &PolyQ::from_coeffs(vec![rat_int(-1), rat_int(1)]);
        let (q, r) = f.divrem(&PolyQ::x()).unwrap();
        assert_eq!(r, PolyQ::constant(rat(3, 64)));
        assert_eq!(q.eval(&rat_int(0)), rat(13, 64));
        assert_eq!(&(&q * &PolyQ::x()) + &r, f);
    }

    #[test]
    fn compose_and_pow() {
        // (x+1)^2 composed with x^2 = x^4 + 2x^2 + 1
        let p = PolyQ::from_coeffs(vec![rat_int(1), rat_int(1)]).pow(2);
        let q = p.compose(&PolyQ::monomial(Rat::one(), 2));
        assert_eq!(
            q,
            PolyQ::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(2), rat_int(0), rat_int(1)])
        );
    }

    #[test]
    fn gcd_coprime_and_common() {
        let f = PolyQ::from_coeffs(vec![rat_int(-1), rat_int(1)]); // x - 1
        let g = PolyQ::from_coeffs(vec![rat_int(1), rat_int(1)]); // x + 1
        assert_eq!(f.gcd(&g), PolyQ::one());
        let h = &f * &g;
        assert_eq!(h.gcd(&f), f);
    }
}
