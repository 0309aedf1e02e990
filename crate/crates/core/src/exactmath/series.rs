//! Truncated formal series in `q` with exact rational exponents.
//!
//! A series stores finitely many `exponent -> coefficient` pairs together
//! with a `truncation_order`: every exponent strictly below the order is
//! exact, everything at or above it has been dropped. Sums take the minimum
//! of the operand orders; products propagate the order shifted by the
//! minimal exponents of the factors.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Truncated series `sum c_e q^e` with rational exponents `e < truncation_order`.
#[derive(Clone, Debug, PartialEq)]
pub struct PuiseuxSeries {
    terms: BTreeMap<Rat, Rat>,
    order: Rat,
}

impl PuiseuxSeries {
    /// The zero series, known exactly below `order`.
    pub fn zero(order: Rat) -> Self {
        PuiseuxSeries { terms: BTreeMap::new(), order }
    }

    /// The constant series 1. Requires `order > 0` so the constant term is
    /// representable.
    pub fn one(order: Rat) -> Self {
        Self::monomial(Rat::zero(), Rat::one(), order)
    }

    /// `coeff * q^exp`, truncated at `order`.
    pub fn monomial(exp: Rat, coeff: Rat, order: Rat) -> Self {
        let mut s = PuiseuxSeries::zero(order);
        s.add_term(exp, coeff);
        s
    }

    /// Insert `coeff * q^exp`, dropping zero results and exponents at or
    /// above the truncation order.
    pub fn add_term(&mut self, exp: Rat, coeff: Rat) {
        if coeff.is_zero() || exp >= self.order {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(entry) => {
                *entry += coeff;
                if entry.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, coeff);
            }
        }
    }

    pub fn truncation_order(&self) -> &Rat {
        &self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Minimal stored exponent; for the zero series the truncation order
    /// (all that is known is that the series vanishes below it).
    pub fn min_exponent(&self) -> Rat {
        self.terms.keys().next().cloned().unwrap_or_else(|| self.order.clone())
    }

    /// Leading `(exponent, coefficient)` pair, if any term is stored.
    pub fn leading(&self) -> Option<(&Rat, &Rat)> {
        self.terms.iter().next()
    }

    /// Coefficient at `exp` (zero if absent). Only meaningful below the
    /// truncation order.
    pub fn coeff(&self, exp: &Rat) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let order = self.order.clone().min(rhs.order.clone());
        let mut out = PuiseuxSeries::zero(order);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        self.add(&rhs.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> PuiseuxSeries {
        if c.is_zero() {
            return PuiseuxSeries::zero(self.order.clone());
        }
        PuiseuxSeries {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
            order: self.order.clone(),
        }
    }

    /// Multiply by `q^d` (shifts exponents and the truncation order).
    pub fn shift(&self, d: &Rat) -> PuiseuxSeries {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(e, c)| (e + d, c.clone())).collect(),
            order: &self.order + d,
        }
    }

    pub fn mul(&self, rhs: &PuiseuxSeries) -> PuiseuxSeries {
        let order = (self.order.clone() + rhs.min_exponent())
            .min(rhs.order.clone() + self.min_exponent());
        let mut out = PuiseuxSeries::zero(order);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = e1 + e2;
                if e >= out.order {
                    break;
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Drop all terms with exponent `>= order` and lower the recorded
    /// truncation order accordingly.
    pub fn truncate(&self, order: &Rat) -> PuiseuxSeries {
        let order = order.clone().min(self.order.clone());
        PuiseuxSeries {
            terms: self.terms.iter().filter(|(e, _)| *e < &order).map(|(e, c)| (e.clone(), c.clone())).collect(),
            order,
        }
    }

    /// Multiplicative inverse, by Newton iteration on the shifted series.
    ///
    /// Requires a nonzero coefficient at the minimal exponent `e0`; the
    /// result is exact below `truncation_order - 2*e0`.
    pub fn inverse(&self) -> Result<PuiseuxSeries> {
        let (e0, c0) = match self.leading() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(Error::NonInvertibleSeries),
        };
        // u = q^{-e0} * self has leading term c0 at exponent 0.
        let neg_e0 = -e0.clone();
        let u = self.shift(&neg_e0);
        let target = u.order.clone();
        let one = PuiseuxSeries::one(target.clone());
        let mut w = PuiseuxSeries::monomial(Rat::zero(), c0.recip(), target.clone());
        loop {
            let residual = one.sub(&u.mul(&w).truncate(&target));
            if residual.is_zero() {
                break;
            }
            w = w.add(&w.mul(&residual).truncate(&target));
        }
        Ok(w.shift(&neg_e0))
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "O(q^{})", self.order)?;
            return Ok(());
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*q^({e})")?;
            }
        }
        write!(f, " + O(q^{})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, rat_int};

    fn geometric(order: i64) -> PuiseuxSeries {
        // 1 + q + q^2 + ...
        let mut s = PuiseuxSeries::zero(rat_int(order));
        for k in 0..order {
            s.add_term(rat_int(k), Rat::one());
        }
        s
    }

    #[test]
    fn one_minus_q_times_geometric() {
        let mut f = PuiseuxSeries::one(rat_int(10));
        f.add_term(rat_int(1), rat_int(-1));
        let prod = f.mul(&geometric(10));
        assert_eq!(prod, PuiseuxSeries::one(rat_int(10)));
    }

    #[test]
    fn truncate_drops_high_terms() {
        let mut s = PuiseuxSeries::one(rat_int(10));
        s.add_term(rat_int(1), Rat::one());
        s.add_term(rat_int(3), Rat::one());
        let t = s.truncate(&rat_int(2));
        assert_eq!(t.num_terms(), 2);
        assert_eq!(t.coeff(&rat_int(1)), Rat::one());
        assert_eq!(t.truncation_order(), &rat_int(2));
    }

    #[test]
    fn inverse_of_unit() {
        // (1 - q)^{-1} = geometric series
        let mut f = PuiseuxSeries::one(rat_int(10));
        f.add_term(rat_int(1), rat_int(-1));
        let inv = f.inverse().unwrap();
        assert_eq!(inv, geometric(10));
    }

    #[test]
    fn inverse_with_fractional_lead() {
        // s = q^{1/3}(2 - q); 1/s has lead exponent -1/3 and order shifts by -2/3.
        let mut s = PuiseuxSeries::monomial(rat(1, 3), rat_int(2), rat_int(6));
        s.add_term(rat(4, 3), rat_int(-1));
        let inv = s.inverse().unwrap();
        let prod = s.mul(&inv);
        assert_eq!(prod.coeff(&Rat::zero()), Rat::one());
        assert_eq!(prod.num_terms(), 1);
        assert_eq!(inv.min_exponent(), rat(-1, 3));
    }

    #[test]
    fn inverse_of_zero_fails() {
        let z = PuiseuxSeries::zero(rat_int(5));
        assert_eq!(z.inverse(), Err(Error::NonInvertibleSeries));
    }

    #[test]
    fn product_order_propagation() {
        // (q^2 exact below 5) * (q^3 exact below 4): product exact below min(5+3, 4+2) = 6
        let a = PuiseuxSeries::monomial(rat_int(2), Rat::one(), rat_int(5));
        let b = PuiseuxSeries::monomial(rat_int(3), Rat::one(), rat_int(4));
        let p = a.mul(&b);
        assert_eq!(p.truncation_order(), &rat_int(6));
        assert_eq!(p.coeff(&rat_int(5)), Rat::one());
    }
}
