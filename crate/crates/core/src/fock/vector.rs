//! Basis monomials and finite rational linear combinations of them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exactmath::Rat;

/// A basis monomial `alpha(-n_1)...alpha(-n_k) e^{m alpha/(2p)}`:
/// a partition `(n_1 >= n_2 >= ... >= n_k)` of creation indices together
/// with the integer charge numerator `m` over the fixed denominator `2p`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockMonomial {
    parts: Vec<u32>,
    charge: i64,
}

impl FockMonomial {
    /// Build from parts in any order; they are sorted descending.
    pub fn new(mut parts: Vec<u32>, charge: i64) -> Self {
        assert!(parts.iter().all(|&n| n > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        FockMonomial { parts, charge }
    }

    /// The pure exponential `e^{m alpha/(2p)}`.
    pub fn exponential(charge: i64) -> Self {
        FockMonomial { parts: Vec::new(), charge }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn charge(&self) -> i64 {
        self.charge
    }

    /// Total weight of the partition part, `sum n_i`.
    pub fn partition_weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts grouped as `(size, multiplicity)`, sizes descending.
    pub fn grouped(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &n in &self.parts {
            match out.last_mut() {
                Some((size, mult)) if *size == n => *mult += 1,
                _ => out.push((n, 1)),
            }
        }
        out
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (size, mult) in self.grouped() {
            if mult == 1 {
                write!(f, "a(-{size})*")?;
            } else {
                write!(f, "a(-{size})^{mult}*")?;
            }
        }
        write!(f, "e({})", self.charge)
    }
}

/// Finite rational linear combination of [`FockMonomial`]s. No zero
/// coefficients are stored; the zero vector has no terms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<FockMonomial, Rat>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector { terms: BTreeMap::new() }
    }

    pub fn from_monomial(mono: FockMonomial) -> Self {
        let mut v = FockVector::zero();
        v.add_term(mono, Rat::one());
        v
    }

    /// `e^{m alpha/(2p)}` with coefficient 1.
    pub fn exponential(charge: i64) -> Self {
        FockVector::from_monomial(FockMonomial::exponential(charge))
    }

    /// The vacuum `e^0`.
    pub fn vacuum() -> Self {
        FockVector::exponential(0)
    }

    pub fn add_term(&mut self, mono: FockMonomial, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(entry) => {
                *entry += coeff;
                if entry.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &FockMonomial) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> FockVector {
        if c.is_zero() {
            return FockVector::zero();
        }
        FockVector { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn add(&self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    /// The component with the given charge numerator.
    pub fn restrict_charge(&self, charge: i64) -> FockVector {
        FockVector {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.charge() == charge)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sorted list of distinct charges appearing in the vector.
    pub fn charges(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.terms.keys().map(|m| m.charge()).collect();
        out.dedup();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// If `self = c * other` for a scalar `c` (with `other` nonzero),
    /// return `c`; `None` when the vectors are not proportional.
    pub fn proportionality(&self, other: &FockVector) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        let (m0, c0) = other.terms.iter().next()?;
        let ratio = self.terms.get(m0)? / c0;
        if *self == other.scale(&ratio) {
            Some(ratio)
        } else {
            None
        }
    }
}

impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_int;

    #[test]
    fn monomial_sorting_and_grouping() {
        let m = FockMonomial::new(vec![1, 3, 1, 2], 4);
        assert_eq!(m.parts(), &[3, 2, 1, 1]);
        assert_eq!(m.grouped(), vec![(3, 1), (2, 1), (1, 2)]);
        assert_eq!(m.partition_weight(), 7);
    }

    #[test]
    fn vector_cancellation() {
        let m = FockMonomial::exponential(2);
        let mut v = FockVector::from_monomial(m.clone());
        v.add_term(m, rat_int(-1));
        assert!(v.is_zero());
    }

    #[test]
    fn proportionality_detection() {
        let mut u = FockVector::exponential(0);
        u.add_term(FockMonomial::new(vec![2], 0), rat_int(3));
        let v = u.scale(&rat_int(-7));
        assert_eq!(v.proportionality(&u), Some(rat_int(-7)));
        let mut w = v.clone();
        w.add_term(FockMonomial::new(vec![1], 0), rat_int(1));
        assert_eq!(w.proportionality(&u), None);
        assert_eq!(FockVector::zero().proportionality(&u), Some(rat_int(0)));
    }
}
