//! Exact q-expansions of eta, theta constants, derived theta series, and
//! the characters of the irreducible and lattice modules, plus the numeric
//! S-transform closure test.
//!
//! Subscript convention: `theta_{j,p}(q) = sum_n q^{(2pn+j)^2/(4p)}` with
//! the summation index first. The character formulas read
//! `tr_{Lambda(i)} = (i theta_{p-i,p} + dtheta_{p-i,p})/(p eta)` and
//! `tr_{Pi(i)} = (i theta_{i,p} - dtheta_{i,p})/(p eta)`; the convention is
//! validated by leading-term and integrality self-checks and by the kernel
//! dimension cross-check in the verification suite.

mod numeric;

pub use numeric::{numeric_eval, numeric_eval_checked, s_closure_test, ClosureReport};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rat, rat_int, PuiseuxSeries, Rat};
use crate::fock::Lattice;
use crate::zhu::{central_charge, is_prime, weight_h, zhu_root};

/// Which family an irreducible character belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Lambda,
    Pi,
}

/// A module character: exact truncated series with its leading exponent
/// `h - c/24`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterSeries {
    pub label: String,
    pub series: PuiseuxSeries,
    pub leading_exponent: Rat,
}

/// `eta(q) = q^{1/24} prod_{n>=1} (1 - q^n)`, exact below `order`.
///
/// Requires `order > 1/24` so at least the leading term is representable.
pub fn eta_series(order: &Rat) -> PuiseuxSeries {
    let shift = rat(1, 24);
    assert!(order > &shift, "eta needs order > 1/24");
    let inner = order - &shift;
    let mut s = PuiseuxSeries::one(inner.clone());
    let mut n = 1i64;
    while rat_int(n) < inner {
        let mut factor = PuiseuxSeries::one(inner.clone());
        factor.add_term(rat_int(n), -Rat::one());
        s = s.mul(&factor);
        n += 1;
    }
    s.shift(&shift)
}

/// `theta_{j,p}(q) = sum_n q^{(2pn+j)^2/(4p)}`, exact below `order`.
pub fn theta_series(j: i64, p: i64, order: &Rat) -> PuiseuxSeries {
    theta_like(j, p, order, false)
}

/// `(dtheta)_{j,p}(q) = sum_n (2pn+j) q^{(2pn+j)^2/(4p)}`.
pub fn dtheta_series(j: i64, p: i64, order: &Rat) -> PuiseuxSeries {
    theta_like(j, p, order, true)
}

fn theta_like(j: i64, p: i64, order: &Rat, derived: bool) -> PuiseuxSeries {
    let mut s = PuiseuxSeries::zero(order.clone());
    // |2pn + j| <= sqrt(4p * order) bounds contributing n
    let mut bound = 1i64;
    while &rat(bound * bound, 4 * p) < order {
        bound += 2 * p;
    }
    let lo = (-j - bound) / (2 * p) - 1;
    let hi = (bound - j) / (2 * p) + 1;
    for n in lo..=hi {
        let a = 2 * p * n + j;
        let exp = rat(a * a, 4 * p);
        if &exp >= order {
            continue;
        }
        let coeff = if derived { rat_int(a) } else { Rat::one() };
        s.add_term(exp, coeff);
    }
    s
}

/// Character of `Lambda(i)` or `Pi(i)`, `1 <= i <= p`, exact below `order`.
///
/// Self-checks the leading exponent (`h - c/24`), the top-component
/// dimension (1 for `Lambda`, 2 for `Pi`), and integrality/nonnegativity of
/// every coefficient; any failure is reported as
/// [`Error::SubscriptConventionMismatch`].
pub fn char_irreducible(kind: ModuleKind, i: i64, p: i64, order: &Rat) -> Result<CharacterSeries> {
    assert!((1..=p).contains(&i), "module index out of range");
    let pad = order + rat_int(1);
    let eta = eta_series(&pad);
    let inv_eta = eta.inverse().expect("eta is a unit");
    let (label, h, numerator) = match kind {
        ModuleKind::Lambda => {
            let theta = theta_series(p - i, p, &pad);
            let dtheta = dtheta_series(p - i, p, &pad);
            (format!("Lambda({i})"), zhu_root(i, p), theta.scale(&rat_int(i)).add(&dtheta))
        }
        ModuleKind::Pi => {
            let theta = theta_series(i, p, &pad);
            let dtheta = dtheta_series(i, p, &pad);
            (format!("Pi({i})"), zhu_root(3 * p - i, p), theta.scale(&rat_int(i)).sub(&dtheta))
        }
    };
    let series =
        numerator.mul(&inv_eta).scale(&rat(1, p)).truncate(order);
    let leading_exponent = h - central_charge(p) / rat_int(24);
    let expected_top = match kind {
        ModuleKind::Lambda => Rat::one(),
        ModuleKind::Pi => rat_int(2),
    };
    match series.leading() {
        Some((e, c)) if *e == leading_exponent && *c == expected_top => {}
        other => {
            return Err(Error::SubscriptConventionMismatch(format!(
                "{label}: leading term {other:?}, expected ({leading_exponent}, {expected_top})"
            )))
        }
    }
    for (e, c) in series.terms() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::SubscriptConventionMismatch(format!(
                "{label}: coefficient {c} at q^{e} is not a nonnegative integer"
            )));
        }
    }
    Ok(CharacterSeries { label, series, leading_exponent })
}

/// Character of the lattice module `V_{L + gamma_j}`, `0 <= j <= 2p-1`,
/// computed from the theta quotient and checked coefficient-by-coefficient
/// against brute-force counting of basis monomials.
pub fn char_lattice_module(j: i64, p: i64, order: &Rat) -> CharacterSeries {
    assert!((0..2 * p).contains(&j), "sector index out of range");
    let pad = order + rat_int(1);
    let eta = eta_series(&pad);
    let inv_eta = eta.inverse().expect("eta is a unit");
    let series = theta_series(j - p + 1, p, &pad).mul(&inv_eta).truncate(order);

    // counting oracle: dim of degree-d piece, shifted by -c/24
    let lattice = Lattice::new(p).expect("p >= 2");
    let c_shift = central_charge(p) / rat_int(24);
    let lead = weight_h(j + 1, 1, p) - &c_shift;
    let mut k = 0i64;
    loop {
        let exp = &lead + rat_int(k);
        if &exp >= order {
            break;
        }
        let degree = &exp + &c_shift;
        let counted = lattice.graded_dim(j, &degree);
        assert_eq!(
            series.coeff(&exp),
            rat_int(counted as i64),
            "lattice character mismatch at sector {j}, exponent {exp}"
        );
        k += 1;
    }
    CharacterSeries { label: format!("lattice({j})"), series, leading_exponent: lead }
}

/// Raw table of the integrality pattern `h_{i,1} - h_{j,1} in Z` over
/// `i, j in {1..p} U {2p..3p-1}`, plus the prime-case iff verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceTable {
    pub p: i64,
    /// Pairs `(i, j)` with integral weight difference, `i != j`.
    pub integral_pairs: Vec<(i64, i64)>,
    /// For prime `p`: whether the pattern is exactly `|i-j| = 2p` with
    /// `min(i,j) <= p-1`. `None` for composite `p` (no claim made).
    pub iff_holds: Option<bool>,
}

/// Compute the congruence table; for prime `p` the expected iff-pattern is
/// evaluated, for composite `p` only the raw table is reported.
pub fn congruence_table(p: i64) -> CongruenceTable {
    let idx: Vec<i64> = (1..=p).chain(2 * p..=3 * p - 1).collect();
    let mut integral_pairs = Vec::new();
    for &i in &idx {
        for &j in &idx {
            if i != j && (zhu_root(i, p) - zhu_root(j, p)).is_integer() {
                integral_pairs.push((i, j));
            }
        }
    }
    let iff_holds = if is_prime(p) {
        let expected: Vec<(i64, i64)> = {
            let mut v = Vec::new();
            for &i in &idx {
                for &j in &idx {
                    if i != j && (i - j).abs() == 2 * p && i.min(j) <= p - 1 {
                        v.push((i, j));
                    }
                }
            }
            v
        };
        Some(integral_pairs == expected)
    } else {
        None
    };
    CongruenceTable { p, integral_pairs, iff_holds }
}

/// Truncation order covering `terms` integer steps past the leading
/// exponent of the given weight.
pub fn order_for(h: &Rat, p: i64, terms: i64) -> Rat {
    h - central_charge(p) / rat_int(24) + rat_int(terms) + rat(1, 2)
}

/// Pentagonal-number expansion of `prod (1-q^n)`: independent oracle for
/// the eta product.
pub fn euler_function_pentagonal(order: i64) -> PuiseuxSeries {
    let mut s = PuiseuxSeries::zero(rat_int(order));
    let mut k = 0i64;
    loop {
        let e1 = k * (3 * k - 1) / 2;
        let e2 = k * (3 * k + 1) / 2;
        if e1 >= order && e2 >= order && k > 0 {
            break;
        }
        let sign = if k.rem_euclid(2) == 0 { Rat::one() } else { -Rat::one() };
        if e1 < order {
            s.add_term(rat_int(e1), sign.clone());
        }
        if k > 0 && e2 < order {
            s.add_term(rat_int(e2), sign);
        }
        k += 1;
    }
    s
}

#[cfg(test)]
mod tests;
