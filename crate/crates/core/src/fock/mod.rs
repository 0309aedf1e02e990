//! Exact model of the rank-one lattice vertex algebra `V_L`,
//! `<alpha, alpha> = 2p`, together with its dual-lattice Fock sectors.
//!
//! States are finite rational combinations of monomials
//! `alpha(-n_1)...alpha(-n_k) e^{m alpha/(2p)}` ([`FockVector`]). The module
//! implements the operator modes acting on them:
//!
//! - Heisenberg modes `alpha(n)` with `[alpha(m), alpha(n)] = 2p m delta_{m+n,0}`;
//! - modes of exponential vertex operators `e^{b alpha/(2p)}_r`, expanded
//!   through `E^-(x) E^+(x) e^beta x^{beta(0)}`;
//! - the screening charges `Q = e^{alpha}_0` and `Qt = e^{-alpha/p}_0`;
//! - Virasoro modes of the shifted conformal vector
//!   `omega = alpha(-1)^2/(4p) + (p-1)/(2p) alpha(-2)`;
//! - the triplet generators `F = e^{-alpha}`, `H = Q F`, `E = Q H`, whose
//!   modes are realized through the derivation property of `Q`;
//! - graded dimensions, exact kernel dimensions of `Qt` on `V_L`, and
//!   singular-vector checks.
//!
//! All cocycle structure constants are `+1`: `<m alpha, n alpha> = 2pmn` is
//! even on `L`, and the dual-lattice operators used here pair integrally
//! with `L`, so no sign twist is required.

mod linalg;
mod partitions;
mod vector;

pub use linalg::{rank_bigint, rank_rational};
pub use partitions::{for_each_partition, partition_counts};
pub use vector::{FockMonomial, FockVector};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rat_int, Rat};

/// One of the three weight-`(2p-1)` triplet generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triplet {
    E,
    F,
    H,
}

/// Generators whose Zhu-mode `o(a) = a_{wt(a)-1}` acts on top components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZhuGen {
    E,
    F,
    H,
    Omega,
}

/// The lattice `L = Z alpha` with `<alpha, alpha> = 2p`, `p >= 2`, and the
/// operator calculus on its Fock sectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lattice {
    p: i64,
}

impl Lattice {
    /// Rejects `p < 2`: the `p = 1` kernel degenerates to a known algebra
    /// and is excluded by contract.
    pub fn new(p: i64) -> Result<Self> {
        if p < 2 {
            return Err(Error::InvalidLatticeParam(p));
        }
        Ok(Lattice { p })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// `2p`, the denominator of all charge numerators.
    pub fn two_p(&self) -> i64 {
        2 * self.p
    }

    /// `c_{p,1} = 1 - 6(p-1)^2/p`.
    pub fn central_charge(&self) -> Rat {
        Rat::one() - Rat::new(BigInt::from(6 * (self.p - 1) * (self.p - 1)), BigInt::from(self.p))
    }

    /// Conformal degree of `e^{m alpha/(2p)}`: `m(m - 2(p-1))/(4p)`.
    pub fn exp_degree(&self, m: i64) -> Rat {
        Rat::new(BigInt::from(m) * BigInt::from(m - 2 * (self.p - 1)), BigInt::from(4 * self.p))
    }

    /// Conformal degree of a basis monomial.
    pub fn degree(&self, mono: &FockMonomial) -> Rat {
        rat_int(mono.partition_weight() as i64) + self.exp_degree(mono.charge())
    }

    /// Degree of a homogeneous vector, `None` if inhomogeneous or zero.
    pub fn homogeneous_degree(&self, v: &FockVector) -> Option<Rat> {
        let mut deg: Option<Rat> = None;
        for (mono, _) in v.terms() {
            let d = self.degree(mono);
            match &deg {
                None => deg = Some(d),
                Some(prev) if *prev == d => {}
                Some(_) => return None,
            }
        }
        deg
    }

    /// Heisenberg mode `alpha(n)`: creation for `n < 0`, derivation on the
    /// partition for `n > 0`, and charge readout `m` for `n = 0`.
    pub fn heis_mode(&self, n: i64, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (mono, coeff) in v.terms() {
            match n.cmp(&0) {
                std::cmp::Ordering::Equal => {
                    out.add_term(mono.clone(), coeff * rat_int(mono.charge()));
                }
                std::cmp::Ordering::Less => {
                    let mut parts = mono.parts().to_vec();
                    parts.push((-n) as u32);
                    out.add_term(FockMonomial::new(parts, mono.charge()), coeff.clone());
                }
                std::cmp::Ordering::Greater => {
                    let size = n as u32;
                    for (s, mult) in mono.grouped() {
                        if s != size {
                            continue;
                        }
                        let mut parts = mono.parts().to_vec();
                        let pos = parts.iter().position(|&x| x == size).unwrap();
                        parts.remove(pos);
                        let factor = rat_int(2 * self.p * n * mult as i64);
                        out.add_term(FockMonomial::new(parts, mono.charge()), coeff * factor);
                    }
                }
            }
        }
        out
    }

    /// Mode `e^{beta}_r` with `beta = b_num * alpha/(2p)`, expanded termwise
    /// through the normal-ordered product
    /// `exp(sum_k beta(-k) x^k / k) exp(-sum_k beta(k) x^{-k} / k) e^beta x^{beta(0)}`.
    ///
    /// Requires `r + <beta, mu> in Z` on every term of `v` (charge `mu`);
    /// otherwise [`Error::IncompatibleModeIndex`].
    pub fn exp_mode(&self, b_num: i64, r: &Rat, v: &FockVector) -> Result<FockVector> {
        let two_p = self.two_p();
        let mut out = FockVector::zero();
        for (mono, coeff) in v.terms() {
            let m = mono.charge();
            // <beta, mu> = b*m/(2p)
            let pairing = Rat::new(BigInt::from(b_num * m), BigInt::from(two_p));
            let shift = -(r + &pairing) - Rat::one();
            if !shift.is_integer() {
                return Err(Error::IncompatibleModeIndex {
                    b_num,
                    index: r.to_string(),
                    charge: m,
                });
            }
            let shift: i64 = i64::try_from(shift.to_integer()).expect("mode shift fits i64");
            self.exp_mode_monomial(b_num, shift, mono, coeff, &mut out);
        }
        Ok(out)
    }

    /// `exp_mode` with an integer mode index.
    pub fn exp_mode_int(&self, b_num: i64, r: i64, v: &FockVector) -> Result<FockVector> {
        self.exp_mode(b_num, &rat_int(r), v)
    }

    /// One monomial of `exp_mode`: enumerate annihilations of the partition
    /// (the `E^+` factor), then creations filling the required x-degree
    /// (the `E^-` factor).
    fn exp_mode_monomial(
        &self,
        b_num: i64,
        shift: i64,
        mono: &FockMonomial,
        coeff: &Rat,
        out: &mut FockVector,
    ) {
        let grouped = mono.grouped();
        let new_charge = mono.charge() + b_num;
        let b = BigInt::from(b_num);
        // Odometer over how many parts of each size are annihilated.
        let mut take = vec![0u32; grouped.len()];
        loop {
            let removed: u32 = take.iter().zip(&grouped).map(|(t, (s, _))| t * s).sum();
            let creation_weight = shift + removed as i64;
            if creation_weight >= 0 {
                let mut plus = Rat::one();
                for (t, (_, mult)) in take.iter().zip(&grouped) {
                    // (-b)^t * C(mult, t)
                    let mut factor = BigInt::from(crate::exactmath::binom_int(*mult as i64, *t as u64));
                    for _ in 0..*t {
                        factor *= -&b;
                    }
                    plus *= Rat::from_integer(factor);
                }
                let base_coeff = coeff * plus;
                if !base_coeff.is_zero() {
                    let mut remaining: Vec<u32> = Vec::new();
                    for (t, (s, mult)) in take.iter().zip(&grouped) {
                        for _ in 0..(mult - t) {
                            remaining.push(*s);
                        }
                    }
                    for_each_partition(creation_weight as u32, &mut |created| {
                        let mut minus = Rat::one();
                        for (size, count) in created {
                            // (b/(2p*size))^count / count!
                            let unit = Rat::new(b.clone(), BigInt::from(self.two_p() * *size as i64));
                            for _ in 0..*count {
                                minus *= &unit;
                            }
                            minus /= Rat::from_integer(crate::exactmath::factorial(*count as u64));
                        }
                        let mut parts = remaining.clone();
                        for (size, count) in created {
                            for _ in 0..*count {
                                parts.push(*size);
                            }
                        }
                        out.add_term(FockMonomial::new(parts, new_charge), &base_coeff * minus);
                    });
                }
            }
            // advance odometer
            let mut pos = 0;
            loop {
                if pos == take.len() {
                    return;
                }
                if take[pos] < grouped[pos].1 {
                    take[pos] += 1;
                    break;
                }
                take[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Short screening `Q = e^{alpha}_0`; a derivation of all mode products.
    pub fn screening_q(&self, v: &FockVector) -> Result<FockVector> {
        self.exp_mode_int(self.two_p(), 0, v)
    }

    /// Long screening `Qt = e^{-alpha/p}_0`, defined on `V_L`
    /// (charge numerators divisible by `2p`); lands in the dual sectors.
    pub fn screening_qtilde(&self, v: &FockVector) -> Result<FockVector> {
        for (mono, _) in v.terms() {
            if mono.charge().rem_euclid(self.two_p()) != 0 {
                return Err(Error::IncompatibleModeIndex {
                    b_num: -2,
                    index: "0".into(),
                    charge: mono.charge(),
                });
            }
        }
        self.exp_mode_int(-2, 0, v)
    }

    /// Virasoro mode of the shifted conformal vector:
    /// `L(n) = (1/4p) sum_j :alpha(j) alpha(n-j): - ((p-1)/(2p)) (n+1) alpha(n)`.
    pub fn virasoro_mode(&self, n: i64, v: &FockVector) -> FockVector {
        let quarter_p = Rat::new(BigInt::one(), BigInt::from(4 * self.p));
        let mut out = FockVector::zero();
        for (mono, coeff) in v.terms() {
            let single = FockVector::from_monomial(mono.clone()).scale(coeff);
            let w = mono.partition_weight() as i64;
            let mut quad = FockVector::zero();
            // outside [n-w, w] the annihilation side exceeds the partition weight
            for j in (n - w)..=w {
                let a = j;
                let b = n - j;
                // normal order: larger index (annihilation side) applied first
                let (first, second) = if a <= b { (b, a) } else { (a, b) };
                let inner = self.heis_mode(first, &single);
                if inner.is_zero() {
                    continue;
                }
                quad = quad.add(&self.heis_mode(second, &inner));
            }
            out = out.add(&quad.scale(&quarter_p));
            let linear = Rat::new(BigInt::from(-(self.p - 1) * (n + 1)), BigInt::from(2 * self.p));
            out = out.add(&self.heis_mode(n, &single).scale(&linear));
        }
        out
    }

    /// `F`, `H = QF`, `E = QH` as explicit states.
    pub fn triplet_vector(&self, g: Triplet) -> FockVector {
        let f = FockVector::exponential(-self.two_p());
        match g {
            Triplet::F => f,
            Triplet::H => self.screening_q(&f).expect("Q defined on V_L"),
            Triplet::E => {
                let h = self.screening_q(&f).expect("Q defined on V_L");
                self.screening_q(&h).expect("Q defined on V_L")
            }
        }
    }

    /// Triplet generator mode `X_i`. `F_i` is an exponential-operator mode;
    /// `H_i` and `E_i` are realized through the derivation property of `Q`:
    /// `H_i v = Q(F_i v) - F_i(Q v)` and `E_i v = Q(H_i v) - H_i(Q v)`.
    pub fn triplet_mode(&self, g: Triplet, i: i64, v: &FockVector) -> Result<FockVector> {
        match g {
            Triplet::F => self.exp_mode_int(-self.two_p(), i, v),
            Triplet::H => {
                let fv = self.triplet_mode(Triplet::F, i, v)?;
                let qv = self.screening_q(v)?;
                Ok(self.screening_q(&fv)?.sub(&self.triplet_mode(Triplet::F, i, &qv)?))
            }
            Triplet::E => {
                let hv = self.triplet_mode(Triplet::H, i, v)?;
                let qv = self.screening_q(v)?;
                Ok(self.screening_q(&hv)?.sub(&self.triplet_mode(Triplet::H, i, &qv)?))
            }
        }
    }

    /// Zhu mode `o(a) = a_{wt(a)-1}`: degree-preserving on every sector.
    pub fn zhu_o(&self, g: ZhuGen, v: &FockVector) -> Result<FockVector> {
        match g {
            ZhuGen::E => self.triplet_mode(Triplet::E, self.two_p() - 2, v),
            ZhuGen::F => self.triplet_mode(Triplet::F, self.two_p() - 2, v),
            ZhuGen::H => self.triplet_mode(Triplet::H, self.two_p() - 2, v),
            ZhuGen::Omega => Ok(self.virasoro_mode(0, v)),
        }
    }

    /// Basis monomials of charge residue `j mod 2p` at exact degree `d`,
    /// sorted. Finite for every rational `d`.
    pub fn sector_basis(&self, j: i64, d: &Rat) -> Vec<FockMonomial> {
        let mut out = Vec::new();
        let bound = {
            let ceil = d.ceil().to_integer();
            let ceil: i64 = i64::try_from(ceil).unwrap_or(0);
            4 * self.p * (ceil.max(0) + 2)
        };
        let two_p = self.two_p();
        let jr = j.rem_euclid(two_p);
        let mut m = jr - two_p * ((bound + jr) / two_p + 1);
        while m <= bound {
            let gap = d - self.exp_degree(m);
            if gap.is_integer() && !gap.is_negative() {
                let n = u32::try_from(i64::try_from(gap.to_integer()).unwrap()).unwrap();
                for_each_partition(n, &mut |parts| {
                    let mut expanded = Vec::new();
                    for (size, count) in parts {
                        for _ in 0..*count {
                            expanded.push(*size);
                        }
                    }
                    out.push(FockMonomial::new(expanded, m));
                });
            }
            m += two_p;
        }
        out.sort();
        out
    }

    /// Number of basis monomials of `V_{L + gamma_j}` at degree `d`.
    pub fn graded_dim(&self, j: i64, d: &Rat) -> usize {
        self.sector_basis(j, d).len()
    }

    /// Dimension of `Ker Qt` on the degree-`d` subspace of `V_L`, by exact
    /// fraction-free row reduction.
    pub fn kernel_dim_qtilde(&self, d: i64) -> usize {
        let d = rat_int(d);
        let basis = self.sector_basis(0, &d);
        if basis.is_empty() {
            return 0;
        }
        let images: Vec<FockVector> = basis
            .iter()
            .map(|mono| {
                self.screening_qtilde(&FockVector::from_monomial(mono.clone()))
                    .expect("basis lies in V_L")
            })
            .collect();
        let mut columns: std::collections::BTreeMap<FockMonomial, usize> = Default::default();
        for image in &images {
            for (mono, _) in image.terms() {
                let next = columns.len();
                columns.entry(mono.clone()).or_insert(next);
            }
        }
        if columns.is_empty() {
            return basis.len();
        }
        let rows: Vec<Vec<Rat>> = images
            .iter()
            .map(|image| {
                let mut row = vec![Rat::zero(); columns.len()];
                for (mono, c) in image.terms() {
                    row[columns[mono]] = c.clone();
                }
                row
            })
            .collect();
        basis.len() - rank_rational(&rows)
    }

    /// True iff `v` is a nonzero singular vector of conformal weight `h`:
    /// `L(1) v = L(2) v = 0` and `L(0) v = h v`, all exactly.
    pub fn check_singular(&self, v: &FockVector, h: &Rat) -> bool {
        if v.is_zero() {
            return false;
        }
        self.virasoro_mode(1, v).is_zero()
            && self.virasoro_mode(2, v).is_zero()
            && self.virasoro_mode(0, v) == v.scale(h)
    }

    /// The conformal vector `alpha(-1)^2/(4p) + (p-1)/(2p) alpha(-2)` applied
    /// to the vacuum.
    pub fn omega(&self) -> FockVector {
        let mut out = FockVector::zero();
        out.add_term(
            FockMonomial::new(vec![1, 1], 0),
            Rat::new(BigInt::one(), BigInt::from(4 * self.p)),
        );
        out.add_term(
            FockMonomial::new(vec![2], 0),
            Rat::new(BigInt::from(self.p - 1), BigInt::from(2 * self.p)),
        );
        out
    }
}

#[cfg(test)]
mod tests;
