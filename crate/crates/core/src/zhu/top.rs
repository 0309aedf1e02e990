//! Verification of the Zhu-algebra relations as exact matrix identities on
//! the top components of the irreducible modules, computed inside the
//! lattice Fock sectors.
//!
//! The one-dimensional tops are spanned by `e^{gamma_{i-1}}` (weights
//! `h_{i,1}`, `1 <= i <= p`); the two-dimensional tops by
//! `e^{gamma_{2p-1-i}}` and `Q e^{gamma_{2p-1-i}}` (weights `h_{i,1}`,
//! `2p <= i <= 3p-1`).

use num_traits::{One, Zero};

use super::{c_p_const, p_poly, q_poly, zhu_root};
use crate::error::{Error, Result};
use crate::exactmath::{PolyQ, Rat};
use crate::fock::{FockVector, Lattice, ZhuGen};

type Mat2 = [[Rat; 2]; 2];

fn mat_zero() -> Mat2 {
    [[Rat::zero(), Rat::zero()], [Rat::zero(), Rat::zero()]]
}

fn mat_ident(c: &Rat) -> Mat2 {
    [[c.clone(), Rat::zero()], [Rat::zero(), c.clone()]]
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = mat_zero();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        }
    }
    out
}

fn mat_sub(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = mat_zero();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = &a[i][j] - &b[i][j];
        }
    }
    out
}

fn mat_scale(a: &Mat2, c: &Rat) -> Mat2 {
    let mut out = mat_zero();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = &a[i][j] * c;
        }
    }
    out
}

/// Data verified on a one-dimensional top component.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaTop {
    pub i: i64,
    pub weight: Rat,
}

/// Data verified on a two-dimensional top component; `h_eigenvalues` are
/// the diagonal entries of `o(H)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PiTop {
    pub i: i64,
    pub weight: Rat,
    pub h_eigenvalues: (Rat, Rat),
}

/// Result of the top-component verification for one `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct TopReport {
    pub p: i64,
    pub lambda_tops: Vec<LambdaTop>,
    pub pi_tops: Vec<PiTop>,
}

/// Express `o(gen)` in the ordered basis `(u1, u2)`. Each basis vector
/// lives in a single charge sector, so the expansion reduces to exact
/// proportionality within sectors.
fn matrix_of(l: &Lattice, gen: ZhuGen, basis: &[FockVector; 2]) -> Result<Mat2> {
    let charges: Vec<i64> = basis
        .iter()
        .map(|u| {
            let ch = u.charges();
            assert_eq!(ch.len(), 1, "basis vector spans several charge sectors");
            ch[0]
        })
        .collect();
    let mut m = mat_zero();
    for (j, u) in basis.iter().enumerate() {
        let image = l.zhu_o(gen, u)?;
        for charge in image.charges() {
            let component = image.restrict_charge(charge);
            let Some(k) = charges.iter().position(|&c| c == charge) else {
                return Err(Error::RelationFailure(format!(
                    "o({gen:?}) leaves the top component: charge {charge} from basis vector {j}"
                )));
            };
            let Some(c) = component.proportionality(&basis[k]) else {
                return Err(Error::RelationFailure(format!(
                    "o({gen:?}) image not proportional to basis vector {k}"
                )));
            };
            m[k][j] = c;
        }
    }
    Ok(m)
}

/// Verify, exactly, the five relation families on every irreducible top
/// component:
///
/// - `o(E)^2 = o(F)^2 = 0`,
/// - `o(H) o(F) = -q(h) o(F)`, `o(F) o(H) = q(h) o(F)` (and commutator),
/// - `o(H) o(E) = q(h) o(E)`, `o(E) o(H) = -q(h) o(E)` (and commutator),
/// - `o(E) o(F) - o(F) o(E) = -2 q(h) o(H)`,
/// - `o(H)^2 = C_p P(h) Id` and `o(omega) = h Id`,
///
/// plus triviality of `o(E), o(F), o(H)` on the one-dimensional tops.
pub fn top_component_relations(p: i64) -> Result<TopReport> {
    let l = Lattice::new(p)?;
    let q = q_poly(p)?;
    let c_p = c_p_const(p)?;
    let big_p = p_poly(p);

    let mut lambda_tops = Vec::new();
    for i in 1..=p {
        let h = zhu_root(i, p);
        let u = FockVector::exponential(i - 1);
        for gen in [ZhuGen::E, ZhuGen::F, ZhuGen::H] {
            let image = l.zhu_o(gen, &u)?;
            if !image.is_zero() {
                return Err(Error::RelationFailure(format!(
                    "o({gen:?}) nonzero on the one-dimensional top at h_{{{i},1}}"
                )));
            }
        }
        if l.zhu_o(ZhuGen::Omega, &u)? != u.scale(&h) {
            return Err(Error::RelationFailure(format!("o(omega) != h on top at h_{{{i},1}}")));
        }
        lambda_tops.push(LambdaTop { i, weight: h });
    }

    let mut pi_tops = Vec::new();
    for i in 2 * p..=3 * p - 1 {
        let h = zhu_root(i, p);
        let u1 = FockVector::exponential(2 * p - 1 - i);
        let u2 = l.screening_q(&u1)?;
        assert!(!u2.is_zero(), "Q e^{{gamma}} vanished on a two-dimensional top");
        let basis = [u1, u2];
        let m_e = matrix_of(&l, ZhuGen::E, &basis)?;
        let m_f = matrix_of(&l, ZhuGen::F, &basis)?;
        let m_h = matrix_of(&l, ZhuGen::H, &basis)?;
        let m_w = matrix_of(&l, ZhuGen::Omega, &basis)?;

        let q_h = q.eval(&h);
        let fail = |what: &str| {
            Err(Error::RelationFailure(format!("{what} fails on top at h_{{{i},1}} (p = {p})")))
        };
        if mat_mul(&m_e, &m_e) != mat_zero() {
            return fail("o(E)^2 = 0");
        }
        if mat_mul(&m_f, &m_f) != mat_zero() {
            return fail("o(F)^2 = 0");
        }
        if mat_mul(&m_h, &m_f) != mat_scale(&m_f, &-q_h.clone()) {
            return fail("o(H)o(F) = -q(h) o(F)");
        }
        if mat_mul(&m_f, &m_h) != mat_scale(&m_f, &q_h) {
            return fail("o(F)o(H) = q(h) o(F)");
        }
        if mat_mul(&m_h, &m_e) != mat_scale(&m_e, &q_h) {
            return fail("o(H)o(E) = q(h) o(E)");
        }
        if mat_mul(&m_e, &m_h) != mat_scale(&m_e, &-q_h.clone()) {
            return fail("o(E)o(H) = -q(h) o(E)");
        }
        let comm_ef = mat_sub(&mat_mul(&m_e, &m_f), &mat_mul(&m_f, &m_e));
        if comm_ef != mat_scale(&m_h, &(rat_x2(&q_h) * -Rat::one())) {
            return fail("o(E)o(F) - o(F)o(E) = -2q(h) o(H)");
        }
        if mat_mul(&m_h, &m_h) != mat_ident(&(&c_p * big_p.eval(&h))) {
            return fail("o(H)^2 = C_p P(h)");
        }
        if m_w != mat_ident(&h) {
            return fail("o(omega) = h Id");
        }
        if !m_h[0][1].is_zero() || !m_h[1][0].is_zero() {
            return fail("o(H) diagonal in the charge basis");
        }
        let eigs = (m_h[0][0].clone(), m_h[1][1].clone());
        if !((eigs.0 == -q_h.clone() && eigs.1 == q_h) || (eigs.0 == q_h && eigs.1 == -q_h)) {
            return fail("o(H) eigenvalues are -q(h), q(h)");
        }
        pi_tops.push(PiTop { i, weight: h, h_eigenvalues: eigs });
    }
    Ok(TopReport { p, lambda_tops, pi_tops })
}

fn rat_x2(x: &Rat) -> Rat {
    x + x
}

/// `o(H)` multiplies the charge-`t` exponential by `C(t, 2p-1)`.
pub fn top_h_action_on_charge(p: i64, t: i64) -> Result<Rat> {
    let l = Lattice::new(p)?;
    let v = FockVector::exponential(t);
    let image = l.zhu_o(ZhuGen::H, &v)?;
    image
        .proportionality(&v)
        .ok_or_else(|| Error::RelationFailure(format!("o(H) not scalar on charge {t}")))
}

/// Check `q.eval` convention against the triplet polynomial `P`:
/// exposed for tests that tie `q` and the top-component spectra together.
pub fn q_at_root(p: i64, i: i64) -> Result<Rat> {
    Ok(q_poly(p)?.eval(&zhu_root(i, p)))
}
