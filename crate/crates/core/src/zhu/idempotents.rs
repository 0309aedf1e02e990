//! The idempotent decomposition of Zhu's algebra into matrix ideals,
//! (at most) two-dimensional ideals, and a one-dimensional ideal.
//!
//! Everything is realized inside `C[x]/(f_p)`: products over the roots
//! `h_{j,1}` run over `j = 1..3p-1` counting coincident weights
//! (`h_{j,1} = h_{2p-j,1}`) with multiplicity.

use num_traits::{One, Zero};

use super::{b_p_const, c_p_const, f_p_poly, is_prime, p_poly, q_poly, zhu_root};
use crate::exactmath::{PolyQ, Rat};

/// Whether a two-dimensional ideal is proved two-dimensional or only
/// conjecturally so (prime `p` and the `i = p-1` ideal are proved; the
/// rest is open for composite `p`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimStatus {
    Proved,
    Conjectural,
}

/// Matrix ideal attached to the weight `h_{i,1}`, `2p <= i <= 3p-1`,
/// isomorphic to `M_2(C)`; generators are recorded as symbolic tags.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixIdeal {
    pub index: i64,
    pub weight: Rat,
    pub generators: Vec<String>,
}

/// Ideal spanned by the idempotent `v_i` and the square-zero element `w_i`
/// at the doubled weight `h_{i,1}`, `1 <= i <= p-1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoDimIdeal {
    pub index: i64,
    pub weight: Rat,
    pub v: PolyQ,
    pub w: PolyQ,
    pub lambda: Rat,
    pub nu: Rat,
    pub dimension: DimStatus,
}

/// The one-dimensional ideal spanned by `v_p` at weight `h_{p,1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct OneDimIdeal {
    pub weight: Rat,
    pub v: PolyQ,
}

/// Structured result of the decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct ZhuReport {
    pub p: i64,
    pub f_p: PolyQ,
    pub q: PolyQ,
    pub p_poly: PolyQ,
    pub c_p: Rat,
    pub b_p: Rat,
    pub matrix_ideals: Vec<MatrixIdeal>,
    pub two_dim_ideals: Vec<TwoDimIdeal>,
    pub one_dim_ideal: OneDimIdeal,
    pub dim_bound: i64,
}

fn linear(root: Rat) -> PolyQ {
    PolyQ::from_coeffs(vec![-root, Rat::one()])
}

fn mulmod(a: &PolyQ, b: &PolyQ, f: &PolyQ) -> PolyQ {
    (a * b).divrem(f).expect("f_p nonzero").1
}

/// Compute the decomposition data and verify every ring relation exactly
/// in `C[x]/(f_p)`:
/// `v_i v_j = delta_ij v_i`, `w_i^2 = 0`, `v_i w_j = w_j v_i = delta_ij w_j`,
/// and `v_p v_i = v_p w_i = 0`.
pub fn idempotents(p: i64) -> ZhuReport {
    assert!(p >= 2);
    let f_p = f_p_poly(p);
    let prime = is_prime(p);

    let mut two_dim = Vec::new();
    for i in 1..=p - 1 {
        let h_i = zhu_root(i, p);
        // f = prod_{j != i, j != 2p-i} (x - h_{j,1}); r from f(x) = r(x)(x - h_i) + f(h_i)
        let mut f = PolyQ::one();
        for j in 1..=3 * p - 1 {
            if j == i || j == 2 * p - i {
                continue;
            }
            f = &f * &linear(zhu_root(j, p));
        }
        let f_at = f.eval(&h_i);
        assert!(!f_at.is_zero(), "tilde v_{i} vanishes at its own weight");
        let (r, rem) = f.divrem(&linear(h_i.clone())).unwrap();
        assert_eq!(rem, PolyQ::constant(f_at.clone()));
        let r_at = r.eval(&h_i);
        let lambda = -&r_at / (&f_at * &f_at);
        let nu = f_at.recip() + &h_i * &r_at / (&f_at * &f_at);
        let v = &PolyQ::from_coeffs(vec![nu.clone(), lambda.clone()]) * &f;
        let mut w = PolyQ::one();
        for j in 1..=3 * p - 1 {
            if j == i {
                continue;
            }
            w = &w * &linear(zhu_root(j, p));
        }
        let status = if prime || i == p - 1 { DimStatus::Proved } else { DimStatus::Conjectural };
        two_dim.push(TwoDimIdeal { index: i, weight: h_i, v, w, lambda, nu, dimension: status });
    }

    let mut v_p = PolyQ::one();
    for j in 1..=3 * p - 1 {
        if j == p {
            continue;
        }
        v_p = &v_p * &linear(zhu_root(j, p));
    }
    let one_dim = OneDimIdeal { weight: zhu_root(p, p), v: v_p };

    // ring relations, exactly mod f_p
    for a in &two_dim {
        let vv = mulmod(&a.v, &a.v, &f_p);
        assert_eq!(vv, a.v.divrem(&f_p).unwrap().1, "v_{} not idempotent", a.index);
        assert!(mulmod(&a.w, &a.w, &f_p).is_zero(), "w_{}^2 != 0", a.index);
        let vw = mulmod(&a.v, &a.w, &f_p);
        assert_eq!(vw, a.w.divrem(&f_p).unwrap().1, "v_{} w_{} != w_{}", a.index, a.index, a.index);
        for b in &two_dim {
            if a.index == b.index {
                continue;
            }
            assert!(mulmod(&a.v, &b.v, &f_p).is_zero(), "v_{} v_{} != 0", a.index, b.index);
            assert!(mulmod(&a.v, &b.w, &f_p).is_zero(), "v_{} w_{} != 0", a.index, b.index);
        }
        assert!(mulmod(&one_dim.v, &a.v, &f_p).is_zero(), "v_p v_{} != 0", a.index);
        assert!(mulmod(&one_dim.v, &a.w, &f_p).is_zero(), "v_p w_{} != 0", a.index);
    }

    let matrix_ideals = (2 * p..=3 * p - 1)
        .map(|i| {
            let others: Vec<String> =
                (2 * p..=3 * p - 1).filter(|j| *j != i).map(|j| format!("(x-h_{{{j},1}})")).collect();
            let l_i = others.join("*");
            MatrixIdeal {
                index: i,
                weight: zhu_root(i, p),
                generators: vec![
                    format!("A = C_p*{l_i}*P(x)"),
                    format!("B = {l_i}*[H]"),
                    format!("C = {l_i}*[E]"),
                    format!("D = {l_i}*[F]"),
                ],
            }
        })
        .collect();

    ZhuReport {
        p,
        f_p,
        q: q_poly(p).expect("q polynomial exists"),
        p_poly: p_poly(p),
        c_p: c_p_const(p).expect("C_p identity holds"),
        b_p: b_p_const(p),
        matrix_ideals,
        two_dim_ideals: two_dim,
        one_dim_ideal: one_dim,
        dim_bound: 6 * p - 1,
    }
}
