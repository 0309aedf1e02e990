use super::*;
use crate::exactmath::{lagrange_interpolate, rat, rat_int};

#[test]
fn central_charges() {
    assert_eq!(central_charge(2), rat_int(-2));
    assert_eq!(central_charge(1), rat_int(1));
    assert_eq!(central_charge(3), rat_int(-7));
}

#[test]
fn weight_examples() {
    assert_eq!(weight_h(1, 1, 2), rat_int(0));
    assert_eq!(weight_h(2, 1, 2), rat(-1, 8));
    assert_eq!(weight_h(4, 1, 2), rat(3, 8));
    assert_eq!(weight_h(5, 1, 2), rat_int(1));
    for p in 2..=10 {
        assert_eq!(weight_h(p, 1, p), rat(-(p - 1) * (p - 1), 4 * p));
        // closed form of the first column
        for m in 0..3 * p {
            assert_eq!(weight_h(m + 1, 1, p), rat(m * (m - 2 * p + 2), 4 * p));
        }
    }
}

#[test]
fn weight_symmetry_and_gaps() {
    for p in 2..=50 {
        for m in 0..=2 * p - 2 {
            assert_eq!(weight_h(m + 1, 1, p), weight_h(2 * p - 1 - m, 1, p));
        }
        for i in 1..=p - 1 {
            assert!(zhu_root(i, p) < zhu_root(2 * p + i, p));
        }
    }
}

#[test]
fn f_p_at_p2() {
    // x^2 (x + 1/8)(x - 3/8)(x - 1)
    let expected = &(&PolyQ::monomial(Rat::one(), 2)
        * &PolyQ::from_coeffs(vec![rat(1, 8), rat_int(1)]))
        * &(&PolyQ::from_coeffs(vec![rat(-3, 8), rat_int(1)])
            * &PolyQ::from_coeffs(vec![rat_int(-1), rat_int(1)]));
    assert_eq!(f_p_poly(2), expected);
    assert!(f_p_poly(2).coeff(0).is_zero());
}

#[test]
fn f_p_roots_and_factored_form() {
    for p in 2..=10 {
        let f = f_p_poly(p);
        assert_eq!(f.degree(), Some((3 * p - 1) as usize));
        assert_eq!(f.leading(), Some(&Rat::one()));
        for i in 1..=3 * p - 1 {
            assert!(f.eval(&zhu_root(i, p)).is_zero(), "f_{p}(h_{{{i},1}}) != 0");
        }
        assert_eq!(f, f_p_factored(p));
    }
}

#[test]
fn f_p_double_roots() {
    // f_p / (x - h_{i,1})^2 has zero remainder exactly for i = 1..p-1
    for p in [2i64, 3, 5] {
        let f = f_p_poly(p);
        for i in 1..=p - 1 {
            let sq = PolyQ::from_coeffs(vec![-zhu_root(i, p), Rat::one()]).pow(2);
            let (_, rem) = f.divrem(&sq).unwrap();
            assert!(rem.is_zero(), "h_{{{i},1}} not a double root of f_{p}");
        }
        let sq = PolyQ::from_coeffs(vec![-zhu_root(2 * p, p), Rat::one()]).pow(2);
        let (_, rem) = f.divrem(&sq).unwrap();
        assert!(!rem.is_zero(), "h_{{2p,1}} unexpectedly a double root");
    }
}

#[test]
fn phi_tilde_spot_values() {
    // only one binomial survives at t = 3p-1
    assert_eq!(phi_tilde_poly(2).eval(&rat_int(5)), rat_int(6));
    assert_eq!(phi_tilde_poly(3).eval(&rat_int(8)), rat_int(-20));
    assert_eq!(a_p_const(2), rat(6, 21));
}

#[test]
fn phi_closed_form_identity() {
    for p in 2..=5 {
        assert_eq!(phi_tilde_poly(p), phi_closed_poly(p), "p = {p}");
    }
}

#[test]
fn phi_recursion_identity() {
    // (t+1)(p+t+1) Phi(t) = (2p-t-2)(3p-t-2) Phi(t+1) as polynomials
    for p in 2..=5 {
        let phi = phi_tilde_poly(p);
        let shift = PolyQ::from_coeffs(vec![rat_int(1), rat_int(1)]);
        let phi_next = phi.compose(&shift);
        let lhs = &(&PolyQ::from_coeffs(vec![rat_int(1), rat_int(1)])
            * &PolyQ::from_coeffs(vec![rat_int(p + 1), rat_int(1)]))
            * &phi;
        let rhs = &(&PolyQ::from_coeffs(vec![rat_int(2 * p - 2), rat_int(-1)])
            * &PolyQ::from_coeffs(vec![rat_int(3 * p - 2), rat_int(-1)]))
            * &phi_next;
        assert_eq!(lhs, rhs, "p = {p}");
    }
}

#[test]
fn residue_oracle_matches_polynomial() {
    assert_eq!(residue_oracle(2, 5), rat_int(6));
    assert_eq!(residue_oracle(2, 0), rat_int(0));
    for p in 2..=3 {
        let phi = phi_tilde_poly(p);
        for t in 0..=20u32 {
            assert_eq!(residue_oracle(p, t), phi.eval(&rat_int(t as i64)), "p={p} t={t}");
        }
    }
}

#[test]
fn b_p_shadow_identity() {
    for p in 2..=4 {
        let b_p = b_p_const(p);
        assert_eq!(b_p.is_negative(), p % 2 == 1, "sign of B_p is (-1)^p");
        let lhs = phi_tilde_poly(p);
        let rhs = f_p_poly(p).compose(&charge_substitution(p)).scale(&b_p);
        assert_eq!(lhs, rhs, "p = {p}");
    }
}

#[test]
fn h_p_frozen_polynomials() {
    assert_eq!(h_p_poly(2), PolyQ::from_coeffs(vec![rat(-4, 5), rat(-6, 5), rat(3, 5)]));
    assert_eq!(
        h_p_poly(3),
        PolyQ::from_coeffs(vec![
            rat_int(1),
            rat(25, 21),
            rat(55, 84),
            rat(-10, 21),
            rat(5, 84),
        ])
    );
    assert_eq!(
        h_p_poly(4),
        PolyQ::from_coeffs(vec![
            rat(-200, 143),
            rat(-3136, 1287),
            rat(-1897, 3861),
            rat(-245, 1287),
            rat(3395, 15444),
            rat(-35, 858),
            rat(35, 15444),
        ])
    );
}

#[test]
fn h_p_matches_lagrange_oracle() {
    for p in 2..=5 {
        assert_eq!(h_p_poly(p), h_p_lagrange(p).unwrap(), "p = {p}");
        // and the defining data itself
        let h = h_p_poly(p);
        for t in 2 * p - 1..=3 * p - 2 {
            assert_eq!(h.eval(&rat_int(t)), Rat::from_integer(binom_int(t, (2 * p - 1) as u64)));
        }
    }
}

#[test]
fn q_frozen_polynomials() {
    assert_eq!(q_poly(2).unwrap(), PolyQ::from_coeffs(vec![rat(4, 5), rat(-24, 5)]));
    assert_eq!(q_poly(3).unwrap(), PolyQ::from_coeffs(vec![rat_int(-1), rat(25, 7), rat(-60, 7)]));
    assert_eq!(
        q_poly(4).unwrap(),
        PolyQ::from_coeffs(vec![
            rat(200, 143),
            rat(-25088, 3861),
            rat(2240, 351),
            rat(-35840, 3861),
        ])
    );
}

#[test]
fn q_degree_and_nonvanishing() {
    for p in 2..=12 {
        let q = q_poly(p).unwrap();
        assert_eq!(q.degree(), Some((p - 1) as usize), "deg q for p = {p}");
        assert!(q_nonvanishing(p), "q vanishes at a Zhu root for p = {p}");
    }
}

#[test]
fn a_p_seeds_and_symmetry() {
    assert_eq!(a_p_sequence(2, 0).unwrap()[0], rat(-1, 5));
    for p in 2..=8 {
        let seq = a_p_sequence(p, 2 * p - 2).unwrap();
        for t in 0..=2 * p - 2 {
            assert_eq!(seq[t as usize], seq[(2 * p - 2 - t) as usize], "symmetry p={p} t={t}");
            assert_eq!(seq[t as usize], a_p_direct(p, t), "recursion vs direct p={p} t={t}");
            assert!(seq[t as usize].is_negative(), "A_{p}({t}) not negative");
        }
    }
}

#[test]
fn a_p_recursion_pole() {
    assert!(matches!(a_p_sequence(2, 3), Err(Error::RecursionPole { p: 2, t: 3 })));
}

#[test]
fn c_p_values() {
    assert_eq!(c_p_const(2).unwrap(), rat(128, 9));
    for p in 2..=6 {
        let c = c_p_const(p).unwrap();
        assert!(c.is_positive());
    }
}

#[test]
fn idempotent_p2_example() {
    let report = idempotents(2);
    assert_eq!(report.dim_bound, 11);
    let ideal = &report.two_dim_ideals[0];
    assert_eq!(ideal.lambda, rat(-832, 9));
    assert_eq!(ideal.nu, rat(64, 3));
    // v_1 = -64/9 (13x - 3)(x + 1/8)(x - 3/8)(x - 1)
    let expected = &(&PolyQ::from_coeffs(vec![rat_int(-3), rat_int(13)])
        * &PolyQ::from_coeffs(vec![rat(1, 8), rat_int(1)]))
        * &(&PolyQ::from_coeffs(vec![rat(-3, 8), rat_int(1)])
            * &PolyQ::from_coeffs(vec![rat_int(-1), rat_int(1)]));
    assert_eq!(ideal.v, expected.scale(&rat(-64, 9)));
    assert_eq!(report.matrix_ideals.len(), 2);
    assert_eq!(report.two_dim_ideals.len(), 1);
    assert_eq!(ideal.dimension, DimStatus::Proved);
}

#[test]
fn idempotent_relations_sweep() {
    // ring relations are asserted inside idempotents()
    for p in 2..=8 {
        let report = idempotents(p);
        assert_eq!(report.dim_bound, 6 * p - 1);
    }
}

#[test]
fn conjectural_status_for_composite_p() {
    let report = idempotents(4);
    let statuses: Vec<DimStatus> = report.two_dim_ideals.iter().map(|t| t.dimension).collect();
    assert_eq!(statuses, vec![DimStatus::Conjectural, DimStatus::Conjectural, DimStatus::Proved]);
    let report = idempotents(5);
    assert!(report.two_dim_ideals.iter().all(|t| t.dimension == DimStatus::Proved));
}

#[test]
fn top_relations_p2() {
    let report = top_component_relations(2).unwrap();
    assert_eq!(report.lambda_tops.len(), 2);
    assert_eq!(report.pi_tops.len(), 2);
    let q = q_poly(2).unwrap();
    for top in &report.pi_tops {
        let q_h = q.eval(&top.weight);
        let (a, b) = &top.h_eigenvalues;
        assert!(*a == -q_h.clone() && *b == q_h || *a == q_h && *b == -q_h);
    }
}

#[test]
fn top_h_charge_action() {
    for t in 0..=6 {
        assert_eq!(
            top_h_action_on_charge(2, t).unwrap(),
            Rat::from_integer(binom_int(t, 3)),
            "t = {t}"
        );
    }
}

#[test]
fn blocks() {
    assert_eq!(block_of(ModuleId::Lambda(1), 2).index, 1);
    assert_eq!(block_of(ModuleId::Pi(1), 2).index, 1);
    assert_eq!(block_of(ModuleId::Lambda(2), 2).index, 2);
    assert_eq!(block_of(ModuleId::Pi(2), 2).index, 4);
    for p in 2..=6 {
        let labels = block_labels(p);
        assert_eq!(labels.len(), (p + 1) as usize);
        let mut ws: Vec<Rat> = labels.iter().map(|b| b.weight.clone()).collect();
        ws.sort();
        ws.dedup();
        assert_eq!(ws.len(), (p + 1) as usize, "labels not distinct");
    }
}

#[test]
fn lagrange_reproduces_h2_from_spec_points() {
    // the 2p = 4 interpolation points for p = 2
    let pts = vec![
        (rat_int(-2), rat_int(4)),
        (rat_int(-1), rat_int(1)),
        (rat_int(3), rat_int(1)),
        (rat_int(4), rat_int(4)),
    ];
    assert_eq!(lagrange_interpolate(&pts).unwrap(), h_p_poly(2));
}
