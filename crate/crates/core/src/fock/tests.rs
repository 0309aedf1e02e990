use super::*;
use crate::exactmath::rat;

fn lat(p: i64) -> Lattice {
    Lattice::new(p).unwrap()
}

#[test]
fn rejects_degenerate_p() {
    assert!(matches!(Lattice::new(1), Err(Error::InvalidLatticeParam(1))));
    assert!(Lattice::new(2).is_ok());
}

#[test]
fn central_charges() {
    assert_eq!(lat(2).central_charge(), rat_int(-2));
    assert_eq!(lat(3).central_charge(), rat_int(-7));
}

#[test]
fn heisenberg_examples() {
    let l = lat(2);
    let v = FockVector::from_monomial(FockMonomial::new(vec![1], 0));
    // alpha(1) alpha(-1) e^0 = 2p * e^0
    assert_eq!(l.heis_mode(1, &v), FockVector::vacuum().scale(&rat_int(4)));
    // alpha(0) e^{-alpha} = -2p e^{-alpha}
    let f = FockVector::exponential(-4);
    assert_eq!(l.heis_mode(0, &f), f.scale(&rat_int(-4)));
    // alpha(2) alpha(-1) e^0 = 0
    assert!(l.heis_mode(2, &v).is_zero());
}

#[test]
fn exponential_mode_products() {
    for p in [2i64, 3] {
        let l = lat(p);
        let f = FockVector::exponential(-2 * p);
        // e^{-alpha}_{-2p-1} e^{-alpha} = e^{-2alpha}
        let prod = l.exp_mode_int(-2 * p, -2 * p - 1, &f).unwrap();
        assert_eq!(prod, FockVector::exponential(-4 * p));
        // e^{-alpha}_n e^{-alpha} = 0 for n >= -2p
        for n in -2 * p..=2 * p {
            assert!(l.exp_mode_int(-2 * p, n, &f).unwrap().is_zero(), "n = {n}");
        }
    }
}

#[test]
fn vacuum_annihilated_by_exp_zero_mode() {
    let l = lat(2);
    assert!(l.exp_mode_int(4, 0, &FockVector::vacuum()).unwrap().is_zero());
    assert!(l.screening_q(&FockVector::vacuum()).unwrap().is_zero());
}

#[test]
fn screening_sl2_string() {
    for p in [2i64, 3] {
        let l = lat(p);
        let f = FockVector::exponential(-2 * p);
        let h = l.screening_q(&f).unwrap();
        assert!(!h.is_zero());
        let e = l.screening_q(&h).unwrap();
        assert!(!e.is_zero());
        // Q^3 e^{-alpha} = 0
        assert!(l.screening_q(&e).unwrap().is_zero());
        assert_eq!(e, l.triplet_vector(Triplet::E));
    }
}

#[test]
fn qtilde_annihilates_generators() {
    for p in [2i64, 3] {
        let l = lat(p);
        assert!(l.screening_qtilde(&l.omega()).unwrap().is_zero(), "omega, p = {p}");
        for g in [Triplet::E, Triplet::F, Triplet::H] {
            let x = l.triplet_vector(g);
            assert!(l.screening_qtilde(&x).unwrap().is_zero(), "{g:?}, p = {p}");
        }
        // e^{alpha} is not in the kernel
        let ea = FockVector::exponential(2 * p);
        assert!(!l.screening_qtilde(&ea).unwrap().is_zero());
    }
}

#[test]
fn qtilde_rejects_dual_sectors() {
    let l = lat(2);
    let v = FockVector::exponential(1);
    assert!(matches!(l.screening_qtilde(&v), Err(Error::IncompatibleModeIndex { .. })));
}

#[test]
fn screenings_commute() {
    let l = lat(2);
    let mut v = FockVector::from_monomial(FockMonomial::new(vec![2, 1], 0));
    v.add_term(FockMonomial::new(vec![1], -4), rat(3, 2));
    let qt_q = l.screening_qtilde(&l.screening_q(&v).unwrap()).unwrap();
    let q_qt = l.screening_q(&l.screening_qtilde(&v).unwrap()).unwrap();
    assert_eq!(qt_q, q_qt);
}

#[test]
fn virasoro_weights() {
    for p in [2i64, 3] {
        let l = lat(p);
        // L(0) e^{-alpha} = (2p-1) e^{-alpha}
        let f = FockVector::exponential(-2 * p);
        assert_eq!(l.virasoro_mode(0, &f), f.scale(&rat_int(2 * p - 1)));
        // L(0) e^{gamma_i} = h_{i+1,1} e^{gamma_i}
        for i in 0..2 * p {
            let v = FockVector::exponential(i);
            assert_eq!(l.virasoro_mode(0, &v), v.scale(&l.exp_degree(i)));
        }
        // L(1) vacuum = 0
        assert!(l.virasoro_mode(1, &FockVector::vacuum()).is_zero());
    }
}

#[test]
fn virasoro_commutator_spot_check() {
    // [L(2), L(-2)] = 4 L(0) + c/2 on a mixed vector, p = 2 (c = -2).
    let l = lat(2);
    let mut v = FockVector::from_monomial(FockMonomial::new(vec![1, 1], 0));
    v.add_term(FockMonomial::new(vec![3], 4), rat(1, 3));
    let lhs = l
        .virasoro_mode(2, &l.virasoro_mode(-2, &v))
        .sub(&l.virasoro_mode(-2, &l.virasoro_mode(2, &v)));
    let c = l.central_charge();
    let rhs = l.virasoro_mode(0, &v).scale(&rat_int(4)).add(&v.scale(&(c / rat_int(2))));
    assert_eq!(lhs, rhs);
}

#[test]
fn triplet_f_maps_exponentials_down() {
    for p in [2i64, 3] {
        let l = lat(p);
        for n in 1..=2i64 {
            let j0 = 2 * n * p + 1;
            let src = FockVector::exponential(-2 * p * n);
            let dst = l.triplet_mode(Triplet::F, -j0, &src).unwrap();
            assert_eq!(dst, FockVector::exponential(-2 * p * (n + 1)), "p={p} n={n}");
        }
    }
}

#[test]
fn efh_nilpotency_spot() {
    let l = lat(2);
    let e = l.triplet_vector(Triplet::E);
    let f = l.triplet_vector(Triplet::F);
    let h = l.triplet_vector(Triplet::H);
    for i in [-4i64, -1, 0, 2] {
        assert!(l.triplet_mode(Triplet::E, i, &e).unwrap().is_zero(), "E_i E, i={i}");
        assert!(l.triplet_mode(Triplet::F, i, &f).unwrap().is_zero(), "F_i F, i={i}");
        let hh = l.triplet_mode(Triplet::H, i, &h).unwrap();
        assert!(l.screening_q(&hh).unwrap().is_zero(), "Q(H_i H), i={i}");
    }
}

#[test]
fn graded_dimensions() {
    let l = lat(2);
    assert_eq!(l.graded_dim(0, &rat_int(0)), 1);
    // degree 1 of V_L: alpha(-1) e^0 and e^{alpha} (the latter has degree p-(p-1) = 1)
    assert_eq!(l.graded_dim(0, &rat_int(1)), 2);
    // no vectors at fractional degree in the charge-0 sector
    assert_eq!(l.graded_dim(0, &rat(1, 2)), 0);
}

#[test]
fn kernel_dims_small() {
    let l = lat(2);
    assert_eq!(l.kernel_dim_qtilde(0), 1);
    assert_eq!(l.kernel_dim_qtilde(1), 0);
}

#[test]
fn singular_vector_checks() {
    let l = lat(2);
    for i in 0..4i64 {
        let v = FockVector::exponential(i);
        assert!(l.check_singular(&v, &l.exp_degree(i)));
    }
    let not_singular = FockVector::from_monomial(FockMonomial::new(vec![1], 0));
    assert!(!l.check_singular(&not_singular, &rat_int(1)));
    // zero vector is not singular
    assert!(!l.check_singular(&FockVector::zero(), &rat_int(0)));
}

#[test]
fn zhu_mode_examples() {
    let l = lat(2);
    // o(omega) e^{gamma_i} = h_{i+1,1} e^{gamma_i}
    let v = FockVector::exponential(1);
    assert_eq!(l.zhu_o(ZhuGen::Omega, &v).unwrap(), v.scale(&l.exp_degree(1)));
    // o(H) on charge-t exponentials acts by C(t, 2p-1)
    let t3 = FockVector::exponential(3);
    assert_eq!(l.zhu_o(ZhuGen::H, &t3).unwrap(), t3);
    let t4 = FockVector::exponential(4);
    assert_eq!(l.zhu_o(ZhuGen::H, &t4).unwrap(), t4.scale(&rat_int(4)));
}

#[test]
fn mode_grading() {
    let l = lat(3);
    let v = FockVector::from_monomial(FockMonomial::new(vec![2, 1], -1));
    let d = l.homogeneous_degree(&v).unwrap();
    // exp mode: degree shifts by wt(e^beta) - r - 1
    let out = l.exp_mode(2, &rat(-5, 3), &v).unwrap();
    assert!(!out.is_zero());
    let expected = &d + l.exp_degree(2) - rat(-5, 3) - rat_int(1);
    assert_eq!(l.homogeneous_degree(&out).unwrap(), expected);
    // heisenberg mode: degree shifts by -n
    let out = l.heis_mode(1, &v);
    assert_eq!(l.homogeneous_degree(&out).unwrap(), &d - rat_int(1));
    // virasoro mode: degree shifts by -n
    let out = l.virasoro_mode(-1, &v);
    assert_eq!(l.homogeneous_degree(&out).unwrap(), &d + rat_int(1));
}

#[test]
fn incompatible_mode_index() {
    let l = lat(2);
    let v = FockVector::exponential(1);
    // r = 0 needs <beta, mu> integral: b=2p on charge 1 gives pairing 1... compatible;
    // half-integral index on integral pairing is incompatible.
    assert!(l.exp_mode(4, &rat(1, 2), &v).is_err());
    assert!(l.exp_mode(4, &rat_int(0), &v).is_ok());
}
