//! Closed-form Zhu-algebra data for the triplet algebra at lattice
//! parameter `p`: the conformal-weight grid `h_{m,n}`, the degree-`(3p-1)`
//! polynomial annihilating the Virasoro image, the binomial identity with
//! its residue oracle, the interpolation polynomials `H_p` and `q`, the
//! two-seed recursion for `A_p(t)`, and the idempotent decomposition.

mod idempotents;
mod top;

pub use idempotents::{idempotents, DimStatus, MatrixIdeal, OneDimIdeal, TwoDimIdeal, ZhuReport};
pub use top::{top_component_relations, LambdaTop, PiTop, TopReport};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binom_int, binom_poly, factorial, gen_binom, rat, rat_int, PolyQ, Rat};

/// `c_{p,1} = 1 - 6(p-1)^2/p`. Defined for all `p >= 1`.
pub fn central_charge(p: i64) -> Rat {
    assert!(p >= 1);
    Rat::one() - rat(6 * (p - 1) * (p - 1), p)
}

/// `h_{m,n} = (m - np - p + 1)(m - np + p - 1)/(4p)`.
pub fn weight_h(m: i64, n: i64, p: i64) -> Rat {
    rat((m - n * p - p + 1) * (m - n * p + p - 1), 4 * p)
}

/// The weight `h_{i,1}` of the `i`-th Zhu root, `1 <= i <= 3p-1`.
pub fn zhu_root(i: i64, p: i64) -> Rat {
    weight_h(i, 1, p)
}

/// Whether `n >= 2` is prime (trial division; inputs are desk-scale).
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The monic vanishing polynomial of the Virasoro image in Zhu's algebra:
/// `f_p(x) = prod_{i=1}^{3p-1} (x - h_{i,1})`, degree `3p-1`.
pub fn f_p_poly(p: i64) -> PolyQ {
    assert!(p >= 2);
    let mut f = PolyQ::one();
    for i in 1..=3 * p - 1 {
        f = &f * &PolyQ::from_coeffs(vec![-zhu_root(i, p), Rat::one()]);
    }
    f
}

/// `f_p` in grouped form
/// `(x-h_{p,1})(x-h_{2p,1}) prod_{i=1}^{p-1}(x-h_{i,1})^2 prod_{i=2p+1}^{3p-1}(x-h_{i,1})`.
pub fn f_p_factored(p: i64) -> PolyQ {
    assert!(p >= 2);
    let lin = |i: i64| PolyQ::from_coeffs(vec![-zhu_root(i, p), Rat::one()]);
    let mut f = &lin(p) * &lin(2 * p);
    for i in 1..=p - 1 {
        f = &f * &lin(i).pow(2);
    }
    for i in 2 * p + 1..=3 * p - 1 {
        f = &f * &lin(i);
    }
    f
}

/// `P(x) = (x-h_{p,1}) prod_{i=1}^{p-1} (x-h_{i,1})^2`, degree `2p-1`;
/// the square of the `H`-generator image is `C_p P([omega])`.
pub fn p_poly(p: i64) -> PolyQ {
    assert!(p >= 2);
    let lin = |i: i64| PolyQ::from_coeffs(vec![-zhu_root(i, p), Rat::one()]);
    let mut f = lin(p);
    for i in 1..=p - 1 {
        f = &f * &lin(i).pow(2);
    }
    f
}

/// The charge substitution `u(t) = t(t - 2p + 2)/(4p)`, satisfying
/// `u(t) = h_{t+1,1}` at integers.
pub fn charge_substitution(p: i64) -> PolyQ {
    PolyQ::from_coeffs(vec![Rat::zero(), rat(-(2 * p - 2), 4 * p), rat(1, 4 * p)])
}

/// The alternating binomial sum
/// `Phi~_p(t) = sum_{i=0}^{2p} (-1)^i C(2p,i) C(t,4p-1-i) C(t,2p+i-1)`,
/// a polynomial of degree `6p-2`.
pub fn phi_tilde_poly(p: i64) -> PolyQ {
    assert!(p >= 2);
    let mut acc = PolyQ::zero();
    for i in 0..=2 * p {
        let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        let c = Rat::from_integer(sign * binom_int(2 * p, i as u64));
        let term = &binom_poly((4 * p - 1 - i) as u32) * &binom_poly((2 * p + i - 1) as u32);
        acc = &acc + &term.scale(&c);
    }
    acc
}

/// `A_p = (-1)^p C(2p,p)/C(4p-1,p)`, the constant of the closed product
/// form of `Phi~_p`.
pub fn a_p_const(p: i64) -> Rat {
    let sign = if p % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    Rat::new(sign * binom_int(2 * p, p as u64), binom_int(4 * p - 1, p as u64))
}

/// The closed product form `A_p C(t,3p-1) C(t+p,3p-1)`.
pub fn phi_closed_poly(p: i64) -> PolyQ {
    let b = binom_poly((3 * p - 1) as u32);
    let shifted = b.compose(&PolyQ::from_coeffs(vec![rat_int(p), Rat::one()]));
    (&b * &shifted).scale(&a_p_const(p))
}

/// Coefficient of `z1^{4p-1} z2^{4p-1}` in `(z1-z2)^{2p} (1+z1)^t (1+z2)^t`,
/// by direct bivariate expansion. Implementation-independent oracle for
/// [`phi_tilde_poly`] evaluation.
pub fn residue_oracle(p: i64, t: u32) -> Rat {
    let deg = (4 * p - 1) as usize;
    // (z1 - z2)^{2p} as a dense coefficient table, built by repeated multiplication
    let mut kernel = vec![vec![BigInt::zero(); deg + 1]; deg + 1];
    kernel[0][0] = BigInt::one();
    for _ in 0..2 * p {
        let mut next = vec![vec![BigInt::zero(); deg + 1]; deg + 1];
        for (i, row) in kernel.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if i + 1 <= deg {
                    next[i + 1][j] += c;
                }
                if j + 1 <= deg {
                    next[i][j + 1] -= c;
                }
            }
        }
        kernel = next;
    }
    // (1+z)^t truncated above z^deg, again by repeated multiplication
    let mut pow = vec![BigInt::zero(); deg + 1];
    pow[0] = BigInt::one();
    for _ in 0..t {
        let mut next = pow.clone();
        for k in (1..=deg).rev() {
            let add = pow[k - 1].clone();
            next[k] += add;
        }
        pow = next;
    }
    let mut acc = BigInt::zero();
    for (i, row) in kernel.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * &pow[deg - i] * &pow[deg - j];
        }
    }
    Rat::from_integer(acc)
}

/// `B_p = (-1)^p C(2p,p) (4p)^{3p-1} / (C(4p-1,p) ((3p-1)!)^2)`, the
/// proportionality constant in `Phi~_p(t) = B_p f_p(u(t))`.
pub fn b_p_const(p: i64) -> Rat {
    let mut four_p_pow = BigInt::one();
    for _ in 0..3 * p - 1 {
        four_p_pow *= BigInt::from(4 * p);
    }
    let fact = factorial((3 * p - 1) as u64);
    a_p_const(p) * Rat::new(four_p_pow, &fact * &fact)
}

/// Degree-`(2p-2)` polynomial `H_p(t)`, from the pole-cleared closed form
/// `Pr_p(t)/(2p-1)! (S_p(t) + S~_p(t))`.
pub fn h_p_poly(p: i64) -> PolyQ {
    assert!(p >= 2);
    let lo = 2 * p - 1;
    let hi = 3 * p - 2;
    // Pr_p(t) = prod_i (t - i)(t + i - 2p + 2) over i = 2p-1 .. 3p-2
    let lin = |c: i64| PolyQ::from_coeffs(vec![rat_int(c), Rat::one()]);
    let mut acc = PolyQ::zero();
    for i in lo..=hi {
        // residue weight of the pole pair at t = i and t = -(i - 2p + 2)
        let num = {
            let f = factorial(i as u64);
            &f * &f
        };
        let den = {
            let a = factorial((i - 2 * p + 1) as u64);
            &a * &a * factorial((p + i) as u64) * factorial((3 * p - i - 2) as u64)
        };
        let sign = if (p - i).rem_euclid(2) == 0 { BigInt::one() } else { -BigInt::one() };
        let c_i = Rat::new(sign * num, den);
        // Pr_p(t)/(t - i) and Pr_p(t)/(t + i - 2p + 2) as polynomials
        let mut pr_over_first = PolyQ::one();
        let mut pr_over_second = PolyQ::one();
        for j in lo..=hi {
            if j != i {
                pr_over_first = &pr_over_first * &lin(-j);
            }
            pr_over_first = &pr_over_first * &lin(j - 2 * p + 2);
            pr_over_second = &pr_over_second * &lin(-j);
            if j != i {
                pr_over_second = &pr_over_second * &lin(j - 2 * p + 2);
            }
        }
        acc = &acc + &(&pr_over_first - &pr_over_second).scale(&c_i);
    }
    let h = acc.scale(&Rat::new(BigInt::one(), factorial((2 * p - 1) as u64)));
    assert_eq!(h.degree(), Some((2 * p - 2) as usize), "H_p degree");
    h
}

/// Independent interpolation route to `H_p`: the `2p` data points
/// `H_p(t) = C(t,2p-1)` for `t = 2p-1 .. 3p-2` and
/// `H_p(t) = -C(t,2p-1)` for `t = -p .. -1`.
pub fn h_p_lagrange(p: i64) -> Result<PolyQ> {
    let mut points = Vec::new();
    for t in 2 * p - 1..=3 * p - 2 {
        points.push((rat_int(t), Rat::from_integer(binom_int(t, (2 * p - 1) as u64))));
    }
    for t in -p..=-1 {
        points.push((rat_int(t), -Rat::from_integer(binom_int(t, (2 * p - 1) as u64))));
    }
    crate::exactmath::lagrange_interpolate(&points)
}

/// The unique degree-`(p-1)` polynomial with `H_p(t) = -q(t(t-2p+2)/(4p))`.
///
/// Fails with [`Error::NotSymmetric`] if `H_p` is not symmetric under
/// `t -> 2p-2-t` (that would indicate an implementation bug upstream).
pub fn q_poly(p: i64) -> Result<PolyQ> {
    let h = h_p_poly(p);
    let reflected = h.compose(&PolyQ::from_coeffs(vec![rat_int(2 * p - 2), rat_int(-1)]));
    if reflected != h {
        return Err(Error::NotSymmetric(format!("H_{p}(t) vs t -> {}-t", 2 * p - 2)));
    }
    let u = charge_substitution(p);
    let mut residue = -&h;
    let mut coeffs = vec![Rat::zero(); p as usize];
    for k in (0..p as usize).rev() {
        // u^k has leading coefficient (4p)^{-k}
        let mut scale = Rat::one();
        for _ in 0..k {
            scale *= rat_int(4 * p);
        }
        let a_k = residue.coeff(2 * k) * scale;
        if a_k.is_zero() {
            continue;
        }
        residue = &residue - &u.pow(k as u32).scale(&a_k);
        coeffs[k] = a_k;
    }
    if !residue.is_zero() {
        return Err(Error::NotSymmetric(format!("H_{p} is not a polynomial in u(t)")));
    }
    Ok(PolyQ::from_coeffs(coeffs))
}

/// True iff `q` vanishes at none of the `3p-1` Zhu roots; equivalently
/// `gcd(q, f_p) = 1`.
pub fn q_nonvanishing(p: i64) -> bool {
    let q = match q_poly(p) {
        Ok(q) => q,
        Err(_) => return false,
    };
    let pointwise = (1..=3 * p - 1).all(|i| !q.eval(&zhu_root(i, p)).is_zero());
    let by_gcd = q.gcd(&f_p_poly(p)) == PolyQ::one();
    assert_eq!(pointwise, by_gcd, "root sweep and gcd disagree");
    pointwise
}

/// `A_p(0), ..., A_p(t_max)` by the degree-two recursion seeded with the
/// hypergeometric closed forms. The recursion denominator vanishes at
/// `t = 2p-1`, so `t_max <= 2p-2` is a hard precondition.
pub fn a_p_sequence(p: i64, t_max: i64) -> Result<Vec<Rat>> {
    assert!(p >= 2 && t_max >= 0);
    if t_max >= 2 * p - 1 {
        return Err(Error::RecursionPole { p, t: 2 * p - 1 });
    }
    let base = gen_binom(&rat(2 * p - 3, 2), p as u32); // C(p - 3/2, p)
    let base_sq = &base * &base;
    let denom = gen_binom(&rat(4 * p - 3, 2), p as u32); // C(2p - 3/2, p)
    let mut four_pow = Rat::one();
    for _ in 0..p {
        four_pow *= rat_int(4);
    }
    let a0 = rat(-1, 2) * &four_pow * rat_int(2 * p - 1) * &base_sq / &denom;
    let mut seq = vec![a0];
    if t_max >= 1 {
        let a1 = -(&four_pow / rat_int(4))
            * rat_int(2 * p - 1)
            * rat_int(2 * p * p - 1)
            * &base_sq
            / (rat_int(p * p - 1) * &denom);
        seq.push(a1);
    }
    for t in 2..=t_max {
        let prev2 = &seq[(t - 2) as usize];
        let prev1 = &seq[(t - 1) as usize];
        let num = rat_int((t - 1) * (t - 1) * (3 * p - t)) * prev2
            + rat_int(2 * (t - p) * (t * t - 2 * p * t + 2 * p - 2 * p * p)) * prev1;
        let den = rat_int((t + p) * (t + 1 - 2 * p) * (t + 1 - 2 * p));
        seq.push(num / den);
    }
    Ok(seq)
}

/// Direct evaluation `A_p(t) = S_p(t) + S~_p(t)`; independent oracle for
/// the recursion. Defined away from the poles `t in [2p-1, 3p-2]` and
/// `t in [-p, -1]`.
pub fn a_p_direct(p: i64, t: i64) -> Rat {
    let mut acc = Rat::zero();
    for i in 2 * p - 1..=3 * p - 2 {
        let num = {
            let f = factorial(i as u64);
            &f * &f
        };
        let den = {
            let a = factorial((i - 2 * p + 1) as u64);
            &a * &a * factorial((p + i) as u64) * factorial((3 * p - i - 2) as u64)
        };
        let sign = if (p - i).rem_euclid(2) == 0 { Rat::one() } else { -Rat::one() };
        let weight = Rat::new(num, den);
        acc += &sign * &weight / rat_int(t - i);
        acc -= &sign * &weight / rat_int(t + i - 2 * p + 2);
    }
    acc
}

/// `C_p = (4p)^{2p-1}/((2p-1)!)^2`, pinned by the exact polynomial identity
/// `C(t,2p-1)^2 = C_p P(t(t-2p+2)/(4p))`; fails loudly if the identity
/// does not hold.
pub fn c_p_const(p: i64) -> Result<Rat> {
    assert!(p >= 2);
    let mut num = BigInt::one();
    for _ in 0..2 * p - 1 {
        num *= BigInt::from(4 * p);
    }
    let fact = factorial((2 * p - 1) as u64);
    let c_p = Rat::new(num, &fact * &fact);
    let lhs = binom_poly((2 * p - 1) as u32).pow(2);
    let rhs = p_poly(p).compose(&charge_substitution(p)).scale(&c_p);
    if lhs != rhs {
        return Err(Error::IdentityFailure(format!(
            "C(t,{})^2 != C_{p} P(u(t))",
            2 * p - 1
        )));
    }
    Ok(c_p)
}

/// Labels of the `p+1` blocks of the ordinary module category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLabel {
    /// Index `i` of the representative weight `h_{i,1}`.
    pub index: i64,
    /// The representative weight itself.
    pub weight: Rat,
}

/// Module labels `Lambda(i)` and `Pi(i)`, `1 <= i <= p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleId {
    Lambda(i64),
    Pi(i64),
}

/// Block of an irreducible module: `Lambda(i)` and `Pi(p-i)` share the
/// block `h_{i,1}` for `i < p`, while `Lambda(p)` and `Pi(p)` sit alone in
/// `h_{p,1}` and `h_{2p,1}`.
pub fn block_of(module: ModuleId, p: i64) -> BlockLabel {
    let index = match module {
        ModuleId::Lambda(i) => {
            assert!((1..=p).contains(&i));
            if i == p {
                p
            } else {
                i
            }
        }
        ModuleId::Pi(i) => {
            assert!((1..=p).contains(&i));
            if i == p {
                2 * p
            } else {
                p - i
            }
        }
    };
    BlockLabel { index, weight: zhu_root(index, p) }
}

/// All block labels: `h_{1,1}, ..., h_{p,1}, h_{2p,1}`.
pub fn block_labels(p: i64) -> Vec<BlockLabel> {
    let mut out: Vec<BlockLabel> =
        (1..=p).map(|i| BlockLabel { index: i, weight: zhu_root(i, p) }).collect();
    out.push(BlockLabel { index: 2 * p, weight: zhu_root(2 * p, p) });
    out
}

#[cfg(test)]
mod tests;
