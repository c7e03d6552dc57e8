//! The general transformation for `(az;q)_inf/(bz;q)_inf G(z)` and the
//! identities derived from it.

use crate::coeffring::{RatFun, SymbolTable};
use crate::error::{Error, Result};
use crate::rng::CoeffRng;
use crate::series::{
    base_element, inv_pochhammer_infinite, param_pochhammer, param_pochhammer_inv, partial_theta, pochhammer_infinite,
    qhyper, qhyper_general, QCtx, TruncSeries, ZMono,
};

use super::{symbolic_params, Built, IdentityReport, Sides};

/// `G~(z; a, b) = sum_k t_k z^k (az;q)_k/(bz;q)_k`.
fn g_tilde(ctx: &QCtx, t: &[RatFun], a: &RatFun, b: &RatFun, order: usize) -> Result<TruncSeries> {
    let mut s = TruncSeries::zero(ctx.table(), order);
    for (k, tk) in t.iter().enumerate().take(order + 1) {
        if !tk.is_zero() {
            s = &s + &base_element(ctx, k, a, b, order)?.scalar_mul(tk);
        }
    }
    Ok(s)
}

/// `(aq/b;q)_n/(q;q)_n b^n q^{n(n-1)}`, the constant part of term `n`.
fn term_scalar(ctx: &QCtx, a: &RatFun, b: &RatFun, n: usize) -> Result<RatFun> {
    let n64 = n as i64;
    let ratio = &param_pochhammer(ctx, &(&(a * ctx.q()) / b), n64)? * &param_pochhammer_inv(ctx, ctx.q(), n64)?;
    Ok(&(&ratio * &b.pow(n64)?) * &ctx.q_pow(n64 * (n64 - 1)))
}

/// `(az;q)_inf/(bz;q)_inf G(z) = sum_n (aq/b;q)_n/(q;q)_n (az;q)_n/(bz;q)_n
///   (bz)^n q^{n(n-1)} (G~(zq^n;a,b) - azq^{2n} G~(zq^{n+1};a/q,b/q))`,
/// with `G = sum_k t_k z^k`. Here `(az;q)_n`, `(bz;q)_n` are series in `z`
/// and `(aq/b;q)_n`, `(q;q)_n` are constants.
pub fn theorem16_sides(ctx: &QCtx, t: &[RatFun], a: &RatFun, b: &RatFun, order: usize) -> Result<Sides> {
    let g = TruncSeries::from_poly(ctx.table(), t, order);
    let lhs = &(&pochhammer_infinite(ctx, a, order) * &inv_pochhammer_infinite(ctx, b, order)) * &g;
    let qinv = ctx.q_pow(-1);
    let gt = g_tilde(ctx, t, a, b, order)?;
    let gt_shifted = g_tilde(ctx, t, &(a * &qinv), &(b * &qinv), order)?;
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let n64 = n as i64;
        let m = order - n;
        let correction = gt_shifted
            .truncate(m)
            .shift_z_by_q_power(ctx, n64 + 1)
            .scalar_mul(&(a * &ctx.q_pow(2 * n64)))
            .mul_z_pow(1);
        let mut term = &gt.truncate(m).shift_z_by_q_power(ctx, n64) - &correction;
        term.mul_base_ratio(ctx, n, a, b);
        rhs.push(term.scalar_mul(&term_scalar(ctx, a, b, n)?).mul_z_pow_extend(n, order));
    }
    Ok(Sides::new(vec![lhs], rhs))
}

/// Pre-limit form of the `r+3 phi r+2` expansion:
/// `(azq;q)_inf/(bz;q)_inf r+1 phi r(A; B; q, cz) = sum_n (aq/b;q)_n/(q;q)_n
///   (az;q)_n/(bz;q)_n (bz)^n q^{n(n-1)} (1-azq^{2n})/(1-az) H_n`, where
/// `H_n = r+3 phi r+2(azq^n, azq^{2n+1}, A; bzq^n, azq^{2n}, B; q, czq^n)`.
pub fn coro_tlnew_sides(
    ctx: &QCtx,
    a: &RatFun,
    b: &RatFun,
    uppers: &[RatFun],
    lowers: &[RatFun],
    c: &RatFun,
    order: usize,
) -> Result<Sides> {
    if uppers.len() != lowers.len() + 1 {
        return Err(Error::Domain(format!(
            "expected r+1 upper and r lower parameters, got {} and {}",
            uppers.len(),
            lowers.len()
        )));
    }
    let phi = qhyper(ctx, uppers, lowers, c, order)?;
    let lhs = &(&pochhammer_infinite(ctx, &(a * ctx.q()), order) * &inv_pochhammer_infinite(ctx, b, order)) * &phi;
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let n64 = n as i64;
        let qn = ctx.q_pow(n64);
        let q2n = ctx.q_pow(2 * n64);
        let mut up = vec![ZMono::linear(a * &qn), ZMono::linear(&(a * &q2n) * ctx.q())];
        up.extend(uppers.iter().cloned().map(ZMono::constant));
        let mut lo = vec![ZMono::linear(b * &qn), ZMono::linear(a * &q2n)];
        lo.extend(lowers.iter().cloned().map(ZMono::constant));
        let mut term = qhyper_general(ctx, &up, &lo, &ZMono::linear(c * &qn), order - n)?;
        term.mul_base_ratio(ctx, n, a, b);
        term.mul_binomial(&(a * &q2n), 1);
        term.div_binomial(a, 1);
        rhs.push(term.scalar_mul(&term_scalar(ctx, a, b, n)?).mul_z_pow_extend(n, order));
    }
    Ok(Sides::new(vec![lhs], rhs))
}

/// `2phi1(A, B; C; q, z) = sum_n (ABq/C;q)_n/(q;q)_n (ABz/C;q)_n/(z;q)_n
///   z^n q^{n(n-1)} (1 - ABzq^{2n}/C)
///   4phi3(ABzq^n/C, ABzq^{2n+1}/C, C/A, C/B; C, zq^n, ABzq^{2n}/C; q, ABzq^n/C)`.
/// `(ABz/C;q)_n` and `(z;q)_n` are series in `z`.
pub fn two_phi_one_sides(ctx: &QCtx, ua: &RatFun, ub: &RatFun, lc: &RatFun, order: usize) -> Result<Sides> {
    let one = ctx.one();
    let lhs = qhyper(ctx, &[ua.clone(), ub.clone()], std::slice::from_ref(lc), &one, order)?;
    let e = &(ua * ub) / lc;
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let n64 = n as i64;
        let qn = ctx.q_pow(n64);
        let q2n = ctx.q_pow(2 * n64);
        let up = [
            ZMono::linear(&e * &qn),
            ZMono::linear(&(&e * &q2n) * ctx.q()),
            ZMono::constant(lc / ua),
            ZMono::constant(lc / ub),
        ];
        let lo = [ZMono::constant(lc.clone()), ZMono::linear(qn.clone()), ZMono::linear(&e * &q2n)];
        let mut term = qhyper_general(ctx, &up, &lo, &ZMono::linear(&e * &qn), order - n)?;
        term.mul_base_ratio(ctx, n, &e, &one);
        term.mul_binomial(&(&e * &q2n), 1);
        let scalar = &(&param_pochhammer(ctx, &(&e * ctx.q()), n64)? * &param_pochhammer_inv(ctx, ctx.q(), n64)?)
            * &ctx.q_pow(n64 * (n64 - 1));
        rhs.push(term.scalar_mul(&scalar).mul_z_pow_extend(n, order));
    }
    Ok(Sides::new(vec![lhs], rhs))
}

/// `(zq;q)_inf/(-zq;q)_inf + sum_n (-1;q)_n/(q;q)_n (z;q)_n/(-zq;q)_n (-z)^n q^{n^2+n}
///   = sum_n (-1;q)_n/(q;q)_n (z;q)_n/(-zq;q)_n (1+q^n+zq^n-zq^{2n}) (-z)^n q^{n^2}
///     theta(z^2 q^{2n+1}; q^2)`.
/// `(z;q)_n`, `(-zq;q)_n` are series; `(-1;q)_n`, `(q;q)_n` are constants.
pub fn partial_theta_sides(ctx: &QCtx, order: usize) -> Result<Sides> {
    let one = ctx.one();
    let negq = -ctx.q().clone();
    let mut lhs = vec![&pochhammer_infinite(ctx, ctx.q(), order) * &inv_pochhammer_infinite(ctx, &negq, order)];
    let mut rhs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let n64 = n as i64;
        let sign = if n % 2 == 0 { ctx.one() } else { ctx.int(-1) };
        let pref = &(&param_pochhammer(ctx, &ctx.int(-1), n64)? * &param_pochhammer_inv(ctx, ctx.q(), n64)?) * &sign;
        let ratio = base_element(ctx, n, &one, &negq, order)?;
        lhs.push(ratio.scalar_mul(&(&pref * &ctx.q_pow(n64 * n64 + n64))));

        let qn = ctx.q_pow(n64);
        let lin = TruncSeries::from_poly(ctx.table(), &[&one + &qn, &qn - &ctx.q_pow(2 * n64)], order);
        let theta = partial_theta(ctx, 2, &ctx.q_pow(2 * n64 + 1), 2, order);
        let term = &(&ratio * &lin) * &theta;
        rhs.push(term.scalar_mul(&(&pref * &ctx.q_pow(n64 * n64))));
    }
    Ok(Sides::new(lhs, rhs))
}

fn ctx_with(extra: &[&str]) -> Result<QCtx> {
    QCtx::new(&SymbolTable::standard(extra)?)
}

fn theorem16_built_with(ctx: QCtx, t: Vec<RatFun>, params: Vec<(String, String)>, order: usize) -> Result<Built> {
    let (a, b) = (ctx.sym("a")?, ctx.sym("b")?);
    let sides = theorem16_sides(&ctx, &t, &a, &b, order)?;
    Ok(Built { ctx, parameters: params, sides })
}

pub(super) fn theorem16_unit_built(order: usize) -> Result<Built> {
    let ctx = ctx_with(&[])?;
    let t = vec![ctx.one()];
    let mut params = symbolic_params(&["a", "b"]);
    params.push(("t".into(), "1, 0, 0, ...".into()));
    theorem16_built_with(ctx, t, params, order)
}

/// `t_k = (A;q)_k/(q;q)_k B^k`, i.e. `G = (ABz;q)_inf/(Bz;q)_inf`.
pub fn three_phi_two_weights(ctx: &QCtx, ua: &RatFun, ub: &RatFun, order: usize) -> Result<Vec<RatFun>> {
    (0..=order as i64)
        .map(|k| {
            Ok(&(&param_pochhammer(ctx, ua, k)? * &param_pochhammer_inv(ctx, ctx.q(), k)?) * &ub.pow(k)?)
        })
        .collect()
}

pub(super) fn theorem16_3phi2_built(order: usize) -> Result<Built> {
    let ctx = ctx_with(&["A", "B"])?;
    let t = three_phi_two_weights(&ctx, &ctx.sym("A")?, &ctx.sym("B")?, order)?;
    let mut params = symbolic_params(&["a", "b", "A", "B"]);
    params.push(("t_k".into(), "(A;q)_k/(q;q)_k*B^k".into()));
    theorem16_built_with(ctx, t, params, order)
}

pub(super) fn theorem16_random_built(order: usize, seed: u64) -> Result<Built> {
    let ctx = ctx_with(&[])?;
    let t = CoeffRng::stream(seed, 16).coeffs(ctx.table(), order + 1);
    let mut params = symbolic_params(&["a", "b"]);
    params.push(("t".into(), format!("random(seed={seed})")));
    theorem16_built_with(ctx, t, params, order)
}

fn coro_built(ctx: QCtx, uppers: Vec<RatFun>, lowers: Vec<RatFun>, c: RatFun, order: usize) -> Result<Built> {
    let (a, b) = (ctx.sym("a")?, ctx.sym("b")?);
    let sides = coro_tlnew_sides(&ctx, &a, &b, &uppers, &lowers, &c, order)?;
    let mut params = symbolic_params(&["a", "b"]);
    for (i, u) in uppers.iter().enumerate() {
        params.push((format!("A{}", i + 1), u.to_string()));
    }
    for (i, l) in lowers.iter().enumerate() {
        params.push((format!("B{}", i + 1), l.to_string()));
    }
    params.push(("c".into(), c.to_string()));
    Ok(Built { ctx, parameters: params, sides })
}

pub(super) fn coro_tlnew_r0_built(order: usize) -> Result<Built> {
    let ctx = ctx_with(&["A", "c"])?;
    let (ua, c) = (ctx.sym("A")?, ctx.sym("c")?);
    coro_built(ctx, vec![ua], Vec::new(), c, order)
}

pub(super) fn coro_tlnew_upper_q_built(order: usize) -> Result<Built> {
    let ctx = ctx_with(&["c"])?;
    let (q, c) = (ctx.q().clone(), ctx.sym("c")?);
    coro_built(ctx, vec![q], Vec::new(), c, order)
}

pub(super) fn coro_tlnew_r1_built(order: usize) -> Result<Built> {
    let ctx = ctx_with(&["A1", "A2", "B1", "c"])?;
    let uppers = vec![ctx.sym("A1")?, ctx.sym("A2")?];
    let lowers = vec![ctx.sym("B1")?];
    let c = ctx.sym("c")?;
    coro_built(ctx, uppers, lowers, c, order)
}

pub(super) fn two_phi_one_built(order: usize, a_eq_c: bool) -> Result<Built> {
    let ctx = ctx_with(&["A", "B", "C"])?;
    let (ub, lc) = (ctx.sym("B")?, ctx.sym("C")?);
    let ua = if a_eq_c { lc.clone() } else { ctx.sym("A")? };
    let sides = two_phi_one_sides(&ctx, &ua, &ub, &lc, order)?;
    let params = vec![
        ("A".to_string(), ua.to_string()),
        ("B".to_string(), "B".to_string()),
        ("C".to_string(), "C".to_string()),
    ];
    Ok(Built { ctx, parameters: params, sides })
}

pub(super) fn partial_theta_built(order: usize) -> Result<Built> {
    let ctx = QCtx::new(&SymbolTable::new(&["q"])?)?;
    let sides = partial_theta_sides(&ctx, order)?;
    Ok(Built { ctx, parameters: Vec::new(), sides })
}

/// Checks the general transformation for `G = sum_k t_k z^k` with symbolic
/// `a`, `b`. The weights must live in `ctx`'s symbol table.
pub fn check_theorem16(ctx: &QCtx, t: &[RatFun], order: usize) -> Result<IdentityReport> {
    let b = theorem16_built_with(ctx.clone(), t.to_vec(), symbolic_params(&["a", "b"]), order)?;
    Ok(b.report("theorem16", order))
}

pub fn check_coro_tlnew(ctx: &QCtx, uppers: &[RatFun], lowers: &[RatFun], c: &RatFun, order: usize) -> Result<IdentityReport> {
    let b = coro_built(ctx.clone(), uppers.to_vec(), lowers.to_vec(), c.clone(), order)?;
    Ok(b.report("coro_tlnew", order))
}

pub fn check_2phi1_to_4phi3(order: usize) -> Result<IdentityReport> {
    Ok(two_phi_one_built(order, false)?.report("2phi1_to_4phi3", order))
}

pub fn check_partial_theta(order: usize) -> Result<IdentityReport> {
    Ok(partial_theta_built(order)?.report("partial_theta", order))
}
