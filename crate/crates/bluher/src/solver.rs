//! Closed-form root finding for x^(q+1) + x + a over GF(p^n), q = p^k.
//!
//! The trinomial has 0, 1, 2, or p^d + 1 roots, d = gcd(n, k). Which case
//! holds is decided by two resolvent values F = A_m(a) and G built from the
//! coefficient recurrence in [`crate::sequence`]. When F is nonzero the roots
//! come from a single quadratic in disguise; when F vanishes there are
//! p^d + 1 roots and they are assembled from a kernel element of the
//! linearized polynomial x^(q^2) + x^q + ax found in a large extension field.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elt, FieldCtx};
use crate::linpoly::artin_schreier_solve;
use crate::sequence::{build_g1_at, build_g2_at, Instance};

/// How many candidates the extension-field scan will try before giving up.
const SCAN_CAP: u64 = 10_000;

/// Which of the root-count cases an instance fell into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// Odd p, F != 0, the discriminant is a nonsquare: no roots.
    OddNone,
    /// Odd p, F != 0, the discriminant vanishes: one root.
    OddOne,
    /// Odd p, F != 0, the discriminant is a nonzero square: two roots.
    OddTwo,
    /// p = 2, F != 0, G != 0, trace obstruction nonzero: no roots.
    Char2None,
    /// p = 2, F != 0, G = 0: one root.
    Char2One,
    /// p = 2, F != 0, G != 0, trace obstruction vanishes: two roots.
    Char2Two,
    /// F = 0: p^d + 1 roots.
    ManyRoots,
}

impl Case {
    /// Stable machine-readable label.
    pub fn label(&self) -> &'static str {
        match self {
            Case::OddNone => "odd-none",
            Case::OddOne => "odd-one",
            Case::OddTwo => "odd-two",
            Case::Char2None => "char2-none",
            Case::Char2One => "char2-one",
            Case::Char2Two => "char2-two",
            Case::ManyRoots => "pd1",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Roots of one instance together with the intermediate quantities that
/// produced them.
///
/// Diagnostics map stable keys to element encodings. Values live in GF(Q)
/// except `zeta` and `t_n_arg` (the quadratic extension GF(Q^2)) and
/// `x_prime` (the ambient field of the p^d + 1 pipeline).
#[derive(Clone, Debug)]
pub struct Solution {
    pub case: Case,
    pub count: u64,
    /// Sorted by encoding.
    pub roots: Vec<Elt>,
    pub diagnostics: BTreeMap<String, u64>,
}

/// Predict the root count without extracting roots.
pub fn classify(inst: &Instance) -> Result<u64> {
    let f = inst.eval_f();
    if f.is_zero() {
        return Ok(inst.pd() + 1);
    }
    let g = inst.eval_g();
    if inst.p() == 2 {
        if g.is_zero() {
            return Ok(1);
        }
        let h = char2_obstruction(inst, &g)?;
        return Ok(if h.is_zero() { 2 } else { 0 });
    }
    let e = odd_discriminant(inst, &f, &g)?;
    if e.is_zero() {
        return Ok(1);
    }
    let ctx = inst.ctx();
    let chi = ctx.pow(&e, (inst.pd() - 1) / 2);
    Ok(if chi == ctx.one() { 2 } else { 0 })
}

/// Find every root, dispatching on the case.
pub fn solve(inst: &Instance) -> Result<Solution> {
    if inst.eval_f().is_zero() {
        solve_pd1(inst)
    } else {
        solve_le2(inst)
    }
}

/// G^2 - 4aF^(q+1), an element of GF(p^d) when p is odd.
fn odd_discriminant(inst: &Instance, f: &Elt, g: &Elt) -> Result<Elt> {
    let ctx = inst.ctx();
    let fq1 = ctx.mul(&ctx.frobenius(f, inst.k()), f);
    let e = ctx.sub(&ctx.mul(g, g), &ctx.mul(&ctx.scale(4, inst.a()), &fq1));
    if !ctx.in_subfield(&e, inst.d())? {
        return Err(Error::InternalCheckFailed(format!(
            "discriminant {} is outside GF({}^{})",
            ctx.encoding(&e),
            inst.p(),
            inst.d()
        )));
    }
    Ok(e)
}

/// Nr(a)/G^2 for p = 2, an element of GF(p^d); its trace to GF(2) decides
/// between zero and two roots.
fn char2_obstruction(inst: &Instance, g: &Elt) -> Result<Elt> {
    let ctx = inst.ctx();
    let nr = ctx.norm_rel(inst.a(), inst.d(), inst.m())?;
    let y = ctx.div(&nr, &ctx.mul(g, g))?;
    if !ctx.in_subfield(&y, inst.d())? {
        return Err(Error::InternalCheckFailed(format!(
            "norm quotient {} is outside GF(2^{})",
            ctx.encoding(&y),
            inst.d()
        )));
    }
    ctx.trace_rel(&y, 1, inst.d())
}

/// Solve an instance with at most two roots (F != 0).
///
/// Fails with [`Error::CasePd1`] when F = 0.
pub fn solve_le2(inst: &Instance) -> Result<Solution> {
    let f = inst.eval_f();
    if f.is_zero() {
        return Err(Error::CasePd1);
    }
    let sol = if inst.p() == 2 {
        solve_le2_char2(inst, &f)?
    } else {
        solve_le2_odd(inst, &f)?
    };
    check_roots(inst, &sol.roots, sol.count)?;
    Ok(sol)
}

fn solve_le2_odd(inst: &Instance, f: &Elt) -> Result<Solution> {
    let ctx = inst.ctx();
    let g = inst.eval_g();
    let e = odd_discriminant(inst, f, &g)?;
    let mut diagnostics = BTreeMap::new();
    diagnostics.insert("f".to_string(), ctx.encoding(f));
    diagnostics.insert("g".to_string(), ctx.encoding(&g));
    diagnostics.insert("e_disc".to_string(), ctx.encoding(&e));
    let two_f_inv = ctx.inv(&ctx.scale(2, f))?;
    if e.is_zero() {
        let x = ctx.mul(&ctx.neg(&g), &two_f_inv);
        return Ok(Solution { case: Case::OddOne, count: 1, roots: vec![x], diagnostics });
    }
    let chi = ctx.pow(&e, (inst.pd() - 1) / 2);
    if chi != ctx.one() {
        return Ok(Solution { case: Case::OddNone, count: 0, roots: vec![], diagnostics });
    }
    let r = ctx.sqrt_in_subfield(&e, inst.d())?;
    diagnostics.insert("sqrt_e".to_string(), ctx.encoding(&r));
    let x1 = ctx.mul(&ctx.sub(&r, &g), &two_f_inv);
    let x2 = ctx.mul(&ctx.sub(&ctx.neg(&r), &g), &two_f_inv);
    let mut roots = vec![x1, x2];
    roots.sort_by_key(|x| ctx.encoding(x));
    Ok(Solution { case: Case::OddTwo, count: 2, roots, diagnostics })
}

fn solve_le2_char2(inst: &Instance, f: &Elt) -> Result<Solution> {
    let ctx = inst.ctx();
    let g = inst.eval_g();
    let mut diagnostics = BTreeMap::new();
    diagnostics.insert("f".to_string(), ctx.encoding(f));
    diagnostics.insert("g".to_string(), ctx.encoding(&g));
    if g.is_zero() {
        // Single root (aF^(q-1))^(2^(n-1)), the square root of aF^(q-1).
        let fq1 = ctx.div(&ctx.frobenius(f, inst.k()), f)?;
        let z = ctx.mul(inst.a(), &fq1);
        let x = ctx.frobenius(&z, inst.n() - 1);
        return Ok(Solution { case: Case::Char2One, count: 1, roots: vec![x], diagnostics });
    }
    let h = char2_obstruction(inst, &g)?;
    diagnostics.insert("h".to_string(), ctx.encoding(&h));
    if !h.is_zero() {
        return Ok(Solution { case: Case::Char2None, count: 0, roots: vec![], diagnostics });
    }
    // Two roots. Solve z^2 + z = aF^(q+1)/G^2 inside GF(Q^2) with the
    // length-n twisted sum, then pull z back down.
    let fq1 = ctx.mul(&ctx.frobenius(f, inst.k()), f);
    let e = ctx.div(&ctx.mul(inst.a(), &fq1), &ctx.mul(&g, &g))?;
    diagnostics.insert("e_quad".to_string(), ctx.encoding(&e));
    let quad = inst.quad_ext()?;
    let qctx = &quad.ctx;
    let zeta = qctx.pow(&qctx.generator(), inst.field_size() - 1);
    diagnostics.insert("zeta".to_string(), qctx.encoding(&zeta));
    let y = qctx.div(&quad.lift(&e)?, &qctx.add(&zeta, &qctx.one()))?;
    diagnostics.insert("t_n_arg".to_string(), qctx.encoding(&y));
    let z_up = qctx.trace_rel(&y, 1, inst.n())?;
    let z = quad.project(&z_up)?.ok_or_else(|| {
        Error::InternalCheckFailed(format!(
            "twisted sum {} did not land in GF(Q)",
            qctx.encoding(&z_up)
        ))
    })?;
    diagnostics.insert("t_n".to_string(), ctx.encoding(&z));
    let g_over_f = ctx.div(&g, f)?;
    let x1 = ctx.mul(&g_over_f, &z);
    let x2 = ctx.add(&x1, &g_over_f);
    let mut roots = vec![x1, x2];
    roots.sort_by_key(|x| ctx.encoding(x));
    Ok(Solution { case: Case::Char2Two, count: 2, roots, diagnostics })
}

/// Solve an instance with p^d + 1 roots (F = 0).
///
/// Fails with [`Error::NotPd1Case`] when F != 0. One root x0 is produced by
/// the extension-field pipeline; the rest are (w0 + alpha)^(q-1) x0 where
/// w0 solves w^q - w + 1/(beta x0) = 0 and alpha runs over GF(p^d).
pub fn solve_pd1(inst: &Instance) -> Result<Solution> {
    if !inst.eval_f().is_zero() {
        return Err(Error::NotPd1Case);
    }
    let ctx = inst.ctx();
    let mut diagnostics = BTreeMap::new();
    let b_m = inst.eval_b(inst.m())?;
    diagnostics.insert("b_m".to_string(), ctx.encoding(&b_m));

    let x0 = find_x0(inst, &mut diagnostics)?;
    diagnostics.insert("x0".to_string(), ctx.encoding(&x0));

    // beta in GF(Q)* with beta^(q-1) = x0^2 / a.
    let target = ctx.div(&ctx.mul(&x0, &x0), inst.a())?;
    let mut beta = None;
    for v in 1..ctx.size() {
        let b = ctx.from_encoding(v)?;
        if ctx.div(&ctx.frobenius(&b, inst.k()), &b)? == target {
            beta = Some(b);
            break;
        }
    }
    let beta = beta.ok_or_else(|| {
        Error::InternalCheckFailed(format!(
            "x0^2/a = {} is not a (q-1)-th power",
            ctx.encoding(&target)
        ))
    })?;
    diagnostics.insert("beta".to_string(), ctx.encoding(&beta));

    let c = ctx.inv(&ctx.mul(&beta, &x0))?;
    let ws = artin_schreier_solve(ctx, &c, inst.k())?;
    if ws.len() as u64 != inst.pd() {
        return Err(Error::InternalCheckFailed(format!(
            "w^q - w + 1/(beta x0) = 0 has {} solutions, expected {}",
            ws.len(),
            inst.pd()
        )));
    }
    let w0 = ws[0].clone();
    diagnostics.insert("w0".to_string(), ctx.encoding(&w0));

    let mut roots = vec![x0.clone()];
    for alpha in ctx.subfield_elements(inst.d())? {
        let w = ctx.add(&w0, &alpha);
        let pow = ctx.div(&ctx.frobenius(&w, inst.k()), &w)?;
        roots.push(ctx.mul(&pow, &x0));
    }
    roots.sort_by_key(|x| ctx.encoding(x));
    let count = inst.pd() + 1;
    check_roots(inst, &roots, count)?;
    Ok(Solution { case: Case::ManyRoots, count, roots, diagnostics })
}

/// Produce one root of the trinomial via the ambient field GF(q^N).
///
/// Scans x' in ambient encoding order for a nonzero image under G2, raises it
/// to the s-th power, and multiplies by embedded delta in GF(Q)* until G1 of
/// the product is a nonzero kernel element y of x^(q^2) + x^q + ax; then
/// x0 = y^(q-1) lies in GF(Q) and kills the trinomial.
fn find_x0(inst: &Instance, diagnostics: &mut BTreeMap<String, u64>) -> Result<Elt> {
    let amb = inst.ambient()?;
    let actx = &amb.ctx;
    let a_up = amb.lift(inst.a())?;
    let g1 = build_g1_at(actx, inst.k(), inst.m(), &a_up)?;
    let g2 = build_g2_at(actx, inst.k(), inst.m(), &a_up, inst.pd())?;
    let s = inst.s().ok_or_else(|| {
        Error::FieldTooLarge("the exponent s = (q^m - 1)(p^d - 1)/((Q - 1)(q - 1)) overflows".to_string())
    })?;
    let deltas: Vec<Elt> = {
        let mut v = Vec::new();
        for x in inst.ctx().elements().skip(1) {
            v.push(amb.lift(&x)?);
        }
        v
    };

    let mut tried = 0u64;
    for enc in 1..actx.size() {
        let xp = actx.from_encoding(enc)?;
        let x0p = g2.eval(actx, &xp)?;
        if x0p.is_zero() {
            continue;
        }
        let x0p_s = actx.pow_u128(&x0p, s);
        for delta in &deltas {
            let y = g1.eval(actx, &actx.mul(&x0p_s, delta))?;
            if y.is_zero() {
                continue;
            }
            diagnostics.insert("x_prime".to_string(), enc);
            let x0_up = actx.div(&actx.frobenius(&y, inst.k()), &y)?;
            let x0 = amb.project(&x0_up)?.ok_or_else(|| {
                Error::InternalCheckFailed(format!(
                    "kernel power {} did not land in GF(Q)",
                    actx.encoding(&x0_up)
                ))
            })?;
            return Ok(x0);
        }
        tried += 1;
        if tried >= SCAN_CAP {
            break;
        }
    }
    Err(Error::PipelineExhausted)
}

/// F x^2 + G x + a F^q: vanishes on every root when F != 0.
pub fn quadratic_residual(inst: &Instance, x: &Elt) -> Result<Elt> {
    let ctx = inst.ctx();
    ctx.guard(x)?;
    let f = inst.eval_f();
    let g = inst.eval_g();
    let fx2 = ctx.mul(&f, &ctx.mul(x, x));
    let afq = ctx.mul(inst.a(), &ctx.frobenius(&f, inst.k()));
    Ok(ctx.add(&ctx.add(&fx2, &ctx.mul(&g, x)), &afq))
}

/// Produce an a with p^d + 1 roots, and the roots, from a free parameter u.
///
/// u must lie in GF(p^n) but outside GF(p^gcd(2k, n)). Returns
/// a = (u - u^q)^(q^2+1) / (u - u^(q^2))^(q+1) together with all of its
/// roots, sorted by encoding.
pub fn parametrize_a(ctx: &FieldCtx, k: usize, u: &Elt) -> Result<(Elt, Vec<Elt>)> {
    ctx.guard(u)?;
    if k == 0 {
        return Err(Error::BadParameter("k must be at least 1".to_string()));
    }
    let n = ctx.e();
    let d = gcd(n, k);
    let excl = gcd(2 * d, n);
    if ctx.frobenius(u, excl) == *u {
        return Err(Error::UInSmallField);
    }
    let w = ctx.sub(u, &ctx.frobenius(u, k));
    let w2 = ctx.sub(u, &ctx.frobenius(u, 2 * k));
    let num = ctx.mul(&ctx.frobenius(&w, 2 * k), &w);
    let den = ctx.mul(&ctx.frobenius(&w2, k), &w2);
    let a = ctx.div(&num, &den)?;

    let wq1 = ctx.div(&ctx.frobenius(&w, k), &w)?;
    let denom = ctx.add(&ctx.one(), &wq1);
    let x0 = ctx.neg(&ctx.inv(&denom).map_err(|_| {
        Error::InternalCheckFailed("1 + (u - u^q)^(q-1) vanished".to_string())
    })?);
    let mut roots = vec![x0];
    for alpha in ctx.subfield_elements(d)? {
        let v = ctx.add(u, &alpha);
        let vq1 = ctx.div(&ctx.frobenius(&v, k), &v)?;
        let vq2q = ctx.frobenius(&vq1, k);
        roots.push(ctx.neg(&ctx.div(&vq2q, &denom)?));
    }
    roots.sort_by_key(|x| ctx.encoding(x));

    let inst = Instance::from_elt(std::sync::Arc::new(ctx.clone()), k, a.clone())?;
    let pd = ctx.p().pow(d as u32);
    check_roots(&inst, &roots, pd + 1)?;
    Ok((a, roots))
}

/// Distinctness and substitution check shared by every solve path.
fn check_roots(inst: &Instance, roots: &[Elt], expect: u64) -> Result<()> {
    let ctx = inst.ctx();
    let encs: BTreeSet<u64> = roots.iter().map(|x| ctx.encoding(x)).collect();
    if encs.len() as u64 != expect || roots.len() as u64 != expect {
        return Err(Error::InternalCheckFailed(format!(
            "expected {expect} distinct roots, produced {} ({} distinct)",
            roots.len(),
            encs.len()
        )));
    }
    for x in roots {
        let val = inst.trinomial_at(x)?;
        if !val.is_zero() {
            return Err(Error::InternalCheckFailed(format!(
                "claimed root {} evaluates to {}",
                ctx.encoding(x),
                ctx.encoding(&val)
            )));
        }
    }
    Ok(())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
