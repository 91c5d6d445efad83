//! The coefficient sequences A_r, B_r attached to the trinomial
//! P_a(X) = X^(q+1) + X + a, the derived quantities F(a) and G(a) that decide
//! the root count, the linearized polynomials built from them, and the
//! problem [`Instance`] tying parameters, field, and a together.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::gf::{Elt, Embedding, FieldCtx};
use crate::linpoly::LinPoly;

/// A_r(x) by the recurrence A_1 = 1, A_2 = -1,
/// A_(r+2) = -A_(r+1)^q - x^q * A_r^(q^2), with A_0 = 0.
pub fn eval_a_at(ctx: &FieldCtx, k: usize, x: &Elt, r: usize) -> Result<Elt> {
    ctx.guard(x)?;
    if r == 0 {
        return Ok(ctx.zero());
    }
    let mut prev = ctx.one();
    let mut curr = ctx.neg(&ctx.one());
    if r == 1 {
        return Ok(prev);
    }
    let xq = ctx.frobenius(x, k);
    for _ in 2..r {
        let next = ctx.sub(
            &ctx.neg(&ctx.frobenius(&curr, k)),
            &ctx.mul(&xq, &ctx.frobenius(&prev, 2 * k)),
        );
        prev = curr;
        curr = next;
    }
    Ok(curr)
}

/// A_r(x) by the alternative recurrence A_(r+2) = -A_(r+1) - x^(q^r) * A_r;
/// must agree with [`eval_a_at`] everywhere.
pub fn eval_a_alt_at(ctx: &FieldCtx, k: usize, x: &Elt, r: usize) -> Result<Elt> {
    ctx.guard(x)?;
    if r == 0 {
        return Ok(ctx.zero());
    }
    let mut prev = ctx.one();
    let mut curr = ctx.neg(&ctx.one());
    if r == 1 {
        return Ok(prev);
    }
    let mut xqr = ctx.frobenius(x, k); // x^(q^s) while computing A_(s+2)
    for _ in 2..r {
        let next = ctx.sub(&ctx.neg(&curr), &ctx.mul(&xqr, &prev));
        prev = curr;
        curr = next;
        xqr = ctx.frobenius(&xqr, k);
    }
    Ok(curr)
}

/// B_r(x): B_1 = 0 and B_(r+1) = -x * A_r(x)^q.
pub fn eval_b_at(ctx: &FieldCtx, k: usize, x: &Elt, r: usize) -> Result<Elt> {
    ctx.guard(x)?;
    if r == 0 {
        return Err(Error::BadParameter("B_r starts at r = 1".into()));
    }
    if r == 1 {
        return Ok(ctx.zero());
    }
    let a_prev = eval_a_at(ctx, k, x, r - 1)?;
    Ok(ctx.neg(&ctx.mul(x, &ctx.frobenius(&a_prev, k))))
}

/// The q^2-linearized polynomial L_a(X) = X^(q^2) + X^q + a X whose kernel
/// carries all the roots of the trinomial.
pub fn build_la_at(ctx: &FieldCtx, k: usize, a: &Elt) -> Result<LinPoly> {
    ctx.guard(a)?;
    Ok(LinPoly::new(k, vec![a.clone(), ctx.one(), ctx.one()]))
}

fn require_f_zero(ctx: &FieldCtx, k: usize, m: usize, a: &Elt) -> Result<()> {
    if eval_a_at(ctx, k, a, m)?.is_zero() {
        Ok(())
    } else {
        Err(Error::FmNonzero)
    }
}

/// F_1(X) = X^(q^m) - B_m(a) X, defined when F(a) = A_m(a) = 0.
pub fn build_f1_at(ctx: &FieldCtx, k: usize, m: usize, a: &Elt) -> Result<LinPoly> {
    require_f_zero(ctx, k, m, a)?;
    let bm = eval_b_at(ctx, k, a, m)?;
    Ok(LinPoly::new(k * m, vec![ctx.neg(&bm), ctx.one()]))
}

/// G_1(X) = sum over i in 0..=m-2 of A_(m-1-i)(a)^(q^(i+1)) X^(q^i),
/// the factor with F_1 = G_1 ∘ L_a = L_a ∘ G_1; defined when F(a) = 0.
pub fn build_g1_at(ctx: &FieldCtx, k: usize, m: usize, a: &Elt) -> Result<LinPoly> {
    require_f_zero(ctx, k, m, a)?;
    if m < 2 {
        return Err(Error::BadParameter("G_1 needs m >= 2".into()));
    }
    let coeffs = (0..=m - 2)
        .map(|i| {
            let av = eval_a_at(ctx, k, a, m - 1 - i)?;
            Ok(ctx.frobenius(&av, k * (i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinPoly::new(k, coeffs))
}

/// G_2(X) = sum over i in 0..=p^d-2 of B_m(a)^(p^d-2-i) X^(q^(m i)), the
/// cofactor with G_2 ∘ F_1 = F_1 ∘ G_2 = X^(q^N) - X; defined when F(a) = 0.
pub fn build_g2_at(ctx: &FieldCtx, k: usize, m: usize, a: &Elt, pd: u64) -> Result<LinPoly> {
    require_f_zero(ctx, k, m, a)?;
    if pd < 2 || pd > 1 << 16 {
        return Err(Error::BadParameter("p^d out of range for G_2".into()));
    }
    let bm = eval_b_at(ctx, k, a, m)?;
    let coeffs = (0..=pd - 2)
        .map(|i| ctx.pow(&bm, pd - 2 - i))
        .collect();
    Ok(LinPoly::new(k * m, coeffs))
}

/// The zero set {x in ctx : A_r(x) = 0} produced by the parametrization
/// x = (u - u^q)^(q^2+1) / (u - u^(q^2))^(q+1) over u in ctx outside GF(q^2);
/// ctx must be GF(q^r), i.e. have degree k*r. Sorted by encoding.
pub fn zero_set_a(ctx: &FieldCtx, k: usize, r: usize) -> Result<Vec<Elt>> {
    if ctx.e() != k * r {
        return Err(Error::DegreeMismatch(format!(
            "zero-set parametrization for A_r runs over GF(q^r) = GF(p^{}), got degree {}",
            k * r,
            ctx.e()
        )));
    }
    let mut seen = std::collections::BTreeSet::new();
    for u in ctx.elements() {
        if ctx.frobenius(&u, 2 * k) == u {
            continue; // u in GF(q^2) (intersected with ctx): excluded
        }
        let w = ctx.sub(&u, &ctx.frobenius(&u, k));
        let w2 = ctx.sub(&u, &ctx.frobenius(&u, 2 * k));
        let num = ctx.mul(&ctx.frobenius(&w, 2 * k), &w); // w^(q^2+1)
        let den = ctx.mul(&ctx.frobenius(&w2, k), &w2); // w2^(q+1)
        let x = ctx.div(&num, &den)?;
        seen.insert(ctx.encoding(&x));
    }
    seen.into_iter().map(|v| ctx.from_encoding(v)).collect()
}

/// A subfield inclusion src -> dst bundled with both contexts.
#[derive(Clone, Debug)]
pub struct Extension {
    src: Arc<FieldCtx>,
    pub ctx: Arc<FieldCtx>,
    emb: Embedding,
}

impl Extension {
    pub fn new(src: Arc<FieldCtx>, dst_degree: usize) -> Result<Self> {
        let ctx = Arc::new(FieldCtx::new(src.p(), dst_degree)?);
        let emb = Embedding::new(&src, &ctx)?;
        Ok(Extension { src, ctx, emb })
    }

    /// Image of a source element upstairs.
    pub fn lift(&self, x: &Elt) -> Result<Elt> {
        self.emb.apply(&self.src, &self.ctx, x)
    }

    /// The source element a destination element came from, if any.
    pub fn project(&self, y: &Elt) -> Result<Option<Elt>> {
        self.emb.preimage(&self.src, &self.ctx, y)
    }
}

/// One concrete problem: find all x in GF(p^n) with x^(q+1) + x + a = 0,
/// q = p^k. Carries the derived parameters d = gcd(n,k), m = n/d,
/// N = m(p^d - 1), s = (q^m-1)(p^d-1) / ((Q-1)(q-1)), and lazily built
/// extension fields for the many-roots pipeline.
pub struct Instance {
    p: u64,
    k: usize,
    n: usize,
    d: usize,
    m: usize,
    big_n: usize,
    s: Option<u128>,
    ctx: Arc<FieldCtx>,
    a: Elt,
    ambient: OnceLock<Extension>,
    quad: OnceLock<Extension>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Instance {
    /// Instance over GF(p^n) with the default modulus; a given by encoding.
    pub fn new(p: u64, k: usize, n: usize, a_encoding: u64) -> Result<Self> {
        let ctx = Arc::new(FieldCtx::new(p, n)?);
        let a = ctx.from_encoding(a_encoding)?;
        Self::from_elt(ctx, k, a)
    }

    /// Same, with a caller-chosen modulus for GF(p^n).
    pub fn with_modulus(p: u64, k: usize, n: usize, f: &[u64], a_encoding: u64) -> Result<Self> {
        let ctx = Arc::new(FieldCtx::with_modulus(p, n, f)?);
        let a = ctx.from_encoding(a_encoding)?;
        Self::from_elt(ctx, k, a)
    }

    /// Instance over an existing field context (shared across many a's).
    pub fn from_elt(ctx: Arc<FieldCtx>, k: usize, a: Elt) -> Result<Self> {
        ctx.guard(&a)?;
        if a.is_zero() {
            return Err(Error::AZero);
        }
        if k == 0 {
            return Err(Error::BadParameter("k must be >= 1".into()));
        }
        let n = ctx.e();
        let p = ctx.p();
        let d = gcd(n, k);
        let m = n / d;
        let pd = p.checked_pow(d as u32);
        let big_n = pd.map(|pd| m * (pd as usize - 1));
        // s = (q^m - 1)(p^d - 1) / ((Q - 1)(q - 1)); an integer because
        // gcd(m, k/d) = 1. May overflow u128 for extreme k; then left unset.
        let s = (|| {
            let qm = checked_pow_u128(p, k * m)?;
            let q = checked_pow_u128(p, k)?;
            let big_q = checked_pow_u128(p, n)?;
            let num = (qm - 1).checked_mul(pd? as u128 - 1)?;
            let den = (big_q - 1).checked_mul(q - 1)?;
            Some((num, den))
        })();
        let s = match s {
            Some((num, den)) => {
                if num % den != 0 {
                    return Err(Error::InternalCheckFailed(format!(
                        "s = {num}/{den} is not an integer"
                    )));
                }
                Some(num / den)
            }
            None => None,
        };
        Ok(Instance {
            p,
            k,
            n,
            d,
            m,
            big_n: big_n.unwrap_or(usize::MAX),
            s,
            ctx,
            a,
            ambient: OnceLock::new(),
            quad: OnceLock::new(),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// p^d, the size of the root-count subfield.
    pub fn pd(&self) -> u64 {
        self.p.pow(self.d as u32)
    }

    /// Q = p^n.
    pub fn field_size(&self) -> u64 {
        self.ctx.size()
    }

    /// N = m(p^d - 1), the degree over GF(q) of the pipeline's ambient field.
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// s = (q^m-1)(p^d-1) / ((Q-1)(q-1)); None when it overflows u128.
    pub fn s(&self) -> Option<u128> {
        self.s
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn a(&self) -> &Elt {
        &self.a
    }

    /// P_a(x) = x^(q+1) + x + a.
    pub fn trinomial_at(&self, x: &Elt) -> Result<Elt> {
        self.ctx.guard(x)?;
        let xq1 = self.ctx.mul(&self.ctx.frobenius(x, self.k), x);
        Ok(self.ctx.add(&self.ctx.add(&xq1, x), &self.a))
    }

    pub fn eval_a(&self, r: usize) -> Elt {
        eval_a_at(&self.ctx, self.k, &self.a, r).expect("a belongs to ctx")
    }

    pub fn eval_a_alt(&self, r: usize) -> Elt {
        eval_a_alt_at(&self.ctx, self.k, &self.a, r).expect("a belongs to ctx")
    }

    pub fn eval_b(&self, r: usize) -> Result<Elt> {
        eval_b_at(&self.ctx, self.k, &self.a, r)
    }

    /// F(a) = A_m(a); the root count is p^d + 1 exactly when this vanishes.
    pub fn eval_f(&self) -> Elt {
        self.eval_a(self.m)
    }

    /// G(a) = -A_(m+1)(a) - a * A_(m-1)(a)^q.
    pub fn eval_g(&self) -> Elt {
        let am1 = self.eval_a(self.m + 1);
        let am_prev = self.eval_a(self.m - 1);
        let twist = self.ctx.mul(&self.a, &self.ctx.frobenius(&am_prev, self.k));
        self.ctx.neg(&self.ctx.add(&am1, &twist))
    }

    pub fn build_la(&self) -> LinPoly {
        build_la_at(&self.ctx, self.k, &self.a).expect("a belongs to ctx")
    }

    /// GF(q^N) together with the inclusion GF(Q) -> GF(q^N); built on first
    /// use (only the many-roots path needs it).
    pub fn ambient(&self) -> Result<&Extension> {
        if self.ambient.get().is_none() {
            if self.big_n == usize::MAX {
                return Err(Error::FieldTooLarge("q^N ambient field".into()));
            }
            let ext = Extension::new(self.ctx.clone(), self.k * self.big_n)?;
            let _ = self.ambient.set(ext);
        }
        Ok(self.ambient.get().unwrap())
    }

    /// GF(Q^2) together with the inclusion GF(Q) -> GF(Q^2); used by the
    /// char-2 two-root formula.
    pub fn quad_ext(&self) -> Result<&Extension> {
        if self.quad.get().is_none() {
            let ext = Extension::new(self.ctx.clone(), 2 * self.n)?;
            let _ = self.quad.set(ext);
        }
        Ok(self.quad.get().unwrap())
    }
}

fn checked_pow_u128(p: u64, e: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(p as u128)?;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, e: usize) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(p, e).unwrap())
    }

    #[test]
    fn small_a_values_match_closed_forms() {
        // A_3 = 1 - X^q, A_4 = -1 + X^q + X^(q^2) ... check the first few over GF(27), q=3.
        let f = gf(3, 3);
        for v in 1..27 {
            let x = f.from_encoding(v).unwrap();
            let a3 = eval_a_at(&f, 1, &x, 3).unwrap();
            let expect3 = f.sub(&f.one(), &f.frobenius(&x, 1));
            assert_eq!(a3, expect3);
            // A_4 = -A_3^q - X^q A_2^(q^2) = -(1 - X^(q^2)) + X^q.
            let a4 = eval_a_at(&f, 1, &x, 4).unwrap();
            let expect4 = f.add(
                &f.sub(&f.frobenius(&x, 2), &f.one()),
                &f.frobenius(&x, 1),
            );
            assert_eq!(a4, expect4);
        }
    }

    #[test]
    fn two_recurrences_agree() {
        let f = gf(2, 6);
        for v in 1..64 {
            let x = f.from_encoding(v).unwrap();
            for r in 0..=20 {
                assert_eq!(
                    eval_a_at(&f, 2, &x, r).unwrap(),
                    eval_a_alt_at(&f, 2, &x, r).unwrap(),
                    "A_{r} at encoding {v}"
                );
            }
        }
    }

    #[test]
    fn norm_identity_for_a_sequence() {
        // A_(r+1)^(q+1) - A_r^q A_(r+2) = x^(q(q^r - 1)/(q - 1)).
        let f = gf(5, 2);
        for v in 1..25 {
            let x = f.from_encoding(v).unwrap();
            for r in 1..=12u32 {
                let ar = eval_a_at(&f, 1, &x, r as usize).unwrap();
                let ar1 = eval_a_at(&f, 1, &x, r as usize + 1).unwrap();
                let ar2 = eval_a_at(&f, 1, &x, r as usize + 2).unwrap();
                let lhs = f.sub(
                    &f.mul(&f.frobenius(&ar1, 1), &ar1),
                    &f.mul(&f.frobenius(&ar, 1), &ar2),
                );
                let q: u128 = 5;
                let exp = q * (q.pow(r) - 1) / (q - 1);
                assert_eq!(lhs, f.pow_u128(&x, exp));
            }
        }
    }

    #[test]
    fn instance_derived_parameters() {
        let inst = Instance::new(2, 2, 6, 1).unwrap();
        assert_eq!(inst.d(), 2);
        assert_eq!(inst.m(), 3);
        assert_eq!(inst.pd(), 4);
        assert_eq!(inst.big_n(), 9);
        assert_eq!(inst.s(), Some(1));
        assert_eq!(inst.field_size(), 64);

        // (2,2,3): d = 1, m = 3, N = 3, s = (4^3-1)*1/(7*3) = 3.
        let inst = Instance::new(2, 2, 3, 1).unwrap();
        assert_eq!(inst.s(), Some(3));
        // (3,2,3): s = (9^3-1)*2/(26*8) = 7.
        let inst = Instance::new(3, 2, 3, 1).unwrap();
        assert_eq!(inst.s(), Some(7));
        // (2,4,3): s = (16^3-1)*1/(7*15) = 39.
        let inst = Instance::new(2, 4, 3, 1).unwrap();
        assert_eq!(inst.s(), Some(39));

        assert!(matches!(Instance::new(2, 1, 3, 0), Err(Error::AZero)));
        assert!(matches!(Instance::new(4, 1, 3, 1), Err(Error::NotPrime(4))));
    }

    #[test]
    fn f_and_g_for_gf8() {
        // For (2,1,3): F(a) = A_3(a) = 1 + a^2, G(a) = A_4(a) + a A_2(a)^2 = 1 + a + a^4.
        let f = gf(2, 3);
        for v in 1..8 {
            let inst = Instance::from_elt(f.clone(), 1, f.from_encoding(v).unwrap()).unwrap();
            let a = inst.a().clone();
            let expect_f = f.add(&f.one(), &f.pow(&a, 2));
            assert_eq!(inst.eval_f(), expect_f);
            let tr = f.trace_rel(&a, 1, 3).unwrap();
            assert_eq!(inst.eval_g(), f.add(&f.one(), &tr));
        }
        // a = 1 is the unique zero of F: 1 + 1 = 0.
        let pd1 = Instance::new(2, 1, 3, 1).unwrap();
        assert!(pd1.eval_f().is_zero());
    }

    #[test]
    fn b_sequence_and_power_rule() {
        // When F(a) = 0: B_m is in GF(p^d)*, and B_(lm) = B_m^l.
        let inst = Instance::new(2, 1, 3, 1).unwrap();
        let bm = inst.eval_b(3).unwrap();
        assert!(!bm.is_zero());
        assert!(inst.ctx().in_subfield(&bm, 1).unwrap());
        for l in 1..=5usize {
            let blm = inst.eval_b(3 * l).unwrap();
            assert_eq!(blm, inst.ctx().pow(&bm, l as u64));
        }
        assert!(inst.eval_b(0).is_err());
        assert!(inst.eval_b(1).unwrap().is_zero());
    }

    #[test]
    fn la_kernel_structure_at_pd1_point() {
        // (2,1,3), a = 1: L_1(x) = x^4 + x^2 + x = x(x^3 + x + 1), so the kernel
        // inside GF(8) is 0 together with the roots of the field modulus:
        // t, t^2, t^2+t. Size q^2 = 4, as the many-roots theory demands.
        let inst = Instance::new(2, 1, 3, 1).unwrap();
        let la = inst.build_la();
        let ker = la.kernel(inst.ctx()).unwrap();
        assert_eq!(ker.dim(), 2);
        let els = ker.elements.unwrap();
        let encs: Vec<u64> = els.iter().map(|x| inst.ctx().encoding(x)).collect();
        assert_eq!(encs, vec![0, 2, 4, 6]);
    }

    #[test]
    fn builders_require_vanishing_f() {
        let good = Instance::new(2, 1, 3, 1).unwrap();
        let ctx = good.ctx();
        assert!(build_f1_at(ctx, 1, 3, good.a()).is_ok());
        let bad_a = ctx.from_encoding(3).unwrap(); // F(t+1) = 1 + (t+1)^2 != 0
        assert!(matches!(
            build_f1_at(ctx, 1, 3, &bad_a),
            Err(Error::FmNonzero)
        ));
        assert!(matches!(
            build_g1_at(ctx, 1, 3, &bad_a),
            Err(Error::FmNonzero)
        ));
        assert!(matches!(
            build_g2_at(ctx, 1, 3, &bad_a, 2),
            Err(Error::FmNonzero)
        ));
    }

    #[test]
    fn f1_is_g1_compose_la_on_gf8() {
        // Worked example: (2,1,3), a=1 gives G_1 = X + X^2, F_1 = X^8 + X.
        let inst = Instance::new(2, 1, 3, 1).unwrap();
        let ctx = inst.ctx();
        let g1 = build_g1_at(ctx, 1, 3, inst.a()).unwrap();
        let f1 = build_f1_at(ctx, 1, 3, inst.a()).unwrap();
        let la = inst.build_la();
        assert!(g1.compose(ctx, &la).unwrap().same_poly(ctx, &f1).unwrap());
        assert!(la.compose(ctx, &g1).unwrap().same_poly(ctx, &f1).unwrap());
        // And concretely: G_1 coefficients are [1, 1] at step 1.
        assert_eq!(g1.base(), 1);
        assert_eq!(g1.coeffs(), &[ctx.one(), ctx.one()]);
    }

    #[test]
    fn zero_set_parametrization_small_case() {
        // q = 2, r = 3 over GF(8): A_3(x) = 1 + x^2 vanishes only at x = 1,
        // and the parametrization must produce exactly {1}.
        let f = gf(2, 3);
        let zs = zero_set_a(&f, 1, 3).unwrap();
        assert_eq!(zs.len(), 1);
        assert_eq!(f.encoding(&zs[0]), 1);
        assert!(zero_set_a(&f, 1, 4).is_err()); // wrong field degree
    }

    #[test]
    fn extensions_embed_and_project() {
        let inst = Instance::new(2, 2, 6, 1).unwrap();
        let amb = inst.ambient().unwrap();
        assert_eq!(amb.ctx.e(), 18);
        let a_up = amb.lift(inst.a()).unwrap();
        assert_eq!(amb.project(&a_up).unwrap(), Some(inst.a().clone()));
        let quad = inst.quad_ext().unwrap();
        assert_eq!(quad.ctx.e(), 12);
        // Lifting is a field homomorphism into the subfield copy.
        let x = inst.ctx().from_encoding(37).unwrap();
        let y = inst.ctx().from_encoding(52).unwrap();
        let lift_prod = amb.lift(&inst.ctx().mul(&x, &y)).unwrap();
        assert_eq!(
            lift_prod,
            amb.ctx.mul(&amb.lift(&x).unwrap(), &amb.lift(&y).unwrap())
        );
    }
}
