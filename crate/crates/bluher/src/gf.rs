//! Explicit finite fields GF(p^e) = GF(p)[t]/(f), with Frobenius tables,
//! relative trace and norm, subfield tests, embeddings, and square roots.
//!
//! Elements are coefficient vectors in the power basis 1, t, ..., t^(e-1) and
//! carry the integer encoding sum(c_i p^i); all deterministic tie-breaks in
//! this crate (smallest root, canonical square root, scan orders) refer to
//! that encoding.

use crate::error::{Error, Result};
use crate::fpmat::FpMat;
use crate::gfpoly;

/// Hard cap on |GF(p^e)|; keeps encodings in u64 and every scan desk-sized.
pub const MAX_FIELD_SIZE: u64 = 1 << 32;
/// Cap on exhaustive enumerations (subfields, kernels).
pub const MAX_ENUM: u64 = 1 << 16;
const MAX_P: u64 = 1 << 20;

/// An element of a specific [`FieldCtx`], tagged with the context id so that
/// cross-field arithmetic is a loud error instead of a silent coercion.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Elt {
    ctx: u64,
    c: Vec<u64>,
}

impl Elt {
    pub fn ctx_id(&self) -> u64 {
        self.ctx
    }

    /// Coefficients ascending by degree, always of length e.
    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }
}

/// A concrete field GF(p^e) with modulus f, plus precomputed Frobenius
/// matrices. All arithmetic goes through methods on this context.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    p: u64,
    e: usize,
    f: Vec<u64>,
    id: u64,
    frob: Vec<FpMat>, // frob[j]: x -> x^(p^j), j in 0..e
}

fn is_prime(n: u64) -> bool {
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

fn fingerprint(p: u64, e: usize, f: &[u64]) -> u64 {
    // FNV-1a over (p, e, f); stable across runs so equal fields interoperate.
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |v: u64| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(p);
    eat(e as u64);
    for &c in f {
        eat(c);
    }
    h
}

impl FieldCtx {
    /// GF(p^e) with the default modulus: the monic irreducible of degree e
    /// whose non-leading coefficient vector has the smallest encoding.
    pub fn new(p: u64, e: usize) -> Result<Self> {
        Self::check_shape(p, e)?;
        let f = gfpoly::default_irreducible(p, e);
        Self::build(p, e, f)
    }

    /// GF(p^e) with a caller-chosen monic irreducible modulus, coefficients
    /// ascending and of length e+1.
    pub fn with_modulus(p: u64, e: usize, f: &[u64]) -> Result<Self> {
        Self::check_shape(p, e)?;
        if f.len() != e + 1 || f[e] != 1 || f.iter().any(|&c| c >= p) {
            return Err(Error::BadParameter(format!(
                "modulus must be monic of degree {e} with coefficients below {p}"
            )));
        }
        if !gfpoly::is_irreducible(f, p) {
            return Err(Error::NotIrreducible(p));
        }
        Self::build(p, e, f.to_vec())
    }

    fn check_shape(p: u64, e: usize) -> Result<()> {
        if p > MAX_P {
            return Err(Error::FieldTooLarge(format!("p = {p} exceeds {MAX_P}")));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::BadParameter("extension degree must be >= 1".into()));
        }
        let mut size: u64 = 1;
        for _ in 0..e {
            size = size.checked_mul(p).filter(|&s| s <= MAX_FIELD_SIZE).ok_or_else(|| {
                Error::FieldTooLarge(format!("p^e = {p}^{e} exceeds {MAX_FIELD_SIZE}"))
            })?;
        }
        Ok(())
    }

    fn build(p: u64, e: usize, f: Vec<u64>) -> Result<Self> {
        let id = fingerprint(p, e, &f);
        let mut ctx = FieldCtx { p, e, f, id, frob: Vec::new() };
        // Column j of the p-power matrix is t^(jp) mod f.
        let mut m1 = FpMat::zeros(p, e, e);
        for j in 0..e {
            let col = gfpoly::pow_mod(&[0, 1], j as u64 * p, &ctx.f, p);
            for (i, &c) in col.iter().enumerate() {
                m1.set(i, j, c);
            }
        }
        let mut frob = vec![FpMat::identity(p, e), m1];
        for j in 2..e {
            let next = frob[1].mul(&frob[j - 1]);
            frob.push(next);
        }
        frob.truncate(e.max(1));
        ctx.frob = frob;
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// The defining polynomial, coefficients ascending, length e+1.
    pub fn modulus(&self) -> &[u64] {
        &self.f
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.e as u32)
    }

    fn elt(&self, mut c: Vec<u64>) -> Elt {
        c.resize(self.e, 0);
        Elt { ctx: self.id, c }
    }

    fn chk(&self, x: &Elt) {
        assert_eq!(x.ctx, self.id, "field context mismatch");
    }

    /// Fallible context check for API boundaries.
    pub fn guard(&self, x: &Elt) -> Result<()> {
        if x.ctx == self.id {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    pub fn zero(&self) -> Elt {
        self.elt(Vec::new())
    }

    pub fn one(&self) -> Elt {
        self.from_u64(1)
    }

    /// The residue class of t, a root of the modulus.
    pub fn x(&self) -> Elt {
        if self.e == 1 {
            // t is a root of the degree-1 modulus X + f0, i.e. -f0.
            return self.from_u64(self.p - self.f[0] % self.p);
        }
        self.elt(vec![0, 1])
    }

    /// The scalar c mod p as a constant element.
    pub fn from_u64(&self, c: u64) -> Elt {
        self.elt(vec![c % self.p])
    }

    /// Element from coefficients (ascending, length <= e); entries reduced mod p.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Elt> {
        if coeffs.len() > self.e {
            return Err(Error::DegreeMismatch(format!(
                "{} coefficients for an extension of degree {}",
                coeffs.len(),
                self.e
            )));
        }
        Ok(self.elt(coeffs.iter().map(|&c| c % self.p).collect()))
    }

    /// Inverse of [`FieldCtx::encoding`]; v must be below p^e.
    pub fn from_encoding(&self, v: u64) -> Result<Elt> {
        if v >= self.size() {
            return Err(Error::BadParameter(format!(
                "encoding {v} out of range for a field of {} elements",
                self.size()
            )));
        }
        let mut c = vec![0u64; self.e];
        let mut rest = v;
        for ci in &mut c {
            *ci = rest % self.p;
            rest /= self.p;
        }
        Ok(self.elt(c))
    }

    /// Integer encoding sum(c_i p^i); the canonical order on elements.
    pub fn encoding(&self, x: &Elt) -> u64 {
        self.chk(x);
        x.c.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    /// All field elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elt> + '_ {
        (0..self.size()).map(move |v| self.from_encoding(v).unwrap())
    }

    pub fn add(&self, x: &Elt, y: &Elt) -> Elt {
        self.chk(x);
        self.chk(y);
        let c = x.c.iter().zip(&y.c).map(|(&a, &b)| (a + b) % self.p).collect();
        Elt { ctx: self.id, c }
    }

    pub fn sub(&self, x: &Elt, y: &Elt) -> Elt {
        self.chk(x);
        self.chk(y);
        let c = x.c.iter().zip(&y.c).map(|(&a, &b)| (a + self.p - b) % self.p).collect();
        Elt { ctx: self.id, c }
    }

    pub fn neg(&self, x: &Elt) -> Elt {
        self.chk(x);
        let c = x.c.iter().map(|&a| (self.p - a) % self.p).collect();
        Elt { ctx: self.id, c }
    }

    pub fn mul(&self, x: &Elt, y: &Elt) -> Elt {
        self.chk(x);
        self.chk(y);
        if self.e == 1 {
            return self.elt(vec![x.c[0] * y.c[0] % self.p]);
        }
        let prod = gfpoly::mul(&x.c, &y.c, self.p);
        self.elt(gfpoly::rem(&prod, &self.f, self.p))
    }

    /// Scalar multiple c*x with c mod p.
    pub fn scale(&self, c: u64, x: &Elt) -> Elt {
        self.chk(x);
        let c = c % self.p;
        let v = x.c.iter().map(|&a| a * c % self.p).collect();
        Elt { ctx: self.id, c: v }
    }

    pub fn inv(&self, x: &Elt) -> Result<Elt> {
        self.chk(x);
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = gfpoly::inv_mod(&x.c, &self.f, self.p)
            .expect("nonzero element invertible modulo an irreducible");
        Ok(self.elt(inv))
    }

    pub fn div(&self, x: &Elt, y: &Elt) -> Result<Elt> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    pub fn pow(&self, x: &Elt, t: u64) -> Elt {
        self.pow_u128(x, t as u128)
    }

    pub fn pow_u128(&self, x: &Elt, mut t: u128) -> Elt {
        self.chk(x);
        let mut acc = self.one();
        let mut b = x.clone();
        while t > 0 {
            if t & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            t >>= 1;
        }
        acc
    }

    /// x^(p^j), via the precomputed matrices; j may exceed e.
    pub fn frobenius(&self, x: &Elt, j: usize) -> Elt {
        self.chk(x);
        let m = &self.frob[j % self.e];
        Elt { ctx: self.id, c: m.mul_vec(&x.c) }
    }


    /// Relative trace: sum of x^(p^(step*i)) for i in 0..terms.
    ///
    /// With step = L and terms = l this is the trace from GF(p^(L*l)) down to
    /// GF(p^L); requires step*terms to divide e (or x to lie in GF(p^(step*terms))).
    pub fn trace_rel(&self, x: &Elt, step: usize, terms: usize) -> Result<Elt> {
        self.guard(x)?;
        if step == 0 || terms == 0 || (step * terms) % self.e != 0 && self.e % (step * terms) != 0
        {
            return Err(Error::DegreeMismatch(format!(
                "trace span p^{} incompatible with field degree {}",
                step * terms,
                self.e
            )));
        }
        let mut acc = self.zero();
        let mut term = x.clone();
        for _ in 0..terms {
            acc = self.add(&acc, &term);
            term = self.frobenius(&term, step);
        }
        Ok(acc)
    }

    /// Relative norm: product of x^(p^(step*i)) for i in 0..terms,
    /// i.e. x^((p^(step*terms)-1)/(p^step-1)).
    pub fn norm_rel(&self, x: &Elt, step: usize, terms: usize) -> Result<Elt> {
        self.guard(x)?;
        if step == 0 || terms == 0 || (step * terms) % self.e != 0 && self.e % (step * terms) != 0
        {
            return Err(Error::DegreeMismatch(format!(
                "norm span p^{} incompatible with field degree {}",
                step * terms,
                self.e
            )));
        }
        let mut acc = self.one();
        let mut term = x.clone();
        for _ in 0..terms {
            acc = self.mul(&acc, &term);
            term = self.frobenius(&term, step);
        }
        Ok(acc)
    }

    /// Does x lie in the subfield GF(p^sub_e)? Tests x^(p^sub_e) = x.
    pub fn in_subfield(&self, x: &Elt, sub_e: usize) -> Result<bool> {
        self.guard(x)?;
        if sub_e == 0 || self.e % sub_e != 0 {
            return Err(Error::DegreeMismatch(format!(
                "{sub_e} does not divide the field degree {}",
                self.e
            )));
        }
        Ok(self.frobenius(x, sub_e) == *x)
    }

    /// All p^sub_e elements of the subfield GF(p^sub_e), sorted by encoding.
    ///
    /// Computed as the fixed space of Frobenius^sub_e (a nullspace over GF(p)),
    /// so the cost depends on the subfield size, not the field size.
    pub fn subfield_elements(&self, sub_e: usize) -> Result<Vec<Elt>> {
        if sub_e == 0 || self.e % sub_e != 0 {
            return Err(Error::DegreeMismatch(format!(
                "{sub_e} does not divide the field degree {}",
                self.e
            )));
        }
        let fixed = self.frob[sub_e % self.e].sub(&FpMat::identity(self.p, self.e));
        let basis: Vec<Elt> = fixed.nullspace().into_iter().map(|v| self.elt(v)).collect();
        assert_eq!(basis.len(), sub_e, "Frobenius fixed space has dimension sub_e");
        self.span_elements(&basis)
    }

    /// Every GF(p)-linear combination of the given elements, sorted by
    /// encoding; errors when the span exceeds 2^16 elements.
    pub fn span_elements(&self, basis: &[Elt]) -> Result<Vec<Elt>> {
        for b in basis {
            self.guard(b)?;
        }
        let count = (self.p as u128)
            .checked_pow(basis.len() as u32)
            .filter(|&c| c <= MAX_ENUM as u128)
            .ok_or_else(|| Error::FieldTooLarge("span too large to enumerate".into()))?;
        let mut out = Vec::with_capacity(count as usize);
        let mut digits = vec![0u64; basis.len()];
        loop {
            let mut acc = self.zero();
            for (d, b) in digits.iter().zip(basis) {
                acc = self.add(&acc, &self.scale(*d, b));
            }
            out.push(acc);
            let mut i = 0;
            loop {
                if i == digits.len() {
                    break;
                }
                digits[i] += 1;
                if digits[i] < self.p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
        out.sort_by_key(|x| self.encoding(x));
        Ok(out)
    }

    /// Canonical square root of x inside GF(p^sub_e).
    ///
    /// For p = 2 squaring is bijective and the root is x^(2^(sub_e-1)). For odd
    /// p this is Tonelli-Shanks run in the subfield; of the two roots +-y the
    /// one with the smaller encoding is returned. Errors with [`Error::NonResidue`]
    /// when x is a non-square.
    pub fn sqrt_in_subfield(&self, x: &Elt, sub_e: usize) -> Result<Elt> {
        if !self.in_subfield(x, sub_e)? {
            return Err(Error::DegreeMismatch(format!(
                "element is not in the subfield GF({}^{sub_e})",
                self.p
            )));
        }
        if x.is_zero() {
            return Ok(self.zero());
        }
        if self.p == 2 {
            return Ok(self.frobenius(x, sub_e - 1));
        }
        let ord = self.p.pow(sub_e as u32) - 1;
        if self.pow(x, ord / 2) != self.one() {
            return Err(Error::NonResidue);
        }
        // ord = 2^s * t with t odd.
        let s = ord.trailing_zeros();
        let t = ord >> s;
        let zeta = self
            .subfield_elements(sub_e)?
            .into_iter()
            .find(|z| !z.is_zero() && self.pow(z, ord / 2) != self.one())
            .expect("odd-order subfield group has a non-square");
        let mut m = s;
        let mut c = self.pow(&zeta, t);
        let mut u = self.pow(x, t);
        let mut y = self.pow(x, (t + 1) / 2);
        while u != self.one() {
            let mut i = 0;
            let mut probe = u.clone();
            while probe != self.one() {
                probe = self.mul(&probe, &probe);
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..m - i - 1 {
                b = self.mul(&b, &b);
            }
            m = i;
            c = self.mul(&b, &b);
            u = self.mul(&u, &c);
            y = self.mul(&y, &b);
        }
        let neg = self.neg(&y);
        Ok(if self.encoding(&y) <= self.encoding(&neg) { y } else { neg })
    }

    /// Smallest-encoded generator of the multiplicative group.
    pub fn generator(&self) -> Elt {
        let ord = self.size() - 1;
        let mut primes = Vec::new();
        let mut rest = ord;
        let mut d = 2;
        while d * d <= rest {
            if rest % d == 0 {
                primes.push(d);
                while rest % d == 0 {
                    rest /= d;
                }
            }
            d += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
        for v in 1..self.size() {
            let x = self.from_encoding(v).unwrap();
            if primes.iter().all(|&l| self.pow(&x, ord / l) != self.one()) {
                return x;
            }
        }
        unreachable!("every finite field has a primitive element")
    }

    /// Human-readable polynomial form, highest power first (e.g. "t^2 + 2t + 1").
    pub fn format_elt(&self, x: &Elt) -> String {
        self.chk(x);
        let mut parts = Vec::new();
        for (i, &c) in x.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            let var = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            parts.push(format!("{coeff}{var}"));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// An embedding GF(p^a) -> GF(p^b) (a | b) that sends the source generator t
/// to the smallest-encoded root of the source modulus in the destination.
#[derive(Clone, Debug)]
pub struct Embedding {
    src_id: u64,
    dst_id: u64,
    mat: FpMat, // dst.e x src.e over GF(p)
}

impl Embedding {
    pub fn new(src: &FieldCtx, dst: &FieldCtx) -> Result<Self> {
        if src.p != dst.p || dst.e % src.e != 0 {
            return Err(Error::IncompatibleDegrees);
        }
        let root = dst
            .subfield_elements(src.e)?
            .into_iter()
            .find(|cand| {
                // Horner evaluation of the source modulus at cand.
                let mut acc = dst.zero();
                for &c in src.f.iter().rev() {
                    acc = dst.mul(&acc, cand);
                    acc = dst.add(&acc, &dst.from_u64(c));
                }
                acc.is_zero()
            })
            .ok_or(Error::NoRootFound)?;
        let mut mat = FpMat::zeros(src.p, dst.e, src.e);
        let mut pow = dst.one();
        for j in 0..src.e {
            for (i, &c) in pow.coeffs().iter().enumerate() {
                mat.set(i, j, c);
            }
            pow = dst.mul(&pow, &root);
        }
        Ok(Embedding { src_id: src.id, dst_id: dst.id, mat })
    }

    /// Image of x under the embedding.
    pub fn apply(&self, src: &FieldCtx, dst: &FieldCtx, x: &Elt) -> Result<Elt> {
        if src.id != self.src_id || dst.id != self.dst_id {
            return Err(Error::CtxMismatch);
        }
        src.guard(x)?;
        Ok(dst.elt(self.mat.mul_vec(x.coeffs())))
    }

    /// The unique source element mapping to y, or None when y is outside the
    /// embedded copy of the source field.
    pub fn preimage(&self, src: &FieldCtx, dst: &FieldCtx, y: &Elt) -> Result<Option<Elt>> {
        if src.id != self.src_id || dst.id != self.dst_id {
            return Err(Error::CtxMismatch);
        }
        dst.guard(y)?;
        Ok(self.mat.solve(y.coeffs()).map(|c| src.elt(c)))
    }
}

/// One-shot convenience for [`Embedding::apply`].
pub fn embed(src: &FieldCtx, dst: &FieldCtx, x: &Elt) -> Result<Elt> {
    Embedding::new(src, dst)?.apply(src, dst, x)
}
