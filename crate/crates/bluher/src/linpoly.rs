//! Linearized polynomials sum(c_i X^(p^(base*i))): GF(p)-linear maps on a
//! field context, with symbolic composition, kernels, and preimages.

use crate::error::{Error, Result};
use crate::fpmat::FpMat;
use crate::gf::{Elt, FieldCtx};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// sum of coeffs[i] * X^(p^(base*i)); base >= 1 fixes which Frobenius powers
/// may appear (base = k for q-linearized, q = p^k).
#[derive(Clone, Debug, PartialEq)]
pub struct LinPoly {
    base: usize,
    coeffs: Vec<Elt>,
}

impl LinPoly {
    pub fn new(base: usize, coeffs: Vec<Elt>) -> Self {
        assert!(base >= 1, "Frobenius step must be >= 1");
        assert!(!coeffs.is_empty(), "a linearized polynomial needs coefficients");
        LinPoly { base, coeffs }
    }

    /// The identity map X.
    pub fn identity(ctx: &FieldCtx) -> Self {
        LinPoly { base: 1, coeffs: vec![ctx.one()] }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn coeffs(&self) -> &[Elt] {
        &self.coeffs
    }

    /// Same coefficients viewed with a finer Frobenius step g | base
    /// (zero padding in between).
    pub fn with_step(&self, ctx: &FieldCtx, g: usize) -> Result<Self> {
        if g == 0 || self.base % g != 0 {
            return Err(Error::DegreeMismatch(format!(
                "step {g} does not divide step {}",
                self.base
            )));
        }
        let stride = self.base / g;
        let mut coeffs = vec![ctx.zero(); (self.coeffs.len() - 1) * stride + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * stride] = c.clone();
        }
        Ok(LinPoly { base: g, coeffs })
    }

    pub fn eval(&self, ctx: &FieldCtx, x: &Elt) -> Result<Elt> {
        ctx.guard(x)?;
        for c in &self.coeffs {
            ctx.guard(c)?;
        }
        let mut acc = ctx.zero();
        let mut power = x.clone(); // x^(p^(base*i))
        for c in &self.coeffs {
            if !c.is_zero() {
                acc = ctx.add(&acc, &ctx.mul(c, &power));
            }
            power = ctx.frobenius(&power, self.base);
        }
        Ok(acc)
    }

    /// Symbolic composition self(other(X)), normalized to the gcd of the steps.
    ///
    /// (sum a_i X^(p^(bi)))(sum b_j X^(p^(cj))) has coefficient a_i * b_j^(p^(bi))
    /// at exponent p^(bi + cj).
    pub fn compose(&self, ctx: &FieldCtx, other: &LinPoly) -> Result<LinPoly> {
        for c in self.coeffs.iter().chain(&other.coeffs) {
            ctx.guard(c)?;
        }
        let g = gcd(self.base, other.base);
        let si = self.base / g;
        let sj = other.base / g;
        let len = (self.coeffs.len() - 1) * si + (other.coeffs.len() - 1) * sj + 1;
        let mut out = vec![ctx.zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let term = ctx.mul(a, &ctx.frobenius(b, self.base * i));
                out[i * si + j * sj] = ctx.add(&out[i * si + j * sj], &term);
            }
        }
        Ok(LinPoly { base: g, coeffs: out })
    }

    /// Coefficient-wise sum, at the gcd of the two steps.
    pub fn add(&self, ctx: &FieldCtx, other: &LinPoly) -> Result<LinPoly> {
        let g = gcd(self.base, other.base);
        let a = self.with_step(ctx, g)?;
        let b = other.with_step(ctx, g)?;
        let len = a.coeffs.len().max(b.coeffs.len());
        let z = ctx.zero();
        let coeffs = (0..len)
            .map(|i| ctx.add(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Ok(LinPoly { base: g, coeffs })
    }

    /// The polynomial c * self.
    pub fn scaled(&self, ctx: &FieldCtx, c: &Elt) -> LinPoly {
        let coeffs = self.coeffs.iter().map(|x| ctx.mul(c, x)).collect();
        LinPoly { base: self.base, coeffs }
    }

    /// Do the two polynomials define the same element of GF(p)[X] (not merely
    /// the same map on this field)? Compares at the common step.
    pub fn same_poly(&self, ctx: &FieldCtx, other: &LinPoly) -> Result<bool> {
        let g = gcd(self.base, other.base);
        let a = self.with_step(ctx, g)?;
        let b = other.with_step(ctx, g)?;
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = ctx.zero();
        Ok((0..n).all(|i| {
            a.coeffs.get(i).unwrap_or(&z) == b.coeffs.get(i).unwrap_or(&z)
        }))
    }

    /// Matrix of the map on ctx as an e x e matrix over GF(p).
    pub(crate) fn matrix(&self, ctx: &FieldCtx) -> Result<FpMat> {
        for c in &self.coeffs {
            ctx.guard(c)?;
        }
        let e = ctx.e();
        let mut m = FpMat::zeros(ctx.p(), e, e);
        for j in 0..e {
            let mut basis = vec![0u64; e];
            basis[j] = 1;
            let img = self.eval(ctx, &ctx.from_coeffs(&basis)?)?;
            for (i, &c) in img.coeffs().iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// Kernel of the map on ctx: a GF(p)-basis, plus the full element list
    /// (sorted by encoding) when it has at most 2^16 elements.
    pub fn kernel(&self, ctx: &FieldCtx) -> Result<Kernel> {
        let basis: Vec<Elt> = self
            .matrix(ctx)?
            .nullspace()
            .iter()
            .map(|v| ctx.from_coeffs(v))
            .collect::<Result<_>>()?;
        let elements = match ctx.span_elements(&basis) {
            Ok(els) => Some(els),
            Err(Error::FieldTooLarge(_)) => None,
            Err(e) => return Err(e),
        };
        Ok(Kernel { basis, elements })
    }

    /// The image set {self(x) : x in ctx}, sorted by encoding.
    /// Errors with FieldTooLarge when it exceeds 2^16 elements.
    pub fn image(&self, ctx: &FieldCtx) -> Result<Vec<Elt>> {
        let basis: Vec<Elt> = self
            .matrix(ctx)?
            .col_space_basis()
            .iter()
            .map(|v| ctx.from_coeffs(v))
            .collect::<Result<_>>()?;
        ctx.span_elements(&basis)
    }

    /// All x with self(x) = y, sorted by encoding; empty when y is outside the
    /// image. Errors with FieldTooLarge when the solution set exceeds 2^16.
    pub fn preimage(&self, ctx: &FieldCtx, y: &Elt) -> Result<Vec<Elt>> {
        ctx.guard(y)?;
        let m = self.matrix(ctx)?;
        let Some(particular) = m.solve(y.coeffs()) else {
            return Ok(Vec::new());
        };
        let x0 = ctx.from_coeffs(&particular)?;
        let kernel = self.kernel(ctx)?;
        let members = kernel.elements.ok_or_else(|| {
            Error::FieldTooLarge("preimage coset too large to enumerate".into())
        })?;
        let mut out: Vec<Elt> = members.iter().map(|k| ctx.add(&x0, k)).collect();
        out.sort_by_key(|x| ctx.encoding(x));
        Ok(out)
    }
}

/// Kernel of a linearized map.
pub struct Kernel {
    /// GF(p)-basis of the kernel.
    pub basis: Vec<Elt>,
    /// Every kernel element, sorted by encoding; None when larger than 2^16.
    pub elements: Option<Vec<Elt>>,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// All w in ctx with w^(p^k) - w + c = 0, sorted by encoding.
///
/// The solution set is empty or a coset of GF(p^gcd(k,e)); callers relying on
/// the count should check it.
pub fn artin_schreier_solve(ctx: &FieldCtx, c: &Elt, k: usize) -> Result<Vec<Elt>> {
    ctx.guard(c)?;
    let lhs = LinPoly::new(k, vec![ctx.neg(&ctx.one()), ctx.one()]); // X^(p^k) - X
    lhs.preimage(ctx, &ctx.neg(c))
}
