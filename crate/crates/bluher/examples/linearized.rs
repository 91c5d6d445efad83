//! Linearized polynomials: evaluation, composition, kernels, and images.
//!
//! A q-linearized polynomial has only monomials x^(q^i), so it acts as a
//! GF(q)-linear map on any extension of GF(q). That makes kernel and image
//! questions pure linear algebra.
//!
//! Run with: cargo run --example linearized

use bluher::{FieldCtx, LinPoly};

fn main() -> bluher::Result<()> {
    let f16 = FieldCtx::new(2, 4)?;

    // L(x) = x^4 + x as a 2-linearized polynomial: coefficients [1, 0, 1]
    // against the powers x, x^2, x^4. The base is the step k in q = p^k,
    // here 1.
    let l = LinPoly::new(1, vec![f16.one(), f16.zero(), f16.one()]);
    let x = f16.x();
    println!("L(t) = {}", f16.format_elt(&l.eval(&f16, &x)?));

    // Linearity over the prime field: L(a + b) = L(a) + L(b).
    let a = f16.from_encoding(7)?;
    let b = f16.from_encoding(11)?;
    let lhs = l.eval(&f16, &f16.add(&a, &b))?;
    let rhs = f16.add(&l.eval(&f16, &a)?, &l.eval(&f16, &b)?);
    println!("L(a + b) = L(a) + L(b): {}", lhs == rhs);

    // The kernel of a linearized polynomial is a subspace. This L vanishes
    // exactly on solutions of x^4 = x, the copy of GF(4) inside GF(16).
    let ker = l.kernel(&f16)?;
    println!("dim ker L = {} over GF(2)", ker.dim());
    if let Some(elems) = &ker.elements {
        let encs: Vec<u64> = elems.iter().map(|e| f16.encoding(e)).collect();
        println!("ker L = {encs:?}");
    }

    // Its image is a complementary-dimension subspace.
    let img = l.image(&f16)?;
    println!("|im L| = {}", img.len());

    // Composition multiplies the maps. Mixed bases are fine: the result is
    // expressed over the gcd of the two steps.
    let frob2 = LinPoly::new(2, vec![f16.zero(), f16.one()]); // x -> x^4
    let comp = l.compose(&f16, &frob2)?;
    println!("base of L(x^4) as a linearized polynomial: {}", comp.base());
    let direct = l.eval(&f16, &f16.frobenius(&a, 2))?;
    println!(
        "L(a^4) computed two ways agree: {}",
        direct == comp.eval(&f16, &a)?
    );

    // Preimages are cosets of the kernel: every attained value is hit by
    // exactly |ker L| points.
    let target = l.eval(&f16, &a)?;
    let pre = l.preimage(&f16, &target)?;
    println!(
        "preimage of L(a) has {} elements, kernel has {}",
        pre.len(),
        ker.elements.as_ref().map_or(0, |v| v.len())
    );
    Ok(())
}
