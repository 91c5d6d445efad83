//! A quick tour of finite field construction and arithmetic.
//!
//! Run with: cargo run --example field_tour

use bluher::FieldCtx;

fn main() -> bluher::Result<()> {
    // GF(9) with the default modulus, the lexicographically smallest
    // irreducible quadratic over GF(3). Elements are polynomials in t.
    let f9 = FieldCtx::new(3, 2)?;
    println!("GF(9) modulus coefficients (constant first): {:?}", f9.modulus());

    let t = f9.x();
    let u = f9.add(&t, &f9.one());
    println!("t + 1 has encoding {}", f9.encoding(&u));
    println!("(t + 1)^2 = {}", f9.format_elt(&f9.mul(&u, &u)));
    println!("1/(t + 1) = {}", f9.format_elt(&f9.inv(&u)?));

    // Encodings order the field: element sum_i c_i t^i <-> integer sum c_i p^i.
    println!("\nall of GF(9) in encoding order:");
    for x in f9.elements() {
        print!("  {} = {}", f9.encoding(&x), f9.format_elt(&x));
    }
    println!();

    // The Frobenius x -> x^p generates all field symmetries. Its fixed
    // points are exactly the prime field.
    let a = f9.from_encoding(5)?;
    println!("\na = {}", f9.format_elt(&a));
    println!("a^3 via frobenius = {}", f9.format_elt(&f9.frobenius(&a, 1)));
    println!("a^3 via pow       = {}", f9.format_elt(&f9.pow(&a, 3)));

    // Trace and norm down to GF(3): sum and product of the conjugates.
    let tr = f9.trace_rel(&a, 1, 2)?;
    let nr = f9.norm_rel(&a, 1, 2)?;
    println!("trace to GF(3) = {}", f9.format_elt(&tr));
    println!("norm to GF(3)  = {}", f9.format_elt(&nr));

    // A multiplicative generator, found deterministically.
    let g = f9.generator();
    println!("\ngenerator: {}", f9.format_elt(&g));
    let mut pow = f9.one();
    let mut orbit = Vec::new();
    for _ in 0..8 {
        pow = f9.mul(&pow, &g);
        orbit.push(f9.encoding(&pow));
    }
    println!("its powers: {orbit:?}");

    // Square roots, when they exist.
    let two = f9.from_u64(2);
    let r = f9.sqrt_in_subfield(&two, 2)?;
    println!("\nsqrt(2) in GF(9) = {}", f9.format_elt(&r));
    match f9.sqrt_in_subfield(&two, 1) {
        Ok(_) => println!("2 is a square in GF(3)"),
        Err(e) => println!("in GF(3): {e}"),
    }
    Ok(())
}
