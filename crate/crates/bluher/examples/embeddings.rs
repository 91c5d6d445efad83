//! Moving elements between a field and its extensions.
//!
//! Run with: cargo run --example embeddings

use bluher::gf::embed;
use bluher::{Embedding, FieldCtx};

fn main() -> bluher::Result<()> {
    let f8 = FieldCtx::new(2, 3)?;
    let f64 = FieldCtx::new(2, 6)?;

    // GF(8) sits inside GF(64) because 3 divides 6. The embedding sends the
    // generator t of GF(8) to a root of t^3 + t + 1 inside GF(64).
    let emb = Embedding::new(&f8, &f64)?;
    let t = f8.x();
    let img = emb.apply(&f8, &f64, &t)?;
    println!("t in GF(8) maps to {} in GF(64)", f64.format_elt(&img));

    // It is a ring homomorphism: images of products are products of images.
    let u = f8.from_encoding(6)?;
    let lhs = emb.apply(&f8, &f64, &f8.mul(&t, &u))?;
    let rhs = f64.mul(&emb.apply(&f8, &f64, &t)?, &emb.apply(&f8, &f64, &u)?);
    println!("embedding respects multiplication: {}", lhs == rhs);

    // The image is exactly the set of solutions of x^8 = x in GF(64).
    let mut copy = Vec::new();
    for x in f64.elements() {
        if f64.frobenius(&x, 3) == x {
            copy.push(f64.encoding(&x));
        }
    }
    println!("the GF(8) copy inside GF(64): {copy:?}");

    // Going back down: preimage succeeds on the copy and refuses the rest.
    let back = emb.preimage(&f8, &f64, &img)?;
    println!("preimage of the image of t: {:?}", back.map(|x| f8.encoding(&x)));
    let outside = f64.x();
    println!(
        "preimage of an element outside the copy: {:?}",
        emb.preimage(&f8, &f64, &outside)?.map(|x| f8.encoding(&x))
    );

    // The convenience wrapper picks the embedding for you.
    let via = embed(&f8, &f64, &u)?;
    println!("embed(GF(8) -> GF(64)) agrees: {}", via == emb.apply(&f8, &f64, &u)?);

    // Incompatible degrees are rejected: GF(8) does not sit inside GF(16).
    let f16 = FieldCtx::new(2, 4)?;
    match Embedding::new(&f8, &f16) {
        Ok(_) => println!("unexpected embedding GF(8) -> GF(16)"),
        Err(e) => println!("GF(8) -> GF(16): {e}"),
    }
    Ok(())
}
