//! Generating coefficients with the maximal number of roots.
//!
//! Rather than searching for a with F(a) = 0, a closed form produces them:
//! every u in GF(p^n) outside GF(p^gcd(2k,n)) yields
//! a = (u - u^q)^(q^2+1) / (u - u^(q^2))^(q+1), and that a always has
//! p^d + 1 roots, which come along for free as rational expressions in u.
//!
//! Run with: cargo run --example parametrization

use std::collections::BTreeMap;
use std::sync::Arc;

use bluher::solver::parametrize_a;
use bluher::{Error, FieldCtx, Instance};

fn main() -> bluher::Result<()> {
    let ctx = Arc::new(FieldCtx::new(3, 3)?);

    // Sweep every u over GF(27). With k = 1 and n = 3 the excluded subfield
    // is GF(3^gcd(2,3)) = GF(3), so three values of u are rejected and the
    // other 24 each land on some a; count the hits.
    let mut image: BTreeMap<u64, u64> = BTreeMap::new();
    let mut rejected = 0;
    for v in 0..ctx.size() {
        let u = ctx.from_encoding(v)?;
        match parametrize_a(&ctx, 1, &u) {
            Ok((a, roots)) => {
                *image.entry(ctx.encoding(&a)).or_insert(0) += 1;
                assert_eq!(roots.len(), 4);
            }
            Err(Error::UInSmallField) => rejected += 1,
            Err(e) => return Err(e),
        }
    }
    println!("u values rejected (inside GF(3)): {rejected}");
    println!("image of the parametrization u -> a over GF(27):");
    for (a, hits) in &image {
        println!("  a = {a} reached by {hits} values of u");
    }

    // The image is exactly the zero set of F, so these are all the a with
    // four roots, each hit equally often.
    for (a, _) in &image {
        let inst = Instance::from_elt(ctx.clone(), 1, ctx.from_encoding(*a)?)?;
        assert!(inst.eval_f().is_zero());
    }
    println!("every image point satisfies F(a) = 0");

    // One concrete u in a bigger field: GF(64) with q = 4.
    let f64 = Arc::new(FieldCtx::new(2, 6)?);
    let u = f64.from_encoding(5)?;
    let (a, roots) = parametrize_a(&f64, 2, &u)?;
    let encs: Vec<u64> = roots.iter().map(|x| f64.encoding(x)).collect();
    println!(
        "\nGF(64), q = 4, u = {}: a = {} with {} roots {:?}",
        f64.format_elt(&u),
        f64.encoding(&a),
        encs.len(),
        encs
    );
    Ok(())
}
