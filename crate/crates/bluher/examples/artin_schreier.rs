//! Solving w^q - w + c = 0, the additive analogue of taking a root.
//!
//! The map w -> w^q - w is GF(q)-linear with kernel GF(p^gcd(k, e)), so for
//! each c the equation has either no solutions or exactly p^gcd(k, e) of
//! them, and solvability is a trace condition.
//!
//! Run with: cargo run --example artin_schreier

use bluher::linpoly::artin_schreier_solve;
use bluher::FieldCtx;

fn main() -> bluher::Result<()> {
    let f27 = FieldCtx::new(3, 3)?;

    // Over GF(27) with q = 3 the kernel is GF(3), so solvable right sides
    // get exactly three solutions.
    let c = f27.from_encoding(5)?;
    let sols = artin_schreier_solve(&f27, &c, 1)?;
    println!("w^3 - w + 5 = 0 over GF(27): {} solutions", sols.len());
    for w in &sols {
        let check = f27.add(&f27.sub(&f27.frobenius(w, 1), w), &c);
        println!("  w = {:<12} residual {}", f27.format_elt(w), f27.format_elt(&check));
    }

    // Exactly one third of the right sides are solvable: those of trace 0.
    let mut solvable = 0;
    for v in 0..f27.size() {
        let c = f27.from_encoding(v)?;
        let n = artin_schreier_solve(&f27, &c, 1)?.len();
        let tr = f27.trace_rel(&f27.neg(&c), 1, 3)?;
        assert_eq!(n > 0, tr.is_zero());
        if n > 0 {
            solvable += 1;
        }
    }
    println!("solvable right sides over GF(27): {solvable} of 27");

    // With q = 9 = 3^2 over GF(81) the kernel is GF(3^gcd(2,4)) = GF(9),
    // so counts jump to nine per solvable right side, and only 9 of the 81
    // right sides are solvable at all.
    let f81 = FieldCtx::new(3, 4)?;
    let mut solvable = Vec::new();
    for v in 0..f81.size() {
        let c = f81.from_encoding(v)?;
        let n = artin_schreier_solve(&f81, &c, 2)?.len();
        assert!(n == 0 || n == 9);
        if n > 0 {
            solvable.push(v);
        }
    }
    println!("solvable c over GF(81) with q = 9: {solvable:?}");
    let c = f81.from_encoding(solvable[1])?;
    let w = &artin_schreier_solve(&f81, &c, 2)?[0];
    println!(
        "smallest solution for c = {}: w = {}",
        solvable[1],
        f81.format_elt(w)
    );
    Ok(())
}
