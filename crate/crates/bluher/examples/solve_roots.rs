//! Solving x^(q+1) + x + a = 0 across every case of the classification.
//!
//! Run with: cargo run --example solve_roots

use bluher::{solve, Instance};

fn show(p: u64, k: usize, n: usize, a: u64) -> bluher::Result<()> {
    let inst = Instance::new(p, k, n, a)?;
    let ctx = inst.ctx();
    let sol = solve(&inst)?;
    let roots: Vec<String> = sol.roots.iter().map(|x| ctx.format_elt(x)).collect();
    println!(
        "p={p} k={k} n={n} a={a:<3} case {:<10} roots [{}]",
        sol.case.label(),
        roots.join(", ")
    );
    // Every returned root is checked by substitution inside solve already;
    // do it once more here to make the point.
    for x in &sol.roots {
        assert!(inst.trinomial_at(x)?.is_zero());
    }
    Ok(())
}

fn main() -> bluher::Result<()> {
    // Odd characteristic: no roots, one root, two roots, and the
    // exceptional a with p^d + 1 = 4 roots.
    show(3, 1, 3, 2)?; // odd-none
    show(3, 1, 2, 1)?; // odd-one
    show(3, 1, 2, 5)?; // odd-two
    show(3, 1, 3, 1)?; // pd1, four roots

    println!();

    // Characteristic two. With q = 2 a two-root case cannot happen, so the
    // two-root example uses q = 4 over GF(16) where gcd(n, k) = 2.
    show(2, 1, 4, 9)?; // char2-none
    show(2, 1, 4, 2)?; // char2-one (G = 0)
    show(2, 2, 4, 1)?; // char2-two
    show(2, 1, 3, 1)?; // pd1, three roots

    println!();

    // Larger Frobenius power: q = 4 over GF(64), gcd(n, k) = 2, so the
    // exceptional case has 2^2 + 1 = 5 roots.
    show(2, 2, 6, 1)?;

    // A bigger odd field for flavor: q = 5 over GF(125).
    show(5, 1, 3, 7)?;
    Ok(())
}
