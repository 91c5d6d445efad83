//! Root-count distributions over whole fields.
//!
//! For each nonzero a the trinomial x^(q+1) + x + a has 0, 1, 2, or
//! p^gcd(n,k) + 1 roots in GF(p^n). Sweeping a shows how rare the last
//! case is: roughly one a in p^(2 gcd(n,k)).
//!
//! Run with: cargo run --example census

use bluher::oracle::census;

fn main() -> bluher::Result<()> {
    for (p, k, n) in [(2, 1, 3), (2, 1, 6), (2, 2, 6), (3, 1, 4), (5, 1, 3)] {
        let c = census(p, k, n)?;
        println!("GF({p}^{n}), q = {p}^{k}:");
        for row in &c.rows {
            println!("  {} roots for {} values of a", row.count, row.num_a);
        }
        // Each x with a(x) = -x^(q+1) - x nonzero is a root for exactly one
        // a, so the total root count has a closed form independent of the
        // distribution.
        println!(
            "  total roots {}, classifier agreed on all {} coefficients\n",
            c.total_roots, c.classified
        );
    }
    Ok(())
}
