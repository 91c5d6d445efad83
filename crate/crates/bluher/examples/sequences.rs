//! The coefficient sequences behind the root-count classification.
//!
//! For fixed a the values A_r(a) follow the recurrence
//! A_(r+2) = -A_(r+1)^q - a^q A_r^(q^2) with A_1 = 1, A_2 = -1, and
//! B_(r+1) = -a A_r^q. The two resolvents F = A_m(a) and G decide how many
//! roots x^(q+1) + x + a has; F = 0 marks the rare a with p^d + 1 roots.
//!
//! Run with: cargo run --example sequences

use bluher::sequence::zero_set_a;
use bluher::{FieldCtx, Instance};
use std::sync::Arc;

fn main() -> bluher::Result<()> {
    // q = 2 over GF(8): m = n/gcd(n,k) = 3.
    let inst = Instance::new(2, 1, 3, 3)?;
    let ctx = inst.ctx();
    println!("a = {} in GF(8), m = {}", ctx.format_elt(inst.a()), inst.m());

    for r in 1..=6 {
        println!("  A_{r}(a) = {}", ctx.format_elt(&inst.eval_a(r)));
    }
    for r in 1..=4 {
        println!("  B_{r}(a) = {}", ctx.format_elt(&inst.eval_b(r)?));
    }

    // The norm identity ties three consecutive terms to a power of a:
    // A_(r+1)^(q+1) - A_r^q A_(r+2) = a^(q(q^r - 1)/(q - 1)).
    let r = 4;
    let a1 = inst.eval_a(r + 1);
    let lhs = ctx.sub(
        &ctx.mul(&ctx.frobenius(&a1, 1), &a1),
        &ctx.mul(&ctx.frobenius(&inst.eval_a(r), 1), &inst.eval_a(r + 2)),
    );
    let rhs = ctx.pow(inst.a(), 2 * (2u64.pow(r as u32) - 1));
    println!("norm identity at r = {r}: {}", lhs == rhs);

    // F and G for every a over GF(8). F vanishes exactly once: a = 1 is the
    // only coefficient with q + 1 = 3 roots here.
    println!("\n a   F(a)  G(a)  roots");
    let shared = ctx.clone();
    for v in 1..shared.size() {
        let inst = Instance::from_elt(shared.clone(), 1, shared.from_encoding(v)?)?;
        let f = inst.eval_f();
        let g = inst.eval_g();
        let count = bluher::solver::classify(&inst)?;
        println!(
            "  {v}    {}     {}     {count}",
            shared.encoding(&f),
            shared.encoding(&g)
        );
    }

    // The zero set of F has a closed-form parametrization by u in GF(q^r).
    let f8 = Arc::new(FieldCtx::new(2, 3)?);
    let zeros = zero_set_a(&f8, 1, 3)?;
    let encs: Vec<u64> = zeros.iter().map(|z| f8.encoding(z)).collect();
    println!("\nparametrized zero set of F over GF(8): {encs:?}");
    Ok(())
}
