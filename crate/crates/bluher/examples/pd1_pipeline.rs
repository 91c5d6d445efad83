//! The machinery behind the p^d + 1 root case, step by step.
//!
//! When F(a) = 0 the roots of x^(q+1) + x + a are the (q-1)-th powers of
//! the nonzero kernel elements of L_a(x) = x^(q^2) + x^q + ax. That kernel
//! has q^2 elements, but in general they only appear in the ambient field
//! GF(q^N) with N = m(p^d - 1), where L_a factors through
//! F1 = x^(q^m) - B_m x and F1 completes to the full field equation.
//!
//! Run with: cargo run --example pd1_pipeline

use bluher::sequence::{build_f1_at, build_g1_at, build_g2_at, build_la_at};
use bluher::{solve, FieldCtx, Instance, LinPoly};

/// x^(q^N) - x as a q-linearized polynomial.
fn field_equation(ctx: &FieldCtx, k: usize, big_n: usize) -> LinPoly {
    let mut coeffs = vec![ctx.neg(&ctx.one())];
    coeffs.extend(std::iter::repeat(ctx.zero()).take(big_n - 1));
    coeffs.push(ctx.one());
    LinPoly::new(k, coeffs)
}

fn walk(inst: &Instance) -> bluher::Result<()> {
    let ctx = inst.ctx();
    println!(
        "q = {}^{} over GF({}^{}), a = {}: d = {}, m = {}, N = {}, s = {:?}",
        inst.p(),
        inst.k(),
        inst.p(),
        inst.n(),
        ctx.encoding(inst.a()),
        inst.d(),
        inst.m(),
        inst.big_n(),
        inst.s()
    );
    println!("  F(a) = {}, B_m(a) = {}",
        ctx.format_elt(&inst.eval_f()),
        ctx.format_elt(&inst.eval_b(inst.m())?)
    );

    // How much of the kernel is visible downstairs.
    let ker_small = inst.build_la().kernel(ctx)?;
    println!(
        "  kernel of L_a inside GF({}^{}): {} elements",
        inst.p(),
        inst.n(),
        ker_small.elements.as_ref().map_or(0, |v| v.len())
    );

    // Upstairs: lift a, rebuild everything over GF(q^N).
    let amb = inst.ambient()?;
    let actx = &amb.ctx;
    let a_up = amb.lift(inst.a())?;
    println!("  ambient field: GF({}^{})", actx.p(), actx.e());

    let la = build_la_at(actx, inst.k(), &a_up)?;
    let f1 = build_f1_at(actx, inst.k(), inst.m(), &a_up)?;
    let g1 = build_g1_at(actx, inst.k(), inst.m(), &a_up)?;
    let g2 = build_g2_at(actx, inst.k(), inst.m(), &a_up, inst.pd())?;

    // The two-sided factorization through F1 needs F(a) = 0.
    println!(
        "  F1 = G1 after L_a: {}",
        g1.compose(actx, &la)?.same_poly(actx, &f1)?
    );
    println!(
        "  F1 = L_a after G1: {}",
        la.compose(actx, &g1)?.same_poly(actx, &f1)?
    );

    // And G2 completes F1 to x^(q^N) - x, coefficient by coefficient.
    let eq = field_equation(actx, inst.k(), inst.big_n());
    println!(
        "  G2 after F1 = x^(q^N) - x: {}",
        g2.compose(actx, &f1)?.same_poly(actx, &eq)?
    );

    // The ambient kernel has the predicted q^2 elements; downstairs roots
    // are (q-1)-th powers of its nonzero members.
    let ker = la.kernel(actx)?;
    println!(
        "  kernel of L_a inside the ambient field: {} elements",
        ker.elements.as_ref().map_or(0, |v| v.len())
    );

    let sol = solve(inst)?;
    let encs: Vec<u64> = sol.roots.iter().map(|x| ctx.encoding(x)).collect();
    println!("  solve() extracts {} roots: {encs:?}\n", sol.count);
    Ok(())
}

fn main() -> bluher::Result<()> {
    // Smallest instance: q = 2 over GF(8). Here N = n, so the ambient field
    // is just GF(8) again and the whole kernel is already visible.
    walk(&Instance::new(2, 1, 3, 1)?)?;

    // q = 4 over GF(64): d = 2, N = 9, and the pipeline genuinely climbs
    // into GF(4^9) = GF(2^18) to find a 16-element kernel, of which only a
    // sliver lives downstairs.
    walk(&Instance::new(2, 2, 6, 1)?)?;
    Ok(())
}
