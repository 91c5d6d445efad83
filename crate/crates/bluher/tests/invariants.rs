//! Property-based invariants over randomly drawn field elements.

use std::sync::Arc;

use proptest::prelude::*;

use bluher::{FieldCtx, Instance, LinPoly};

fn fields() -> Vec<Arc<FieldCtx>> {
    [(2u64, 5usize), (3, 3), (5, 2), (7, 2)]
        .into_iter()
        .map(|(p, e)| Arc::new(FieldCtx::new(p, e).unwrap()))
        .collect()
}

proptest! {
    #[test]
    fn encoding_round_trips(which in 0usize..4, v in 0u64..32) {
        let ctx = &fields()[which];
        let v = v % ctx.size();
        let x = ctx.from_encoding(v).unwrap();
        prop_assert_eq!(ctx.encoding(&x), v);
    }

    #[test]
    fn field_axioms_hold(which in 0usize..4, a in 0u64..32, b in 0u64..32, c in 0u64..32) {
        let ctx = &fields()[which];
        let a = ctx.from_encoding(a % ctx.size()).unwrap();
        let b = ctx.from_encoding(b % ctx.size()).unwrap();
        let c = ctx.from_encoding(c % ctx.size()).unwrap();
        prop_assert_eq!(ctx.add(&a, &b), ctx.add(&b, &a));
        prop_assert_eq!(ctx.mul(&a, &b), ctx.mul(&b, &a));
        prop_assert_eq!(
            ctx.mul(&a, &ctx.add(&b, &c)),
            ctx.add(&ctx.mul(&a, &b), &ctx.mul(&a, &c))
        );
        prop_assert_eq!(ctx.sub(&ctx.add(&a, &b), &b), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(ctx.mul(&a, &ctx.inv(&a).unwrap()), ctx.one());
        }
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative(which in 0usize..4, a in 0u64..32, b in 0u64..32, j in 0usize..6) {
        let ctx = &fields()[which];
        let a = ctx.from_encoding(a % ctx.size()).unwrap();
        let b = ctx.from_encoding(b % ctx.size()).unwrap();
        prop_assert_eq!(
            ctx.frobenius(&ctx.add(&a, &b), j),
            ctx.add(&ctx.frobenius(&a, j), &ctx.frobenius(&b, j))
        );
        prop_assert_eq!(
            ctx.frobenius(&ctx.mul(&a, &b), j),
            ctx.mul(&ctx.frobenius(&a, j), &ctx.frobenius(&b, j))
        );
    }

    #[test]
    fn linearized_polynomials_are_linear(a in 0u64..243, b in 0u64..243, c0 in 0u64..243, c1 in 0u64..243) {
        let ctx = Arc::new(FieldCtx::new(3, 5).unwrap());
        let l = LinPoly::new(
            1,
            vec![
                ctx.from_encoding(c0 % ctx.size()).unwrap(),
                ctx.from_encoding(c1 % ctx.size()).unwrap(),
                ctx.one(),
            ],
        );
        let a = ctx.from_encoding(a % ctx.size()).unwrap();
        let b = ctx.from_encoding(b % ctx.size()).unwrap();
        let lhs = l.eval(&ctx, &ctx.add(&a, &b)).unwrap();
        let rhs = ctx.add(&l.eval(&ctx, &a).unwrap(), &l.eval(&ctx, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
        // Scaling by the prime field commutes with the map.
        let two = ctx.from_u64(2);
        prop_assert_eq!(
            l.eval(&ctx, &ctx.mul(&two, &a)).unwrap(),
            ctx.mul(&two, &l.eval(&ctx, &a).unwrap())
        );
    }

    #[test]
    fn solver_count_matches_classify(a in 1u64..64) {
        // q = 2 over GF(64): every solve agrees with the cheap classifier.
        let inst = Instance::new(2, 1, 6, a).unwrap();
        let sol = bluher::solve(&inst).unwrap();
        prop_assert_eq!(sol.count, bluher::solver::classify(&inst).unwrap());
        prop_assert_eq!(sol.count as usize, sol.roots.len());
        for x in &sol.roots {
            prop_assert!(inst.trinomial_at(x).unwrap().is_zero());
        }
    }
}
