//! Every root in GF(p^n) of the trinomial P_a(X) = X^(q+1) + X + a, q = p^k.
//!
//! The number of roots is always 0, 1, 2, or p^d + 1 with d = gcd(n, k); this
//! crate classifies a given a, produces the roots explicitly in every case,
//! and ships a brute-force oracle so the closed forms can be cross-checked
//! exhaustively on desk-sized fields.
//!
//! Start with [`FieldCtx`] for field arithmetic, [`Instance`] to pose a
//! problem, [`solver::solve`] for the answer, and [`oracle`] for verification.
//! The `examples/` directory walks through each capability.

pub mod cli;
pub mod error;
mod fpmat;
pub mod gf;
mod gfpoly;
pub mod linpoly;
pub mod oracle;
pub mod sequence;
pub mod solver;

pub use error::{Error, Result};
pub use gf::{Elt, Embedding, FieldCtx};
pub use linpoly::LinPoly;
pub use sequence::Instance;
pub use solver::{solve, Solution};
