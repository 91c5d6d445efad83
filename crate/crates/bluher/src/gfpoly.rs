//! Dense polynomials over GF(p), coefficients ascending by degree.
//!
//! Just enough arithmetic to build and reduce field extensions: the zero
//! polynomial is the empty vector, and every routine returns trimmed output.

/// Multiplicative inverse mod p (p prime), by Fermat.
pub(crate) fn modinv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    modpow(a % p, p - 2, p)
}

pub(crate) fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}


pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of a modulo f, where f is monic (or at least has invertible lead).
pub(crate) fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let df = f.len() - 1;
    let lead_inv = modinv(f[df], p);
    while r.len() > df {
        let c = *r.last().unwrap() * lead_inv % p;
        let shift = r.len() - 1 - df;
        if c != 0 {
            for (j, &fj) in f.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - c * fj % p) % p;
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Monic gcd of a and b.
pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = modinv(lead, p);
        for c in &mut x {
            *c = *c * inv % p;
        }
    }
    x
}

/// a^(-1) mod f via the extended Euclidean algorithm; None when gcd(a, f) != 1.
pub(crate) fn inv_mod(a: &[u64], f: &[u64], p: u64) -> Option<Vec<u64>> {
    // Invariants: r0 = s0*a (mod f), r1 = s1*a (mod f).
    let mut r0 = f.to_vec();
    let mut r1 = rem(a, f, p);
    let mut s0: Vec<u64> = Vec::new();
    let mut s1 = vec![1];
    while !r1.is_empty() {
        // r0 = q*r1 + r2
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut r2 = r0.clone();
        let lead_inv = modinv(*r1.last().unwrap(), p);
        while r2.len() >= r1.len() && !r2.is_empty() {
            let c = *r2.last().unwrap() * lead_inv % p;
            let shift = r2.len() - r1.len();
            q[shift] = c;
            for (j, &gj) in r1.iter().enumerate() {
                r2[shift + j] = (r2[shift + j] + p - c * gj % p) % p;
            }
            trim(&mut r2);
            if r2.len() <= shift {
                break;
            }
        }
        trim(&mut q);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let scale = modinv(r0[0], p);
    let mut out = rem(&s0, f, p);
    for c in &mut out {
        *c = *c * scale % p;
    }
    trim(&mut out);
    Some(out)
}

/// base^e mod f.
pub(crate) fn pow_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), f, p);
        }
        b = rem(&mul(&b, &b, p), f, p);
        e >>= 1;
    }
    acc
}

/// Irreducibility over GF(p) for monic f of degree >= 1.
///
/// f is irreducible iff no irreducible factor of degree i <= deg(f)/2 exists,
/// i.e. gcd(f, X^(p^i) - X) is constant for all such i.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let e = f.len() - 1;
    if e == 0 {
        return false;
    }
    let mut h = vec![0, 1]; // X
    for _ in 1..=e / 2 {
        h = pow_mod(&h, p, f, p); // now X^(p^i) mod f
        let g = gcd(f, &sub(&h, &[0, 1], p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// The monic irreducible of degree e over GF(p) whose non-leading coefficient
/// vector has the smallest integer encoding sum(c_i p^i).
pub(crate) fn default_irreducible(p: u64, e: usize) -> Vec<u64> {
    let mut v: u64 = 0;
    loop {
        let mut f = vec![0u64; e + 1];
        f[e] = 1;
        let mut rest = v;
        for c in f.iter_mut().take(e) {
            *c = rest % p;
            rest /= p;
        }
        if rest == 0 && is_irreducible(&f, p) {
            return f;
        }
        v += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli_match_known_tables() {
        // GF(8): X^3 + X + 1, not X^3 + X^2 + 1.
        assert_eq!(default_irreducible(2, 3), vec![1, 1, 0, 1]);
        // GF(4): X^2 + X + 1 is the only irreducible quadratic.
        assert_eq!(default_irreducible(2, 2), vec![1, 1, 1]);
        // GF(9): X^2 + 1 (since -1 is not a square mod 3).
        assert_eq!(default_irreducible(3, 2), vec![1, 0, 1]);
        // GF(16): X^4 + X + 1.
        assert_eq!(default_irreducible(2, 4), vec![1, 1, 0, 0, 1]);
        // Prime field: X itself.
        assert_eq!(default_irreducible(5, 1), vec![0, 1]);
    }

    #[test]
    fn irreducibility_screens_products() {
        // (X^2+X+1)^2 = X^4 + X^2 + 1 over GF(2).
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
        // X^2 - 2 over GF(7): 2 = 3^2 mod 7, so reducible.
        assert!(!is_irreducible(&[5, 0, 1], 7));
        // X^2 - 3 over GF(7): 3 is a non-residue mod 7.
        assert!(is_irreducible(&[4, 0, 1], 7));
    }

    #[test]
    fn inv_mod_round_trips() {
        let f = [1, 1, 0, 1]; // X^3+X+1 over GF(2)
        let a = [0, 1]; // X
        let inv = inv_mod(&a, &f, 2).unwrap();
        assert_eq!(rem(&mul(&a, &inv, 2), &f, 2), vec![1]);
        // X^2+X+1 divides X^4+X^2+1, so no inverse there.
        assert!(inv_mod(&[1, 1, 1], &[1, 0, 1, 0, 1], 2).is_none());
    }
}
