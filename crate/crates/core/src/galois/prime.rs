//! Number theory and GF(p) polynomial scratch work used while a field is
//! being constructed, before its discrete-log tables exist.
//!
//! Polynomials over GF(p) are ascending coefficient vectors with no
//! trailing zeros; the zero polynomial is the empty vector.

/// Trial-division primality test. All inputs in this crate stay below 2^20.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
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

fn mod_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    mod_pow(a, p - 2, p)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` by a monic divisor `b` over GF(p).
pub fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*b.last().expect("divisor must be nonzero"), 1);
    let db = b.len() - 1;
    trim(&mut a);
    while a.len() > db {
        let lead = a[a.len() - 1];
        let shift = a.len() - 1 - db;
        if lead != 0 {
            for (j, &bj) in b.iter().take(db).enumerate() {
                a[shift + j] = (a[shift + j] + (p - lead) * bj) % p;
            }
        }
        a.pop();
        trim(&mut a);
    }
    a
}

/// Product of `a` and `b` reduced by the monic modulus `f`, over GF(p).
pub fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem(prod, f, p)
}

/// `base^e` reduced by the monic modulus `f`, over GF(p).
pub fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base.to_vec(), f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, p);
        }
        b = poly_mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

/// Monic gcd over GF(p).
pub fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = mod_inv(*b.last().unwrap(), p);
        let monic: Vec<u64> = b.iter().map(|&c| c * inv % p).collect();
        let r = poly_rem(a, &monic, p);
        a = monic;
        b = r;
    }
    if let Some(&lead) = a.last() {
        if lead != 1 {
            let inv = mod_inv(lead, p);
            for c in &mut a {
                *c = *c * inv % p;
            }
        }
    }
    a
}

/// Irreducibility over GF(p) for a monic polynomial of degree <= 20,
/// by the Frobenius fixed-point criterion: f of degree m is irreducible
/// iff x^{p^m} = x (mod f) and gcd(x^{p^{m/l}} - x, f) = 1 for every
/// prime l dividing m.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    debug_assert!(m >= 1 && *f.last().unwrap() == 1);
    if m == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let q = p.pow(m as u32);
    if poly_powmod(&x, q, f, p) != x {
        return false;
    }
    for l in distinct_prime_factors(m as u64) {
        let e = p.pow((m as u64 / l) as u32);
        let mut g = poly_powmod(&x, e, f, p);
        if g.len() < 2 {
            g.resize(2, 0);
        }
        g[1] = (g[1] + p - 1) % p;
        trim(&mut g);
        if poly_gcd(f.to_vec(), g, p).len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(3));
        assert!(is_prime(2));
        assert!(is_prime(104729));
        assert!(!is_prime(1));
        assert!(!is_prime(9));
        assert!(!is_prime(1023));
    }

    #[test]
    fn factors() {
        assert_eq!(distinct_prime_factors(24), vec![2, 3]);
        assert_eq!(distinct_prime_factors(80), vec![2, 5]);
        assert_eq!(distinct_prime_factors(7), vec![7]);
    }

    #[test]
    fn irreducibility_small_cases() {
        // x^2 + 1 over GF(3) has no roots and is irreducible.
        assert!(is_irreducible(&[1, 0, 1], 3));
        // x^2 + x = x(x + 1) is reducible.
        assert!(!is_irreducible(&[0, 1, 1], 3));
        // x^2 + 1 = (x - 2)(x + 2) over GF(5).
        assert!(!is_irreducible(&[1, 0, 1], 5));
        assert!(is_irreducible(&[2, 0, 1], 5));
        // Degree-4 over GF(3): x^4 + x + 2 is irreducible, x^4 + 1 is not.
        assert!(is_irreducible(&[2, 1, 0, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 0, 0, 1], 3));
    }

    #[test]
    fn gcd_normalizes_to_monic() {
        // gcd(x^2 - 1, x - 1) = x - 1 over GF(5), up to units.
        let g = poly_gcd(vec![4, 0, 1], vec![3, 2], 5);
        assert_eq!(g, vec![4, 1]);
    }
}
