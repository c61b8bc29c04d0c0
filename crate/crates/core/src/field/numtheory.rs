//! Integer and GF(p)[x] helpers used while setting up a field.

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &SMALL {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `d` over GF(p). Coefficients low to high.
pub fn poly_rem(a: &[u64], d: &[u64], p: u64) -> Vec<u64> {
    let dd = d.len() - 1;
    debug_assert_eq!(d[dd], 1);
    let mut r = a.to_vec();
    while r.len() > dd {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let base = r.len() - dd;
            for (i, &di) in d[..dd].iter().enumerate() {
                let sub = mul_mod(lead, di, p);
                r[base + i] = (r[base + i] + p - sub) % p;
            }
        }
    }
    r
}

/// Trial division of a monic degree-`m` polynomial by every monic polynomial of
/// degree `1..=m/2`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    for deg in 1..=m / 2 {
        let count = p.pow(deg as u32);
        let mut divisor = vec![0u64; deg + 1];
        divisor[deg] = 1;
        for idx in 0..count {
            let mut t = idx;
            for c in divisor.iter_mut().take(deg) {
                *c = t % p;
                t /= p;
            }
            if poly_rem(f, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}
