//! Dense univariate polynomial helpers over GF(p), used for modulus
//! validation and extension-field inverses. Coefficients are little-endian
//! residues mod p.

pub(crate) fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn deg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of a by the monic polynomial m.
pub(crate) fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let dm = deg(m).expect("zero modulus");
    assert_eq!(m[dm], 1, "modulus must be monic");
    let mut r: Vec<u64> = a.to_vec();
    trim(&mut r);
    while let Some(dr) = deg(&r) {
        if dr < dm {
            break;
        }
        let c = r[dr];
        for j in 0..=dm {
            let idx = dr - dm + j;
            let sub = mulmod(c, m[j], p);
            r[idx] = (r[idx] + p - sub % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // Extended Euclid over the integers.
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible mod p");
    (((t % p as i128) + p as i128) % p as i128) as u64
}

/// Monic gcd of two polynomials over GF(p).
pub(crate) fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let dy = deg(&y).unwrap();
        let lead_inv = inv_mod_p(y[dy], p);
        let monic: Vec<u64> = {
            let mut m: Vec<u64> = y.iter().map(|&c| mulmod(c, lead_inv, p)).collect();
            trim(&mut m);
            m
        };
        let r = poly_rem(&x, &monic, p);
        x = y;
        y = r;
    }
    if let Some(d) = deg(&x) {
        let li = inv_mod_p(x[d], p);
        for c in x.iter_mut() {
            *c = mulmod(*c, li, p);
        }
    }
    x
}

/// Extended Euclid: returns u with u*a = gcd(a, m) mod m. Used for field
/// inverses, where gcd(a, m) is a nonzero constant.
pub(crate) fn poly_invmod(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut r0 = m.to_vec();
    let mut r1 = poly_rem(a, m, p);
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let d1 = deg(&r1).unwrap();
        let li = inv_mod_p(r1[d1], p);
        // quotient of r0 by r1, one leading term at a time
        let mut q = vec![0u64; deg(&r0).map(|d| d.saturating_sub(d1) + 1).unwrap_or(1)];
        let mut rem = r0.clone();
        while let Some(dr) = deg(&rem) {
            if dr < d1 {
                break;
            }
            let c = mulmod(rem[dr], li, p);
            q[dr - d1] = c;
            for j in 0..=d1 {
                let sub = mulmod(c, r1[j], p);
                rem[dr - d1 + j] = (rem[dr - d1 + j] + p - sub % p) % p;
            }
            trim(&mut rem);
        }
        trim(&mut q);
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        let qs1 = poly_mul(&q, &s1, p);
        let mut new_s = s0.clone();
        new_s.resize(new_s.len().max(qs1.len()), 0);
        for (i, &c) in qs1.iter().enumerate() {
            new_s[i] = (new_s[i] + p - c) % p;
        }
        trim(&mut new_s);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = new_s;
    }
    let d0 = deg(&r0)?;
    if d0 != 0 {
        return None; // a and m share a factor
    }
    let li = inv_mod_p(r0[0], p);
    let mut out: Vec<u64> = s0.iter().map(|&c| mulmod(c, li, p)).collect();
    trim(&mut out);
    Some(out)
}

/// x^(p^e) mod m, by iterated p-th powering.
fn frobenius_power(m: &[u64], p: u64, e: u32) -> Vec<u64> {
    let mut x = vec![0, 1]; // x
    for _ in 0..e {
        // raise to the p-th power mod m via square and multiply
        let mut acc = vec![1u64];
        let mut base = x.clone();
        let mut n = p;
        while n > 0 {
            if n & 1 == 1 {
                acc = poly_rem(&poly_mul(&acc, &base, p), m, p);
            }
            base = poly_rem(&poly_mul(&base, &base, p), m, p);
            n >>= 1;
        }
        x = acc;
    }
    x
}

/// Irreducibility over GF(p). Trial evaluation for degree <= 3 when p is
/// small, Rabin's distinct-degree criterion otherwise.
pub fn is_irreducible(m: &[u64], p: u64) -> bool {
    let mut m = m.to_vec();
    for c in m.iter_mut() {
        *c %= p;
    }
    trim(&mut m);
    let d = match deg(&m) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(d) => d,
    };
    if d <= 3 && p <= 1 << 20 {
        // A polynomial of degree 2 or 3 is reducible iff it has a root.
        for t in 0..p {
            let mut val = 0u64;
            for &c in m.iter().rev() {
                val = (mulmod(val, t, p) + c) % p;
            }
            if val == 0 {
                return false;
            }
        }
        return true;
    }
    // Rabin: no factor of degree d/q for primes q | d, and x^(p^d) = x.
    let mut primes = vec![];
    let mut n = d;
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            primes.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    for q in primes {
        let e = (d / q) as u32;
        let mut h = frobenius_power(&m, p, e);
        // h - x
        if h.len() < 2 {
            h.resize(2, 0);
        }
        h[1] = (h[1] + p - 1) % p;
        trim(&mut h);
        let g = poly_gcd(&h, &m, p);
        if deg(&g) != Some(0) {
            return false;
        }
    }
    let mut h = frobenius_power(&m, p, d as u32);
    if h.len() < 2 {
        h.resize(2, 0);
    }
    h[1] = (h[1] + p - 1) % p;
    trim(&mut h);
    h.is_empty()
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // Deterministic Miller-Rabin for u64.
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn powmod(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1u64;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, n);
        }
        a = mulmod(a, a, n);
        e >>= 1;
    }
    acc
}
