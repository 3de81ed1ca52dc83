//! Dense polynomials over GF(p). Coefficients are stored in ascending order
//! with no trailing zeros, so the zero polynomial is the empty vector.

pub(crate) type Poly = Vec<u32>;

#[inline]
pub(crate) fn addm(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % p as u64) as u32
}

#[inline]
pub(crate) fn subm(a: u32, b: u32, p: u32) -> u32 {
    addm(a, p - b % p, p)
}

#[inline]
pub(crate) fn mulm(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn powm(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn invm(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    powm(a, p as u64 - 2, p)
}

pub(crate) fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub(crate) fn constant(c: u32) -> Poly {
    if c == 0 {
        vec![]
    } else {
        vec![c]
    }
}

pub(crate) fn add(a: &[u32], b: &[u32], p: u32) -> Poly {
    let n = a.len().max(b.len());
    let mut r: Poly = (0..n)
        .map(|i| addm(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut r);
    r
}

pub(crate) fn neg(a: &[u32], p: u32) -> Poly {
    a.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect()
}


pub(crate) fn scale(a: &[u32], c: u32, p: u32) -> Poly {
    if c % p == 0 {
        return vec![];
    }
    a.iter().map(|&x| mulm(x, c, p)).collect()
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    let pp = p as u64;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x as u64 * y as u64) % pp;
        }
    }
    let mut r: Poly = r.into_iter().map(|c| c as u32).collect();
    trim(&mut r);
    r
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &[u32], b: &[u32], p: u32) -> (Poly, Poly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (vec![], r);
    }
    let db = b.len() - 1;
    let lead_inv = invm(b[db], p);
    let mut q = vec![0u32; r.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let c = mulm(r[dr], lead_inv, p);
        let shift = dr - db;
        q[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = subm(r[shift + i], mulm(c, bc, p), p);
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

/// Leading coefficient and the monic associate.
pub(crate) fn make_monic(a: &[u32], p: u32) -> (u32, Poly) {
    match a.last() {
        None => (0, vec![]),
        Some(&lc) => (lc, scale(a, invm(lc, p), p)),
    }
}

/// Monic gcd (zero if both inputs are zero).
pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(&x, p).1
}


/// Square root of a polynomial over GF(p), p odd, if it is a perfect square.
pub(crate) fn sqrt(f: &[u32], p: u32) -> Option<Poly> {
    debug_assert!(p != 2);
    let Some(d) = degree(f) else {
        return Some(vec![]);
    };
    if d % 2 == 1 {
        return None;
    }
    let m = d / 2;
    let lead = sqrt_mod(f[d], p)?;
    let mut g = vec![0u32; m + 1];
    g[m] = lead;
    let two_lead_inv = invm(mulm(2, lead, p), p);
    for i in (0..m).rev() {
        // coefficient of t^(m+i) in g^2 is 2 g_m g_i + sum over j,l in (i, m) with j+l = m+i
        let mut s = 0u32;
        for j in (i + 1)..m {
            let l = m + i - j;
            if l > i && l < m + 1 && l != m {
                s = addm(s, mulm(g[j], g[l], p), p);
            }
        }
        g[i] = mulm(subm(f[m + i], s, p), two_lead_inv, p);
    }
    if mul(&g, &g, p) == f {
        Some(g)
    } else {
        None
    }
}

/// Tonelli–Shanks square root modulo an odd prime.
pub(crate) fn sqrt_mod(a: u32, p: u32) -> Option<u32> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if powm(a, (p as u64 - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p as u64 - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2u32;
    while powm(z, (p as u64 - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = powm(z, q, p);
    let mut t = powm(a, q, p);
    let mut r = powm(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = mulm(tt, tt, p);
            i += 1;
        }
        let b = powm(c, 1u64 << (m - i - 1), p);
        m = i;
        c = mulm(b, b, p);
        t = mulm(t, c, p);
        r = mulm(r, b, p);
    }
    Some(r.min(p - r))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Irreducibility over GF(p) for a monic polynomial of degree ≤ 4, by trial
/// division against every monic polynomial of degree ≤ deg/2.
pub(crate) fn is_irreducible_small(f: &[u32], p: u32) -> bool {
    let Some(d) = degree(f) else {
        return false;
    };
    if d == 0 {
        return false;
    }
    for e in 1..=d / 2 {
        let count = (p as u64).pow(e as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(e + 1);
            let mut c = code;
            for _ in 0..e {
                g.push((c % p as u64) as u32);
                c /= p as u64;
            }
            g.push(1);
            if divrem(f, &g, p).1.is_empty() {
                return false;
            }
        }
    }
    true
}

pub(crate) fn to_text(a: &[u32]) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, &c) in a.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
        let part = match i {
            0 => coef,
            1 => format!("{coef}t"),
            _ => format!("{coef}t^{i}"),
        };
        parts.push(part);
    }
    parts.join("+")
}
