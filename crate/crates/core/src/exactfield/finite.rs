//! GF(p) and GF(p^k) arithmetic on integer codes.
//!
//! An element of GF(p^k) is stored as the integer Σ cᵢ pⁱ built from its
//! coefficient vector in the basis 1, x, …, x^{k−1}. Multiplication goes
//! through discrete log tables built once per field.

use super::poly::{self, addm, mulm, subm};

#[derive(Debug)]
pub(crate) struct FiniteCtx {
    pub p: u32,
    pub k: u32,
    pub q: u32,
    /// c_0..c_{k-1} of the monic modulus; empty for prime fields.
    pub modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl FiniteCtx {
    pub fn prime(p: u32) -> Self {
        FiniteCtx { p, k: 1, q: p, modulus: vec![], exp: vec![], log: vec![] }
    }

    pub fn extension(p: u32, modulus: Vec<u32>) -> Self {
        let k = modulus.len() as u32;
        let q = p.pow(k);
        let mut ctx = FiniteCtx { p, k, q, modulus, exp: vec![], log: vec![] };
        ctx.build_tables();
        ctx
    }

    fn digits(&self, mut code: u32) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.k as usize);
        for _ in 0..self.k {
            d.push(code % self.p);
            code /= self.p;
        }
        d
    }

    fn from_digits(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn coefficients(&self, code: u32) -> Vec<u32> {
        self.digits(code)
    }

    pub fn from_coefficients(&self, c: &[u32]) -> u32 {
        let mut d: Vec<u32> = c.iter().map(|&x| x % self.p).collect();
        d.resize(self.k as usize, 0);
        self.from_digits(&d)
    }

    /// Schoolbook product modulo the defining polynomial; only used while
    /// building the log tables.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let prod = poly::mul(&self.digits(a), &self.digits(b), p);
        let mut m = self.modulus.clone();
        m.push(1);
        let (_, r) = poly::divrem(&prod, &m, p);
        self.from_digits(&{
            let mut r = r;
            r.resize(self.k as usize, 0);
            r
        })
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul_slow(r, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        r
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as u64;
        let mut primes = Vec::new();
        let mut m = n;
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                primes.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        let g = (2..self.q)
            .find(|&g| primes.iter().all(|&r| self.pow_slow(g, n / r) != 1))
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0u32; n as usize];
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = x;
            log[x as usize] = i as u32;
            x = self.mul_slow(x, g);
        }
        self.exp = exp;
        self.log = log;
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return addm(a, b, self.p);
        }
        let p = self.p;
        let (mut a, mut b, mut r, mut place) = (a, b, 0, 1);
        for _ in 0..self.k {
            r += addm(a % p, b % p, p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let p = self.p;
        let (mut a, mut r, mut place) = (a, 0, 1);
        for _ in 0..self.k {
            r += subm(0, a % p, p) * place;
            a /= p;
            place *= p;
        }
        r
    }


    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            return mulm(a, b, self.p);
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        let s = (self.log[a as usize] + self.log[b as usize]) % n;
        self.exp[s as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.k == 1 {
            return Some(poly::invm(a, self.p));
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if self.k == 1 {
            return poly::powm(a, e, self.p);
        }
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        let s = (self.log[a as usize] as u64 * (e % n)) % n;
        self.exp[s as usize]
    }

    pub fn sqrt(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return Some(0);
        }
        if self.p == 2 {
            return Some(self.pow(a, self.q as u64 / 2));
        }
        if self.k == 1 {
            return poly::sqrt_mod(a, self.p);
        }
        let l = self.log[a as usize];
        if l % 2 == 1 {
            None
        } else {
            Some(self.exp[(l / 2) as usize])
        }
    }

    pub fn from_i64(&self, n: i64) -> u32 {
        (n.rem_euclid(self.p as i64)) as u32
    }
}
