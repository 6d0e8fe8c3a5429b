//! Dense polynomials over the prime field `GF(p)`, used only to validate and
//! search for extension-field moduli. Coefficients are ascending and trimmed.

use alloc::vec;
use alloc::vec::Vec;

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    t0.rem_euclid(p as i64) as u64
}

fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while a.len() > df {
        let top = a.len() - 1;
        let c = a[top] * lead_inv % p;
        if c != 0 {
            let shift = top - df;
            for (i, &fi) in f.iter().enumerate() {
                a[shift + i] = (a[shift + i] + p - c * fi % p) % p;
            }
        }
        a.pop();
        a = trim(a);
    }
    trim(a)
}

fn mul_rem(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(&out, f, p)
}

fn pow_rem(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_rem(&acc, &b, f, p);
        }
        b = mul_rem(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility of `f` (ascending coefficients, degree >= 1) over `GF(p)`.
///
/// Degrees up to 3 only need a root check. Above that, `f` is irreducible iff
/// `gcd(f, x^{p^i} - x) = 1` for every `1 <= i <= deg/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let p = p as u64;
    let f: Vec<u64> = trim(f.iter().map(|&c| c as u64 % p).collect());
    let deg = match f.len() {
        0 | 1 => return false,
        n => n - 1,
    };
    if deg == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    if deg <= 3 {
        return (0..p).all(|x| {
            f.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) != 0
        });
    }
    let x = vec![0u64, 1];
    let mut h = x.clone();
    for _ in 1..=deg / 2 {
        h = pow_rem(&h, p, &f, p);
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        let g = gcd(&f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `m`, ordering the
/// non-leading coefficients by their base-`p` value with `c_{m-1}` most
/// significant. Returned ascending, including the leading 1.
pub(crate) fn smallest_irreducible(p: u32, m: u32) -> Option<Vec<u32>> {
    let count = (p as u64).checked_pow(m)?;
    (0..count).find_map(|code| {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut c = code;
        for _ in 0..m {
            f.push((c % p as u64) as u32);
            c /= p as u64;
        }
        f.push(1);
        is_irreducible(&f, p).then_some(f)
    })
}
