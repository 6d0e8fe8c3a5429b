//! Exact arithmetic in `GF(p)` and `GF(p^m)`.
//!
//! Elements are plain integers in `[0, q)`. For an extension field the integer
//! is the base-`p` positional encoding of the coefficient vector, so the
//! element `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` is `sum c_i p^i`. The same
//! integer is the text and wire form of the element.

mod gfpx;

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 20;

/// Extension fields up to this order get exp/log tables.
const TABLE_LIMIT: u32 = 1 << 16;

const MAX_DEGREE: usize = 20;

/// A field element in canonical form. Only meaningful together with the
/// [`Field`] that produced it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elt(u32);

impl Elt {
    pub const ZERO: Elt = Elt(0);
    pub const ONE: Elt = Elt(1);

    #[inline]
    pub const fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

struct LogTables {
    /// `exp[i] = g^i` for `i < 2(q-1)`.
    exp: Vec<u32>,
    /// `log[g^i] = i`; `log[0]` is unused.
    log: Vec<u32>,
}

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Ascending, monic, length `m + 1`; empty for prime fields.
    modulus: Vec<u32>,
    tables: Option<LogTables>,
}

/// A finite field context. Cheap to clone and immutable, so it can be shared
/// freely between threads.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{}) mod {:?}", self.0.p, self.0.m, self.0.modulus)
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds `GF(p^m)`.
    ///
    /// For `m > 1` the modulus is given ascending and monic (`m + 1`
    /// coefficients ending in 1). When it is `None` the lexicographically
    /// smallest monic irreducible of degree `m` is used. Prime fields take no
    /// modulus (`None` or an empty slice).
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || m as usize > MAX_DEGREE {
            return Err(Error::InvalidDegree(m));
        }
        let q = (p as u128).pow(m);
        if q > MAX_ORDER as u128 {
            return Err(Error::OrderTooLarge(q.min(u64::MAX as u128) as u64));
        }
        let (p, q) = (p as u32, q as u32);

        let modulus = if m == 1 {
            match modulus {
                None | Some([]) => Vec::new(),
                Some(_) => return Err(Error::InvalidModulus),
            }
        } else {
            match modulus {
                Some(f) => {
                    if f.len() != m as usize + 1 || f[m as usize] != 1 || f.iter().any(|&c| c >= p)
                    {
                        return Err(Error::InvalidModulus);
                    }
                    if !gfpx::is_irreducible(f, p) {
                        return Err(Error::NotIrreducible);
                    }
                    f.to_vec()
                }
                None => gfpx::smallest_irreducible(p, m).ok_or(Error::NotIrreducible)?,
            }
        };

        let mut inner = Inner { p, m, q, modulus, tables: None };
        if m > 1 && q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(Field(Arc::new(inner)))
    }

    /// Shorthand for `GF(p)`.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.0.m
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Ascending monic modulus, empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Elt {
        Elt::ZERO
    }

    pub fn one(&self) -> Elt {
        Elt::ONE
    }

    /// Checked conversion from the integer encoding.
    pub fn elt(&self, value: u64) -> Result<Elt> {
        if value < self.0.q as u64 {
            Ok(Elt(value as u32))
        } else {
            Err(Error::ElementOutOfRange { value, q: self.0.q })
        }
    }

    pub fn elts(&self, values: &[u64]) -> Result<Vec<Elt>> {
        values.iter().map(|&v| self.elt(v)).collect()
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Elt {
        Elt(v.rem_euclid(self.0.p as i64) as u32)
    }

    #[inline]
    pub fn contains(&self, a: Elt) -> bool {
        a.0 < self.0.q
    }

    /// All `q` elements in increasing integer order.
    pub fn elements(&self) -> impl Iterator<Item = Elt> + Clone {
        (0..self.0.q).map(Elt)
    }

    /// All nonzero elements in increasing integer order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elt> + Clone {
        (1..self.0.q).map(Elt)
    }

    #[inline]
    pub fn add(&self, a: Elt, b: Elt) -> Elt {
        debug_assert!(self.contains(a) && self.contains(b));
        let p = self.0.p;
        if self.0.m == 1 {
            let s = a.0 + b.0;
            return Elt(if s >= p { s - p } else { s });
        }
        if p == 2 {
            return Elt(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        while x != 0 || y != 0 {
            let d = (x % p + y % p) % p;
            out += d * place;
            place *= p;
            x /= p;
            y /= p;
        }
        Elt(out)
    }

    #[inline]
    pub fn neg(&self, a: Elt) -> Elt {
        debug_assert!(self.contains(a));
        let p = self.0.p;
        if self.0.m == 1 {
            return Elt(if a.0 == 0 { 0 } else { p - a.0 });
        }
        if p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        while x != 0 {
            out += ((p - x % p) % p) * place;
            place *= p;
            x /= p;
        }
        Elt(out)
    }

    #[inline]
    pub fn sub(&self, a: Elt, b: Elt) -> Elt {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elt, b: Elt) -> Elt {
        debug_assert!(self.contains(a) && self.contains(b));
        if self.0.m == 1 {
            return Elt(((a.0 as u64 * b.0 as u64) % self.0.p as u64) as u32);
        }
        if a.0 == 0 || b.0 == 0 {
            return Elt::ZERO;
        }
        match &self.0.tables {
            Some(t) => Elt(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => Elt(mul_schoolbook(&self.0, a.0, b.0)),
        }
    }

    /// Multiplication without the exp/log tables.
    #[cfg(test)]
    pub(crate) fn mul_reference(&self, a: Elt, b: Elt) -> Elt {
        if self.0.m == 1 {
            return Elt(((a.0 as u64 * b.0 as u64) % self.0.p as u64) as u32);
        }
        Elt(mul_schoolbook(&self.0, a.0, b.0))
    }

    pub fn inv(&self, a: Elt) -> Result<Elt> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.0.m == 1 {
            let p = self.0.p as i64;
            let (mut r0, mut r1) = (p, a.0 as i64);
            let (mut t0, mut t1) = (0i64, 1i64);
            while r1 != 0 {
                let qt = r0 / r1;
                (r0, r1) = (r1, r0 - qt * r1);
                (t0, t1) = (t1, t0 - qt * t1);
            }
            return Ok(Elt(t0.rem_euclid(p) as u32));
        }
        match &self.0.tables {
            Some(t) => {
                let order = self.0.q - 1;
                let l = t.log[a.0 as usize];
                Ok(Elt(t.exp[((order - l) % order) as usize]))
            }
            None => Ok(self.pow_u(a, self.0.q as u64 - 2)),
        }
    }

    pub fn div(&self, a: Elt, b: Elt) -> Result<Elt> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for a non-negative exponent, with `0^0 = 1`.
    pub fn pow_u(&self, a: Elt, e: u64) -> Elt {
        if e == 0 {
            return Elt::ONE;
        }
        if a.0 == 0 {
            return Elt::ZERO;
        }
        let order = (self.0.q - 1) as u64;
        let e = e % order;
        if let Some(t) = &self.0.tables {
            let l = t.log[a.0 as usize] as u64;
            return Elt(t.exp[((l * e) % order) as usize]);
        }
        let (mut acc, mut base, mut e) = (Elt::ONE, a, e);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for any integer exponent. Negative exponents need `a != 0`.
    pub fn pow(&self, a: Elt, e: i64) -> Result<Elt> {
        if e >= 0 {
            return Ok(self.pow_u(a, e as u64));
        }
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = (self.0.q - 1) as i64;
        Ok(self.pow_u(a, e.rem_euclid(order) as u64))
    }

    pub fn sum<I: IntoIterator<Item = Elt>>(&self, it: I) -> Elt {
        it.into_iter().fold(Elt::ZERO, |acc, x| self.add(acc, x))
    }

    /// `sum a_i b_i`.
    pub fn dot<'a, I>(&self, pairs: I) -> Elt
    where
        I: IntoIterator<Item = (&'a Elt, &'a Elt)>,
    {
        pairs
            .into_iter()
            .fold(Elt::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }
}

fn mul_schoolbook(f: &Inner, a: u32, b: u32) -> u32 {
    let (p, m) = (f.p as u64, f.m as usize);
    let mut da = [0u64; MAX_DEGREE];
    let mut db = [0u64; MAX_DEGREE];
    let (mut x, mut y) = (a as u64, b as u64);
    for i in 0..m {
        da[i] = x % p;
        db[i] = y % p;
        x /= p;
        y /= p;
    }
    let mut prod = [0u64; 2 * MAX_DEGREE];
    for i in 0..m {
        if da[i] == 0 {
            continue;
        }
        for j in 0..m {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    for deg in (m..2 * m - 1).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for i in 0..m {
            let t = c * f.modulus[i] as u64 % p;
            prod[deg - m + i] = (prod[deg - m + i] + p - t) % p;
        }
    }
    (0..m).rev().fold(0u64, |acc, i| acc * p + prod[i]) as u32
}

fn pow_schoolbook(f: &Inner, a: u32, mut e: u64) -> u32 {
    let (mut acc, mut base) = (1u32, a);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_schoolbook(f, acc, base);
        }
        base = mul_schoolbook(f, base, base);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
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

fn build_tables(f: &Inner) -> LogTables {
    let order = (f.q - 1) as u64;
    let factors = prime_factors(order);
    let g = (2..f.q)
        .find(|&g| factors.iter().all(|&r| pow_schoolbook(f, g, order / r) != 1))
        .expect("multiplicative group of a finite field is cyclic");
    let mut exp = vec![0u32; 2 * order as usize];
    let mut log = vec![0u32; f.q as usize];
    let mut cur = 1u32;
    for i in 0..order as usize {
        exp[i] = cur;
        exp[i + order as usize] = cur;
        log[cur as usize] = i as u32;
        cur = mul_schoolbook(f, cur, g);
    }
    LogTables { exp, log }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64, m: u32) -> Field {
        Field::new(p, m, None).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(12, 1, None).unwrap_err(), Error::NotPrime(12));
        assert_eq!(Field::new(1, 1, None).unwrap_err(), Error::NotPrime(1));
        assert_eq!(Field::new(2, 21, None).unwrap_err(), Error::InvalidDegree(21));
        assert_eq!(Field::new(1031, 2, None).unwrap_err(), Error::OrderTooLarge(1031 * 1031));
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert_eq!(Field::new(2, 2, Some(&[1, 0, 1])).unwrap_err(), Error::NotIrreducible);
        assert_eq!(Field::new(2, 2, Some(&[1, 1])).unwrap_err(), Error::InvalidModulus);
        assert_eq!(Field::new(2, 2, Some(&[1, 1, 0])).unwrap_err(), Error::InvalidModulus);
        assert_eq!(Field::new(11, 1, Some(&[3, 1])).unwrap_err(), Error::InvalidModulus);
    }

    #[test]
    fn small_fields() {
        let f = gf(11, 1);
        assert_eq!((f.p(), f.m(), f.q()), (11, 1, 11));
        let f = gf(2, 1);
        assert_eq!(f.q(), 2);
        let f = gf(2, 4);
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(f.q(), 16);
        assert!(Field::new(2, 20, None).is_ok());
    }

    #[test]
    fn prime_field_values() {
        let f = gf(11, 1);
        let e = |v| f.elt(v).unwrap();
        assert_eq!(f.mul(e(7), e(8)), e(1));
        assert_eq!(f.add(e(5), e(6)), e(0));
        assert_eq!(f.inv(e(2)).unwrap(), e(6));
        assert_eq!(f.inv(e(1)).unwrap(), e(1));
        assert_eq!(f.inv(e(10)).unwrap(), e(10));
        assert_eq!(f.inv(e(0)), Err(Error::DivisionByZero));
        assert_eq!(f.pow(e(2), 10).unwrap(), e(1));
        assert_eq!(f.pow(e(3), -1).unwrap(), e(4));
        assert_eq!(f.pow(e(0), 5).unwrap(), e(0));
        assert_eq!(f.pow(e(0), -1), Err(Error::DivisionByZero));
        assert_eq!(f.elt(11), Err(Error::ElementOutOfRange { value: 11, q: 11 }));
        assert_eq!(f.from_int(-3), e(8));
    }

    #[test]
    fn gf16_reduction() {
        // x^3 * x = x^4 = x + 1 modulo x^4 + x + 1
        let f = gf(2, 4);
        assert_eq!(f.mul(Elt(0b1000), Elt(0b0010)), Elt(0b0011));
        assert_eq!(f.mul_reference(Elt(0b1000), Elt(0b0010)), Elt(0b0011));
    }

    fn check_axioms_exhaustive(f: &Field) {
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), Elt::ZERO);
            assert_eq!(f.mul(a, Elt::ONE), a);
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Elt::ONE);
                assert_eq!(f.pow_u(a, f.q() as u64 - 1), Elt::ONE);
                assert_eq!(f.inv(a).unwrap(), f.pow_u(a, f.q() as u64 - 2));
            }
            for b in f.elements() {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(a, b), f.mul_reference(a, b));
                assert_eq!(f.sub(f.add(a, b), b), a);
                for c in f.elements() {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn axioms_exhaustive_small() {
        for (p, m) in [(2, 1), (7, 1), (11, 1), (2, 4), (3, 2), (3, 3), (2, 6), (5, 2)] {
            check_axioms_exhaustive(&gf(p, m));
        }
    }

    fn check_axioms_random(f: &Field, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = f.q();
        for _ in 0..10_000 {
            let a = Elt(rng.random_range(0..q));
            let b = Elt(rng.random_range(0..q));
            let c = Elt(rng.random_range(0..q));
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            assert_eq!(f.mul(a, b), f.mul_reference(a, b));
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Elt::ONE);
                assert_eq!(f.pow_u(a, q as u64 - 1), Elt::ONE);
            }
        }
    }

    #[test]
    fn axioms_random_large() {
        check_axioms_random(&gf(2, 16), 1);
        check_axioms_random(&gf(2, 17), 2);
        check_axioms_random(&gf(3, 7), 3);
        check_axioms_random(&gf(1_048_573, 1), 4);
        check_axioms_random(&gf(1021, 2), 5);
    }
}
