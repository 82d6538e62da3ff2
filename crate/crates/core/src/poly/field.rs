//! Coefficient fields.
//!
//! A field is a small `Copy` context value that owns the arithmetic of its
//! element type. This lets the prime field carry its modulus at runtime while
//! the rationals stay a zero-sized marker.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::OracleError;

/// Field elements are built through the context object, so the `from_*`
/// constructors take `&self`.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Copy + Eq + Hash + Debug + Send + Sync + 'static {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(v))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// 0 for the rationals, `p` for a prime field.
    fn characteristic(&self) -> u64;

    /// Wire tag: `Q` or `F<p>`.
    fn tag(&self) -> String;

    /// Signed wire rendering of a coefficient, e.g. `+1`, `-3/2`, `+4`.
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn parse_elem(&self, s: &str) -> Option<Self::Elem>;
}

/// Exact rational numbers with arbitrary-precision numerator and denominator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn tag(&self) -> String {
        "Q".to_string()
    }
    fn format_elem(&self, a: &BigRational) -> String {
        let sign = if a.is_negative() { '-' } else { '+' };
        let mag = a.abs();
        if mag.denom().is_one() {
            format!("{sign}{}", mag.numer())
        } else {
            format!("{sign}{}/{}", mag.numer(), mag.denom())
        }
    }
    fn parse_elem(&self, s: &str) -> Option<BigRational> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: BigInt = num.trim_start_matches('+').parse().ok()?;
        let den: BigInt = den.parse().ok()?;
        (!den.is_zero()).then(|| BigRational::new(num, den))
    }
}

/// The prime field `F_p` for a prime `p < 2^31`, elements kept in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, OracleError> {
        if p >= 1 << 31 {
            return Err(OracleError::UnsupportedField(format!("modulus {p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(OracleError::UnsupportedField(format!("{p} is not prime")));
        }
        Ok(Self { p: p as u32 })
    }

    pub fn modulus(&self) -> u64 {
        self.p as u64
    }

    /// Least primitive root modulo `p`.
    pub fn least_primitive_root(&self) -> u32 {
        let p = self.p as u64;
        if p == 2 {
            return 1;
        }
        let factors = prime_factors(p - 1);
        (2..p)
            .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
            .expect("every prime has a primitive root") as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        (*a != 0).then(|| pow_mod(*a as u64, self.p as u64 - 2, self.p as u64) as u32)
    }
    fn from_bigint(&self, v: &BigInt) -> u32 {
        v.mod_floor(&BigInt::from(self.p)).to_u32().expect("residue fits in u32")
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn tag(&self) -> String {
        format!("F{}", self.p)
    }
    fn format_elem(&self, a: &u32) -> String {
        format!("+{a}")
    }
    fn parse_elem(&self, s: &str) -> Option<u32> {
        let v: BigInt = s.trim_start_matches('+').parse().ok()?;
        Some(self.from_bigint(&v))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
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

pub(crate) fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}
