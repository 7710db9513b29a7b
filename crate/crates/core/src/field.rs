//! Exact fields: rationals, prime fields and small extension fields.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FieldSpec {
    Rational,
    Prime(u64),
    PrimeExt { p: u64, k: u32 },
}

impl FieldSpec {
    pub const DEFAULT_PRIME: u64 = 32003;

    pub fn default_prime() -> Self {
        FieldSpec::Prime(Self::DEFAULT_PRIME)
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match *self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(p),
            FieldSpec::PrimeExt { p, k } => p.checked_pow(k),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
            FieldSpec::PrimeExt { p, k } => write!(f, "fq:{p}^{k}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" || s == "q" {
            return Ok(FieldSpec::Rational);
        }
        let bad = || Error::Parse(format!("unknown field `{s}`"));
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest.parse().map_err(|_| bad())?;
            if !is_prime(p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            return Ok(FieldSpec::Prime(p));
        }
        if let Some(rest) = s.strip_prefix("fq:") {
            let (p, k) = rest.split_once('^').ok_or_else(bad)?;
            let p: u64 = p.parse().map_err(|_| bad())?;
            let k: u32 = k.parse().map_err(|_| bad())?;
            if !is_prime(p) || k == 0 {
                return Err(bad());
            }
            return Ok(if k == 1 { FieldSpec::Prime(p) } else { FieldSpec::PrimeExt { p, k } });
        }
        Err(bad())
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

pub fn is_prime(p: u64) -> bool {
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

/// Arithmetic in an exact field. Elements are plain values; the field object
/// carries the modulus or tables.
pub trait Field: Clone + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Uniform element for finite fields, small-height rational otherwise.
    fn random<R: RngCore + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    /// All elements in a fixed order, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn order(&self) -> Option<u64> {
        self.spec().order()
    }

    /// Characteristic, 0 for the rationals.
    fn characteristic(&self) -> u64 {
        match self.spec() {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) | FieldSpec::PrimeExt { p, .. } => p,
        }
    }

    /// A small rational lift of `a`: the symmetric representative for prime
    /// fields, the element itself over Q, `None` outside the prime field.
    fn lift(&self, a: &Self::Elem) -> Option<BigRational>;

    /// Image of a rational number, if its denominator is invertible.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem> {
        let p = self.characteristic();
        if p == 0 {
            // only the rationals have characteristic 0 here
            return self.parse(&format!("{}/{}", q.numer(), q.denom())).ok();
        }
        let pb = BigInt::from(p);
        let red = |v: &BigInt| ((v % &pb) + &pb) % &pb;
        let num = red(q.numer()).to_i64()?;
        let den = red(q.denom()).to_i64()?;
        self.div(&self.from_i64(num), &self.from_i64(den))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `acc + a*b`
    fn mul_add(&self, acc: &Self::Elem, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(acc, &self.mul(a, b))
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

    /// Random nonzero element.
    fn random_nonzero<R: RngCore + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let x = self.random(rng);
            if !self.is_zero(&x) {
                return x;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// prime fields

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        assert!(p < (1 << 31), "modulus too large");
        Fp { p }
    }

    pub fn default_field() -> Self {
        Fp::new(FieldSpec::DEFAULT_PRIME)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Symmetric representative in (-p/2, p/2].
    pub fn signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = ((v % &p) + &p) % &p;
        r.to_u64().unwrap()
    }
}

impl Field for Fp {
    type Elem = u64;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i64) as u64)
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn mul_add(&self, acc: &u64, a: &u64, b: &u64) -> u64 {
        (acc + a * b) % self.p
    }
    fn random<R: RngCore + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let q = parse_rational(s)?;
        let num = self.reduce_big(q.numer());
        let den = self.reduce_big(q.denom());
        self.div(&num, &den)
            .ok_or_else(|| Error::Parse(format!("denominator of `{s}` vanishes mod {}", self.p)))
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn lift(&self, a: &u64) -> Option<BigRational> {
        Some(BigRational::from_integer(BigInt::from(self.signed(*a))))
    }
}

// ---------------------------------------------------------------------------
// rationals

/// Height bound for random rationals.
pub const RATIONAL_SAMPLE_HEIGHT: i64 = 50;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad number `{s}`"));
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(a, b));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.trim_start().starts_with('-');
        let ip_abs = ip.trim_start_matches(['-', '+']);
        let ip_val: BigInt = if ip_abs.is_empty() { BigInt::zero() } else { ip_abs.parse().map_err(|_| bad())? };
        let fp_val: BigInt = fp.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), fp.len());
        let mag = BigRational::new(ip_val * &den + fp_val, den);
        return Ok(if neg { -mag } else { mag });
    }
    let a: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(a))
}

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn random<R: RngCore + ?Sized>(&self, rng: &mut R) -> BigRational {
        let h = RATIONAL_SAMPLE_HEIGHT;
        self.from_i64(rng.gen_range(-h..=h))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        parse_rational(s)
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn lift(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
}

/// Integer view of a rational, if it is one and fits.
pub fn rational_as_i64(a: &BigRational) -> Option<i64> {
    if a.denom().is_one() {
        a.numer().to_i64()
    } else {
        None
    }
}

/// Absolute value of numerator times denominator, a crude height.
pub fn rational_height(a: &BigRational) -> BigInt {
    a.numer().abs() * a.denom()
}

// ---------------------------------------------------------------------------
// extension fields F_{p^k}

/// F_{p^k} as F_p[x]/(f) with f the lexicographically first monic irreducible
/// polynomial of degree k. Elements are encoded as integers sum c_i p^i.
#[derive(Clone, Debug)]
pub struct Fq {
    p: u64,
    k: u32,
    q: u64,
    /// coefficients of f, low degree first, monic (length k+1)
    modulus: Vec<u64>,
    exp: std::sync::Arc<Vec<u32>>,
    log: std::sync::Arc<Vec<u32>>,
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}

pub const FQ_MAX_ORDER: u64 = 1 << 22;

impl Fq {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) || k == 0 {
            return Err(Error::Input(format!("invalid extension fq:{p}^{k}")));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= FQ_MAX_ORDER)
            .ok_or_else(|| Error::Input(format!("field fq:{p}^{k} too large for tables")))?;
        let modulus = first_irreducible(p, k);
        let mut field = Fq { p, k, q, modulus, exp: Default::default(), log: Default::default() };
        field.build_tables();
        Ok(field)
    }

    pub fn base_prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    /// Monic defining polynomial, low degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn digits(&self, mut a: u64) -> Vec<u64> {
        let mut d = vec![0; self.k as usize];
        for c in d.iter_mut() {
            *c = a % self.p;
            a /= self.p;
        }
        d
    }

    fn encode(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_mul(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.k as usize;
        let p = self.p;
        let mut prod = vec![0u64; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c != 0 {
                for i in 0..k {
                    prod[deg - k + i] = (prod[deg - k + i] + (p - c) * self.modulus[i]) % p;
                }
                prod[deg] = 0;
            }
        }
        self.encode(&prod[..k])
    }

    fn build_tables(&mut self) {
        let q = self.q;
        let order = q - 1;
        let factors = prime_factors(order);
        let gen = (1..q)
            .find(|&g| {
                factors.iter().all(|&f| {
                        let mut acc = 1u64;
                        let mut base = g;
                        let mut e = order / f;
                        while e > 0 {
                            if e & 1 == 1 {
                                acc = self.slow_mul(acc, base);
                            }
                            base = self.slow_mul(base, base);
                            e >>= 1;
                        }
                        acc != 1
                    })
            })
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u64;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = x as u32;
            log[x as usize] = i as u32;
            x = self.slow_mul(x, gen);
        }
        self.exp = std::sync::Arc::new(exp);
        self.log = std::sync::Arc::new(log);
    }

    /// Embed an element of the prime field.
    pub fn from_base(&self, c: u64) -> u32 {
        (c % self.p) as u32
    }
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

/// Lexicographically first monic irreducible polynomial of degree k over F_p,
/// by exhaustive trial division (k is small).
fn first_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    if k == 1 {
        return vec![0, 1];
    }
    let total = p.pow(k as u32);
    'outer: for code in 0..total {
        let mut f = vec![0u64; k + 1];
        let mut c = code;
        for coef in f.iter_mut().take(k) {
            *coef = c % p;
            c /= p;
        }
        f[k] = 1;
        if f[0] == 0 {
            continue;
        }
        for deg in 1..=k / 2 {
            for gcode in 0..p.pow(deg as u32) {
                let mut g = vec![0u64; deg + 1];
                let mut c = gcode;
                for coef in g.iter_mut().take(deg) {
                    *coef = c % p;
                    c /= p;
                }
                g[deg] = 1;
                if poly_rem_is_zero(&f, &g, p) {
                    continue 'outer;
                }
            }
        }
        return f;
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn poly_rem_is_zero(f: &[u64], g: &[u64], p: u64) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    for deg in (dg..r.len()).rev() {
        let c = r[deg];
        if c != 0 {
            for i in 0..=dg {
                r[deg - dg + i] = (r[deg - dg + i] + (p - c) * g[i]) % p;
            }
        }
    }
    r[..dg].iter().all(|&c| c == 0)
}

impl Field for Fq {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeExt { p: self.p, k: self.k }
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let (mut a, mut b) = (*a as u64, *b as u64);
        let (mut out, mut place) = (0u64, 1u64);
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        let order = self.q - 1;
        let e = (self.log[*a as usize] as u64 + self.log[*b as usize] as u64) % order;
        self.exp[e as usize]
    }
    fn neg(&self, a: &u32) -> u32 {
        let d: Vec<u64> = self.digits(*a as u64).into_iter().map(|c| (self.p - c) % self.p).collect();
        self.encode(&d) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let order = self.q - 1;
        let e = (order - self.log[*a as usize] as u64) % order;
        Some(self.exp[e as usize])
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn random<R: RngCore + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.q) as u32
    }
    fn format(&self, a: &u32) -> String {
        // coefficient list of the residue polynomial, low degree first
        let d = self.digits(*a as u64);
        let parts: Vec<String> = d.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
    fn parse(&self, s: &str) -> Result<u32> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let mut d = vec![0u64; self.k as usize];
            for (i, part) in inner.split(',').enumerate() {
                if i >= d.len() {
                    return Err(Error::Parse(format!("too many coefficients in `{s}`")));
                }
                let v: i64 = part.trim().parse().map_err(|_| Error::Parse(format!("bad element `{s}`")))?;
                d[i] = v.rem_euclid(self.p as i64) as u64;
            }
            return Ok(self.encode(&d) as u32);
        }
        let base = Fp::new(self.p).parse(s)?;
        Ok(base as u32)
    }
    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.q as u32).collect())
    }
    fn lift(&self, a: &u32) -> Option<BigRational> {
        ((*a as u64) < self.p).then(|| Fp::new(self.p).lift(&(*a as u64)).unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn fp_inverse_roundtrip() {
        let f = Fp::default_field();
        for a in 1..200u64 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn spec_strings() {
        for s in ["rational", "fp:32003", "fp:7", "fq:3^2"] {
            let spec: FieldSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("fp:32004".parse::<FieldSpec>().is_err());
        assert!("reals".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn rational_parse_forms() {
        let q = Rationals;
        assert_eq!(q.format(&q.parse("6/4").unwrap()), "3/2");
        assert_eq!(q.format(&q.parse("-0.25").unwrap()), "-1/4");
        assert_eq!(q.format(&q.parse("17").unwrap()), "17");
        assert!(q.parse("1/0").is_err());
    }

    #[test]
    fn fp_parse_fraction() {
        let f = Fp::new(7);
        assert_eq!(f.parse("1/2").unwrap(), 4);
        assert_eq!(f.parse("-1").unwrap(), 6);
        assert!(f.parse("1/7").is_err());
    }

    #[test]
    fn fq_is_a_field() {
        for (p, k) in [(2, 2), (2, 3), (3, 2), (5, 2), (2, 4)] {
            let f = Fq::new(p, k).unwrap();
            let q = p.pow(k) as u32;
            for a in 0..q {
                assert_eq!(f.add(&a, &f.neg(&a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
                }
                for b in 0..q {
                    // distributivity against a fixed third element
                    let c = (a + b) % q;
                    let lhs = f.mul(&a, &f.add(&b, &c));
                    let rhs = f.add(&f.mul(&a, &b), &f.mul(&a, &c));
                    assert_eq!(lhs, rhs);
                    assert_eq!(f.mul(&a, &b), f.slow_mul(a as u64, b as u64) as u32);
                }
            }
        }
    }

    #[test]
    fn fq_modulus_irreducible() {
        // x^2 + 1 is reducible over F_2, x^2 + x + 1 is the first irreducible one
        assert_eq!(first_irreducible(2, 2), vec![1, 1, 1]);
        // x^2 + 1 is irreducible over F_3
        assert_eq!(first_irreducible(3, 2), vec![1, 0, 1]);
    }

    #[test]
    fn fq_format_roundtrip() {
        let f = Fq::new(3, 2).unwrap();
        for a in 0..9u32 {
            assert_eq!(f.parse(&f.format(&a)).unwrap(), a);
        }
    }

    #[test]
    fn random_is_seeded() {
        let f = Fp::default_field();
        let mut r1 = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut r2 = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let a: Vec<u64> = (0..10).map(|_| f.random(&mut r1)).collect();
        let b: Vec<u64> = (0..10).map(|_| f.random(&mut r2)).collect();
        assert_eq!(a, b);
    }
}
