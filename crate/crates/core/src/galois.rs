//! Exact arithmetic in GF(p^e) and the absolute trace to GF(p).
//!
//! Elements are encoded as integers in `0..q`: the element
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` (coefficients in `0..p`) is stored as
//! `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. The encoding gives every field a
//! total order, used for deterministic enumeration throughout the crate.
//!
//! Fields with `q <= 256` precompute addition and log/antilog tables; larger
//! fields fall back to polynomial arithmetic modulo the defining polynomial.
//! Both paths produce identical results.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const TABLE_LIMIT: u32 = 256;

/// An element of a finite field, in the canonical integer encoding.
#[derive(
    Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The integer encoding in `0..q`.
    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub(crate) fn from_raw(v: u32) -> Self {
        FieldElement(v)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    add: Vec<u32>,
    neg: Vec<u32>,
    log: Vec<u32>,
    // exp[i] = g^i for i in 0..2(q-1), so products need no reduction.
    exp: Vec<u32>,
    trace: Vec<u32>,
}

/// The finite field GF(p^e) with a fixed irreducible modulus.
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.e, self.modulus)
    }
}

pub fn is_prime(n: u64) -> bool {
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

/// Splits a prime power `q` into `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut rest = q;
    let mut e = 0u32;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p as u32, e))
}

impl Field {
    /// Builds GF(p^e). With `modulus == None` the smallest monic irreducible
    /// polynomial of degree `e` is used, ordering candidates by the integer
    /// `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` of their non-leading coefficients.
    ///
    /// `modulus` lists coefficients from low to high degree and must be monic
    /// of degree `e`.
    pub fn new(p: u32, e: u32, modulus: Option<Vec<u32>>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::InvalidParameter("extension degree must be at least 1".into()));
        }
        let q = (p as u64)
            .checked_pow(e)
            .filter(|&q| q <= u32::MAX as u64 / 2)
            .ok_or(Error::FieldTooLarge { p, e })? as u32;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients for degree {e}, got {}",
                        e + 1,
                        m.len()
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus(format!(
                        "coefficients must lie in 0..{p}"
                    )));
                }
                if m[e as usize] != 1 {
                    return Err(Error::InvalidModulus("polynomial is not monic".into()));
                }
                if !poly::is_irreducible(&m, p) {
                    return Err(Error::InvalidModulus(format!("{m:?} is reducible over GF({p})")));
                }
                m
            }
            None => default_modulus(p, e),
        };
        let mut field = Field {
            p,
            e,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    /// GF(q) for a prime power `q`, with the default modulus.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        Field::new(p, e, None)
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.e
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, low degree first, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Validating constructor for elements.
    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value < self.q {
            Ok(FieldElement(value))
        } else {
            Err(Error::NotInField {
                value,
                order: self.q,
            })
        }
    }

    #[inline]
    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.q
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    /// Polynomial coefficients of `a`, low degree first (`e` entries).
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut v = a.0;
        (0..self.e)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    /// Inverse of [`Field::coeffs`].
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.e as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidParameter(format!(
                "expected {} coefficients in 0..{}",
                self.e, self.p
            )));
        }
        Ok(FieldElement(
            coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c),
        ))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        match &self.tables {
            Some(t) => FieldElement(t.add[(a.0 * self.q + b.0) as usize]),
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.neg[a.0 as usize]),
            None => self.neg_slow(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        match &self.tables {
            Some(t) => {
                FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
            }
            None => self.mul_slow(a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return None;
        }
        match &self.tables {
            Some(t) => {
                let order = self.q - 1;
                Some(FieldElement(t.exp[((order - t.log[a.0 as usize]) % order) as usize]))
            }
            None => Some(self.pow(a, self.q as u64 - 2)),
        }
    }

    pub fn pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// The Frobenius image `a^p`.
    pub fn frobenius(&self, a: FieldElement) -> Result<FieldElement> {
        self.element(a.0)?;
        Ok(self.pow(a, self.p as u64))
    }

    /// Absolute trace `a + a^p + ... + a^{p^{e-1}}`, returned as a residue in `0..p`.
    pub fn trace(&self, a: FieldElement) -> Result<u32> {
        self.element(a.0)?;
        Ok(self.trace_unchecked(a))
    }

    #[inline]
    pub(crate) fn trace_unchecked(&self, a: FieldElement) -> u32 {
        match &self.tables {
            Some(t) => t.trace[a.0 as usize],
            None => self.trace_slow(a),
        }
    }

    /// Dot product `sum_i a_i b_i`.
    pub fn dot(&self, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
        debug_assert_eq!(a.len(), b.len());
        a.iter()
            .zip(b)
            .fold(FieldElement::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Serialization header `GF p e c_0 ... c_e`.
    pub fn header(&self) -> String {
        let coeffs: Vec<String> = self.modulus.iter().map(u32::to_string).collect();
        format!("GF {} {} {}", self.p, self.e, coeffs.join(" "))
    }

    /// Parses a header produced by [`Field::header`].
    pub fn parse_header(line: &str) -> Result<Field> {
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("GF") {
            return Err(Error::Parse(format!("expected field header `GF p e ...`, got {line:?}")));
        }
        let nums: Vec<u32> = tokens
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad integer {t:?} in field header")))
            })
            .collect::<Result<_>>()?;
        if nums.len() < 2 {
            return Err(Error::Parse("field header needs p and e".into()));
        }
        let (p, e) = (nums[0], nums[1]);
        let modulus = nums[2..].to_vec();
        if modulus.len() != e as usize + 1 {
            return Err(Error::Parse(format!(
                "field header lists {} modulus coefficients, expected {}",
                modulus.len(),
                e + 1
            )));
        }
        Field::new(p, e, Some(modulus))
    }

    /// Whether `q ≡ 1` or `3 (mod 4)`, or characteristic 2.
    pub fn residue_class(&self) -> QClass {
        if self.p == 2 {
            QClass::Char2
        } else if self.q % 4 == 1 {
            QClass::OneMod4
        } else {
            QClass::ThreeMod4
        }
    }

    fn add_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..self.e {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FieldElement(out)
    }

    fn neg_slow(&self, a: FieldElement) -> FieldElement {
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..self.e {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place = place.wrapping_mul(self.p);
        }
        FieldElement(out)
    }

    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let prod = poly::mul(&self.coeffs(a), &self.coeffs(b), self.p);
        let rem = poly::rem(&prod, &self.modulus, self.p);
        FieldElement(rem.iter().rev().fold(0, |acc, &c| acc * self.p + c))
    }

    fn trace_slow(&self, a: FieldElement) -> u32 {
        let mut acc = FieldElement::ZERO;
        let mut conj = a;
        for _ in 0..self.e {
            acc = self.add(acc, conj);
            conj = self.pow(conj, self.p as u64);
        }
        // The trace lies in the prime subfield: a constant polynomial.
        debug_assert!(acc.0 < self.p);
        acc.0
    }

    fn build_tables(&self) -> Tables {
        let q = self.q as usize;
        let mut add = vec![0u32; q * q];
        let mut neg = vec![0u32; q];
        for a in 0..self.q {
            neg[a as usize] = self.neg_slow(FieldElement(a)).0;
            for b in 0..self.q {
                add[a as usize * q + b as usize] = self.add_slow(FieldElement(a), FieldElement(b)).0;
            }
        }
        let order = self.q - 1;
        let generator = (1..self.q)
            .find(|&g| multiplicative_order(self, FieldElement(g)) == order)
            .expect("finite field has a primitive element");
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q];
        let mut x = FieldElement::ONE;
        for i in 0..order as usize {
            exp[i] = x.0;
            exp[i + order as usize] = x.0;
            log[x.0 as usize] = i as u32;
            x = self.mul_slow(x, FieldElement(generator));
        }
        let trace = (0..self.q).map(|a| self.trace_slow(FieldElement(a))).collect();
        Tables {
            add,
            neg,
            log,
            exp,
            trace,
        }
    }
}

fn multiplicative_order(field: &Field, g: FieldElement) -> u32 {
    let mut x = g;
    let mut k = 1;
    while x != FieldElement::ONE {
        x = field.mul_slow(x, g);
        k += 1;
    }
    k
}

fn default_modulus(p: u32, e: u32) -> Vec<u32> {
    let count = (p as u64).pow(e);
    for t in 0..count {
        let mut m = Vec::with_capacity(e as usize + 1);
        let mut v = t;
        for _ in 0..e {
            m.push((v % p as u64) as u32);
            v /= p as u64;
        }
        m.push(1);
        if poly::is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Which branch of the self-dual containment criterion applies to GF(q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QClass {
    Char2,
    OneMod4,
    ThreeMod4,
}

/// Dense polynomials over GF(p), coefficients low degree first.
mod poly {
    pub(super) fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub(super) fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|c| c as u32).collect())
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        // p is prime: a^(p-2).
        let (mut base, mut k, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            k >>= 1;
        }
        acc as u32
    }

    /// Remainder of `a` modulo a nonzero `m`.
    pub(super) fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let m = trim(m.to_vec());
        let mut r = trim(a.to_vec());
        let lead_inv = inv_mod(*m.last().expect("nonzero modulus"), p) as u64;
        while r.len() >= m.len() {
            let shift = r.len() - m.len();
            let factor = *r.last().unwrap() as u64 * lead_inv % p as u64;
            for (i, &c) in m.iter().enumerate() {
                let sub = factor * c as u64 % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
            r = trim(r);
        }
        r
    }

    /// Trial division by every monic polynomial of degree `1..=deg/2`.
    pub(super) fn is_irreducible(m: &[u32], p: u32) -> bool {
        let m = trim(m.to_vec());
        let deg = m.len().saturating_sub(1);
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            let count = (p as u64).pow(d as u32);
            for t in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut v = t;
                for _ in 0..d {
                    g.push((v % p as u64) as u32);
                    v /= p as u64;
                }
                g.push(1);
                if rem(&m, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
