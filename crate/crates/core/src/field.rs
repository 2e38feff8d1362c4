//! The field tower GF(p) ⊂ GF(√q) ⊂ GF(q), q = p^{2n}.
//!
//! Elements of GF(q) are coefficient vectors in the power basis of a monic
//! irreducible modulus of degree 2n. A [`FieldElement`] packs that vector into
//! a single integer `Σ c_i p^i`, so the natural integer order on elements is
//! the order used to pick the default modulus and primitive element.
//!
//! Besides the usual arithmetic, the context provides the conjugation
//! `x ↦ x^{√q}`, the relative norm `x·x̄` onto GF(√q), and the unit circle
//! `{x : x·x̄ = 1}`, a cyclic group of order √q+1 generated by `u`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Largest supported field order. Irreducibility and primitivity checks are
/// exhaustive, which stays cheap below this bound.
pub const MAX_FIELD_ORDER: u64 = 1 << 24;

const MAX_DEGREE: usize = 24;

/// An element of GF(q), stored as the packed coefficient vector `Σ c_i p^i`.
///
/// The packing is only meaningful together with the [`FieldContext`] that
/// produced the element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The packed integer `Σ c_i p^i`.
    pub fn packed(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Caller guarantees `v < q`.
    pub(crate) fn from_packed_unchecked(v: u32) -> Self {
        FieldElement(v)
    }
}

/// GF(q) with q = p^{2n}, together with its conjugation and unit circle.
///
/// Immutable once built; share it behind an `Arc`.
#[derive(Debug, Clone)]
pub struct FieldContext {
    p: u32,
    n: u32,
    degree: usize,
    q: u64,
    sqrt_q: u64,
    modulus: Vec<u32>,
    generator: FieldElement,
    circle_generator: FieldElement,
    // (x^i)^{√q} for the power basis, so conjugation is a GF(p)-linear map.
    conj_basis: Vec<FieldElement>,
    // u^k for k in [0, √q+1).
    circle: Vec<FieldElement>,
    circle_log: HashMap<FieldElement, u32>,
}

impl FieldContext {
    /// Builds GF(p^{2n}).
    ///
    /// Without an explicit modulus the smallest monic irreducible polynomial
    /// of degree 2n is used, ordering polynomials by `Σ c_i p^i`. The
    /// primitive element is the smallest one in the same order.
    pub fn new(p: u32, n: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NonPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let degree = 2 * n as usize;
        let q = (p as u64)
            .checked_pow(2 * n)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(Error::FieldTooLarge { p, degree: 2 * n })?;
        let sqrt_q = (p as u64).pow(n);

        let modulus = match modulus {
            Some(m) => {
                validate_modulus(p, degree, m)?;
                m.to_vec()
            }
            None => smallest_irreducible(p, degree),
        };

        let mut ctx = FieldContext {
            p,
            n,
            degree,
            q,
            sqrt_q,
            modulus,
            generator: FieldElement::ONE,
            circle_generator: FieldElement::ONE,
            conj_basis: Vec::new(),
            circle: Vec::new(),
            circle_log: HashMap::new(),
        };

        ctx.conj_basis = (0..degree)
            .map(|i| ctx.pow(FieldElement((p as u64).pow(i as u32) as u32), sqrt_q))
            .collect();

        let prime_factors = prime_factors(q - 1);
        ctx.generator = (1..q as u32)
            .map(FieldElement)
            .find(|&g| {
                prime_factors
                    .iter()
                    .all(|&r| ctx.pow(g, (q - 1) / r) != FieldElement::ONE)
            })
            .expect("GF(q)* is cyclic");

        let u = ctx.pow(ctx.generator, sqrt_q - 1);
        ctx.circle_generator = u;
        let order = (sqrt_q + 1) as usize;
        let mut circle = Vec::with_capacity(order);
        let mut acc = FieldElement::ONE;
        for _ in 0..order {
            circle.push(acc);
            acc = ctx.mul(acc, u);
        }
        debug_assert_eq!(acc, FieldElement::ONE);
        ctx.circle_log = circle
            .iter()
            .enumerate()
            .map(|(k, &x)| (x, k as u32))
            .collect();
        debug_assert_eq!(ctx.circle_log.len(), order);
        ctx.circle = circle;
        Ok(ctx)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Extension degree 2n of GF(q) over GF(p).
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn sqrt_q(&self) -> u64 {
        self.sqrt_q
    }

    /// Order √q+1 of the unit circle.
    pub fn circle_order(&self) -> u64 {
        self.sqrt_q + 1
    }

    /// Modulus coefficients, low degree first, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Primitive element of GF(q)*.
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Generator `u = g^{√q-1}` of the unit circle.
    pub fn circle_generator(&self) -> FieldElement {
        self.circle_generator
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The image `k·1` of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElement {
        FieldElement(k.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.degree || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidElement {
                coeffs: coeffs.to_vec(),
            });
        }
        Ok(FieldElement(
            coeffs
                .iter()
                .rev()
                .fold(0u64, |acc, &c| acc * self.p as u64 + c as u64) as u32,
        ))
    }

    /// Coefficient vector of `x`, low degree first, of length 2n.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        self.digits(x)[..self.degree].to_vec()
    }

    pub fn from_packed(&self, packed: u32) -> Result<FieldElement> {
        if (packed as u64) < self.q {
            Ok(FieldElement(packed))
        } else {
            Err(Error::InvalidElement {
                coeffs: vec![packed],
            })
        }
    }

    /// All q elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u32).map(FieldElement)
    }

    fn digits(&self, x: FieldElement) -> [u32; MAX_DEGREE] {
        let mut out = [0u32; MAX_DEGREE];
        let mut v = x.0;
        for d in out.iter_mut().take(self.degree) {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    fn pack(&self, digits: &[u32]) -> FieldElement {
        FieldElement(
            digits[..self.degree]
                .iter()
                .rev()
                .fold(0u32, |acc, &c| acc * self.p + c),
        )
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut out = [0u32; MAX_DEGREE];
        for i in 0..self.degree {
            out[i] = (da[i] + db[i]) % self.p;
        }
        self.pack(&out)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let da = self.digits(a);
        let mut out = [0u32; MAX_DEGREE];
        for i in 0..self.degree {
            out[i] = (self.p - da[i]) % self.p;
        }
        self.pack(&out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Schoolbook product followed by reduction modulo the monic modulus.
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        if a == FieldElement::ONE {
            return b;
        }
        if b == FieldElement::ONE {
            return a;
        }
        let p = self.p as u64;
        let deg = self.degree;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..deg {
            if da[i] == 0 {
                continue;
            }
            for j in 0..deg {
                prod[i + j] = (prod[i + j] + da[i] as u64 * db[j] as u64) % p;
            }
        }
        for k in (deg..2 * deg - 1).rev() {
            let c = prod[k] % p;
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            // x^deg = -(m_0 + ... + m_{deg-1} x^{deg-1})
            for j in 0..deg {
                let m = self.modulus[j] as u64;
                prod[k - deg + j] = (prod[k - deg + j] + c * ((p - m) % p)) % p;
            }
        }
        let mut out = [0u32; MAX_DEGREE];
        for i in 0..deg {
            out[i] = prod[i] as u32;
        }
        self.pack(&out)
    }

    pub fn pow(&self, mut base: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// Multiplies `x` by the prime-field scalar `k·1`.
    pub fn scale(&self, k: u32, x: FieldElement) -> FieldElement {
        self.mul(self.from_int(k as i64), x)
    }

    /// The conjugate `x^{√q}` over GF(√q).
    pub fn conjugate(&self, x: FieldElement) -> FieldElement {
        if let Some(&k) = self.circle_log.get(&x) {
            return self.circle_power(self.circle_order() - k as u64);
        }
        let dx = self.digits(x);
        let mut acc = FieldElement::ZERO;
        for (i, &c) in dx.iter().take(self.degree).enumerate() {
            if c != 0 {
                acc = self.add(acc, self.scale(c, self.conj_basis[i]));
            }
        }
        acc
    }

    /// Relative norm `x·x̄`, an element of GF(√q).
    pub fn norm(&self, x: FieldElement) -> FieldElement {
        self.mul(x, self.conjugate(x))
    }

    /// Whether `x` lies in the subfield GF(√q), i.e. is fixed by conjugation.
    pub fn in_subfield(&self, x: FieldElement) -> bool {
        self.conjugate(x) == x
    }

    /// Whether `x` has relative norm 1.
    pub fn in_circle(&self, x: FieldElement) -> bool {
        self.circle_log.contains_key(&x)
    }

    /// `u^k`, with `k` reduced modulo √q+1.
    pub fn circle_power(&self, k: u64) -> FieldElement {
        self.circle[(k % self.circle_order()) as usize]
    }

    /// Discrete logarithm to base `u` of a circle element.
    pub fn circle_log(&self, x: FieldElement) -> Option<u32> {
        self.circle_log.get(&x).copied()
    }

    /// The circle elements `u^0, u^1, …, u^{√q}`.
    pub fn circle_elements(&self) -> &[FieldElement] {
        &self.circle
    }

    /// Generator `u^{(√q+1)/d}` of the order-d subgroup of the circle.
    pub fn circle_subgroup_generator(&self, d: u64) -> Result<FieldElement> {
        if d == 0 || !self.circle_order().is_multiple_of(d) {
            return Err(Error::InvalidDivisor(d));
        }
        Ok(self.circle_power(self.circle_order() / d))
    }

    /// Multiplicative order of a nonzero element, by brute force over divisors of q-1.
    pub fn multiplicative_order(&self, x: FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut order = self.q - 1;
        for r in prime_factors(self.q - 1) {
            while order.is_multiple_of(r) && self.pow(x, order / r) == FieldElement::ONE {
                order /= r;
            }
        }
        Ok(order)
    }

    /// Human-readable polynomial form, e.g. `x^2+2x+1`.
    pub fn display(&self, x: FieldElement) -> String {
        format_poly(&self.digits(x)[..self.degree])
    }

    /// The modulus in the same notation as [`display`](Self::display).
    pub fn display_modulus(&self) -> String {
        format_poly(&self.modulus)
    }
}

fn format_poly(coeffs: &[u32]) -> String {
    let mut s = String::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('+');
        }
        match (i, c) {
            (0, c) => write!(s, "{c}").unwrap(),
            (_, 1) => {}
            (_, c) => write!(s, "{c}").unwrap(),
        }
        match i {
            0 => {}
            1 => s.push('x'),
            _ => write!(s, "x^{i}").unwrap(),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn validate_modulus(p: u32, degree: usize, m: &[u32]) -> Result<()> {
    let got = m.iter().rposition(|&c| c != 0);
    if got != Some(degree) || m.len() != degree + 1 {
        return Err(Error::DegreeMismatch {
            expected: degree,
            got,
        });
    }
    if m.iter().any(|&c| c >= p) {
        return Err(Error::InvalidElement { coeffs: m.to_vec() });
    }
    if m[degree] != 1 {
        return Err(Error::NotMonic);
    }
    if !is_irreducible(p, m) {
        return Err(Error::ReducibleModulus);
    }
    Ok(())
}

fn smallest_irreducible(p: u32, degree: usize) -> Vec<u32> {
    let count = (p as u64).pow(degree as u32);
    (0..count)
        .map(|t| monic_from_index(p, degree, t))
        .find(|m| is_irreducible(p, m))
        .expect("irreducible polynomials of every degree exist")
}

fn monic_from_index(p: u32, degree: usize, mut t: u64) -> Vec<u32> {
    let mut coeffs = Vec::with_capacity(degree + 1);
    for _ in 0..degree {
        coeffs.push((t % p as u64) as u32);
        t /= p as u64;
    }
    coeffs.push(1);
    coeffs
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(p: u32, f: &[u32]) -> bool {
    let degree = f.len() - 1;
    for k in 1..=degree / 2 {
        for t in 0..(p as u64).pow(k as u32) {
            let h = monic_from_index(p, k, t);
            if poly_rem_is_zero(p, f, &h) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(p: u32, f: &[u32], h: &[u32]) -> bool {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dh = h.len() - 1;
    for k in (dh..r.len()).rev() {
        let c = r[k] % p;
        if c == 0 {
            continue;
        }
        for j in 0..=dh {
            r[k - dh + j] = (r[k - dh + j] + c * ((p - h[j] as u64) % p)) % p;
        }
    }
    r.iter().all(|&c| c % p == 0)
}

pub(crate) fn is_prime(n: u64) -> bool {
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

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
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
