//! Prime fields `F_q` and their degree-`t` extensions `F_{q^t}`.
//!
//! Elements are stored as dense coordinate vectors over `F_q` in the
//! polynomial basis `{1, w, .., w^{t-1}}`, where `w` is the residue of the
//! modulus variable. Every element carries a small tag identifying the field
//! it was created in, so mixing operands from two fields can be detected.
//!
//! Both the modulus and the primitive element are chosen deterministically:
//! the modulus is the lexicographically smallest monic irreducible polynomial
//! of degree `t` (coefficients compared from the constant term upwards), and
//! the primitive element is the lexicographically smallest element of full
//! multiplicative order (coordinates compared from `c_0` upwards).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 12;

/// Largest supported field order `q^t`.
pub const MAX_ORDER: u64 = 1 << 40;

/// The prime field `F_q`, `q >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BaseField {
    q: u32,
}

impl BaseField {
    pub fn new(q: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if q < 3 {
            return Err(Error::BaseTooSmall(q));
        }
        if q > u16::MAX as u64 {
            return Err(Error::BaseTooLarge(q));
        }
        Ok(BaseField { q: q as u32 })
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.q as u64
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.q;
        let mut acc = 1 % self.q;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a % self.q == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }
}

/// An element of some `F_{q^t}`.
///
/// Only meaningful together with the [`ExtensionField`] that created it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    tag: u32,
    coords: [u16; MAX_DEGREE],
}

impl FieldElement {
    #[inline]
    pub fn coord(&self, i: usize) -> u32 {
        self.coords[i] as u32
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.coords.iter().rposition(|&c| c != 0).unwrap_or(0);
        write!(f, "{:?}", &self.coords[..=last])
    }
}

/// JSON form of a field: `{"q", "t", "modulus", "gamma"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub q: u64,
    pub t: usize,
    /// Monic modulus, constant term first, `t + 1` entries.
    pub modulus: Vec<u64>,
    /// Coordinates of the primitive element, `t` entries.
    pub gamma: Vec<u64>,
}

/// The finite field `F_{q^t} = F_q[w] / (m(w))`.
#[derive(Clone)]
pub struct ExtensionField {
    base: BaseField,
    t: usize,
    order: u64,
    /// Monic modulus, constant term first.
    modulus: Vec<u32>,
    tag: u32,
    gamma: FieldElement,
    /// Distinct primes dividing `q^t - 1`.
    order_factors: Vec<u64>,
    /// `sigma(w^l)` for `l = 0..t`.
    frobenius_basis: Vec<FieldElement>,
}

impl fmt::Debug for ExtensionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.base.q, self.t, self.modulus)
    }
}

impl PartialEq for ExtensionField {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.t == other.t && self.modulus == other.modulus
    }
}

impl Eq for ExtensionField {}

impl ExtensionField {
    /// Builds `F_{q^t}` with the canonical modulus and primitive element.
    pub fn new(q: u64, t: usize) -> Result<Self> {
        let base = BaseField::new(q)?;
        check_size(q, t)?;
        let modulus = smallest_irreducible(&base, t);
        Self::assemble(base, t, modulus, None)
    }

    /// The prime field `F_q` viewed as a degree-one extension.
    pub fn prime(q: u64) -> Result<Self> {
        Self::new(q, 1)
    }

    /// Builds the field with a caller-supplied monic irreducible modulus.
    pub fn with_modulus(q: u64, modulus: &[u64]) -> Result<Self> {
        let base = BaseField::new(q)?;
        if modulus.len() < 2 {
            return Err(Error::BadDegree(modulus.len().saturating_sub(1)));
        }
        let t = modulus.len() - 1;
        check_size(q, t)?;
        let mut m = Vec::with_capacity(t + 1);
        for &c in modulus {
            if c >= q {
                return Err(Error::CoordinateRange { value: c, q });
            }
            m.push(c as u32);
        }
        if m[t] != 1 {
            return Err(Error::Descriptor("modulus is not monic".into()));
        }
        if !is_irreducible(&base, &m) {
            return Err(Error::Descriptor("modulus is reducible".into()));
        }
        Self::assemble(base, t, m, None)
    }

    /// Rebuilds a field from its JSON descriptor, validating every invariant.
    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        if d.modulus.len() != d.t + 1 {
            return Err(Error::Descriptor(format!(
                "modulus has {} coefficients, expected {}",
                d.modulus.len(),
                d.t + 1
            )));
        }
        let field = Self::with_modulus(d.q, &d.modulus)?;
        let gamma = field.from_coords(&d.gamma)?;
        if !field.is_primitive(gamma) {
            return Err(Error::Descriptor("gamma is not a primitive element".into()));
        }
        Self::assemble(field.base, field.t, field.modulus, Some(gamma))
    }

    fn assemble(
        base: BaseField,
        t: usize,
        modulus: Vec<u32>,
        gamma: Option<FieldElement>,
    ) -> Result<Self> {
        let order = base.q().pow(t as u32);
        let mut field = ExtensionField {
            base,
            t,
            order,
            tag: field_tag(base.q, &modulus),
            modulus,
            gamma: FieldElement {
                tag: 0,
                coords: [0; MAX_DEGREE],
            },
            order_factors: distinct_prime_factors(order - 1),
            frobenius_basis: Vec::new(),
        };
        field.frobenius_basis = (0..t)
            .map(|l| field.pow(field.w(), l as u128 * field.q() as u128))
            .collect();
        field.gamma = match gamma {
            Some(g) => g,
            None => field.search_primitive(),
        };
        Ok(field)
    }

    fn search_primitive(&self) -> FieldElement {
        (1..self.order)
            .map(|r| self.element_lex(r))
            .find(|&a| self.is_primitive(a))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    #[inline]
    pub fn base(&self) -> &BaseField {
        &self.base
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.base.q()
    }

    #[inline]
    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of elements, `q^t`.
    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element `gamma`.
    #[inline]
    pub fn gamma(&self) -> FieldElement {
        self.gamma
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            q: self.q(),
            t: self.t,
            modulus: self.modulus.iter().map(|&c| c as u64).collect(),
            gamma: self.to_coords(self.gamma),
        }
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement {
            tag: self.tag,
            coords: [0; MAX_DEGREE],
        }
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        self.from_base(1)
    }

    /// The embedding of `c mod q` from `F_q`.
    #[inline]
    pub fn from_base(&self, c: u64) -> FieldElement {
        let mut e = self.zero();
        e.coords[0] = (c % self.q()) as u16;
        e
    }

    /// The residue `w` of the modulus variable (equals `-m_0` when `t = 1`).
    pub fn w(&self) -> FieldElement {
        let mut e = self.zero();
        if self.t == 1 {
            e.coords[0] = self.base.sub(0, self.modulus[0]) as u16;
        } else {
            e.coords[1] = 1;
        }
        e
    }

    pub fn from_coords(&self, v: &[u64]) -> Result<FieldElement> {
        if v.len() != self.t {
            return Err(Error::CoordinateLength {
                expected: self.t,
                got: v.len(),
            });
        }
        let mut e = self.zero();
        for (slot, &c) in e.coords.iter_mut().zip(v) {
            if c >= self.q() {
                return Err(Error::CoordinateRange { value: c, q: self.q() });
            }
            *slot = c as u16;
        }
        Ok(e)
    }

    pub fn to_coords(&self, a: FieldElement) -> Vec<u64> {
        a.coords[..self.t].iter().map(|&c| c as u64).collect()
    }

    /// The element whose coordinates are the base-`q` digits of `index`,
    /// `c_0` least significant. Bijective on `0..order`.
    pub fn element(&self, mut index: u64) -> FieldElement {
        debug_assert!(index < self.order);
        let mut e = self.zero();
        for slot in e.coords[..self.t].iter_mut() {
            *slot = (index % self.q()) as u16;
            index /= self.q();
        }
        e
    }

    /// Inverse of [`ExtensionField::element`].
    pub fn index(&self, a: FieldElement) -> u64 {
        a.coords[..self.t]
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.q() + c as u64)
    }

    /// The `rank`-th element in lexicographic coordinate order (`c_0` first).
    pub fn element_lex(&self, mut rank: u64) -> FieldElement {
        let mut e = self.zero();
        for slot in e.coords[..self.t].iter_mut().rev() {
            *slot = (rank % self.q()) as u16;
            rank /= self.q();
        }
        e
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(move |i| self.element(i))
    }

    #[inline]
    pub fn contains(&self, a: FieldElement) -> bool {
        a.tag == self.tag
    }

    fn check(&self, a: FieldElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    /// `true` iff `a` lies in the embedded base field `F_q`.
    pub fn in_base_field(&self, a: FieldElement) -> bool {
        a.coords[1..self.t].iter().all(|&c| c == 0)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        let mut r = a;
        for i in 0..self.t {
            r.coords[i] = self.base.add(a.coords[i] as u32, b.coords[i] as u32) as u16;
        }
        r
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        let mut r = a;
        for i in 0..self.t {
            r.coords[i] = self.base.sub(a.coords[i] as u32, b.coords[i] as u32) as u16;
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.sub(self.zero(), a)
    }

    /// Multiplication by a base-field scalar.
    #[inline]
    pub fn scale(&self, lambda: u32, a: FieldElement) -> FieldElement {
        let mut r = a;
        for i in 0..self.t {
            r.coords[i] = self.base.mul(lambda, a.coords[i] as u32) as u16;
        }
        r
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.contains(a) && self.contains(b));
        let t = self.t;
        let q = self.q();
        if t == 1 {
            let mut r = a;
            r.coords[0] = self.base.mul(a.coords[0] as u32, b.coords[0] as u32) as u16;
            return r;
        }
        // Coordinates stay below 2^16, so every partial sum fits in u64.
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..t {
            let ai = a.coords[i] as u64;
            if ai == 0 {
                continue;
            }
            for j in 0..t {
                prod[i + j] += ai * b.coords[j] as u64;
            }
        }
        for i in (t..2 * t - 1).rev() {
            let c = prod[i] % q;
            if c == 0 {
                continue;
            }
            let neg = q - c;
            for j in 0..t {
                prod[i - t + j] += neg * self.modulus[j] as u64;
            }
        }
        let mut r = self.zero();
        for i in 0..t {
            r.coords[i] = (prod[i] % q) as u16;
        }
        r
    }

    pub fn pow(&self, a: FieldElement, mut e: u128) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
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
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.order as u128 - 2))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn try_add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn try_sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub(a, b))
    }

    pub fn try_mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn try_inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.inv(a)
    }

    /// `sigma^i(a) = a^{q^i}`, computed through the F_q-linear action on the basis.
    pub fn frobenius(&self, a: FieldElement, i: usize) -> FieldElement {
        let mut r = a;
        for _ in 0..i % self.t {
            r = self.frobenius_once(r);
        }
        r
    }

    fn frobenius_once(&self, a: FieldElement) -> FieldElement {
        let mut r = self.zero();
        for (l, img) in self.frobenius_basis.iter().enumerate() {
            let c = a.coords[l] as u32;
            if c != 0 {
                r = self.add(r, self.scale(c, *img));
            }
        }
        r
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let mut ord = self.order - 1;
        for &p in &self.order_factors {
            while ord % p == 0 && self.pow(a, (ord / p) as u128) == self.one() {
                ord /= p;
            }
        }
        Ok(ord)
    }

    pub fn is_primitive(&self, a: FieldElement) -> bool {
        !a.is_zero()
            && self
                .order_factors
                .iter()
                .all(|&p| self.pow(a, ((self.order - 1) / p) as u128) != self.one())
    }
}

fn check_size(q: u64, t: usize) -> Result<()> {
    if t == 0 || t > MAX_DEGREE {
        return Err(Error::BadDegree(t));
    }
    match q.checked_pow(t as u32) {
        Some(order) if order <= MAX_ORDER => Ok(()),
        _ => Err(Error::FieldTooLarge { q, t }),
    }
}

fn field_tag(q: u32, modulus: &[u32]) -> u32 {
    // FNV-1a over (q, modulus)
    let mut h: u32 = 0x811c_9dc5;
    for v in std::iter::once(q).chain(modulus.iter().copied()) {
        for b in v.to_le_bytes() {
            h ^= b as u32;
            h = h.wrapping_mul(0x0100_0193);
        }
    }
    h
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `>= n`.
pub fn next_prime(n: u64) -> u64 {
    (n.max(2)..).find(|&p| is_prime(p)).unwrap()
}

pub fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
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

// Dense polynomials over F_q, constant term first, used only for the modulus search.

fn trim(mut p: Vec<u32>) -> Vec<u32> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn poly_rem(base: &BaseField, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = base.inv(m[dm]).expect("nonzero leading coefficient");
    while r.len() > dm {
        let top = r.len() - 1;
        let c = base.mul(r[top], lead_inv);
        for (j, &mj) in m.iter().enumerate() {
            let idx = top - dm + j;
            r[idx] = base.sub(r[idx], base.mul(c, mj));
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(base: &BaseField, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut p = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            p[i + j] = base.add(p[i + j], base.mul(ai, bj));
        }
    }
    poly_rem(base, &p, m)
}

fn poly_powmod(base: &BaseField, a: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = poly_rem(base, a, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(base, &acc, &b, m);
        }
        b = poly_mulmod(base, &b, &b, m);
        e >>= 1;
    }
    acc
}

fn poly_gcd(base: &BaseField, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = poly_rem(base, &a, &b);
        a = b;
        b = r;
    }
    a
}

/// `x^(q^i) mod m`, by `i` successive q-th powers.
fn x_pow_q_iter(base: &BaseField, m: &[u32], i: usize) -> Vec<u32> {
    let mut r = poly_rem(base, &[0, 1], m);
    for _ in 0..i {
        r = poly_powmod(base, &r, base.q(), m);
    }
    r
}

/// Rabin's irreducibility test for a monic polynomial of degree `t >= 1`.
fn is_irreducible(base: &BaseField, m: &[u32]) -> bool {
    let t = m.len() - 1;
    if t == 1 {
        return true;
    }
    if m[0] == 0 {
        return false;
    }
    let x = [0u32, 1];
    let full = x_pow_q_iter(base, m, t);
    if trim(full) != trim(poly_rem(base, &x, m)) {
        return false;
    }
    distinct_prime_factors(t as u64).into_iter().all(|p| {
        let h = x_pow_q_iter(base, m, t / p as usize);
        let mut diff = h;
        diff.resize(diff.len().max(2), 0);
        diff[1] = base.sub(diff[1], 1);
        poly_gcd(base, &diff, m).len() == 1
    })
}

fn smallest_irreducible(base: &BaseField, t: usize) -> Vec<u32> {
    let q = base.q();
    let count = q.pow(t as u32);
    for rank in 0..count {
        let mut m = vec![0u32; t + 1];
        let mut r = rank;
        for slot in m[..t].iter_mut().rev() {
            *slot = (r % q) as u32;
            r /= q;
        }
        m[t] = 1;
        if is_irreducible(base, &m) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> ExtensionField {
        ExtensionField::new(3, 2).unwrap()
    }

    /// Independent irreducibility oracle: no monic factor of degree 1..=t/2.
    fn brute_irreducible(q: u64, m: &[u32]) -> bool {
        let base = BaseField::new(q).unwrap();
        let t = m.len() - 1;
        for d in 1..=t / 2 {
            for rank in 0..q.pow(d as u32) {
                let mut f = vec![0u32; d + 1];
                let mut r = rank;
                for slot in f[..d].iter_mut() {
                    *slot = (r % q) as u32;
                    r /= q;
                }
                f[d] = 1;
                if poly_rem(&base, m, &f).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn f9_modulus_and_gamma() {
        let f = f9();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        assert_eq!(f.to_coords(f.gamma()), vec![1, 1]);
        let g = f.gamma();
        assert_eq!(f.pow(g, 4), f.from_base(2));
        assert_eq!(f.pow(g, 8), f.one());
        assert_eq!(f.multiplicative_order(g).unwrap(), 8);
    }

    #[test]
    fn order_625() {
        let f = ExtensionField::new(5, 4).unwrap();
        assert_eq!(f.order(), 625);
        assert_eq!(f.multiplicative_order(f.gamma()).unwrap(), 624);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(ExtensionField::new(4, 2), Err(Error::NotPrime(4))));
        assert!(matches!(ExtensionField::new(2, 2), Err(Error::BaseTooSmall(2))));
        assert!(matches!(ExtensionField::new(3, 0), Err(Error::BadDegree(0))));
        assert!(matches!(ExtensionField::new(1, 2), Err(Error::NotPrime(1))));
    }

    #[test]
    fn w_squared_is_two() {
        let f = f9();
        let w = f.w();
        assert_eq!(f.mul(w, w), f.from_base(2));
    }

    #[test]
    fn inverse_of_zero_fails() {
        let f = f9();
        assert!(matches!(f.inv(f.zero()), Err(Error::ZeroInverse)));
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            assert_eq!(f.add(a, f.zero()), a);
        }
    }

    #[test]
    fn mixed_fields_detected() {
        let f = f9();
        let g = ExtensionField::new(5, 2).unwrap();
        assert!(matches!(f.try_mul(f.one(), g.one()), Err(Error::MixedFields)));
        assert!(matches!(f.try_add(g.w(), f.w()), Err(Error::MixedFields)));
        assert!(f.try_mul(f.w(), f.w()).is_ok());
    }

    #[test]
    fn frobenius_examples() {
        let f = f9();
        let w = f.w();
        assert_eq!(f.frobenius(w, 1), f.scale(2, w));
        let one_w = f.from_coords(&[1, 1]).unwrap();
        assert_eq!(f.frobenius(one_w, 1), f.from_coords(&[1, 2]).unwrap());
        for a in f.elements() {
            assert_eq!(f.frobenius(a, 0), a);
            assert_eq!(f.frobenius(a, 2), a);
            assert_eq!(f.frobenius(a, 1), f.pow(a, 3));
        }
        for c in 0..3 {
            assert_eq!(f.frobenius(f.from_base(c), 1), f.from_base(c));
        }
    }

    #[test]
    fn coords_conventions() {
        let f = f9();
        assert_eq!(f.from_coords(&[1, 0]).unwrap(), f.one());
        let e = f.from_coords(&[1, 2]).unwrap();
        assert_eq!(e, f.add(f.one(), f.scale(2, f.w())));
        assert!(matches!(
            f.from_coords(&[1]),
            Err(Error::CoordinateLength { expected: 2, got: 1 })
        ));
        assert!(matches!(f.from_coords(&[1, 3]), Err(Error::CoordinateRange { .. })));
        for a in f.elements() {
            assert_eq!(f.from_coords(&f.to_coords(a)).unwrap(), a);
            assert_eq!(f.element(f.index(a)), a);
        }
    }

    #[test]
    fn canonical_moduli_are_irreducible_and_smallest() {
        for (q, t) in [(3u64, 2usize), (3, 3), (3, 4), (5, 2), (5, 4), (7, 2), (7, 3), (11, 2)] {
            let f = ExtensionField::new(q, t).unwrap();
            let m = f.modulus().to_vec();
            assert!(brute_irreducible(q, &m), "{q} {t}");
            let base = BaseField::new(q).unwrap();
            // every lexicographically smaller monic candidate is reducible
            let mut rank = 0u64;
            loop {
                let mut cand = vec![0u32; t + 1];
                let mut r = rank;
                for slot in cand[..t].iter_mut().rev() {
                    *slot = (r % q) as u32;
                    r /= q;
                }
                cand[t] = 1;
                if cand == m {
                    break;
                }
                assert!(!brute_irreducible(q, &cand));
                assert!(!is_irreducible(&base, &cand));
                rank += 1;
            }
        }
    }

    #[test]
    fn rabin_matches_brute_force() {
        let base = BaseField::new(3).unwrap();
        for t in 2..=4usize {
            for rank in 0..3u64.pow(t as u32) {
                let mut m = vec![0u32; t + 1];
                let mut r = rank;
                for slot in m[..t].iter_mut() {
                    *slot = (r % 3) as u32;
                    r /= 3;
                }
                m[t] = 1;
                assert_eq!(is_irreducible(&base, &m), brute_irreducible(3, &m), "{m:?}");
            }
        }
    }

    #[test]
    fn descriptor_round_trip_and_validation() {
        let f = ExtensionField::new(5, 4).unwrap();
        let d = f.descriptor();
        let g = ExtensionField::from_descriptor(&d).unwrap();
        assert_eq!(f, g);
        assert_eq!(f.gamma(), g.gamma());

        let mut bad = d.clone();
        bad.gamma = vec![1, 0, 0, 0];
        assert!(matches!(ExtensionField::from_descriptor(&bad), Err(Error::Descriptor(_))));
        let mut bad = d.clone();
        bad.modulus = vec![0, 0, 0, 0, 1];
        assert!(matches!(ExtensionField::from_descriptor(&bad), Err(Error::Descriptor(_))));
    }

    #[test]
    fn prime_field_view() {
        let f = ExtensionField::prime(7).unwrap();
        assert_eq!(f.order(), 7);
        assert_eq!(f.to_coords(f.gamma()), vec![3]);
        assert_eq!(f.mul(f.from_base(3), f.from_base(5)), f.from_base(1));
    }

    #[test]
    fn next_prime_values() {
        assert_eq!(next_prime(3), 3);
        assert_eq!(next_prime(8), 11);
        assert_eq!(next_prime(14), 17);
    }
}
