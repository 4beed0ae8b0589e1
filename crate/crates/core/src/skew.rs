//! The skew polynomial ring `F_{q^t}[x; sigma]` with `x a = sigma(a) x`.
//!
//! Coefficients are written on the left of the powers of `x`, so a
//! polynomial is `f = sum f_i x^i` and evaluates as `f(a) = sum f_i N_i(a)`
//! with the twisted norms `N_0(a) = 1`, `N_{i+1}(a) = sigma(N_i(a)) a`.

use crate::error::{Error, Result};
use crate::gf::{ExtensionField, FieldElement};
use crate::linalg::Matrix;

/// Largest field whose conjugacy classes are materialized element by element.
pub const MAX_PARTITION_ORDER: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewPolynomial {
    /// `coeffs[i]` multiplies `x^i`; no trailing zeros.
    coeffs: Vec<FieldElement>,
}

impl SkewPolynomial {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        SkewPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        SkewPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(vec![c])
    }

    pub fn one(field: &ExtensionField) -> Self {
        Self::constant(field.one())
    }

    /// `c x^i`.
    pub fn monomial(field: &ExtensionField, c: FieldElement, i: usize) -> Self {
        let mut coeffs = vec![field.zero(); i + 1];
        coeffs[i] = c;
        Self::new(coeffs)
    }

    /// `x - c`.
    pub fn linear(field: &ExtensionField, c: FieldElement) -> Self {
        Self::new(vec![field.neg(c), field.one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, field: &ExtensionField, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_else(|| field.zero())
    }

    pub fn add(&self, field: &ExtensionField, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len)
                .map(|i| field.add(self.coeff(field, i), other.coeff(field, i)))
                .collect(),
        )
    }

    pub fn sub(&self, field: &ExtensionField, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len)
                .map(|i| field.sub(self.coeff(field, i), other.coeff(field, i)))
                .collect(),
        )
    }

    /// Twisted product: `(fg)_m = sum_{i+j=m} f_i sigma^i(g_j)`.
    pub fn mul(&self, field: &ExtensionField, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &fi) in self.coeffs.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, &gj) in other.coeffs.iter().enumerate() {
                let term = field.mul(fi, field.frobenius(gj, i));
                out[i + j] = field.add(out[i + j], term);
            }
        }
        Self::new(out)
    }

    /// Remainder evaluation `f(a) = sum f_i N_i(a)`.
    pub fn eval(&self, field: &ExtensionField, a: FieldElement) -> FieldElement {
        let mut acc = field.zero();
        let mut norm = field.one();
        for (i, &fi) in self.coeffs.iter().enumerate() {
            acc = field.add(acc, field.mul(fi, norm));
            if i + 1 < self.coeffs.len() {
                norm = field.mul(field.frobenius(norm, 1), a);
            }
        }
        acc
    }

    /// Coefficients as coordinate arrays, lowest degree first.
    pub fn to_coords(&self, field: &ExtensionField) -> Vec<Vec<u64>> {
        self.coeffs.iter().map(|&c| field.to_coords(c)).collect()
    }

    pub fn from_coords(field: &ExtensionField, coords: &[Vec<u64>]) -> Result<Self> {
        coords
            .iter()
            .map(|c| field.from_coords(c))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// `N_i(a)`, the `i`-fold twisted norm.
pub fn norm_iterate(field: &ExtensionField, i: usize, a: FieldElement) -> FieldElement {
    let mut n = field.one();
    for _ in 0..i {
        n = field.mul(field.frobenius(n, 1), a);
    }
    n
}

/// The `beta`-conjugate `sigma(beta) a beta^{-1}` of `a`.
pub fn conjugate(
    field: &ExtensionField,
    a: FieldElement,
    beta: FieldElement,
) -> Result<FieldElement> {
    if beta.is_zero() {
        return Err(Error::ZeroConjugator);
    }
    let inv = field.inv(beta)?;
    Ok(field.mul(field.mul(field.frobenius(beta, 1), a), inv))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: FieldElement,
    /// Sorted by element index.
    pub members: Vec<FieldElement>,
}

impl ConjugacyClass {
    pub fn contains(&self, a: FieldElement) -> bool {
        self.members.contains(&a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The classes `C_0, C_{gamma^0}, .., C_{gamma^{q-2}}`, in that order.
pub fn conjugacy_partition(field: &ExtensionField) -> Result<Vec<ConjugacyClass>> {
    if field.order() > MAX_PARTITION_ORDER {
        return Err(Error::Infeasible {
            what: "conjugacy partition",
            size: field.order() as u128,
            limit: MAX_PARTITION_ORDER as u128,
        });
    }
    let mut classes = vec![ConjugacyClass {
        representative: field.zero(),
        members: vec![field.zero()],
    }];
    let mut rep = field.one();
    for _ in 0..field.q() - 1 {
        let mut members: Vec<FieldElement> = field
            .elements()
            .skip(1)
            .map(|beta| conjugate(field, rep, beta).expect("beta is nonzero"))
            .collect();
        members.sort_by_key(|&m| field.index(m));
        members.dedup();
        classes.push(ConjugacyClass {
            representative: rep,
            members,
        });
        rep = field.mul(rep, field.gamma());
    }
    Ok(classes)
}

/// `D_{f,a}(beta) = f(^beta a) beta`, with `D_{f,a}(0) = 0`.
pub fn linearized_map(
    field: &ExtensionField,
    f: &SkewPolynomial,
    a: FieldElement,
    beta: FieldElement,
) -> FieldElement {
    if beta.is_zero() {
        return field.zero();
    }
    let conj = conjugate(field, a, beta).expect("beta is nonzero");
    field.mul(f.eval(field, conj), beta)
}

/// `dim_{F_q} ker D_{f,a}`.
pub fn kernel_dimension(field: &ExtensionField, f: &SkewPolynomial, a: FieldElement) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let t = field.t();
    if a.is_zero() {
        // ^beta 0 = 0, so D(beta) = f_0 beta
        return Ok(if f.coeff(field, 0).is_zero() { t } else { 0 });
    }
    // column l holds the coordinates of D(w^l)
    let mut basis = field.one();
    let mut columns = Vec::with_capacity(t);
    for _ in 0..t {
        let image = linearized_map(field, f, a, basis);
        columns.push(field.to_coords(image));
        basis = field.mul(basis, field.w());
    }
    let rows: Vec<Vec<u64>> = (0..t).map(|r| columns.iter().map(|c| c[r]).collect()).collect();
    Ok(t - rank_mod_q(rows, field.q()))
}

fn rank_mod_q(mut m: Vec<Vec<u64>>, q: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| m[i][c] % q != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = pow_mod(m[rank][c], q - 2, q);
        for i in 0..rows {
            if i != rank && m[i][c] != 0 {
                let f = m[i][c] * inv % q;
                for j in c..cols {
                    m[i][j] = (m[i][j] + q * q - f * m[rank][j] % q) % q;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    acc
}

/// The `k x n` matrix with entries `N_i(a_j)`.
pub fn skew_vandermonde(field: &ExtensionField, k: usize, omega: &[FieldElement]) -> Matrix {
    let mut m = Matrix::zeros(field, k, omega.len());
    for (j, &a) in omega.iter().enumerate() {
        let mut n = field.one();
        for i in 0..k {
            m.set(i, j, n);
            n = field.mul(field.frobenius(n, 1), a);
        }
    }
    m
}

/// Least-degree monic skew polynomial vanishing on `points`, built by
/// left-multiplying `x - ^{f(c)}c` for every point not yet annihilated.
pub fn minimal_annihilator(field: &ExtensionField, points: &[FieldElement]) -> SkewPolynomial {
    let mut f = SkewPolynomial::one(field);
    for &c in points {
        let v = f.eval(field, c);
        if v.is_zero() {
            continue;
        }
        let root = conjugate(field, c, v).expect("v is nonzero");
        f = SkewPolynomial::linear(field, root).mul(field, &f);
    }
    f
}
