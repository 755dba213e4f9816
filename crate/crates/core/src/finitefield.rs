//! Finite fields `GF(p^r)` for `r ≤ 8` and projective spaces over them.
//!
//! Elements are coefficient vectors over `F_p` modulo a fixed monic
//! irreducible polynomial, packed into a single integer `Σ c_i p^i`.
//! The modulus is the lexicographically smallest monic irreducible of
//! degree `r`, comparing coefficients from the constant term upwards.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} outside 1..=8")]
    DegreeOutOfRange(u32),
    #[error("field of order {0} is too large")]
    TooLarge(u64),
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("the zero vector has no projective point")]
    ZeroVector,
    #[error("projective dimension needs m >= 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("vector length {got} does not match m = {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, r))` when `q = p^r` with `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut r = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((p, r))
}

/// A field element; only meaningful together with its [`FieldSpec`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub fn packed(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u32,
    r: u32,
    q: u32,
    /// Monic modulus, constant term first, length `r + 1`.
    modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn new(p: u64, r: u32) -> Result<FieldSpec, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if !(1..=8).contains(&r) {
            return Err(FieldError::DegreeOutOfRange(r));
        }
        let q = p.checked_pow(r).filter(|&q| q <= 1 << 24).ok_or(FieldError::TooLarge(p))?;
        let p32 = p as u32;
        let modulus = smallest_irreducible(p32, r as usize);
        Ok(FieldSpec {
            p: p32,
            r,
            q: q as u32,
            modulus,
        })
    }

    /// `GF(q)` for a prime power `q`.
    pub fn of_order(q: u64) -> Result<FieldSpec, FieldError> {
        let (p, r) = prime_power(q).ok_or(FieldError::NotPrime(q))?;
        FieldSpec::new(p, r)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The class of `x` modulo the defining polynomial (zero for prime fields).
    pub fn generator(&self) -> FieldElement {
        if self.r == 1 {
            self.reduce_poly(&[0, 1])
        } else {
            FieldElement(self.p)
        }
    }

    pub fn from_int(&self, n: u64) -> FieldElement {
        FieldElement((n % self.p as u64) as u32)
    }

    pub fn from_packed(&self, v: u32) -> FieldElement {
        assert!(v < self.q, "packed value out of range");
        FieldElement(v)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        self.reduce_poly(coeffs)
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut v = a.0;
        (0..self.r)
            .map(|_| {
                let c = v % self.p;
                v /= self.p;
                c
            })
            .collect()
    }

    fn pack(&self, coeffs: &[u32]) -> FieldElement {
        FieldElement(coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c))
    }

    fn reduce_poly(&self, poly: &[u32]) -> FieldElement {
        let p = self.p as u64;
        let r = self.r as usize;
        let mut c: Vec<u64> = poly.iter().map(|&x| x as u64 % p).collect();
        for top in (r..c.len()).rev() {
            let lead = c[top];
            if lead == 0 {
                continue;
            }
            for i in 0..=r {
                let sub = lead * self.modulus[i] as u64 % p;
                c[top - r + i] = (c[top - r + i] + p - sub) % p;
            }
        }
        c.resize(r, 0);
        self.pack(&c.iter().map(|&x| x as u32).collect::<Vec<_>>())
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.r == 1 {
            return FieldElement((a.0 + b.0) % self.p);
        }
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.pack(&s)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let x: Vec<u32> = self.coeffs(a).iter().map(|&u| (self.p - u) % self.p).collect();
        self.pack(&x)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.r == 1 {
            return FieldElement(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let (x, y) = (self.coeffs(a), self.coeffs(b));
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * self.r as usize - 1];
        for (i, &u) in x.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u as u64 * v as u64) % p;
            }
        }
        self.reduce_poly(&prod.iter().map(|&c| c as u32).collect::<Vec<_>>())
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
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

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> u64 {
        assert!(!a.is_zero());
        let n = self.q as u64 - 1;
        let mut order = n;
        for f in prime_factors(n) {
            while order.is_multiple_of(f) && self.pow(a, order / f) == self.one() {
                order /= f;
            }
        }
        order
    }

    /// The smallest (by packed value) generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        let n = self.q as u64 - 1;
        self.elements()
            .skip(1)
            .find(|&a| self.multiplicative_order(a) == n)
            .expect("the multiplicative group of a finite field is cyclic")
    }
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

/// Remainder of `a` modulo the monic `b` over `F_p`; coefficient vectors, constant first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let p64 = p as u64;
    let mut r: Vec<u64> = a.iter().map(|&x| x as u64).collect();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bi) in b.iter().enumerate() {
                let sub = lead * bi as u64 % p64;
                r[shift + i] = (r[shift + i] + p64 - sub) % p64;
            }
        }
        r.pop();
    }
    r.into_iter().map(|x| x as u32).collect()
}

/// Every monic polynomial of the given degree, in low-degree-first lexicographic order.
fn monic_polys(p: u32, degree: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(degree as u32);
    (0..count).map(move |code| {
        // c_0 is the most significant digit so the order is lexicographic from c_0.
        let mut digits = vec![0u32; degree];
        let mut v = code;
        for slot in digits.iter_mut().rev() {
            *slot = (v % p as u64) as u32;
            v /= p as u64;
        }
        digits.push(1);
        digits
    })
}

/// Irreducibility by trial division against every monic polynomial of lower degree.
pub(crate) fn is_irreducible_by_trial_division(f: &[u32], p: u32) -> bool {
    let d = f.len() - 1;
    (1..d).all(|k| monic_polys(p, k).all(|g| poly_rem(f, &g, p).iter().any(|&c| c != 0)))
}

fn smallest_irreducible(p: u32, r: usize) -> Vec<u32> {
    monic_polys(p, r)
        .find(|f| is_irreducible_by_trial_division(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// A canonical projective point: nonzero, first nonzero coordinate equal to one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ProjPoint {
    coords: Vec<FieldElement>,
}

impl ProjPoint {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }
}

/// Scales a nonzero vector so its first nonzero coordinate is one.
pub fn canonicalize(field: &FieldSpec, v: &[FieldElement]) -> Result<ProjPoint, FieldError> {
    let lead = v.iter().copied().find(|c| !c.is_zero()).ok_or(FieldError::ZeroVector)?;
    let scale = field.inv(lead)?;
    Ok(ProjPoint {
        coords: v.iter().map(|&c| field.mul(c, scale)).collect(),
    })
}

/// `P^{m-1}(F_q)` with points listed in lexicographic order and indexed `0..n`.
#[derive(Debug, Clone)]
pub struct ProjectiveSpace {
    field: FieldSpec,
    m: usize,
    points: Vec<ProjPoint>,
    /// Index of each canonical point by its packed coordinate code.
    index: Vec<u32>,
}

impl ProjectiveSpace {
    pub const MAX_VECTORS: u64 = 1 << 20;

    pub fn new(field: &FieldSpec, m: usize) -> Result<ProjectiveSpace, FieldError> {
        if m < 2 {
            return Err(FieldError::DimensionTooSmall(m));
        }
        let q = field.order() as u64;
        let total = q
            .checked_pow(m as u32)
            .filter(|&t| t <= Self::MAX_VECTORS)
            .ok_or(FieldError::TooLarge(q))?;
        let mut points = Vec::new();
        let mut index = vec![u32::MAX; total as usize];
        for code in 0..total {
            let coords = decode_vector(code, q, m);
            match coords.iter().find(|c| !c.is_zero()) {
                Some(c) if c.packed() == 1 => {
                    index[code as usize] = points.len() as u32;
                    points.push(ProjPoint { coords });
                }
                _ => {}
            }
        }
        Ok(ProjectiveSpace {
            field: field.clone(),
            m,
            points,
            index,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.m
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of the point spanned by a nonzero vector.
    pub fn index_of(&self, v: &[FieldElement]) -> Result<usize, FieldError> {
        if v.len() != self.m {
            return Err(FieldError::LengthMismatch {
                expected: self.m,
                got: v.len(),
            });
        }
        let point = canonicalize(&self.field, v)?;
        let code = encode_vector(point.coords(), self.field.order() as u64);
        Ok(self.index[code as usize] as usize)
    }
}

/// Coordinate 0 is the most significant digit, so codes sort lexicographically.
fn decode_vector(mut code: u64, q: u64, m: usize) -> Vec<FieldElement> {
    let mut coords = vec![FieldElement(0); m];
    for slot in coords.iter_mut().rev() {
        *slot = FieldElement((code % q) as u32);
        code /= q;
    }
    coords
}

fn encode_vector(v: &[FieldElement], q: u64) -> u64 {
    v.iter().fold(0, |acc, c| acc * q + c.packed() as u64)
}

/// The lexicographically ordered points of `P^{m-1}(F_q)`.
pub fn projective_points(field: &FieldSpec, m: usize) -> Result<Vec<ProjPoint>, FieldError> {
    Ok(ProjectiveSpace::new(field, m)?.points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        assert_eq!(FieldSpec::new(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(FieldSpec::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // x^3+x^2+1 precedes x^3+x+1 when the constant term is compared first
        assert_eq!(FieldSpec::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn smallest_quadratic_over_f3_by_root_search() {
        // Oracle: a monic quadratic over F_3 is irreducible iff it has no root.
        let no_root = |c0: u32, c1: u32| (0..3).all(|x| !(c0 + c1 * x + x * x).is_multiple_of(3));
        let mut expected = None;
        'outer: for c0 in 0..3 {
            for c1 in 0..3 {
                if no_root(c0, c1) {
                    expected = Some(vec![c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        assert_eq!(expected, Some(vec![1, 0, 1]));
        assert_eq!(FieldSpec::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldSpec::new(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert_eq!(FieldSpec::new(2, 9).unwrap_err(), FieldError::DegreeOutOfRange(9));
        assert_eq!(FieldSpec::new(2, 0).unwrap_err(), FieldError::DegreeOutOfRange(0));
    }

    #[test]
    fn f4_generator_squared() {
        let f = FieldSpec::new(2, 2).unwrap();
        let x = f.generator();
        assert_eq!(f.mul(x, x), f.add(x, f.one()));
    }

    #[test]
    fn f8_inverses() {
        let f = FieldSpec::new(2, 3).unwrap();
        for a in f.elements().skip(1) {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        assert_eq!(f.inv(f.zero()).unwrap_err(), FieldError::ZeroInverse);
    }

    #[test]
    fn f9_has_an_element_of_order_8() {
        let f = FieldSpec::new(3, 2).unwrap();
        let orders: Vec<u64> = f
            .elements()
            .skip(1)
            .map(|a| {
                // brute-force order
                let mut k = 1;
                let mut x = a;
                while x != f.one() {
                    x = f.mul(x, a);
                    k += 1;
                }
                k
            })
            .collect();
        assert!(orders.contains(&8));
        assert_eq!(f.multiplicative_order(f.primitive_element()), 8);
    }

    #[test]
    fn projective_point_counts() {
        for (q, m, n) in [(2u64, 3usize, 7usize), (4, 3, 21), (3, 4, 40), (5, 2, 6)] {
            let f = FieldSpec::of_order(q).unwrap();
            let pts = projective_points(&f, m).unwrap();
            assert_eq!(pts.len(), n);
            assert!(pts.windows(2).all(|w| w[0] < w[1]));
            for pt in &pts {
                let lead = pt.coords().iter().find(|c| !c.is_zero()).unwrap();
                assert_eq!(*lead, f.one());
            }
        }
    }

    #[test]
    fn canonicalize_examples() {
        let f = FieldSpec::new(2, 2).unwrap();
        let x = f.generator();
        let (zero, one) = (f.zero(), f.one());
        assert_eq!(canonicalize(&f, &[one, zero, zero]).unwrap().coords(), &[one, zero, zero]);
        // (0, a, b) -> (0, 1, b/a)
        let a = x;
        let b = f.add(x, one);
        let expect = f.mul(f.inv(a).unwrap(), b);
        assert_eq!(canonicalize(&f, &[zero, a, b]).unwrap().coords(), &[zero, one, expect]);
        let base = [x, one, zero];
        let images: Vec<ProjPoint> = f
            .elements()
            .skip(1)
            .map(|mu| {
                let v: Vec<_> = base.iter().map(|&c| f.mul(mu, c)).collect();
                canonicalize(&f, &v).unwrap()
            })
            .collect();
        assert!(images.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(canonicalize(&f, &[zero, zero, zero]).unwrap_err(), FieldError::ZeroVector);
    }

    #[test]
    fn frobenius_is_additive_on_small_fields() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = FieldSpec::of_order(q).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                }
            }
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(64), Some((2, 6)));
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
