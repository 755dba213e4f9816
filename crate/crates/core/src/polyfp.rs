//! Univariate polynomials over a prime field `F_p` (`p < 2^31`) and their
//! factorization: squarefree decomposition, distinct-degree and equal-degree
//! splitting.

use std::fmt;

use crate::rng::SplitMix64;

/// Coefficients constant term first, no trailing zeros (the zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyFp {
    p: u64,
    coeffs: Vec<u64>,
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn mod_pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl PolyFp {
    pub fn new(coeffs: Vec<u64>, p: u64) -> PolyFp {
        assert!((2..1 << 31).contains(&p), "modulus out of range");
        let mut f = PolyFp {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        f.normalize();
        f
    }

    /// Reduces signed coefficients mod `p`.
    pub fn from_signed(coeffs: &[i64], p: u64) -> PolyFp {
        PolyFp::new(coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect(), p)
    }

    pub fn zero(p: u64) -> PolyFp {
        PolyFp::new(Vec::new(), p)
    }

    pub fn one(p: u64) -> PolyFp {
        PolyFp::new(vec![1], p)
    }

    pub fn x(p: u64) -> PolyFp {
        PolyFp::new(vec![0, 1], p)
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn monic(&self) -> PolyFp {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(mod_inv(self.lead(), self.p))
    }

    pub fn scale(&self, c: u64) -> PolyFp {
        PolyFp::new(self.coeffs.iter().map(|&a| a * (c % self.p) % self.p).collect(), self.p)
    }

    pub fn add(&self, other: &PolyFp) -> PolyFp {
        let n = self.coeffs.len().max(other.coeffs.len());
        PolyFp::new(
            (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % self.p).collect(),
            self.p,
        )
    }

    pub fn sub(&self, other: &PolyFp) -> PolyFp {
        let n = self.coeffs.len().max(other.coeffs.len());
        PolyFp::new(
            (0..n).map(|i| (self.coeff(i) + self.p - other.coeff(i)) % self.p).collect(),
            self.p,
        )
    }

    pub fn mul(&self, other: &PolyFp) -> PolyFp {
        if self.is_zero() || other.is_zero() {
            return PolyFp::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        PolyFp::new(out, self.p)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, divisor: &PolyFp) -> (PolyFp, PolyFp) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = mod_inv(divisor.lead(), self.p);
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (PolyFp::zero(self.p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] * inv % self.p;
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = (rem[k + j] + self.p - c * b % self.p) % self.p;
            }
        }
        rem.truncate(dd);
        (PolyFp::new(quot, self.p), PolyFp::new(rem, self.p))
    }

    pub fn rem(&self, divisor: &PolyFp) -> PolyFp {
        self.divrem(divisor).1
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &PolyFp) -> PolyFp {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> PolyFp {
        PolyFp::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * (i as u64 % self.p) % self.p)
                .collect(),
            self.p,
        )
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &PolyFp) -> PolyFp {
        let mut acc = PolyFp::one(self.p).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| (acc * (x % self.p) + c) % self.p)
    }

    /// `g(x^p) = self` style `p`-th root, valid when the derivative vanishes.
    fn pth_root(&self) -> PolyFp {
        let p = self.p as usize;
        PolyFp::new(self.coeffs.iter().step_by(p).copied().collect(), self.p)
    }

    /// Squarefree decomposition of a monic polynomial: pairs `(g, e)` with
    /// `self = ∏ g^e`, each `g` squarefree, monic and nonconstant.
    pub fn squarefree_decomposition(&self) -> Vec<(PolyFp, usize)> {
        let mut out = Vec::new();
        self.monic().squarefree_into(1, &mut out);
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }

    fn squarefree_into(&self, mult: usize, out: &mut Vec<(PolyFp, usize)>) {
        if self.degree().unwrap_or(0) == 0 {
            return;
        }
        let d = self.derivative();
        if d.is_zero() {
            self.pth_root().squarefree_into(mult * self.p as usize, out);
            return;
        }
        let mut c = self.gcd(&d);
        let mut w = self.divrem(&c).0;
        let mut i = 1;
        while w.degree().unwrap_or(0) > 0 {
            let y = w.gcd(&c);
            let z = w.divrem(&y).0;
            if z.degree().unwrap_or(0) > 0 {
                out.push((z.monic(), i * mult));
            }
            w = y;
            c = c.divrem(&w).0;
            i += 1;
        }
        if c.degree().unwrap_or(0) > 0 {
            c.pth_root().squarefree_into(mult * self.p as usize, out);
        }
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(h_d, d)` where `h_d` is the product of all irreducible factors of degree `d`.
    pub fn distinct_degree(&self) -> Vec<(PolyFp, usize)> {
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = PolyFp::x(self.p);
        let mut h = x.rem(&f);
        let mut d = 0;
        while let Some(deg) = f.degree() {
            if deg < 2 * (d + 1) {
                if deg > 0 {
                    out.push((f.clone(), deg));
                }
                break;
            }
            d += 1;
            h = h.powmod(self.p, &f);
            let g = h.sub(&x).gcd(&f);
            if !g.is_one() {
                f = f.divrem(&g).0;
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        out
    }

    /// Splits a monic squarefree product of irreducibles all of degree `d`.
    pub fn equal_degree(&self, d: usize, rng: &mut SplitMix64) -> Vec<PolyFp> {
        let n = self.degree().unwrap_or(0);
        if n == 0 {
            return Vec::new();
        }
        if n == d {
            return vec![self.monic()];
        }
        loop {
            let a = PolyFp::new((0..n).map(|_| rng.below(self.p)).collect(), self.p);
            if a.degree().unwrap_or(0) == 0 {
                continue;
            }
            let candidate = if self.p == 2 {
                // trace map a + a^2 + ... + a^(2^(d-1))
                let mut t = a.rem(self);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mul(&t).rem(self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
                let mut t = a.rem(self);
                let mut norm = t.clone();
                for _ in 1..d {
                    t = t.powmod(self.p, self);
                    norm = norm.mul(&t).rem(self);
                }
                norm.powmod((self.p - 1) / 2, self).sub(&PolyFp::one(self.p))
            };
            let g = candidate.gcd(self);
            let gd = g.degree().unwrap_or(0);
            if gd > 0 && gd < n {
                let rest = self.divrem(&g).0.monic();
                let mut out = g.equal_degree(d, rng);
                out.extend(rest.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorization of a nonzero polynomial into monic irreducibles
    /// with multiplicities, sorted by degree then coefficients.
    pub fn factor(&self, seed: u64) -> Vec<(PolyFp, usize)> {
        let mut rng = SplitMix64::new(seed);
        let mut out = Vec::new();
        for (g, e) in self.squarefree_decomposition() {
            for (h, d) in g.distinct_degree() {
                for irr in h.equal_degree(d, &mut rng) {
                    out.push((irr, e));
                }
            }
        }
        out.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
        });
        out
    }

    /// Degrees of the irreducible factors of a squarefree polynomial, ascending.
    pub fn factor_degrees_squarefree(&self) -> Vec<usize> {
        let mut degs = Vec::new();
        for (h, d) in self.monic().distinct_degree() {
            let count = h.degree().unwrap_or(0) / d;
            degs.extend(std::iter::repeat_n(d, count));
        }
        degs.sort_unstable();
        degs
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_one()
    }
}

impl fmt::Debug for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (mod {})", self.p);
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        write!(f, " (mod {})", self.p)
    }
}
