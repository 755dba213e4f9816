//! Integer polynomials and Frobenius cycle-type probes.
//!
//! Reducing `f` modulo unramified primes gives factor degrees equal to the cycle
//! type of a Frobenius element of `Gal(f)`. Comparing those types with the
//! cycle types of a candidate group can refute `Gal(f) ⊆ G` but never prove it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::finitefield::is_prime;
use crate::groupzoo::{GroupId, ZooError};
use crate::permgroup::{CycleType, PermGroup};
use crate::polyfp::PolyFp;

/// Groups up to this order have their cycle types enumerated exactly.
pub const EXACT_ENUMERATION_LIMIT: u128 = 1_000_000;

/// Product-replacement samples for larger groups.
pub const DEFAULT_SAMPLE_BUDGET: usize = 20_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected {found:?} at position {position}")]
    Unexpected { found: char, position: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("non-integer coefficient at position {position}")]
    NonIntegerCoefficient { position: usize },
    #[error("exponent too large at position {position}")]
    ExponentTooLarge { position: usize },
    #[error("polynomial must have degree at least 1")]
    DegreeTooSmall,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProbeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} divides the leading coefficient")]
    DividesLeading(u64),
    #[error("{group} has degree {group_degree} but the polynomial has degree {degree}")]
    DegreeMismatch {
        group: GroupId,
        group_degree: usize,
        degree: usize,
    },
    #[error(transparent)]
    Zoo(#[from] ZooError),
}

/// A polynomial with integer coefficients, constant term first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<IntPolynomial, ParseError> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.len() < 2 {
            return Err(ParseError::DegreeTooSmall);
        }
        Ok(IntPolynomial { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<IntPolynomial, ParseError> {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("degree at least 1")
    }

    pub fn reduce_mod(&self, p: u64) -> PolyFp {
        let pb = BigInt::from(p);
        PolyFp::new(
            self.coeffs
                .iter()
                .map(|c| c.mod_floor(&pb).to_u64().expect("residue below p"))
                .collect(),
            p,
        )
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let a = c.abs();
            let monomial = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{a}*{monomial}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek().map(|(_, c)| c) == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some((position, found)) => ParseError::Unexpected { found, position },
            None => ParseError::UnexpectedEnd,
        }
    }

    fn integer(&mut self) -> Option<(usize, String)> {
        let start = self.peek()?.0;
        let mut digits = String::new();
        while let Some((_, c)) = self.peek().filter(|(_, c)| c.is_ascii_digit()) {
            digits.push(c);
            self.pos += 1;
        }
        (!digits.is_empty()).then_some((start, digits))
    }

    fn reject_fraction(&self) -> Result<(), ParseError> {
        match self.peek() {
            Some((position, '.' | '/')) => Err(ParseError::NonIntegerCoefficient { position }),
            _ => Ok(()),
        }
    }

    /// One signed term; returns `(exponent, coefficient)`.
    fn term(&mut self, negative: bool) -> Result<(usize, BigInt), ParseError> {
        let mut coeff = BigInt::one();
        let mut explicit = false;
        if let Some((_, digits)) = self.integer() {
            self.reject_fraction()?;
            coeff = digits.parse().expect("ascii digits");
            explicit = true;
        }
        let star = explicit && self.eat('*');
        let mut exponent = 0;
        if self.eat('x') {
            exponent = 1;
            if self.eat('^') {
                let (position, digits) = self.integer().ok_or_else(|| self.unexpected())?;
                exponent = digits
                    .parse::<usize>()
                    .ok()
                    .filter(|&e| e <= 100_000)
                    .ok_or(ParseError::ExponentTooLarge { position })?;
            }
        } else if star || !explicit {
            return Err(self.unexpected());
        }
        if negative {
            coeff = -coeff;
        }
        Ok((exponent, coeff))
    }

    fn expression(&mut self) -> Result<Vec<BigInt>, ParseError> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut negative = false;
        if self.eat('-') {
            negative = true;
        } else {
            self.eat('+');
        }
        loop {
            let (e, c) = self.term(negative)?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += c;
            match self.peek() {
                Some((_, '+')) => negative = false,
                Some((_, '-')) => negative = true,
                _ => return Ok(coeffs),
            }
            self.pos += 1;
        }
    }
}

/// Parses sums of terms `c*x^k` with integer `c`; `2x` is read as `2*x` and
/// the whole expression may be wrapped in one pair of parentheses.
pub fn parse_poly(text: &str) -> Result<IntPolynomial, ParseError> {
    let mut p = Parser {
        chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
        pos: 0,
    };
    let wrapped = p.eat('(');
    let coeffs = p.expression()?;
    if wrapped && !p.eat(')') {
        return Err(p.unexpected());
    }
    if p.peek().is_some() {
        p.reject_fraction()?;
        return Err(p.unexpected());
    }
    IntPolynomial::new(coeffs)
}

impl FromStr for IntPolynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

/// Frobenius data at one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum FrobeniusClass {
    Unramified { cycle_type: CycleType },
    /// `f mod p` has a repeated factor.
    Ramified,
}

pub fn cycle_type_mod_p(f: &IntPolynomial, p: u64) -> Result<FrobeniusClass, ProbeError> {
    if !is_prime(p) || p >= 1 << 31 {
        return Err(ProbeError::NotPrime(p));
    }
    let fp = f.reduce_mod(p);
    if fp.degree() != Some(f.degree()) {
        return Err(ProbeError::DividesLeading(p));
    }
    if !fp.is_squarefree() {
        return Ok(FrobeniusClass::Ramified);
    }
    Ok(FrobeniusClass::Unramified {
        cycle_type: CycleType::new(fp.factor_degrees_squarefree()),
    })
}

/// Cycle types of a permutation group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleTypeSet {
    pub types: BTreeSet<CycleType>,
    /// Full enumeration rather than sampling.
    pub exact: bool,
}

pub fn group_cycle_types(group: &PermGroup, budget: usize, seed: u64) -> CycleTypeSet {
    let mut types = BTreeSet::new();
    if group.order() <= EXACT_ENUMERATION_LIMIT {
        group.for_each_element(|g| {
            types.insert(g.cycle_type());
        });
        return CycleTypeSet { types, exact: true };
    }
    types.insert(CycleType::new(vec![1; group.degree()]));
    types.extend(group.sampler(seed).take(budget).map(|g| g.cycle_type()));
    CycleTypeSet { types, exact: false }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CandidateVerdict {
    /// Every observed type occurs in the group; with `exact` the type set was enumerated.
    Consistent { exact: bool },
    /// An observed type that no element of the group has.
    Inconsistent { witness: CycleType, prime: u64 },
    InsufficientData,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateReport {
    pub group: GroupId,
    pub type_count: usize,
    pub exact_types: bool,
    pub verdict: CandidateVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HistogramEntry {
    pub cycle_type: CycleType,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub polynomial: IntPolynomial,
    pub degree: usize,
    pub primes_used: Vec<u64>,
    pub ramified_primes: Vec<u64>,
    pub histogram: Vec<HistogramEntry>,
    pub candidates: Vec<CandidateReport>,
    /// Some unramified prime left `f` irreducible, which forces irreducibility over Q.
    pub irreducibility_evidence: bool,
    pub note: &'static str,
}

pub const PROBE_NOTE: &str = "a consistent candidate G is only consistent with Gal(f) contained in G; \
an inconsistent one is refuted by its witness prime";

/// The first `count` primes not dividing `leading`.
pub fn primes_coprime_to(leading: &BigInt, count: usize) -> Vec<u64> {
    (2u64..)
        .filter(|&p| is_prime(p) && !(leading % BigInt::from(p)).is_zero())
        .take(count)
        .collect()
}

pub fn probe(
    f: &IntPolynomial,
    prime_count: usize,
    candidates: &[GroupId],
    seed: u64,
) -> Result<ProbeReport, ProbeError> {
    for &id in candidates {
        id.validate()?;
        if id.degree() != f.degree() {
            return Err(ProbeError::DegreeMismatch {
                group: id,
                group_degree: id.degree(),
                degree: f.degree(),
            });
        }
    }
    let primes = primes_coprime_to(f.leading(), prime_count);
    let mut ramified = Vec::new();
    let mut observed: Vec<(u64, CycleType)> = Vec::new();
    for &p in &primes {
        match cycle_type_mod_p(f, p)? {
            FrobeniusClass::Ramified => ramified.push(p),
            FrobeniusClass::Unramified { cycle_type } => observed.push((p, cycle_type)),
        }
    }
    let mut counts: BTreeMap<CycleType, usize> = BTreeMap::new();
    for (_, t) in &observed {
        *counts.entry(t.clone()).or_default() += 1;
    }
    let irreducibility_evidence = observed.iter().any(|(_, t)| t.lengths().len() == 1);

    let mut reports = Vec::new();
    for &id in candidates {
        let group = id.build()?.group;
        let set = group_cycle_types(&group, DEFAULT_SAMPLE_BUDGET, seed);
        let outside = observed.iter().find(|(_, t)| !set.types.contains(t));
        let verdict = match (observed.is_empty(), outside, set.exact) {
            (true, _, _) => CandidateVerdict::InsufficientData,
            (false, Some((p, t)), true) => CandidateVerdict::Inconsistent {
                witness: t.clone(),
                prime: *p,
            },
            (false, Some(_), false) => CandidateVerdict::InsufficientData,
            (false, None, exact) => CandidateVerdict::Consistent { exact },
        };
        reports.push(CandidateReport {
            group: id,
            type_count: set.types.len(),
            exact_types: set.exact,
            verdict,
        });
    }
    Ok(ProbeReport {
        polynomial: f.clone(),
        degree: f.degree(),
        primes_used: primes,
        ramified_primes: ramified,
        histogram: counts
            .into_iter()
            .map(|(cycle_type, count)| HistogramEntry { cycle_type, count })
            .collect(),
        candidates: reports,
        irreducibility_evidence,
        note: PROBE_NOTE,
    })
}
