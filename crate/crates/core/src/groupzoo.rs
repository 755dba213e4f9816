//! Constructors for the named permutation groups: `S_n`, `A_n`, the five
//! Mathieu groups, and `PSL_m(q)` / `PGL_m(q)` acting on projective points.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::finitefield::{prime_power, FieldElement, FieldError, FieldSpec, ProjectiveSpace};
use crate::permgroup::{PermError, PermGroup, Permutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZooError {
    #[error("invalid degree {0} for this family")]
    InvalidDegree(usize),
    #[error("no Mathieu group of degree {0}")]
    UnsupportedMathieu(usize),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("projective dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("q^m = {q}^{m} exceeds the supported size")]
    TooLarge { m: usize, q: u64 },
    #[error("cannot parse group specification {0:?}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Family and parameters of a supported group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    Symmetric(usize),
    Alternating(usize),
    Mathieu(usize),
    Psl { m: usize, q: u64 },
    Pgl { m: usize, q: u64 },
}

/// Largest `q^m` accepted for projective linear groups.
pub const MAX_PROJECTIVE_VECTORS: u64 = 100_000;

pub const MATHIEU_DEGREES: [usize; 5] = [11, 12, 22, 23, 24];

impl GroupId {
    pub fn validate(&self) -> Result<(), ZooError> {
        match *self {
            GroupId::Symmetric(n) if n < 2 => Err(ZooError::InvalidDegree(n)),
            GroupId::Alternating(n) if n < 3 => Err(ZooError::InvalidDegree(n)),
            GroupId::Mathieu(n) if !MATHIEU_DEGREES.contains(&n) => {
                Err(ZooError::UnsupportedMathieu(n))
            }
            GroupId::Psl { m, q } | GroupId::Pgl { m, q } => {
                if m < 2 {
                    return Err(ZooError::DimensionTooSmall(m));
                }
                prime_power(q).ok_or(ZooError::NotPrimePower(q))?;
                match q.checked_pow(m as u32) {
                    Some(v) if v <= MAX_PROJECTIVE_VECTORS => Ok(()),
                    _ => Err(ZooError::TooLarge { m, q }),
                }
            }
            _ => Ok(()),
        }
    }

    /// Degree of the natural action.
    pub fn degree(&self) -> usize {
        match *self {
            GroupId::Symmetric(n) | GroupId::Alternating(n) | GroupId::Mathieu(n) => n,
            GroupId::Psl { m, q } | GroupId::Pgl { m, q } => {
                ((q.pow(m as u32) - 1) / (q - 1)) as usize
            }
        }
    }

    /// Closed-form group order.
    pub fn order_formula(&self) -> u128 {
        match *self {
            GroupId::Symmetric(n) => factorial(n),
            GroupId::Alternating(n) => factorial(n) / 2,
            GroupId::Mathieu(n) => match n {
                11 => 7_920,
                12 => 95_040,
                22 => 443_520,
                23 => 10_200_960,
                24 => 244_823_040,
                _ => 0,
            },
            GroupId::Psl { m, q } => pgl_order(m, q) / projective_center(m, q) as u128,
            GroupId::Pgl { m, q } => pgl_order(m, q),
        }
    }

    /// The simple group whose properties drive the audit: `A_n` inside `S_n`,
    /// `PSL` inside `PGL`, and the group itself otherwise.
    pub fn simple_core(&self) -> GroupId {
        match *self {
            GroupId::Symmetric(n) => GroupId::Alternating(n),
            GroupId::Pgl { m, q } => GroupId::Psl { m, q },
            other => other,
        }
    }

    pub fn build(&self) -> Result<ZooGroup, ZooError> {
        self.validate()?;
        let (group, labels) = match *self {
            GroupId::Symmetric(n) => (symmetric(n)?, None),
            GroupId::Alternating(n) => (alternating(n)?, None),
            GroupId::Mathieu(n) => (mathieu(n)?, None),
            GroupId::Psl { m, q } => {
                let (g, space) = projective_linear(m, q, false)?;
                (g, Some(space))
            }
            GroupId::Pgl { m, q } => {
                let (g, space) = projective_linear(m, q, true)?;
                (g, Some(space))
            }
        };
        Ok(ZooGroup {
            id: *self,
            group,
            labels,
        })
    }
}

/// `gcd(m, q - 1)`, the index of `PSL_m(q)` in `PGL_m(q)`.
pub fn projective_center(m: usize, q: u64) -> u64 {
    num_integer::gcd(m as u64, q - 1)
}

fn pgl_order(m: usize, q: u64) -> u128 {
    let q = q as u128;
    let mut order = q.pow((m * (m - 1) / 2) as u32);
    for i in 2..=m as u32 {
        order *= q.pow(i) - 1;
    }
    order
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Symmetric(n) => write!(f, "S{n}"),
            GroupId::Alternating(n) => write!(f, "A{n}"),
            GroupId::Mathieu(n) => write!(f, "M{n}"),
            GroupId::Psl { m, q } => write!(f, "PSL({m},{q})"),
            GroupId::Pgl { m, q } => write!(f, "PGL({m},{q})"),
        }
    }
}

impl Serialize for GroupId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for GroupId {
    type Err = ZooError;

    /// Accepts `S7`, `A9`, `M24`, `PSL(3,4)`, `PGL(3,3)`; case-insensitive,
    /// whitespace ignored.
    fn from_str(text: &str) -> Result<Self, ZooError> {
        let s: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_uppercase();
        let err = || ZooError::Parse(text.to_string());
        let number = |t: &str| -> Result<u64, ZooError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            t.parse::<u64>().map_err(|_| err())
        };
        let id = if let Some(rest) = s.strip_prefix("PSL").or_else(|| s.strip_prefix("PGL")) {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(err)?;
            let (m, q) = inner.split_once(',').ok_or_else(err)?;
            let (m, q) = (number(m)? as usize, number(q)?);
            if s.starts_with("PSL") {
                GroupId::Psl { m, q }
            } else {
                GroupId::Pgl { m, q }
            }
        } else if let Some(rest) = s.strip_prefix('S') {
            GroupId::Symmetric(number(rest)? as usize)
        } else if let Some(rest) = s.strip_prefix('A') {
            GroupId::Alternating(number(rest)? as usize)
        } else if let Some(rest) = s.strip_prefix('M') {
            GroupId::Mathieu(number(rest)? as usize)
        } else {
            return Err(err());
        };
        id.validate()?;
        Ok(id)
    }
}

/// A constructed group together with its point labeling, when it has one.
#[derive(Debug, Clone)]
pub struct ZooGroup {
    pub id: GroupId,
    pub group: PermGroup,
    /// For projective groups: point `i` of the action is `labels.points()[i]`.
    pub labels: Option<ProjectiveSpace>,
}

fn cycle(n: usize, points: impl IntoIterator<Item = usize>) -> Result<Permutation, PermError> {
    let pts: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(n, &[&pts])
}

pub fn symmetric(n: usize) -> Result<PermGroup, ZooError> {
    if n < 2 {
        return Err(ZooError::InvalidDegree(n));
    }
    Ok(PermGroup::new(vec![cycle(n, [0, 1])?, cycle(n, 0..n)?])?)
}

pub fn alternating(n: usize) -> Result<PermGroup, ZooError> {
    if n < 3 {
        return Err(ZooError::InvalidDegree(n));
    }
    let long = if n % 2 == 1 { cycle(n, 0..n)? } else { cycle(n, 1..n)? };
    Ok(PermGroup::new(vec![cycle(n, [0, 1, 2])?, long])?)
}

pub fn cyclic(n: usize) -> Result<PermGroup, ZooError> {
    if n < 1 {
        return Err(ZooError::InvalidDegree(n));
    }
    Ok(PermGroup::new(vec![cycle(n, 0..n)?])?)
}

/// Symmetries of the regular `n`-gon, order `2n`.
pub fn dihedral(n: usize) -> Result<PermGroup, ZooError> {
    if n < 3 {
        return Err(ZooError::InvalidDegree(n));
    }
    let reflection = Permutation::new((0..n).map(|i| (n - i) % n).collect())?;
    Ok(PermGroup::new(vec![cycle(n, 0..n)?, reflection])?)
}

/// Two-generator presentations as image lists on `0..n`.
const M11_GENS: [&[usize]; 2] = [
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0],
    &[0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7],
];
const M12_GENS: [&[usize]; 2] = [
    &[10, 5, 7, 8, 2, 9, 3, 4, 6, 1, 11, 0],
    &[0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7, 11],
];
const M22_GENS: [&[usize]; 2] = [
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 11],
    &[16, 5, 20, 18, 17, 9, 1, 7, 12, 6, 21, 14, 8, 13, 19, 11, 3, 2, 0, 15, 4, 10],
];
const M23_GENS: [&[usize]; 2] = [
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 0],
    &[0, 1, 16, 12, 3, 5, 8, 17, 2, 6, 11, 22, 13, 18, 19, 14, 9, 10, 4, 21, 15, 20, 7],
];
const M24_GENS: [&[usize]; 2] = [
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 0, 23],
    &[23, 22, 10, 21, 15, 9, 20, 4, 11, 19, 2, 1, 7, 14, 6, 18, 5, 16, 17, 12, 3, 8, 13, 0],
];

pub fn mathieu(n: usize) -> Result<PermGroup, ZooError> {
    let gens = match n {
        11 => M11_GENS,
        12 => M12_GENS,
        22 => M22_GENS,
        23 => M23_GENS,
        24 => M24_GENS,
        _ => return Err(ZooError::UnsupportedMathieu(n)),
    };
    let perms = gens
        .iter()
        .map(|images| Permutation::new(images.to_vec()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PermGroup::new(perms)?)
}

type Matrix = Vec<Vec<FieldElement>>;

fn identity_matrix(field: &FieldSpec, m: usize) -> Matrix {
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect()
}

/// Generators of `SL_m(q)` (plus a determinant-`ω` diagonal for `PGL`):
/// the transvections `I + E_01` and `I + ω E_01`, `diag(ω, ω⁻¹, 1, …)`,
/// and the basis cycle with sign `(-1)^{m-1}` on its wrap-around entry.
fn sl_generators(field: &FieldSpec, m: usize, pgl: bool) -> Vec<Matrix> {
    let omega = field.primitive_element();
    let omega_inv = field.inv(omega).expect("primitive element is nonzero");
    let mut gens = Vec::new();

    let mut t = identity_matrix(field, m);
    t[0][1] = field.one();
    gens.push(t);
    if field.degree() > 1 {
        let mut t = identity_matrix(field, m);
        t[0][1] = omega;
        gens.push(t);
    }
    let mut d = identity_matrix(field, m);
    d[0][0] = omega;
    d[1][1] = omega_inv;
    gens.push(d);

    let mut w = vec![vec![field.zero(); m]; m];
    for i in 0..m - 1 {
        w[i][i + 1] = field.one();
    }
    w[m - 1][0] = if m.is_multiple_of(2) { field.neg(field.one()) } else { field.one() };
    gens.push(w);

    if pgl {
        let mut d = identity_matrix(field, m);
        d[0][0] = omega;
        gens.push(d);
    }
    gens
}

/// Permutation induced on projective points by `v ↦ v·M`.
fn induced_permutation(space: &ProjectiveSpace, matrix: &Matrix) -> Result<Permutation, ZooError> {
    let field = space.field();
    let m = space.dimension();
    let images = space
        .points()
        .iter()
        .map(|pt| {
            let v = pt.coords();
            let w: Vec<FieldElement> = (0..m)
                .map(|j| {
                    (0..m).fold(field.zero(), |acc, i| {
                        field.add(acc, field.mul(v[i], matrix[i][j]))
                    })
                })
                .collect();
            space.index_of(&w)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Permutation::new(images)?)
}

fn projective_linear(m: usize, q: u64, pgl: bool) -> Result<(PermGroup, ProjectiveSpace), ZooError> {
    let field = FieldSpec::of_order(q)?;
    let space = ProjectiveSpace::new(&field, m)?;
    let perms = sl_generators(&field, m, pgl)
        .iter()
        .map(|mat| induced_permutation(&space, mat))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((PermGroup::new(perms)?, space))
}

pub fn psl(m: usize, q: u64) -> Result<PermGroup, ZooError> {
    Ok(GroupId::Psl { m, q }.build()?.group)
}

pub fn pgl(m: usize, q: u64) -> Result<PermGroup, ZooError> {
    Ok(GroupId::Pgl { m, q }.build()?.group)
}

/// Every `(m, q)` with `q` a prime power, `m ≥ 2` and `(q^m-1)/(q-1) ≤ max_degree`.
pub fn projective_parameters(max_degree: usize) -> Vec<(usize, u64)> {
    let mut out = Vec::new();
    for q in 2..=max_degree as u64 {
        if prime_power(q).is_none() {
            continue;
        }
        let mut m = 2;
        loop {
            let n = (q.pow(m as u32) - 1) / (q - 1);
            if n as usize > max_degree {
                break;
            }
            out.push((m, q));
            m += 1;
        }
    }
    out
}
