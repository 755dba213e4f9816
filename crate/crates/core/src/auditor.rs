//! Certification of `End(J(C_f)) = Z` for hyperelliptic curves `y² = f(x)`
//! whose Galois group contains one of the supported simple groups.
//!
//! An audit gathers permutation and heart evidence for the simple core of a
//! group, picks the transitivity branch, and chains the unboundedness rules
//! `R0`..`R4` backed by the bundled fact table. Every certificate step names
//! the references it rests on, keyed into `data/citations.tsv`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::groupzoo::{GroupId, ZooError};
use crate::modrep::{self, Decomposability, Irreducibility, RepError};

const CITATIONS_TSV: &str = include_str!("../data/citations.tsv");
const FACTS_TSV: &str = include_str!("../data/facts.tsv");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AuditError {
    #[error("degree {0} is below 5")]
    DegreeTooSmall(usize),
    #[error("{id} acts on {expected} points, not {given}")]
    DegreeMismatch {
        id: GroupId,
        expected: usize,
        given: usize,
    },
    #[error("no fact-table entry for {0}")]
    NoFact(GroupId),
    #[error(transparent)]
    Zoo(#[from] ZooError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Genus of `y² = f(x)` for squarefree `f` of degree `n ≥ 5`.
pub fn genus_of(n: usize) -> Result<usize, AuditError> {
    if n < 5 {
        return Err(AuditError::DegreeTooSmall(n));
    }
    Ok(if n % 2 == 1 { (n - 1) / 2 } else { (n - 2) / 2 })
}

/// No element of prime order `ell` in `GL(dim, Q)`: `φ(ell) = ell − 1 > dim`.
pub fn cyclotomic_obstruction(ell: u64, dim: u64) -> bool {
    ell - 1 > dim
}

/// The citation registry: key to bibliographic reference.
pub fn citation_registry() -> &'static BTreeMap<String, String> {
    static REGISTRY: OnceLock<BTreeMap<String, String>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        tsv_records(CITATIONS_TSV)
            .map(|f| (f[0].to_string(), f[1].to_string()))
            .collect()
    })
}

fn tsv_records(text: &'static str) -> impl Iterator<Item = Vec<&'static str>> {
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| l.split('\t').collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactFlag {
    NoLinearAtMinDegree,
    NoRealRepAtDegreeG,
    LieTypeChar2,
    WagnerChar2Bound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverRule {
    FeitTitsTransfer,
    KleidmanLiebeckM4,
    Order7Cyclotomic,
    G2Automatic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Mathieu,
    Alternating,
    PslEven,
    PslOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    N,
    M,
    Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Condition {
    var: Var,
    at_least: bool,
    value: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BoundExpr {
    Absent,
    Constant(u64),
    QMinusOne,
    ProjectiveMinusOne,
    TwiceGenus,
}

/// One row of the fact table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFact {
    family: Family,
    selector: Vec<Condition>,
    selector_text: &'static str,
    bound: BoundExpr,
    flags: Vec<FactFlag>,
    cover_rule: Option<CoverRule>,
    citations: Vec<&'static str>,
}

impl GroupFact {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn selector(&self) -> &str {
        self.selector_text
    }

    pub fn flags(&self) -> &[FactFlag] {
        &self.flags
    }

    pub fn cover_rule(&self) -> Option<CoverRule> {
        self.cover_rule
    }

    pub fn citations(&self) -> &[&'static str] {
        &self.citations
    }

    pub fn bound_text(&self) -> String {
        match self.bound {
            BoundExpr::Absent => "none".into(),
            BoundExpr::Constant(c) => c.to_string(),
            BoundExpr::QMinusOne => "q-1".into(),
            BoundExpr::ProjectiveMinusOne => "(q^m-q)/(q-1)".into(),
            BoundExpr::TwiceGenus => "2g".into(),
        }
    }

    fn matches(&self, n: u64, m: u64, q: u64) -> bool {
        self.selector.iter().all(|c| {
            let x = match c.var {
                Var::N => n,
                Var::M => m,
                Var::Q => q,
            };
            if c.at_least {
                x >= c.value
            } else {
                x == c.value
            }
        })
    }

    fn evaluate(&self, n: u64, m: u64, q: u64) -> Option<u64> {
        match self.bound {
            BoundExpr::Absent => None,
            BoundExpr::Constant(c) => Some(c),
            BoundExpr::QMinusOne => Some(q - 1),
            BoundExpr::ProjectiveMinusOne => Some((q.pow(m as u32) - q) / (q - 1)),
            BoundExpr::TwiceGenus => genus_of(n as usize).ok().map(|g| 2 * g as u64),
        }
    }
}

fn parse_fact(fields: &[&'static str]) -> GroupFact {
    let family = match fields[0] {
        "mathieu" => Family::Mathieu,
        "alternating" => Family::Alternating,
        "psl-even" => Family::PslEven,
        "psl-odd" => Family::PslOdd,
        other => unreachable!("family {other} rejected by the build script"),
    };
    let selector = if fields[1] == "*" {
        Vec::new()
    } else {
        fields[1]
            .split(',')
            .map(|cond| {
                let (lhs, at_least, rhs) = match cond.split_once(">=") {
                    Some((l, r)) => (l, true, r),
                    None => {
                        let (l, r) = cond.split_once('=').expect("validated selector");
                        (l, false, r)
                    }
                };
                let var = match lhs {
                    "n" => Var::N,
                    "m" => Var::M,
                    _ => Var::Q,
                };
                Condition {
                    var,
                    at_least,
                    value: rhs.parse().expect("validated selector"),
                }
            })
            .collect()
    };
    let bound = match fields[2] {
        "none" => BoundExpr::Absent,
        "q-1" => BoundExpr::QMinusOne,
        "(q^m-q)/(q-1)" => BoundExpr::ProjectiveMinusOne,
        "2g" => BoundExpr::TwiceGenus,
        c => BoundExpr::Constant(c.parse().expect("validated bound")),
    };
    let flags = if fields[3] == "-" {
        Vec::new()
    } else {
        fields[3]
            .split(',')
            .map(|f| match f {
                "no_linear_at_min_degree" => FactFlag::NoLinearAtMinDegree,
                "no_real_rep_at_degree_g" => FactFlag::NoRealRepAtDegreeG,
                "lie_type_char2" => FactFlag::LieTypeChar2,
                _ => FactFlag::WagnerChar2Bound,
            })
            .collect()
    };
    let cover_rule = match fields[4] {
        "-" => None,
        "feit_tits_transfer" => Some(CoverRule::FeitTitsTransfer),
        "kleidman_liebeck_m4" => Some(CoverRule::KleidmanLiebeckM4),
        "order7_cyclotomic" => Some(CoverRule::Order7Cyclotomic),
        _ => Some(CoverRule::G2Automatic),
    };
    GroupFact {
        family,
        selector,
        selector_text: fields[1],
        bound,
        flags,
        cover_rule,
        citations: fields[5].split(',').collect(),
    }
}

/// All rows of the bundled fact table, in file order.
pub fn fact_table() -> &'static [GroupFact] {
    static TABLE: OnceLock<Vec<GroupFact>> = OnceLock::new();
    TABLE.get_or_init(|| tsv_records(FACTS_TSV).map(|f| parse_fact(&f)).collect())
}

/// Parameters used to match fact rows: `(family, n, m, q)`.
fn fact_key(id: GroupId) -> Option<(Family, u64, u64, u64)> {
    let n = id.degree() as u64;
    match id.simple_core() {
        GroupId::Mathieu(k) => Some((Family::Mathieu, k as u64, 0, 0)),
        GroupId::Alternating(k) => Some((Family::Alternating, k as u64, 0, 0)),
        GroupId::Psl { m, q } => {
            let family = if q % 2 == 0 { Family::PslEven } else { Family::PslOdd };
            Some((family, n, m as u64, q))
        }
        _ => None,
    }
}

/// A lower bound for nontrivial complex projective representations of the
/// simple core of `id`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBound {
    pub group: GroupId,
    pub bound: u64,
    pub flags: Vec<FactFlag>,
    pub cover_rule: CoverRule,
    pub citations: Vec<String>,
}

pub fn min_projective_degree_bound(id: GroupId) -> Result<DegreeBound, AuditError> {
    let core = id.simple_core();
    let no_fact = || AuditError::NoFact(core);
    let (family, n, m, q) = fact_key(id).ok_or_else(no_fact)?;
    let fact = fact_table()
        .iter()
        .find(|f| f.family == family && f.matches(n, m, q))
        .ok_or_else(no_fact)?;
    let bound = fact.evaluate(n, m, q).ok_or_else(no_fact)?;
    Ok(DegreeBound {
        group: core,
        bound,
        flags: fact.flags.clone(),
        cover_rule: fact.cover_rule.expect("rows with a bound carry a cover rule"),
        citations: fact.citations.iter().map(|s| s.to_string()).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    R0,
    R1,
    R2,
    R3,
    R4,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// One justified step of an unboundedness certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleStep {
    pub rule: Rule,
    pub statement: String,
    pub citations: Vec<String>,
}

fn step(rule: Rule, statement: impl Into<String>, citations: &[&str]) -> RuleStep {
    RuleStep {
        rule,
        statement: statement.into(),
        citations: citations.iter().map(|s| s.to_string()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Unboundedness {
    Certificate { rule: Rule, steps: Vec<RuleStep> },
    Inconclusive { rule: Option<Rule>, reason: String },
}

impl Unboundedness {
    pub fn is_certificate(&self) -> bool {
        matches!(self, Unboundedness::Certificate { .. })
    }

    pub fn rule(&self) -> Option<Rule> {
        match self {
            Unboundedness::Certificate { rule, .. } => Some(*rule),
            Unboundedness::Inconclusive { rule, .. } => *rule,
        }
    }

    pub fn steps(&self) -> &[RuleStep] {
        match self {
            Unboundedness::Certificate { steps, .. } => steps,
            Unboundedness::Inconclusive { .. } => &[],
        }
    }
}

/// Tries the unboundedness rules in order `R0`, `R4`, then the fact-table rules.
pub fn check_unbounded(id: GroupId, g: usize) -> Unboundedness {
    let core = id.simple_core();
    if g < 2 {
        return Unboundedness::Inconclusive {
            rule: None,
            reason: format!("g = {g} is below 2"),
        };
    }
    if g == 2 {
        return Unboundedness::Certificate {
            rule: Rule::R0,
            steps: vec![step(
                Rule::R0,
                format!(
                    "finite subgroups of PSL(2,R) are abelian, so a perfect cover of {core} maps trivially into it, and PSL(1,C) is trivial"
                ),
                &["sl2-real"],
            )],
        };
    }
    if g == 3 && core.order_formula().is_multiple_of(7) {
        assert!(cyclotomic_obstruction(7, 3));
        return Unboundedness::Certificate {
            rule: Rule::R4,
            steps: vec![
                step(
                    Rule::R4,
                    format!(
                        "a nontrivial image of a minimal cover of {core} in PSL(2,C) would be a perfect finite subgroup, hence A5, whose order is prime to 7"
                    ),
                    &["suzuki"],
                ),
                step(
                    Rule::R4,
                    "SL(3,Q) has no element of order 7 since phi(7) = 6 > 3",
                    &["cyclotomic-degree"],
                ),
            ],
        };
    }
    let fact = match min_projective_degree_bound(id) {
        Ok(f) => f,
        Err(_) => {
            return Unboundedness::Inconclusive {
                rule: Some(Rule::R1),
                reason: format!("no fact-table bound for {core}"),
            }
        }
    };
    let cites: Vec<&str> = fact.citations.iter().map(String::as_str).collect();
    let has = |flag| fact.flags.contains(&flag);
    if has(FactFlag::NoLinearAtMinDegree) && has(FactFlag::NoRealRepAtDegreeG) && fact.bound == g as u64 {
        return Unboundedness::Certificate {
            rule: Rule::R3,
            steps: vec![
                step(
                    Rule::R3,
                    format!(
                        "nontrivial projective complex representations of {core} have degree at least {}, so its minimal covers map trivially to PSL({},C)",
                        fact.bound,
                        g - 1
                    ),
                    &["atlas", "feit-tits"],
                ),
                step(
                    Rule::R3,
                    format!(
                        "{core} has no nontrivial linear representation of degree {g} and its double cover has none over R, so maps into PSL({g},R) are trivial"
                    ),
                    &["atlas"],
                ),
                step(
                    Rule::R3,
                    "a map into PSL(g,R) factors through PSL(g,C), where the cover kernel dies by minimality of degree",
                    &["feit-tits"],
                ),
            ],
        };
    }
    if fact.bound <= g as u64 {
        let rule = if has(FactFlag::LieTypeChar2) { Rule::R2 } else { Rule::R1 };
        return Unboundedness::Inconclusive {
            rule: Some(rule),
            reason: format!("bound {} does not exceed g = {g}", fact.bound),
        };
    }
    let bound_step = step(
        Rule::R1,
        format!(
            "nontrivial irreducible projective complex representations of {core} have degree at least {} > g = {g}",
            fact.bound
        ),
        &cites,
    );
    match fact.cover_rule {
        CoverRule::KleidmanLiebeckM4 => {
            let GroupId::Psl { m, q } = core else {
                unreachable!("characteristic-2 Lie type rows are projective linear")
            };
            let q3 = q.pow(3);
            if m == 4 && g as u64 >= q3 {
                return Unboundedness::Inconclusive {
                    rule: Some(Rule::R2),
                    reason: format!("m = 4 needs g < q^3 but g = {g} >= {q3}"),
                };
            }
            let mut steps = vec![RuleStep {
                rule: Rule::R2,
                ..bound_step
            }];
            if m == 4 {
                steps.push(step(Rule::R2, format!("m = 4 and g = {g} < q^3 = {q3}"), &["kleidman-liebeck"]));
            }
            steps.push(step(
                Rule::R2,
                format!(
                    "a minimal cover of {core} inside PGL(g,C) forces {core} itself into PGL(g,C) unless m = 4 and g >= q^3"
                ),
                &["kleidman-liebeck"],
            ));
            Unboundedness::Certificate { rule: Rule::R2, steps }
        }
        _ => Unboundedness::Certificate {
            rule: Rule::R1,
            steps: vec![
                bound_step,
                step(
                    Rule::R1,
                    format!("minimal covers of {core} have the same minimal projective degree"),
                    &["feit-tits"],
                ),
            ],
        },
    }
}

/// Which transitivity hypothesis the evidence meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// Odd degree and 2-transitive.
    #[serde(rename = "i")]
    I,
    /// Even degree and 3-transitive.
    #[serde(rename = "ii")]
    II,
    /// Even degree and scalar-only heart endomorphisms.
    #[serde(rename = "iii")]
    III,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum IrreducibilityEvidence {
    Irreducible,
    Reducible { witness_dimension: usize },
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum DecomposabilityEvidence {
    Indecomposable,
    Decomposable { summand_dimensions: (usize, usize) },
    Inconclusive,
}

impl From<&Irreducibility> for IrreducibilityEvidence {
    fn from(v: &Irreducibility) -> Self {
        match v {
            Irreducibility::Irreducible => IrreducibilityEvidence::Irreducible,
            Irreducibility::Reducible { witness } => IrreducibilityEvidence::Reducible {
                witness_dimension: witness.dim(),
            },
            Irreducibility::Inconclusive { .. } => IrreducibilityEvidence::Inconclusive,
        }
    }
}

impl From<&Decomposability> for DecomposabilityEvidence {
    fn from(v: &Decomposability) -> Self {
        match v {
            Decomposability::Indecomposable => DecomposabilityEvidence::Indecomposable,
            Decomposability::Decomposable { image, kernel, .. } => DecomposabilityEvidence::Decomposable {
                summand_dimensions: (image.dim(), kernel.dim()),
            },
            Decomposability::Inconclusive { .. } => DecomposabilityEvidence::Inconclusive,
        }
    }
}

/// Evidence computed on the simple core; `None` marks an inconclusive field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub transitivity_degree: Option<usize>,
    pub heart_dimension: Option<usize>,
    pub endo_dimension: Option<usize>,
    pub irreducibility: IrreducibilityEvidence,
    pub indecomposability: DecomposabilityEvidence,
}

impl Evidence {
    fn absent() -> Evidence {
        Evidence {
            transitivity_degree: None,
            heart_dimension: None,
            endo_dimension: None,
            irreducibility: IrreducibilityEvidence::Inconclusive,
            indecomposability: DecomposabilityEvidence::Inconclusive,
        }
    }

    pub fn is_conclusive(&self) -> bool {
        self.transitivity_degree.is_some()
            && self.heart_dimension.is_some()
            && self.endo_dimension.is_some()
            && self.irreducibility != IrreducibilityEvidence::Inconclusive
            && self.indecomposability != DecomposabilityEvidence::Inconclusive
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    Excluded { reason: String },
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verdict::Certified)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub group_id: GroupId,
    pub simple_core: GroupId,
    pub n: usize,
    pub genus: usize,
    pub condition_branch: Option<Branch>,
    pub evidence: Evidence,
    pub unbounded_certificate: Unboundedness,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl AuditReport {
    /// Every citation key used by the certificate, sorted and deduplicated.
    pub fn citations(&self) -> Vec<String> {
        let mut keys: Vec<String> = self
            .unbounded_certificate
            .steps()
            .iter()
            .flat_map(|s| s.citations.iter().cloned())
            .collect();
        keys.extend(self.base_citations().into_iter().map(String::from));
        keys.sort();
        keys.dedup();
        keys
    }

    fn base_citations(&self) -> Vec<&'static str> {
        let mut keys = vec!["hyperelliptic-genus"];
        if self.condition_branch.is_some() {
            keys.push("klemm");
        }
        keys
    }
}

/// Projective linear parameters outside the coverage in characteristic 2.
pub const EXCLUDED_EVEN: [(usize, u64); 3] = [(2, 2), (4, 2), (3, 4)];

pub fn exclusion(id: GroupId) -> Option<String> {
    match id {
        GroupId::Psl { m, q } | GroupId::Pgl { m, q } if q % 2 == 0 && EXCLUDED_EVEN.contains(&(m, q)) => {
            Some(format!("(m,q)=({m},{q}) is excluded from the characteristic-2 projective linear coverage"))
        }
        _ => None,
    }
}

/// Whether the simple core is a nonabelian simple group.
fn core_is_simple(core: GroupId) -> bool {
    match core {
        GroupId::Alternating(n) => n >= 5,
        GroupId::Mathieu(_) => true,
        GroupId::Psl { m, q } => !(m == 2 && q <= 3),
        _ => false,
    }
}

/// Branch selection and the final verdict from evidence and the rule outcome.
pub fn decide(n: usize, evidence: &Evidence, unbounded: &Unboundedness) -> (Option<Branch>, Verdict) {
    let inconclusive = |reason: String| Verdict::Inconclusive { reason };
    let Some(t) = evidence.transitivity_degree else {
        return (None, inconclusive("transitivity degree unavailable".into()));
    };
    let branch = if n % 2 == 1 {
        (t >= 2).then_some(Branch::I)
    } else if t >= 3 {
        Some(Branch::II)
    } else {
        (evidence.endo_dimension == Some(1)).then_some(Branch::III)
    };
    if !evidence.is_conclusive() {
        return (branch, inconclusive("heart evidence is inconclusive".into()));
    }
    let Some(branch) = branch else {
        let why = if n % 2 == 1 {
            format!("odd degree but only {t}-transitive")
        } else {
            format!(
                "even degree, {t}-transitive, heart endomorphisms of dimension {}",
                evidence.endo_dimension.unwrap_or(0)
            )
        };
        return (None, inconclusive(why));
    };
    match unbounded {
        Unboundedness::Certificate { .. } => (Some(branch), Verdict::Certified),
        Unboundedness::Inconclusive { rule, reason } => {
            let rule = rule.map(|r| format!("{r}: ")).unwrap_or_default();
            (Some(branch), inconclusive(format!("unboundedness not established ({rule}{reason})")))
        }
    }
}

/// Heart evidence for a group, MeatAxe seeded by `seed`.
pub fn gather_evidence(group: &crate::permgroup::PermGroup, seed: u64) -> Result<Evidence, AuditError> {
    let heart = modrep::heart(group)?;
    let endo = modrep::endomorphism_algebra(&heart);
    Ok(Evidence {
        transitivity_degree: Some(group.transitivity_degree()),
        heart_dimension: Some(heart.dim()),
        endo_dimension: Some(endo.dimension()),
        irreducibility: (&modrep::is_irreducible(&heart, seed)).into(),
        indecomposability: (&modrep::indecomposable_in(&heart, &endo)).into(),
    })
}

pub fn audit(id: GroupId, n: usize) -> Result<AuditReport, AuditError> {
    audit_seeded(id, n, 0)
}

pub fn audit_seeded(id: GroupId, n: usize, seed: u64) -> Result<AuditReport, AuditError> {
    id.validate()?;
    let core = id.simple_core();
    let notes = vec![
        "certificates establish g-unboundedness: no nontrivial maps of minimal covers into the relevant projective linear groups".to_string(),
    ];
    if let Some(reason) = exclusion(id) {
        return Ok(AuditReport {
            group_id: id,
            simple_core: core,
            n,
            genus: genus_of(n).unwrap_or((n.saturating_sub(1)) / 2),
            condition_branch: None,
            evidence: Evidence::absent(),
            unbounded_certificate: Unboundedness::Inconclusive {
                rule: None,
                reason: "not attempted".into(),
            },
            verdict: Verdict::Excluded { reason },
            notes,
        });
    }
    let g = genus_of(n)?;
    if id.degree() != n {
        return Err(AuditError::DegreeMismatch {
            id,
            expected: id.degree(),
            given: n,
        });
    }
    if !core_is_simple(core) {
        return Ok(AuditReport {
            group_id: id,
            simple_core: core,
            n,
            genus: g,
            condition_branch: None,
            evidence: Evidence::absent(),
            unbounded_certificate: Unboundedness::Inconclusive {
                rule: None,
                reason: "not attempted".into(),
            },
            verdict: Verdict::Inconclusive {
                reason: format!("{core} is not a nonabelian simple group"),
            },
            notes,
        });
    }
    let built = core.build()?;
    let evidence = gather_evidence(&built.group, seed)?;
    let unbounded = check_unbounded(id, g);
    let (branch, verdict) = decide(n, &evidence, &unbounded);
    Ok(AuditReport {
        group_id: id,
        simple_core: core,
        n,
        genus: g,
        condition_branch: branch,
        evidence,
        unbounded_certificate: unbounded,
        verdict,
        notes,
    })
}
