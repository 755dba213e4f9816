use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use heartlab::auditor::{self, AuditReport, Verdict};
use heartlab::galoisprobe::{self, CandidateVerdict, ProbeReport};
use heartlab::groupzoo::{self, GroupId};
use heartlab::modlinalg::Subspace;
use heartlab::modrep::{self, Decomposability, Irreducibility};
use serde::Serialize;

use crate::Outcome;

const EXIT_CERTIFIED: u8 = 0;
const EXIT_EXCLUDED: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Audit(AuditReport),
    Heart(HeartRecord),
    Probe(ProbeReport),
    ProbeBatch(ProbeBatch),
    Zoo(ZooListing),
}

impl<P: Into<Payload>> Outcome<P> {
    pub fn boxed(self) -> Outcome<Payload> {
        Outcome {
            payload: self.payload.into(),
            citations: self.citations,
            summary: self.summary,
            exit: self.exit,
        }
    }
}

macro_rules! payload_from {
    ($($ty:ident => $variant:ident),*) => {
        $(impl From<$ty> for Payload {
            fn from(v: $ty) -> Payload {
                Payload::$variant(v)
            }
        })*
    };
}

payload_from!(AuditReport => Audit, HeartRecord => Heart, ProbeReport => Probe, ProbeBatch => ProbeBatch, ZooListing => Zoo);

fn parse_group(spec: &str) -> Result<GroupId> {
    let id: GroupId = spec.parse().with_context(|| format!("bad group {spec:?}"))?;
    id.validate()?;
    Ok(id)
}

pub fn audit(spec: &str, n: Option<usize>, seed: u64) -> Result<Outcome<AuditReport>> {
    let id = parse_group(spec)?;
    let report = auditor::audit_seeded(id, n.unwrap_or_else(|| id.degree()), seed)?;
    let (exit, word) = match &report.verdict {
        Verdict::Certified => (EXIT_CERTIFIED, "certified".to_string()),
        Verdict::Excluded { reason } => (EXIT_EXCLUDED, format!("excluded: {reason}")),
        Verdict::Inconclusive { reason } => (EXIT_INCONCLUSIVE, format!("inconclusive: {reason}")),
    };
    let rule = report
        .unbounded_certificate
        .rule()
        .map(|r| format!(", rule {r}"))
        .unwrap_or_default();
    let summary = format!("{id}: n={} g={} {word}{rule}", report.n, report.genus);
    Ok(Outcome {
        citations: report.citations(),
        payload: report,
        summary,
        exit,
    })
}

#[derive(Debug, Serialize)]
pub struct HeartRecord {
    group: GroupId,
    degree: usize,
    order: String,
    transitivity_degree: usize,
    dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    endomorphisms: Option<EndoRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    meataxe: Option<MeatAxeRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<DecompositionRecord>,
}

#[derive(Debug, Serialize)]
struct EndoRecord {
    dimension: usize,
    scalars_only: bool,
}

#[derive(Debug, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
enum MeatAxeRecord {
    Irreducible { absolutely_irreducible: Option<bool> },
    Reducible { witness_dimension: usize, witness_rows: Vec<String> },
    Inconclusive { attempts: usize },
}

#[derive(Debug, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
enum DecompositionRecord {
    Indecomposable,
    Decomposable { image_rows: Vec<String>, kernel_rows: Vec<String> },
    Inconclusive { endo_dimension: usize },
}

fn rows(space: &Subspace) -> Vec<String> {
    space.to_hex_rows().unwrap_or_default()
}

pub fn heart(spec: &str, endo: bool, meataxe: bool, indecomposable: bool, seed: u64) -> Result<Outcome<HeartRecord>> {
    let id = parse_group(spec)?;
    let group = id.build()?.group;
    let rep = modrep::heart(&group)?;
    let algebra = (endo || indecomposable).then(|| modrep::endomorphism_algebra(&rep));
    let mut summary = format!("{id}: heart of dimension {}", rep.dim());

    let endomorphisms = algebra.as_ref().filter(|_| endo).map(|a| {
        summary.push_str(&format!(", endomorphisms of dimension {}", a.dimension()));
        EndoRecord {
            dimension: a.dimension(),
            scalars_only: a.dimension() == 1,
        }
    });
    let meataxe = meataxe.then(|| match modrep::is_irreducible(&rep, seed) {
        Irreducibility::Irreducible => {
            summary.push_str(", irreducible");
            MeatAxeRecord::Irreducible {
                absolutely_irreducible: modrep::is_absolutely_irreducible(&rep, seed),
            }
        }
        Irreducibility::Reducible { witness } => {
            summary.push_str(&format!(", reducible (invariant subspace of dimension {})", witness.dim()));
            MeatAxeRecord::Reducible {
                witness_dimension: witness.dim(),
                witness_rows: rows(&witness),
            }
        }
        Irreducibility::Inconclusive { attempts } => {
            summary.push_str(", irreducibility inconclusive");
            MeatAxeRecord::Inconclusive { attempts }
        }
    });
    let decomposition = algebra.as_ref().filter(|_| indecomposable).map(|a| {
        match modrep::indecomposable_in(&rep, a) {
            Decomposability::Indecomposable => {
                summary.push_str(", indecomposable");
                DecompositionRecord::Indecomposable
            }
            Decomposability::Decomposable { image, kernel, .. } => {
                summary.push_str(&format!(", splits as {} + {}", image.dim(), kernel.dim()));
                DecompositionRecord::Decomposable {
                    image_rows: rows(&image),
                    kernel_rows: rows(&kernel),
                }
            }
            Decomposability::Inconclusive { endo_dimension } => {
                summary.push_str(", decomposition search too large");
                DecompositionRecord::Inconclusive { endo_dimension }
            }
        }
    });
    let citations = if endo { vec!["klemm".to_string()] } else { Vec::new() };
    Ok(Outcome {
        payload: HeartRecord {
            group: id,
            degree: group.degree(),
            order: group.order().to_string(),
            transitivity_degree: group.transitivity_degree(),
            dimension: rep.dim(),
            endomorphisms,
            meataxe,
            decomposition,
        },
        citations,
        summary,
        exit: 0,
    })
}

#[derive(Debug, Serialize)]
pub struct ProbeBatch {
    reports: Vec<ProbeReport>,
}

pub fn read_polynomials(path: &Path) -> Result<Vec<String>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let polys: Vec<String> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect();
    if polys.is_empty() {
        bail!("{} holds no polynomials", path.display());
    }
    Ok(polys)
}

fn describe(report: &ProbeReport) -> String {
    let verdicts: Vec<String> = report
        .candidates
        .iter()
        .map(|c| {
            let v = match &c.verdict {
                CandidateVerdict::Consistent { exact: true } => "consistent".to_string(),
                CandidateVerdict::Consistent { exact: false } => "consistent with sampled types".to_string(),
                CandidateVerdict::Inconsistent { witness, prime } => format!("inconsistent ({witness} mod {prime})"),
                CandidateVerdict::InsufficientData => "insufficient data".to_string(),
            };
            format!("{} {v}", c.group)
        })
        .collect();
    format!(
        "{}: {} primes, {} ramified, irreducibility evidence {}{}{}",
        report.polynomial,
        report.primes_used.len(),
        report.ramified_primes.len(),
        report.irreducibility_evidence,
        if verdicts.is_empty() { "" } else { "; " },
        verdicts.join("; ")
    )
}

/// Splits on commas that sit outside parentheses.
fn split_candidates(list: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in list.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&list[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&list[start..]);
    parts.into_iter().map(str::trim).filter(|p| !p.is_empty()).collect()
}

pub fn probe(polys: &[String], batch: bool, primes: usize, candidates: &[String], seed: u64) -> Result<Outcome<Payload>> {
    let ids = candidates
        .iter()
        .flat_map(|c| split_candidates(c))
        .map(parse_group)
        .collect::<Result<Vec<_>>>()?;
    let mut reports = Vec::with_capacity(polys.len());
    for text in polys {
        let f = galoisprobe::parse_poly(text).with_context(|| format!("bad polynomial {text:?}"))?;
        reports.push(galoisprobe::probe(&f, primes, &ids, seed)?);
    }
    let summary = reports.iter().map(describe).collect::<Vec<_>>().join("\n");
    let payload = if batch {
        Payload::ProbeBatch(ProbeBatch { reports })
    } else {
        Payload::Probe(reports.pop().expect("one polynomial"))
    };
    Ok(Outcome {
        payload,
        citations: Vec::new(),
        summary,
        exit: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::split_candidates;

    #[test]
    fn candidate_lists() {
        assert_eq!(split_candidates("A5,S5"), ["A5", "S5"]);
        assert_eq!(split_candidates("PSL(3,2), PGL(2,7)"), ["PSL(3,2)", "PGL(2,7)"]);
        assert_eq!(split_candidates(""), Vec::<&str>::new());
    }
}

#[derive(Debug, Serialize)]
pub struct ZooListing {
    groups: Vec<ZooEntry>,
    facts: Vec<FactEntry>,
}

#[derive(Debug, Serialize)]
struct ZooEntry {
    group: GroupId,
    degree: usize,
    order: String,
    simple_core: GroupId,
    #[serde(skip_serializing_if = "Option::is_none")]
    excluded: Option<String>,
}

#[derive(Debug, Serialize)]
struct FactEntry {
    family: auditor::Family,
    selector: String,
    bound: String,
    flags: Vec<auditor::FactFlag>,
    cover_rule: Option<auditor::CoverRule>,
    citations: Vec<String>,
}

pub fn zoo(max_degree: usize) -> Result<Outcome<ZooListing>> {
    let mut ids: Vec<GroupId> = (5..=max_degree)
        .flat_map(|n| [GroupId::Alternating(n), GroupId::Symmetric(n)])
        .collect();
    ids.extend(groupzoo::MATHIEU_DEGREES.map(GroupId::Mathieu));
    for (m, q) in groupzoo::projective_parameters(max_degree) {
        ids.push(GroupId::Psl { m, q });
        ids.push(GroupId::Pgl { m, q });
    }
    ids.retain(|id| id.degree() <= max_degree);
    ids.sort_by_key(|id| (id.degree(), *id));
    let groups: Vec<ZooEntry> = ids
        .into_iter()
        .map(|id| ZooEntry {
            group: id,
            degree: id.degree(),
            order: id.order_formula().to_string(),
            simple_core: id.simple_core(),
            excluded: auditor::exclusion(id),
        })
        .collect();
    let facts: Vec<FactEntry> = auditor::fact_table()
        .iter()
        .map(|f| FactEntry {
            family: f.family(),
            selector: f.selector().to_string(),
            bound: f.bound_text(),
            flags: f.flags().to_vec(),
            cover_rule: f.cover_rule(),
            citations: f.citations().iter().map(|c| c.to_string()).collect(),
        })
        .collect();
    let citations: BTreeSet<String> = facts.iter().flat_map(|f| f.citations.iter().cloned()).collect();
    let registry = auditor::citation_registry();
    let mut summary = format!("{} groups up to degree {max_degree}, {} fact rows", groups.len(), facts.len());
    for key in &citations {
        summary.push_str(&format!("\n  [{key}] {}", registry.get(key).map_or("", String::as_str)));
    }
    Ok(Outcome {
        payload: ZooListing { groups, facts },
        citations: citations.into_iter().collect(),
        summary,
        exit: 0,
    })
}
