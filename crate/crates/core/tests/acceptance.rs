//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use heartlab::auditor::{self, citation_registry, cyclotomic_obstruction, genus_of, Rule, Unboundedness, Verdict};
use heartlab::galoisprobe::{self, parse_poly, CandidateVerdict, FrobeniusClass};
use heartlab::groupzoo::{self, GroupId};
use heartlab::modrep::{self, Decomposability, Irreducibility};
use heartlab::permgroup::PermGroup;
use num_integer::Integer;

const PER_GROUP_ENDO_LIMIT: Duration = Duration::from_secs(10);
const TOTAL_ENDO_LIMIT: Duration = Duration::from_secs(120);
const CONSTRUCTION_LIMIT: Duration = Duration::from_secs(30);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn id(s: &str) -> GroupId {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn build(s: &str) -> PermGroup {
    id(s).build().expect("zoo group").group
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const ENDO_SUITE: [&str; 10] = [
    "M11", "M12", "M22", "M23", "M24", "PSL(3,2)", "PSL(2,8)", "PSL(3,3)", "PSL(3,4)", "PSL(4,3)",
];

fn heart_endomorphisms() -> Outcome {
    let start = Instant::now();
    let mut slowest = (Duration::ZERO, "");
    for name in ENDO_SUITE {
        let t = Instant::now();
        let heart = modrep::heart(&build(name)).map_err(|e| e.to_string())?;
        let dim = modrep::endomorphism_algebra(&heart).dimension();
        let elapsed = t.elapsed();
        ensure(dim == 1, || format!("{name}: endomorphism dimension {dim}"))?;
        ensure(elapsed < PER_GROUP_ENDO_LIMIT, || format!("{name}: {elapsed:?}"))?;
        if elapsed > slowest.0 {
            slowest = (elapsed, name);
        }
    }
    let total = start.elapsed();
    ensure(total < TOTAL_ENDO_LIMIT, || format!("total {total:?}"))?;
    Ok(format!(
        "10 hearts with scalar endomorphisms, total {total:.2?}, slowest {} {:.2?}",
        slowest.1, slowest.0
    ))
}

fn irreducibility_pattern() -> Outcome {
    for name in ["M11", "M12", "PSL(3,3)", "PSL(4,3)"] {
        let heart = modrep::heart(&build(name)).map_err(|e| e.to_string())?;
        let abs = modrep::is_absolutely_irreducible(&heart, 0);
        ensure(abs == Some(true), || format!("{name}: absolute irreducibility {abs:?}"))?;
    }
    for name in ["M22", "M23", "M24", "PSL(3,2)", "PSL(3,4)"] {
        let heart = modrep::heart(&build(name)).map_err(|e| e.to_string())?;
        match modrep::is_irreducible(&heart, 0) {
            Irreducibility::Reducible { witness } => {
                ensure(witness.dim() > 0 && witness.dim() < heart.dim(), || {
                    format!("{name}: witness of dimension {}", witness.dim())
                })?;
                ensure(witness.is_invariant_under(heart.generators()), || {
                    format!("{name}: witness is not invariant")
                })?;
            }
            other => return Err(format!("{name}: expected reducible, got {other:?}")),
        }
    }
    for name in ["M22", "M23", "M24"] {
        let heart = modrep::heart(&build(name)).map_err(|e| e.to_string())?;
        let verdict = modrep::is_indecomposable(&heart);
        ensure(matches!(verdict, Decomposability::Indecomposable), || {
            format!("{name}: {verdict:?}")
        })?;
    }
    Ok("4 absolutely irreducible, 5 reducible with invariant witnesses, 3 indecomposable".into())
}

fn klemm_cross_validation() -> Outcome {
    let corpus = [
        "M11", "M12", "M22", "M23", "M24", "PSL(3,2)", "PSL(2,8)", "PSL(3,3)", "PSL(3,4)", "S5", "S6", "S8",
        "A5", "A7", "A9",
    ];
    let mut groups: Vec<(String, PermGroup)> = corpus.iter().map(|s| (s.to_string(), build(s))).collect();
    for n in [5, 7, 8, 12] {
        groups.push((format!("C{n}"), groupzoo::cyclic(n).unwrap()));
    }
    for n in [5, 6, 9] {
        groups.push((format!("D{n}"), groupzoo::dihedral(n).unwrap()));
    }
    let mut brute_checked = 0;
    for (name, group) in &groups {
        let n = group.degree();
        ensure((5..=24).contains(&n), || format!("{name}: degree {n}"))?;
        let t = group.transitivity_degree();
        let heart = modrep::heart(group).map_err(|e| e.to_string())?;
        let dim = modrep::commutant_direct(&heart).dimension();
        let hypothesis = if n % 2 == 1 { t >= 2 } else { t >= 3 };
        ensure((dim == 1) == hypothesis, || {
            format!("{name}: n={n}, {t}-transitive, endomorphism dimension {dim}")
        })?;
        if t < 2 {
            ensure(dim > 1, || format!("{name}: control has dimension {dim}"))?;
        }
        if heart.dim() <= 4 {
            let brute = common::brute_commutant_dimension(heart.generators());
            ensure(brute == dim, || format!("{name}: brute force {brute}, direct {dim}"))?;
            brute_checked += 1;
        }
    }
    Ok(format!(
        "{} groups agree with the transitivity hypothesis, {brute_checked} checked by enumeration",
        groups.len()
    ))
}

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn oracle_order(m: usize, q: u64, special: bool) -> u128 {
    let q = q as u128;
    let mut order = q.pow((m * (m - 1) / 2) as u32);
    for i in 2..=m as u32 {
        order *= q.pow(i) - 1;
    }
    if special {
        order / gcd(m as u64, q as u64 - 1) as u128
    } else {
        order
    }
}

fn group_constructions() -> Outcome {
    let start = Instant::now();
    let params = groupzoo::projective_parameters(100);
    for &(m, q) in &params {
        for special in [true, false] {
            let gid = if special { GroupId::Psl { m, q } } else { GroupId::Pgl { m, q } };
            let order = gid.build().map_err(|e| e.to_string())?.group.order();
            let expected = oracle_order(m, q, special);
            ensure(order == expected, || format!("{gid}: chain {order}, formula {expected}"))?;
        }
    }
    for (name, expected) in [("M11", 7920), ("M12", 95040)] {
        let g = build(name);
        let elements = common::bfs_closure(g.generators());
        ensure(elements.len() == expected && g.order() == expected as u128, || {
            format!("{name}: enumeration {}, chain {}", elements.len(), g.order())
        })?;
        let brute = common::transitivity_by_tuples(&elements, g.degree());
        ensure(brute == g.transitivity_degree(), || format!("{name}: tuples say {brute}"))?;
    }
    for (name, t) in [("M11", 4), ("M12", 5), ("M22", 3), ("M23", 4), ("M24", 5)] {
        let got = build(name).transitivity_degree();
        ensure(got == t, || format!("{name}: {got}-transitive"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < CONSTRUCTION_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{} projective pairs, Mathieu orders and transitivity, {elapsed:.2?}", params.len()))
}

fn auditor_coverage() -> Outcome {
    let mut universe: Vec<GroupId> = [11, 12, 22, 23, 24].map(GroupId::Mathieu).to_vec();
    for (m, q) in groupzoo::projective_parameters(100) {
        universe.push(GroupId::Psl { m, q });
        universe.push(GroupId::Pgl { m, q });
    }
    for n in 5..=16 {
        universe.push(GroupId::Alternating(n));
        universe.push(GroupId::Symmetric(n));
    }
    let excluded = |m: usize, q: u64| auditor::EXCLUDED_EVEN.contains(&(m, q));
    let registry = citation_registry();
    let (mut certified, mut excluded_count) = (0, 0);
    universe.retain(|g| g.degree() >= 5 || auditor::exclusion(*g).is_some());
    for gid in universe {
        let expect_certified = match gid {
            GroupId::Mathieu(_) => true,
            GroupId::Psl { m, q } | GroupId::Pgl { m, q } if q % 2 == 0 => !excluded(m, q),
            GroupId::Psl { m, .. } | GroupId::Pgl { m, .. } => m >= 3,
            GroupId::Alternating(n) | GroupId::Symmetric(n) => (5..=16).contains(&n),
        };
        let expect_excluded = matches!(gid, GroupId::Psl { m, q } | GroupId::Pgl { m, q } if excluded(m, q));
        let report = auditor::audit(gid, gid.degree()).map_err(|e| format!("{gid}: {e}"))?;
        match &report.verdict {
            Verdict::Certified => {
                ensure(expect_certified, || format!("{gid}: unexpectedly certified"))?;
                certified += 1;
            }
            Verdict::Excluded { .. } => {
                ensure(expect_excluded, || format!("{gid}: unexpectedly excluded"))?;
                excluded_count += 1;
            }
            Verdict::Inconclusive { reason } => {
                ensure(!expect_certified && !expect_excluded, || format!("{gid}: inconclusive ({reason})"))?;
            }
        }
        for key in report.citations() {
            ensure(registry.contains_key(&key), || format!("{gid}: unknown citation {key}"))?;
        }
        if gid == GroupId::Mathieu(22) {
            ensure(report.unbounded_certificate.rule() == Some(Rule::R3), || {
                format!("M22 certificate uses {:?}", report.unbounded_certificate.rule())
            })?;
        }
        if gid == (GroupId::Psl { m: 4, q: 3 }) {
            ensure(report.genus == 19 && report.verdict.is_certified(), || "PSL(4,3) g=19".into())?;
            let bound = auditor::min_projective_degree_bound(gid).map_err(|e| e.to_string())?;
            ensure(bound.bound == 26, || format!("PSL(4,3) bound {:?}", bound.bound))?;
        }
        if let Unboundedness::Certificate { steps, .. } = &report.unbounded_certificate {
            ensure(!steps.is_empty(), || format!("{gid}: empty certificate"))?;
        }
    }
    ensure(excluded_count == 6, || format!("{excluded_count} excluded verdicts"))?;
    Ok(format!("{certified} certified, {excluded_count} excluded, citations resolve"))
}

fn inequality_checks() -> Outcome {
    for q in [4u64, 8, 16] {
        ensure((q * q * q + q * q + q) / 2 < q * q * q, || format!("q={q}"))?;
    }
    ensure(cyclotomic_obstruction(7, 3), || "cyclotomic_obstruction(7,3)".into())?;
    for n in 5..=100usize {
        let g = genus_of(n).map_err(|e| e.to_string())?;
        let ok = if n % 2 == 1 { 2 * g + 1 == n } else { 2 * g + 2 == n };
        ensure(ok, || format!("n={n}: g={g}"))?;
    }
    Ok("three inequalities, cyclotomic obstruction, 96 genus identities".into())
}

fn probe_checks() -> Outcome {
    let quartic = parse_poly("x^4+1").unwrap();
    let report = galoisprobe::probe(&quartic, 50, &[id("S4")], 0).map_err(|e| e.to_string())?;
    ensure(!report.irreducibility_evidence, || "x^4+1 looked irreducible".into())?;
    ensure(report.primes_used.len() == 50, || "prime count".into())?;
    for p in (2u64..250).filter(|&p| heartlab::finitefield::is_prime(p)) {
        ensure(common::has_small_divisor(&[1, 0, 0, 0, 1], p), || format!("x^4+1 irreducible mod {p}"))?;
    }
    for entry in &report.histogram {
        ensure(entry.cycle_type.degree() == 4, || format!("type {}", entry.cycle_type))?;
    }

    let quintic = parse_poly("x^5-x-1").unwrap();
    let coeffs = [-1, -1, 0, 0, 0, 1];
    let report = galoisprobe::probe(&quintic, 100, &[id("A5")], 0).map_err(|e| e.to_string())?;
    match &report.candidates[0].verdict {
        CandidateVerdict::Inconsistent { witness, prime } => {
            ensure(!witness.is_even(), || format!("witness {witness} is even"))?;
            let oracle = common::small_factor_degrees(&coeffs, *prime);
            ensure(oracle == witness.lengths(), || format!("mod {prime}: oracle {oracle:?}, probe {witness}"))?;
        }
        other => return Err(format!("A5 verdict {other:?}")),
    }
    for &p in &report.primes_used {
        if let FrobeniusClass::Unramified { cycle_type } = galoisprobe::cycle_type_mod_p(&quintic, p).unwrap() {
            ensure(cycle_type.degree() == 5, || format!("mod {p}: {cycle_type}"))?;
        }
    }

    let render = || serde_json::to_string(&galoisprobe::probe(&quintic, 100, &[id("A5"), id("S5")], 0).unwrap());
    let first = render().map_err(|e| e.to_string())?;
    ensure((0..3).all(|_| render().ok().as_deref() == Some(first.as_str())), || "reports differ".into())?;
    Ok("x^4+1 never irreducible, odd witness refutes A5, reports repeat exactly".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("heart endomorphism suite", heart_endomorphisms),
        ("irreducibility pattern", irreducibility_pattern),
        ("transitivity cross-validation", klemm_cross_validation),
        ("group constructions", group_constructions),
        ("auditor coverage", auditor_coverage),
        ("inequality micro-checks", inequality_checks),
        ("probe determinism and soundness", probe_checks),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panic".into())));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{:.2?}]", i + 1, t.elapsed()),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL {name} ({detail}) [{:.2?}]", i + 1, t.elapsed());
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
