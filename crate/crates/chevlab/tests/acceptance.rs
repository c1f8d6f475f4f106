//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Everything here is exact; there are no tolerances.

use chevlab::chevgen::Representation;
use chevlab::engine::{check_commutator_identities, closure, DEFAULT_BUDGET};
use chevlab::report::Verdict;
use chevlab::rings::{ideals_of, FiniteRing, IdealHandle};
use chevlab::rootsys::SystemKind;
use chevlab::theorems::{run_case, CaseSpec, Claim, Ctx};
use once_cell::sync::Lazy;

// shared so criteria 4, 5 and 6 reuse each other's enumerations
static CTX: Lazy<Ctx> = Lazy::new(|| Ctx::new(DEFAULT_BUDGET));

fn gate(criterion: usize, name: &str, pass: bool) {
    println!(
        "acceptance {criterion} ({name}): {}",
        if pass { "pass" } else { "FAIL" }
    );
    assert!(pass, "acceptance criterion {criterion} ({name}) failed");
}

fn principal(n: u32, d: u32) -> IdealHandle {
    IdealHandle::principal(FiniteRing::zmod(n), d)
}

fn birelative_core() -> Vec<(SystemKind, u32, u32, u32)> {
    vec![
        (SystemKind::A2, 8, 2, 2),
        (SystemKind::A2, 16, 2, 2),
        (SystemKind::A2, 16, 2, 4),
        (SystemKind::C2, 27, 3, 3),
        (SystemKind::C2, 27, 3, 9),
    ]
}

fn run(
    claim: Claim,
    phi: SystemKind,
    n: u32,
    di: u32,
    dj: Option<u32>,
) -> chevlab::report::VerdictReport {
    let ring = FiniteRing::zmod(n);
    let mut spec = CaseSpec::new(claim, phi, ring).with_i(principal(n, di));
    if let Some(dj) = dj {
        spec = spec.with_j(principal(n, dj));
    }
    run_case(&CTX, &spec)
}

#[test]
fn criterion_01_relation_suite() {
    let mut pass = true;
    for kind in [
        SystemKind::A2,
        SystemKind::A3,
        SystemKind::C2,
        SystemKind::G2,
    ] {
        for n in [2u32, 3, 4, 5, 7, 8, 9] {
            let rep = Representation::new(kind, FiniteRing::zmod(n));
            let rpt = rep.validate_relations();
            if rpt.verdict != Verdict::Holds {
                eprintln!(
                    "relations fail: {} over Z/{n}: {:?}",
                    kind.label(),
                    rpt.witness
                );
                pass = false;
            }
        }
    }
    gate(1, "relation suite", pass);
}

#[test]
fn criterion_02_baseline_closures() {
    let f2 = FiniteRing::zmod(2);
    let a2 = Representation::new(SystemKind::A2, f2);
    let c2 = Representation::new(SystemKind::C2, f2);
    let e_a2 = closure(
        &a2,
        &a2.elementary_conjugators(),
        "E(A2,F2)",
        DEFAULT_BUDGET,
    )
    .unwrap();
    let e_c2 = closure(
        &c2,
        &c2.elementary_conjugators(),
        "E(C2,F2)",
        DEFAULT_BUDGET,
    )
    .unwrap();
    gate(
        2,
        "baseline closures 168 and 720",
        e_a2.len() == 168 && e_c2.len() == 720,
    );
}

#[test]
fn criterion_03_relative_generation() {
    let mut pass = true;
    for (phi, n) in [
        (SystemKind::A2, 4u32),
        (SystemKind::A2, 8),
        (SystemKind::A2, 9),
        (SystemKind::C2, 9),
    ] {
        for ideal in ideals_of(FiniteRing::zmod(n)) {
            let rpt = run(Claim::T1, phi, n, ideal.generator(), None);
            if rpt.verdict != Verdict::Holds {
                eprintln!("T1 fails: {} Z/{n} I=({})", phi.label(), ideal.label());
                pass = false;
            }
        }
    }
    gate(3, "relative generation (T1)", pass);
}

#[test]
fn criterion_04_birelative_generation() {
    let mut pass = true;
    for (phi, n, di, dj) in birelative_core() {
        for claim in [Claim::T2, Claim::T3] {
            let rpt = run(claim, phi, n, di, Some(dj));
            if rpt.verdict != Verdict::Holds {
                eprintln!(
                    "{} fails: {} Z/{n} ({di}),({dj}): {:?}",
                    claim.label(),
                    phi.label(),
                    rpt.skip_reason
                );
                pass = false;
            }
            if phi == SystemKind::C2 && !(rpt.hypotheses.f2_free && rpt.hypotheses.theta) {
                eprintln!("side conditions unexpectedly false for C2 over Z/{n}");
                pass = false;
            }
        }
    }
    gate(4, "birelative generation (T2, T3)", pass);
}

#[test]
fn criterion_05_sandwich_chain() {
    let mut pass = true;
    for (phi, n, di, dj) in birelative_core() {
        let rpt = run(Claim::T4, phi, n, di, Some(dj));
        if rpt.verdict != Verdict::Holds {
            eprintln!(
                "T4 fails: {} Z/{n} ({di}),({dj}): {:?}",
                phi.label(),
                rpt.skip_reason
            );
            pass = false;
        }
    }
    // degenerate cases with IJ = 0 must collapse to the identity
    let rpt = run(Claim::T4, SystemKind::A2, 4, 2, Some(2));
    if rpt.verdict != Verdict::Holds || rpt.size("M") != Some(1) {
        eprintln!("degenerate Z/4 T4 case did not collapse");
        pass = false;
    }
    let dual = FiniteRing::dual(3).unwrap();
    let t = IdealHandle::parse(dual, "t").unwrap();
    let spec = CaseSpec::new(Claim::T4, SystemKind::A2, dual)
        .with_i(t.clone())
        .with_j(t);
    let rpt = run_case(&CTX, &spec);
    if rpt.verdict != Verdict::Holds || rpt.size("M") != Some(1) {
        eprintln!("degenerate dual-numbers T4 case did not collapse");
        pass = false;
    }
    gate(5, "inclusion chain (T4)", pass);
}

#[test]
fn criterion_06_corollaries() {
    let mut pass = true;
    for (phi, n, di, dj) in birelative_core() {
        for claim in [Claim::Cor1, Claim::Cor2] {
            let rpt = run(claim, phi, n, di, Some(dj));
            if rpt.verdict != Verdict::Holds {
                eprintln!(
                    "{} fails: {} Z/{n} ({di}),({dj}): {:?}",
                    claim.label(),
                    phi.label(),
                    rpt.skip_reason
                );
                pass = false;
            }
        }
    }
    gate(6, "corollaries (Cor1, Cor2)", pass);
}

#[test]
fn criterion_07_congruence_commutator() {
    let mut pass = true;
    for (n, di, dj) in [(4u32, 2u32, 2u32), (6, 2, 3)] {
        let rpt = run(Claim::T5, SystemKind::A2, n, di, Some(dj));
        if rpt.verdict != Verdict::Holds {
            eprintln!("T5 fails over Z/{n}: {:?}", rpt.skip_reason);
            pass = false;
        }
        if rpt.size("G").is_none_or(|g| g > 1_000_000) {
            eprintln!("ambient group over Z/{n} was not fully enumerated");
            pass = false;
        }
    }
    gate(7, "center-preimage commutator (T5)", pass);
}

#[test]
fn criterion_08_lemma_suite() {
    let mut pass = true;
    for (phi, n) in [
        (SystemKind::A2, 4u32),
        (SystemKind::A2, 8),
        (SystemKind::A2, 9),
        (SystemKind::C2, 9),
    ] {
        let ideals = ideals_of(FiniteRing::zmod(n));
        for i in &ideals {
            let rpt = run(Claim::L5, phi, n, i.generator(), None);
            if rpt.verdict != Verdict::Holds {
                eprintln!("L5 fails: {} Z/{n} ({})", phi.label(), i.label());
                pass = false;
            }
            for j in &ideals {
                let rpt = run(Claim::L3, phi, n, i.generator(), Some(j.generator()));
                if rpt.verdict != Verdict::Holds {
                    eprintln!(
                        "L3 fails: {} Z/{n} ({}),({})",
                        phi.label(),
                        i.label(),
                        j.label()
                    );
                    pass = false;
                }
            }
        }
    }
    for (kind, n) in [
        (SystemKind::A2, 8u32),
        (SystemKind::A3, 8),
        (SystemKind::C2, 9),
        (SystemKind::G2, 8),
    ] {
        let rep = Representation::new(kind, FiniteRing::zmod(n));
        if let Err(e) = check_commutator_identities(&rep, 10_000, 0xC0FFEE) {
            eprintln!(
                "commutator identity fails for {} over Z/{n}: {e}",
                kind.label()
            );
            pass = false;
        }
    }
    for phi in [SystemKind::A2, SystemKind::C2, SystemKind::G2] {
        let spec = CaseSpec::new(Claim::L7, phi, FiniteRing::zmod(8));
        let rpt = run_case(&CTX, &spec);
        if rpt.verdict != Verdict::Holds {
            eprintln!("L7 fails for {} over Z/8", phi.label());
            pass = false;
        }
    }
    gate(8, "lemma suite (L3, L5, C1-C5, L7)", pass);
}

#[test]
fn criterion_09_strictness_probe() {
    let mut pass = true;
    let mut comaximal_cases = 0;
    let mut recorded_cases = 0;
    for n in [6u32, 12, 15] {
        let ideals = ideals_of(FiniteRing::zmod(n));
        for (a, i) in ideals.iter().enumerate() {
            for j in ideals.iter().skip(a) {
                let comaximal = i.sum(j).unwrap().is_unit_ideal();
                let rpt = run(
                    Claim::Strictness,
                    SystemKind::A2,
                    n,
                    i.generator(),
                    Some(j.generator()),
                );
                if rpt.verdict != Verdict::Holds {
                    eprintln!(
                        "strictness fails: Z/{n} ({}),({}): {:?}",
                        i.label(),
                        j.label(),
                        rpt.skip_reason
                    );
                    pass = false;
                }
                if comaximal {
                    comaximal_cases += 1;
                    if !rpt.notes.iter().any(|s| s.contains("M = E(Phi,R,IJ)"))
                        && !i.is_unit_ideal()
                    {
                        eprintln!(
                            "comaximal pair without asserted equality: Z/{n} ({}),({})",
                            i.label(),
                            j.label()
                        );
                        pass = false;
                    }
                } else if rpt
                    .notes
                    .iter()
                    .any(|s| s.contains("recorded, not asserted"))
                {
                    recorded_cases += 1;
                }
            }
        }
    }
    gate(
        9,
        "strictness probe",
        pass && comaximal_cases >= 15 && recorded_cases >= 3,
    );
}

#[test]
#[ignore = "deep: G2 over Z/27, run with --ignored or the CLI --deep suite"]
fn criterion_10_deep_g2() {
    let ctx = Ctx::new(10_000_000);
    let ring = FiniteRing::zmod(27);
    let mut pass = true;
    for claim in [Claim::T2, Claim::T3] {
        let spec = CaseSpec::new(claim, SystemKind::G2, ring)
            .with_i(IdealHandle::principal(ring, 3))
            .with_j(IdealHandle::principal(ring, 3));
        let rpt = run_case(&ctx, &spec);
        if rpt.verdict != Verdict::Holds {
            eprintln!("deep {} fails: {:?}", claim.label(), rpt.skip_reason);
            pass = false;
        }
    }
    gate(10, "deep G2 over Z/27", pass);
}
