//! Acceptance suite. Prints one PASS/FAIL line per criterion with its
//! elapsed time against a fixed budget. All comparisons are exact: there
//! are no floating-point tolerances anywhere below.
//!
//! A criterion whose failure is a confirmed defect in the statement being
//! checked (not in this crate) is listed in `KNOWN_FAILURES`: it still
//! prints FAIL, but the process only exits non-zero if the observed
//! violations differ from the recorded ones.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{all_groups_of_order, canonical_form_of, GROUP_COUNTS};
use psigroup::analysis::{psi, psi_report, semidirect_lemma_check, structure_report, thresholds};
use psigroup::arith::{
    euler_phi, lemma28_product, phi_lower_bound, primes_below, psi_cyclic, ramanujan_partial,
    ratio, Rational,
};
use psigroup::families::*;
use psigroup::harness::{check_theorem, Corpus, CorpusEntry, TheoremId, STANDARD_MAX_ORDER};

/// Criterion number and the labels of the violations it is known to report.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    9,
    "every violation is a non-cyclic p-group with a cyclic subgroup of index p",
)];

struct Outcome {
    pass: bool,
    detail: String,
    /// For criteria in `KNOWN_FAILURES`: whether the failure matches the
    /// recorded one exactly.
    matches_known: bool,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
            matches_known: false,
        }
    }
}

fn main() -> ExitCode {
    let t0 = Instant::now();
    let corpus = Corpus::standard(STANDARD_MAX_ORDER).expect("standard corpus builds");
    let corpus_time = t0.elapsed();
    println!(
        "corpus: {} entries, orders <= {STANDARD_MAX_ORDER}, built in {:.2}s",
        corpus.len(),
        corpus_time.as_secs_f64()
    );

    type Criterion<'a> = (u32, &'a str, Duration, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (1, "exact values", secs(1), Box::new(exact_values)),
        (
            2,
            "7/11 bound and its equality family",
            secs(60),
            Box::new(|| seven_elevenths(&corpus)),
        ),
        (
            3,
            "C_4k and C_2k x C_2 identities",
            secs(5),
            Box::new(prop2_identities),
        ),
        (
            4,
            "1/(q-1) and odd-order 1/2 bounds",
            secs(60),
            Box::new(|| q_bounds(&corpus)),
        ),
        (
            5,
            "closed form of psi(C_n), n <= 2000",
            secs(30),
            Box::new(closed_form),
        ),
        (6, "totient lower bound", secs(30), Box::new(totient_bound)),
        (
            7,
            "semidirect product formula",
            secs(60),
            Box::new(semidirect),
        ),
        (
            8,
            "cyclic normal Sylow inequality",
            secs(60),
            Box::new(|| sylow_product(&corpus)),
        ),
        (
            9,
            "solvability criteria",
            secs(120),
            Box::new(|| solvability(&corpus)),
        ),
        (10, "Ramanujan product", secs(10), Box::new(ramanujan)),
        (
            11,
            "catalog integrity",
            secs(120),
            Box::new(catalog_integrity),
        ),
    ];

    let mut unexpected = 0;
    let mut passed = 0;
    for (id, name, budget, run) in &criteria {
        let start = Instant::now();
        let mut outcome = run();
        let mut elapsed = start.elapsed();
        if matches!(id, 2 | 4 | 8 | 9) {
            // the shared corpus is part of each corpus-based budget
            elapsed += corpus_time;
        }
        let in_time = elapsed <= *budget;
        let pass = outcome.pass && in_time;
        let known = KNOWN_FAILURES.iter().find(|(k, _)| k == id);
        if let (false, Some((_, why))) = (outcome.pass, known) {
            if outcome.matches_known {
                outcome.detail = format!("{}; known: {why}", outcome.detail);
            }
        }
        println!(
            "criterion {id:>2}: {} {name} [{:.2}s / {}s] {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            budget.as_secs(),
            outcome.detail
        );
        if pass {
            passed += 1;
        } else if !(known.is_some() && outcome.matches_known && in_time) {
            unexpected += 1;
        }
    }
    println!(
        "{passed}/{} criteria passed, {unexpected} unexpected failure(s)",
        criteria.len()
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn exact_values() -> Outcome {
    let s3 = psi(&symmetric(3).unwrap());
    let a5 = psi(&alternating(5).unwrap());
    let e8 = psi(&abelian(&[2, 2, 2]).unwrap());
    let c4 = psi(&cyclic(4).unwrap());
    let phi60 = euler_phi(60).unwrap();
    let contrast = thresholds::one_fifth_n_phi(&psi_report(&alternating(5).unwrap()));
    let ok = s3 == 13
        && a5 == 211
        && e8 == 15
        && c4 == 11
        && phi60 == 16
        && contrast == ratio(192, 1)
        && ratio(a5, 1) > contrast;
    Outcome::new(
        ok,
        format!("psi(S3)={s3} psi(A5)={a5} psi(C2^3)={e8} psi(C4)={c4} phi(60)={phi60} 60*16/5={contrast}"),
    )
}

/// `C_2k x C_2` with `k` odd: abelian of order `4k` and exponent `2k`.
fn is_equality_shape(e: &CorpusEntry) -> bool {
    let g = e.group();
    let n = g.order();
    g.is_abelian() && n.is_multiple_of(4) && (n / 4) % 2 == 1 && g.exponent_max() == n / 2
}

fn seven_elevenths(corpus: &Corpus) -> Outcome {
    let r = check_theorem(TheoremId::T1, corpus);
    let witnesses: BTreeSet<&str> = r.equality_witnesses.iter().map(String::as_str).collect();
    let expected: BTreeSet<&str> = corpus
        .entries()
        .iter()
        .filter(|e| !e.group().is_cyclic() && is_equality_shape(e))
        .map(|e| e.label())
        .collect();
    let prop2_present = (1..=25)
        .step_by(2)
        .all(|k| witnesses.contains(format!("C{}xC2", 2 * k).as_str()));
    Outcome::new(
        r.passed() && witnesses == expected && prop2_present && r.checked > 400,
        format!(
            "{} non-cyclic groups, {} counterexamples, {} equality witnesses (all C_2k x C_2, k odd: {})",
            r.checked,
            r.counterexamples.len(),
            witnesses.len(),
            witnesses == expected
        ),
    )
}

fn prop2_identities() -> Outcome {
    let mut ok = check_theorem(TheoremId::P2, &Corpus::builtin(1).unwrap()).passed();
    for k in (1..=25u64).step_by(2) {
        let ck = psi(&cyclic(k).unwrap());
        let c4k = psi(&cyclic(4 * k).unwrap());
        let g = psi(&prop2_group(k).unwrap());
        ok &= u128::from(c4k) == psi_cyclic(4 * k).unwrap()
            && c4k == 11 * ck
            && g == 7 * ck
            && ratio(g, c4k) == ratio(7, 11);
    }
    Outcome::new(ok, "k = 1, 3, ..., 25")
}

fn q_bounds(corpus: &Corpus) -> Outcome {
    let t3 = check_theorem(TheoremId::T3, corpus);
    let c4 = check_theorem(TheoremId::C4, corpus);
    let odd_checked: BTreeSet<&str> = corpus
        .entries()
        .iter()
        .filter(|e| e.order() % 2 == 1 && !e.group().is_cyclic())
        .map(|e| e.label())
        .collect();
    let required = ["C3xC3", "C7:C3[2]", "He27", "C9:C3[4]"];
    let has_required = required.iter().all(|l| odd_checked.contains(l));
    Outcome::new(
        t3.passed() && c4.passed() && has_required && c4.checked == odd_checked.len(),
        format!(
            "T3 {} groups / {} counterexamples; odd order {} groups / {} counterexamples (incl. {})",
            t3.checked,
            t3.counterexamples.len(),
            c4.checked,
            c4.counterexamples.len(),
            required.join(", ")
        ),
    )
}

fn closed_form() -> Outcome {
    let bad: Vec<u64> = (1..=2000u64)
        .filter(|&n| u128::from(psi(&cyclic(n).unwrap())) != psi_cyclic(n).unwrap())
        .collect();
    Outcome::new(
        bad.is_empty(),
        format!("2000 cyclic groups enumerated, mismatches {bad:?}"),
    )
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn totient_bound() -> Outcome {
    let failures = (2..=100_000u64)
        .filter(|&n| !phi_lower_bound(n).unwrap().1)
        .count();
    let oracle_mismatch = (1..=10_000u64)
        .filter(|&n| euler_phi(n).unwrap() != (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64)
        .count();
    Outcome::new(
        failures == 0 && oracle_mismatch == 0,
        format!("bound failures {failures} for n <= 10^5; phi vs gcd count mismatches {oracle_mismatch} for n <= 10^4"),
    )
}

fn semidirect() -> Outcome {
    let r = check_theorem(TheoremId::L2_2, &Corpus::builtin(1).unwrap());
    // spot-check the element-wise parts on the smallest non-trivial case
    let c = semidirect_lemma_check(7, 3, 2).unwrap();
    let parts = c.trivial_or_fixed_point_free && c.noncentral_orders_preserved && c.formula == 85;
    Outcome::new(
        r.passed() && parts && r.checked > 0,
        format!(
            "{} triples (m, k, e), {} failures",
            r.checked,
            r.counterexamples.len()
        ),
    )
}

fn sylow_product(corpus: &Corpus) -> Outcome {
    let r = check_theorem(TheoremId::P2_10, corpus);
    Outcome::new(
        r.passed() && r.checked > 0,
        format!(
            "{} groups with a cyclic normal Sylow subgroup, {} violations",
            r.checked,
            r.counterexamples.len()
        ),
    )
}

fn solvability(corpus: &Corpus) -> Outcome {
    let ids = [
        TheoremId::T6,
        TheoremId::C7,
        TheoremId::C8,
        TheoremId::C9,
        TheoremId::T10,
        TheoremId::T11,
    ];
    let results: Vec<_> = ids.iter().map(|&id| check_theorem(id, corpus)).collect();

    let s3 = structure_report(&symmetric(3).unwrap());
    let s3_ok = s3.theorem6_hypothesis
        && thresholds::theorem6(&psi_report(&symmetric(3).unwrap())) == Some(ratio(21, 2))
        && s3.first_case().is_some();
    let a5 = alternating(5).unwrap();
    let a5r = psi_report(&a5);
    let a5s = structure_report(&a5);
    let a5_ok = !a5s.solvable
        && !a5s.theorem6_hypothesis
        && !thresholds::meets(&a5r, &thresholds::theorem10(&a5r));

    let mut summary = Vec::new();
    let mut violations: BTreeSet<String> = BTreeSet::new();
    for r in &results {
        summary.push(format!(
            "{} {}/{}",
            r.theorem_id,
            r.counterexamples.len(),
            r.checked
        ));
        violations.extend(r.counterexamples.iter().map(|c| c.label.clone()));
    }
    let pass = results.iter().all(|r| r.passed()) && s3_ok && a5_ok;

    // Known: the three-way case split cannot hold for a non-cyclic p-group
    // (p = q), although solvability and the index-p subgroup do.
    let p_group_violation = |label: &str| {
        let e = corpus.get(label).unwrap();
        let f = e.report().factorization();
        let s = e.structure();
        f.is_prime_power()
            && !e.group().is_cyclic()
            && s.solvable
            && s.sylow_has_cyclic_index_p
            && s.first_case().is_none()
    };
    let only_trichotomy = results
        .iter()
        .filter(|r| !r.passed())
        .all(|r| matches!(r.theorem_id, TheoremId::T6 | TheoremId::C7 | TheoremId::C8));
    let matches_known = !pass
        && s3_ok
        && a5_ok
        && only_trichotomy
        && violations.iter().all(|l| p_group_violation(l));

    Outcome {
        pass,
        detail: format!(
            "violations/checked: {}; S3 meets 13 >= 21/2 and classifies: {s3_ok}; A5 non-solvable and fails T6/T10: {a5_ok}; violating groups: {}",
            summary.join(", "),
            violations.into_iter().collect::<Vec<_>>().join(" ")
        ),
        matches_known,
    }
}

fn ramanujan() -> Outcome {
    let r = check_theorem(TheoremId::P2_7, &Corpus::builtin(1).unwrap());
    let five_halves = ratio(5, 2);
    let mut prev: Option<Rational> = None;
    let mut monotone = true;
    for s in 1..=200 {
        let v = ramanujan_partial(s).unwrap();
        monotone &= v < five_halves && prev.as_ref().is_none_or(|p| v > *p);
        prev = Some(v);
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    let pool: Vec<u64> = primes_below(2000).into_iter().filter(|&p| p > 3).collect();
    let mut lemma_ok = true;
    for _ in 0..200 {
        let len = rng.gen_range(1..=12);
        let mut list: Vec<u64> = (0..len)
            .map(|_| pool[rng.gen_range(0..pool.len())])
            .collect();
        list.sort_unstable();
        list.dedup();
        lemma_ok &= lemma28_product(&list).unwrap().1;
    }
    Outcome::new(
        r.passed() && monotone && lemma_ok,
        format!(
            "first 200 partial products increasing and < 5/2: {monotone}; primes < 10^6 product in (5/2 - 1/2000, 5/2): {}; 200 random lists > 5/6: {lemma_ok}",
            r.passed()
        ),
    )
}

fn catalog_integrity() -> Outcome {
    let groups: Vec<_> = small_group_catalog(16)
        .into_iter()
        .map(|e| (e.name.clone(), e.build().unwrap()))
        .collect();
    let forms: BTreeSet<(u64, Vec<u8>)> = groups
        .iter()
        .map(|(_, g)| (g.order(), canonical_form_of(g)))
        .collect();
    let distinct = forms.len() == groups.len();
    let mut iso_pairs = 0;
    for (i, (_, g)) in groups.iter().enumerate() {
        for (_, h) in &groups[i + 1..] {
            if g.order() == h.order() && g.is_isomorphic(h).unwrap() {
                iso_pairs += 1;
            }
        }
    }
    let mut complete = true;
    for n in 1..=8u64 {
        let ours: BTreeSet<Vec<u8>> = forms
            .iter()
            .filter(|(o, _)| *o == n)
            .map(|(_, f)| f.clone())
            .collect();
        let oracle = all_groups_of_order(n as usize);
        complete &= oracle.len() == GROUP_COUNTS[n as usize - 1] && ours == oracle;
    }
    let counts: Vec<usize> = (1..=16u64)
        .map(|n| forms.iter().filter(|(o, _)| *o == n).count())
        .collect();
    Outcome::new(
        distinct && iso_pairs == 0 && complete && counts == GROUP_COUNTS,
        format!("{} entries, isomorphic pairs {iso_pairs}, complete through order 8: {complete}, counts {counts:?}", groups.len()),
    )
}
