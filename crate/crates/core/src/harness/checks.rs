use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use super::{Corpus, CorpusEntry, HarnessError};
use crate::analysis::{
    int, lemma_parameters, prop210_check, prop5_bound, psi, semidirect_lemma_check, thresholds,
};
use crate::arith::{
    self, lemma28_product, phi_lower_bound, primes_below, psi_cyclic, psi_cyclic_floor, ratio,
    PrimeProduct, Rational,
};
use crate::families::{cyclic, prop2_group};

/// Identifiers of the registered checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    T1,
    T3,
    C4,
    P2,
    P5,
    T6,
    C7,
    C8,
    C9,
    T10,
    T11,
    P2_4,
    P2_5,
    P2_6,
    P2_10,
    L2_1,
    L2_2,
    L2_8,
    L2_9,
    P2_7,
}

impl TheoremId {
    pub const ALL: [TheoremId; 20] = [
        TheoremId::T1,
        TheoremId::T3,
        TheoremId::C4,
        TheoremId::P2,
        TheoremId::P5,
        TheoremId::T6,
        TheoremId::C7,
        TheoremId::C8,
        TheoremId::C9,
        TheoremId::T10,
        TheoremId::T11,
        TheoremId::P2_4,
        TheoremId::P2_5,
        TheoremId::P2_6,
        TheoremId::P2_10,
        TheoremId::L2_1,
        TheoremId::L2_2,
        TheoremId::L2_8,
        TheoremId::L2_9,
        TheoremId::P2_7,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T1 => "T1",
            TheoremId::T3 => "T3",
            TheoremId::C4 => "C4",
            TheoremId::P2 => "P2",
            TheoremId::P5 => "P5",
            TheoremId::T6 => "T6",
            TheoremId::C7 => "C7",
            TheoremId::C8 => "C8",
            TheoremId::C9 => "C9",
            TheoremId::T10 => "T10",
            TheoremId::T11 => "T11",
            TheoremId::P2_4 => "P2_4",
            TheoremId::P2_5 => "P2_5",
            TheoremId::P2_6 => "P2_6",
            TheoremId::P2_10 => "P2_10",
            TheoremId::L2_1 => "L2_1",
            TheoremId::L2_2 => "L2_2",
            TheoremId::L2_8 => "L2_8",
            TheoremId::L2_9 => "L2_9",
            TheoremId::P2_7 => "P2_7",
        }
    }

    /// One-line statement of what the check asserts.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T1 => "non-cyclic G: psi(G) <= (7/11) psi(C_n)",
            TheoremId::T3 => "non-cyclic G: psi(G) < psi(C_n) / (q-1)",
            TheoremId::C4 => "non-cyclic G of odd order: psi(G) < psi(C_n) / 2",
            TheoremId::P2 => "odd k: psi(C_4k) = 11 psi(C_k), psi(C_2k x C_2) = 7 psi(C_k)",
            TheoremId::P5 => "non-cyclic G: psi(G) <= (n-1) n / q + 1 < n^2 / q",
            TheoremId::T6 => "psi(G) >= psi(C_n) / (2(q-1)) => solvable, cyclic index-p in Sylow p, one of cases 1-3",
            TheoremId::C7 => "psi(G) >= psi(C_n) / q => conclusions of T6",
            TheoremId::C8 => "odd n, psi(G) >= psi(C_n) / (q+1) => conclusions of T6",
            TheoremId::C9 => "non-solvable or no cyclic index-p in Sylow p => psi(G) < psi(C_n) / (2(q-1)) <= psi(C_n) / q",
            TheoremId::T10 => "psi(G) >= (3/5) n phi(n) => solvable and G'' <= Z(G)",
            TheoremId::T11 => "psi(G) >= n phi(n) / q => normal cyclic Sylow p, or solvable with a cyclic maximal subgroup of index p or p+1",
            TheoremId::P2_4 => "cyclic maximal subgroup => solvable and G'' <= Z(G)",
            TheoremId::P2_5 => "[G:<x>] < 2p => normal cyclic Sylow p, or solvable with <x> maximal of index p or p+1",
            TheoremId::P2_6 => "2-group with cyclic index-4 subgroup, or |G| = 2^a 3^b with cyclic subgroup of index < 6 => G'' <= Z(G)",
            TheoremId::P2_10 => "cyclic normal Sylow P: psi(G) <= psi(P) psi(G/P), equality iff P central",
            TheoremId::L2_1 => "phi(n) >= (q-1) n / p",
            TheoremId::L2_2 => "C_m : C_k: fixed-point-free or trivial action, element orders, psi formula",
            TheoremId::L2_8 => "ascending primes > 3: prod (p^2-1)/(p^2+1) > 5/6",
            TheoremId::L2_9 => "closed form of psi(C_n) and psi(C_n) >= 2 n^2 / (p+1)",
            TheoremId::P2_7 => "prod (p^2+1)/(p^2-1) increases strictly towards 5/2",
        }
    }

    /// Whether the check runs over corpus entries (as opposed to its own
    /// parameter range).
    pub fn uses_corpus(self) -> bool {
        !matches!(
            self,
            TheoremId::P2 | TheoremId::L2_1 | TheoremId::L2_2 | TheoremId::L2_8 | TheoremId::P2_7
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = HarnessError;

    /// Case-insensitive; `.` and `_` are interchangeable (`P2.10` = `P2_10`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_uppercase().replace('.', "_");
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == norm)
            .ok_or_else(|| HarnessError::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub label: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoremCheckResult {
    pub theorem_id: TheoremId,
    pub universe: String,
    pub universe_size: usize,
    /// Entries the assertion was evaluated on.
    pub checked: usize,
    /// Entries whose precondition failed.
    pub skipped: Vec<String>,
    pub counterexamples: Vec<Counterexample>,
    /// Entries attaining a sharp bound with equality.
    pub equality_witnesses: Vec<String>,
    /// Entries worth a closer look (those meeting the T6 hypothesis).
    pub flagged: Vec<String>,
    /// Set when nothing was checked.
    pub warning: Option<String>,
    #[serde(serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl TheoremCheckResult {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn is_vacuous(&self) -> bool {
        self.checked == 0
    }
}

impl fmt::Display for TheoremCheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<6} {}  checked {}/{} ({}), skipped {}, counterexamples {}",
            self.theorem_id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checked,
            self.universe_size,
            self.universe,
            self.skipped.len(),
            self.counterexamples.len(),
        )?;
        if !self.equality_witnesses.is_empty() {
            write!(f, ", equality {}", self.equality_witnesses.len())?;
        }
        if !self.flagged.is_empty() {
            write!(f, ", flagged {}", self.flagged.len())?;
        }
        write!(f, " [{:.2}s]", self.elapsed.as_secs_f64())?;
        if let Some(w) = &self.warning {
            write!(f, "\n       warning: {w}")?;
        }
        Ok(())
    }
}

/// Accumulates one check's outcome.
struct Run {
    result: TheoremCheckResult,
    start: Instant,
}

impl Run {
    fn new(id: TheoremId, universe: impl Into<String>, size: usize) -> Self {
        Run {
            result: TheoremCheckResult {
                theorem_id: id,
                universe: universe.into(),
                universe_size: size,
                checked: 0,
                skipped: Vec::new(),
                counterexamples: Vec::new(),
                equality_witnesses: Vec::new(),
                flagged: Vec::new(),
                warning: None,
                elapsed: Duration::ZERO,
            },
            start: Instant::now(),
        }
    }

    fn skip(&mut self, label: &str) {
        self.result.skipped.push(label.to_string());
    }

    /// Records one evaluated instance; `ok = false` is a counterexample.
    fn check(&mut self, label: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.result.checked += 1;
        if !ok {
            self.result.counterexamples.push(Counterexample {
                label: label.to_string(),
                detail: detail(),
            });
        }
    }

    fn finish(mut self) -> TheoremCheckResult {
        if self.result.checked == 0 {
            self.result.warning = Some("applicable universe is empty; passes vacuously".into());
        }
        self.result.elapsed = self.start.elapsed();
        self.result
    }
}

/// Runs one check. Corpus-based checks visit entries in corpus order;
/// parameter-range checks ignore the corpus.
pub fn check_theorem(id: TheoremId, corpus: &Corpus) -> TheoremCheckResult {
    match id {
        TheoremId::P2 => check_prop2(),
        TheoremId::L2_1 => check_phi_bound(),
        TheoremId::L2_2 => check_semidirect(),
        TheoremId::L2_8 => check_lemma28(),
        TheoremId::P2_7 => check_ramanujan(),
        _ => check_corpus(id, corpus),
    }
}

/// Every registered check, in [`TheoremId::ALL`] order.
pub fn run_all(corpus: &Corpus) -> Vec<TheoremCheckResult> {
    TheoremId::ALL
        .into_iter()
        .map(|id| check_theorem(id, corpus))
        .collect()
}

fn check_corpus(id: TheoremId, corpus: &Corpus) -> TheoremCheckResult {
    let universe = format!("{} ({})", corpus_universe(id), corpus.source());
    let mut run = Run::new(id, universe, corpus.len());
    for e in corpus.entries() {
        // bound checks need q and p
        if e.order() < 2 && id != TheoremId::L2_9 {
            run.skip(e.label());
            continue;
        }
        check_entry(id, e, &mut run);
    }
    if id == TheoremId::L2_9 {
        check_psi_cyclic_range(&mut run);
    }
    run.finish()
}

fn corpus_universe(id: TheoremId) -> &'static str {
    match id {
        TheoremId::T1 | TheoremId::T3 | TheoremId::P5 => "non-cyclic entries",
        TheoremId::C4 => "non-cyclic entries of odd order",
        TheoremId::T6 | TheoremId::C7 | TheoremId::C8 | TheoremId::T10 | TheoremId::T11 => {
            "entries meeting the hypothesis"
        }
        TheoremId::C9 => "non-solvable entries or entries without a cyclic index-p subgroup in Sylow p",
        TheoremId::P2_4 => "entries with a cyclic maximal subgroup",
        TheoremId::P2_5 => "entries with an element of index < 2p",
        TheoremId::P2_6 => "2-groups with a cyclic index-4 subgroup; {2,3}-groups with a cyclic subgroup of index < 6",
        TheoremId::P2_10 => "entries with a cyclic normal Sylow subgroup",
        TheoremId::L2_9 => "cyclic entries, then 2 <= n <= 10^4",
        _ => "corpus",
    }
}

fn check_entry(id: TheoremId, e: &CorpusEntry, run: &mut Run) {
    let label = e.label();
    let r = e.report();
    let value = int(r.psi);
    let (q, p) = (r.q.unwrap_or(0), r.p.unwrap_or(0));
    match id {
        TheoremId::T1 | TheoremId::T3 | TheoremId::C4 => {
            if r.cyclic || (id == TheoremId::C4 && r.n.is_multiple_of(2)) {
                return run.skip(label);
            }
            match id {
                TheoremId::T1 => {
                    let bound = ratio(7, 11);
                    run.check(label, r.ratio <= bound, || format!("ratio {}", r.ratio));
                    if r.ratio == bound {
                        run.result.equality_witnesses.push(label.to_string());
                    }
                }
                TheoremId::T3 => {
                    let bound = ratio(1, q - 1);
                    run.check(label, r.ratio < bound, || {
                        format!("ratio {} >= 1/{}", r.ratio, q - 1)
                    });
                }
                _ => {
                    run.check(label, r.ratio < ratio(1, 2), || {
                        format!("ratio {}", r.ratio)
                    });
                }
            }
        }
        TheoremId::P5 => {
            if r.cyclic {
                return run.skip(label);
            }
            match prop5_bound(e.group()) {
                Ok(c) => {
                    run.check(label, c.holds && c.outer_holds, || {
                        format!("psi {} vs bound {}", r.psi, c.bound)
                    });
                    if c.equality {
                        run.result.equality_witnesses.push(label.to_string());
                    }
                }
                Err(err) => run.check(label, false, || err.to_string()),
            }
        }
        TheoremId::T6 | TheoremId::C7 | TheoremId::C8 => {
            let threshold = match id {
                TheoremId::T6 => thresholds::theorem6(r),
                TheoremId::C7 => thresholds::corollary7(r),
                _ if r.n % 2 == 1 => thresholds::corollary8(r),
                _ => None,
            };
            let Some(t) = threshold.filter(|t| value >= *t) else {
                return run.skip(label);
            };
            let s = e.structure();
            if id == TheoremId::T6 {
                run.result
                    .flagged
                    .push(format!("{label} ({})", s.theorem6_case));
            }
            run.check(label, s.theorem6_conclusions_hold(), || {
                format!(
                    "psi {} >= {t}; solvable {}, cyclic index-p in Sylow p {}, case {:?}",
                    r.psi,
                    s.solvable,
                    s.sylow_has_cyclic_index_p,
                    s.first_case()
                )
            });
        }
        TheoremId::C9 => {
            let s = e.structure();
            if s.solvable && s.sylow_has_cyclic_index_p {
                return run.skip(label);
            }
            let t6 = thresholds::theorem6(r).expect("n >= 2");
            let c7 = thresholds::corollary7(r).expect("n >= 2");
            run.check(label, value < t6 && t6 <= c7, || {
                format!("psi {} vs psi(C_n)/(2(q-1)) = {t6}", r.psi)
            });
        }
        TheoremId::T10 => {
            let t = thresholds::theorem10(r);
            if value < t {
                return run.skip(label);
            }
            let s = e.structure();
            run.check(label, s.solvable && s.second_derived_central, || {
                format!(
                    "psi {} >= {t}; solvable {}, G'' central {}",
                    r.psi, s.solvable, s.second_derived_central
                )
            });
        }
        TheoremId::T11 => {
            let t = thresholds::theorem11(r).expect("n >= 2");
            if value < t {
                return run.skip(label);
            }
            let s = e.structure();
            let normal_cyclic = s.sylow_p_cyclic && s.sylow_p_normal;
            let ok = normal_cyclic
                || (s.solvable
                    && e.cyclic_maximal_indices()
                        .iter()
                        .any(|&i| i == p || i == p + 1));
            run.check(label, ok, || {
                format!(
                    "psi {} >= {t}; cyclic maximal indices {:?}, p = {p}",
                    r.psi,
                    e.cyclic_maximal_indices()
                )
            });
        }
        TheoremId::P2_4 => {
            if e.cyclic_maximal_indices().is_empty() {
                return run.skip(label);
            }
            let s = e.structure();
            run.check(label, s.solvable && s.second_derived_central, || {
                format!(
                    "solvable {}, G'' central {}",
                    s.solvable, s.second_derived_central
                )
            });
        }
        TheoremId::P2_5 => {
            let g = e.group();
            let n = g.order();
            let candidates: Vec<_> = g
                .cyclic_subgroups_idx()
                .into_iter()
                .filter(|(_, sub)| n / (sub.len() as u64) < 2 * p)
                .collect();
            if candidates.is_empty() {
                return run.skip(label);
            }
            let s = e.structure();
            let normal_cyclic = s.sylow_p_cyclic && s.sylow_p_normal;
            let bad = candidates.iter().find(|(x, sub)| {
                let index = n / sub.len() as u64;
                !(normal_cyclic
                    || (s.solvable
                        && (index == p || index == p + 1)
                        && g.is_maximal_idx(sub, &[*x])))
            });
            run.check(label, bad.is_none(), || {
                let index = n / bad.unwrap().1.len() as u64;
                format!("<x> of index {index} (p = {p}) is not maximal or G not solvable")
            });
        }
        TheoremId::P2_6 => {
            let f = r.factorization();
            let g = e.group();
            let n = r.n;
            let min_index = n / g.exponent_max();
            let part1 = f.is_prime_power() && q == 2 && n >= 4 && min_index <= 4;
            let part2 = f.primes().all(|x| x == 2 || x == 3) && min_index < 6;
            if !part1 && !part2 {
                return run.skip(label);
            }
            let s = e.structure();
            run.check(label, s.second_derived_central, || {
                format!(
                    "derived orders {:?}, |Z| = {}",
                    s.derived_orders, s.center_order
                )
            });
        }
        TheoremId::P2_10 => {
            let g = e.group();
            let mut applicable = false;
            let mut failure = None;
            for prime in r.factorization().primes() {
                let sylow = match g.sylow_subgroup(prime) {
                    Ok(sp) => sp,
                    Err(err) => {
                        failure = Some(err.to_string());
                        break;
                    }
                };
                if !sylow.is_cyclic() || !g.is_normal(&sylow).unwrap_or(false) {
                    continue;
                }
                applicable = true;
                match prop210_check(g, prime) {
                    Ok(c) if c.inequality_holds && c.equality == c.central => {}
                    Ok(c) => {
                        failure = Some(format!(
                            "p = {prime}: psi {} vs product {}, central {}",
                            c.psi_g, c.product, c.central
                        ));
                        break;
                    }
                    Err(err) => {
                        failure = Some(err.to_string());
                        break;
                    }
                }
            }
            if applicable || failure.is_some() {
                run.check(label, failure.is_none(), || {
                    failure.clone().unwrap_or_default()
                });
            } else {
                run.skip(label);
            }
        }
        TheoremId::L2_9 => {
            if !r.cyclic {
                return run.skip(label);
            }
            let floor = (r.n >= 2).then(|| psi_cyclic_floor(r.n).expect("n >= 2"));
            let floor_ok = floor.as_ref().is_none_or(|(_, holds)| *holds);
            run.check(label, u128::from(r.psi) == r.psi_cn && floor_ok, || {
                format!(
                    "enumerated {} vs closed form {}, floor {floor:?}",
                    r.psi, r.psi_cn
                )
            });
        }
        _ => unreachable!("{id} does not run over corpus entries"),
    }
}

/// Closed form against the divisor-sum `sum_{d | n} d phi(d)` and the
/// quadratic lower bound, for every `2 <= n <= 10^4`.
fn check_psi_cyclic_range(run: &mut Run) {
    const LIMIT: u64 = 10_000;
    run.result.universe_size += (LIMIT - 1) as usize;
    for n in 2..=LIMIT {
        let label = format!("n={n}");
        let closed = psi_cyclic(n).expect("n >= 1");
        let divisor_sum: u128 = (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| u128::from(d) * u128::from(arith::euler_phi(d).unwrap()))
            .sum();
        let (lower, holds) = psi_cyclic_floor(n).expect("n >= 2");
        run.check(&label, closed == divisor_sum && holds, || {
            format!("closed form {closed}, divisor sum {divisor_sum}, floor {lower}")
        });
    }
}

fn check_prop2() -> TheoremCheckResult {
    let ks: Vec<u64> = (1..=25).step_by(2).collect();
    let mut run = Run::new(TheoremId::P2, "odd k in 1..=25", ks.len());
    for k in ks {
        let label = format!("k={k}");
        let result = (|| -> Result<(u64, u64, u64), HarnessError> {
            let ck = psi(&cyclic(k).map_err(|e| group_err(&label, e))?);
            let c4k = psi(&cyclic(4 * k).map_err(|e| group_err(&label, e))?);
            let g = psi(&prop2_group(k).map_err(|e| group_err(&label, e))?);
            Ok((ck, c4k, g))
        })();
        match result {
            Ok((ck, c4k, g)) => {
                let closed_ok = psi_cyclic(4 * k).ok() == Some(u128::from(c4k));
                run.check(
                    &label,
                    closed_ok && c4k == 11 * ck && g == 7 * ck && ratio(g, c4k) == ratio(7, 11),
                    || format!("psi(C_k) {ck}, psi(C_4k) {c4k}, psi(C_2k x C_2) {g}"),
                );
            }
            Err(err) => run.check(&label, false, || err.to_string()),
        }
    }
    run.finish()
}

fn group_err(label: &str, source: crate::permgroup::GroupError) -> HarnessError {
    HarnessError::Group {
        label: label.to_string(),
        source,
    }
}

fn check_phi_bound() -> TheoremCheckResult {
    const LIMIT: u64 = 100_000;
    let mut run = Run::new(TheoremId::L2_1, "2 <= n <= 10^5", (LIMIT - 1) as usize);
    for n in 2..=LIMIT {
        let (bound, holds) = phi_lower_bound(n).expect("n >= 2");
        run.check(&format!("n={n}"), holds, || format!("phi({n}) < {bound}"));
    }
    run.finish()
}

fn check_semidirect() -> TheoremCheckResult {
    let params = lemma_parameters(50, 12);
    let mut run = Run::new(
        TheoremId::L2_2,
        "C_m : C_k, m <= 50 a prime power, 2 <= k <= 12 prime to m, every valid action",
        params.len(),
    );
    for (m, k, e) in params {
        let label = format!("C{m}:C{k}[{e}]");
        match semidirect_lemma_check(m, k, e) {
            Ok(c) => run.check(&label, c.all_hold(), || format!("{c:?}")),
            Err(err) => run.check(&label, false, || err.to_string()),
        }
    }
    run.finish()
}

/// Every non-empty subset of the first twelve primes above 3.
fn check_lemma28() -> TheoremCheckResult {
    let primes: Vec<u64> = primes_below(50).into_iter().filter(|&p| p > 3).collect();
    let subsets = (1u32 << primes.len()) - 1;
    let mut run = Run::new(
        TheoremId::L2_8,
        "non-empty subsets of the primes 5..47",
        subsets as usize,
    );
    for mask in 1..=subsets {
        let list: Vec<u64> = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        match lemma28_product(&list) {
            Ok((v, holds)) => run.check(&format!("{list:?}"), holds, || format!("product {v}")),
            Err(err) => run.check(&format!("{list:?}"), false, || err.to_string()),
        }
    }
    run.finish()
}

/// Each factor exceeds 1 (so partial products strictly increase), and the
/// full product below 10^6 lies in `(5/2 - 1/2000, 5/2)`.
fn check_ramanujan() -> TheoremCheckResult {
    const LIMIT: u64 = 1_000_000;
    let primes = primes_below(LIMIT);
    let mut run = Run::new(TheoremId::P2_7, "primes below 10^6", primes.len() + 1);
    for &p in &primes {
        // (p^2 + 1) / (p^2 - 1) > 1 always; checked rather than assumed
        let (num, den) = (
            u128::from(p) * u128::from(p) + 1,
            u128::from(p) * u128::from(p) - 1,
        );
        run.check(&format!("p={p}"), num > den, || {
            format!("factor {num}/{den}")
        });
    }
    let product = PrimeProduct::ramanujan(&primes);
    let upper = ratio(5, 2);
    let lower: Rational = ratio(5, 2) - ratio(1, 2000);
    let below = product.cmp_rational(&upper).is_lt();
    let within = product.cmp_rational(&lower).is_gt();
    run.check("product", below && within, || {
        format!("below 5/2: {below}, above 5/2 - 1/2000: {within}")
    });
    run.finish()
}
