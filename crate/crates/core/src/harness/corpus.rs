use std::collections::BTreeSet;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use num_integer::Integer;
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::analysis::{psi_report, structure_report_with, PsiReport, StructureReport};
use crate::arith::factorize;
use crate::families::{
    abelian, alternating, cyclic, cyclic_extension, dicyclic, dihedral, prop2_group, semidihedral,
    semidirect_cyclic, small_group_catalog, symmetric, Recipe, CATALOG_MAX_ORDER,
};
use crate::permgroup::{GroupError, PermGroup, Permutation};

/// Order limit of [`Corpus::standard`] when none is given.
pub const STANDARD_MAX_ORDER: u64 = 120;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSource {
    Builtin(String),
    File(PathBuf),
}

impl fmt::Display for CorpusSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSource::Builtin(name) => write!(f, "built-in {name}"),
            CorpusSource::File(p) => write!(f, "{}", p.display()),
        }
    }
}

/// One labelled group plus lazily computed analysis results.
pub struct CorpusEntry {
    label: String,
    group: PermGroup,
    recipe: Option<Recipe>,
    report: OnceLock<PsiReport>,
    structure: OnceLock<StructureReport>,
    cyclic_maximal: OnceLock<Vec<u64>>,
}

impl CorpusEntry {
    pub fn new(label: impl Into<String>, group: PermGroup, recipe: Option<Recipe>) -> Self {
        let label = label.into();
        CorpusEntry {
            group: group.with_label(label.clone()),
            label,
            recipe,
            report: OnceLock::new(),
            structure: OnceLock::new(),
            cyclic_maximal: OnceLock::new(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn recipe(&self) -> Option<&Recipe> {
        self.recipe.as_ref()
    }

    pub fn order(&self) -> u64 {
        self.group.order()
    }

    pub fn report(&self) -> &PsiReport {
        self.report.get_or_init(|| psi_report(&self.group))
    }

    pub fn structure(&self) -> &StructureReport {
        self.structure
            .get_or_init(|| structure_report_with(&self.group, self.report()))
    }

    /// Indices of the cyclic maximal subgroups, ascending.
    pub fn cyclic_maximal_indices(&self) -> &[u64] {
        self.cyclic_maximal
            .get_or_init(|| self.group.cyclic_maximal_indices())
    }
}

impl fmt::Debug for CorpusEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CorpusEntry")
            .field("label", &self.label)
            .field("order", &self.order())
            .field("recipe", &self.recipe)
            .finish()
    }
}

/// An ordered collection of groups with unique labels.
#[derive(Debug)]
pub struct Corpus {
    entries: Vec<CorpusEntry>,
    source: CorpusSource,
}

impl Corpus {
    pub fn new(source: CorpusSource) -> Self {
        Corpus {
            entries: Vec::new(),
            source,
        }
    }

    /// The small-group catalog up to `max_order` (at most 16).
    pub fn builtin(max_order: u64) -> Result<Self, HarnessError> {
        let mut c = Corpus::new(CorpusSource::Builtin(format!(
            "catalog, orders <= {}",
            max_order.min(CATALOG_MAX_ORDER)
        )));
        for e in small_group_catalog(max_order) {
            let g = e.build().map_err(|source| HarnessError::Group {
                label: e.name.clone(),
                source,
            })?;
            c.push(CorpusEntry::new(e.name, g, Some(e.recipe)))?;
        }
        Ok(c)
    }

    /// The catalog plus family sweeps, restricted to orders `<= max_order`:
    ///
    /// - dihedral and dicyclic groups of order `<= 64`, semidihedral `<= 64`
    /// - every abelian group of order `<= 64`
    /// - `C_m : C_k` of order `<= 100`, one action per cyclic subgroup of units
    /// - `C_2k x C_2` for odd `k <= 25`
    /// - both non-abelian groups of order 27, `S_4`, `A_5`, `S_5`
    ///
    /// Entries are sorted by `(order, label)`.
    pub fn standard(max_order: u64) -> Result<Self, HarnessError> {
        let mut recipes: Vec<(String, Recipe)> = Vec::new();
        let mut add = |recipe: Recipe, label: Option<String>| {
            if recipe.order() <= max_order {
                recipes.push((label.unwrap_or_default(), recipe));
            }
        };
        for e in small_group_catalog(max_order) {
            add(e.recipe, Some(e.name));
        }
        for n in (6..=64).step_by(2) {
            add(Recipe::Dihedral(n), None);
        }
        for n in (8..=64).step_by(4) {
            add(Recipe::Dicyclic(n), None);
        }
        for n in [16, 32, 64] {
            add(Recipe::Semidihedral(n), None);
        }
        for n in 2..=64 {
            for f in invariant_factors(n) {
                add(Recipe::Abelian(f), None);
            }
        }
        for (m, k, e) in semidirect_sweep(100) {
            add(Recipe::SemidirectCyclic { m, k, e }, None);
        }
        for k in (1..=25).step_by(2) {
            add(Recipe::Prop2(k), None);
        }
        add(
            Recipe::Extension {
                factors: vec![3, 3],
                k: 3,
                matrix: vec![vec![1, 1], vec![0, 1]],
                tail: vec![0, 0],
            },
            Some("He27".to_string()),
        );
        add(Recipe::Symmetric(4), Some("S4".to_string()));
        add(Recipe::Alternating(5), Some("A5".to_string()));
        add(Recipe::Symmetric(5), Some("S5".to_string()));

        let mut c = Corpus::new(CorpusSource::Builtin(format!(
            "catalog and family sweeps, orders <= {max_order}"
        )));
        let mut seen = BTreeSet::new();
        for (label, recipe) in recipes {
            let g = recipe.build().map_err(|source| HarnessError::Group {
                label: recipe.to_string(),
                source,
            })?;
            let label = if label.is_empty() {
                g.label().unwrap_or_default().to_string()
            } else {
                label
            };
            if seen.insert(label.clone()) {
                c.entries.push(CorpusEntry::new(label, g, Some(recipe)));
            }
        }
        c.sort();
        Ok(c)
    }

    pub fn source(&self) -> &CorpusSource {
        &self.source
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    /// Appends an entry, rejecting duplicate labels.
    pub fn push(&mut self, entry: CorpusEntry) -> Result<(), HarnessError> {
        if self.get(&entry.label).is_some() {
            return Err(HarnessError::DuplicateLabel {
                line: self.entries.len() + 1,
                label: entry.label,
            });
        }
        self.entries.push(entry);
        Ok(())
    }

    /// Drops every entry of order above `max_order`.
    pub fn retain_max_order(&mut self, max_order: u64) {
        self.retain(|e| e.order() <= max_order);
    }

    pub fn retain(&mut self, f: impl FnMut(&CorpusEntry) -> bool) {
        self.entries.retain(f);
    }

    /// Sorts entries by `(order, label)`.
    pub fn sort(&mut self) {
        self.entries
            .sort_by(|a, b| (a.order(), &a.label).cmp(&(b.order(), &b.label)));
    }
}

/// Invariant factor lists `[d_r, ..., d_1]` with `d_1 | ... | d_r`, product
/// `n`, each `>= 2`. One list per abelian group of order `n`.
fn invariant_factors(n: u64) -> Vec<Vec<u64>> {
    // ascending chain d_1 | d_2 | ...; what remains after d must be a
    // product of multiples of d
    fn rec(rest: u64, prev: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 1 {
            out.push(acc.iter().rev().copied().collect());
            return;
        }
        for d in (prev..=rest).step_by(prev as usize).filter(|&d| d >= 2) {
            if rest.is_multiple_of(d) && (d == rest || (rest / d).is_multiple_of(d)) {
                acc.push(d);
                rec(rest / d, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n >= 2 {
        rec(n, 1, &mut Vec::new(), &mut out);
    }
    out
}

/// `(m, k, e)` with `m, k >= 2`, `m k <= max_order`, and one `e` per cyclic
/// subgroup of `(Z/m)^*` whose order divides `k`.
fn semidirect_sweep(max_order: u64) -> Vec<(u64, u64, i64)> {
    let mut out = Vec::new();
    for m in 2..=max_order / 2 {
        for k in 2..=max_order / m {
            let mut seen: FxHashSet<Vec<u64>> = FxHashSet::default();
            for e in 1..m {
                if e.gcd(&m) != 1 {
                    continue;
                }
                let mut powers = vec![1u64];
                let mut x = e;
                while x != 1 {
                    powers.push(x);
                    x = x * e % m;
                }
                if k % powers.len() as u64 != 0 {
                    continue;
                }
                powers.sort_unstable();
                if seen.insert(powers) {
                    out.push((m, k, e as i64));
                }
            }
        }
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct CorpusRecord {
    label: String,
    degree: usize,
    generators: Vec<Vec<usize>>,
}

/// Reads a JSON Lines corpus. Blank lines are ignored.
pub fn load_corpus(path: impl AsRef<Path>) -> Result<Corpus, HarnessError> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut c = read_corpus(BufReader::new(file))?;
    c.source = CorpusSource::File(path.to_path_buf());
    Ok(c)
}

/// As [`load_corpus`], from any reader.
pub fn read_corpus(reader: impl BufRead) -> Result<Corpus, HarnessError> {
    let mut c = Corpus::new(CorpusSource::Builtin("stream".to_string()));
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let parse = |field: &str, message: String| HarnessError::Parse {
            line: line_no,
            field: field.to_string(),
            message,
        };
        let rec: CorpusRecord =
            serde_json::from_str(&line).map_err(|e| parse("record", e.to_string()))?;
        if rec.generators.is_empty() {
            return Err(parse(
                "generators",
                "at least one generator required".into(),
            ));
        }
        let mut gens = Vec::with_capacity(rec.generators.len());
        for (j, images) in rec.generators.into_iter().enumerate() {
            if images.len() != rec.degree {
                return Err(parse(
                    "generators",
                    format!(
                        "generator {j} has {} images, degree is {}",
                        images.len(),
                        rec.degree
                    ),
                ));
            }
            let p = Permutation::new(images)
                .map_err(|e| parse("generators", format!("generator {j}: {e}")))?;
            gens.push(p);
        }
        let g = PermGroup::new(rec.degree, gens).map_err(|source| HarnessError::Group {
            label: rec.label.clone(),
            source,
        })?;
        if c.get(&rec.label).is_some() {
            return Err(HarnessError::DuplicateLabel {
                line: line_no,
                label: rec.label,
            });
        }
        c.entries.push(CorpusEntry::new(rec.label, g, None));
    }
    Ok(c)
}

/// Writes `corpus` as JSON Lines, in entry order.
pub fn write_corpus(corpus: &Corpus, out: impl Write) -> Result<(), HarnessError> {
    let mut out = BufWriter::new(out);
    for e in corpus.entries() {
        let rec = CorpusRecord {
            label: e.label.clone(),
            degree: e.group.degree(),
            generators: e
                .group
                .generators()
                .iter()
                .map(|g| g.images().iter().map(|&x| x as usize).collect())
                .collect(),
        };
        serde_json::to_writer(&mut out, &rec)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

/// Builds a group from a family name and its integer parameters, e.g.
/// `("dihedral", ["10"])` or `("semidirect", ["7", "3", "2"])`.
pub fn build_family(name: &str, params: &[String]) -> Result<PermGroup, HarnessError> {
    let bad = |message: String| HarnessError::BadParameters {
        family: name.to_string(),
        message,
    };
    let ints = |want: Option<usize>| -> Result<Vec<i64>, HarnessError> {
        if let Some(w) = want {
            if params.len() != w {
                return Err(bad(format!(
                    "expected {w} parameter(s), got {}",
                    params.len()
                )));
            }
        } else if params.is_empty() {
            return Err(bad("expected at least one parameter".into()));
        }
        params
            .iter()
            .map(|s| s.parse::<i64>().map_err(|e| bad(format!("{s:?}: {e}"))))
            .collect()
    };
    let unsigned = |v: i64| -> Result<u64, HarnessError> {
        u64::try_from(v).map_err(|_| bad(format!("{v} must be non-negative")))
    };
    let grp = |r: Result<PermGroup, GroupError>| {
        r.map_err(|source| HarnessError::Group {
            label: name.to_string(),
            source,
        })
    };
    match name {
        "cyclic" => grp(cyclic(unsigned(ints(Some(1))?[0])?)),
        "abelian" => {
            let f = ints(None)?
                .into_iter()
                .map(unsigned)
                .collect::<Result<Vec<_>, _>>()?;
            grp(abelian(&f))
        }
        "dihedral" => grp(dihedral(unsigned(ints(Some(1))?[0])?)),
        "dicyclic" | "quaternion" => grp(dicyclic(unsigned(ints(Some(1))?[0])?)),
        "semidihedral" => grp(semidihedral(unsigned(ints(Some(1))?[0])?)),
        "symmetric" => grp(symmetric(unsigned(ints(Some(1))?[0])? as usize)),
        "alternating" => grp(alternating(unsigned(ints(Some(1))?[0])? as usize)),
        "semidirect" => {
            let v = ints(Some(3))?;
            grp(semidirect_cyclic(unsigned(v[0])?, unsigned(v[1])?, v[2]))
        }
        "prop2" => grp(prop2_group(unsigned(ints(Some(1))?[0])?)),
        "heisenberg" => {
            let p = unsigned(ints(Some(1))?[0])?;
            if factorize(p)
                .map(|f| f.factors().len() != 1 || f.n() != p)
                .unwrap_or(true)
                || p == 2
            {
                return Err(bad(format!("{p} must be an odd prime")));
            }
            grp(
                cyclic_extension(&[p, p], p, &[vec![1, 1], vec![0, 1]], &[0, 0])
                    .map(|g| g.with_label(format!("He{}", p * p * p))),
            )
        }
        _ => Err(HarnessError::UnknownFamily(name.to_string())),
    }
}
