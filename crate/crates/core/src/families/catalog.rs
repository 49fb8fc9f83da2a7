use std::fmt;

use super::{
    abelian, alternating, cyclic, cyclic_extension, dicyclic, dihedral, direct_product,
    prop2_group, semidihedral, semidirect_cyclic, symmetric,
};
use crate::permgroup::{GroupError, PermGroup};

/// Largest order covered by [`small_group_catalog`].
pub const CATALOG_MAX_ORDER: u64 = 16;

/// How to build a group from the family constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(u64),
    Abelian(Vec<u64>),
    Dihedral(u64),
    Dicyclic(u64),
    Semidihedral(u64),
    Symmetric(usize),
    Alternating(usize),
    SemidirectCyclic {
        m: u64,
        k: u64,
        e: i64,
    },
    Extension {
        factors: Vec<u64>,
        k: u64,
        matrix: Vec<Vec<u64>>,
        tail: Vec<u64>,
    },
    DirectProduct(Box<Recipe>, Box<Recipe>),
    Prop2(u64),
}

impl Recipe {
    pub fn build(&self) -> Result<PermGroup, GroupError> {
        match self {
            Recipe::Cyclic(n) => cyclic(*n),
            Recipe::Abelian(f) => abelian(f),
            Recipe::Dihedral(n) => dihedral(*n),
            Recipe::Dicyclic(n) => dicyclic(*n),
            Recipe::Semidihedral(n) => semidihedral(*n),
            Recipe::Symmetric(n) => symmetric(*n),
            Recipe::Alternating(n) => alternating(*n),
            Recipe::SemidirectCyclic { m, k, e } => semidirect_cyclic(*m, *k, *e),
            Recipe::Extension {
                factors,
                k,
                matrix,
                tail,
            } => cyclic_extension(factors, *k, matrix, tail),
            Recipe::DirectProduct(a, b) => direct_product(&a.build()?, &b.build()?),
            Recipe::Prop2(k) => prop2_group(*k),
        }
    }

    /// Order of the group the recipe builds, computed without building it.
    pub fn order(&self) -> u64 {
        match self {
            Recipe::Cyclic(n)
            | Recipe::Dihedral(n)
            | Recipe::Dicyclic(n)
            | Recipe::Semidihedral(n) => *n,
            Recipe::Abelian(f) => f.iter().product(),
            Recipe::Symmetric(n) => (1..=*n as u64).product(),
            Recipe::Alternating(n) => (1..=*n as u64).product::<u64>() / 2,
            Recipe::SemidirectCyclic { m, k, .. } => m * k,
            Recipe::Extension { factors, k, .. } => factors.iter().product::<u64>() * k,
            Recipe::DirectProduct(a, b) => a.order() * b.order(),
            Recipe::Prop2(k) => 4 * k,
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "cyclic {n}"),
            Recipe::Abelian(fs) => {
                write!(f, "abelian")?;
                for x in fs {
                    write!(f, " {x}")?;
                }
                Ok(())
            }
            Recipe::Dihedral(n) => write!(f, "dihedral {n}"),
            Recipe::Dicyclic(n) => write!(f, "dicyclic {n}"),
            Recipe::Semidihedral(n) => write!(f, "semidihedral {n}"),
            Recipe::Symmetric(n) => write!(f, "symmetric {n}"),
            Recipe::Alternating(n) => write!(f, "alternating {n}"),
            Recipe::SemidirectCyclic { m, k, e } => write!(f, "semidirect {m} {k} {e}"),
            Recipe::Extension {
                factors,
                k,
                matrix,
                tail,
            } => write!(
                f,
                "extension {factors:?} by C{k}, action {matrix:?}, tail {tail:?}"
            ),
            Recipe::DirectProduct(a, b) => write!(f, "({a}) x ({b})"),
            Recipe::Prop2(k) => write!(f, "prop2 {k}"),
        }
    }
}

/// One isomorphism class in the catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub recipe: Recipe,
    pub expected_order: u64,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<PermGroup, GroupError> {
        Ok(self.recipe.build()?.with_label(self.name.clone()))
    }
}

fn entry(name: &str, recipe: Recipe) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        expected_order: recipe.order(),
        recipe,
    }
}

fn ext(factors: &[u64], k: u64, matrix: &[&[u64]], tail: &[u64]) -> Recipe {
    Recipe::Extension {
        factors: factors.to_vec(),
        k,
        matrix: matrix.iter().map(|r| r.to_vec()).collect(),
        tail: tail.to_vec(),
    }
}

fn product(a: Recipe, b: Recipe) -> Recipe {
    Recipe::DirectProduct(Box::new(a), Box::new(b))
}

/// One entry per isomorphism class of groups of order `<= max_order`
/// (clamped to [`CATALOG_MAX_ORDER`]), sorted by order.
pub fn small_group_catalog(max_order: u64) -> Vec<CatalogEntry> {
    use Recipe::*;
    let all = vec![
        entry("C1", Cyclic(1)),
        entry("C2", Cyclic(2)),
        entry("C3", Cyclic(3)),
        entry("C4", Cyclic(4)),
        entry("C2xC2", Abelian(vec![2, 2])),
        entry("C5", Cyclic(5)),
        entry("C6", Cyclic(6)),
        entry("S3", Symmetric(3)),
        entry("C7", Cyclic(7)),
        entry("C8", Cyclic(8)),
        entry("C4xC2", Abelian(vec![4, 2])),
        entry("C2xC2xC2", Abelian(vec![2, 2, 2])),
        entry("D8", Dihedral(8)),
        entry("Q8", Dicyclic(8)),
        entry("C9", Cyclic(9)),
        entry("C3xC3", Abelian(vec![3, 3])),
        entry("C10", Cyclic(10)),
        entry("D10", Dihedral(10)),
        entry("C11", Cyclic(11)),
        entry("C12", Cyclic(12)),
        entry("C6xC2", Abelian(vec![6, 2])),
        entry("D12", Dihedral(12)),
        entry("A4", Alternating(4)),
        entry("Dic12", Dicyclic(12)),
        entry("C13", Cyclic(13)),
        entry("C14", Cyclic(14)),
        entry("D14", Dihedral(14)),
        entry("C15", Cyclic(15)),
        entry("C16", Cyclic(16)),
        entry("C4xC4", Abelian(vec![4, 4])),
        // <a, b, c | a^4 = b^2 = c^2, ab = ba, bc = cb, c a c = ab>
        entry("(C4xC2):C2", ext(&[4, 2], 2, &[&[1, 0], &[1, 1]], &[0, 0])),
        entry("C4:C4", SemidirectCyclic { m: 4, k: 4, e: 3 }),
        entry("C8xC2", Abelian(vec![8, 2])),
        entry("M16", SemidirectCyclic { m: 8, k: 2, e: 5 }),
        entry("D16", Dihedral(16)),
        entry("SD16", Semidihedral(16)),
        entry("Q16", Dicyclic(16)),
        entry("C4xC2xC2", Abelian(vec![4, 2, 2])),
        entry("C2xD8", product(Cyclic(2), Dihedral(8))),
        entry("C2xQ8", product(Cyclic(2), Dicyclic(8))),
        // central product C4 o D8: (C4 x C2) : C2 with a -> a, b -> a^2 b
        entry("C4oD8", ext(&[4, 2], 2, &[&[1, 2], &[0, 1]], &[0, 0])),
        entry("C2xC2xC2xC2", Abelian(vec![2, 2, 2, 2])),
    ];
    let max = max_order.min(CATALOG_MAX_ORDER);
    all.into_iter()
        .filter(|e| e.expected_order <= max)
        .collect()
}
