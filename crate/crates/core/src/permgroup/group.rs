use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use rustc_hash::{FxHashMap, FxHasher};

use super::{GroupError, OrderProfile, Permutation};

/// Default maximum number of elements a closure may reach.
pub const DEFAULT_CAP: usize = 200_000;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV_VAR: &str = "PSIGROUP_ENUM_CAP";

/// Groups up to this order get a cached multiplication table on demand.
pub const TABLE_CAP: usize = 2048;

/// The enumeration cap in effect: `PSIGROUP_ENUM_CAP` if set and valid,
/// otherwise [`DEFAULT_CAP`].
pub fn default_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(CAP_ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&c: &usize| c > 0)
            .unwrap_or(DEFAULT_CAP)
    })
}

/// A finite permutation group, enumerated eagerly at construction.
///
/// Elements are kept sorted lexicographically by image array, so element
/// indices are canonical: index 0 is always the identity.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    orders: Vec<u64>,
    label: Option<String>,
    table: OnceLock<Option<Box<[u32]>>>,
    inverses: OnceLock<Box<[u32]>>,
}

impl PermGroup {
    /// Enumerates the group generated by `generators` under the default cap.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, GroupError> {
        Self::with_cap(degree, generators, default_cap())
    }

    pub fn with_cap(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let elements = closure(degree, &generators, cap)?;
        Ok(Self::from_parts(degree, generators, elements))
    }

    /// `elements` must be sorted and closed under composition.
    pub(crate) fn from_parts(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements[0].is_identity());
        let orders = elements.iter().map(Permutation::order).collect();
        PermGroup {
            degree,
            generators,
            elements,
            orders,
            label: None,
            table: OnceLock::new(),
            inverses: OnceLock::new(),
        }
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        let id = Permutation::identity(degree);
        Self::from_parts(degree, vec![id.clone()], vec![id])
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements in canonical (lexicographic) order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn identity(&self) -> &Permutation {
        &self.elements[0]
    }

    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        if x.degree() != self.degree {
            return None;
        }
        self.elements.binary_search(x).ok()
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        self.index_of(x).is_some()
    }

    /// Orders of the elements, aligned with [`elements`](Self::elements).
    pub fn element_orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn order_profile(&self) -> OrderProfile {
        OrderProfile::from_orders(self.orders.iter().copied())
    }

    /// Largest element order.
    pub fn exponent_max(&self) -> u64 {
        self.orders.iter().copied().max().unwrap_or(1)
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o == self.order())
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.mul(b) == b.mul(a))
        })
    }

    /// Whether every element of `h` lies in `self`.
    pub fn contains_group(&self, h: &PermGroup) -> bool {
        h.degree == self.degree && h.generators.iter().all(|g| self.contains(g))
    }

    /// Same element set.
    pub fn same_elements(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }

    /// Cached multiplication table, available for groups of order at most
    /// [`TABLE_CAP`].
    pub(crate) fn table(&self) -> Option<&[u32]> {
        self.table
            .get_or_init(|| {
                let n = self.elements.len();
                if n > TABLE_CAP {
                    return None;
                }
                let mut t = Vec::with_capacity(n * n);
                for a in &self.elements {
                    for b in &self.elements {
                        let c = a.mul(b);
                        t.push(self.index_of(&c).expect("closed element set") as u32);
                    }
                }
                Some(t.into_boxed_slice())
            })
            .as_deref()
    }

    /// Index of `elements[a] ∘ elements[b]`.
    pub(crate) fn mul_idx(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self
                .index_of(&self.elements[a].mul(&self.elements[b]))
                .expect("closed element set"),
        }
    }

    pub(crate) fn inv_idx(&self, a: usize) -> usize {
        self.inverses.get_or_init(|| {
            self.elements
                .iter()
                .map(|x| self.index_of(&x.inverse()).expect("closed under inverses") as u32)
                .collect()
        })[a] as usize
    }

    /// Sorted indices of the subgroup generated by the elements at `gens`.
    pub(crate) fn closure_idx(&self, gens: &[usize]) -> Vec<usize> {
        self.closure_idx_bounded(gens, usize::MAX)
            .expect("unbounded closure")
    }

    /// As [`closure_idx`](Self::closure_idx), but gives up with `None` as soon
    /// as the closure has more than `limit` elements.
    pub(crate) fn closure_idx_bounded(&self, gens: &[usize], limit: usize) -> Option<Vec<usize>> {
        let n = self.elements.len();
        let mut seen = vec![false; n];
        let mut out = vec![0usize];
        seen[0] = true;
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &g in gens {
                let y = self.mul_idx(g, x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    if out.len() > limit {
                        return None;
                    }
                }
            }
        }
        out.sort_unstable();
        Some(out)
    }

    /// Builds the subgroup with the given sorted element indices, choosing a
    /// small generating set greedily (largest element orders first).
    pub(crate) fn subgroup_from_indices(&self, idx: Vec<usize>) -> PermGroup {
        let mut by_order = idx.clone();
        by_order.sort_by_key(|&i| (std::cmp::Reverse(self.orders[i]), i));
        let mut gens: Vec<usize> = Vec::new();
        let mut current = vec![0usize];
        for &x in &by_order {
            if current.len() == idx.len() {
                break;
            }
            if current.binary_search(&x).is_err() {
                gens.push(x);
                current = self.closure_idx(&gens);
            }
        }
        debug_assert_eq!(current, idx);
        self.subgroup_with_generators(idx, &gens)
    }

    pub(crate) fn subgroup_with_generators(&self, idx: Vec<usize>, gens: &[usize]) -> PermGroup {
        let generators = if gens.is_empty() {
            vec![self.identity().clone()]
        } else {
            gens.iter().map(|&g| self.elements[g].clone()).collect()
        };
        let elements = idx.iter().map(|&i| self.elements[i].clone()).collect();
        let orders = idx.iter().map(|&i| self.orders[i]).collect();
        PermGroup {
            degree: self.degree,
            generators,
            elements,
            orders,
            label: None,
            table: OnceLock::new(),
            inverses: OnceLock::new(),
        }
    }

    /// Indices (into `self`) of the elements of a subgroup `h`.
    pub(crate) fn indices_of(&self, h: &PermGroup) -> Result<Vec<usize>, GroupError> {
        if h.degree != self.degree {
            return Err(GroupError::DegreeMismatch {
                left: self.degree,
                right: h.degree,
            });
        }
        let mut idx = h
            .elements
            .iter()
            .map(|x| self.index_of(x).ok_or(GroupError::ForeignElement))
            .collect::<Result<Vec<_>, _>>()?;
        idx.sort_unstable();
        Ok(idx)
    }
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            elements: self.elements.clone(),
            orders: self.orders.clone(),
            label: self.label.clone(),
            table: OnceLock::new(),
            inverses: OnceLock::new(),
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("label", &self.label)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.label.as_deref().unwrap_or("group");
        write!(
            f,
            "{name} (order {}, degree {}) = <",
            self.order(),
            self.degree
        )?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Breadth-first closure of `generators` under left multiplication, sorted.
fn closure(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>, GroupError> {
    const NONE: usize = usize::MAX;
    let hash = |p: &Permutation| {
        let mut h = FxHasher::default();
        p.hash(&mut h);
        h.finish()
    };
    // hash -> most recent index with that hash; `chain` links older ones.
    // Keeps a single copy of each element.
    let id = Permutation::identity(degree);
    let mut heads: FxHashMap<u64, usize> = FxHashMap::default();
    heads.insert(hash(&id), 0);
    let mut chain = vec![NONE];
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        for g in generators {
            let y = g.mul(&out[head]);
            let h = hash(&y);
            let mut i = heads.get(&h).copied().unwrap_or(NONE);
            while i != NONE && out[i] != y {
                i = chain[i];
            }
            if i == NONE {
                if out.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                chain.push(heads.insert(h, out.len()).unwrap_or(NONE));
                out.push(y);
            }
        }
        head += 1;
    }
    drop(heads);
    out.sort_unstable();
    Ok(out)
}
