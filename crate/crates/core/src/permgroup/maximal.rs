use rustc_hash::FxHashSet;

use super::subgroups::is_power_of;
use super::{GroupError, PermGroup};
use crate::arith::factorize;

impl PermGroup {
    /// Distinct cyclic subgroups, as sorted element-index lists, each with
    /// one generating element index.
    pub(crate) fn cyclic_subgroups_idx(&self) -> Vec<(usize, Vec<usize>)> {
        let mut seen: FxHashSet<Vec<usize>> = FxHashSet::default();
        let mut out = Vec::new();
        for x in 0..self.elements().len() {
            let sub = self.closure_idx(&[x]);
            if seen.insert(sub.clone()) {
                out.push((x, sub));
            }
        }
        out
    }

    /// Whether the proper subgroup with sorted indices `sub` is maximal.
    ///
    /// A strictly intermediate subgroup would contain an element of
    /// prime-power order outside `sub`, and `<sub, y>` only depends on the
    /// right coset `sub * y`, so one prime-power representative per coset is
    /// tried. Closures stop early once they pass half the group order.
    pub(crate) fn is_maximal_idx(&self, sub: &[usize], sub_gens: &[usize]) -> bool {
        let n = self.elements().len();
        if sub.len() == n {
            return false;
        }
        let mut covered = vec![false; n];
        for &h in sub {
            covered[h] = true;
        }
        let orders = self.element_orders();
        let mut gens = sub_gens.to_vec();
        for y in 0..n {
            if covered[y] || !is_prime_power(orders[y]) {
                continue;
            }
            gens.push(y);
            let proper = self.closure_idx_bounded(&gens, n / 2).is_some();
            gens.pop();
            if proper {
                return false;
            }
            for &h in sub {
                covered[self.mul_idx(h, y)] = true;
            }
        }
        true
    }

    /// Indices `[G : C]` of every cyclic maximal subgroup `C`, one entry per
    /// subgroup, ascending.
    pub fn cyclic_maximal_indices(&self) -> Vec<u64> {
        let n = self.order();
        let mut out = Vec::new();
        if self.is_cyclic() {
            // maximal subgroups of C_n are the index-p subgroups
            if let Ok(f) = factorize(n) {
                out.extend(f.primes());
            }
            return out;
        }
        for (x, sub) in self.cyclic_subgroups_idx() {
            if self.is_maximal_idx(&sub, &[x]) {
                out.push(n / sub.len() as u64);
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether `h` is a maximal subgroup of `self`.
    pub fn is_maximal(&self, h: &PermGroup) -> Result<bool, GroupError> {
        let idx = self.indices_of(h)?;
        let gens = h
            .generators()
            .iter()
            .map(|g| self.index_of(g).ok_or(GroupError::ForeignElement))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.is_maximal_idx(&idx, &gens))
    }

    pub fn has_cyclic_maximal_subgroup(&self) -> bool {
        !self.cyclic_maximal_indices().is_empty()
    }

    /// All cyclic maximal subgroups.
    pub fn cyclic_maximal_subgroups(&self) -> Vec<PermGroup> {
        self.cyclic_subgroups_idx()
            .into_iter()
            .filter(|(x, sub)| self.is_maximal_idx(sub, &[*x]))
            .map(|(x, sub)| self.subgroup_with_generators(sub, &[x]))
            .collect()
    }
}

fn is_prime_power(n: u64) -> bool {
    match factorize(n) {
        Ok(f) => f.factors().len() == 1 && is_power_of(n, f.factors()[0].0),
        Err(_) => false,
    }
}
