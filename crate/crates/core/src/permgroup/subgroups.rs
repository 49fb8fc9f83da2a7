use num_integer::Integer;

use super::{GroupError, PermGroup, Permutation};
use crate::arith::factorize;

impl PermGroup {
    /// The subgroup generated by `seed`, each element of which must lie in
    /// `self`.
    pub fn subgroup_generated(&self, seed: &[Permutation]) -> Result<PermGroup, GroupError> {
        let gens = seed
            .iter()
            .map(|x| self.index_of(x).ok_or(GroupError::ForeignElement))
            .collect::<Result<Vec<_>, _>>()?;
        let gens: Vec<usize> = gens.into_iter().filter(|&g| g != 0).collect();
        let idx = self.closure_idx(&gens);
        Ok(self.subgroup_with_generators(idx, &gens))
    }

    /// `{g in G : gh = hg for every generator h of H}`.
    pub fn centralizer(&self, h: &PermGroup) -> Result<PermGroup, GroupError> {
        self.check_subgroup(h)?;
        let hg = h.generators();
        let idx: Vec<usize> = (0..self.elements().len())
            .filter(|&i| {
                let g = &self.elements()[i];
                hg.iter().all(|x| g.mul(x) == x.mul(g))
            })
            .collect();
        Ok(self.subgroup_from_indices(idx))
    }

    /// `{g in G : g H g^-1 = H}`.
    pub fn normalizer(&self, h: &PermGroup) -> Result<PermGroup, GroupError> {
        self.check_subgroup(h)?;
        let idx: Vec<usize> = (0..self.elements().len())
            .filter(|&i| normalizes(&self.elements()[i], h))
            .collect();
        Ok(self.subgroup_from_indices(idx))
    }

    pub fn is_normal(&self, h: &PermGroup) -> Result<bool, GroupError> {
        self.check_subgroup(h)?;
        Ok(self.generators().iter().all(|g| normalizes(g, h)))
    }

    /// Whether every element of `h` commutes with every element of `self`.
    pub fn is_central(&self, h: &PermGroup) -> Result<bool, GroupError> {
        self.check_subgroup(h)?;
        Ok(h.generators()
            .iter()
            .all(|x| self.generators().iter().all(|g| g.mul(x) == x.mul(g))))
    }

    pub fn center(&self) -> PermGroup {
        self.centralizer(self)
            .expect("a group is a subgroup of itself")
    }

    /// The subgroup generated by all commutators `x^-1 y^-1 x y`.
    pub fn derived_subgroup(&self) -> PermGroup {
        let n = self.elements().len();
        let mut gens: Vec<usize> = Vec::new();
        let mut inside = vec![false; n];
        inside[0] = true;
        for x in 0..n {
            let xi = self.inv_idx(x);
            for y in 0..n {
                let yi = self.inv_idx(y);
                let c = self.mul_idx(self.mul_idx(xi, yi), self.mul_idx(x, y));
                if !inside[c] {
                    gens.push(c);
                    for i in self.closure_idx(&gens) {
                        inside[i] = true;
                    }
                }
            }
        }
        let idx = (0..n).filter(|&i| inside[i]).collect();
        self.subgroup_with_generators(idx, &gens)
    }

    /// `G, G', G'', ...` up to and including the first repeated term.
    /// The final entry equals its predecessor unless it is trivial.
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            if last.order() == 1 {
                return series;
            }
            let next = last.derived_subgroup();
            let stable = next.order() == last.order();
            series.push(next);
            if stable {
                return series;
            }
        }
    }

    pub fn derived_orders(&self) -> Vec<u64> {
        self.derived_series().iter().map(PermGroup::order).collect()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    /// A Sylow `p`-subgroup: grown from the cyclic subgroup of a largest
    /// `p`-element by adjoining `p`-elements of its normalizer.
    pub fn sylow_subgroup(&self, p: u64) -> Result<PermGroup, GroupError> {
        let order = self.order();
        let f = factorize(order).map_err(|e| GroupError::InvalidParameters(e.to_string()))?;
        if f.exponent_of(p) == 0 {
            return Err(GroupError::NotPrimeDivisor { p, order });
        }
        let target = f.p_part(p) as usize;
        let orders = self.element_orders();
        let is_p_elem = |i: usize| is_power_of(orders[i], p);
        let start = (0..orders.len())
            .filter(|&i| is_p_elem(i))
            .max_by_key(|&i| (orders[i], std::cmp::Reverse(i)))
            .expect("identity is a p-element");
        let mut gens = vec![start];
        let mut current = self.closure_idx(&gens);
        while current.len() < target {
            let mut inside = vec![false; orders.len()];
            for &i in &current {
                inside[i] = true;
            }
            let normalizes_current = |g: usize| {
                let gi = self.inv_idx(g);
                gens.iter()
                    .all(|&h| inside[self.mul_idx(self.mul_idx(g, h), gi)])
            };
            let y = (0..orders.len())
                .find(|&y| !inside[y] && is_p_elem(y) && normalizes_current(y))
                .expect("a p-subgroup below Sylow order has a p-element in its normalizer");
            gens.push(y);
            current = self.closure_idx(&gens);
        }
        Ok(self.subgroup_with_generators(current, &gens))
    }

    /// Left-multiplication action on the left cosets of a normal subgroup.
    pub fn quotient_group(&self, n: &PermGroup) -> Result<PermGroup, GroupError> {
        if !self.is_normal(n)? {
            return Err(GroupError::NotNormal);
        }
        let n_idx = self.indices_of(n)?;
        let size = self.elements().len();
        let mut coset = vec![usize::MAX; size];
        let mut reps = Vec::new();
        for x in 0..size {
            if coset[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &m in &n_idx {
                coset[self.mul_idx(x, m)] = c;
            }
        }
        let degree = reps.len();
        let gens = self
            .generators()
            .iter()
            .map(|g| {
                let gi = self.index_of(g).expect("generator in group");
                let images = reps
                    .iter()
                    .map(|&r| coset[self.mul_idx(gi, r)] as u32)
                    .collect();
                Permutation::from_images_unchecked(images)
            })
            .collect();
        PermGroup::new(degree, gens)
    }

    /// Whether the elements of order prime to `q` form a subgroup of order
    /// `|G| / q^a`, i.e. `G` has a normal `q`-complement.
    pub fn is_q_nilpotent(&self, q: u64) -> Result<bool, GroupError> {
        let order = self.order();
        let f = factorize(order).map_err(|e| GroupError::InvalidParameters(e.to_string()))?;
        if f.exponent_of(q) == 0 {
            return Err(GroupError::NotPrimeDivisor { p: q, order });
        }
        let complement = order / f.p_part(q);
        let s: Vec<usize> = (0..self.elements().len())
            .filter(|&i| self.element_orders()[i].gcd(&q) == 1)
            .collect();
        if s.len() as u64 != complement {
            return Ok(false);
        }
        Ok(self.closure_idx_bounded(&s, s.len()).is_some())
    }

    /// For a `p`-group: whether some element has order at least `|P| / p`.
    pub fn has_cyclic_subgroup_of_index_p(&self, p: u64) -> Result<bool, GroupError> {
        if !is_power_of(self.order(), p) {
            return Err(GroupError::NotPGroup {
                p,
                order: self.order(),
            });
        }
        Ok(self.exponent_max() * p >= self.order())
    }

    fn check_subgroup(&self, h: &PermGroup) -> Result<(), GroupError> {
        if h.degree() != self.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: h.degree(),
            });
        }
        if self.contains_group(h) {
            Ok(())
        } else {
            Err(GroupError::ForeignElement)
        }
    }
}

fn normalizes(g: &Permutation, h: &PermGroup) -> bool {
    let gi = g.inverse();
    h.generators()
        .iter()
        .all(|x| h.contains(&g.mul(x).mul(&gi)))
}

pub(crate) fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 || p < 2 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
