use super::{GroupError, PermGroup, Permutation};

/// Largest order accepted by [`PermGroup::is_isomorphic`].
pub const ISOMORPHISM_ORDER_CAP: u64 = 64;

/// Per-element class invariant: (element order, centralizer size).
fn element_signatures(g: &PermGroup) -> Vec<(u64, usize)> {
    let n = g.elements().len();
    (0..n)
        .map(|x| {
            let cent = (0..n)
                .filter(|&y| g.mul_idx(x, y) == g.mul_idx(y, x))
                .count();
            (g.element_orders()[x], cent)
        })
        .collect()
}

fn invariants_match(
    g: &PermGroup,
    h: &PermGroup,
    sg: &[(u64, usize)],
    sh: &[(u64, usize)],
) -> bool {
    if g.order() != h.order()
        || g.order_profile() != h.order_profile()
        || g.is_abelian() != h.is_abelian()
        || g.center().order() != h.center().order()
    {
        return false;
    }
    let (mut a, mut b) = (sg.to_vec(), sh.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    a == b && g.derived_orders() == h.derived_orders()
}

impl PermGroup {
    pub fn is_isomorphic(&self, other: &PermGroup) -> Result<bool, GroupError> {
        Ok(self.find_isomorphism(other)?.is_some())
    }

    /// Searches for an isomorphism `self -> other`, returned as images of a
    /// generating set of `self`.
    pub fn find_isomorphism(
        &self,
        other: &PermGroup,
    ) -> Result<Option<Vec<(Permutation, Permutation)>>, GroupError> {
        for g in [self, other] {
            if g.order() > ISOMORPHISM_ORDER_CAP {
                return Err(GroupError::OrderCapExceeded {
                    order: g.order(),
                    cap: ISOMORPHISM_ORDER_CAP,
                });
            }
        }
        let sg = element_signatures(self);
        let sh = element_signatures(other);
        if !invariants_match(self, other, &sg, &sh) {
            return Ok(None);
        }
        let all: Vec<usize> = (0..self.elements().len()).collect();
        let gens: Vec<usize> = self
            .subgroup_from_indices(all)
            .generators()
            .iter()
            .map(|x| self.index_of(x).unwrap())
            .filter(|&x| x != 0)
            .collect();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&x| (0..sh.len()).filter(|&y| sh[y] == sg[x]).collect())
            .collect();
        let mut images = Vec::with_capacity(gens.len());
        if search(self, other, &gens, &candidates, &mut images) {
            Ok(Some(
                gens.iter()
                    .zip(&images)
                    .map(|(&x, &y)| (self.elements()[x].clone(), other.elements()[y].clone()))
                    .collect(),
            ))
        } else {
            Ok(None)
        }
    }
}

fn search(
    g: &PermGroup,
    h: &PermGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> bool {
    let depth = images.len();
    if depth == gens.len() {
        return true;
    }
    for &y in &candidates[depth] {
        images.push(y);
        if extends_to_injective_hom(g, h, &gens[..=depth], images)
            && search(g, h, gens, candidates, images)
        {
            return true;
        }
        images.pop();
    }
    false
}

/// Walks the Cayley graph of `<gens>` and checks that `x -> images` defines
/// an injective homomorphism on it.
fn extends_to_injective_hom(
    g: &PermGroup,
    h: &PermGroup,
    gens: &[usize],
    images: &[usize],
) -> bool {
    const UNSET: usize = usize::MAX;
    let mut phi = vec![UNSET; g.elements().len()];
    let mut used = vec![false; h.elements().len()];
    phi[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul_idx(s, x);
            let want = h.mul_idx(t, phi[x]);
            if phi[y] == UNSET {
                if used[want] {
                    return false;
                }
                phi[y] = want;
                used[want] = true;
                queue.push(y);
            } else if phi[y] != want {
                return false;
            }
        }
    }
    true
}
