//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's isomorphism or subgroup code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use psigroup::PermGroup;

/// Multiplication table `t[a][b] = index(a * b)` of a group, identity at 0.
pub fn cayley_table(g: &PermGroup) -> Vec<Vec<usize>> {
    let els = g.elements();
    els.iter()
        .map(|a| {
            els.iter()
                .map(|b| g.index_of(&a.compose(b).unwrap()).unwrap())
                .collect()
        })
        .collect()
}

fn closure_size(t: &[Vec<usize>], gens: &[usize]) -> usize {
    let mut seen = vec![false; t.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = t[x][g];
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count
}

/// Table relabelled in breadth-first order from the identity along the
/// ordered generator tuple.
fn bfs_relabel(t: &[Vec<usize>], gens: &[usize]) -> Vec<u8> {
    let n = t.len();
    let mut label = vec![usize::MAX; n];
    let mut order = vec![0usize];
    label[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &g in gens {
            let y = t[x][g];
            if label[y] == usize::MAX {
                label[y] = order.len();
                order.push(y);
            }
        }
    }
    let mut out = Vec::with_capacity(n * n);
    for &a in &order {
        for &b in &order {
            out.push(label[t[a][b]] as u8);
        }
    }
    out
}

/// A complete isomorphism invariant: the lexicographically least
/// breadth-first relabelling over all generating tuples of minimal length.
pub fn canonical_form(t: &[Vec<usize>]) -> Vec<u8> {
    let n = t.len();
    if n == 1 {
        return vec![0];
    }
    for d in 1..=n {
        let mut best: Option<Vec<u8>> = None;
        let mut tuple = vec![1usize; d];
        loop {
            if closure_size(t, &tuple) == n {
                let form = bfs_relabel(t, &tuple);
                if best.as_ref().is_none_or(|b| form < *b) {
                    best = Some(form);
                }
            }
            // next tuple over non-identity elements
            let mut i = 0;
            while i < d {
                tuple[i] += 1;
                if tuple[i] < n {
                    break;
                }
                tuple[i] = 1;
                i += 1;
            }
            if i == d {
                break;
            }
        }
        if let Some(b) = best {
            return b;
        }
    }
    unreachable!("the whole group generates itself")
}

pub fn canonical_form_of(g: &PermGroup) -> Vec<u8> {
    canonical_form(&cayley_table(g))
}

type Perm = Vec<u8>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

/// Closure of `gens` if it stays semiregular with at most `n` elements.
fn semiregular_closure(n: usize, gens: &[Perm]) -> Option<Vec<Perm>> {
    let id: Perm = (0..n as u8).collect();
    let mut set = BTreeSet::from([id.clone()]);
    let mut list = vec![id];
    let mut head = 0;
    while head < list.len() {
        let x = list[head].clone();
        head += 1;
        for g in gens {
            let y = compose(g, &x);
            if set.contains(&y) {
                continue;
            }
            if y.iter().enumerate().any(|(i, &v)| v as usize == i) || list.len() == n {
                return None;
            }
            set.insert(y.clone());
            list.push(y);
        }
    }
    Some(list)
}

fn for_each_perm_with(n: usize, first: u8, f: &mut impl FnMut(&Perm)) {
    let mut rest: Vec<u8> = (0..n as u8).filter(|&x| x != first).collect();
    fn rec(k: usize, rest: &mut Vec<u8>, first: u8, f: &mut impl FnMut(&Perm)) {
        if k == rest.len() {
            let mut p = vec![first];
            p.extend_from_slice(rest);
            f(&p);
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            rec(k + 1, rest, first, f);
            rest.swap(k, i);
        }
    }
    rec(0, &mut rest, first, f);
}

fn extend_regular(n: usize, gens: &mut Vec<Perm>, elems: &[Perm], out: &mut BTreeSet<Vec<u8>>) {
    if elems.len() == n {
        // regular: element h is identified with h(0), and h * b = h(b)
        let mut by_point = vec![0usize; n];
        for (i, h) in elems.iter().enumerate() {
            by_point[h[0] as usize] = i;
        }
        let t: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                let h = &elems[by_point[a]];
                (0..n).map(|b| h[b] as usize).collect()
            })
            .collect();
        out.insert(canonical_form(&t));
        return;
    }
    let orbit: BTreeSet<u8> = elems.iter().map(|h| h[0]).collect();
    let g = (0..n as u8).find(|x| !orbit.contains(x)).unwrap();
    for_each_perm_with(n, g, &mut |p| {
        gens.push(p.clone());
        if let Some(next) = semiregular_closure(n, gens) {
            extend_regular(n, gens, &next, out);
        }
        gens.pop();
    });
}

/// Canonical forms of every group of order `n`, found by enumerating the
/// regular permutation representations on `n` points. Exhaustive, so only
/// practical for `n <= 8`.
pub fn all_groups_of_order(n: usize) -> BTreeSet<Vec<u8>> {
    let mut out = BTreeSet::new();
    let id: Perm = (0..n as u8).collect();
    extend_regular(n, &mut Vec::new(), &[id], &mut out);
    out
}

/// Number of isomorphism classes of groups of order 1..=16. Orders up to 8
/// are recomputed by [`all_groups_of_order`]; orders 9..=16 are the
/// standard counts, recorded here as fixed constants.
pub const GROUP_COUNTS: [usize; 16] = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14];
