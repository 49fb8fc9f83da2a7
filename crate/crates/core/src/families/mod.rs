//! Constructors for the group families under study, and a catalog of every
//! isomorphism class of order at most 16.

mod catalog;

pub use catalog::{small_group_catalog, CatalogEntry, Recipe, CATALOG_MAX_ORDER};

use num_integer::Integer;

use crate::permgroup::{GroupError, PermGroup, Permutation};

fn invalid(msg: impl Into<String>) -> GroupError {
    GroupError::InvalidParameters(msg.into())
}

fn full_cycle(degree: usize) -> Permutation {
    let images = (0..degree).map(|i| (i + 1) % degree).collect();
    Permutation::new(images).expect("n-cycle")
}

/// The cyclic group `C_n` as a single `n`-cycle on `n` points.
pub fn cyclic(n: u64) -> Result<PermGroup, GroupError> {
    if n == 0 {
        return Err(invalid("cyclic group order must be positive"));
    }
    let d = n as usize;
    Ok(PermGroup::new(d, vec![full_cycle(d)])?.with_label(format!("C{n}")))
}

/// `G x H` acting on the disjoint union of the two domains.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> Result<PermGroup, GroupError> {
    let degree = g.degree() + h.degree();
    let gens = g
        .generators()
        .iter()
        .map(|x| x.shifted(0, degree))
        .chain(h.generators().iter().map(|y| y.shifted(g.degree(), degree)))
        .collect();
    let label = format!("{}x{}", g.label().unwrap_or("G"), h.label().unwrap_or("H"));
    Ok(PermGroup::new(degree, gens)?.with_label(label))
}

/// `C_{f_1} x ... x C_{f_r}`.
pub fn abelian(factors: &[u64]) -> Result<PermGroup, GroupError> {
    if factors.is_empty() {
        return Err(invalid("abelian group needs at least one factor"));
    }
    if let Some(&f) = factors.iter().find(|&&f| f < 2) {
        return Err(invalid(format!("abelian factor {f} must be at least 2")));
    }
    let degree: usize = factors.iter().map(|&f| f as usize).sum();
    let mut offset = 0;
    let mut gens = Vec::with_capacity(factors.len());
    for &f in factors {
        gens.push(full_cycle(f as usize).shifted(offset, degree));
        offset += f as usize;
    }
    let label = factors
        .iter()
        .map(|f| format!("C{f}"))
        .collect::<Vec<_>>()
        .join("x");
    Ok(PermGroup::new(degree, gens)?.with_label(label))
}

/// Dihedral group of order `two_n`, acting on the vertices of an `n`-gon.
/// `dihedral(4)` is the Klein four-group `C_2 x C_2`.
pub fn dihedral(two_n: u64) -> Result<PermGroup, GroupError> {
    if two_n < 4 || !two_n.is_multiple_of(2) {
        return Err(invalid(format!(
            "dihedral order {two_n} must be even and >= 4"
        )));
    }
    let n = (two_n / 2) as usize;
    let g = if n == 2 {
        abelian(&[2, 2])?
    } else {
        let rotation = full_cycle(n);
        let reflection = Permutation::new((0..n).map(|i| (n - i) % n).collect())?;
        PermGroup::new(n, vec![rotation, reflection])?
    };
    Ok(g.with_label(format!("D{two_n}")))
}

/// Dicyclic group `<a, x | a^{2n} = 1, x^2 = a^n, x a x^-1 = a^-1>` of
/// order `four_n`; generalized quaternion when `four_n` is a power of two.
pub fn dicyclic(four_n: u64) -> Result<PermGroup, GroupError> {
    if four_n < 8 || !four_n.is_multiple_of(4) {
        return Err(invalid(format!(
            "dicyclic order {four_n} must be a multiple of 4 and >= 8"
        )));
    }
    let n = four_n / 4;
    let label = if four_n.is_power_of_two() {
        format!("Q{four_n}")
    } else {
        format!("Dic{four_n}")
    };
    Ok(cyclic_extension(&[2 * n], 2, &[vec![2 * n - 1]], &[n])?.with_label(label))
}

/// Semidihedral group `<a, x | a^{2^{k-1}} = x^2 = 1, x a x^-1 = a^{2^{k-2}-1}>`
/// of order `two_k = 2^k`, `k >= 4`.
pub fn semidihedral(two_k: u64) -> Result<PermGroup, GroupError> {
    if two_k < 16 || !two_k.is_power_of_two() {
        return Err(invalid(format!(
            "semidihedral order {two_k} must be a power of two >= 16"
        )));
    }
    let m = two_k / 2;
    Ok(cyclic_extension(&[m], 2, &[vec![m / 2 - 1]], &[0])?.with_label(format!("SD{two_k}")))
}

/// Symmetric group on `n` points, `1 <= n <= 6`.
pub fn symmetric(n: usize) -> Result<PermGroup, GroupError> {
    if !(1..=6).contains(&n) {
        return Err(invalid(format!("symmetric degree {n} outside 1..=6")));
    }
    let gens = match n {
        1 => vec![Permutation::identity(1)],
        2 => vec![full_cycle(2)],
        _ => vec![full_cycle(n), Permutation::from_cycles(n, &[&[0, 1]])?],
    };
    Ok(PermGroup::new(n, gens)?.with_label(format!("S{n}")))
}

/// Alternating group on `n` points, `3 <= n <= 6`, generated by the
/// 3-cycles `(0 1 i)`.
pub fn alternating(n: usize) -> Result<PermGroup, GroupError> {
    if !(3..=6).contains(&n) {
        return Err(invalid(format!("alternating degree {n} outside 3..=6")));
    }
    let gens = (2..n)
        .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PermGroup::new(n, gens)?.with_label(format!("A{n}")))
}

/// `C_m ⋊ C_k` with the generator of `C_k` acting by `a -> a^e`.
///
/// Realized on `m + k` points: affine maps `y -> e^j y + b` of `Z_m` paired
/// with rotations of `Z_k`. Requires `gcd(e, m) = 1` and `e^k = 1 (mod m)`.
pub fn semidirect_cyclic(m: u64, k: u64, e: i64) -> Result<PermGroup, GroupError> {
    if m == 0 || k == 0 {
        return Err(invalid("semidirect factors must be positive"));
    }
    let e_mod = e.rem_euclid(m as i64) as u64;
    if m > 1 && e_mod.gcd(&m) != 1 {
        return Err(invalid(format!("gcd({e}, {m}) != 1")));
    }
    if pow_mod(e_mod, k, m) != 1 % m {
        return Err(invalid(format!("{e}^{k} != 1 (mod {m})")));
    }
    let (md, kd) = (m as usize, k as usize);
    let degree = md + kd;
    let translation = full_cycle(md).shifted(0, degree);
    let mut images: Vec<usize> = (0..md).map(|y| (y * e_mod as usize) % md).collect();
    images.extend((0..kd).map(|j| md + (j + 1) % kd));
    let twist = Permutation::new(images)?;
    let g = PermGroup::new(degree, vec![translation, twist])?;
    debug_assert_eq!(g.order(), m * k);
    Ok(g.with_label(format!("C{m}:C{k}[{e_mod}]")))
}

/// `C_{2k} x C_2` for odd `k`: the non-cyclic groups attaining the 7/11
/// bound.
pub fn prop2_group(k: u64) -> Result<PermGroup, GroupError> {
    if k.is_multiple_of(2) {
        return Err(invalid(format!("k = {k} must be odd")));
    }
    abelian(&[2 * k, 2])
}

/// Extension of `A = Z_{f_1} x ... x Z_{f_r}` by `C_k`, realized by its left
/// regular representation on `|A| k` points.
///
/// Elements are pairs `(u, j)` with `u` in `A`, `0 <= j < k`, multiplied as
/// `(u, j)(v, l) = (u + M^j v + [j + l >= k] t, j + l mod k)`. Column `i` of
/// `matrix` (given row-major) is the image of the `i`-th basis vector under
/// conjugation by the `C_k` generator, and `tail = x^k` must be fixed by
/// `M`. Split extensions take `tail = 0`.
pub fn cyclic_extension(
    factors: &[u64],
    k: u64,
    matrix: &[Vec<u64>],
    tail: &[u64],
) -> Result<PermGroup, GroupError> {
    let ext = Extension::new(factors, k, matrix, tail)?;
    ext.build()
}

struct Extension {
    factors: Vec<u64>,
    k: u64,
    /// columns[i] = image of basis vector i
    columns: Vec<Vec<u64>>,
    tail: Vec<u64>,
}

impl Extension {
    fn new(factors: &[u64], k: u64, matrix: &[Vec<u64>], tail: &[u64]) -> Result<Self, GroupError> {
        let r = factors.len();
        if r == 0 || k == 0 || factors.iter().any(|&f| f < 2) {
            return Err(invalid("extension needs factors >= 2 and k >= 1"));
        }
        if matrix.len() != r || matrix.iter().any(|row| row.len() != r) || tail.len() != r {
            return Err(invalid("matrix must be r x r and tail of length r"));
        }
        let columns: Vec<Vec<u64>> = (0..r)
            .map(|i| (0..r).map(|row| matrix[row][i] % factors[row]).collect())
            .collect();
        let ext = Extension {
            factors: factors.to_vec(),
            k,
            columns,
            tail: tail.iter().zip(factors).map(|(t, f)| t % f).collect(),
        };
        for (i, &f) in factors.iter().enumerate() {
            if !ext.is_zero(&ext.scale(&ext.columns[i], f)) {
                return Err(invalid(format!(
                    "image of generator {i} has order not dividing {f}"
                )));
            }
        }
        let size = ext.abelian_size();
        let mut hit = vec![false; size];
        for u in 0..size {
            let v = ext.encode(&ext.act(&ext.decode(u), 1));
            if hit[v] {
                return Err(invalid("action matrix is not invertible"));
            }
            hit[v] = true;
        }
        for i in 0..r {
            let mut basis = vec![0; r];
            basis[i] = 1;
            if ext.act(&basis, k) != basis {
                return Err(invalid(format!("action has order not dividing {k}")));
            }
        }
        if ext.act(&ext.tail, 1) != ext.tail {
            return Err(invalid("tail is not fixed by the action"));
        }
        Ok(ext)
    }

    fn abelian_size(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    fn decode(&self, mut u: usize) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&f| {
                let c = u as u64 % f;
                u /= f as usize;
                c
            })
            .collect()
    }

    fn encode(&self, v: &[u64]) -> usize {
        v.iter()
            .zip(&self.factors)
            .rev()
            .fold(0usize, |acc, (&c, &f)| acc * f as usize + c as usize)
    }

    fn is_zero(&self, v: &[u64]) -> bool {
        v.iter().all(|&c| c == 0)
    }

    fn scale(&self, v: &[u64], s: u64) -> Vec<u64> {
        v.iter()
            .zip(&self.factors)
            .map(|(&c, &f)| (c * (s % f)) % f)
            .collect()
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), &f)| (x + y) % f)
            .collect()
    }

    /// `M^times v`
    fn act(&self, v: &[u64], times: u64) -> Vec<u64> {
        let mut cur = v.to_vec();
        for _ in 0..times {
            let mut next = vec![0; cur.len()];
            for (i, &c) in cur.iter().enumerate() {
                next = self.add(&next, &self.scale(&self.columns[i], c));
            }
            cur = next;
        }
        cur
    }

    fn mul(&self, (u, j): (&[u64], u64), (v, l): (&[u64], u64)) -> (Vec<u64>, u64) {
        let mut w = self.add(u, &self.act(v, j));
        if j + l >= self.k {
            w = self.add(&w, &self.tail);
        }
        (w, (j + l) % self.k)
    }

    fn index(&self, (u, j): (&[u64], u64)) -> usize {
        j as usize * self.abelian_size() + self.encode(u)
    }

    fn element(&self, idx: usize) -> (Vec<u64>, u64) {
        let a = self.abelian_size();
        (self.decode(idx % a), (idx / a) as u64)
    }

    fn left_mult(&self, g: (&[u64], u64)) -> Result<Permutation, GroupError> {
        let n = self.abelian_size() * self.k as usize;
        let images = (0..n)
            .map(|z| {
                let (v, l) = self.element(z);
                let (w, m) = self.mul(g, (&v, l));
                self.index((&w, m))
            })
            .collect();
        Permutation::new(images)
    }

    fn build(&self) -> Result<PermGroup, GroupError> {
        let r = self.factors.len();
        let n = self.abelian_size() * self.k as usize;
        let zero = vec![0u64; r];
        let mut gen_elems: Vec<(Vec<u64>, u64)> = (0..r)
            .map(|i| {
                let mut e = zero.clone();
                e[i] = 1;
                (e, 0)
            })
            .collect();
        if self.k > 1 {
            gen_elems.push((zero, 1));
        }
        // (g y) z = g (y z) for generators g suffices once the generators
        // reach every element.
        for (g, j) in &gen_elems {
            for y in 0..n {
                let (yv, yl) = self.element(y);
                let (gy, gyl) = self.mul((g, *j), (&yv, yl));
                for z in 0..n {
                    let (zv, zl) = self.element(z);
                    let (yz, yzl) = self.mul((&yv, yl), (&zv, zl));
                    if self.mul((&gy, gyl), (&zv, zl)) != self.mul((g, *j), (&yz, yzl)) {
                        return Err(invalid(
                            "extension data does not define an associative product",
                        ));
                    }
                }
            }
        }
        let gens = gen_elems
            .iter()
            .map(|(g, j)| self.left_mult((g, *j)))
            .collect::<Result<Vec<_>, _>>()?;
        let g = PermGroup::new(n, gens)?;
        if g.order() as usize != n {
            return Err(invalid("generators do not reach every element"));
        }
        Ok(g)
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m = u128::from(m);
    let mut acc = 1u128 % m;
    let mut b = u128::from(base) % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::psi;

    #[test]
    fn cyclic_examples() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(psi(&cyclic(6).unwrap()), 21);
        assert_eq!(psi(&cyclic(12).unwrap()), 77);
        assert!(cyclic(12).unwrap().is_cyclic());
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn direct_product_examples() {
        let c2 = cyclic(2).unwrap();
        let v4 = direct_product(&c2, &c2).unwrap();
        assert_eq!(psi(&v4), 7);
        assert_eq!(psi(&direct_product(&v4, &c2).unwrap()), 15);
        let s3 = symmetric(3).unwrap();
        let s3x1 = direct_product(&s3, &cyclic(1).unwrap()).unwrap();
        assert!(s3x1.is_isomorphic(&s3).unwrap());
        assert_eq!(s3x1.label(), Some("S3xC1"));
    }

    #[test]
    fn abelian_examples() {
        assert_eq!(
            abelian(&[2, 2]).unwrap().order_profile(),
            direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap())
                .unwrap()
                .order_profile()
        );
        let g = abelian(&[4, 2]).unwrap();
        assert_eq!((g.order(), g.exponent_max()), (8, 4));
        let g = abelian(&[3, 3]).unwrap();
        assert!(!g.is_cyclic());
        assert_eq!(psi(&g), 25);
        assert!(abelian(&[1]).is_err());
        assert!(abelian(&[]).is_err());
    }

    #[test]
    fn dihedral_examples() {
        let d6 = dihedral(6).unwrap();
        assert!(d6.is_isomorphic(&symmetric(3).unwrap()).unwrap());
        assert_eq!(psi(&d6), 13);
        let d8 = dihedral(8).unwrap();
        let p = d8.order_profile();
        assert_eq!((p.count(1), p.count(2), p.count(4)), (1, 5, 2));
        assert_eq!(psi(&d8), 19);
        assert!(dihedral(4)
            .unwrap()
            .is_isomorphic(&abelian(&[2, 2]).unwrap())
            .unwrap());
        assert!(dihedral(5).is_err());
        assert!(dihedral(2).is_err());
        for n in (3..=31).step_by(2) {
            let d = dihedral(2 * n).unwrap();
            assert_eq!(d.order(), 2 * n);
            assert_eq!(d.order_profile().count(2), n);
        }
    }

    #[test]
    fn dicyclic_examples() {
        let q8 = dicyclic(8).unwrap();
        let p = q8.order_profile();
        assert_eq!((p.count(1), p.count(2), p.count(4)), (1, 1, 6));
        assert_eq!(psi(&q8), 27);
        let dic12 = dicyclic(12).unwrap();
        let p = dic12.order_profile();
        let got: Vec<(u64, u64)> = p.counts().iter().map(|(&a, &b)| (a, b)).collect();
        assert_eq!(got, vec![(1, 1), (2, 1), (3, 2), (4, 6), (6, 2)]);
        let q16 = dicyclic(16).unwrap();
        assert_eq!(q16.order_profile().count(2), 1);
        for four_n in (8..=64).step_by(4) {
            let g = dicyclic(four_n).unwrap();
            assert_eq!(g.order(), four_n);
            assert_eq!(g.order_profile().count(2), 1);
        }
        assert!(dicyclic(6).is_err());
        assert!(dicyclic(4).is_err());
    }

    #[test]
    fn semidihedral_examples() {
        let sd = semidihedral(16).unwrap();
        assert_eq!(sd.order(), 16);
        assert_eq!(sd.exponent_max(), 8);
        assert!(sd.has_cyclic_subgroup_of_index_p(2).unwrap());
        assert!(!sd.is_abelian());
        assert_eq!(sd.derived_subgroup().order(), 4);
        assert!(!sd.is_isomorphic(&dihedral(16).unwrap()).unwrap());
        assert!(!sd.is_isomorphic(&dicyclic(16).unwrap()).unwrap());
        assert_eq!(semidihedral(32).unwrap().order(), 32);
        assert!(semidihedral(8).is_err());
        assert!(semidihedral(24).is_err());
    }

    #[test]
    fn symmetric_alternating_examples() {
        assert_eq!(psi(&symmetric(3).unwrap()), 13);
        assert_eq!(psi(&alternating(5).unwrap()), 211);
        let a3 = alternating(3).unwrap();
        assert!(a3.is_cyclic());
        assert_eq!(a3.order(), 3);
        for n in 1..=6usize {
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(symmetric(n).unwrap().order(), fact);
            if n >= 3 {
                assert_eq!(alternating(n).unwrap().order(), fact / 2);
            }
        }
        assert!(symmetric(7).is_err());
        assert!(alternating(2).is_err());
    }

    #[test]
    fn semidirect_examples() {
        let g = semidirect_cyclic(7, 3, 2).unwrap();
        assert_eq!(g.order(), 21);
        assert!(!g.is_abelian());
        assert_eq!(psi(&g), 85);
        let g = semidirect_cyclic(5, 4, 2).unwrap();
        assert_eq!(g.order(), 20);
        let p = g.sylow_subgroup(5).unwrap();
        let z = g.centralizer(&p).unwrap();
        assert_eq!(z.order(), 5); // = P, so C_F(P) is trivial
        let direct = semidirect_cyclic(6, 4, 1).unwrap();
        assert!(direct.is_isomorphic(&abelian(&[6, 4]).unwrap()).unwrap());
        assert!(semidirect_cyclic(7, 3, 3).is_err());
        assert!(semidirect_cyclic(8, 2, 2).is_err());
        assert!(semidirect_cyclic(7, 3, -5).is_ok());
    }

    #[test]
    fn prop2_examples() {
        let g = prop2_group(1).unwrap();
        assert_eq!(psi(&g), 7);
        let g = prop2_group(3).unwrap();
        assert_eq!((g.order(), psi(&g)), (12, 49));
        assert_eq!(psi(&prop2_group(5).unwrap()), 147);
        for k in (1..=25).step_by(2) {
            let g = prop2_group(k).unwrap();
            assert_eq!(g.order(), 4 * k);
            assert!(!g.is_cyclic());
        }
        assert!(prop2_group(2).is_err());
    }

    #[test]
    fn extension_validation() {
        // C_4 x C_2 extended by C_2 with a -> ab, b -> b
        let g = cyclic_extension(&[4, 2], 2, &[vec![1, 0], vec![1, 1]], &[0, 0]).unwrap();
        assert_eq!(g.order(), 16);
        assert!(!g.is_abelian());
        // non-invertible action
        assert!(cyclic_extension(&[4], 2, &[vec![2]], &[0]).is_err());
        // a -> a^3 has order 2, not dividing 3
        assert!(cyclic_extension(&[4], 3, &[vec![3]], &[0]).is_err());
        // tail not fixed: x^2 = a with x a x^-1 = a^-1
        assert!(cyclic_extension(&[4], 2, &[vec![3]], &[1]).is_err());
        // ill-defined map Z_2 -> Z_3 x Z_2
        assert!(cyclic_extension(&[3, 2], 2, &[vec![2, 1], vec![0, 1]], &[0, 0]).is_err());
    }
}
