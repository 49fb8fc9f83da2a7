use std::fmt;

use num_integer::Integer;

use super::GroupError;

/// A permutation of the points `0..degree`, stored as its image array.
///
/// Ordering is lexicographic on the image array; the identity is the
/// smallest permutation of any given degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    /// Validates that `images` is a bijection on `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let d = images.len();
        if d == 0 {
            return Err(GroupError::NotBijective("empty image array".into()));
        }
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || seen[i] {
                return Err(GroupError::NotBijective(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    pub fn identity(degree: usize) -> Self {
        assert!(degree > 0, "degree must be positive");
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2], &[3, 4]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::NotBijective("degree 0".into()));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &i) in cycle.iter().enumerate() {
                if i >= degree || touched[i] {
                    return Err(GroupError::NotBijective(format!("cycles {cycles:?}")));
                }
                touched[i] = true;
                images[i] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub(crate) fn from_images_unchecked(images: Box<[u32]>) -> Self {
        debug_assert!(Permutation::new(images.iter().map(|&i| i as usize).collect()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, GroupError> {
        if self.degree() != other.degree() {
            return Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked composition; degrees must agree.
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Lengths of all cycles, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Element order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    /// Places `self` on points `offset..offset + self.degree()` of a
    /// permutation of degree `degree`, fixing everything else.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &j) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + j;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, i) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", &*self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::new(images.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn compose_examples() {
        let g = p(&[2, 0, 3, 1]);
        let id = Permutation::identity(4);
        assert_eq!(id.compose(&g).unwrap(), g);
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        let c = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let c2 = Permutation::from_cycles(3, &[&[0, 2, 1]]).unwrap();
        assert_eq!(c.compose(&c).unwrap(), c2);
        assert!(matches!(
            g.compose(&id.shifted(0, 5)),
            Err(GroupError::DegreeMismatch { left: 4, right: 5 })
        ));
    }

    #[test]
    fn compose_applies_right_operand_first() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.apply(1), a.apply(b.apply(1)));
        assert_eq!((ab.apply(0), ab.apply(1), ab.apply(2)), (1, 2, 0));
    }

    #[test]
    fn order_examples() {
        assert_eq!(Permutation::identity(5).order(), 1);
        assert_eq!(
            Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap().order(),
            3
        );
        let x = Permutation::from_cycles(5, &[&[0, 1], &[2, 3, 4]]).unwrap();
        assert_eq!(x.order(), 6);
        assert!(x.pow(6).is_identity());
        assert!((1..6).all(|k| !x.pow(k).is_identity()));
    }

    #[test]
    fn display_cycles() {
        let x = Permutation::from_cycles(6, &[&[3, 5], &[0, 2, 1]]).unwrap();
        assert_eq!(x.to_string(), "(0 2 1)(3 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn identity_is_lexicographically_smallest() {
        let id = Permutation::identity(4);
        let x = p(&[0, 1, 3, 2]);
        assert!(id < x);
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..=12)
            .prop_flat_map(|d| Just((0..d).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::new(v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn cycle_lcm_matches_repeated_composition(x in arb_perm()) {
            let id = Permutation::identity(x.degree());
            let mut acc = x.clone();
            let mut m = 1u64;
            while acc != id {
                acc = acc.mul(&x);
                m += 1;
            }
            prop_assert_eq!(x.order(), m);
        }

        #[test]
        fn composition_is_associative(
            (a, b, c) in (1usize..=9).prop_flat_map(|d| {
                let s = Just((0..d).collect::<Vec<_>>()).prop_shuffle();
                (s.clone(), s.clone(), s)
            })
        ) {
            let (a, b, c) = (
                Permutation::new(a).unwrap(),
                Permutation::new(b).unwrap(),
                Permutation::new(c).unwrap(),
            );
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }
}
