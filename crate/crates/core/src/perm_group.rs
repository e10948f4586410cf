//! Finite permutation groups acting on the right.
//!
//! Points are `0..degree`. A [`Permutation`] stores the image of every point,
//! and composition follows the right-action convention `x(pq) = (xp)q`: the
//! product `p * q` applies `p` first, then `q`.
//!
//! [`PermutationGroup`] values are always fully enumerated by breadth-first
//! closure from their generators. Element `0` is the identity and the
//! enumeration order is deterministic, so element indices are stable and can
//! be written to files.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Default upper bound on the number of elements enumerated by
/// [`PermutationGroup::from_generators`].
pub const DEFAULT_ENUMERATION_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image list is not a bijection on 0..{degree}")]
    NotBijection { degree: usize },
    #[error("generator list is empty")]
    NoGenerators,
    #[error("group closure exceeded the enumeration cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("permutation {0} is not an element of the group")]
    NotInGroup(Permutation),
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("unknown group spec `{0}`")]
    UnknownGroupSpec(String),
}

/// A bijection of `0..n`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from `images[i] = image of i`, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(PermError::NotBijection { degree: n });
            }
            seen[img] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of `degree` points from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if p >= degree || next >= degree {
                    return Err(PermError::PointOutOfRange {
                        point: p.max(next),
                        degree,
                    });
                }
                images[p] = next;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `point`, i.e. `point * self`.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Right-action product: `result[i] = other[self[i]]`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    // Unchecked product for callers that already know the degrees agree.
    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Permutation { images }
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut result = Permutation::identity(self.degree());
        let mut sq = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = result.then(&sq);
            }
            sq = sq.then(&sq);
            e >>= 1;
        }
        result
    }

    /// Conjugate `u⁻¹ self u`.
    pub fn conjugate_by(&self, u: &Permutation) -> Permutation {
        u.inverse().then(self).then(u)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|e| PermError::Parse(format!("{tok}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_images(images)
    }
}

/// A finite permutation group with its full element list.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
}

impl PartialEq for PermutationGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermutationGroup {}

impl PermutationGroup {
    /// Breadth-first closure of `generators`, failing if more than `cap`
    /// elements would be produced.
    pub fn from_generators(generators: Vec<Permutation>, cap: usize) -> Result<Self, PermError> {
        let first = generators.first().ok_or(PermError::NoGenerators)?;
        let degree = first.degree();
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let next = elements[i].then(g);
                if index.contains_key(&next) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(PermError::CapExceeded { cap });
                }
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
        Ok(Self::assemble(degree, generators, elements, index))
    }

    /// Closure with the default enumeration cap.
    pub fn generated_by(generators: Vec<Permutation>) -> Result<Self, PermError> {
        Self::from_generators(generators, DEFAULT_ENUMERATION_CAP)
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(vec![Permutation::identity(degree)], 1).expect("trivial group")
    }

    /// Cyclic group `C_n` acting regularly on `n` points; element `k` is the
    /// `k`-th power of the generating rotation.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        let rot = Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        };
        Self::from_generators(vec![rot], n).expect("cyclic group")
    }

    /// Symmetric group on `n` points.
    pub fn symmetric(n: usize) -> Self {
        assert!(n >= 1, "symmetric group needs n >= 1");
        if n == 1 {
            return Self::trivial(1);
        }
        let swap = Permutation::from_cycles(n, &[&[0, 1]]).expect("swap");
        let cycle: Vec<usize> = (0..n).collect();
        let rot = Permutation::from_cycles(n, &[&cycle]).expect("cycle");
        Self::generated_by(vec![rot, swap]).expect("symmetric group")
    }

    /// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3, "dihedral group needs n >= 3");
        let rot = Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        };
        let refl = Permutation {
            images: (0..n).map(|i| (n - i) % n).collect(),
        };
        Self::generated_by(vec![rot, refl]).expect("dihedral group")
    }

    /// Direct product acting on the disjoint union of the two point sets.
    pub fn direct_product(&self, other: &PermutationGroup) -> PermutationGroup {
        let n = self.degree + other.degree;
        let lift = |p: &Permutation, offset: usize, len: usize| {
            let mut images: Vec<usize> = (0..n).collect();
            for i in 0..len {
                images[offset + i] = offset + p.apply(i);
            }
            Permutation { images }
        };
        let mut gens: Vec<Permutation> = self.generators.iter().map(|g| lift(g, 0, self.degree)).collect();
        gens.extend(other.generators.iter().map(|g| lift(g, self.degree, other.degree)));
        Self::generated_by(gens).expect("product of enumerated groups")
    }

    /// Parses a group spec: `C<n>`, `S<n>`, `Dih<2n>`, or products joined by `x`
    /// (e.g. `C5xC6`).
    pub fn from_spec(spec: &str) -> Result<Self, PermError> {
        let unknown = || PermError::UnknownGroupSpec(spec.to_string());
        let mut result: Option<PermutationGroup> = None;
        for factor in spec.trim().split('x') {
            let factor = factor.trim();
            let (kind, num) = if let Some(rest) = factor.strip_prefix("Dih") {
                ("Dih", rest)
            } else if let Some(rest) = factor.strip_prefix('C') {
                ("C", rest)
            } else if let Some(rest) = factor.strip_prefix('S') {
                ("S", rest)
            } else {
                return Err(unknown());
            };
            let n: usize = num.parse().map_err(|_| unknown())?;
            let g = match kind {
                "C" if n >= 1 => Self::cyclic(n),
                "S" if (1..=8).contains(&n) => Self::symmetric(n),
                "Dih" if n >= 6 && n.is_multiple_of(2) => Self::dihedral(n / 2),
                _ => return Err(unknown()),
            };
            result = Some(match result {
                None => g,
                Some(acc) => acc.direct_product(&g),
            });
        }
        result.ok_or_else(unknown)
    }

    /// Subgroup given by an explicit element list that is already closed.
    fn from_closed_elements(degree: usize, elements: Vec<Permutation>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let generators = if elements.len() > 1 {
            elements[1..].to_vec()
        } else {
            vec![Permutation::identity(degree)]
        };
        Self::assemble(degree, generators, elements, index)
    }

    fn assemble(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
        index: HashMap<Permutation, usize>,
    ) -> Self {
        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        Self {
            degree,
            generators,
            elements,
            index,
            inverses,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Index of the identity element (always 0).
    pub fn identity_index(&self) -> usize {
        0
    }

    /// Index of `elements[a] * elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].then(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Index of `elements[a]^exp`.
    pub fn pow(&self, a: usize, exp: i64) -> usize {
        self.index[&self.elements[a].pow(exp)]
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|g| self.generators.iter().all(|h| g.then(h) == h.then(g)))
    }

    /// Orbit of `point`: the smallest invariant set containing it.
    pub fn orbit(&self, point: usize) -> Result<BTreeSet<usize>, PermError> {
        if point >= self.degree {
            return Err(PermError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut orbit = BTreeSet::from([point]);
        let mut stack = vec![point];
        while let Some(x) = stack.pop() {
            for g in &self.generators {
                let y = g.apply(x);
                if orbit.insert(y) {
                    stack.push(y);
                }
            }
        }
        Ok(orbit)
    }

    /// All orbits on `0..degree`, ordered by smallest point.
    pub fn orbits(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let o = self.orbit(x).expect("point in range");
                for &y in &o {
                    seen[y] = true;
                }
                out.push(o);
            }
        }
        out
    }

    /// Subgroup fixing `point`.
    pub fn stabilizer(&self, point: usize) -> Result<PermutationGroup, PermError> {
        if point >= self.degree {
            return Err(PermError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let elements = self
            .elements
            .iter()
            .filter(|g| g.apply(point) == point)
            .cloned()
            .collect();
        Ok(Self::from_closed_elements(self.degree, elements))
    }

    /// `{u⁻¹ g u : u ∈ G}`.
    pub fn conjugacy_class_of(&self, g: &Permutation) -> Result<BTreeSet<Permutation>, PermError> {
        if !self.contains(g) {
            return Err(PermError::NotInGroup(g.clone()));
        }
        Ok(self.elements.iter().map(|u| g.conjugate_by(u)).collect())
    }

    /// Conjugacy class of the element at index `g`, as element indices.
    pub fn conjugacy_class_indices(&self, g: usize) -> BTreeSet<usize> {
        (0..self.order())
            .map(|u| self.mul(self.mul(self.inv(u), g), u))
            .collect()
    }

    /// Partition of the group into conjugacy classes (as element indices).
    pub fn conjugacy_classes(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            let class = self.conjugacy_class_indices(g);
            for &h in &class {
                seen[h] = true;
            }
            classes.push(class);
        }
        classes
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_follows_right_action() {
        let p = perm(&[1, 2, 0]);
        let q = perm(&[1, 0, 2]);
        assert_eq!(p.compose(&q).unwrap(), perm(&[0, 2, 1]));
        for x in 0..3 {
            assert_eq!(p.compose(&q).unwrap().apply(x), q.apply(p.apply(x)));
        }
    }

    #[test]
    fn compose_identity_and_inverse() {
        let p = perm(&[3, 0, 2, 1]);
        assert_eq!(p.compose(&Permutation::identity(4)).unwrap(), p);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = perm(&[1, 0]).compose(&perm(&[0, 1, 2])).unwrap_err();
        assert_eq!(err, PermError::DegreeMismatch { left: 2, right: 3 });
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let p: Permutation = "1 2 0".parse().unwrap();
        assert_eq!(p.to_string(), "1 2 0");
        assert!("1 1 0".parse::<Permutation>().is_err());
        assert!("a b".parse::<Permutation>().is_err());
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let c = perm(&[1, 2, 3, 4, 0]);
        assert_eq!(c.pow(-1), c.inverse());
        assert_eq!(c.pow(5), Permutation::identity(5));
        assert_eq!(c.pow(7), c.pow(2));
        assert_eq!(c.pow(0), Permutation::identity(5));
    }

    #[test]
    fn triangle_swaps_generate_order_six() {
        let g = PermutationGroup::generated_by(vec![perm(&[1, 0, 2]), perm(&[0, 2, 1])]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.element(0), &Permutation::identity(3));
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let g = PermutationGroup::generated_by(vec![Permutation::identity(4)]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn pentagon_rotation_and_reflection_give_order_ten() {
        let rot = perm(&[1, 2, 3, 4, 0]);
        let refl = perm(&[0, 4, 3, 2, 1]);
        let g = PermutationGroup::generated_by(vec![rot, refl]).unwrap();
        assert_eq!(g.order(), 10);
    }

    #[test]
    fn closure_cap_is_an_error() {
        let err = PermutationGroup::from_generators(vec![perm(&[1, 0, 2, 3]), perm(&[1, 2, 3, 0])], 10).unwrap_err();
        assert_eq!(err, PermError::CapExceeded { cap: 10 });
        assert_eq!(
            PermutationGroup::from_generators(vec![], 10).unwrap_err(),
            PermError::NoGenerators
        );
    }

    #[test]
    fn orbits_and_stabilizers() {
        let s3 = PermutationGroup::symmetric(3);
        assert_eq!(s3.orbit(0).unwrap(), BTreeSet::from([0, 1, 2]));
        let trivial = PermutationGroup::trivial(3);
        assert_eq!(trivial.orbit(0).unwrap(), BTreeSet::from([0]));
        assert_eq!(trivial.stabilizer(0).unwrap().order(), 1);
        let dimer = PermutationGroup::generated_by(vec![perm(&[1, 0])]).unwrap();
        assert_eq!(dimer.orbit(1).unwrap(), BTreeSet::from([0, 1]));
        for x in 0..3 {
            let stab = s3.stabilizer(x).unwrap();
            assert_eq!(stab.order() * s3.orbit(x).unwrap().len(), s3.order());
        }
        assert!(s3.orbit(3).is_err());
    }

    #[test]
    fn closure_holds_exhaustively() {
        let g = PermutationGroup::dihedral(6);
        for a in g.elements() {
            assert!(g.contains(&a.inverse()));
            for b in g.elements() {
                assert!(g.contains(&a.then(b)));
            }
        }
    }

    #[test]
    fn conjugacy_class_of_transposition_in_s3() {
        let s3 = PermutationGroup::symmetric(3);
        let t = perm(&[1, 0, 2]);
        // brute force: conjugate by all six elements written out by hand
        let all = [
            perm(&[0, 1, 2]),
            perm(&[1, 0, 2]),
            perm(&[0, 2, 1]),
            perm(&[2, 1, 0]),
            perm(&[1, 2, 0]),
            perm(&[2, 0, 1]),
        ];
        let brute: BTreeSet<_> = all
            .iter()
            .map(|u| u.inverse().compose(&t).unwrap().compose(u).unwrap())
            .collect();
        let class = s3.conjugacy_class_of(&t).unwrap();
        assert_eq!(class, brute);
        assert_eq!(
            class,
            BTreeSet::from([perm(&[1, 0, 2]), perm(&[0, 2, 1]), perm(&[2, 1, 0])])
        );
        assert_eq!(
            s3.conjugacy_class_of(&Permutation::identity(3)).unwrap(),
            BTreeSet::from([Permutation::identity(3)])
        );
        assert!(s3.conjugacy_class_of(&perm(&[1, 0, 2, 3])).is_err());
    }

    #[test]
    fn conjugacy_classes_partition_and_divide_order() {
        for g in [
            PermutationGroup::symmetric(4),
            PermutationGroup::dihedral(5),
            PermutationGroup::cyclic(6),
        ] {
            let classes = g.conjugacy_classes();
            let total: usize = classes.iter().map(|c| c.len()).sum();
            assert_eq!(total, g.order());
            for c in &classes {
                assert_eq!(g.order() % c.len(), 0);
            }
        }
        assert_eq!(PermutationGroup::symmetric(4).conjugacy_classes().len(), 5);
    }

    #[test]
    fn group_specs() {
        assert_eq!(PermutationGroup::from_spec("C4").unwrap().order(), 4);
        assert_eq!(PermutationGroup::from_spec("S3").unwrap().order(), 6);
        assert_eq!(PermutationGroup::from_spec("Dih8").unwrap().order(), 8);
        let p = PermutationGroup::from_spec("C5xC6").unwrap();
        assert_eq!((p.order(), p.degree()), (30, 11));
        assert!(p.is_abelian());
        assert!(!PermutationGroup::symmetric(3).is_abelian());
        assert!(PermutationGroup::from_spec("Q8").is_err());
        assert!(PermutationGroup::from_spec("Cx").is_err());
    }

    #[test]
    fn cyclic_enumeration_is_powers_of_generator() {
        let c = PermutationGroup::cyclic(7);
        let gen = c.element(1).clone();
        for k in 0..7 {
            assert_eq!(c.element(k), &gen.pow(k as i64));
        }
    }
}
