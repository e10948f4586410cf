//! Matrix representations with cyclotomic entries, states, and the squared
//! amplitude `⟨Aψ|Aψ⟩` for `A = Σ_k n_k ρ(γ_k)`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::cyclotomic::{CyclotomicInt, CyclotomicRational};
use super::group_algebra::GroupAlgebraElement;
use super::AlgebraError;
use crate::perm_group::PermutationGroup;

/// Square matrix, row-major.
pub type CycloMatrix = Vec<Vec<CyclotomicInt>>;

const UNITARITY_TOLERANCE: f64 = 1e-9;

pub fn identity_matrix(d: usize, modulus: usize) -> CycloMatrix {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    if i == j {
                        CyclotomicInt::one(modulus)
                    } else {
                        CyclotomicInt::zero(modulus)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn matrix_mul(a: &CycloMatrix, b: &CycloMatrix) -> CycloMatrix {
    let d = a.len();
    let m = a[0][0].modulus();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).fold(CyclotomicInt::zero(m), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                .collect()
        })
        .collect()
}

fn matrix_value_eq(a: &CycloMatrix, b: &CycloMatrix) -> bool {
    a.iter()
        .zip(b)
        .all(|(ra, rb)| ra.iter().zip(rb).all(|(x, y)| x.value_eq(y)))
}

fn trace(a: &CycloMatrix) -> CyclotomicInt {
    let m = a[0][0].modulus();
    (0..a.len()).fold(CyclotomicInt::zero(m), |acc, i| &acc + &a[i][i])
}

fn unitarity_deviation(a: &CycloMatrix) -> f64 {
    let z: Vec<Vec<Complex64>> = a.iter().map(|r| r.iter().map(|x| x.to_complex()).collect()).collect();
    let d = z.len();
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let s: Complex64 = (0..d).map(|k| z[i][k] * z[j][k].conj()).sum();
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((s - target).norm());
        }
    }
    worst
}

/// A representation `ρ: Γ -> GL(d, Z[w]/(w^M - 1))`, one matrix per element
/// in the group's enumeration order.
#[derive(Debug, Clone)]
pub struct Representation {
    group: Arc<PermutationGroup>,
    modulus: usize,
    degree: usize,
    matrices: Vec<CycloMatrix>,
}

impl Representation {
    /// Validates shapes, `ρ(e) = 1`, the homomorphism law on every pair
    /// (exactly, at a primitive root) and unitarity (numerically).
    pub fn new(
        group: &Arc<PermutationGroup>,
        modulus: usize,
        matrices: Vec<CycloMatrix>,
    ) -> Result<Self, AlgebraError> {
        if modulus == 0 {
            return Err(AlgebraError::ZeroModulus);
        }
        if matrices.len() != group.order() {
            return Err(AlgebraError::DimensionMismatch {
                expected: group.order(),
                found: matrices.len(),
            });
        }
        let degree = matrices[0].len();
        for (g, mat) in matrices.iter().enumerate() {
            let square = mat.len() == degree && mat.iter().all(|r| r.len() == degree);
            if degree == 0 || !square {
                return Err(AlgebraError::MatrixShape { element: g });
            }
            for x in mat.iter().flatten() {
                if x.modulus() != modulus {
                    return Err(AlgebraError::ModulusMismatch(modulus, x.modulus()));
                }
            }
        }
        let rep = Self {
            group: Arc::clone(group),
            modulus,
            degree,
            matrices,
        };
        rep.validate()?;
        Ok(rep)
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let e = self.group.identity_index();
        if !matrix_value_eq(&self.matrices[e], &identity_matrix(self.degree, self.modulus)) {
            return Err(AlgebraError::IdentityNotMapped);
        }
        let n = self.group.order();
        for a in 0..n {
            for b in 0..n {
                let prod = matrix_mul(&self.matrices[a], &self.matrices[b]);
                if !matrix_value_eq(&prod, &self.matrices[self.group.mul(a, b)]) {
                    return Err(AlgebraError::NotHomomorphism { a, b });
                }
            }
        }
        for (g, mat) in self.matrices.iter().enumerate() {
            let deviation = unitarity_deviation(mat);
            if deviation > UNITARITY_TOLERANCE {
                return Err(AlgebraError::NotUnitary { element: g, deviation });
            }
        }
        Ok(())
    }

    /// Extends images of the group's generators to the whole group along the
    /// breadth-first enumeration, then validates.
    pub fn from_generator_images(
        group: &Arc<PermutationGroup>,
        modulus: usize,
        images: Vec<CycloMatrix>,
    ) -> Result<Self, AlgebraError> {
        if modulus == 0 {
            return Err(AlgebraError::ZeroModulus);
        }
        let gens = group.generators();
        if images.len() != gens.len() {
            return Err(AlgebraError::DimensionMismatch {
                expected: gens.len(),
                found: images.len(),
            });
        }
        let degree = images.first().map_or(0, Vec::len);
        let mut mats: Vec<Option<CycloMatrix>> = vec![None; group.order()];
        mats[group.identity_index()] = Some(identity_matrix(degree, modulus));
        let mut queue = vec![group.identity_index()];
        let mut head = 0;
        while head < queue.len() {
            let g = queue[head];
            head += 1;
            for (gen, img) in gens.iter().zip(&images) {
                if img.len() != degree || img.iter().any(|r| r.len() != degree) {
                    return Err(AlgebraError::MatrixShape { element: g });
                }
                let h = group
                    .index_of(&group.element(g).then(gen))
                    .expect("closed under generators");
                if mats[h].is_none() {
                    let base = mats[g].as_ref().expect("visited");
                    mats[h] = Some(matrix_mul(base, img));
                    queue.push(h);
                }
            }
        }
        let matrices = mats.into_iter().map(|m| m.expect("generators span")).collect();
        Self::new(group, modulus, matrices)
    }

    /// One-dimensional character sending generator `j` to `w^{exponents[j]}`.
    pub fn character(group: &Arc<PermutationGroup>, modulus: usize, exponents: &[i64]) -> Result<Self, AlgebraError> {
        if modulus == 0 {
            return Err(AlgebraError::ZeroModulus);
        }
        let images = exponents
            .iter()
            .map(|&k| vec![vec![CyclotomicInt::monomial(modulus, k)]])
            .collect();
        Self::from_generator_images(group, modulus, images)
    }

    /// The `M` characters `γ ↦ w^r` of `C_M`, `r = 0..M`.
    pub fn cyclic_characters(modulus: usize) -> Result<Vec<Self>, AlgebraError> {
        let group = Arc::new(PermutationGroup::cyclic(modulus));
        (0..modulus as i64)
            .map(|r| Self::character(&group, modulus, &[r]))
            .collect()
    }

    /// The natural permutation matrices, `ρ(g)[i][i·g] = 1`.
    pub fn permutation(group: &Arc<PermutationGroup>, modulus: usize) -> Result<Self, AlgebraError> {
        let d = group.degree();
        let matrices = group
            .elements()
            .iter()
            .map(|p| {
                (0..d)
                    .map(|i| {
                        (0..d)
                            .map(|j| {
                                if p.apply(i) == j {
                                    CyclotomicInt::one(modulus)
                                } else {
                                    CyclotomicInt::zero(modulus)
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self::new(group, modulus, matrices)
    }

    pub fn group(&self) -> &Arc<PermutationGroup> {
        &self.group
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self, g: usize) -> &CycloMatrix {
        &self.matrices[g]
    }

    /// `χ(g) = Tr ρ(g)`.
    pub fn character_value(&self, g: usize) -> CyclotomicInt {
        trace(&self.matrices[g])
    }

    /// `Σ_g n_g ρ(g)`.
    pub fn evaluate(&self, n: &GroupAlgebraElement) -> Result<CycloMatrix, AlgebraError> {
        self.check_group(n.group())?;
        let mut out = vec![vec![CyclotomicInt::zero(self.modulus); self.degree]; self.degree];
        for g in n.support() {
            for (i, row) in self.matrices[g].iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    out[i][j] = &out[i][j] + &x.scale(n.coeff(g));
                }
            }
        }
        Ok(out)
    }

    /// Scalar value of `n` under a one-dimensional representation.
    pub fn evaluate_scalar(&self, n: &GroupAlgebraElement) -> Result<CyclotomicInt, AlgebraError> {
        if self.degree != 1 {
            return Err(AlgebraError::NotOneDimensional(self.degree));
        }
        Ok(self.evaluate(n)?.swap_remove(0).swap_remove(0))
    }

    pub(crate) fn check_group(&self, group: &Arc<PermutationGroup>) -> Result<(), AlgebraError> {
        if Arc::ptr_eq(&self.group, group) || *self.group == **group {
            Ok(())
        } else {
            Err(AlgebraError::GroupMismatch)
        }
    }
}

/// A state `ψ` with entries in `Q(w)`, kept as cyclotomic numerators over
/// integer denominators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    entries: Vec<CyclotomicRational>,
}

impl StateVector {
    pub fn new(entries: Vec<CyclotomicRational>) -> Result<Self, AlgebraError> {
        let first = entries
            .first()
            .ok_or(AlgebraError::DimensionMismatch { expected: 1, found: 0 })?;
        let m = first.modulus();
        if let Some(bad) = entries.iter().find(|e| e.modulus() != m) {
            return Err(AlgebraError::ModulusMismatch(m, bad.modulus()));
        }
        Ok(Self { entries })
    }

    pub fn from_ints(modulus: usize, values: &[i64]) -> Result<Self, AlgebraError> {
        Self::new(
            values
                .iter()
                .map(|&v| CyclotomicRational::integral(CyclotomicInt::from_int(modulus, v)))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[CyclotomicRational] {
        &self.entries
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn modulus(&self) -> usize {
        self.entries[0].modulus()
    }

    /// `(L, L·ψ)` with `L` the least common denominator.
    pub fn integral_form(&self) -> (BigInt, Vec<CyclotomicInt>) {
        let l = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(&e.denominator));
        let scaled = self
            .entries
            .iter()
            .map(|e| e.numerator.scale(&(&l / &e.denominator)))
            .collect();
        (l, scaled)
    }
}

fn inner(a: &[CyclotomicInt], b: &[CyclotomicInt]) -> CyclotomicInt {
    let m = a[0].modulus();
    a.iter()
        .zip(b)
        .fold(CyclotomicInt::zero(m), |acc, (x, y)| &acc + &(&x.conj() * y))
}

fn apply(mat: &CycloMatrix, v: &[CyclotomicInt]) -> Vec<CyclotomicInt> {
    mat.iter().map(|row| inner_plain(row, v)).collect()
}

fn inner_plain(a: &[CyclotomicInt], b: &[CyclotomicInt]) -> CyclotomicInt {
    let m = a[0].modulus();
    a.iter()
        .zip(b)
        .fold(CyclotomicInt::zero(m), |acc, (x, y)| &acc + &(x * y))
}

/// Integer weights `N_g` of `⟨Aψ|Aψ⟩ = N_e⟨ψ|ψ⟩ + Σ_{g≠e} N_g ⟨ψ|ρ(g)+ρ(g)†|ψ⟩`.
///
/// With `C_g = Σ_{γ_i⁻¹γ_k = g} n_i n_k`, each pair `{g, g⁻¹}` is carried by
/// its lower index: `N_g = C_g` if `g ≠ g⁻¹`, `C_g / 2` for involutions, and 0
/// on the other member of the pair. These depend on `n` alone.
pub fn path_count_weights(n: &GroupAlgebraElement) -> Vec<BigInt> {
    let group = n.group();
    let mut c = vec![BigInt::zero(); group.order()];
    let support = n.support();
    for &i in &support {
        let inv_i = group.inv(i);
        for &k in &support {
            c[group.mul(inv_i, k)] += n.coeff(i) * n.coeff(k);
        }
    }
    let e = group.identity_index();
    let two = BigInt::from(2);
    (0..group.order())
        .map(|g| {
            let gi = group.inv(g);
            if g == e {
                c[g].clone()
            } else if gi == g {
                &c[g] / &two
            } else if g < gi {
                c[g].clone()
            } else {
                BigInt::zero()
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SquaredAmplitude {
    /// `N_g` per group element, see [`path_count_weights`].
    pub weights: Vec<BigInt>,
    /// Assembled from the weights.
    pub value: CyclotomicRational,
    /// `|Σ n_k ρ(γ_k) ψ|²` computed directly.
    pub direct: CyclotomicRational,
}

/// `⟨Aψ|Aψ⟩` both ways, failing if the two disagree as algebraic numbers.
pub fn squared_amplitude(
    n: &GroupAlgebraElement,
    rep: &Representation,
    psi: &StateVector,
) -> Result<SquaredAmplitude, AlgebraError> {
    rep.check_group(n.group())?;
    if psi.dimension() != rep.degree() {
        return Err(AlgebraError::DimensionMismatch {
            expected: rep.degree(),
            found: psi.dimension(),
        });
    }
    if psi.modulus() != rep.modulus() {
        return Err(AlgebraError::ModulusMismatch(rep.modulus(), psi.modulus()));
    }
    let (l, phi) = psi.integral_form();
    let l2 = &l * &l;
    let m = rep.modulus();

    let weights = path_count_weights(n);
    let mut assembled = CyclotomicInt::zero(m);
    for (g, w) in weights.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let term = if g == rep.group().identity_index() {
            inner(&phi, &phi)
        } else {
            let h = inner(&phi, &apply(rep.matrix(g), &phi));
            &h + &h.conj()
        };
        assembled = &assembled + &term.scale(w);
    }

    let a_phi = apply(&rep.evaluate(n)?, &phi);
    let direct = inner(&a_phi, &a_phi);

    let value = CyclotomicRational::new(assembled, l2.clone())?;
    let direct = CyclotomicRational::new(direct, l2)?;
    if !value.value_eq(&direct) {
        return Err(AlgebraError::CrossCheckFailed);
    }
    Ok(SquaredAmplitude { weights, value, direct })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c4() -> Arc<PermutationGroup> {
        Arc::new(PermutationGroup::cyclic(4))
    }

    #[test]
    fn destructive_example_vanishes() {
        let g = c4();
        let rep = Representation::character(&g, 4, &[1]).unwrap();
        let n = GroupAlgebraElement::from_i64s(&g, &[0, 3, 0, 3]).unwrap();
        assert_eq!(
            rep.evaluate_scalar(&n).unwrap(),
            CyclotomicInt::from_i64s(&[0, 3, 0, 3]).unwrap()
        );
        let psi = StateVector::from_ints(4, &[1]).unwrap();
        let sq = squared_amplitude(&n, &rep, &psi).unwrap();
        assert!(sq.value.is_zero_at_primitive_root());
        // C_e = 18, C_{γ²} = 18 shared by the involution γ² -> 9
        let w: Vec<i64> = sq.weights.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(w, vec![18, 0, 9, 0]);
    }

    #[test]
    fn delta_identity_gives_norm() {
        let g = Arc::new(PermutationGroup::symmetric(3));
        let rep = Representation::permutation(&g, 3).unwrap();
        let n = GroupAlgebraElement::delta(&g, 0);
        let psi = StateVector::new(vec![
            CyclotomicRational::new(CyclotomicInt::from_i64s(&[1, 2, 0]).unwrap(), 3.into()).unwrap(),
            CyclotomicRational::integral(CyclotomicInt::from_int(3, 2)),
            CyclotomicRational::new(CyclotomicInt::monomial(3, 2), 2.into()).unwrap(),
        ])
        .unwrap();
        let sq = squared_amplitude(&n, &rep, &psi).unwrap();
        // |1 + 2w|²/9 + 4 + 1/4 with |1 + 2w|² = 5 - 2 = 3 at w = e^{2πi/3}
        let expected = 3.0 / 9.0 + 4.0 + 0.25;
        assert!((sq.value.to_complex().re - expected).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_homomorphism_and_non_unitary() {
        let g = c4();
        // γ ↦ w with M = 3 is not a homomorphism of C4
        let err = Representation::character(&g, 3, &[1]).unwrap_err();
        assert!(matches!(err, AlgebraError::NotHomomorphism { .. }));
        // trivial group, ρ(e) = 2 is not the identity
        let t = Arc::new(PermutationGroup::trivial(1));
        let err = Representation::new(&t, 2, vec![vec![vec![CyclotomicInt::from_int(2, 2)]]]);
        assert_eq!(err.unwrap_err(), AlgebraError::IdentityNotMapped);
        // C2 with ρ(γ) = [[1,1],[0,-1]] squares to I but is not unitary
        let c2 = Arc::new(PermutationGroup::cyclic(2));
        let m = |v: i64| CyclotomicInt::from_int(2, v);
        let img = vec![vec![m(1), m(1)], vec![m(0), m(-1)]];
        let err = Representation::from_generator_images(&c2, 2, vec![img]).unwrap_err();
        assert!(matches!(err, AlgebraError::NotUnitary { element: 1, .. }));
    }

    #[test]
    fn cyclic_characters_have_unit_degrees_summing_to_order() {
        for m in [2usize, 3, 4, 6, 12] {
            let chars = Representation::cyclic_characters(m).unwrap();
            let degrees: Vec<usize> = chars.iter().map(Representation::degree).collect();
            assert!(degrees.iter().all(|&d| d == 1 && m % d == 0));
            assert_eq!(degrees.iter().map(|d| d * d).sum::<usize>(), m);
            // distinct characters
            for a in 0..m {
                for b in a + 1..m {
                    assert_ne!(chars[a].character_value(1), chars[b].character_value(1));
                }
            }
        }
    }

    #[test]
    fn permutation_rep_character_counts_fixed_points() {
        let g = Arc::new(PermutationGroup::symmetric(3));
        let rep = Representation::permutation(&g, 1).unwrap();
        for (i, p) in g.elements().iter().enumerate() {
            let fixed = (0..3).filter(|&x| p.apply(x) == x).count() as i64;
            assert_eq!(rep.character_value(i), CyclotomicInt::from_int(1, fixed));
        }
    }

    #[test]
    fn random_c6_inputs_agree_with_direct_evaluation() {
        let g = Arc::new(PermutationGroup::cyclic(6));
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let r = rng.gen_range(0..6);
            let rep = Representation::character(&g, 6, &[r]).unwrap();
            let n: Vec<i64> = (0..6).map(|_| rng.gen_range(-4..5)).collect();
            let n = GroupAlgebraElement::from_i64s(&g, &n).unwrap();
            let psi: Vec<i64> = (0..6).map(|_| rng.gen_range(-3..4)).collect();
            let psi = StateVector::new(vec![CyclotomicRational::new(
                CyclotomicInt::from_i64s(&psi).unwrap(),
                rng.gen_range(1..5).into(),
            )
            .unwrap()])
            .unwrap();
            let sq = squared_amplitude(&n, &rep, &psi).unwrap();
            // numeric oracle: |A(w) ψ|²
            let a = rep.evaluate_scalar(&n).unwrap().to_complex();
            let expected = (a * psi.entries()[0].to_complex()).norm_sqr();
            assert!((sq.value.to_complex().re - expected).abs() < 1e-8 * (1.0 + expected));
            assert!(sq.value.to_complex().im.abs() < 1e-8 * (1.0 + expected));
        }
    }

    #[test]
    fn weights_do_not_depend_on_the_representation() {
        let g = Arc::new(PermutationGroup::symmetric(3));
        let n = GroupAlgebraElement::from_i64s(&g, &[1, -2, 0, 3, 1, 1]).unwrap();
        let psi3 = StateVector::from_ints(3, &[1, 0, 2]).unwrap();
        let perm = Representation::permutation(&g, 3).unwrap();
        let parity: Vec<i64> = g
            .generators()
            .iter()
            .map(|p| {
                let mut seen = [false; 3];
                let mut transpositions = 0;
                for s in 0..3 {
                    let mut x = s;
                    let mut len = 0;
                    while !seen[x] {
                        seen[x] = true;
                        x = p.apply(x);
                        len += 1;
                    }
                    transpositions += len.max(1) - 1;
                }
                transpositions % 2
            })
            .collect();
        let sign = Representation::character(&g, 2, &parity).unwrap();
        let a = squared_amplitude(&n, &perm, &psi3).unwrap();
        assert_eq!(a.weights, path_count_weights(&n));
        let b = squared_amplitude(&n, &sign, &StateVector::from_ints(2, &[1]).unwrap()).unwrap();
        assert_eq!(a.weights, b.weights);
    }

    #[test]
    fn dimension_and_group_mismatch() {
        let g = c4();
        let rep = Representation::character(&g, 4, &[1]).unwrap();
        let n = GroupAlgebraElement::delta(&g, 1);
        let psi = StateVector::from_ints(4, &[1, 1]).unwrap();
        assert!(matches!(
            squared_amplitude(&n, &rep, &psi).unwrap_err(),
            AlgebraError::DimensionMismatch { expected: 1, found: 2 }
        ));
        let other = GroupAlgebraElement::delta(&Arc::new(PermutationGroup::cyclic(5)), 1);
        let psi = StateVector::from_ints(4, &[1]).unwrap();
        assert_eq!(
            squared_amplitude(&other, &rep, &psi).unwrap_err(),
            AlgebraError::GroupMismatch
        );
    }
}
