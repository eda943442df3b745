//! Root systems and weight lattices in standard orthonormal coordinates.
//!
//! `A_n` lives in the sum-zero hyperplane of ℝⁿ⁺¹, the other types in
//! ℝʳᵃⁿᵏ. Simple roots and fundamental weights follow the Bourbaki
//! numbering, so for F4 the 26-dimensional representation is `ω₄ = e₁`
//! and the adjoint is `ω₁ = e₁ + e₂`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::{int, ratio, Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootSystemId {
    A1,
    A2,
    C2,
    C3,
    B4,
    F4,
}

impl RootSystemId {
    pub const ALL: [RootSystemId; 6] = [
        RootSystemId::A1,
        RootSystemId::A2,
        RootSystemId::C2,
        RootSystemId::C3,
        RootSystemId::B4,
        RootSystemId::F4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RootSystemId::A1 => "A1",
            RootSystemId::A2 => "A2",
            RootSystemId::C2 => "C2",
            RootSystemId::C3 => "C3",
            RootSystemId::B4 => "B4",
            RootSystemId::F4 => "F4",
        }
    }

    /// Name of the compact real form's Lie algebra.
    pub fn algebra_name(self) -> &'static str {
        match self {
            RootSystemId::A1 => "su(2)",
            RootSystemId::A2 => "su(3)",
            RootSystemId::C2 => "sp(2)",
            RootSystemId::C3 => "sp(3)",
            RootSystemId::B4 => "spin(9)",
            RootSystemId::F4 => "f4",
        }
    }
}

impl fmt::Display for RootSystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A weight in the ambient coordinates of its root system.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVector(pub Vec<Rational>);

impl WeightVector {
    pub fn zero(len: usize) -> Self {
        WeightVector(vec![Rational::zero(); len])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        WeightVector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: Rational) -> Self {
        WeightVector(self.0.iter().map(|c| c * s).collect())
    }

    /// Plain coordinate dot product. Callers guarantee equal lengths.
    pub(crate) fn dot(&self, other: &Self) -> Rational {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A dominant weight `Σ nᵢ ωᵢ`, stored as its levels `nᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight(Vec<u32>);

impl DominantWeight {
    pub fn new(levels: Vec<u32>) -> Self {
        DominantWeight(levels)
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight(vec![0; rank])
    }

    /// The fundamental weight `ω_{i+1}` (zero-based `i`).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut levels = vec![0; rank];
        levels[i] = 1;
        DominantWeight(levels)
    }

    /// Converts Dynkin labels into a dominant weight, rejecting negative labels.
    pub fn from_labels(labels: &[i64]) -> Result<Self> {
        if labels.iter().any(|&l| l < 0) {
            return Err(Error::NotDominant(labels.to_vec()));
        }
        Ok(DominantWeight(labels.iter().map(|&l| l as u32).collect()))
    }

    pub fn levels(&self) -> &[u32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&n| n == 0)
    }

    pub fn labels(&self) -> Vec<i64> {
        self.0.iter().map(|&n| n as i64).collect()
    }

    pub fn plus_fundamental(&self, i: usize) -> Self {
        let mut levels = self.0.clone();
        levels[i] += 1;
        DominantWeight(levels)
    }
}

impl fmt::Display for DominantWeight {
    /// Renders as `ω1+3ω2`, or `0` for the trivial weight.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &n) in self.0.iter().enumerate() {
            if n == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if n > 1 {
                write!(f, "{n}")?;
            }
            write!(f, "ω{}", i + 1)?;
        }
        Ok(())
    }
}

/// Root data of one of the six Lie algebras used by the focal manifolds.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub id: RootSystemId,
    pub ambient_dim: usize,
    pub rank: usize,
    pub simple_roots: Vec<WeightVector>,
    pub positive_roots: Vec<WeightVector>,
    pub fundamental_weights: Vec<WeightVector>,
    pub weyl_vector: WeightVector,
    pub algebra_dim: usize,
    // Derived tables for label-coordinate arithmetic.
    simple_coroots: Vec<WeightVector>,
    fundamental_coweights: Vec<WeightVector>,
    cartan: Vec<Vec<i64>>,
    fundamental_gram: Vec<Vec<Rational>>,
    positive_root_labels: Vec<Vec<i64>>,
}

/// Builds the fixed standard-coordinate root system for `id`.
pub fn build_root_system(id: RootSystemId) -> RootSystem {
    RootSystem::new(id)
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn combo(n: usize, terms: &[(usize, i64)]) -> WeightVector {
    let mut v = vec![0; n];
    for &(i, c) in terms {
        v[i] += c;
    }
    WeightVector::from_ints(&v)
}

fn half(coords: &[i64]) -> WeightVector {
    WeightVector(coords.iter().map(|&c| ratio(c, 2)).collect())
}

/// `e_i ± e_j` for `i < j`, the common long roots of types B, C, D, F.
fn d_type_roots(n: usize) -> Vec<WeightVector> {
    let mut roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            roots.push(combo(n, &[(i, 1), (j, -1)]));
            roots.push(combo(n, &[(i, 1), (j, 1)]));
        }
    }
    roots
}

impl RootSystem {
    pub fn new(id: RootSystemId) -> Self {
        let (ambient_dim, simple_roots, positive_roots, fundamental_weights, algebra_dim) = match id
        {
            RootSystemId::A1 => (
                2,
                vec![WeightVector::from_ints(&[1, -1])],
                vec![WeightVector::from_ints(&[1, -1])],
                vec![half(&[1, -1])],
                3,
            ),
            RootSystemId::A2 => {
                let third = |v: &[i64]| WeightVector(v.iter().map(|&c| ratio(c, 3)).collect());
                (
                    3,
                    vec![combo(3, &[(0, 1), (1, -1)]), combo(3, &[(1, 1), (2, -1)])],
                    vec![
                        combo(3, &[(0, 1), (1, -1)]),
                        combo(3, &[(0, 1), (2, -1)]),
                        combo(3, &[(1, 1), (2, -1)]),
                    ],
                    vec![third(&[2, -1, -1]), third(&[1, 1, -2])],
                    8,
                )
            }
            RootSystemId::C2 | RootSystemId::C3 => {
                let n = if id == RootSystemId::C2 { 2 } else { 3 };
                let mut simple: Vec<_> = (0..n - 1)
                    .map(|i| combo(n, &[(i, 1), (i + 1, -1)]))
                    .collect();
                simple.push(combo(n, &[(n - 1, 2)]));
                let mut positive = d_type_roots(n);
                positive.extend((0..n).map(|i| combo(n, &[(i, 2)])));
                let fundamentals = (0..n)
                    .map(|i| {
                        WeightVector::from_ints(
                            &(0..n).map(|j| (j <= i) as i64).collect::<Vec<_>>(),
                        )
                    })
                    .collect();
                (n, simple, positive, fundamentals, n * (2 * n + 1))
            }
            RootSystemId::B4 => {
                let n = 4;
                let mut simple: Vec<_> = (0..n - 1)
                    .map(|i| combo(n, &[(i, 1), (i + 1, -1)]))
                    .collect();
                simple.push(WeightVector::from_ints(&unit(n, n - 1)));
                let mut positive = d_type_roots(n);
                positive.extend((0..n).map(|i| WeightVector::from_ints(&unit(n, i))));
                let mut fundamentals: Vec<_> = (0..n - 1)
                    .map(|i| {
                        WeightVector::from_ints(
                            &(0..n).map(|j| (j <= i) as i64).collect::<Vec<_>>(),
                        )
                    })
                    .collect();
                fundamentals.push(half(&[1, 1, 1, 1]));
                (n, simple, positive, fundamentals, 36)
            }
            RootSystemId::F4 => {
                let n = 4;
                let simple = vec![
                    combo(n, &[(1, 1), (2, -1)]),
                    combo(n, &[(2, 1), (3, -1)]),
                    WeightVector::from_ints(&unit(n, 3)),
                    half(&[1, -1, -1, -1]),
                ];
                let mut positive = d_type_roots(n);
                positive.extend((0..n).map(|i| WeightVector::from_ints(&unit(n, i))));
                for signs in 0..8u32 {
                    let s = |bit: u32| if signs & (1 << bit) == 0 { 1 } else { -1 };
                    positive.push(half(&[1, s(0), s(1), s(2)]));
                }
                let fundamentals = vec![
                    WeightVector::from_ints(&[1, 1, 0, 0]),
                    WeightVector::from_ints(&[2, 1, 1, 0]),
                    half(&[3, 1, 1, 1]),
                    WeightVector::from_ints(&[1, 0, 0, 0]),
                ];
                (n, simple, positive, fundamentals, 52)
            }
        };

        let rank = simple_roots.len();
        let weyl_vector = positive_roots
            .iter()
            .fold(WeightVector::zero(ambient_dim), |acc, r| &acc + r)
            .scale(ratio(1, 2));

        let coroot = |a: &WeightVector| a.scale(int(2) / a.dot(a));
        let simple_coroots: Vec<_> = simple_roots.iter().map(coroot).collect();
        let fundamental_coweights: Vec<_> = fundamental_weights
            .iter()
            .zip(&simple_roots)
            .map(|(w, a)| w.scale(int(2) / a.dot(a)))
            .collect();

        let integral = |v: &WeightVector| -> Vec<i64> {
            simple_coroots
                .iter()
                .map(|c| {
                    let x = v.dot(c);
                    assert!(x.is_integer(), "non-integral pairing in {id} root data");
                    x.to_integer()
                })
                .collect()
        };
        let cartan: Vec<_> = simple_roots.iter().map(integral).collect();
        let positive_root_labels: Vec<_> = positive_roots.iter().map(integral).collect();
        let fundamental_gram = fundamental_weights
            .iter()
            .map(|a| fundamental_weights.iter().map(|b| a.dot(b)).collect())
            .collect();

        RootSystem {
            id,
            ambient_dim,
            rank,
            simple_roots,
            positive_roots,
            fundamental_weights,
            weyl_vector,
            algebra_dim,
            simple_coroots,
            fundamental_coweights,
            cartan,
            fundamental_gram,
            positive_root_labels,
        }
    }

    fn check_len(&self, expected: usize, found: usize) -> Result<()> {
        if expected == found {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected, found })
        }
    }

    /// Coordinates of `Σ nᵢ ωᵢ`.
    pub fn weight_of(&self, dw: &DominantWeight) -> Result<WeightVector> {
        self.check_len(self.rank, dw.rank())?;
        Ok(self.labels_to_coords(&dw.labels()))
    }

    /// The invariant inner product on weights, realised as the coordinate
    /// dot product. Metric rescalings live in [`crate::normalization`].
    pub fn inner_product(&self, v: &WeightVector, w: &WeightVector) -> Result<Rational> {
        self.check_len(self.ambient_dim, v.len())?;
        self.check_len(self.ambient_dim, w.len())?;
        Ok(v.dot(w))
    }

    pub fn simple_coroots(&self) -> &[WeightVector] {
        &self.simple_coroots
    }

    /// `⟨αᵢ, αⱼ^∨⟩`; row `i` is the simple root `αᵢ` in label coordinates.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_root_labels(&self) -> &[Vec<i64>] {
        &self.positive_root_labels
    }

    /// Dynkin labels `⟨v, αᵢ^∨⟩` of an arbitrary coordinate vector.
    pub fn labels_of(&self, v: &WeightVector) -> Vec<Rational> {
        self.simple_coroots.iter().map(|c| v.dot(c)).collect()
    }

    /// Integral Dynkin labels, or `None` if `v` is not in the weight lattice.
    pub fn integral_labels_of(&self, v: &WeightVector) -> Option<Vec<i64>> {
        self.labels_of(v)
            .into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    pub fn labels_to_coords(&self, labels: &[i64]) -> WeightVector {
        labels.iter().zip(&self.fundamental_weights).fold(
            WeightVector::zero(self.ambient_dim),
            |acc, (&n, w)| {
                if n == 0 {
                    acc
                } else {
                    &acc + &w.scale(int(n))
                }
            },
        )
    }

    /// Inner product of two weights given by their Dynkin labels.
    pub fn label_inner(&self, a: &[i64], b: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    acc += self.fundamental_gram[i][j] * (x * y);
                }
            }
        }
        acc
    }

    /// Coefficients of `v` in the basis of simple roots (rational in general).
    pub fn simple_root_coefficients(&self, v: &WeightVector) -> Vec<Rational> {
        self.fundamental_coweights
            .iter()
            .map(|c| v.dot(c))
            .collect()
    }

    /// Simple-root coefficients of a label vector lying in the root lattice span.
    pub(crate) fn label_root_coefficients(&self, labels: &[i64]) -> Vec<Rational> {
        self.simple_root_coefficients(&self.labels_to_coords(labels))
    }

    /// Reflection of a coordinate vector through the hyperplane of `αᵢ`.
    pub fn reflect(&self, v: &WeightVector, i: usize) -> WeightVector {
        let k = v.dot(&self.simple_coroots[i]);
        v - &self.simple_roots[i].scale(k)
    }

    /// Reflection `sᵢ` in label coordinates.
    pub fn reflect_labels(&self, labels: &[i64], i: usize) -> Vec<i64> {
        let k = labels[i];
        labels
            .iter()
            .zip(&self.cartan[i])
            .map(|(&l, &a)| l - k * a)
            .collect()
    }

    /// The unique dominant element of the Weyl orbit of `labels`.
    pub fn dominant_conjugate(&self, labels: &[i64]) -> Vec<i64> {
        let mut cur = labels.to_vec();
        while let Some(i) = cur.iter().position(|&l| l < 0) {
            cur = self.reflect_labels(&cur, i);
        }
        cur
    }

    /// Whether `root` (coordinates) is a root of this system.
    pub fn is_root(&self, root: &WeightVector) -> bool {
        self.positive_roots
            .iter()
            .any(|a| a == root || &(-a) == root)
    }

    /// Casimir-type quadratic `⟨λ, λ + 2ρ⟩` for a dominant weight.
    pub fn casimir_form(&self, dw: &DominantWeight) -> Result<Rational> {
        let l = self.weight_of(dw)?;
        let shifted = &l + &self.weyl_vector.scale(int(2));
        Ok(l.dot(&shifted))
    }

    pub(crate) fn label_is_nonnegative_root_combination(&self, labels: &[i64]) -> bool {
        self.label_root_coefficients(labels)
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }
}
