//! Restriction of `G`-representations to the isotropy group `K`.
//!
//! The weights of `V_λ` are pushed through a linear torus map into
//! `K`-weights and the resulting multiset is peeled into `K`-irreducibles,
//! highest weight first. The three embeddings are
//!
//! * `U(2) ⊂ SU(3)`: `(a₁, a₂, a₃) ↦ SU(2)` label `a₁ − a₂`, central
//!   charge `3(a₁ + a₂)` (the weight of `diag(z, z, z⁻²)`),
//! * `Sp(2)·Sp(1) ⊂ Sp(3)`: `(x₁, x₂, x₃) ↦ ((x₁, x₂), x₃)`,
//! * `Spin(9) ⊂ F4`: the identity on ℝ⁴; the roots `±eᵢ±eⱼ, ±eᵢ` of B4
//!   are F4 roots in the standard coordinates of both.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::normalization::FocalSpace;
use crate::rep_core::{
    dominant_multiplicities, weight_system_guarded, weyl_dimension, DEFAULT_DIM_GUARD,
};
use crate::root_data::{DominantWeight, RootSystem, WeightVector};
use crate::{int, ratio, Error, Rational, Result};

/// Factor of `K` outside its semisimple part of interest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraFactor {
    /// The `U(1)` center of `U(2)`.
    Center,
    /// The `Sp(1)` factor of `Sp(2)·Sp(1)`.
    Sp1,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtraLabel {
    None,
    /// Integer `U(1)` weight.
    Charge(i64),
    /// Highest weight (level) of the `Sp(1)` factor.
    Sp1(u32),
}

/// Irreducible representation of `K`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KIrrepLabel {
    pub semisimple: DominantWeight,
    pub extra: ExtraLabel,
}

impl KIrrepLabel {
    pub fn trivial(rank: usize, extra: ExtraFactor) -> Self {
        KIrrepLabel {
            semisimple: DominantWeight::zero(rank),
            extra: match extra {
                ExtraFactor::Center => ExtraLabel::Charge(0),
                ExtraFactor::Sp1 => ExtraLabel::Sp1(0),
                ExtraFactor::None => ExtraLabel::None,
            },
        }
    }

    /// The contragredient representation (all factors are self-dual except
    /// for the `U(1)` charge).
    pub fn dual(&self) -> Self {
        let extra = match self.extra {
            ExtraLabel::Charge(q) => ExtraLabel::Charge(-q),
            ref e => e.clone(),
        };
        KIrrepLabel {
            semisimple: self.semisimple.clone(),
            extra,
        }
    }
}

impl fmt::Display for KIrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.semisimple)?;
        match self.extra {
            ExtraLabel::None => Ok(()),
            ExtraLabel::Charge(q) => write!(f, " q={q}"),
            ExtraLabel::Sp1(l) => write!(f, " ⊗ Sp(1)[{l}]"),
        }
    }
}

/// A weight of `K`: Dynkin labels of the semisimple part plus the integer
/// weight of the extra factor (zero when there is none).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KWeight {
    pub labels: Vec<i64>,
    pub extra: i64,
}

/// Linear map from `G`-weight coordinates to `K`-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusEmbedding {
    /// Rows indexed by `K` coordinates, columns by `G` coordinates.
    pub matrix: Vec<Vec<Rational>>,
    /// Functional giving the weight of the central or extra factor.
    pub center_charge: Option<Vec<Rational>>,
}

pub fn torus_embedding(space: &FocalSpace) -> TorusEmbedding {
    use crate::normalization::FocalSpaceId::*;
    let r = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
    match space.id {
        CP2 => TorusEmbedding {
            matrix: vec![
                vec![ratio(1, 2), ratio(-1, 2), int(0)],
                vec![ratio(-1, 2), ratio(1, 2), int(0)],
            ],
            center_charge: Some(r(&[3, 3, 0])),
        },
        HP2 => TorusEmbedding {
            matrix: vec![r(&[1, 0, 0]), r(&[0, 1, 0])],
            center_charge: Some(r(&[0, 0, 1])),
        },
        OP2 => TorusEmbedding {
            matrix: (0..4)
                .map(|i| r(&(0..4).map(|j| (i == j) as i64).collect::<Vec<_>>()))
                .collect(),
            center_charge: None,
        },
    }
}

impl TorusEmbedding {
    pub fn project_semisimple(&self, v: &WeightVector) -> WeightVector {
        WeightVector(
            self.matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(v.coords())
                        .fold(Rational::zero(), |a, (m, x)| a + m * x)
                })
                .collect(),
        )
    }

    pub fn extra_value(&self, v: &WeightVector) -> Rational {
        match &self.center_charge {
            Some(f) => f
                .iter()
                .zip(v.coords())
                .fold(Rational::zero(), |a, (m, x)| a + m * x),
            None => Rational::zero(),
        }
    }

    /// Restricts a `G`-weight, failing if it does not land in the `K`-lattice.
    pub fn restrict(&self, k: &RootSystem, v: &WeightVector) -> Result<KWeight> {
        let image = self.project_semisimple(v);
        let labels = k
            .integral_labels_of(&image)
            .ok_or_else(|| Error::NonIntegralRestriction(format!("{v} ↦ {image}")))?;
        let extra = self.extra_value(v);
        if !extra.is_integer() {
            return Err(Error::NonIntegralRestriction(format!(
                "{v} has extra weight {extra}"
            )));
        }
        Ok(KWeight {
            labels,
            extra: extra.to_integer(),
        })
    }

    /// Every fundamental weight of `G` restricts to an integral `K`-weight.
    pub fn check_integrality(&self, g: &RootSystem, k: &RootSystem) -> Result<()> {
        for w in &g.fundamental_weights {
            self.restrict(k, w)?;
        }
        Ok(())
    }
}

/// `V_λ|_K` as a multiset of `K`-irreducibles.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BranchingResult {
    pub constituents: BTreeMap<KIrrepLabel, u64>,
}

impl BranchingResult {
    pub fn multiplicity(&self, label: &KIrrepLabel) -> u64 {
        self.constituents.get(label).copied().unwrap_or(0)
    }
}

/// Branching machinery for one focal space, holding its root data.
#[derive(Clone, Debug)]
pub struct Brancher {
    pub space: FocalSpace,
    pub g: RootSystem,
    pub k: RootSystem,
    pub embedding: TorusEmbedding,
    pub guard: u64,
}

impl Brancher {
    pub fn new(space: &FocalSpace) -> Self {
        Self::with_guard(space, DEFAULT_DIM_GUARD)
    }

    pub fn with_guard(space: &FocalSpace, guard: u64) -> Self {
        Brancher {
            space: space.clone(),
            g: RootSystem::new(space.g_alg),
            k: RootSystem::new(space.k_alg.semisimple),
            embedding: torus_embedding(space),
            guard,
        }
    }

    fn extra_factor(&self) -> ExtraFactor {
        self.space.k_alg.extra
    }

    /// Dimension of a `K`-irreducible.
    pub fn k_dimension(&self, label: &KIrrepLabel) -> Result<u64> {
        let ss = weyl_dimension(&self.k, &label.semisimple)?;
        Ok(match label.extra {
            ExtraLabel::Sp1(l) => ss * (l as u64 + 1),
            _ => ss,
        })
    }

    /// Weights of a `K`-irreducible.
    pub fn k_weights(&self, label: &KIrrepLabel) -> Result<BTreeMap<KWeight, u64>> {
        let ss = weight_system_guarded(&self.k, &label.semisimple, self.guard)?;
        let extras: Vec<i64> = match label.extra {
            ExtraLabel::None => vec![0],
            ExtraLabel::Charge(q) => vec![q],
            ExtraLabel::Sp1(l) => (0..=l as i64).map(|j| l as i64 - 2 * j).collect(),
        };
        let mut out = BTreeMap::new();
        for (labels, &m) in ss.entries() {
            for &e in &extras {
                out.insert(
                    KWeight {
                        labels: labels.clone(),
                        extra: e,
                    },
                    m,
                );
            }
        }
        Ok(out)
    }

    /// Multiset of `K`-weights of `V_λ|_K`.
    pub fn restricted_weights(&self, lambda: &DominantWeight) -> Result<BTreeMap<KWeight, u64>> {
        let ws = weight_system_guarded(&self.g, lambda, self.guard)?;
        let mut out = BTreeMap::new();
        for (labels, &m) in ws.entries() {
            let kw = self
                .embedding
                .restrict(&self.k, &self.g.labels_to_coords(labels))?;
            *out.entry(kw).or_insert(0) += m;
        }
        Ok(out)
    }

    /// Positive on every positive root of `K`; ties broken lexicographically.
    fn height(&self, w: &KWeight) -> Rational {
        let ones = vec![1; self.k.rank];
        let h = self.k.label_inner(&w.labels, &ones);
        match self.extra_factor() {
            ExtraFactor::Sp1 => h + w.extra,
            _ => h,
        }
    }

    fn label_of(&self, w: &KWeight) -> Result<KIrrepLabel> {
        let semisimple = DominantWeight::from_labels(&w.labels).map_err(|_| {
            Error::Invariant(format!("highest remaining weight {w:?} is not dominant"))
        })?;
        let extra = match self.extra_factor() {
            ExtraFactor::None => ExtraLabel::None,
            ExtraFactor::Center => ExtraLabel::Charge(w.extra),
            ExtraFactor::Sp1 => {
                if w.extra < 0 {
                    return Err(Error::Invariant(format!(
                        "negative Sp(1) highest weight in {w:?}"
                    )));
                }
                ExtraLabel::Sp1(w.extra as u32)
            }
        };
        Ok(KIrrepLabel { semisimple, extra })
    }

    fn is_k_dominant(&self, w: &KWeight) -> bool {
        w.labels.iter().all(|&l| l >= 0)
            && (self.extra_factor() != ExtraFactor::Sp1 || w.extra >= 0)
    }

    /// Dominant weights of a `K`-irreducible; these determine its character.
    fn k_dominant_weights(&self, label: &KIrrepLabel) -> Result<BTreeMap<KWeight, u64>> {
        let ss = dominant_multiplicities(&self.k, &label.semisimple)?;
        let extras: Vec<i64> = match label.extra {
            ExtraLabel::None => vec![0],
            ExtraLabel::Charge(q) => vec![q],
            ExtraLabel::Sp1(l) => (0..=l as i64 / 2).map(|j| l as i64 - 2 * j).collect(),
        };
        let mut out = BTreeMap::new();
        for (labels, m) in ss {
            for &e in &extras {
                out.insert(
                    KWeight {
                        labels: labels.clone(),
                        extra: e,
                    },
                    m,
                );
            }
        }
        Ok(out)
    }

    /// Decomposes a Weyl-invariant `K`-weight multiset into irreducibles by
    /// repeatedly removing the character of the highest dominant weight.
    pub fn decompose(&self, weights: BTreeMap<KWeight, u64>) -> Result<BranchingResult> {
        let mut remaining: BTreeMap<KWeight, i64> = weights
            .into_iter()
            .filter(|(w, _)| self.is_k_dominant(w))
            .map(|(w, m)| (w, m as i64))
            .collect();
        let mut result = BranchingResult::default();

        while let Some(top) = remaining
            .keys()
            .max_by(|a, b| self.height(a).cmp(&self.height(b)).then_with(|| a.cmp(b)))
            .cloned()
        {
            let count = remaining[&top];
            let label = self.label_of(&top)?;
            for (w, m) in self.k_dominant_weights(&label)? {
                let slot = remaining.entry(w.clone()).or_insert(0);
                *slot -= count * m as i64;
                if *slot < 0 {
                    return Err(Error::Invariant(format!(
                        "negative multiplicity at {w:?} after removing {count} × {label}"
                    )));
                }
                if *slot == 0 {
                    remaining.remove(&w);
                }
            }
            *result.constituents.entry(label).or_insert(0) += count as u64;
        }
        Ok(result)
    }

    pub fn branch(&self, lambda: &DominantWeight) -> Result<BranchingResult> {
        self.decompose(self.restricted_weights(lambda)?)
    }

    /// `m_λ = dim Hom_K(V_λ, W^ℂ)` for the slice representation `W`.
    pub fn slice_multiplicity(&self, lambda: &DominantWeight) -> Result<u64> {
        Ok(self.branch(lambda)?.multiplicity(&self.space.slice_rep))
    }

    /// Multiplicity of the trivial `K`-representation (spherical functions).
    pub fn spherical_multiplicity(&self, lambda: &DominantWeight) -> Result<u64> {
        let trivial = KIrrepLabel::trivial(self.k.rank, self.extra_factor());
        Ok(self.branch(lambda)?.multiplicity(&trivial))
    }
}

pub fn branch(space: &FocalSpace, lambda: &DominantWeight) -> Result<BranchingResult> {
    Brancher::new(space).branch(lambda)
}

pub fn slice_multiplicity(space: &FocalSpace, lambda: &DominantWeight) -> Result<u64> {
    Brancher::new(space).slice_multiplicity(lambda)
}

pub fn spherical_multiplicity(space: &FocalSpace, lambda: &DominantWeight) -> Result<u64> {
    Brancher::new(space).spherical_multiplicity(lambda)
}

/// Σ multiplicity × dimension over the constituents.
pub fn total_dimension(brancher: &Brancher, result: &BranchingResult) -> Result<u64> {
    result
        .constituents
        .iter()
        .try_fold(0u64, |acc, (l, &m)| Ok(acc + m * brancher.k_dimension(l)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalization::FocalSpaceId;

    fn dw(levels: &[u32]) -> DominantWeight {
        DominantWeight::new(levels.to_vec())
    }

    fn brancher(id: FocalSpaceId) -> Brancher {
        Brancher::new(&FocalSpace::new(id))
    }

    fn label(ss: &[u32], extra: ExtraLabel) -> KIrrepLabel {
        KIrrepLabel {
            semisimple: dw(ss),
            extra,
        }
    }

    #[test]
    fn embeddings_are_integral() {
        for s in FocalSpace::all() {
            let b = Brancher::new(&s);
            b.embedding.check_integrality(&b.g, &b.k).unwrap();
        }
    }

    #[test]
    fn broken_embedding_is_rejected() {
        let mut b = brancher(FocalSpaceId::CP2);
        b.embedding.center_charge = Some(vec![int(1), int(1), int(0)]);
        assert!(matches!(
            b.embedding.check_integrality(&b.g, &b.k),
            Err(Error::NonIntegralRestriction(_))
        ));
        assert!(matches!(
            b.branch(&dw(&[1, 0])),
            Err(Error::NonIntegralRestriction(_))
        ));
    }

    #[test]
    fn b4_roots_sit_inside_f4() {
        let b = brancher(FocalSpaceId::OP2);
        for a in &b.k.positive_roots {
            assert!(b.g.is_root(&b.embedding.project_semisimple(a)));
        }
    }

    #[test]
    fn cp2_adjoint_contains_su2_adjoint_at_charge_zero() {
        let b = brancher(FocalSpaceId::CP2);
        let weights = b.restricted_weights(&dw(&[1, 1])).unwrap();
        for l in [2, 0, -2] {
            assert!(
                weights
                    .get(&KWeight {
                        labels: vec![l],
                        extra: 0
                    })
                    .copied()
                    .unwrap_or(0)
                    >= 1
            );
        }
        let r = b.branch(&dw(&[1, 1])).unwrap();
        assert_eq!(r.multiplicity(&label(&[2], ExtraLabel::Charge(0))), 1);
        assert_eq!(r.multiplicity(&label(&[0], ExtraLabel::Charge(0))), 1);
        assert_eq!(r.multiplicity(&label(&[1], ExtraLabel::Charge(3))), 1);
        assert_eq!(r.multiplicity(&label(&[1], ExtraLabel::Charge(-3))), 1);
        assert_eq!(total_dimension(&b, &r), Ok(8));
    }

    #[test]
    fn hp2_fourteen() {
        let b = brancher(FocalSpaceId::HP2);
        assert_eq!(
            b.restricted_weights(&dw(&[0, 1, 0]))
                .unwrap()
                .values()
                .sum::<u64>(),
            14
        );
        let r = b.branch(&dw(&[0, 1, 0])).unwrap();
        assert_eq!(r.multiplicity(&label(&[0, 1], ExtraLabel::Sp1(0))), 1);
        assert_eq!(r.multiplicity(&label(&[1, 0], ExtraLabel::Sp1(1))), 1);
        assert_eq!(r.multiplicity(&label(&[0, 0], ExtraLabel::Sp1(0))), 1);
        assert_eq!(r.constituents.len(), 3);
        assert_eq!(total_dimension(&b, &r), Ok(14));
    }

    #[test]
    fn op2_twenty_six_and_adjoint() {
        let b = brancher(FocalSpaceId::OP2);
        let r = b.branch(&dw(&[0, 0, 0, 1])).unwrap();
        assert_eq!(r.multiplicity(&label(&[1, 0, 0, 0], ExtraLabel::None)), 1);
        assert_eq!(r.multiplicity(&label(&[0, 0, 0, 1], ExtraLabel::None)), 1);
        assert_eq!(r.multiplicity(&label(&[0, 0, 0, 0], ExtraLabel::None)), 1);
        assert_eq!(r.constituents.len(), 3);

        let adj = b.branch(&dw(&[1, 0, 0, 0])).unwrap();
        assert_eq!(adj.multiplicity(&label(&[0, 1, 0, 0], ExtraLabel::None)), 1);
        assert_eq!(adj.multiplicity(&label(&[0, 0, 0, 1], ExtraLabel::None)), 1);
        assert_eq!(adj.constituents.len(), 2);
        assert_eq!(b.slice_multiplicity(&dw(&[1, 0, 0, 0])), Ok(0));
    }

    #[test]
    fn trivial_rep_branches_to_trivial() {
        for s in FocalSpace::all() {
            let b = Brancher::new(&s);
            let zero = DominantWeight::zero(b.g.rank);
            let r = b.branch(&zero).unwrap();
            assert_eq!(r.constituents.len(), 1);
            assert_eq!(b.spherical_multiplicity(&zero), Ok(1));
            assert_eq!(b.slice_multiplicity(&zero), Ok(0));
        }
    }

    #[test]
    fn slice_and_spherical_examples() {
        assert_eq!(
            brancher(FocalSpaceId::CP2).slice_multiplicity(&dw(&[3, 0])),
            Ok(1)
        );
        assert_eq!(
            brancher(FocalSpaceId::CP2).spherical_multiplicity(&dw(&[1, 1])),
            Ok(1)
        );
        assert_eq!(
            brancher(FocalSpaceId::HP2).spherical_multiplicity(&dw(&[0, 1, 0])),
            Ok(1)
        );
    }

    #[test]
    fn cp2_dual_representation_has_dual_constituents() {
        let b = brancher(FocalSpaceId::CP2);
        for (p, q) in [(1u32, 0u32), (2, 1), (3, 0), (1, 2)] {
            let r = b.branch(&dw(&[p, q])).unwrap();
            let rd = b.branch(&dw(&[q, p])).unwrap();
            for (l, &m) in &r.constituents {
                assert_eq!(rd.multiplicity(&l.dual()), m);
            }
        }
    }
}
