//! The known families of `G`-representations that carry the slice
//! representation with Casimir eigenvalue up to `2d`, with their closed-form
//! eigenvalues for `b_𝕂`. Used to label report rows.

use alloc::vec::Vec;

use crate::normalization::FocalSpaceId;
use crate::root_data::DominantWeight;
use crate::{ratio, Rational};

/// A one-parameter family `k ↦ λ(k)`, `k ≥ first_k`.
#[derive(Clone, Copy, Debug)]
pub struct Family {
    pub space: FocalSpaceId,
    pub name: &'static str,
    pub formula: &'static str,
    pub first_k: u32,
    levels: fn(u32) -> [u32; 4],
    rank: usize,
    casimir: fn(i64) -> i64,
}

impl Family {
    pub fn member(&self, k: u32) -> DominantWeight {
        assert!(k >= self.first_k);
        DominantWeight::new((self.levels)(k)[..self.rank].to_vec())
    }

    /// Closed-form Casimir eigenvalue: `(4/3)·p(k)`.
    pub fn casimir(&self, k: u32) -> Rational {
        ratio(4, 3) * (self.casimir)(k as i64)
    }

    /// The `k` with `member(k) == λ`, if `λ` belongs to this family.
    pub fn parameter_of(&self, lambda: &DominantWeight) -> Option<u32> {
        if lambda.rank() != self.rank {
            return None;
        }
        // every family is affine in k with a nonzero slope in some level
        let base = self.member(self.first_k);
        let step = self.member(self.first_k + 1);
        let (i, slope) = base
            .levels()
            .iter()
            .zip(step.levels())
            .enumerate()
            .find_map(|(i, (a, b))| (b != a).then(|| (i, b - a)))?;
        let diff = lambda.levels()[i].checked_sub(base.levels()[i])?;
        if diff % slope != 0 {
            return None;
        }
        let k = self.first_k + diff / slope;
        (self.member(k) == *lambda).then_some(k)
    }
}

static FAMILIES: [Family; 7] = [
    Family {
        space: FocalSpaceId::CP2,
        name: "(k+1)ω1+(k+1)ω2",
        formula: "(4/3)(k+1)(k+3)",
        first_k: 0,
        levels: |k| [k + 1, k + 1, 0, 0],
        rank: 2,
        casimir: |k| (k + 1) * (k + 3),
    },
    Family {
        space: FocalSpaceId::CP2,
        name: "(k-1)ω1+(k+2)ω2",
        formula: "(4/3)(k+1)(k+2)",
        first_k: 1,
        levels: |k| [k - 1, k + 2, 0, 0],
        rank: 2,
        casimir: |k| (k + 1) * (k + 2),
    },
    Family {
        space: FocalSpaceId::CP2,
        name: "(k+3)ω1+kω2",
        formula: "(4/3)(k+2)(k+3)",
        first_k: 0,
        levels: |k| [k + 3, k, 0, 0],
        rank: 2,
        casimir: |k| (k + 2) * (k + 3),
    },
    Family {
        space: FocalSpaceId::HP2,
        name: "kω2",
        formula: "(4/3)k(k+5)",
        first_k: 1,
        levels: |k| [0, k, 0, 0],
        rank: 3,
        casimir: |k| k * (k + 5),
    },
    Family {
        space: FocalSpaceId::HP2,
        name: "ω1+kω2+ω3",
        formula: "(4/3)(k²+8k+12)",
        first_k: 0,
        levels: |k| [1, k, 1, 0],
        rank: 3,
        casimir: |k| k * k + 8 * k + 12,
    },
    Family {
        space: FocalSpaceId::OP2,
        name: "kω4",
        formula: "(4/3)(k²+11k)",
        first_k: 1,
        levels: |k| [0, 0, 0, k],
        rank: 4,
        casimir: |k| k * k + 11 * k,
    },
    Family {
        space: FocalSpaceId::OP2,
        name: "ω3+kω4",
        formula: "(4/3)(k²+14k+24)",
        first_k: 0,
        levels: |k| [0, 0, 1, k],
        rank: 4,
        casimir: |k| k * k + 14 * k + 24,
    },
];

pub fn families(space: FocalSpaceId) -> Vec<&'static Family> {
    FAMILIES.iter().filter(|f| f.space == space).collect()
}

/// The family containing `λ` and its parameter.
pub fn classify(space: FocalSpaceId, lambda: &DominantWeight) -> Option<(&'static Family, u32)> {
    families(space)
        .into_iter()
        .find_map(|f| f.parameter_of(lambda).map(|k| (f, k)))
}
