//! Weyl dimensions, Freudenthal weight multiplicities, Casimir eigenvalues
//! and bounded enumeration of dominant weights.
//!
//! Weights are handled in Dynkin-label coordinates internally (integer
//! vectors); [`WeightSystem::coordinate_entries`] converts back to the
//! ambient coordinates of [`RootSystem`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::normalization::{MetricScale, ScaleMeaning};
use crate::root_data::{DominantWeight, RootSystem, WeightVector};
use crate::{int, Error, Rational, Result};

/// Largest representation `weight_system` will expand unless told otherwise.
pub const DEFAULT_DIM_GUARD: u64 = 100_000;

/// Weights of an irreducible representation with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub rep: DominantWeight,
    /// Keyed by Dynkin labels.
    entries: BTreeMap<Vec<i64>, u64>,
}

impl WeightSystem {
    pub fn entries(&self) -> &BTreeMap<Vec<i64>, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, labels: &[i64]) -> u64 {
        self.entries.get(labels).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coordinate_entries(&self, rs: &RootSystem) -> BTreeMap<WeightVector, u64> {
        self.entries
            .iter()
            .map(|(l, &m)| (rs.labels_to_coords(l), m))
            .collect()
    }
}

fn check_rank(rs: &RootSystem, lambda: &DominantWeight) -> Result<()> {
    if lambda.rank() != rs.rank {
        return Err(Error::LengthMismatch {
            expected: rs.rank,
            found: lambda.rank(),
        });
    }
    Ok(())
}

/// `∏_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩`.
pub fn weyl_dimension(rs: &RootSystem, lambda: &DominantWeight) -> Result<u64> {
    let shifted = &rs.weight_of(lambda)? + &rs.weyl_vector;
    let dim = rs.positive_roots.iter().fold(int(1), |acc, a| {
        acc * (shifted.dot(a) / rs.weyl_vector.dot(a))
    });
    if !dim.is_integer() || !dim.is_positive() {
        return Err(Error::Invariant(format!(
            "Weyl dimension of {lambda} is {dim}"
        )));
    }
    Ok(dim.to_integer() as u64)
}

/// `c_λ = s · ⟨λ, λ+2ρ⟩`, with `s` the induced scale on weights.
pub fn casimir_eigenvalue(
    rs: &RootSystem,
    lambda: &DominantWeight,
    s: MetricScale,
) -> Result<Rational> {
    let s = match s.meaning {
        ScaleMeaning::InducedOnDual => s,
        ScaleMeaning::FormOnAlgebra => s.reciprocal_view(),
    };
    Ok(s.value * rs.casimir_form(lambda)?)
}

/// Full weight multiset of `V_λ` with the default dimension guard.
pub fn weight_system(rs: &RootSystem, lambda: &DominantWeight) -> Result<WeightSystem> {
    weight_system_guarded(rs, lambda, DEFAULT_DIM_GUARD)
}

/// Multiplicities of the dominant weights of `V_λ`, by Freudenthal's
/// recursion
///
/// ```text
/// (|λ+ρ|² − |μ+ρ|²) m(μ) = 2 Σ_{α>0} Σ_{k≥1} m(μ+kα) ⟨μ+kα, α⟩
/// ```
///
/// with `m(μ+kα)` read off the dominant conjugate. A dominant `μ` is a weight
/// exactly when `λ − μ` is a non-negative combination of simple roots; these
/// are reached from `λ` by subtracting positive roots, and processed in
/// decreasing height so that every term on the right is already known.
pub fn dominant_multiplicities(
    rs: &RootSystem,
    lambda: &DominantWeight,
) -> Result<BTreeMap<Vec<i64>, u64>> {
    check_rank(rs, lambda)?;
    let top = lambda.labels();
    let roots = rs.positive_root_labels();
    let ones: Vec<i64> = alloc::vec![1; rs.rank];
    let shifted_norm = |v: &[i64]| {
        let s: Vec<i64> = v.iter().zip(&ones).map(|(a, b)| a + b).collect();
        rs.label_inner(&s, &s)
    };
    let is_weight = |dom: &[i64]| {
        let diff: Vec<i64> = top.iter().zip(dom).map(|(a, b)| a - b).collect();
        rs.label_is_nonnegative_root_combination(&diff)
    };

    let mut dominant = BTreeSet::new();
    dominant.insert(top.clone());
    let mut queue = alloc::vec![top.clone()];
    while let Some(mu) = queue.pop() {
        for alpha in roots {
            let nu: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a - b).collect();
            let dom = rs.dominant_conjugate(&nu);
            if !dominant.contains(&dom) && is_weight(&dom) {
                dominant.insert(dom.clone());
                queue.push(dom);
            }
        }
    }

    let mut order: Vec<(Rational, Vec<i64>)> = dominant
        .into_iter()
        .map(|mu| (rs.label_inner(&mu, &ones), mu))
        .collect();
    order.sort_by(|a, b| b.cmp(a));

    // ⟨ωᵢ, α⟩ for each positive root, so that ⟨μ, α⟩ = Σ μᵢ pairing[α][i].
    let pairing: Vec<Vec<Rational>> = rs
        .positive_roots
        .iter()
        .map(|a| rs.fundamental_weights.iter().map(|w| w.dot(a)).collect())
        .collect();
    let top_norm = shifted_norm(&top);
    let mut mults: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for (_, mu) in order {
        if mu == top {
            mults.insert(mu, 1);
            continue;
        }
        let mut sum = Rational::zero();
        for (alpha, pair) in roots.iter().zip(&pairing) {
            let mut cur = mu.clone();
            loop {
                for (c, a) in cur.iter_mut().zip(alpha) {
                    *c += a;
                }
                let Some(&m) = mults.get(&rs.dominant_conjugate(&cur)) else {
                    break;
                };
                let ip = cur
                    .iter()
                    .zip(pair)
                    .fold(Rational::zero(), |acc, (&c, p)| acc + p * c);
                sum += ip * (m as i64);
            }
        }
        let denom = top_norm - shifted_norm(&mu);
        if !denom.is_positive() {
            return Err(Error::Invariant(format!(
                "Freudenthal denominator {denom} at {mu:?} for {lambda}"
            )));
        }
        let m = sum * 2 / denom;
        if !m.is_integer() || !m.is_positive() {
            return Err(Error::Invariant(format!(
                "multiplicity {m} at {mu:?} for {lambda}"
            )));
        }
        mults.insert(mu, m.to_integer() as u64);
    }
    Ok(mults)
}

/// Weyl orbit of a dominant label vector.
pub fn weyl_orbit(rs: &RootSystem, dominant: &[i64]) -> BTreeSet<Vec<i64>> {
    let mut orbit = BTreeSet::new();
    orbit.insert(dominant.to_vec());
    let mut stack = alloc::vec![dominant.to_vec()];
    while let Some(mu) = stack.pop() {
        // sᵢ lowers μ exactly when its i-th label is positive
        for i in (0..rs.rank).filter(|&i| mu[i] > 0) {
            let nu = rs.reflect_labels(&mu, i);
            if orbit.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    orbit
}

/// Full weight multiset of `V_λ`: dominant multiplicities spread over Weyl
/// orbits. Fails with [`Error::GuardExceeded`] above `guard` dimensions.
pub fn weight_system_guarded(
    rs: &RootSystem,
    lambda: &DominantWeight,
    guard: u64,
) -> Result<WeightSystem> {
    check_rank(rs, lambda)?;
    let dim = weyl_dimension(rs, lambda)?;
    if dim > guard {
        return Err(Error::GuardExceeded { dim, guard });
    }
    let mut entries = BTreeMap::new();
    for (mu, m) in dominant_multiplicities(rs, lambda)? {
        for nu in weyl_orbit(rs, &mu) {
            entries.insert(nu, m);
        }
    }
    let ws = WeightSystem {
        rep: lambda.clone(),
        entries,
    };
    if ws.dimension() != dim {
        return Err(Error::Invariant(format!(
            "weight multiplicities of {lambda} sum to {}, Weyl dimension is {dim}",
            ws.dimension()
        )));
    }
    Ok(ws)
}

/// All dominant `λ` with `s · ⟨λ, λ+2ρ⟩ ≤ bound`, sorted by Casimir value and
/// then by levels.
///
/// The walk adds fundamental weights in non-decreasing index order, so each
/// `λ` is reached from exactly one parent. Adding `ωᵢ` strictly increases
/// the Casimir, hence a pruned branch never hides an admissible weight.
pub fn enumerate_dominant(rs: &RootSystem, s: MetricScale, bound: Rational) -> Vec<DominantWeight> {
    let scale = match s.meaning {
        ScaleMeaning::InducedOnDual => s.value,
        ScaleMeaning::FormOnAlgebra => s.value.recip(),
    };
    let value = |dw: &DominantWeight| scale * rs.casimir_form(dw).expect("rank matches");

    let mut found: Vec<(Rational, DominantWeight)> = Vec::new();
    let root = DominantWeight::zero(rs.rank);
    if value(&root) > bound {
        return Vec::new();
    }
    let mut stack = alloc::vec![(root, 0usize)];
    while let Some((dw, first)) = stack.pop() {
        for i in first..rs.rank {
            let child = dw.plus_fundamental(i);
            if value(&child) <= bound {
                stack.push((child, i));
            }
        }
        found.push((value(&dw), dw));
    }
    found.sort();
    found.into_iter().map(|(_, dw)| dw).collect()
}

/// `⟨λ+ωᵢ, λ+ωᵢ+2ρ⟩ − ⟨λ, λ+2ρ⟩`, positive for every dominant `λ`.
pub fn casimir_step(rs: &RootSystem, lambda: &DominantWeight, i: usize) -> Result<Rational> {
    Ok(rs.casimir_form(&lambda.plus_fundamental(i))? - rs.casimir_form(lambda)?)
}
