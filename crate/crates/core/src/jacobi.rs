//! Spectrum of the Jacobi operator on the normal bundle, with index,
//! nullity and Killing nullity.
//!
//! On `KP² = G/K` the Jacobi operator is `Cas^G − Cas^K − (4/3)d` for the
//! metric `b_𝕂`, and `Cas^K` acts on the irreducible slice representation
//! by `(2/3)d`, so `𝒥 = Cas^G − 2d`. By Frobenius reciprocity the
//! eigenvalue `c_λ − 2d` occurs with multiplicity `m_λ · dim V_λ`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::branching::Brancher;
use crate::clifford::jacobi_curvature_constants;
use crate::normalization::{casimir_dual_scale, CasimirGroup, FocalSpace, MetricScale};
use crate::rep_core::{casimir_eigenvalue, enumerate_dominant, weyl_dimension, DEFAULT_DIM_GUARD};
use crate::root_data::{DominantWeight, RootSystem};
use crate::{int, ratio, Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Classification {
    Negative,
    Null,
    Positive,
}

impl Classification {
    pub fn of(x: Rational) -> Self {
        if x.is_negative() {
            Classification::Negative
        } else if x.is_zero() {
            Classification::Null
        } else {
            Classification::Positive
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Negative => "negative",
            Classification::Null => "null",
            Classification::Positive => "positive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub lambda: DominantWeight,
    pub casimir: Rational,
    pub jacobi_eigenvalue: Rational,
    pub dim: u64,
    pub multiplicity: u64,
    pub classification: Classification,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub space: FocalSpace,
    /// Representations with `m_λ > 0`, sorted by Casimir value then levels.
    pub entries: Vec<SpectrumEntry>,
    pub index: u64,
    pub nullity: u64,
    pub killing_nullity: u64,
    /// Whether `Cas^K(slice) − Ric⊥ + 𝒜 = 2d`, i.e. the expanded form of the
    /// Jacobi operator agrees with the shifted Casimir.
    pub expanded_consistency: bool,
}

#[derive(Clone, Debug)]
pub struct SpectrumOptions {
    /// Extra Casimir headroom above `2d` for listing positive entries.
    pub margin: Rational,
    pub dim_guard: u64,
    /// Replaces the computed `G`-Casimir scale. Only useful for testing
    /// that a wrong constant is detected.
    pub ambient_scale: Option<MetricScale>,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions {
            margin: Rational::zero(),
            dim_guard: DEFAULT_DIM_GUARD,
            ambient_scale: None,
        }
    }
}

/// Casimir of the slice representation for `b_𝕂|_𝔨`; equals `(2/3)d`.
pub fn slice_casimir(space: &FocalSpace) -> Rational {
    let k = RootSystem::new(space.k_alg.semisimple);
    let scale = casimir_dual_scale(space, CasimirGroup::Isotropy);
    casimir_eigenvalue(&k, &space.slice_rep.semisimple, scale).expect("slice label matches K")
}

/// `Cas^K(slice) − Ric⊥ + 𝒜`, the constant subtracted from `Cas^G`.
pub fn jacobi_shift(space: &FocalSpace) -> Result<Rational> {
    let (ric, a) = jacobi_curvature_constants(space)?;
    Ok(slice_casimir(space) - ric + a)
}

fn expanded_consistency(space: &FocalSpace) -> Result<bool> {
    let two_d = int(2 * space.d as i64);
    let shift = jacobi_shift(space)?;
    Ok(shift == two_d && slice_casimir(space) + ratio(4, 3) * space.d as i64 == two_d)
}

/// `c_λ − 2d` for `G`-representation `λ`.
pub fn jacobi_eigenvalue(space: &FocalSpace, lambda: &DominantWeight) -> Result<Rational> {
    let g = RootSystem::new(space.g_alg);
    let c = casimir_eigenvalue(&g, lambda, casimir_dual_scale(space, CasimirGroup::Ambient))?;
    if !expanded_consistency(space)? {
        return Err(Error::Invariant(format!(
            "Jacobi shift for {} is not 2d",
            space.id
        )));
    }
    Ok(c - int(2 * space.d as i64))
}

/// `dim SO(n+1) − dim G`.
pub fn killing_nullity(space: &FocalSpace) -> u64 {
    let n = space.n as u64;
    (n + 1) * n / 2 - RootSystem::new(space.g_alg).algebra_dim as u64
}

pub fn compute_spectrum(space: &FocalSpace) -> Result<SpectrumReport> {
    compute_spectrum_with(space, &SpectrumOptions::default())
}

pub fn compute_spectrum_with(space: &FocalSpace, opts: &SpectrumOptions) -> Result<SpectrumReport> {
    let brancher = Brancher::with_guard(space, opts.dim_guard);
    let scale = opts
        .ambient_scale
        .unwrap_or_else(|| casimir_dual_scale(space, CasimirGroup::Ambient));
    let two_d = int(2 * space.d as i64);
    let bound = two_d + opts.margin;

    let mut entries = Vec::new();
    for lambda in enumerate_dominant(&brancher.g, scale, bound) {
        let multiplicity = brancher.slice_multiplicity(&lambda)?;
        if multiplicity == 0 {
            continue;
        }
        let casimir = casimir_eigenvalue(&brancher.g, &lambda, scale)?;
        let jacobi_eigenvalue = casimir - two_d;
        entries.push(SpectrumEntry {
            dim: weyl_dimension(&brancher.g, &lambda)?,
            lambda,
            casimir,
            jacobi_eigenvalue,
            multiplicity,
            classification: Classification::of(jacobi_eigenvalue),
        });
    }
    entries.sort_by(|a, b| {
        a.casimir
            .cmp(&b.casimir)
            .then_with(|| a.lambda.cmp(&b.lambda))
    });

    let total = |class| {
        entries
            .iter()
            .filter(|e| e.classification == class)
            .map(|e| e.multiplicity * e.dim)
            .sum()
    };
    let index = total(Classification::Negative);
    let nullity = total(Classification::Null);
    let killing_nullity = killing_nullity(space);
    if killing_nullity > nullity {
        return Err(Error::Invariant(format!(
            "Killing nullity {killing_nullity} exceeds nullity {nullity} for {}",
            space.id
        )));
    }

    Ok(SpectrumReport {
        space: space.clone(),
        entries,
        index,
        nullity,
        killing_nullity,
        expanded_consistency: expanded_consistency(space)?,
    })
}

/// Smallest nonzero Casimir eigenvalue among spherical representations,
/// i.e. the first eigenvalue of the Laplacian on functions.
pub fn first_laplace_eigenvalue(space: &FocalSpace) -> Result<Rational> {
    let brancher = Brancher::new(space);
    let scale = casimir_dual_scale(space, CasimirGroup::Ambient);
    let mut bound = space.d_rational();
    for _ in 0..16 {
        for lambda in enumerate_dominant(&brancher.g, scale, bound) {
            if !lambda.is_zero() && brancher.spherical_multiplicity(&lambda)? > 0 {
                return casimir_eigenvalue(&brancher.g, &lambda, scale);
            }
        }
        bound *= 2;
    }
    Err(Error::Invariant(format!(
        "no spherical representation found for {}",
        space.id
    )))
}
