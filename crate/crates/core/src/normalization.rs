//! Metric constants.
//!
//! Three invariant inner products show up for each focal manifold
//! `G/K ⊂ Sⁿ`: the negative Killing form `b_𝔤` of `𝔤`, the form `b_𝕂`
//! inducing the metric of the embedding, and the restriction of either to
//! `𝔨`. Scaling a form on the algebra by `c` scales the induced product on
//! weights by `1/c`; everything below is bookkeeping of that rule so that
//! a Casimir eigenvalue ends up as `s · ⟨λ, λ+2ρ⟩` with the plain
//! coordinate dot product.

use core::fmt;

use num_traits::{Signed, Zero};

use crate::branching::{torus_embedding, ExtraFactor, ExtraLabel, KIrrepLabel};
use crate::root_data::{DominantWeight, RootSystem, RootSystemId};
use crate::{int, ratio, Error, Rational, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FocalSpaceId {
    CP2,
    HP2,
    OP2,
}

impl FocalSpaceId {
    pub const ALL: [FocalSpaceId; 3] = [FocalSpaceId::CP2, FocalSpaceId::HP2, FocalSpaceId::OP2];

    /// Lower-case flag spelling: `cp2`, `hp2`, `op2`.
    pub fn slug(self) -> &'static str {
        match self {
            FocalSpaceId::CP2 => "cp2",
            FocalSpaceId::HP2 => "hp2",
            FocalSpaceId::OP2 => "op2",
        }
    }

    pub fn from_slug(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.slug() == s)
    }
}

impl fmt::Display for FocalSpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FocalSpaceId::CP2 => "CP2",
            FocalSpaceId::HP2 => "HP2",
            FocalSpaceId::OP2 => "OP2",
        })
    }
}

/// Semisimple part of `𝔨` plus whatever extra factor `K` carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsotropyAlgebra {
    pub semisimple: RootSystemId,
    pub extra: ExtraFactor,
}

/// One of the focal manifolds `KP² = G/K ⊂ Sⁿ` of dimension `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FocalSpace {
    pub id: FocalSpaceId,
    pub d: u32,
    pub n: u32,
    pub g_alg: RootSystemId,
    pub k_alg: IsotropyAlgebra,
    /// Isotropy representation on the normal space.
    pub slice_rep: KIrrepLabel,
}

impl FocalSpace {
    pub fn new(id: FocalSpaceId) -> Self {
        let (d, g_alg, k_alg, slice_rep) = match id {
            // U(2) ⊂ SU(3), slice = adjoint of SU(2), center acts trivially
            FocalSpaceId::CP2 => (
                4,
                RootSystemId::A2,
                IsotropyAlgebra {
                    semisimple: RootSystemId::A1,
                    extra: ExtraFactor::Center,
                },
                KIrrepLabel {
                    semisimple: DominantWeight::new([2].into()),
                    extra: ExtraLabel::Charge(0),
                },
            ),
            // Sp(2)·Sp(1) ⊂ Sp(3), slice = Λ²₀ℂ⁴ of Sp(2), Sp(1) trivial
            FocalSpaceId::HP2 => (
                8,
                RootSystemId::C3,
                IsotropyAlgebra {
                    semisimple: RootSystemId::C2,
                    extra: ExtraFactor::Sp1,
                },
                KIrrepLabel {
                    semisimple: DominantWeight::new([0, 1].into()),
                    extra: ExtraLabel::Sp1(0),
                },
            ),
            // Spin(9) ⊂ F4, slice = vector representation ℝ⁹
            FocalSpaceId::OP2 => (
                16,
                RootSystemId::F4,
                IsotropyAlgebra {
                    semisimple: RootSystemId::B4,
                    extra: ExtraFactor::None,
                },
                KIrrepLabel {
                    semisimple: DominantWeight::new([1, 0, 0, 0].into()),
                    extra: ExtraLabel::None,
                },
            ),
        };
        FocalSpace {
            id,
            d,
            n: 3 * d / 2 + 1,
            g_alg,
            k_alg,
            slice_rep,
        }
    }

    pub fn all() -> [FocalSpace; 3] {
        FocalSpaceId::ALL.map(FocalSpace::new)
    }

    /// Rank of the normal bundle, `d/2 + 1`.
    pub fn normal_rank(&self) -> u32 {
        self.d / 2 + 1
    }

    pub fn d_rational(&self) -> Rational {
        int(self.d as i64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScaleMeaning {
    /// `b ↦ value · b` on the Lie algebra.
    FormOnAlgebra,
    /// Induced product on weights is `value` times the reference product.
    InducedOnDual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MetricScale {
    pub value: Rational,
    pub meaning: ScaleMeaning,
}

impl MetricScale {
    pub fn form(value: Rational) -> Self {
        debug_assert!(value.is_positive());
        MetricScale {
            value,
            meaning: ScaleMeaning::FormOnAlgebra,
        }
    }

    pub fn dual(value: Rational) -> Self {
        debug_assert!(value.is_positive());
        MetricScale {
            value,
            meaning: ScaleMeaning::InducedOnDual,
        }
    }

    /// The same rescaling seen from the other side: scaling a form by `c`
    /// scales its dual product by `1/c`, and conversely.
    pub fn reciprocal_view(self) -> Self {
        let value = self.value.recip();
        match self.meaning {
            ScaleMeaning::FormOnAlgebra => MetricScale::dual(value),
            ScaleMeaning::InducedOnDual => MetricScale::form(value),
        }
    }
}

impl fmt::Display for MetricScale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// The factor `c` with (Killing-induced product on weights) = `c · ⟨·,·⟩`,
/// from the strange formula `b_𝔤(ρ, ρ) = dim 𝔤 / 24`.
pub fn strange_dual_factor(rs: &RootSystem) -> MetricScale {
    let rho_sq = rs.weyl_vector.dot(&rs.weyl_vector);
    MetricScale::dual(int(rs.algebra_dim as i64) / (int(24) * rho_sq))
}

/// Killing form over trace form of the defining representation:
/// `2n` for `𝔰𝔲(n)`, `2(n+1)` for `𝔰𝔭(n)`.
pub fn killing_trace_ratio(id: RootSystemId) -> Result<Rational> {
    match id {
        RootSystemId::A1 => Ok(int(4)),
        RootSystemId::A2 => Ok(int(6)),
        RootSystemId::C2 => Ok(int(6)),
        RootSystemId::C3 => Ok(int(8)),
        RootSystemId::B4 | RootSystemId::F4 => Err(Error::Unsupported(
            "Killing/trace ratio is only tabulated for su(n) and sp(n)",
        )),
    }
}

/// Scalar curvature of the focal metric from the Gauss equation:
/// `d(d−1) − (d/3)(d/2+1)`.
pub fn gauss_scalar(d: u32) -> Result<Rational> {
    if !matches!(d, 4 | 8 | 16) {
        return Err(Error::UnsupportedDimension(d));
    }
    let d = int(d as i64);
    Ok(d * (d - 1) - d / 3 * (d / 2 + 1))
}

/// Scalar curvature of `G/K` for the negative Killing form, `dim/2`.
pub fn killing_scalar_curvature(d: u32) -> Rational {
    ratio(d as i64, 2)
}

/// `f` with `b_𝕂 = f · b_𝔤`. Scalar curvature scales inversely with the
/// metric, so `f = scal(b_𝔤) / scal(g_𝕂)`.
pub fn focal_metric_factor(space: &FocalSpace) -> MetricScale {
    let scal = gauss_scalar(space.d).expect("focal spaces have d in {4, 8, 16}");
    MetricScale::form(killing_scalar_curvature(space.d) / scal)
}

/// `r` with `b_𝔤|_𝔨 = r · b_𝔨` on the semisimple part of `𝔨`.
///
/// Classical pairs use Killing/trace ratios (both Killing forms are
/// multiples of the trace form of the defining representation of `G`);
/// `Spin(9) ⊂ F4` compares the two strange-formula factors on the shared
/// maximal torus.
pub fn restriction_factor(space: &FocalSpace) -> MetricScale {
    match space.id {
        FocalSpaceId::CP2 | FocalSpaceId::HP2 => {
            let g = killing_trace_ratio(space.g_alg).expect("classical");
            let k = killing_trace_ratio(space.k_alg.semisimple).expect("classical");
            MetricScale::form(g / k)
        }
        FocalSpaceId::OP2 => {
            let g = strange_dual_factor(&RootSystem::new(space.g_alg));
            let k = strange_dual_factor(&RootSystem::new(space.k_alg.semisimple));
            // equal dual products up to 1/r on the common torus; take the reciprocal
            MetricScale::form(k.value / g.value)
        }
    }
}

/// Restriction factor obtained purely from strange-formula factors and the
/// torus map: for a root `α` of `G` whose restriction is a root of `K` of
/// the same length, both dual products measure `α` and `r = c_K/c_G`
/// after accounting for the lengths.
pub fn restriction_factor_by_strange_formula(space: &FocalSpace) -> Result<MetricScale> {
    let g = RootSystem::new(space.g_alg);
    let k = RootSystem::new(space.k_alg.semisimple);
    let emb = torus_embedding(space);
    let c_g = strange_dual_factor(&g).value;
    let c_k = strange_dual_factor(&k).value;
    for alpha in &g.positive_roots {
        let image = emb.project_semisimple(alpha);
        let (a2, i2) = (alpha.dot(alpha), image.dot(&image));
        if !i2.is_zero() && a2 == i2 && k.is_root(&image) && emb.extra_value(alpha).is_zero() {
            return Ok(MetricScale::form(c_k * i2 / (c_g * a2)));
        }
    }
    Err(Error::Invariant("no common root between G and K".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CasimirGroup {
    Ambient,
    Isotropy,
}

/// The `s` with `Cas^{b_𝕂} = s · ⟨λ, λ+2ρ⟩` on irreducibles of `G` (or of
/// the semisimple part of `K`, for `b_𝕂|_𝔨`).
pub fn casimir_dual_scale(space: &FocalSpace, which: CasimirGroup) -> MetricScale {
    let f = focal_metric_factor(space).value;
    match which {
        CasimirGroup::Ambient => {
            let c_g = strange_dual_factor(&RootSystem::new(space.g_alg)).value;
            MetricScale::dual(c_g / f)
        }
        CasimirGroup::Isotropy => {
            let r = restriction_factor(space).value;
            let c_k = strange_dual_factor(&RootSystem::new(space.k_alg.semisimple)).value;
            MetricScale::dual(c_k / (f * r))
        }
    }
}

/// Casimir of the adjoint representation for the Killing form, which is 1.
pub fn adjoint_killing_casimir(rs: &RootSystem) -> Rational {
    let highest = rs
        .positive_roots
        .iter()
        .max_by_key(|a| {
            rs.simple_root_coefficients(a)
                .iter()
                .fold(Rational::zero(), |s, c| s + c)
        })
        .expect("nonempty root system");
    let shifted = highest + &rs.weyl_vector.scale(int(2));
    strange_dual_factor(rs).value * highest.dot(&shifted)
}
