//! The `verify` suite: every published constant and count, recomputed and
//! compared against its expected value.

use std::fmt::Display;

use focal_core::branching::Brancher;
use focal_core::clifford::{build_clifford_system, jacobi_curvature_constants, shape_trace_sum};
use focal_core::jacobi::{
    compute_spectrum_with, first_laplace_eigenvalue, jacobi_shift, slice_casimir, SpectrumOptions,
};
use focal_core::normalization::{
    casimir_dual_scale, focal_metric_factor, gauss_scalar, restriction_factor,
    restriction_factor_by_strange_formula, strange_dual_factor, CasimirGroup, FocalSpace,
    FocalSpaceId, MetricScale,
};
use focal_core::rep_core::{casimir_eigenvalue, weyl_dimension, DEFAULT_DIM_GUARD};
use focal_core::root_data::{DominantWeight, RootSystem, RootSystemId};
use focal_core::tables::families;
use focal_core::{int, ratio};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub dim_guard: u64,
    /// Run the spectrum of this space with a wrong Casimir scale.
    pub perturb: Option<FocalSpaceId>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            dim_guard: DEFAULT_DIM_GUARD,
            perturb: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifySummary {
    pub schema_version: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<Check>,
}

impl VerifySummary {
    pub fn new(checks: Vec<Check>) -> Self {
        let passed = checks.iter().filter(|c| c.passed).count();
        VerifySummary {
            schema_version: crate::record::SCHEMA_VERSION,
            passed,
            failed: checks.len() - passed,
            checks,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl Check {
    pub fn line(&self) -> String {
        if self.passed {
            format!("{} … OK", self.label)
        } else {
            format!("{} … FAIL ({})", self.label, self.detail)
        }
    }
}

fn expect<T: PartialEq + Display, E: Display>(
    label: impl Into<String>,
    got: Result<T, E>,
    want: T,
) -> Check {
    let label = label.into();
    match got {
        Ok(got) => Check {
            passed: got == want,
            detail: format!("got {got}, expected {want}"),
            label,
        },
        Err(e) => Check {
            label,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn ok<T: PartialEq + Display>(label: impl Into<String>, got: T, want: T) -> Check {
    expect::<T, String>(label, Ok(got), want)
}

fn normalization_checks(s: &FocalSpace) -> Vec<Check> {
    let (gauss, factor, r) = match s.id {
        FocalSpaceId::CP2 => (int(8), ratio(1, 4), ratio(3, 2)),
        FocalSpaceId::HP2 => (ratio(128, 3), ratio(3, 32), ratio(4, 3)),
        FocalSpaceId::OP2 => (int(192), ratio(1, 24), ratio(9, 7)),
    };
    let ambient = if s.id == FocalSpaceId::OP2 {
        ratio(4, 3)
    } else {
        ratio(2, 3)
    };
    let id = s.id;
    vec![
        expect(
            format!("{id}: Gauss scalar curvature of the focal metric = {gauss}"),
            gauss_scalar(s.d),
            gauss,
        ),
        ok(
            format!("{id}: focal metric is {factor} × Killing form"),
            focal_metric_factor(s).value,
            factor,
        ),
        ok(
            format!("{id}: restriction of the Killing form to k is {r} × its own"),
            restriction_factor(s).value,
            r,
        ),
        expect(
            format!("{id}: restriction factor agrees with the strange formula"),
            restriction_factor_by_strange_formula(s).map(|m| m.value),
            r,
        ),
        ok(
            format!("{id}: G-Casimir scale on weights = {ambient}"),
            casimir_dual_scale(s, CasimirGroup::Ambient).value,
            ambient,
        ),
        ok(
            format!("{id}: K-Casimir scale on weights = {ambient}"),
            casimir_dual_scale(s, CasimirGroup::Isotropy).value,
            ambient,
        ),
    ]
}

fn jacobi_checks(s: &FocalSpace) -> Vec<Check> {
    let id = s.id;
    let d = s.d as i64;
    let cs = build_clifford_system(s.d);
    vec![
        ok(
            format!("{id}: slice Casimir = (2/3)d = {}", ratio(2 * d, 3)),
            slice_casimir(s),
            ratio(2 * d, 3),
        ),
        expect(
            format!("{id}: slice Casimir − Ric⊥ + 𝒜 = 2d = {}", 2 * d),
            jacobi_shift(s),
            int(2 * d),
        ),
        expect(
            format!("{id}: normal Ricci = −d, 𝒜 = (d/3)·Id"),
            jacobi_curvature_constants(s).map(|(a, b)| format!("{a}, {b}")),
            format!("{}, {}", -d, ratio(d, 3)),
        ),
        expect(
            format!("{id}: Clifford system on R^{d} with {} members", d / 2 + 1),
            cs.as_ref().map_err(|e| e.to_string()).and_then(|c| {
                c.verify().map_err(|e| e.to_string())?;
                Ok(c.len() as i64)
            }),
            d / 2 + 1,
        ),
        expect(
            format!(
                "{id}: shape trace sum + Gauss scalar = d(d−1) = {}",
                d * (d - 1)
            ),
            cs.map_err(|e| e.to_string()).and_then(|c| {
                Ok(shape_trace_sum(&c) + gauss_scalar(s.d).map_err(|e| e.to_string())?)
            }),
            int(d * (d - 1)),
        ),
    ]
}

/// Family members checked, as far as the printed tables go.
const TABLE_K_MAX: u32 = 5;

fn table_checks(s: &FocalSpace, guard: u64) -> Vec<Check> {
    let g = RootSystem::new(s.g_alg);
    let brancher = Brancher::with_guard(s, guard);
    let scale = casimir_dual_scale(s, CasimirGroup::Ambient);
    families(s.id)
        .into_iter()
        .map(|f| {
            let mut bad = Vec::new();
            let mut branched = Vec::new();
            for k in f.first_k..=TABLE_K_MAX {
                let l = f.member(k);
                let c = casimir_eigenvalue(&g, &l, scale);
                if c.as_ref() != Ok(&f.casimir(k)) {
                    bad.push(format!("{l}: Casimir {c:?}"));
                }
                // members above the guard only get the Casimir check
                if weyl_dimension(&g, &l).map_or(true, |d| d > guard) {
                    continue;
                }
                branched.push(k);
                match brancher.slice_multiplicity(&l) {
                    Ok(1) => {}
                    other => bad.push(format!("{l}: multiplicity {other:?}")),
                }
            }
            let range = match (branched.first(), branched.last()) {
                (Some(a), Some(b)) => format!("k = {a}..{b}"),
                _ => "no k".to_owned(),
            };
            Check {
                label: format!(
                    "{}: family {} has Casimir {} (k = {}..{TABLE_K_MAX}) and carries the slice once ({range})",
                    s.id, f.name, f.formula, f.first_k
                ),
                passed: bad.is_empty() && !branched.is_empty(),
                detail: bad.join("; "),
            }
        })
        .collect()
}

fn spectrum_checks(s: &FocalSpace, opts: &VerifyOptions) -> Vec<Check> {
    let id = s.id;
    let (index, nullity) = match id {
        FocalSpaceId::CP2 => (8, 20),
        FocalSpaceId::HP2 => (14, 70),
        FocalSpaceId::OP2 => (26, 273),
    };
    let mut sopts = SpectrumOptions {
        dim_guard: opts.dim_guard,
        ..Default::default()
    };
    if opts.perturb == Some(id) {
        let wrong = casimir_dual_scale(s, CasimirGroup::Ambient).value * ratio(3, 4);
        sopts.ambient_scale = Some(MetricScale::dual(wrong));
    }
    let report = compute_spectrum_with(s, &sopts).map_err(|e| e.to_string());
    let field = |f: fn(&focal_core::jacobi::SpectrumReport) -> u64| {
        report.as_ref().map(f).map_err(Clone::clone)
    };
    vec![
        expect(format!("{id}: index = {index}"), field(|r| r.index), index),
        expect(
            format!("{id}: index = n + 1 = {}", s.n + 1),
            field(|r| r.index),
            s.n as u64 + 1,
        ),
        expect(
            format!("{id}: nullity = {nullity}"),
            field(|r| r.nullity),
            nullity,
        ),
        expect(
            format!("{id}: Killing nullity = {nullity}"),
            field(|r| r.killing_nullity),
            nullity,
        ),
        expect(
            format!("{id}: nullity equals Killing nullity"),
            field(|r| r.nullity),
            field(|r| r.killing_nullity).unwrap_or(u64::MAX),
        ),
        expect(
            format!("{id}: first Laplace eigenvalue = d = {}", s.d),
            first_laplace_eigenvalue(s),
            s.d_rational(),
        ),
    ]
}

fn algebra_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for (id, c) in [
        (RootSystemId::C2, ratio(1, 12)),
        (RootSystemId::B4, ratio(1, 14)),
        (RootSystemId::F4, ratio(1, 18)),
    ] {
        let rs = RootSystem::new(id);
        out.push(ok(
            format!("{}: Killing form is {c} on weights", id.algebra_name()),
            strange_dual_factor(&rs).value,
            c,
        ));
    }
    let dims: [(RootSystemId, &[u32], u64); 7] = [
        (RootSystemId::A2, &[1, 1], 8),
        (RootSystemId::A2, &[3, 0], 10),
        (RootSystemId::A2, &[0, 3], 10),
        (RootSystemId::C3, &[0, 1, 0], 14),
        (RootSystemId::C3, &[1, 0, 1], 70),
        (RootSystemId::F4, &[0, 0, 0, 1], 26),
        (RootSystemId::F4, &[0, 0, 1, 0], 273),
    ];
    for (id, levels, dim) in dims {
        let rs = RootSystem::new(id);
        let l = DominantWeight::new(levels.to_vec());
        out.push(expect(
            format!("{}: dim V({l}) = {dim}", id.algebra_name()),
            weyl_dimension(&rs, &l),
            dim,
        ));
    }
    out
}

pub fn run_checks(opts: &VerifyOptions) -> Vec<Check> {
    let mut checks = algebra_checks();
    for s in FocalSpace::all() {
        checks.extend(normalization_checks(&s));
        checks.extend(jacobi_checks(&s));
        checks.extend(table_checks(&s, opts.dim_guard));
        checks.extend(spectrum_checks(&s, opts));
    }
    checks
}
