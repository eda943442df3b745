//! Test-only oracles, independent of the Freudenthal recursion and of the
//! highest-weight peeling used by the library.
//!
//! * Weight multiplicities come from Kostant's formula
//!   `m_λ(μ) = Σ_{w∈W} ε(w) P(w(λ+ρ) − (μ+ρ))` with the partition function
//!   `P` tabulated by a knapsack over the positive roots.
//! * Branching to the equal-rank subgroup `K` uses the alternating sum
//!   `m(σ) = Σ_{w∈W_K} ε(w) M(σ + ρ_K − wρ_K)` over the `G`-weight
//!   multiplicities `M`.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use focal_core::normalization::FocalSpaceId;
use focal_core::root_data::{DominantWeight, RootSystem, RootSystemId, WeightVector};
use focal_core::{int, ratio, Rational};

pub fn dw(levels: &[u32]) -> DominantWeight {
    DominantWeight::new(levels.to_vec())
}

fn reflect(v: &WeightVector, alpha: &WeightVector) -> WeightVector {
    let k = int(2) * dot(v, alpha) / dot(alpha, alpha);
    v - &alpha.scale(k)
}

pub fn dot(a: &WeightVector, b: &WeightVector) -> Rational {
    a.coords().iter().zip(b.coords()).map(|(x, y)| x * y).sum()
}

/// Orbit of a regular vector under the group generated by reflections in
/// `simple`, with the sign of the element reaching each point.
pub fn signed_orbit(start: &WeightVector, simple: &[WeightVector]) -> Vec<(WeightVector, i64)> {
    let mut seen: BTreeMap<WeightVector, i64> = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone(), 1);
    queue.push_back(start.clone());
    while let Some(v) = queue.pop_front() {
        let sign = seen[&v];
        for a in simple {
            let r = reflect(&v, a);
            if let Some(&s) = seen.get(&r) {
                assert_eq!(s, -sign, "orbit point is not regular");
            } else {
                seen.insert(r.clone(), -sign);
                queue.push_back(r);
            }
        }
    }
    seen.into_iter().collect()
}

/// Kostant multiplicity oracle for one irreducible `V_λ`.
///
/// Everything is kept in simple-root coefficients scaled by a common
/// denominator, so the inner loops are integer arithmetic.
pub struct Kostant<'a> {
    rs: &'a RootSystem,
    denom: i64,
    // D · coefficients of w(λ+ρ), with ε(w)
    orbit: Vec<(Vec<i64>, i64)>,
    // simple-root coefficients of each positive root
    roots: Vec<Vec<i64>>,
    dims: Vec<usize>,
    table: Vec<u64>,
}

impl<'a> Kostant<'a> {
    pub fn new(rs: &'a RootSystem, lambda: &DominantWeight) -> Self {
        let top = &rs.weight_of(lambda).unwrap() + &rs.weyl_vector;
        let raw = signed_orbit(&top, &rs.simple_roots);
        let denom = raw
            .iter()
            .flat_map(|(w, _)| rs.simple_root_coefficients(w))
            .fold(1i64, |acc, c| num_integer::lcm(acc, *c.denom()));
        let orbit = raw
            .iter()
            .map(|(w, s)| (scaled(rs, w, denom), *s))
            .collect();
        let roots = rs
            .positive_roots
            .iter()
            .map(|a| coefficients(rs, a).expect("roots are integral"))
            .collect();
        Kostant {
            rs,
            denom,
            orbit,
            roots,
            dims: vec![],
            table: vec![],
        }
    }

    /// `w(λ+ρ) − (μ+ρ)` in simple-root coefficients, if integral.
    fn differences<'b>(&'b self, mu: &WeightVector) -> impl Iterator<Item = (Vec<i64>, i64)> + 'b {
        let q = scaled(self.rs, &(mu + &self.rs.weyl_vector), self.denom);
        let d = self.denom;
        self.orbit.iter().filter_map(move |(w, s)| {
            let diff: Vec<i64> = w.iter().zip(&q).map(|(a, b)| a - b).collect();
            diff.iter()
                .all(|x| x % d == 0)
                .then(|| (diff.iter().map(|x| x / d).collect(), *s))
        })
    }

    /// Tabulates `P` on the box needed for the queries `μ`.
    pub fn prepare(&mut self, queries: &[WeightVector]) {
        let mut hi = vec![0i64; self.rs.rank];
        for mu in queries {
            for (c, _) in self.differences(mu) {
                if c.iter().all(|&x| x >= 0) {
                    for (h, x) in hi.iter_mut().zip(&c) {
                        *h = (*h).max(*x);
                    }
                }
            }
        }
        self.dims = hi.iter().map(|&h| h as usize + 1).collect();
        let size: usize = self.dims.iter().product();
        let mut dp = vec![0u64; size];
        dp[0] = 1;
        // unbounded knapsack over the positive roots, row-major order
        for root in &self.roots {
            let offset = self.index(root);
            let mut cell = vec![0usize; self.dims.len()];
            for flat in 0..size {
                if cell.iter().zip(root).all(|(&c, &r)| c as i64 >= r) {
                    dp[flat] += dp[flat - offset];
                }
                for (c, &d) in cell.iter_mut().zip(&self.dims).rev() {
                    *c += 1;
                    if *c < d {
                        break;
                    }
                    *c = 0;
                }
            }
        }
        self.table = dp;
    }

    fn index(&self, c: &[i64]) -> usize {
        c.iter()
            .zip(&self.dims)
            .fold(0, |acc, (&x, &d)| acc * d + x as usize)
    }

    fn partition(&self, c: &[i64]) -> u64 {
        if c.iter().any(|&x| x < 0) {
            return 0;
        }
        assert!(
            c.iter().zip(&self.dims).all(|(&x, &d)| (x as usize) < d),
            "partition table too small for {c:?}"
        );
        self.table[self.index(c)]
    }

    pub fn multiplicity(&self, mu: &WeightVector) -> i64 {
        self.differences(mu)
            .map(|(c, sign)| sign * self.partition(&c) as i64)
            .sum()
    }
}

fn scaled(rs: &RootSystem, v: &WeightVector, denom: i64) -> Vec<i64> {
    rs.simple_root_coefficients(v)
        .into_iter()
        .map(|c| {
            let x = c * denom;
            assert!(x.is_integer());
            x.to_integer()
        })
        .collect()
}

/// Integer simple-root coefficients of `v`, or `None` off the root lattice.
pub fn coefficients(rs: &RootSystem, v: &WeightVector) -> Option<Vec<i64>> {
    rs.simple_root_coefficients(v)
        .into_iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

/// Simple roots of `K`, written in `G` coordinates (all three pairs have
/// equal rank, so `K` and `G` share a maximal torus).
pub fn k_simple_roots(space: FocalSpaceId) -> Vec<WeightVector> {
    let v = |c: &[i64]| WeightVector::from_ints(c);
    match space {
        FocalSpaceId::CP2 => vec![v(&[1, -1, 0])],
        FocalSpaceId::HP2 => vec![v(&[1, -1, 0]), v(&[0, 2, 0]), v(&[0, 0, 2])],
        FocalSpaceId::OP2 => vec![
            v(&[1, -1, 0, 0]),
            v(&[0, 1, -1, 0]),
            v(&[0, 0, 1, -1]),
            v(&[0, 0, 0, 1]),
        ],
    }
}

pub fn k_rho(space: FocalSpaceId) -> WeightVector {
    match space {
        FocalSpaceId::CP2 => WeightVector(vec![ratio(1, 2), ratio(-1, 2), int(0)]),
        FocalSpaceId::HP2 => WeightVector::from_ints(&[2, 1, 1]),
        FocalSpaceId::OP2 => WeightVector(vec![ratio(7, 2), ratio(5, 2), ratio(3, 2), ratio(1, 2)]),
    }
}

/// Highest weight of the slice representation in `G` coordinates.
pub fn slice_highest_weight(space: FocalSpaceId) -> WeightVector {
    match space {
        FocalSpaceId::CP2 => WeightVector::from_ints(&[1, -1, 0]),
        FocalSpaceId::HP2 => WeightVector::from_ints(&[1, 1, 0]),
        FocalSpaceId::OP2 => WeightVector::from_ints(&[1, 0, 0, 0]),
    }
}

pub fn g_id(space: FocalSpaceId) -> RootSystemId {
    match space {
        FocalSpaceId::CP2 => RootSystemId::A2,
        FocalSpaceId::HP2 => RootSystemId::C3,
        FocalSpaceId::OP2 => RootSystemId::F4,
    }
}

/// Multiplicity of the `K`-irrep with highest weight `sigma` in `V_λ|_K`.
pub fn oracle_k_multiplicity(
    space: FocalSpaceId,
    lambda: &DominantWeight,
    sigma: &WeightVector,
) -> i64 {
    let g = RootSystem::new(g_id(space));
    let rho_k = k_rho(space);
    let orbit = signed_orbit(&rho_k, &k_simple_roots(space));
    let points: Vec<(WeightVector, i64)> = orbit
        .iter()
        .map(|(w, s)| (&(sigma + &rho_k) - w, *s))
        .collect();
    let mut kostant = Kostant::new(&g, lambda);
    let queries: Vec<_> = points.iter().map(|(p, _)| p.clone()).collect();
    kostant.prepare(&queries);
    points
        .iter()
        .map(|(p, s)| s * kostant.multiplicity(p))
        .sum()
}

pub fn oracle_slice_multiplicity(space: FocalSpaceId, lambda: &DominantWeight) -> i64 {
    oracle_k_multiplicity(space, lambda, &slice_highest_weight(space))
}

/// Printed families: `(levels(k), first k, (3/4)·Casimir as a polynomial)`.
pub type Family = (fn(u32) -> Vec<u32>, u32, fn(i64) -> i64);

pub fn printed_families(space: FocalSpaceId) -> Vec<Family> {
    match space {
        FocalSpaceId::CP2 => vec![
            (|k| vec![k + 1, k + 1], 0, |k| (k + 1) * (k + 3)),
            (|k| vec![k - 1, k + 2], 1, |k| (k + 1) * (k + 2)),
            (|k| vec![k + 3, k], 0, |k| (k + 2) * (k + 3)),
        ],
        FocalSpaceId::HP2 => vec![
            (|k| vec![0, k, 0], 1, |k| k * (k + 5)),
            (|k| vec![1, k, 1], 0, |k| k * k + 8 * k + 12),
        ],
        FocalSpaceId::OP2 => vec![
            (|k| vec![0, 0, 0, k], 1, |k| k * k + 11 * k),
            (|k| vec![0, 0, 1, k], 0, |k| k * k + 14 * k + 24),
        ],
    }
}

/// All level vectors in `[0, max]^rank`.
pub fn level_box(rank: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}
