//! Clifford systems on ℝ⁴, ℝ⁸, ℝ¹⁶.
//!
//! The rescaled shape operators `Pᵢ = √3 A_{ξᵢ}` of a cubic focal manifold
//! of dimension `d` are `d/2 + 1` symmetric involutions that pairwise
//! anticommute. We build such systems from integer 2×2 blocks and check
//! the curvature identities that feed the metric constants and the Jacobi
//! operator.
//!
//! Construction: if `E₁, …, E_m` are anticommuting skew complex structures
//! on ℝˡ, then on ℝ²ˡ
//!
//! ```text
//! P₀ = [[I, 0], [0, −I]],  P₁ = [[0, I], [I, 0]],  P₁₊ⱼ = [[0, Eⱼ], [−Eⱼ, 0]]
//! ```
//!
//! is a Clifford system with `m + 2` members.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg};

use num_traits::Zero;

use crate::normalization::FocalSpace;
use crate::{int, ratio, Error, Rational, Result};

/// Dense square matrix with integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let data = rows.iter().flat_map(|r| {
            assert_eq!(r.len(), n);
            r.iter().copied()
        });
        IntMatrix {
            n,
            data: data.collect(),
        }
    }

    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.data[j * n + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (a, b) = (self.n, other.n);
        let n = a * b;
        let mut out = Self::zeros(n);
        for i in 0..a {
            for j in 0..a {
                let x = self.get(i, j);
                if x == 0 {
                    continue;
                }
                for k in 0..b {
                    for l in 0..b {
                        out.data[(i * b + k) * n + j * b + l] = x * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    /// `[[a, b], [c, d]]` from four equally sized blocks.
    pub fn blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let h = a.n;
        let n = 2 * h;
        let mut out = Self::zeros(n);
        for (block, (r0, c0)) in [(a, (0, 0)), (b, (0, h)), (c, (h, 0)), (d, (h, h))] {
            for i in 0..h {
                for j in 0..h {
                    out.data[(r0 + i) * n + c0 + j] = block.get(i, j);
                }
            }
        }
        out
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += x * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

/// `d/2 + 1` symmetric, pairwise anticommuting involutions of ℝᵈ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordSystem {
    pub d: u32,
    pub matrices: Vec<IntMatrix>,
}

fn pauli() -> (IntMatrix, IntMatrix, IntMatrix, IntMatrix) {
    let i = IntMatrix::identity(2);
    let x = IntMatrix::from_rows(&[&[0, 1], &[1, 0]]);
    let z = IntMatrix::from_rows(&[&[1, 0], &[0, -1]]);
    let j = IntMatrix::from_rows(&[&[0, -1], &[1, 0]]);
    (i, x, z, j)
}

/// Anticommuting skew complex structures: 1 on ℝ², 3 on ℝ⁴, 7 on ℝ⁸.
fn complex_structures(l: usize) -> Vec<IntMatrix> {
    let (i, x, z, j) = pauli();
    match l {
        2 => vec![j],
        4 => vec![j.kron(&i), z.kron(&j), x.kron(&j)],
        8 => {
            // left quaternion units ⊗ Z, then 1 ⊗ J, then right units ⊗ X
            let left = [j.kron(&i), z.kron(&j), x.kron(&j)];
            let right = [i.kron(&j), j.kron(&z), j.kron(&x)];
            let mut out: Vec<_> = left.iter().map(|l| l.kron(&z)).collect();
            out.push(IntMatrix::identity(4).kron(&j));
            out.extend(right.iter().map(|r| r.kron(&x)));
            out
        }
        _ => unreachable!("only ℝ², ℝ⁴, ℝ⁸ are used"),
    }
}

pub fn build_clifford_system(d: u32) -> Result<CliffordSystem> {
    if !matches!(d, 4 | 8 | 16) {
        return Err(Error::UnsupportedDimension(d));
    }
    let l = d as usize / 2;
    let id = IntMatrix::identity(l);
    let zero = IntMatrix::zeros(l);
    let mut matrices = vec![
        IntMatrix::blocks(&id, &zero, &zero, &-&id),
        IntMatrix::blocks(&zero, &id, &id, &zero),
    ];
    for e in complex_structures(l) {
        matrices.push(IntMatrix::blocks(&zero, &e, &-&e, &zero));
    }
    debug_assert_eq!(matrices.len(), l + 1);
    Ok(CliffordSystem { d, matrices })
}

impl CliffordSystem {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// Checks `Pᵢ² = I`, `PᵢPⱼ + PⱼPᵢ = 0` and symmetry.
    pub fn verify(&self) -> Result<()> {
        let n = self.d as usize;
        let id = IntMatrix::identity(n);
        let zero = IntMatrix::zeros(n);
        for (i, p) in self.matrices.iter().enumerate() {
            if p.size() != n || !p.is_symmetric() {
                return Err(Error::Invariant(alloc::format!(
                    "P{i} is not a symmetric {n}×{n} matrix"
                )));
            }
            if p * p != id {
                return Err(Error::Invariant(alloc::format!("P{i}² ≠ I")));
            }
            for (j, q) in self.matrices.iter().enumerate().skip(i + 1) {
                if &(p * q) + &(q * p) != zero {
                    return Err(Error::Invariant(alloc::format!(
                        "P{i}, P{j} do not anticommute"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `tr(PᵢPⱼ)`, which the Clifford relations force to be `d·δᵢⱼ`.
    pub fn trace_gram(&self) -> Vec<Vec<i64>> {
        self.matrices
            .iter()
            .map(|p| self.matrices.iter().map(|q| (p * q).trace()).collect())
            .collect()
    }
}

/// `Σ_k Σ_{i,j} ⟨A_{ξ_k}Xᵢ, Xⱼ⟩²` with `A = P/√3`, i.e.
/// `(1/3) Σ_k tr(P_k P_kᵀ)`.
pub fn shape_trace_sum(cs: &CliffordSystem) -> Rational {
    let total: i64 = cs
        .matrices
        .iter()
        .map(|p| (p * &p.transpose()).trace())
        .sum();
    ratio(total, 3)
}

/// The matrix of `𝒜` in the normal frame: `𝒜_{kl} = tr(A_{ξ_k} A_{ξ_l})`.
pub fn second_fundamental_term(cs: &CliffordSystem) -> Vec<Vec<Rational>> {
    cs.trace_gram()
        .into_iter()
        .map(|row| row.into_iter().map(|t| ratio(t, 3)).collect())
        .collect()
}

/// `(Ric⊥, 𝒜)` as multiples of the identity on the normal bundle.
///
/// `Ric⊥ = −d` comes from the round curvature of the sphere. `𝒜` is read
/// off the Clifford system and must be a scalar matrix with trace equal to
/// [`shape_trace_sum`].
pub fn jacobi_curvature_constants(space: &FocalSpace) -> Result<(Rational, Rational)> {
    let cs = build_clifford_system(space.d)?;
    cs.verify()?;
    let a = second_fundamental_term(&cs);
    let diag = a[0][0];
    for (k, row) in a.iter().enumerate() {
        for (l, &x) in row.iter().enumerate() {
            let expected = if k == l { diag } else { Rational::zero() };
            if x != expected {
                return Err(Error::Invariant(alloc::format!(
                    "𝒜 is not scalar at ({k}, {l})"
                )));
            }
        }
    }
    let trace = a
        .iter()
        .enumerate()
        .fold(Rational::zero(), |s, (k, row)| s + row[k]);
    if trace != shape_trace_sum(&cs) {
        return Err(Error::Invariant(
            "trace of 𝒜 differs from the shape trace sum".into(),
        ));
    }
    let ric = -int(space.d as i64);
    Ok((ric, diag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalization::{gauss_scalar, FocalSpaceId};

    #[test]
    fn systems_satisfy_clifford_relations() {
        for (d, count) in [(4, 3), (8, 5), (16, 9)] {
            let cs = build_clifford_system(d).unwrap();
            assert_eq!(cs.len(), count);
            cs.verify().unwrap();
            for p in &cs.matrices {
                assert_eq!(p.trace(), 0);
            }
        }
    }

    #[test]
    fn rejects_other_dimensions() {
        assert_eq!(
            build_clifford_system(6),
            Err(Error::UnsupportedDimension(6))
        );
        assert_eq!(
            build_clifford_system(32),
            Err(Error::UnsupportedDimension(32))
        );
    }

    #[test]
    fn verify_catches_broken_system() {
        let mut cs = build_clifford_system(4).unwrap();
        cs.matrices[2] = cs.matrices[1].clone();
        assert!(cs.verify().is_err());
    }

    #[test]
    fn shape_trace_values() {
        let v = |d| shape_trace_sum(&build_clifford_system(d).unwrap());
        assert_eq!(v(4), int(4));
        assert_eq!(v(8), ratio(40, 3));
        assert_eq!(v(16), int(48));
        for d in [4u32, 8, 16] {
            assert_eq!(v(d) + gauss_scalar(d).unwrap(), int((d * (d - 1)) as i64));
        }
    }

    #[test]
    fn curvature_constants() {
        let expect = [
            (FocalSpaceId::CP2, int(-4), ratio(4, 3)),
            (FocalSpaceId::HP2, int(-8), ratio(8, 3)),
            (FocalSpaceId::OP2, int(-16), ratio(16, 3)),
        ];
        for (id, ric, a) in expect {
            assert_eq!(
                jacobi_curvature_constants(&FocalSpace::new(id)),
                Ok((ric, a))
            );
        }
    }
}
