//! Static data of a finite-type root system.
//!
//! Everything is derived from the Cartan matrix, whose row `i` is the simple
//! root `α_i` written in the fundamental-weight basis:
//! `α_i = Σ_j a_ij λ_j`, i.e. `a_ij = ⟨α_i, α_j^∨⟩`. Node labels follow
//! Bourbaki. Marks and comarks are computed, never tabulated.

use std::collections::HashSet;

use num_traits::{CheckedAdd, CheckedMul, One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Rational};
use crate::types::{Family, LieType, RootVector, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `a_ij`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    /// The simple root `α_i` in fundamental-weight coordinates (row `i`, 1-based).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::new(self.entries[i - 1].clone())
    }

    /// The other convention, `a_ij = α_j(H_i)`. Column `i` of this matrix is
    /// the coroot `H_i` in the fundamental-coweight basis.
    pub fn transpose(&self) -> CartanMatrix {
        let n = self.rank();
        CartanMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
                .collect(),
        }
    }

    /// Converts root coordinates to weight coordinates: `Σ_i c_i · row_i`.
    pub fn root_to_weight(&self, root: &RootVector) -> Result<Weight> {
        root.expect_len(self.rank())?;
        let mut out = vec![0i64; self.rank()];
        for (c, row) in root.coeffs().iter().zip(&self.entries) {
            for (o, a) in out.iter_mut().zip(row) {
                let t = i64::checked_mul(*c, *a).ok_or(Error::Overflow)?;
                *o = i64::checked_add(*o, t).ok_or(Error::Overflow)?;
            }
        }
        Ok(Weight::new(out))
    }

    /// `⟨β, α_i^∨⟩` for a root-coordinate vector `β`: `Σ_j β_j a_ji`.
    fn coroot_pairing(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter()
            .zip(&self.entries)
            .map(|(b, row)| b * row[i - 1])
            .sum()
    }
}

pub fn cartan_matrix(ty: LieType) -> CartanMatrix {
    let n = ty.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    match ty.family() {
        Family::A | Family::B | Family::C => {
            for i in 1..n {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 1..n - 1 {
                link(i, i + 1);
            }
            link(n - 2, n);
        }
        Family::E => {
            link(1, 3);
            link(2, 4);
            for i in 3..n {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(1, 2);
            link(2, 3);
            link(3, 4);
        }
        Family::G => link(1, 2),
    }
    match ty.family() {
        // α_ℓ short
        Family::B => a[n - 2][n - 1] = -2,
        // α_ℓ long
        Family::C => a[n - 1][n - 2] = -2,
        // α_1, α_2 long; α_3, α_4 short
        Family::F => a[1][2] = -2,
        // α_1 short
        Family::G => a[1][0] = -3,
        _ => {}
    }
    CartanMatrix { entries: a }
}

/// Half squared lengths `d_i = ‖α_i‖²/2`, normalised so long roots have `d_i = 1`.
///
/// Determined by `a_ij d_j = a_ji d_i`, which makes `(α_i, α_j) = a_ij d_j`
/// symmetric.
pub fn symmetrizer(ty: LieType) -> Vec<Rational> {
    let cartan = cartan_matrix(ty);
    let n = ty.rank();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    d[0] = Some(Rational::one());
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let di = d[i].expect("visited");
        for (j, dj) in d.iter_mut().enumerate() {
            let (aij, aji) = (cartan.entries[i][j], cartan.entries[j][i]);
            if i == j || aij == 0 || dj.is_some() {
                continue;
            }
            *dj = Some(di * Rational::new(aji, aij));
            stack.push(j);
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
    let max = *d.iter().max().expect("rank ≥ 1");
    d.into_iter().map(|x| x / max).collect()
}

fn height(beta: &[i64]) -> i64 {
    beta.iter().sum()
}

/// All positive roots in simple-root coordinates, ordered by height and then
/// lexicographically.
///
/// Height-graded closure: `β + α_i` is a root iff `q > 0`, where the
/// `α_i`-string through `β` is `β − pα_i, …, β + qα_i` and
/// `p − q = ⟨β, α_i^∨⟩`. The downward length `p` is read off the roots found
/// at lower heights.
pub fn positive_roots(ty: LieType) -> Vec<RootVector> {
    let cartan = cartan_matrix(ty);
    let n = ty.rank();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (1..=n).map(|i| RootVector::unit(n, i).into_coeffs()).collect();
    let mut all = Vec::new();
    while !layer.is_empty() {
        layer.sort();
        known.extend(layer.iter().cloned());
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &layer {
            for i in 1..=n {
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i - 1] -= 1;
                    if !known.contains(&probe) {
                        break;
                    }
                    p += 1;
                }
                let q = p - cartan.coroot_pairing(beta, i);
                if q > 0 {
                    let mut up = beta.clone();
                    up[i - 1] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(layer.drain(..).map(RootVector::new));
        layer = next;
    }
    all
}

/// `(β, γ)` for root-coordinate vectors, using `(α_i, α_j) = a_ij d_j`.
pub fn root_inner_product(ty: LieType, beta: &RootVector, gamma: &RootVector) -> Result<Rational> {
    beta.expect_len(ty.rank())?;
    gamma.expect_len(ty.rank())?;
    let cartan = cartan_matrix(ty);
    let d = symmetrizer(ty);
    let mut acc = Rational::zero();
    for (i, &bi) in beta.coeffs().iter().enumerate() {
        for (j, &gj) in gamma.coeffs().iter().enumerate() {
            let coeff = bi
                .checked_mul(gj)
                .and_then(|x| x.checked_mul(cartan.entries[i][j]))
                .ok_or(Error::Overflow)?;
            let t = d[j]
                .checked_mul(&Rational::from_integer(coeff))
                .ok_or(Error::Overflow)?;
            acc = acc.checked_add(&t).ok_or(Error::Overflow)?;
        }
    }
    Ok(acc)
}

/// `(λ, μ)` for weights in fundamental-weight coordinates.
///
/// Writes `λ = Σ x_j α_j` (rational `x`) and uses `(α_j, μ) = d_j μ_j`.
pub fn weight_inner_product(ty: LieType, lambda: &Weight, mu: &Weight) -> Result<Rational> {
    lambda.expect_len(ty.rank())?;
    mu.expect_len(ty.rank())?;
    let cartan = cartan_matrix(ty);
    let x = linalg::solve_left(cartan.entries(), lambda.coeffs())?;
    let d = symmetrizer(ty);
    let weighted: Vec<Rational> = d
        .iter()
        .zip(mu.coeffs())
        .map(|(dj, &m)| dj.checked_mul(&Rational::from_integer(m)).ok_or(Error::Overflow))
        .collect::<Result<_>>()?;
    linalg::rational_dot(&x, &weighted)
}

/// The highest long root `θ`, in root coordinates (its marks) and in
/// weight coordinates.
pub fn highest_long_root(ty: LieType) -> (RootVector, Weight) {
    let roots = positive_roots(ty);
    let two = Rational::from_integer(2);
    let theta = roots
        .iter()
        .filter(|r| root_inner_product(ty, r, r).map(|n| n == two).unwrap_or(false))
        .max_by_key(|r| height(r.coeffs()))
        .expect("every root system has long roots")
        .clone();
    let weight = cartan_matrix(ty)
        .root_to_weight(&theta)
        .expect("marks are small");
    (theta, weight)
}

/// Marks `a_i`: coefficients of `θ` in the simple-root basis.
pub fn marks(ty: LieType) -> Vec<i64> {
    highest_long_root(ty).0.into_coeffs()
}

/// Comarks `a_i^∨ = a_i · d_i`: coefficients of `θ^∨` in the coroot basis.
pub fn comarks(ty: LieType) -> Result<Vec<i64>> {
    let d = symmetrizer(ty);
    marks(ty)
        .into_iter()
        .zip(d)
        .enumerate()
        .map(|(i, (a, di))| {
            let c = di * Rational::from_integer(a);
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegralComark { ty, index: i + 1 })
            }
        })
        .collect()
}

/// `⟨λ, θ⟩ = Σ_j a_j^∨ m_j`.
pub fn pairing_with_theta(ty: LieType, lambda: &Weight) -> Result<i64> {
    lambda.expect_len(ty.rank())?;
    pairing_with_comarks(&comarks(ty)?, lambda)
}

pub(crate) fn pairing_with_comarks(comarks: &[i64], lambda: &Weight) -> Result<i64> {
    comarks
        .iter()
        .zip(lambda.coeffs())
        .try_fold(0i64, |acc, (a, m)| {
            i64::checked_mul(*a, *m)
                .and_then(|t| i64::checked_add(acc, t))
                .ok_or(Error::Overflow)
        })
}

/// Indices `i` whose fundamental coweight `H^(i)` is miniscule.
pub fn miniscule_coweight_indices(ty: LieType) -> Vec<usize> {
    let n = ty.rank();
    match ty.family() {
        Family::A => (1..=n).collect(),
        Family::B => vec![1],
        Family::C => vec![n],
        Family::D => vec![1, n - 1, n],
        Family::E if n == 6 => vec![1, 6],
        Family::E if n == 7 => vec![7],
        Family::E | Family::F | Family::G => vec![],
    }
}

/// `|P^∨/Q^∨| = det(cartan_matrix)`.
pub fn fundamental_group_order(ty: LieType) -> i64 {
    linalg::determinant(cartan_matrix(ty).entries()).expect("Cartan determinants are tiny")
}

/// Whether the coweight `Σ v_j H^(j)` lies in the coroot lattice `Q^∨`.
///
/// The coroot `H_i = Σ_j a_ji H^(j)` is column `i` of the Cartan matrix read
/// in the coweight basis, so this is membership in the column lattice.
pub fn coweight_in_coroot_lattice(ty: LieType, v: &[i64]) -> Result<bool> {
    if v.len() != ty.rank() {
        return Err(Error::LengthMismatch {
            expected: ty.rank(),
            found: v.len(),
        });
    }
    linalg::in_row_lattice(cartan_matrix(ty).transpose().entries(), v)
}

/// Precomputed bundle of the data above for one type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: LieType,
    cartan: CartanMatrix,
    symmetrizer: Vec<Rational>,
    positive_roots: Vec<RootVector>,
    theta: RootVector,
    theta_weight: Weight,
    comarks: Vec<i64>,
    miniscule: Vec<usize>,
}

impl RootSystem {
    pub fn new(ty: LieType) -> Result<Self> {
        let (theta, theta_weight) = highest_long_root(ty);
        Ok(RootSystem {
            ty,
            cartan: cartan_matrix(ty),
            symmetrizer: symmetrizer(ty),
            positive_roots: positive_roots(ty),
            theta,
            theta_weight,
            comarks: comarks(ty)?,
            miniscule: miniscule_coweight_indices(ty),
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Rational] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    pub fn theta(&self) -> &RootVector {
        &self.theta
    }

    pub fn theta_weight(&self) -> &Weight {
        &self.theta_weight
    }

    pub fn marks(&self) -> &[i64] {
        self.theta.coeffs()
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn miniscule_indices(&self) -> &[usize] {
        &self.miniscule
    }

    pub fn is_miniscule(&self, i: usize) -> bool {
        self.miniscule.contains(&i)
    }

    pub fn fundamental_group_order(&self) -> i64 {
        fundamental_group_order(self.ty)
    }

    pub fn pairing_with_theta(&self, lambda: &Weight) -> Result<i64> {
        lambda.expect_len(self.rank())?;
        pairing_with_comarks(&self.comarks, lambda)
    }

    /// `‖α_i‖² = 2 d_i`.
    pub fn simple_root_norm_sq(&self, i: usize) -> Rational {
        self.symmetrizer[i - 1] * Rational::from_integer(2)
    }
}
