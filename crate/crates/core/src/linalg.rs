//! Exact integer linear algebra on small dense matrices.
//!
//! Matrices are `Vec<Vec<i64>>` in row-major order. Every operation is
//! overflow-checked and reports [`Error::Overflow`] instead of wrapping.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> Result<i64> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Ok(0);
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = sub(mul(a[i][j], a[k][k])?, mul(a[i][k], a[k][j])?)?;
                // exact by Sylvester's identity
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mul(sign, a[n - 1][n - 1])
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `gens`.
///
/// The result has no zero rows; pivots are positive, strictly move right
/// going down, and entries above each pivot are reduced into `[0, pivot)`.
pub fn hermite_normal_form(gens: &[Vec<i64>], ncols: usize) -> Result<Vec<Vec<i64>>> {
    let mut rows: Vec<Vec<i64>> = gens
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    for r in &rows {
        if r.len() != ncols {
            return Err(Error::LengthMismatch {
                expected: ncols,
                found: r.len(),
            });
        }
    }
    let mut out: Vec<Vec<i64>> = Vec::new();
    for col in 0..ncols {
        // gcd-combine every remaining row's entry in `col` into a single pivot row
        let mut pivot: Option<Vec<i64>> = None;
        let mut rest = Vec::new();
        for row in rows.drain(..) {
            if row[col] == 0 {
                rest.push(row);
                continue;
            }
            match pivot.take() {
                None => pivot = Some(row),
                Some(p) => {
                    let (a, b) = (p[col], row[col]);
                    let eg = a.extended_gcd(&b);
                    let (g, x, y) = (eg.gcd, eg.x, eg.y);
                    let (ua, ub) = (a / g, b / g);
                    let mut new_p = vec![0; ncols];
                    let mut new_r = vec![0; ncols];
                    for c in 0..ncols {
                        new_p[c] = mul(x, p[c])?
                            .checked_add(mul(y, row[c])?)
                            .ok_or(Error::Overflow)?;
                        new_r[c] = sub(mul(ub, p[c])?, mul(ua, row[c])?)?;
                    }
                    debug_assert_eq!(new_r[col], 0);
                    pivot = Some(new_p);
                    if new_r.iter().any(|&v| v != 0) {
                        rest.push(new_r);
                    }
                }
            }
        }
        rows = rest;
        if let Some(mut p) = pivot {
            if p[col] < 0 {
                for v in p.iter_mut() {
                    *v = -*v;
                }
            }
            for prior in out.iter_mut() {
                let q = Integer::div_floor(&prior[col], &p[col]);
                if q != 0 {
                    for c in 0..ncols {
                        prior[c] = sub(prior[c], mul(q, p[c])?)?;
                    }
                }
            }
            out.push(p);
        }
    }
    Ok(out)
}

/// Whether `v` is an integer combination of the rows of `gens`.
pub fn in_row_lattice(gens: &[Vec<i64>], v: &[i64]) -> Result<bool> {
    let ncols = v.len();
    let hnf = hermite_normal_form(gens, ncols)?;
    let mut rem = v.to_vec();
    for row in &hnf {
        let col = row.iter().position(|&x| x != 0).expect("HNF rows are nonzero");
        if rem[..col].iter().any(|&x| x != 0) {
            return Ok(false);
        }
        if rem[col] % row[col] != 0 {
            return Ok(false);
        }
        let q = rem[col] / row[col];
        for c in col..ncols {
            rem[c] = sub(rem[c], mul(q, row[c])?)?;
        }
    }
    Ok(rem.iter().all(|&x| x == 0))
}

/// Solves `x · m = b` for a row vector `x` over the rationals; `m` must be square
/// and nonsingular.
pub fn solve_left(m: &[Vec<i64>], b: &[i64]) -> Result<Vec<Rational>> {
    let n = m.len();
    // transpose so that we solve mᵀ xᵀ = bᵀ by Gauss–Jordan
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = (0..n).map(|j| Rational::from_integer(m[j][i])).collect();
            row.push(Rational::from_integer(b[i]));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("matrix is nonsingular");
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col][col..].iter_mut() {
            *x = x.checked_div(&p).ok_or(Error::Overflow)?;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col];
            for (x, pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let t = f.checked_mul(pv).ok_or(Error::Overflow)?;
                *x = x.checked_sub(&t).ok_or(Error::Overflow)?;
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n]).collect())
}

pub(crate) fn rational_dot(a: &[Rational], b: &[Rational]) -> Result<Rational> {
    a.iter().zip(b).try_fold(Rational::zero(), |acc, (x, y)| {
        let t = x.checked_mul(y).ok_or(Error::Overflow)?;
        acc.checked_add(&t).ok_or(Error::Overflow)
    })
}
