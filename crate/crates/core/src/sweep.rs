//! Exhaustive self-checks for one algebra type, shared by the CLI `verify`
//! command and the acceptance suite.

use std::fmt;

use crate::delta::{action_table, delta_brute_force, delta_closed_form, enumerate_admissible};
use crate::error::Result;
use crate::linalg::Rational;
use crate::root_system::{coweight_in_coroot_lattice, RootSystem};
use crate::types::{LieType, Weight};
use crate::weyl::{affine_root_permutation, canonical_word, expected_permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: String, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{verdict} {}", self.name)
        } else {
            write!(f, "{verdict} {}: {}", self.name, self.detail)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub lie_type: LieType,
    pub levels: Vec<i64>,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// True when the type has no miniscule coweights and nothing was run.
    pub fn is_vacuous(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn record(checks: &mut Vec<CheckOutcome>, name: String, result: Result<(bool, String)>) {
    checks.push(match result {
        Ok((passed, detail)) => CheckOutcome::new(name, passed, detail),
        Err(e) => CheckOutcome::new(name, false, e.to_string()),
    });
}

/// Runs every check for `ty` at each of `levels`.
///
/// Per miniscule index `i`: `‖α_i‖² = 2`; `H^(i)` represents a new coset of
/// `P^∨/Q^∨`; the canonical word permutes the affine simple roots as
/// expected. Per level: closed form agrees with the Weyl-word oracle on
/// every admissible weight; the action is a bijection of the admissible set;
/// its order divides `|P^∨/Q^∨|`; the vacuum goes to `kλ_i`. When there is at
/// least one miniscule index the coset count is compared with the determinant.
pub fn verify_type(ty: LieType, levels: &[i64]) -> Result<VerifyReport> {
    let rs = RootSystem::new(ty)?;
    let n = rs.rank();
    let order = rs.fundamental_group_order();
    let mut checks = Vec::new();
    let minis = rs.miniscule_indices().to_vec();

    for (pos, &i) in minis.iter().enumerate() {
        let norm = rs.simple_root_norm_sq(i);
        checks.push(CheckOutcome::new(
            format!("{ty} norm[{i}]"),
            norm == Rational::from_integer(2),
            format!("|alpha_{i}|^2 = {norm}"),
        ));

        let coset = (|| -> Result<(bool, String)> {
            let e_i = Weight::unit(n, i).into_coeffs();
            if coweight_in_coroot_lattice(ty, &e_i)? {
                return Ok((false, format!("H^({i}) lies in the coroot lattice")));
            }
            for &j in &minis[..pos] {
                let diff: Vec<i64> = e_i
                    .iter()
                    .zip(Weight::unit(n, j).coeffs())
                    .map(|(a, b)| a - b)
                    .collect();
                if coweight_in_coroot_lattice(ty, &diff)? {
                    return Ok((false, format!("H^({i}) and H^({j}) share a coset")));
                }
            }
            Ok((true, String::new()))
        })();
        record(&mut checks, format!("{ty} coset[{i}]"), coset);

        let perm = (|| -> Result<(bool, String)> {
            let word = canonical_word(&rs, i)?;
            let got = affine_root_permutation(&rs, &word)?;
            let want = expected_permutation(ty, i)?;
            Ok((got == want, format!("{got:?}")))
        })();
        record(&mut checks, format!("{ty} permutation[{i}]"), perm);
    }

    if !minis.is_empty() {
        let count = minis.len() as i64 + 1;
        checks.push(CheckOutcome::new(
            format!("{ty} coset-count"),
            count == order,
            format!("{count} representatives, det = {order}"),
        ));
    }

    for &k in levels {
        if minis.is_empty() {
            break;
        }
        let domain = enumerate_admissible(&rs, k);
        for &i in &minis {
            let oracle = (|| -> Result<(bool, String)> {
                for w in &domain {
                    let closed = delta_closed_form(&rs, k, w, i)?;
                    let brute = delta_brute_force(&rs, k, w, i)?;
                    if closed != brute {
                        return Ok((false, format!("{w}: closed {closed} vs oracle {brute}")));
                    }
                }
                Ok((true, format!("{} weights", domain.len())))
            })();
            record(&mut checks, format!("{ty} k={k} oracle[{i}]"), oracle);

            let vacuum = (|| -> Result<(bool, String)> {
                let img = delta_closed_form(&rs, k, &Weight::zero(n), i)?;
                let want = Weight::unit(n, i).checked_scale(k)?;
                Ok((img == want, format!("{img}")))
            })();
            record(&mut checks, format!("{ty} k={k} vacuum[{i}]"), vacuum);
        }

        match action_table(&rs, k) {
            Ok(table) => {
                for map in &table.maps {
                    checks.push(CheckOutcome::new(
                        format!("{ty} k={k} bijection[{}]", map.coweight),
                        true,
                        format!("{} weights", map.entries.len()),
                    ));
                    let lookup = map.as_map();
                    let bad = domain.iter().find(|w| {
                        let mut cur = (*w).clone();
                        for _ in 0..order {
                            cur = lookup[&cur].clone();
                        }
                        &cur != *w
                    });
                    checks.push(CheckOutcome::new(
                        format!("{ty} k={k} order[{}]", map.coweight),
                        bad.is_none(),
                        match bad {
                            Some(w) => format!("{w} not fixed by power {order}"),
                            None => format!("power {order} is the identity"),
                        },
                    ));
                }
            }
            Err(e) => checks.push(CheckOutcome::new(
                format!("{ty} k={k} bijection"),
                false,
                e.to_string(),
            )),
        }
    }

    Ok(VerifyReport {
        lie_type: ty,
        levels: levels.to_vec(),
        checks,
    })
}
