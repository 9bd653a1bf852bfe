//! Action of the miniscule-coweight Δ-operators on labels of level-`k`
//! integrable highest-weight modules.
//!
//! On labels the twist by `H^(i)` acts as `λ ↦ σ_X^{(i)}(λ) + k λ_i`.
//! [`delta_closed_form`] evaluates the per-type closed expressions directly;
//! [`delta_brute_force`] applies the canonical Weyl word and serves as the
//! independent check.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::types::{Family, LieType, Weight};
use crate::weyl;

/// A dominant weight together with a level it is admissible at.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelWeight {
    level: i64,
    weight: Weight,
}

impl LevelWeight {
    pub fn new(rs: &RootSystem, level: i64, weight: Weight) -> Result<Self> {
        check_admissible(rs, level, &weight)?;
        Ok(LevelWeight { level, weight })
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn into_weight(self) -> Weight {
        self.weight
    }
}

pub fn is_admissible(rs: &RootSystem, level: i64, weight: &Weight) -> Result<bool> {
    weight.expect_len(rs.rank())?;
    Ok(weight.is_dominant() && rs.pairing_with_theta(weight)? <= level)
}

fn check_admissible(rs: &RootSystem, level: i64, weight: &Weight) -> Result<()> {
    if is_admissible(rs, level, weight)? {
        Ok(())
    } else {
        Err(Error::NotAdmissible {
            ty: rs.lie_type(),
            level,
            weight: weight.clone(),
        })
    }
}

fn check_inputs(rs: &RootSystem, level: i64, weight: &Weight, i: usize) -> Result<()> {
    if level < 1 {
        return Err(Error::InvalidLevel { level, min: 1 });
    }
    if !rs.is_miniscule(i) {
        return Err(Error::NotMiniscule {
            ty: rs.lie_type(),
            index: i,
        });
    }
    check_admissible(rs, level, weight)
}

/// `λ^{(i)}` from the closed-form expressions.
///
/// With `m_j` the coefficients of `λ`, `c = k − ⟨λ, θ⟩`, subscripts read
/// modulo `ℓ + 1` and `λ_0 = 0`:
///
/// | type | `λ^{(i)}` |
/// |------|-----------|
/// | A    | `Σ m_j λ_{j+i} + c λ_i` |
/// | B    | `c λ_1 + Σ_{j≥2} m_j λ_j` |
/// | C    | `Σ m_j λ_{ℓ−j} + c λ_ℓ` |
/// | D, i=1 | `c λ_1 + Σ_{2≤j≤ℓ−2} m_j λ_j + m_{ℓ−1} λ_ℓ + m_ℓ λ_{ℓ−1}` |
/// | D, i∈{ℓ−1,ℓ} | `m_x λ_1 + Σ_{2≤j≤ℓ−2} m_j λ_{ℓ−j} + m_1 λ_y + c λ_i` |
/// | E6, E7 | fixed index permutations plus `c λ_i` |
///
/// For D with a spin node `i`, `y` is the other spin node and `x` is `i`
/// when `ℓ` is odd, `y` when `ℓ` is even.
///
/// The C row carries `+c`; a `−c` coefficient would leave the dominant cone.
pub fn delta_closed_form(rs: &RootSystem, level: i64, weight: &Weight, i: usize) -> Result<Weight> {
    check_inputs(rs, level, weight, i)?;
    let ty = rs.lie_type();
    let n = ty.rank() as i64;
    let c = level - rs.pairing_with_theta(weight)?;
    let m = |j: i64| weight.get(j as usize);
    let mut out = Weight::zero(ty.rank());
    let i = i as i64;
    match ty.family() {
        Family::A => {
            for j in 1..=n {
                out.add_fundamental(j + i, m(j))?;
            }
        }
        Family::B => {
            for j in 2..=n {
                out.add_fundamental(j, m(j))?;
            }
        }
        Family::C => {
            for j in 1..=n {
                out.add_fundamental(n - j, m(j))?;
            }
        }
        Family::D if i == 1 => {
            for j in 2..=n - 2 {
                out.add_fundamental(j, m(j))?;
            }
            out.add_fundamental(n, m(n - 1))?;
            out.add_fundamental(n - 1, m(n))?;
        }
        Family::D => {
            let other = if i == n { n - 1 } else { n };
            // which spin coefficient lands on λ_1
            let to_first = if n % 2 == 1 { i } else { other };
            out.add_fundamental(1, m(to_first))?;
            for j in 2..=n - 2 {
                out.add_fundamental(n - j, m(j))?;
            }
            out.add_fundamental(other, m(1))?;
        }
        Family::E => {
            // source index j lands on target[j - 1]; `0` marks the node whose
            // coefficient only enters through ⟨λ, θ⟩
            let target: &[i64] = match (n, i) {
                (6, 1) => &[6, 3, 5, 4, 2, 0],
                (6, 6) => &[0, 5, 2, 4, 3, 1],
                (7, 7) => &[6, 2, 5, 4, 3, 1, 0],
                _ => unreachable!("miniscule checked"),
            };
            for (j, &t) in target.iter().enumerate() {
                out.add_fundamental(t, m(j as i64 + 1))?;
            }
        }
        Family::F | Family::G => unreachable!("no miniscule coweights"),
    }
    out.add_fundamental(i, c)?;
    Ok(out)
}

/// `λ^{(i)} = σ_X^{(i)}(λ) + k λ_i`, evaluated by applying the canonical word.
pub fn delta_brute_force(rs: &RootSystem, level: i64, weight: &Weight, i: usize) -> Result<Weight> {
    check_inputs(rs, level, weight, i)?;
    let word = weyl::canonical_word(rs, i)?;
    let mut mu = weyl::apply_word(rs, &word, weight)?;
    mu.add_fundamental(i as i64, level)?;
    Ok(mu)
}

/// Every dominant `λ` with `⟨λ, θ⟩ ≤ k`, in lexicographic order.
pub fn enumerate_admissible(rs: &RootSystem, level: i64) -> Vec<Weight> {
    fn fill(comarks: &[i64], budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
        let pos = prefix.len();
        if pos == comarks.len() {
            out.push(Weight::new(prefix.clone()));
            return;
        }
        let a = comarks[pos];
        for v in 0..=budget / a {
            prefix.push(v);
            fill(comarks, budget - v * a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if level >= 0 {
        fill(rs.comarks(), level, &mut Vec::with_capacity(rs.rank()), &mut out);
    }
    out
}

/// Closure of `{λ}` under all miniscule-coweight actions.
pub fn orbit(rs: &RootSystem, level: i64, weight: &Weight) -> Result<BTreeSet<Weight>> {
    if level < 1 {
        return Err(Error::InvalidLevel { level, min: 1 });
    }
    check_admissible(rs, level, weight)?;
    let mut seen = BTreeSet::from([weight.clone()]);
    let mut frontier = vec![weight.clone()];
    while let Some(w) = frontier.pop() {
        for &i in rs.miniscule_indices() {
            let img = delta_closed_form(rs, level, &w, i)?;
            if seen.insert(img.clone()) {
                frontier.push(img);
            }
        }
    }
    Ok(seen)
}

/// Partition of the admissible set into orbits, each sorted, ordered by
/// their least element.
pub fn all_orbits(rs: &RootSystem, level: i64) -> Result<Vec<BTreeSet<Weight>>> {
    let mut covered = BTreeSet::new();
    let mut out = Vec::new();
    for w in enumerate_admissible(rs, level) {
        if covered.contains(&w) {
            continue;
        }
        let o = orbit(rs, level, &w)?;
        covered.extend(o.iter().cloned());
        out.push(o);
    }
    Ok(out)
}

/// The action of one coweight as a list of `(λ, λ^{(i)})` pairs over the
/// admissible set, in the enumeration order of the sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoweightMap {
    pub coweight: usize,
    pub entries: Vec<(Weight, Weight)>,
}

impl CoweightMap {
    pub fn image(&self, w: &Weight) -> Option<&Weight> {
        self.entries
            .binary_search_by(|(from, _)| from.cmp(w))
            .ok()
            .map(|idx| &self.entries[idx].1)
    }

    pub fn as_map(&self) -> BTreeMap<Weight, Weight> {
        self.entries.iter().cloned().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTable {
    pub lie_type: LieType,
    pub level: i64,
    pub maps: Vec<CoweightMap>,
}

impl ActionTable {
    pub fn map_for(&self, coweight: usize) -> Option<&CoweightMap> {
        self.maps.iter().find(|m| m.coweight == coweight)
    }
}

/// Builds the full action table and checks each map is a bijection of the
/// admissible set onto itself.
pub fn action_table(rs: &RootSystem, level: i64) -> Result<ActionTable> {
    if level < 1 {
        return Err(Error::InvalidLevel { level, min: 1 });
    }
    let ty = rs.lie_type();
    let domain = enumerate_admissible(rs, level);
    let mut maps = Vec::with_capacity(rs.miniscule_indices().len());
    for &i in rs.miniscule_indices() {
        let mut images = BTreeSet::new();
        let mut entries = Vec::with_capacity(domain.len());
        for w in &domain {
            let img = delta_closed_form(rs, level, w, i)?;
            if !is_admissible(rs, level, &img)? {
                return Err(Error::NotBijective {
                    ty,
                    level,
                    coweight: i,
                    detail: format!("image {img} of {w} is not admissible"),
                });
            }
            if !images.insert(img.clone()) {
                return Err(Error::NotBijective {
                    ty,
                    level,
                    coweight: i,
                    detail: format!("{img} is hit twice"),
                });
            }
            entries.push((w.clone(), img));
        }
        maps.push(CoweightMap { coweight: i, entries });
    }
    Ok(ActionTable {
        lie_type: ty,
        level,
        maps,
    })
}
