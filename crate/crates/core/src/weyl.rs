//! Simple reflections on weights, Weyl words, the canonical words attached to
//! miniscule coweights, and the permutation they induce on the affine simple
//! roots `{α_0 = −θ, α_1, …, α_ℓ}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::types::{Family, LieType, Weight};

/// A product of simple reflections `σ_{w_1} σ_{w_2} ⋯ σ_{w_n}`.
///
/// Letters are stored in written order; the rightmost letter acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i == 0 || i > rank) {
            Some(&index) => Err(Error::IndexOutOfRange { index, rank }),
            None => Ok(()),
        }
    }

    fn push_run(&mut self, letters: impl IntoIterator<Item = usize>) {
        self.0.extend(letters);
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `σ_i(λ) = λ − m_i α_i`.
pub fn reflect(rs: &RootSystem, i: usize, lambda: &Weight) -> Result<Weight> {
    let n = rs.rank();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    lambda.expect_len(n)?;
    let m = lambda.get(i);
    if m == 0 {
        return Ok(lambda.clone());
    }
    lambda.checked_sub(&rs.cartan().simple_root(i).checked_scale(m)?)
}

pub fn apply_word(rs: &RootSystem, word: &WeylWord, lambda: &Weight) -> Result<Weight> {
    word.validate(rs.rank())?;
    lambda.expect_len(rs.rank())?;
    word.letters()
        .iter()
        .rev()
        .try_fold(lambda.clone(), |acc, &i| reflect(rs, i, &acc))
}

/// `σ_X^{(i)}` for a miniscule index `i`.
pub fn canonical_word(rs: &RootSystem, i: usize) -> Result<WeylWord> {
    let ty = rs.lie_type();
    if !rs.is_miniscule(i) {
        return Err(Error::NotMiniscule { ty, index: i });
    }
    let n = ty.rank();
    let mut w = WeylWord::default();
    match ty.family() {
        // (σ_1 ⋯ σ_ℓ)^i
        Family::A => {
            for _ in 0..i {
                w.push_run(1..=n);
            }
        }
        // σ_1 ⋯ σ_{ℓ−1} σ_ℓ σ_{ℓ−1} ⋯ σ_1
        Family::B => {
            w.push_run(1..=n);
            w.push_run((1..n).rev());
        }
        // (σ_ℓ ⋯ σ_1)(σ_ℓ ⋯ σ_2) ⋯ (σ_ℓ σ_{ℓ−1})(σ_ℓ)
        Family::C => {
            for low in 1..=n {
                w.push_run((low..=n).rev());
            }
        }
        // σ_1 σ_2 ⋯ σ_ℓ σ_{ℓ−2} ⋯ σ_1
        Family::D if i == 1 => {
            w.push_run(1..=n);
            w.push_run((1..=n - 2).rev());
        }
        // Blocks (σ_x σ_{ℓ−2} ⋯ σ_m) for m = 1, …, ℓ−1 with x alternating
        // between the two spin nodes, starting at x = i. The last block is the
        // singleton (σ_x).
        Family::D => {
            let other = if i == n { n - 1 } else { n };
            for m in 1..n {
                let x = if (m - 1) % 2 == 0 { i } else { other };
                w.push_run([x]);
                if m <= n - 2 {
                    w.push_run((m..=n - 2).rev());
                }
            }
        }
        Family::E => w.push_run(exceptional_word(n, i).iter().copied()),
        Family::F | Family::G => unreachable!("no miniscule coweights"),
    }
    Ok(w)
}

const E6_SIGMA_1: [usize; 16] = [1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6];
const E6_SIGMA_6: [usize; 16] = [6, 5, 4, 2, 3, 4, 5, 6, 1, 3, 4, 2, 5, 4, 3, 1];
const E7_SIGMA_7: [usize; 27] = [
    7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3, 2, 4, 5, 6, 7,
];

fn exceptional_word(rank: usize, i: usize) -> &'static [usize] {
    match (rank, i) {
        (6, 1) => &E6_SIGMA_1,
        (6, 6) => &E6_SIGMA_6,
        (7, 7) => &E7_SIGMA_7,
        _ => unreachable!("caller checked miniscule"),
    }
}

/// `α_j` in weight coordinates, with `α_0 = −θ`.
pub fn affine_simple_root(rs: &RootSystem, j: usize) -> Result<Weight> {
    let n = rs.rank();
    match j {
        0 => rs.theta_weight().checked_neg(),
        j if j <= n => Ok(rs.cartan().simple_root(j)),
        _ => Err(Error::AffineIndexOutOfRange { index: j, rank: n }),
    }
}

/// The index `m` with `w(α_j) = α_m`, found by exact comparison against all
/// `ℓ + 1` affine simple roots.
pub fn affine_root_image(rs: &RootSystem, word: &WeylWord, j: usize) -> Result<usize> {
    let image = apply_word(rs, word, &affine_simple_root(rs, j)?)?;
    for m in 0..=rs.rank() {
        if affine_simple_root(rs, m)? == image {
            return Ok(m);
        }
    }
    Err(Error::NotAffinePermutation {
        ty: rs.lie_type(),
        source_index: j,
        image,
    })
}

/// The full induced map `j ↦ m` on `0..=ℓ` for a word.
pub fn affine_root_permutation(rs: &RootSystem, word: &WeylWord) -> Result<Vec<usize>> {
    (0..=rs.rank())
        .map(|j| affine_root_image(rs, word, j))
        .collect()
}

/// The closed-form permutation of `{α_0, …, α_ℓ}` that `σ_X^{(i)}` is known to
/// induce. Entry `j` of the result is the index of the image of `α_j`.
pub fn expected_permutation(ty: LieType, i: usize) -> Result<Vec<usize>> {
    let n = ty.rank();
    if !crate::root_system::miniscule_coweight_indices(ty).contains(&i) {
        return Err(Error::NotMiniscule { ty, index: i });
    }
    let mut p: Vec<usize> = (0..=n).collect();
    match ty.family() {
        Family::A => {
            for (j, slot) in p.iter_mut().enumerate() {
                *slot = (j + i) % (n + 1);
            }
        }
        Family::B => p.swap(0, 1),
        Family::C => {
            p[0] = n;
            for (j, slot) in p.iter_mut().enumerate().take(n).skip(1) {
                *slot = n - j;
            }
            p[n] = 0;
        }
        Family::D if i == 1 => {
            p.swap(0, 1);
            p.swap(n - 1, n);
        }
        Family::D => {
            // j ↦ ℓ − j for 2 ≤ j ≤ ℓ − 2 in every case
            for (j, slot) in p.iter_mut().enumerate().take(n - 1).skip(2) {
                *slot = n - j;
            }
            let odd = n % 2 == 1;
            let (a0, a1, a_nm1, a_n) = match (odd, i == n - 1) {
                (true, true) => (n - 1, n, 1, 0),
                (true, false) => (n, n - 1, 0, 1),
                (false, true) => (n - 1, n, 0, 1),
                (false, false) => (n, n - 1, 1, 0),
            };
            p[0] = a0;
            p[1] = a1;
            p[n - 1] = a_nm1;
            p[n] = a_n;
        }
        Family::E => {
            p = match (n, i) {
                (6, 1) => vec![1, 6, 3, 5, 4, 2, 0],
                (6, 6) => vec![6, 0, 5, 2, 4, 3, 1],
                (7, 7) => vec![7, 6, 2, 5, 4, 3, 1, 0],
                _ => unreachable!(),
            };
        }
        Family::F | Family::G => unreachable!(),
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight::new(v.to_vec())
    }

    #[test]
    fn reflect_examples() {
        let a4 = rs("A4");
        assert_eq!(reflect(&a4, 1, &Weight::unit(4, 1)).unwrap(), w(&[-1, 1, 0, 0]));
        assert_eq!(reflect(&a4, 2, &Weight::unit(4, 3)).unwrap(), Weight::unit(4, 3));
        let c3 = rs("C3");
        assert_eq!(reflect(&c3, 3, &Weight::unit(3, 3)).unwrap(), w(&[0, 2, -1]));
    }

    #[test]
    fn reflect_rejects_bad_input() {
        let a2 = rs("A2");
        assert_eq!(
            reflect(&a2, 3, &Weight::zero(2)),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        );
        assert_eq!(
            reflect(&a2, 0, &Weight::zero(2)),
            Err(Error::IndexOutOfRange { index: 0, rank: 2 })
        );
        assert!(matches!(reflect(&a2, 1, &Weight::zero(3)), Err(Error::LengthMismatch { .. })));
        assert!(apply_word(&a2, &WeylWord::new(vec![1, 5]), &Weight::zero(2)).is_err());
    }

    #[test]
    fn coxeter_element_on_fundamental_weights() {
        // σ_1 σ_2 ⋯ σ_ℓ (λ_j) = −λ_1 + λ_{j+1}
        let a5 = rs("A5");
        let word = WeylWord::new((1..=5).collect());
        for j in 1..=5i64 {
            let mut expected = Weight::fundamental(5, j + 1);
            expected.add_fundamental(1, -1).unwrap();
            assert_eq!(apply_word(&a5, &word, &Weight::fundamental(5, j)).unwrap(), expected);
        }
    }

    #[test]
    fn empty_word_is_identity() {
        let e7 = rs("E7");
        let l = w(&[1, -2, 3, 0, 0, 5, -1]);
        assert_eq!(apply_word(&e7, &WeylWord::default(), &l).unwrap(), l);
    }

    #[test]
    fn b_word_on_last_weight() {
        let b4 = rs("B4");
        let word = canonical_word(&b4, 1).unwrap();
        assert_eq!(apply_word(&b4, &word, &Weight::unit(4, 4)).unwrap(), w(&[-1, 0, 0, 1]));
        for j in 1..4 {
            let mut expected = Weight::unit(4, j);
            expected.add_fundamental(1, -2).unwrap();
            assert_eq!(apply_word(&b4, &word, &Weight::unit(4, j)).unwrap(), expected);
        }
    }

    #[test]
    fn canonical_word_shapes() {
        assert_eq!(canonical_word(&rs("B4"), 1).unwrap().letters(), &[1, 2, 3, 4, 3, 2, 1]);
        assert_eq!(canonical_word(&rs("A2"), 2).unwrap().letters(), &[1, 2, 1, 2]);
        assert_eq!(canonical_word(&rs("C3"), 3).unwrap().letters(), &[3, 2, 1, 3, 2, 3]);
        assert_eq!(canonical_word(&rs("D5"), 1).unwrap().letters(), &[1, 2, 3, 4, 5, 3, 2, 1]);
        assert_eq!(
            canonical_word(&rs("D5"), 4).unwrap().letters(),
            &[4, 3, 2, 1, 5, 3, 2, 4, 3, 5]
        );
        assert_eq!(
            canonical_word(&rs("D6"), 5).unwrap().letters(),
            &[5, 4, 3, 2, 1, 6, 4, 3, 2, 5, 4, 3, 6, 4, 5]
        );
        let e7 = canonical_word(&rs("E7"), 7).unwrap();
        assert_eq!(e7.len(), 27);
        assert_eq!(&e7.letters()[..6], &[7, 6, 5, 4, 3, 2]);
        assert_eq!(
            canonical_word(&rs("B3"), 2),
            Err(Error::NotMiniscule { ty: "B3".parse().unwrap(), index: 2 })
        );
    }

    #[test]
    fn affine_images() {
        let a4 = rs("A4");
        for j in 1..=4 {
            let word = canonical_word(&a4, j).unwrap();
            for i in 0..=4 {
                assert_eq!(affine_root_image(&a4, &word, i).unwrap(), (i + j) % 5);
            }
        }
        let d6 = rs("D6");
        let word = canonical_word(&d6, 6).unwrap();
        for j in 0..=6 {
            assert_eq!(affine_root_image(&d6, &word, j).unwrap(), 6 - j);
        }
        let e7 = rs("E7");
        assert_eq!(affine_root_image(&e7, &canonical_word(&e7, 7).unwrap(), 7).unwrap(), 0);
        assert!(matches!(
            affine_root_image(&e7, &WeylWord::default(), 8),
            Err(Error::AffineIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn wrong_word_is_not_a_permutation() {
        // σ_1 sends α_1 to −α_1, which is no affine simple root
        let a3 = rs("A3");
        assert!(matches!(
            affine_root_image(&a3, &WeylWord::new(vec![1]), 1),
            Err(Error::NotAffinePermutation { source_index: 1, .. })
        ));
    }

    #[test]
    fn expected_permutation_rows() {
        let t = |s: &str| s.parse::<LieType>().unwrap();
        assert_eq!(expected_permutation(t("B5"), 1).unwrap(), vec![1, 0, 2, 3, 4, 5]);
        assert_eq!(expected_permutation(t("E6"), 1).unwrap(), vec![1, 6, 3, 5, 4, 2, 0]);
        assert_eq!(expected_permutation(t("A3"), 2).unwrap(), vec![2, 3, 0, 1]);
        assert_eq!(expected_permutation(t("C4"), 4).unwrap(), vec![4, 3, 2, 1, 0]);
        assert_eq!(expected_permutation(t("D5"), 4).unwrap(), vec![4, 5, 3, 2, 1, 0]);
        assert_eq!(expected_permutation(t("D5"), 5).unwrap(), vec![5, 4, 3, 2, 0, 1]);
        assert_eq!(expected_permutation(t("D6"), 5).unwrap(), vec![5, 6, 4, 3, 2, 0, 1]);
        assert_eq!(expected_permutation(t("D6"), 6).unwrap(), vec![6, 5, 4, 3, 2, 1, 0]);
        assert!(expected_permutation(t("F4"), 1).is_err());
    }
}
