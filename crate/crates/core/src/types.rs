//! Value types shared by every module: algebra labels and integer coordinate vectors.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A finite-type simple Lie algebra label, e.g. `D6`.
///
/// Only the combinations of the Cartan–Killing classification can be built.
/// `D` requires rank at least 4, so `D3` is rejected rather than identified
/// with `A3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidType {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every valid type with rank at most `max_rank`, in family then rank order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for family in Family::ALL {
            for rank in 1..=max_rank {
                if let Ok(ty) = LieType::new(family, rank) {
                    out.push(ty);
                }
            }
        }
        out
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Family letter immediately followed by rank digits, case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::ParseType(s.to_string()))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseType(s.to_string()));
        }
        let rank = digits
            .parse::<usize>()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        LieType::new(family, rank)
    }
}

macro_rules! coord_vector {
    ($name:ident) => {
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
        pub struct $name(Vec<i64>);

        impl $name {
            pub fn new(coeffs: Vec<i64>) -> Self {
                $name(coeffs)
            }

            pub fn zero(len: usize) -> Self {
                $name(vec![0; len])
            }

            /// Unit vector with a one at the 1-based position `j`.
            pub fn unit(len: usize, j: usize) -> Self {
                let mut v = vec![0; len];
                v[j - 1] = 1;
                $name(v)
            }

            pub fn coeffs(&self) -> &[i64] {
                &self.0
            }

            pub fn into_coeffs(self) -> Vec<i64> {
                self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            /// Coefficient at the 1-based position `j`.
            pub fn get(&self, j: usize) -> i64 {
                self.0[j - 1]
            }

            pub fn expect_len(&self, len: usize) -> Result<()> {
                if self.0.len() == len {
                    Ok(())
                } else {
                    Err(Error::LengthMismatch {
                        expected: len,
                        found: self.0.len(),
                    })
                }
            }

            pub fn checked_add(&self, other: &Self) -> Result<Self> {
                debug_assert_eq!(self.len(), other.len());
                self.0
                    .iter()
                    .zip(&other.0)
                    .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()
                    .map($name)
            }

            pub fn checked_sub(&self, other: &Self) -> Result<Self> {
                debug_assert_eq!(self.len(), other.len());
                self.0
                    .iter()
                    .zip(&other.0)
                    .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()
                    .map($name)
            }

            pub fn checked_scale(&self, factor: i64) -> Result<Self> {
                self.0
                    .iter()
                    .map(|a| a.checked_mul(factor).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()
                    .map($name)
            }

            pub fn checked_neg(&self) -> Result<Self> {
                self.checked_scale(-1)
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                $name(v)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    };
}

coord_vector!(Weight);
coord_vector!(RootVector);

impl Weight {
    /// The fundamental weight `λ_j` with the cyclic convention used by the
    /// affine node: `j` is read modulo `rank + 1` and `λ_0` is zero.
    pub fn fundamental(rank: usize, j: i64) -> Self {
        let m = rank as i64 + 1;
        let j = j.rem_euclid(m) as usize;
        if j == 0 {
            Weight::zero(rank)
        } else {
            Weight::unit(rank, j)
        }
    }

    /// Adds `coeff · λ_j` in place (cyclic convention as in [`Weight::fundamental`]).
    pub fn add_fundamental(&mut self, j: i64, coeff: i64) -> Result<()> {
        let m = self.len() as i64 + 1;
        let j = j.rem_euclid(m) as usize;
        if j == 0 {
            return Ok(());
        }
        let slot = &mut self.0[j - 1];
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}
