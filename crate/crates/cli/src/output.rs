//! JSON document shapes. Field order is the emitted key order.

use deltashift::{ActionTable, CoweightMap, LieType, VerifyReport, Weight};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Algebra {
    pub family: String,
    pub rank: usize,
}

impl From<LieType> for Algebra {
    fn from(t: LieType) -> Self {
        Algebra {
            family: t.family().to_string(),
            rank: t.rank(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapEntry {
    pub from: Vec<i64>,
    pub to: Vec<i64>,
}

/// `{"algebra":{...},"level":k,"coweight":i,"map":[{"from":[...],"to":[...]}, ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub algebra: Algebra,
    pub level: i64,
    pub coweight: usize,
    pub map: Vec<MapEntry>,
}

impl TableDoc {
    pub fn new(table: &ActionTable, map: &CoweightMap) -> Self {
        TableDoc {
            algebra: table.lie_type.into(),
            level: table.level,
            coweight: map.coweight,
            map: map
                .entries
                .iter()
                .map(|(from, to)| MapEntry {
                    from: from.coeffs().to_vec(),
                    to: to.coeffs().to_vec(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaDoc {
    pub roots: Vec<i64>,
    pub weights: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoDoc {
    pub algebra: Algebra,
    pub cartan: Vec<Vec<i64>>,
    pub theta: ThetaDoc,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
    pub miniscule: Vec<usize>,
    pub fundamental_group_order: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectDoc {
    pub algebra: Algebra,
    pub word: Vec<usize>,
    pub from: Vec<i64>,
    pub to: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaDoc {
    pub algebra: Algebra,
    pub level: i64,
    pub coweight: usize,
    pub from: Vec<i64>,
    pub to: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsDoc {
    pub algebra: Algebra,
    pub level: i64,
    pub orbits: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub algebra: Algebra,
    pub levels: Vec<i64>,
    pub passed: bool,
    pub checks: Vec<CheckDoc>,
}

impl From<&VerifyReport> for VerifyDoc {
    fn from(r: &VerifyReport) -> Self {
        VerifyDoc {
            algebra: r.lie_type.into(),
            levels: r.levels.clone(),
            passed: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckDoc {
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        }
    }
}

pub fn coeffs(w: &Weight) -> Vec<i64> {
    w.coeffs().to_vec()
}
