//! Vertex labelings and the validity predicates of the domination variants.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bit, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("label {value} at vertex {vertex} is outside 0..={max}")]
    ValueOutOfRange { vertex: usize, value: u8, max: u8 },
    #[error("labeling has {labeling} entries but the graph has {graph} vertices")]
    SizeMismatch { labeling: usize, graph: usize },
    #[error("cannot parse labeling: {0}")]
    Parse(String),
}

/// A function `V(G) -> {0,1,2,3}`, stored in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling(Vec<u8>);

/// The label classes `V0..V3` of a labeling.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassPartition {
    pub v0: Vec<usize>,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub v3: Vec<usize>,
}

impl ClassPartition {
    pub fn sizes(&self) -> [usize; 4] {
        [self.v0.len(), self.v1.len(), self.v2.len(), self.v3.len()]
    }
}

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self, LabelingError> {
        if let Some((vertex, &value)) = values.iter().enumerate().find(|(_, &x)| x > 3) {
            return Err(LabelingError::ValueOutOfRange {
                vertex,
                value,
                max: 3,
            });
        }
        Ok(Labeling(values))
    }

    pub fn constant(n: usize, value: u8) -> Self {
        assert!(value <= 3);
        Labeling(vec![value; n])
    }

    /// Indicator labeling of a vertex set.
    pub fn indicator(n: usize, set: u64) -> Self {
        Labeling((0..n).map(|v| u8::from(set & bit(v) != 0)).collect())
    }

    pub(crate) fn from_raw(values: Vec<u8>) -> Self {
        debug_assert!(values.iter().all(|&x| x <= 3));
        Labeling(values)
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|&x| u32::from(x)).sum()
    }

    /// Vertices carrying `label`, as a mask.
    pub fn class_mask(&self, label: u8) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == label)
            .fold(0, |m, (v, _)| m | bit(v))
    }

    pub fn classes(&self) -> ClassPartition {
        let mut p = ClassPartition::default();
        for (v, &x) in self.0.iter().enumerate() {
            match x {
                0 => p.v0.push(v),
                1 => p.v1.push(v),
                2 => p.v2.push(v),
                _ => p.v3.push(v),
            }
        }
        p
    }

    fn check_size(&self, g: &Graph) -> Result<(), LabelingError> {
        if self.len() != g.n() {
            return Err(LabelingError::SizeMismatch {
                labeling: self.len(),
                graph: g.n(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Labeling {
    type Err = LabelingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Labeling(Vec::new()));
        }
        let values = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u8>()
                    .map_err(|_| LabelingError::Parse(format!("{t:?} is not a label")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Labeling::new(values)
    }
}

impl Serialize for Labeling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Labeling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A minimization problem over vertex labelings.
///
/// Every variant is described by the same three ingredients: the label
/// alphabet `0..=max_label`, a demand every vertex must meet from its own
/// label plus the support of its neighbors, and whether the 0-labeled
/// vertices must be independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    /// Outer independent double Roman domination.
    Oidrd,
    /// Double Roman domination.
    Drd,
    /// Outer independent Roman domination.
    Oird,
    /// Roman domination.
    Roman,
    /// Domination, labels as set indicator.
    Domination,
    /// Vertex cover, labels as set indicator.
    VertexCover,
}

impl Problem {
    pub const ALL: [Problem; 6] = [
        Problem::Oidrd,
        Problem::Drd,
        Problem::Oird,
        Problem::Roman,
        Problem::Domination,
        Problem::VertexCover,
    ];

    pub fn max_label(self) -> u8 {
        match self {
            Problem::Oidrd | Problem::Drd => 3,
            Problem::Oird | Problem::Roman => 2,
            Problem::Domination | Problem::VertexCover => 1,
        }
    }

    pub fn independent_zeros(self) -> bool {
        matches!(self, Problem::Oidrd | Problem::Oird | Problem::VertexCover)
    }

    /// Demand of every vertex. Zero means no domination requirement.
    pub(crate) fn need(self) -> u8 {
        match self {
            Problem::Oidrd | Problem::Drd => 2,
            Problem::Oird | Problem::Roman | Problem::Domination => 1,
            Problem::VertexCover => 0,
        }
    }

    /// Support a neighbor labeled `label` provides.
    ///
    /// Double Roman: a 3 supplies the full demand of 2, a 2 supplies half,
    /// so a 0-vertex needs a 3 or two 2s and a 1-vertex needs one label >= 2.
    #[inline]
    pub(crate) fn support(self, label: u8) -> u8 {
        match self {
            Problem::Oidrd | Problem::Drd => label.saturating_sub(1),
            Problem::Oird | Problem::Roman => u8::from(label == 2),
            Problem::Domination => label,
            Problem::VertexCover => 0,
        }
    }

    /// Portion of the demand a vertex covers by its own label.
    #[inline]
    pub(crate) fn self_cover(self, label: u8) -> u8 {
        label.min(self.need())
    }

    pub fn name(self) -> &'static str {
        match self {
            Problem::Oidrd => "gamma_oidr",
            Problem::Drd => "gamma_dr",
            Problem::Oird => "gamma_oir",
            Problem::Roman => "gamma_r",
            Problem::Domination => "gamma",
            Problem::VertexCover => "beta",
        }
    }

    /// Checks `f` against this problem's conditions on `g`.
    pub fn is_valid(self, g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
        f.check_size(g)?;
        if let Some((vertex, &value)) = f
            .values()
            .iter()
            .enumerate()
            .find(|(_, &x)| x > self.max_label())
        {
            return Err(LabelingError::ValueOutOfRange {
                vertex,
                value,
                max: self.max_label(),
            });
        }
        Ok(self.satisfied(g, f.values()))
    }

    pub(crate) fn satisfied(self, g: &Graph, values: &[u8]) -> bool {
        let need = self.need();
        let mut zeros = 0u64;
        for (v, &x) in values.iter().enumerate() {
            if x == 0 {
                zeros |= bit(v);
            }
            if self.self_cover(x) >= need {
                continue;
            }
            let support: u32 = g
                .neighbors(v)
                .map(|u| u32::from(self.support(values[u])))
                .sum();
            if u32::from(self.self_cover(x)) + support < u32::from(need) {
                return false;
            }
        }
        !self.independent_zeros() || g.is_independent(zeros)
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "oidrd" | "gamma_oidr" => Problem::Oidrd,
            "drd" | "gamma_dr" => Problem::Drd,
            "oird" | "gamma_oir" => Problem::Oird,
            "roman" | "rd" | "gamma_r" => Problem::Roman,
            "gamma" | "domination" => Problem::Domination,
            "beta" | "vertex_cover" => Problem::VertexCover,
            other => return Err(format!("unknown invariant {other:?}")),
        })
    }
}

/// Double Roman dominating function: every 0 has a 3-neighbor or two
/// 2-neighbors, every 1 has a neighbor labeled at least 2.
///
/// Written out directly from the two conditions rather than through the
/// demand/support encoding the solver uses.
pub fn is_drd(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    f.check_size(g)?;
    let v = f.values();
    for x in 0..g.n() {
        let count = |label: u8| g.neighbors(x).filter(|&u| v[u] == label).count();
        let ok = match v[x] {
            0 => count(3) >= 1 || count(2) >= 2,
            1 => count(2) + count(3) >= 1,
            _ => true,
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A double Roman dominating function whose 0-class is independent.
pub fn is_oidrd(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    Ok(is_drd(g, f)? && g.is_independent(f.class_mask(0)))
}

/// Roman dominating function: labels in {0,1,2}, every 0 has a 2-neighbor.
pub fn is_rd(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    f.check_size(g)?;
    if let Some(vertex) = f.values().iter().position(|&x| x == 3) {
        return Err(LabelingError::ValueOutOfRange {
            vertex,
            value: 3,
            max: 2,
        });
    }
    let v = f.values();
    Ok((0..g.n()).all(|x| v[x] != 0 || g.neighbors(x).any(|u| v[u] == 2)))
}

/// A Roman dominating function whose 0-class is independent.
pub fn is_oird(g: &Graph, f: &Labeling) -> Result<bool, LabelingError> {
    Ok(is_rd(g, f)? && g.is_independent(f.class_mask(0)))
}
