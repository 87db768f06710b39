//! Recognizers for the connected graphs with γ_oidR equal to 3, 4 or 5.
//!
//! Every family is described by a few anchor vertices with fixed adjacency
//! among themselves, and sets of further vertices whose neighborhood is
//! exactly some subset of the anchors. Recognition tries every ordered
//! tuple of anchors, sorts the remaining vertices into sets by their exact
//! neighborhood, and checks the family's size conditions.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::{FamilySpec, HFamily, Subcase, VSets};
use crate::graph::{bit, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterizeError {
    #[error("recognition requires a connected graph")]
    Disconnected,
    #[error("classification requires n >= 3 (got n = {0})")]
    TooSmall(usize),
    #[error("graph matches several value classes: {0}")]
    Ambiguous(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ValueClass {
    Three,
    Four,
    Five,
    Other,
}

impl ValueClass {
    /// The class a solved γ_oidR value falls in.
    pub fn of_value(value: u32) -> Self {
        match value {
            3 => ValueClass::Three,
            4 => ValueClass::Four,
            5 => ValueClass::Five,
            _ => ValueClass::Other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ValueClass::Three => "THREE",
            ValueClass::Four => "FOUR",
            ValueClass::Five => "FIVE",
            ValueClass::Other => "OTHER",
        }
    }
}

impl fmt::Display for ValueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClassFamily {
    #[serde(rename = "star")]
    Star,
    G1,
    G2,
    G3,
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
}

impl ClassFamily {
    /// Recognition order used by [`classify`].
    pub const ORDER: [ClassFamily; 10] = [
        ClassFamily::Star,
        ClassFamily::G1,
        ClassFamily::G2,
        ClassFamily::G3,
        ClassFamily::H1,
        ClassFamily::H2,
        ClassFamily::H3,
        ClassFamily::H4,
        ClassFamily::H5,
        ClassFamily::H6,
    ];

    pub fn value_class(self) -> ValueClass {
        match self {
            ClassFamily::Star => ValueClass::Three,
            ClassFamily::G1 | ClassFamily::G2 | ClassFamily::G3 => ValueClass::Four,
            _ => ValueClass::Five,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassFamily::Star => "star",
            ClassFamily::G1 => "G1",
            ClassFamily::G2 => "G2",
            ClassFamily::G3 => "G3",
            ClassFamily::H1 => "H1",
            ClassFamily::H2 => "H2",
            ClassFamily::H3 => "H3",
            ClassFamily::H4 => "H4",
            ClassFamily::H5 => "H5",
            ClassFamily::H6 => "H6",
        }
    }

    fn h_family(self) -> Option<HFamily> {
        Some(match self {
            ClassFamily::H1 => HFamily::H1,
            ClassFamily::H2 => HFamily::H2,
            ClassFamily::H3 => HFamily::H3,
            ClassFamily::H4 => HFamily::H4,
            ClassFamily::H5 => HFamily::H5,
            ClassFamily::H6 => HFamily::H6,
            _ => return None,
        })
    }

    fn pattern(self) -> Pattern {
        match self {
            ClassFamily::Star => Pattern {
                anchors: 1,
                edges: &[],
                sets: &["a"],
            },
            ClassFamily::G1 => Pattern {
                anchors: 2,
                edges: &[(0, 1)],
                sets: &["ab", "a"],
            },
            ClassFamily::G2 => Pattern {
                anchors: 2,
                edges: &[(0, 1)],
                sets: &["ab"],
            },
            ClassFamily::G3 => Pattern {
                anchors: 2,
                edges: &[],
                sets: &["ab"],
            },
            ClassFamily::H1 | ClassFamily::H5 | ClassFamily::H6 => Pattern {
                anchors: 3,
                edges: &[(0, 1), (1, 2)],
                sets: self.h_family().unwrap().set_names(),
            },
            ClassFamily::H2 => Pattern {
                anchors: 3,
                edges: &[(0, 1), (1, 2), (0, 2)],
                sets: HFamily::H2.set_names(),
            },
            ClassFamily::H3 => Pattern {
                anchors: 2,
                edges: &[],
                sets: HFamily::H3.set_names(),
            },
            ClassFamily::H4 => Pattern {
                anchors: 3,
                edges: &[(1, 2)],
                sets: HFamily::H4.set_names(),
            },
        }
    }
}

impl fmt::Display for ClassFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Anchors with fixed mutual adjacency plus sets named by the anchors
/// (letters a, b, c in anchor order) their members are adjacent to.
struct Pattern {
    anchors: usize,
    edges: &'static [(usize, usize)],
    sets: &'static [&'static str],
}

/// One way a graph matches a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recognition {
    pub family: ClassFamily,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subcase: Option<Subcase>,
    /// Anchor vertices in pattern order (center; v1, v2; or a, b[, c]).
    pub anchors: Vec<usize>,
    /// Members of each neighborhood set, keyed by the anchors they see.
    pub sets: Vec<(String, Vec<usize>)>,
}

impl Recognition {
    fn count(&self, name: &str) -> usize {
        self.sets
            .iter()
            .find(|(s, _)| s == name)
            .map_or(0, |(_, members)| members.len())
    }

    /// The construction this recognition describes.
    pub fn to_spec(&self) -> FamilySpec {
        match self.family {
            ClassFamily::Star => FamilySpec::Star(self.count("a")),
            ClassFamily::G1 => FamilySpec::G1 {
                k: self.count("ab"),
                leaves: self.count("a"),
            },
            ClassFamily::G2 => FamilySpec::G2 {
                k: self.count("ab"),
            },
            ClassFamily::G3 => FamilySpec::G3 {
                k: self.count("ab"),
            },
            other => {
                let family = other.h_family().unwrap();
                let sizes: Vec<usize> = family.set_names().iter().map(|s| self.count(s)).collect();
                FamilySpec::H {
                    family,
                    subcase: self.subcase,
                    sets: VSets::from_ordered(family, &sizes),
                }
            }
        }
    }

    /// Vertices of the input graph listed in the construction's numbering.
    pub fn construction_order(&self) -> Vec<usize> {
        let mut order = self.anchors.clone();
        for (_, members) in &self.sets {
            order.extend(members);
        }
        order
    }

    /// Rebuilds the construction and checks it is `g` under the reported
    /// anchors and sets.
    pub fn verify(&self, g: &Graph) -> bool {
        let Ok(built) = self.to_spec().build() else {
            return false;
        };
        let order = self.construction_order();
        if built.n() != g.n() || order.len() != g.n() {
            return false;
        }
        let mut perm = vec![usize::MAX; g.n()];
        for (index, &v) in order.iter().enumerate() {
            if v >= g.n() || perm[v] != usize::MAX {
                return false;
            }
            perm[v] = index;
        }
        g.permuted(&perm) == built
    }
}

fn set_name(anchor_indices: impl Iterator<Item = usize>) -> String {
    anchor_indices.map(|i| (b'a' + i as u8) as char).collect()
}

/// Sorts non-anchors into the pattern's sets; `None` if some vertex fits no
/// set or the anchors have the wrong adjacency.
fn match_anchors(
    g: &Graph,
    anchors: &[usize],
    pattern: &Pattern,
) -> Option<Vec<(String, Vec<usize>)>> {
    for i in 0..anchors.len() {
        for j in i + 1..anchors.len() {
            let wanted = pattern
                .edges
                .iter()
                .any(|&(x, y)| (x, y) == (i, j) || (y, x) == (i, j));
            if g.has_edge(anchors[i], anchors[j]) != wanted {
                return None;
            }
        }
    }
    let anchor_mask = anchors.iter().fold(0u64, |m, &v| m | bit(v));
    let mut sets: Vec<(String, Vec<usize>)> = pattern
        .sets
        .iter()
        .map(|s| (s.to_string(), Vec::new()))
        .collect();
    for v in (0..g.n()).filter(|&v| anchor_mask & bit(v) == 0) {
        let nbrs = g.adjacency(v);
        if nbrs & !anchor_mask != 0 {
            return None;
        }
        let name = set_name((0..anchors.len()).filter(|&i| nbrs & bit(anchors[i]) != 0));
        sets.iter_mut().find(|(s, _)| *s == name)?.1.push(v);
    }
    Some(sets)
}

fn size_conditions(family: ClassFamily, sets: &[(String, Vec<usize>)]) -> Option<Option<Subcase>> {
    let count = |name: &str| {
        sets.iter()
            .find(|(s, _)| s == name)
            .map_or(0, |(_, m)| m.len())
    };
    match family {
        ClassFamily::Star => (count("a") >= 2).then_some(None),
        ClassFamily::G1 => (count("ab") >= 1 && count("a") >= 1).then_some(None),
        ClassFamily::G2 => (count("ab") >= 1).then_some(None),
        ClassFamily::G3 => (count("ab") >= 2).then_some(None),
        other => {
            let h = other.h_family().unwrap();
            let sizes: Vec<usize> = h.set_names().iter().map(|s| count(s)).collect();
            VSets::from_ordered(h, &sizes).subcase_for(h)
        }
    }
}

/// Ordered anchor tuples of the given length, lexicographic.
fn anchor_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for t in &out {
            for v in (0..n).filter(|v| !t.contains(v)) {
                let mut longer = t.clone();
                longer.push(v);
                next.push(longer);
            }
        }
        out = next;
    }
    out
}

/// First match of `family` over all anchor tuples in lexicographic order.
pub fn recognize_family(
    g: &Graph,
    family: ClassFamily,
) -> Result<Option<Recognition>, CharacterizeError> {
    if !g.is_connected() {
        return Err(CharacterizeError::Disconnected);
    }
    let pattern = family.pattern();
    if g.n() < pattern.anchors {
        return Ok(None);
    }
    for anchors in anchor_tuples(g.n(), pattern.anchors) {
        let Some(sets) = match_anchors(g, &anchors, &pattern) else {
            continue;
        };
        if let Some(subcase) = size_conditions(family, &sets) {
            return Ok(Some(Recognition {
                family,
                subcase,
                anchors,
                sets,
            }));
        }
    }
    Ok(None)
}

/// K_{1,n-1}; requires a connected graph with n >= 3.
pub fn is_star(g: &Graph) -> Result<bool, CharacterizeError> {
    if g.n() < 3 {
        return Err(CharacterizeError::TooSmall(g.n()));
    }
    Ok(recognize_family(g, ClassFamily::Star)?.is_some())
}

fn first_of(g: &Graph, families: &[ClassFamily]) -> Result<Option<Recognition>, CharacterizeError> {
    for &family in families {
        if let Some(r) = recognize_family(g, family)? {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Membership in G1, G2 or G3 (checked in that order).
pub fn recognize_g(g: &Graph) -> Result<Option<Recognition>, CharacterizeError> {
    first_of(g, &ClassFamily::ORDER[1..4])
}

/// Membership in one of H1..H6 (checked in that order).
pub fn recognize_h(g: &Graph) -> Result<Option<Recognition>, CharacterizeError> {
    first_of(g, &ClassFamily::ORDER[4..])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyResult {
    pub value_class: ValueClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<ClassFamily>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subcase: Option<Subcase>,
    pub anchor_vertices: Vec<usize>,
    /// Neighborhood sets of the match, empty for `OTHER`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sets: Vec<(String, Vec<usize>)>,
}

impl ClassifyResult {
    pub fn recognition(&self) -> Option<Recognition> {
        Some(Recognition {
            family: self.family?,
            subcase: self.subcase,
            anchors: self.anchor_vertices.clone(),
            sets: self.sets.clone(),
        })
    }
}

/// Value class of a connected graph on at least 3 vertices, from structure
/// alone. Fails if the graph matches families of different value classes.
pub fn classify(g: &Graph) -> Result<ClassifyResult, CharacterizeError> {
    if !g.is_connected() {
        return Err(CharacterizeError::Disconnected);
    }
    if g.n() < 3 {
        return Err(CharacterizeError::TooSmall(g.n()));
    }
    let hits: Vec<Recognition> = [
        first_of(g, &ClassFamily::ORDER[..1])?,
        recognize_g(g)?,
        recognize_h(g)?,
    ]
    .into_iter()
    .flatten()
    .collect();
    if hits.len() > 1 {
        let names: Vec<&str> = hits.iter().map(|r| r.family.name()).collect();
        return Err(CharacterizeError::Ambiguous(names.join(", ")));
    }
    Ok(match hits.into_iter().next() {
        Some(r) => ClassifyResult {
            value_class: r.family.value_class(),
            family: Some(r.family),
            subcase: r.subcase,
            anchor_vertices: r.anchors,
            sets: r.sets,
        },
        None => ClassifyResult {
            value_class: ValueClass::Other,
            family: None,
            subcase: None,
            anchor_vertices: Vec::new(),
            sets: Vec::new(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn stars() {
        assert!(is_star(&g("star:4")).unwrap());
        assert!(!is_star(&g("path:4")).unwrap());
        assert!(!is_star(&g("complete:3")).unwrap());
        assert!(is_star(&g("path:2")).is_err());
        assert!(is_star(&g("empty:3")).is_err());
    }

    #[test]
    fn g_families() {
        let c4 = recognize_g(&g("cycle:4")).unwrap().unwrap();
        assert_eq!(c4.family, ClassFamily::G3);
        assert_eq!(c4.count("ab"), 2);
        let k3 = recognize_g(&g("complete:3")).unwrap().unwrap();
        assert_eq!(k3.family, ClassFamily::G2);
        assert_eq!(k3.count("ab"), 1);
        assert!(recognize_g(&g("path:4")).unwrap().is_none());
        assert!(recognize_g(&g("empty:2")).is_err());
    }

    #[test]
    fn h_families() {
        let k4 = recognize_h(&g("complete:4")).unwrap().unwrap();
        assert_eq!(k4.family, ClassFamily::H2);
        assert_eq!(k4.subcase, Some(Subcase::A2));
        assert!(recognize_h(&g("path:4")).unwrap().is_some());
        assert!(recognize_h(&g("cycle:5")).unwrap().is_none());
    }

    #[test]
    fn classify_examples() {
        let r = classify(&g("star:7")).unwrap();
        assert_eq!(
            (r.value_class, r.family),
            (ValueClass::Three, Some(ClassFamily::Star))
        );
        let r = classify(&g("complete:3")).unwrap();
        assert_eq!(
            (r.value_class, r.family),
            (ValueClass::Four, Some(ClassFamily::G2))
        );
        assert_eq!(
            classify(&g("dstar:1,3")).unwrap().value_class,
            ValueClass::Five
        );
        let r = classify(&g("cycle:5")).unwrap();
        assert_eq!(r.value_class, ValueClass::Other);
        assert!(r.family.is_none() && r.anchor_vertices.is_empty());
    }

    #[test]
    fn recognitions_rebuild_the_input() {
        for spec in [
            "star:5",
            "g1:2,3",
            "g2:3",
            "g3:3",
            "h1:c1,0,1,2,1",
            "h3:2,2",
            "h4:b4,1,1",
            "cycle:4",
        ] {
            let graph = g(spec);
            let r = classify(&graph).unwrap().recognition().unwrap();
            assert!(r.verify(&graph), "{spec}");
        }
    }

    #[test]
    fn classify_json_shape() {
        let r = classify(&g("complete:3")).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["value_class"], "FOUR");
        assert_eq!(json["family"], "G2");
        let back: ClassifyResult = serde_json::from_value(json).unwrap();
        assert_eq!(back, r);
    }
}
