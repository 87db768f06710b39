//! Named graph families and constructions, plus the text DSL that names them.
//!
//! DSL grammar (names are case-insensitive, whitespace ignored):
//!
//! ```text
//! spec := name ":" int ("," int)*
//!       | name ":" subcase ("," int)*        (h1..h6)
//!       | "corona(" spec "," spec ")"
//!       | "gadget(" spec ")"
//! ```
//!
//! | DSL | graph | numbering |
//! |-----|-------|-----------|
//! | `path:n` | P_n | along the path |
//! | `cycle:n` | C_n, n >= 3 | around the cycle |
//! | `complete:n` | K_n | |
//! | `empty:n` | n isolated vertices | |
//! | `star:k` | K_{1,k} | center 0 |
//! | `dstar:a,b` | double star S_{a,b} | centers 0, 1; then a leaves of 0, b leaves of 1 |
//! | `kbipartite:m,n` | K_{m,n} | parts `0..m`, `m..m+n` |
//! | `kpartite:n1,..,nk` | complete k-partite, k >= 2 | parts consecutive |
//! | `g1:k,l` | G1: edge v1v2, k common neighbors, l >= 1 leaves on v1 | v1=0, v2=1, w's, leaves |
//! | `g2:k` | G2: edge v1v2, k >= 1 common neighbors | v1=0, v2=1, w's |
//! | `g3:k` | G3: nonadjacent v1, v2, k >= 2 common neighbors | v1=0, v2=1, w's |
//! | `h1:[sub,]abc,ab,bc,b` | ℋ1 over the path abc | a=0, b=1, c=2, then the sets in DSL order |
//! | `h2:[sub,]abc,ab,bc,b` | ℋ2 over the triangle abc | as h1 |
//! | `h3:[sub,]a,ab` | ℋ3 over nonadjacent a, b | a=0, b=1, then sets |
//! | `h4:[sub,]abc,ab` | ℋ4 over a vertex a and an edge bc | a=0, b=1, c=2, then sets |
//! | `h5:[sub,]abc,ab` | ℋ5 over the path abc | as h4 |
//! | `h6:[sub,]abc,ac` | ℋ6 over the path abc | as h4 |
//! | `sharpness:m1,..,mt` | the K_{2,m_i} blocks joined by a z-cycle, t >= 3 | per block x, y, z, then the m_i others |
//!
//! In the ℋ families a size names the set `V_{..}` of vertices whose
//! neighborhood is exactly the listed anchors. Missing trailing sizes are 0.
//! The subcase (`a1`, `b1`, ...) is optional; when given it must hold.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{corona, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {family}: {reason}")]
    Constraint { family: String, reason: String },
    #[error("cannot parse family spec {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn constraint(family: &str, reason: impl Into<String>) -> FamilyError {
    FamilyError::Constraint {
        family: family.to_string(),
        reason: reason.into(),
    }
}

/// One of the six families characterizing γ_oidR = 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum HFamily {
    H1,
    H2,
    H3,
    H4,
    H5,
    H6,
}

impl HFamily {
    pub const ALL: [HFamily; 6] = [
        HFamily::H1,
        HFamily::H2,
        HFamily::H3,
        HFamily::H4,
        HFamily::H5,
        HFamily::H6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HFamily::H1 => "H1",
            HFamily::H2 => "H2",
            HFamily::H3 => "H3",
            HFamily::H4 => "H4",
            HFamily::H5 => "H5",
            HFamily::H6 => "H6",
        }
    }

    pub fn subcases(self) -> &'static [Subcase] {
        match self {
            HFamily::H1 => &[Subcase::A1, Subcase::B1, Subcase::C1],
            HFamily::H2 => &[Subcase::A2, Subcase::B2],
            HFamily::H3 => &[],
            HFamily::H4 => &[Subcase::A4, Subcase::B4],
            HFamily::H5 => &[Subcase::A5, Subcase::B5],
            HFamily::H6 => &[Subcase::A6, Subcase::B6],
        }
    }

    /// Set names in DSL order.
    pub fn set_names(self) -> &'static [&'static str] {
        match self {
            HFamily::H1 | HFamily::H2 => &["abc", "ab", "bc", "b"],
            HFamily::H3 => &["a", "ab"],
            HFamily::H4 | HFamily::H5 => &["abc", "ab"],
            HFamily::H6 => &["abc", "ac"],
        }
    }

    /// Number of anchor vertices (a, b[, c]).
    pub fn anchor_count(self) -> usize {
        if self == HFamily::H3 {
            2
        } else {
            3
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subcase {
    A1,
    B1,
    C1,
    A2,
    B2,
    A4,
    B4,
    A5,
    B5,
    A6,
    B6,
}

impl Subcase {
    pub fn name(self) -> &'static str {
        match self {
            Subcase::A1 => "a1",
            Subcase::B1 => "b1",
            Subcase::C1 => "c1",
            Subcase::A2 => "a2",
            Subcase::B2 => "b2",
            Subcase::A4 => "a4",
            Subcase::B4 => "b4",
            Subcase::A5 => "a5",
            Subcase::B5 => "b5",
            Subcase::A6 => "a6",
            Subcase::B6 => "b6",
        }
    }
}

impl FromStr for Subcase {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let all = [
            Subcase::A1,
            Subcase::B1,
            Subcase::C1,
            Subcase::A2,
            Subcase::B2,
            Subcase::A4,
            Subcase::B4,
            Subcase::A5,
            Subcase::B5,
            Subcase::A6,
            Subcase::B6,
        ];
        all.into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown subcase {s:?}"))
    }
}

/// Cardinalities of the neighborhood classes `V_S` around the anchors.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VSets {
    pub a: usize,
    pub b: usize,
    pub ab: usize,
    pub bc: usize,
    pub ac: usize,
    pub abc: usize,
}

impl VSets {
    pub(crate) fn get(&self, name: &str) -> usize {
        match name {
            "a" => self.a,
            "b" => self.b,
            "ab" => self.ab,
            "bc" => self.bc,
            "ac" => self.ac,
            "abc" => self.abc,
            _ => unreachable!("unknown set {name}"),
        }
    }

    fn slot(&mut self, name: &str) -> &mut usize {
        match name {
            "a" => &mut self.a,
            "b" => &mut self.b,
            "ab" => &mut self.ab,
            "bc" => &mut self.bc,
            "ac" => &mut self.ac,
            "abc" => &mut self.abc,
            _ => unreachable!("unknown set {name}"),
        }
    }

    /// Sets in the family's DSL order.
    pub fn ordered(&self, family: HFamily) -> Vec<usize> {
        family.set_names().iter().map(|s| self.get(s)).collect()
    }

    pub fn from_ordered(family: HFamily, sizes: &[usize]) -> Self {
        let mut v = VSets::default();
        for (name, &size) in family.set_names().iter().zip(sizes) {
            *v.slot(name) = size;
        }
        v
    }

    /// Whether the sets meet the stated condition of `subcase`.
    pub fn satisfies(&self, subcase: Subcase) -> bool {
        match subcase {
            Subcase::A1 => self.ab == 0 && self.bc == 0 && self.abc >= 2,
            Subcase::B1 => ((self.ab == 0) != (self.bc == 0)) && self.abc >= 1,
            Subcase::C1 => self.ab >= 1 && self.bc >= 1,
            Subcase::A2 => self.abc >= 1,
            Subcase::B2 => self.ab >= 1 && self.bc >= 1,
            Subcase::A4 => self.ab == 0 && self.abc >= 2,
            Subcase::B4 => self.ab >= 1,
            Subcase::A5 => self.ab >= 1 && self.abc >= 1,
            Subcase::B5 => self.ab == 0 && self.abc >= 2,
            Subcase::A6 => self.ac >= 1 && self.abc >= 1,
            Subcase::B6 => self.ac == 0 && self.abc >= 2,
        }
    }

    /// The first subcase of `family` these sets satisfy. ℋ3 has no
    /// subcases; its condition is that both sets are nonempty.
    pub fn subcase_for(&self, family: HFamily) -> Option<Option<Subcase>> {
        if family == HFamily::H3 {
            return (self.a >= 1 && self.ab >= 1).then_some(None);
        }
        family
            .subcases()
            .iter()
            .copied()
            .find(|&c| self.satisfies(c))
            .map(Some)
    }
}

/// A named construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Star(usize),
    DoubleStar(usize, usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    G1 {
        k: usize,
        leaves: usize,
    },
    G2 {
        k: usize,
    },
    G3 {
        k: usize,
    },
    H {
        family: HFamily,
        subcase: Option<Subcase>,
        sets: VSets,
    },
    SharpnessH(Vec<usize>),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
    Gadget(Box<FamilySpec>),
}

fn at_least(family: &str, what: &str, value: usize, min: usize) -> Result<(), FamilyError> {
    if value < min {
        return Err(constraint(
            family,
            format!("{what} must be >= {min}, got {value}"),
        ));
    }
    Ok(())
}

fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph, FamilyError> {
    Ok(Graph::from_edges(n, edges)?)
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Empty(_) => "empty",
            FamilySpec::Star(_) => "star",
            FamilySpec::DoubleStar(..) => "dstar",
            FamilySpec::CompleteBipartite(..) => "kbipartite",
            FamilySpec::CompleteMultipartite(_) => "kpartite",
            FamilySpec::G1 { .. } => "g1",
            FamilySpec::G2 { .. } => "g2",
            FamilySpec::G3 { .. } => "g3",
            FamilySpec::H { family, .. } => match family {
                HFamily::H1 => "h1",
                HFamily::H2 => "h2",
                HFamily::H3 => "h3",
                HFamily::H4 => "h4",
                HFamily::H5 => "h5",
                HFamily::H6 => "h6",
            },
            FamilySpec::SharpnessH(_) => "sharpness",
            FamilySpec::Corona(..) => "corona",
            FamilySpec::Gadget(_) => "gadget",
        }
    }

    /// Builds the graph, enforcing the family's parameter constraints.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        let tag = self.tag();
        match self {
            &FamilySpec::Path(n) => {
                at_least(tag, "n", n, 1)?;
                build(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
            }
            &FamilySpec::Cycle(n) => {
                at_least(tag, "n", n, 3)?;
                build(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
            }
            &FamilySpec::Complete(n) => {
                at_least(tag, "n", n, 1)?;
                let edges: Vec<_> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .collect();
                build(n, &edges)
            }
            &FamilySpec::Empty(n) => {
                at_least(tag, "n", n, 1)?;
                build(n, &[])
            }
            &FamilySpec::Star(k) => {
                at_least(tag, "k", k, 1)?;
                build(k + 1, &(1..=k).map(|i| (0, i)).collect::<Vec<_>>())
            }
            &FamilySpec::DoubleStar(a, b) => {
                at_least(tag, "a", a, 1)?;
                at_least(tag, "b", b, 1)?;
                let mut edges = vec![(0, 1)];
                edges.extend((0..a).map(|i| (0, 2 + i)));
                edges.extend((0..b).map(|i| (1, 2 + a + i)));
                build(a + b + 2, &edges)
            }
            &FamilySpec::CompleteBipartite(m, n) => {
                at_least(tag, "m", m, 1)?;
                at_least(tag, "n", n, 1)?;
                let edges: Vec<_> = (0..m)
                    .flat_map(|i| (m..m + n).map(move |j| (i, j)))
                    .collect();
                build(m + n, &edges)
            }
            FamilySpec::CompleteMultipartite(parts) => {
                at_least(tag, "number of parts", parts.len(), 2)?;
                let mut part_of = Vec::new();
                for (p, &size) in parts.iter().enumerate() {
                    at_least(tag, "part size", size, 1)?;
                    part_of.extend(std::iter::repeat_n(p, size));
                }
                let n = part_of.len();
                let edges: Vec<_> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| part_of[i] != part_of[j])
                    .collect();
                build(n, &edges)
            }
            &FamilySpec::G1 { k, leaves } => {
                at_least(tag, "k", k, 1)?;
                at_least(tag, "leaves", leaves, 1)?;
                let mut edges = vec![(0, 1)];
                edges.extend((0..k).flat_map(|i| [(0, 2 + i), (1, 2 + i)]));
                edges.extend((0..leaves).map(|i| (0, 2 + k + i)));
                build(2 + k + leaves, &edges)
            }
            &FamilySpec::G2 { k } => {
                at_least(tag, "k", k, 1)?;
                let mut edges = vec![(0, 1)];
                edges.extend((0..k).flat_map(|i| [(0, 2 + i), (1, 2 + i)]));
                build(2 + k, &edges)
            }
            &FamilySpec::G3 { k } => {
                at_least(tag, "k", k, 2)?;
                let edges: Vec<_> = (0..k).flat_map(|i| [(0, 2 + i), (1, 2 + i)]).collect();
                build(2 + k, &edges)
            }
            FamilySpec::H {
                family,
                subcase,
                sets,
            } => build_h(*family, *subcase, sets),
            FamilySpec::SharpnessH(ms) => {
                at_least(tag, "t (number of blocks)", ms.len(), 3)?;
                let mut edges = Vec::new();
                let mut z = Vec::new();
                let mut offset = 0;
                for &m in ms {
                    at_least(tag, "m_i", m, 2)?;
                    let (x, y, zi) = (offset, offset + 1, offset + 2);
                    edges.push((zi, x));
                    edges.push((zi, y));
                    for j in 0..m {
                        edges.push((x, offset + 3 + j));
                        edges.push((y, offset + 3 + j));
                    }
                    z.push(zi);
                    offset += m + 3;
                }
                for i in 0..z.len() {
                    edges.push((z[i], z[(i + 1) % z.len()]));
                }
                build(offset, &edges)
            }
            FamilySpec::Corona(g, h) => Ok(corona(&g.build()?, &h.build()?)?),
            FamilySpec::Gadget(base) => Ok(crate::reduction::build_gadget(&base.build()?)?.gadget),
        }
    }
}

fn build_h(family: HFamily, subcase: Option<Subcase>, sets: &VSets) -> Result<Graph, FamilyError> {
    let name = family.name();
    let allowed = family.set_names();
    for other in ["a", "b", "ab", "bc", "ac", "abc"] {
        if !allowed.contains(&other) && sets.get(other) > 0 {
            return Err(constraint(
                name,
                format!("set V_{other} is not part of {name}"),
            ));
        }
    }
    match subcase {
        Some(c) if !family.subcases().contains(&c) => {
            return Err(constraint(
                name,
                format!("subcase {} belongs to another family", c.name()),
            ))
        }
        Some(c) if !sets.satisfies(c) => {
            return Err(constraint(
                name,
                format!("set sizes violate subcase {}", c.name()),
            ))
        }
        None if sets.subcase_for(family).is_none() => {
            return Err(constraint(
                name,
                "set sizes satisfy none of the family's conditions",
            ))
        }
        _ => {}
    }
    if family == HFamily::H3 && (sets.a == 0 || sets.ab == 0) {
        return Err(constraint(name, "V_a and V_ab must both be nonempty"));
    }

    let (a, b, c) = (0usize, 1usize, 2usize);
    let mut edges = match family {
        HFamily::H1 | HFamily::H5 | HFamily::H6 => vec![(a, b), (b, c)],
        HFamily::H2 => vec![(a, b), (b, c), (a, c)],
        HFamily::H3 => vec![],
        HFamily::H4 => vec![(b, c)],
    };
    let mut next = family.anchor_count();
    for set in allowed {
        let anchors: Vec<usize> = set
            .chars()
            .map(|ch| match ch {
                'a' => a,
                'b' => b,
                _ => c,
            })
            .collect();
        for _ in 0..sets.get(set) {
            edges.extend(anchors.iter().map(|&x| (x, next)));
            next += 1;
        }
    }
    build(next, &edges)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Star(n) => write!(f, "{}:{n}", self.tag()),
            FamilySpec::DoubleStar(a, b) | FamilySpec::CompleteBipartite(a, b) => {
                write!(f, "{}:{a},{b}", self.tag())
            }
            FamilySpec::CompleteMultipartite(parts) => write!(f, "kpartite:{}", join(parts)),
            FamilySpec::G1 { k, leaves } => write!(f, "g1:{k},{leaves}"),
            FamilySpec::G2 { k } => write!(f, "g2:{k}"),
            FamilySpec::G3 { k } => write!(f, "g3:{k}"),
            FamilySpec::H {
                family,
                subcase,
                sets,
            } => {
                write!(f, "{}:", self.tag())?;
                if let Some(c) = subcase {
                    write!(f, "{},", c.name())?;
                }
                write!(f, "{}", join(&sets.ordered(*family)))
            }
            FamilySpec::SharpnessH(ms) => write!(f, "sharpness:{}", join(ms)),
            FamilySpec::Corona(g, h) => write!(f, "corona({g},{h})"),
            FamilySpec::Gadget(g) => write!(f, "gadget({g})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        parse_spec(&compact.to_ascii_lowercase()).map_err(|reason| FamilyError::Parse {
            input: input.to_string(),
            reason,
        })
    }
}

/// Splits `a,b` at the first comma outside parentheses that starts a new
/// spec. Parameters are numeric, so the second spec begins with a letter.
fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 && s[i + 1..].starts_with(|c: char| c.is_ascii_alphabetic()) => {
                return Some((&s[..i], &s[i + 1..]))
            }
            _ => {}
        }
    }
    None
}

fn parse_spec(s: &str) -> Result<FamilySpec, String> {
    if let Some(inner) = s.strip_prefix("corona(").and_then(|r| r.strip_suffix(')')) {
        let (g, h) = split_top_level(inner).ok_or("corona needs two comma-separated specs")?;
        return Ok(FamilySpec::Corona(
            Box::new(parse_spec(g)?),
            Box::new(parse_spec(h)?),
        ));
    }
    if let Some(inner) = s.strip_prefix("gadget(").and_then(|r| r.strip_suffix(')')) {
        return Ok(FamilySpec::Gadget(Box::new(parse_spec(inner)?)));
    }
    let (name, args) = s
        .split_once(':')
        .ok_or_else(|| format!("expected \"family:params\", got {s:?}"))?;
    let mut tokens: Vec<&str> = if args.is_empty() {
        vec![]
    } else {
        args.split(',').collect()
    };

    let h_family = match name {
        "h1" => Some(HFamily::H1),
        "h2" => Some(HFamily::H2),
        "h3" => Some(HFamily::H3),
        "h4" => Some(HFamily::H4),
        "h5" => Some(HFamily::H5),
        "h6" => Some(HFamily::H6),
        _ => None,
    };
    let mut subcase = None;
    if h_family.is_some() {
        if let Some(first) = tokens.first() {
            if first
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic())
            {
                subcase = Some(first.parse::<Subcase>()?);
                tokens.remove(0);
            }
        }
    }
    let nums = tokens
        .iter()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| format!("{t:?} is not a nonnegative integer"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let arity = |k: usize| -> Result<(), String> {
        if nums.len() != k {
            return Err(format!("{name} takes {k} parameter(s), got {}", nums.len()));
        }
        Ok(())
    };

    Ok(match name {
        "path" => {
            arity(1)?;
            FamilySpec::Path(nums[0])
        }
        "cycle" => {
            arity(1)?;
            FamilySpec::Cycle(nums[0])
        }
        "complete" => {
            arity(1)?;
            FamilySpec::Complete(nums[0])
        }
        "empty" => {
            arity(1)?;
            FamilySpec::Empty(nums[0])
        }
        "star" => {
            arity(1)?;
            FamilySpec::Star(nums[0])
        }
        "dstar" | "double_star" => {
            arity(2)?;
            FamilySpec::DoubleStar(nums[0], nums[1])
        }
        "kbipartite" | "complete_bipartite" => {
            arity(2)?;
            FamilySpec::CompleteBipartite(nums[0], nums[1])
        }
        "kpartite" | "complete_multipartite" => FamilySpec::CompleteMultipartite(nums),
        "g1" => {
            arity(2)?;
            FamilySpec::G1 {
                k: nums[0],
                leaves: nums[1],
            }
        }
        "g2" => {
            arity(1)?;
            FamilySpec::G2 { k: nums[0] }
        }
        "g3" => {
            arity(1)?;
            FamilySpec::G3 { k: nums[0] }
        }
        "sharpness" | "sharpness_h" => FamilySpec::SharpnessH(nums),
        _ => {
            let family = h_family.ok_or_else(|| format!("unknown family {name:?}"))?;
            let width = family.set_names().len();
            if nums.len() > width {
                return Err(format!("{name} takes at most {width} set sizes"));
            }
            FamilySpec::H {
                family,
                subcase,
                sets: VSets::from_ordered(family, &nums),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    fn sorted_degrees(graph: &Graph) -> Vec<usize> {
        let mut d = graph.degrees();
        d.sort();
        d
    }

    #[test]
    fn g3_with_two_is_c4() {
        let c4 = g("g3:2");
        assert_eq!(sorted_degrees(&c4), vec![2, 2, 2, 2]);
        assert!(!c4.has_edge(0, 1) && !c4.has_edge(2, 3));
        // 0-2-1-3-0 is a 4-cycle.
        assert!(c4.has_edge(0, 2) && c4.has_edge(2, 1) && c4.has_edge(1, 3) && c4.has_edge(3, 0));
    }

    #[test]
    fn sharpness_graph() {
        let h = g("sharpness:2,2,2");
        assert_eq!(h.n(), 15);
        // z_i at 2, 7, 12 form a cycle and each sees its x_i, y_i.
        for (i, &z) in [2usize, 7, 12].iter().enumerate() {
            assert_eq!(h.degree(z), 4);
            assert!(h.has_edge(z, 5 * i) && h.has_edge(z, 5 * i + 1));
        }
        assert!(h.has_edge(2, 7) && h.has_edge(7, 12) && h.has_edge(12, 2));
        assert_eq!(h.m(), 3 * (4 + 2) + 3);
        assert!("sharpness:2,2"
            .parse::<FamilySpec>()
            .unwrap()
            .build()
            .is_err());
        assert!("sharpness:2,1,2"
            .parse::<FamilySpec>()
            .unwrap()
            .build()
            .is_err());
    }

    #[test]
    fn corona_spec() {
        let c = g("corona(path:2,empty:2)");
        assert_eq!(c.n(), 6);
        assert_eq!(c.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]);
    }

    #[test]
    fn basic_families() {
        assert_eq!(g("path:3").degrees(), vec![1, 2, 1]);
        assert_eq!(g("cycle:5").m(), 5);
        assert_eq!(g("complete:4").m(), 6);
        assert_eq!(g("kbipartite:3,7").m(), 21);
        assert_eq!(g("kpartite:1,2,3").m(), 2 + 3 + 6);
        assert_eq!(g("star:5").max_degree(), 5);
        assert_eq!(sorted_degrees(&g("dstar:2,3")), vec![1, 1, 1, 1, 1, 3, 4]);
        assert_eq!(g("g1:2,3").n(), 7);
        assert_eq!(g("g2:1").m(), 3);
        assert!(g("empty:3").is_edgeless());
    }

    #[test]
    fn family_constraints() {
        for bad in [
            "g3:1",
            "cycle:2",
            "g2:0",
            "g1:1,0",
            "h3:1,0",
            "h1:a1,1",
            "h1:c1,0,1,0",
            "kpartite:3",
        ] {
            let spec: FamilySpec = bad.parse().unwrap();
            assert!(spec.build().is_err(), "{bad} should be rejected");
        }
        for bad in ["path", "path:x", "nope:3", "h1:z9,1", "corona(path:2)"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn h_families_by_subcase() {
        // K4 is ℋ2 with a single V_abc vertex.
        let k4 = g("h2:a2,1");
        assert_eq!(k4.m(), 6);
        let h1 = g("h1:a1,2");
        assert_eq!(h1.n(), 5);
        assert_eq!(h1.degree(1), 4);
        assert!(!h1.has_edge(0, 2));
        let h3 = g("h3:2,1");
        assert_eq!(h3.degrees(), vec![3, 1, 1, 1, 2]);
        let h6 = g("h6:a6,1,1");
        assert!(h6.has_edge(4, 0) && h6.has_edge(4, 2) && !h6.has_edge(4, 1));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "path:6",
            "kpartite:1,2,3",
            "h1:b1,1,1,0,2",
            "h3:1,1",
            "corona(path:2,empty:2)",
            "corona(kpartite:1,2,2,h4:1,1)",
            "gadget(cycle:4)",
            "sharpness:2,3,2",
            "g1:1,2",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
    }
}
