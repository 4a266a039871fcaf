//! Signed permutations and their upper arc diagrams.
//!
//! A signed permutation `σ` of rank `n` acts on `[-n, n] \ {0}` through
//! `σ(-i) = -σ(i)`. Its diagram draws an arc `i → σ(i)` above the line when
//! `i ≤ σ(i)` and below otherwise. The lower half mirrors the upper half, so
//! the upper arcs alone determine `σ` and are the only thing stored here.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// An element of the hyperoctahedral group `B_n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    values: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(values: Vec<i32>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::RankViolation(0));
        }
        if let Some(pos) = values.iter().position(|&v| v == 0) {
            return Err(Error::ZeroEntry(pos + 1));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let m = v.unsigned_abs() as usize;
            if m > n || seen[m] {
                return Err(Error::RankViolation(n));
            }
            seen[m] = true;
        }
        Ok(SignedPermutation { values })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            values: (1..=n as i32).collect(),
        }
    }

    /// The unique permutation of rank `n` whose upper arcs all pairwise cross:
    /// `σ(i) = i - (n + 1)`.
    pub fn full_crossing(n: usize) -> Self {
        let n = n as i32;
        SignedPermutation {
            values: (1..=n).map(|i| i - (n + 1)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// `σ(i)` for any `i` in `[-n, n] \ {0}`.
    pub fn at(&self, i: i32) -> Result<i32> {
        let n = self.rank();
        let m = i.unsigned_abs() as usize;
        if i == 0 || m > n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        let v = self.values[m - 1];
        Ok(if i > 0 { v } else { -v })
    }

    /// Number of negative entries in one-line notation.
    pub fn neg(&self) -> usize {
        self.values.iter().filter(|&&v| v < 0).count()
    }

    /// Number of weak exceedances `σ(j) ≥ j`, `j ∈ [n]`.
    pub fn wex(&self) -> usize {
        self.values.iter().zip(1..).filter(|&(&v, j)| v >= j).count()
    }

    pub fn upper_diagram(&self) -> UpperDiagram {
        let n = self.rank() as i32;
        let mut arcs = Vec::with_capacity(self.rank());
        for i in (-n..=n).filter(|&i| i != 0) {
            let image = if i > 0 {
                self.values[(i - 1) as usize]
            } else {
                -self.values[(-i - 1) as usize]
            };
            // negative fixed vertices carry no loop
            if i < image || (i == image && i > 0) {
                arcs.push(Arc::new(i, image));
            }
        }
        UpperDiagram { n: self.rank(), arcs }
    }

    /// Inverse of [`SignedPermutation::upper_diagram`].
    pub fn from_upper(diagram: &UpperDiagram) -> Result<Self> {
        let n = diagram.n;
        let mut values = vec![0i32; n];
        for arc in &diagram.arcs {
            let m = arc.start.unsigned_abs() as usize;
            if m == 0 || m > n {
                return Err(Error::InconsistentDiagram(format!(
                    "arc {arc} starts outside the vertex range"
                )));
            }
            if values[m - 1] != 0 {
                return Err(Error::InconsistentDiagram(format!("both {m} and -{m} start an arc")));
            }
            values[m - 1] = if arc.start > 0 { arc.end } else { -arc.end };
        }
        if let Some(pos) = values.iter().position(|&v| v == 0) {
            return Err(Error::InconsistentDiagram(format!(
                "neither {0} nor -{0} starts an arc",
                pos + 1
            )));
        }
        SignedPermutation::new(values)
            .map_err(|e| Error::InconsistentDiagram(format!("arc ends do not form a permutation: {e}")))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses one-line notation such as `4,-6,3,5,1,-2`. Surrounding
    /// parentheses, whitespace and the unicode minus sign are accepted.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let text = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(text);
        let values = text
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.replace('\u{2212}', "-")
                    .parse::<i32>()
                    .map_err(|_| Error::MalformedToken(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(values)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, v) in self.values.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An arc of the upper diagram; `start == end` is a loop at a fixed point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Arc {
    pub start: i32,
    pub end: i32,
}

impl Arc {
    pub const fn new(start: i32, end: i32) -> Self {
        Arc { start, end }
    }

    pub fn is_loop(&self) -> bool {
        self.start == self.end
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.end)
    }
}

/// The arcs drawn above the line, sorted by start.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpperDiagram {
    n: usize,
    arcs: Vec<Arc>,
}

impl UpperDiagram {
    /// Builds a diagram from arbitrary arcs, checking every structural
    /// invariant of an upper permutation diagram.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self> {
        let mut arcs: Vec<Arc> = arcs.into_iter().collect();
        arcs.sort();
        if arcs.len() != n {
            return Err(Error::InconsistentDiagram(format!(
                "expected {n} arcs, found {}",
                arcs.len()
            )));
        }
        let bound = n as i32;
        let in_range = |v: i32| v != 0 && v.abs() <= bound;
        let mut starts = BTreeSet::new();
        let mut ends = BTreeSet::new();
        for arc in &arcs {
            if !in_range(arc.start) || !in_range(arc.end) {
                return Err(Error::InconsistentDiagram(format!("arc {arc} leaves the vertex range")));
            }
            if arc.start > arc.end {
                return Err(Error::InconsistentDiagram(format!("arc {arc} is not an upper arc")));
            }
            if arc.is_loop() && arc.start < 0 {
                return Err(Error::InconsistentDiagram(format!("loop {arc} at a negative vertex")));
            }
            if !starts.insert(arc.start) || !ends.insert(arc.end) {
                return Err(Error::InconsistentDiagram(format!(
                    "vertex degree exceeds one at {arc}"
                )));
            }
        }
        let diagram = UpperDiagram { n, arcs };
        // ends and starts must each pick one of ±m for every magnitude
        SignedPermutation::from_upper(&diagram)?;
        Ok(diagram)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Vertices in the natural order `-n < … < -1 < 1 < … < n`.
    pub fn vertices(&self) -> impl Iterator<Item = i32> {
        vertices(self.n)
    }

    pub fn arc_from(&self, v: i32) -> Option<Arc> {
        self.arcs.iter().copied().find(|a| a.start == v)
    }

    pub fn arc_into(&self, v: i32) -> Option<Arc> {
        self.arcs.iter().copied().find(|a| a.end == v)
    }

    pub fn vertex_kind(&self, v: i32) -> VertexKind {
        match (self.arc_into(v), self.arc_from(v)) {
            (None, None) => VertexKind::Isolated,
            (None, Some(_)) => VertexKind::Opener,
            (Some(_), None) => VertexKind::Closer,
            (Some(a), Some(_)) if a.is_loop() => VertexKind::Fixed,
            (Some(_), Some(_)) => VertexKind::Transient,
        }
    }

    pub fn vertex_kinds(&self) -> Vec<(i32, VertexKind)> {
        self.vertices().map(|v| (v, self.vertex_kind(v))).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence {
            entries: self.vertices().map(|v| self.vertex_kind(v).degree()).collect(),
        }
    }

    /// Positive fixed points, the loops of the diagram.
    pub fn fixed_points(&self) -> Vec<i32> {
        self.arcs.iter().filter(|a| a.is_loop()).map(|a| a.start).collect()
    }

    /// Positive vertices entered by one arc and left by another.
    pub fn positive_transients(&self) -> Vec<i32> {
        self.vertices()
            .filter(|&v| v > 0 && self.vertex_kind(v) == VertexKind::Transient)
            .collect()
    }

    /// Arcs from a negative vertex to a positive one; equals `neg(σ)`.
    pub fn sign_changing_arcs(&self) -> usize {
        self.arcs.iter().filter(|a| a.start < 0 && a.end > 0).count()
    }

    pub fn to_permutation(&self) -> SignedPermutation {
        SignedPermutation::from_upper(self).expect("validated diagram")
    }
}

pub(crate) fn vertices(n: usize) -> impl Iterator<Item = i32> {
    let n = n as i32;
    (-n..=n).filter(|&v| v != 0)
}

/// How a vertex meets the upper arcs, by (indegree, outdegree).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Isolated,
    Opener,
    Closer,
    Transient,
    Fixed,
}

impl VertexKind {
    pub fn degree(self) -> (u8, u8) {
        match self {
            VertexKind::Isolated => (0, 0),
            VertexKind::Opener => (0, 1),
            VertexKind::Closer => (1, 0),
            VertexKind::Transient | VertexKind::Fixed => (1, 1),
        }
    }

    pub fn opens(self) -> bool {
        self.degree().1 == 1
    }

    pub fn closes(self) -> bool {
        self.degree().0 == 1
    }
}

/// Per-vertex (indegree, outdegree) pairs in vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    entries: Vec<(u8, u8)>,
}

impl DegreeSequence {
    pub fn entries(&self) -> &[(u8, u8)] {
        &self.entries
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.entries.iter().try_for_each(|(a, b)| write!(f, "({a},{b})"))
    }
}

impl Serialize for DegreeSequence {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
