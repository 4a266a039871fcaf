//! Crossing and nesting statistics on upper diagrams.
//!
//! Two upper arcs `(u1,v1)`, `(u2,v2)` with `u1 < u2` fall into exactly one of
//! five patterns:
//!
//! | pattern         | condition                                  |
//! |-----------------|--------------------------------------------|
//! | proper crossing | `u1 < u2 < v1 < v2`                        |
//! | skew crossing   | `u2 == v1 > 0` (a positive transient)      |
//! | proper nesting  | `u1 < u2 ≤ v2 < v1`, inner arc not a loop  |
//! | skew nesting    | inner arc is a loop covered by the outer   |
//! | alignment       | everything else, including a shared negative vertex |
//!
//! `cro` and `nes` count pairs; `cro*` and `nes*` are the sizes of the largest
//! sets of pairwise crossing (nesting) arcs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permutation::{Arc, SignedPermutation, UpperDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    ProperCrossing,
    SkewCrossing,
    ProperNesting,
    SkewNesting,
    Alignment,
}

impl PatternKind {
    pub fn is_crossing(self) -> bool {
        matches!(self, PatternKind::ProperCrossing | PatternKind::SkewCrossing)
    }

    pub fn is_nesting(self) -> bool {
        matches!(self, PatternKind::ProperNesting | PatternKind::SkewNesting)
    }
}

/// A classified pair; `left` is the arc with the smaller start.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairPattern {
    pub kind: PatternKind,
    pub left: Arc,
    pub right: Arc,
}

pub fn classify_pair(a: Arc, b: Arc) -> Result<PairPattern> {
    if a == b {
        return Err(Error::SameArc);
    }
    let (left, right) = if (a.start, a.end) < (b.start, b.end) {
        (a, b)
    } else {
        (b, a)
    };
    Ok(PairPattern {
        kind: pattern_kind(left, right),
        left,
        right,
    })
}

fn pattern_kind(left: Arc, right: Arc) -> PatternKind {
    let (u1, v1, u2, v2) = (left.start, left.end, right.start, right.end);
    if u1 == u2 || v1 < u2 {
        PatternKind::Alignment
    } else if u2 == v1 {
        if v1 > 0 {
            PatternKind::SkewCrossing
        } else {
            PatternKind::Alignment
        }
    } else if v1 < v2 {
        PatternKind::ProperCrossing
    } else if right.is_loop() {
        PatternKind::SkewNesting
    } else {
        PatternKind::ProperNesting
    }
}

/// Tally of the five pair patterns over all arc pairs of a diagram.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PatternCounts {
    pub proper_crossings: usize,
    pub skew_crossings: usize,
    pub proper_nestings: usize,
    pub skew_nestings: usize,
    pub alignments: usize,
}

impl PatternCounts {
    pub fn of(diagram: &UpperDiagram) -> Self {
        let arcs = diagram.arcs();
        let mut counts = PatternCounts::default();
        for (i, &a) in arcs.iter().enumerate() {
            for &b in &arcs[i + 1..] {
                match pattern_kind(a, b) {
                    PatternKind::ProperCrossing => counts.proper_crossings += 1,
                    PatternKind::SkewCrossing => counts.skew_crossings += 1,
                    PatternKind::ProperNesting => counts.proper_nestings += 1,
                    PatternKind::SkewNesting => counts.skew_nestings += 1,
                    PatternKind::Alignment => counts.alignments += 1,
                }
            }
        }
        counts
    }

    pub fn crossings(&self) -> usize {
        self.proper_crossings + self.skew_crossings
    }

    pub fn nestings(&self) -> usize {
        self.proper_nestings + self.skew_nestings
    }
}

pub fn cro(diagram: &UpperDiagram) -> usize {
    PatternCounts::of(diagram).crossings()
}

pub fn nes(diagram: &UpperDiagram) -> usize {
    PatternCounts::of(diagram).nestings()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Crossing,
    Nesting,
}

/// A k-crossing or k-nesting, arcs sorted by start.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainWitness {
    pub kind: ChainKind,
    pub arcs: Vec<Arc>,
}

impl ChainWitness {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

/// Starts and ends strictly increasing, every start at or before every end,
/// and a vertex shared by the last start and first end must be positive.
pub fn is_crossing_chain(arcs: &[Arc]) -> bool {
    let mut sorted = arcs.to_vec();
    sorted.sort();
    if sorted.is_empty() {
        return false;
    }
    let increasing = sorted
        .windows(2)
        .all(|w| w[0].start < w[1].start && w[0].end < w[1].end);
    let last_start = sorted[sorted.len() - 1].start;
    let first_end = sorted[0].end;
    let bounded = if sorted.len() == 1 {
        true
    } else {
        last_start < first_end || (last_start == first_end && first_end > 0)
    };
    increasing && bounded
}

/// Starts strictly increasing and ends strictly decreasing.
pub fn is_nesting_chain(arcs: &[Arc]) -> bool {
    let mut sorted = arcs.to_vec();
    sorted.sort();
    if sorted.is_empty() {
        return false;
    }
    let inner = sorted[sorted.len() - 1];
    sorted
        .windows(2)
        .all(|w| w[0].start < w[1].start && w[0].end > w[1].end)
        && inner.start <= inner.end
}

/// Longest strictly increasing subsequence of `keys`, as indices.
fn longest_increasing(keys: &[i32]) -> Vec<usize> {
    let m = keys.len();
    let mut len = vec![1usize; m];
    let mut prev = vec![usize::MAX; m];
    for j in 0..m {
        for i in 0..j {
            if keys[i] < keys[j] && len[i] + 1 > len[j] {
                len[j] = len[i] + 1;
                prev[j] = i;
            }
        }
    }
    let Some(mut at) = (0..m).max_by_key(|&j| (len[j], std::cmp::Reverse(j))) else {
        return Vec::new();
    };
    let mut out = vec![at];
    while prev[at] != usize::MAX {
        at = prev[at];
        out.push(at);
    }
    out.reverse();
    out
}

/// A largest k-crossing. Every candidate (first, last) pair that crosses
/// bounds a box; arcs strictly inside the box chain by increasing ends.
pub fn max_crossing_chain(diagram: &UpperDiagram) -> ChainWitness {
    let arcs = diagram.arcs();
    let mut best: Vec<Arc> = arcs.first().copied().into_iter().collect();
    for (f, &first) in arcs.iter().enumerate() {
        for (l, &last) in arcs.iter().enumerate().skip(f + 1) {
            if !pattern_kind(first, last).is_crossing() {
                continue;
            }
            let inner: Vec<Arc> = arcs[f + 1..l]
                .iter()
                .copied()
                .filter(|a| first.end < a.end && a.end < last.end)
                .collect();
            let ends: Vec<i32> = inner.iter().map(|a| a.end).collect();
            let middle = longest_increasing(&ends);
            if middle.len() + 2 > best.len() {
                best = std::iter::once(first)
                    .chain(middle.into_iter().map(|i| inner[i]))
                    .chain(std::iter::once(last))
                    .collect();
            }
        }
    }
    ChainWitness {
        kind: ChainKind::Crossing,
        arcs: best,
    }
}

/// A largest k-nesting: nesting is strict containment, so this is the longest
/// strictly decreasing run of ends once arcs are sorted by start.
pub fn max_nesting_chain(diagram: &UpperDiagram) -> ChainWitness {
    let arcs = diagram.arcs();
    let negated_ends: Vec<i32> = arcs.iter().map(|a| -a.end).collect();
    ChainWitness {
        kind: ChainKind::Nesting,
        arcs: longest_increasing(&negated_ends).into_iter().map(|i| arcs[i]).collect(),
    }
}

pub fn cro_star(diagram: &UpperDiagram) -> usize {
    max_crossing_chain(diagram).len()
}

pub fn nes_star(diagram: &UpperDiagram) -> usize {
    max_nesting_chain(diagram).len()
}

/// Every statistic of one permutation, as reported by the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationStats {
    pub permutation: SignedPermutation,
    pub n: usize,
    pub wex: usize,
    pub neg: usize,
    pub cro: usize,
    pub nes: usize,
    pub cro_star: usize,
    pub nes_star: usize,
    pub degree_sequence: String,
}

impl PermutationStats {
    pub fn of(p: &SignedPermutation) -> Self {
        let d = p.upper_diagram();
        let counts = PatternCounts::of(&d);
        PermutationStats {
            permutation: p.clone(),
            n: p.rank(),
            wex: p.wex(),
            neg: p.neg(),
            cro: counts.crossings(),
            nes: counts.nestings(),
            cro_star: cro_star(&d),
            nes_star: nes_star(&d),
            degree_sequence: d.degree_sequence().to_string(),
        }
    }
}

/// Subset brute force for the chain statistics. Exponential; meant as an
/// independent check of [`cro_star`] and [`nes_star`].
pub mod oracle {
    use super::{is_crossing_chain, is_nesting_chain, ChainKind};
    use crate::permutation::{Arc, UpperDiagram};

    pub fn max_chain_by_subsets(diagram: &UpperDiagram, kind: ChainKind) -> usize {
        let arcs = diagram.arcs();
        assert!(arcs.len() < 24, "subset oracle is for small diagrams");
        let check = match kind {
            ChainKind::Crossing => is_crossing_chain,
            ChainKind::Nesting => is_nesting_chain,
        };
        (1u32..1 << arcs.len())
            .filter_map(|mask| {
                let subset: Vec<Arc> = (0..arcs.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| arcs[i])
                    .collect();
                check(&subset).then_some(subset.len())
            })
            .max()
            .unwrap_or(0)
    }
}
