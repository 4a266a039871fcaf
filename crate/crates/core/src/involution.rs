//! The crossing/nesting swapping involution on `B_n`.
//!
//! Three stages:
//!
//! 1. [`split`] inserts a primed companion `i'` right after every positive
//!    fixed point and every positive transient `i`. A loop `(i,i)` becomes the
//!    short arc `(i,i')`; for a transient the incoming arc is moved to `i'`
//!    and the outgoing arc stays at `i`, so the two arcs properly cross. After
//!    this every skew crossing and skew nesting is a proper one.
//! 2. [`kz_transform`] rebuilds the arcs closer by closer. At a closer `k`
//!    whose arc starts at `s`, let `γ` be the number of openers still open at
//!    `k` that lie to the right of `s`. The new arc ends at `k` and starts at
//!    the open opener having exactly `γ` open openers to its left. Crossing
//!    counts and nesting counts trade places.
//! 3. [`unsplit`] merges each `i'` back into `i`.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permutation::{Arc, SignedPermutation, UpperDiagram};

/// A vertex of a split diagram: an original vertex or the primed copy placed
/// immediately after it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Plain(i32),
    Primed(i32),
}

impl Label {
    pub fn vertex(self) -> i32 {
        match self {
            Label::Plain(v) | Label::Primed(v) => v,
        }
    }

    fn sort_key(self) -> (i32, bool) {
        (self.vertex(), matches!(self, Label::Primed(_)))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Plain(v) => write!(f, "{v}"),
            Label::Primed(v) => write!(f, "{v}'"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An arc diagram on the extended vertex line produced by [`split`].
///
/// Arcs are stored positionally: `out[p]` is the position of the closer an
/// opener at `p` is joined to, `inc[p]` the reverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitDiagram {
    n: usize,
    labels: Vec<Label>,
    out: Vec<Option<usize>>,
    inc: Vec<Option<usize>>,
    fixed: Vec<i32>,
    transients: Vec<i32>,
}

impl SplitDiagram {
    /// Builds a split diagram from explicit arcs. The primed companions are
    /// those of `fixed` and `transients`.
    pub fn from_arcs(n: usize, fixed: Vec<i32>, transients: Vec<i32>, arcs: &[(Label, Label)]) -> Result<Self> {
        let mut labels = Vec::new();
        for v in crate::permutation::vertices(n) {
            labels.push(Label::Plain(v));
            if fixed.contains(&v) || transients.contains(&v) {
                labels.push(Label::Primed(v));
            }
        }
        let position = |l: Label| {
            labels
                .binary_search(&l)
                .map_err(|_| Error::InconsistentDiagram(format!("unknown vertex {l}")))
        };
        let mut out = vec![None; labels.len()];
        let mut inc = vec![None; labels.len()];
        for &(s, e) in arcs {
            let (ps, pe) = (position(s)?, position(e)?);
            if ps >= pe {
                return Err(Error::InconsistentDiagram(format!(
                    "arc ({s},{e}) does not point right"
                )));
            }
            if out[ps].replace(pe).is_some() || inc[pe].replace(ps).is_some() {
                return Err(Error::InconsistentDiagram(format!(
                    "vertex degree exceeds one at ({s},{e})"
                )));
            }
        }
        Ok(SplitDiagram {
            n,
            labels,
            out,
            inc,
            fixed,
            transients,
        })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn arcs(&self) -> Vec<(Label, Label)> {
        self.out
            .iter()
            .enumerate()
            .filter_map(|(p, &c)| c.map(|c| (self.labels[p], self.labels[c])))
            .collect()
    }

    /// Positive fixed points that were split.
    pub fn fixed(&self) -> &[i32] {
        &self.fixed
    }

    /// Positive transients that were split.
    pub fn transients(&self) -> &[i32] {
        &self.transients
    }

    fn position(&self, label: Label) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// Openers left of `closer` that are still open there, including the
    /// closer's own partner, in left-to-right order.
    pub fn available_openers(&self, closer: Label) -> Result<Vec<Label>> {
        let k = self
            .position(closer)
            .filter(|&k| self.inc[k].is_some())
            .ok_or_else(|| Error::NotACloser(closer.to_string()))?;
        Ok(self.open_at(k).into_iter().map(|p| self.labels[p]).collect())
    }

    fn open_at(&self, k: usize) -> Vec<usize> {
        (0..k).filter(|&j| self.out[j].is_some_and(|c| c >= k)).collect()
    }

    /// `(δ, γ)` of the arc ending at `closer`: open openers left and right of
    /// its start.
    pub fn vacancy(&self, closer: Label) -> Result<(usize, usize)> {
        let k = self
            .position(closer)
            .filter(|&k| self.inc[k].is_some())
            .ok_or_else(|| Error::NotACloser(closer.to_string()))?;
        Ok(self.vacancy_at(k))
    }

    fn vacancy_at(&self, k: usize) -> (usize, usize) {
        let s = self.inc[k].expect("closer");
        let open = self.open_at(k);
        let delta = open.iter().filter(|&&j| j < s).count();
        let gamma = open.iter().filter(|&&j| j > s).count();
        debug_assert_eq!(delta + gamma + 1, open.len());
        (delta, gamma)
    }
}

/// Replaces loops and positive transients by proper arcs on primed
/// companions. Negative transients are left as they are.
pub fn split(diagram: &UpperDiagram) -> SplitDiagram {
    let fixed = diagram.fixed_points();
    let transients = diagram.positive_transients();
    let is_split = |v: i32| v > 0 && (fixed.contains(&v) || transients.contains(&v));
    let arcs: Vec<(Label, Label)> = diagram
        .arcs()
        .iter()
        .map(|a| {
            let end = if is_split(a.end) {
                Label::Primed(a.end)
            } else {
                Label::Plain(a.end)
            };
            (Label::Plain(a.start), end)
        })
        .collect();
    SplitDiagram::from_arcs(diagram.rank(), fixed, transients, &arcs).expect("split of a valid diagram")
}

/// Merges every primed companion back into its vertex.
pub fn unsplit(split: &SplitDiagram) -> Result<UpperDiagram> {
    let mut arcs = Vec::with_capacity(split.n);
    for (s, e) in split.arcs() {
        if let Label::Primed(v) = s {
            return Err(Error::UnmergeablePair(v));
        }
        arcs.push(Arc::new(s.vertex(), e.vertex()));
    }
    UpperDiagram::new(split.n, arcs).map_err(|_| {
        let culprit = split.fixed.iter().chain(&split.transients).copied().next().unwrap_or(0);
        Error::UnmergeablePair(culprit)
    })
}

/// The rerouting involution on split diagrams.
pub fn kz_transform(split: &SplitDiagram) -> Result<SplitDiagram> {
    let m = split.labels.len();
    let mut out = vec![None; m];
    let mut inc = vec![None; m];
    for (k, partner) in split.inc.iter().enumerate() {
        if partner.is_none() {
            continue;
        }
        let available = split.open_at(k);
        let (_, gamma) = split.vacancy_at(k);
        let unmatched: Vec<usize> = (0..k).filter(|&j| split.out[j].is_some() && out[j].is_none()).collect();
        if unmatched.len() != available.len() {
            return Err(Error::Desynchronized(split.labels[k].to_string()));
        }
        let t = unmatched[gamma];
        out[t] = Some(k);
        inc[k] = Some(t);
    }
    Ok(SplitDiagram {
        n: split.n,
        labels: split.labels.clone(),
        out,
        inc,
        fixed: split.fixed.clone(),
        transients: split.transients.clone(),
    })
}

/// Split, reroute and merge: an involution on `B_n` exchanging `cro` and
/// `nes` and keeping `wex`, `neg` and the degree sequence.
pub fn crossing_nesting_involution(p: &SignedPermutation) -> Result<SignedPermutation> {
    let image = unsplit(&kz_transform(&split(&p.upper_diagram()))?)?;
    SignedPermutation::from_upper(&image)
}
