//! 0/1 fillings of Young diagrams and the chain-interchanging map.
//!
//! List the closers `i_1 < … < i_c` and openers `j_1 < … < j_c` of an upper
//! diagram in vertex order; a positive transient or fixed vertex is both. Row
//! `r` (counted from the top) belongs to closer `i_{c-r+1}` and has length
//! `p(i)`: the number of openers left of `i`, plus one when `i` is a positive
//! transient or fixed vertex so that its own opener column is reachable. An
//! arc `j_s → i_r` puts a 1 in row `c - r + 1`, column `s`.
//!
//! Under this map a k-nesting is an identity pattern `I_k` and a k-crossing an
//! anti-identity `J_k`, in both cases with the bounding rectangle inside the
//! shape.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::permutation::{Arc, SignedPermutation, UpperDiagram, VertexKind};

/// A cell, 1-indexed, row 1 at the top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

fn inside(shape: &[usize], cell: Cell) -> bool {
    cell.row >= 1 && cell.col >= 1 && shape.get(cell.row - 1).is_some_and(|&len| cell.col <= len)
}

fn check_shape(shape: &[usize]) -> Result<()> {
    if shape.contains(&0) {
        return Err(Error::InvalidShape("row lengths must be positive".into()));
    }
    if shape.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidShape("row lengths must be weakly decreasing".into()));
    }
    Ok(())
}

/// Shape together with the closer (row) and opener (column) labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Frame {
    pub shape: Vec<usize>,
    pub openers: Vec<i32>,
    pub closers: Vec<i32>,
}

pub fn young_shape(diagram: &UpperDiagram) -> Frame {
    let mut openers = Vec::new();
    let mut closers = Vec::new();
    let mut lengths = Vec::new();
    for (v, kind) in diagram.vertex_kinds() {
        let self_cell = v > 0 && matches!(kind, VertexKind::Transient | VertexKind::Fixed);
        if kind.closes() {
            closers.push(v);
            lengths.push(openers.len() + usize::from(self_cell));
        }
        if kind.opens() {
            openers.push(v);
        }
    }
    lengths.reverse();
    Frame {
        shape: lengths,
        openers,
        closers,
    }
}

/// A 0/1 filling with exactly one 1 per row and at most one per column,
/// carrying the vertex labels of its rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungFilling {
    shape: Vec<usize>,
    ones: BTreeSet<Cell>,
    openers: Vec<i32>,
    closers: Vec<i32>,
}

impl YoungFilling {
    pub fn new(
        shape: Vec<usize>,
        ones: impl IntoIterator<Item = Cell>,
        openers: Vec<i32>,
        closers: Vec<i32>,
    ) -> Result<Self> {
        check_shape(&shape)?;
        let ones: BTreeSet<Cell> = ones.into_iter().collect();
        if let Some(&cell) = ones.iter().find(|&&c| !inside(&shape, c)) {
            return Err(Error::CellOutsideShape {
                row: cell.row,
                col: cell.col,
            });
        }
        let mut row_count = vec![0usize; shape.len()];
        let mut col_count = vec![0usize; shape.first().copied().unwrap_or(0)];
        for c in &ones {
            row_count[c.row - 1] += 1;
            col_count[c.col - 1] += 1;
        }
        if let Some(r) = row_count.iter().position(|&x| x != 1) {
            return Err(Error::RowColumnSumViolation(format!(
                "row {} has {} ones",
                r + 1,
                row_count[r]
            )));
        }
        if let Some(c) = col_count.iter().position(|&x| x > 1) {
            return Err(Error::RowColumnSumViolation(format!(
                "column {} has {} ones",
                c + 1,
                col_count[c]
            )));
        }
        Ok(YoungFilling {
            shape,
            ones,
            openers,
            closers,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn ones(&self) -> impl Iterator<Item = Cell> + '_ {
        self.ones.iter().copied()
    }

    pub fn openers(&self) -> &[i32] {
        &self.openers
    }

    pub fn closers(&self) -> &[i32] {
        &self.closers
    }

    pub fn rows(&self) -> usize {
        self.shape.len()
    }

    fn cells(&self) -> Vec<Cell> {
        self.ones.iter().copied().collect()
    }

    fn with_cells(&self, cells: impl IntoIterator<Item = Cell>) -> Self {
        YoungFilling {
            ones: cells.into_iter().collect(),
            ..self.clone()
        }
    }
}

/// The diagram-to-filling bijection.
pub fn xi(diagram: &UpperDiagram) -> Result<YoungFilling> {
    let frame = young_shape(diagram);
    let c = frame.closers.len();
    let mut ones = Vec::with_capacity(c);
    for arc in diagram.arcs() {
        let s = frame
            .openers
            .binary_search(&arc.start)
            .expect("arc starts at an opener")
            + 1;
        let r = frame.closers.binary_search(&arc.end).expect("arc ends at a closer") + 1;
        let cell = Cell::new(c - r + 1, s);
        if !inside(&frame.shape, cell) {
            return Err(Error::CellOutsideShape {
                row: cell.row,
                col: cell.col,
            });
        }
        ones.push(cell);
    }
    YoungFilling::new(frame.shape, ones, frame.openers, frame.closers)
}

pub fn xi_inverse(filling: &YoungFilling) -> Result<UpperDiagram> {
    let c = filling.rows();
    if filling.closers.len() != c || filling.openers.len() != filling.shape.first().copied().unwrap_or(0) {
        return Err(Error::MalformedFilling(
            "opener/closer labels do not match the shape".into(),
        ));
    }
    if filling.ones.len() != filling.openers.len() {
        return Err(Error::RowColumnSumViolation("some column has no 1".into()));
    }
    let arcs = filling
        .ones
        .iter()
        .map(|cell| Arc::new(filling.openers[cell.col - 1], filling.closers[c - cell.row]));
    UpperDiagram::new(c, arcs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FillingPattern {
    /// Rows increase with columns; a nesting.
    Identity,
    /// Rows decrease with columns; a crossing.
    AntiIdentity,
}

/// `k` ones forming `I_k` or `J_k`, cells sorted by column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternOccurrence {
    pub kind: FillingPattern,
    pub cells: Vec<Cell>,
}

impl PatternOccurrence {
    pub fn k(&self) -> usize {
        self.cells.len()
    }
}

fn precedes(kind: FillingPattern, q: Cell, p: Cell) -> bool {
    q.col < p.col
        && match kind {
            FillingPattern::Identity => q.row < p.row,
            FillingPattern::AntiIdentity => q.row > p.row,
        }
}

/// Checks that `cells` (any order) form the pattern and that the rectangle
/// spanned by the deepest row and the rightmost column lies in the shape.
pub fn is_occurrence(shape: &[usize], cells: &[Cell], kind: FillingPattern) -> bool {
    if cells.is_empty() {
        return false;
    }
    let mut sorted = cells.to_vec();
    sorted.sort_by_key(|c| (c.col, c.row));
    let chained = sorted.windows(2).all(|w| precedes(kind, w[0], w[1]));
    let corner = Cell::new(
        sorted.iter().map(|c| c.row).max().unwrap(),
        sorted.iter().map(|c| c.col).max().unwrap(),
    );
    chained && inside(shape, corner)
}

/// Largest occurrence of `kind` among `cells`. Ties go to the occurrence with
/// the lexicographically rightmost columns (compared from the right), then the
/// topmost rows.
pub fn max_occurrence(shape: &[usize], cells: &[Cell], kind: FillingPattern) -> Vec<Cell> {
    let mut points = cells.to_vec();
    points.sort_by_key(|c| (c.col, c.row));
    // candidate last cells, rightmost first, topmost among equals
    let mut lasts = points.clone();
    lasts.sort_by_key(|c| (std::cmp::Reverse(c.col), c.row));

    let mut best: Vec<Cell> = Vec::new();
    for &last in &lasts {
        // For J_k the deepest row is the first cell's, so every cell must
        // reach the last column. For I_k the last cell is the corner itself.
        let pool: Vec<Cell> = points
            .iter()
            .copied()
            .filter(|&q| q == last || (precedes(kind, q, last) && inside(shape, Cell::new(q.row, last.col))))
            .collect();
        let mut len = vec![1usize; pool.len()];
        for j in 0..pool.len() {
            for i in 0..j {
                if precedes(kind, pool[i], pool[j]) {
                    len[j] = len[j].max(len[i] + 1);
                }
            }
        }
        let at = pool.iter().position(|&q| q == last).expect("last is in its pool");
        let k = len[at];
        if k <= best.len() {
            continue;
        }
        let mut chain = vec![last];
        let mut current = last;
        for remaining in (1..k).rev() {
            let next = (0..pool.len())
                .filter(|&i| len[i] >= remaining && precedes(kind, pool[i], current))
                .max_by_key(|&i| (pool[i].col, std::cmp::Reverse(pool[i].row)))
                .expect("chain length is achievable");
            current = pool[next];
            chain.push(current);
        }
        chain.reverse();
        best = chain;
    }
    best
}

pub fn find_max_pattern(filling: &YoungFilling, kind: FillingPattern) -> PatternOccurrence {
    PatternOccurrence {
        kind,
        cells: max_occurrence(&filling.shape, &filling.cells(), kind),
    }
}

fn validate_occurrence(filling: &YoungFilling, occ: &PatternOccurrence, kind: FillingPattern) -> Result<Vec<Cell>> {
    if occ.kind != kind {
        return Err(Error::InvalidOccurrence(format!(
            "expected {kind:?}, got {:?}",
            occ.kind
        )));
    }
    if let Some(c) = occ.cells.iter().find(|c| !filling.ones.contains(c)) {
        return Err(Error::InvalidOccurrence(format!(
            "cell ({},{}) holds no 1",
            c.row, c.col
        )));
    }
    if !is_occurrence(&filling.shape, &occ.cells, kind) {
        return Err(Error::InvalidOccurrence(
            "cells do not form the pattern inside the shape".into(),
        ));
    }
    let mut cells = occ.cells.clone();
    cells.sort_by_key(|c| c.col);
    Ok(cells)
}

/// Moves the rows of the first `len` cells (sorted by column) one place left
/// (`left = true`) or right, keeping the columns.
fn rotate_rows(cells: &[Cell], len: usize, left: bool) -> Vec<Cell> {
    let mut rows: Vec<usize> = cells.iter().map(|c| c.row).collect();
    if left {
        rows[..len].rotate_left(1);
    } else {
        rows[..len].rotate_right(1);
    }
    cells.iter().zip(rows).map(|(c, row)| Cell::new(row, c.col)).collect()
}

fn replace(filling: &YoungFilling, old: &[Cell], new: &[Cell]) -> YoungFilling {
    let mut ones = filling.ones.clone();
    for c in old {
        ones.remove(c);
    }
    ones.extend(new.iter().copied());
    filling.with_cells(ones)
}

/// One move on `J_k` with cells `(l_1,c_1) … (l_k,c_k)` from bottom-left to
/// top-right: the ones go to `(l_2,c_1) … (l_k,c_{k-1}), (l_1,c_k)`.
pub fn anti_to_identity_step(filling: &YoungFilling, occ: &PatternOccurrence) -> Result<YoungFilling> {
    let cells = validate_occurrence(filling, occ, FillingPattern::AntiIdentity)?;
    let moved = rotate_rows(&cells, cells.len(), true);
    Ok(replace(filling, &cells, &moved))
}

/// One move on `I_k` with cells `(a_1,b_1) … (a_k,b_k)`: the ones go to
/// `(a_2,b_1), (a_1,b_2), (a_3,b_3) … (a_k,b_k)`.
pub fn identity_to_anti_step(filling: &YoungFilling, occ: &PatternOccurrence) -> Result<YoungFilling> {
    let cells = validate_occurrence(filling, occ, FillingPattern::Identity)?;
    let moved = rotate_rows(&cells, cells.len().min(2), false);
    Ok(replace(filling, &cells, &moved))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PsiDirection {
    AntiToIdentity,
    IdentityToAnti,
}

/// One full conversion of a maximal pattern, as recorded in the trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiMove {
    pub direction: PsiDirection,
    pub before: Vec<Cell>,
    pub after: Vec<Cell>,
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiOutcome {
    pub filling: YoungFilling,
    pub trace: Vec<PsiMove>,
    pub steps: usize,
}

/// `4^rows`, saturating.
pub fn default_budget(rows: usize) -> usize {
    4usize.checked_pow(rows as u32).unwrap_or(usize::MAX)
}

fn maxima(filling: &YoungFilling) -> (usize, usize) {
    let cells = filling.cells();
    (
        max_occurrence(&filling.shape, &cells, FillingPattern::AntiIdentity).len(),
        max_occurrence(&filling.shape, &cells, FillingPattern::Identity).len(),
    )
}

/// Interchanges the largest anti-identity and identity sizes.
///
/// With `(a, b)` the initial (anti-identity, identity) maxima, the current
/// maximal `J` is turned into an `I` by successive moves `J_k → J_{k-1} → …`
/// (or a maximal `I` into a `J`) until the maxima read `(b, a)`. Each single
/// move counts against `max_steps`; revisiting a filling is reported as a
/// stall.
pub fn interchange_psi(filling: &YoungFilling, max_steps: usize) -> Result<PsiOutcome> {
    let (a, b) = maxima(filling);
    let target = (b, a);
    let mut current = filling.clone();
    let mut trace = Vec::new();
    let mut steps = 0usize;
    let mut seen = HashSet::new();
    loop {
        let (x, y) = maxima(&current);
        if (x, y) == target {
            return Ok(PsiOutcome {
                filling: current,
                trace,
                steps,
            });
        }
        if !seen.insert(current.ones.clone()) {
            return Err(Error::InterchangeStalled { trace });
        }
        let direction = if x > b || (x == b && y < a) {
            PsiDirection::AntiToIdentity
        } else {
            PsiDirection::IdentityToAnti
        };
        let kind = match direction {
            PsiDirection::AntiToIdentity => FillingPattern::AntiIdentity,
            PsiDirection::IdentityToAnti => FillingPattern::Identity,
        };
        let before = max_occurrence(&current.shape, &current.cells(), kind);
        let k = before.len();
        let mut cells = before.clone();
        for m in 2..=k {
            if steps == max_steps {
                return Err(Error::StepBudgetExhausted {
                    budget: max_steps,
                    trace,
                });
            }
            steps += 1;
            cells = match direction {
                PsiDirection::AntiToIdentity => rotate_rows(&cells, k + 2 - m, true),
                PsiDirection::IdentityToAnti => rotate_rows(&cells, m, false),
            };
        }
        current = replace(&current, &before, &cells);
        trace.push(PsiMove {
            direction,
            before,
            after: cells,
            steps: k.saturating_sub(1),
        });
    }
}

pub fn theta_with_budget(p: &SignedPermutation, max_steps: usize) -> Result<SignedPermutation> {
    let filling = xi(&p.upper_diagram())?;
    let outcome = interchange_psi(&filling, max_steps)?;
    SignedPermutation::from_upper(&xi_inverse(&outcome.filling)?)
}

/// Diagram → filling → interchange → diagram.
pub fn theta(p: &SignedPermutation) -> Result<SignedPermutation> {
    let rows = young_shape(&p.upper_diagram()).shape.len();
    theta_with_budget(p, default_budget(rows))
}

/// Number of 0/1 fillings of `shape` with the given row and column sums that
/// contain no occurrence of `kind` of size `k`.
pub fn count_avoiders(
    shape: &[usize],
    row_sums: &[usize],
    col_sums: &[usize],
    k: usize,
    kind: FillingPattern,
) -> Result<u64> {
    check_shape(shape)?;
    let width = shape.first().copied().unwrap_or(0);
    if row_sums.len() != shape.len() || col_sums.len() != width {
        return Err(Error::InfeasibleSums("sum vectors do not match the shape".into()));
    }
    if let Some(r) = (0..shape.len()).find(|&r| row_sums[r] > shape[r]) {
        return Err(Error::InfeasibleSums(format!(
            "row {} cannot hold {} ones",
            r + 1,
            row_sums[r]
        )));
    }
    for (c, &sum) in col_sums.iter().enumerate() {
        let height = shape.iter().filter(|&&len| len > c).count();
        if sum > height {
            return Err(Error::InfeasibleSums(format!(
                "column {} cannot hold {sum} ones",
                c + 1
            )));
        }
    }
    if row_sums.iter().sum::<usize>() != col_sums.iter().sum::<usize>() {
        return Err(Error::InfeasibleSums("row and column totals differ".into()));
    }
    if k == 0 {
        return Ok(0);
    }

    struct Search<'a> {
        shape: &'a [usize],
        row_sums: &'a [usize],
        k: usize,
        kind: FillingPattern,
    }

    impl Search<'_> {
        fn run(&self, row: usize, cells: &mut Vec<Cell>, col_left: &mut [usize]) -> u64 {
            if row == self.shape.len() {
                return u64::from(col_left.iter().all(|&c| c == 0));
            }
            let mut total = 0;
            let open: Vec<usize> = (1..=self.shape[row]).filter(|&c| col_left[c - 1] > 0).collect();
            for choice in open.into_iter().combinations(self.row_sums[row]) {
                let mark = cells.len();
                for &c in &choice {
                    col_left[c - 1] -= 1;
                    cells.push(Cell::new(row + 1, c));
                }
                // occurrences only grow as ones are added
                if max_occurrence(self.shape, cells, self.kind).len() < self.k {
                    total += self.run(row + 1, cells, col_left);
                }
                cells.truncate(mark);
                for &c in &choice {
                    col_left[c - 1] += 1;
                }
            }
            total
        }
    }

    let search = Search {
        shape,
        row_sums,
        k,
        kind,
    };
    Ok(search.run(0, &mut Vec::new(), &mut col_sums.to_vec()))
}

fn join(values: &[impl fmt::Display]) -> String {
    values.iter().join(",")
}

/// Text form: the shape line, one `row,col` line per 1, then the opener and
/// closer labels as `# openers:` / `# closers:` lines.
impl fmt::Display for YoungFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", join(&self.shape))?;
        for c in &self.ones {
            writeln!(f, "{},{}", c.row, c.col)?;
        }
        writeln!(f, "# openers: {}", join(&self.openers))?;
        writeln!(f, "# closers: {}", join(&self.closers))
    }
}

impl FromStr for YoungFilling {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        fn numbers<T: FromStr>(line: &str) -> Result<Vec<T>> {
            let line = line.trim();
            if line.is_empty() {
                return Ok(Vec::new());
            }
            line.split(',')
                .map(|t| {
                    t.trim()
                        .parse()
                        .map_err(|_| Error::MalformedFilling(format!("bad number `{}`", t.trim())))
                })
                .collect()
        }

        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let shape: Vec<usize> = numbers(
            lines
                .next()
                .ok_or_else(|| Error::MalformedFilling("empty input".into()))?,
        )?;
        let mut ones = Vec::new();
        let mut openers = Vec::new();
        let mut closers = Vec::new();
        for line in lines {
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                if let Some(list) = rest.strip_prefix("openers:") {
                    openers = numbers(list)?;
                } else if let Some(list) = rest.strip_prefix("closers:") {
                    closers = numbers(list)?;
                }
                continue;
            }
            match numbers::<usize>(line)?[..] {
                [row, col] => ones.push(Cell::new(row, col)),
                _ => return Err(Error::MalformedFilling(format!("expected `row,col`, got `{line}`"))),
            }
        }
        YoungFilling::new(shape, ones, openers, closers)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statistics::{cro_star, nes_star};

    fn perm(text: &str) -> SignedPermutation {
        text.parse().unwrap()
    }

    fn cells(pairs: &[(usize, usize)]) -> Vec<Cell> {
        pairs.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    fn two_full_chain_filling() -> YoungFilling {
        xi(&perm("4,5,6,2,-3,-1").upper_diagram()).unwrap()
    }

    /// Square filling with the given cells and dummy labels.
    fn square(size: usize, ones: &[(usize, usize)]) -> YoungFilling {
        let labels: Vec<i32> = (1..=size as i32).collect();
        YoungFilling::new(vec![size; size], cells(ones), labels.clone(), labels).unwrap()
    }

    #[test]
    fn shape_examples() {
        let frame = young_shape(&perm("4,5,6,2,-3,-1").upper_diagram());
        assert_eq!(frame.shape, vec![6, 6, 6, 6, 4, 3]);
        assert_eq!(frame.closers, vec![-2, 1, 3, 4, 5, 6]);
        assert_eq!(frame.openers, vec![-6, -5, -4, 1, 2, 3]);
        assert_eq!(
            young_shape(&SignedPermutation::identity(1).upper_diagram()).shape,
            vec![1]
        );
        let d = UpperDiagram::new(2, [Arc::new(-2, 1), Arc::new(-1, 2)]).unwrap();
        assert_eq!(young_shape(&d).shape, vec![2, 2]);
    }

    #[test]
    fn negative_transient_gets_no_self_cell() {
        // (-2,1): arcs (-2,-1) and (-1,2) meet at the negative transient -1
        let frame = young_shape(&perm("-2,1").upper_diagram());
        assert_eq!(frame.closers, vec![-1, 2]);
        assert_eq!(frame.openers, vec![-2, -1]);
        assert_eq!(frame.shape, vec![2, 1]);
    }

    #[test]
    fn xi_examples() {
        let f = two_full_chain_filling();
        assert_eq!(f.cells(), cells(&[(1, 6), (2, 5), (3, 4), (4, 2), (5, 1), (6, 3)]));
        let f = xi(&SignedPermutation::identity(1).upper_diagram()).unwrap();
        assert_eq!(f.cells(), cells(&[(1, 1)]));
        let d = UpperDiagram::new(2, [Arc::new(-2, 1), Arc::new(-1, 2)]).unwrap();
        let f = xi(&d).unwrap();
        assert_eq!(f.cells(), cells(&[(1, 2), (2, 1)]));
        assert_eq!(find_max_pattern(&f, FillingPattern::AntiIdentity).k(), 2);
    }

    #[test]
    fn xi_inverse_examples() {
        let d = perm("4,5,6,2,-3,-1").upper_diagram();
        assert_eq!(xi_inverse(&xi(&d).unwrap()).unwrap(), d);
        let f = YoungFilling::new(vec![1], cells(&[(1, 1)]), vec![1], vec![1]).unwrap();
        assert_eq!(xi_inverse(&f).unwrap().arcs(), &[Arc::new(1, 1)]);
        // missing column
        let f = YoungFilling::new(vec![2, 2], cells(&[(1, 1), (2, 1)]), vec![1, 2], vec![1, 2]);
        assert!(matches!(f, Err(Error::RowColumnSumViolation(_))));
    }

    #[test]
    fn filling_rejects_cells_outside() {
        let f = YoungFilling::new(vec![2, 1], cells(&[(1, 1), (2, 2)]), vec![], vec![]);
        assert_eq!(f, Err(Error::CellOutsideShape { row: 2, col: 2 }));
        assert!(matches!(
            YoungFilling::new(vec![1, 2], vec![], vec![], vec![]),
            Err(Error::InvalidShape(_))
        ));
    }

    #[test]
    fn max_patterns_of_example_two() {
        let f = two_full_chain_filling();
        let anti = find_max_pattern(&f, FillingPattern::AntiIdentity);
        // the 4-crossing (-5,3),(1,4),(2,5),(3,6)
        assert_eq!(anti.cells, cells(&[(4, 2), (3, 4), (2, 5), (1, 6)]));
        let id = find_max_pattern(&f, FillingPattern::Identity);
        assert_eq!(id.k(), 2);
        assert!(is_occurrence(f.shape(), &id.cells, FillingPattern::Identity));
        let single = square(1, &[(1, 1)]);
        assert_eq!(find_max_pattern(&single, FillingPattern::Identity).k(), 1);
        assert_eq!(find_max_pattern(&single, FillingPattern::AntiIdentity).k(), 1);
    }

    #[test]
    fn tie_break_prefers_right_then_top() {
        // (2,1),(1,2) and (4,3),(3,4) are both J_2; the right one wins
        let f = square(4, &[(2, 1), (1, 2), (4, 3), (3, 4)]);
        assert_eq!(
            find_max_pattern(&f, FillingPattern::AntiIdentity).cells,
            cells(&[(4, 3), (3, 4)])
        );
    }

    #[test]
    fn moves_on_small_squares() {
        let f = square(2, &[(2, 1), (1, 2)]);
        let occ = find_max_pattern(&f, FillingPattern::AntiIdentity);
        let g = anti_to_identity_step(&f, &occ).unwrap();
        assert_eq!(g.cells(), cells(&[(1, 1), (2, 2)]));
        let occ = find_max_pattern(&g, FillingPattern::Identity);
        assert_eq!(identity_to_anti_step(&g, &occ).unwrap(), f);

        // J_3 -> [[J_2, 0], [0, 1]]
        let f = square(3, &[(3, 1), (2, 2), (1, 3)]);
        let occ = find_max_pattern(&f, FillingPattern::AntiIdentity);
        let g = anti_to_identity_step(&f, &occ).unwrap();
        assert_eq!(g.cells(), cells(&[(1, 2), (2, 1), (3, 3)]));

        // I_3 -> swap of the top-left 2x2 block
        let f = square(3, &[(1, 1), (2, 2), (3, 3)]);
        let occ = find_max_pattern(&f, FillingPattern::Identity);
        let g = identity_to_anti_step(&f, &occ).unwrap();
        assert_eq!(g.cells(), cells(&[(1, 2), (2, 1), (3, 3)]));

        let f = square(1, &[(1, 1)]);
        let occ = find_max_pattern(&f, FillingPattern::Identity);
        assert_eq!(identity_to_anti_step(&f, &occ).unwrap(), f);
        let occ = PatternOccurrence {
            kind: FillingPattern::AntiIdentity,
            cells: occ.cells,
        };
        assert_eq!(anti_to_identity_step(&f, &occ).unwrap(), f);
    }

    #[test]
    fn moves_reject_bad_occurrences() {
        let f = square(2, &[(1, 1), (2, 2)]);
        let occ = PatternOccurrence {
            kind: FillingPattern::AntiIdentity,
            cells: cells(&[(1, 1), (2, 2)]),
        };
        assert!(matches!(
            anti_to_identity_step(&f, &occ),
            Err(Error::InvalidOccurrence(_))
        ));
        let occ = PatternOccurrence {
            kind: FillingPattern::Identity,
            cells: cells(&[(1, 2)]),
        };
        assert!(matches!(
            identity_to_anti_step(&f, &occ),
            Err(Error::InvalidOccurrence(_))
        ));
    }

    #[test]
    fn interchange_examples() {
        let f = square(2, &[(2, 1), (1, 2)]);
        let out = interchange_psi(&f, 16).unwrap();
        assert_eq!(out.filling.cells(), cells(&[(1, 1), (2, 2)]));
        assert_eq!(out.steps, 1);

        let f = square(1, &[(1, 1)]);
        let out = interchange_psi(&f, 16).unwrap();
        assert_eq!(out.filling, f);
        assert!(out.trace.is_empty());

        let f = two_full_chain_filling();
        let out = interchange_psi(&f, default_budget(f.rows())).unwrap();
        let d = xi_inverse(&out.filling).unwrap();
        assert_eq!((cro_star(&d), nes_star(&d)), (2, 4));
    }

    #[test]
    fn interchange_respects_budget() {
        let f = square(3, &[(3, 1), (2, 2), (1, 3)]);
        assert!(matches!(
            interchange_psi(&f, 1),
            Err(Error::StepBudgetExhausted { budget: 1, .. })
        ));
    }

    #[test]
    fn theta_examples() {
        let p = perm("4,5,6,2,-3,-1");
        let image = theta(&p).unwrap();
        let d = image.upper_diagram();
        assert_eq!((cro_star(&d), nes_star(&d)), (2, 4));
        assert_eq!(d.degree_sequence(), p.upper_diagram().degree_sequence());
        assert_eq!(image.neg(), 2);
        let id = SignedPermutation::identity(3);
        assert_eq!(theta(&id).unwrap(), id);
    }

    #[test]
    fn count_avoiders_examples() {
        use FillingPattern::*;
        assert_eq!(count_avoiders(&[2, 2], &[1, 1], &[1, 1], 2, Identity), Ok(1));
        assert_eq!(count_avoiders(&[2, 2], &[1, 1], &[1, 1], 2, AntiIdentity), Ok(1));
        assert_eq!(count_avoiders(&[3, 2, 1], &[1, 1, 1], &[1, 1, 1], 1, Identity), Ok(0));
        assert_eq!(
            count_avoiders(&[3, 2, 1], &[1, 1, 1], &[1, 1, 1], 1, AntiIdentity),
            Ok(0)
        );
        let i3 = count_avoiders(&[3, 3, 3], &[1, 1, 1], &[1, 1, 1], 3, Identity).unwrap();
        let j3 = count_avoiders(&[3, 3, 3], &[1, 1, 1], &[1, 1, 1], 3, AntiIdentity).unwrap();
        // 3! = 6 permutation matrices, one of which is the full pattern
        assert_eq!((i3, j3), (5, 5));
        assert_eq!(count_avoiders(&[2, 2], &[0, 0], &[0, 0], 1, Identity), Ok(1));
    }

    #[test]
    fn count_avoiders_rejects_infeasible_sums() {
        use FillingPattern::*;
        assert!(matches!(
            count_avoiders(&[2, 1], &[1, 1], &[1], 2, Identity),
            Err(Error::InfeasibleSums(_))
        ));
        assert!(matches!(
            count_avoiders(&[2, 1], &[1, 2], &[1, 2], 2, Identity),
            Err(Error::InfeasibleSums(_))
        ));
        assert!(matches!(
            count_avoiders(&[2, 1], &[1, 0], &[0, 0], 2, Identity),
            Err(Error::InfeasibleSums(_))
        ));
        assert!(matches!(
            count_avoiders(&[2, 1], &[0, 0], &[0, 2], 2, Identity),
            Err(Error::InfeasibleSums(_))
        ));
    }

    #[test]
    fn text_format_round_trip() {
        let f = two_full_chain_filling();
        let text = f.to_string();
        assert!(text.starts_with("6,6,6,6,4,3\n"));
        assert_eq!(text.parse::<YoungFilling>().unwrap(), f);
        assert!(matches!(
            "2,2\n1\n".parse::<YoungFilling>(),
            Err(Error::MalformedFilling(_))
        ));
        assert!(matches!("".parse::<YoungFilling>(), Err(Error::MalformedFilling(_))));
    }
}
