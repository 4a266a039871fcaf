//! Exhaustive enumeration of `B_n`, joint distribution tables and verifiers
//! for the symmetric-distribution claims.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use itertools::Itertools;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fillings::{self, count_avoiders, FillingPattern};
use crate::involution::crossing_nesting_involution;
use crate::permutation::{SignedPermutation, UpperDiagram};
use crate::statistics::{cro_star, nes_star, PatternCounts};

pub const MAX_ENUMERATION_RANK: usize = 8;

/// Every element of `B_n` once: magnitude permutations in lexicographic
/// order, and for each of them the sign masks in binary order (bit `i` set
/// negates entry `i + 1`).
pub fn enumerate_bn(n: usize) -> Result<impl Iterator<Item = SignedPermutation>> {
    if n == 0 || n > MAX_ENUMERATION_RANK {
        return Err(Error::RankTooLarge {
            n,
            max: MAX_ENUMERATION_RANK,
        });
    }
    Ok((1..=n as i32).permutations(n).flat_map(move |magnitudes| {
        (0u32..1 << n).map(move |mask| {
            let values = magnitudes
                .iter()
                .enumerate()
                .map(|(i, &m)| if mask >> i & 1 == 1 { -m } else { m })
                .collect();
            SignedPermutation::new(values).expect("valid by construction")
        })
    }))
}

pub fn group_order(n: usize) -> u64 {
    (1..=n as u64).product::<u64>() << n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    Nes,
    Cro,
    Wex,
    Neg,
    CroStar,
    NesStar,
}

impl Statistic {
    pub const ALL: [Statistic; 6] = [
        Statistic::Nes,
        Statistic::Cro,
        Statistic::Wex,
        Statistic::Neg,
        Statistic::CroStar,
        Statistic::NesStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Nes => "nes",
            Statistic::Cro => "cro",
            Statistic::Wex => "wex",
            Statistic::Neg => "neg",
            Statistic::CroStar => "cro_star",
            Statistic::NesStar => "nes_star",
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s.trim())
            .ok_or_else(|| format!("unknown statistic `{s}`"))
    }
}

/// Evaluates a schema on one permutation, computing each statistic at most
/// once.
fn evaluate(schema: &[Statistic], p: &SignedPermutation, d: &UpperDiagram) -> Vec<u32> {
    let needs_pairs = schema.iter().any(|s| matches!(s, Statistic::Nes | Statistic::Cro));
    let counts = needs_pairs.then(|| PatternCounts::of(d));
    schema
        .iter()
        .map(|s| {
            let v = match s {
                Statistic::Nes => counts.as_ref().unwrap().nestings(),
                Statistic::Cro => counts.as_ref().unwrap().crossings(),
                Statistic::Wex => p.wex(),
                Statistic::Neg => p.neg(),
                Statistic::CroStar => cro_star(d),
                Statistic::NesStar => nes_star(d),
            };
            v as u32
        })
        .collect()
}

/// Counts of permutations per value tuple of a statistic schema.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable {
    pub schema: Vec<Statistic>,
    pub cells: BTreeMap<Vec<u32>, u64>,
    pub total: u64,
}

impl DistributionTable {
    pub fn new(schema: Vec<Statistic>) -> Self {
        DistributionTable {
            schema,
            cells: BTreeMap::new(),
            total: 0,
        }
    }

    pub fn add(&mut self, p: &SignedPermutation) {
        let d = p.upper_diagram();
        self.add_with_diagram(p, &d);
    }

    fn add_with_diagram(&mut self, p: &SignedPermutation, d: &UpperDiagram) {
        *self.cells.entry(evaluate(&self.schema, p, d)).or_default() += 1;
        self.total += 1;
    }

    pub fn merge(&mut self, other: &DistributionTable) {
        assert_eq!(self.schema, other.schema, "merging tables with different schemas");
        for (key, count) in &other.cells {
            *self.cells.entry(key.clone()).or_default() += count;
        }
        self.total += other.total;
    }

    pub fn get(&self, key: &[u32]) -> u64 {
        self.cells.get(key).copied().unwrap_or(0)
    }

    /// Keys whose count differs from the count at the key with positions
    /// `i` and `j` exchanged; each asymmetric pair is listed once.
    pub fn asymmetries(&self, i: usize, j: usize) -> Vec<(Vec<u32>, u64, Vec<u32>, u64)> {
        let mut out = Vec::new();
        let keys: Vec<&Vec<u32>> = self.cells.keys().collect();
        let mut visit = |key: &Vec<u32>| {
            let mut mirrored = key.clone();
            mirrored.swap(i, j);
            if key < &mirrored || (key != &mirrored && !self.cells.contains_key(&mirrored)) {
                let (a, b) = (self.get(key), self.get(&mirrored));
                if a != b && !out.iter().any(|(k, _, m, _)| k == &mirrored && m == key) {
                    out.push((key.clone(), a, mirrored, b));
                }
            }
        };
        for key in keys {
            visit(key);
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.schema.iter().map(|s| s.name()).join(",");
        out.push_str(",count\n");
        for (key, count) in &self.cells {
            out.push_str(&key.iter().join(","));
            out.push_str(&format!(",{count}\n"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.cells
                .iter()
                .map(|(key, count)| {
                    let mut row = serde_json::Map::new();
                    for (s, v) in self.schema.iter().zip(key) {
                        row.insert(s.name().to_string(), json!(v));
                    }
                    row.insert("count".into(), json!(count));
                    Value::Object(row)
                })
                .collect(),
        )
    }
}

pub fn distribution_over<'a>(
    perms: impl IntoIterator<Item = &'a SignedPermutation>,
    schema: &[Statistic],
) -> DistributionTable {
    let mut table = DistributionTable::new(schema.to_vec());
    for p in perms {
        table.add(p);
    }
    table
}

pub fn distribution(n: usize, schema: &[Statistic]) -> Result<DistributionTable> {
    let mut table = DistributionTable::new(schema.to_vec());
    for p in enumerate_bn(n)? {
        table.add(&p);
    }
    Ok(table)
}

/// One failed check, with enough context to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Counterexample {
    Asymmetry {
        #[serde(skip_serializing_if = "Option::is_none")]
        group: Option<String>,
        key: Vec<u32>,
        count: u64,
        mirrored_key: Vec<u32>,
        mirrored_count: u64,
    },
    MapFailure {
        permutation: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        image: Option<String>,
        reasons: Vec<String>,
    },
    ValueMismatch {
        case: String,
        expected: String,
        actual: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub parameters: BTreeMap<String, Value>,
    pub passed: bool,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    fn new(claim: &str, n: usize) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            parameters: BTreeMap::from([("n".to_string(), json!(n))]),
            passed: true,
            checked: 0,
            counterexamples: Vec::new(),
            details: BTreeMap::new(),
            elapsed_ms: None,
        }
    }

    fn finish(mut self, started: Instant) -> Self {
        self.passed = self.counterexamples.is_empty();
        self.elapsed_ms = Some(started.elapsed().as_millis() as u64);
        self
    }

    /// One human-readable summary line.
    pub fn summary(&self) -> String {
        let params = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).join(" ");
        format!(
            "{} {} [{}]: {} checked, {} counterexample(s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.claim,
            params,
            self.checked,
            self.counterexamples.len()
        )
    }
}

fn asymmetry_counterexamples(table: &DistributionTable, group: Option<&str>) -> Vec<Counterexample> {
    table
        .asymmetries(0, 1)
        .into_iter()
        .map(|(key, count, mirrored_key, mirrored_count)| Counterexample::Asymmetry {
            group: group.map(str::to_string),
            key,
            count,
            mirrored_key,
            mirrored_count,
        })
        .collect()
}

/// `(nes, cro, wex, neg)` is symmetric in its first two coordinates.
pub fn verify_pair_symmetry(n: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("thm24", n);
    let table = distribution(n, &[Statistic::Nes, Statistic::Cro, Statistic::Wex, Statistic::Neg])?;
    report.checked = table.total;
    report.counterexamples = asymmetry_counterexamples(&table, None);
    report.details.insert("keys".into(), json!(table.cells.len()));
    Ok(report.finish(started))
}

/// Permutations of `B_n` grouped by the serialized degree sequence.
pub fn degree_sequence_classes(n: usize) -> Result<BTreeMap<String, Vec<SignedPermutation>>> {
    let mut classes: BTreeMap<String, Vec<SignedPermutation>> = BTreeMap::new();
    for p in enumerate_bn(n)? {
        classes
            .entry(p.upper_diagram().degree_sequence().to_string())
            .or_default()
            .push(p);
    }
    Ok(classes)
}

/// Within every degree-sequence class, `(cro*, nes*, neg)` is symmetric in
/// its first two coordinates.
pub fn verify_chain_symmetry(n: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("thm27", n);
    let schema = [Statistic::CroStar, Statistic::NesStar, Statistic::Neg];
    let classes = degree_sequence_classes(n)?;
    for (d, perms) in &classes {
        let table = distribution_over(perms, &schema);
        report.checked += table.total;
        report
            .counterexamples
            .extend(asymmetry_counterexamples(&table, Some(d)));
    }
    report.details.insert("classes".into(), json!(classes.len()));
    Ok(report.finish(started))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InvolutionMap {
    Rerouting,
    Theta,
}

impl FromStr for InvolutionMap {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "theorem24" => Ok(InvolutionMap::Rerouting),
            "theta" => Ok(InvolutionMap::Theta),
            other => Err(format!("unknown map `{other}` (expected theorem24 or theta)")),
        }
    }
}

impl fmt::Display for InvolutionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvolutionMap::Rerouting => "theorem24",
            InvolutionMap::Theta => "theta",
        })
    }
}

impl InvolutionMap {
    pub fn apply(self, p: &SignedPermutation) -> Result<SignedPermutation> {
        match self {
            InvolutionMap::Rerouting => crossing_nesting_involution(p),
            InvolutionMap::Theta => fillings::theta(p),
        }
    }
}

/// Checks one permutation against the properties a map must have; returns
/// the list of violated properties and the image, if any.
pub fn involution_failures(map: InvolutionMap, p: &SignedPermutation) -> (Option<SignedPermutation>, Vec<String>) {
    let image = match map.apply(p) {
        Ok(image) => image,
        Err(e) => return (None, vec![format!("map failed: {e}")]),
    };
    let mut reasons = Vec::new();
    let (d, e) = (p.upper_diagram(), image.upper_diagram());
    match map {
        InvolutionMap::Rerouting => {
            let (before, after) = (PatternCounts::of(&d), PatternCounts::of(&e));
            if (after.crossings(), after.nestings()) != (before.nestings(), before.crossings()) {
                reasons.push(format!(
                    "(cro, nes) went from ({}, {}) to ({}, {})",
                    before.crossings(),
                    before.nestings(),
                    after.crossings(),
                    after.nestings()
                ));
            }
            if image.wex() != p.wex() {
                reasons.push(format!("wex changed from {} to {}", p.wex(), image.wex()));
            }
        }
        InvolutionMap::Theta => {
            let before = (cro_star(&d), nes_star(&d));
            let after = (cro_star(&e), nes_star(&e));
            if after != (before.1, before.0) {
                reasons.push(format!("(cro*, nes*) went from {before:?} to {after:?}"));
            }
        }
    }
    if image.neg() != p.neg() {
        reasons.push(format!("neg changed from {} to {}", p.neg(), image.neg()));
    }
    if e.degree_sequence() != d.degree_sequence() {
        reasons.push(format!("degree sequence changed to {}", e.degree_sequence()));
    }
    match map.apply(&image) {
        Ok(back) if &back == p => {}
        Ok(back) => reasons.push(format!("not an involution: image maps to {back}")),
        Err(e) => reasons.push(format!("map failed on the image: {e}")),
    }
    (Some(image), reasons)
}

/// Applies `map` to every element of `B_n` and checks swap, preservation and
/// involutivity.
pub fn verify_involution_properties(n: usize, map: InvolutionMap) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("involutions", n);
    report.parameters.insert("map".into(), json!(map.to_string()));
    for p in enumerate_bn(n)? {
        report.checked += 1;
        let (image, reasons) = involution_failures(map, &p);
        if !reasons.is_empty() {
            report.counterexamples.push(Counterexample::MapFailure {
                permutation: p.to_string(),
                image: image.map(|i| i.to_string()),
                reasons,
            });
        }
    }
    Ok(report.finish(started))
}

/// Expected number of permutations of `B_n` with an n-crossing.
pub fn expected_max_crossing_count(n: usize) -> u64 {
    if n <= 2 {
        2
    } else {
        1
    }
}

/// Counts permutations whose upper arcs all pairwise cross by choosing, for
/// every magnitude, which of `±m` starts an arc and which ends one.
///
/// Arcs of an n-crossing pair the i-th smallest start with the i-th smallest
/// end, and every start is at most every end (equality only at a positive
/// vertex). For a fixed start set the ends can be chosen independently per
/// magnitude, so the count is a sum of products.
pub fn count_full_crossings_by_endpoints(n: usize) -> u64 {
    assert!((1..31).contains(&n), "rank out of range");
    let mut total = 0u64;
    for mask in 0u32..1 << n {
        let max_start = (1..=n as i32)
            .map(|m| if mask >> (m - 1) & 1 == 1 { -m } else { m })
            .max()
            .unwrap();
        let mut product = 1u64;
        for m in 1..=n as i32 {
            let allowed = |e: i32| e > max_start || (e == max_start && e > 0);
            product *= [m, -m].into_iter().filter(|&e| allowed(e)).count() as u64;
        }
        total += product;
    }
    total
}

/// Number of permutations of `B_n` with `cro* = n`. Ranks up to 6 are
/// counted by enumeration; larger ranks use the endpoint count.
pub fn max_crossing_count(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::RankTooLarge {
            n,
            max: MAX_ENUMERATION_RANK,
        });
    }
    if n <= 6 {
        Ok(enumerate_bn(n)?.filter(|p| cro_star(&p.upper_diagram()) == n).count() as u64)
    } else {
        Ok(count_full_crossings_by_endpoints(n))
    }
}

pub fn verify_full_crossing_count(n: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("corollary", n);
    let count = max_crossing_count(n)?;
    let expected = expected_max_crossing_count(n);
    report.checked = if n <= 6 { group_order(n) } else { 1 << n };
    report.details.insert("count".into(), json!(count));
    report.details.insert("expected".into(), json!(expected));
    if count != expected {
        report.counterexamples.push(Counterexample::ValueMismatch {
            case: format!("n={n}"),
            expected: expected.to_string(),
            actual: count.to_string(),
        });
    }
    let witness = SignedPermutation::full_crossing(n);
    let witness_k = cro_star(&witness.upper_diagram());
    report.details.insert("witness".into(), json!(witness.to_string()));
    if witness_k != n {
        report.counterexamples.push(Counterexample::ValueMismatch {
            case: format!("cro* of {witness}"),
            expected: n.to_string(),
            actual: witness_k.to_string(),
        });
    }
    Ok(report.finish(started))
}

/// Shapes with at most `rows` rows and at most `cols` columns, longest row
/// first.
pub fn shapes_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn extend(prefix: &mut Vec<usize>, rows: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if prefix.len() == rows {
            return;
        }
        for len in 1..=max {
            prefix.push(len);
            extend(prefix, rows, len, out);
            prefix.pop();
        }
    }
    extend(&mut Vec::new(), rows, cols, &mut out);
    out
}

/// For every shape in a `rows × cols` box, every 0/1 row and column sum
/// vector and each `k`, identity avoiders and anti-identity avoiders are
/// equinumerous.
pub fn verify_avoider_symmetry(rows: usize, cols: usize, ks: &[usize]) -> Result<VerificationReport> {
    let started = Instant::now();
    let mut report = VerificationReport::new("lemma41", rows);
    report.parameters.insert("cols".into(), json!(cols));
    report.parameters.insert("k".into(), json!(ks));
    for shape in shapes_in_box(rows, cols) {
        let width = shape[0];
        for row_mask in 0u32..1 << shape.len() {
            let row_sums: Vec<usize> = (0..shape.len()).map(|i| (row_mask >> i & 1) as usize).collect();
            for col_mask in 0u32..1 << width {
                let col_sums: Vec<usize> = (0..width).map(|i| (col_mask >> i & 1) as usize).collect();
                for &k in ks {
                    let identity = count_avoiders(&shape, &row_sums, &col_sums, k, FillingPattern::Identity);
                    let anti = count_avoiders(&shape, &row_sums, &col_sums, k, FillingPattern::AntiIdentity);
                    match (identity, anti) {
                        (Ok(i), Ok(j)) => {
                            report.checked += 1;
                            if i != j {
                                report.counterexamples.push(Counterexample::ValueMismatch {
                                    case: format!("shape {shape:?} rows {row_sums:?} cols {col_sums:?} k={k}"),
                                    expected: i.to_string(),
                                    actual: j.to_string(),
                                });
                            }
                        }
                        (Err(Error::InfeasibleSums(_)), Err(Error::InfeasibleSums(_))) => {}
                        (i, j) => return Err(i.and(j).unwrap_err()),
                    }
                }
            }
        }
    }
    Ok(report.finish(started))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_small_ranks() {
        let b1: Vec<String> = enumerate_bn(1).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(b1, vec!["1", "-1"]);
        assert_eq!(enumerate_bn(2).unwrap().count(), 8);
        assert_eq!(enumerate_bn(6).unwrap().count(), 46080);
        assert!(matches!(enumerate_bn(9), Err(Error::RankTooLarge { n: 9, .. })));
        assert!(enumerate_bn(0).is_err());
    }

    #[test]
    fn enumeration_order_is_deterministic() {
        let b2: Vec<String> = enumerate_bn(2).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(b2, vec!["1,2", "-1,2", "1,-2", "-1,-2", "2,1", "-2,1", "2,-1", "-2,-1"]);
    }

    #[test]
    fn rank_one_distribution() {
        let table = distribution(1, &[Statistic::Nes, Statistic::Cro, Statistic::Wex, Statistic::Neg]).unwrap();
        assert_eq!(
            table.cells,
            BTreeMap::from([(vec![0, 0, 0, 1], 1), (vec![0, 0, 1, 0], 1)])
        );
        assert_eq!(distribution(2, &[Statistic::Cro]).unwrap().total, 8);
    }

    #[test]
    fn asymmetries_detects_each_pair_once() {
        let mut table = DistributionTable::new(vec![Statistic::Nes, Statistic::Cro]);
        table.cells.insert(vec![1, 0], 3);
        table.cells.insert(vec![0, 1], 2);
        table.cells.insert(vec![2, 0], 1);
        table.cells.insert(vec![1, 1], 5);
        let asym = table.asymmetries(0, 1);
        assert_eq!(
            asym,
            vec![(vec![0, 1], 2, vec![1, 0], 3), (vec![2, 0], 1, vec![0, 2], 0)]
        );
    }

    #[test]
    fn csv_and_json_exports() {
        let table = distribution(1, &[Statistic::Wex, Statistic::Neg]).unwrap();
        assert_eq!(table.to_csv(), "wex,neg,count\n0,1,1\n1,0,1\n");
        assert_eq!(
            serde_json::to_string(&table.to_json()).unwrap(),
            r#"[{"wex":0,"neg":1,"count":1},{"wex":1,"neg":0,"count":1}]"#
        );
    }

    #[test]
    fn small_verifications_pass() {
        assert!(verify_pair_symmetry(1).unwrap().passed);
        assert!(verify_pair_symmetry(4).unwrap().passed);
        assert!(verify_chain_symmetry(1).unwrap().passed);
        assert!(verify_chain_symmetry(3).unwrap().passed);
        assert!(
            verify_involution_properties(3, InvolutionMap::Rerouting)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn max_crossing_counts() {
        assert_eq!(max_crossing_count(1).unwrap(), 2);
        assert_eq!(max_crossing_count(2).unwrap(), 2);
        // (3,-2,-1): (-3,1),(-2,2),(1,3) pairwise cross, sharing only the positive vertex 1
        assert_eq!(max_crossing_count(3).unwrap(), 2);
        let witnesses: Vec<String> = enumerate_bn(2)
            .unwrap()
            .filter(|p| cro_star(&p.upper_diagram()) == 2)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(witnesses, vec!["2,-1", "-2,-1"]);
        let witnesses: Vec<String> = enumerate_bn(3)
            .unwrap()
            .filter(|p| cro_star(&p.upper_diagram()) == 3)
            .map(|p| p.to_string())
            .collect();
        assert_eq!(witnesses, vec!["3,-2,-1", "-3,-2,-1"]);
    }

    #[test]
    fn endpoint_count_matches_enumeration() {
        for n in 1..=6 {
            assert_eq!(
                count_full_crossings_by_endpoints(n),
                max_crossing_count(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn shapes_in_small_box() {
        assert_eq!(
            shapes_in_box(2, 2),
            vec![vec![1], vec![1, 1], vec![2], vec![2, 1], vec![2, 2]]
        );
        // partitions fitting a 4x4 box, minus the empty one
        assert_eq!(shapes_in_box(4, 4).len(), 69);
    }

    #[test]
    fn group_orders() {
        assert_eq!(group_order(1), 2);
        assert_eq!(group_order(4), 384);
        assert_eq!(group_order(6), 46080);
    }
}
