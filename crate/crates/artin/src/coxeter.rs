//! Coxeter diagrams: construction, the group-spec grammar, validation, and
//! the canonical bipartition of the generator set.
//!
//! Generator indices are 1-based throughout the public API. A diagram edge
//! joins `i` and `j` exactly when `m_ij >= 3`; off-diagonal 2 means the
//! generators commute and the vertices are not adjacent.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::{Error, Result};

/// A Coxeter-matrix entry: a positive integer or ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CoxLabel {
    Fin(u32),
    Inf,
}

impl CoxLabel {
    pub fn finite(self) -> Option<u32> {
        match self {
            CoxLabel::Fin(m) => Some(m),
            CoxLabel::Inf => None,
        }
    }

    /// Vertices are adjacent in the diagram when the label is at least 3.
    pub fn is_edge(self) -> bool {
        match self {
            CoxLabel::Fin(m) => m >= 3,
            CoxLabel::Inf => true,
        }
    }
}

impl fmt::Display for CoxLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxLabel::Fin(m) => write!(f, "{m}"),
            CoxLabel::Inf => write!(f, "inf"),
        }
    }
}

/// Symmetric matrix with 1s on the diagonal and entries ≥ 2 (or ∞) off it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<CoxLabel>, // row-major n×n
}

impl CoxeterMatrix {
    /// Build a matrix from raw entries (row-major). The entries are taken
    /// as given; use [`validate`] to diagnose invariant violations.
    pub fn from_entries(n: usize, entries: Vec<CoxLabel>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Parse(format!(
                "matrix needs {}x{} = {} entries, got {}",
                n,
                n,
                n * n,
                entries.len()
            )));
        }
        Ok(CoxeterMatrix { n, entries })
    }

    /// Identity-diagonal matrix with all off-diagonal entries 2 (no edges).
    fn commuting(n: usize) -> Self {
        let mut entries = vec![CoxLabel::Fin(2); n * n];
        for i in 0..n {
            entries[i * n + i] = CoxLabel::Fin(1);
        }
        CoxeterMatrix { n, entries }
    }

    fn set_edge(&mut self, i: usize, j: usize, m: u32) {
        debug_assert!(i != j);
        self.entries[(i - 1) * self.n + (j - 1)] = CoxLabel::Fin(m);
        self.entries[(j - 1) * self.n + (i - 1)] = CoxLabel::Fin(m);
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Entry `m_ij` (1-based indices).
    pub fn label(&self, i: usize, j: usize) -> CoxLabel {
        assert!(i >= 1 && i <= self.n && j >= 1 && j <= self.n);
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    /// Neighbours of `i` in the diagram, ascending.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (1..=self.n)
            .filter(|&j| j != i && self.label(i, j).is_edge())
            .collect()
    }

    pub fn has_infinite_label(&self) -> bool {
        self.entries.contains(&CoxLabel::Inf)
    }
}

/// One of the classified families of irreducible finite-type diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    I2,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
}

impl Family {
    pub fn is_infinite_family(self) -> bool {
        matches!(self, Family::A | Family::B | Family::D | Family::I2)
    }
}

/// A named standard diagram: one of the four parametrized families, or a
/// sporadic type (no parameter).
///
/// Small-parameter overlaps between the families exist as abstract groups —
/// I2(3) ≅ A_2, I2(4) ≅ B_2, D_3 ≅ A_3 (the last is why D starts at 4) —
/// but each spec names its own standard diagram and numbering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    family: Family,
    param: Option<u32>,
}

impl FamilySpec {
    /// Validating constructor. Parameter ranges: A ≥ 1, B ≥ 2, D ≥ 4,
    /// I2 ≥ 3; sporadics take no parameter.
    pub fn new(family: Family, param: Option<u32>) -> Result<Self> {
        match (family, param) {
            (Family::A, Some(n)) if n >= 1 => Ok(()),
            (Family::B, Some(n)) if n >= 2 => Ok(()),
            (Family::D, Some(n)) if n >= 4 => Ok(()),
            (Family::I2, Some(m)) if m >= 3 => Ok(()),
            (Family::A | Family::B | Family::D | Family::I2, p) => Err(Error::Range(format!(
                "{family:?} parameter {p:?} out of range (A ≥ 1, B ≥ 2, D ≥ 4, I2 ≥ 3)"
            ))),
            (_, None) => Ok(()),
            (f, Some(p)) => Err(Error::Range(format!("sporadic type {f:?} takes no parameter, got {p}"))),
        }?;
        Ok(FamilySpec { family, param })
    }

    pub fn a(n: u32) -> Result<Self> {
        Self::new(Family::A, Some(n))
    }
    pub fn b(n: u32) -> Result<Self> {
        Self::new(Family::B, Some(n))
    }
    pub fn d(n: u32) -> Result<Self> {
        Self::new(Family::D, Some(n))
    }
    pub fn i2(m: u32) -> Result<Self> {
        Self::new(Family::I2, Some(m))
    }
    pub fn sporadic(family: Family) -> Result<Self> {
        Self::new(family, None)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Family parameter (rank for A/B/D, edge label for I2).
    pub fn param(&self) -> Option<u32> {
        self.param
    }

    /// Number of generators, the "Rank" column: A_k → k, B_k → k,
    /// D_n → n, I2 → 2, and the fixed sporadic ranks.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::A | Family::B | Family::D => self.param.unwrap() as usize,
            Family::I2 => 2,
            Family::E6 => 6,
            Family::E7 => 7,
            Family::E8 => 8,
            Family::F4 => 4,
            Family::H3 => 3,
            Family::H4 => 4,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.param) {
            (Family::I2, Some(m)) => write!(f, "I2({m})"),
            (fam, Some(n)) => write!(f, "{fam:?}{n}"),
            (fam, None) => write!(f, "{fam:?}"),
        }
    }
}

/// Parse the group-spec grammar: `spec := family nat | "I2(" nat ")"` with
/// `family := "A"|"B"|"D"`, case-insensitive, whitespace-tolerant.
pub fn parse_group_spec(text: &str) -> Result<FamilySpec> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let upper = compact.to_ascii_uppercase();

    let parse_nat = |s: &str, what: &str| -> Result<u32> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad {what} in group spec `{text}`")));
        }
        s.parse()
            .map_err(|_| Error::Parse(format!("{what} too large in group spec `{text}`")))
    };

    if let Some(rest) = upper.strip_prefix("I2(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("missing `)` in group spec `{text}`")))?;
        return FamilySpec::i2(parse_nat(inner, "parameter")?);
    }
    let family = match upper.as_bytes()[0] {
        b'A' => Family::A,
        b'B' => Family::B,
        b'D' => Family::D,
        _ => return Err(Error::Parse(format!("unknown family in group spec `{text}`"))),
    };
    let n = parse_nat(&upper[1..], "rank")?;
    FamilySpec::new(family, Some(n))
}

/// The standard diagram for a spec.
///
/// Conventions: A_n is the path 1–2–…–n with all labels 3; B_n is the same
/// path with `m_{n-1,n} = 4`; D_n is the path on 1..n−2 plus the fork edges
/// (n−2, n−1) and (n−2, n); I2(m) is a single edge labeled m. Sporadic
/// diagrams are hard-coded: E_n is the path on 1..n−1 with n attached to
/// n−3; F4 has its 4-label on the middle edge; H3/H4 carry the 5-label on
/// the high-end edge.
pub fn build_diagram(spec: &FamilySpec) -> CoxeterMatrix {
    let n = spec.rank();
    let mut m = CoxeterMatrix::commuting(n);
    let path = |m: &mut CoxeterMatrix, upto: usize| {
        for i in 1..upto {
            m.set_edge(i, i + 1, 3);
        }
    };
    match spec.family {
        Family::A => path(&mut m, n),
        Family::B => {
            path(&mut m, n);
            m.set_edge(n - 1, n, 4);
        }
        Family::D => {
            path(&mut m, n - 1);
            m.set_edge(n - 2, n, 3);
        }
        Family::I2 => m.set_edge(1, 2, spec.param.unwrap()),
        Family::E6 | Family::E7 | Family::E8 => {
            path(&mut m, n - 1);
            m.set_edge(n - 3, n, 3);
        }
        Family::F4 => {
            path(&mut m, n);
            m.set_edge(2, 3, 4);
        }
        Family::H3 | Family::H4 => {
            path(&mut m, n);
            m.set_edge(n - 1, n, 5);
        }
    }
    m
}

/// Recognize a matrix as a standard diagram in this crate's numbering.
///
/// Exact match only — no diagram-isomorphism search. Rank-2 overlaps
/// resolve to A_2 (m = 3), B_2 (m = 4), I2(m) (m ≥ 5).
pub fn recognize(matrix: &CoxeterMatrix) -> Option<FamilySpec> {
    let n = matrix.rank() as u32;
    let mut candidates: Vec<FamilySpec> = Vec::new();
    let mut push = |s: Result<FamilySpec>| {
        if let Ok(s) = s {
            candidates.push(s);
        }
    };
    if n == 2 {
        if let CoxLabel::Fin(m) = matrix.label(1, 2) {
            push(FamilySpec::a(2).and_then(|s| if m == 3 { Ok(s) } else { Err(Error::Parse(String::new())) }));
            push(FamilySpec::b(2).and_then(|s| if m == 4 { Ok(s) } else { Err(Error::Parse(String::new())) }));
            if m >= 5 {
                push(FamilySpec::i2(m));
            }
        }
    } else {
        push(FamilySpec::a(n));
        push(FamilySpec::b(n));
        push(FamilySpec::d(n));
        for f in [Family::E6, Family::E7, Family::E8, Family::F4, Family::H3, Family::H4] {
            push(FamilySpec::sporadic(f));
        }
    }
    candidates
        .into_iter()
        .find(|spec| spec.rank() == matrix.rank() && build_diagram(spec) == *matrix)
}

/// Diagnostics for an arbitrary matrix. Violations are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub rank: usize,
    pub violations: Vec<String>,
    /// Connected diagram = irreducible group.
    pub connected: bool,
    pub tree: bool,
    pub has_infinite_label: bool,
    /// Standard diagram recognized by exact numbering match, if any.
    pub recognized: Option<FamilySpec>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Report every violated matrix invariant, plus connectivity and tree-ness
/// of the diagram.
pub fn validate(matrix: &CoxeterMatrix) -> ValidationReport {
    let n = matrix.rank();
    let mut violations = Vec::new();
    for i in 1..=n {
        if matrix.label(i, i) != CoxLabel::Fin(1) {
            violations.push(format!("m_{{{i},{i}}} = {} but the diagonal must be 1", matrix.label(i, i)));
        }
        for j in (i + 1)..=n {
            if matrix.label(i, j) != matrix.label(j, i) {
                violations.push(format!(
                    "asymmetric: m_{{{i},{j}}} = {} but m_{{{j},{i}}} = {}",
                    matrix.label(i, j),
                    matrix.label(j, i)
                ));
            }
            if let CoxLabel::Fin(m) = matrix.label(i, j) {
                if m < 2 {
                    violations.push(format!("m_{{{i},{j}}} = {m} but off-diagonal entries must be ≥ 2"));
                }
            }
        }
    }

    // Connectivity and cycle detection on the edge graph (m >= 3).
    let mut seen = vec![false; n + 1];
    let mut edge_count = 0usize;
    for i in 1..=n {
        for j in (i + 1)..=n {
            if matrix.label(i, j).is_edge() {
                edge_count += 1;
            }
        }
    }
    let mut queue = VecDeque::new();
    if n > 0 {
        seen[1] = true;
        queue.push_back(1);
    }
    let mut reached = if n > 0 { 1 } else { 0 };
    while let Some(i) = queue.pop_front() {
        for j in matrix.neighbours(i) {
            if !seen[j] {
                seen[j] = true;
                reached += 1;
                queue.push_back(j);
            }
        }
    }
    let connected = reached == n;
    let tree = connected && edge_count + 1 == n;

    ValidationReport {
        rank: n,
        violations,
        connected,
        tree,
        has_infinite_label: matrix.has_infinite_label(),
        recognized: recognize(matrix),
    }
}

/// The two maximal sets of pairwise-commuting generators of a connected
/// tree diagram, i.e. its unique 2-coloring. Generator 1 lands in `j1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub j1: Vec<usize>,
    pub j2: Vec<usize>,
}

/// 2-color a connected tree diagram. Errors on disconnected or non-tree
/// input.
pub fn bipartition(matrix: &CoxeterMatrix) -> Result<Bipartition> {
    let report = validate(matrix);
    if !report.tree {
        return Err(Error::Unsupported(if report.connected {
            "diagram has a cycle; bipartition requires a tree".into()
        } else {
            "diagram is disconnected; bipartition requires a connected tree".into()
        }));
    }
    let n = matrix.rank();
    let mut color = vec![u8::MAX; n + 1];
    color[1] = 0;
    let mut queue = VecDeque::from([1usize]);
    while let Some(i) = queue.pop_front() {
        for j in matrix.neighbours(i) {
            if color[j] == u8::MAX {
                color[j] = 1 - color[i];
                queue.push_back(j);
            }
        }
    }
    let j1 = (1..=n).filter(|&i| color[i] == 0).collect();
    let j2 = (1..=n).filter(|&i| color[i] == 1).collect();
    Ok(Bipartition { j1, j2 })
}
