//! Classification of the `10_6 15_2 − 30_3` configurations.
//!
//! Each pentad gets a [`ConfigSignature`]: the negative-context count, the
//! A/B/C observable counts over its 25 observables, the counts of plane
//! classes over its five planes, and a [`PentagramSignature`] describing the
//! Mermin pentagram living in the same pentad. Grouping the census by full
//! signature gives the types; the eight-parameter part is compared against
//! the 47-row reference table.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Geometry, PlaneClass};
use crate::pauli::{Observable, ObservableType};
use crate::pentads::{pentad_to_config, pentad_to_pentagram, Pentad, PentadError, Pentagram};

/// Number of configuration types.
pub const TYPE_COUNT: usize = 47;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TaxonomyError {
    #[error("census has {found} types, expected {expected}")]
    TypeCountMismatch { found: usize, expected: usize, census: Box<Census> },
}

/// The eight classification parameters
/// `(C⁻, O_A, O_B, O_C, F⁻, F⁺_a, F⁺_b, F⁺_c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParameterTuple {
    pub c_minus: usize,
    pub o_a: usize,
    pub o_b: usize,
    pub o_c: usize,
    pub f_minus: usize,
    pub f_a: usize,
    pub f_b: usize,
    pub f_c: usize,
}

impl ParameterTuple {
    pub const fn new(c_minus: usize, o: [usize; 3], f: [usize; 4]) -> Self {
        ParameterTuple { c_minus, o_a: o[0], o_b: o[1], o_c: o[2], f_minus: f[0], f_a: f[1], f_b: f[2], f_c: f[3] }
    }

    pub fn as_array(&self) -> [usize; 8] {
        [self.c_minus, self.o_a, self.o_b, self.o_c, self.f_minus, self.f_a, self.f_b, self.f_c]
    }

    pub fn satisfies(&self, law: Law) -> bool {
        match law {
            Law::SingleAOnePositiveClass => {
                self.o_a != 1 || [self.f_a, self.f_b, self.f_c].iter().filter(|&&n| n > 0).count() == 1
            }
            Law::TwoANoClassC => self.o_a != 2 || self.f_c == 0,
            Law::FourAOneClassC => self.o_a != 4 || self.f_c == 1,
            Law::BParityMatchesNegativePlanes => self.o_b.is_multiple_of(2) == self.f_minus.is_multiple_of(2),
            Law::NegativeContextRange => (3..=17).contains(&self.c_minus),
        }
    }
}

impl fmt::Display for ParameterTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.as_array().iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PentagramSignature {
    pub negative_edges: usize,
    pub o_a: usize,
    pub o_b: usize,
    pub o_c: usize,
    /// Type-A pentagram observables lying on at least one negative edge.
    pub a_on_negative: usize,
}

impl PentagramSignature {
    pub fn of(pentagram: &Pentagram) -> Self {
        let [o_a, o_b, o_c] = type_counts(pentagram.observables());
        let a_on_negative = pentagram
            .observables()
            .iter()
            .filter(|o| o.observable_type() == ObservableType::A)
            .filter(|o| {
                pentagram.edges().iter().zip(pentagram.edge_signs()).any(|(e, s)| s.is_negative() && e.contains(o))
            })
            .count();
        PentagramSignature { negative_edges: pentagram.negative_edges(), o_a, o_b, o_c, a_on_negative }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConfigSignature {
    pub params: ParameterTuple,
    pub pentagram: PentagramSignature,
}

impl ConfigSignature {
    /// Canonical type order: `C⁻` descending, then the remaining parameters
    /// and the pentagram fields ascending.
    fn sort_key(&self) -> impl Ord {
        let p = &self.params;
        let g = &self.pentagram;
        (
            std::cmp::Reverse(p.c_minus),
            [p.o_a, p.o_b, p.f_minus, p.f_a, p.f_b, p.f_c],
            [g.negative_edges, g.o_a, g.o_b, g.o_c],
            g.a_on_negative,
        )
    }
}

impl PartialOrd for ConfigSignature {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ConfigSignature {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key()).then_with(|| self.params.cmp(&other.params))
    }
}

fn type_counts(obs: &[Observable]) -> [usize; 3] {
    let mut counts = [0; 3];
    for o in obs {
        counts[o.observable_type() as usize] += 1;
    }
    counts
}

pub fn config_signature(geom: &Geometry, pentad: &Pentad) -> Result<ConfigSignature, PentadError> {
    let pentagram = pentad_to_pentagram(pentad)?;
    let config = pentad_to_config(geom, pentad)?;
    let mut classes = [0usize; 4];
    for &plane in pentad.planes() {
        let class = geom.plane(plane)?.class;
        classes[PlaneClass::ALL.iter().position(|&c| c == class).expect("class is listed")] += 1;
    }
    Ok(ConfigSignature {
        params: ParameterTuple::new(config.negative_contexts(), type_counts(config.observables()), classes),
        pentagram: PentagramSignature::of(&pentagram),
    })
}

/// Signatures of all pentads, in pentad order; computed on the current rayon pool.
pub fn census_signatures(geom: &Geometry, pentads: &[Pentad]) -> Result<Vec<ConfigSignature>, PentadError> {
    pentads.par_iter().map(|p| config_signature(geom, p)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeRecord {
    /// 1-based position in canonical order.
    pub ordinal: usize,
    pub signature: ConfigSignature,
    pub multiplicity: usize,
    /// Smallest pentad id with this signature.
    pub example_pentad: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub records: Vec<TypeRecord>,
    /// Number of types per negative-context count.
    pub family_sizes: BTreeMap<usize, usize>,
}

impl Census {
    /// Groups signatures (indexed by pentad id) without checking the type count.
    pub fn from_signatures(signatures: &[ConfigSignature]) -> Self {
        let mut groups: BTreeMap<ConfigSignature, (usize, usize)> = BTreeMap::new();
        for (id, sig) in signatures.iter().enumerate() {
            groups.entry(*sig).or_insert((0, id)).0 += 1;
        }
        let records: Vec<TypeRecord> = groups
            .into_iter()
            .enumerate()
            .map(|(i, (signature, (multiplicity, example_pentad)))| TypeRecord {
                ordinal: i + 1,
                signature,
                multiplicity,
                example_pentad,
            })
            .collect();
        let mut family_sizes = BTreeMap::new();
        for r in &records {
            *family_sizes.entry(r.signature.params.c_minus).or_insert(0) += 1;
        }
        Census { records, family_sizes }
    }

    pub fn total(&self) -> usize {
        self.records.iter().map(|r| r.multiplicity).sum()
    }
}

/// Groups the census into types and checks that there are exactly 47.
pub fn classify_census(signatures: &[ConfigSignature]) -> Result<Census, TaxonomyError> {
    let census = Census::from_signatures(signatures);
    if census.records.len() != TYPE_COUNT {
        return Err(TaxonomyError::TypeCountMismatch {
            found: census.records.len(),
            expected: TYPE_COUNT,
            census: Box::new(census),
        });
    }
    debug_assert_eq!(census.total(), signatures.len());
    Ok(census)
}

/// One row of the reference classification table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table1Row {
    pub t: usize,
    pub params: ParameterTuple,
    /// Pentagram type label from the reference table, kept for reference only.
    pub pentagram_type: &'static str,
}

const fn row(t: usize, c: usize, o: [usize; 3], f: [usize; 4], pentagram_type: &'static str) -> Table1Row {
    Table1Row { t, params: ParameterTuple::new(c, o, f), pentagram_type }
}

const TABLE1: [Table1Row; TYPE_COUNT] = [
    row(1, 17, [2, 11, 12], [3, 2, 0, 0], "5"),
    row(2, 15, [0, 15, 10], [5, 0, 0, 0], "1"),
    row(3, 15, [1, 15, 9], [3, 2, 0, 0], "2"),
    row(4, 13, [0, 11, 14], [5, 0, 0, 0], "4"),
    row(5, 13, [1, 10, 14], [4, 1, 0, 0], "21"),
    row(6, 13, [1, 11, 13], [3, 2, 0, 0], "9"),
    row(7, 13, [2, 11, 12], [3, 1, 1, 0], "6"),
    row(8, 13, [3, 10, 12], [2, 2, 1, 0], "22"),
    row(9, 11, [1, 10, 14], [4, 0, 1, 0], "3"),
    row(10, 11, [2, 10, 13], [2, 2, 1, 0], "14"),
    row(11, 11, [2, 11, 12], [3, 1, 1, 0], "24"),
    row(12, 11, [3, 11, 11], [3, 1, 0, 1], "10"),
    row(13, 11, [4, 10, 11], [2, 2, 0, 1], "30"),
    row(14, 11, [5, 11, 9], [1, 2, 1, 1], "28b"),
    row(15, 9, [1, 11, 13], [3, 0, 2, 0], "11"),
    row(16, 9, [2, 10, 13], [2, 1, 2, 0], "31"),
    row(17, 9, [2, 11, 12], [3, 0, 2, 0], "7"),
    row(18, 9, [2, 11, 12], [1, 2, 2, 0], "17"),
    row(19, 9, [3, 10, 12], [2, 1, 2, 0], "23"),
    row(20, 9, [3, 11, 11], [3, 0, 1, 1], "12"),
    row(21, 9, [4, 10, 11], [2, 1, 1, 1], "15"),
    row(22, 9, [4, 10, 11], [2, 1, 1, 1], "32"),
    row(23, 9, [4, 11, 10], [1, 2, 1, 1], "18"),
    row(24, 9, [4, 11, 10], [1, 2, 1, 1], "36"),
    row(25, 9, [5, 10, 10], [2, 1, 0, 2], "16"),
    row(26, 9, [1, 15, 9], [3, 0, 2, 0], "8"),
    row(27, 9, [5, 11, 9], [3, 0, 0, 2], "13"),
    row(28, 9, [5, 11, 9], [1, 2, 0, 2], "20"),
    row(29, 9, [5, 11, 9], [1, 2, 1, 1], "28a"),
    row(30, 9, [3, 15, 7], [1, 2, 1, 1], "19"),
    row(31, 7, [1, 11, 13], [3, 0, 2, 0], "25"),
    row(32, 7, [3, 11, 11], [3, 0, 1, 1], "26"),
    row(33, 7, [4, 11, 10], [1, 1, 2, 1], "37b"),
    row(34, 7, [5, 10, 10], [2, 1, 0, 2], "34"),
    row(35, 7, [5, 11, 9], [3, 0, 0, 2], "27"),
    row(36, 7, [6, 10, 9], [0, 2, 1, 2], "41"),
    row(37, 5, [4, 10, 11], [2, 0, 2, 1], "33"),
    row(38, 5, [4, 11, 10], [1, 1, 2, 1], "37a"),
    row(39, 5, [5, 10, 10], [2, 0, 1, 2], "35"),
    row(40, 5, [5, 11, 9], [1, 1, 1, 2], "39"),
    row(41, 5, [6, 11, 8], [1, 1, 0, 3], "43"),
    row(42, 3, [5, 11, 9], [1, 0, 3, 1], "29"),
    row(43, 3, [5, 11, 9], [1, 0, 2, 2], "40"),
    row(44, 3, [6, 10, 9], [0, 1, 2, 2], "42"),
    row(45, 3, [6, 11, 8], [1, 0, 1, 3], "44"),
    row(46, 3, [3, 15, 7], [1, 0, 3, 1], "38"),
    row(47, 3, [6, 15, 4], [1, 0, 0, 4], "45"),
];

/// The 47 reference rows, in table order.
pub fn table1_fixture() -> &'static [Table1Row] {
    &TABLE1
}

/// Multiset difference between census parameter tuples and the table rows.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table1Diff {
    /// In the table but not (or not often enough) in the census.
    pub missing: Vec<(ParameterTuple, usize)>,
    /// In the census but not (or too often) in the table.
    pub unexpected: Vec<(ParameterTuple, usize)>,
}

impl Table1Diff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

impl fmt::Display for Table1Diff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# (C-, O_A, O_B, O_C, F-, Fa, Fb, Fc)")?;
        if self.is_empty() {
            return writeln!(f, "all {TYPE_COUNT} rows matched");
        }
        for (t, n) in &self.missing {
            writeln!(f, "- {t} x{n}")?;
        }
        for (t, n) in &self.unexpected {
            writeln!(f, "+ {t} x{n}")?;
        }
        Ok(())
    }
}

fn tuple_multiset(tuples: impl Iterator<Item = ParameterTuple>) -> BTreeMap<ParameterTuple, usize> {
    let mut m = BTreeMap::new();
    for t in tuples {
        *m.entry(t).or_insert(0) += 1;
    }
    m
}

/// Compares the census types' eight-parameter tuples, with multiplicity,
/// against the table rows.
pub fn compare_with_table1(census: &Census) -> Table1Diff {
    let ours = tuple_multiset(census.records.iter().map(|r| r.signature.params));
    let theirs = tuple_multiset(table1_fixture().iter().map(|r| r.params));
    let mut diff = Table1Diff::default();
    for (t, &n) in &theirs {
        let have = ours.get(t).copied().unwrap_or(0);
        if have < n {
            diff.missing.push((*t, n - have));
        }
    }
    for (t, &n) in &ours {
        let want = theirs.get(t).copied().unwrap_or(0);
        if n > want {
            diff.unexpected.push((*t, n - want));
        }
    }
    diff
}

/// Regularities of the classification table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Law {
    /// `O_A = 1` ⟹ the positive planes are all of one class.
    SingleAOnePositiveClass,
    /// `O_A = 2` ⟹ no plane of class c.
    TwoANoClassC,
    /// `O_A = 4` ⟹ exactly one plane of class c.
    FourAOneClassC,
    /// `O_B` and `F⁻` have the same parity.
    BParityMatchesNegativePlanes,
    /// `3 ≤ C⁻ ≤ 17`.
    NegativeContextRange,
}

impl Law {
    pub const ALL: [Law; 5] = [
        Law::SingleAOnePositiveClass,
        Law::TwoANoClassC,
        Law::FourAOneClassC,
        Law::BParityMatchesNegativePlanes,
        Law::NegativeContextRange,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Law::SingleAOnePositiveClass => "L1",
            Law::TwoANoClassC => "L2",
            Law::FourAOneClassC => "L3",
            Law::BParityMatchesNegativePlanes => "L4",
            Law::NegativeContextRange => "L5",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Law::SingleAOnePositiveClass => "O_A = 1 => positive planes of a single class",
            Law::TwoANoClassC => "O_A = 2 => F+_c = 0",
            Law::FourAOneClassC => "O_A = 4 => F+_c = 1",
            Law::BParityMatchesNegativePlanes => "O_B even <=> F- even",
            Law::NegativeContextRange => "3 <= C- <= 17",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawResult {
    pub law: Law,
    pub violations: usize,
    /// Index (pentad id or row) of the first violation.
    pub witness: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub checked: usize,
    pub results: Vec<LawResult>,
}

impl LawReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.violations == 0)
    }

    pub fn violated(&self) -> impl Iterator<Item = &LawResult> {
        self.results.iter().filter(|r| r.violations > 0)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match r.witness {
                None => writeln!(f, "{} holds     {} ({} checked)", r.law.label(), r.law.description(), self.checked)?,
                Some(w) => writeln!(
                    f,
                    "{} VIOLATED  {} ({} violations, first at {w})",
                    r.law.label(),
                    r.law.description(),
                    r.violations
                )?,
            }
        }
        Ok(())
    }
}

/// Evaluates every law over `(index, parameters)` pairs.
pub fn check_laws(items: impl IntoIterator<Item = (usize, ParameterTuple)>) -> LawReport {
    let mut results: Vec<LawResult> =
        Law::ALL.iter().map(|&law| LawResult { law, violations: 0, witness: None }).collect();
    let mut checked = 0;
    for (idx, params) in items {
        checked += 1;
        for r in results.iter_mut() {
            if !params.satisfies(r.law) {
                r.violations += 1;
                r.witness.get_or_insert(idx);
            }
        }
    }
    LawReport { checked, results }
}

/// Evaluates the laws over every pentad's signature.
pub fn structural_laws(signatures: &[ConfigSignature]) -> LawReport {
    check_laws(signatures.iter().map(|s| s.params).enumerate())
}

/// Number of pentads whose configuration has each negative-context count.
pub fn negative_context_histogram(signatures: &[ConfigSignature]) -> BTreeMap<usize, usize> {
    tuple_histogram(signatures.iter().map(|s| s.params.c_minus))
}

fn tuple_histogram(values: impl Iterator<Item = usize>) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for v in values {
        *m.entry(v).or_insert(0) += 1;
    }
    m
}
