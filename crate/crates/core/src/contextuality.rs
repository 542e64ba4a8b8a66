//! Verifier for observable-based Kochen–Specker parity proofs.
//!
//! A context set is a parity proof when every context is a set of pairwise
//! commuting observables multiplying to `±III`, every observable occurs an
//! even number of times, and the number of negative contexts is odd.
//! Contexts of any size are accepted.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pauli::{commutes, parse_observable, product, Observable, PauliError, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error("context {context}: {source}")]
    Parse { context: usize, source: PauliError },
    #[error("context {0} is empty")]
    EmptyContext(usize),
    #[error("context {context} lists {observable} twice")]
    DuplicateObservable { context: usize, observable: Observable },
}

/// A list of contexts, each a list of distinct observables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContextSet {
    contexts: Vec<Vec<Observable>>,
}

impl ContextSet {
    pub fn new(contexts: Vec<Vec<Observable>>) -> Result<Self, ContextError> {
        for (i, ctx) in contexts.iter().enumerate() {
            if ctx.is_empty() {
                return Err(ContextError::EmptyContext(i));
            }
            let mut seen = 0u64;
            for &o in ctx {
                if seen & o.mask() != 0 {
                    return Err(ContextError::DuplicateObservable { context: i, observable: o });
                }
                seen |= o.mask();
            }
        }
        Ok(ContextSet { contexts })
    }

    /// Parses contexts given as Pauli words.
    pub fn from_words<S: AsRef<str>>(contexts: &[Vec<S>]) -> Result<Self, ContextError> {
        let parsed = contexts
            .iter()
            .enumerate()
            .map(|(i, ctx)| {
                ctx.iter()
                    .map(|w| parse_observable(w.as_ref()).map_err(|source| ContextError::Parse { context: i, source }))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parsed)
    }

    pub fn contexts(&self) -> &[Vec<Observable>] {
        &self.contexts
    }

    pub fn len(&self) -> usize {
        self.contexts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contexts.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextCheck {
    pub commuting: bool,
    /// The coordinate vectors sum to zero, i.e. the product is a multiple of `III`.
    pub closed: bool,
    pub sign: Option<Sign>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ValidParityProof,
    NotContextual,
    MalformedContext,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ValidParityProof => "valid Kochen-Specker parity proof",
            Verdict::NotContextual => "not contextual",
            Verdict::MalformedContext => "malformed context",
        })
    }
}

/// A specific reason a context set fails to be a parity proof.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Defect {
    NonCommuting { context: usize, first: Observable, second: Observable },
    NotClosed { context: usize },
    OddOccurrence { observable: Observable, count: usize },
    EvenNegativeCount { count: usize },
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::NonCommuting { context, first, second } => {
                write!(f, "context {context}: {first} and {second} do not commute")
            }
            Defect::NotClosed { context } => write!(f, "context {context}: product is not ±III"),
            Defect::OddOccurrence { observable, count } => {
                write!(f, "{observable} occurs in {count} contexts (odd)")
            }
            Defect::EvenNegativeCount { count } => write!(f, "{count} negative contexts (even)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofReport {
    pub contexts: Vec<ContextCheck>,
    pub occurrences: BTreeMap<Observable, usize>,
    pub negative_count: usize,
    pub all_even: bool,
    pub odd_negative: bool,
    pub defects: Vec<Defect>,
    pub verdict: Verdict,
}

impl ProofReport {
    pub fn is_valid(&self) -> bool {
        self.verdict == Verdict::ValidParityProof
    }
}

fn check_context(index: usize, ctx: &[Observable], defects: &mut Vec<Defect>) -> ContextCheck {
    let mut commuting = true;
    'outer: for (i, &a) in ctx.iter().enumerate() {
        for &b in &ctx[i + 1..] {
            if !commutes(a, b) {
                defects.push(Defect::NonCommuting { context: index, first: a, second: b });
                commuting = false;
                break 'outer;
            }
        }
    }
    let (phase, coords) = product(ctx);
    let closed = coords == 0;
    if !closed {
        defects.push(Defect::NotClosed { context: index });
    }
    let sign = if commuting && closed { phase.sign() } else { None };
    ContextCheck { commuting, closed, sign }
}

/// Checks every parity-proof condition; malformed contexts are reported, not raised.
pub fn analyze(cs: &ContextSet) -> ProofReport {
    let mut defects = Vec::new();
    let contexts: Vec<ContextCheck> =
        cs.contexts.iter().enumerate().map(|(i, ctx)| check_context(i, ctx, &mut defects)).collect();

    let mut occurrences = BTreeMap::new();
    for &o in cs.contexts.iter().flatten() {
        *occurrences.entry(o).or_insert(0) += 1;
    }
    for (&observable, &count) in &occurrences {
        if count % 2 == 1 {
            defects.push(Defect::OddOccurrence { observable, count });
        }
    }
    let all_even = occurrences.values().all(|c| c % 2 == 0);
    let negative_count = contexts.iter().filter(|c| c.sign == Some(Sign::Minus)).count();
    let odd_negative = negative_count % 2 == 1;
    if !odd_negative {
        defects.push(Defect::EvenNegativeCount { count: negative_count });
    }

    let well_formed = contexts.iter().all(|c| c.sign.is_some());
    let verdict = if !well_formed {
        Verdict::MalformedContext
    } else if all_even && odd_negative {
        Verdict::ValidParityProof
    } else {
        Verdict::NotContextual
    };
    ProofReport { contexts, occurrences, negative_count, all_even, odd_negative, defects, verdict }
}

/// Compact symbol `n_k … − m_s`: `n_k` observables on `k` contexts each,
/// `m_s` contexts of size `s`, both parts sorted by subscript descending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WaSymbol {
    /// `(k, n_k)` pairs.
    pub points: Vec<(usize, usize)>,
    /// `(s, m_s)` pairs.
    pub contexts: Vec<(usize, usize)>,
}

impl WaSymbol {
    pub fn incidences_from_points(&self) -> usize {
        self.points.iter().map(|(k, n)| k * n).sum()
    }

    pub fn incidences_from_contexts(&self) -> usize {
        self.contexts.iter().map(|(s, m)| s * m).sum()
    }
}

impl fmt::Display for WaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part =
            |pairs: &[(usize, usize)]| pairs.iter().map(|(sub, n)| format!("{n}_{sub}")).collect::<Vec<_>>().join(" ");
        write!(f, "{} \u{2212} {}", part(&self.points), part(&self.contexts))
    }
}

pub fn wa_symbol(cs: &ContextSet) -> WaSymbol {
    let mut occurrences: BTreeMap<Observable, usize> = BTreeMap::new();
    for &o in cs.contexts.iter().flatten() {
        *occurrences.entry(o).or_insert(0) += 1;
    }
    let mut by_occurrence: BTreeMap<usize, usize> = BTreeMap::new();
    for k in occurrences.values() {
        *by_occurrence.entry(*k).or_insert(0) += 1;
    }
    let mut by_size: BTreeMap<usize, usize> = BTreeMap::new();
    for ctx in &cs.contexts {
        *by_size.entry(ctx.len()).or_insert(0) += 1;
    }
    WaSymbol { points: by_occurrence.into_iter().rev().collect(), contexts: by_size.into_iter().rev().collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn canonical_pentagram() -> ContextSet {
        ContextSet::from_words(&[
            vec!["XII", "IYI", "IIY", "XYY"],
            vec!["YII", "IXI", "IIY", "YXY"],
            vec!["YII", "IYI", "IIX", "YYX"],
            vec!["XII", "IXI", "IIX", "XXX"],
            vec!["XYY", "YXY", "YYX", "XXX"],
        ])
        .unwrap()
    }

    #[test]
    fn canonical_pentagram_is_a_parity_proof() {
        let r = analyze(&canonical_pentagram());
        assert_eq!(r.verdict, Verdict::ValidParityProof);
        assert_eq!(r.negative_count, 1);
        assert_eq!(r.occurrences.len(), 10);
        assert!(r.occurrences.values().all(|&c| c == 2));
        assert!(r.defects.is_empty());
        assert_eq!(r.contexts[4].sign, Some(Sign::Minus));
        assert_eq!(wa_symbol(&canonical_pentagram()).to_string(), "10_2 \u{2212} 5_4");
    }

    #[test]
    fn single_context_is_not_contextual() {
        let cs = ContextSet::from_words(&[vec!["XII", "IXI", "XXI"]]).unwrap();
        let r = analyze(&cs);
        assert_eq!(r.verdict, Verdict::NotContextual);
        assert_eq!(r.negative_count, 0);
        assert!(!r.all_even);
        assert!(!r.odd_negative);
        assert_eq!(wa_symbol(&cs).to_string(), "3_1 \u{2212} 1_3");
    }

    #[test]
    fn distinct_diagnoses() {
        let noncommuting = analyze(&ContextSet::from_words(&[vec!["XII", "YII", "ZII"]]).unwrap());
        assert_eq!(noncommuting.verdict, Verdict::MalformedContext);
        assert!(!noncommuting.contexts[0].commuting);
        assert!(noncommuting.contexts[0].closed);
        assert!(matches!(noncommuting.defects[0], Defect::NonCommuting { context: 0, .. }));

        let open = analyze(&ContextSet::from_words(&[vec!["XII", "IXI", "IIX"]]).unwrap());
        assert_eq!(open.verdict, Verdict::MalformedContext);
        assert!(open.contexts[0].commuting);
        assert!(!open.contexts[0].closed);
        assert_eq!(open.defects[0], Defect::NotClosed { context: 0 });

        // two copies of the negative context: even occurrences but two negatives
        let even = analyze(&ContextSet::from_words(&[vec!["XXI", "YYI", "ZZI"], vec!["ZZI", "YYI", "XXI"]]).unwrap());
        assert_eq!(even.verdict, Verdict::NotContextual);
        assert!(even.all_even);
        assert_eq!(even.defects, vec![Defect::EvenNegativeCount { count: 2 }]);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            ContextSet::from_words(&[vec!["QXI"]]),
            Err(ContextError::Parse { context: 0, source: PauliError::InvalidLetter('Q') })
        ));
        assert_eq!(ContextSet::new(vec![vec![]]), Err(ContextError::EmptyContext(0)));
        assert!(matches!(
            ContextSet::from_words(&[vec!["XII", "XII"]]),
            Err(ContextError::DuplicateObservable { context: 0, .. })
        ));
    }

    fn shuffled_pentagram() -> impl Strategy<Value = Vec<Vec<Observable>>> {
        let inner: Vec<_> = canonical_pentagram().contexts().iter().map(|c| Just(c.clone()).prop_shuffle()).collect();
        inner.prop_shuffle()
    }

    proptest! {
        #[test]
        fn analyze_is_permutation_invariant(ctxs in shuffled_pentagram()) {
            let base = canonical_pentagram();
            let shuffled = ContextSet::new(ctxs).unwrap();
            let (a, b) = (analyze(&base), analyze(&shuffled));
            prop_assert_eq!(a.verdict, b.verdict);
            prop_assert_eq!(a.negative_count, b.negative_count);
            prop_assert_eq!(a.occurrences, b.occurrences);
            prop_assert_eq!(wa_symbol(&base), wa_symbol(&shuffled));
        }

        #[test]
        fn symbol_double_count(ctxs in proptest::collection::vec(proptest::collection::btree_set(1u8..=63, 1..6), 0..8)) {
            let cs = ContextSet::new(
                ctxs.into_iter().map(|s| s.into_iter().map(|id| Observable::from_id(id).unwrap()).collect()).collect()
            ).unwrap();
            let sym = wa_symbol(&cs);
            prop_assert_eq!(sym.incidences_from_points(), sym.incidences_from_contexts());
        }
    }
}
