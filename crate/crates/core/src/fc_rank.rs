//! Rankedness of heaps of fully commutative elements through the labels
//! found inside minimal balanced subintervals.

use std::collections::BTreeMap;
use std::fmt;

use crate::alphabet::Piece;
use crate::classify::is_fc_finite;
use crate::coxeter::{is_fc_heap, CoxeterGraph};
use crate::error::{Error, Result};
use crate::heap::{Elem, Heap};
use crate::rank::{minimal_balanced_subintervals, Interval};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelPattern {
    AllSame,
    AllDistinct,
    Mixed,
}

impl fmt::Display for LabelPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LabelPattern::AllSame => "AllSame",
            LabelPattern::AllDistinct => "AllDistinct",
            LabelPattern::Mixed => "Mixed",
        })
    }
}

/// The members of a minimal balanced subinterval `[a, b]` whose labels
/// differ from, and are concurrent with, the label of `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SSetReport {
    pub interval: Interval,
    /// Sorted by element.
    pub members: Vec<Elem>,
    /// Label multiplicities.
    pub label_multiset: BTreeMap<Piece, usize>,
    pub pattern: LabelPattern,
}

impl SSetReport {
    pub fn is_acceptable(&self) -> bool {
        self.pattern != LabelPattern::Mixed
    }
}

fn pattern_of(multiset: &BTreeMap<Piece, usize>) -> LabelPattern {
    // empty and singleton sets satisfy both conditions; report AllDistinct
    if multiset.values().all(|&k| k == 1) {
        LabelPattern::AllDistinct
    } else if multiset.len() == 1 {
        LabelPattern::AllSame
    } else {
        LabelPattern::Mixed
    }
}

fn check_minimal(heap: &Heap, iv: &Interval) -> Result<()> {
    let genuine = crate::rank::interval(heap, iv.bottom, iv.top)
        .map(|real| real == *iv)
        .unwrap_or(false);
    if genuine && iv.is_minimal_balanced(heap) {
        Ok(())
    } else {
        Err(Error::NotMinimalBalanced(
            heap.name(iv.bottom).to_string(),
            heap.name(iv.top).to_string(),
        ))
    }
}

pub fn s_set(heap: &Heap, iv: &Interval) -> Result<SSetReport> {
    check_minimal(heap, iv)?;
    let end = heap.label(iv.bottom);
    let alphabet = heap.alphabet();
    let members: Vec<Elem> = iv
        .elements
        .iter()
        .copied()
        .filter(|&c| heap.label(c) != end && alphabet.concurrent(end, heap.label(c)))
        .collect();
    let mut label_multiset = BTreeMap::new();
    for &c in &members {
        *label_multiset.entry(heap.label(c)).or_insert(0) += 1;
    }
    let pattern = pattern_of(&label_multiset);
    Ok(SSetReport {
        interval: iv.clone(),
        members,
        label_multiset,
        pattern,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelVerdict {
    Ranked,
    Unranked(SSetReport),
}

impl LabelVerdict {
    pub fn is_ranked(&self) -> bool {
        matches!(self, LabelVerdict::Ranked)
    }
}

/// Rankedness of an FC heap over an FC-finite group: ranked iff no
/// minimal balanced subinterval has an S-set that mixes repeated and
/// distinct labels.
pub fn label_criterion(heap: &Heap, g: &CoxeterGraph) -> Result<LabelVerdict> {
    if !is_fc_finite(g) {
        return Err(Error::NotFcFinite);
    }
    if !is_fc_heap(heap, g)?.is_fc() {
        return Err(Error::NotFcHeap);
    }
    Ok(label_criterion_unchecked(heap))
}

/// [`label_criterion`] without validating its hypotheses.
pub fn label_criterion_unchecked(heap: &Heap) -> LabelVerdict {
    for iv in minimal_balanced_subintervals(heap) {
        let report = s_set(heap, &iv).expect("interval is minimal balanced");
        if !report.is_acceptable() {
            return LabelVerdict::Unranked(report);
        }
    }
    LabelVerdict::Ranked
}

/// A member of the S-set whose label occurs exactly once there, smallest
/// element first; `None` if every label repeats.
pub fn unique_label_witness(heap: &Heap, iv: &Interval) -> Result<Option<Elem>> {
    let report = s_set(heap, iv)?;
    if report.label_multiset.len() <= 1 {
        return Err(Error::NotApplicable);
    }
    Ok(report
        .members
        .iter()
        .copied()
        .find(|&c| report.label_multiset[&heap.label(c)] == 1))
}

/// Are `a < a'` and `b' < b` covers, where `a'` and `b'` are the lowest and
/// highest S-set members labelled `piece`?
pub fn extremal_cover_check(heap: &Heap, iv: &Interval, piece: Piece) -> Result<bool> {
    let report = s_set(heap, iv)?;
    let mut labelled: Vec<Elem> = report
        .members
        .iter()
        .copied()
        .filter(|&c| heap.label(c) == piece)
        .collect();
    if labelled.is_empty() {
        let name = if heap.alphabet().contains(piece) {
            heap.alphabet().name(piece).to_string()
        } else {
            piece.to_string()
        };
        return Err(Error::NoSuchLabel(name));
    }
    labelled.sort_by_key(|&c| heap.below(c).count_ones(..));
    let (lowest, highest) = (labelled[0], labelled[labelled.len() - 1]);
    Ok(heap.is_cover(iv.bottom, lowest) && heap.is_cover(highest, iv.top))
}
