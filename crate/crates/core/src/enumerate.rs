//! Breadth-first enumeration of heaps of fully commutative elements.
//!
//! Level `k + 1` is grown from level `k` by composing each heap with one
//! more generator on top and keeping the FC results. Deleting a maximal
//! element of an FC heap leaves an FC heap, so every FC heap is reached.
//! Duplicates are removed by canonical word.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;

use crate::alphabet::{Piece, PieceAlphabet};
use crate::classify::is_fc_finite;
use crate::coxeter::{concurrency_from_coxeter, find_fc_violation, CoxeterGraph};
use crate::error::{Error, Result};
use crate::heap::Heap;
use crate::rank::rank;

/// Iterator over FC heaps in size order; within one size, heaps come in
/// canonical-word order. Element numbering of each heap follows its
/// canonical word.
#[derive(Debug, Clone)]
pub struct FcHeapEnumerator {
    group: CoxeterGraph,
    alphabet: Arc<PieceAlphabet>,
    max_size: Option<usize>,
    size: usize,
    level: Vec<Heap>,
    pos: usize,
}

impl FcHeapEnumerator {
    pub fn alphabet(&self) -> &Arc<PieceAlphabet> {
        &self.alphabet
    }
}

/// FC heaps over `g` with at most `max_size` elements; `None` means no
/// bound and requires `g` to be FC-finite.
pub fn enumerate_fc_heaps(g: &CoxeterGraph, max_size: Option<usize>) -> Result<FcHeapEnumerator> {
    if max_size.is_none() && !is_fc_finite(g) {
        return Err(Error::BoundRequired);
    }
    let alphabet = Arc::new(concurrency_from_coxeter(g));
    Ok(FcHeapEnumerator {
        group: g.clone(),
        level: vec![Heap::empty(alphabet.clone())],
        alphabet,
        max_size,
        size: 0,
        pos: 0,
    })
}

fn grow(g: &CoxeterGraph, alphabet: &Arc<PieceAlphabet>, level: &[Heap]) -> Vec<Heap> {
    let candidates: Vec<Vec<Piece>> = level
        .par_iter()
        .flat_map_iter(|heap| {
            let base = heap.canonical_word();
            alphabet.pieces().filter_map(move |s| {
                let mut word = base.clone();
                word.push(s);
                let grown =
                    Heap::from_pieces(alphabet.clone(), &word).expect("generators are pieces");
                find_fc_violation(&grown, g)
                    .is_none()
                    .then(|| grown.canonical_word())
            })
        })
        .collect();
    // rebuilt from the canonical word so element numbering follows it
    let unique: BTreeSet<Vec<Piece>> = candidates.into_iter().collect();
    unique
        .into_iter()
        .map(|word| Heap::from_pieces(alphabet.clone(), &word).expect("generators are pieces"))
        .collect()
}

impl Iterator for FcHeapEnumerator {
    type Item = Heap;

    fn next(&mut self) -> Option<Heap> {
        loop {
            if self.pos < self.level.len() {
                self.pos += 1;
                return Some(self.level[self.pos - 1].clone());
            }
            if self.level.is_empty() || self.max_size.is_some_and(|m| self.size >= m) {
                return None;
            }
            self.level = grow(&self.group, &self.alphabet, &self.level);
            self.size += 1;
            self.pos = 0;
        }
    }
}

/// Numbers of FC heaps, and of ranked FC heaps, per size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub group: CoxeterGraph,
    pub max_size: Option<usize>,
    pub counts: BTreeMap<usize, usize>,
    pub ranked_counts: BTreeMap<usize, usize>,
}

impl Census {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn ranked_total(&self) -> usize {
        self.ranked_counts.values().sum()
    }

    /// Tab-separated `size count ranked_count` rows under a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("size\tcount\tranked_count\n");
        for (size, count) in &self.counts {
            let ranked = self.ranked_counts.get(size).copied().unwrap_or(0);
            writeln!(out, "{size}\t{count}\t{ranked}").expect("writing to a String");
        }
        out
    }
}

pub fn census(g: &CoxeterGraph, max_size: Option<usize>) -> Result<Census> {
    let mut counts = BTreeMap::new();
    let mut ranked_counts = BTreeMap::new();
    for heap in enumerate_fc_heaps(g, max_size)? {
        *counts.entry(heap.len()).or_insert(0) += 1;
        let ranked = ranked_counts.entry(heap.len()).or_insert(0);
        if rank(&heap).is_ranked() {
            *ranked += 1;
        }
    }
    Ok(Census {
        group: g.clone(),
        max_size,
        counts,
        ranked_counts,
    })
}
