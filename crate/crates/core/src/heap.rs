//! Labelled heaps of pieces stored as cover DAGs with a cached order closure.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::alphabet::{ConcurrencyGraph, Piece, PieceAlphabet};
use crate::error::{Error, Result};

/// An element of a heap, identified by its 0-based index.
///
/// Heaps built from a word number their elements by word position, so
/// `Elem(0)` is the first letter (displayed as `e1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub usize);

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0 + 1)
    }
}

/// A finite labelled poset satisfying the heap axioms over a [`PieceAlphabet`].
///
/// The strict order is cached in both directions as bitsets; `covers` is its
/// transitive reduction, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Heap {
    alphabet: Arc<PieceAlphabet>,
    names: Vec<String>,
    labels: Vec<Piece>,
    above: Vec<FixedBitSet>,
    below: Vec<FixedBitSet>,
    covers: Vec<(Elem, Elem)>,
    upper: Vec<Vec<Elem>>,
    lower: Vec<Vec<Elem>>,
}

fn positional_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

fn transpose(rows: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = rows.len();
    let mut out = vec![FixedBitSet::with_capacity(n); n];
    for (i, row) in rows.iter().enumerate() {
        for j in row.ones() {
            out[j].insert(i);
        }
    }
    out
}

/// Strict transitive closure of `pairs` on `0..n`, as "strictly above" rows.
fn closure(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Vec<FixedBitSet> {
    let mut above = vec![FixedBitSet::with_capacity(n); n];
    for (i, j) in pairs {
        above[i].insert(j);
    }
    for k in 0..n {
        let row_k = above[k].clone();
        for row in above.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
    above
}

fn same_alphabet(a: &Arc<PieceAlphabet>, b: &Arc<PieceAlphabet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Heap {
    /// Builds a heap from an acyclic strict order given by its "above" rows.
    fn from_order(
        alphabet: Arc<PieceAlphabet>,
        names: Vec<String>,
        labels: Vec<Piece>,
        above: Vec<FixedBitSet>,
    ) -> Self {
        let n = labels.len();
        let below = transpose(&above);
        let mut covers = Vec::new();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for i in 0..n {
            for j in above[i].ones() {
                if above[i].is_disjoint(&below[j]) {
                    covers.push((Elem(i), Elem(j)));
                    upper[i].push(Elem(j));
                    lower[j].push(Elem(i));
                }
            }
        }
        Self {
            alphabet,
            names,
            labels,
            above,
            below,
            covers,
            upper,
            lower,
        }
    }

    pub fn empty(alphabet: Arc<PieceAlphabet>) -> Self {
        Self::from_order(alphabet, Vec::new(), Vec::new(), Vec::new())
    }

    /// The heap of a word: the iterated composition of one-element heaps.
    ///
    /// Position `i` lies below position `j` exactly when a chain of
    /// increasing positions with consecutive letters concurrent joins them.
    pub fn from_pieces(alphabet: Arc<PieceAlphabet>, word: &[Piece]) -> Result<Self> {
        if let Some(p) = word.iter().find(|p| !alphabet.contains(**p)) {
            return Err(Error::UnknownPiece(p.to_string()));
        }
        let n = word.len();
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for j in 0..n {
            for i in 0..j {
                if alphabet.concurrent(word[i], word[j]) && !below[j].contains(i) {
                    let (head, tail) = below.split_at_mut(j);
                    tail[0].insert(i);
                    tail[0].union_with(&head[i]);
                }
            }
        }
        let above = transpose(&below);
        Ok(Self::from_order(
            alphabet,
            positional_names(n),
            word.to_vec(),
            above,
        ))
    }

    /// Like [`Heap::from_pieces`], with letters given by piece name.
    pub fn from_word<S: AsRef<str>>(alphabet: Arc<PieceAlphabet>, word: &[S]) -> Result<Self> {
        let pieces = word
            .iter()
            .map(|s| alphabet.lookup(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_pieces(alphabet, &pieces)
    }

    /// Builds a heap from explicit elements `(name, piece)` and generating
    /// relations `(lower, upper)`, checking both heap axioms.
    pub fn from_relations<A, B, C, D>(
        alphabet: Arc<PieceAlphabet>,
        elements: &[(A, B)],
        relations: &[(C, D)],
    ) -> Result<Self>
    where
        A: AsRef<str>,
        B: AsRef<str>,
        C: AsRef<str>,
        D: AsRef<str>,
    {
        let mut names = Vec::with_capacity(elements.len());
        let mut labels = Vec::with_capacity(elements.len());
        for (name, piece) in elements {
            let name = name.as_ref();
            if names.iter().any(|n: &String| n == name) {
                return Err(Error::DuplicateElement(name.to_string()));
            }
            names.push(name.to_string());
            labels.push(alphabet.lookup(piece.as_ref())?);
        }
        let find = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::UnknownElement(name.to_string()))
        };
        let mut pairs = Vec::with_capacity(relations.len());
        for (lo, hi) in relations {
            let (i, j) = (find(lo.as_ref())?, find(hi.as_ref())?);
            if i != j {
                pairs.push((i, j));
            }
        }
        let n = names.len();
        let above = closure(n, pairs);
        if let Some(i) = (0..n).find(|&i| above[i].contains(i)) {
            return Err(Error::CycleDetected(names[i].clone()));
        }
        let heap = Self::from_order(alphabet, names, labels, above);
        heap.check_axioms()?;
        Ok(heap)
    }

    /// Checks that concurrent labels are comparable and that every cover
    /// joins concurrent labels.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (Elem(i), Elem(j));
                if self.alphabet.concurrent(self.labels[i], self.labels[j])
                    && !self.comparable(a, b)
                {
                    return Err(Error::Axiom1Violation(
                        self.names[i].clone(),
                        self.names[j].clone(),
                    ));
                }
            }
        }
        for &(a, b) in &self.covers {
            if !self.alphabet.concurrent(self.label(a), self.label(b)) {
                return Err(Error::Axiom2Violation(
                    self.name(a).to_string(),
                    self.name(b).to_string(),
                ));
            }
        }
        Ok(())
    }

    /// `self ∘ other`: disjoint union with every element of `self` placed
    /// below each concurrent element of `other`.
    ///
    /// Elements are renamed by position, `self` first.
    pub fn compose(&self, other: &Heap) -> Result<Heap> {
        if !same_alphabet(&self.alphabet, &other.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        let (n, m) = (self.len(), other.len());
        let mut pairs = Vec::new();
        for i in 0..n {
            pairs.extend(self.above[i].ones().map(|j| (i, j)));
            for j in 0..m {
                if self.alphabet.concurrent(self.labels[i], other.labels[j]) {
                    pairs.push((i, n + j));
                }
            }
        }
        for i in 0..m {
            pairs.extend(other.above[i].ones().map(|j| (n + i, n + j)));
        }
        let labels: Vec<Piece> = self.labels.iter().chain(&other.labels).copied().collect();
        let above = closure(n + m, pairs);
        Ok(Self::from_order(
            self.alphabet.clone(),
            positional_names(n + m),
            labels,
            above,
        ))
    }

    /// The subheap on `subset`: the closure of the order restricted to pairs
    /// with concurrent labels. Element names are kept; indices follow the
    /// ascending order of `subset`.
    pub fn subheap(&self, subset: &[Elem]) -> Heap {
        let mut keep: Vec<Elem> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut pairs = Vec::new();
        for (x, &a) in keep.iter().enumerate() {
            for (y, &b) in keep.iter().enumerate() {
                if self.lt(a, b) && self.alphabet.concurrent(self.label(a), self.label(b)) {
                    pairs.push((x, y));
                }
            }
        }
        let above = closure(keep.len(), pairs);
        Self::from_order(
            self.alphabet.clone(),
            keep.iter().map(|&e| self.names[e.0].clone()).collect(),
            keep.iter().map(|&e| self.labels[e.0]).collect(),
            above,
        )
    }

    /// Elements in the order of the lexicographically least linear
    /// extension, comparing labels by declaration order.
    ///
    /// Equal labels are totally ordered, so at most one minimal element
    /// carries each label and the greedy choice is forced.
    pub fn canonical_order(&self) -> Vec<Elem> {
        let n = self.len();
        let mut pending: Vec<usize> = self.below.iter().map(|b| b.count_ones(..)).collect();
        let mut done = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&i| !done[i] && pending[i] == 0)
                .min_by_key(|&i| (self.labels[i], i))
                .expect("order closure is acyclic");
            done[next] = true;
            for j in self.above[next].ones() {
                pending[j] -= 1;
            }
            out.push(Elem(next));
        }
        out
    }

    /// The canonical word; two heaps over one alphabet are isomorphic iff
    /// their canonical words agree.
    pub fn canonical_word(&self) -> Vec<Piece> {
        self.canonical_order()
            .into_iter()
            .map(|e| self.label(e))
            .collect()
    }

    pub fn canonical_names(&self) -> Vec<&str> {
        self.canonical_word()
            .into_iter()
            .map(|p| self.alphabet.name(p))
            .collect()
    }

    pub fn is_isomorphic(&self, other: &Heap) -> Result<bool> {
        if !same_alphabet(&self.alphabet, &other.alphabet) {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.len() == other.len() && self.canonical_word() == other.canonical_word())
    }

    /// The full subgraph of the concurrency graph on the labels that occur.
    pub fn concurrency_subgraph(&self) -> ConcurrencyGraph {
        ConcurrencyGraph::induced(&self.alphabet, self.labels.iter().copied())
    }

    pub fn alphabet(&self) -> &Arc<PieceAlphabet> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.len()).map(Elem)
    }

    pub fn label(&self, e: Elem) -> Piece {
        self.labels[e.0]
    }

    pub fn labels(&self) -> &[Piece] {
        &self.labels
    }

    pub fn label_name(&self, e: Elem) -> &str {
        self.alphabet.name(self.labels[e.0])
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name).map(Elem)
    }

    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        self.above[a.0].contains(b.0)
    }

    pub fn le(&self, a: Elem, b: Elem) -> bool {
        a == b || self.lt(a, b)
    }

    pub fn comparable(&self, a: Elem, b: Elem) -> bool {
        self.le(a, b) || self.lt(b, a)
    }

    /// Elements strictly above `e`.
    pub fn above(&self, e: Elem) -> &FixedBitSet {
        &self.above[e.0]
    }

    /// Elements strictly below `e`.
    pub fn below(&self, e: Elem) -> &FixedBitSet {
        &self.below[e.0]
    }

    /// Covering pairs `(x, y)` with `x < y`, sorted.
    pub fn covers(&self) -> &[(Elem, Elem)] {
        &self.covers
    }

    pub fn is_cover(&self, a: Elem, b: Elem) -> bool {
        self.upper[a.0].contains(&b)
    }

    pub fn upper_covers(&self, e: Elem) -> &[Elem] {
        &self.upper[e.0]
    }

    pub fn lower_covers(&self, e: Elem) -> &[Elem] {
        &self.lower[e.0]
    }

    pub fn minimal(&self) -> Vec<Elem> {
        self.elements()
            .filter(|e| self.below[e.0].is_clear())
            .collect()
    }

    pub fn maximal(&self) -> Vec<Elem> {
        self.elements()
            .filter(|e| self.above[e.0].is_clear())
            .collect()
    }

    /// Occurrences of `piece`, bottom to top.
    pub fn occurrences(&self, piece: Piece) -> Vec<Elem> {
        let mut occ: Vec<Elem> = self
            .elements()
            .filter(|&e| self.label(e) == piece)
            .collect();
        occ.sort_by_key(|e| self.below[e.0].count_ones(..));
        occ
    }
}
